"""Pure-Python dense polynomial kernels over F_p.

Polynomials are lists of ints in [0, p) ordered from the constant
coefficient up, with no trailing zeros ([] is the zero polynomial).
These two routines are the only hot loops in the package; a compiled
drop-in replacement lives in ``_kernels.pyx``.
"""

BACKEND = "python"


def poly_mul(a, b, p):
    """Product of two coefficient lists modulo p."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return [c % p for c in out]


def poly_divmod(a, b, p):
    """Quotient and remainder of coefficient lists modulo p."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], list(a)
    rem = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i] % p
        if c:
            q = (c * inv_lead) % p
            quot[i - db] = q
            for j in range(db + 1):
                rem[i - db + j] -= q * b[j]
            rem[i] = 0
    rem = [c % p for c in rem[:db]]
    while rem and rem[-1] == 0:
        rem.pop()
    while quot and quot[-1] == 0:
        quot.pop()
    return quot, rem

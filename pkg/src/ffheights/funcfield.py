"""Exact arithmetic in F_p(t): polynomials, rational functions, places.

Everything is immutable and exact.  The constant field is a prime field
F_p with p >= 5; elements of the function field are reduced fractions of
polynomials with monic denominator.  Places are the monic irreducible
polynomials plus the infinite place; ``order_at`` is the surjective
normalized valuation.  Extensions K = k(s) with t = phi(s) are handled
by ``ExtensionMap`` / ``places_over`` / ``place_below``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .kernels import poly_divmod, poly_mul

NEG_INF = float("-inf")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class ConstantField:
    """Prime constant field F_p with p >= 5."""

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.p in (2, 3):
            raise ValueError("characteristic 2 and 3 are not supported")

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return pow(a, self.p - 2, self.p)


class Polynomial:
    """Dense polynomial over F_p in a named variable.

    Coefficients are stored constant-term first with no trailing zeros;
    the zero polynomial has an empty coefficient tuple and degree -inf.
    """

    __slots__ = ("coeffs", "field", "var")

    def __init__(self, coeffs, field: ConstantField, var: str):
        p = field.p
        c = [int(x) % p for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "var", var)

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    # -- basic structure -------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lead(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _new(self, coeffs) -> "Polynomial":
        return Polynomial(coeffs, self.field, self.var)

    @classmethod
    def constant(cls, c: int, field: ConstantField, var: str) -> "Polynomial":
        return cls([c], field, var)

    @classmethod
    def gen(cls, field: ConstantField, var: str) -> "Polynomial":
        return cls([0, 1], field, var)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.field != self.field or other.var != self.var:
                raise ValueError("mixed polynomial domains")
            return other
        if isinstance(other, int):
            return Polynomial([other], self.field, self.var)
        return NotImplemented

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._new(poly_mul(list(self.coeffs), list(other.coeffs), self.field.p))

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        q, r = poly_divmod(list(self.coeffs), list(other.coeffs), self.field.p)
        return self._new(q), self._new(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self._new([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self._coerce(other)
        return (
            isinstance(other, Polynomial)
            and self.coeffs == other.coeffs
            and self.field == other.field
            and self.var == other.var
        )

    def __hash__(self):
        return hash((self.coeffs, self.field, self.var))

    # -- utilities ---------------------------------------------------------
    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        inv = self.field.inv(self.lead)
        return self._new([c * inv for c in self.coeffs])

    def derivative(self) -> "Polynomial":
        return self._new([i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, a: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % self.field.p
        return acc

    def reverse(self) -> "Polynomial":
        """Coefficient reversal: x^deg * self(1/x)."""
        return self._new(list(reversed(self.coeffs)))

    def gcd(self, other: "Polynomial") -> "Polynomial":
        a, b = self, self._coerce(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def powmod(self, n: int, modulus: "Polynomial") -> "Polynomial":
        result = self._new([1]) % modulus
        base = self % modulus
        while n:
            if n & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            n >>= 1
        return result

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(self.var if c == 1 else f"{c}*{self.var}")
            else:
                base = f"{self.var}^{i}"
                terms.append(base if c == 1 else f"{c}*{base}")
        return " + ".join(terms)

    def __repr__(self):
        return f"Polynomial({self}, F_{self.field.p})"


class RationalFunction:
    """Reduced fraction of polynomials; the scalar of the whole package."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None):
        if den is None:
            den = Polynomial([1], num.field, num.var)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not num.is_zero():
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num // g, den // g
            inv = num.field.inv(den.lead)
            num = num._new([c * inv for c in num.coeffs])
            den = den.monic()
        else:
            den = Polynomial([1], num.field, num.var)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RationalFunction is immutable")

    @property
    def field(self) -> ConstantField:
        return self.num.field

    @property
    def var(self) -> str:
        return self.num.var

    @classmethod
    def from_int(cls, c: int, field: ConstantField, var: str) -> "RationalFunction":
        return cls(Polynomial([c], field, var))

    @classmethod
    def gen(cls, field: ConstantField, var: str) -> "RationalFunction":
        return cls(Polynomial.gen(field, var))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, int):
            return RationalFunction.from_int(other, self.field, self.var)
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return 1 / (self ** (-n))
        return RationalFunction(self.num**n, self.den**n)

    def __eq__(self, other):
        if isinstance(other, (int, Polynomial)):
            other = self._coerce(other)
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        num = str(self.num)
        if len(self.num.coeffs) > 1 or "*" in num:
            num = f"({num})"
        den = str(self.den)
        if len(self.den.coeffs) > 1 or "*" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"RationalFunction({self})"


@dataclass(frozen=True)
class Place:
    """A place of k(t): a monic irreducible polynomial or infinity."""

    kind: str  # "finite" | "infinite"
    poly: Polynomial | None = None

    def __post_init__(self):
        if self.kind == "finite":
            if self.poly is None or self.poly.degree < 1:
                raise ValueError("finite place needs a nonconstant polynomial")
            if self.poly.lead != 1:
                raise ValueError("finite place polynomial must be monic")
        elif self.kind == "infinite":
            if self.poly is not None:
                raise ValueError("infinite place takes no polynomial")
        else:
            raise ValueError(f"unknown place kind {self.kind!r}")

    @property
    def degree(self) -> int:
        return self.poly.degree if self.kind == "finite" else 1

    def __str__(self):
        return f"({self.poly})" if self.kind == "finite" else "infinity"


@dataclass(frozen=True)
class ExtensionMap:
    """Extension K = k(s) of F = k(t) given by t = phi(s)."""

    phi: RationalFunction

    def __post_init__(self):
        if self.phi.is_constant():
            raise ValueError("phi must be nonconstant")

    @property
    def degree(self) -> int:
        return max(len(self.phi.num.coeffs), len(self.phi.den.coeffs)) - 1

    @property
    def var(self) -> str:
        return self.phi.var


@dataclass(frozen=True)
class PlaceOverData:
    """A place w of K lying over v, with its local index e(w)."""

    w: Place
    v: Place
    e: int


# ---------------------------------------------------------------------------
# valuations, heights, residues
# ---------------------------------------------------------------------------


def _poly_order(f: Polynomial, pi: Polynomial) -> int:
    """Multiplicity of the irreducible pi in the nonzero polynomial f."""
    n = 0
    while True:
        q, r = divmod(f, pi)
        if not r.is_zero():
            return n
        f = q
        n += 1


def order_at(f: RationalFunction, v: Place) -> int:
    """Normalized valuation ord_v(f) for nonzero f."""
    if f.is_zero():
        raise ValueError("order of the zero function is undefined")
    if v.kind == "infinite":
        return int(f.den.degree - f.num.degree)
    return _poly_order(f.num, v.poly) - _poly_order(f.den, v.poly)


def weil_height(f: RationalFunction, over: ExtensionMap | None = None) -> Fraction:
    """F-normalized Weil height of f (an element of F, or of K if ``over``)."""
    if f.is_zero():
        return Fraction(0)
    h = max(len(f.num.coeffs), len(f.den.coeffs)) - 1
    return Fraction(h, over.degree if over is not None else 1)


def residue(f: RationalFunction, v: Place) -> Polynomial:
    """Image of f in the residue field at v, as a representative polynomial.

    For finite v the result is reduced mod v.poly (a constant when
    deg(v) = 1); for the infinite place it is the constant value at
    infinity.  Requires order_at(f, v) >= 0.
    """
    if order_at(f, v) < 0:
        raise ValueError("residue at a pole")
    if v.kind == "infinite":
        dn, dd = f.num.degree, f.den.degree
        if dn < dd:
            return Polynomial([0], f.field, f.var)
        c = (f.num.lead * f.field.inv(f.den.lead)) % f.field.p
        return Polynomial([c], f.field, f.var)
    pi = v.poly
    num = f.num % pi
    den = f.den % pi
    return (num * _poly_invmod(den, pi)) % pi


def _poly_invmod(a: Polynomial, modulus: Polynomial) -> Polynomial:
    """Inverse of a modulo an irreducible polynomial (extended Euclid)."""
    one = Polynomial([1], a.field, a.var)
    zero = Polynomial([], a.field, a.var)
    r0, r1 = modulus, a % modulus
    s0, s1 = zero, one
    while not r1.is_zero():
        q, r2 = divmod(r0, r1)
        r0, r1 = r1, r2
        s0, s1 = s1, s0 - q * s1
    if r0.degree != 0:
        raise ZeroDivisionError("element not invertible mod the given polynomial")
    inv_c = a.field.inv(r0.coeffs[0])
    return (s0 * inv_c) % modulus


# ---------------------------------------------------------------------------
# factorization (squarefree + distinct-degree + Cantor-Zassenhaus)
# ---------------------------------------------------------------------------


def _pth_root(f: Polynomial) -> Polynomial:
    """p-th root of a polynomial in t^p over the prime field (c^p = c)."""
    p = f.field.p
    return f._new([f.coeffs[i] for i in range(0, len(f.coeffs), p)])


def _distinct_degree(f: Polynomial):
    """Split a monic squarefree f into (product-of-degree-d factors, d) parts."""
    p = f.field.p
    x = Polynomial.gen(f.field, f.var)
    h = x
    d = 0
    out = []
    while f.degree > 0:
        d += 1
        if 2 * d > f.degree:
            out.append((f, int(f.degree)))
            break
        h = h.powmod(p, f)
        g = f.gcd(h - x)
        if g.degree > 0:
            out.append((g, d))
            f = f // g
            h = h % f
    return out


def _equal_degree_split(f: Polynomial, d: int, rng: random.Random):
    """Cantor-Zassenhaus split of a product of degree-d irreducibles."""
    if f.degree == d:
        return [f]
    p = f.field.p
    exponent = (p**d - 1) // 2
    while True:
        r = Polynomial(
            [rng.randrange(p) for _ in range(int(f.degree))], f.field, f.var
        )
        if r.degree < 1:
            continue
        g = f.gcd(r)
        if 0 < g.degree < f.degree:
            break
        h = r.powmod(exponent, f) - 1
        g = f.gcd(h)
        if 0 < g.degree < f.degree:
            break
    return _equal_degree_split(g, d, rng) + _equal_degree_split(f // g, d, rng)


def factor(f: Polynomial, seed: int = 0) -> dict[Polynomial, int]:
    """Factor a nonzero polynomial into monic irreducibles with multiplicity.

    Deterministic for a fixed seed; the product of the factors times the
    leading coefficient reproduces the input.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(f"{seed}:{f.field.p}:{f.coeffs}")
    original = f.monic()
    irreducibles = []
    work = original
    while work.degree > 0:
        d = work.derivative()
        if d.is_zero():
            work = _pth_root(work)
            continue
        squarefree = work // work.gcd(d)
        for part, deg in _distinct_degree(squarefree):
            irreducibles.extend(_equal_degree_split(part, deg, rng))
        # strip the found factors (with full multiplicity) and repeat
        for g in irreducibles:
            while True:
                q, r = divmod(work, g)
                if not r.is_zero():
                    break
                work = q
    result = {}
    for g in irreducibles:
        result[g] = _poly_order(original, g)
    return result


def is_irreducible(f: Polynomial, seed: int = 0) -> bool:
    if f.degree < 1:
        return False
    fac = factor(f, seed=seed)
    return len(fac) == 1 and next(iter(fac.values())) == 1


# ---------------------------------------------------------------------------
# substitution and extensions
# ---------------------------------------------------------------------------


def compose(f: RationalFunction, g: RationalFunction) -> RationalFunction:
    """f(g): substitute the rational function g for the variable of f."""

    def poly_at(poly: Polynomial) -> RationalFunction:
        acc = RationalFunction.from_int(0, g.field, g.var)
        for c in reversed(poly.coeffs):
            acc = acc * g + c
        return acc

    den = poly_at(f.den)
    if den.is_zero():
        raise ZeroDivisionError("denominator vanishes identically under substitution")
    return poly_at(f.num) / den


def invert_variable(f: RationalFunction) -> RationalFunction:
    """f(1/t) as a rational function of t (used to work at the infinite place)."""
    dn = len(f.num.coeffs) - 1
    dd = len(f.den.coeffs) - 1
    d = max(dn, dd)
    t = Polynomial.gen(f.field, f.var)
    num = f.num.reverse() * t ** (d - dn)
    den = f.den.reverse() * t ** (d - dd)
    return RationalFunction(num, den)


def places_of_polynomial(f: Polynomial, seed: int = 0) -> list[tuple[Place, int]]:
    """Finite places in the zero divisor of a nonzero polynomial."""
    return [
        (Place("finite", g), m) for g, m in sorted(
            factor(f, seed=seed).items(), key=lambda kv: (kv[0].degree, kv[0].coeffs)
        )
    ]


def places_over(v: Place, ext: ExtensionMap, seed: int = 0) -> list[PlaceOverData]:
    """All places w of K over v, with e(w) = ord_w(pullback of a uniformizer)."""
    phi = ext.phi
    if v.kind == "finite":
        pulled = compose(RationalFunction(v.poly), phi)
    else:
        pulled = 1 / phi
    out = []
    for w_poly, mult in places_of_polynomial(pulled.num, seed=seed):
        out.append(PlaceOverData(w_poly, v, mult))
    inf_ord = order_at(pulled, Place("infinite"))
    if inf_ord > 0:
        out.append(PlaceOverData(Place("infinite"), v, inf_ord))
    return out


def _minimal_polynomial(xi: Polynomial, modulus: Polynomial, tvar: str) -> Polynomial:
    """Minimal polynomial over F_p of xi in F_p[s]/(modulus), in variable tvar."""
    p = xi.field.p
    d = int(modulus.degree)
    # rows: coordinate vectors of xi^0, xi^1, ... until linearly dependent
    rows = []
    power = Polynomial([1], xi.field, xi.var)
    for k in range(d + 1):
        vec = [power.coeffs[i] if i < len(power.coeffs) else 0 for i in range(d)]
        rows.append(vec + [1 if j == k else 0 for j in range(d + 1)])
        coeffs = _nullspace_vector(rows, d, p)
        if coeffs is not None:
            return Polynomial(coeffs, xi.field, tvar).monic()
        power = (power * xi) % modulus
    raise AssertionError("minimal polynomial not found")  # pragma: no cover


def _nullspace_vector(rows, d, p):
    """If the last row is dependent on the others, return the combination."""
    m = [list(r) for r in rows]
    n = len(m)
    # Gaussian elimination on the first d columns, carrying the identity tail
    pivot_cols = []
    r = 0
    for c in range(d):
        pr = next((i for i in range(r, n) if m[i][c] % p), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(n):
            if i != r and m[i][c] % p:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        pivot_cols.append(c)
        r += 1
    for i in range(n):
        if all(m[i][c] == 0 for c in range(d)):
            tail = m[i][d:]
            if any(tail):
                return tail[:n]
    return None


def place_below(w: Place, ext: ExtensionMap, tvar: str = "t", seed: int = 0) -> PlaceOverData:
    """The place v of F under w, with e(w)."""
    phi = ext.phi
    field = phi.field
    if w.kind == "finite":
        ow = order_at(phi, w)
        if ow < 0:
            return PlaceOverData(w, Place("infinite"), -ow)
        xi = residue(phi, w)
        pi_v = _minimal_polynomial(xi, w.poly, tvar)
        pulled = compose(RationalFunction(pi_v._new(pi_v.coeffs)), phi)
        # pi_v is in tvar; rebuild it in tvar for the Place below
        v = Place("finite", Polynomial(pi_v.coeffs, field, tvar))
        return PlaceOverData(w, v, order_at(pulled, w))
    ow = order_at(phi, w)  # = deg den - deg num
    if ow < 0:
        return PlaceOverData(w, Place("infinite"), -ow)
    if ow > 0:
        v = Place("finite", Polynomial.gen(field, tvar))
        return PlaceOverData(w, v, ow)
    c = residue(phi, w).coeffs
    c0 = c[0] if c else 0
    v = Place("finite", Polynomial([-c0, 1], field, tvar))
    return PlaceOverData(w, v, order_at(phi - c0, w))


# ---------------------------------------------------------------------------
# parsing / printing
# ---------------------------------------------------------------------------


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class _Parser:
    """Recursive-descent parser for +, -, *, /, ^, parentheses, ints, var."""

    def __init__(self, text: str, var: str, field: ConstantField):
        self.text = text
        self.var = var
        self.field = field
        self.pos = 0

    def parse(self) -> RationalFunction:
        value = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            raise ParseError("unexpected trailing input", self.pos)
        return value

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expr(self) -> RationalFunction:
        value = self.term()
        while True:
            op = self.peek()
            if op == "+":
                self.pos += 1
                value = value + self.term()
            elif op == "-":
                self.pos += 1
                value = value - self.term()
            else:
                return value

    def term(self) -> RationalFunction:
        value = self.unary()
        while True:
            op = self.peek()
            if op == "*":
                self.pos += 1
                value = value * self.unary()
            elif op == "/":
                self.pos += 1
                divisor = self.unary()
                if divisor.is_zero():
                    raise ParseError("division by zero", self.pos)
                value = value / divisor
            else:
                return value

    def unary(self) -> RationalFunction:
        if self.peek() == "-":
            self.pos += 1
            return -self.unary()
        if self.peek() == "+":
            self.pos += 1
            return self.unary()
        return self.power()

    def power(self) -> RationalFunction:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            self.skip_ws()
            sign = 1
            if self.peek() == "-":
                sign = -1
                self.pos += 1
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if self.pos == start:
                raise ParseError("expected integer exponent", self.pos)
            n = sign * int(self.text[start : self.pos])
            if n < 0 and base.is_zero():
                raise ParseError("division by zero", start)
            return base**n
        return base

    def atom(self) -> RationalFunction:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            value = self.expr()
            if self.peek() != ")":
                raise ParseError("expected ')'", self.pos)
            self.pos += 1
            return value
        if ch.isdigit():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            return RationalFunction.from_int(
                int(self.text[start : self.pos]), self.field, self.var
            )
        if ch.isalpha():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isalnum():
                self.pos += 1
            name = self.text[start : self.pos]
            if name != self.var:
                raise ParseError(f"unknown symbol {name!r}", start)
            return RationalFunction.gen(self.field, self.var)
        raise ParseError("expected a value", self.pos)


def parse_rational_function(text: str, var: str, field: ConstantField) -> RationalFunction:
    """Parse an expression in ``var`` into canonical form."""
    return _Parser(text, var, field).parse()

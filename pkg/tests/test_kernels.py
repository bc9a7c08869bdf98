"""The compiled polynomial kernels must match the pure-Python fallback."""

import random

import pytest

from ffheights import _kernels_py, kernels

compiled = pytest.importorskip("ffheights._kernels")


def _strip(lst, p):
    out = [c % p for c in lst]
    while out and out[-1] == 0:
        out.pop()
    return out


class TestBackendAgreement:
    @pytest.mark.parametrize("p", [5, 7, 101, 32003])
    def test_mul_fuzz(self, p):
        rng = random.Random(p)
        for _ in range(100):
            a = _strip([rng.randrange(p) for _ in range(rng.randrange(12))], p)
            b = _strip([rng.randrange(p) for _ in range(rng.randrange(12))], p)
            assert compiled.poly_mul(a, b, p) == _kernels_py.poly_mul(a, b, p)

    @pytest.mark.parametrize("p", [5, 7, 101, 32003])
    def test_divmod_fuzz(self, p):
        rng = random.Random(p + 1)
        for _ in range(100):
            a = _strip([rng.randrange(p) for _ in range(rng.randrange(15))], p)
            b = _strip([rng.randrange(p) for _ in range(rng.randrange(1, 8))], p)
            if not b:
                continue
            qc, rc = compiled.poly_divmod(a, b, p)
            qp, rp = _kernels_py.poly_divmod(a, b, p)
            assert (qc, rc) == (qp, rp)

    def test_large_degree_roundtrip(self):
        p = 5
        rng = random.Random(0)
        a = _strip([rng.randrange(p) for _ in range(3000)] + [1], p)
        b = _strip([rng.randrange(p) for _ in range(1500)] + [1], p)
        prod = compiled.poly_mul(a, b, p)
        q, r = compiled.poly_divmod(prod, b, p)
        assert q == a and r == []

    def test_active_backend_reported(self):
        assert kernels.BACKEND in ("compiled", "python")

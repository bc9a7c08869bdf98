"""Intersection matrices of special fibers and their height corrections."""

from fractions import Fraction

import pytest

from ffheights import fibers


def _dense_invert(matrix):
    """Independent Fraction Gauss elimination (no pivot-free shortcuts)."""
    n = len(matrix)
    aug = [
        [Fraction(matrix[i][j]) for j in range(n)]
        + [Fraction(1 if i == k else 0) for k in range(n)]
        for i in range(n)
    ]
    det = Fraction(1)
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        if pivot != col:
            aug[col], aug[pivot] = aug[pivot], aug[col]
            det = -det
        det *= aug[col][col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug], det


class TestFiberGraphs:
    @pytest.mark.parametrize("kind,n,size", [
        ("I", 2, 2), ("I", 5, 5), ("II", 0, 1), ("III", 0, 2), ("IV", 0, 3),
        ("I*", 0, 5), ("I*", 3, 8), ("IV*", 0, 7), ("III*", 0, 8), ("II*", 0, 9),
    ])
    def test_sizes(self, kind, n, size):
        g = fibers.build_fiber(kind, n)
        assert len(g.labels) == size

    def test_kernel_is_multiplicity_vector(self):
        for kind, n in [("I", 4), ("I*", 2), ("IV*", 0), ("II*", 0)]:
            g = fibers.build_fiber(kind, n)
            v = fibers.kernel_vector(g)
            assert v == g.multiplicities
            for row in g.matrix:
                assert sum(a * m for a, m in zip(row, v)) == 0

    def test_reduced_matrix_negative_definite(self):
        for kind, n in [("I", 3), ("I*", 1), ("I*", 4), ("III*", 0)]:
            g = fibers.build_fiber(kind, n)
            assert fibers.is_negative_definite(fibers.reduced_matrix(g))

    def test_istar_multiplicities(self):
        g = fibers.build_fiber("I*", 2)
        assert list(g.multiplicities) == [1, 1, 2, 2, 2, 1, 1]

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            fibers.build_fiber("X", 0)
        with pytest.raises(ValueError):
            fibers.build_fiber("I", 0)


class TestReducedInverse:
    @pytest.mark.parametrize("m", range(1, 8))
    def test_istar_det(self, m):
        g = fibers.build_fiber("I*", m)
        _, det = fibers.reduced_inverse(g)
        assert det == (-1) ** m * 4

    @pytest.mark.parametrize("m", range(1, 8))
    def test_istar_inverse_diagonals(self, m):
        g = fibers.build_fiber("I*", m)
        inverse, _ = fibers.reduced_inverse(g)
        labels = fibers.reduced_labels(g)
        ia = labels.index("alpha")
        ib = labels.index("beta")
        assert inverse[ia][ia] == -1
        assert inverse[ib][ib] == Fraction(-(m + 4), 4)

    def test_matches_independent_dense_inversion(self):
        for kind, n in [("I*", 1), ("I", 6), ("IV*", 0)]:
            g = fibers.build_fiber(kind, n)
            reduced = fibers.reduced_matrix(g)
            inv_a, det_a = fibers.reduced_inverse(g)
            inv_b, det_b = _dense_invert(reduced)
            assert det_a == det_b
            assert [list(r) for r in inv_a] == [list(r) for r in inv_b]

    @pytest.mark.parametrize("n", range(2, 9))
    def test_cycle_diagonal(self, n):
        g = fibers.build_fiber("I", n)
        inverse, det = fibers.reduced_inverse(g)
        labels = fibers.reduced_labels(g)
        assert det == (-1) ** (n - 1) * n
        for i, label in enumerate(labels):
            c = int(label[1:])
            assert inverse[i][i] == Fraction(-c * (n - c), n)


class TestCorrections:
    def test_half_diagonal(self):
        g = fibers.build_fiber("I*", 3)
        table = fibers.correction_table(g)
        inverse, _ = fibers.reduced_inverse(g)
        labels = fibers.reduced_labels(g)
        for label, corr in table.corrections.items():
            assert corr == inverse[labels.index(label)][labels.index(label)] / 2

    def test_symmetric_types_constant(self):
        for kind, expected in [
            ("III", Fraction(-1, 4)),
            ("IV", Fraction(-1, 3)),
            ("IV*", Fraction(-2, 3)),
            ("III*", Fraction(-3, 4)),
        ]:
            g = fibers.build_fiber(kind, 0)
            values = set(fibers.correction_table(g).corrections.values())
            assert values == {expected}

    def test_i0star_constant(self):
        g = fibers.build_fiber("I*", 0)
        values = set(fibers.correction_table(g).corrections.values())
        assert values == {Fraction(-1, 2)}

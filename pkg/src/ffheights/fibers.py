"""Intersection matrices of Kodaira special fibers and height corrections.

Each fiber is a weighted graph of components with a symmetric intersection
matrix A (diagonal -2).  The multiplicity vector spans ker(A); deleting the
identity component's row/column gives a negative-definite A_red whose exact
inverse supplies the per-component correction ½(A_red^{-1})_{cc} added to
vΔ/12 in the local height of a point reducing to component c.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class FiberGraph:
    name: str
    labels: tuple  # component names; identity first
    multiplicities: tuple
    matrix: tuple  # tuple of tuples of ints

    @property
    def identity_index(self) -> int:
        return 0

    @property
    def simple_indices(self) -> tuple:
        return tuple(i for i, m in enumerate(self.multiplicities) if m == 1)


@dataclass(frozen=True)
class CorrectionTable:
    """Correction ½(A_red^{-1})_{cc} per simple non-identity component."""

    fiber: FiberGraph
    corrections: dict  # label -> Fraction (<= 0)


def _matrix_from_edges(n, edges):
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = -2
    for i, j, w in edges:
        m[i][j] += w
        m[j][i] += w
    return tuple(tuple(row) for row in m)


def build_fiber(kind: str, n: int = 0) -> FiberGraph:
    """Standard Kodaira configurations.

    ``kind`` is one of "I" (with n = N >= 2), "II", "III", "IV",
    "I*" (with n = M >= 0), "IV*", "III*", "II*".  Types Good/I0, I1 and II
    have a single component and no reduced matrix.
    """
    if kind == "I":
        N = n
        if N < 2:
            raise ValueError("I_N needs N >= 2 for a component graph")
        labels = ("zero",) + tuple(f"c{i}" for i in range(1, N))
        if N == 2:
            matrix = ((-2, 2), (2, -2))
        else:
            edges = [(i, (i + 1) % N, 1) for i in range(N)]
            matrix = _matrix_from_edges(N, edges)
        return FiberGraph(f"I{N}", labels, (1,) * N, matrix)
    if kind == "II":
        return FiberGraph("II", ("zero",), (1,), ((-2,),))
    if kind == "III":
        return FiberGraph("III", ("zero", "c1"), (1, 1), ((-2, 2), (2, -2)))
    if kind == "IV":
        edges = [(0, 1, 1), (0, 2, 1), (1, 2, 1)]
        return FiberGraph("IV", ("zero", "c1", "c2"), (1, 1, 1), _matrix_from_edges(3, edges))
    if kind == "I*":
        M = n
        # components: 0, alpha, gamma0..gammaM, beta, beta'
        labels = ("zero", "alpha") + tuple(f"gamma{i}" for i in range(M + 1)) + (
            "beta",
            "betaprime",
        )
        mult = (1, 1) + (2,) * (M + 1) + (1, 1)
        size = M + 5
        g0 = 2  # index of gamma0
        edges = [(0, g0, 1), (1, g0, 1)]
        for i in range(M):
            edges.append((g0 + i, g0 + i + 1, 1))
        gM = g0 + M
        edges.append((gM, size - 2, 1))
        edges.append((gM, size - 1, 1))
        return FiberGraph(f"I{M}*", labels, mult, _matrix_from_edges(size, edges))
    if kind == "IV*":
        # central node of multiplicity 3 with three arms 3-2-1
        labels = ("zero", "a1", "center", "a2", "zero2", "a3", "zero3")
        mult = (1, 2, 3, 2, 1, 2, 1)
        edges = [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (2, 5, 1), (5, 6, 1)]
        return FiberGraph("IV*", labels, mult, _matrix_from_edges(7, edges))
    if kind == "III*":
        # chain 1-2-3-4-3-2-1 with a 2 hanging off the central 4
        labels = ("zero", "c1", "c2", "c3", "c4", "c5", "c6", "c7")
        mult = (1, 2, 3, 4, 3, 2, 1, 2)
        edges = [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (5, 6, 1), (3, 7, 1)]
        return FiberGraph("III*", labels, mult, _matrix_from_edges(8, edges))
    if kind == "II*":
        # chain 1-2-3-4-5-6-4-2 with a 3 hanging off the 6
        labels = ("zero", "c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8")
        mult = (1, 2, 3, 4, 5, 6, 4, 2, 3)
        edges = [
            (0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1),
            (5, 6, 1), (6, 7, 1), (5, 8, 1),
        ]
        return FiberGraph("II*", labels, mult, _matrix_from_edges(9, edges))
    raise ValueError(f"unknown fiber kind {kind!r}")


def kernel_vector(g: FiberGraph) -> tuple:
    """The multiplicity vector; build_fiber guarantees A * mult = 0."""
    for i, row in enumerate(g.matrix):
        if sum(a * m for a, m in zip(row, g.multiplicities)) != 0:
            raise AssertionError(f"multiplicity vector not in kernel at row {i}")
    return g.multiplicities


def _invert(matrix) -> tuple[tuple, Fraction]:
    """Exact inverse and determinant by Gauss-Jordan over Fraction."""
    n = len(matrix)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    det = Fraction(1)
    for c in range(n):
        pr = next((r for r in range(c, n) if m[r][c] != 0), None)
        if pr is None:
            raise ValueError("singular matrix")
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    inverse = tuple(tuple(row[n:]) for row in m)
    return inverse, det


def reduced_matrix(g: FiberGraph) -> tuple:
    """A with the identity component's row and column deleted."""
    idx = [i for i in range(len(g.labels)) if i != g.identity_index]
    return tuple(tuple(g.matrix[i][j] for j in idx) for i in idx)


def reduced_inverse(g: FiberGraph) -> tuple[tuple, Fraction]:
    """Exact inverse of A_red and its determinant."""
    if len(g.labels) < 2:
        raise ValueError("fiber has no non-identity component")
    return _invert(reduced_matrix(g))


def reduced_labels(g: FiberGraph) -> tuple:
    return tuple(l for i, l in enumerate(g.labels) if i != g.identity_index)


def correction_table(g: FiberGraph) -> CorrectionTable:
    """½(A_red^{-1})_{cc} for every simple non-identity component."""
    simple = [i for i in g.simple_indices if i != g.identity_index]
    if not simple:
        return CorrectionTable(g, {})
    inverse, _ = reduced_inverse(g)
    labels = reduced_labels(g)
    pos = {label: k for k, label in enumerate(labels)}
    corrections = {}
    for i in simple:
        label = g.labels[i]
        k = pos[label]
        corrections[label] = Fraction(1, 2) * inverse[k][k]
    return CorrectionTable(g, corrections)


def is_negative_definite(matrix) -> bool:
    """Leading principal minors alternate in sign."""
    n = len(matrix)
    for k in range(1, n + 1):
        sub = [row[:k] for row in matrix[:k]]
        _, det = _invert_det_only(sub)
        if det == 0 or (det > 0) != (k % 2 == 0):
            return False
    return True


def _invert_det_only(matrix):
    n = len(matrix)
    m = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for c in range(n):
        pr = next((r for r in range(c, n) if m[r][c] != 0), None)
        if pr is None:
            return None, Fraction(0)
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for r in range(c + 1, n):
            if m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return None, det

"""Independent brute-force ground truth.

Bounded enumeration of orientation-reversing involutions, of two-factor
splittings, and of det -1 conjugators carrying a matrix to its inverse.
Nothing here shares code with the constructive factorizer; agreement
between the two routes is what the test suite certifies.  Negative
answers are bounded evidence only, never proofs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterator

from .errors import NotSL2
from .mat2 import Mat2, is_real_structure

__all__ = [
    "LatticeBasis",
    "enumerate_involutions",
    "brute_force_factor",
    "brute_force_conjugator",
    "integer_kernel",
    "integer_column_kernel",
]


def enumerate_involutions(bound: int) -> Iterator[Mat2]:
    """All J with J @ J == I, det J == -1, and |entries| <= bound.

    These are exactly (x y; z -x) with x^2 + yz = 1, emitted in
    lexicographic (x, y, z) order so that reported first witnesses are
    reproducible.
    """
    if bound < 0:
        raise ValueError("bound must be >= 0")
    for x in range(-bound, bound + 1):
        k = 1 - x * x  # need yz = k
        for y in range(-bound, bound + 1):
            if y == 0:
                if k == 0:
                    for z in range(-bound, bound + 1):
                        yield Mat2(x, 0, z, -x)
            elif k % y == 0 and abs(k // y) <= bound:
                yield Mat2(x, y, k // y, -x)


def brute_force_factor(m: Mat2, bound: int) -> tuple[Mat2, Mat2] | None:
    """First splitting m == j1 @ j2 into two real structures, or None.

    j1 runs over enumerate_involutions(bound); j2 = j1 @ m is accepted
    when it is itself a real structure with entries at most
    bound * (max |m| + 1).
    """
    if m.det != 1:
        raise NotSL2(f"det {m.det} != 1")
    cap = bound * (m.max_abs_entry() + 1)
    for j1 in enumerate_involutions(bound):
        j2 = j1 @ m  # j1 is its own inverse
        if j2.max_abs_entry() <= cap and is_real_structure(j2):
            return j1, j2
    return None


@dataclass(frozen=True)
class LatticeBasis:
    """Primitive basis of an integer solution lattice in matrix entries.

    Vectors are (x, y, z, w) coefficient 4-tuples of an unknown matrix
    (x y; z w); every integer solution of the underlying system is an
    integer combination of the basis.
    """

    vectors: tuple[tuple[int, int, int, int], ...]

    def __post_init__(self):
        vecs = tuple(tuple(v) for v in self.vectors)
        if any(len(v) != 4 for v in vecs):
            raise ValueError("basis vectors must have four entries")
        object.__setattr__(self, "vectors", vecs)

    @property
    def rank(self) -> int:
        return len(self.vectors)

    def coefficients_of(self, vec) -> tuple[int, ...] | None:
        """Integer coordinates of vec in this basis, or None."""
        if isinstance(vec, Mat2):
            vec = (vec.a, vec.b, vec.c, vec.d)
        k = len(self.vectors)
        if k == 0:
            return () if not any(vec) else None
        rows = [
            [Fraction(v[i]) for v in self.vectors] + [Fraction(vec[i])]
            for i in range(4)
        ]
        for col in range(k):
            pivot = next((i for i in range(col, 4) if rows[i][col] != 0), None)
            if pivot is None:
                return None
            rows[col], rows[pivot] = rows[pivot], rows[col]
            pv = rows[col][col]
            rows[col] = [x / pv for x in rows[col]]
            for i in range(4):
                if i != col and rows[i][col] != 0:
                    f = rows[i][col]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[col])]
        if any(rows[i][k] != 0 for i in range(k, 4)):
            return None
        coeffs = [rows[j][k] for j in range(k)]
        if any(c.denominator != 1 for c in coeffs):
            return None
        return tuple(int(c) for c in coeffs)

    def contains(self, vec) -> bool:
        return self.coefficients_of(vec) is not None


def integer_column_kernel(rows: list[list[int]]) -> list[tuple[int, ...]]:
    """Primitive basis of {v integer vector : rows . v == 0}.

    Column reduction with Euclidean pivoting; the accumulated column
    transform is unimodular, so the trailing columns are automatically a
    primitive basis of the full kernel lattice.
    """
    if not rows:
        raise ValueError("need at least one row")
    n = len(rows[0])
    mat = [list(r) for r in rows]
    cols = [[int(i == j) for i in range(n)] for j in range(n)]
    lead = 0
    for i in range(len(mat)):
        if lead >= n:
            break
        while True:
            nz = [j for j in range(lead, n) if mat[i][j] != 0]
            if len(nz) <= 1:
                break
            j0 = min(nz, key=lambda j: abs(mat[i][j]))
            for j in nz:
                if j == j0:
                    continue
                step = mat[i][j] // mat[i][j0]
                if step:
                    for r in mat:
                        r[j] -= step * r[j0]
                    cols[j] = [a - step * b for a, b in zip(cols[j], cols[j0])]
        nz = [j for j in range(lead, n) if mat[i][j] != 0]
        if nz:
            j1 = nz[0]
            for r in mat:
                r[lead], r[j1] = r[j1], r[lead]
            cols[lead], cols[j1] = cols[j1], cols[lead]
            lead += 1
    kernel = []
    for j in range(lead, n):
        vec = cols[j]
        first = next((x for x in vec if x != 0), 1)
        if first < 0:
            vec = [-x for x in vec]
        kernel.append(tuple(vec))
    return kernel


def _commutation_rows(a: Mat2, b: Mat2) -> list[list[int]]:
    """Rows of the linear system Q @ a - b @ Q == 0 in Q = (x y; z w)."""
    return [
        [a.a - b.a, a.c, -b.b, 0],
        [a.b, a.d - b.a, 0, -b.b],
        [-b.c, 0, a.a - b.d, a.c],
        [0, -b.c, a.b, a.d - b.d],
    ]


def integer_kernel(m: Mat2) -> LatticeBasis:
    """Solution lattice of Q @ m == m.inverse() @ Q over the integers.

    Rank 2 for every non-central m; rank 4 for +-identity.  Any lattice
    point Q with det Q = -1 satisfies both Q m Q^-1 = m^-1 and
    Q^-1 m Q = m^-1.
    """
    if m.det != 1:
        raise NotSL2(f"det {m.det} != 1")
    rows = _commutation_rows(m, m.inverse())
    return LatticeBasis(tuple(integer_column_kernel(rows)))


def _fraction_inverse(sq: list[list[Fraction]]) -> list[list[Fraction]] | None:
    k = len(sq)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(sq)]
    for col in range(k):
        pivot = next((i for i in range(col, k) if aug[i][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for i in range(k):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [row[k:] for row in aug]


def _coefficient_box(vectors, bound: int) -> tuple[int, ...]:
    """Per-coordinate search radius covering every lattice point with
    entries bounded by `bound`, via the inverse of an invertible k x k
    submatrix of the basis."""
    k = len(vectors)
    for rows_idx in combinations(range(4), k):
        sub = [[Fraction(vectors[j][i]) for j in range(k)] for i in rows_idx]
        inv = _fraction_inverse(sub)
        if inv is not None:
            return tuple(
                int(bound * sum(abs(inv[j][i]) for i in range(k))) + 1
                for j in range(k)
            )
    raise RuntimeError("lattice basis vectors are not independent")


def brute_force_conjugator(m: Mat2, bound: int) -> Mat2 | None:
    """First Q with |entries| <= bound, det Q = -1, Q m Q^-1 = m^-1.

    Enumerates the solution lattice of the linear constraint instead of
    raw 4-entry space, then filters on determinant.  Returns None when
    no such Q exists within the bound.
    """
    if m.det != 1:
        raise NotSL2(f"det {m.det} != 1")
    basis = integer_kernel(m)
    if basis.rank == 0:
        return None
    box = _coefficient_box(basis.vectors, bound)
    for coeffs in product(*(range(-r, r + 1) for r in box)):
        entries = [
            sum(c * v[i] for c, v in zip(coeffs, basis.vectors)) for i in range(4)
        ]
        if max(abs(e) for e in entries) > bound:
            continue
        q = Mat2(*entries)
        if q.det != -1:
            continue
        if q @ m @ q.inverse() == m.inverse():
            return q
    return None

"""Deciding and constructing factorizations into two real structures.

A matrix m in SL(2,Z) is called real here when m = c_plus @ c_minus for
two orientation-reversing linear involutions.  Central and |trace| <= 2
matrices are always real, with explicit table factorizations carried
through the canonical-form conjugators.  A hyperbolic matrix is real
exactly when its cutting cycle splits, after some rotation, into two
palindromic blocks of odd length; the factorization is then assembled
from the reflection factors

    position even:  (1 -e; 0 -1)      position odd:  (1 0; -e -1)

whose interleaved mirror signs cancel pairwise against the U/V runs.
Every returned factorization is re-verified exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import (
    CENTRAL,
    ELLIPTIC,
    PARABOLIC,
    classify,
    elliptic_canonicalize,
    parabolic_canonicalize,
    parabolic_signed_shift,
)
from .errors import CentralInput, NotARealStructure, NotReal, NotSL2
from .farey import Cycle, Word, cutting_cycle
from .mat2 import (
    IDENTITY,
    NEG_IDENTITY,
    REFL_DIAG,
    REFL_SWAP,
    ROT_2PI3,
    ROT_PI,
    Mat2,
    RealStructureKind,
    is_real_structure,
    real_structure_kind,
)
from .oracle import brute_force_conjugator

__all__ = [
    "Split",
    "RealFactorization",
    "WeaklyRealReport",
    "is_odd_bipalindromic",
    "factor_real",
    "central_factorization",
    "is_real",
    "conjugacy_test",
    "weakly_real",
    "weakly_real_equals_real_check",
]


@dataclass(frozen=True)
class Split:
    """A bipalindromic splitting of a cycle: rotate the stored exponents
    left by `rotation`, then cut after `first_block_len` entries; both
    blocks are palindromes of odd length."""

    rotation: int
    first_block_len: int

    def blocks_of(self, exponents: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
        n = len(exponents)
        rot = (exponents + exponents)[self.rotation : self.rotation + n]
        return rot[: self.first_block_len], rot[self.first_block_len :]


def is_odd_bipalindromic(cycle: Cycle) -> Split | None:
    """Least (rotation, first block length) odd-bipalindromic split, or None."""
    exps = cycle.exponents
    n = len(exps)
    dbl = exps + exps
    for r in range(n):
        rot = dbl[r : r + n]
        for first in range(1, n, 2):
            b1, b2 = rot[:first], rot[first:]
            if b1 == b1[::-1] and b2 == b2[::-1]:
                return Split(r, first)
    return None


@dataclass(frozen=True)
class RealFactorization:
    """Certified pair of real structures with c_plus @ c_minus = m."""

    c_plus: Mat2
    c_minus: Mat2

    def __post_init__(self) -> None:
        for j in (self.c_plus, self.c_minus):
            if not is_real_structure(j):
                raise NotARealStructure(f"{j} is not a linear real structure")

    @property
    def matrix(self) -> Mat2:
        return self.c_plus @ self.c_minus

    @property
    def kind_plus(self) -> RealStructureKind:
        return real_structure_kind(self.c_plus)

    @property
    def kind_minus(self) -> RealStructureKind:
        return real_structure_kind(self.c_minus)

    def to_json_obj(self) -> dict:
        return {
            "c_plus": self.c_plus.to_json_obj(),
            "c_minus": self.c_minus.to_json_obj(),
            "kind_plus": self.kind_plus.value,
            "kind_minus": self.kind_minus.value,
        }


def _reflection_factor(position: int, e: int) -> Mat2:
    # U^e = F * diag(1,-1) at even positions, V^e = diag(1,-1) * F at odd
    if position % 2 == 0:
        return Mat2(1, -e, 0, -1)
    return Mat2(1, 0, -e, -1)


_ELLIPTIC_SPLITS: dict[Mat2, tuple[Mat2, Mat2]] = {
    ROT_PI: (REFL_DIAG, REFL_SWAP),
    ROT_2PI3: (Mat2(1, 0, 1, -1), REFL_SWAP),
    -ROT_2PI3: (Mat2(-1, 0, -1, 1), REFL_SWAP),
}


def _finish(m: Mat2, c_plus: Mat2, c_minus: Mat2) -> RealFactorization:
    fac = RealFactorization(c_plus, c_minus)
    if fac.matrix != m:
        raise RuntimeError(f"factorization verification failed for {m}")
    return fac


def factor_real(m: Mat2) -> RealFactorization:
    """Explicit factorization m = c_plus @ c_minus, or NotReal.

    Raises CentralInput on +-identity (see central_factorization for the
    degenerate splittings) and NotReal for hyperbolic matrices whose
    cycle admits no odd-bipalindromic split.
    """
    if m.det != 1:
        raise NotSL2(f"det {m.det} != 1")
    if m.is_central():
        raise CentralInput("use central_factorization for +-identity")
    t = m.trace
    if -2 < t < 2:
        form = elliptic_canonicalize(m)
        j1, j2 = _ELLIPTIC_SPLITS[form.representative]
        conj = form.conjugator
        return _finish(m, conj @ j1 @ conj.inverse(), conj @ j2 @ conj.inverse())
    if abs(t) == 2:
        form = parabolic_canonicalize(m)
        n = form.representative.c
        j1 = Mat2(1, 0, n, -1)
        j2 = REFL_DIAG if form.sign == 1 else -REFL_DIAG
        conj = form.conjugator
        return _finish(m, conj @ j1 @ conj.inverse(), conj @ j2 @ conj.inverse())

    cyc, sign, conj = cutting_cycle(m)
    split = is_odd_bipalindromic(cyc)
    if split is None:
        raise NotReal(f"cutting cycle {list(cyc.canonical)} is not odd-bipalindromic")
    exps = cyc.exponents
    r = split.rotation
    if r:
        conj = conj @ Word(exps[:r], "U").matrix()
        if r % 2:
            # odd rotations swap the roles of U and V; (0 1; 1 0) swaps back
            conj = conj @ REFL_SWAP
    rotated = (exps + exps)[r : r + len(exps)]
    c1 = IDENTITY
    for i in range(split.first_block_len):
        c1 = c1 @ _reflection_factor(i, rotated[i])
    c2 = IDENTITY
    for i in range(split.first_block_len, len(rotated)):
        c2 = c2 @ _reflection_factor(i, rotated[i])
    c1 = conj @ c1 @ conj.inverse()
    c2 = conj @ c2 @ conj.inverse()
    if sign == -1:
        c1 = -c1
    return _finish(m, c1, c2)


def central_factorization(m: Mat2) -> RealFactorization:
    """Degenerate splittings of the center: I and -I are both real."""
    if m == IDENTITY:
        return RealFactorization(REFL_DIAG, REFL_DIAG)
    if m == NEG_IDENTITY:
        return RealFactorization(-REFL_DIAG, REFL_DIAG)
    raise CentralInput(f"{m} is not +-identity")


def is_real(m: Mat2) -> bool:
    """Does m factor as a product of two linear real structures?"""
    if m.det != 1:
        raise NotSL2(f"det {m.det} != 1")
    if m.is_central():
        return True
    if -2 <= m.trace <= 2:
        return True
    cyc, _, _ = cutting_cycle(m)
    return is_odd_bipalindromic(cyc) is not None


def conjugacy_test(x: Mat2, y: Mat2, group: str = "gl") -> bool:
    """Conjugacy of x and y in GL(2,Z) (group="gl") or SL(2,Z) ("sl").

    The SL refinement separates exactly the classes merged only by
    det -1 conjugation: even-rotation equality of cycles (hyperbolic),
    the signed unipotent entry (parabolic), and equality of canonical
    conjugator determinants (elliptic; the GL centralizer of an elliptic
    representative contains no det -1 element, so that determinant is
    well defined).
    """
    if group not in ("gl", "sl"):
        raise ValueError(f"group must be 'gl' or 'sl', got {group!r}")
    cx, cy = classify(x), classify(y)
    if cx.kind != cy.kind:
        return False
    if cx.kind == CENTRAL:
        return cx.sign == cy.sign
    if cx.kind == ELLIPTIC:
        if cx.trace != cy.trace:
            return False
        if group == "gl":
            return True
        return (
            elliptic_canonicalize(x).conjugator.det
            == elliptic_canonicalize(y).conjugator.det
        )
    if cx.kind == PARABOLIC:
        if group == "gl":
            return (cx.shift, cx.sign) == (cy.shift, cy.sign)
        return parabolic_signed_shift(x) == parabolic_signed_shift(y)
    if cx.sign != cy.sign:
        return False
    ex, _, _ = cutting_cycle(x)
    ey, _, _ = cutting_cycle(y)
    if group == "gl":
        return ex == ey
    return ex.equal_up_to_even_rotation(ey)


@dataclass(frozen=True)
class WeaklyRealReport:
    """Bounded cross-check of realness against inverse-conjugation.

    A det -1 witness Q with Q m Q^-1 = m^-1 for a non-real m would be a
    genuine inconsistency; a real m without a witness only means the
    search bound was too small.
    """

    matrix: Mat2
    bound: int
    is_real: bool
    witness: Mat2 | None
    inverse_conjugator: Mat2 | None
    consistent: bool
    note: str

    def to_json_obj(self) -> dict:
        return {
            "matrix": self.matrix.to_json_obj(),
            "bound": self.bound,
            "is_real": self.is_real,
            "witness": None if self.witness is None else self.witness.to_json_obj(),
            "inverse_conjugator": (
                None
                if self.inverse_conjugator is None
                else self.inverse_conjugator.to_json_obj()
            ),
            "consistent": self.consistent,
            "note": self.note,
        }


def weakly_real(m: Mat2, bound: int) -> WeaklyRealReport:
    real = is_real(m)
    witness = brute_force_conjugator(m, bound)
    inverse_conjugator = None
    consistent = True
    note = ""
    if real:
        fac = central_factorization(m) if m.is_central() else factor_real(m)
        c_plus = fac.c_plus
        # m = c+ c- with involutions forces c+ m c+^-1 = c- c+ = m^-1
        if c_plus @ m @ c_plus.inverse() != m.inverse():
            raise RuntimeError(f"left involution fails to invert {m}")
        inverse_conjugator = c_plus
        if witness is None:
            note = "bound insufficient for a witness"
    elif witness is not None:
        consistent = False
        note = "witness found for a non-real matrix"
    return WeaklyRealReport(m, bound, real, witness, inverse_conjugator, consistent, note)


weakly_real_equals_real_check = weakly_real

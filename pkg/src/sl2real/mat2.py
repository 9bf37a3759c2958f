"""Exact 2x2 integer matrices and linear real structures.

All arithmetic is over Python ints, so nothing here ever rounds.  A
*linear real structure* is an involution of the integer lattice that
reverses orientation: J @ J == I and det J == -1.  By Cayley-Hamilton
this is equivalent to det J == -1 and tr J == 0, which is how the
two-parameter family (x y; z -x), x^2 + yz = 1, arises.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .errors import MatrixParseError, NotARealStructure, NotUnimodular

__all__ = [
    "Mat2",
    "RealStructureKind",
    "IDENTITY",
    "NEG_IDENTITY",
    "U",
    "V",
    "ROT_PI",
    "ROT_2PI3",
    "REFL_DIAG",
    "REFL_SWAP",
    "u_pow",
    "v_pow",
    "is_real_structure",
    "real_structure_kind",
]


@dataclass(frozen=True)
class Mat2:
    """Row-major 2x2 integer matrix (a b; c d)."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        for entry in (self.a, self.b, self.c, self.d):
            if not isinstance(entry, int) or isinstance(entry, bool):
                raise TypeError(f"matrix entries must be int, got {entry!r}")

    # -- algebra -------------------------------------------------------

    def __matmul__(self, other: "Mat2") -> "Mat2":
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __pow__(self, n: int) -> "Mat2":
        if not isinstance(n, int):
            return NotImplemented
        base = self
        if n < 0:
            base = self.inverse()
            n = -n
        result = IDENTITY
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    def inverse(self) -> "Mat2":
        # only unimodular matrices are invertible over Z
        if self.det == 1:
            return Mat2(self.d, -self.b, -self.c, self.a)
        if self.det == -1:
            return Mat2(-self.d, self.b, self.c, -self.a)
        raise NotUnimodular(f"det {self.det} is not invertible over the integers")

    def is_central(self) -> bool:
        return self == IDENTITY or self == NEG_IDENTITY

    def max_abs_entry(self) -> int:
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))

    # -- text / JSON ---------------------------------------------------

    _TEXT = re.compile(
        r"\A\s*(-?\d+)\s*,\s*(-?\d+)\s*;\s*(-?\d+)\s*,\s*(-?\d+)\s*\Z"
    )

    @classmethod
    def from_text(cls, text: str) -> "Mat2":
        """Parse ``"a,b;c,d"`` with optional whitespace."""
        match = cls._TEXT.match(text)
        if match is None:
            raise MatrixParseError(
                f"expected 'a,b;c,d' with integer entries, got {text!r}"
            )
        return cls(*(int(group) for group in match.groups()))

    def to_text(self) -> str:
        return f"{self.a},{self.b};{self.c},{self.d}"

    def to_json_obj(self) -> list[list[str]]:
        """Rows of decimal strings; strings keep arbitrary precision intact."""
        return [[str(self.a), str(self.b)], [str(self.c), str(self.d)]]

    @classmethod
    def from_json_obj(cls, obj: object) -> "Mat2":
        if not (
            isinstance(obj, list)
            and len(obj) == 2
            and all(isinstance(row, list) and len(row) == 2 for row in obj)
        ):
            raise MatrixParseError(f"expected [[a, b], [c, d]], got {obj!r}")
        entries = []
        for row in obj:
            for cell in row:
                if isinstance(cell, bool):
                    raise MatrixParseError(f"bad matrix entry {cell!r}")
                if isinstance(cell, int):
                    entries.append(cell)
                elif isinstance(cell, str):
                    try:
                        entries.append(int(cell, 10))
                    except ValueError:
                        raise MatrixParseError(f"bad matrix entry {cell!r}") from None
                else:
                    raise MatrixParseError(f"bad matrix entry {cell!r}")
        return cls(*entries)

    def __str__(self) -> str:
        return f"({self.a} {self.b}; {self.c} {self.d})"


IDENTITY = Mat2(1, 0, 0, 1)
NEG_IDENTITY = Mat2(-1, 0, 0, -1)

# standard unipotent generators of the positive monoid
U = Mat2(1, 1, 0, 1)
V = Mat2(1, 0, 1, 1)

# finite-order and reflection constants used by canonical forms
ROT_PI = Mat2(0, 1, -1, 0)
ROT_2PI3 = Mat2(0, 1, -1, 1)
REFL_DIAG = Mat2(1, 0, 0, -1)
REFL_SWAP = Mat2(0, 1, 1, 0)


def u_pow(n: int) -> Mat2:
    return Mat2(1, n, 0, 1)


def v_pow(n: int) -> Mat2:
    return Mat2(1, 0, n, 1)


def is_real_structure(j: Mat2) -> bool:
    """True iff j is an orientation-reversing linear involution."""
    return j.det == -1 and j @ j == IDENTITY


class RealStructureKind(enum.Enum):
    """GL(2,Z)-conjugacy class of a linear real structure.

    There are exactly two: conjugate to diag(1,-1) or to (0 1; 1 0).
    They are separated by reduction mod 2, since diag(1,-1) is the
    identity mod 2 while the swap is not, and conjugation preserves
    the mod-2 class.
    """

    DIAGONAL = "diagonal"
    EXCHANGE = "exchange"


def real_structure_kind(j: Mat2) -> RealStructureKind:
    if not is_real_structure(j):
        raise NotARealStructure(f"{j} is not a linear real structure")
    if j.a % 2 == 1 and j.d % 2 == 1 and j.b % 2 == 0 and j.c % 2 == 0:
        return RealStructureKind.DIAGONAL
    return RealStructureKind.EXCHANGE

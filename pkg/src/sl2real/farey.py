"""Quadratic surds, continued fractions, and cutting cycles.

A hyperbolic element of SL(2,Z) acts on the hyperbolic plane with two
irrational fixed points on the boundary.  Expanding the attracting one
as a continued fraction is eventually periodic, and the period, read as
run lengths of the two unipotent generators U = (1 1; 0 1) and
V = (1 0; 1 1), is a conjugacy invariant of the matrix: its cutting
cycle.  Everything in this module is exact integer arithmetic; floats
appear only in ``Surd.__float__`` for display and sanity checks.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import gcd, isqrt, sqrt

from .errors import NotFactorable, NotHyperbolic, NotSL2, ReductionOverflow
from .mat2 import IDENTITY, Mat2, u_pow, v_pow

__all__ = [
    "DEFAULT_CF_CAP",
    "Surd",
    "Word",
    "Cycle",
    "SeriesReport",
    "cf_step",
    "attracting_fixed_point",
    "repelling_fixed_point",
    "word_to_matrix",
    "greedy_factor",
    "cutting_cycle",
    "series_crosscheck",
]

DEFAULT_CF_CAP = 10000
_ENV_CAP = "SL2REAL_CF_CAP"


def _resolve_cap(cap: int | None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(_ENV_CAP)
    if env is not None:
        return int(env)
    return DEFAULT_CF_CAP


@dataclass(frozen=True, eq=False)
class Surd:
    """The real quadratic irrational (p + sqrt(d)) / q, held exactly.

    Invariants: q != 0, d > 0 and not a perfect square, and q divides
    d - p^2.  The divisibility is what keeps the Gauss-map recurrence
    inside the integers; :meth:`make` rescales arbitrary triples into
    it.  Equality and hashing are by real value, not representation.
    """

    p: int
    d: int
    q: int

    def __post_init__(self) -> None:
        for entry in (self.p, self.d, self.q):
            if not isinstance(entry, int) or isinstance(entry, bool):
                raise TypeError(f"surd components must be int, got {entry!r}")
        if self.q == 0:
            raise ValueError("zero denominator")
        if self.d <= 0 or isqrt(self.d) ** 2 == self.d:
            raise ValueError(f"{self.d} is not a positive non-square")
        if (self.d - self.p * self.p) % self.q != 0:
            raise ValueError("q must divide d - p^2; use Surd.make to rescale")

    @classmethod
    def make(cls, p: int, d: int, q: int) -> "Surd":
        """Build (p + sqrt(d)) / q from any triple with q != 0."""
        if q != 0 and (d - p * p) % q == 0:
            return cls(p, d, q)
        s = abs(q)
        return cls(p * s, d * s * s, q * s)

    # value identity: x is a root of q^2 t^2 - 2pq t + (p^2 - d), and the
    # sign of q selects which of the two roots
    def _key(self) -> tuple[int, int, int, int]:
        aa, bb, cc = self.q * self.q, -2 * self.p * self.q, self.p * self.p - self.d
        g = gcd(aa, bb, cc)
        return (aa // g, bb // g, cc // g, 1 if self.q > 0 else -1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Surd):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def conjugate(self) -> "Surd":
        """The Galois conjugate (p - sqrt(d)) / q."""
        return Surd(-self.p, self.d, -self.q)

    def __float__(self) -> float:
        return (self.p + sqrt(self.d)) / self.q

    def floor(self) -> int:
        s = isqrt(self.d)
        # s < sqrt(d) < s+1 strictly, so these integer quotients are exact
        if self.q > 0:
            return (self.p + s) // self.q
        return (-self.p - s - 1) // (-self.q)

    def compare_rational(self, num: int, den: int) -> int:
        """Sign of self - num/den for den > 0; never 0 (self is irrational)."""
        if den <= 0:
            raise ValueError("den must be positive")
        k = den * self.p - num * self.q
        if k >= 0:
            s = 1
        else:
            s = 1 if den * den * self.d > k * k else -1
        return s if self.q > 0 else -s

    def __str__(self) -> str:
        return f"({self.p}+sqrt({self.d}))/{self.q}"


def cf_step(x: Surd) -> tuple[int, Surd]:
    """One Gauss-map step: returns (floor(x), 1/(x - floor(x)))."""
    a = x.floor()
    p1 = a * x.q - x.p
    # q | d - p1^2 because p1 = -p mod q and q | d - p^2
    return a, Surd(p1, x.d, (x.d - p1 * p1) // x.q)


def attracting_fixed_point(m: Mat2) -> Surd:
    """Boundary fixed point of m with eigenvalue of modulus > 1."""
    if m.det != 1:
        raise NotSL2(f"det {m.det} != 1")
    t = m.trace
    if t * t <= 4:
        raise NotHyperbolic(f"trace {t} is not hyperbolic")
    disc = t * t - 4
    # z = (lambda - d)/c for the dominant eigenvalue lambda = (t +- sqrt(disc))/2
    if t > 0:
        return Surd(m.a - m.d, disc, 2 * m.c)
    return Surd(m.d - m.a, disc, -2 * m.c)


def repelling_fixed_point(m: Mat2) -> Surd:
    return attracting_fixed_point(m).conjugate()


@dataclass(frozen=True)
class Word:
    """Nonempty alternating positive word in U and V, run-length encoded.

    ``Word((1, 2), "U")`` is U^1 V^2; ``Word((3,), "V")`` is V^3.
    """

    exponents: tuple[int, ...]
    starts_with: str = "U"

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponents", tuple(self.exponents))
        if not self.exponents:
            raise ValueError("empty word")
        for e in self.exponents:
            if not isinstance(e, int) or isinstance(e, bool) or e < 1:
                raise ValueError(f"exponents must be positive ints, got {e!r}")
        if self.starts_with not in ("U", "V"):
            raise ValueError(f"starts_with must be 'U' or 'V', got {self.starts_with!r}")

    def runs(self) -> tuple[tuple[str, int], ...]:
        letter = self.starts_with
        out = []
        for e in self.exponents:
            out.append((letter, e))
            letter = "V" if letter == "U" else "U"
        return tuple(out)

    def matrix(self) -> Mat2:
        result = IDENTITY
        for letter, e in self.runs():
            result = result @ (u_pow(e) if letter == "U" else v_pow(e))
        return result

    def __str__(self) -> str:
        return "".join(f"{letter}^{e}" for letter, e in self.runs())


def word_to_matrix(word: Word) -> Mat2:
    return word.matrix()


def greedy_factor(b: Mat2) -> Word:
    """Unique positive word in U, V with product b.

    Peels U while the first row dominates the second entrywise and V in
    the opposite case; the branches are mutually exclusive away from the
    identity because equal rows would force det 0.  Raises
    :class:`NotFactorable` when b is not a nonempty positive word.
    """
    if b.det != 1:
        raise NotFactorable(f"det {b.det} != 1")
    if min(b.a, b.b, b.c, b.d) < 0:
        raise NotFactorable(f"{b} has a negative entry")
    if b == IDENTITY:
        raise NotFactorable("identity is the empty word")
    a, bb, c, d = b.a, b.b, b.c, b.d
    letters = []
    while (a, bb, c, d) != (1, 0, 0, 1):
        if a >= c and bb >= d:
            letters.append("U")
            a -= c
            bb -= d
        elif c >= a and d >= bb:
            letters.append("V")
            c -= a
            d -= bb
        else:
            raise NotFactorable(f"{b} is not a positive word in U and V")
    runs: list[list] = []
    for letter in letters:
        if runs and runs[-1][0] == letter:
            runs[-1][1] += 1
        else:
            runs.append([letter, 1])
    return Word(tuple(r[1] for r in runs), runs[0][0])


@dataclass(frozen=True, eq=False)
class Cycle:
    """Cyclic word U^{e1} V^{e2} ... V^{e_2n}, stored at a concrete rotation.

    Equality and hashing quotient by all rotations (the GL-conjugacy
    level).  Even rotations preserve which letter carries which
    exponent; :meth:`equal_up_to_even_rotation` tests that finer,
    SL-level relation on the stored tuples.
    """

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponents", tuple(self.exponents))
        n = len(self.exponents)
        if n < 2 or n % 2:
            raise ValueError(f"cycle length must be even and >= 2, got {n}")
        for e in self.exponents:
            if not isinstance(e, int) or isinstance(e, bool) or e < 1:
                raise ValueError(f"exponents must be positive ints, got {e!r}")

    def __len__(self) -> int:
        return len(self.exponents)

    @property
    def canonical(self) -> tuple[int, ...]:
        """Lexicographically least rotation, found by doubling and scanning."""
        n = len(self.exponents)
        dbl = self.exponents + self.exponents
        return min(dbl[i : i + n] for i in range(n))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cycle):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self) -> int:
        return hash(self.canonical)

    def reversed_cycle(self) -> "Cycle":
        return Cycle(tuple(reversed(self.exponents)))

    def equal_up_to_even_rotation(self, other: "Cycle") -> bool:
        n = len(self.exponents)
        if len(other.exponents) != n:
            return False
        dbl = self.exponents + self.exponents
        return any(dbl[r : r + n] == other.exponents for r in range(0, n, 2))

    def to_json_obj(self) -> list[str]:
        return [str(e) for e in self.canonical]

    def __str__(self) -> str:
        return "[" + ",".join(str(e) for e in self.exponents) + "]"


def _gauss_orbit(x: Surd, cap: int) -> tuple[list[int], int]:
    """CF digits of x until the (p, q) state repeats.

    All states share the same d, so (p, q) determines the state;
    digits[entry:] is one full period of the expansion.
    """
    seen: dict[tuple[int, int], int] = {}
    digits: list[int] = []
    current = x
    while True:
        key = (current.p, current.q)
        if key in seen:
            return digits, seen[key]
        if len(digits) >= cap:
            raise ReductionOverflow(f"continued fraction exceeded {cap} steps")
        seen[key] = len(digits)
        digit, current = cf_step(current)
        digits.append(digit)


def cutting_cycle(m: Mat2, cap: int | None = None) -> tuple[Cycle, int, Mat2]:
    """Cutting cycle of a hyperbolic matrix.

    Returns (cycle, sign, conjugator) with the exact identity

        m == sign * conjugator @ W @ conjugator.inverse()

    where W is the alternating U-first word whose run lengths are the
    stored ``cycle.exponents``.  The conjugator is in SL(2,Z): the CF
    pre-period is forced even (each digit matrix has det -1), and any
    later rotation of the word is by an even number of runs.  The
    identity is re-verified before returning.
    """
    if m.det != 1:
        raise NotSL2(f"det {m.det} != 1")
    t = m.trace
    if t * t <= 4:
        raise NotHyperbolic(f"trace {t} is not hyperbolic")
    sign = 1 if t > 0 else -1

    digits, entry = _gauss_orbit(attracting_fixed_point(m), _resolve_cap(cap))
    if entry % 2:
        entry += 1
    conj = IDENTITY
    for a in digits[:entry]:
        conj = conj @ Mat2(a, 1, 1, 0)
    body = conj.inverse() @ m @ conj
    word = greedy_factor(body if sign == 1 else -body)

    runs = [list(run) for run in word.runs()]
    # cyclically, equal first/last letters are a single run: rotate the
    # last run to the front (conjugation by that run) and merge
    if len(runs) > 1 and runs[0][0] == runs[-1][0]:
        letter, e = runs.pop()
        mover = u_pow(e) if letter == "U" else v_pow(e)
        conj = conj @ mover.inverse()
        runs[0][1] += e
    if runs[0][0] == "V":
        _, e = runs.pop(0)
        conj = conj @ v_pow(e)
        runs.append(["V", e])
    assert len(runs) % 2 == 0 and runs[0][0] == "U"

    exps = tuple(e for _, e in runs)
    n = len(exps)
    dbl = exps + exps
    best = min(range(0, n, 2), key=lambda r: dbl[r : r + n])
    if best:
        conj = conj @ Word(exps[:best], "U").matrix()
        exps = dbl[best : best + n]

    reconstructed = conj @ Word(exps, "U").matrix() @ conj.inverse()
    if sign == -1:
        reconstructed = -reconstructed
    if reconstructed != m:
        raise RuntimeError(f"cutting-cycle verification failed for {m}")
    return Cycle(exps), sign, conj


@dataclass(frozen=True)
class SeriesReport:
    """Cross-check of the cutting cycle against the raw CF period."""

    cf_period: tuple[int, ...]
    cycle: Cycle
    sign: int
    repetition: int
    consistent: bool

    def to_json_obj(self) -> dict:
        return {
            "cf_period": [str(a) for a in self.cf_period],
            "cycle": self.cycle.to_json_obj(),
            "sign": self.sign,
            "repetition": self.repetition,
            "consistent": self.consistent,
        }


def series_crosscheck(m: Mat2, cap: int | None = None) -> SeriesReport:
    """Does the cycle equal the CF period of the attracting fixed point?

    The raw period may have odd length; it is doubled before comparing
    (a cycle always has even length).  ``repetition`` counts how many
    copies of the raw period tile the cycle, 0 when inconsistent.
    Comparison is up to arbitrary rotation.
    """
    cyc, sign, _ = cutting_cycle(m, cap)
    digits, entry = _gauss_orbit(attracting_fixed_point(m), _resolve_cap(cap))
    period = tuple(digits[entry:])
    doubled = period + period if len(period) % 2 else period
    n = len(cyc.exponents)
    consistent = n % len(doubled) == 0 and Cycle(doubled * (n // len(doubled))) == cyc
    repetition = n // len(period) if consistent else 0
    return SeriesReport(period, cyc, sign, repetition, consistent)

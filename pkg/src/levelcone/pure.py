"""Pure diagrams, extremely compressed diagrams and cone membership."""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .diagram import BettiDiagram, HVector, phi, shifts
from .errors import (
    EmptyColumn,
    NotIncreasing,
    NotInCone,
    NotShiftSeparated,
    OutOfRange,
    ShapeError,
)
from .rational import as_rational

__all__ = [
    "binom_r",
    "pure_diagram",
    "ecomp_type",
    "ecomp_hvector",
    "PureCombo",
    "greedy_decompose",
    "quasipure_check",
    "codim3_level_membership",
]


def binom_r(i: int, p: int) -> int:
    """Dimension of degree ``i`` of a polynomial ring in ``p`` variables."""
    if p < 1:
        raise ValueError("need at least one variable")
    if i < 0:
        return 0
    return comb(p - 1 + i, p - 1)


def _check_type(d: Sequence[int]) -> tuple[int, ...]:
    d = tuple(int(x) for x in d)
    if not d:
        raise NotIncreasing("empty type")
    if any(a >= b for a, b in zip(d, d[1:])):
        raise NotIncreasing(f"type {d} is not strictly increasing")
    return d


@lru_cache(maxsize=4096)
def _pure_entries(d: tuple[int, ...]) -> tuple[Fraction, ...]:
    e = [x - d[0] for x in d]
    vals = [Fraction(1)]
    for k in range(1, len(e)):
        q = Fraction(1)
        for i in range(1, len(e)):
            if i != k:
                q *= Fraction(e[i], abs(e[i] - e[k]))
        vals.append(q)
    return tuple(vals)


def pure_diagram(d: Sequence[int]) -> BettiDiagram:
    """Herzog-Kuhl pure diagram of type ``d``, normalised to 1 at ``(0, d0)``."""
    d = _check_type(d)
    vals = _pure_entries(d)
    return BettiDiagram(len(d) - 1, {(k, dk): v for k, (dk, v) in enumerate(zip(d, vals))})


def ecomp_type(d0: int, j: int, c: int, p: int) -> tuple[int, ...]:
    """Type ``(d0, d0+j+1, ..., d0+j+p-1, d0+c+p)`` of an extremely
    compressed diagram; ``j`` and ``c`` are relative to ``d0``."""
    if p < 1:
        raise OutOfRange("codimension must be positive")
    if not 0 <= j <= c:
        raise OutOfRange(f"need 0 <= j <= c, got j={j}, c={c}")
    middle = [d0 + j + i for i in range(1, p)]
    return (d0, *middle, d0 + c + p)


def ecomp_hvector(j: int, c: int, p: int) -> HVector:
    if not 0 <= j <= c:
        raise OutOfRange(f"need 0 <= j <= c, got j={j}, c={c}")
    r = [binom_r(i, p) for i in range(c + 1)]
    coeffs = {}
    for i in range(c + 1):
        if i <= j:
            coeffs[i] = r[i]
        else:
            coeffs[i] = Fraction(r[j], r[c - j]) * r[c - i]
    return HVector(coeffs)


@dataclass(frozen=True)
class PureCombo:
    """A nonnegative combination ``sum coeff * pi(type)`` of one codimension."""

    codim: int
    terms: tuple[tuple[Fraction, tuple[int, ...]], ...]

    def __post_init__(self):
        seen = set()
        for coeff, d in self.terms:
            if coeff <= 0:
                raise ValueError("PureCombo coefficients must be positive")
            if len(d) != self.codim + 1:
                raise ValueError(f"type {d} has the wrong length for codim {self.codim}")
            if d in seen:
                raise ValueError(f"repeated type {d}")
            seen.add(d)

    @classmethod
    def build(cls, codim: int, terms: Iterable[tuple[object, Sequence[int]]]) -> "PureCombo":
        """Merge repeated types and drop zero coefficients; keeps first-seen order."""
        acc: dict[tuple[int, ...], Fraction] = {}
        for coeff, d in terms:
            d = _check_type(d)
            acc[d] = acc.get(d, Fraction(0)) + as_rational(coeff)
        kept = []
        for d, q in acc.items():
            if q < 0:
                raise ValueError(f"negative coefficient {q} on {d}")
            if q:
                kept.append((q, d))
        return cls(codim, tuple(kept))

    def diagram(self) -> BettiDiagram:
        out = BettiDiagram.zero(self.codim)
        for coeff, d in self.terms:
            out = out + pure_diagram(d).scale(coeff)
        return out

    def types(self) -> list[tuple[int, ...]]:
        return [d for _, d in self.terms]

    def coefficient(self, d: Sequence[int]) -> Fraction:
        d = tuple(d)
        for coeff, t in self.terms:
            if t == d:
                return coeff
        return Fraction(0)

    def is_chain(self) -> bool:
        ts = sorted(self.types())
        return all(all(a <= b for a, b in zip(s, t)) for s, t in zip(ts, ts[1:]))

    def __len__(self) -> int:
        return len(self.terms)


def greedy_decompose(D: BettiDiagram) -> PureCombo:
    """Peel pure diagrams off ``D`` along its minimal shifts.

    Each step takes ``d`` = the minimal shifts, subtracts the largest
    multiple of ``pi(d)`` that keeps those entries nonnegative, and repeats
    until nothing is left.  Raises NotInCone when the minimal shifts stop
    being strictly increasing or a column empties out early.
    """
    if not D.is_nonnegative():
        raise NotInCone("diagram has negative entries")
    p = D.codim
    rest = D
    terms = []
    while not rest.is_zero():
        try:
            d, _ = shifts(rest)
        except EmptyColumn as exc:
            raise NotInCone(f"column {exc.column} exhausted before the rest") from None
        if any(a >= b for a, b in zip(d, d[1:])):
            raise NotInCone(f"minimal shifts {d} are not strictly increasing")
        pure = pure_diagram(d)
        q = min(rest[(i, d[i])] / pure[(i, d[i])] for i in range(p + 1))
        rest = rest - pure.scale(q)
        if not rest.is_nonnegative():
            raise NotInCone("subtraction step went negative")
        terms.append((q, d))
    return PureCombo.build(p, terms)


def quasipure_check(D: BettiDiagram) -> PureCombo:
    """Decompose a diagram whose columns are shift-separated.

    Separated means ``max row of column i-1 < min row of column i``; such
    diagrams always lie in the cone, so a greedy failure is a bug.
    """
    lo, hi = shifts(D)
    for i in range(1, D.codim + 1):
        if not hi[i - 1] < lo[i]:
            raise NotShiftSeparated(
                f"max shift {hi[i - 1]} of column {i - 1} is not below min shift {lo[i]} of column {i}"
            )
    combo = greedy_decompose(D)
    assert combo.diagram() == D
    return combo


def codim3_level_membership(D: BettiDiagram) -> bool:
    """Cone membership for codim-3 diagrams with one entry in columns 0 and 3.

    Both single-entry columns are removed with the phi maps, which scale
    pure diagrams by positive factors.  What remains is a codim-1 diagram,
    and those are in the cone exactly when column 1 mass is never ahead
    of column 0 mass.
    """
    if D.codim != 3:
        raise ShapeError(f"expected codim 3, got {D.codim}")
    col0, col3 = D.column(0), D.column(3)
    if len(col0) != 1 or len(col3) != 1:
        raise ShapeError("columns 0 and 3 must each hold exactly one nonzero entry")
    (d0,), (d3,) = col0, col3
    if not D.is_nonnegative():
        return False
    # pulled-back pure types need d0 < d1 and d2 < d3
    middle = list(D.column(1)) + list(D.column(2))
    if any(not d0 < j < d3 for j in middle):
        return False
    one = phi(phi(D, 3), 0)
    top, bottom = one.column(0), one.column(1)
    if sum(top.values()) != sum(bottom.values()):
        return False
    run_top = run_bottom = Fraction(0)
    for l in sorted(set(top) | {j - 1 for j in bottom}):
        run_top += top.get(l, 0)
        run_bottom += bottom.get(l + 1, 0)
        if run_top < run_bottom:
            return False
    return True

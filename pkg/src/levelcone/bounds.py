"""Multiplicity bounds from shifts, and the codim-3 upper-bound certificate."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

from .cancellation import cancellation_certificate, zanello_indices
from .diagram import BettiDiagram, HVector, hvector_of, multiplicity, shifts
from .errors import CertificateFailed, NotLevelShape, NotShiftSeparated
from .hvec import max_betti_combo
from .pure import PureCombo, pure_diagram, quasipure_check

__all__ = ["Bounds", "mc_bounds", "zanello_check", "mc_upper_certificate_codim3"]


@dataclass(frozen=True)
class Bounds:
    lower: Fraction
    e: Fraction
    upper: Fraction

    @property
    def lower_ok(self) -> bool:
        return self.lower <= self.e

    @property
    def upper_ok(self) -> bool:
        return self.e <= self.upper

    @property
    def ok(self) -> bool:
        return self.lower_ok and self.upper_ok


def mc_bounds(D: BettiDiagram) -> Bounds:
    """``beta_0 prod(min shifts)/p!  <=  e  <=  beta_0 prod(max shifts)/p!``."""
    lo, _ = shifts(D)
    D = D.translate(-lo[0])
    lo, hi = shifts(D)
    p = D.codim
    b0 = sum(D.column(0).values(), Fraction(0))
    lower = b0 * prod(lo[1:]) / factorial(p)
    upper = b0 * prod(hi[1:]) / factorial(p)
    return Bounds(lower, multiplicity(D), upper)


def zanello_check(h: HVector) -> Bounds:
    """Codim-3 bounds read off the sign changes of ``(1-t)^3 h``."""
    n1, n2, N1, N2 = zanello_indices(h)
    c = h.degree
    return Bounds(Fraction(n1 * n2 * (c + 3), 6), h.at_one(), Fraction(N1 * N2 * (c + 3), 6))


def _level_shape(B: BettiDiagram) -> None:
    if B.codim != 3:
        raise NotLevelShape(f"expected codim 3, got {B.codim}")
    if len(B.column(0)) != 1 or len(B.column(3)) != 1:
        raise NotLevelShape("columns 0 and 3 must each hold exactly one entry")
    if not B.is_nonnegative():
        raise NotLevelShape("negative entries")


def mc_upper_certificate_codim3(h: HVector, B: BettiDiagram) -> PureCombo:
    """Pure decomposition certifying ``e(h) <= beta_0 dbar_1 dbar_2 dbar_3 / 6``.

    ``B`` is a level-shaped diagram reached from the maximal combination
    ``D`` of ``h`` by consecutive cancellations.  The terms of ``D`` with
    ``j >= dbar_1 - 1`` have their column-1 entries above ``dbar_1`` and
    column-2 entries above ``dbar_1 + 1`` cancelled, which leaves a
    shift-separated diagram; together with the remaining low terms every
    pure type is bounded by the maximal shifts of ``B``.
    """
    _level_shape(B)
    if B.column(0) != {0: B[(0, 0)]}:
        raise NotLevelShape("column 0 must sit in row 0")
    if hvector_of(B) != h:
        raise CertificateFailed("B does not have h-vector h")
    a, D = max_betti_combo(h, 3)
    cert = cancellation_certificate(D, B)
    _, hi = shifts(B)
    top1 = hi[1]
    c = h.degree

    low_terms = [(aj, (0, j + 1, j + 2, j + 3)) for j, aj in enumerate(a) if aj and j <= top1 - 2]
    E = BettiDiagram.zero(3)
    for j, aj in enumerate(a):
        if aj and j > top1 - 2:
            E = E + pure_diagram((0, j + 1, j + 2, j + 3)).scale(aj)
    removed = {}
    for l in range(top1 + 1, c + 2):
        removed[(1, l)] = cert[(1, l)]
    for l in range(top1 + 2, c + 3):
        removed[(2, l)] = cert[(2, l)]
    for (k, l), b in removed.items():
        if b:
            E = E - BettiDiagram(3, {(k, l): b, (k + 1, l): b})
    if not E.is_nonnegative():
        raise CertificateFailed("subtracting the cancellations left negative entries")
    if not E.column(1):
        raise CertificateFailed("column 1 vanished from the high part")
    try:
        high = quasipure_check(E)
    except NotShiftSeparated as exc:
        raise CertificateFailed(f"high part is not shift-separated: {exc}") from None
    combo = PureCombo.build(3, low_terms + [(q, d) for q, d in high.terms])
    bound = (0, *hi[1:])
    for d in combo.types():
        if any(x > y for x, y in zip(d, bound)):
            raise CertificateFailed(f"type {d} exceeds the maximal shifts {bound}")
    if multiplicity(combo.diagram()) != h.at_one():
        raise CertificateFailed("decomposition has the wrong multiplicity")
    return combo

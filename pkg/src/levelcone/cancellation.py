"""Consecutive cancellations.

A cancellation in position ``(k, l)`` subtracts the same amount from
``(k, l)`` and ``(k+1, l)``.  It leaves the S-polynomial, and so the
h-vector, unchanged.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from .diagram import BettiDiagram, HVector
from .errors import NegativeEntry, NoSignChange, NotACancellation, NotLevelShape
from .rational import as_rational

__all__ = [
    "CancellationCertificate",
    "apply_cancellations",
    "cancellation_certificate",
    "delta3",
    "maximal_cancellation_level",
    "zanello_indices",
]


@dataclass(frozen=True)
class CancellationCertificate:
    """Amounts ``b[k, l] > 0`` such that ``B = D - sum b[k, l] C^{k,l}``."""

    amounts: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (k, l), b in sorted(self.amounts.items()):
            q = as_rational(b)
            if q < 0:
                raise ValueError(f"negative cancellation amount at ({k},{l})")
            if q:
                clean[(int(k), int(l))] = q
        object.__setattr__(self, "amounts", clean)

    @classmethod
    def from_triples(cls, triples: Iterable[tuple[int, int, object]]) -> "CancellationCertificate":
        acc: dict[tuple[int, int], Fraction] = {}
        for k, l, b in triples:
            acc[(k, l)] = acc.get((k, l), Fraction(0)) + as_rational(b)
        return cls(acc)

    def __getitem__(self, pos: tuple[int, int]) -> Fraction:
        return self.amounts.get(pos, Fraction(0))

    def __len__(self) -> int:
        return len(self.amounts)

    def __eq__(self, other) -> bool:
        if isinstance(other, CancellationCertificate):
            return dict(self.amounts) == dict(other.amounts)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self.amounts.items()))


def apply_cancellations(D: BettiDiagram, cert: CancellationCertificate) -> BettiDiagram:
    """Subtract every ``b C^{k,l}`` in ``cert`` from ``D``.

    Only the final entries are checked: the moves commute, so nonnegative
    final entries mean some order of single moves stays nonnegative.
    """
    out = {pos: v for pos, v in D.items()}
    for (k, l), b in cert.amounts.items():
        if not 0 <= k < D.codim:
            raise ValueError(f"cancellation column {k} outside 0..{D.codim - 1}")
        for pos in ((k, l), (k + 1, l)):
            out[pos] = out.get(pos, Fraction(0)) - b
    for (i, j), v in sorted(out.items()):
        if v < 0:
            raise NegativeEntry(i, j)
    return BettiDiagram(D.codim, out)


def cancellation_certificate(D: BettiDiagram, B: BettiDiagram) -> CancellationCertificate:
    """Recover the unique amounts taking ``D`` to ``B``.

    Row by row, ``b[i, j]`` is the alternating partial sum of the column
    differences ``D - B`` up to column ``i``; what is left over in the last
    column has to vanish.
    """
    if D.codim != B.codim:
        raise NotACancellation(f"codim mismatch: {D.codim} vs {B.codim}")
    p = D.codim
    diff = D - B
    amounts = {}
    for j in diff.rows():
        running = Fraction(0)
        for i in range(p):
            running = diff[(i, j)] - running
            if running < 0:
                raise NotACancellation(f"amount at ({i},{j}) would be {running}")
            if running:
                amounts[(i, j)] = running
        if diff[(p, j)] != running:
            raise NotACancellation(f"row {j}: S-polynomials differ")
    cert = CancellationCertificate(amounts)
    try:
        apply_cancellations(D, cert)
    except NegativeEntry as exc:
        raise NotACancellation(str(exc)) from None
    return cert


def delta3(h: HVector) -> HVector:
    """Coefficients of ``(1-t)^3 h(t)``."""
    return h.times_one_minus_t(3)


def maximal_cancellation_level(h: HVector, p: int = 3) -> BettiDiagram:
    """Fully cancelled codim-3 level-shaped diagram with h-vector ``h``.

    Negative interior coefficients of ``(1-t)^3 h`` go to column 1 and
    positive ones to column 2.
    """
    if p != 3:
        raise ValueError("maximal_cancellation_level is defined for codim 3 only")
    if h.is_zero() or h.low < 0:
        raise NotLevelShape("h must be supported on [0, c]")
    c = h.degree
    if h[0] <= 0:
        raise NotLevelShape("h_0 must be positive")
    dh = delta3(h)
    if dh[0] != h[0] or dh[c + 3] >= 0:
        raise NotLevelShape("(1-t)^3 h does not have the level sign pattern at its ends")
    entries = {(0, 0): h[0], (3, c + 3): -dh[c + 3]}
    for j in range(1, c + 3):
        v = dh[j]
        if v < 0:
            entries[(1, j)] = -v
        elif v > 0:
            entries[(2, j)] = v
    return BettiDiagram(3, entries)


def zanello_indices(h: HVector) -> tuple[int, int, int, int]:
    """Sign-change degrees ``(n1, n2, N1, N2)`` of ``(1-t)^3 h``."""
    if h.is_zero():
        raise NoSignChange("zero polynomial")
    c = h.degree
    dh = delta3(h)
    neg = [i for i, v in dh.items() if v < 0]
    pos = [i for i, v in dh.items() if v > 0]
    pos_after0 = [i for i in pos if i > 0]
    neg_capped = [i for i in neg if i <= c + 1]
    if not (neg and pos_after0 and neg_capped):
        raise NoSignChange(f"(1-t)^3 h = {dh.pretty()} lacks the required sign changes")
    return min(neg), min(pos_after0), max(neg_capped), max(pos)


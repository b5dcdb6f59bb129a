"""Rational-multiple tests on h-vectors.

Every function here works on an h-vector ``h = h_0 + ... + h_c t^c`` and
a codimension ``p``; ``r_i`` is the dimension of degree ``i`` of the
polynomial ring in ``p`` variables and ``s_i`` the same for ``p - 1``.
Out-of-range indices read as zero on both sides.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import BettiDiagram, HVector, hvector_of
from .errors import NotModuleHVector, ZeroPolynomial
from .pure import PureCombo, binom_r, ecomp_hvector, ecomp_type, greedy_decompose, pure_diagram

__all__ = [
    "det3",
    "reverse",
    "max_betti_combo",
    "LevelWitness",
    "level_condition",
    "codim2_level_condition",
    "CancellabilityReport",
    "rational_cancellable",
    "rational_dual_cancellable",
    "LefschetzSplit",
    "lefschetz_split",
    "WlpData",
    "wlp_condition",
]


def det3(m) -> Fraction:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _check_h(h: HVector) -> int:
    if h.is_zero():
        raise ZeroPolynomial("h-vector is zero")
    if h.low < 0:
        raise ValueError("h-vector must be supported on [0, c]")
    if h[0] <= 0:
        raise ValueError("h_0 must be positive")
    return h.degree


def reverse(h: HVector) -> HVector:
    if h.is_zero():
        raise ZeroPolynomial("cannot reverse the zero polynomial")
    c = h.degree
    return HVector({c - i: v for i, v in h.items()})


def _a_coefficients(h: HVector, p: int) -> list[Fraction]:
    c = h.degree
    return [h[j] / binom_r(j, p) - h[j + 1] / binom_r(j + 1, p) for j in range(c + 1)]


def max_betti_combo(h: HVector, p: int) -> tuple[list[Fraction], BettiDiagram]:
    """Coefficients ``a_j`` and the diagram ``sum a_j beta(R/m^{j+1})``.

    This is the largest diagram, up to scaling, with h-vector ``h``; every
    Betti diagram with that h-vector comes from it by cancellations.
    """
    c = _check_h(h)
    a = _a_coefficients(h, p)
    for j, aj in enumerate(a):
        if aj < 0:
            raise NotModuleHVector(j)
    return a, _power_combo(a, p)


@dataclass(frozen=True)
class LevelWitness:
    """Extremely compressed coefficients ``f`` and the determinants behind them."""

    codim: int
    socle_degree: int
    f: tuple[Fraction, ...]
    dets: tuple[Fraction, ...]

    @property
    def passed(self) -> bool:
        return all(d >= 0 for d in self.dets)

    def combo(self) -> PureCombo | None:
        """The combination of extremely compressed diagrams, when it is nonnegative."""
        if not self.passed:
            return None
        c, p = self.socle_degree, self.codim
        return PureCombo.build(p, [(fi, ecomp_type(0, i, c, p)) for i, fi in enumerate(self.f) if fi])


def level_condition(h: HVector, p: int) -> LevelWitness:
    """Three-term determinant test for a rational multiple of a level h-vector.

    ``f_i`` solves ``h = sum f_i h_{pi_i}`` over the extremely compressed
    h-vectors of socle degree ``c``.  Only the ``i``-th of those has a
    nonzero determinant against rows ``r_{i-1..i+1}`` and
    ``r_{c-i+1..c-i-1}``, which gives ``f_i`` in closed form.
    """
    if p < 2:
        raise ValueError("level_condition needs codimension >= 2")
    c = _check_h(h)

    def r(i):
        return binom_r(i, p)

    f, dets = [], []
    for i in range(c + 1):
        d = det3(
            [
                [h[i - 1], h[i], h[i + 1]],
                [r(i - 1), r(i), r(i + 1)],
                [r(c - i + 1), r(c - i), r(c - i - 1)],
            ]
        )
        # both 2x2 minors are negative because r is strictly increasing
        left = r(i - 1) * r(c - i) - r(i) * r(c - i + 1)
        right = r(i) * r(c - i - 1) - r(i + 1) * r(c - i)
        f.append(Fraction(r(c - i)) * d / (left * right))
        dets.append(Fraction(d))
    rebuilt = HVector({})
    for i, fi in enumerate(f):
        rebuilt = rebuilt + ecomp_hvector(i, c, p).scale(fi)
    assert rebuilt == h, "extremely compressed reconstruction failed"
    return LevelWitness(p, c, tuple(f), tuple(dets))


def codim2_level_condition(h: HVector) -> bool:
    """Level test in codimension two; same as ``level_condition(h, 2)``.

    There the determinant is ``(c+2)(2 h_i - h_{i-1} - h_{i+1})``, so the
    condition says the h-vector is concave.
    """
    return level_condition(h, 2).passed


@dataclass(frozen=True)
class CancellabilityReport:
    a: tuple[Fraction, ...]
    margins: tuple[Fraction, ...]

    @property
    def passed(self) -> bool:
        return all(x >= 0 for x in self.a) and all(m >= 0 for m in self.margins)

    def __bool__(self) -> bool:
        return self.passed


def rational_cancellable(h: HVector, p: int) -> CancellabilityReport:
    """Is some rational multiple of ``h`` cancellable?

    Margins are ``D[p-1, p+j] - D[p, p+j]`` for the maximal combination
    ``D``; they are computed from the ``a_j`` and checked against the
    determinant form.
    """
    c = _check_h(h)
    a = _a_coefficients(h, p)

    def r(i):
        return binom_r(i, p)

    margins = []
    for j in range(c):
        via_a = a[j + 1] * (p * r(j + 1) - r(j)) - a[j] * r(j)
        via_det = det3([[h[j], h[j + 1], h[j + 2]], [r(j), r(j + 1), r(j + 2)], [p, 1, 0]]) / r(j + 2)
        assert via_a == via_det, (j, via_a, via_det)
        margins.append(via_a)
    return CancellabilityReport(tuple(a), tuple(margins))


def rational_dual_cancellable(h: HVector, p: int) -> bool:
    """Some rational multiple of ``h`` is cancellable and so is its reverse.

    Evaluates the two determinant families and the two ratio families in
    ``h`` itself, then confirms agreement with running
    :func:`rational_cancellable` on ``h`` and on ``reverse(h)``.
    """
    c = _check_h(h)

    def r(i):
        return binom_r(i, p)

    ok = True
    for i in range(1, c + 1):
        ok &= det3([[h[i - 1], h[i], h[i + 1]], [r(i - 1), r(i), r(i + 1)], [p, 1, 0]]) >= 0
    for i in range(0, c + 1):
        ok &= det3([[h[i - 1], h[i], h[i + 1]], [0, 1, p], [r(c - i + 1), r(c - i), r(c - i - 1)]]) >= 0
    for i in range(0, c + 1):
        ok &= h[i] / r(i) - h[i + 1] / r(i + 1) >= 0
    for i in range(-1, c):
        ok &= h[i + 1] / r(c - i - 1) - h[i] / r(c - i) >= 0
    both = rational_cancellable(h, p).passed and rational_cancellable(reverse(h), p).passed
    assert ok == both, (h, ok, both)
    return ok


@dataclass(frozen=True)
class LefschetzSplit:
    u: int
    h_Q: HVector
    h_P: HVector
    h_P_dual: HVector


def _first_weak_descent(h: HVector) -> int:
    u = 0
    while h[u] < h[u + 1]:
        u += 1
    return u


def lefschetz_split(h: HVector) -> LefschetzSplit:
    """h-vectors of the cokernel, kernel and shifted dual kernel of ``x l``."""
    c = _check_h(h)
    u = _first_weak_descent(h)
    h_Q = HVector({i: h[i] - h[i - 1] for i in range(u + 1)})
    h_P = HVector({i: h[i - 1] - h[i] for i in range(u + 1, c + 2)})
    h_Pd = HVector({i: h[c - i] - h[c - i + 1] for i in range(c - u + 1)})
    assert h_Q.at_one() == h_P.at_one() == h_Pd.at_one()
    return LefschetzSplit(u, h_Q, h_P, h_Pd)


@dataclass(frozen=True)
class WlpData:
    codim: int
    u: int
    f: tuple[Fraction, ...]
    g: tuple[Fraction, ...]
    F: BettiDiagram
    G: BettiDiagram
    E: BettiDiagram

    @property
    def passed(self) -> bool:
        return all(x >= 0 for x in self.f) and all(x >= 0 for x in self.g)


def _power_combo(coeffs, q: int) -> BettiDiagram:
    """``sum coeffs[i] * beta(S/m^{i+1})`` in codimension ``q``."""
    out = BettiDiagram.zero(q)
    for i, x in enumerate(coeffs):
        if x:
            out = out + pure_diagram((0, *range(i + 1, i + q + 1))).scale(x)
    return out


def wlp_condition(h: HVector, p: int) -> WlpData:
    """Weak Lefschetz test and the upper-bound diagram ``E``.

    ``F`` bounds the cokernel side and ``G`` the dual of the kernel side,
    both in codimension ``p - 1``; ``E[i, j] = F[i, j] + G[p-i, p+c-j]``.
    When every ``f_i`` and ``g_i`` is nonnegative, ``E`` is checked to lie
    in the cone of pure diagrams.
    """
    if p < 2:
        raise ValueError("wlp_condition needs codimension >= 2")
    c = _check_h(h)
    u = _first_weak_descent(h)

    def s(i):
        return binom_r(i, p - 1)

    f = [(h[i] - h[i - 1]) / s(i) - (h[i + 1] - h[i]) / s(i + 1) for i in range(u)]
    f.append((h[u] - h[u - 1]) / s(u))
    g = [(h[c - i] - h[c - i + 1]) / s(i) - (h[c - i - 1] - h[c - i]) / s(i + 1) for i in range(c - u)]
    g.append((h[u] - h[u + 1]) / s(c - u))

    F = _power_combo(f, p - 1)
    G = _power_combo(g, p - 1)
    E = BettiDiagram(p, {(i, j): v for (i, j), v in F.items()})
    E = E + BettiDiagram(p, {(p - i, p + c - j): v for (i, j), v in G.items()})
    data = WlpData(p, u, tuple(f), tuple(g), F, G, E)
    if data.passed:
        assert hvector_of(E) == h
        greedy_decompose(E)
    return data

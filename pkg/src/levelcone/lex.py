"""Lex submodules of free modules generated in degree zero.

A free module ``F = R^s`` over ``R = k[x_1..x_p]`` is ordered position
first, so the lex submodule with quotient h-vector ``h`` fills ``e_1`` in
each degree before it touches ``e_2``.  Each component is then a lex ideal,
and lex ideals are stable, so their Betti numbers follow from counting
generators by their largest variable.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, lcm

from .diagram import BettiDiagram, HVector
from .errors import NotOSequence, OutOfRange
from .hvec import reverse
from .pure import binom_r

__all__ = [
    "Monomial",
    "monomials",
    "macaulay_growth",
    "LexProfile",
    "lex_profile",
    "growth_step_ok",
    "module_o_sequence",
    "betti_lex",
    "stabilizer",
    "normalized_betti_lex",
    "exact_cancellable",
    "exact_dual_cancellable",
]

_VARS = "xyzw"


@dataclass(frozen=True, order=True)
class Monomial:
    """Exponent vector; tuple order on the exponents is lex order with x_1 largest."""

    exponents: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def max_var(self) -> int:
        """1-based index of the last variable dividing the monomial (0 for 1)."""
        for i in range(len(self.exponents), 0, -1):
            if self.exponents[i - 1]:
                return i
        return 0

    def __str__(self) -> str:
        names = _VARS if len(self.exponents) <= len(_VARS) else None
        parts = []
        for i, e in enumerate(self.exponents):
            if not e:
                continue
            name = names[i] if names else f"x{i + 1}"
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts) or "1"


@lru_cache(maxsize=None)
def _monomials(d: int, p: int) -> tuple[tuple[int, ...], ...]:
    if p == 1:
        return ((d,),)
    out = []
    for first in range(d, -1, -1):
        out.extend((first, *rest) for rest in _monomials(d - first, p - 1))
    return tuple(out)


def monomials(d: int, p: int) -> list[Monomial]:
    """Degree-``d`` monomials in ``p`` variables, largest first."""
    if d < 0:
        return []
    return [Monomial(e) for e in _monomials(d, p)]


@lru_cache(maxsize=None)
def _index(d: int, p: int) -> dict[tuple[int, ...], int]:
    return {e: k for k, e in enumerate(_monomials(d, p))}


@lru_cache(maxsize=None)
def macaulay_growth(a: int, d: int, p: int) -> int:
    """Size in degree ``d+1`` of the ideal generated by the first ``a``
    degree-``d`` monomials.

    The multiples of a lex segment form a lex segment again, so the answer
    is one past the largest position reached.
    """
    r = binom_r(d, p)
    if not 0 <= a <= r:
        raise OutOfRange(f"need 0 <= a <= {r}, got {a}")
    if a == 0:
        return 0
    idx = _index(d + 1, p)
    top = 0
    for e in _monomials(d, p)[:a]:
        for v in range(p):
            m = list(e)
            m[v] += 1
            top = max(top, idx[tuple(m)])
    return top + 1


@dataclass(frozen=True)
class LexProfile:
    """Ideal dimensions ``dims[i][d]`` of each component for ``d = 0..c+1``."""

    nvars: int
    ngens: int
    dims: tuple[tuple[int, ...], ...]

    def generators(self, i: int) -> dict[int, list[Monomial]]:
        """Minimal generators of component ``i`` (0-based) by degree."""
        return _component_generators(self.dims[i], self.nvars)


def _as_int(x, what: str) -> int:
    q = Fraction(x)
    if q.denominator != 1:
        raise ValueError(f"{what} must be an integer, got {q}")
    return int(q)


def lex_profile(h: HVector, s: int, p: int) -> LexProfile:
    """Split the lex submodule of ``R^s`` with quotient ``h`` into its components.

    Does not check Macaulay's condition; see :func:`module_o_sequence`.
    """
    if h.is_zero() or h.low < 0:
        raise ValueError("h must be nonzero and supported on [0, c]")
    c = h.degree
    dims = [[] for _ in range(s)]
    for d in range(c + 2):
        r = binom_r(d, p)
        hd = _as_int(h[d], "h-vector coefficient")
        if not 0 <= hd <= s * r:
            raise NotOSequence(f"h_{d} = {hd} outside 0..{s * r}")
        filled = s * r - hd
        for i in range(s):
            dims[i].append(min(max(filled - i * r, 0), r))
    return LexProfile(p, s, tuple(tuple(x) for x in dims))


def _profile_ok(dims: tuple[int, ...], p: int) -> bool:
    return all(macaulay_growth(a, d, p) <= dims[d + 1] for d, a in enumerate(dims[:-1]))


def growth_step_ok(hd: int, hnext: int, d: int, s: int, p: int) -> bool:
    """Can a quotient of ``R^s`` have ``h_d = hd`` and ``h_{d+1} = hnext``?"""
    r, rn = binom_r(d, p), binom_r(d + 1, p)
    if not (0 <= hd <= s * r and 0 <= hnext <= s * rn):
        return False
    filled, filled_next = s * r - hd, s * rn - hnext
    for i in range(s):
        a = min(max(filled - i * r, 0), r)
        b = min(max(filled_next - i * rn, 0), rn)
        if macaulay_growth(a, d, p) > b:
            return False
    return True


def module_o_sequence(h: HVector, s: int, p: int) -> bool:
    """Macaulay's condition for a quotient of ``R^s`` generated in degree 0."""
    try:
        prof = lex_profile(h, s, p)
    except (NotOSequence, ValueError):
        return False
    return all(_profile_ok(dims, p) for dims in set(prof.dims))


@lru_cache(maxsize=None)
def _component_generators(dims: tuple[int, ...], p: int) -> dict[int, list[Monomial]]:
    gens = {}
    prev = 0
    for d, a in enumerate(dims):
        reached = macaulay_growth(prev, d - 1, p) if d else 0
        if a > reached:
            gens[d] = [Monomial(e) for e in _monomials(d, p)[reached:a]]
        prev = a
    return gens


@lru_cache(maxsize=None)
def _component_betti(dims: tuple[int, ...], p: int) -> tuple[tuple[tuple[int, int], int], ...]:
    """Betti numbers of ``R/I`` for the lex ideal with these dimensions."""
    if dims[0]:
        return ()
    table: Counter = Counter({(0, 0): 1})
    for d, gens in _component_generators(dims, p).items():
        for u in gens:
            m = u.max_var
            for k in range(m):
                table[(k + 1, d + k)] += comb(m - 1, k)
    return tuple(sorted(table.items()))


def betti_lex(h: HVector, s: int, p: int) -> BettiDiagram:
    """Betti diagram of ``R^s / L`` for the lex submodule ``L`` with quotient ``h``."""
    if not module_o_sequence(h, s, p):
        raise NotOSequence(f"{h.pretty()} is not attainable for {s} generators in {p} variables")
    prof = lex_profile(h, s, p)
    total: Counter = Counter()
    for dims, mult in Counter(prof.dims).items():
        for pos, v in _component_betti(dims, p):
            total[pos] += mult * v
    return BettiDiagram(p, dict(total))


def stabilizer(h: HVector, s, p: int) -> int:
    """Smallest ``m`` with ``m (s r_d - h_d)`` divisible by ``r_d`` for every ``d``.

    After scaling by ``m`` every component is zero or full in each degree,
    so the lex submodule is a sum of powers of the maximal ideal.
    """
    m = 1
    for d in range(h.degree + 1):
        r = binom_r(d, p)
        q = Fraction(s) * r - Fraction(h[d])
        need = q.denominator * r
        m = lcm(m, need // gcd(q.numerator, need))
    return m


def normalized_betti_lex(h: HVector, s, p: int) -> tuple[int, BettiDiagram]:
    """``(m, betti_lex(m h, m s, p) / m)`` with ``m`` the stabilizer."""
    m = stabilizer(h, s, p)
    ms = _as_int(Fraction(s) * m, "scaled generator count")
    return m, betti_lex(h.scale(m), ms, p).scale(Fraction(1, m))


def exact_cancellable(h: HVector, p: int) -> bool:
    """``beta^lex_{p-1,j} >= beta^lex_{p,j}`` for every ``j`` except ``c + p``."""
    h0 = _as_int(h[0], "h_0")
    B = betti_lex(h, h0, p)
    top = h.degree + p
    rows = set(B.column(p - 1)) | set(B.column(p))
    return all(B[(p - 1, j)] >= B[(p, j)] for j in rows if j != top)


def exact_dual_cancellable(h: HVector, p: int) -> bool:
    return exact_cancellable(h, p) and exact_cancellable(reverse(h), p)

"""Enumerate h-vectors with fixed ends and classify them."""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .diagram import HVector
from .hvec import level_condition, rational_dual_cancellable, reverse, wlp_condition
from .lex import exact_dual_cancellable, growth_step_ok, module_o_sequence
from .pure import binom_r

__all__ = ["FLAGS", "Flags", "CensusReport", "enumerate_candidates", "classify", "run_census"]

FLAGS = ("macaulay_both", "normhvec", "exact_dual_cancellable", "rational_dual_cancellable", "wlp")

# Count of genuinely level h-vectors among the 148, known only from an
# external classification; reported, never computed.
KNOWN_LEVEL_COUNT = 58


@dataclass(frozen=True)
class Flags:
    macaulay_both: bool
    normhvec: bool
    exact_dual_cancellable: bool
    rational_dual_cancellable: bool
    wlp: bool

    def as_dict(self) -> dict[str, bool]:
        return {name: getattr(self, name) for name in FLAGS}


def enumerate_candidates(h0: int, hc: int, c: int, p: int, *, full_degree_one: bool = True) -> list[HVector]:
    """Integer h-vectors with the given ends, positive coefficients, and
    Macaulay's condition for ``h`` (``h0`` generators) and its reverse
    (``hc`` generators).  Sorted lexicographically by coefficients.

    With ``full_degree_one`` (the default) there are no relations in degree
    one, ``h_1 = p h0``, so quotients of a polynomial ring in fewer
    variables are left out.  The rule only applies when ``h_1`` is free,
    that is when ``c >= 2``.
    """
    if h0 < 1 or hc < 1:
        raise ValueError("h0 and hc must be positive")
    if c == 0:
        if h0 != hc:
            return []
        h = HVector([h0])
        return [h] if module_o_sequence(h, h0, p) else []

    found = []

    def extend(prefix: list[int]) -> None:
        d = len(prefix) - 1
        if d == c - 1:
            if growth_step_ok(prefix[-1], hc, d, h0, p):
                found.append(prefix + [hc])
            return
        hi = h0 * binom_r(d + 1, p)
        lo = hi if d == 0 and full_degree_one else 1
        for x in range(lo, hi + 1):
            if growth_step_ok(prefix[-1], x, d, h0, p):
                extend(prefix + [x])

    extend([h0])
    out = []
    for coeffs in found:
        h = HVector(coeffs)
        if module_o_sequence(h, h0, p) and module_o_sequence(reverse(h), hc, p):
            out.append(h)
    return out


def classify(h: HVector, p: int) -> Flags:
    h0, hc = int(h[0]), int(h[h.degree])
    both = module_o_sequence(h, h0, p) and module_o_sequence(reverse(h), hc, p)
    return Flags(
        macaulay_both=both,
        normhvec=level_condition(h, p).passed,
        exact_dual_cancellable=both and exact_dual_cancellable(h, p),
        rational_dual_cancellable=rational_dual_cancellable(h, p),
        wlp=wlp_condition(h, p).passed,
    )


@dataclass(frozen=True)
class CensusReport:
    h0: int
    hc: int
    socle_degree: int
    nvars: int
    rows: tuple[tuple[HVector, Flags], ...] = field(default_factory=tuple)
    full_degree_one: bool = True

    @property
    def total(self) -> int:
        return len(self.rows)

    def members(self, flag: str) -> list[HVector]:
        return [h for h, f in self.rows if getattr(f, flag)]

    def counts(self) -> dict[str, int]:
        out = {"total": self.total}
        out.update({name: len(self.members(name)) for name in FLAGS})
        return out

    def exact_not_normhvec(self) -> list[HVector]:
        return [h for h, f in self.rows if f.exact_dual_cancellable and not f.normhvec]

    def normhvec_not_exact(self) -> list[HVector]:
        return [h for h, f in self.rows if f.normhvec and not f.exact_dual_cancellable]


def _thread_count() -> int:
    raw = os.environ.get("LEVELCONE_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, min(n, os.cpu_count() or 1))


def run_census(h0: int, hc: int, c: int, p: int, *, full_degree_one: bool = True) -> CensusReport:
    cands = enumerate_candidates(h0, hc, c, p, full_degree_one=full_degree_one)
    threads = _thread_count()
    if threads > 1 and len(cands) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            flags = list(pool.map(lambda h: classify(h, p), cands))
    else:
        flags = [classify(h, p) for h in cands]
    return CensusReport(h0, hc, c, p, tuple(zip(cands, flags)), full_degree_one)

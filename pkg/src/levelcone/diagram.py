"""Betti diagrams and h-vectors as free-standing numerical objects.

A diagram of codimension ``p`` is a finitely supported map ``(i, j) -> q``
with ``0 <= i <= p``; column ``i`` is the homological degree and ``j`` the
absolute internal degree.  Its S-polynomial is ``sum (-1)^i D[i,j] t^j`` and
it is a *diagram* in the strict sense when that polynomial is divisible by
``(1-t)^p``; the quotient is the h-vector.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction

from .errors import DivisionBySharedShift, EmptyColumn, NoConsistentFill, NotDivisible, NotSingleEntry
from .rational import as_rational

__all__ = [
    "HVector",
    "BettiDiagram",
    "s_polynomial",
    "hvector_of",
    "multiplicity",
    "dual_flip",
    "shifts",
    "phi",
    "phi_inverse",
]


class HVector:
    """A Laurent polynomial in ``t`` with exact rational coefficients.

    Build it from a mapping ``{degree: coeff}`` or from a sequence, which is
    read as the coefficients of ``t^0, t^1, ...``.  Zero coefficients are
    dropped, so equality is structural.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping | Iterable = ()):
        if isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = enumerate(coeffs)
        store = {}
        for k, v in items:
            if isinstance(k, bool) or not isinstance(k, int):
                raise TypeError(f"degree must be an int, got {k!r}")
            q = as_rational(v)
            if q:
                store[k] = store.get(k, Fraction(0)) + q
                if not store[k]:
                    del store[k]
        self._coeffs = dict(sorted(store.items()))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "HVector":
        return cls({degree: coeff})

    # -- access -----------------------------------------------------------
    def __getitem__(self, degree: int) -> Fraction:
        return self._coeffs.get(degree, Fraction(0))

    def items(self):
        return self._coeffs.items()

    def support(self) -> list[int]:
        return list(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int:
        """Top degree ``c``; raises on the zero polynomial."""
        if not self._coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self._coeffs)

    @property
    def low(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no low degree")
        return min(self._coeffs)

    def coefficients(self, start: int = 0, stop: int | None = None) -> list[Fraction]:
        """Dense coefficient list on ``[start, stop]`` (default ``[0, degree]``)."""
        if stop is None:
            stop = self.degree if self._coeffs else start - 1
        return [self[k] for k in range(start, stop + 1)]

    def at_one(self) -> Fraction:
        return sum(self._coeffs.values(), Fraction(0))

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self._coeffs.values())

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: "HVector") -> "HVector":
        out = dict(self._coeffs)
        for k, v in other.items():
            out[k] = out.get(k, Fraction(0)) + v
        return HVector(out)

    def __neg__(self) -> "HVector":
        return HVector({k: -v for k, v in self.items()})

    def __sub__(self, other: "HVector") -> "HVector":
        return self + (-other)

    def scale(self, factor) -> "HVector":
        q = as_rational(factor)
        return HVector({k: q * v for k, v in self.items()})

    def __mul__(self, other):
        if isinstance(other, HVector):
            out: dict[int, Fraction] = {}
            for a, x in self.items():
                for b, y in other.items():
                    out[a + b] = out.get(a + b, Fraction(0)) + x * y
            return HVector(out)
        return self.scale(other)

    __rmul__ = __mul__

    def shift(self, k: int) -> "HVector":
        """Multiply by ``t^k``."""
        return HVector({d + k: v for d, v in self.items()})

    def times_one_minus_t(self, power: int = 1) -> "HVector":
        out = self
        for _ in range(power):
            out = out - out.shift(1)
        return out

    def divide_one_minus_t(self, power: int = 1) -> "HVector":
        """Exact synthetic division by ``(1-t)^power``.

        Raises NotDivisible at the first nonzero remainder.
        """
        out = self
        for step in range(power):
            if out.is_zero():
                return out
            if out.at_one() != 0:
                raise NotDivisible(f"(1-t)^{step + 1} does not divide the polynomial")
            # q = S/(1-t) has q_k = S_low + ... + S_k
            acc = Fraction(0)
            quotient = {}
            for k in range(out.low, out.degree):
                acc += out[k]
                quotient[k] = acc
            out = HVector(quotient)
        return out

    # -- dunder plumbing --------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, HVector):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._coeffs.items()))

    def __repr__(self) -> str:
        if not self._coeffs:
            return "HVector(0)"
        return f"HVector({self.pretty()})"

    def pretty(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k, v in self.items():
            if k == 0:
                mono = ""
            elif k == 1:
                mono = "t"
            else:
                mono = f"t^{k}"
            mag = abs(v)
            coeff = str(mag) if (mag != 1 or not mono) else ""
            if coeff and mono:
                coeff += "*"
            sign = "-" if v < 0 else "+"
            parts.append((sign, coeff + mono))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


class BettiDiagram:
    """Sparse diagram ``(column, row) -> Fraction`` of codimension ``codim``.

    Entries may be negative (intermediate results are allowed to be); zero
    entries are never stored.
    """

    __slots__ = ("codim", "_entries")

    def __init__(self, codim: int, entries: Mapping | Iterable = ()):
        if isinstance(codim, bool) or not isinstance(codim, int) or codim < 0:
            raise ValueError(f"codim must be a nonnegative int, got {codim!r}")
        self.codim = codim
        if isinstance(entries, Mapping):
            items = entries.items()
        else:
            items = (((i, j), v) for i, j, v in entries)
        store: dict[tuple[int, int], Fraction] = {}
        for (i, j), v in items:
            if not (isinstance(i, int) and isinstance(j, int)):
                raise TypeError(f"positions must be ints, got {(i, j)!r}")
            if not 0 <= i <= codim:
                raise ValueError(f"column {i} outside 0..{codim}")
            q = as_rational(v)
            total = store.get((i, j), Fraction(0)) + q
            if total:
                store[(i, j)] = total
            else:
                store.pop((i, j), None)
        self._entries = dict(sorted(store.items()))

    @classmethod
    def zero(cls, codim: int) -> "BettiDiagram":
        return cls(codim, {})

    # -- access -----------------------------------------------------------
    def __getitem__(self, pos: tuple[int, int]) -> Fraction:
        return self._entries.get(pos, Fraction(0))

    def items(self):
        return self._entries.items()

    def __iter__(self):
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def column(self, i: int) -> dict[int, Fraction]:
        return {j: v for (k, j), v in self._entries.items() if k == i}

    def rows(self) -> list[int]:
        return sorted({j for _, j in self._entries})

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self._entries.values())

    def dominates(self, other: "BettiDiagram") -> bool:
        """True when ``self >= other`` entry by entry."""
        keys = set(self._entries) | set(other._entries)
        return all(self[k] >= other[k] for k in keys)

    # -- arithmetic -------------------------------------------------------
    def _check_codim(self, other: "BettiDiagram") -> None:
        if self.codim != other.codim:
            raise ValueError(f"codim mismatch: {self.codim} vs {other.codim}")

    def __add__(self, other: "BettiDiagram") -> "BettiDiagram":
        self._check_codim(other)
        out = dict(self._entries)
        for k, v in other.items():
            out[k] = out.get(k, Fraction(0)) + v
        return BettiDiagram(self.codim, out)

    def __neg__(self) -> "BettiDiagram":
        return BettiDiagram(self.codim, {k: -v for k, v in self.items()})

    def __sub__(self, other: "BettiDiagram") -> "BettiDiagram":
        return self + (-other)

    def scale(self, factor) -> "BettiDiagram":
        q = as_rational(factor)
        return BettiDiagram(self.codim, {k: q * v for k, v in self.items()})

    def __mul__(self, factor) -> "BettiDiagram":
        return self.scale(factor)

    __rmul__ = __mul__

    def translate(self, k: int) -> "BettiDiagram":
        """Shift every row by ``k`` (twist by ``-k``)."""
        return BettiDiagram(self.codim, {(i, j + k): v for (i, j), v in self.items()})

    # -- dunder plumbing --------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, BettiDiagram):
            return self.codim == other.codim and self._entries == other._entries
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.codim, tuple(self._entries.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"({i},{j}): {v}" for (i, j), v in self.items())
        return f"BettiDiagram(codim={self.codim}, {{{body}}})"


def s_polynomial(D: BettiDiagram) -> HVector:
    out: dict[int, Fraction] = {}
    for (i, j), v in D.items():
        out[j] = out.get(j, Fraction(0)) + (v if i % 2 == 0 else -v)
    return HVector(out)


def hvector_of(D: BettiDiagram) -> HVector:
    return s_polynomial(D).divide_one_minus_t(D.codim)


def multiplicity(D: BettiDiagram) -> Fraction:
    return hvector_of(D).at_one()


def dual_flip(D: BettiDiagram, shift: int = 0) -> BettiDiagram:
    """``D'[i, j] = D[p - i, p + shift - j]``; ``shift=0`` is the plain dual."""
    p = D.codim
    return BettiDiagram(p, {(p - i, p + shift - j): v for (i, j), v in D.items()})


def shifts(D: BettiDiagram) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Minimal and maximal shifts, one per column."""
    lo, hi = [], []
    for i in range(D.codim + 1):
        col = D.column(i)
        if not col:
            raise EmptyColumn(i)
        lo.append(min(col))
        hi.append(max(col))
    return tuple(lo), tuple(hi)


def _single_entry_row(D: BettiDiagram, k: int) -> int:
    col = D.column(k)
    if len(col) != 1:
        raise NotSingleEntry(k)
    (row,) = col
    return row


def phi(D: BettiDiagram, k: int) -> BettiDiagram:
    """Drop column ``k`` (which must hold a single entry at row ``dk``),
    weighting every remaining entry by ``|dk - j|``."""
    if not 0 <= k <= D.codim or D.codim == 0:
        raise ValueError(f"column {k} not removable from codim {D.codim}")
    dk = _single_entry_row(D, k)
    out = {}
    for (i, j), v in D.items():
        if i == k:
            continue
        out[(i if i < k else i - 1, j)] = abs(dk - j) * v
    return BettiDiagram(D.codim - 1, out)


def phi_inverse(D: BettiDiagram, k: int, dk: int) -> BettiDiagram:
    """Inverse of :func:`phi` for a column reinserted at ``(k, dk)``.

    The reinserted value is the unique one making the S-polynomial vanish
    at ``t = 1``; divisibility by the full power of ``(1-t)`` then follows
    whenever the input is itself a diagram, and is checked.
    """
    p = D.codim + 1
    if not 0 <= k <= p:
        raise ValueError(f"column {k} outside 0..{p}")
    out = {}
    for (i, j), v in D.items():
        if j == dk:
            raise DivisionBySharedShift(f"entry at ({i},{j}) shares the row {dk} of the reinserted column")
        out[(i if i < k else i + 1, j)] = v / abs(dk - j)
    partial = BettiDiagram(p, out)
    signed = s_polynomial(partial).at_one()
    fill = -signed if k % 2 == 0 else signed
    if fill == 0:
        raise NoConsistentFill("reinserted column would be empty")
    result = partial + BettiDiagram(p, {(k, dk): fill})
    try:
        hvector_of(result)
    except NotDivisible:
        raise NoConsistentFill(f"no value at ({k},{dk}) makes the result a codim-{p} diagram") from None
    return result

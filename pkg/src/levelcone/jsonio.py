"""JSON wire formats and the text renderer.

Every number is an exact string ``"num/den"``.  Formats::

    diagram      {"codim": p, "entries": [[i, j, "n/d"], ...]}
    h-vector     {"coeffs": {"deg": "n/d", ...}}
    pure combo   {"codim": p, "terms": [{"coeff": "n/d", "type": [d0, ...]}, ...]}
    certificate  {"amounts": [[k, l, "n/d"], ...]}
"""
from __future__ import annotations

import json
from fractions import Fraction

from .cancellation import CancellationCertificate
from .diagram import BettiDiagram, HVector
from .pure import PureCombo
from .rational import format_rational, parse_rational, pretty_rational

__all__ = [
    "diagram_to_json",
    "diagram_from_json",
    "hvector_to_json",
    "hvector_from_json",
    "combo_to_json",
    "combo_from_json",
    "certificate_to_json",
    "certificate_from_json",
    "loads",
    "render_diagram",
]


def _num(x) -> Fraction:
    if isinstance(x, bool):
        raise ValueError("booleans are not numbers here")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise ValueError(f"expected an exact rational string, got {x!r}")


def _int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ValueError(f"expected an integer, got {x!r}")
    return x


def loads(text: str):
    """``json.loads`` that turns parse failures into ValueError."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON: {exc}") from None


def diagram_to_json(D: BettiDiagram) -> dict:
    return {"codim": D.codim, "entries": [[i, j, format_rational(v)] for (i, j), v in sorted(D.items())]}


def diagram_from_json(obj) -> BettiDiagram:
    if not isinstance(obj, dict) or "codim" not in obj or "entries" not in obj:
        raise ValueError("diagram needs 'codim' and 'entries'")
    entries = []
    for item in obj["entries"]:
        if not isinstance(item, list) or len(item) != 3:
            raise ValueError(f"bad diagram entry {item!r}")
        entries.append((_int(item[0]), _int(item[1]), _num(item[2])))
    return BettiDiagram(_int(obj["codim"]), entries)


def hvector_to_json(h: HVector) -> dict:
    return {"coeffs": {str(d): format_rational(v) for d, v in h.items()}}


def hvector_from_json(obj) -> HVector:
    if isinstance(obj, list):
        return HVector([_num(x) for x in obj])
    if not isinstance(obj, dict) or not isinstance(obj.get("coeffs"), dict):
        raise ValueError("h-vector needs a 'coeffs' object")
    coeffs = {}
    for k, v in obj["coeffs"].items():
        try:
            d = int(k)
        except ValueError:
            raise ValueError(f"bad degree {k!r}") from None
        coeffs[d] = _num(v)
    return HVector(coeffs)


def combo_to_json(combo: PureCombo) -> dict:
    return {
        "codim": combo.codim,
        "terms": [{"coeff": format_rational(q), "type": list(d)} for q, d in combo.terms],
    }


def combo_from_json(obj) -> PureCombo:
    if not isinstance(obj, dict) or "codim" not in obj or "terms" not in obj:
        raise ValueError("pure combination needs 'codim' and 'terms'")
    terms = []
    for t in obj["terms"]:
        if not isinstance(t, dict) or "coeff" not in t or "type" not in t:
            raise ValueError(f"bad term {t!r}")
        terms.append((_num(t["coeff"]), tuple(_int(x) for x in t["type"])))
    return PureCombo.build(_int(obj["codim"]), terms)


def certificate_to_json(cert: CancellationCertificate) -> dict:
    return {"amounts": [[k, l, format_rational(b)] for (k, l), b in sorted(cert.amounts.items())]}


def certificate_from_json(obj) -> CancellationCertificate:
    if not isinstance(obj, dict) or not isinstance(obj.get("amounts"), list):
        raise ValueError("certificate needs an 'amounts' list")
    triples = []
    for item in obj["amounts"]:
        if not isinstance(item, list) or len(item) != 3:
            raise ValueError(f"bad amount {item!r}")
        triples.append((_int(item[0]), _int(item[1]), _num(item[2])))
    return CancellationCertificate.from_triples(triples)


def render_diagram(D: BettiDiagram) -> str:
    """Grid with column ``i`` and row ``j - i``; zeros shown as ``-``."""
    p = D.codim
    if D.is_zero():
        return " ".join("-" for _ in range(p + 1))
    offsets = [j - i for (i, j), _ in D.items()]
    lo, hi = min(offsets), max(offsets)
    cells = [
        [pretty_rational(D[(i, r + i)]) if D[(i, r + i)] else "-" for i in range(p + 1)]
        for r in range(lo, hi + 1)
    ]
    width = [max(len(row[i]) for row in cells) for i in range(p + 1)]
    return "\n".join(" ".join(cell.rjust(w) for cell, w in zip(row, width)) for row in cells)

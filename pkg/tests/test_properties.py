from fractions import Fraction

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from levelcone import (
    HVector,
    PureCombo,
    dual_flip,
    hvector_of,
    max_betti_combo,
    module_o_sequence,
    multiplicity,
    normalized_betti_lex,
    rational_cancellable,
    s_polynomial,
    zanello_check,
)
from levelcone.errors import NotModuleHVector

SETTINGS = settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])

positive = st.builds(Fraction, st.integers(1, 12), st.integers(1, 6))


@st.composite
def pure_types(draw, p):
    out = [draw(st.integers(0, 2))]
    for _ in range(p):
        out.append(out[-1] + draw(st.integers(1, 4)))
    return tuple(out)


@st.composite
def combos(draw):
    p = draw(st.integers(1, 4))
    return PureCombo.build(p, draw(st.lists(st.tuples(positive, pure_types(p)), min_size=1, max_size=4)))


@st.composite
def o_sequences(draw):
    h = [1]
    for d in range(draw(st.integers(1, 5))):
        nxt = draw(st.integers(1, 12))
        if not module_o_sequence(HVector(h + [nxt]), 1, 3):
            break
        h.append(nxt)
    return HVector(h)


@SETTINGS
@given(combos(), st.integers(8, 20))
def test_dual_flip_keeps_multiplicity(pc, shift):
    D = pc.diagram()
    assert multiplicity(dual_flip(D, shift)) == multiplicity(D)


@SETTINGS
@given(combos(), combos(), positive)
def test_s_polynomial_linear(a, b, x):
    assume(a.diagram().codim == b.diagram().codim)
    A, B = a.diagram(), b.diagram()
    assert s_polynomial(A.scale(x) + B) == s_polynomial(A).scale(x) + s_polynomial(B)


@SETTINGS
@given(st.lists(st.integers(1, 20), min_size=1, max_size=7))
def test_zanello_ordered(coeffs):
    b = zanello_check(HVector(coeffs))
    assert b.lower <= b.upper


@settings(max_examples=50, deadline=None)
@given(o_sequences())
def test_lex_stabilizer_matches_combination(h):
    m, N = normalized_betti_lex(h, 1, 3)
    try:
        _, D = max_betti_combo(h, 3)
    except NotModuleHVector:
        return
    assert N == D
    assert hvector_of(N) == h


@SETTINGS
@given(st.lists(st.integers(1, 20), min_size=2, max_size=6), st.integers(1, 5))
def test_cancellable_scale_invariant(coeffs, k):
    h = HVector(coeffs)
    assert rational_cancellable(h, 3).passed == rational_cancellable(h.scale(k), 3).passed

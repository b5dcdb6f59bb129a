from fractions import Fraction

import pytest

from levelcone import (
    BettiDiagram,
    CancellationCertificate,
    HVector,
    apply_cancellations,
    cancellation_certificate,
    delta3,
    hvector_of,
    maximal_cancellation_level,
    zanello_indices,
)
from levelcone.errors import NegativeEntry, NoSignChange, NotACancellation, NotLevelShape

from helpers import H_LOW, KOSZUL3, LOW_B, LOW_D, NONLEVEL_B, NONLEVEL_D

LOW_CERT = CancellationCertificate({(1, 3): 25, (2, 4): Fraction(75, 2), (2, 5): 15})


def test_empty_certificate():
    assert apply_cancellations(LOW_D, CancellationCertificate()) == LOW_D
    assert len(cancellation_certificate(LOW_D, LOW_D)) == 0


def test_low_example_apply():
    assert apply_cancellations(LOW_D, LOW_CERT) == LOW_B


def test_low_example_recover():
    assert cancellation_certificate(LOW_D, LOW_B) == LOW_CERT


def test_nonlevel_example_recover():
    cert = cancellation_certificate(NONLEVEL_D, NONLEVEL_B)
    assert cert == CancellationCertificate({(1, 3): 15, (1, 4): Fraction(45, 2), (2, 5): 9})


def test_negative():
    with pytest.raises(NegativeEntry):
        apply_cancellations(KOSZUL3, CancellationCertificate({(0, 0): 2}))
    with pytest.raises(ValueError):
        CancellationCertificate({(0, 0): -1})


def test_not_a_cancellation():
    with pytest.raises(NotACancellation):
        cancellation_certificate(KOSZUL3, BettiDiagram.zero(3))
    with pytest.raises(NotACancellation):
        cancellation_certificate(LOW_B, LOW_D)


def test_from_triples_merges():
    cert = CancellationCertificate.from_triples([(1, 3, 10), (1, 3, 15), (2, 4, "75/2"), (2, 5, 15)])
    assert cert == LOW_CERT


def test_delta3():
    assert delta3(H_LOW) == HVector([16, 0, -75, 75, -15, 9, -10])


class TestMaximal:
    def test_low(self):
        D = maximal_cancellation_level(H_LOW)
        assert D == LOW_B

    def test_koszul(self):
        assert maximal_cancellation_level(HVector([1])) == KOSZUL3

    def test_cube(self):
        D = maximal_cancellation_level(HVector([1, 3, 3, 1]))
        assert D == BettiDiagram(3, {(0, 0): 1, (1, 2): 3, (2, 4): 3, (3, 6): 1})

    def test_no_further_cancellation(self):
        for h in (H_LOW, HVector([1, 3, 5, 7, 6, 6, 2]), HVector([1, 3, 6, 7, 9])):
            D = maximal_cancellation_level(h)
            assert hvector_of(D) == h
            for j in D.rows():
                assert min(D[(1, j)], D[(2, j)]) == 0
                if j != h.degree + 3:
                    assert min(D[(2, j)], D[(3, j)]) == 0

    def test_rejects(self):
        with pytest.raises(NotLevelShape):
            maximal_cancellation_level(HVector([1, -2]))  # socle entry would be negative
        with pytest.raises(NotLevelShape):
            maximal_cancellation_level(HVector({1: 1}))
        with pytest.raises(ValueError):
            maximal_cancellation_level(HVector([1]), p=2)


class TestZanelloIndices:
    @pytest.mark.parametrize(
        "h, expected",
        [
            (H_LOW, (2, 3, 4, 5)),
            (HVector([1, 3, 3, 1]), (2, 4, 2, 4)),
            (HVector([1]), (1, 2, 1, 2)),
        ],
    )
    def test_examples(self, h, expected):
        assert zanello_indices(h) == expected

    def test_no_sign_change(self):
        with pytest.raises(NoSignChange):
            zanello_indices(HVector([]))

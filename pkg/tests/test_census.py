import pytest

from levelcone import HVector, classify, enumerate_candidates, module_o_sequence, reverse, run_census
from levelcone.census import FLAGS

THREE_MORE = [
    HVector([1, 3, 5, 6, 4, 3]),
    HVector([1, 3, 6, 6, 4, 3]),
    HVector([1, 3, 6, 10, 7, 6]),
]


def test_trivial():
    assert enumerate_candidates(1, 1, 0, 3) == [HVector([1])]
    rep = run_census(1, 1, 0, 3)
    assert rep.total == 1
    assert all(rep.rows[0][1].as_dict().values())


def test_small_against_brute_force():
    # c = 1: the only free coefficient is the fixed end itself
    assert enumerate_candidates(1, 2, 1, 3) == [HVector([1, 2])]
    assert enumerate_candidates(1, 2, 1, 3, full_degree_one=False) == [HVector([1, 2])]
    # c = 3: brute force every middle pair through both growth checks
    brute = []
    for h1 in range(1, 4):
        for h2 in range(1, 7):
            h = HVector([1, h1, h2, 2])
            if module_o_sequence(h, 1, 3) and module_o_sequence(reverse(h), 2, 3):
                brute.append(h)
    assert enumerate_candidates(1, 2, 3, 3, full_degree_one=False) == brute
    assert enumerate_candidates(1, 2, 3, 3) == [h for h in brute if h[1] == 3]


def test_classify_examples():
    f = classify(HVector([1, 3, 4, 5, 6, 4, 2]), 3)
    assert f.normhvec
    f = classify(HVector([1, 3, 6, 10, 7, 6, 2]), 3)
    assert f.exact_dual_cancellable and not f.normhvec
    f = classify(HVector([1, 3, 6, 6, 7]), 3)
    assert f.normhvec and not f.exact_dual_cancellable


@pytest.mark.parametrize("h", THREE_MORE)
def test_three_more(h):
    f = classify(h, 3)
    assert f.exact_dual_cancellable and not f.normhvec


def test_census_invariants():
    rep = run_census(1, 2, 6, 3)
    for h, f in rep.rows:
        assert f.macaulay_both
        if f.normhvec:
            assert f.rational_dual_cancellable and f.exact_dual_cancellable
        if f.wlp:
            assert f.normhvec
    counts = rep.counts()
    assert counts["total"] == len(rep.rows)
    for name in FLAGS:
        assert counts[name] == sum(getattr(f, name) for _, f in rep.rows)


def test_relaxed_rule_counts_reported():
    strict = run_census(1, 2, 6, 3).counts()
    relaxed = run_census(1, 2, 6, 3, full_degree_one=False).counts()
    assert relaxed["total"] > strict["total"]
    for name in FLAGS:
        assert relaxed[name] >= strict[name]


def test_thread_count_deterministic(monkeypatch):
    serial = run_census(1, 2, 5, 3)
    monkeypatch.setenv("LEVELCONE_THREADS", "4")
    parallel = run_census(1, 2, 5, 3)
    assert serial.rows == parallel.rows

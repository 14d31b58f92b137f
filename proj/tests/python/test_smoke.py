import math

import pytest

import kmatch


def test_counts():
    assert kmatch.g_count(9, 3, 2, 3) == 14
    assert kmatch.binomial(128, 64) == math.comb(128, 64)
    assert kmatch.b_family_size(5, 3, 2, 1) == 4
    assert kmatch.frankl_family_size(9, 3, 2, 3, 1) == 8
    assert kmatch.g_recurrence_check(9, 3, 2, 3)
    assert not kmatch.g_recurrence_check(7, 2, 1, 3)


def test_construct_and_nu():
    h = kmatch.construct("complete", 6, 3)
    assert len(h["edges"]) == 20
    result = kmatch.nu(h, 2)
    assert result["nu"] == 4
    assert kmatch.is_k_matching(h, result["witness"], 2)
    assert kmatch.decide(kmatch.construct("complete", 5, 3), 2, 3) is None
    assert len(kmatch.greedy(h, 2)) >= 1
    f = kmatch.construct("general", 8, 4, k=2, i=0, blocks=[[1, 2], [3, 4]])
    assert len(f["edges"]) == 29


def test_shifting():
    h = {"n": 3, "r": 2, "edges": [[1, 2]]}
    assert kmatch.shift(h, 1, 3)["edges"] == [[2, 3]]
    assert not kmatch.is_stable(h)
    stab = kmatch.stabilize(h)
    assert kmatch.is_stable(stab["hypergraph"])


def test_coupling_and_extremal():
    report = kmatch.verify_coupling(6, 3, 2, 0, [[1, 2], [2, 3]])
    assert report["consistent"] and report["sizeT"] == 7 and report["sizeTstar"] == 8
    assert kmatch.disjointify(9, 3, 2, 0, [[1, 2], [2, 3]])["trace"] == [13, 14]
    assert kmatch.extremal_number(7, 2, 1, 3)["value"] == 11
    check = kmatch.check_conjecture(9, 3, 2, 3)
    assert check["exact_value"] is None and check["feasible_max"] == 14
    assert kmatch.theorem3_threshold(3, 2, 2) == 216
    assert kmatch.verify_theorem3_inequalities(3, 2, 2, 216)["all_hold"]


def test_errors():
    with pytest.raises(ValueError):
        kmatch.g_count(9, 3, 4, 3)
    with pytest.raises(kmatch.FormatError):
        kmatch.nu({"n": 3, "r": 2, "edges": [[1, 2], [1, 2]]}, 1)
    with pytest.raises(kmatch.ResourceError):
        kmatch.nu(kmatch.construct("complete", 9, 4), 2, budget=3)

"""Tests for signatures, star operators, classifications, odd reflections."""

import pytest

from supercrystals import crystal
from supercrystals.weights import build_context, eps, weight_add, weight_sub

PAPER_PARITIES = (1, 1, 0, 0, 0)
PAPER_LAM = (1, -1, 1, 7, 5)


def paper_ctx(p=3):
    return build_context(3, 2, PAPER_PARITIES, p)


def test_signatures_worked_example():
    ctx = paper_ctx()
    assert str(crystal.r_signature(ctx, PAPER_LAM, 0)) == "++-++"
    assert str(crystal.r_signature(ctx, PAPER_LAM, 1)) == "--+00"
    assert str(crystal.r_signature(ctx, PAPER_LAM, 2)) == "000--"


def test_reduced_signatures_worked_example():
    ctx = paper_ctx()
    assert str(crystal.reduced_signature(ctx, PAPER_LAM, 0)) == "++00+"
    assert str(crystal.reduced_signature(ctx, PAPER_LAM, 1)) == "-0000"
    assert str(crystal.reduced_signature(ctx, PAPER_LAM, 2)) == "000--"


def test_reduce_signature_idempotent():
    ctx = paper_ctx()
    for r in range(3):
        red = crystal.reduced_signature(ctx, PAPER_LAM, r)
        again = crystal.reduce_signature(red)
        assert str(again) == str(red)
        raw = crystal.r_signature(ctx, PAPER_LAM, r)
        assert raw.count("+") - raw.count("-") == red.count("+") - red.count("-")


def test_star_operators_worked_example():
    ctx = paper_ctx()
    # 1 is 1-good: e*_1 removes eps_1
    assert crystal.e_star(ctx, PAPER_LAM, 1) == weight_sub(PAPER_LAM, eps(ctx, 1))
    # 4 is 2-good: e*_2 removes eps_4
    assert crystal.e_star(ctx, PAPER_LAM, 2) == weight_sub(PAPER_LAM, eps(ctx, 4))
    # 5 is 0-cogood: f*_0 adds eps_5
    assert crystal.f_star(ctx, PAPER_LAM, 0) == weight_add(PAPER_LAM, eps(ctx, 5))
    # no plus in the reduced 2-signature, so f*_2 is undefined
    assert crystal.f_star(ctx, PAPER_LAM, 2) is None
    # no minus in the reduced 0-signature... there are none, e*_0 undefined
    assert crystal.e_star(ctx, PAPER_LAM, 0) is None


def test_counters_worked_example():
    ctx = paper_ctx()
    assert crystal.eps_phi_star(ctx, PAPER_LAM, 0) == (0, 3)
    assert crystal.eps_phi_star(ctx, PAPER_LAM, 1) == (1, 0)
    assert crystal.eps_phi_star(ctx, PAPER_LAM, 2) == (2, 0)


def test_classify_worked_example():
    ctx = paper_ctx()
    assert crystal.classify_index(ctx, PAPER_LAM, 1, 1).kind == "good"
    assert crystal.classify_index(ctx, PAPER_LAM, 4, 2).kind == "good"
    assert crystal.classify_index(ctx, PAPER_LAM, 5, 2).kind == "normal"
    assert crystal.classify_index(ctx, PAPER_LAM, 1, 0).kind == "conormal"
    assert crystal.classify_index(ctx, PAPER_LAM, 2, 0).kind == "conormal"
    assert crystal.classify_index(ctx, PAPER_LAM, 5, 0).kind == "cogood"


def test_bc_sets_worked_example():
    ctx = paper_ctx()
    c_set, b_set = crystal.bc_sets(ctx, PAPER_LAM, 1, 5)
    assert c_set == {2} and b_set == {2}


def test_c_scalar_is_residue_difference():
    ctx = paper_ctx()
    from supercrystals.weights import residues, residues_up

    down = residues(ctx, PAPER_LAM)
    up = residues_up(ctx, PAPER_LAM)
    for i in range(1, 6):
        for j in range(i + 1, 6):
            assert crystal.c_scalar(ctx, PAPER_LAM, i, j) == down[i - 1] - down[j - 1]
    for i in range(1, 5):
        assert crystal.b_scalar(ctx, PAPER_LAM, i, i) == down[i - 1] - up[i]


def test_downarrow():
    assert crystal.downarrow({2}, {1})
    assert not crystal.downarrow({1}, {2})
    assert crystal.downarrow({1, 3}, {1, 3})
    assert crystal.downarrow(set(), {4})
    assert not crystal.downarrow({4}, set())


def test_matching_criteria_agree_with_signatures():
    ctx = paper_ctx()
    for i in range(1, 6):
        from supercrystals.weights import residue_int

        r = residue_int(ctx, PAPER_LAM, i)
        cls = crystal.classify_index(ctx, PAPER_LAM, i, r)
        assert crystal.normal_by_matching(ctx, PAPER_LAM, i) == cls.is_normal
        assert crystal.good_by_matching(ctx, PAPER_LAM, i) == (cls.kind == "good")


def test_odd_reflection_worked_example():
    ctx = paper_ctx()
    octx, olam = crystal.s_i_map(ctx, PAPER_LAM, 2)
    assert octx.parities == (1, 0, 1, 0, 0)
    assert olam == (1, 1, -1, 7, 5)
    with pytest.raises(ValueError):
        crystal.s_i_map(ctx, PAPER_LAM, 3)  # both parities even


def test_odd_reflection_nonzero_pairing():
    ctx = build_context(1, 1, (0, 1), 0)
    octx, olam = crystal.s_i_map(ctx, (1, 0), 1)
    assert octx.parities == (1, 0)
    assert olam == (1, 0)


def test_conormal_via_flip_agrees_with_classify():
    ctx = paper_ctx()
    for i in range(1, 6):
        for r in range(3):
            direct = crystal.classify_index(ctx, PAPER_LAM, i, r).is_conormal
            assert crystal.conormal_via_flip(ctx, PAPER_LAM, i, r) == direct

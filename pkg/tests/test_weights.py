"""Tests for the weight lattice: contexts, residues, flips, parsing."""

import pytest

from supercrystals.weights import (
    ContextError,
    build_context,
    dominance_leq,
    eps,
    flip_map,
    form_pair,
    iter_window,
    length,
    parse_weight,
    residue_int,
    residues,
    residues_up,
    weight_add,
    weight_sub,
)

PAPER_PARITIES = (1, 1, 0, 0, 0)
PAPER_LAM = (1, -1, 1, 7, 5)


def paper_ctx(p=3):
    return build_context(3, 2, PAPER_PARITIES, p)


def test_build_context_basic():
    ctx = paper_ctx()
    assert ctx.rank == 5
    assert ctx.m == 3 and ctx.n == 2
    assert [ctx.sign(i) for i in range(1, 6)] == [-1, -1, 1, 1, 1]
    assert [ctx.parity(i) for i in range(1, 6)] == [1, 1, 0, 0, 0]


def test_build_context_rejects_composite_characteristic():
    for p in (4, 6, 9, 15):
        with pytest.raises(ContextError):
            build_context(1, 1, (0, 1), p)


def test_build_context_rejects_mismatched_parities():
    with pytest.raises(ContextError):
        build_context(2, 1, (0, 1, 1), 0)  # two odd entries, n says one


def test_congruence_and_reduce():
    ctx = paper_ctx(3)
    assert ctx.reduce(8) == 2
    assert ctx.congruent(8, 2) and not ctx.congruent(8, 1)
    ctx0 = paper_ctx(0)
    assert ctx0.reduce(8) == 8
    assert ctx0.congruent(5, 5) and not ctx0.congruent(5, 2)


def test_residues_worked_example():
    ctx = paper_ctx()
    down = residues(ctx, PAPER_LAM)
    assert down == (1, 4, 3, 8, 5)
    assert tuple(v % 3 for v in down) == (1, 1, 0, 2, 2)
    # residue of lam + eps_i shifts by the sign of the position
    up = residues_up(ctx, PAPER_LAM)
    assert up == tuple(d + ctx.sign(i + 1) for i, d in enumerate(down))


def test_residue_int_matches_residues():
    ctx = paper_ctx()
    for j in range(1, 6):
        assert residue_int(ctx, PAPER_LAM, j) == residues(ctx, PAPER_LAM)[j - 1]


def test_form_pair_diagonal():
    ctx = paper_ctx(0)
    for i in range(1, 6):
        for j in range(1, 6):
            expect = ctx.sign(i) if i == j else 0
            assert form_pair(ctx, eps(ctx, i), eps(ctx, j)) == expect


def test_weight_arithmetic():
    a, b = (1, 2, 3), (0, -1, 4)
    assert weight_add(a, b) == (1, 1, 7)
    assert weight_sub(a, b) == (1, 3, -1)
    assert length(PAPER_LAM) == 13


def test_flip_map_worked_example():
    ctx = paper_ctx()
    fctx, flam = flip_map(ctx, PAPER_LAM)
    assert fctx.parities == (1, 1, 1, 0, 0)
    assert flam == (-5, -7, -1, 1, -1)


def test_flip_map_is_involutive():
    ctx = paper_ctx()
    fctx, flam = flip_map(ctx, PAPER_LAM)
    ctx2, lam2 = flip_map(fctx, flam)
    assert ctx2.parities == ctx.parities and lam2 == PAPER_LAM


def test_dominance_reflexive_and_antisymmetric_sample():
    ctx = paper_ctx(0)
    assert dominance_leq(ctx, PAPER_LAM, PAPER_LAM)


def test_parse_weight():
    ctx = paper_ctx()
    assert parse_weight("1,-1,1,7,5", ctx) == PAPER_LAM
    with pytest.raises(ValueError):
        parse_weight("1,x,3", ctx)
    with pytest.raises(ValueError):
        parse_weight("1,2", ctx)


def test_iter_window_order_and_size():
    window = list(iter_window(2, 1))
    assert len(window) == 9
    assert window[0] == (0, 0)  # max-norm 0 first
    norms = [max(abs(c) for c in w) if w else 0 for w in window]
    assert norms == sorted(norms)

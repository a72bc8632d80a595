"""Tests for the tensor-product rule and the dual operator oracle."""

from supercrystals import crystal, tensorrule
from supercrystals.weights import build_context, iter_window

PAPER_PARITIES = (1, 1, 0, 0, 0)
PAPER_LAM = (1, -1, 1, 7, 5)


def paper_ctx(p=3):
    return build_context(3, 2, PAPER_PARITIES, p)


def test_letters_roundtrip():
    ctx = paper_ctx()
    letters = tensorrule.letters_of(ctx, PAPER_LAM)
    assert tensorrule.weight_of_letters(ctx, letters) == PAPER_LAM


def test_dual_oracle_matches_signature_rule_on_worked_example():
    ctx = paper_ctx()
    for r in crystal.relevant_residues(ctx, PAPER_LAM):
        assert tensorrule.dual_oracle(ctx, PAPER_LAM, r, "e") == crystal.e_star(
            ctx, PAPER_LAM, r
        )
        assert tensorrule.dual_oracle(ctx, PAPER_LAM, r, "f") == crystal.f_star(
            ctx, PAPER_LAM, r
        )
        assert tensorrule.dual_eps_phi(ctx, PAPER_LAM, r) == crystal.eps_phi_star(
            ctx, PAPER_LAM, r
        )


def test_dual_oracle_matches_signature_rule_on_small_window():
    for parities in ((0, 1), (1, 0), (0, 0), (1, 1)):
        for p in (0, 2, 3):
            m = parities.count(0)
            ctx = build_context(m, 2 - m, parities, p)
            for lam in iter_window(2, 2):
                for r in crystal.relevant_residues(ctx, lam):
                    for which in ("e", "f"):
                        op = crystal.e_star if which == "e" else crystal.f_star
                        assert tensorrule.dual_oracle(ctx, lam, r, which) == op(
                            ctx, lam, r
                        ), (parities, p, lam, r, which)
                    assert tensorrule.dual_eps_phi(
                        ctx, lam, r
                    ) == crystal.eps_phi_star(ctx, lam, r)


def test_undefined_moves_agree():
    ctx = paper_ctx()
    # residue 2: no raising on the dual side either
    assert tensorrule.dual_oracle(ctx, PAPER_LAM, 2, "f") is None
    assert tensorrule.dual_oracle(ctx, PAPER_LAM, 0, "e") is None

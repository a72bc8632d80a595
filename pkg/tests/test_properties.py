"""Property-based tests for the core combinatorics."""

from hypothesis import given, settings
from hypothesis import strategies as st

from supercrystals import crystal
from supercrystals.affine import gamma_of, wt_of
from supercrystals.crystal import Signature, downarrow, reduce_signature
from supercrystals.linkage import TruncatedSeries
from supercrystals.weights import (
    build_context,
    eps,
    flip_map,
    residue_int,
    weight_add,
)

signatures = st.lists(st.sampled_from("+-0"), min_size=1, max_size=12).map(
    lambda xs: Signature(tuple(xs))
)


@given(signatures)
def test_reduce_signature_idempotent(sig):
    red = reduce_signature(sig)
    assert reduce_signature(red).entries == red.entries


@given(signatures)
def test_reduce_signature_preserves_count_difference(sig):
    red = reduce_signature(sig)
    assert sig.count("+") - sig.count("-") == red.count("+") - red.count("-")
    # in the reduced word all pluses precede all minuses
    word = [e for e in red.entries if e != "0"]
    assert word == sorted(word, key=lambda e: e == "-")


subsets = st.sets(st.integers(min_value=1, max_value=10), max_size=6)


@given(subsets, subsets)
def test_downarrow_definitions_agree(a, b):
    # downarrow cross-checks the prefix-count criterion against greedy
    # matching internally and raises on disagreement
    downarrow(a, b)


@given(subsets, subsets)
def test_downarrow_monotone_in_targets(a, b):
    if downarrow(a, b):
        assert downarrow(a, b | {1})


def _contexts():
    out = []
    for parities in ((0, 1), (1, 0), (1, 0, 0), (0, 1, 1)):
        m = parities.count(0)
        for p in (0, 2, 3):
            out.append(build_context(m, len(parities) - m, parities, p))
    return out


CONTEXTS = _contexts()
ctx_strategy = st.sampled_from(CONTEXTS)
coeff = st.integers(min_value=-4, max_value=4)


@st.composite
def ctx_and_weight(draw):
    ctx = draw(ctx_strategy)
    lam = tuple(draw(coeff) for _ in range(ctx.rank))
    return ctx, lam


@given(ctx_and_weight())
def test_flip_is_an_involution(cw):
    ctx, lam = cw
    fctx, flam = flip_map(ctx, lam)
    ctx2, lam2 = flip_map(fctx, flam)
    assert ctx2.parities == ctx.parities and lam2 == lam


@given(ctx_and_weight(), st.integers(min_value=1, max_value=3))
def test_wt_changes_by_a_gamma_difference(cw, i):
    ctx, lam = cw
    if i > ctx.rank:
        i = ctx.rank
    # the gamma letter of position i is (lam+rho, eps_i): the residue shifted
    # by one at even positions
    b = residue_int(ctx, lam, i) + (1 if ctx.parity(i) == 0 else 0)
    s = ctx.sign(i)
    delta = wt_of(ctx, weight_add(lam, eps(ctx, i))) - wt_of(ctx, lam)
    assert delta == (gamma_of(ctx.p, b + s) - gamma_of(ctx.p, b)).scale(s)


@given(ctx_and_weight(), st.integers(min_value=-3, max_value=6))
@settings(max_examples=60)
def test_star_operators_are_mutually_inverse(cw, r):
    ctx, lam = cw
    up = crystal.e_star(ctx, lam, r)
    if up is not None:
        assert crystal.f_star(ctx, up, r) == lam
    dn = crystal.f_star(ctx, lam, r)
    if dn is not None:
        assert crystal.e_star(ctx, dn, r) == lam


@given(ctx_and_weight(), st.integers(min_value=-3, max_value=6))
@settings(max_examples=60)
def test_counters_count_operator_strings(cw, r):
    ctx, lam = cw
    e_count, f_count = crystal.eps_phi_star(ctx, lam, r)
    w = lam
    for _ in range(e_count):
        w = crystal.e_star(ctx, w, r)
        assert w is not None
    assert crystal.e_star(ctx, w, r) is None
    w = lam
    for _ in range(f_count):
        w = crystal.f_star(ctx, w, r)
        assert w is not None
    assert crystal.f_star(ctx, w, r) is None


small_series = st.lists(
    st.integers(min_value=-5, max_value=5), min_size=3, max_size=3
).map(lambda c: TruncatedSeries(tuple(c)))


@given(small_series, small_series, small_series)
def test_series_multiplication_commutes_and_associates(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)

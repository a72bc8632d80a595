"""The dual crystal structure on the weight lattice.

Signatures, their stack-based reduction, the star operators e*/f* and their
counters, normal/good/conormal/cogood classification with the B-into-C
matching certificate, and odd reflections between adjacent parity contexts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Optional, Set, Tuple

from .weights import (
    ParityContext,
    Weight,
    build_context,
    eps,
    flip_map,
    form_pair,
    residue_int,
    residues,
    residues_up,
    weight_add,
    weight_sub,
)

PLUS = "+"
MINUS = "-"
ZERO = "0"

NOT_CLASSIFIED = "not-classified"
NORMAL = "normal"
GOOD = "good"
CONORMAL = "conormal"
COGOOD = "cogood"


@dataclass(frozen=True)
class Signature:
    """A +/-/0 word of length m+n; ``reduced`` marks the canceled form."""

    entries: Tuple[str, ...]
    reduced: bool = False

    def __str__(self) -> str:
        return "".join(self.entries)

    def count(self, symbol: str) -> int:
        return self.entries.count(symbol)

    def is_trivial(self) -> bool:
        return all(e == ZERO for e in self.entries)


@dataclass(frozen=True)
class IndexClass:
    """Classification of a position for a residue r."""

    kind: str
    r: int

    @property
    def is_normal(self) -> bool:
        return self.kind in (NORMAL, GOOD)

    @property
    def is_conormal(self) -> bool:
        return self.kind in (CONORMAL, COGOOD)


def r_signature(ctx: ParityContext, lam: Weight, r: int) -> Signature:
    """The r-signature: + where r_i(lam+eps_i) = r, - where r_i(lam) = r."""
    down = residues(ctx, lam)
    up = residues_up(ctx, lam)
    entries = []
    for lo, hi in zip(down, up):
        if ctx.congruent(hi, r):
            entries.append(PLUS)
        elif ctx.congruent(lo, r):
            entries.append(MINUS)
        else:
            entries.append(ZERO)
    return Signature(tuple(entries), reduced=False)


def reduce_signature(sig: Signature) -> Signature:
    """Cancel -+ pairs: each + cancels the nearest unmatched - to its left."""
    entries = list(sig.entries)
    stack = []
    for i, e in enumerate(entries):
        if e == MINUS:
            stack.append(i)
        elif e == PLUS and stack:
            j = stack.pop()
            entries[i] = ZERO
            entries[j] = ZERO
    return Signature(tuple(entries), reduced=True)


def reduced_signature(ctx: ParityContext, lam: Weight, r: int) -> Signature:
    return reduce_signature(r_signature(ctx, lam, r))


def _leftmost_minus(sig: Signature) -> Optional[int]:
    for i, e in enumerate(sig.entries):
        if e == MINUS:
            return i + 1
    return None


def _rightmost_plus(sig: Signature) -> Optional[int]:
    for i in range(len(sig.entries) - 1, -1, -1):
        if sig.entries[i] == PLUS:
            return i + 1
    return None


def e_star(ctx: ParityContext, lam: Weight, r: int) -> Optional[Weight]:
    """Remove eps_j at the leftmost - of the reduced r-signature, if any."""
    j = _leftmost_minus(reduced_signature(ctx, lam, r))
    return None if j is None else weight_sub(lam, eps(ctx, j))


def f_star(ctx: ParityContext, lam: Weight, r: int) -> Optional[Weight]:
    """Add eps_j at the rightmost + of the reduced r-signature, if any."""
    j = _rightmost_plus(reduced_signature(ctx, lam, r))
    return None if j is None else weight_add(lam, eps(ctx, j))


def eps_phi_star(ctx: ParityContext, lam: Weight, r: int) -> Tuple[int, int]:
    """(eps*_r, phi*_r): counts of - and + in the reduced signature."""
    sig = reduced_signature(ctx, lam, r)
    return sig.count(MINUS), sig.count(PLUS)


def relevant_residues(ctx: ParityContext, lam: Weight) -> Tuple[int, ...]:
    """Residues r whose r-signature of lam is not identically zero.

    For p > 0 these are a subset of 0..p-1; for p = 0 finitely many integers.
    """
    vals = set()
    for v in residues(ctx, lam):
        vals.add(ctx.reduce(v))
    for v in residues_up(ctx, lam):
        vals.add(ctx.reduce(v))
    return tuple(sorted(vals))


def classify_index(ctx: ParityContext, lam: Weight, i: int, r: int) -> IndexClass:
    """Classify position i in the reduced r-signature.

    normal: i carries a -; good: the leftmost such.  conormal: i carries
    a +; cogood: the rightmost such.  A 0-entry is not classified.
    """
    if not 1 <= i <= ctx.rank:
        raise IndexError(f"position {i} out of range 1..{ctx.rank}")
    sig = reduced_signature(ctx, lam, r)
    entry = sig.entries[i - 1]
    if entry == MINUS:
        kind = GOOD if _leftmost_minus(sig) == i else NORMAL
    elif entry == PLUS:
        kind = COGOOD if _rightmost_plus(sig) == i else CONORMAL
    else:
        kind = NOT_CLASSIFIED
    return IndexClass(kind=kind, r=ctx.reduce(r))


def c_scalar(ctx: ParityContext, lam: Weight, i: int, j: int) -> int:
    """c_{i,j}(lam) = (lam + theta, eps_i - eps_j) = r_i(lam) - r_j(lam)."""
    return residue_int(ctx, lam, i) - residue_int(ctx, lam, j)


def b_scalar(ctx: ParityContext, lam: Weight, i: int, k: int) -> int:
    """b_{i,k}(lam) = (lam + theta + eps_{k+1}, eps_i - eps_{k+1})."""
    shifted = weight_add(lam, eps(ctx, k + 1))
    return residue_int(ctx, shifted, i) - residue_int(ctx, shifted, k + 1)


def bc_sets(
    ctx: ParityContext, lam: Weight, i: int, j: int
) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """(C_{i,j}, B_{i,j}): positions where c resp. b vanish mod p.

    C collects h in (i..j) with c_{i,h} = 0; B collects h in [i..j) with
    b_{i,h} = 0.
    """
    if not 1 <= i < j <= ctx.rank:
        raise IndexError(f"need 1 <= i < j <= {ctx.rank}, got ({i}, {j})")
    c_set = frozenset(
        h for h in range(i + 1, j + 1) if ctx.congruent(c_scalar(ctx, lam, i, h), 0)
    )
    b_set = frozenset(
        h for h in range(i, j) if ctx.congruent(b_scalar(ctx, lam, i, h), 0)
    )
    return c_set, b_set


def downarrow(a: Set[int], b: Set[int]) -> bool:
    """True iff there is an injection from a into b sending x to some y <= x.

    Equivalent to the prefix-count criterion |a cap [1..k]| <= |b cap [1..k]|
    for all k; both routes are computed and must agree.
    """
    if not a:
        return True
    top = max(a | b) if (a or b) else 0
    ca = cb = 0
    prefix_ok = True
    for k in range(1, top + 1):
        ca += k in a
        cb += k in b
        if ca > cb:
            prefix_ok = False
            break
    greedy_ok = _greedy_match(a, b)
    if prefix_ok != greedy_ok:
        raise AssertionError("matching-criterion implementations disagree")
    return prefix_ok


def _greedy_match(a: Set[int], b: Set[int]) -> bool:
    avail = sorted(b)
    for x in sorted(a):
        # take the largest available target <= x
        pick = None
        for y in avail:
            if y <= x:
                pick = y
            else:
                break
        if pick is None:
            return False
        avail.remove(pick)
    return True


def normal_by_matching(ctx: ParityContext, lam: Weight, i: int) -> bool:
    """Independent normality route: B_{i,m+n}(lam) injects down into C_{i,m+n}(lam)."""
    if i == ctx.rank:
        return True
    c_set, b_set = bc_sets(ctx, lam, i, ctx.rank)
    return downarrow(b_set, c_set)


def good_by_matching(ctx: ParityContext, lam: Weight, i: int) -> bool:
    """Good via matching: normal, and no normal j < i with c_{j,i}(lam) = 0."""
    if not normal_by_matching(ctx, lam, i):
        return False
    for j in range(1, i):
        if ctx.congruent(c_scalar(ctx, lam, j, i), 0) and normal_by_matching(
            ctx, lam, j
        ):
            return False
    return True


def s_i_map(ctx: ParityContext, lam: Weight, i: int) -> Tuple[ParityContext, Weight]:
    """Odd reflection at a parity-adjacent position i.

    Swaps parities i, i+1; the weight is the plain swap when
    (lam, eps_i - eps_{i+1}) = 0 mod p, else the swap minus eps_{i+1}
    plus eps_i.
    """
    if not 1 <= i <= ctx.rank - 1:
        raise IndexError(f"position {i} out of range 1..{ctx.rank - 1}")
    if ctx.parity(i) == ctx.parity(i + 1):
        raise ValueError(f"positions {i}, {i + 1} have equal parities")
    swapped = list(lam)
    swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
    new_parities = list(ctx.parities)
    new_parities[i - 1], new_parities[i] = new_parities[i], new_parities[i - 1]
    new_ctx = build_context(ctx.m, ctx.n, tuple(new_parities), ctx.p)
    pairing = form_pair(ctx, lam, weight_sub(eps(ctx, i), eps(ctx, i + 1)))
    if not ctx.congruent(pairing, 0):
        swapped[i - 1] += 1
        swapped[i] -= 1
    return new_ctx, tuple(swapped)


def conormal_via_flip(ctx: ParityContext, lam: Weight, i: int, r: int) -> bool:
    """Whether position i is r-conormal, decided in the flipped context.

    Position t is normal for lam exactly when w0(t) is conormal for the
    flipped weight, so this is an independent route to conormality.
    """
    fctx, flam = flip_map(ctx, lam)
    w0_i = ctx.rank + 1 - i
    # flipped residues satisfy r_i'(flam) = r_i(lam+eps_i) - (m-n), so the
    # residue class maps to r -> r - (m-n) while + and - entries swap
    return classify_index(fctx, flam, w0_i, r - (ctx.m - ctx.n)).is_normal

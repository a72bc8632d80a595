"""Independent oracle for the star operators via elementary crystals.

A weight corresponds bijectively to a word of letters b_i = (lam+rho, eps_i),
viewed as a tensor product of one-letter elementary crystals (one per
position, even or odd by the context parity).  The dual operators are

    e*_r(x) = -f_{-1-r}(-x),    f*_r(x) = -e_{-1-r}(-x),

where -x negates every letter and e/f act by the recursive Kashiwara tensor
rule.  None of the signature machinery is used here.
"""

from __future__ import annotations

from typing import List, Optional, Tuple

from .weights import EVEN, ParityContext, Weight

NEG_INF = float("-inf")


def letters_of(ctx: ParityContext, lam: Weight) -> Tuple[int, ...]:
    """The letter word b_i = (lam+rho, eps_i) = sign_i * (lam_i + rho_i)."""
    return tuple(
        ctx.sign(i + 1) * (lam[i] + ctx.rho[i]) for i in range(ctx.rank)
    )


def weight_of_letters(ctx: ParityContext, letters: Tuple[int, ...]) -> Weight:
    """Inverse of letters_of: lam_i = sign_i * b_i - rho_i."""
    return tuple(
        ctx.sign(i + 1) * letters[i] - ctx.rho[i] for i in range(ctx.rank)
    )


def _elem_eps(parity: int, b: int, r: int, congruent) -> int:
    """eps_r of the one-letter crystal: [r+1 = b] if even, [r = b] if odd."""
    if parity == EVEN:
        return 1 if congruent(r + 1, b) else 0
    return 1 if congruent(r, b) else 0


def _elem_phi(parity: int, b: int, r: int, congruent) -> int:
    """phi_r of the one-letter crystal: [r = b] if even, [r+1 = b] if odd."""
    if parity == EVEN:
        return 1 if congruent(r, b) else 0
    return 1 if congruent(r + 1, b) else 0


def _elem_e(parity: int, b: int, r: int, congruent) -> Optional[int]:
    """e_r on one letter: even b -> b-1 when r+1 = b; odd b -> b+1 when r = b."""
    if parity == EVEN:
        return b - 1 if congruent(r + 1, b) else None
    return b + 1 if congruent(r, b) else None


def _elem_f(parity: int, b: int, r: int, congruent) -> Optional[int]:
    """f_r on one letter: even b -> b+1 when r = b; odd b -> b-1 when r+1 = b."""
    if parity == EVEN:
        return b + 1 if congruent(r, b) else None
    return b - 1 if congruent(r + 1, b) else None


def _prefix_stats(
    parities: Tuple[int, ...], letters: Tuple[int, ...], r: int, congruent
) -> Tuple[List[float], List[float], List[int], List[int]]:
    """Left-fold eps/phi prefix arrays for the tensor word.

    Folding (((x1 x2) x3) ...) with the Kashiwara rule gives, for the
    prefix of length j:
        eps = max(eps_prev, eps_j - h_sum_prev)
        phi = max(phi_j, phi_prev + h_j)
    where h = phi - eps per factor and h_sum is its running total.
    """
    k = len(letters)
    eps_loc = [_elem_eps(parities[i], letters[i], r, congruent) for i in range(k)]
    phi_loc = [_elem_phi(parities[i], letters[i], r, congruent) for i in range(k)]
    eps_pre: List[float] = [0.0] * (k + 1)
    phi_pre: List[float] = [0.0] * (k + 1)
    eps_pre[0] = NEG_INF  # empty tensor factor: nothing to raise
    phi_pre[0] = NEG_INF
    h_sum = 0
    for j in range(1, k + 1):
        e, p = eps_loc[j - 1], phi_loc[j - 1]
        eps_pre[j] = max(eps_pre[j - 1], e - h_sum)
        phi_pre[j] = max(p, phi_pre[j - 1] + (p - e))
        h_sum += p - e
    return eps_pre, phi_pre, eps_loc, phi_loc


def tensor_e(
    ctx_parities: Tuple[int, ...],
    letters: Tuple[int, ...],
    r: int,
    congruent,
) -> Optional[Tuple[int, ...]]:
    """Apply e_r to the tensor word by the left-fold tensor rule."""
    k = len(letters)
    eps_pre, phi_pre, eps_loc, _ = _prefix_stats(ctx_parities, letters, r, congruent)
    if eps_pre[k] <= 0:
        return None
    # e acts on (x (1..j-1) tensor x_j): on x_j iff eps_j > phi of the prefix
    pos = k
    while pos > 1 and phi_pre[pos - 1] >= eps_loc[pos - 1]:
        pos -= 1
    new_b = _elem_e(ctx_parities[pos - 1], letters[pos - 1], r, congruent)
    if new_b is None:
        return None
    return letters[: pos - 1] + (new_b,) + letters[pos:]


def tensor_f(
    ctx_parities: Tuple[int, ...],
    letters: Tuple[int, ...],
    r: int,
    congruent,
) -> Optional[Tuple[int, ...]]:
    """Apply f_r to the tensor word by the left-fold tensor rule."""
    k = len(letters)
    _, phi_pre, eps_loc, _ = _prefix_stats(ctx_parities, letters, r, congruent)
    if phi_pre[k] <= 0:
        return None
    # f acts on x_j iff eps_j >= phi of the prefix
    pos = k
    while pos > 1 and phi_pre[pos - 1] > eps_loc[pos - 1]:
        pos -= 1
    new_b = _elem_f(ctx_parities[pos - 1], letters[pos - 1], r, congruent)
    if new_b is None:
        return None
    return letters[: pos - 1] + (new_b,) + letters[pos:]


def tensor_eps_phi(
    ctx_parities: Tuple[int, ...],
    letters: Tuple[int, ...],
    r: int,
    congruent,
) -> Tuple[int, int]:
    """(eps_r, phi_r) of the full tensor word."""
    k = len(letters)
    eps_pre, phi_pre, _, _ = _prefix_stats(ctx_parities, letters, r, congruent)
    return max(0, int(eps_pre[k])), max(0, int(phi_pre[k]))


def dual_oracle(
    ctx: ParityContext, lam: Weight, r: int, which: str
) -> Optional[Weight]:
    """Compute e*_r or f*_r of lam through the tensor-rule dual twist."""
    if which not in ("e", "f"):
        raise ValueError(f"which must be 'e' or 'f', got {which!r}")
    letters = letters_of(ctx, lam)
    neg = tuple(-b for b in letters)
    if which == "e":
        out = tensor_f(ctx.parities, neg, -1 - r, ctx.congruent)
    else:
        out = tensor_e(ctx.parities, neg, -1 - r, ctx.congruent)
    if out is None:
        return None
    return weight_of_letters(ctx, tuple(-b for b in out))


def dual_eps_phi(ctx: ParityContext, lam: Weight, r: int) -> Tuple[int, int]:
    """(eps*_r, phi*_r) of lam via the tensor-rule twist."""
    letters = letters_of(ctx, lam)
    neg = tuple(-b for b in letters)
    e, p = tensor_eps_phi(ctx.parities, neg, -1 - r, ctx.congruent)
    # the twist swaps the roles of eps and phi
    return p, e

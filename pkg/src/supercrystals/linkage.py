"""Central-character combinatorics: Z_r(lam), G_lam(t), and block partitions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .affine import AffineWeight, wt_of
from .weights import ParityContext, Weight, residues, residues_up


@dataclass(frozen=True)
class TruncatedSeries:
    """Series in u = t^{-1} truncated at order N: coeffs[k] is the u^k term.

    Coefficients are exact rationals; integer inputs stay plain integers,
    which keeps the products arising here fast.
    """

    coeffs: Tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if not a:
                continue
            for j in range(n + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(tuple(out))

    def congruent(self, other: "TruncatedSeries", p: int) -> bool:
        """Equality of all coefficients mod p (exact equality when p = 0).

        Coefficients must be p-integral when p > 0 (they are, for the series
        arising here, whose inputs are integers).
        """
        if self.order != other.order:
            raise ValueError("series truncated at different orders")
        for a, b in zip(self.coeffs, other.coeffs):
            d = a - b
            if p == 0:
                if d:
                    return False
            else:
                if d.denominator % p == 0:
                    raise ArithmeticError("coefficient not p-integral")
                if (d.numerator * pow(d.denominator, -1, p)) % p:
                    return False
        return True


def one_series(n: int) -> TruncatedSeries:
    return TruncatedSeries((1,) + (0,) * n)


def _linear_factor(a: int, n: int) -> TruncatedSeries:
    """(t - a) / t = 1 - a*u as a truncated series in u."""
    coeffs = [0] * (n + 1)
    coeffs[0] = 1
    if n >= 1:
        coeffs[1] = -a
    return TruncatedSeries(tuple(coeffs))


def _geometric_factor(b: int, n: int) -> TruncatedSeries:
    """t / (t - b) = sum_k b^k u^k as a truncated series in u."""
    return TruncatedSeries(tuple(b**k for k in range(n + 1)))


def z_scalar(ctx: ParityContext, lam: Weight, r: int) -> int:
    """Z_r(lam): the alternating residue-power sum.

    Sum over s = 1..r, index tuples k_1 < ... < k_s, and nonnegative
    compositions a_1 + ... + a_s = r - s + 1 of
    (-1)**(s-1) (-1)**(parity sum) r_{k_1}^{a_1} ... r_{k_s}^{a_s}.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    res = residues(ctx, lam)
    total = 0
    for s in range(1, r + 1):
        target = r - s + 1
        sign_s = (-1) ** (s - 1)
        for combo in itertools.combinations(range(1, ctx.rank + 1), s):
            sign_p = (-1) ** sum(ctx.parity(k) for k in combo)
            base = sign_s * sign_p
            for comp in _compositions(target, s):
                prod = 1
                for k, a in zip(combo, comp):
                    prod *= res[k - 1] ** a
                total += base * prod
    return total


def _compositions(total: int, parts: int):
    """All tuples of `parts` nonnegative integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def g_series(ctx: ParityContext, lam: Weight, n: int) -> TruncatedSeries:
    """G_lam(t) = prod_i (t - r_i(lam+eps_i)) / (t - r_i(lam)), order n in t^{-1}."""
    if n < 1:
        raise ValueError("truncation order must be >= 1")
    out = one_series(n)
    for up, down in zip(residues_up(ctx, lam), residues(ctx, lam)):
        out = out * _linear_factor(up, n) * _geometric_factor(down, n)
    return out


def g_series_presented(ctx: ParityContext, lam: Weight, n: int) -> TruncatedSeries:
    """The 1 - sum_{r>=1} Z_r(lam) u^{r+1} presentation of the same object.

    This is NOT equal to g_series: the u^1 coefficient differs by the
    constant -(m-n), and the higher coefficients can differ as well (e.g.
    m = n = 1, lam = 0).  Both are exposed so the discrepancy is visible
    rather than silently reconciled; the block partition is keyed on
    g_series.
    """
    coeffs = [0] * (n + 1)
    coeffs[0] = 1
    for r in range(1, n):
        coeffs[r + 1] = -z_scalar(ctx, lam, r)
    return TruncatedSeries(tuple(coeffs))


def default_order(ctx: ParityContext) -> int:
    return 2 * ctx.rank + 2


def same_block(ctx: ParityContext, lam: Weight, mu: Weight) -> bool:
    """True iff wt(lam) = wt(mu) in the affine lattice."""
    return wt_of(ctx, lam) == wt_of(ctx, mu)


def partition_blocks(
    ctx: ParityContext, weights: Sequence[Weight]
) -> List[Tuple[AffineWeight, List[Weight]]]:
    """Group weights by wt value; block order follows first occurrence."""
    blocks: Dict[AffineWeight, List[Weight]] = {}
    order: List[AffineWeight] = []
    seen = set()
    for w in weights:
        w = tuple(w)
        if w in seen:
            continue
        seen.add(w)
        key = wt_of(ctx, w)
        if key not in blocks:
            blocks[key] = []
            order.append(key)
        blocks[key].append(w)
    return [(key, blocks[key]) for key in order]

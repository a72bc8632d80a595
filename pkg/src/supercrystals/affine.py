"""The affine weight lattice P with its simple roots and bilinear form.

For p = 0 this is the (finitely supported) gamma-coordinate lattice with
simple roots alpha_r = gamma_r - gamma_{r+1} and <gamma_r, gamma_s> = delta.
For p > 0 it is Z*delta + sum over Z/p of Z*Lambda_r with the form determined
by declaring (delta, Lambda_0..Lambda_{p-1}) and (Lambda_0, alpha_0..alpha_{p-1})
to be dual bases; the Gram matrix is solved once per characteristic with exact
rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

from .weights import ParityContext, Weight, residues, residues_up


@dataclass(frozen=True)
class AffineWeight:
    """Canonical element of P.

    p = 0: ``gamma`` is a sorted tuple of (index, coeff) pairs, no zeros.
    p > 0: ``delta`` is the delta coefficient and ``lambdas`` has length p.
    """

    p: int
    gamma: Tuple[Tuple[int, int], ...] = ()
    delta: int = 0
    lambdas: Tuple[int, ...] = ()

    def __add__(self, other: "AffineWeight") -> "AffineWeight":
        self._check(other)
        if self.p == 0:
            acc = dict(self.gamma)
            for idx, c in other.gamma:
                acc[idx] = acc.get(idx, 0) + c
            return gamma_weight(acc)
        return AffineWeight(
            p=self.p,
            delta=self.delta + other.delta,
            lambdas=tuple(a + b for a, b in zip(self.lambdas, other.lambdas)),
        )

    def __sub__(self, other: "AffineWeight") -> "AffineWeight":
        return self + (-other)

    def __neg__(self) -> "AffineWeight":
        if self.p == 0:
            return AffineWeight(p=0, gamma=tuple((i, -c) for i, c in self.gamma))
        return AffineWeight(
            p=self.p, delta=-self.delta, lambdas=tuple(-c for c in self.lambdas)
        )

    def scale(self, k: int) -> "AffineWeight":
        if self.p == 0:
            return gamma_weight({i: k * c for i, c in self.gamma})
        return AffineWeight(
            p=self.p, delta=k * self.delta, lambdas=tuple(k * c for c in self.lambdas)
        )

    def is_zero(self) -> bool:
        if self.p == 0:
            return not self.gamma
        return self.delta == 0 and all(c == 0 for c in self.lambdas)

    def _check(self, other: "AffineWeight") -> None:
        if self.p != other.p:
            raise ValueError("affine weights live in different characteristics")

    def to_json(self) -> dict:
        if self.p == 0:
            return {"gamma": {str(i): c for i, c in self.gamma}}
        return {"delta": self.delta, "lambda": list(self.lambdas)}

    @staticmethod
    def from_json(p: int, data: dict) -> "AffineWeight":
        if p == 0:
            return gamma_weight({int(i): c for i, c in data["gamma"].items()})
        lambdas = tuple(data["lambda"])
        if len(lambdas) != p:
            raise ValueError(f"expected {p} lambda coefficients, got {len(lambdas)}")
        return AffineWeight(p=p, delta=data["delta"], lambdas=lambdas)


def gamma_weight(coeffs: Dict[int, int]) -> AffineWeight:
    """Build a p=0 affine weight from a gamma-coefficient map."""
    return AffineWeight(
        p=0, gamma=tuple(sorted((i, c) for i, c in coeffs.items() if c))
    )


def zero_affine(p: int) -> AffineWeight:
    return AffineWeight(p=0) if p == 0 else AffineWeight(p=p, lambdas=(0,) * p)


def lambda_of(p: int, r: int) -> AffineWeight:
    """The fundamental weight Lambda_r (p > 0 only)."""
    if p <= 0:
        raise ValueError("Lambda_r exists only in positive characteristic")
    lambdas = [0] * p
    lambdas[r % p] = 1
    return AffineWeight(p=p, lambdas=tuple(lambdas))


def delta_of(p: int) -> AffineWeight:
    if p <= 0:
        raise ValueError("delta exists only in positive characteristic")
    return AffineWeight(p=p, delta=1, lambdas=(0,) * p)


@lru_cache(maxsize=None)
def gamma_of(p: int, a: int) -> AffineWeight:
    """The element gamma_a.

    p = 0: the basis vector gamma_a.  p > 0: write a = p*d + s with
    s in {1..p}; then gamma_a = Lambda_s - Lambda_{s-1} - d*delta
    (indices mod p, so Lambda_p = Lambda_0).
    """
    if p == 0:
        return gamma_weight({a: 1})
    s = ((a - 1) % p) + 1
    d = (a - s) // p
    out = lambda_of(p, s) - lambda_of(p, s - 1)
    return AffineWeight(p=p, delta=out.delta - d, lambdas=out.lambdas)


@lru_cache(maxsize=None)
def alpha_of(p: int, r: int) -> AffineWeight:
    """The simple root alpha_r."""
    if p == 0:
        return gamma_weight({r: 1, r + 1: -1})
    out = lambda_of(p, r).scale(2) - lambda_of(p, r - 1) - lambda_of(p, r + 1)
    if r % p == 0:
        out = out + delta_of(p)
    return out


def _solve_gram(p: int) -> Tuple[Tuple[Fraction, ...], ...]:
    """Gram matrix of the form on (delta, Lambda_0..Lambda_{p-1}).

    The form is fixed by requiring (delta, Lambda_0..Lambda_{p-1}) and
    (Lambda_0, alpha_0..alpha_{p-1}) to be dual bases.  Writing W for the
    matrix whose rows are the second basis in coordinates of the first,
    the duality condition W G = I gives G = W^{-1} directly (and the
    result is symmetric, which we assert).
    """
    dim = p + 1

    def coords(w: AffineWeight) -> list:
        return [Fraction(w.delta)] + [Fraction(c) for c in w.lambdas]

    rows = [coords(lambda_of(p, 0))] + [coords(alpha_of(p, r)) for r in range(p)]
    # invert by Gauss-Jordan over Fraction
    aug = [rows[i] + [Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    for col in range(dim):
        piv = next(r for r in range(col, dim) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(dim):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    g = tuple(tuple(row[dim:]) for row in aug)
    for i in range(dim):
        for j in range(dim):
            if g[i][j] != g[j][i]:
                raise ArithmeticError("dual-basis Gram matrix is not symmetric")
    return g


@lru_cache(maxsize=None)
def gram_matrix(p: int) -> Tuple[Tuple[Fraction, ...], ...]:
    if p <= 0:
        raise ValueError("the Gram matrix is only defined for p > 0")
    return _solve_gram(p)


def pair_P(x: AffineWeight, y: AffineWeight) -> Fraction:
    """The symmetric bilinear form on P, as an exact rational."""
    if x.p != y.p:
        raise ValueError("affine weights live in different characteristics")
    if x.p == 0:
        ya = dict(y.gamma)
        return Fraction(sum(c * ya.get(i, 0) for i, c in x.gamma))
    g = gram_matrix(x.p)
    xs = [x.delta] + list(x.lambdas)
    ys = [y.delta] + list(y.lambdas)
    return sum(
        (xs[i] * g[i][j] * ys[j] for i in range(len(xs)) for j in range(len(ys))),
        Fraction(0),
    )


def k_element(p: int) -> AffineWeight:
    """The element K = -sum_r Lambda_r, which pairs with gamma_a to give a."""
    if p <= 0:
        raise ValueError("K is only defined for p > 0")
    return AffineWeight(p=p, lambdas=(-1,) * p)


def wt_of(ctx: ParityContext, lam: Weight) -> AffineWeight:
    """The affine weight wt(lam) = sum_i (-1)**parity_i * gamma_{(lam+rho, eps_i)}."""
    out = zero_affine(ctx.p)
    for i in range(1, ctx.rank + 1):
        b = ctx.sign(i) * (lam[i - 1] + ctx.rho[i - 1])
        term = gamma_of(ctx.p, b)
        out = out + (term if ctx.sign(i) == 1 else -term)
    return out


def ab_counts(ctx: ParityContext, lam: Weight, r: int) -> Tuple[int, int]:
    """(A_r, B_r): counts of positions with r_i(lam+eps_i) == r resp. r_i(lam) == r."""
    a = sum(1 for v in residues_up(ctx, lam) if ctx.congruent(v, r))
    b = sum(1 for v in residues(ctx, lam) if ctx.congruent(v, r))
    return a, b


@lru_cache(maxsize=None)
def pair_gamma_alpha(p: int, b: int, r: int) -> int:
    """<gamma_b, alpha_r> = [r = b] - [r = b-1] (indices mod p when p > 0)."""
    val = pair_P(gamma_of(p, b), alpha_of(p, r))
    if val.denominator != 1:
        raise ArithmeticError("gamma/alpha pairing is not integral")
    return int(val)

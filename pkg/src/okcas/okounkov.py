"""Okounkov type-BC interpolation polynomials from the reverse-tableau formula."""

from dataclasses import dataclass
from fractions import Fraction

from .exactpoly import MPoly, to_rational
from .partitions import (
    arm,
    arm_colength,
    boxes,
    leg,
    leg_colength,
    make_partition,
    rc_set,
    reverse_tableaux,
)


@dataclass(frozen=True)
class OkounkovParams:
    r: int
    tau: Fraction = Fraction(1)
    alpha: Fraction = Fraction(0)

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("rank r must be nonnegative")
        object.__setattr__(self, "tau", to_rational(self.tau))
        object.__setattr__(self, "alpha", to_rational(self.alpha))


@dataclass(frozen=True)
class SpecializationParams:
    """Theorem-style specialization: tau = 1, alpha = s - (n-1)/2, shift by rho."""

    n: int
    r: int
    s: Fraction = Fraction(0)

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("rank r must be nonnegative")
        if self.n < 2 * self.r:
            raise ValueError(f"need n >= 2r, got n={self.n}, r={self.r}")
        object.__setattr__(self, "s", to_rational(self.s))

    @property
    def alpha(self):
        return self.s - Fraction(self.n - 1, 2)

    @property
    def rho(self):
        return [Fraction(self.n - (2 * i - 1), 2) for i in range(1, self.r + 1)]


def b_factor(mu, box, tau):
    tau = to_rational(tau)
    a = arm(mu, box)
    l = leg(mu, box)
    den = a + tau * l + 1
    if den == 0:
        raise ZeroDivisionError(f"b-factor denominator vanishes at box {box} of {mu}, tau={tau}")
    return (a + tau * (l + 1)) / den


def phi_weight(T, tau):
    """Product over k of b_{lam^(k)}/b_{lam^(k-1)} on the R\\C boxes of each step."""
    tau = to_rational(tau)
    if tau == 1:
        return Fraction(1)
    top = max(T.row_major(), default=0)
    result = Fraction(1)
    outer = T.sub_shape(0)
    for k in range(1, top + 1):
        inner = T.sub_shape(k)
        for box in sorted(rc_set(outer, inner)):
            den = b_factor(outer, box, tau)
            if den == 0:
                raise ZeroDivisionError(f"vanishing b-factor at box {box} of {outer}, tau={tau}")
            result *= b_factor(inner, box, tau) / den
        outer = inner
    return result


def _box_factor(x_sq, shift):
    # x_{T(b)}^2 - shift^2
    return x_sq - shift * shift


def okounkov_poly(lam, params):
    """P_lam(x; tau; alpha) as a polynomial in r variables.

    Sum over reverse tableaux T of shape lam with entries in 1..r of
    phi_T(tau) * prod_b (x_{T(b)}^2 - (a'(b) + tau (r - T(b) - l'(b)) + alpha)^2).
    Zero when lam has more than r parts.
    """
    lam = make_partition(lam)
    r, tau, alpha = params.r, params.tau, params.alpha
    squares = [MPoly.var(r, i) ** 2 for i in range(r)]
    cells = boxes(lam)
    colengths = [(arm_colength(lam, b), leg_colength(lam, b)) for b in cells]
    result = MPoly.zero(r)
    factor_cache = {}
    for T in reverse_tableaux(lam, r):
        weight = phi_weight(T, tau)
        term = MPoly.const(r, weight)
        for b, (ac, lc) in zip(cells, colengths):
            t = T[b]
            shift = ac + tau * (r - t - lc) + alpha
            k = (t, shift)
            if k not in factor_cache:
                factor_cache[k] = _box_factor(squares[t - 1], shift)
            term = term * factor_cache[k]
        result = result + term
    return result


def okounkov_specialized(lam, sp):
    """P_lam(mu + rho; 1; s - (n-1)/2) as a polynomial in mu_1..mu_r."""
    P = okounkov_poly(lam, OkounkovParams(sp.r, Fraction(1), sp.alpha))
    return P.shift(sp.rho)


def interpolation_point(mu, params):
    """mu + tau*delta + alpha*(1,..,1) with delta = (r-1, .., 0)."""
    r = params.r
    mu = make_partition(mu)
    if len(mu) > r:
        raise ValueError(f"{mu} has more than r={r} parts")
    mu = mu + (0,) * (r - len(mu))
    return [mu[i] + params.tau * (r - 1 - i) + params.alpha for i in range(r)]

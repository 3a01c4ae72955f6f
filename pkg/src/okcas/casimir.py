"""Casimir eigenvalues of gl_n and restricted Casimir polynomials."""

from fractions import Fraction
from functools import lru_cache

from .exactpoly import MPoly, to_rational
from .partitions import make_partition


class SingularScheunertDenominator(ZeroDivisionError):
    pass


def _weight(lam):
    return [to_rational(v) for v in lam]


def is_dominant(lam):
    lam = _weight(lam)
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def rho_vector(n):
    """rho_i = (n - (2i - 1)) / 2 for i = 1..n."""
    return [Fraction(n - (2 * i - 1), 2) for i in range(1, n + 1)]


def casimir_matrix(lam):
    """Upper-triangular A with A_ii = lam_i + (n - i) and -1 above the diagonal."""
    lam = _weight(lam)
    n = len(lam)
    return [
        [lam[i] + (n - 1 - i) if i == j else (Fraction(-1) if j > i else Fraction(0))
         for j in range(n)]
        for i in range(n)
    ]


def _matvec(A, v):
    return [sum((a * x for a, x in zip(row, v)), Fraction(0)) for row in A]


def casimir_eig_matrix(lam, k):
    """tr(A^k F), i.e. the sum of all entries of A^k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    A = casimir_matrix(lam)
    n = len(A)
    v = [Fraction(1)] * n
    for _ in range(k):
        v = _matvec(A, v)
    return sum(v, Fraction(0))


def scheunert_weights(lam):
    """a_i = prod_{j != i} (1 - 1/(lam_i - lam_j + rho_i - rho_j))."""
    lam = _weight(lam)
    n = len(lam)
    shifted = [l + r for l, r in zip(lam, rho_vector(n))]
    out = []
    for i in range(n):
        a = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            gap = shifted[i] - shifted[j]
            if gap == 0:
                raise SingularScheunertDenominator(
                    f"singular Scheunert denominator: lam_{i + 1}+rho_{i + 1} = lam_{j + 1}+rho_{j + 1}"
                )
            a *= 1 - 1 / gap
        out.append(a)
    return out


def casimir_eig_sum(lam, p):
    """sum_i a_i (lam_i + rho_i + (n-1)/2)^p."""
    if p < 0:
        raise ValueError("p must be nonnegative")
    lam = _weight(lam)
    n = len(lam)
    rho = rho_vector(n)
    half = Fraction(n - 1, 2)
    return sum(
        (a * (l + r + half) ** p for a, l, r in zip(scheunert_weights(lam), lam, rho)),
        Fraction(0),
    )


def folded_weight(r, n):
    """Generic folded weight (x_1..x_r, 0..0, -x_r..-x_1) as MPolys in r variables."""
    if r < 0 or n < 2 * r:
        raise ValueError(f"need n >= 2r >= 0, got n={n}, r={r}")
    xs = [MPoly.var(r, i) for i in range(r)]
    zeros = [MPoly.zero(r)] * (n - 2 * r)
    return xs + zeros + [-x for x in reversed(xs)]


@lru_cache(maxsize=None)
def restricted_casimir(i, n, r):
    """C_i(x_1..x_r) = c_i of the folded weight, via the symbolic matrix route."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    weight = folded_weight(r, n)
    diag = [w + (n - 1 - j) for j, w in enumerate(weight)]
    # v <- A v starting from the all-ones vector; sum(v) = tr(A^i F)
    v = [MPoly.const(r, 1)] * n
    for _ in range(i):
        suffix = MPoly.zero(r)
        nxt = [None] * n
        for j in range(n - 1, -1, -1):
            nxt[j] = diag[j] * v[j] - suffix
            suffix = suffix + v[j]
        v = nxt
    total = MPoly.zero(r)
    for x in v:
        total = total + x
    return total


def restricted_casimir_product(kappa, n, r):
    """C_kappa = prod_i C_{kappa_i}; the empty product is 1."""
    kappa = make_partition(kappa)
    result = MPoly.const(r, 1)
    for k in kappa:
        result = result * restricted_casimir(k, n, r)
    return result


def restricted_casimir_eval(i, n, x):
    """Pointwise C_i(x) through the Scheunert sum; needs distinct shifted entries."""
    x = _weight(x)
    r = len(x)
    if n < 2 * r:
        raise ValueError(f"need n >= 2r, got n={n}, r={r}")
    weight = x + [Fraction(0)] * (n - 2 * r) + [-v for v in reversed(x)]
    return casimir_eig_sum(weight, i)

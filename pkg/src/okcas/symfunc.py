"""Power sums, Schur polynomials, and change of basis into even power sums."""

from fractions import Fraction
from functools import lru_cache
from math import factorial
from itertools import permutations
from collections import Counter
import json

from .exactpoly import MPoly, format_rational, to_rational
from .partitions import make_partition, partitions_of, semistandard_tableaux, key, from_key


class NotBCSymmetric(ValueError):
    """Raised when a polynomial fails a permutation or sign-flip check."""


@lru_cache(maxsize=None)
def powersum_poly(kappa, r):
    """prod_i p_{kappa_i}(x_1..x_r); p of the empty partition is 1."""
    kappa = make_partition(kappa)
    result = MPoly.const(r, 1)
    for k in kappa:
        p = MPoly(r, {tuple(k if v == i else 0 for v in range(r)): 1 for i in range(r)})
        result = result * p
    return result


@lru_cache(maxsize=None)
def schur_poly(lam, r):
    """Schur polynomial as a sum over semistandard tableaux."""
    lam = make_partition(lam)
    terms = Counter()
    for rows in semistandard_tableaux(lam, r):
        exps = [0] * r
        for row in rows:
            for v in row:
                exps[v - 1] += 1
        terms[tuple(exps)] += 1
    return MPoly(r, dict(terms))


def z_mu(mu):
    """Centralizer size prod_i i^{m_i} m_i!."""
    out = 1
    for i, m in Counter(mu).items():
        out *= i**m * factorial(m)
    return out


def _beta_set(lam, size):
    return frozenset(p + size - 1 - k for k, p in enumerate(lam + (0,) * (size - len(lam))))


@lru_cache(maxsize=None)
def _mn(beta, mu):
    # Murnaghan-Nakayama on a beta-set: removing a rim hook of length h
    # moves a bead b -> b-h; sign is (-1)^(beads strictly between)
    if not mu:
        return 1
    h, rest = mu[0], mu[1:]
    total = 0
    for b in beta:
        t = b - h
        if t < 0 or t in beta:
            continue
        height = sum(1 for c in beta if t < c < b)
        total += (-1) ** height * _mn(beta - {b} | {t}, rest)
    return total


def character(lam, mu):
    """Irreducible S_n character chi^lam evaluated on cycle type mu."""
    lam = make_partition(lam)
    mu = make_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("lam and mu must be partitions of the same integer")
    return _mn(_beta_set(lam, len(lam)), mu)


def schur_in_powersums(lam):
    """{mu: a_mu} with s_lam = sum_mu a_mu p_mu."""
    lam = make_partition(lam)
    out = {}
    for mu in partitions_of(sum(lam)):
        chi = character(lam, mu)
        if chi:
            out[mu] = Fraction(chi, z_mu(mu))
    return out


def combination_poly(coeffs, r, doubled=False):
    """Evaluate sum_kappa c_kappa p_kappa (or p_{2 kappa}) as an MPoly."""
    result = MPoly.zero(r)
    for kappa, c in coeffs.items():
        if doubled:
            kappa = tuple(2 * k for k in kappa)
        result = result + powersum_poly(kappa, r).scale(c)
    return result


def check_bc_symmetric(p):
    """Raise NotBCSymmetric naming the first violated swap or sign flip."""
    r = p.nvars
    for i in range(r):
        if p.flip_sign(i) != p:
            raise NotBCSymmetric(f"not invariant under sign flip x{i + 1} -> -x{i + 1}")
    for i in range(r):
        for j in range(i + 1, r):
            perm = list(range(r))
            perm[i], perm[j] = j, i
            if p.permute(perm) != p:
                raise NotBCSymmetric(f"not invariant under swap x{i + 1} <-> x{j + 1}")


def is_bc_symmetric(p):
    try:
        check_bc_symmetric(p)
    except NotBCSymmetric:
        return False
    return True


def _leading_shape(exps):
    # exps all even for a BC-symmetric input; halve and sort to a partition
    return tuple(sorted((e // 2 for e in exps if e), reverse=True))


def to_even_powersum_basis(p):
    """Rewrite a BC-symmetric p as {kappa: c} with p = sum c * prod_i p_{2 kappa_i}.

    Keys have length <= nvars, which makes the representation unique.  At
    each step the highest remaining degree is taken, and within it the
    lexicographically smallest halved exponent shape nu: only p_{2 nu}
    contributes to that monomial, with coefficient prod m_i(nu)!.
    """
    check_bc_symmetric(p)
    r = p.nvars
    residual = p
    out = {}
    while residual:
        d = residual.degree()
        shapes = {_leading_shape(e) for e in residual.terms if sum(e) == d}
        nu = min(shapes)
        if len(nu) > r:
            raise AssertionError("internal error: shape longer than variable count")
        mono = tuple(2 * v for v in nu) + (0,) * (r - len(nu))
        lead = powersum_poly(tuple(2 * v for v in nu), r).coeff(mono)
        c = residual.coeff(mono) / lead
        out[nu] = out.get(nu, 0) + c
        residual = residual - powersum_poly(tuple(2 * v for v in nu), r).scale(c)
    return {k: v for k, v in out.items() if v}


def from_even_powersum_basis(coeffs, r):
    return combination_poly(coeffs, r, doubled=True)


def jacobi_trudi(lam, r):
    """Schur polynomial via det(h_{lam_i - i + j}); used as a cross-check."""
    lam = make_partition(lam)
    k = len(lam)
    if k == 0:
        return MPoly.const(r, 1)
    hs = {}

    def h(m):
        if m < 0:
            return MPoly.zero(r)
        if m not in hs:
            terms = {}
            _compositions(m, r, (), terms)
            hs[m] = MPoly(r, terms)
        return hs[m]

    mat = [[h(lam[i] - i + j) for j in range(k)] for i in range(k)]
    result = MPoly.zero(r)
    for perm in permutations(range(k)):
        sign = 1
        for a in range(k):
            for b in range(a + 1, k):
                if perm[a] > perm[b]:
                    sign = -sign
        term = MPoly.const(r, sign)
        for i in range(k):
            term = term * mat[i][perm[i]]
            if not term:
                break
        result = result + term
    return result


def _compositions(m, r, head, out):
    if len(head) == r - 1:
        out[head + (m,)] = 1
        return
    for a in range(m + 1):
        _compositions(m - a, r, head + (a,), out)


def coeffs_to_json_obj(coeffs):
    ordered = sorted(coeffs.items(), key=lambda kv: (-sum(kv[0]), tuple(-v for v in kv[0])))
    return {key(k): format_rational(v) for k, v in ordered}


def coeffs_to_json(coeffs):
    return json.dumps(coeffs_to_json_obj(coeffs))


def coeffs_from_json_obj(obj):
    return {from_key(k): to_rational(v) for k, v in obj.items()}

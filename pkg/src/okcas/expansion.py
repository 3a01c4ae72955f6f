"""Expansion of the specialized Okounkov polynomial in restricted Casimir products.

For a partition lam with at most r parts, compute the unique b_mu with

    P_lam(mu + rho; 1; s - (n-1)/2) = sum_mu b_mu C_{2 mu}(mu_1..mu_r),

where mu ranges over partitions with |mu| <= |lam| and at most r parts.
Both sides are moved to z = mu + rho, where they are BC-symmetric, and
written in the even power-sum basis; the resulting system is triangular
by degree.
"""

from dataclasses import dataclass, field
from fractions import Fraction
import json

from .casimir import restricted_casimir_product
from .exactpoly import format_rational, MPoly
from .okounkov import SpecializationParams, okounkov_specialized
from .partitions import key, length, make_partition, partitions_up_to, partitions_of
from .symfunc import (
    coeffs_to_json_obj,
    schur_in_powersums,
    schur_poly,
    to_even_powersum_basis,
)


class ExpansionFailed(ArithmeticError):
    pass


@dataclass
class ExpansionResult:
    lam: tuple
    n: int
    r: int
    s: Fraction
    coeffs: dict
    residual_zero: bool

    def to_json_obj(self):
        return {
            "lambda": list(self.lam),
            "n": self.n,
            "r": self.r,
            "s": format_rational(self.s),
            "coeffs": coeffs_to_json_obj(self.coeffs),
            "residual_zero": self.residual_zero,
        }

    def to_json(self):
        return json.dumps(self.to_json_obj())


def _check(lam, sp):
    lam = make_partition(lam)
    if length(lam) > sp.r:
        raise ValueError(f"{list(lam)} has more than r={sp.r} parts")
    return lam


def to_z(p, sp):
    """p(z - rho): moves a polynomial in mu to z = mu + rho."""
    return p.shift([-v for v in sp.rho])


def casimir_candidates(lam, r):
    return [k for k in partitions_up_to(sum(lam), max_length=r)]


def doubled(kappa):
    return tuple(2 * k for k in kappa)


def _solve(columns, target):
    """Exact Gaussian elimination; columns ordered by descending degree.

    Returns (solution, residual) where residual is target minus the fitted
    combination, as a coefficient map.
    """
    order = list(columns)
    rows = sorted({k for vec in columns.values() for k in vec} | set(target),
                  key=lambda k: (-sum(k), k))
    # augmented matrix, one dict per row
    mat = [{c: columns[c].get(row, Fraction(0)) for c in order} for row in rows]
    rhs = [target.get(row, Fraction(0)) for row in rows]
    pivots = []
    used = set()
    for c in order:
        pivot = None
        for i, row in enumerate(mat):
            if i not in used and row[c]:
                pivot = i
                break
        if pivot is None:
            raise ExpansionFailed(f"restricted Casimir product for {list(c)} is dependent")
        used.add(pivot)
        pivots.append((c, pivot))
        pv = mat[pivot][c]
        for i, row in enumerate(mat):
            if i != pivot and row[c]:
                f = row[c] / pv
                for cc in order:
                    if mat[pivot][cc]:
                        row[cc] -= f * mat[pivot][cc]
                rhs[i] -= f * rhs[pivot]
    solution = {c: rhs[i] / mat[i][c] for c, i in pivots}
    residual = {}
    for row in rows:
        v = target.get(row, Fraction(0)) - sum(
            (x * columns[c].get(row, Fraction(0)) for c, x in solution.items()), Fraction(0))
        if v:
            residual[row] = v
    return solution, residual


def expand(lam, sp, candidates=None):
    """Unique b_mu for the specialized Okounkov polynomial.

    ``candidates`` may reorder the candidate partitions; the answer does not
    depend on the order.
    """
    lam = _check(lam, sp)
    Qz = to_z(okounkov_specialized(lam, sp), sp)
    target = to_even_powersum_basis(Qz)
    if candidates is None:
        candidates = casimir_candidates(lam, sp.r)
    columns = {}
    for kappa in candidates:
        Cz = to_z(restricted_casimir_product(doubled(kappa), sp.n, sp.r), sp)
        columns[kappa] = to_even_powersum_basis(Cz)
    solution, residual = _solve(columns, target)
    if residual:
        raise ExpansionFailed(f"nonzero residual {residual} expanding {list(lam)}")
    coeffs = {k: v for k, v in solution.items() if v}
    return ExpansionResult(lam, sp.n, sp.r, sp.s, coeffs, residual_zero=True)


def resubstitute(result):
    """sum_mu b_mu C_{2 mu} as a polynomial in mu_1..mu_r."""
    total = MPoly.zero(result.r)
    for mu, b in result.coeffs.items():
        total = total + restricted_casimir_product(doubled(mu), result.n, result.r).scale(b)
    return total


def top_coefficients(lam):
    """{mu |- |lam| : a_mu / 2^l(mu)} from the power-sum expansion of s_lam."""
    return {mu: a / 2 ** length(mu) for mu, a in schur_in_powersums(lam).items()}


def reduced_top_coefficients(lam, r):
    """Top coefficients rewritten in the basis of C_{2 mu} with at most r parts.

    Agrees with :func:`top_coefficients` when r >= |lam|.  For smaller r the
    p_{2 mu} with more than r parts are dependent in r variables and are
    re-expressed through the shorter ones.
    """
    lam = make_partition(lam)
    if all(len(mu) <= r for mu in partitions_of(sum(lam))):
        return top_coefficients(lam)
    squares = schur_poly(lam, r).substitute_linear(
        [MPoly.var(r, i) ** 2 for i in range(r)])
    coords = to_even_powersum_basis(squares)
    return {mu: c / 2 ** length(mu) for mu, c in coords.items()}


@dataclass
class TheoremReport:
    lam: tuple
    n: int
    r: int
    s: Fraction
    top_coefficients: dict
    expected: dict
    observed: dict
    lower_order: dict
    reduced: bool
    degree_ok: bool
    residual_zero: bool
    mismatches: list = field(default_factory=list)

    @property
    def passed(self):
        return self.degree_ok and self.residual_zero and not self.mismatches

    def to_json_obj(self):
        return {
            "lambda": list(self.lam),
            "n": self.n,
            "r": self.r,
            "s": format_rational(self.s),
            "passed": self.passed,
            "top_coefficients": coeffs_to_json_obj(self.top_coefficients),
            "expected": coeffs_to_json_obj(self.expected),
            "observed": coeffs_to_json_obj(self.observed),
            "lower_order": coeffs_to_json_obj(self.lower_order),
            "reduced": self.reduced,
            "degree_ok": self.degree_ok,
            "residual_zero": self.residual_zero,
            "mismatches": [key(m) for m in self.mismatches],
        }

    def summary(self):
        status = "PASS" if self.passed else "FAIL"
        text = (f"{status} lambda={key(self.lam)} n={self.n} r={self.r} "
                f"s={format_rational(self.s)}")
        if self.mismatches:
            text += " mismatched " + " ".join(key(m) for m in self.mismatches)
        return text


def verify_theorem(lam, sp):
    """Check the top-degree part of the expansion against a_mu / 2^l(mu).

    Two checks: the difference between the specialized polynomial and
    sum_mu (a_mu / 2^l(mu)) C_{2 mu} over all mu |- |lam| has degree below
    2|lam|; and the computed b_mu with |mu| = |lam| equal those coefficients
    (after rewriting in the <= r part basis when r < |lam|).
    """
    lam = _check(lam, sp)
    result = expand(lam, sp)
    d = sum(lam)
    raw = top_coefficients(lam)
    expected = reduced_top_coefficients(lam, sp.r)
    reduced = any(len(mu) > sp.r for mu in raw)
    observed = {mu: b for mu, b in result.coeffs.items() if sum(mu) == d}
    lower = {mu: b for mu, b in result.coeffs.items() if sum(mu) < d}

    Q = okounkov_specialized(lam, sp)
    diff = Q
    for mu, c in raw.items():
        diff = diff - restricted_casimir_product(doubled(mu), sp.n, sp.r).scale(c)
    degree_ok = diff.is_zero() or diff.degree() < 2 * d

    mismatches = sorted(mu for mu in set(expected) | set(observed)
                        if expected.get(mu, 0) != observed.get(mu, 0))
    return TheoremReport(lam, sp.n, sp.r, sp.s, raw, expected, observed, lower,
                         reduced=reduced, degree_ok=degree_ok,
                         residual_zero=result.residual_zero, mismatches=mismatches)

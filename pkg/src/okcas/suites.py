"""Property suites behind ``okcas verify``.

Each suite yields ``(label, ok, detail)`` triples.  ``max_weight`` bounds
|lambda| (or lambda_1 for the eigenvalue grid) and ``max_rank`` bounds r.
"""

from fractions import Fraction
from itertools import combinations_with_replacement
import random

from .casimir import casimir_eig_matrix, casimir_eig_sum, restricted_casimir
from .exactpoly import MPoly
from .expansion import verify_theorem
from .okounkov import OkounkovParams, SpecializationParams, interpolation_point, okounkov_poly
from .partitions import contains, key, partitions_up_to
from .symfunc import check_bc_symmetric, NotBCSymmetric, powersum_poly, schur_poly

ALPHAS = (Fraction(0), Fraction(3, 7), Fraction(-5, 2))


def dominant_weights(n, max_part):
    for combo in combinations_with_replacement(range(max_part, -1, -1), n):
        yield combo


def oracle_suite(max_weight=4, max_rank=5, max_k=8, n_random=50, seed=0):
    """Matrix-trace eigenvalue against the Scheunert sum."""
    for n in range(1, max_rank + 1):
        bad = []
        count = 0
        for lam in dominant_weights(n, max_weight):
            for k in range(max_k + 1):
                count += 1
                if casimir_eig_matrix(lam, k) != casimir_eig_sum(lam, k):
                    bad.append((lam, k))
        yield f"oracle n={n} lambda_1<={max_weight} k<={max_k}", not bad, f"{count} cases, {len(bad)} mismatches"
    rng = random.Random(seed)
    bad = []
    for _ in range(n_random):
        n = rng.randint(1, max_rank)
        lam = sorted((rng.randint(0, 20) for _ in range(n)), reverse=True)
        for k in range(max_k + 1):
            if casimir_eig_matrix(lam, k) != casimir_eig_sum(lam, k):
                bad.append((tuple(lam), k))
    yield f"oracle random x{n_random}", not bad, f"{len(bad)} mismatches"


def squares(r):
    return [MPoly.var(r, i) ** 2 for i in range(r)]


def topdegree_suite(max_weight=5, max_rank=4, max_i=4):
    """Top homogeneous parts: P_lam vs s_lam(x^2), and C_{2i} vs 2 p_{2i}."""
    for r in range(1, max_rank + 1):
        bad = []
        for lam in partitions_up_to(max_weight):
            for alpha in ALPHAS:
                P = okounkov_poly(lam, OkounkovParams(r, 1, alpha))
                S = schur_poly(lam, r).substitute_linear(squares(r))
                if P.is_zero() or S.is_zero():
                    ok = P.is_zero() and S.is_zero()
                else:
                    ok = P.top_homogeneous() == S
                if not ok:
                    bad.append((lam, alpha))
        yield f"okounkov top degree r={r} |lambda|<={max_weight}", not bad, f"{len(bad)} mismatches"
    for r in range(1, min(max_rank, 3) + 1):
        bad = []
        for n in (2 * r, 2 * r + 1, 2 * r + 2):
            for i in range(1, max_i + 1):
                top = restricted_casimir(2 * i, n, r).top_homogeneous()
                if top != powersum_poly((2 * i,), r).scale(2):
                    bad.append((n, i))
        yield f"casimir top degree r={r} i<={max_i}", not bad, f"{len(bad)} mismatches"


def symmetry_suite(max_weight=4, max_rank=3):
    for r in range(1, max_rank + 1):
        bad = []
        for lam in partitions_up_to(max_weight, max_length=r):
            for alpha in ALPHAS:
                try:
                    check_bc_symmetric(okounkov_poly(lam, OkounkovParams(r, 1, alpha)))
                except NotBCSymmetric:
                    bad.append((lam, alpha))
        yield f"BC symmetry r={r} |lambda|<={max_weight}", not bad, f"{len(bad)} failures"


def vanishing_suite(max_weight=3, max_rank=3):
    for r in range(1, max_rank + 1):
        bad = []
        count = 0
        for lam in partitions_up_to(max_weight, max_length=r):
            for alpha in ALPHAS:
                params = OkounkovParams(r, 1, alpha)
                P = okounkov_poly(lam, params)
                for mu in partitions_up_to(sum(lam) + 2, max_length=r):
                    if contains(mu, lam):
                        continue
                    count += 1
                    if P.eval(interpolation_point(mu, params)):
                        bad.append((lam, mu, alpha))
        yield f"vanishing r={r} |lambda|<={max_weight}", not bad, f"{count} points, {len(bad)} nonzero"


def theorem_suite(max_weight=3, max_rank=2, ns=None, ss=(Fraction(0), Fraction(1, 2), Fraction(2))):
    """Top coefficients of the expansion, plus their n,s-independence."""
    for r in range(1, max_rank + 1):
        for lam in partitions_up_to(max_weight, max_length=r):
            tops = set()
            for n in (ns or (2 * r, 2 * r + 1)):
                for s in ss:
                    report = verify_theorem(lam, SpecializationParams(n, r, s))
                    tops.add(tuple(sorted(report.observed.items())))
                    yield report.summary(), report.passed, "reduced basis" if report.reduced else ""
            yield f"n,s-independence lambda={key(lam)} r={r}", len(tops) == 1, f"{len(tops)} distinct top maps"


SUITES = {
    "oracle": oracle_suite,
    "topdegree": topdegree_suite,
    "theorem": theorem_suite,
    "vanishing": vanishing_suite,
    "symmetry": symmetry_suite,
}


def run_suite(name, max_weight=None, max_rank=None):
    names = list(SUITES) if name == "all" else [name]
    for nm in names:
        kwargs = {}
        if max_weight is not None:
            kwargs["max_weight"] = max_weight
        if max_rank is not None:
            kwargs["max_rank"] = max_rank
        for label, ok, detail in SUITES[nm](**kwargs):
            yield nm, label, ok, detail

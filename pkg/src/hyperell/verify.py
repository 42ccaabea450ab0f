"""Cross-route identity suites.

Each suite pits independent computation paths against each other on a whole
ensemble (or a seeded sample when the ensemble is large): enumeration count
against the closed form, batch character sums against the coefficient
symmetry, the two-block central-value formula against direct evaluation,
point counting against character sums, the reciprocity law, and the square
sieve.  All comparisons are exact except the root-modulus diagnostic, which
carries a pinned tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import curve, scan
from .characters import reciprocity_holds
from .ensemble import EnsembleSpec, expected_value, expected_value_sieved
from .lfunction import LPolynomial, afe_central_value, rh_root_deviation
from .polyring import degree, gcd, monic_by_code, shared_table
from .sqrtq import SqrtQRational

EXHAUSTIVE_LIMIT = 10_000


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: dict


def scaled_center_coords(a: np.ndarray, q: int, g: int):
    """(rational, sqrt-q) coordinates of the center value, scaled by q^g.

    Integer arithmetic throughout: coefficient n contributes q^(g - n/2)
    (even n) to the rational part or q^(g - (n+1)/2) * sqrt(q) (odd n).
    """
    rat = np.zeros(len(a), dtype=np.int64)
    irr = np.zeros(len(a), dtype=np.int64)
    for n in range(2 * g + 1):
        if n % 2 == 0:
            rat += a[:, n] * q ** (g - n // 2)
        else:
            irr += a[:, n] * q ** (g - (n + 1) // 2)
    return rat, irr


def scaled_afe_coords(a: np.ndarray, q: int, g: int):
    """Same coordinates from the two-block formula (coefficients up to g only)."""
    rat = np.zeros(len(a), dtype=np.int64)
    irr = np.zeros(len(a), dtype=np.int64)
    for n in range(g + 1):
        w = 2 if n <= g - 1 else 1
        if n % 2 == 0:
            rat += w * a[:, n] * q ** (g - n // 2)
        else:
            irr += w * a[:, n] * q ** (g - (n + 1) // 2)
    return rat, irr


def run_identity_suite(
    q: int,
    g: int,
    *,
    sample_size: int = 2000,
    seed: int = 1,
    oracle_limit: int = 100,
    rh_tol: float = 1e-9,
    inject_fault: bool = False,
) -> list:
    """Run every applicable cross-check for one (q, g); returns CheckResults."""
    spec = EnsembleSpec(q, g)
    d = spec.poly_degree
    table = shared_table(q, max(1, d // 2, 2 * g))
    results: list = []

    exhaustive = spec.size <= EXHAUSTIVE_LIMIT
    if exhaustive:
        mask = scan.squarefree_mask(q, d, table)
        codes = np.nonzero(mask)[0].astype(np.int64)
        results.append(
            CheckResult(
                name="ensemble_count",
                passed=len(codes) == spec.size,
                details={"enumerated": int(len(codes)), "closed_form": spec.size},
            )
        )
    else:
        codes = scan.sample_codes(q, d, sample_size, seed)

    a = scan.batch_coefficients(q, d, codes, 2 * g, table)
    if inject_fault:
        a = a.copy()
        a[0, 1] += 1  # negative control: corrupt one coefficient

    ok_const = bool((a[:, 0] == 1).all())
    ok_lead = bool((a[:, 2 * g] == q**g).all())
    results.append(
        CheckResult(
            name="coefficient_endpoints",
            passed=ok_const and ok_lead,
            details={"constant_term_one": ok_const, "leading_is_q_pow_g": ok_lead},
        )
    )

    fe_ok = all(
        bool((a[:, n] * q ** (g - n) == a[:, 2 * g - n]).all()) for n in range(g + 1)
    )
    results.append(
        CheckResult(
            name="functional_equation",
            passed=fe_ok,
            details={"curves": int(len(codes)), "mode": "exhaustive" if exhaustive else "sample"},
        )
    )

    c_rat, c_irr = scaled_center_coords(a, q, g)
    f_rat, f_irr = scaled_afe_coords(a, q, g)
    afe_ok = bool((c_rat == f_rat).all() and (c_irr == f_irr).all())
    results.append(
        CheckResult(
            name="two_block_center_identity",
            passed=afe_ok,
            details={"curves": int(len(codes))},
        )
    )

    worst = 0.0
    for row, code in zip(a, codes):
        L = LPolynomial(q=q, D=monic_by_code(int(code), d, q), coeffs=tuple(int(x) for x in row), lam=0)
        worst = max(worst, rh_root_deviation(L))
    results.append(
        CheckResult(
            name="root_modulus",
            passed=worst <= rh_tol,
            details={"worst_relative_deviation": worst, "tolerance": rh_tol},
        )
    )

    if g <= 6:
        if exhaustive and len(codes) <= oracle_limit:
            oracle_codes = codes
        elif exhaustive:
            rng = np.random.Generator(np.random.PCG64(seed))
            oracle_codes = rng.choice(codes, size=oracle_limit, replace=False)
        else:
            oracle_codes = codes[:oracle_limit]
        code_index = {int(c): i for i, c in enumerate(codes)}
        mismatches = 0
        for code in oracle_codes:
            D = monic_by_code(int(code), d, q)
            zc = curve.zeta_numerator(D, q).coeffs
            if list(zc) != list(a[code_index[int(code)]]):
                mismatches += 1
        results.append(
            CheckResult(
                name="point_count_oracle",
                passed=mismatches == 0,
                details={"curves": int(len(oracle_codes)), "mismatches": mismatches},
            )
        )

    results.append(_reciprocity_suite(q, seed))

    if spec.monic_count <= 2500:
        direct = expected_value(lambda D: afe_central_value(D, q), q, g)
        sieved = expected_value_sieved(lambda D: afe_central_value(D, q), q, g, table)
        results.append(
            CheckResult(
                name="square_sieve_identity",
                passed=direct == sieved,
                details={"average": str(direct)},
            )
        )

    return results


def _reciprocity_suite(q: int, seed: int, pairs: int = 200) -> CheckResult:
    rng = np.random.Generator(np.random.PCG64(seed + 1))
    max_deg = 5
    checked = 0
    failed = 0
    while checked < pairs:
        da = int(rng.integers(1, max_deg + 1))
        db = int(rng.integers(1, max_deg + 1))
        A = monic_by_code(int(rng.integers(0, q**da)), da, q)
        B = monic_by_code(int(rng.integers(0, q**db)), db, q)
        if degree(gcd(A, B, q)) != 0:
            continue
        checked += 1
        if not reciprocity_holds(A, B, q):
            failed += 1
    return CheckResult(
        name="reciprocity",
        passed=failed == 0,
        details={"pairs": pairs, "failed": failed, "max_degree": max_deg},
    )


def suite_passed(results: list) -> bool:
    return all(r.passed for r in results)

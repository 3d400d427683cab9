"""
Coprime pairs and the ratio set of an interval

For A = {1, ..., N} the ratio set (A+A)/(A+A) consists of the reduced
fractions p/q with 2 <= p, q <= 2N, so its size follows the density 6/π² of
coprime pairs. Counting is exact: a vectorised gcd table, cross-checked against
a totient sieve.
"""

import logging
import math
from fractions import Fraction

import numpy as np

from src.sets.scalar_set import DEFAULT_SIZE_CAP, ScalarSet, SetOp, pairwise
from src.utils.errors import InvariantViolation
from src.utils.reporting import VerificationReport, stopwatch


logger = logging.getLogger(__name__)

COPRIME_DENSITY = 6 / math.pi ** 2
UPPER_CHECK_FROM = 50


def coprime_pair_count(limit: int) -> int:
    """Ordered pairs (n, m), 1 <= n, m <= limit, with gcd 1"""
    if limit < 1:
        return 0
    values = np.arange(1, limit + 1, dtype=np.int64)
    return int((np.gcd.outer(values, values) == 1).sum())


def totient_table(limit: int) -> np.ndarray:
    """φ(0..limit) by sieve"""
    phi = np.arange(limit + 1, dtype=np.int64)
    for p in range(2, limit + 1):
        if phi[p] == p:
            phi[p::p] -= phi[p::p] // p
    return phi


def coprime_pair_count_totient(limit: int) -> int:
    """2 · Σ_{k<=limit} φ(k) - 1"""
    if limit < 1:
        return 0
    return int(2 * totient_table(limit)[1:].sum() - 1)


def interval(n: int) -> ScalarSet:
    return ScalarSet(range(1, n + 1))


def coprime_density(n: int, size_cap: int = DEFAULT_SIZE_CAP) -> VerificationReport:
    """
    Coprime density on [1, 2N]² and the exact ratio set of {1..N}

    pass iff 2N² - 1 <= |(A+A)/(A+A)| and, for N >= 50, |(A+A)/(A+A)| < 2.5·N².
    The density, its distance to 6/π² and |(A+A)(A+A)|/N² are reported.

    Raises:
        ValueError: If N < 1
        InvariantViolation: If the gcd table and the totient sieve disagree
    """
    if n < 1:
        raise ValueError(f"N must be positive, got {n}")
    with stopwatch() as timing:
        limit = 2 * n
        pairs = coprime_pair_count(limit)
        by_totient = coprime_pair_count_totient(limit)
        if pairs != by_totient:
            raise InvariantViolation(
                "coprime counts disagree", {"gcd_table": pairs, "totient": by_totient}
            )
        density = Fraction(pairs, limit * limit)

        a = interval(n)
        sums = pairwise(a, a, SetOp.ADD, size_cap).result
        ratios = pairwise(sums, sums, SetOp.DIV, size_cap).result
        products = pairwise(sums, sums, SetOp.MUL, size_cap).result

    measured = len(ratios)
    lower = 2 * n * n - 1
    passed = measured >= lower
    notes = []
    if n >= UPPER_CHECK_FROM:
        passed = passed and Fraction(measured) < Fraction(5, 2) * n * n
        notes.append("upper check |(A+A)/(A+A)| < 2.5·N² applied")
    relative_error = abs(float(density) - COPRIME_DENSITY) / COPRIME_DENSITY
    logger.info(f"Coprime density for N={n}: {float(density):.6f} (6/π² = {COPRIME_DENSITY:.6f})")
    return VerificationReport(
        task="coprime",
        input={"N": n},
        bound=str(lower),
        measured=str(measured),
        passed=passed,
        constants={
            "coprime_pairs": pairs,
            "density": density,
            "density_float": round(float(density), 9),
            "reference": round(COPRIME_DENSITY, 9),
            "relative_error": round(relative_error, 9),
            "ratio_over_n2": Fraction(measured, n * n),
            "product_set_over_n2": Fraction(len(products), n * n),
        },
        elapsed_ms=timing["ms"],
        notes=notes + ["density and product_set_over_n2 are advisory"],
    )

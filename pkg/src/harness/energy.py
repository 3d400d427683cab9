"""
Multiplicative energy of A + A

E = #{(a1, ..., a8) in A^8 : (a1 + a2)(a3 + a4) = (a5 + a6)(a7 + a8)},
counted as the sum of squared multiplicities of the products over ordered
4-tuples. The same value is reached through the ratio form
(a1 + a2)/(a5 + a6) = (a7 + a8)/(a3 + a4), and by Cauchy-Schwarz
|(A+A)(A+A)| · E >= |A|^8 and |(A+A)/(A+A)| · E >= |A|^8.
"""

import itertools
import logging
import math
from collections import Counter
from fractions import Fraction
from typing import Dict

from src.sets.scalar_set import ScalarSet
from src.utils.errors import InvariantViolation
from src.utils.reporting import VerificationReport, set_input, stopwatch


logger = logging.getLogger(__name__)


def _require_positive(a: ScalarSet) -> None:
    if not a or not a.is_positive_real():
        raise ValueError("energy counting requires a nonempty set of positive reals")


def sum_multiplicities(a: ScalarSet) -> Counter:
    """s -> #{(a1, a2) : a1 + a2 = s}"""
    return Counter(x + y for x in a for y in a)


def product_multiplicities(a: ScalarSet) -> Dict[Fraction, int]:
    """v -> #{(a1, a2, a3, a4) : (a1 + a2)(a3 + a4) = v}"""
    sums = sum_multiplicities(a)
    products: Counter = Counter()
    for s, ms in sums.items():
        for t, mt in sums.items():
            products[s * t] += ms * mt
    return products


def quotient_multiplicities(a: ScalarSet) -> Dict[Fraction, int]:
    """v -> #{(a1, a2, a3, a4) : (a1 + a2)/(a3 + a4) = v}"""
    sums = sum_multiplicities(a)
    quotients: Counter = Counter()
    for s, ms in sums.items():
        for t, mt in sums.items():
            quotients[s / t] += ms * mt
    return quotients


def energy_count(a: ScalarSet) -> int:
    """
    Exact multiplicative energy of A + A

    Raises:
        ValueError: If A is empty or has a nonpositive element
    """
    _require_positive(a)
    return sum(m * m for m in product_multiplicities(a).values())


def energy_ratio_form(a: ScalarSet) -> int:
    _require_positive(a)
    return sum(m * m for m in quotient_multiplicities(a).values())


def energy_direct(a: ScalarSet) -> int:
    """Brute force over all |A|^8 tuples (oracle for small sets)"""
    _require_positive(a)
    return sum(
        1
        for t in itertools.product(a, repeat=8)
        if (t[0] + t[1]) * (t[2] + t[3]) == (t[4] + t[5]) * (t[6] + t[7])
    )


def energy_report(a: ScalarSet) -> VerificationReport:
    """
    Energy with its Cauchy-Schwarz consequences as hard checks

    pass iff the ratio form agrees and E >= |A|^8 / min-support, where the
    support sizes are |(A+A)(A+A)| and |(A+A)/(A+A)|.
    """
    with stopwatch() as timing:
        energy = energy_count(a)
        ratio_energy = energy_ratio_form(a)
        n = len(a)
        product_support = len(product_multiplicities(a))
        quotient_support = len(quotient_multiplicities(a))
        bound = max(Fraction(n ** 8, product_support), Fraction(n ** 8, quotient_support))

    if ratio_energy != energy:
        raise InvariantViolation(
            "ratio form disagrees with product form",
            {"product_form": energy, "ratio_form": ratio_energy},
        )
    constants = {
        "product_set_size": product_support,
        "ratio_set_size": quotient_support,
        "ratio_form": ratio_energy,
    }
    notes = []
    if n >= 2:
        advisory = energy / (n ** 6 * math.log(n))
        constants["energy_over_n6_log_n"] = round(advisory, 9)
        notes.append("energy_over_n6_log_n is advisory")
    return VerificationReport(
        task="energy",
        input=set_input(A=a),
        bound=str(bound),
        measured=str(energy),
        passed=energy >= bound,
        constants=constants,
        elapsed_ms=timing["ms"],
        notes=notes,
    )

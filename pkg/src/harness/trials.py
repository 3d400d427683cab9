"""
Seeded trial generation

Random finite sets for property checks and conjecture scans. Every set is a
pure function of the TrialSpec: a 64-bit linear congruential generator
(multiplier 6364136223846793005, increment 1442695040888963407) whose high 32
bits give each draw, so trials are reproducible across runs and platforms.

Example:
    spec = TrialSpec(seed=42, set_size=3, trials=10)
    sets = trial_sets(spec)
    results = run_trials(verify_thm1, sets, max_workers=4)
"""

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, TypeVar

from src.arith.gaussian import GaussianRational
from src.arith.scalars import ScalarKind
from src.sets.scalar_set import ScalarSet


logger = logging.getLogger(__name__)

T = TypeVar("T")

_MASK64 = (1 << 64) - 1
_MAX_ATTEMPTS_PER_ELEMENT = 1000


class Lcg64:
    """64-bit linear congruential generator with high-32 extraction"""

    MULTIPLIER = 6364136223846793005
    INCREMENT = 1442695040888963407

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u32(self) -> int:
        self.state = (self.MULTIPLIER * self.state + self.INCREMENT) & _MASK64
        return self.state >> 32

    def uniform(self, upper: int) -> int:
        """Draw from [1, upper]"""
        return 1 + self.next_u32() % upper

    def sign(self) -> int:
        return 1 if self.next_u32() & 1 else -1


class TrialDomain(Enum):
    """Where random elements come from"""
    POSITIVE_INTEGERS = "positive-integers"
    POSITIVE_RATIONALS = "positive-rationals"
    GAUSSIAN_RATIONALS = "gaussian-rationals"


@dataclass(frozen=True)
class TrialSpec:
    """
    Attributes:
        seed: Generator seed (64-bit)
        set_size: Elements per generated set
        trials: Number of sets
        domain: Element domain
        max_value: M; integers lie in [1, M], rationals have numerator and denominator in [1, M]
    """
    seed: int
    set_size: int
    trials: int
    domain: TrialDomain = TrialDomain.POSITIVE_INTEGERS
    max_value: int = 100

    def __post_init__(self):
        if self.set_size < 1:
            raise ValueError(f"set size must be positive, got {self.set_size}")
        if self.trials < 0:
            raise ValueError(f"trial count must be non-negative, got {self.trials}")
        if self.max_value < 1:
            raise ValueError(f"max value must be positive, got {self.max_value}")

    @classmethod
    def parse(cls, text: str, default_seed: int = 0) -> "TrialSpec":
        """
        Parse ``size=N,trials=T,seed=S,domain=D[,max=M]``

        Raises:
            ValueError: On unknown keys or malformed values
        """
        fields = {}
        for item in filter(None, (part.strip() for part in text.split(","))):
            if "=" not in item:
                raise ValueError(f"expected key=value in random spec, got {item!r}")
            key, value = (s.strip() for s in item.split("=", 1))
            fields[key] = value
        unknown = set(fields) - {"size", "trials", "seed", "domain", "max"}
        if unknown:
            raise ValueError(f"unknown random spec key(s): {', '.join(sorted(unknown))}")
        return cls(
            seed=int(fields.get("seed", default_seed)),
            set_size=int(fields.get("size", 5)),
            trials=int(fields.get("trials", 1)),
            domain=TrialDomain(fields.get("domain", TrialDomain.POSITIVE_INTEGERS.value)),
            max_value=int(fields.get("max", 100)),
        )


def _draw(rng: Lcg64, domain: TrialDomain, upper: int):
    if domain is TrialDomain.POSITIVE_INTEGERS:
        return Fraction(rng.uniform(upper))
    if domain is TrialDomain.POSITIVE_RATIONALS:
        return Fraction(rng.uniform(upper), rng.uniform(upper))
    re = rng.sign() * Fraction(rng.uniform(upper), rng.uniform(upper))
    im = rng.sign() * Fraction(rng.uniform(upper), rng.uniform(upper))
    return GaussianRational(re, im)


def random_set(spec: TrialSpec, rng: Optional[Lcg64] = None) -> ScalarSet:
    """
    One set of spec.set_size distinct elements, duplicates rejected

    Args:
        spec: Trial description
        rng: Generator to draw from; a fresh one seeded with spec.seed by default

    Raises:
        ValueError: If the domain cannot hold set_size distinct elements
    """
    if spec.domain is TrialDomain.POSITIVE_INTEGERS and spec.set_size > spec.max_value:
        raise ValueError(
            f"domain too small: {spec.set_size} distinct integers requested from [1, {spec.max_value}]"
        )
    rng = rng or Lcg64(spec.seed)
    members = set()
    attempts = 0
    while len(members) < spec.set_size:
        attempts += 1
        if attempts > _MAX_ATTEMPTS_PER_ELEMENT * spec.set_size:
            raise ValueError(
                f"domain too small: only {len(members)} distinct values after {attempts - 1} draws"
            )
        members.add(_draw(rng, spec.domain, spec.max_value))
    kind = ScalarKind.COMPLEX if spec.domain is TrialDomain.GAUSSIAN_RATIONALS else ScalarKind.REAL
    return ScalarSet.from_members(members, kind)


def trial_sets(spec: TrialSpec) -> List[ScalarSet]:
    """spec.trials sets drawn in sequence from one generator"""
    rng = Lcg64(spec.seed)
    return [random_set(spec, rng) for _ in range(spec.trials)]


def run_trials(fn: Callable[[ScalarSet], T], sets: Sequence[ScalarSet], max_workers: int = 1) -> List[T]:
    """
    Apply fn to every set, results in trial order

    Exceptions raised by fn propagate after all submitted trials finish.
    """
    if max_workers <= 1 or len(sets) <= 1:
        return [fn(s) for s in sets]

    results: List[Optional[T]] = [None] * len(sets)
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        futures = {executor.submit(fn, s): index for index, s in enumerate(sets)}
        for future in as_completed(futures):
            results[futures[future]] = future.result()
    logger.debug(f"Ran {len(sets)} trials on {max_workers} workers")
    return results

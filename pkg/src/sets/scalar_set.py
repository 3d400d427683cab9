"""
Scalar Sets

Immutable, deduplicated, canonically ordered finite sets of exact scalars
together with the elementwise set operations: sumset, difference set, product
set, ratio set, their k-fold iterates and representation counts.

Example:
    from src.sets.scalar_set import ScalarSet, SetOp, pairwise, kfold_sum

    A = ScalarSet([1, 2, 3])
    (A + A) / (A + A)                       # 17 elements
    pairwise(A, A, SetOp.DIV).skipped_pairs  # 0
    kfold_sum(A, 4, early_exit_target=9).lower_bound
"""

import logging
import operator
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Tuple

from src.arith.gaussian import GaussianRational
from src.arith.scalars import (
    Scalar,
    ScalarKind,
    coerce_scalar,
    divide,
    format_scalar,
    is_zero,
    kind_of,
    scalar_sort_key,
)
from src.utils.errors import SizeCapExceeded


logger = logging.getLogger(__name__)

DEFAULT_SIZE_CAP = 10_000_000


class SetOp(Enum):
    """Elementwise binary set operations"""
    ADD = "+"
    SUB = "-"
    MUL = "*"
    DIV = "/"

    @classmethod
    def from_symbol(cls, symbol: str) -> "SetOp":
        aliases = {"−": "-", "×": "*", "÷": "/"}
        return cls(aliases.get(symbol, symbol))


_SCALAR_OPS: Dict[SetOp, Callable] = {
    SetOp.ADD: operator.add,
    SetOp.SUB: operator.sub,
    SetOp.MUL: operator.mul,
}


class ScalarSet:
    """
    Finite set of reals or of Gaussian rationals

    Elements are stored once each, sorted numerically (reals) or
    lexicographically by (re, im) (complex). Instances never change after
    construction.
    """

    __slots__ = ("_kind", "_elements", "_members", "_integral")

    def __init__(self, elements: Iterable = (), kind: Optional[ScalarKind] = None):
        """
        Build a set from scalars, literal strings or ints

        Args:
            elements: Values to include (duplicates collapse)
            kind: Force the kind; reals are lifted when COMPLEX is requested

        Mixed input is a complex set; a real r stands for r + 0i.

        Raises:
            ValueError: On complex values with kind REAL
        """
        coerced = [coerce_scalar(e) for e in elements]
        kinds = {kind_of(e) for e in coerced}
        if kind is None:
            kind = ScalarKind.COMPLEX if ScalarKind.COMPLEX in kinds else ScalarKind.REAL
        if kind is ScalarKind.COMPLEX:
            coerced = [GaussianRational.of(e) for e in coerced]
        elif ScalarKind.COMPLEX in kinds:
            raise ValueError("kind mismatch: complex element in a real set")
        self._init_members(frozenset(coerced), kind)

    def _init_members(self, members: frozenset, kind: ScalarKind) -> None:
        self._kind = kind
        self._members = members
        self._elements = tuple(sorted(members, key=scalar_sort_key))
        self._integral: Optional[bool] = None

    @classmethod
    def from_members(cls, members: Iterable[Scalar], kind: ScalarKind) -> "ScalarSet":
        """Fast constructor for values already in canonical form and of one kind"""
        instance = cls.__new__(cls)
        instance._init_members(frozenset(members), kind)
        return instance

    @property
    def kind(self) -> ScalarKind:
        return self._kind

    @property
    def elements(self) -> Tuple[Scalar, ...]:
        return self._elements

    @property
    def is_integral(self) -> bool:
        """True for real sets whose elements are all integers"""
        if self._integral is None:
            self._integral = self._kind is ScalarKind.REAL and all(
                e.denominator == 1 for e in self._elements
            )
        return self._integral

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self._elements)

    def __contains__(self, value) -> bool:
        return value in self._members

    def __eq__(self, other) -> bool:
        if not isinstance(other, ScalarSet):
            return NotImplemented
        return self._kind is other._kind and self._members == other._members

    def __hash__(self) -> int:
        return hash((self._kind, self._members))

    def __repr__(self) -> str:
        return f"ScalarSet({self.format()})"

    def format(self) -> str:
        return "{" + ", ".join(format_scalar(e) for e in self._elements) + "}"

    def as_frozenset(self) -> frozenset:
        return self._members

    def as_complex(self) -> "ScalarSet":
        if self._kind is ScalarKind.COMPLEX:
            return self
        return ScalarSet.from_members(
            (GaussianRational.of(e) for e in self._elements), ScalarKind.COMPLEX
        )

    def is_positive_real(self) -> bool:
        return self._kind is ScalarKind.REAL and all(e > 0 for e in self._elements)

    def without_zero(self) -> "ScalarSet":
        kept = [e for e in self._elements if not is_zero(e)]
        if len(kept) == len(self._elements):
            return self
        return ScalarSet.from_members(kept, self._kind)

    def __add__(self, other: "ScalarSet") -> "ScalarSet":
        return pairwise(self, other, SetOp.ADD).result

    def __sub__(self, other: "ScalarSet") -> "ScalarSet":
        return pairwise(self, other, SetOp.SUB).result

    def __mul__(self, other: "ScalarSet") -> "ScalarSet":
        return pairwise(self, other, SetOp.MUL).result

    def __truediv__(self, other: "ScalarSet") -> "ScalarSet":
        return pairwise(self, other, SetOp.DIV).result


@dataclass(frozen=True)
class PairwiseResult:
    """
    Result of an elementwise set operation

    Attributes:
        result: Deduplicated result set
        skipped_pairs: Pairs dropped for a zero denominator (division only)
    """
    result: ScalarSet
    skipped_pairs: int = 0


def _check_same_kind(x: ScalarSet, y: ScalarSet) -> None:
    if x.kind is not y.kind:
        raise ValueError(f"kind mismatch: {x.kind.value} vs {y.kind.value}")


def pairwise(
    x: ScalarSet,
    y: ScalarSet,
    op: SetOp,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> PairwiseResult:
    """
    Elementwise x op y over all pairs

    For division the result is {a / b : a in x, b in y, b != 0}; pairs with a
    zero denominator are skipped and counted.

    Raises:
        ValueError: On kind mismatch, empty operands, or an empty quotient
        SizeCapExceeded: If |x|·|y| exceeds size_cap
    """
    _check_same_kind(x, y)
    if not x or not y:
        raise ValueError("pairwise operation needs nonempty sets")
    projected = len(x) * len(y)
    if projected > size_cap:
        raise SizeCapExceeded(projected, size_cap, f"pairwise {op.value}")

    if op is SetOp.DIV:
        members = set()
        skipped = 0
        for b in y:
            if is_zero(b):
                skipped += len(x)
                continue
            for a in x:
                members.add(divide(a, b))
        if not members:
            raise ValueError("empty result")
        return PairwiseResult(ScalarSet.from_members(members, x.kind), skipped)

    fn = _SCALAR_OPS[op]
    if x.is_integral and y.is_integral:
        # integer fast path; Fraction arithmetic dominates otherwise
        xs = [e.numerator for e in x]
        ys = [e.numerator for e in y]
        members = {Fraction(v) for v in {fn(a, b) for a in xs for b in ys}}
    else:
        members = {fn(a, b) for a in x for b in y}
    return PairwiseResult(ScalarSet.from_members(members, x.kind))


@dataclass(frozen=True)
class LowerBoundCertificate:
    """
    Proof that |kX| >= target without building kX

    Valid because |X + Y| >= max(|X|, |Y|) for nonempty sets, so
    |kX| >= |jX| for every j <= k.

    Attributes:
        k: Requested fold
        target: Requested cardinality
        witnessed_fold: The j <= k whose jX was built
        witnessed_size: |jX| (>= target)
    """
    k: int
    target: int
    witnessed_fold: int
    witnessed_size: int

    def describe(self) -> str:
        return (
            f"|{self.k}X| >= |{self.witnessed_fold}X| = {self.witnessed_size} "
            f">= {self.target}"
        )


@dataclass
class KFoldResult:
    """Exact k-fold set, or a lower-bound certificate when expansion stopped early"""
    k: int
    exact: Optional[ScalarSet] = None
    certificate: Optional[LowerBoundCertificate] = None

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    @property
    def lower_bound(self) -> int:
        if self.exact is not None:
            return len(self.exact)
        return self.certificate.witnessed_size


def kfold_sum(
    x: ScalarSet,
    k: int,
    early_exit_target: Optional[int] = None,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> KFoldResult:
    """
    k-fold sumset kX by binary decomposition of k

    Args:
        x: Nonempty set
        k: Number of summands (>= 1)
        early_exit_target: Stop as soon as some jX (j <= k) reaches this size
        size_cap: Largest |X|·|Y| grid any single step may enumerate

    Returns:
        KFoldResult holding kX or a LowerBoundCertificate

    Raises:
        ValueError: If k < 1 or x is empty
        SizeCapExceeded: If a step is too large to enumerate
    """
    if k < 1:
        raise ValueError(f"fold count must be >= 1, got {k}")
    if not x:
        raise ValueError("k-fold sum of an empty set")

    def reached(candidate: ScalarSet, fold: int) -> Optional[LowerBoundCertificate]:
        if early_exit_target is not None and fold < k and len(candidate) >= early_exit_target:
            certificate = LowerBoundCertificate(k, early_exit_target, fold, len(candidate))
            logger.info(f"Early exit: {certificate.describe()}")
            return certificate
        return None

    certificate = reached(x, 1)
    if certificate:
        return KFoldResult(k, certificate=certificate)

    acc: Optional[ScalarSet] = None
    acc_fold = 0
    power, power_fold = x, 1
    remaining = k
    while True:
        if remaining & 1:
            if acc is None:
                acc, acc_fold = power, power_fold
            else:
                acc = pairwise(acc, power, SetOp.ADD, size_cap).result
                acc_fold += power_fold
                certificate = reached(acc, acc_fold)
                if certificate:
                    return KFoldResult(k, certificate=certificate)
        remaining >>= 1
        if not remaining:
            break
        power = pairwise(power, power, SetOp.ADD, size_cap).result
        power_fold *= 2
        certificate = reached(power, power_fold)
        if certificate:
            return KFoldResult(k, certificate=certificate)
    return KFoldResult(k, exact=acc)


def kfold_product(x: ScalarSet, k: int, size_cap: int = DEFAULT_SIZE_CAP) -> ScalarSet:
    """k-fold product set X^(k) by binary decomposition of k"""
    if k < 1:
        raise ValueError(f"fold count must be >= 1, got {k}")
    if not x:
        raise ValueError("k-fold product of an empty set")
    acc: Optional[ScalarSet] = None
    power = x
    remaining = k
    while True:
        if remaining & 1:
            acc = power if acc is None else pairwise(acc, power, SetOp.MUL, size_cap).result
        remaining >>= 1
        if not remaining:
            break
        power = pairwise(power, power, SetOp.MUL, size_cap).result
    return acc


@dataclass
class RatioProfile:
    """
    Representation counts of a ratio set

    Attributes:
        counts: x -> r(x), the number of pairs (a, b) with b / a = x
        representatives: x -> one pair (a, b) with b / a = x
        skipped_pairs: Pairs dropped because a = 0
        kind: Scalar kind of the ratios
    """
    counts: Dict[Scalar, int] = field(default_factory=dict)
    representatives: Dict[Scalar, Tuple[Scalar, Scalar]] = field(default_factory=dict)
    skipped_pairs: int = 0
    kind: ScalarKind = ScalarKind.REAL

    def r(self, x: Scalar) -> int:
        return self.counts.get(x, 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def ratios(self) -> ScalarSet:
        return ScalarSet.from_members(self.counts.keys(), self.kind)


def representations(
    x: ScalarSet, y: ScalarSet
) -> Tuple[Dict[Scalar, List[Tuple[Scalar, Scalar]]], int]:
    """
    Group every pair (a, b) in x × y by its ratio b / a

    Returns:
        (ratio -> pairs in canonical (a, b) order, number of skipped a = 0 pairs),
        keyed in canonical ratio order
    """
    _check_same_kind(x, y)
    groups: Dict[Scalar, List[Tuple[Scalar, Scalar]]] = {}
    skipped = 0
    for a in x:
        if is_zero(a):
            skipped += len(y)
            continue
        for b in y:
            groups.setdefault(divide(b, a), []).append((a, b))
    ordered = {key: groups[key] for key in sorted(groups, key=scalar_sort_key)}
    return ordered, skipped


def ratio_profile(x: ScalarSet, y: ScalarSet) -> RatioProfile:
    """
    Count representations r(x) for every ratio b / a, a in x, b in y

    Raises:
        ValueError: On kind mismatch
    """
    groups, skipped = representations(x, y)
    return RatioProfile(
        counts={ratio: len(pairs) for ratio, pairs in groups.items()},
        representatives={ratio: pairs[0] for ratio, pairs in groups.items()},
        skipped_pairs=skipped,
        kind=x.kind,
    )

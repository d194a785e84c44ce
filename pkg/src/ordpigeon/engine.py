"""The topological pigeonhole number and its case analysis.

p_top computes, for targets a_i with multiplicities summing to kappa, the
least b such that every colouring of the space b in kappa colours has a
colour class containing a homeomorphic copy of its target.  The answer is
an ordinal, or provably no ordinal at all, or (for two or more copies of
w_1 among countable-or-w_1 targets) a value independent of ZFC, for which
we report the provable lower bound and the known consistency facts.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from .ordinal import (
    Cardinal,
    ONE,
    OMEGA,
    OMEGA1,
    OMEGA2,
    Ordinal,
    ZERO,
    ZeroInput,
    add,
    biembed_canonical,
    cardinal_sum,
    cb_rank,
    cofinality,
    exponent_ordinal,
    from_int,
    is_power_of_omega,
    leading_decomposition,
    mr_sum,
    mul,
    natural_sum,
    omega_pow,
    ord_of_card,
)


class EmptyInstance(ValueError):
    """Raised when an instance has no targets at all."""


class UnrepresentableInput(ValueError):
    """Raised when a value leaves the representable notation class."""


class PowerOfOmegaInput(ValueError):
    """Raised by case6_decompose on inputs it is not defined for."""


@dataclass(frozen=True)
class Instance:
    """Targets with multiplicities.  Multiplicities are positive cardinals."""

    entries: Tuple[Tuple[Ordinal, Cardinal], ...]

    def __post_init__(self):
        for _, count in self.entries:
            if count.is_finite() and count.size < 1:
                raise EmptyInstance("multiplicities must be at least 1")

    @staticmethod
    def of(*entries) -> "Instance":
        norm = []
        for item in entries:
            if isinstance(item, tuple):
                target, count = item
            else:
                target, count = item, 1
            if isinstance(target, int):
                target = from_int(target)
            if isinstance(count, int):
                count = Cardinal.finite(count)
            norm.append((target, count))
        return Instance(tuple(norm))

    def kappa(self) -> Cardinal:
        return cardinal_sum(c for _, c in self.entries)


@dataclass(frozen=True)
class NormalizedInstance:
    """An instance with every target at least 2 and kappa recomputed."""

    entries: Tuple[Tuple[Ordinal, Cardinal], ...]
    kappa: Cardinal

    def flat_targets(self) -> List[Ordinal]:
        """Targets repeated by multiplicity; only valid for finite kappa."""
        if not self.kappa.is_finite():
            raise ValueError("flat_targets requires finite kappa")
        out: List[Ordinal] = []
        for target, count in self.entries:
            out.extend([target] * count.size)
        return out


@dataclass(frozen=True)
class Exists:
    value: Ordinal

    def __repr__(self):
        return f"Exists({self.value})"


@dataclass(frozen=True)
class Infinite:
    """No ordinal satisfies the relation; this is provable outright."""

    def __repr__(self):
        return "Infinite"


NOTE_CONSISTENT_INFINITE = (
    "Prikry-Solovay: consistently (for instance under V=L) no ordinal "
    "satisfies the relation, so the value may fail to exist."
)
NOTE_CONSISTENT_EQUAL = (
    "Shelah: from a supercompact cardinal it is consistent that the value "
    "exists and equals the provable lower bound."
)
NOTE_EQUICONSISTENCY = (
    "Silver, Shelah: the two-colour relation for w_1 at the lower bound "
    "w_2 is equiconsistent with a Mahlo cardinal."
)


@dataclass(frozen=True)
class Independent:
    """The exact value is independent of ZFC; zfc_lower is provable."""

    zfc_lower: Ordinal
    consistent_infinite: str = NOTE_CONSISTENT_INFINITE
    consistent_equal_lower: str = NOTE_CONSISTENT_EQUAL
    equiconsistency: str = NOTE_EQUICONSISTENCY

    def __repr__(self):
        return f"Independent(zfc_lower={self.zfc_lower})"


PigeonholeResult = Union[Exists, Infinite, Independent]


class CasePath(enum.Enum):
    ZERO = "Zero"
    ALL_ONES = "AllOnes"
    C1 = "C1"
    C2aI = "C2aI"
    C2aIIA = "C2aIIA"
    C2aIIB = "C2aIIB"
    C2aIIC_lt = "C2aIIC_lt"
    C2aIIC_gt = "C2aIIC_gt"
    C2bI = "C2bI"
    C2bII = "C2bII"
    C2cI = "C2cI"
    C2cII = "C2cII"
    C3 = "C3"
    C4 = "C4"
    C5 = "C5"
    C6a = "C6a"
    C6b = "C6b"
    C6cI = "C6cI"
    C6cII = "C6cII"


class RelationVerdict(enum.Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    INDEPENDENT_UNKNOWN = "IndependentUnknown"


def normalize(inst: Instance) -> Union[NormalizedInstance, PigeonholeResult]:
    """Drop target-1 entries and short-circuit degenerate instances.

    A target of 0 is contained in every class of every colouring, so the
    answer is 0.  A target of 1 needs one point in its class and never
    constrains the answer beyond that; if nothing else remains, the
    answer is 1.
    """
    if not inst.entries:
        raise EmptyInstance("no targets")
    if any(t.is_zero() for t, _ in inst.entries):
        return Exists(ZERO)
    entries = tuple((t, c) for t, c in inst.entries if t != ONE)
    if not entries:
        return Exists(ONE)
    return NormalizedInstance(entries, cardinal_sum(c for _, c in entries))


def _count_at_least(norm: NormalizedInstance, threshold: Ordinal) -> Cardinal:
    counts = [c for t, c in norm.entries if t >= threshold]
    if not counts:
        return Cardinal.finite(0)
    return cardinal_sum(counts)


_OMEGA1_SUCC = add(OMEGA1, ONE)
_OMEGA_SUCC = add(OMEGA, ONE)


def classify_case(norm: NormalizedInstance) -> CasePath:
    return _classify(norm)[0]


def classify_case_with_trail(norm: NormalizedInstance) -> Tuple[CasePath, List[str]]:
    return _classify(norm)


def _classify(norm: NormalizedInstance) -> Tuple[CasePath, List[str]]:
    trail: List[str] = []
    over_w1 = _count_at_least(norm, _OMEGA1_SUCC)
    over_w = _count_at_least(norm, _OMEGA_SUCC)
    kappa = norm.kappa

    if over_w1 >= Cardinal.finite(1):
        trail.append("some target exceeds w_1")
        if over_w >= Cardinal.finite(2):
            trail.append("a second target is at least w+1")
            return CasePath.C1, trail
        trail.append("every other target is at most w")
        big = next(t for t, _ in norm.entries if t > OMEGA1)
        if not kappa.is_finite():
            trail.append("infinitely many colours")
            if not is_power_of_omega(big):
                trail.append("the large target is not a power of w")
                return CasePath.C2aI, trail
            trail.append("the large target is a power of w")
            cf = cofinality(big)
            if cf > kappa.as_ordinal():
                trail.append("its cofinality exceeds the number of colours")
                return CasePath.C2aIIA, trail
            if cf > OMEGA:
                trail.append("its cofinality is uncountable but not above "
                             "the number of colours")
                return CasePath.C2aIIB, trail
            trail.append("its cofinality is countable")
            delta = cb_rank(exponent_ordinal(big.leading_exponent()))
            succ = ord_of_card(kappa.successor())
            assert delta != succ, "tail exponent cannot be the successor " \
                "cardinal: that would force uncountable cofinality"
            if delta < succ:
                trail.append("the exponent's tail rank is below the "
                             "successor of the number of colours")
                return CasePath.C2aIIC_lt, trail
            trail.append("the exponent's tail rank is above the successor "
                         "of the number of colours")
            return CasePath.C2aIIC_gt, trail
        trail.append("finitely many colours")
        if any(t == OMEGA for t, _ in norm.entries):
            trail.append("some other target equals w")
            if is_power_of_omega(big):
                trail.append("the large target is a power of w")
                return CasePath.C2bI, trail
            trail.append("the large target is not a power of w")
            return CasePath.C2bII, trail
        trail.append("every other target is finite")
        if is_power_of_omega(big) or kappa == Cardinal.finite(1):
            trail.append("the large target is a power of w, or it is the "
                         "only target")
            return CasePath.C2cI, trail
        trail.append("the large target is not a power of w and there are "
                     "other targets")
        return CasePath.C2cII, trail

    trail.append("no target exceeds w_1")
    at_w1 = _count_at_least(norm, OMEGA1)
    if at_w1 >= Cardinal.finite(2):
        trail.append("at least two copies of w_1 among the targets")
        return CasePath.C3, trail
    if at_w1 >= Cardinal.finite(1):
        trail.append("exactly one copy of w_1 among the targets")
        return CasePath.C4, trail
    trail.append("every target is countable")
    if not kappa.is_finite():
        trail.append("infinitely many colours")
        return CasePath.C5, trail
    trail.append("finitely many colours")
    flat = norm.flat_targets()
    if all(t.is_finite() for t in flat):
        trail.append("every target is finite")
        return CasePath.C6a, trail
    if any(is_power_of_omega(t) for t in flat):
        trail.append("some target is a power of w")
        return CasePath.C6b, trail
    trail.append("no target is a power of w and some target is infinite")
    if _distinguished_index(flat) is not None:
        trail.append("an exact multiple of a power of w has minimal rank "
                     "and all other multiplicities are 1")
        return CasePath.C6cI, trail
    trail.append("no exact-multiple target dominates")
    return CasePath.C6cII, trail


def minimal_omega_power_bound(a: Ordinal) -> Ordinal:
    """The least g with a <= w^g, for a >= 1."""
    a = a if isinstance(a, Ordinal) else from_int(a)
    if a.is_zero():
        raise ZeroInput("a must be at least 1")
    if a == ONE:
        return ZERO
    g = exponent_ordinal(a.leading_exponent())
    if is_power_of_omega(a):
        return g
    return add(g, ONE)


def case6_decompose(a: Ordinal) -> Tuple[Ordinal, int, bool]:
    """Split a countable target a >= 2, not a power of w, as (g, m, exact).

    g is the terminal rank of a and m counts the points of a with rank at
    least g, so m is finite and positive.  exact flags a = w^g*(m+1), the
    one shape whose class is a singleton under biembeddability; otherwise
    w^g*m + 1 <= a < w^g*(m+1).  Finite a gives (0, a, False): every
    point has rank 0 and the exact form would need m+1 points.
    """
    if a < from_int(2):
        raise ValueError("a must be at least 2")
    if not a.is_countable():
        raise ValueError("a must be countable")
    if is_power_of_omega(a):
        raise PowerOfOmegaInput("powers of w have no such decomposition")
    g, m, rest = leading_decomposition(a)
    if a.is_finite():
        return ZERO, int(a), False
    if rest.is_zero():
        return g, m - 1, True
    return g, m, False


def _decompose_any(a: Ordinal) -> Tuple[Ordinal, int]:
    # (g, m) with w^g*m + 1 <= a <= w^g*(m+1); works above w_1 too.
    g, m, rest = leading_decomposition(a)
    if rest.is_zero() and m >= 2:
        return g, m - 1
    return g, m


def _distinguished_index(flat: Sequence[Ordinal]) -> Optional[int]:
    decs = [case6_decompose(t) for t in flat]
    ranks = [cb_rank(g) for g, _, _ in decs]
    for s, (g, m, exact) in enumerate(decs):
        if not exact:
            continue
        if any(ranks[s] > r for r in ranks):
            continue
        if all(m_i == 1 for i, (_, m_i, _) in enumerate(decs) if i != s):
            return s
    return None


def p_top_case6_power(norm: NormalizedInstance) -> Ordinal:
    """Finitely many countable targets, at least one a power of w: the
    value is w to the Milner-Rado sum of the least power bounds."""
    flat = norm.flat_targets()
    if not any(is_power_of_omega(t) for t in flat):
        raise ValueError("some target must be a power of w")
    return omega_pow(mr_sum([minimal_omega_power_bound(t) for t in flat]))


def p_top_case6_multiples(norm: NormalizedInstance) -> Ordinal:
    """Finitely many countable infinite targets, none a power of w."""
    flat = norm.flat_targets()
    decs = [case6_decompose(t) for t in flat]
    gamma = natural_sum(*(g for g, _, _ in decs))
    s = _distinguished_index(flat)
    if s is not None:
        return mul(omega_pow(gamma), from_int(decs[s][1] + 1))
    total = sum(m - 1 for _, m, _ in decs) + 1
    return add(mul(omega_pow(gamma), from_int(total)), ONE)


@dataclass(frozen=True)
class Analysis:
    """Case dispatch plus the resulting pigeonhole number."""

    case: CasePath
    trail: Tuple[str, ...]
    result: PigeonholeResult
    normalized: Optional[NormalizedInstance]


def analyze(inst: Instance) -> Analysis:
    norm = normalize(inst)
    if isinstance(norm, Exists):
        if norm.value.is_zero():
            return Analysis(CasePath.ZERO, ("some target is 0",), norm, None)
        return Analysis(CasePath.ALL_ONES, ("every target is 1",), norm, None)
    case, trail = _classify(norm)
    return Analysis(case, tuple(trail), _resolve(norm, case), norm)


def p_top(inst: Instance) -> PigeonholeResult:
    """The topological pigeonhole number of the instance."""
    norm = normalize(inst)
    if not isinstance(norm, NormalizedInstance):
        return norm
    return _resolve(norm, classify_case(norm))


def p_top_normalized(norm: NormalizedInstance) -> PigeonholeResult:
    return _resolve(norm, classify_case(norm))


def _resolve(norm: NormalizedInstance, case: CasePath) -> PigeonholeResult:
    kappa = norm.kappa
    if case is CasePath.C1:
        return Infinite()
    if case.value.startswith("C2"):
        big = next(t for t, _ in norm.entries if t > OMEGA1)
        succ = ord_of_card(kappa.successor())
        if case in (CasePath.C2aI, CasePath.C2aIIB, CasePath.C2aIIC_lt):
            return Exists(mul(big, succ))
        if case in (CasePath.C2aIIA, CasePath.C2aIIC_gt, CasePath.C2bI):
            return Exists(big)
        if case is CasePath.C2bII:
            return Exists(mul(big, OMEGA))
        if case is CasePath.C2cI:
            return Exists(biembed_canonical(big))
        g, m = _decompose_any(big)
        others = sum((int(t) - 1) * c.size for t, c in norm.entries
                     if t != big)
        return Exists(add(mul(omega_pow(g), from_int(others + m)), ONE))
    if case is CasePath.C3:
        lower = max(OMEGA2, ord_of_card(kappa.successor()))
        return Independent(zfc_lower=lower)
    if case is CasePath.C4:
        return Exists(max(OMEGA1, ord_of_card(kappa.successor())))
    if case is CasePath.C5:
        return Exists(ord_of_card(kappa.successor()))
    flat = norm.flat_targets()
    if case is CasePath.C6a:
        return Exists(from_int(sum(int(t) - 1 for t in flat) + 1))
    if case is CasePath.C6b:
        return Exists(p_top_case6_power(norm))
    return Exists(p_top_case6_multiples(norm))


def relation_holds(beta: Ordinal, inst: Instance) -> RelationVerdict:
    """Whether the space beta satisfies the instance's partition relation."""
    result = p_top(inst)
    if isinstance(result, Exists):
        return (RelationVerdict.HOLDS if beta >= result.value
                else RelationVerdict.FAILS)
    if isinstance(result, Infinite):
        return RelationVerdict.FAILS
    if beta < result.zfc_lower:
        return RelationVerdict.FAILS
    return RelationVerdict.INDEPENDENT_UNKNOWN

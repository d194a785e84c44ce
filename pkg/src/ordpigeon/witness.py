"""Counterexample colourings below the pigeonhole number, with certificates.

A colouring of the space [0, beta) is stored symbolically: each colour
owns a finite union of half-open intervals of Cantor-Bendixson ranks,
plus explicit colours for the finitely many points of maximal rank and
(for finite domains) the point 0.  A second mode colours by cofinality
and witnesses the provably-no-value case for two targets.

Each colour carries an obstruction certificate saying why its class
cannot contain a copy of its target.  The verifier recomputes the order
types and derivative shapes from the colouring alone, so a certificate
cannot be weakened without detection:

  DerivativeEmpty       class is a pure rank preimage whose level-th
                        derivative is empty, while the target still has
                        points at that level;
  DerivativeSmall       the level-th derivative of the class sits inside
                        its exceptional points, fewer than the target
                        keeps at that level;
  DerivativeNotEmbeddable  the class's residual above the final rank
                        interval is a compact w^rho*a + 1, too small for
                        the target's residual w^rho*b with b > a;
  CofinalitySplit       the two classes split by cofinality: points of
                        uncountable cofinality contain no w+1, the rest
                        contain nothing above w_1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Dict, List, Optional, Sequence, Tuple

from .engine import (
    CasePath,
    NormalizedInstance,
    _distinguished_index,
    case6_decompose,
    classify_case,
    minimal_omega_power_bound,
    p_top_normalized,
)
from .ordinal import (
    OMEGA,
    OMEGA1,
    ONE,
    Ordinal,
    ZERO,
    ZeroInput,
    _coerce,
    _exp_is_zero,
    add,
    as_exponent,
    cb_rank,
    cofinality,
    compare,
    exp_compare,
    exponent_ordinal,
    from_int,
    is_power_of_omega,
    leading_decomposition,
    left_subtract,
    mul,
    natural_sum,
    omega_pow,
)


class OutOfScope(ValueError):
    """Raised when no finite certificate covers the requested witness."""


class NotBelowThreshold(ValueError):
    """Raised when the space already satisfies the partition relation."""


class PreconditionViolated(ValueError):
    pass


class OutOfDomain(ValueError):
    pass


class ColouringMode(enum.Enum):
    RANK = "rank"
    COFINALITY = "cofinality"


class CertKind(enum.Enum):
    DERIVATIVE_EMPTY = "DerivativeEmpty"
    DERIVATIVE_SMALL = "DerivativeSmall"
    DERIVATIVE_NOT_EMBEDDABLE = "DerivativeNotEmbeddable"
    COFINALITY_SPLIT = "CofinalitySplit"


Interval = Tuple[Ordinal, Ordinal]
IntervalUnion = Tuple[Interval, ...]


@dataclass(frozen=True)
class RankColouring:
    """A total colouring of [0, domain) described by rank data.

    rank_classes[i] lists colour i's rank intervals [lo, hi); together
    the intervals partition [0, g) where g is the domain's leading
    exponent.  The points w^g*l get their colours from top_point_colours
    (l = 1 upward), and zero_colour overrides the point 0 when set; when
    it is None the rank interval containing rank 0 covers the origin.
    In cofinality mode there is no rank data and colour 1 is the set of
    points of uncountable cofinality.
    """

    domain: Ordinal
    mode: ColouringMode
    rank_classes: Tuple[IntervalUnion, ...]
    top_point_colours: Tuple[int, ...]
    zero_colour: Optional[int]

    @property
    def colours(self) -> int:
        return len(self.rank_classes)


@dataclass(frozen=True)
class ObstructionCertificate:
    colour: int
    kind: CertKind
    claimed_target: Ordinal
    level: Optional[Ordinal] = None
    bound: Optional[int] = None
    class_residual: Optional[Ordinal] = None
    target_residual: Optional[Ordinal] = None


# -- interval and derivative arithmetic ---------------------------------------


def order_type_of_union(intervals: Sequence[Interval]) -> Ordinal:
    """Order type of a disjoint ascending union of half-open intervals."""
    total = ZERO
    prev = None
    for lo, hi in intervals:
        if compare(lo, hi) >= 0:
            raise PreconditionViolated(f"bad interval [{lo}, {hi})")
        if prev is not None and lo < prev:
            raise PreconditionViolated("intervals must ascend")
        total = add(total, left_subtract(lo, hi))
        prev = hi
    return total


def residual_shape(alpha: Ordinal, zeta: Ordinal) -> Ordinal:
    """Order type of the zeta-th derivative of the space [0, alpha): the
    points of rank at least zeta are exactly the positive multiples of
    w^zeta below alpha, a closed set, so the type determines the
    subspace up to homeomorphism."""
    alpha, zeta = _coerce(alpha), _coerce(zeta)
    if zeta.is_zero():
        return alpha
    high = []
    low = False
    for e, c in alpha.monomials:
        eo = exponent_ordinal(e)
        if eo >= zeta:
            high.append((as_exponent(left_subtract(zeta, eo)), c))
        else:
            low = True
    if not high:
        return ZERO
    quotient = Ordinal(tuple(high))
    shape = left_subtract(ONE, quotient)
    return add(shape, ONE) if low else shape


# -- natural-sum splitting ------------------------------------------------------


def _compositions(total: int, k: int):
    # first part takes as much as possible first
    if k == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for rest in _compositions(total - head, k - 1):
            yield (head,) + rest


def _step(bmonos, ptr, state, e, p):
    # advance one merged-exponent position of the part-vs-bound comparison;
    # state 0 = equal so far, 1 = already strictly below
    while ptr < len(bmonos) and exp_compare(bmonos[ptr][0], e) > 0:
        state = 1
        ptr += 1
    b = 0
    if ptr < len(bmonos) and exp_compare(bmonos[ptr][0], e) == 0:
        b = bmonos[ptr][1]
        ptr += 1
    if state == 0:
        if p > b:
            return None
        if p < b:
            state = 1
    return ptr, state


def natsum_expressible(delta, bounds) -> Optional[List[Ordinal]]:
    """A list of parts with natural sum delta and part i strictly below
    bounds[i], or None.  Searches the coefficient splittings of delta's
    normal form, largest first part first, so the result is canonical."""
    delta = _coerce(delta)
    bounds = [_coerce(b) for b in bounds]
    if not bounds:
        raise ZeroInput("at least one bound is required")
    if any(b.is_zero() for b in bounds):
        raise ZeroInput("bounds must be non-zero")
    monos = delta.monomials
    k = len(bounds)
    bmonos = [b.monomials for b in bounds]

    def rec(j, ptrs, states):
        if j == len(monos):
            for i in range(k):
                if states[i] == 0 and ptrs[i] >= len(bmonos[i]):
                    return None
            return []
        e, c = monos[j]
        for comp in _compositions(c, k):
            nptrs, nstates = list(ptrs), list(states)
            for i in range(k):
                step = _step(bmonos[i], ptrs[i], states[i], e, comp[i])
                if step is None:
                    break
                nptrs[i], nstates[i] = step
            else:
                rest = rec(j + 1, nptrs, nstates)
                if rest is not None:
                    return [comp] + rest
        return None

    comps = rec(0, [0] * k, [0] * k)
    if comps is None:
        return None
    parts = []
    for i in range(k):
        parts.append(Ordinal(tuple(
            (e, comp[i]) for (e, _), comp in zip(monos, comps) if comp[i])))
    return parts


def natsum_split(eta, parts, final_part: Optional[int] = None) -> List[IntervalUnion]:
    """Partition [0, eta) into interval unions, piece i of order type
    parts[i].  Each monomial block of eta is divided among the pieces in
    index order; final_part, when given, takes its chunk of the last
    block at the end, so that piece's rank set finishes the space."""
    parts = [_coerce(p) for p in parts]
    eta = _coerce(eta)
    if natural_sum(*parts) != eta:
        raise PreconditionViolated("parts must have natural sum eta")
    if final_part is not None and not 0 <= final_part < len(parts):
        raise PreconditionViolated("final_part out of range")
    coeffs: List[Dict] = []
    for p in parts:
        coeffs.append({e: c for e, c in p.monomials})
    pieces: List[List[Interval]] = [[] for _ in parts]
    cursor = ZERO
    blocks = eta.monomials
    for bi, (e, c) in enumerate(blocks):
        order = list(range(len(parts)))
        if final_part is not None and bi == len(blocks) - 1:
            order = [i for i in order if i != final_part] + [final_part]
        used = 0
        for i in order:
            d = coeffs[i].get(e, 0)
            if d:
                lo = add(cursor, mul(omega_pow(e), from_int(used)))
                hi = add(cursor, mul(omega_pow(e), from_int(used + d)))
                pieces[i].append((lo, hi))
                used += d
        cursor = add(cursor, mul(omega_pow(e), from_int(c)))
    return [tuple(p) for p in pieces]


# -- evaluation -----------------------------------------------------------------


def eval_colouring(col: RankColouring, x) -> int:
    x = _coerce(x)
    if x >= col.domain:
        raise OutOfDomain(f"{x} is not a point of [0, {col.domain})")
    if col.mode is ColouringMode.COFINALITY:
        return 1 if cofinality(x) >= OMEGA1 else 0
    if x.is_zero() and col.zero_colour is not None:
        return col.zero_colour
    g, _, _ = leading_decomposition(col.domain)
    r = cb_rank(x)
    if not x.is_zero() and r == g:
        return col.top_point_colours[x.leading_coefficient() - 1]
    for i, ivs in enumerate(col.rank_classes):
        for lo, hi in ivs:
            if lo <= r < hi:
                return i
    raise OutOfDomain(f"no colour covers rank {r}")


# -- construction -----------------------------------------------------------------


_RANK_CASES = (CasePath.C6a, CasePath.C6b, CasePath.C6cI, CasePath.C6cII)


def build_counterexample(beta, norm: NormalizedInstance):
    """A colouring of [0, beta) defeating every target, with one
    certificate per colour.  Supported for the countable finite-colour
    cases and for the two-target provably-no-value case."""
    beta = _coerce(beta)
    case = classify_case(norm)
    if case is CasePath.C1:
        return _build_cofinality(beta, norm)
    if case not in _RANK_CASES:
        raise OutOfScope(f"no finite certificate language for case {case.value}")
    threshold = p_top_normalized(norm).value
    if beta >= threshold:
        raise NotBelowThreshold(f"{beta} already satisfies the relation")
    flat = norm.flat_targets()
    if beta.is_zero():
        return _build_empty(beta, flat)
    if beta.is_finite():
        return _build_finite(beta, flat)
    return _build_infinite(beta, flat, case)


def _build_cofinality(beta, norm):
    if not norm.kappa.is_finite() or norm.kappa.size != 2:
        raise OutOfScope("cofinality witnesses need exactly two targets")
    flat = norm.flat_targets()
    if not flat[0] > OMEGA1:
        raise OutOfScope("cofinality witnesses put the target above w_1 first")
    col = RankColouring(beta, ColouringMode.COFINALITY, ((), ()), (), None)
    certs = [ObstructionCertificate(i, CertKind.COFINALITY_SPLIT, flat[i])
             for i in range(2)]
    return col, certs


def _build_empty(beta, flat):
    col = RankColouring(beta, ColouringMode.RANK,
                        ((),) * len(flat), (), None)
    certs = [ObstructionCertificate(i, CertKind.DERIVATIVE_EMPTY, t, level=ZERO)
             for i, t in enumerate(flat)]
    return col, certs


def _build_finite(beta, flat):
    n = int(beta)
    caps = [int(t) - 1 if t.is_finite() else None for t in flat]
    assignment: List[int] = []
    for i, cap in enumerate(caps):
        room = n - len(assignment)
        take = room if cap is None else min(cap, room)
        assignment.extend([i] * take)
    assert len(assignment) == n, "failing relation guarantees enough room"
    col = RankColouring(beta, ColouringMode.RANK, ((),) * len(flat),
                        tuple(assignment[1:]), assignment[0])
    certs = []
    for i, t in enumerate(flat):
        count = assignment.count(i)
        if count:
            certs.append(ObstructionCertificate(
                i, CertKind.DERIVATIVE_SMALL, t, level=ZERO, bound=count))
        else:
            certs.append(ObstructionCertificate(
                i, CertKind.DERIVATIVE_EMPTY, t, level=ZERO))
    return col, certs


def _exception_certs(flat, levels, tops):
    certs = []
    for i, t in enumerate(flat):
        count = sum(1 for c in tops if c == i)
        if count:
            certs.append(ObstructionCertificate(
                i, CertKind.DERIVATIVE_SMALL, t, level=levels[i], bound=count))
        else:
            certs.append(ObstructionCertificate(
                i, CertKind.DERIVATIVE_EMPTY, t, level=levels[i]))
    return certs


def _build_infinite(beta, flat, case):
    k = len(flat)
    g, m, tail = leading_decomposition(beta)
    top_count = m if not tail.is_zero() else m - 1

    if case is CasePath.C6b:
        power_bounds = [minimal_omega_power_bound(t) for t in flat]
        levels = natsum_expressible(g, power_bounds)
        assert levels is not None, "g below the Milner-Rado sum splits"
        classes = natsum_split(g, levels)
        anchor = next(i for i, t in enumerate(flat) if is_power_of_omega(t))
        tops = (anchor,) * top_count
        col = RankColouring(beta, ColouringMode.RANK, tuple(classes),
                            tops, None)
        return col, _exception_certs(flat, levels, tops)

    decs = [case6_decompose(t) for t in flat]
    levels = natsum_expressible(g, [add(b, ONE) for b, _, _ in decs])
    assert levels is not None, "g at most the natural sum of ranks splits"
    caps = [None if lvl < b else mi - 1
            for (b, mi, _), lvl in zip(decs, levels)]
    fixed = sum(c for c in caps if c is not None)
    if any(c is None for c in caps) or fixed >= top_count:
        order = [i for i in range(k) if caps[i] is None] + \
                [i for i in range(k) if caps[i] is not None]
        assignment: List[int] = []
        for i in order:
            room = top_count - len(assignment)
            if room == 0:
                break
            take = room if caps[i] is None else min(caps[i], room)
            assignment.extend([i] * take)
        assert len(assignment) == top_count
        classes = natsum_split(g, levels)
        tops = tuple(assignment)
        col = RankColouring(beta, ColouringMode.RANK, tuple(classes),
                            tops, None)
        return col, _exception_certs(flat, levels, tops)

    # Too many maximal-rank points for the small certificates: this is the
    # distinguished exact-multiple situation, where the class holding all
    # of them is defeated by residual counting instead.
    assert case is CasePath.C6cI and not tail.is_zero()
    s = _distinguished_index(flat)
    assert s is not None
    parts = [b for b, _, _ in decs]
    classes = [list(ivs) for ivs in natsum_split(g, parts, final_part=s)]

    gamma_min, c_min = g.monomials[-1]
    p = Ordinal(g.monomials[:-1] + (((gamma_min, c_min - 1),) if c_min > 1
                                    else ()))
    lo, hi = classes[s][-1]
    assert hi == g, "the distinguished piece finishes the rank space"
    if lo < p:
        classes[s][-1:] = [(lo, p), (p, g)]
    level = order_type_of_union(tuple(classes[s][:-1]))
    class_res = residual_shape(beta, p)
    target_res = residual_shape(flat[s], level)
    if not _distinguishing_shapes(class_res, target_res):
        raise OutOfScope("domain tail too large for the residual-counting "
                         "certificate")
    tops = (s,) * top_count
    col = RankColouring(beta, ColouringMode.RANK,
                        tuple(tuple(ivs) for ivs in classes), tops, None)
    certs = []
    for i, t in enumerate(flat):
        if i == s:
            certs.append(ObstructionCertificate(
                i, CertKind.DERIVATIVE_NOT_EMBEDDABLE, t, level=level,
                class_residual=class_res, target_residual=target_res))
        else:
            certs.append(ObstructionCertificate(
                i, CertKind.DERIVATIVE_EMPTY, t, level=parts[i]))
    return col, certs


def _distinguishing_shapes(class_res: Ordinal, target_res: Ordinal) -> bool:
    # class suffix w^rho*a + 1 versus target residual w^rho*b, b > a, rho >= 1
    cm, tm = class_res.monomials, target_res.monomials
    if len(cm) != 2 or len(tm) != 1:
        return False
    (rho, a), (last_exp, last_coeff) = cm
    if not _exp_is_zero(last_exp) or last_coeff != 1 or _exp_is_zero(rho):
        return False
    rho_t, b = tm[0]
    return exp_compare(rho, rho_t) == 0 and b > a


# -- verification -----------------------------------------------------------------


def verify_certificates(col: RankColouring, norm: NormalizedInstance,
                        certs) -> bool:
    """Recompute every quantity a certificate relies on and compare
    exactly.  Any single altered field changes some recomputed value or
    violates well-formedness, so the verdict flips."""
    try:
        flat = norm.flat_targets()
    except ValueError:
        return False
    k = len(flat)
    if col.colours != k:
        return False
    by_colour = {}
    for cert in certs:
        if not isinstance(cert.colour, int) or cert.colour in by_colour:
            return False
        by_colour[cert.colour] = cert
    if set(by_colour) != set(range(k)):
        return False
    if any(by_colour[i].claimed_target != flat[i] for i in range(k)):
        return False

    if col.mode is ColouringMode.COFINALITY:
        if k != 2 or any(col.rank_classes) or col.top_point_colours:
            return False
        if col.zero_colour is not None:
            return False
        for cert in by_colour.values():
            if cert.kind is not CertKind.COFINALITY_SPLIT:
                return False
            if (cert.level is not None or cert.bound is not None
                    or cert.class_residual is not None
                    or cert.target_residual is not None):
                return False
        return flat[0] > OMEGA1 and flat[1] > OMEGA

    if col.domain.is_zero():
        g: Ordinal = ZERO
        top_count = 0
        if col.zero_colour is not None:
            return False
    else:
        g, m, tail = leading_decomposition(col.domain)
        top_count = m if not tail.is_zero() else m - 1
        if col.domain.is_finite() and col.zero_colour is None:
            return False
    if len(col.top_point_colours) != top_count:
        return False
    if any(not isinstance(c, int) or not 0 <= c < k
           for c in col.top_point_colours):
        return False
    if col.zero_colour is not None and not 0 <= col.zero_colour < k:
        return False

    labelled = []
    for i, ivs in enumerate(col.rank_classes):
        for lo, hi in ivs:
            labelled.append((lo, hi))
    labelled.sort(key=cmp_to_key(lambda u, v: compare(u[0], v[0])))
    cursor = ZERO
    for lo, hi in labelled:
        if lo != cursor or hi <= lo:
            return False
        cursor = hi
    if cursor != g:
        return False

    for i in range(k):
        cert = by_colour[i]
        target = flat[i]
        ivs = col.rank_classes[i]
        for (a, b), (c, d) in zip(ivs, ivs[1:]):
            if c < b:
                return False
        top_hits = sum(1 for c in col.top_point_colours if c == i)
        exceptions = top_hits + (1 if col.zero_colour == i else 0)

        if cert.kind is CertKind.DERIVATIVE_EMPTY:
            if cert.bound is not None or cert.class_residual is not None \
                    or cert.target_residual is not None:
                return False
            if exceptions != 0 or cert.level is None:
                return False
            if cert.level != order_type_of_union(ivs):
                return False
            if residual_shape(target, cert.level).is_zero():
                return False
        elif cert.kind is CertKind.DERIVATIVE_SMALL:
            if cert.class_residual is not None \
                    or cert.target_residual is not None:
                return False
            if cert.level is None or cert.bound is None:
                return False
            if cert.level != order_type_of_union(ivs):
                return False
            if cert.bound != exceptions or exceptions == 0:
                return False
            if not residual_shape(target, cert.level) > from_int(cert.bound):
                return False
        elif cert.kind is CertKind.DERIVATIVE_NOT_EMBEDDABLE:
            if cert.bound is not None:
                return False
            if cert.level is None or cert.class_residual is None \
                    or cert.target_residual is None:
                return False
            if not ivs:
                return False
            p, hi = ivs[-1]
            if hi != g:
                return False
            if cert.level != order_type_of_union(ivs[:-1]):
                return False
            if top_hits != top_count or top_count == 0:
                return False
            if col.zero_colour == i:
                return False
            if cert.class_residual != residual_shape(col.domain, p):
                return False
            if cert.target_residual != residual_shape(target, cert.level):
                return False
            if not _distinguishing_shapes(cert.class_residual,
                                          cert.target_residual):
                return False
        else:
            return False
    return True

"""Builders for optimal multithreshold representations of the four families.

Triangle families place one radical anchor per edge-sum value.  Square
families pair values (a, total - a) around a shared total so that a clique
on four vertices realizes six designed pair sums at once; odd threshold
counts additionally shift a center clique by a tiny rational epsilon to
dodge the designed cross-sum collision at total/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .exactnum import Basis, FieldElement, first_primes, min_positive_gap
from .graphs import (
    Representation,
    all_pairs,
    complement_representation,
    family_graph,
)
from .theta import (
    BOUNDARY,
    boundary_nk3,
    boundary_nk4,
    theta_knx3,
    theta_knx4,
    theta_nk3,
    theta_nk4,
)

__all__ = [
    "QuadAssignment",
    "QuadSums",
    "TripleAssignment",
    "check_gap_intervals",
    "construct_knx3",
    "construct_knx4",
    "construct_nk3",
    "construct_nk4",
    "k4_ranks",
    "mono_quad",
    "pair_assignment",
    "select_epsilon",
    "shifted_pair_assignment",
    "triple_assignment",
    "triple_ranks",
]


def select_epsilon(values) -> Fraction:
    """Positive rational strictly below every gap between distinct values."""
    values = list(values)
    if not values:
        return Fraction(1)
    gap = min_positive_gap(values)
    return Fraction(1) if gap is None else gap / 2


def triple_ranks(ai, aj, ak):
    """Ranks of a triangle whose three edge sums are ai, aj, ak."""
    return ((ai + aj - ak) / 2, (ai + ak - aj) / 2, (aj + ak - ai) / 2)


def k4_ranks(a1, b1, a2, b2, a3, b3):
    """Ranks of four vertices realizing six pair sums.

    The sums are grouped into opposite pairs (a1, b1), (a2, b2), (a3, b3)
    that must share one total; pairs (w,x), (w,y), (w,z) get a1, a2, a3 and
    pairs (y,z), (x,z), (x,y) get b1, b2, b3.
    """
    total = a1 + b1
    if not (a2 + b2 == total and a3 + b3 == total):
        raise ValueError("opposite pair sums must share one total")
    return (
        (a1 + a2 - b3) / 2,
        (b2 + b3 - b1) / 2,
        (b1 + b3 - b2) / 2,
        (b1 + b2 - b3) / 2,
    )


@dataclass(frozen=True)
class TripleAssignment:
    """Designed per-triangle sums drawn from a fixed anchor set."""

    values: tuple
    triples: tuple

    def ranks(self):
        out = []
        for ai, aj, ak in self.triples:
            out.extend(triple_ranks(ai, aj, ak))
        return tuple(out)

    def group_sums(self):
        return self.triples

    def anchor_intervals(self):
        return tuple((v, v) for v in self.values)


def triple_assignment(n: int, values) -> TripleAssignment:
    """First n triples: one per single value, then one per 3-subset."""
    values = tuple(values)
    m = len(values)
    capacity = m + comb(m, 3)
    if not 0 <= n <= capacity:
        raise ValueError(f"need 0 <= n <= {capacity} for {m} values, got {n}")
    triples = [(v, v, v) for v in values]
    triples.extend(combinations(values, 3))
    return TripleAssignment(values, tuple(triples[:n]))


@dataclass(frozen=True)
class QuadSums:
    """Six designed pair sums of one four-vertex group.

    kind records which of the four shapes produced the group: "I" single
    value, "II" mixed triple of pairs, "III" shifted center, "IV" two pairs
    shifted against the center.
    """

    kind: str
    sums: tuple

    def ranks(self):
        return k4_ranks(*self.sums)


def mono_quad(value, kind: str = "I") -> QuadSums:
    """Group whose six pair sums all equal one value (ranks value/2)."""
    return QuadSums(kind, (value,) * 6)


@dataclass(frozen=True)
class QuadAssignment:
    """Designed per-group sums built from value pairs sharing one total."""

    quads: tuple
    pair_values: tuple
    total: FieldElement | None
    epsilon: Fraction | None
    extra_anchors: tuple = ()

    def ranks(self):
        out = []
        for quad in self.quads:
            out.extend(quad.ranks())
        return tuple(out)

    def group_sums(self):
        return tuple(quad.sums for quad in self.quads)

    def center(self):
        if self.epsilon is None:
            raise ValueError("plain assignments have no center value")
        return self.total / 2 + self.epsilon

    def anchor_intervals(self):
        """Closed intervals that hold all designed sums, one per anchor."""
        pad = self.epsilon if self.epsilon is not None else Fraction(0)
        out = []
        for a, b in self.pair_values:
            out.append((a, a + pad))
            out.append((b, b + pad))
        for c in self.extra_anchors:
            out.append((c, c + pad))
        if self.epsilon is not None:
            center = self.center()
            out.append((center, center))
        return tuple(out)


def _pair_quads(pairs, total, epsilon):
    """Quad list over value pairs; epsilon None gives the plain form."""
    quads = []
    for a, b in pairs:
        quads.append(mono_quad(a))
        quads.append(mono_quad(b))
    center = None
    if epsilon is not None:
        center = total / 2 + epsilon
        quads.append(mono_quad(center, "III"))
    for (ai, bi), (aj, bj), (ak, bk) in combinations(pairs, 3):
        quads.append(QuadSums("II", (ai, bi, aj, bj, ak, bk)))
        quads.append(QuadSums("II", (ai, bi, aj, bj, bk, ak)))
    if epsilon is not None:
        for (ai, bi), (aj, bj) in combinations(pairs, 2):
            shifted = (ai + epsilon, bi + epsilon, aj + epsilon, bj + epsilon)
            quads.append(QuadSums("IV", shifted + (center, center)))
    return tuple(quads)


def _validated_pairs(side_a, side_b, total=None):
    side_a, side_b = tuple(side_a), tuple(side_b)
    if len(side_a) != len(side_b) or not side_a:
        raise ValueError("need equally many values on both sides")
    if total is None:
        total = side_a[0] + side_b[0]
    for a, b in zip(side_a, side_b):
        if not a + b == total:
            raise ValueError("every pair must add up to the same total")
    return tuple(zip(side_a, side_b)), total


def pair_assignment(side_a, side_b) -> QuadAssignment:
    """Full plain assignment: 2M single-value groups plus 2*C(M,3) mixed."""
    pairs, total = _validated_pairs(side_a, side_b)
    return QuadAssignment(_pair_quads(pairs, total, None), pairs, total, None)


def shifted_pair_assignment(side_a, side_b, total, epsilon) -> QuadAssignment:
    """Full shifted assignment: adds a center group and C(M,2) shifted ones."""
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    pairs, total = _validated_pairs(side_a, side_b, total)
    return QuadAssignment(_pair_quads(pairs, total, epsilon), pairs, total, epsilon)


def check_gap_intervals(assignment, rep: Representation, g) -> list[str]:
    """Anchor-interval discipline of a designed assignment under rep.

    Within every group the pair rank sums must match the designed sums as
    multisets, and no cross-group rank sum may land inside any closed
    anchor interval.  Returns a list of human-readable problems.
    """
    problems = []
    groups = g.groups()
    designed = assignment.group_sums()
    if len(designed) != len(groups):
        return [f"assignment has {len(designed)} groups, graph has {len(groups)}"]
    group_of = {}
    for gi, vertices in enumerate(groups):
        for v in vertices:
            group_of[v] = gi
        got = sorted(rep.rank_sum(u, v) for u, v in combinations(vertices, 2))
        want = sorted(designed[gi])
        if len(got) != len(want) or any(x != y for x, y in zip(got, want)):
            problems.append(f"group {gi}: rank sums differ from designed sums")
    intervals = assignment.anchor_intervals()
    for u, v in all_pairs(g.vertex_count):
        if group_of[u] == group_of[v]:
            continue
        s = rep.rank_sum(u, v)
        for lo, hi in intervals:
            if lo.compare(s) <= 0 <= hi.compare(s):
                problems.append(
                    f"cross pair ({u},{v}) lands inside an anchor interval"
                )
                break
    return problems


# ----------------------------------------------------------------------
# shared builder helpers
# ----------------------------------------------------------------------


def _sqrt_values(basis: Basis, count: int):
    return tuple(basis.symbol_element(i + 1) for i in range(count))


def _double_until(value: FieldElement, minimum: FieldElement) -> FieldElement:
    while value.compare(minimum) < 0:
        value = value * 2
    return value


def _pairwise_sums(ranks):
    ranks = list(ranks)
    return [
        ranks[i] + ranks[j]
        for i in range(len(ranks))
        for j in range(i + 1, len(ranks))
    ]


def _quad_ranks(quads):
    out = []
    for quad in quads:
        out.extend(quad.ranks())
    return out


def _require_rank_window(ranks, lo=None, hi=None):
    for r in ranks:
        if lo is not None and r.compare(lo) < 0:
            raise RuntimeError("a rank falls below the designed window")
        if hi is not None and r.compare(hi) > 0:
            raise RuntimeError("a rank rises above the designed window")


def _sorted_intervals(intervals):
    return sorted(intervals, key=lambda iv: iv[0])


def _interval_thresholds(ordered_intervals, delta: Fraction):
    """Alternating list: each anchor interval gets (lo, hi + delta)."""
    out = []
    for lo, hi in ordered_intervals:
        out.append(lo)
        out.append(hi + delta)
    return out


def _threshold_delta(ranks, intervals) -> Fraction:
    pool = _pairwise_sums(ranks)
    for lo, hi in intervals:
        pool.append(lo)
        pool.append(hi)
    return select_epsilon(pool)


# ----------------------------------------------------------------------
# triangle families
# ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def _nk3_interior(m: int) -> Representation:
    """Full-capacity representation shared by every interior n at step m."""
    basis = Basis(tuple(first_primes(m)))
    values = _sqrt_values(basis, m)
    assign = triple_assignment(m + comb(m, 3), values)
    ranks = assign.ranks()
    intervals = _sorted_intervals(assign.anchor_intervals())
    delta = _threshold_delta(ranks, intervals)
    return Representation(ranks, _interval_thresholds(intervals, delta))


@lru_cache(maxsize=None)
def _nk3_boundary(m: int) -> Representation:
    basis = Basis(tuple(first_primes(m)))
    mids = _sqrt_values(basis, m - 1)
    top = basis.symbol_element(m)
    if mids:
        # every rank must stay at or below top/2, so push top past 2*max(mid)
        top = _double_until(top, mids[-1] * 2)
    mid_assign = triple_assignment((m - 1) + comb(m - 1, 3), mids)
    assign = TripleAssignment(mids + (top,), mid_assign.triples + ((top, top, top),))
    ranks = assign.ranks()
    _require_rank_window(ranks, hi=top / 2)
    intervals = _sorted_intervals(assign.anchor_intervals())
    if intervals[-1][0] != top:
        raise RuntimeError("the dropped threshold must belong to the top anchor")
    delta = _threshold_delta(ranks, intervals)
    thresholds = _interval_thresholds(intervals, delta)[:-1]
    return Representation(ranks, thresholds)


@lru_cache(maxsize=None)
def _knx3_boundary(m: int) -> Representation:
    basis = Basis(tuple(first_primes(m + 1)))
    mids = _sqrt_values(basis, m - 1)
    top = basis.symbol_element(m)
    bot = basis.symbol_element(m + 1)
    if mids:
        # ranks must stay inside [bot/2, top/2]: both ends beyond 3*max(mid)
        top = _double_until(top, mids[-1] * 3)
        bot = _double_until(bot, mids[-1] * 3)
    bot = -bot
    mid_assign = triple_assignment((m - 1) + comb(m - 1, 3), mids)
    assign = TripleAssignment(
        (bot,) + mids + (top,),
        mid_assign.triples + ((bot, bot, bot), (top, top, top)),
    )
    ranks = assign.ranks()
    _require_rank_window(ranks, lo=bot / 2, hi=top / 2)
    intervals = _sorted_intervals(assign.anchor_intervals())
    if intervals[0][0] != bot or intervals[-1][0] != top:
        raise RuntimeError("extreme anchors must carry the dropped thresholds")
    delta = _threshold_delta(ranks, intervals)
    thresholds = _interval_thresholds(intervals, delta)[1:-1]
    return Representation(ranks, thresholds)


# ----------------------------------------------------------------------
# square families
# ----------------------------------------------------------------------


def _interior_pairs(m: int):
    """Value pairs and total for the interior assignment at step m."""
    half = m // 2
    basis = Basis(tuple(first_primes(half + 1)))
    avals = _sqrt_values(basis, half)
    total = basis.symbol_element(half + 1)
    if avals:
        # keep every a below total/2 so pairs stay disjoint and ordered
        total = _double_until(total, avals[-1] * 2)
    bvals = tuple(total - a for a in avals)
    return tuple(zip(avals, bvals)), total


@lru_cache(maxsize=None)
def _nk4_interior(m: int) -> Representation:
    pairs, total = _interior_pairs(m)
    if m % 2 == 0:
        assign = QuadAssignment(_pair_quads(pairs, total, None), pairs, total, None)
    else:
        plain = _pair_quads(pairs, total, Fraction(0))
        eps = select_epsilon(_pairwise_sums(_quad_ranks(plain)))
        assign = QuadAssignment(_pair_quads(pairs, total, eps), pairs, total, eps)
    ranks = assign.ranks()
    intervals = _sorted_intervals(assign.anchor_intervals())
    delta = _threshold_delta(ranks, intervals)
    return Representation(ranks, _interval_thresholds(intervals, delta))


@lru_cache(maxsize=None)
def _nk4_boundary(m: int) -> Representation:
    half = (m + 1) // 2
    basis = Basis(tuple(first_primes(half + 1)))
    avals = _sqrt_values(basis, half - 1)
    total = basis.symbol_element(half)
    # the lone top clique needs every other rank at or below a_top/2
    a_top = _double_until(basis.symbol_element(half + 1), total * 2)
    pairs = tuple(zip(avals, (total - a for a in avals)))
    if m % 2 == 1:
        quads = _pair_quads(pairs, total, None) + (mono_quad(a_top),)
        assign = QuadAssignment(quads, pairs, total, None, (a_top,))
        ranks = assign.ranks()
        _require_rank_window(ranks, hi=a_top / 2)
    else:
        big = _pair_quads(pairs + ((a_top, total - a_top),), total, Fraction(0))
        eps = select_epsilon(_pairwise_sums(_quad_ranks(big)))
        quads = _pair_quads(pairs, total, eps) + (mono_quad(a_top),)
        assign = QuadAssignment(quads, pairs, total, eps, (a_top,))
        ranks = assign.ranks()
        _require_rank_window(ranks, hi=(a_top + eps) / 2)
    intervals = _sorted_intervals(assign.anchor_intervals())
    if len(intervals) != m or intervals[-1][0] != a_top:
        raise RuntimeError("the dropped threshold must belong to the top anchor")
    delta = _threshold_delta(ranks, intervals)
    thresholds = _interval_thresholds(intervals, delta)[:-1]
    return Representation(ranks, thresholds)


@lru_cache(maxsize=None)
def _knx4_boundary(m: int) -> Representation:
    half = (m + 1) // 2
    basis = Basis(tuple(first_primes(half + 1)))
    avals = _sqrt_values(basis, half - 1)
    total = basis.symbol_element(half)
    # both lone parts need every rank inside [a_bot/2, b_top/2]
    a_bot = -_double_until(basis.symbol_element(half + 1), total * 3)
    b_top = total - a_bot
    pairs = tuple(zip(avals, (total - a for a in avals)))
    if m % 2 == 1:
        quads = _pair_quads(pairs, total, None)
        quads += (mono_quad(a_bot), mono_quad(b_top))
        assign = QuadAssignment(quads, pairs, total, None, (a_bot, b_top))
        ranks = assign.ranks()
        _require_rank_window(ranks, lo=a_bot / 2, hi=b_top / 2)
    else:
        big = _pair_quads(pairs + ((a_bot, b_top),), total, Fraction(0))
        eps = select_epsilon(_pairwise_sums(_quad_ranks(big)))
        quads = _pair_quads(pairs, total, eps)
        quads += (mono_quad(a_bot), mono_quad(b_top))
        assign = QuadAssignment(quads, pairs, total, eps, (a_bot, b_top))
        ranks = assign.ranks()
        _require_rank_window(ranks, lo=a_bot / 2, hi=(b_top + eps) / 2)
    intervals = _sorted_intervals(assign.anchor_intervals())
    if len(intervals) != m + 1 or intervals[0][0] != a_bot or intervals[-1][0] != b_top:
        raise RuntimeError("extreme anchors must carry the dropped thresholds")
    delta = _threshold_delta(ranks, intervals)
    thresholds = _interval_thresholds(intervals, delta)[1:-1]
    return Representation(ranks, thresholds)


# ----------------------------------------------------------------------
# public constructors
# ----------------------------------------------------------------------


def _checked(rep: Representation, theta: int, group_size: int, n: int):
    if rep.vertex_count != group_size * n:
        raise RuntimeError("built representation covers the wrong vertex count")
    if rep.threshold_count != theta:
        raise RuntimeError("threshold count drifted from the closed form")
    return rep


@lru_cache(maxsize=None)
def construct_nk3(n: int) -> Representation:
    """Optimal representation of n disjoint triangles."""
    res = theta_nk3(n)
    if res.regime == BOUNDARY:
        rep = _nk3_boundary(res.m)
    else:
        rep = _nk3_interior(res.m)
        if 3 * n < rep.vertex_count:
            rep = rep.restrict(range(3 * n))
    return _checked(rep, res.theta, 3, n)


@lru_cache(maxsize=None)
def _knx3_from_complement(n: int) -> Representation:
    """Complement route shared by interior steps: one transform per size."""
    rep = construct_nk3(n)
    return complement_representation(rep, family_graph("nk3", n), check=False)


@lru_cache(maxsize=None)
def construct_knx3(n: int) -> Representation:
    """Optimal representation of the complete multipartite graph K_{n x 3}."""
    res = theta_knx3(n)
    if res.regime == BOUNDARY:
        rep = _knx3_boundary(res.m)
    elif n == boundary_nk3(res.m):
        # the triangle staircase steps inside this interval; its boundary
        # representation is odd, so complementing keeps the count at theta
        rep = _knx3_from_complement(n)
    else:
        full = _knx3_from_complement(boundary_nk3(res.m) - 1)
        rep = full.restrict(range(3 * n)) if 3 * n < full.vertex_count else full
    return _checked(rep, res.theta, 3, n)


@lru_cache(maxsize=None)
def construct_nk4(n: int) -> Representation:
    """Optimal representation of n disjoint four-cliques."""
    res = theta_nk4(n)
    if res.regime == BOUNDARY:
        rep = _nk4_boundary(res.m)
    else:
        rep = _nk4_interior(res.m)
        if 4 * n < rep.vertex_count:
            rep = rep.restrict(range(4 * n))
    return _checked(rep, res.theta, 4, n)


@lru_cache(maxsize=None)
def _knx4_from_complement(n: int) -> Representation:
    rep = construct_nk4(n)
    return complement_representation(rep, family_graph("nk4", n), check=False)


@lru_cache(maxsize=None)
def construct_knx4(n: int) -> Representation:
    """Optimal representation of the complete multipartite graph K_{n x 4}."""
    res = theta_knx4(n)
    if res.regime == BOUNDARY:
        rep = _knx4_boundary(res.m)
    elif n == boundary_nk4(res.m):
        rep = _knx4_from_complement(n)
    else:
        full = _knx4_from_complement(boundary_nk4(res.m) - 1)
        rep = full.restrict(range(4 * n)) if 4 * n < full.vertex_count else full
    return _checked(rep, res.theta, 4, n)

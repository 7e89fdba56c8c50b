"""Exhaustive threshold-number oracle for tiny graphs.

Every pair of vertices must land in one of the half-open regions cut out
by k thresholds: edges in an odd region, nonedges in an even one.  The
oracle enumerates all ways to assign regions to pairs and asks an exact
rational LP whether ranks and thresholds realizing the assignment exist.
A positive margin variable turns the strict inequalities of a genuine
representation into a bounded maximization, so feasibility is decidable
with a single-phase simplex over Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .exactnum import Basis
from .graphs import GraphSpec, Representation, all_pairs, verify

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceededError",
    "IntervalAssignment",
    "LPProblem",
    "LPWitness",
    "OracleResult",
    "build_lp",
    "is_k_threshold",
    "lp_feasible",
    "threshold_number",
]

DEFAULT_BUDGET = 2**24


class BudgetExceededError(Exception):
    """Raised before enumeration when the assignment count exceeds the budget."""


@dataclass
class IntervalAssignment:
    """Region choice per pair: edges get an interval, nonedges a gap.

    Interval i covers [theta_{2i-1}, theta_{2i}) for i = 1..ceil(k/2); the
    last interval of an odd k is unbounded.  Gap j covers [theta_{2j},
    theta_{2j+1}) for j = 0..floor(k/2); gap 0 is unbounded below and the
    last gap of an even k is unbounded above.
    """

    edge_interval: dict
    nonedge_gap: dict


@dataclass
class LPProblem:
    """Rows of coefficient lists with rational right-hand sides.

    Columns: split rank variables (2 per vertex), split threshold
    variables (2 per threshold), then one margin variable t >= 0.  Every
    row means coeffs . x <= rhs.
    """

    vertex_count: int
    k: int
    rows: list
    objective: list

    @property
    def num_cols(self) -> int:
        return 2 * self.vertex_count + 2 * self.k + 1


@dataclass
class LPWitness:
    margin: Fraction
    ranks: tuple
    thresholds: tuple


@dataclass
class OracleResult:
    answer: str  # "yes" or "no"
    k: int
    representation: Representation | None
    assignments_total: int
    assignments_checked: int
    lps_solved: int


def build_lp(
    g: GraphSpec, k: int, assignment: IntervalAssignment, order_rows=()
) -> LPProblem:
    """LP whose feasibility with positive margin realizes the assignment.

    order_rows lists vertex pairs (u, v) whose ranks may be assumed
    ordered rank(u) <= rank(v); they cut symmetric duplicates without
    excluding every representative of a feasible assignment class.
    """
    n = g.vertex_count
    cols = 2 * n + 2 * k + 1
    t_col = cols - 1

    def zero_row():
        return [Fraction(0)] * cols

    def add_rank(row, u, scale):
        row[2 * u] += scale
        row[2 * u + 1] -= scale

    def add_theta(row, j, scale):
        # thresholds are 1-based
        row[2 * n + 2 * (j - 1)] += scale
        row[2 * n + 2 * (j - 1) + 1] -= scale

    rows = []

    def push(row, rhs=Fraction(0)):
        rows.append((row, rhs))

    # pin theta_1 = 0 so scale-invariant solutions stay bounded
    row = zero_row()
    add_theta(row, 1, Fraction(1))
    push(row)
    row = zero_row()
    add_theta(row, 1, Fraction(-1))
    push(row)

    # strictly increasing thresholds
    for j in range(1, k):
        row = zero_row()
        add_theta(row, j, Fraction(1))
        add_theta(row, j + 1, Fraction(-1))
        row[t_col] = Fraction(1)
        push(row)

    for (u, v), i in assignment.edge_interval.items():
        row = zero_row()
        add_theta(row, 2 * i - 1, Fraction(1))
        add_rank(row, u, Fraction(-1))
        add_rank(row, v, Fraction(-1))
        push(row)
        if 2 * i <= k:
            row = zero_row()
            add_rank(row, u, Fraction(1))
            add_rank(row, v, Fraction(1))
            add_theta(row, 2 * i, Fraction(-1))
            row[t_col] = Fraction(1)
            push(row)

    for (u, v), j in assignment.nonedge_gap.items():
        if j >= 1:
            row = zero_row()
            add_theta(row, 2 * j, Fraction(1))
            add_rank(row, u, Fraction(-1))
            add_rank(row, v, Fraction(-1))
            push(row)
        if 2 * j + 1 <= k:
            row = zero_row()
            add_rank(row, u, Fraction(1))
            add_rank(row, v, Fraction(1))
            add_theta(row, 2 * j + 1, Fraction(-1))
            row[t_col] = Fraction(1)
            push(row)

    for u, v in order_rows:
        row = zero_row()
        add_rank(row, u, Fraction(1))
        add_rank(row, v, Fraction(-1))
        push(row)

    # cap the margin so maximizing it terminates
    row = zero_row()
    row[t_col] = Fraction(1)
    push(row, Fraction(1))

    objective = [Fraction(0)] * cols
    objective[t_col] = Fraction(1)
    return LPProblem(n, k, rows, objective)


def _simplex_max(problem: LPProblem):
    """Maximize the objective over rows with nonnegative right-hand sides.

    Every rhs is 0 except the margin cap, so the all-slack basis is
    feasible and a single phase with Bland's rule suffices.  Returns the
    optimum and the primal solution for the structural columns.
    """
    ncols = problem.num_cols
    m = len(problem.rows)
    width = ncols + m + 1
    tableau = []
    for i, (coeffs, rhs) in enumerate(problem.rows):
        row = list(coeffs) + [Fraction(0)] * m + [rhs]
        row[ncols + i] = Fraction(1)
        tableau.append(row)
    basis = [ncols + i for i in range(m)]
    zrow = [-c for c in problem.objective] + [Fraction(0)] * (m + 1)

    while True:
        enter = next((j for j in range(width - 1) if zrow[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            coef = tableau[i][enter]
            if coef > 0:
                ratio = tableau[i][-1] / coef
                if (
                    best is None
                    or ratio < best
                    or (ratio == best and basis[i] < basis[leave])
                ):
                    best = ratio
                    leave = i
        if leave is None:
            raise RuntimeError("margin maximization cannot be unbounded")
        pivot_row = tableau[leave]
        inv = Fraction(1) / pivot_row[enter]
        tableau[leave] = [x * inv for x in pivot_row]
        pivot_row = tableau[leave]
        for i in range(m):
            if i != leave and tableau[i][enter]:
                factor = tableau[i][enter]
                row = tableau[i]
                tableau[i] = [a - factor * b for a, b in zip(row, pivot_row)]
        if zrow[enter]:
            factor = zrow[enter]
            zrow = [a - factor * b for a, b in zip(zrow, pivot_row)]
        basis[leave] = enter

    solution = [Fraction(0)] * ncols
    for i, var in enumerate(basis):
        if var < ncols:
            solution[var] = tableau[i][-1]
    return zrow[-1], solution


def lp_feasible(problem: LPProblem) -> LPWitness | None:
    """Witness with positive margin, or None when none exists."""
    value, solution = _simplex_max(problem)
    if value <= 0:
        return None
    n, k = problem.vertex_count, problem.k
    ranks = tuple(solution[2 * u] - solution[2 * u + 1] for u in range(n))
    thresholds = tuple(
        solution[2 * n + 2 * j] - solution[2 * n + 2 * j + 1] for j in range(k)
    )
    return LPWitness(value, ranks, thresholds)


# ----------------------------------------------------------------------
# symmetry order over vertices
# ----------------------------------------------------------------------


def _vertex_order_pairs(g: GraphSpec):
    """Pairs (u, v) with rank(u) <= rank(v) assumable up to relabeling.

    Vertices inside one group are interchangeable, so their ranks can be
    sorted; whole groups of equal size are interchangeable too, which
    orders the first vertices of each size class.
    """
    if not hasattr(g, "groups"):
        return []
    groups = g.groups()
    pairs = []
    for vertices in groups:
        pairs.extend(zip(vertices, vertices[1:]))
    by_size = {}
    for vertices in groups:
        by_size.setdefault(len(vertices), []).append(vertices)
    for same in by_size.values():
        for first, second in zip(same, same[1:]):
            pairs.append((first[0], second[0]))
    return pairs


def _leq_closure(n: int, pairs):
    leq = [[False] * n for _ in range(n)]
    for i in range(n):
        leq[i][i] = True
    for u, v in pairs:
        leq[u][v] = True
    for mid in range(n):
        for i in range(n):
            if leq[i][mid]:
                row_i = leq[i]
                row_m = leq[mid]
                for j in range(n):
                    if row_m[j]:
                        row_i[j] = True
    return leq


def is_k_threshold(
    g: GraphSpec, k: int, budget: int = DEFAULT_BUDGET, prune: bool = True
) -> OracleResult:
    """Decide by exhaustion whether g admits k thresholds.

    Enumerates region assignments depth-first.  With prune on, vertex
    pairs whose rank sums are forcibly ordered by the symmetry order must
    occupy monotone regions; subtrees violating that are counted as
    covered without solving their LPs, and the final bookkeeping asserts
    that pruned plus solved assignments cover the whole product space.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = g.vertex_count
    pairs = list(all_pairs(n))
    if k == 0:
        # the single all-gap-0 assignment works iff there are no edges;
        # an edge has no interval to sit in, so the choice product is 0
        edgeless = all(not g.is_edge(u, v) for u, v in pairs)
        if edgeless:
            basis = Basis(())
            rep = Representation([basis.rational(0)] * n, [])
            return OracleResult("yes", 0, rep, 1, 1, 0)
        return OracleResult("no", 0, None, 0, 0, 0)

    # region positions: interval i sits at 2i-1, gap j at 2j
    edge_positions = [2 * i - 1 for i in range(1, (k + 1) // 2 + 1)]
    gap_positions = [2 * j for j in range(k // 2 + 1)]
    is_e = [g.is_edge(u, v) for u, v in pairs]
    options = [edge_positions if e else gap_positions for e in is_e]
    total = prod(len(opts) for opts in options)
    if total > budget:
        raise BudgetExceededError(
            f"{total} assignments exceed the budget of {budget}"
        )

    order_pairs = _vertex_order_pairs(g) if prune else []
    leq = _leq_closure(n, order_pairs)

    # per pair, the earlier pairs whose region position must not exceed /
    # fall below the current pair's position
    must_ge = [[] for _ in pairs]
    must_le = [[] for _ in pairs]
    if prune:
        for qi, (c, d) in enumerate(pairs):
            for pi in range(qi):
                a, b = pairs[pi]
                if (leq[a][c] and leq[b][d]) or (leq[a][d] and leq[b][c]):
                    must_ge[qi].append(pi)  # sum(p) <= sum(q)
                if (leq[c][a] and leq[d][b]) or (leq[c][b] and leq[d][a]):
                    must_le[qi].append(pi)  # sum(q) <= sum(p)

    tail = [prod(len(opts) for opts in options[d + 1 :]) for d in range(len(pairs))]
    positions = [0] * len(pairs)
    covered = 0
    lps = 0
    basis = Basis(())

    def leaf_result():
        assignment = IntervalAssignment(
            {
                pair: (positions[i] + 1) // 2
                for i, pair in enumerate(pairs)
                if is_e[i]
            },
            {
                pair: positions[i] // 2
                for i, pair in enumerate(pairs)
                if not is_e[i]
            },
        )
        witness = lp_feasible(build_lp(g, k, assignment, order_pairs))
        if witness is None:
            return None
        rep = Representation(
            [basis.rational(r) for r in witness.ranks],
            [basis.rational(t) for t in witness.thresholds],
        )
        if not verify(rep, g).ok:
            raise RuntimeError("feasible assignment produced a bad witness")
        return rep

    def descend(depth):
        nonlocal covered, lps
        if depth == len(pairs):
            covered += 1
            lps += 1
            return leaf_result()
        for pos in options[depth]:
            if prune:
                bad = any(positions[pi] > pos for pi in must_ge[depth]) or any(
                    positions[pi] < pos for pi in must_le[depth]
                )
                if bad:
                    covered += tail[depth]
                    continue
            positions[depth] = pos
            rep = descend(depth + 1)
            if rep is not None:
                return rep
        return None

    rep = descend(0)
    if rep is not None:
        return OracleResult("yes", k, rep, total, covered, lps)
    if covered != total:
        raise RuntimeError("pruning bookkeeping failed to cover the space")
    return OracleResult("no", k, None, total, covered, lps)


def threshold_number(
    g: GraphSpec,
    k_max: int = 8,
    budget: int = DEFAULT_BUDGET,
    prune: bool = True,
) -> int | None:
    """Smallest k for which g is k-threshold, or None past k_max.

    Edgeless graphs need no thresholds and complete graphs exactly one;
    both short-circuit the scan.
    """
    n = g.vertex_count
    flags = [g.is_edge(u, v) for u, v in all_pairs(n)]
    if not any(flags):
        return 0
    if all(flags):
        return 1
    for k in range(1, k_max + 1):
        if is_k_threshold(g, k, budget=budget, prune=prune).answer == "yes":
            return k
    return None

"""Interval colorings of edges and nonedges, and combinatorial certifiers.

With thresholds t1 < ... < tk, an edge whose rank sum lies in [t_{2i-1}, t_{2i})
gets edge color i (the last interval is unbounded when k is odd), and a
nonedge whose rank sum lies in [t_{2i-2}, t_{2i-1}) gets nonedge color i,
counting t0 as minus infinity.  The certifiers check the counting facts that
force the lower bounds on threshold numbers: color multisets of disjoint
triangles cannot repeat, a lone color cannot recur across cliques, extreme
colors are confined to one clique or part, and every rainbow K4 keeps one
triangle inside a half of the color range.

All certifiers run on a ColorTable rather than on a representation, so tests
can inject invalid colorings directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable, Sequence

from .graphs import (
    CompleteMultipartite,
    DisjointCliques,
    GraphSpec,
    Representation,
    all_pairs,
)
from .theta import max_parts_bound

__all__ = [
    "ColorTable",
    "CertificateViolation",
    "ViolationKind",
    "color_table",
    "clique_color_multiset",
    "check_no_two_same_color",
    "check_lone_color_unique",
    "check_extreme_color_unique",
    "check_k4_half_triangle",
    "max_parts_bound",
]


class ViolationKind(Enum):
    SAME_COLOR_PAIR = "same_color_pair"
    LONE_COLOR_PAIR = "lone_color_pair"
    EXTREME_COLOR_MULTIPLICITY = "extreme_color_multiplicity"
    MISSING_HALF_TRIANGLE = "missing_half_triangle"


@dataclass(frozen=True)
class CertificateViolation:
    """One independently recheckable counterexample found by a certifier."""

    kind: ViolationKind
    groups: tuple[int, ...]
    colors: tuple[int, ...]
    vertices: tuple[tuple[int, ...], ...] = ()

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "groups": list(self.groups),
            "colors": list(self.colors),
            "vertices": [list(t) for t in self.vertices],
        }


@dataclass
class ColorTable:
    """Total coloring of a graph's edges and nonedges by interval index."""

    edge_color: dict[tuple[int, int], int]
    nonedge_color: dict[tuple[int, int], int]
    num_edge_colors: int
    num_nonedge_colors: int


def color_table(rep: Representation, g: GraphSpec) -> ColorTable:
    """Color every pair of g by the interval its rank sum falls into.

    Raises if the thresholds are empty or if any pair's parity disagrees
    with g, since then no total interval coloring exists.
    """
    k = rep.threshold_count
    if k == 0:
        raise ValueError("cannot color with an empty threshold list")
    if rep.vertex_count != g.vertex_count:
        raise ValueError("representation and graph vertex counts differ")
    edge_color: dict[tuple[int, int], int] = {}
    nonedge_color: dict[tuple[int, int], int] = {}
    for u, v in all_pairs(g.vertex_count):
        c = rep.count_thresholds_leq(rep.rank_sum(u, v))
        if c % 2 == 1:
            if not g.is_edge(u, v):
                raise ValueError(
                    f"pair ({u},{v}) has edge parity but is a nonedge of the graph"
                )
            edge_color[(u, v)] = (c + 1) // 2
        else:
            if g.is_edge(u, v):
                raise ValueError(
                    f"pair ({u},{v}) has nonedge parity but is an edge of the graph"
                )
            nonedge_color[(u, v)] = c // 2 + 1
    return ColorTable(
        edge_color,
        nonedge_color,
        num_edge_colors=(k + 1) // 2,
        num_nonedge_colors=(k + 2) // 2,
    )


def _pair_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def clique_color_multiset(
    table: ColorTable, vertices: Sequence[int]
) -> tuple[int, ...]:
    """Sorted colors of all pairs inside a homogeneous vertex set.

    The set must be entirely edges (a clique) or entirely nonedges (inside
    one part); mixed sets are rejected.
    """
    pairs = [_pair_key(u, v) for u, v in combinations(sorted(vertices), 2)]
    if all(p in table.edge_color for p in pairs):
        return tuple(sorted(table.edge_color[p] for p in pairs))
    if all(p in table.nonedge_color for p in pairs):
        return tuple(sorted(table.nonedge_color[p] for p in pairs))
    raise ValueError(f"vertex set {tuple(vertices)} is not homogeneous")


def _certifier_groups(g: GraphSpec) -> list[tuple[int, ...]]:
    """Cliques or parts of uniform size 3 or 4; other graphs are rejected."""
    if isinstance(g, DisjointCliques):
        if g.clique_size not in (3, 4):
            raise ValueError("certifiers need cliques of size 3 or 4")
        return g.groups()
    if isinstance(g, CompleteMultipartite):
        sizes = set(g.part_sizes)
        if len(sizes) != 1 or sizes.pop() not in (3, 4):
            raise ValueError("certifiers need uniform parts of size 3 or 4")
        return g.groups()
    raise ValueError("certifiers apply to clique or multipartite families only")


def _group_triples(
    table: ColorTable, g: GraphSpec
) -> list[tuple[int, tuple[int, ...], tuple[int, ...]]]:
    """(group index, vertex triple, color multiset) for every in-group triple."""
    out = []
    for gi, group in enumerate(_certifier_groups(g)):
        for triple in combinations(group, 3):
            out.append((gi, triple, clique_color_multiset(table, triple)))
    return out


def check_no_two_same_color(
    table: ColorTable, g: GraphSpec
) -> list[CertificateViolation]:
    """No two triples from different cliques/parts may share a color multiset.

    For size-4 groups each of the four inner triples participates.  Triples
    inside one group are exempt: a monochromatic K4 repeats its own triangle
    color four times without contradiction.
    """
    seen: dict[tuple[int, ...], list[tuple[int, tuple[int, ...]]]] = {}
    for gi, triple, colors in _group_triples(table, g):
        seen.setdefault(colors, []).append((gi, triple))
    violations = []
    for colors in sorted(seen):
        hits = seen[colors]
        groups = sorted({gi for gi, _ in hits})
        if len(groups) > 1:
            violations.append(
                CertificateViolation(
                    ViolationKind.SAME_COLOR_PAIR,
                    tuple(groups),
                    colors,
                    tuple(t for _, t in hits),
                )
            )
    return violations


def _lone_color(colors: tuple[int, ...]) -> int | None:
    """The color appearing once in a <=2-color triple; the color itself when
    monochromatic; None for triples with three distinct colors."""
    a, b, c = colors
    if a == b == c:
        return a
    if a == b:
        return c
    if b == c:
        return a
    return None


def check_lone_color_unique(
    table: ColorTable, g: GraphSpec
) -> list[CertificateViolation]:
    """Triples colored {i,j,j} and {i,l,l} cannot sit in different groups.

    The shared color i is the one appearing once (or three times, for the
    monochromatic case j = i).  Two such triples in distinct cliques or
    parts would force a pair with impossible parity, so each lone color
    belongs to at most one group.
    """
    by_lone: dict[int, list[tuple[int, tuple[int, ...], tuple[int, ...]]]] = {}
    for gi, triple, colors in _group_triples(table, g):
        lone = _lone_color(colors)
        if lone is not None:
            by_lone.setdefault(lone, []).append((gi, triple, colors))
    violations = []
    for lone in sorted(by_lone):
        hits = by_lone[lone]
        groups = sorted({gi for gi, _, _ in hits})
        if len(groups) > 1:
            violations.append(
                CertificateViolation(
                    ViolationKind.LONE_COLOR_PAIR,
                    tuple(groups),
                    (lone,),
                    tuple(t for _, t, _ in hits),
                )
            )
    return violations


def check_extreme_color_unique(
    table: ColorTable, g: GraphSpec, k: int
) -> list[CertificateViolation]:
    """Extreme interval colors may appear in at most one clique or part.

    Cliques (k odd, k = 2m-1): an edge of the top color m would join two
    vertices of large rank, and two such cliques would be joined too, so
    color m is confined to one clique.  Parts: the bottom nonedge color 1
    is confined to one part for every k, and for even k = 2m the top
    nonedge color m+1 is as well, by the mirrored argument.
    """
    groups = _certifier_groups(g)
    violations = []

    def confined(color_map: dict, color: int) -> None:
        hit_groups = sorted(
            {
                gi
                for gi, group in enumerate(groups)
                for u, v in combinations(group, 2)
                if color_map.get(_pair_key(u, v)) == color
            }
        )
        if len(hit_groups) > 1:
            violations.append(
                CertificateViolation(
                    ViolationKind.EXTREME_COLOR_MULTIPLICITY,
                    tuple(hit_groups),
                    (color,),
                )
            )

    if isinstance(g, DisjointCliques):
        if k % 2 == 0:
            raise ValueError("clique variant needs an odd threshold count")
        confined(table.edge_color, (k + 1) // 2)
    else:
        confined(table.nonedge_color, 1)
        if k % 2 == 0:
            confined(table.nonedge_color, k // 2 + 1)
    return violations


def check_k4_half_triangle(
    table: ColorTable, g: GraphSpec, m: int
) -> list[CertificateViolation]:
    """Every rainbow K4 keeps a triangle inside one half of the color range.

    A K4 is rainbow when all four of its triangles use three distinct
    colors.  Sorting the four ranks shows the middle edge's color bounds
    one whole triangle from above or below, so some triangle lies entirely
    in {1..floor(m/2)} or entirely in {floor(m/2)+1..m}.
    """
    if not isinstance(g, DisjointCliques) or g.clique_size != 4:
        raise ValueError("half-triangle check applies to disjoint K4s")
    low_max = m // 2
    violations = []
    for gi, group in enumerate(g.groups()):
        triples = [
            (t, clique_color_multiset(table, t)) for t in combinations(group, 3)
        ]
        if any(len(set(colors)) != 3 for _, colors in triples):
            continue
        if not any(
            colors[-1] <= low_max or colors[0] > low_max for _, colors in triples
        ):
            violations.append(
                CertificateViolation(
                    ViolationKind.MISSING_HALF_TRIANGLE,
                    (gi,),
                    tuple(sorted({c for _, cs in triples for c in cs})),
                    tuple(t for t, _ in triples),
                )
            )
    return violations

"""Graph families, multithreshold representations, and the exact verifier.

A representation assigns each vertex an exact rank and fixes a strictly
increasing threshold list; a pair is an edge exactly when an odd number of
thresholds is less than or equal to the pair's rank sum.  Verification
recomputes every pair's parity with exact arithmetic and compares it
against the target graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce
from typing import Iterable, Iterator, Sequence, Union

from .exactnum import (
    Basis,
    FieldElement,
    basis_from_json,
    basis_to_json,
    fraction_from_str,
    fraction_to_str,
    min_positive_gap,
)

FORMAT_VERSION = 1


# ----------------------------------------------------------------------
# graph families
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class DisjointCliques:
    """n vertex-disjoint copies of the complete graph on clique_size vertices.

    Vertices are numbered clique-major: clique c holds vertices
    c*clique_size .. (c+1)*clique_size - 1.
    """

    count: int
    clique_size: int

    def __post_init__(self) -> None:
        if self.count < 1 or self.clique_size < 1:
            raise ValueError("count and clique_size must be positive")

    @property
    def vertex_count(self) -> int:
        return self.count * self.clique_size

    def is_edge(self, u: int, v: int) -> bool:
        _check_pair(self, u, v)
        return u // self.clique_size == v // self.clique_size

    def groups(self) -> list[tuple[int, ...]]:
        m = self.clique_size
        return [tuple(range(c * m, (c + 1) * m)) for c in range(self.count)]

    def complement(self) -> "CompleteMultipartite":
        return CompleteMultipartite((self.clique_size,) * self.count)


@dataclass(frozen=True)
class CompleteMultipartite:
    """Complete multipartite graph; edges join vertices of different parts.

    Vertices are numbered part-major in the order of part_sizes.
    """

    part_sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "part_sizes", tuple(self.part_sizes))
        if not self.part_sizes or any(s < 1 for s in self.part_sizes):
            raise ValueError("part sizes must be positive")

    @property
    def vertex_count(self) -> int:
        return sum(self.part_sizes)

    @cached_property
    def _vertex_part(self) -> tuple[int, ...]:
        out = []
        for i, s in enumerate(self.part_sizes):
            out.extend([i] * s)
        return tuple(out)

    def is_edge(self, u: int, v: int) -> bool:
        _check_pair(self, u, v)
        return self._vertex_part[u] != self._vertex_part[v]

    def groups(self) -> list[tuple[int, ...]]:
        out = []
        start = 0
        for s in self.part_sizes:
            out.append(tuple(range(start, start + s)))
            start += s
        return out

    def complement(self) -> "GraphSpec":
        sizes = set(self.part_sizes)
        if len(sizes) == 1:
            return DisjointCliques(len(self.part_sizes), self.part_sizes[0])
        edges = []
        for group in self.groups():
            for i, u in enumerate(group):
                for v in group[i + 1 :]:
                    edges.append((u, v))
        return ExplicitGraph(self.vertex_count, edges)


class ExplicitGraph:
    """Arbitrary simple graph stored as a symmetric bit matrix."""

    __slots__ = ("vertex_count", "_rows")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]]):
        if vertex_count < 1:
            raise ValueError("vertex_count must be positive")
        self.vertex_count = vertex_count
        rows = [0] * vertex_count
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u == v:
                raise ValueError("loops are not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self._rows = tuple(rows)

    def is_edge(self, u: int, v: int) -> bool:
        _check_pair(self, u, v)
        return bool(self._rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in all_pairs(self.vertex_count) if self.is_edge(u, v)]

    def complement(self) -> "ExplicitGraph":
        edges = [
            (u, v)
            for u, v in all_pairs(self.vertex_count)
            if not self.is_edge(u, v)
        ]
        return ExplicitGraph(self.vertex_count, edges)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ExplicitGraph)
            and self.vertex_count == other.vertex_count
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self.vertex_count, self._rows))

    def __repr__(self) -> str:
        return f"ExplicitGraph({self.vertex_count}, {self.edges()!r})"


GraphSpec = Union[DisjointCliques, CompleteMultipartite, ExplicitGraph]


def _check_pair(g: GraphSpec, u: int, v: int) -> None:
    n = g.vertex_count
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"vertex pair ({u},{v}) out of range")
    if u == v:
        raise ValueError("adjacency is not defined on equal vertices")


def all_pairs(vertex_count: int) -> Iterator[tuple[int, int]]:
    for u in range(vertex_count):
        for v in range(u + 1, vertex_count):
            yield u, v


def family_graph(name: str, n: int) -> GraphSpec:
    """Build one of the four named families: nk3, knx3, nk4, knx4."""
    if name == "nk3":
        return DisjointCliques(n, 3)
    if name == "nk4":
        return DisjointCliques(n, 4)
    if name == "knx3":
        return CompleteMultipartite((3,) * n)
    if name == "knx4":
        return CompleteMultipartite((4,) * n)
    raise ValueError(f"unknown family {name!r}")


# ----------------------------------------------------------------------
# representations
# ----------------------------------------------------------------------


class Representation:
    """Vertex ranks plus a strictly increasing threshold list.

    A pair uv is an edge exactly when the number of thresholds less than
    or equal to rank(u) + rank(v) is odd.
    """

    __slots__ = ("basis", "ranks", "thresholds")

    def __init__(
        self,
        ranks: Sequence[FieldElement],
        thresholds: Sequence[FieldElement],
    ):
        ranks = tuple(ranks)
        thresholds = tuple(thresholds)
        if not ranks:
            raise ValueError("need at least one rank")
        basis = ranks[0].basis
        for r in ranks:
            if r.basis != basis:
                raise ValueError("all ranks must share one basis")
        for t in thresholds:
            if t.basis != basis:
                raise ValueError("thresholds must share the ranks' basis")
        for a, b in zip(thresholds, thresholds[1:]):
            if a.compare(b) >= 0:
                raise ValueError("thresholds must be strictly increasing")
        self.basis = basis
        self.ranks = ranks
        self.thresholds = thresholds

    @property
    def vertex_count(self) -> int:
        return len(self.ranks)

    @property
    def threshold_count(self) -> int:
        return len(self.thresholds)

    def rank_sum(self, u: int, v: int) -> FieldElement:
        if u == v:
            raise ValueError("rank sums are taken over distinct vertices")
        return self.ranks[u] + self.ranks[v]

    def count_thresholds_leq(self, value: FieldElement) -> int:
        """Number of thresholds <= value, by binary search on the sorted list."""
        lo, hi = 0, len(self.thresholds)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.thresholds[mid].compare(value) <= 0:
                lo = mid + 1
            else:
                hi = mid
        return lo

    def is_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < len(self.ranks) and 0 <= v < len(self.ranks)):
            raise ValueError(f"vertex pair ({u},{v}) out of range")
        return self.count_thresholds_leq(self.rank_sum(u, v)) % 2 == 1

    def restrict(self, vertices: Sequence[int]) -> "Representation":
        """Representation induced on the listed vertices, same thresholds."""
        return Representation([self.ranks[v] for v in vertices], self.thresholds)


def is_edge_under(rep: Representation, u: int, v: int) -> bool:
    return rep.is_edge(u, v)


@dataclass(frozen=True)
class Mismatch:
    u: int
    v: int
    expected_edge: bool
    got_edge: bool
    rank_sum: FieldElement


@dataclass
class VerificationReport:
    ok: bool
    mismatches: list[Mismatch] = field(default_factory=list)


def verify(rep: Representation, g: GraphSpec) -> VerificationReport:
    """Check every vertex pair of g against the representation's parity."""
    if rep.vertex_count != g.vertex_count:
        raise ValueError(
            f"representation covers {rep.vertex_count} vertices, "
            f"graph has {g.vertex_count}"
        )
    mismatches = []
    for u, v in all_pairs(g.vertex_count):
        got = rep.is_edge(u, v)
        expected = g.is_edge(u, v)
        if got != expected:
            mismatches.append(Mismatch(u, v, expected, got, rep.rank_sum(u, v)))
    return VerificationReport(not mismatches, mismatches)


def rank_sums(
    rep: Representation, g: GraphSpec
) -> tuple[list[FieldElement], list[FieldElement]]:
    """Edge and nonedge rank sum multisets, in lexicographic pair order."""
    edge, nonedge = [], []
    for u, v in all_pairs(g.vertex_count):
        (edge if g.is_edge(u, v) else nonedge).append(rep.rank_sum(u, v))
    return edge, nonedge


def check_sum_disjointness(rep: Representation, g: GraphSpec) -> bool:
    """True iff no edge rank sum equals any nonedge rank sum."""
    edge, nonedge = rank_sums(rep, g)
    edge_keys = {s.coeffs for s in edge}
    return all(s.coeffs not in edge_keys for s in nonedge)


def complement_representation(
    rep: Representation, g: GraphSpec, *, check: bool = True
) -> Representation:
    """Representation of the complement graph, built from rep.

    Every threshold is first moved left by a gap smaller than any distance
    between distinct values among rank sums and thresholds, which removes
    all ties without changing the graph.  The threshold list is padded to
    odd length with a value above every rank sum, then ranks are negated
    and thresholds are negated and reversed, flipping every pair's parity.

    With check=False the input is trusted; callers that construct rep
    themselves and verify the output anyway can skip one full pass.
    """
    if check:
        report = verify(rep, g)
        if not report.ok:
            raise ValueError("representation does not verify against the graph")

    sums = [rep.rank_sum(u, v) for u, v in all_pairs(g.vertex_count)]
    pool = sums + list(rep.thresholds)
    if pool:
        gap = min_positive_gap(pool)
        delta = Fraction(1, 2) if gap is None else gap / 2
        top = reduce(lambda a, b: a if a.compare(b) >= 0 else b, pool)
        pad = top + 1
    else:
        delta = Fraction(1, 2)
        pad = rep.basis.rational(1)

    shifted = [t - delta for t in rep.thresholds]
    if len(shifted) % 2 == 0:
        shifted.append(pad)
    new_thresholds = [-t for t in reversed(shifted)]
    new_ranks = [-r for r in rep.ranks]
    return Representation(new_ranks, new_thresholds)


# ----------------------------------------------------------------------
# serialization
# ----------------------------------------------------------------------


def graph_to_json(g: GraphSpec) -> dict:
    if isinstance(g, DisjointCliques):
        return {
            "family": "disjoint_cliques",
            "count": g.count,
            "clique_size": g.clique_size,
        }
    if isinstance(g, CompleteMultipartite):
        return {
            "family": "complete_multipartite",
            "part_sizes": list(g.part_sizes),
        }
    if isinstance(g, ExplicitGraph):
        return {
            "family": "explicit",
            "vertex_count": g.vertex_count,
            "edges": [list(e) for e in g.edges()],
        }
    raise TypeError(f"unknown graph type {type(g)!r}")


def graph_from_json(obj: dict) -> GraphSpec:
    family = obj.get("family")
    if family == "disjoint_cliques":
        return DisjointCliques(obj["count"], obj["clique_size"])
    if family == "complete_multipartite":
        return CompleteMultipartite(tuple(obj["part_sizes"]))
    if family == "explicit":
        return ExplicitGraph(
            obj["vertex_count"], [tuple(e) for e in obj["edges"]]
        )
    raise ValueError(f"unknown graph family {family!r}")


def representation_to_json(rep: Representation, g: GraphSpec) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "graph": graph_to_json(g),
        "basis": basis_to_json(rep.basis),
        "ranks": [[fraction_to_str(c) for c in r.coeffs] for r in rep.ranks],
        "thresholds": [
            [fraction_to_str(c) for c in t.coeffs] for t in rep.thresholds
        ],
    }


def representation_from_json(obj: dict) -> tuple[Representation, GraphSpec]:
    if obj.get("format_version") != FORMAT_VERSION:
        raise ValueError("unsupported format_version")
    g = graph_from_json(obj["graph"])
    basis = basis_from_json(obj["basis"])
    ranks = [
        FieldElement(basis, [fraction_from_str(c) for c in row])
        for row in obj["ranks"]
    ]
    thresholds = [
        FieldElement(basis, [fraction_from_str(c) for c in row])
        for row in obj["thresholds"]
    ]
    return Representation(ranks, thresholds), g


def save_representation(path: str, rep: Representation, g: GraphSpec) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(representation_to_json(rep, g), fh, indent=1)
        fh.write("\n")


def load_representation(path: str) -> tuple[Representation, GraphSpec]:
    with open(path, encoding="utf-8") as fh:
        return representation_from_json(json.load(fh))

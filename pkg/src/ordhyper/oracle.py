"""Brute-force ground truth, deliberately independent of the fast paths.

Exact extremal numbers at desk scale by branch and bound, naive
reimplementations of the level and containment logic, and an exhaustive
recheck of decompositions.  Everything here favors transparency over
speed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .core import OrderedHypergraph
from .patterns import OrderedPattern
from .splitting import Decomposition, piece_count_bound

DEFAULT_SEARCH_CAP = 36
DEFAULT_HOST_CAP = 10


@dataclass(frozen=True)
class ForbiddenSpec:
    """A decidable forbidden-configuration predicate.

    kinds: "none" (nothing forbidden), "crossing-pair" (two edges whose
    vertices perfectly alternate), "two-disjoint-edges" (any two disjoint
    edges, order-free), "ord" (any order type of an unordered r-partite
    hypergraph), "patterns" (an explicit list of ordered patterns).
    """

    kind: str
    hypergraph: OrderedHypergraph | None = None
    patterns: tuple[OrderedPattern, ...] = ()

    @classmethod
    def none(cls) -> "ForbiddenSpec":
        return cls("none")

    @classmethod
    def crossing_pair(cls) -> "ForbiddenSpec":
        return cls("crossing-pair")

    @classmethod
    def two_disjoint_edges(cls) -> "ForbiddenSpec":
        return cls("two-disjoint-edges")

    @classmethod
    def ord_of(cls, f: OrderedHypergraph) -> "ForbiddenSpec":
        return cls("ord", hypergraph=f)

    @classmethod
    def of_patterns(cls, patterns) -> "ForbiddenSpec":
        return cls("patterns", patterns=tuple(patterns))


def _alternating(a, b) -> bool:
    r = len(a)
    x, y = (a, b) if a[0] < b[0] else (b, a)
    return all(x[i] < y[i] for i in range(r)) and all(
        y[i] < x[i + 1] for i in range(r - 1)
    )


def _family_is_free(edges, n, r, spec: ForbiddenSpec, new_edge=None) -> bool:
    """True if (edges + new_edge) avoids the forbidden configuration.

    Pairwise kinds are checked locally against the new edge; pattern kinds
    rerun the naive containment scan on the whole family.
    """
    if spec.kind == "none":
        return True
    if spec.kind == "crossing-pair":
        return not any(_alternating(new_edge, e) for e in edges)
    if spec.kind == "two-disjoint-edges":
        s = set(new_edge)
        return not any(s.isdisjoint(e) for e in edges)
    family = OrderedHypergraph(n, r, list(edges) + [new_edge])
    if spec.kind == "patterns":
        return not any(naive_contains(family, p) for p in spec.patterns)
    if spec.kind == "ord":
        from .patterns import interval_order_types

        return not any(
            naive_contains(family, p) for p in interval_order_types(spec.hypergraph)
        )
    raise ValueError(f"unknown forbidden kind: {spec.kind}")


def max_edges_avoiding(
    n: int, r: int, spec: ForbiddenSpec, cap: int = DEFAULT_SEARCH_CAP
):
    """Exact maximum edge count of an n-vertex ordered r-graph avoiding the
    forbidden configuration, plus one maximizing family.

    Branch and bound over the r-sets in colex order, include-first, bounded
    by current count + remaining sets.  The witness is the first maximum
    reached in that deterministic order.
    """
    total = math.comb(n, r)
    if total > cap:
        raise ValueError(f"search space C({n},{r})={total} exceeds cap {cap}")
    universe = sorted(
        itertools.combinations(range(1, n + 1), r), key=lambda e: e[::-1]
    )
    best_count = -1
    best_family: list = []
    chosen: list = []

    def walk(idx: int):
        nonlocal best_count, best_family
        if len(chosen) + (total - idx) <= best_count:
            return
        if idx == total:
            if len(chosen) > best_count:
                best_count = len(chosen)
                best_family = list(chosen)
            return
        e = universe[idx]
        if _family_is_free(chosen, n, r, spec, new_edge=e):
            chosen.append(e)
            walk(idx + 1)
            chosen.pop()
        walk(idx + 1)

    walk(0)
    return best_count, OrderedHypergraph(n, r, best_family)


def naive_edge_level(e, n: int, k: int) -> int:
    """Level scan from scratch: rebuild every dyadic level as explicit
    interval lists, place vertices by linear search, count distinct."""
    if k < 2 or k > len(e):
        raise ValueError(f"need 2 <= k <= |e|, got k={k}")
    g = 0
    while 2 ** (g + 1) <= n:
        g += 1
    for level in range(g + 1):
        length = 2 ** (g - level)
        intervals = []
        lo = 1
        while lo <= n:
            intervals.append((lo, min(lo + length - 1, n)))
            lo += length
        met = set()
        for v in e:
            for idx, (a, b) in enumerate(intervals):
                if a <= v <= b:
                    met.add(idx)
                    break
        if len(met) >= k:
            return level
    raise AssertionError("singleton level meets |e| >= k intervals")


def naive_contains(
    h: OrderedHypergraph, pattern: OrderedPattern, cap: int = DEFAULT_HOST_CAP
) -> bool:
    """Exact containment by enumerating every strictly increasing injection
    of the pattern vertices into 1..n."""
    if h.n > cap:
        raise ValueError(f"host with {h.n} vertices exceeds naive cap {cap}")
    if pattern.p > h.n:
        return False
    host = set(h.edges)
    for image in itertools.combinations(range(1, h.n + 1), pattern.p):
        if all(tuple(image[v - 1] for v in e) in host for e in pattern.edges):
            return True
    return False


def verify_decomposition(h: OrderedHypergraph, dec: Decomposition) -> str | None:
    """Independent recheck of a decomposition; None if ok, else a report
    whose first word names the violated property.

    Checks: pairwise edge-disjointness, exact cover of the host, naive
    interval k-partiteness of every piece (at least k parts, every edge
    inside the part union and meeting every part), the ceil(n / 2**level)
    part-size cap, and the per-level piece-count bound.
    """
    n, r, k = h.n, h.r, dec.k
    seen: set = set()
    total = 0
    for piece in dec.pieces:
        total += len(piece.sub.edges)
        seen.update(piece.sub.edges)
    if total != len(seen):
        return "disjointness: pieces share an edge"
    host_edges = set(h.edges)
    if seen != host_edges:
        missing = sorted(host_edges - seen)
        extra = sorted(seen - host_edges)
        if missing:
            return f"cover: host edge {missing[0]} missing from the decomposition"
        return f"cover: decomposition contains foreign edge {extra[0]}"

    counts: dict[int, int] = {}
    for piece in dec.pieces:
        counts[piece.level] = counts.get(piece.level, 0) + 1
        ivs = [iv.as_pair() for iv in piece.intervals]
        if len(ivs) < k:
            return f"signature: piece at level {piece.level} has fewer than {k} parts"
        for (a1, b1), (a2, b2) in zip(ivs, ivs[1:]):
            if b1 >= a2:
                return f"ordering: parts {(a1, b1)} and {(a2, b2)} out of order"
        size_cap = -(-n // 2**piece.level)  # ceil(n / 2**level)
        for a, b in ivs:
            if b - a + 1 > size_cap:
                return (
                    f"part-size: part {(a, b)} exceeds cap {size_cap} "
                    f"at level {piece.level}"
                )
        for e in piece.sub.edges:
            for v in e:
                if not any(a <= v <= b for a, b in ivs):
                    return f"containment: vertex {v} of edge {e} outside the parts"
            for a, b in ivs:
                if not any(a <= v <= b for v in e):
                    return f"intersection: edge {e} misses part {(a, b)}"
    for level, t in counts.items():
        bound = piece_count_bound(level, k, r)
        if t > bound:
            return f"piece-count: level {level} has {t} pieces, bound {bound}"
    return None

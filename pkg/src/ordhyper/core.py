"""Ordered r-uniform hypergraphs on the vertex set 1..n.

Vertices are always the integers 1..n in their natural order; edges are
strictly increasing r-tuples.  All values are immutable after construction
and every operation is a pure function, so everything here is safe to use
from multiple threads.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

MAX_EDGES = 2**63 - 1

# Probability-model random instances enumerate the full edge universe; cap it
# so callers do not accidentally ask for C(128,5) Bernoulli draws.
PROBABILITY_MODEL_UNIVERSE_CAP = 5_000_000

_ENUMERATION_CAP = 200_000


@dataclass(frozen=True)
class Interval:
    """Consecutive vertices lo..hi (inclusive)."""

    lo: int
    hi: int

    def __post_init__(self):
        if not 1 <= self.lo <= self.hi:
            raise ValueError(f"bad interval [{self.lo}, {self.hi}]")

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def __contains__(self, v: int) -> bool:
        return self.lo <= v <= self.hi

    def as_pair(self) -> tuple[int, int]:
        return (self.lo, self.hi)


@dataclass(frozen=True)
class OrderedHypergraph:
    """An r-uniform hypergraph with vertex set 1..n in natural order.

    The constructor canonicalizes the edge list (each edge a tuple, outer
    list sorted lexicographically) but does not reject bad data; use
    :func:`validate` to obtain a violation report.  Duplicate edges are
    kept so that validation can report them -- they are never silently
    merged.
    """

    n: int
    r: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(tuple(e) for e in self.edges)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def support(self) -> tuple[int, ...]:
        """Vertices that appear in at least one edge, ascending."""
        return tuple(sorted({v for e in self.edges for v in e}))

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def edge_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.edges)


@dataclass(frozen=True)
class Density:
    """Edge count expressed as d = e(H) / n**alpha.

    ``d`` is an exact Fraction when ``alpha`` is an integer, otherwise a
    float.
    """

    alpha: int | float
    d: Fraction | float


def validate(h: OrderedHypergraph) -> str | None:
    """Check all invariants; return None if ok, else a report naming the
    first violated invariant and the offending edge."""
    if not isinstance(h.n, int) or h.n < 1:
        return f"vertex count not positive: n={h.n}"
    if not isinstance(h.r, int) or not 1 <= h.r <= h.n:
        return f"uniformity out of range: r={h.r} with n={h.n}"
    if len(h.edges) > MAX_EDGES:
        return "edge count exceeds 64-bit range"
    prev = None
    for e in h.edges:
        if len(e) != h.r:
            return f"edge has wrong size: {e}"
        if any(not isinstance(v, int) for v in e):
            return f"vertex not an integer in edge {e}"
        if any(e[i] >= e[i + 1] for i in range(len(e) - 1)):
            return f"edge not strictly increasing: {e}"
        if e[0] < 1 or e[-1] > h.n:
            return f"vertex out of range in edge {e}"
        if e == prev:
            return f"duplicate edge: {e}"
        prev = e
    return None


def density(h: OrderedHypergraph, alpha: int | float) -> Density:
    """d = e(H)/n**alpha, exact when alpha is an integer."""
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if isinstance(alpha, int):
        return Density(alpha, Fraction(len(h.edges), h.n**alpha))
    return Density(alpha, len(h.edges) / h.n**alpha)


def link(h: OrderedHypergraph, v: int) -> OrderedHypergraph:
    """The (r-1)-graph {e - v : v in e in H} on the same ordered vertex set."""
    if h.r < 2:
        raise ValueError("link needs uniformity r >= 2")
    if not 1 <= v <= h.n:
        raise ValueError(f"vertex {v} out of range [1, {h.n}]")
    edges = [tuple(u for u in e if u != v) for e in h.edges if v in e]
    return OrderedHypergraph(h.n, h.r - 1, edges)


def shadow(h: OrderedHypergraph) -> OrderedHypergraph:
    """All (r-1)-sets contained in some edge of H."""
    if h.r < 2:
        raise ValueError("shadow needs uniformity r >= 2")
    sets = {f for e in h.edges for f in itertools.combinations(e, h.r - 1)}
    return OrderedHypergraph(h.n, h.r - 1, sets)


def induced(h: OrderedHypergraph, s) -> OrderedHypergraph:
    """Edges of H entirely inside the vertex set ``s``; no relabeling."""
    keep = set(s)
    return OrderedHypergraph(h.n, h.r, [e for e in h.edges if keep.issuperset(e)])


def random_hypergraph(
    n: int,
    r: int,
    edge_count: int | None = None,
    p: float | None = None,
    seed: int = 0,
) -> OrderedHypergraph:
    """A uniformly random ordered r-graph, deterministic for a fixed seed.

    Exactly one of ``edge_count`` (sample that many distinct edges) and
    ``p`` (include each r-set independently) must be given.
    """
    if not (isinstance(n, int) and isinstance(r, int) and 1 <= r <= n):
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    if (edge_count is None) == (p is None):
        raise ValueError("give exactly one of edge_count and p")
    total = math.comb(n, r)
    rng = random.Random(seed)

    if p is not None:
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"probability out of range: {p}")
        if total > PROBABILITY_MODEL_UNIVERSE_CAP:
            raise ValueError(
                f"edge universe of size {total} too large for the probability "
                "model; use edge_count instead"
            )
        edges = [e for e in itertools.combinations(range(1, n + 1), r) if rng.random() < p]
        return OrderedHypergraph(n, r, edges)

    if edge_count < 0 or edge_count > total:
        raise ValueError(f"edge_count {edge_count} outside [0, C({n},{r})={total}]")
    if total <= _ENUMERATION_CAP:
        universe = list(itertools.combinations(range(1, n + 1), r))
        return OrderedHypergraph(n, r, rng.sample(universe, edge_count))
    # Sparse regime: rejection-sample distinct sorted r-sets.
    chosen: set[tuple[int, ...]] = set()
    population = range(1, n + 1)
    while len(chosen) < edge_count:
        chosen.add(tuple(sorted(rng.sample(population, r))))
    return OrderedHypergraph(n, r, chosen)

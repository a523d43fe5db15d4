"""Deterministic generators for the extremal families and named patterns.

Each generator returns a canonical OrderedHypergraph; fresh auxiliary
vertices (expansion points, simplex padding, tree growth) are appended
after all existing vertices, ascending in edge order, so outputs are
reproducible byte for byte.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass

from .core import OrderedHypergraph


@dataclass(frozen=True)
class TreeBuildScript:
    """Recipe for growing a tight tree: start from the edge 1..r, then for
    each step glue a fresh vertex onto the named shadow (r-1)-set."""

    r: int
    steps: tuple[tuple[int, ...], ...]


def _powers_of_two_upto(limit: int) -> list[int]:
    # 2**0 = 1 counts as a power of two throughout.
    out = []
    d = 1
    while d <= limit:
        out.append(d)
        d <<= 1
    return out


def power_of_two_bipartite(n1: int, n2: int) -> OrderedHypergraph:
    """Bipartite graph between [1,n1] and (n1, n1+n2] whose edges are the
    pairs at power-of-two distance.

    Every induced subgraph on A' u B' has at most 2|A' u B'| edges.
    """
    if n1 < 1 or n2 < 1:
        raise ValueError("both sides need at least one vertex")
    n = n1 + n2
    edges = []
    for i in range(1, n1 + 1):
        for d in _powers_of_two_upto(n - i):
            if i + d > n1:
                edges.append((i, i + d))
    return OrderedHypergraph(n, 2, edges)


def power_gap_hypergraph(n: int, r: int, k: int) -> OrderedHypergraph:
    """All increasing r-tuples on [n] whose first r-k+1 consecutive gaps are
    powers of two (the remaining k-2 top vertices are unconstrained)."""
    if not 2 <= k <= r <= n:
        raise ValueError(f"need 2 <= k <= r <= n, got k={k}, r={r}, n={n}")
    constrained = r - k + 1
    free = k - 2
    powers = _powers_of_two_upto(n - 1)
    edges = []
    for v1 in range(1, n + 1):
        for gaps in itertools.product(powers, repeat=constrained):
            prefix = [v1]
            for d in gaps:
                prefix.append(prefix[-1] + d)
            if prefix[-1] > n:
                continue
            if free == 0:
                edges.append(tuple(prefix))
            else:
                for tail in itertools.combinations(range(prefix[-1] + 1, n + 1), free):
                    edges.append(tuple(prefix) + tail)
    return OrderedHypergraph(n, r, edges)


def anchored_block_hypergraph(n: int, r: int, k: int) -> OrderedHypergraph:
    """On [r*n]: one block of r-k+2 consecutive vertices chosen among n
    slots, completed by k-2 free vertices, one from each top band of n.

    Edge count is exactly n**(k-1).
    """
    if not 2 <= k <= r:
        raise ValueError(f"need 2 <= k <= r, got k={k}, r={r}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    b = r - k + 2
    blocks = [tuple(range(b * (j - 1) + 1, b * j + 1)) for j in range(1, n + 1)]
    bands = [range((l - 1) * n + 1, l * n + 1) for l in range(r - k + 3, r + 1)]
    edges = []
    for block in blocks:
        for tail in itertools.product(*bands):
            edges.append(block + tail)
    return OrderedHypergraph(r * n, r, edges)


def tight_path(k: int, r: int) -> OrderedHypergraph:
    """The tight path with k edges: windows of r consecutive vertices among
    1..k+r-1."""
    if k < 1 or r < 2:
        raise ValueError(f"need k >= 1 and r >= 2, got k={k}, r={r}")
    n = k + r - 1
    return OrderedHypergraph(n, r, [tuple(range(i, i + r)) for i in range(1, k + 1)])


def tight_interval_hypergraph(n: int, r: int) -> OrderedHypergraph:
    """All n-r+1 windows of r consecutive vertices of [n]."""
    if not r <= n:
        raise ValueError(f"need r <= n, got r={r}, n={n}")
    if r < 2:
        raise ValueError(f"need r >= 2, got r={r}")
    return tight_path(n - r + 1, r)


def matching_family(n: int, r: int, ell: int) -> OrderedHypergraph:
    """On [6n]: edges assembled from a pair matching, a triple matching and
    a top block so that no two edges share exactly ``ell`` vertices.

    Odd ell: (ell+1)/2 pairs from {2i-1,2i} plus r-ell-1 top vertices.
    Even ell: one triple, ell/2 - 1 pairs, r-ell-1 top vertices.  Any two
    edges that agree outside the top block share ell+1 vertices, so an
    exact-ell overlap is impossible.  The top block is (5n, 6n].
    """
    if not 1 <= ell <= r - 1:
        raise ValueError(
            f"need 1 <= ell <= r-1 (got ell={ell}, r={r}); the ell=0 family "
            "is the crossing-free one"
        )
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    pairs = [(2 * i - 1, 2 * i) for i in range(1, n + 1)]
    triples = [(2 * n + 3 * i - 2, 2 * n + 3 * i - 1, 2 * n + 3 * i) for i in range(1, n + 1)]
    top = range(5 * n + 1, 6 * n + 1)
    t = r - ell - 1
    edges = []
    if ell % 2 == 1:
        for chosen in itertools.combinations(pairs, (ell + 1) // 2):
            base = tuple(v for pair in chosen for v in pair)
            for tail in itertools.combinations(top, t):
                edges.append(base + tail)
    else:
        for triple in triples:
            for chosen in itertools.combinations(pairs, ell // 2 - 1):
                base = tuple(v for pair in chosen for v in pair) + triple
                for tail in itertools.combinations(top, t):
                    edges.append(base + tail)
    return OrderedHypergraph(6 * n, r, edges)


def zigzag_path(k: int, r: int) -> OrderedHypergraph:
    """The tight path with k edges under the alternating interval order.

    Path positions are split by residue mod r into parts X_0 < ... <
    X_{r-1}; inside an even part positions ascend, inside an odd part they
    descend.  Vertices are renumbered 1..k+r-1 along that order, making the
    result interval r-partite with the parts as witness.
    """
    if k < 2 or r < 2:
        raise ValueError(f"need k, r >= 2, got k={k}, r={r}")
    nv = k + r - 1
    order = []
    for t in range(r):
        part = list(range(t, nv, r))
        if t % 2 == 1:
            part.reverse()
        order.extend(part)
    rank = {pos: idx + 1 for idx, pos in enumerate(order)}
    edges = [tuple(sorted(rank[i + j] for j in range(r))) for i in range(k)]
    return OrderedHypergraph(nv, r, edges)


def canonical_simplex(d: int, r: int) -> OrderedHypergraph:
    """d+1 edges on the core 1..d+1 (edge i omits core vertex i), each
    padded with r-d fresh private vertices: any d edges intersect, all d+1
    have empty intersection."""
    if not 1 <= d <= r:
        raise ValueError(f"need 1 <= d <= r, got d={d}, r={r}")
    core = list(range(1, d + 2))
    pad = r - d
    edges = []
    fresh = d + 2
    for i in core:
        e = [v for v in core if v != i] + list(range(fresh, fresh + pad))
        fresh += pad
        edges.append(tuple(e))
    return OrderedHypergraph(fresh - 1, r, edges)


def expansion(f: OrderedHypergraph) -> OrderedHypergraph:
    """Enlarge every edge by its own fresh vertex; fresh vertices follow all
    existing ones, ascending in canonical edge order."""
    base = f.n
    edges = [e + (base + j,) for j, e in enumerate(f.edges, start=1)]
    return OrderedHypergraph(f.n + len(f.edges), f.r + 1, edges)


def tight_tree(script: TreeBuildScript) -> OrderedHypergraph:
    """Grow a tight tree from the edge 1..r following the script; step t
    adds vertex r+t glued onto the named shadow set of the partial tree."""
    r = script.r
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    edges = [tuple(range(1, r + 1))]
    nv = r
    for step in script.steps:
        f = tuple(sorted(step))
        if len(f) != r - 1 or len(set(f)) != r - 1:
            raise ValueError(f"step {step} is not an (r-1)-set")
        if not any(set(f) <= set(e) for e in edges):
            raise ValueError(f"step {step} is not in the shadow of the partial tree")
        nv += 1
        edges.append(f + (nv,))
    return OrderedHypergraph(nv, r, edges)


def loose_triangle(r: int) -> OrderedHypergraph:
    """Three edges pairwise sharing exactly one vertex (empty triple
    intersection for r >= 3; the graph triangle for r = 2)."""
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    e1 = tuple(range(1, r + 1))
    e2 = tuple(range(r, 2 * r))
    e3 = tuple(sorted((1, 2 * r - 1) + tuple(range(2 * r, 3 * r - 2))))
    return OrderedHypergraph(3 * (r - 1), r, [e1, e2, e3])


def crossing_free_family(n: int, r: int) -> OrderedHypergraph:
    """The extremal family without a crossing pair: every r-set that has two
    consecutive vertices at distance one, plus every spread r-set (all gaps
    >= 2) that contains vertex 1.

    Has exactly C(n,r) - C(n-r,r) edges.  A crossing pair needs both edges
    spread, and the spread members all share vertex 1.
    """
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    if n < 2 * r + 1:
        warnings.warn(
            f"n={n} below 2r+1={2*r+1}: outside the extremal range, generated anyway",
            stacklevel=2,
        )
    edges = []
    for e in itertools.combinations(range(1, n + 1), r):
        if e[0] == 1 or any(e[i + 1] - e[i] == 1 for i in range(r - 1)):
            edges.append(e)
    return OrderedHypergraph(n, r, edges)

"""Detection, validation and constructive embedding of ordered patterns.

An OrderedPattern is a small hypergraph whose vertices 1..p carry the
pattern order; containment in a host means an order-preserving injection
sending every pattern edge onto a host edge.  Interval witnesses follow
the usual convention: the intervals need not cover [n], every edge must
lie in their union and meet each of them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import Interval, OrderedHypergraph
from .constructions import TreeBuildScript

DEFAULT_MAX_PATTERN_VERTICES = 12


@dataclass(frozen=True)
class OrderedPattern:
    """A forbidden/target configuration: p ordered vertices plus r-uniform
    edges (strictly increasing tuples)."""

    p: int
    r: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(tuple(e) for e in self.edges)))

    @classmethod
    def from_hypergraph(cls, h: OrderedHypergraph) -> "OrderedPattern":
        return cls(h.n, h.r, h.edges)

    def as_hypergraph(self) -> OrderedHypergraph:
        return OrderedHypergraph(self.p, self.r, self.edges)


@dataclass(frozen=True)
class Embedding:
    """A witness for containment: pairs (source vertex, host vertex) plus
    the matched host edges.  When the source is an OrderedPattern the map
    is strictly increasing in both coordinates."""

    vertex_map: tuple[tuple[int, int], ...]
    edges: tuple[tuple[int, ...], ...]

    def image(self) -> tuple[int, ...]:
        return tuple(sorted(host for _, host in self.vertex_map))

    def mapping(self) -> dict[int, int]:
        return dict(self.vertex_map)


def _support(edges) -> list[int]:
    return sorted({v for e in edges for v in e})


def interval_kpartite_witness(h: OrderedHypergraph, k: int):
    """Intervals I_1 < ... < I_l (l >= k) such that every edge lies in
    their union and meets each of them, or None.

    Dynamic program over cut positions of the support: a block of support
    positions is feasible iff every edge has a vertex in it, and we
    maximize the number of feasible blocks tiling the support.
    """
    if not 2 <= k <= h.r:
        raise ValueError(f"need 2 <= k <= r, got k={k}, r={h.r}")
    if not h.edges:
        if h.n < k:
            return None
        return tuple(Interval(j, j) for j in range(1, k + 1))
    u = _support(h.edges)
    s = len(u)
    pos = {v: i for i, v in enumerate(u)}  # 0-based support positions

    # required[a] = least block end b such that [a..b] meets every edge
    infinity = s
    required = [0] * s
    for e in h.edges:
        pts = sorted(pos[v] for v in e)
        pi = 0
        for a in range(s):
            while pi < len(pts) and pts[pi] < a:
                pi += 1
            nxt = pts[pi] if pi < len(pts) else infinity
            if nxt > required[a]:
                required[a] = nxt

    # best[t] = max number of feasible blocks tiling positions 0..t-1
    neg = -1
    best = [neg] * (s + 1)
    prev_cut = [0] * (s + 1)
    best[0] = 0
    for t in range(1, s + 1):
        for a in range(t):
            if best[a] >= 0 and required[a] <= t - 1 and best[a] + 1 > best[t]:
                best[t] = best[a] + 1
                prev_cut[t] = a
    if best[s] < k:
        return None
    bounds = []
    t = s
    while t > 0:
        a = prev_cut[t]
        bounds.append((a, t - 1))
        t = a
    bounds.reverse()
    return tuple(Interval(u[a], u[b]) for a, b in bounds)


def exact_r_partite_parts(edges):
    """Intervals I_1 < ... < I_r with every edge having exactly one vertex
    in each, or None.  Shared vertices of different edges count for each
    edge containing them.

    Greedy and exact: the first part of any valid split must close at the
    latest first-vertex over the edges, and so on inductively.
    """
    edges = [tuple(e) for e in edges]
    if not edges:
        return None
    r = len(edges[0])
    if any(len(e) != r for e in edges):
        raise ValueError("edges must share one uniformity")
    u = _support(edges)
    containing: dict[int, list[int]] = {v: [] for v in u}
    for idx, e in enumerate(edges):
        for v in e:
            containing[v].append(idx)

    parts = []
    counts = [0] * len(edges)
    start = 0
    t = 0
    while t < len(u):
        for idx in containing[u[t]]:
            counts[idx] += 1
            if counts[idx] > 1:
                return None
        if all(counts):
            parts.append(Interval(u[start], u[t]))
            if len(parts) > r:
                return None
            counts = [0] * len(edges)
            start = t + 1
        t += 1
    if start != len(u) or len(parts) != r:
        return None
    return tuple(parts)


def interval_order_types(
    f: OrderedHypergraph, max_vertices: int = DEFAULT_MAX_PATTERN_VERTICES
):
    """All ordered patterns obtained by linearly ordering the support of f
    so that it becomes interval r-partite with one vertex per part.

    Empty result means f is not r-partite.  Runs through all orders of the
    support, so keep supports small (factorial cost).
    """
    supp = _support(f.edges)
    if len(supp) > max_vertices:
        raise ValueError(f"support of size {len(supp)} exceeds cap {max_vertices}")
    p = len(supp)
    seen = set()
    out = []
    for perm in itertools.permutations(supp):
        rank = {v: i + 1 for i, v in enumerate(perm)}
        redges = tuple(sorted(tuple(sorted(rank[v] for v in e)) for e in f.edges))
        if redges in seen:
            continue
        seen.add(redges)
        if exact_r_partite_parts(redges) is not None:
            out.append(OrderedPattern(p, f.r, redges))
    return tuple(sorted(out, key=lambda pat: pat.edges))


def contains_ordered_pattern(
    h: OrderedHypergraph,
    pattern: OrderedPattern,
    max_vertices: int = DEFAULT_MAX_PATTERN_VERTICES,
):
    """Lexicographically first order-preserving embedding of the pattern,
    or None.  Exhaustive backtracking with edge-prefix pruning: assigning
    pattern vertices in order keeps every partially mapped pattern edge
    aligned with a prefix of its host edge."""
    if pattern.r != h.r:
        raise ValueError(f"uniformity mismatch: pattern r={pattern.r}, host r={h.r}")
    if pattern.p > max_vertices:
        raise ValueError(f"pattern has {pattern.p} vertices, cap is {max_vertices}")
    p, n = pattern.p, h.n
    if p > n:
        return None
    host_edges = set(h.edges)
    prefixes = {e[:j] for e in h.edges for j in range(1, h.r + 1)}
    # for pattern vertex t: the pattern edges in which t sits, with its index
    checks: list[list[tuple[tuple[int, ...], int]]] = [[] for _ in range(p + 1)]
    for e in pattern.edges:
        for j, v in enumerate(e):
            checks[v].append((e, j))

    phi = [0] * (p + 1)

    def extend(t: int, lo: int):
        if t > p:
            return True
        for cand in range(lo, n - (p - t) + 2):
            phi[t] = cand
            ok = True
            for e, j in checks[t]:
                img = tuple(phi[v] for v in e[: j + 1])
                if j + 1 == len(e):
                    if img not in host_edges:
                        ok = False
                        break
                elif img not in prefixes:
                    ok = False
                    break
            if ok and extend(t + 1, cand + 1):
                return True
        return False

    if not extend(1, 1):
        return None
    vm = tuple((v, phi[v]) for v in range(1, p + 1))
    matched = tuple(sorted(tuple(phi[v] for v in e) for e in pattern.edges))
    return Embedding(vm, matched)


def contains_any_order_type(
    h: OrderedHypergraph,
    f: OrderedHypergraph,
    max_vertices: int = DEFAULT_MAX_PATTERN_VERTICES,
):
    """First embedding of any order type of f (canonical pattern order), or
    None."""
    for pattern in interval_order_types(f, max_vertices):
        emb = contains_ordered_pattern(h, pattern, max_vertices)
        if emb is not None:
            return emb
    return None


def _alternates(a, b) -> bool:
    # a_1 < b_1 < a_2 < b_2 < ... < a_r < b_r
    r = len(a)
    return all(a[i] < b[i] for i in range(r)) and all(
        b[i] < a[i + 1] for i in range(r - 1)
    )


def find_crossing_pair(h: OrderedHypergraph):
    """Two edges whose vertices perfectly alternate, or None."""
    for e, f in itertools.combinations(h.edges, 2):
        a, b = (e, f) if e[0] < f[0] else (f, e)
        if _alternates(a, b):
            return a, b
    return None


def find_intersection_pair(h: OrderedHypergraph, ell: int):
    """Two edges sharing exactly ``ell`` vertices that form an interval
    r-partite pair (shared vertices representing both edges), or None."""
    if not 0 <= ell <= h.r - 1:
        raise ValueError(f"need 0 <= ell <= r-1, got ell={ell}, r={h.r}")
    for e, f in itertools.combinations(h.edges, 2):
        if len(set(e) & set(f)) != ell:
            continue
        if exact_r_partite_parts((e, f)) is not None:
            return e, f
    return None


def validate_simplex(edges, d: int) -> bool:
    """True iff the d+1 edges form a d-dimensional simplex: every d of them
    intersect, all d+1 together do not."""
    edges = [set(e) for e in edges]
    if len(edges) != d + 1:
        raise ValueError(f"a d-simplex has d+1 edges, got {len(edges)} for d={d}")
    for subset in itertools.combinations(edges, d):
        if not set.intersection(*subset):
            return False
    return not set.intersection(*edges)


def validate_strong_simplex(edges, d: int) -> bool:
    """True iff the first d+1 edges form a d-simplex and the last edge meets
    the intersection of every d of them."""
    edges = [tuple(e) for e in edges]
    if len(edges) != d + 2:
        raise ValueError(f"a strong d-simplex has d+2 edges, got {len(edges)}")
    if not validate_simplex(edges[:-1], d):
        return False
    last = set(edges[-1])
    for subset in itertools.combinations(edges[:-1], d):
        if not last & set.intersection(*(set(e) for e in subset)):
            return False
    return True


def validate_tight_tree(h: OrderedHypergraph):
    """A TreeBuildScript witnessing that h is a tight tree (each edge after
    the first glues one fresh vertex onto a shadow set of the prefix), or
    None.  Exhaustive over edge orders with memoized dead states."""
    edges = h.edges
    if not edges:
        return None
    r = h.r
    m = len(edges)
    dead: set[frozenset[int]] = set()

    def grow(used: frozenset[int], vertices: set[int], order: list[int]):
        if len(used) == m:
            return list(order)
        if used in dead:
            return None
        for idx in range(m):
            if idx in used:
                continue
            e = edges[idx]
            new = [v for v in e if v not in vertices]
            if len(new) != 1:
                continue
            f = tuple(v for v in e if v != new[0])
            if not any(set(f) <= set(edges[j]) for j in used):
                continue
            order.append(idx)
            got = grow(used | {idx}, vertices | {new[0]}, order)
            if got is not None:
                return got
            order.pop()
            vertices.discard(new[0])
        dead.add(used)
        return None

    for root in range(m):
        got = grow(frozenset([root]), set(edges[root]), [root])
        if got is not None:
            # canonical relabeling: root edge becomes 1..r, growth vertices r+1, ...
            relabel = {v: i + 1 for i, v in enumerate(edges[got[0]])}
            steps = []
            nxt = r + 1
            for idx in got[1:]:
                e = edges[idx]
                new = next(v for v in e if v not in relabel)
                steps.append(tuple(sorted(relabel[v] for v in e if v != new)))
                relabel[new] = nxt
                nxt += 1
            return TreeBuildScript(r, tuple(steps))
    return None


def _forest_components(edges) -> list[list[int]]:
    parent: dict[int, int] = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        for v in e:
            parent.setdefault(v, v)
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            raise ValueError("not a forest: edge set contains a cycle")
        parent[ra] = rb
    comps: dict[int, list[int]] = {}
    for v in parent:
        comps.setdefault(find(v), []).append(v)
    return [sorted(c) for c in sorted(comps.values(), key=min)]


def embed_forest(h: OrderedHypergraph, forest: OrderedHypergraph):
    """Interval 2-partite copy of a graph forest inside an ordered graph.

    Follows the marking procedure: with k edges left, remove at each vertex
    the edges to its k smallest and k largest neighbors, embed the forest
    minus a leaf in what remains, then reattach the leaf through one of the
    siblings that the marking guarantees.  Succeeds whenever
    e(H) > 2 k^2 n; no backtracking below that threshold.

    The forest is first completed to a tree by joining component minima to
    the first component; the returned embedding covers the original edges
    only.
    """
    if h.r != 2 or forest.r != 2:
        raise ValueError("forest embedding is for graphs (r = 2)")
    if not forest.edges:
        raise ValueError("forest has no edges")
    comps = _forest_components(forest.edges)
    tree_edges = list(forest.edges)
    for comp in comps[1:]:
        tree_edges.append(tuple(sorted((comps[0][0], comp[0]))))

    phi = _embed_tree(list(h.edges), tree_edges)
    if phi is None:
        return None
    vm = tuple(sorted((v, phi[v]) for v in phi))
    matched = tuple(sorted(tuple(sorted((phi[a], phi[b]))) for a, b in forest.edges))
    return Embedding(vm, matched)


def _embed_tree(host_edges: list[tuple[int, int]], tree_edges: list[tuple[int, int]]):
    k = len(tree_edges)
    if k == 1:
        if not host_edges:
            return None
        a, b = sorted(tree_edges[0])
        e = min(host_edges)
        return {a: e[0], b: e[1]}

    degree: dict[int, int] = {}
    for a, b in tree_edges:
        degree[a] = degree.get(a, 0) + 1
        degree[b] = degree.get(b, 0) + 1
    leaf = max(v for v, dg in degree.items() if dg == 1)
    leaf_edge = next(e for e in tree_edges if leaf in e)
    anchor = leaf_edge[0] if leaf_edge[1] == leaf else leaf_edge[1]
    rest = [e for e in tree_edges if e != leaf_edge]

    neighbors: dict[int, list[int]] = {}
    for a, b in host_edges:
        neighbors.setdefault(a, []).append(b)
        neighbors.setdefault(b, []).append(a)
    marked = set()
    for v, nb in neighbors.items():
        nb.sort()
        for w in nb[:k]:
            marked.add((v, w) if v < w else (w, v))
        for w in nb[-k:]:
            marked.add((v, w) if v < w else (w, v))

    phi = _embed_tree([e for e in host_edges if e not in marked], rest)
    if phi is None:
        return None

    copy_edges = [tuple(sorted((phi[a], phi[b]))) for a, b in rest]
    parts = exact_r_partite_parts(copy_edges)
    if parts is None:  # cannot happen for embeddings built here
        return None
    low, high = parts
    v_host = phi[anchor]
    partner_imgs = [phi[a] if b == anchor else phi[b] for a, b in rest if anchor in (a, b)]
    w_host = min(partner_imgs)
    used = set(phi.values())
    if v_host in low:
        cands = [w for w in neighbors.get(v_host, ()) if w > w_host and w not in used]
        if not cands:
            return None
        phi[leaf] = min(cands)
    else:
        cands = [w for w in neighbors.get(v_host, ()) if w < w_host and w not in used]
        if not cands:
            return None
        phi[leaf] = max(cands)
    return phi


def embed_tight_tree(
    h: OrderedHypergraph,
    parts: tuple[Interval, ...],
    doubled: int,
    tree: OrderedHypergraph | TreeBuildScript,
):
    """Order-respecting copy of a tight tree inside a structured host.

    The host must come with r-1 increasing interval parts and a designated
    ``doubled`` part index: every edge has two vertices in the doubled part
    and one in each other part.  With t the number of tree vertices, the
    procedure removes for every shadow (r-1)-set its t smallest and t
    largest extensions, embeds the tree minus its last leaf in the rest,
    and reattaches the leaf through a surviving extreme extension; it
    cannot fail once e(H) > 2 t^2 C(n, r-1).

    Returns (embedding, copy part intervals) or None.
    """
    r = h.r
    if r < 3:
        raise ValueError("structured tight-tree embedding needs r >= 3")
    if len(parts) != r - 1 or not 0 <= doubled < r - 1:
        raise ValueError(
            f"need {r - 1} parts and a doubled index in [0, {r - 2}], "
            f"got {len(parts)} parts, doubled={doubled}"
        )
    for j in range(len(parts) - 1):
        if parts[j].hi >= parts[j + 1].lo:
            raise ValueError("parts must be disjoint increasing intervals")

    bounds = [iv.as_pair() for iv in parts]

    def part_of(v: int) -> int:
        for j, (lo, hi) in enumerate(bounds):
            if lo <= v <= hi:
                return j
        return -1

    for e in h.edges:
        hits = [0] * (r - 1)
        for v in e:
            j = part_of(v)
            if j < 0:
                raise ValueError(f"host lacks the required structure: {v} outside parts")
            hits[j] += 1
        if hits[doubled] != 2 or any(hits[j] != 1 for j in range(r - 1) if j != doubled):
            raise ValueError(f"host lacks the required structure at edge {e}")

    if isinstance(tree, TreeBuildScript):
        script = tree
        if script.r != r:
            raise ValueError(f"tree uniformity {script.r} does not match host {r}")
    else:
        if tree.r != r:
            raise ValueError(f"tree uniformity {tree.r} does not match host {r}")
        script = validate_tight_tree(tree)
        if script is None:
            raise ValueError("tree argument is not a tight tree")

    got = _embed_tight(list(h.edges), script.steps, r)
    if got is None:
        return None
    phi, copy_parts, copy_edges = got
    vm = tuple(sorted(phi.items()))
    hulls = tuple(Interval(min(pp), max(pp)) for pp in copy_parts)
    return Embedding(vm, tuple(sorted(copy_edges))), hulls


def _extension_lists(edges, r):
    # canonical edge order makes every per-shadow extension list ascending
    ext: dict[tuple[int, ...], list[int]] = {}
    for e in edges:
        for pos in range(r):
            ext.setdefault(e[:pos] + e[pos + 1 :], []).append(e[pos])
    return ext


def _embed_tight(edges, steps, r):
    t = r + len(steps)
    if not steps:
        if not edges:
            return None
        e = edges[0]
        phi = {i + 1: e[i] for i in range(r)}
        return phi, [[v] for v in e], [e]

    ext = _extension_lists(edges, r)
    removed = set()
    for f, xs in ext.items():
        extremes = xs[:t] + xs[-t:] if len(xs) > 2 * t else xs
        for x in extremes:
            removed.add(tuple(sorted(f + (x,))))
    surviving = [e for e in edges if e not in removed]

    got = _embed_tight(surviving, steps[:-1], r)
    if got is None:
        return None
    phi, copy_parts, copy_edges = got

    leaf_label = r + len(steps)
    f_host = tuple(sorted(phi[u] for u in steps[-1]))
    f_set = set(f_host)
    missing = next(j for j, pp in enumerate(copy_parts) if not f_set & set(pp))
    used = set(phi.values())
    xs = ext.get(f_host, ())
    # the grown part must stay strictly between its neighbor parts' hulls;
    # when a neighbor lives in another host part the constraint is vacuous
    # because every extension of f_host already lies in the right host part
    floor = max(copy_parts[missing - 1]) if missing > 0 else 0
    ceiling = min(copy_parts[missing + 1]) if missing + 1 < r else None
    cands = [
        x
        for x in xs
        if x > floor and (ceiling is None or x < ceiling) and x not in used
    ]
    if not cands:
        return None
    choice = min(cands)
    phi[leaf_label] = choice
    copy_parts[missing] = sorted(copy_parts[missing] + [choice])
    copy_edges.append(tuple(sorted(f_host + (choice,))))
    return phi, copy_parts, copy_edges

"""Canonical JSON for hypergraphs, decompositions and witnesses.

Hypergraph format: {"n": int, "r": int, "edges": [[v1, ..., vr], ...]}
with every inner list strictly increasing and the outer list sorted
lexicographically on write.  Readers accept an unsorted outer list plus
extra keys but reject any inner-list violation.  Writing is byte-exact:
fixed key order, compact separators.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .core import OrderedHypergraph
from .patterns import Embedding, OrderedPattern
from .splitting import Decomposition, DenseWitness


def dumps_canonical(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def hypergraph_to_obj(h: OrderedHypergraph, meta: dict | None = None) -> dict:
    obj = {"n": h.n, "r": h.r, "edges": [list(e) for e in h.edges]}
    if meta is not None:
        obj["meta"] = meta
    return obj


def hypergraph_to_json(h: OrderedHypergraph, meta: dict | None = None) -> str:
    return dumps_canonical(hypergraph_to_obj(h, meta))


def hypergraph_from_obj(obj) -> OrderedHypergraph:
    if not isinstance(obj, dict):
        raise ValueError("hypergraph JSON must be an object")
    try:
        n, r, edges = obj["n"], obj["r"], obj["edges"]
    except KeyError as exc:
        raise ValueError(f"hypergraph JSON missing key {exc}") from None
    if not (isinstance(n, int) and isinstance(r, int) and isinstance(edges, list)):
        raise ValueError("hypergraph JSON has wrong field types")
    if not 1 <= r <= n:
        raise ValueError(f"uniformity out of range: r={r}, n={n}")
    seen = set()
    for e in edges:
        if not isinstance(e, list) or len(e) != r:
            raise ValueError(f"edge has wrong size: {e}")
        if any(not isinstance(v, int) for v in e):
            raise ValueError(f"edge has non-integer vertex: {e}")
        if any(e[i] >= e[i + 1] for i in range(r - 1)):
            raise ValueError(f"edge not strictly increasing: {e}")
        if e[0] < 1 or e[-1] > n:
            raise ValueError(f"vertex out of range in edge {e}")
        t = tuple(e)
        if t in seen:
            raise ValueError(f"duplicate edge: {e}")
        seen.add(t)
    return OrderedHypergraph(n, r, seen)


def hypergraph_from_json(text: str) -> OrderedHypergraph:
    return hypergraph_from_obj(json.loads(text))


def pattern_to_obj(p: OrderedPattern) -> dict:
    return {"p": p.p, "r": p.r, "edges": [list(e) for e in p.edges]}


def pattern_from_obj(obj) -> OrderedPattern:
    if not isinstance(obj, dict):
        raise ValueError("pattern JSON must be an object")
    try:
        p, r, edges = obj["p"], obj["r"], obj["edges"]
    except KeyError as exc:
        raise ValueError(f"pattern JSON missing key {exc}") from None
    host = hypergraph_from_obj({"n": p, "r": r, "edges": edges})
    return OrderedPattern(p, r, host.edges)


def pattern_from_json(text: str) -> OrderedPattern:
    return pattern_from_obj(json.loads(text))


def decomposition_to_obj(dec: Decomposition) -> dict:
    return {
        "k": dec.k,
        "g": dec.g,
        "pieces": [
            {
                "level": piece.level,
                "intervals": [list(iv.as_pair()) for iv in piece.intervals],
                "edges": [list(e) for e in piece.sub.edges],
            }
            for piece in dec.pieces
        ],
        "per_level_counts": {str(i): dec.per_level_counts[i] for i in sorted(dec.per_level_counts)},
    }


def witness_to_obj(w: DenseWitness) -> dict:
    piece = w.piece
    obj = {
        "level": piece.level,
        "intervals": [list(iv.as_pair()) for iv in piece.intervals],
        "edges": [list(e) for e in piece.sub.edges],
        "m": w.m,
        "regime": w.regime,
        "alpha": w.alpha,
    }
    if isinstance(w.bound, Fraction):
        obj["bound_num"] = w.bound.numerator
        obj["bound_den"] = w.bound.denominator
    else:
        obj["bound"] = w.bound
    return obj


def embedding_to_obj(emb: Embedding) -> dict:
    return {
        "map": [list(pair) for pair in emb.vertex_map],
        "edges": [list(e) for e in emb.edges],
    }

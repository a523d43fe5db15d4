"""Dyadic splitting of ordered hypergraphs into interval k-partite pieces.

The central objects: for an n-vertex host let g = floor(log2 n).  Level i
(0 <= i <= g) partitions [n] into intervals of length 2**(g-i) plus one
shorter remainder interval containing vertex n; level g is the partition
into singletons.  Every edge e gets the minimum level at which it meets at
least k intervals, and grouping the edges of one level by the exact set of
intervals they meet yields an edge-disjoint cover of the host by interval
k-partite pieces.  The number of pieces at level i is at most

    ceil( sum_{j=k}^{r} C(2k-2, j) * 2**(i*(k-1)) / (k-1)! )

and one of the pieces is always dense: with d = e(H)/n**alpha and
m_i = 2**(g-i), the piece maximizing e(piece)/m_i**alpha has at least
c(alpha,k,r) * d * m_i**alpha edges when alpha > k-1, and at least
d * m_i**alpha / ((1 + log2 n) * sum_j C(2k-2, j)) edges when
alpha = k-1.  Certificates are exact rationals whenever alpha is an
integer.

Everything is pure and operates on immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import Interval, OrderedHypergraph

MAX_BOUND = 2**63 - 1


def top_level(n: int) -> int:
    """g = floor(log2 n)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return n.bit_length() - 1


@dataclass(frozen=True)
class DyadicPartition:
    """Level-``level`` partition of [n] into consecutive intervals."""

    n: int
    g: int
    level: int
    intervals: tuple[Interval, ...]

    def index_of(self, v: int) -> int:
        """0-based index of the interval containing vertex v."""
        return (v - 1) >> (self.g - self.level)


@dataclass(frozen=True)
class Piece:
    """One interval k-partite piece: the edges of a fixed level whose set of
    met level intervals equals ``signature``."""

    level: int
    signature: tuple[int, ...]
    intervals: tuple[Interval, ...]
    sub: OrderedHypergraph


@dataclass(frozen=True)
class Decomposition:
    """Edge-disjoint cover of the host by interval k-partite pieces."""

    host: OrderedHypergraph
    k: int
    g: int
    pieces: tuple[Piece, ...]
    per_level_counts: dict[int, int]


@dataclass(frozen=True)
class DenseWitness:
    """A piece together with the lower bound on its edge count it certifies.

    ``m`` is the actual maximum part length of the piece; the bound itself
    is stated in terms of m_i = 2**(g - level), which dominates ``m``.
    ``bound`` is a Fraction in the poly regime with integer alpha, a float
    otherwise.
    """

    piece: Piece
    m: int
    bound: Fraction | float
    regime: str  # "log" (alpha == k-1) or "poly" (alpha > k-1)
    alpha: int | float


def dyadic_partition(n: int, i: int) -> DyadicPartition:
    """Intervals of length 2**(g-i) laid out from vertex 1; the last one may
    be shorter and contains n."""
    g = top_level(n)
    if not 0 <= i <= g:
        raise ValueError(f"level {i} outside [0, {g}]")
    length = 1 << (g - i)
    intervals = tuple(
        Interval(lo, min(lo + length - 1, n)) for lo in range(1, n + 1, length)
    )
    return DyadicPartition(n, g, i, intervals)


def edge_level(e, n: int, k: int) -> int:
    """Minimum level at which edge ``e`` meets at least k dyadic intervals."""
    if k < 2 or k > len(e):
        raise ValueError(f"need 2 <= k <= |e|, got k={k}, |e|={len(e)}")
    g = top_level(n)
    for i in range(g + 1):
        shift = g - i
        seen = {(v - 1) >> shift for v in e}
        if len(seen) >= k:
            return i
    raise AssertionError("level g has |e| >= k singletons")  # unreachable


def decompose(h: OrderedHypergraph, k: int) -> Decomposition:
    """Group every edge by (its level, the exact set of level intervals it
    meets); each group is one interval k-partite piece."""
    if not 2 <= k <= h.r:
        raise ValueError(f"need 2 <= k <= r, got k={k}, r={h.r}")
    if h.r > h.n:
        raise ValueError(f"uniformity {h.r} exceeds vertex count {h.n}")
    g = top_level(h.n)
    groups: dict[tuple[int, tuple[int, ...]], list[tuple[int, ...]]] = {}
    for e in h.edges:
        for i in range(g + 1):
            shift = g - i
            seen = {(v - 1) >> shift for v in e}
            if len(seen) >= k:
                groups.setdefault((i, tuple(sorted(seen))), []).append(e)
                break
    pieces = []
    counts: dict[int, int] = {}
    for (i, sig) in sorted(groups):
        length = 1 << (g - i)
        intervals = tuple(
            Interval(t * length + 1, min((t + 1) * length, h.n)) for t in sig
        )
        pieces.append(
            Piece(i, sig, intervals, OrderedHypergraph(h.n, h.r, groups[(i, sig)]))
        )
        counts[i] = counts.get(i, 0) + 1
    return Decomposition(h, k, g, tuple(pieces), counts)


def piece_count_bound(i: int, k: int, r: int) -> int:
    """Ceiling of sum_{j=k}^{r} C(2k-2, j) * 2**(i*(k-1)) / (k-1)!.

    Upper bound on the number of pieces a decomposition may produce at
    level i.  Raises OverflowError past the 64-bit range.
    """
    if not 2 <= k <= r:
        raise ValueError(f"need 2 <= k <= r, got k={k}, r={r}")
    if i < 0:
        raise ValueError(f"level must be nonnegative, got {i}")
    s = sum(math.comb(2 * k - 2, j) for j in range(k, r + 1))
    num = s * (1 << (i * (k - 1)))
    bound = -(-num // math.factorial(k - 1))
    if bound > MAX_BOUND:
        raise OverflowError(f"piece count bound for level {i} exceeds 64-bit range")
    return bound


def extraction_constant(alpha: int | float, k: int, r: int) -> Fraction | float:
    """(k-1)! * (1 - 2**(k-1-alpha)) / sum_{j=k}^{r} C(2k-2, j).

    The constant in the dense-extraction guarantee for alpha > k-1; exact
    Fraction when alpha is an integer.
    """
    if not 2 <= k <= r:
        raise ValueError(f"need 2 <= k <= r, got k={k}, r={r}")
    if alpha <= k - 1:
        raise ValueError(
            f"constant undefined for alpha <= k-1 (got alpha={alpha}, k={k}); "
            "use the log regime"
        )
    s = sum(math.comb(2 * k - 2, j) for j in range(k, r + 1))
    fact = math.factorial(k - 1)
    if isinstance(alpha, int):
        pow2 = 1 << (alpha - k + 1)
        return Fraction(fact * (pow2 - 1), pow2 * s)
    return fact * (1.0 - 2.0 ** (k - 1 - alpha)) / s


def extract_dense(
    h: OrderedHypergraph,
    k: int,
    alpha: int | float,
    decomposition: Decomposition | None = None,
) -> DenseWitness:
    """The piece maximizing e(piece) / m_i**alpha, with its certified bound.

    Ties go to the smaller level, then the lexicographically smaller
    signature.  Pass a precomputed ``decomposition`` (built with the same
    k) to amortize repeated extractions at different alpha.
    """
    if not h.edges:
        raise ValueError("cannot extract from an empty hypergraph")
    if not 2 <= k <= h.r:
        raise ValueError(f"need 2 <= k <= r, got k={k}, r={h.r}")
    if not k - 1 <= alpha <= h.r:
        raise ValueError(f"need k-1 <= alpha <= r, got alpha={alpha}")
    dec = decomposition if decomposition is not None else decompose(h, k)
    if dec.k != k:
        raise ValueError(f"decomposition was built with k={dec.k}, not {k}")
    exact = isinstance(alpha, int)

    best = None
    best_score = None
    for piece in dec.pieces:  # pieces are in (level, signature) order
        m_i = 1 << (dec.g - piece.level)
        if exact:
            score = Fraction(len(piece.sub.edges), m_i**alpha)
        else:
            score = len(piece.sub.edges) / m_i**alpha
        if best_score is None or score > best_score:
            best, best_score = piece, score

    m_i = 1 << (dec.g - best.level)
    m_actual = max(len(iv) for iv in best.intervals)
    c_sum = sum(math.comb(2 * k - 2, j) for j in range(k, h.r + 1))
    if alpha == k - 1:
        d_real = len(h.edges) / h.n**alpha
        bound = d_real * m_i**alpha / ((1.0 + math.log2(h.n)) * c_sum)
        regime = "log"
    else:
        c = extraction_constant(alpha, k, h.r)
        if exact:
            bound = c * Fraction(len(h.edges), h.n**alpha) * m_i**alpha
        else:
            bound = c * (len(h.edges) / h.n**alpha) * m_i**alpha
        regime = "poly"
    return DenseWitness(best, m_actual, bound, regime, alpha)


def reduce_by_prefix(piece: Piece, k: int) -> tuple[tuple[int, ...], OrderedHypergraph]:
    """Collapse an exactly-k-part piece to a k-uniform core.

    For each edge take, per part, all but the largest vertex of the edge's
    intersection with that part; the union of those prefixes has size r-k.
    Keep the edges whose prefix set equals the most popular one S (ties:
    lexicographically least S) and strip S from them.
    """
    if len(piece.signature) != k:
        raise ValueError(
            f"piece has {len(piece.signature)} parts, prefix reduction needs exactly {k}"
        )
    r = piece.sub.r
    tallies: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for e in piece.sub.edges:
        prefix: list[int] = []
        for iv in piece.intervals:
            inside = [v for v in e if iv.lo <= v <= iv.hi]
            prefix.extend(inside[:-1])
        tallies.setdefault(tuple(prefix), []).append(e)
    s = min(tallies, key=lambda f: (-len(tallies[f]), f))
    s_set = set(s)
    core = [tuple(v for v in e if v not in s_set) for e in tallies[s]]
    return s, OrderedHypergraph(piece.sub.n, r - len(s), core)

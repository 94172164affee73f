"""Cayley graphs on Z/pqZ with coclique spreads, and the clique-fusion
construction that turns them into (strictly) Neumaier graphs.

The generating set S_n(a) is the cyclic group generated by a unit a whose
half-order power is -1, so S is symmetric and the Cayley graph is a
circulant. When a generates F_p* and a^((p-1)/2) = -1 (mod pq), the cosets
of the order-q subgroup generated by p form a spread of 1-regular
cocliques; fusing t = (lambda+2)/q copies along matched cocliques yields a
Neumaier graph with parameters (tpq, p+lambda, lambda; 1, lambda+2)
whenever lambda = |S cap (S+1)| is congruent to -2 mod q.
"""

import math
from dataclasses import dataclass, field

from . import arith
from .feasibility import NeumaierParams
from .graphs import (CLIQUE, COCLIQUE, Graph, VertexSubset, bit_indices,
                     co_edge_violation, mask_from_indices)


@dataclass(frozen=True)
class GenSet:
    modulus: int
    order: int                 # order of a, always even here
    elements: frozenset

    def sorted_elements(self) -> list[int]:
        return sorted(self.elements)


def gen_set(n: int, a: int) -> GenSet:
    """S_n(a) = {a^j : 0 <= j < 2i} where 2i is the order of a and a^i = -1.

    Raises ValueError if a is not a unit, and ArithmeticError if the
    half-order power of a is not -1 (the construction's defining condition).
    """
    a %= n
    if math.gcd(a, n) != 1:
        raise ValueError(f"a = {a} is not a unit modulo {n}")
    elems = []
    x = a
    while x != 1:
        elems.append(x)
        x = x * a % n
    elems.append(1)
    order = len(elems)
    if order % 2 or pow(a, order // 2, n) != n - 1:
        raise ArithmeticError(
            f"a = {a} has order {order} mod {n} with a^(order/2) != -1")
    return GenSet(n, order, frozenset(elems))


@dataclass(frozen=True)
class CayleySpec:
    p: int
    q: int
    a: int

    def validate(self) -> None:
        arith.validate_cayley_triple(self.p, self.q, self.a)


@dataclass(frozen=True)
class Spread:
    blocks: list  # of VertexSubset, pairwise disjoint, covering all vertices

    def __len__(self):
        return len(self.blocks)

    def block_index_of(self, n_vertices: int) -> list[int]:
        idx = [-1] * n_vertices
        for i, b in enumerate(self.blocks):
            for v in b.members:
                if idx[v] >= 0:
                    raise ValueError(f"spread blocks overlap at vertex {v}")
                idx[v] = i
        if any(i < 0 for i in idx):
            raise ValueError("spread does not cover the vertex set")
        return idx


def gamma_pq(spec: CayleySpec):
    """The circulant graph of S_pq(a) plus its coclique spread.

    Returns (graph, spread, lam) where lam = |S cap (S+1)|. The spread
    blocks are the cosets of the subgroup generated by p; the block that
    contains the representative r of S u {0} comes before the one containing
    r' > r, making the labelling deterministic.
    """
    spec.validate()
    p, q, a = spec.p, spec.q, spec.a
    n = p * q
    gs = gen_set(n, a)
    S = gs.elements

    mask0 = mask_from_indices(S, n)
    full = (1 << n) - 1
    rows = [((mask0 << x) | (mask0 >> (n - x))) & full if x else mask0
            for x in range(n)]
    graph = Graph(n, rows)

    reps = sorted(S | {0})
    blocks = [VertexSubset(frozenset((r + j * p) % n for j in range(q)), COCLIQUE)
              for r in reps]
    lam = sum(1 for s in S if (s - 1) % n in S)
    return graph, Spread(blocks), lam


@dataclass
class FusionSpec:
    copies: list  # of (Graph, Spread), all with equal parameters
    perms: list   # t-1 block permutations (pi_2..pi_t); pi_1 = identity
    vertex_transitive: bool = False  # input graphs are translation circulants

    @property
    def t(self) -> int:
        return len(self.copies)

    def validate(self) -> None:
        if not self.copies:
            raise ValueError("fusion needs at least one copy")
        g0, s0 = self.copies[0]
        for g, s in self.copies:
            if g.n != g0.n:
                raise ValueError("copies have different vertex counts")
            if len(s) != len(s0):
                raise ValueError("spreads have different block counts")
        if len(self.perms) != len(self.copies) - 1:
            raise ValueError(
                f"need {len(self.copies) - 1} permutations, got {len(self.perms)}")
        nb = len(s0)
        for perm in self.perms:
            if sorted(perm) != list(range(nb)):
                raise ValueError("permutation is not a bijection on block indices")


def fuse(fs: FusionSpec) -> Graph:
    """Glue the copies along matched coclique blocks.

    Vertex (i, x) gets label i*v + x. Two vertices are adjacent iff they
    are adjacent inside the same copy, or their blocks map to the same
    index under the inverse permutations (in particular each matched union
    of blocks becomes a clique).
    """
    fs.validate()
    t = fs.t
    v = fs.copies[0][0].n
    nb = len(fs.copies[0][1])
    perms = [list(range(nb))] + [list(p) for p in fs.perms]
    inv_perms = []
    for perm in perms:
        inv = [0] * nb
        for m, b in enumerate(perm):
            inv[b] = m
        inv_perms.append(inv)

    vt = v * t
    cliques = []
    for m in range(nb):
        members = []
        for i in range(t):
            off = i * v
            block = fs.copies[i][1].blocks[perms[i][m]]
            members.extend(off + y for y in block.members)
        cliques.append(mask_from_indices(members, vt))

    rows = [0] * vt
    for i in range(t):
        graph, spread = fs.copies[i]
        blk_of = spread.block_index_of(v)
        off = i * v
        inv = inv_perms[i]
        for x in range(v):
            r = (graph.row(x) << off) | cliques[inv[blk_of[x]]]
            rows[off + x] = r & ~(1 << (off + x))
    return Graph(vt, rows)


def fused_clique(fs: FusionSpec, m: int = 0) -> VertexSubset:
    """The m-th fused clique of the construction, in fused labels."""
    v = fs.copies[0][0].n
    nb = len(fs.copies[0][1])
    perms = [list(range(nb))] + [list(p) for p in fs.perms]
    members = []
    for i in range(fs.t):
        block = fs.copies[i][1].blocks[perms[i][m]]
        members.extend(i * v + y for y in block.members)
    return VertexSubset(frozenset(members), CLIQUE)


class CongruenceError(ValueError):
    """lambda is not congruent to -2 mod q, so no fusion count t exists."""


@dataclass
class Construction:
    graph: Graph
    params: NeumaierParams
    witness: VertexSubset
    t: int
    lam: int
    fusion: FusionSpec


def construct_neumaier(q: int, p: int, a: int, perms=None) -> Construction:
    """Build the fused Neumaier graph for (q, p, a).

    perms is a list of t-1 block permutations (defaults to identities; the
    construction never fixes a canonical choice, and identity is the
    reproducible default). Raises CongruenceError when
    lambda = |S cap (S+1)| is not -2 mod q.
    """
    spec = CayleySpec(p, q, a)
    graph, spread, lam = gamma_pq(spec)
    if (lam + 2) % q:
        raise CongruenceError(
            f"|S cap (S+1)| = {lam} has residue {lam % q} mod q = {q}, need q - 2")
    t = (lam + 2) // q
    # the generic fusion count (lambda+2)(k+1)/v specialises to (lambda+2)/q
    assert (lam + 2) * p == t * p * q
    if perms is None:
        perms = [list(range(len(spread))) for _ in range(t - 1)]
    if len(perms) != t - 1:
        raise ValueError(f"need t - 1 = {t - 1} permutations, got {len(perms)}")
    fs = FusionSpec([(graph, spread)] * t, perms, vertex_transitive=True)
    fused = fuse(fs)
    params = NeumaierParams(t * p * q, p + lam, lam, 1, lam + 2)
    return Construction(fused, params, fused_clique(fs), t, lam, fs)


# ---------------------------------------------------------------------------
# strictness

SUFFICIENT = "sufficient-condition-met"
EXHAUSTIVE = "verified-by-exhaustion"


@dataclass(frozen=True)
class StrictnessResult:
    strict: bool
    method: str
    detail: str = ""

    def __bool__(self):
        return self.strict


def _has_distance_two_pair(graph: Graph, start: int) -> bool:
    reached = graph.row(start) | (1 << start)
    for w in bit_indices(graph.row(start), graph.n):
        if graph.row(w) & ~reached:
            return True
    return False


def _far_cross_block_pair(graph: Graph, spread: Spread, start: int):
    """A vertex at distance >= 3 from start (unreachable counts) lying in a
    different spread block, or None."""
    level1 = graph.row(start)
    reached = level1 | (1 << start)
    level2 = 0
    for w in bit_indices(level1, graph.n):
        level2 |= graph.row(w)
    reached |= level2
    far = ((1 << graph.n) - 1) & ~reached
    if not far:
        return None
    blk_of = spread.block_index_of(graph.n)
    for w in bit_indices(far, graph.n):
        if blk_of[w] != blk_of[start]:
            return (start, w)
    return None


def strictness_check(fs: FusionSpec, fused: Graph) -> StrictnessResult:
    """Decide whether the fused graph is strictly Neumaier.

    The fast path applies the sufficient conditions: for t >= 2 a copy must
    contain a pair at distance exactly 2 (non-complete alone is not enough
    when every component is complete); for t = 1 there must additionally be
    a pair at distance >= 3 lying in different blocks. When neither path
    applies, strong regularity of the fused graph is refuted or confirmed
    exhaustively.
    """
    graph0, spread0 = fs.copies[0]
    starts = [0] if fs.vertex_transitive else range(graph0.n)
    if fs.t >= 2:
        for u in starts:
            if _has_distance_two_pair(graph0, u):
                return StrictnessResult(True, SUFFICIENT, f"distance-2 pair from vertex {u}")
    else:
        has_d2 = any(_has_distance_two_pair(graph0, u) for u in starts)
        if has_d2:
            for u in starts:
                pair = _far_cross_block_pair(graph0, spread0, u)
                if pair is not None:
                    return StrictnessResult(
                        True, SUFFICIENT,
                        f"cross-block pair {pair} at distance >= 3")
    violation = co_edge_violation(fused)
    if violation is not None:
        return StrictnessResult(True, EXHAUSTIVE,
                                f"common-neighbour counts differ: {violation}")
    return StrictnessResult(False, EXHAUSTIVE, "fused graph is strongly regular")

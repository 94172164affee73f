"""Finite simple graphs with exact regularity and regular-clique verification.

Adjacency is stored as one bitmask per vertex (Python integers double as
bit-packed rows), so adjacency queries and common-neighbour counts are
single AND + popcount operations. Verification loops enumerate pairs
exhaustively; the targeted checkers short-circuit on the first violation
and report it for diagnostics.

Graphs are immutable after construction and safe to share between workers.
"""

from dataclasses import dataclass, field

# bit offsets of the set bits of each byte value, for fast neighbour iteration
_BYTE_BITS = tuple(tuple(b for b in range(8) if (v >> b) & 1) for v in range(256))

CLIQUE = "clique"
COCLIQUE = "coclique"


class Graph:
    """Undirected loopless graph on vertices 0..n-1."""

    __slots__ = ("n", "_rows")

    def __init__(self, n: int, rows: list[int]):
        self.n = n
        self._rows = rows

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << u) for u in range(n)])

    def adjacent(self, u: int, v: int) -> bool:
        return (self._rows[u] >> v) & 1 == 1

    def row(self, u: int) -> int:
        return self._rows[u]

    def degree(self, u: int) -> int:
        return self._rows[u].bit_count()

    def neighbors(self, u: int) -> list[int]:
        return bit_indices(self._rows[u], self.n)

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def edges(self):
        """Edges (u, v) with u < v in lexicographic order."""
        for u in range(self.n):
            for v in bit_indices(self._rows[u] >> (u + 1), self.n - u - 1):
                yield u, u + 1 + v

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, [full ^ r ^ (1 << u) for u, r in enumerate(self._rows)])

    def is_complete(self) -> bool:
        return all(r.bit_count() == self.n - 1 for r in self._rows)

    def validate(self) -> None:
        """Check the structural invariants: no loops, symmetric adjacency."""
        for u, r in enumerate(self._rows):
            if (r >> u) & 1:
                raise ValueError(f"self-loop at vertex {u}")
            if r >> self.n:
                raise ValueError(f"row {u} has bits beyond vertex {self.n - 1}")
        for u in range(self.n):
            for v in self.neighbors(u):
                if not self.adjacent(v, u):
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self._rows == other._rows

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"


def bit_indices(mask: int, width: int) -> list[int]:
    """Indices of the set bits of mask (mask must fit in width bits)."""
    nbytes = (width + 7) // 8
    out = []
    for i, byte in enumerate(mask.to_bytes(nbytes, "little")):
        if byte:
            base = i * 8
            for b in _BYTE_BITS[byte]:
                out.append(base + b)
    return out


def mask_from_indices(indices, width: int) -> int:
    buf = bytearray((width + 7) // 8)
    for i in indices:
        if not 0 <= i < width:
            raise ValueError(f"vertex index {i} out of range 0..{width - 1}")
        buf[i >> 3] |= 1 << (i & 7)
    return int.from_bytes(bytes(buf), "little")


# ---------------------------------------------------------------------------
# regularity reports

@dataclass(frozen=True)
class RegularityReport:
    is_regular: bool
    k: int | None
    is_edge_regular: bool
    lam: int | None
    is_co_edge_regular: bool
    mu: int | None
    is_strongly_regular: bool
    is_complete: bool
    # first offending pair, for diagnostics
    edge_violation: tuple | None = None
    co_edge_violation: tuple | None = None


def regularity_report(g: Graph) -> RegularityReport:
    """Exhaustive regularity classification of g (needs >= 2 vertices).

    lambda is reported iff the graph is non-empty and all adjacent pairs
    agree; mu iff the graph is non-complete and all non-adjacent pairs agree.
    """
    if g.n < 2:
        raise ValueError("regularity needs at least 2 vertices")
    degrees = {g.degree(u) for u in range(g.n)}
    regular = len(degrees) == 1
    k = degrees.pop() if regular else None
    complete = regular and k == g.n - 1

    lam = mu = None
    edge_reg = co_edge_reg = False
    edge_viol = co_viol = None
    if regular:
        lam_seen = mu_seen = None
        lam_ok = mu_ok = True
        for u in range(g.n):
            ru = g.row(u)
            above = ((1 << g.n) - 1) >> (u + 1)
            nbr = (ru >> (u + 1)) & above
            non = ~ru >> (u + 1) & above
            if lam_ok:
                for off in bit_indices(nbr, g.n - u - 1):
                    c = (ru & g.row(u + 1 + off)).bit_count()
                    if lam_seen is None:
                        lam_seen = c
                    elif c != lam_seen:
                        lam_ok, edge_viol = False, (u, u + 1 + off, c, lam_seen)
                        break
            if mu_ok:
                for off in bit_indices(non, g.n - u - 1):
                    c = (ru & g.row(u + 1 + off)).bit_count()
                    if mu_seen is None:
                        mu_seen = c
                    elif c != mu_seen:
                        mu_ok, co_viol = False, (u, u + 1 + off, c, mu_seen)
                        break
            if not lam_ok and not mu_ok:
                break
        edge_reg = lam_ok and lam_seen is not None  # non-empty and consistent
        lam = lam_seen if edge_reg else None
        co_edge_reg = mu_ok and not complete and mu_seen is not None
        mu = mu_seen if co_edge_reg else None
    strongly = edge_reg and co_edge_reg and not complete
    return RegularityReport(regular, k, edge_reg, lam, co_edge_reg, mu,
                            strongly, complete, edge_viol, co_viol)


def check_edge_regular(g: Graph, k: int, lam: int):
    """Short-circuit test that g is edge-regular with parameters (n, k, lam).

    Returns (True, None) or (False, first_violation).
    """
    saw_edge = False
    for u in range(g.n):
        ru = g.row(u)
        if ru.bit_count() != k:
            return False, ("degree", u, ru.bit_count())
        for off in bit_indices(ru >> (u + 1), g.n - u - 1):
            w = u + 1 + off
            saw_edge = True
            c = (ru & g.row(w)).bit_count()
            if c != lam:
                return False, ("lambda", u, w, c)
    if not saw_edge:
        return False, ("empty", None, None)
    return True, None


def co_edge_violation(g: Graph):
    """First pair witnessing that g is not co-edge-regular, or None.

    Assumes g is regular and non-complete. Short-circuits as soon as two
    non-adjacent pairs disagree on their common-neighbour count.
    """
    seen = None
    first = None
    for u in range(g.n):
        ru = g.row(u)
        non = (~ru >> (u + 1)) & ((1 << g.n) - 1) >> (u + 1)
        for off in bit_indices(non, g.n - u - 1):
            w = u + 1 + off
            c = (ru & g.row(w)).bit_count()
            if seen is None:
                seen, first = c, (u, w)
            elif c != seen:
                return (first, seen, (u, w), c)
    return None


# ---------------------------------------------------------------------------
# regular subsets and Neumaier verification

@dataclass(frozen=True)
class VertexSubset:
    members: frozenset
    kind: str  # CLIQUE or COCLIQUE

    def mask(self, width: int) -> int:
        return mask_from_indices(self.members, width)

    def check_kind(self, g: Graph) -> bool:
        m = self.mask(g.n)
        want = len(self.members) - 1 if self.kind == CLIQUE else 0
        return all((g.row(u) & m).bit_count() == want for u in self.members)


def is_regular_subset(g: Graph, s: VertexSubset) -> int | None:
    """The constant e > 0 of outside-neighbour counts into s, or None.

    None covers both irregular counts and the all-zero case (a regular
    subset must see every outside vertex through at least one edge).
    """
    if not s.members:
        raise ValueError("subset is empty")
    m = s.mask(g.n)
    if len(s.members) >= g.n:
        raise ValueError("subset must be proper")
    e = None
    for u in range(g.n):
        if (m >> u) & 1:
            continue
        c = (g.row(u) & m).bit_count()
        if e is None:
            e = c
        elif c != e:
            return None
    return e if e and e > 0 else None


def verify_neumaier(g: Graph, claimed, witness_clique: VertexSubset) -> bool:
    """True iff g is edge-regular with the claimed (v, k, lambda) and the
    witness is an e-regular clique of size s.

    `claimed` carries fields v, k, lam, e, s.
    """
    if witness_clique.kind != CLIQUE:
        raise ValueError("witness must be of clique kind")
    if g.n != claimed.v or g.is_complete():
        return False
    ok, _ = check_edge_regular(g, claimed.k, claimed.lam)
    if not ok:
        return False
    if len(witness_clique.members) != claimed.s or not witness_clique.check_kind(g):
        return False
    return is_regular_subset(g, witness_clique) == claimed.e


def is_strictly_neumaier(g: Graph, claimed, witness_clique: VertexSubset) -> bool:
    """verify_neumaier and not strongly regular.

    Edge-regularity is already established by verify_neumaier, so strong
    regularity is refuted by exhibiting two non-adjacent pairs with
    different common-neighbour counts (the scan is exhaustive when no
    violation exists).
    """
    if not verify_neumaier(g, claimed, witness_clique):
        return False
    return co_edge_violation(g) is not None


# ---------------------------------------------------------------------------
# clique search (test support; exponential worst case, gated by size)

CLIQUE_SEARCH_LIMIT = 200


def max_clique(g: Graph, limit: int = CLIQUE_SEARCH_LIMIT) -> list[int]:
    """A maximum clique, by branch and bound with degree ordering."""
    if g.n > limit:
        raise ValueError(f"clique search capped at {limit} vertices (got {g.n})")
    order = sorted(range(g.n), key=g.degree, reverse=True)
    best: list[int] = []

    def extend(current: list[int], candidates: int):
        nonlocal best
        if len(current) + candidates.bit_count() <= len(best):
            return
        if candidates == 0:
            if len(current) > len(best):
                best = current[:]
            return
        for v in bit_indices(candidates, g.n):
            candidates &= ~(1 << v)
            if len(current) + 1 + candidates.bit_count() <= len(best):
                return
            extend(current + [v], candidates & g.row(v))

    full = (1 << g.n) - 1
    for v in order:
        extend([v], g.row(v) & full)
        full &= ~(1 << v)
    return sorted(best)


def cliques_of_size(g: Graph, s: int, limit: int = CLIQUE_SEARCH_LIMIT):
    """All cliques of exactly s vertices, as sorted tuples."""
    if g.n > limit:
        raise ValueError(f"clique search capped at {limit} vertices (got {g.n})")
    out = []

    def extend(current: tuple, candidates: int, start: int):
        if len(current) == s:
            out.append(current)
            return
        mask = candidates >> start
        for off in bit_indices(mask, g.n - start):
            v = start + off
            extend(current + (v,), candidates & g.row(v), v + 1)

    extend((), (1 << g.n) - 1, 0)
    return out


# ---------------------------------------------------------------------------
# text file format: "v m" header then m lines "u v", u < v, lexicographic

def to_text(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty graph file")
    try:
        n, m = map(int, lines[0].split())
    except ValueError as exc:
        raise ValueError(f"bad header line {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise ValueError(f"header declares {m} edges, file has {len(lines) - 1}")
    edges = []
    prev = (-1, -1)
    for ln in lines[1:]:
        u, v = map(int, ln.split())
        if not u < v:
            raise ValueError(f"edge {u} {v} violates u < v")
        if (u, v) <= prev:
            raise ValueError(f"edge {u} {v} out of lexicographic order")
        prev = (u, v)
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def save(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(to_text(g))


def load(path) -> Graph:
    with open(path) as fh:
        return from_text(fh.read())

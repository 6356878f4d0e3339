"""Unlabeled small graphs: canonical forms, isomorphism, and the census of
k-regular graphs on up to ten vertices.

Graphs here are anonymous shapes, unlike the prime-labeled graphs of the
prime_graph module.  A labeled graph is a tuple of adjacency-row bitmasks;
a GraphClass is the canonical representative of its isomorphism class.

The canonical form is the lexicographically smallest adjacency encoding
over all vertex orderings, where vertex i contributes an i-bit chunk giving
its adjacency to vertices 0..i-1 (earliest placed in the highest bit).  It
is found by a breadth-first search over partial orderings that keeps, level
by level, exactly the prefixes achieving the smallest chunk so far; twin
vertices and prefixes with identical continuations are collapsed to keep
the frontier small.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterator, Optional

MAX_VERTICES = 10

_DATA_DIR = Path(__file__).parent / "data"

Rows = tuple[int, ...]


def rows_from_edges(n: int, edges) -> Rows:
    rows = [0] * n
    for p, q in edges:
        if p == q or not (0 <= p < n and 0 <= q < n):
            raise ValueError(f"bad edge {p}-{q} for {n} vertices")
        rows[p] |= 1 << q
        rows[q] |= 1 << p
    return tuple(rows)


def _check_rows(n: int, rows: Rows) -> None:
    if n > MAX_VERTICES:
        raise ValueError(f"graphs above {MAX_VERTICES} vertices are not supported")
    if len(rows) != n:
        raise ValueError("row count does not match vertex count")
    for v, row in enumerate(rows):
        if row >> n or row >> v & 1:
            raise ValueError("adjacency rows must be loop-free and in range")
        for w in range(n):
            if (row >> w & 1) != (rows[w] >> v & 1):
                raise ValueError("adjacency must be symmetric")


@dataclass(frozen=True, order=True)
class GraphClass:
    """An isomorphism class, held as its canonically labeled adjacency."""

    n: int
    rows: Rows

    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (i, j)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if self.rows[i] >> j & 1
        )

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((row.bit_count() for row in self.rows), reverse=True))

    def is_k_regular(self, k: int) -> bool:
        return all(row.bit_count() == k for row in self.rows)


def _canonical_chunks(n: int, rows: Rows) -> tuple[int, ...]:
    # Frontier entries are dicts mapping each unplaced vertex to its chunk
    # (adjacency bits toward the placed prefix).  The placed order itself is
    # not needed: the chunk sequence determines the canonical matrix.
    def twin_reps(chunks: dict[int, int], wanted: int) -> list[int]:
        # Among candidates whose chunk equals `wanted`, keep one vertex per
        # twin class (identical adjacency to the other unplaced vertices,
        # ignoring the pair itself).
        unplaced = 0
        for u in chunks:
            unplaced |= 1 << u
        reps = []
        seen: set[tuple[int, int]] = set()
        for u in sorted(chunks):
            if chunks[u] != wanted:
                continue
            closed = (rows[u] | 1 << u) & unplaced
            open_ = rows[u] & unplaced
            if (0, closed) in seen or (1, open_) in seen:
                continue
            seen.add((0, closed))
            seen.add((1, open_))
            reps.append(u)
        return reps

    frontier: list[dict[int, int]] = []
    for v in twin_reps({u: 0 for u in range(n)}, 0):
        frontier.append({u: rows[u] >> v & 1 for u in range(n) if u != v})
    chunks_out: list[int] = []
    for _level in range(1, n):
        best = min(min(entry.values()) for entry in frontier)
        chunks_out.append(best)
        nxt: dict[tuple[tuple[int, int], ...], dict[int, int]] = {}
        for entry in frontier:
            for v in twin_reps(entry, best):
                ext = {
                    u: c << 1 | (rows[u] >> v & 1)
                    for u, c in entry.items()
                    if u != v
                }
                nxt[tuple(sorted(ext.items()))] = ext
        frontier = list(nxt.values())
    return tuple(chunks_out)


def canonicalize(n: int, rows: Rows) -> GraphClass:
    """Canonical representative; isomorphic inputs give equal results and
    the output is a fixed point."""
    _check_rows(n, rows)
    if n == 0:
        return GraphClass(0, ())
    chunks = _canonical_chunks(n, rows)
    out = [0] * n
    for j, chunk in enumerate(chunks, start=1):
        for i in range(j):
            if chunk >> (j - 1 - i) & 1:
                out[i] |= 1 << j
                out[j] |= 1 << i
    return GraphClass(n, tuple(out))


def class_from_edges(n: int, edges) -> GraphClass:
    return canonicalize(n, rows_from_edges(n, edges))


# ---------------------------------------------------------------------------
# Isomorphism and embedding tests on labeled graphs.

def _vertex_triangles(n: int, rows: Rows) -> tuple[int, ...]:
    return tuple(
        sum(
            (rows[v] & rows[w]).bit_count()
            for w in range(n)
            if rows[v] >> w & 1
        )
        // 2
        for v in range(n)
    )


def _find_isomorphism(
    n: int, a: Rows, b: Rows, fixed: Optional[tuple[int, int]] = None
) -> bool:
    """Backtracking search for a bijection a -> b preserving adjacency
    exactly, optionally with one assignment pinned."""
    ta, tb = _vertex_triangles(n, a), _vertex_triangles(n, b)
    dega = [r.bit_count() for r in a]
    degb = [r.bit_count() for r in b]
    image = [-1] * n
    used = [False] * n

    def place(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or dega[v] != degb[w] or ta[v] != tb[w]:
                continue
            if fixed and v == fixed[0] and w != fixed[1]:
                continue
            ok = all(
                (a[v] >> u & 1) == (b[w] >> image[u] & 1)
                for u in range(v)
            )
            if ok:
                image[v] = w
                used[w] = True
                if place(v + 1):
                    return True
                used[w] = False
                image[v] = -1
        return False

    if fixed and (dega[fixed[0]] != degb[fixed[1]] or ta[fixed[0]] != tb[fixed[1]]):
        return False
    return place(0)


def _embeds(small: GraphClass, big: GraphClass, induced: bool) -> bool:
    a, b = small.rows, big.rows
    image = [-1] * small.n
    used = [False] * big.n

    def place(v: int) -> bool:
        if v == small.n:
            return True
        for w in range(big.n):
            if used[w] or a[v].bit_count() > b[w].bit_count():
                continue
            ok = True
            for u in range(v):
                has_a = a[v] >> u & 1
                has_b = b[w] >> image[u] & 1
                if has_a and not has_b or (induced and has_b and not has_a):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if place(v + 1):
                    return True
                used[w] = False
        return False

    return small.n <= big.n and place(0)


def contains_subgraph(g: GraphClass, h: GraphClass) -> bool:
    """h embeds into g preserving edges (non-edges of h unconstrained)."""
    return _embeds(h, g, induced=False)


def contains_induced(g: GraphClass, h: GraphClass) -> bool:
    """h embeds into g preserving both edges and non-edges."""
    return _embeds(h, g, induced=True)


def contains_clique(g: GraphClass, k: int) -> bool:
    if k <= 1:
        return k <= 0 or g.n >= 1
    return contains_subgraph(g, complete_class(k))


def complete_class(k: int) -> GraphClass:
    full = (1 << k) - 1
    return GraphClass(k, tuple(full ^ (1 << v) for v in range(k)))


def triangle_count(g: GraphClass) -> int:
    return sum(_vertex_triangles(g.n, g.rows)) // 3


def is_vertex_transitive(g: GraphClass) -> bool:
    if g.n <= 1:
        return True
    return all(
        _find_isomorphism(g.n, g.rows, g.rows, fixed=(0, t)) for t in range(1, g.n)
    )


def max_dominating_in_induced(g: GraphClass, m: int) -> int:
    """Largest number of vertices adjacent to all m-1 others, over every
    induced m-vertex subgraph."""
    if not 0 < m <= g.n:
        raise ValueError("subset size must be between 1 and the vertex count")
    best = 0
    for combo in combinations(range(g.n), m):
        mask = 0
        for v in combo:
            mask |= 1 << v
        count = sum(
            1 for v in combo if (g.rows[v] & mask).bit_count() == m - 1
        )
        best = max(best, count)
    return best


# ---------------------------------------------------------------------------
# Enumeration of k-regular graphs.

@dataclass(frozen=True)
class Census:
    """Result of a regular-graph enumeration.  parity_ok is False exactly
    when n*k is odd, in which case no graphs exist and classes is empty."""

    n: int
    k: int
    classes: tuple[GraphClass, ...]
    parity_ok: bool

    def __iter__(self) -> Iterator[GraphClass]:
        return iter(self.classes)

    def __len__(self) -> int:
        return len(self.classes)


def _labeled_regular(n: int, k: int, fix_first_row: bool) -> Iterator[Rows]:
    """All labeled k-regular graphs on vertices 0..n-1, generated row by
    row; with fix_first_row, vertex 0's neighborhood is pinned to 1..k
    (every class has such a labeling, so no class is lost)."""
    rows = [0] * n
    deg = [0] * n

    def feasible(v: int) -> bool:
        residual = [k - deg[u] for u in range(v, n)]
        if sum(residual) % 2 or any(r < 0 for r in residual):
            return False
        positive = sum(1 for r in residual if r > 0)
        return all(r <= positive - 1 or r == 0 for r in residual)

    def fill(v: int) -> Iterator[Rows]:
        if v == n:
            yield tuple(rows)
            return
        need = k - deg[v]
        if need == 0:
            yield from fill(v + 1)
            return
        candidates = [u for u in range(v + 1, n) if deg[u] < k]
        for combo in combinations(candidates, need):
            for u in combo:
                rows[v] |= 1 << u
                rows[u] |= 1 << v
                deg[u] += 1
            deg[v] = k
            if feasible(v + 1):
                yield from fill(v + 1)
            deg[v] = k - need
            for u in combo:
                rows[v] ^= 1 << u
                rows[u] ^= 1 << v
                deg[u] -= 1

    if k == 0:
        yield tuple(rows)
        return
    if fix_first_row:
        for u in range(1, k + 1):
            rows[0] |= 1 << u
            rows[u] |= 1
            deg[u] = 1
        deg[0] = k
        yield from fill(1)
    else:
        yield from fill(0)


def _edge_invariant(n: int, rows: Rows) -> tuple:
    common = sorted(
        (rows[v] & rows[w]).bit_count()
        for v in range(n)
        for w in range(v + 1, n)
        if rows[v] >> w & 1
    )
    return (tuple(sorted(_vertex_triangles(n, rows))), tuple(common))


def enumerate_regular(n: int, k: int) -> Census:
    """All isomorphism classes of k-regular graphs on n vertices.

    Labeled graphs are generated with the first row pinned, then reduced to
    classes by an invariant prescreen plus explicit isomorphism tests; only
    new classes are canonicalized.  Correctness is anchored by the
    independent oracle below.
    """
    if not 0 <= k < n:
        raise ValueError("need 0 <= k < n")
    if n > MAX_VERTICES:
        raise ValueError(f"graphs above {MAX_VERTICES} vertices are not supported")
    if n * k % 2:
        return Census(n, k, (), parity_ok=False)
    buckets: dict[tuple, list[Rows]] = {}
    for rows in _labeled_regular(n, k, fix_first_row=True):
        inv = _edge_invariant(n, rows)
        reps = buckets.setdefault(inv, [])
        if not any(_find_isomorphism(n, rows, rep) for rep in reps):
            reps.append(rows)
    classes = sorted(
        canonicalize(n, rep) for reps in buckets.values() for rep in reps
    )
    return Census(n, k, tuple(classes), parity_ok=True)


def enumerate_regular_oracle(n: int, k: int) -> Census:
    """Independent cross-check: generate every labeled k-regular graph with
    no symmetry pinning and bucket purely by canonical form."""
    if not 0 <= k < n or n > 8:
        raise ValueError("oracle supports 0 <= k < n <= 8")
    if n * k % 2:
        return Census(n, k, (), parity_ok=False)
    seen = {canonicalize(n, rows) for rows in _labeled_regular(n, k, False)}
    return Census(n, k, tuple(sorted(seen)), parity_ok=True)


# ---------------------------------------------------------------------------
# Named graphs transcribed from drawings.

@dataclass(frozen=True)
class NamedGraph:
    name: str
    graph: GraphClass


_EXPECTED_TRIANGLES = {"quartic7-7tri": 7, "quartic7-6tri": 6, "octahedron": 8}

_CATALOG: dict[str, NamedGraph] = {}


def catalog() -> dict[str, NamedGraph]:
    if _CATALOG:
        return _CATALOG
    for line in (_DATA_DIR / "catalog.txt").read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, _, rest = line.partition("=")
        name = name.strip()
        size, _, edge_text = rest.partition(";")
        edges = [
            tuple(int(t) for t in tok.split("-")) for tok in edge_text.split()
        ]
        g = class_from_edges(int(size), edges)
        if name.startswith("quartic") or name == "octahedron":
            if not g.is_k_regular(4):
                raise ValueError(f"catalog graph {name} is not 4-regular")
        expected = _EXPECTED_TRIANGLES.get(name)
        if expected is not None and triangle_count(g) != expected:
            raise ValueError(f"catalog graph {name} has wrong triangle count")
        if name in _CATALOG:
            raise ValueError(f"duplicate catalog name {name}")
        _CATALOG[name] = NamedGraph(name, g)
    return _CATALOG


def named(name: str) -> GraphClass:
    return catalog()[name].graph

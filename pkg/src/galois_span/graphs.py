"""Finite multigraphs in Serre form and their spanning-tree invariants.

A graph is a set of directed edges paired by a fixed-point-free involution
``e -> inverse(e)`` together with origin and terminus maps.  A geometric
(undirected) edge is an involution pair; a geometric loop at a vertex is a
pair of directed edges whose origin and terminus coincide, so it contributes
2 to the adjacency diagonal and 2 to the degree and cancels in the Laplacian.

The spanning-tree count (complexity) is computed by the Matrix-Tree theorem
with fraction-free integer elimination; the reciprocal zeta numerator
``h(u) = det(I - A u + (D - I) u^2)`` is computed as an exact integer
polynomial, and ``h'(1) = -2 * chi * kappa`` is exposed as a checkable
identity.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from itertools import combinations

from .errors import DisconnectedGraphError, TooLargeError
from .linalg import det_int, det_int_poly_matrix
from .polynomials import IntPoly
from .report import VerificationReport

BRUTE_FORCE_EDGE_LIMIT = 20


@dataclass(frozen=True)
class SerreGraph:
    """Directed-edge presentation of a finite multigraph.

    Invariants (checked on construction): `inverse` is a fixed-point-free
    involution, origin/terminus are swapped by it, and the edge count is
    even.
    """

    vertex_count: int
    origin: tuple[int, ...]
    terminus: tuple[int, ...]
    inverse: tuple[int, ...]
    vertex_names: tuple[str, ...] | None = None

    def __post_init__(self):
        n, e = self.vertex_count, len(self.origin)
        if len(self.terminus) != e or len(self.inverse) != e:
            raise ValueError("edge arrays have inconsistent lengths")
        if e % 2 != 0:
            raise ValueError("directed edge count must be even")
        for i in range(e):
            if not (0 <= self.origin[i] < n and 0 <= self.terminus[i] < n):
                raise ValueError(f"edge {i} endpoint out of range")
            j = self.inverse[i]
            if not 0 <= j < e or j == i:
                raise ValueError(f"inversion not fixed-point-free at edge {i}")
            if self.inverse[j] != i:
                raise ValueError(f"inversion not an involution at edge {i}")
            if self.origin[j] != self.terminus[i] or self.terminus[j] != self.origin[i]:
                raise ValueError(f"inversion does not swap endpoints at edge {i}")
        if self.vertex_names is not None and len(self.vertex_names) != n:
            raise ValueError("vertex_names length mismatch")

    @property
    def edge_count(self) -> int:
        return len(self.origin)

    @property
    def geometric_edge_count(self) -> int:
        return len(self.origin) // 2

    def orientation(self) -> tuple[int, ...]:
        """Canonical orientation: the lower index of each involution pair."""
        return tuple(e for e in range(self.edge_count) if e < self.inverse[e])

    def geometric_edges(self) -> list[tuple[int, int]]:
        """Endpoint pairs (origin, terminus) of the canonical orientation."""
        return [(self.origin[e], self.terminus[e]) for e in self.orientation()]

    def euler_characteristic(self) -> int:
        return self.vertex_count - self.geometric_edge_count

    def out_edges(self, v: int) -> list[int]:
        return [e for e in range(self.edge_count) if self.origin[e] == v]

    def is_connected(self) -> bool:
        n = self.vertex_count
        if n == 0:
            return False
        seen = [False] * n
        stack = [0]
        seen[0] = True
        count = 1
        adj: list[list[int]] = [[] for _ in range(n)]
        for e in range(self.edge_count):
            adj[self.origin[e]].append(self.terminus[e])
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == n

    def adjacency_matrix(self) -> list[list[int]]:
        a = [[0] * self.vertex_count for _ in range(self.vertex_count)]
        for e in range(self.edge_count):
            a[self.origin[e]][self.terminus[e]] += 1
        return a

    def degree_matrix(self) -> list[list[int]]:
        d = [[0] * self.vertex_count for _ in range(self.vertex_count)]
        for e in range(self.edge_count):
            d[self.origin[e]][self.origin[e]] += 1
        return d

    def degrees(self) -> list[int]:
        d = [0] * self.vertex_count
        for e in range(self.edge_count):
            d[self.origin[e]] += 1
        return d

    def laplacian(self) -> list[list[int]]:
        a = self.adjacency_matrix()
        d = self.degrees()
        return [
            [(d[i] if i == j else 0) - a[i][j] for j in range(self.vertex_count)]
            for i in range(self.vertex_count)
        ]

    def spanning_tree_count(self) -> int:
        """Complexity kappa: any cofactor of the Laplacian, computed exactly."""
        if not self.is_connected():
            raise DisconnectedGraphError("spanning trees of a disconnected graph")
        n = self.vertex_count
        if n == 1:
            return 1
        lap = self.laplacian()
        minor = [row[1:] for row in lap[1:]]
        return det_int(minor)

    def ihara_h_poly(self) -> IntPoly:
        """h(u) = det(I - A u + (D - I) u^2) as an exact integer polynomial."""
        n = self.vertex_count
        a = self.adjacency_matrix()
        d = self.degrees()
        u = IntPoly.x()
        u2 = u * u
        mat = [
            [
                (IntPoly.const(1) if i == j else IntPoly())
                - a[i][j] * u
                + ((d[i] - 1) * u2 if i == j else IntPoly())
                for j in range(n)
            ]
            for i in range(n)
        ]
        return det_int_poly_matrix(mat)

    def vertex_label(self, v: int) -> str:
        return self.vertex_names[v] if self.vertex_names else str(v)


def build_graph(
    vertex_count: int,
    undirected_edges,
    vertex_names=None,
) -> SerreGraph:
    """Materialize a Serre graph from an undirected edge list (loops allowed)."""
    origin: list[int] = []
    terminus: list[int] = []
    inverse: list[int] = []
    for u, v in undirected_edges:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise ValueError(f"edge ({u},{v}) out of range for {vertex_count} vertices")
        e = len(origin)
        origin += [u, v]
        terminus += [v, u]
        inverse += [e + 1, e]
    return SerreGraph(
        vertex_count=vertex_count,
        origin=tuple(origin),
        terminus=tuple(terminus),
        inverse=tuple(inverse),
        vertex_names=tuple(vertex_names) if vertex_names else None,
    )


def bouquet(loops: int) -> SerreGraph:
    return build_graph(1, [(0, 0)] * loops)


def cycle_graph(n: int) -> SerreGraph:
    if n < 1:
        raise ValueError("cycle needs at least one vertex")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> SerreGraph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> SerreGraph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def brute_force_spanning_trees(g: SerreGraph) -> int:
    """Count spanning trees by exhaustive enumeration over geometric edges.

    Independent oracle for the Matrix-Tree route; guarded to small graphs.
    """
    m = g.geometric_edge_count
    if m > BRUTE_FORCE_EDGE_LIMIT:
        raise TooLargeError(f"{m} geometric edges exceeds limit {BRUTE_FORCE_EDGE_LIMIT}")
    n = g.vertex_count
    if n == 0:
        return 0
    if n == 1:
        return 1
    edges = g.geometric_edges()
    count = 0
    for subset in combinations(range(m), n - 1):
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        for idx in subset:
            u, v = edges[idx]
            ru, rv = find(u), find(v)
            if ru == rv:
                acyclic = False
                break
            parent[ru] = rv
        if acyclic:
            count += 1
    return count


def hashimoto_check(g: SerreGraph) -> VerificationReport:
    """Check h'(1) == -2 * chi * kappa on a connected graph."""
    started = time.perf_counter()
    if not g.is_connected():
        raise DisconnectedGraphError("Hashimoto identity needs a connected graph")
    h = g.ihara_h_poly()
    left = h.derivative()(1)
    right = -2 * g.euler_characteristic() * g.spanning_tree_count()
    return VerificationReport.compare(
        "h'(1) = -2*chi*kappa",
        f"graph with {g.vertex_count} vertices, {g.geometric_edge_count} edges",
        left,
        right,
        started=started,
    )


def graph_to_json_dict(g: SerreGraph) -> dict:
    out: dict = {
        "vertices": g.vertex_count,
        "edges": [[u, v] for u, v in g.geometric_edges()],
    }
    if g.vertex_names:
        out["names"] = list(g.vertex_names)
    return out


def graph_from_json_dict(data: dict) -> SerreGraph:
    return build_graph(
        int(data["vertices"]),
        [(int(u), int(v)) for u, v in data["edges"]],
        data.get("names"),
    )


def load_graph(path: str) -> SerreGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return graph_from_json_dict(json.load(fh))


def graph_to_dot(g: SerreGraph, name: str = "X") -> str:
    """DOT rendering with loops and multi-edges drawn explicitly."""
    lines = [f"graph {name} {{"]
    for v in range(g.vertex_count):
        lines.append(f'  {v} [label="{g.vertex_label(v)}"];')
    for u, v in g.geometric_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)

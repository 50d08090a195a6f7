"""The graph T(γ1, γ2, γ3), its intersection matrix, and bimodal extensions.

Vertex numbering (1-based):

* arm 1 is 1 .. γ1-1, arm 2 is γ1 .. γ1+γ2-2, arm 3 is γ1+γ2-1 .. γ1+γ2+γ3-3,
  each listed from the outermost vertex inwards;
* the center is γ1+γ2+γ3-2 and the top vertex is γ1+γ2+γ3-1.

The innermost vertex of each arm is joined to the center and to the top; the
top is joined to the center by the single double edge.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from .errors import BadArmTarget

SOLID = 1
DOUBLE = -2

Edge = Tuple[int, int, int]


@dataclass(frozen=True)
class DynkinGraph:
    n: int
    edges: Tuple[Edge, ...]
    # vertex -> (arm 1..3, position from the outside, 1-based)
    arm_index: Dict[int, Tuple[int, int]] = field(default_factory=dict)
    center: int = 0
    top: int = 0
    gamma: Tuple[int, ...] = ()

    @property
    def labels(self) -> List[int]:
        return list(range(1, self.n + 1))

    def arm(self, i: int) -> List[int]:
        """Vertices of arm ``i`` (1-based), outermost first."""
        return sorted((v for v, (a, _) in self.arm_index.items() if a == i),
                      key=lambda v: self.arm_index[v][1])

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def to_dot(self) -> str:
        return to_dot(self)


def _norm(i: int, j: int, w: int) -> Edge:
    return (min(i, j), max(i, j), w)


def t_graph(gamma: Sequence[int], double_weight: int = DOUBLE) -> DynkinGraph:
    gamma = tuple(int(g) for g in gamma)
    if len(gamma) != 3 or min(gamma) < 1:
        raise ValueError(f"gamma must be three integers >= 1, got {gamma}")
    total = sum(gamma)
    center, top = total - 2, total - 1
    edges: List[Edge] = []
    arm_index: Dict[int, Tuple[int, int]] = {}
    start = 1
    for i, g in enumerate(gamma, start=1):
        verts = list(range(start, start + g - 1))
        start += g - 1
        for pos, v in enumerate(verts, start=1):
            arm_index[v] = (i, pos)
        for u, v in zip(verts, verts[1:]):
            edges.append(_norm(u, v, SOLID))
        if verts:
            edges.append(_norm(verts[-1], center, SOLID))
            edges.append(_norm(verts[-1], top, SOLID))
    edges.append(_norm(center, top, double_weight))
    return DynkinGraph(top, tuple(sorted(edges)), arm_index, center, top, gamma)


def gram_matrix(g: DynkinGraph) -> List[List[int]]:
    A = [[0] * g.n for _ in range(g.n)]
    for k in range(g.n):
        A[k][k] = -2
    for i, j, w in g.edges:
        A[i - 1][j - 1] = w
        A[j - 1][i - 1] = w
    return A


def _bareiss(M: List[List[int]]) -> Tuple[int, int]:
    """(determinant, rank) by fraction-free elimination with row pivoting."""
    A = [row[:] for row in M]
    n = len(A)
    if n == 0:
        return 1, 0
    m = len(A[0])
    sign, prev, rank = 1, 1, 0
    for col in range(m):
        if rank == n:
            break
        piv = next((r for r in range(rank, n) if A[r][col]), None)
        if piv is None:
            continue
        if piv != rank:
            A[rank], A[piv] = A[piv], A[rank]
            sign = -sign
        p = A[rank][col]
        for r in range(rank + 1, n):
            for c in range(col + 1, m):
                A[r][c] = (A[r][c] * p - A[r][col] * A[rank][c]) // prev
            A[r][col] = 0
        prev = p
        rank += 1
    det = sign * prev if rank == n == m else 0
    return det, rank


def determinant(M: List[List[int]]) -> int:
    return _bareiss(M)[0]


def matrix_rank(M: List[List[int]]) -> int:
    return _bareiss(M)[1]


def gram_determinant(g: DynkinGraph) -> int:
    return determinant(gram_matrix(g))


def reduced_discriminant(g: DynkinGraph) -> int:
    """Determinant with the top vertex deleted."""
    A = gram_matrix(g)
    t = g.top - 1
    minor = [[v for j, v in enumerate(row) if j != t] for i, row in enumerate(A) if i != t]
    return determinant(minor)


def corank(g: DynkinGraph) -> int:
    return g.n - matrix_rank(gram_matrix(g))


def extend_bimodal(g: DynkinGraph, a: int, pairs: Sequence[Tuple[int, int]]) -> DynkinGraph:
    """Attach a chain of ``a`` new vertices for a bimodal singularity.

    The first new vertex hangs off the top vertex. The chain vertex number 2
    (a = 2) or 3 (a = 3, 5) is joined to the (γi - δi - 1)-th vertex from the
    outside of arm i, for each arm with δi != γi - 1.
    """
    if a not in (2, 3, 5):
        raise ValueError(f"chain length must be 2, 3 or 5, got {a}")
    if len(pairs) != 3:
        raise ValueError("need one (gamma, delta) pair per arm")
    edges = list(g.edges)
    chain = list(range(g.n + 1, g.n + a + 1))
    edges.append(_norm(g.top, chain[0], SOLID))
    for u, v in zip(chain, chain[1:]):
        edges.append(_norm(u, v, SOLID))
    hook = chain[1] if a == 2 else chain[2]
    for i, (gam, dlt) in enumerate(pairs, start=1):
        if not 0 <= dlt < gam:
            raise BadArmTarget(f"arm {i}: need 0 <= delta < gamma, got ({gam}, {dlt})")
        if dlt == gam - 1:
            continue
        pos = gam - dlt - 1
        arm = g.arm(i)
        if pos > len(arm):
            raise BadArmTarget(f"arm {i} has {len(arm)} vertices, cannot reach position {pos}")
        edges.append(_norm(arm[pos - 1], hook, SOLID))
    return DynkinGraph(g.n + a, tuple(sorted(edges)), dict(g.arm_index), g.center, g.top, g.gamma)


def to_dot(g: DynkinGraph) -> str:
    lines = ["graph T {"]
    for v in g.labels:
        lines.append(f'  {v} [label="{v}"];')
    for i, j, w in g.edges:
        if w == SOLID:
            lines.append(f"  {i} -- {j};")
        else:
            lines.append(f'  {i} -- {j} [style=dashed, penwidth=2, label="{w}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_text(g: DynkinGraph) -> str:
    return json.dumps(g.to_json(), separators=(",", ":"))

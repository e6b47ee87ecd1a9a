"""The graded poset of k-cores, seen through C-vectors.

A k-core is determined by its C-vector, and the cover relations of the
poset act on C-vectors by a local rule (``cvec_downward``), so everything
here works on integer tuples and never builds a partition.
"""

from __future__ import annotations

import json
import threading
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .core_partition import CVector, check_modulus
from .errors import DomainError, GuardExceeded, NoInsideCorner

DEFAULT_MAX_CHAINS = 10**6
DEFAULT_MAX_NODES = 10**5


def as_cvector(c: Iterable[int]) -> CVector:
    c = tuple(int(v) for v in c)
    check_modulus(len(c))
    if any(v < 0 for v in c):
        raise DomainError(f"C-vector entries must be >= 0: {c}")
    return c


def cover_moves(c: CVector) -> list[int]:
    """Residues ``a`` with ``c[a-1] < c[a]``, i.e. the inside-corner classes."""
    c = as_cvector(c)
    return [a for a in range(len(c)) if c[a - 1] < c[a]]


def cvec_downward(c: CVector, a: int) -> CVector:
    c = as_cvector(c)
    k = len(c)
    a %= k
    if not c[a - 1] < c[a]:
        raise NoInsideCorner(f"no inside corner in class {a} for C-vector {c}")
    out = list(c)
    out[(a - 1) % k] = c[a] - 1
    out[a] = c[a - 1]
    return tuple(out)


def canonical_rotation(c: CVector) -> CVector:
    c = tuple(c)
    return min(c[i:] + c[:i] for i in range(len(c))) if c else c


class _Memo:
    """Shared get-or-compute table keyed by canonical rotation."""

    def __init__(self):
        self._table: dict[CVector, int] = {}
        self._lock = threading.Lock()

    def get(self, key):
        return self._table.get(key)

    def put(self, key, value):
        with self._lock:
            # first writer wins; later writers computed the same number
            return self._table.setdefault(key, value)

    def clear(self):
        with self._lock:
            self._table.clear()

    def __len__(self):
        return len(self._table)


_memo = _Memo()


def count_maximal_chains(c: CVector) -> int:
    """Number of maximal chains below the core with C-vector ``c``.

    Sums the counts of all lower covers; the zero vector counts 1.  Runs
    iteratively so deep posets do not hit the recursion limit.
    """
    c = as_cvector(c)
    root = canonical_rotation(c)
    if _memo.get(root) is not None:
        return _memo.get(root)
    stack = [root]
    while stack:
        v = stack[-1]
        if _memo.get(v) is not None:
            stack.pop()
            continue
        if not any(v):
            _memo.put(v, 1)
            stack.pop()
            continue
        children = [canonical_rotation(cvec_downward(v, a)) for a in cover_moves(v)]
        missing = [w for w in children if _memo.get(w) is None]
        if missing:
            stack.extend(missing)
            continue
        _memo.put(v, sum(_memo.get(w) for w in children))
        stack.pop()
    return _memo.get(root)


@dataclass(frozen=True)
class MaximalChain:
    """A maximal chain, as the residues of the upward displacements that
    build it from the empty partition (bottom-up)."""

    k: int
    residues: tuple[int, ...]

    def __len__(self):
        return len(self.residues)


def enumerate_maximal_chains(c: CVector, max_chains: int = DEFAULT_MAX_CHAINS) -> Iterator[MaximalChain]:
    c = as_cvector(c)
    total = count_maximal_chains(c)
    if total > max_chains:
        raise GuardExceeded(f"{total} maximal chains exceed the guard of {max_chains}")
    k = len(c)
    path: list[int] = []

    def rec(v):
        if not any(v):
            yield MaximalChain(k, tuple(reversed(path)))
            return
        for a in cover_moves(v):
            path.append(a)
            yield from rec(cvec_downward(v, a))
            path.pop()

    yield from rec(c)


@dataclass
class HasseDiagram:
    root: CVector
    nodes: list[CVector] = field(default_factory=list)
    # (child, parent, residue): child = cvec_downward(parent, residue)
    edges: list[tuple[CVector, CVector, int]] = field(default_factory=list)

    def rank(self, v: CVector) -> int:
        return sum(v)

    def alpha(self, v: CVector) -> int:
        return count_maximal_chains(v)

    def chain_counts(self) -> dict[CVector, int]:
        """Bottom-up chain counts computed from the diagram's own edges."""
        below: dict[CVector, list[CVector]] = {v: [] for v in self.nodes}
        for child, parent, _ in self.edges:
            below[parent].append(child)
        counts: dict[CVector, int] = {}
        for v in sorted(self.nodes, key=sum):
            counts[v] = sum(counts[w] for w in below[v]) if below[v] else (0 if any(v) else 1)
        return counts

    def to_json(self) -> str:
        index = {v: i for i, v in enumerate(self.nodes)}
        counts = self.chain_counts()
        doc = {
            "nodes": [
                {"id": index[v], "cvec": list(v), "rho": sum(v), "alpha": counts[v]}
                for v in self.nodes
            ],
            "edges": [
                {"from": index[child], "to": index[parent], "residue": a}
                for child, parent, a in self.edges
            ],
        }
        return json.dumps(doc, indent=2) + "\n"

    def to_dot(self) -> str:
        index = {v: i for i, v in enumerate(self.nodes)}
        counts = self.chain_counts()
        lines = ["digraph hasse {", "\trankdir=BT;", "\tnode [shape=box];"]
        for v in self.nodes:
            label = "(" + ",".join(map(str, v)) + ")\\n" + str(counts[v])
            lines.append(f'\t"n{index[v]}" [label="{label}"];')
        for child, parent, a in self.edges:
            lines.append(f'\t"n{index[child]}" -> "n{index[parent]}" [label="{a}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def hasse_from_json(text: str) -> HasseDiagram:
    doc = json.loads(text)
    nodes = [tuple(n["cvec"]) for n in doc["nodes"]]
    edges = [(nodes[e["from"]], nodes[e["to"]], e["residue"]) for e in doc["edges"]]
    return HasseDiagram(root=nodes[0] if nodes else (), nodes=nodes, edges=edges)


def build_hasse(c: CVector, max_nodes: int = DEFAULT_MAX_NODES) -> HasseDiagram:
    """Order ideal below ``c``; nodes in BFS order from the root, children
    visited by increasing residue."""
    c = as_cvector(c)
    diagram = HasseDiagram(root=c, nodes=[c])
    seen = {c}
    queue = deque([c])
    while queue:
        v = queue.popleft()
        for a in cover_moves(v):
            w = cvec_downward(v, a)
            diagram.edges.append((w, v, a))
            if w not in seen:
                if len(seen) >= max_nodes:
                    raise GuardExceeded(f"order ideal exceeds {max_nodes} nodes")
                seen.add(w)
                diagram.nodes.append(w)
                queue.append(w)
    return diagram


def core_from_cvector(c: CVector):
    """The k-core with C-vector ``c``, rebuilt along one maximal chain.

    Raises ``DomainError`` when no k-core has this C-vector.
    """
    from .core_partition import EMPTY, c_vector, upward_displacement

    c = as_cvector(c)
    k = len(c)
    chain = next(enumerate_maximal_chains(c, max_chains=float("inf")), None)
    if chain is None:
        raise DomainError(f"{c} is not the C-vector of a {k}-core")
    p = EMPTY
    for a in chain.residues:
        p = upward_displacement(p, a, k)
    if c_vector(p, k) != c:
        raise DomainError(f"{c} is not the C-vector of a {k}-core")
    return p

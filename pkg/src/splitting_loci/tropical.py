"""Splitting type loci on the k-gonal chain of loops.

Only the residue combinatorics is modelled: a torus is a partial map from
loop indices (symbols of ``[g]``) to residues mod ``k``.  Edge lengths and
metric positions on the loops never appear.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Mapping

from .core_partition import check_modulus
from .errors import DomainError, GuardExceeded, WrongRegime
from .poset import count_maximal_chains, enumerate_maximal_chains
from .splitting import SplittingType, c_vector_of_mu, degree, lambda_of_mu, magnitude, x_m
from .tableaux import Tableau, phi

DEFAULT_MAX_TORI = 10**5


@dataclass(frozen=True)
class ChainOfLoops:
    """Genus ``g`` chain of loops with the torsion profile of gonality ``k``.

    The profile formula is applied as written even when ``g - k + 1 < k``,
    in which case every loop has torsion 0.
    """

    g: int
    k: int

    def __post_init__(self):
        check_modulus(self.k)
        if not isinstance(self.g, int) or self.g < 0:
            raise DomainError(f"genus must be a non-negative integer, got {self.g!r}")

    @property
    def torsion(self) -> tuple[int, ...]:
        g, k = self.g, self.k
        return tuple(0 if j < k or j > g - k + 1 else k for j in range(1, g + 1))


def gonality_profile(graph: ChainOfLoops) -> tuple[int, ...]:
    """Translated coordinates of the degree-k rank-1 divisor class, loop by loop."""
    g, k = graph.g, graph.k
    return tuple(0 if j <= g - k + 1 else k for j in range(1, g + 1))


@dataclass(frozen=True)
class Torus:
    g: int
    k: int
    degree: int
    # sorted (symbol, residue) pairs
    constraints: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        check_modulus(self.k)
        items = tuple(sorted((int(j), int(r) % self.k) for j, r in dict(self.constraints).items()))
        if len(items) != len(self.constraints):
            raise DomainError("a symbol is constrained twice")
        for j, _ in items:
            if not 1 <= j <= self.g:
                raise DomainError(f"symbol {j} outside the alphabet [1..{self.g}]")
        object.__setattr__(self, "constraints", items)

    @classmethod
    def from_map(cls, g: int, k: int, degree: int, constraints: Mapping[int, int]) -> "Torus":
        return cls(g, k, degree, tuple(constraints.items()))

    def constraint_map(self) -> dict[int, int]:
        return dict(self.constraints)

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(j for j, _ in self.constraints)

    @property
    def dimension(self) -> int:
        return self.g - len(self.constraints)


def _twist_of_column(mu: SplittingType, x: int) -> int:
    # x_m is weakly increasing in m, and column x of the staircase lies in
    # the first rectangle at least x wide
    m = -1 - mu[-1]
    while x_m(mu, m) < x:
        m += 1
    return m


def z_coordinate(box, symbol: int, graph: ChainOfLoops, mu) -> int:
    """Integer value forced on the coordinate of loop ``symbol`` by ``box``,
    before reduction mod k."""
    mu = mu if isinstance(mu, SplittingType) else SplittingType(mu)
    x, y = box
    if symbol <= graph.g - graph.k + 1:
        return y - x
    return y - x + _twist_of_column(mu, x) * graph.k


def torus_from_tableau(t: Tableau, graph: ChainOfLoops, mu) -> Torus:
    mu = mu if isinstance(mu, SplittingType) else SplittingType(mu)
    g, k = graph.g, graph.k
    if mu.k != k:
        raise DomainError(f"splitting type has {mu.k} entries but the graph has gonality {k}")
    if t.shape != lambda_of_mu(mu):
        raise DomainError(f"tableau shape {t.shape} is not the staircase {lambda_of_mu(mu)}")
    if t.g > g:
        raise DomainError(f"tableau alphabet [1..{t.g}] exceeds the genus {g}")
    constraints: dict[int, int] = {}
    for box, j in t.items():
        r = z_coordinate(box, j, graph, mu) % k
        if constraints.setdefault(j, r) != r:
            raise DomainError(f"symbol {j} gets residues {constraints[j]} and {r}; tableau is not {k}-uniform")
    return Torus.from_map(g, k, degree(mu, g), constraints)


def torus_contains(outer: Torus, inner: Torus) -> bool:
    """Whether ``inner`` lies in ``outer``: fewer constraints on the outside,
    all of them repeated inside."""
    if (outer.g, outer.k, outer.degree) != (inner.g, inner.k, inner.degree):
        raise DomainError(
            f"tori live in different Picard groups: (g, k, d) = "
            f"{(outer.g, outer.k, outer.degree)} vs {(inner.g, inner.k, inner.degree)}"
        )
    inside = inner.constraint_map()
    return all(inside.get(j) == r for j, r in outer.constraints)


def merge(a: Torus, b: Torus) -> Torus | None:
    """Intersection of two tori, or None when they are disjoint."""
    if (a.g, a.k, a.degree) != (b.g, b.k, b.degree):
        raise DomainError("tori live in different Picard groups")
    out = a.constraint_map()
    for j, r in b.constraints:
        if out.setdefault(j, r) != r:
            return None
    return Torus.from_map(a.g, a.k, a.degree, out)


def colex_subsets(n: int, r: int) -> Iterator[tuple[int, ...]]:
    """``r``-subsets of ``[1..n]`` in colexicographic order."""
    if r == 0:
        yield ()
        return
    for top in range(r, n + 1):
        for rest in colex_subsets(top - 1, r - 1):
            yield rest + (top,)


@dataclass
class SplittingLocus:
    mu: SplittingType
    graph: ChainOfLoops
    tori: list[tuple[Tableau, Torus]] = field(default_factory=list)

    @property
    def is_empty(self) -> bool:
        return not self.tori

    def distinct_tori(self) -> list[Torus]:
        seen = {}
        for _, torus in self.tori:
            seen.setdefault(torus, None)
        return list(seen)


def _check_graph(mu: SplittingType, graph: ChainOfLoops):
    if graph.k != mu.k:
        raise DomainError(f"graph gonality {graph.k} does not match k = {mu.k} of {mu}")


def expected_torus_count(mu, g: int) -> int:
    mu = mu if isinstance(mu, SplittingType) else SplittingType(mu)
    n = magnitude(mu)
    if g < n:
        return 0
    return comb(g, n) * count_maximal_chains(c_vector_of_mu(mu))


def iter_tori(mu, graph: ChainOfLoops) -> Iterator[tuple[Tableau, Torus]]:
    """Lazy version of ``splitting_locus``: symbol subsets in colex order,
    chains in enumeration order for each subset."""
    mu = mu if isinstance(mu, SplittingType) else SplittingType(mu)
    _check_graph(mu, graph)
    n = magnitude(mu)
    if graph.g < n:
        return
    chains = list(enumerate_maximal_chains(c_vector_of_mu(mu), max_chains=float("inf")))
    for symbols in colex_subsets(graph.g, n):
        for chain in chains:
            t = phi(symbols, chain.residues, graph.k, graph.g)
            yield t, torus_from_tableau(t, graph, mu)


def splitting_locus(mu, graph: ChainOfLoops, max_tori: int = DEFAULT_MAX_TORI) -> SplittingLocus:
    mu = mu if isinstance(mu, SplittingType) else SplittingType(mu)
    _check_graph(mu, graph)
    total = expected_torus_count(mu, graph.g)
    if total > max_tori:
        raise GuardExceeded(f"locus would have {total} tori, guard is {max_tori}")
    return SplittingLocus(mu, graph, list(iter_tori(mu, graph)))


def locus_dimension(locus: SplittingLocus) -> int | None:
    """``g - |mu|``, or None for an empty locus."""
    if locus.is_empty:
        return None
    dims = {torus.dimension for _, torus in locus.tori}
    if len(dims) != 1:
        raise DomainError(f"locus is not equidimensional: dimensions {sorted(dims)}")
    return dims.pop()


def locus_cardinality(locus: SplittingLocus) -> int:
    n = magnitude(locus.mu)
    if locus.graph.g != n:
        raise WrongRegime(f"cardinality needs g = |mu| = {n}, got g = {locus.graph.g}")
    return len(locus.distinct_tori())


def codimension_one_graph(locus: SplittingLocus) -> dict[Torus, set[Torus]]:
    """Distinct tori, joined when they meet in a torus of one lower dimension."""
    n = magnitude(locus.mu)
    tori = locus.distinct_tori()
    adj: dict[Torus, set[Torus]] = {t: set() for t in tori}
    for i, a in enumerate(tori):
        for b in tori[i + 1 :]:
            if len(a.domain | b.domain) != n + 1:
                continue
            if merge(a, b) is not None:
                adj[a].add(b)
                adj[b].add(a)
    return adj


def connectivity_check(locus: SplittingLocus) -> bool:
    n = magnitude(locus.mu)
    if locus.graph.g <= n:
        raise WrongRegime(f"connectivity needs g > |mu| = {n}, got g = {locus.graph.g}")
    adj = codimension_one_graph(locus)
    if not adj:
        return True
    start = next(iter(adj))
    seen = {start}
    queue = deque([start])
    while queue:
        for w in adj[queue.popleft()]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(adj)


def locus_to_json(locus: SplittingLocus) -> str:
    n = magnitude(locus.mu)
    doc = {
        "mu": list(locus.mu),
        "g": locus.graph.g,
        "k": locus.graph.k,
        "dimension": locus_dimension(locus),
    }
    if locus.graph.g == n:
        doc["cardinality"] = locus_cardinality(locus)
    doc["tori"] = [
        {
            "tableau": t.to_text(),
            "constraints": {str(j): r for j, r in torus.constraints},
        }
        for t, torus in locus.tori
    ]
    return json.dumps(doc, indent=2) + "\n"

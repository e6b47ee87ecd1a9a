"""Tableaux, k-uniform displacement, saturation and the moves on tableaux
that connect tori of a splitting locus.

A tableau fills a partition with symbols from ``1..g``, strictly increasing
along rows and down columns.  Repeated symbols are allowed; a tableau is
*k-uniform* when equal symbols sit on diagonals congruent mod ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator, Sequence

from .core_partition import (
    EMPTY,
    Box,
    Partition,
    corners,
    diagonal,
    is_k_core,
    rho_k,
    upward_displacement,
)
from .errors import DomainError, GuardExceeded, UnsupportedShape

DEFAULT_MAX_BOXES = 16


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]
    g: int

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(len(r) == 0 for r in rows):
            raise DomainError("tableau rows must be nonempty")
        Partition(tuple(len(r) for r in rows))  # shape check
        if self.g < 0:
            raise DomainError(f"alphabet bound must be >= 0, got {self.g}")
        for y, r in enumerate(rows):
            for x, v in enumerate(r):
                if not 1 <= v <= self.g:
                    raise DomainError(f"symbol {v} outside alphabet [1..{self.g}]")
                if x > 0 and r[x - 1] >= v:
                    raise DomainError(f"row {y + 1} is not strictly increasing")
                if y > 0 and rows[y - 1][x] >= v:
                    raise DomainError(f"column {x + 1} is not strictly increasing")

    @classmethod
    def from_fill(cls, fill: dict[Box, int], g: int) -> "Tableau":
        shape = Partition.from_boxes(fill)
        rows = tuple(
            tuple(fill[(x, y)] for x in range(1, length + 1))
            for y, length in enumerate(shape.rows, start=1)
        )
        return cls(rows, g)

    @classmethod
    def parse(cls, text: str, g: int | None = None) -> "Tableau":
        """Read the text format: one row per line, whitespace-separated."""
        rows = [tuple(int(v) for v in line.split()) for line in text.splitlines() if line.strip()]
        if g is None:
            g = max((max(r) for r in rows), default=0)
        return cls(tuple(rows), g)

    def to_text(self) -> str:
        return "".join(" ".join(map(str, r)) + "\n" for r in self.rows)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    def __getitem__(self, box: Box) -> int:
        x, y = box
        return self.rows[y - 1][x - 1]

    def items(self) -> Iterator[tuple[Box, int]]:
        for y, r in enumerate(self.rows, start=1):
            for x, v in enumerate(r, start=1):
                yield (x, y), v

    def fill(self) -> dict[Box, int]:
        return dict(self.items())

    def symbols(self) -> list[int]:
        return sorted({v for _, v in self.items()})

    def boxes_of(self, symbol: int) -> list[Box]:
        return [b for b, v in self.items() if v == symbol]

    def restrict(self, shape: Partition) -> "Tableau":
        return Tableau(tuple(r[:n] for r, n in zip(self.rows, shape.rows)), self.g)

    def relabel(self, mapping) -> "Tableau":
        return Tableau(tuple(tuple(mapping(v) for v in r) for r in self.rows), self.g)

    def transpose(self) -> "Tableau":
        fill = {(y, x): v for (x, y), v in self.items()}
        if not fill:
            return self
        return Tableau.from_fill(fill, self.g)

    def with_bound(self, g: int) -> "Tableau":
        return Tableau(self.rows, g)


def empty_tableau(g: int) -> Tableau:
    return Tableau((), g)


def is_k_uniform(t: Tableau, k: int) -> bool:
    seen: dict[int, int] = {}
    for box, v in t.items():
        a = diagonal(box, k)
        if seen.setdefault(v, a) != a:
            return False
    return True


def is_standard(t: Tableau) -> bool:
    vals = [v for _, v in t.items()]
    return sorted(vals) == list(range(1, len(vals) + 1))


def enumerate_k_uniform(
    shape: Partition, k: int, g: int, max_boxes: int = DEFAULT_MAX_BOXES
) -> Iterator[Tableau]:
    """Every k-uniform tableau on ``shape`` with alphabet ``[g]``.

    Depth-first over boxes in row-major order, smallest symbol first, so the
    output is in lexicographic order of the row-major fill.
    """
    if shape.size > max_boxes:
        raise GuardExceeded(f"shape has {shape.size} boxes, guard is {max_boxes}")
    boxes = list(shape)
    rows = shape.rows
    # longest strictly increasing path starting at a box: reach the farthest
    # box weakly south-east of it
    slack = [
        max(rows[yy - 1] - x + yy - y for yy in range(y, len(rows) + 1) if rows[yy - 1] >= x)
        for x, y in boxes
    ]
    fill: dict[Box, int] = {}
    residue_of: dict[int, int] = {}
    count: dict[int, int] = {}

    def rec(i: int):
        if i == len(boxes):
            yield Tableau.from_fill(fill, g) if fill else empty_tableau(g)
            return
        x, y = boxes[i]
        lo = max(fill.get((x - 1, y), 0), fill.get((x, y - 1), 0)) + 1
        hi = g - slack[i]
        a = (y - x) % k
        for s in range(lo, hi + 1):
            prev = residue_of.get(s)
            if prev is not None and prev != a:
                continue
            fill[(x, y)] = s
            residue_of[s] = a
            count[s] = count.get(s, 0) + 1
            yield from rec(i + 1)
            count[s] -= 1
            if count[s] == 0:
                del count[s]
                del residue_of[s]
        fill.pop((x, y), None)

    yield from rec(0)


def standard_tableaux(shape: Partition) -> Iterator[Tableau]:
    """Standard Young tableaux, by brute force over the same enumerator."""
    n = shape.size
    for t in enumerate_k_uniform(shape, n + 1, n, max_boxes=max(n, DEFAULT_MAX_BOXES)):
        if is_standard(t):
            yield t


def saturate(t: Tableau, k: int) -> Tableau:
    """Collapse a k-uniform tableau on a k-core to one using exactly
    ``rho_k`` symbols, each a symbol of ``t`` on a congruent diagonal.

    Repeatedly take the largest symbol still present, write it into every
    inside corner of its diagonal class, and remove those corners.
    """
    shape = t.shape
    if not is_k_core(shape, k):
        raise UnsupportedShape(f"shape {shape} is not a {k}-core")
    if not is_k_uniform(t, k):
        raise DomainError("tableau is not k-uniform")
    fill = t.fill()
    out: dict[Box, int] = {}
    current = shape
    while current.size:
        h = max(fill[b] for b in current)
        a = diagonal(next(b for b in current if fill[b] == h), k)
        inside, _ = corners(current)
        stamped = [b for b in inside if diagonal(b, k) == a]
        for b in stamped:
            out[b] = h
        rows = list(current.rows)
        for x, y in stamped:
            rows[y - 1] -= 1
        current = Partition(tuple(r for r in rows if r > 0))
    return Tableau.from_fill(out, t.g) if out else t


def level_sets(t: Tableau) -> list[tuple[int, Partition]]:
    """``(s, boxes with symbol <= s)`` for each symbol ``s`` of ``t``."""
    out = []
    for s in t.symbols():
        out.append((s, Partition(tuple(n for n in (sum(1 for v in r if v <= s) for r in t.rows) if n))))
    return out


def is_k_saturated(t: Tableau, k: int) -> bool:
    """Whether ``t`` is built by a chain of full upward displacements."""
    prev = EMPTY
    for s, level in level_sets(t):
        a = diagonal(t.boxes_of(s)[0], k)
        if upward_displacement(prev, a, k) != level:
            return False
        prev = level
    return True


def chain_of_saturated(t: Tableau, k: int) -> tuple[int, ...]:
    """Bottom-up residue sequence of a k-saturated tableau (inverse of phi)."""
    if not is_k_saturated(t, k):
        raise DomainError("tableau is not k-saturated")
    return tuple(diagonal(t.boxes_of(s)[0], k) for s in t.symbols())


def phi(symbols: Sequence[int], residues: Sequence[int], k: int, g: int | None = None) -> Tableau:
    """Tableau whose ``j``-th smallest symbol fills the boxes added by the
    ``j``-th upward displacement of the chain."""
    symbols = sorted(symbols)
    if len(set(symbols)) != len(symbols):
        raise DomainError("symbols must be distinct")
    if len(symbols) != len(residues):
        raise DomainError(
            f"{len(symbols)} symbols for a chain of length {len(residues)}"
        )
    if g is None:
        g = symbols[-1] if symbols else 0
    fill: dict[Box, int] = {}
    current = EMPTY
    for s, a in zip(symbols, residues):
        nxt = upward_displacement(current, a, k)
        if nxt == current:
            raise DomainError(f"residue {a} adds no box to {current}")
        old = set(current)
        for b in nxt:
            if b not in old:
                fill[b] = s
        current = nxt
    return Tableau.from_fill(fill, g) if fill else empty_tableau(g)


def swap(t: Tableau, a: int, b: int, boxes: Iterable[Box] | None = None) -> Tableau:
    """Replace ``b`` by the absent symbol ``a`` in ``boxes`` (default: all of
    ``b``'s boxes).

    ``b`` must be the nearest symbol of ``t`` to ``a`` on its side: the
    smallest symbol above ``a`` or the largest below it.
    """
    present = set(t.symbols())
    if a in present:
        raise DomainError(f"symbol {a} already occurs in the tableau")
    if b not in present:
        raise DomainError(f"symbol {b} does not occur in the tableau")
    if not 1 <= a <= t.g:
        raise DomainError(f"symbol {a} outside alphabet [1..{t.g}]")
    between = [s for s in present if min(a, b) < s < max(a, b)]
    if between:
        raise DomainError(f"{b} is not the nearest symbol to {a}: {between} lie between")
    own = set(t.boxes_of(b))
    boxes = own if boxes is None else set(boxes)
    if not boxes or not boxes <= own:
        raise DomainError(f"boxes must be a nonempty subset of the boxes holding {b}")
    fill = t.fill()
    for box in boxes:
        fill[box] = a
    return Tableau.from_fill(fill, t.g)


def nearest_absent(t: Tableau, b: int, direction: str | None = None) -> int:
    present = set(t.symbols())
    below = next((s for s in range(b - 1, 0, -1) if s not in present), None)
    above = next((s for s in range(b + 1, t.g + 1) if s not in present), None)
    if direction == "down":
        above = None
    elif direction == "up":
        below = None
    elif direction is not None:
        raise DomainError(f"direction must be 'up' or 'down', got {direction!r}")
    if below is None and above is None:
        raise DomainError(f"no absent symbol in [1..{t.g}] to cycle {b} toward")
    if below is None:
        return above
    if above is None:
        return below
    # ties go downward
    return below if b - below <= above - b else above


def cycle_out(t: Tableau, b: int, direction: str | None = None) -> Tableau:
    """Remove symbol ``b`` by shifting every symbol between ``b`` and the
    nearest absent symbol one step toward that gap."""
    if b not in set(t.symbols()):
        raise DomainError(f"symbol {b} does not occur in the tableau")
    a = nearest_absent(t, b, direction)
    if a < b:
        return t.relabel(lambda v: v - 1 if a < v <= b else v)
    return t.relabel(lambda v: v + 1 if b <= v < a else v)


def cycle_out_swaps(t: Tableau, b: int, direction: str | None = None) -> list[Tableau]:
    """The full swaps whose composite is ``cycle_out``; returns every
    intermediate tableau, starting with ``t``."""
    a = nearest_absent(t, b, direction)
    step = -1 if a < b else 1
    out = [t]
    for hole in range(a, b, -step):
        out.append(swap(out[-1], hole, hole - step))
    return out


def place(t: Tableau, a: int, boxes: Iterable[Box]) -> Tableau:
    """Write the absent symbol ``a`` into ``boxes``; the result must again be
    a tableau.  This is the insertion step of the connectivity argument,
    which unlike ``swap`` may overwrite several different symbols."""
    if a in set(t.symbols()):
        raise DomainError(f"symbol {a} already occurs in the tableau")
    fill = t.fill()
    for box in boxes:
        if box not in fill:
            raise DomainError(f"box {box} is not in the shape")
        fill[box] = a
    return Tableau.from_fill(fill, t.g)


def connecting_sequence(t: Tableau, t_prime: Tableau, k: int) -> list[Tableau]:
    """k-saturated tableaux from ``t`` to ``t_prime`` with consecutive tori
    meeting in codimension one.

    Both inputs must be k-saturated on the same k-core with symbols
    ``1..n`` and share an alphabet ``[g]`` with ``g > n``.  Each cycling step
    is expanded into its individual swaps.
    """
    if t.shape != t_prime.shape or t.g != t_prime.g:
        raise DomainError("tableaux must share shape and alphabet")
    n = rho_k(t.shape, k)
    g = t.g
    for s in (t, t_prime):
        if not is_k_saturated(s, k) or s.symbols() != list(range(1, n + 1)):
            raise DomainError("endpoints must be k-saturated on symbols 1..rho_k")
    if g <= n:
        raise DomainError("connecting requires an alphabet larger than rho_k")
    target_levels = [EMPTY] + [p for _, p in level_sets(t_prime)]
    seq = [t]
    cur = t
    while cur != t_prime:
        levels = [EMPTY] + [p for _, p in level_sets(cur)]
        j = max(i for i in range(1, n + 1) if levels[i - 1] != target_levels[i - 1])
        if j < n:
            steps = cycle_out_swaps(cur, j + 1, "up")
            seq.extend(steps[1:])
            cur = steps[-1]
        added = set(target_levels[j]) - set(target_levels[j - 1])
        cur = saturate(place(cur, j + 1, added), k)
        seq.append(cur)
        extra = [s for s in cur.symbols() if s > n]
        for s in reversed(extra):
            steps = cycle_out_swaps(cur, s, "down")
            seq.extend(steps[1:])
            cur = steps[-1]
    return seq


def hook_length_count(rows: int, cols: int) -> int:
    """Number of standard Young tableaux on a ``rows`` x ``cols`` rectangle."""
    if rows < 0 or cols < 0:
        raise DomainError("rectangle dimensions must be >= 0")
    n = rows * cols
    num = factorial(n)
    den = 1
    for j in range(cols):
        den *= factorial(rows + j)
        num *= factorial(j)
    return num // den

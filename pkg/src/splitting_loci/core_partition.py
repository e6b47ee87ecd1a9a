"""Ferrers diagrams, diagonals mod k, displacement and k-cores.

Boxes are ``(x, y)`` pairs with ``x`` the column and ``y`` the row, both
starting at 1, English convention (box ``(1, 1)`` in the upper left).  The
diagonal of a box is ``y - x``; its class mod ``k`` is always normalized to
``0 .. k-1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError

Box = tuple[int, int]
CVector = tuple[int, ...]


def check_modulus(k: int) -> int:
    if not isinstance(k, int) or k < 2:
        raise DomainError(f"modulus k must be an integer >= 2, got {k!r}")
    return k


def diagonal(box: Box, k: int) -> int:
    """Residue of ``y - x`` mod ``k``."""
    x, y = box
    return (y - x) % k


@dataclass(frozen=True, order=True)
class Partition:
    rows: tuple[int, ...] = ()

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        for r in rows:
            if not isinstance(r, int) or r < 1:
                raise DomainError(f"row lengths must be positive integers: {rows}")
        for a, b in zip(rows, rows[1:]):
            if b > a:
                raise DomainError(f"row lengths must be weakly decreasing: {rows}")

    @classmethod
    def from_boxes(cls, boxes: Iterable[Box]) -> "Partition":
        boxes = set(boxes)
        lengths: dict[int, int] = {}
        for x, y in boxes:
            lengths[y] = max(lengths.get(y, 0), x)
        rows = tuple(lengths.get(y, 0) for y in range(1, len(lengths) + 1))
        p = cls(rows)
        if p.size != len(boxes) or any(b not in p for b in boxes):
            raise DomainError("box set is not a Ferrers diagram")
        return p

    def __contains__(self, box: Box) -> bool:
        x, y = box
        return 1 <= y <= len(self.rows) and 1 <= x <= self.rows[y - 1]

    def __iter__(self) -> Iterator[Box]:
        for y, length in enumerate(self.rows, start=1):
            for x in range(1, length + 1):
                yield (x, y)

    def __len__(self) -> int:
        return self.size

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.rows)) + "]"

    @property
    def size(self) -> int:
        return sum(self.rows)

    @property
    def height(self) -> int:
        return len(self.rows)

    @property
    def width(self) -> int:
        return self.rows[0] if self.rows else 0

    def column_heights(self) -> tuple[int, ...]:
        return tuple(sum(1 for r in self.rows if r >= x) for x in range(1, self.width + 1))

    def issubset(self, other: "Partition") -> bool:
        return len(self.rows) <= len(other.rows) and all(
            a <= b for a, b in zip(self.rows, other.rows)
        )


EMPTY = Partition(())


def transpose(p: Partition) -> Partition:
    return Partition(p.column_heights())


def corners(p: Partition) -> tuple[set[Box], set[Box]]:
    """Inside and outside corners of ``p``.

    Inside corners are the boxes whose removal leaves a partition; outside
    corners are the boxes whose addition does.
    """
    rows = p.rows
    inside = set()
    for y, length in enumerate(rows, start=1):
        below = rows[y] if y < len(rows) else 0
        if below < length:
            inside.add((length, y))
    outside = {(1, len(rows) + 1)}
    for y, length in enumerate(rows, start=1):
        above = rows[y - 2] if y > 1 else None
        if above is None or above > length:
            outside.add((length + 1, y))
    return inside, outside


def upward_displacement(p: Partition, a: int, k: int) -> Partition:
    """Add every outside corner lying in diagonal class ``a``."""
    check_modulus(k)
    a %= k
    _, outside = corners(p)
    rows = list(p.rows)
    for x, y in outside:
        if (y - x) % k == a:
            if y > len(rows):
                rows.append(1)
            else:
                rows[y - 1] += 1
    return Partition(tuple(rows))


def downward_displacement(p: Partition, a: int, k: int) -> Partition:
    """Delete every inside corner lying in diagonal class ``a``."""
    check_modulus(k)
    a %= k
    inside, _ = corners(p)
    rows = list(p.rows)
    for x, y in inside:
        if (y - x) % k == a:
            rows[y - 1] -= 1
    return Partition(tuple(r for r in rows if r > 0))


def c_vector(p: Partition, k: int) -> CVector:
    """Height of the tallest column ending in each diagonal class (0 if none)."""
    check_modulus(k)
    c = [0] * k
    for x, h in enumerate(p.column_heights(), start=1):
        a = (h - x) % k
        if h > c[a]:
            c[a] = h
    return tuple(c)


def rho_k(p: Partition, k: int) -> int:
    return sum(c_vector(p, k))


def satisfies_k_descent(p: Partition, k: int) -> bool:
    c = c_vector(p, k)
    # the row-end boxes (rows[y], y) are exactly the boxes with no right neighbour
    for y, length in enumerate(p.rows, start=1):
        a = (y - length) % k
        if c[(a - 1) % k] >= y:
            return False
    return True


def is_k_core(p: Partition, k: int) -> bool:
    return satisfies_k_descent(p, k) and satisfies_k_descent(transpose(p), k)


def inside_corner_residues(p: Partition, k: int) -> set[int]:
    inside, _ = corners(p)
    return {diagonal(b, k) for b in inside}


def k_cores_by_reachability(k: int, max_size: int) -> set[Partition]:
    """All k-cores with at most ``max_size`` boxes, found by breadth-first
    search from the empty partition through upward displacements.

    Exponential in general; kept as an independent oracle for ``is_k_core``.
    Pruning at ``max_size`` is sound because displacements only add boxes.
    """
    check_modulus(k)
    seen = {EMPTY}
    queue = deque([EMPTY])
    while queue:
        p = queue.popleft()
        for a in range(k):
            q = upward_displacement(p, a, k)
            if q != p and q.size <= max_size and q not in seen:
                seen.add(q)
                queue.append(q)
    return seen


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield EMPTY
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest.rows)


def partitions_up_to(max_size: int) -> Iterator[Partition]:
    for n in range(max_size + 1):
        yield from partitions_of(n)

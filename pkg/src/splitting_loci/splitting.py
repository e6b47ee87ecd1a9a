"""Splitting types and the staircase partitions they determine."""

from __future__ import annotations

from itertools import accumulate
from typing import Iterable, NamedTuple

from .core_partition import CVector, Partition
from .errors import ComparisonUndefined, DomainError, EmptyStaircase


class SplittingType:
    """A sorted integer vector ``mu_1 <= ... <= mu_k`` with ``k >= 2``.

    Input is sorted on construction; the ordering is a convention, not data.
    """

    __slots__ = ("mu",)

    def __init__(self, mu: Iterable[int]):
        mu = tuple(sorted(int(v) for v in mu))
        if len(mu) < 2:
            raise DomainError(f"a splitting type needs k >= 2 entries, got {len(mu)}")
        object.__setattr__(self, "mu", mu)

    def __setattr__(self, name, value):
        raise AttributeError("SplittingType is immutable")

    @classmethod
    def parse(cls, text: str) -> "SplittingType":
        parts = [s.strip() for s in text.split(",")]
        if not text.strip() or any(s == "" for s in parts):
            raise DomainError(f"cannot parse splitting type {text!r}")
        try:
            return cls(int(s) for s in parts)
        except ValueError:
            raise DomainError(f"cannot parse splitting type {text!r}") from None

    @property
    def k(self) -> int:
        return len(self.mu)

    def __iter__(self):
        return iter(self.mu)

    def __len__(self):
        return len(self.mu)

    def __getitem__(self, i):
        return self.mu[i]

    def __eq__(self, other):
        if isinstance(other, SplittingType):
            return self.mu == other.mu
        return NotImplemented

    def __hash__(self):
        return hash(self.mu)

    def __repr__(self):
        return f"SplittingType({self.mu})"

    def __str__(self):
        return ",".join(map(str, self.mu))

    def shifted(self, m: int) -> "SplittingType":
        return SplittingType(v + m for v in self.mu)


def _as_mu(mu) -> SplittingType:
    return mu if isinstance(mu, SplittingType) else SplittingType(mu)


def x_m(mu, m: int) -> int:
    return sum(max(0, v + m + 1) for v in _as_mu(mu))


def y_m(mu, m: int) -> int:
    return sum(max(0, -v - m - 1) for v in _as_mu(mu))


def h_invariants(mu, m: int) -> tuple[int, int]:
    """``(x_m, y_m)``: dimensions of the ``m``-th twisted rectangle."""
    return x_m(mu, m), y_m(mu, m)


def magnitude(mu) -> int:
    mu = _as_mu(mu).mu
    return sum(
        max(0, mu[j] - mu[i] - 1) for i in range(len(mu)) for j in range(i + 1, len(mu))
    )


def degree(mu, g: int) -> int:
    if g < 0:
        raise DomainError(f"genus must be >= 0, got {g}")
    return g - 1 + sum(v + 1 for v in _as_mu(mu))


def m_window(mu) -> range:
    """Twists ``m`` whose rectangle can be nonempty."""
    mu = _as_mu(mu)
    return range(-1 - mu[-1], -mu[0])


def lambda_of_mu(mu) -> Partition:
    mu = _as_mu(mu)
    rows: list[int] = []
    for m in m_window(mu):
        w, h = h_invariants(mu, m)
        if w == 0 or h == 0:
            continue
        # x_m increases and y_m decreases with m, so later rectangles are wider
        for y in range(h):
            if y < len(rows):
                rows[y] = max(rows[y], w)
            else:
                rows.append(w)
    return Partition(tuple(rows))


class RankJump(NamedTuple):
    m: int
    alpha: int
    strict: bool


def rank_jumps(mu) -> list[RankJump]:
    mu = _as_mu(mu)
    out = []
    for m in m_window(mu):
        alpha = x_m(mu, m) - x_m(mu, m - 1)
        strict = x_m(mu, m - 1) > 0 and y_m(mu, m) > 0
        out.append(RankJump(m, alpha, strict))
    return out


def strict_rank_jumps(mu) -> list[int]:
    return [r.alpha for r in rank_jumps(mu) if r.strict]


def mu_plus(mu) -> SplittingType:
    """Raise the first entry below a strict increase; deletes the top row of
    the staircase."""
    mu = _as_mu(mu)
    if lambda_of_mu(mu).size == 0:
        raise EmptyStaircase(f"staircase of {mu} is empty; no row to delete")
    v = list(mu.mu)
    s = next(i for i in range(len(v) - 1) if v[i] < v[i + 1])
    v[s] += 1
    return SplittingType(v)


def mu_minus(mu) -> SplittingType:
    """Lower the last entry above a strict increase; deletes the leftmost
    column of the staircase."""
    mu = _as_mu(mu)
    if lambda_of_mu(mu).size == 0:
        raise EmptyStaircase(f"staircase of {mu} is empty; no column to delete")
    v = list(mu.mu)
    s = next(i for i in range(len(v) - 1, 0, -1) if v[i] > v[i - 1])
    v[s] -= 1
    return SplittingType(v)


def serre_dual(mu) -> SplittingType:
    return SplittingType(-v for v in reversed(_as_mu(mu).mu))


def dominance_leq(a, b) -> bool:
    """Prefix-sum (dominance) order; only defined for equal k and total."""
    a, b = _as_mu(a), _as_mu(b)
    if a.k != b.k:
        raise ComparisonUndefined(f"splitting types have different k: {a.k} vs {b.k}")
    if sum(a) != sum(b):
        raise ComparisonUndefined(
            f"splitting types have different degrees: sums {sum(a)} vs {sum(b)}"
        )
    return all(p <= q for p, q in zip(accumulate(a), accumulate(b)))


def corner_diagonal(mu) -> int:
    mu = _as_mu(mu)
    return (-sum(mu)) % mu.k


def c_vector_of_mu(mu) -> CVector:
    """Closed-form column statistics of the staircase, without building it."""
    mu = _as_mu(mu)
    k, v, c0 = mu.k, mu.mu, corner_diagonal(mu)
    out = [0] * k
    for i in range(k):
        top = v[k - 1 - i]
        out[(c0 + i) % k] = sum(max(0, top - v[j] - 1) for j in range(k - 1 - i))
    return tuple(out)

"""Closed-form chain counts for the families of splitting types whose
posets have a known count, each paired with the C-vector it applies to.

``family_vector`` and ``closed_form_alpha`` take the same parameters, so a
check is ``closed_form_alpha(f, **p) == count_maximal_chains(family_vector(f, **p))``.
"""

from __future__ import annotations

from math import comb, prod

from .core_partition import CVector
from .errors import DomainError
from .poset import count_maximal_chains
from .splitting import SplittingType, c_vector_of_mu, x_m, y_m
from .tableaux import hook_length_count

FAMILIES = (
    "onecol",
    "trigonal",
    "four",
    "fibonacci",
    "six2",
    "six3",
    "onerowonecol",
    "onerowonecol-lemma",
    "classic",
    "catalan",
    "quadric",
)


def fibonacci(n: int) -> int:
    """Fibonacci numbers indexed so that F_0 = F_1 = 1 (F_5 = 8, F_8 = 34)."""
    if n < 0:
        raise DomainError(f"Fibonacci index must be >= 0, got {n}")
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def beta(z: int) -> int:
    return 2 if z % 3 == 0 else -1


def _need(cond: bool, msg: str):
    if not cond:
        raise DomainError(msg)


def catalan_mu(k: int) -> SplittingType:
    _need(k >= 3, "catalan family needs k >= 3")
    return SplittingType((-3,) + (-2,) * (k - 3) + (0, 0))


def quadric_mus(k: int) -> list[SplittingType]:
    """Splitting types ``(-3,-3,-2^i,-1^(k-4-i),0,0)`` for ``i = 0..k-4``."""
    _need(k >= 4, "quadric family needs k >= 4")
    return [
        SplittingType((-3, -3) + (-2,) * i + (-1,) * (k - 4 - i) + (0, 0))
        for i in range(k - 3)
    ]


def rank4_quadric_degree(k: int) -> int:
    """Degree of the variety of rank <= 4 quadrics in P^k."""
    _need(k >= 4, "quadric degree formula needs k >= 4")
    num = prod(comb(k + 1 + i, k - 3 - i) for i in range(k - 3))
    den = prod(comb(2 * i + 1, i) for i in range(k - 3))
    q, r = divmod(num, den)
    assert r == 0
    return q


def onerowonecol_lemma_vector(k: int, z1: int, z2: int, i: int, j: int) -> CVector:
    """``(z2^(k-2-i), (z2-1)^(i), 0)`` with ``z1`` inserted after entry ``j``."""
    _need(k >= 3, "needs k >= 3")
    _need(z1 >= z2 >= 0, "needs z1 >= z2 >= 0")
    _need(0 <= i <= k - 2, "needs 0 <= i <= k-2")
    _need(0 <= j <= k - 1, "needs 0 <= j <= k-1")
    _need(i == 0 or z2 >= 1, "needs z2 >= 1 when i > 0")
    # the binomial only holds where z1 sits in the class forced by z1 - z2
    _need(
        (z1 - z2 - j + k - 2) % (k - 1) == 0,
        f"z1 - z2 must be congruent to j - (k-2) mod k-1 (z1={z1}, z2={z2}, j={j})",
    )
    base = [z2] * (k - 2 - i) + [z2 - 1] * i + [0]
    return tuple(base[:j] + [z1] + base[j:])


def is_core_cvector(c: CVector) -> bool:
    from .poset import core_from_cvector

    try:
        core_from_cvector(c)
    except DomainError:
        return False
    return True


def core_rotations(c: CVector) -> list[int]:
    """Shifts ``s`` for which ``c[s:] + c[:s]`` is the C-vector of a core."""
    c = tuple(c)
    return [s for s in range(len(c)) if is_core_cvector(c[s:] + c[:s])]


def _mu_arg(mu) -> SplittingType:
    return mu if isinstance(mu, SplittingType) else SplittingType(mu)


def family_vector(family: str, **p) -> CVector:
    """The C-vector a family's closed form counts chains for."""
    if family == "onecol":
        k, z = p["k"], p["z"]
        _need(k >= 2 and z >= 0, "onecol needs k >= 2, z >= 0")
        return (z,) + (0,) * (k - 1)
    if family == "four":
        z, variant = p["z"], p.get("variant", "equal")
        _need(z >= 1, "four needs z >= 1")
        return {"equal": (z, z, 0, 0), "shifted": (z + 1, z - 1, 0, 0)}[variant]
    if family == "fibonacci":
        z, variant = p["z"], p.get("variant", "equal")
        _need(z >= 1, "fibonacci needs z >= 1")
        return {"equal": (z, z, 0, 0, 0), "shifted": (z + 2, z - 1, 0, 0, 0)}[variant]
    if family == "six2":
        z, variant = p["z"], p.get("variant", "equal")
        _need(z >= (2 if variant == "shifted" else 1), "six2 parameter out of range")
        return {
            "equal": (z, z, 0, 0, 0, 0),
            "shifted": (z + 2, z - 2, 0, 0, 0, 0),
            "split": (z + 1, 0, 0, z - 1, 0, 0),
        }[variant]
    if family == "six3":
        z, variant = p["z"], p.get("variant", "equal")
        _need(z >= (2 if variant == "low" else 1), "six3 parameter out of range")
        return {
            "equal": (z, z, z, 0, 0, 0),
            "low": (z + 1, z + 1, z - 2, 0, 0, 0),
            "high": (z + 2, z - 1, z - 1, 0, 0, 0),
            "spread": (z - 1, 0, z, 0, z + 1, 0),
        }[variant]
    if family == "onerowonecol-lemma":
        v = onerowonecol_lemma_vector(p["k"], p["z1"], p["z2"], p["i"], p["j"])
        _need(is_core_cvector(v), f"{v} is not the C-vector of a core")
        return v
    if family in ("trigonal", "onerowonecol"):
        _check_hypotheses(family, _mu_arg(p["mu"]))
        return c_vector_of_mu(_mu_arg(p["mu"]))
    if family == "classic":
        if "mu" in p:
            _check_hypotheses(family, _mu_arg(p["mu"]))
            return c_vector_of_mu(_mu_arg(p["mu"]))
        raise DomainError("classic family vector needs mu")
    if family == "catalan":
        return c_vector_of_mu(catalan_mu(p["k"]))
    raise DomainError(f"unknown family {family!r}")


def _check_hypotheses(family: str, mu: SplittingType):
    v = mu.mu
    if family == "trigonal":
        _need(mu.k == 3, "trigonal family needs k = 3")
        _need(v[2] > v[1] + 1 and v[1] > v[0] + 1, f"{mu} is not a trigonal family member")
    elif family == "onerowonecol":
        _need(mu.k >= 3, "onerowonecol family needs k >= 3")
        _need(len(set(v[1:-1])) == 1, f"{mu}: middle entries must be equal")
        _need(v[-1] > v[-2] + 1 and v[0] < v[1] - 1, f"{mu} is covered by onecol")
    elif family == "classic":
        _need(v[0] >= -2 and v[-1] <= 0, f"{mu}: classic family needs -2 <= mu_i <= 0")


def closed_form_alpha(family: str, **p) -> int:
    """Closed-form maximal-chain count of a family member."""
    if family == "onecol":
        family_vector(family, **p)
        return 1
    if family == "trigonal":
        mu = _mu_arg(p["mu"])
        _check_hypotheses(family, mu)
        m1, m2, m3 = mu.mu
        return comb(m3 - m1 - 2, m2 - m1 - 1)
    if family == "four":
        family_vector(family, **p)
        return 2 ** (p["z"] - 1)
    if family == "fibonacci":
        family_vector(family, **p)
        z = p["z"]
        return fibonacci(2 * z - 2) if p.get("variant", "equal") == "equal" else fibonacci(2 * z - 1)
    if family == "six2":
        family_vector(family, **p)
        z, variant = p["z"], p.get("variant", "equal")
        t = 3 ** (z - 1)
        return {"equal": (t + 1) // 2, "shifted": (t - 1) // 2, "split": t}[variant]
    if family == "six3":
        family_vector(family, **p)
        z, variant = p["z"], p.get("variant", "equal")
        t = 2 ** (3 * z - 2)
        if variant == "spread":
            return t
        shift = {"equal": 0, "low": -1, "high": 1}[variant]
        q, r = divmod(t + (-1) ** z * beta(z + shift), 3)
        assert r == 0
        return q
    if family == "onerowonecol":
        mu = _mu_arg(p["mu"])
        _check_hypotheses(family, mu)
        k, v = mu.k, mu.mu
        return comb((k - 2) * (v[-1] - v[0] - 2), (k - 2) * (v[1] - v[0] - 1))
    if family == "onerowonecol-lemma":
        k, z1, z2, i = p["k"], p["z1"], p["z2"], p["i"]
        family_vector(family, **p)
        top = ((k - 2) * (z1 + (k - 2) * z2)) // (k - 1) - i
        return comb(top, (k - 2) * z2 - i)
    if family == "classic":
        if "mu" in p:
            mu = _mu_arg(p["mu"])
            _check_hypotheses(family, mu)
            # rectangle: x_0 columns, y_0 rows (m = 0 spans the whole staircase)
            return hook_length_count(y_m(mu, 0), x_m(mu, 0))
        return hook_length_count(p["rows"], p["cols"])
    if family == "catalan":
        k = p["k"]
        _need(k >= 3, "catalan family needs k >= 3")
        return catalan(k - 1) - 1
    if family == "quadric":
        return 2 * rank4_quadric_degree(p["k"])
    raise DomainError(f"unknown family {family!r}")


def quadric_sum(k: int) -> int:
    """``2 + sum of chain counts`` over the quadric splitting types (recurrence side)."""
    return 2 + sum(count_maximal_chains(c_vector_of_mu(mu)) for mu in quadric_mus(k))


_VARIANTS = {
    "four": ("equal", "shifted"),
    "fibonacci": ("equal", "shifted"),
    "six2": ("equal", "shifted", "split"),
    "six3": ("equal", "low", "high", "spread"),
}


def family_grid(family: str, size: int):
    """Parameter dicts covering a family up to ``size``.

    ``size`` bounds ``z`` for the z-families, ``-size <= mu_i`` for the
    splitting type families, ``z1`` for the lemma and ``k`` for catalan and
    quadric.  Points outside a family's hypotheses are skipped.
    """
    from itertools import combinations_with_replacement

    def ok(p):
        try:
            family_vector(family, **p) if family != "quadric" else None
        except DomainError:
            return False
        return True

    if family == "onecol":
        pts = [dict(k=k, z=z) for k in range(2, 8) for z in range(size + 1)]
    elif family in _VARIANTS:
        pts = [dict(z=z, variant=v) for z in range(1, size + 1) for v in _VARIANTS[family]]
    elif family == "trigonal":
        pts = [dict(mu=m) for m in combinations_with_replacement(range(-size, 1), 3)]
    elif family == "onerowonecol":
        pts = [
            dict(mu=m)
            for k in range(3, 6)
            for m in combinations_with_replacement(range(-size, 1), k)
        ]
    elif family == "onerowonecol-lemma":
        pts = [
            dict(k=k, z1=z1, z2=z2, i=i, j=j)
            for k in range(3, 7)
            for z1 in range(size + 1)
            for z2 in range(z1 + 1)
            for i in range(k - 1)
            for j in range(k)
        ]
    elif family == "classic":
        pts = [
            dict(mu=m)
            for k in range(2, 6)
            for m in combinations_with_replacement(range(-2, 1), k)
        ]
    elif family == "catalan":
        pts = [dict(k=k) for k in range(3, size + 1)]
    elif family == "quadric":
        pts = [dict(k=k) for k in range(4, size + 1)]
    else:
        raise DomainError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    return [p for p in pts if ok(p)]


def recurrence_alpha(family: str, **p) -> int:
    if family == "quadric":
        return quadric_sum(p["k"])
    return count_maximal_chains(family_vector(family, **p))

"""Finite-variable symmetric polynomials, Hall-Littlewood P_d, skip
compositions and Demazure characters (key polynomials)."""

from __future__ import annotations

from collections.abc import Sequence
from itertools import combinations, permutations
from math import prod

from .combinat import partitions
from .heckeops import RelationRecord, hecke_T, isobaric
from .polyring import MPoly
from .qfield import ONE, ZERO, Q, QRat

__all__ = [
    "monomial_sym",
    "elementary_sym",
    "elementary_sym_eval",
    "homogeneous_sym",
    "homogeneous_sym_eval",
    "power_sum",
    "hall_littlewood_P",
    "hall_littlewood_P_gf",
    "check_closure",
    "skip_composition",
    "reverse_composition",
    "demazure_character",
]


def monomial_sym(lam: Sequence[int], i: int, n: int | None = None) -> MPoly:
    """m_λ(x_1..x_i), embedded in n >= i variables; zero if ℓ(λ) > i."""
    n = i if n is None else n
    lam = tuple(p for p in lam if p)
    if len(lam) > i:
        return MPoly.zero(n)
    pad = (0,) * (n - i)
    padded = lam + (0,) * (i - len(lam))
    return MPoly._raw(n, {tuple(e) + pad: ONE for e in set(permutations(padded))})


def elementary_sym(d: int, n: int) -> MPoly:
    """e_d(x_1..x_n)."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    return monomial_sym((1,) * d, n) if d else MPoly.constant(n, 1)


def homogeneous_sym(d: int, i: int, n: int | None = None) -> MPoly:
    """h_d(x_1..x_i) as the sum of all m_λ, λ ⊢ d."""
    n = i if n is None else n
    out = MPoly.zero(n)
    for lam in partitions(d):
        out = out + monomial_sym(lam, i, n)
    return out


def power_sum(d: int, i: int, n: int | None = None) -> MPoly:
    """p_d(x_1..x_i)."""
    return monomial_sym((d,), i, n)


def homogeneous_sym_eval(d: int, values: Sequence) -> QRat:
    """h_d at scalar arguments, via h_d(a_1..a_r) = h_d(a_1..a_{r-1}) + a_r h_{d-1}(a_1..a_r)."""
    if d < 0:
        return ZERO
    vals = [v if isinstance(v, QRat) else QRat(v) for v in values]
    # row[j] = h_j over the prefix processed so far
    row = [ONE] + [ZERO] * d
    for a in vals:
        for j in range(1, d + 1):
            row[j] = row[j] + a * row[j - 1]
    return row[d]


def elementary_sym_eval(d: int, values: Sequence) -> QRat:
    """e_d at scalar arguments by direct expansion over d-subsets."""
    if d < 0 or d > len(values):
        return ZERO
    vals = [v if isinstance(v, QRat) else QRat(v) for v in values]
    total = ZERO
    for sub in combinations(vals, d):
        total = total + prod(sub, start=ONE)
    return total


def hall_littlewood_P(d: int, i: int, n: int | None = None) -> MPoly:
    """P_d(x_1..x_i; q) = sum over λ ⊢ d of (1-q)^(ℓ(λ)-1) m_λ(x_1..x_i)."""
    n = i if n is None else n
    if d < 1 or not 1 <= i <= n:
        raise ValueError("need d >= 1 and 1 <= i <= n")
    one_minus_q = ONE - Q
    out = MPoly.zero(n)
    for lam in partitions(d):
        if len(lam) > i:
            continue
        out = out + monomial_sym(lam, i, n).scale(one_minus_q ** (len(lam) - 1))
    return out


def hall_littlewood_P_gf(d: int, i: int, n: int | None = None) -> MPoly:
    """P_d(x_1..x_i; q) from the generating function

        sum_d (1-q) P_d t^d = prod_j (1 - q x_j t) / (1 - x_j t),

    expanded as a power series in t truncated at t^d.
    """
    n = i if n is None else n
    if d < 1:
        raise ValueError("need d >= 1")
    # series[j] is the MPoly coefficient of t^j
    series = [MPoly.constant(n, 1)] + [MPoly.zero(n)] * d
    for j in range(1, i + 1):
        x = MPoly.variable(n, j)
        geom = [x**e for e in range(d + 1)]  # 1/(1 - x t)
        factor = [geom[0]] + [geom[e] - geom[e - 1].scale(Q) * x for e in range(1, d + 1)]
        series = [
            sum((series[a] * factor[e - a] for a in range(e + 1)), MPoly.zero(n))
            for e in range(d + 1)
        ]
    return series[d].scale((ONE - Q).inverse())


def check_closure(i: int, k: int, n: int) -> RelationRecord:
    """T_i P_k(x_1..x_i) = P_k(x_1..x_{i+1}) - P_k(x_1..x_i) + q P_k(x_1..x_{i-1}),
    with the last term absent for i = 1."""
    if not 1 <= i < n:
        raise IndexError(f"need 1 <= i < n, got i = {i}, n = {n}")
    lhs = hecke_T(i, hall_littlewood_P(k, i, n))
    rhs = hall_littlewood_P(k, i + 1, n) - hall_littlewood_P(k, i, n)
    if i > 1:
        rhs = rhs + hall_littlewood_P(k, i - 1, n).scale(Q)
    return RelationRecord(f"closure T{i} P{k}", f"n={n}", str(lhs), str(rhs), lhs == rhs)


def skip_composition(S, n: int) -> tuple[int, ...]:
    """γ(S): entry s_j - j + 1 at position s_j (S sorted), zero elsewhere."""
    S = sorted(S)
    if S and not (1 <= S[0] and S[-1] <= n) or len(set(S)) != len(S):
        raise ValueError(f"{S} is not a subset of [{n}]")
    g = [0] * n
    for j, s in enumerate(S, start=1):
        g[s - 1] = s - j + 1
    return tuple(g)


def reverse_composition(gamma: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(gamma))


_KEY_CACHE: dict = {}


def demazure_character(gamma: Sequence[int], ascent: str = "leftmost") -> MPoly:
    """Key polynomial κ_γ.

    κ_γ = x^γ when γ is weakly decreasing; otherwise, for an ascent
    γ_i < γ_{i+1}, κ_γ = π_i κ_{γ s_i}.  ``ascent`` picks the leftmost (default)
    or rightmost ascent; the two must agree.
    """
    gamma = tuple(gamma)
    key = (gamma, ascent)
    hit = _KEY_CACHE.get(key)
    if hit is not None:
        return hit
    n = len(gamma)
    ascents = [i for i in range(1, n) if gamma[i - 1] < gamma[i]]
    if not ascents:
        out = MPoly.monomial(gamma)
    else:
        i = ascents[0] if ascent == "leftmost" else ascents[-1]
        swapped = list(gamma)
        swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
        out = isobaric(i, demazure_character(swapped, ascent))
    _KEY_CACHE[key] = out
    return out

"""Operators s_i, ∂_i, π_i, π̄_i and the Hecke generators T_i on F[x1..xn].

T_i acts by  T_i f = q s_i(f) + (1 - q) π̄_i(f),  with π̄_i = π_i - 1 and
π_i f = ∂_i(x_i f).  Relation checkers return plain report records so they
can be serialized as JSON.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import asdict, dataclass

from .combinat import perm_from_word, perm_inversions
from .polyring import NEGLEX, MPoly, multivariate_division
from .qfield import ONE, Q

__all__ = [
    "ReducedWord",
    "RelationRecord",
    "swap_action",
    "divided_difference",
    "isobaric",
    "isobaric_bar",
    "isobaric_bar_closed_form",
    "hecke_T",
    "hecke_word",
    "reduced_words",
    "check_hecke_relations",
    "check_leibniz",
]

ONE_MINUS_Q = ONE - Q


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise IndexError(f"operator index {i} out of range for n = {n}")


def swap_action(i: int, f: MPoly) -> MPoly:
    """s_i: exchange x_i and x_{i+1}."""
    _check_index(i, f.nvars)
    out = {}
    for m, c in f.terms.items():
        e = list(m)
        e[i - 1], e[i] = e[i], e[i - 1]
        out[tuple(e)] = c
    return MPoly._raw(f.nvars, out)


def divided_difference(i: int, f: MPoly) -> MPoly:
    """∂_i f = (f - s_i f) / (x_i - x_{i+1}), by exact division."""
    _check_index(i, f.nvars)
    num = f - swap_action(i, f)
    if num.is_zero():
        return num
    lin = MPoly.variable(f.nvars, i) - MPoly.variable(f.nvars, i + 1)
    (quot,), rem = multivariate_division(num, [lin], NEGLEX)
    if not rem.is_zero():
        raise ArithmeticError(f"divided difference left remainder {rem}")
    return quot


def isobaric(i: int, f: MPoly) -> MPoly:
    """π_i f = ∂_i(x_i f)."""
    return divided_difference(i, MPoly.variable(f.nvars, i) * f)


def isobaric_bar(i: int, f: MPoly) -> MPoly:
    """π̄_i = π_i - 1."""
    return isobaric(i, f) - f


def isobaric_bar_closed_form(i: int, f: MPoly) -> MPoly:
    """π̄_i via its three-case formula on monomials m x_i^a x_{i+1}^b.

    Kept as an independent check on :func:`isobaric_bar`.
    """
    _check_index(i, f.nvars)
    acc: dict = {}
    for m, c in f.terms.items():
        a, b = m[i - 1], m[i]
        if a == b:
            continue
        if a > b:
            pairs, sign = [(a - j, b + j) for j in range(1, a - b + 1)], c
        else:
            pairs, sign = [(a + j, b - j) for j in range(0, b - a)], -c
        for aa, bb in pairs:
            e = list(m)
            e[i - 1], e[i] = aa, bb
            e = tuple(e)
            acc[e] = acc[e] + sign if e in acc else sign
    return MPoly._raw(f.nvars, {m: c for m, c in acc.items() if c})


def hecke_T(i: int, f: MPoly) -> MPoly:
    """T_i f = q s_i(f) + (1 - q) π̄_i(f)."""
    return swap_action(i, f).scale(Q) + isobaric_bar(i, f).scale(ONE_MINUS_Q)


@dataclass(frozen=True)
class ReducedWord:
    """Letters i_1..i_l of a reduced expression s_{i_1} ... s_{i_l}."""

    letters: tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for i in self.letters:
            _check_index(i, self.n)
        w = perm_from_word(self.letters, self.n)
        if perm_inversions(w) != len(self.letters):
            raise ValueError(f"word {self.letters} is not reduced")

    @property
    def permutation(self) -> tuple[int, ...]:
        return perm_from_word(self.letters, self.n)

    def __len__(self) -> int:
        return len(self.letters)


def hecke_word(word: ReducedWord | Sequence[int], f: MPoly) -> MPoly:
    """T_w f = T_{i_1}(T_{i_2}(... T_{i_l}(f)))."""
    if not isinstance(word, ReducedWord):
        word = ReducedWord(tuple(word), f.nvars)
    for i in reversed(word.letters):
        f = hecke_T(i, f)
    return f


def reduced_words(w: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All reduced words of w (brute force; small n only)."""
    n = len(w)
    if perm_inversions(w) == 0:
        return [()]
    out = []
    for i in range(1, n):
        # w = w' s_i with l(w') = l(w) - 1 exactly when i is a descent of w
        if w[i - 1] > w[i]:
            wp = list(w)
            wp[i - 1], wp[i] = wp[i], wp[i - 1]
            out.extend(word + (i,) for word in reduced_words(tuple(wp)))
    return out


@dataclass
class RelationRecord:
    relation: str
    witness: str
    lhs: str
    rhs: str
    passed: bool

    def as_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d


def check_hecke_relations(n: int, sample: Sequence[MPoly], action=None) -> list[RelationRecord]:
    """Check the quadratic, commutation and braid relations on each sample.

    Commutation is checked for |i - j| > 1 (the presentation this is taken
    from prints ``|i - j| > i``, a misprint).  ``action(i, v)`` defaults to
    :func:`hecke_T`; any vector type with ``+``, ``-`` and scalar ``*`` works.
    """
    act = action or hecke_T
    records: list[RelationRecord] = []
    for f in sample:
        for i in range(1, n):
            tf = act(i, f)
            # (T_i + 1)(T_i - q) f = T_i T_i f - q T_i f + T_i f - q f
            lhs = act(i, tf) + tf * (ONE - Q) - f * Q
            records.append(RelationRecord(f"quadratic T{i}", str(f), str(lhs), "0", lhs.is_zero()))
        for i in range(1, n):
            for j in range(i + 2, n):
                a, b = act(i, act(j, f)), act(j, act(i, f))
                records.append(RelationRecord(f"commute T{i}T{j}", str(f), str(a), str(b), a == b))
        for i in range(1, n - 1):
            a = act(i, act(i + 1, act(i, f)))
            b = act(i + 1, act(i, act(i + 1, f)))
            records.append(RelationRecord(f"braid T{i}T{i + 1}T{i}", str(f), str(a), str(b), a == b))
    return records


def check_leibniz(i: int, f: MPoly, g: MPoly) -> RelationRecord:
    """T_i(fg) = (s_i f)(T_i g) + (1 - q)(π̄_i f) g."""
    lhs = hecke_T(i, f * g)
    rhs = swap_action(i, f) * hecke_T(i, g) + (isobaric_bar(i, f) * g).scale(ONE_MINUS_Q)
    return RelationRecord(f"leibniz T{i}", f"f={f}; g={g}", str(lhs), str(rhs), lhs == rhs)

"""Graded Frobenius images, matrices of the Hecke action on the quotient
R_{n,k} = F[x_n]/I_{n,k}, and q = 1 character comparisons."""

from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .combinat import (
    TPoly,
    class_representative,
    des_maj,
    enumerate_syt,
    partitions,
    q_binomial,
    reduced_word,
)
from .groebner import GroebnerBasis, normal_form, standard_monomials
from .heckeops import hecke_T
from .osp import enumerate_osp
from .polyring import MPoly
from .qfield import ZERO, QRat

__all__ = [
    "GradedSchurExpansion",
    "GradedMatrixAction",
    "graded_frobenius_formula",
    "hilbert_from_frobenius",
    "num_syt",
    "build_matrix_action",
    "character_at_q1",
    "expected_character",
    "murnaghan_nakayama",
    "permutation_character_osp",
    "CharacterRecord",
    "character_records",
    "character_tsv",
]


def _partition_label(lam: Sequence[int]) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


@dataclass
class GradedSchurExpansion:
    """Σ_λ c_λ(t) s_λ with c_λ in N[t]."""

    coefficients: dict[tuple[int, ...], TPoly]

    def __post_init__(self):
        self.coefficients = {tuple(lam): c for lam, c in self.coefficients.items() if c}
        for lam, c in self.coefficients.items():
            if any(a < 0 for a in c.coeffs):
                raise ValueError(f"negative multiplicity at {lam}: {c}")

    def __getitem__(self, lam) -> TPoly:
        return self.coefficients.get(tuple(lam), TPoly())

    def to_json(self) -> str:
        ordered = sorted(self.coefficients.items(), reverse=True)
        return json.dumps({_partition_label(lam): str(c) for lam, c in ordered}, indent=1)

    def __str__(self) -> str:
        ordered = sorted(self.coefficients.items(), reverse=True)
        return " + ".join(f"({c}) s{_partition_label(lam)}" for lam, c in ordered) or "0"


def graded_frobenius_formula(n: int, k: int) -> GradedSchurExpansion:
    """Σ_{T ∈ SYT(n)} t^maj(T) [n - des(T) - 1 choose n - k]_t s_sh(T)."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    out: dict[tuple[int, ...], TPoly] = {}
    for T in enumerate_syt(n):
        _, des, maj = des_maj(T)
        term = TPoly.monomial(maj) * q_binomial(n - des - 1, n - k)
        out[T.shape] = out.get(T.shape, TPoly()) + term
    return GradedSchurExpansion(out)


def num_syt(lam: Sequence[int]) -> int:
    """f^λ by the hook length formula."""
    lam = [p for p in lam if p]
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(sum(lam)) // hooks


def hilbert_from_frobenius(E: GradedSchurExpansion) -> TPoly:
    total = TPoly()
    for lam, c in E.coefficients.items():
        total = total + c * num_syt(lam)
    return total


# ---------------------------------------------------------------------------
# matrices of T_i on standard monomials


@dataclass
class GradedMatrixAction:
    """``matrices[i][d]`` is the matrix of T_i on the degree-d standard monomials;
    column j holds the coordinates of T_i applied to ``bases[d][j]``."""

    n: int
    bases: dict[int, list[tuple]]
    matrices: dict[int, dict[int, list[list[QRat]]]] = field(default_factory=dict)

    def degrees(self) -> list[int]:
        return sorted(self.bases)


def build_matrix_action(n: int, k: int, G: GroebnerBasis) -> GradedMatrixAction:
    """Matrices of f -> NF(T_i f, G) in the standard monomial basis, degree by degree."""
    if G.nvars != n:
        raise ValueError("basis lives in the wrong polynomial ring")
    bases: dict[int, list[tuple]] = {}
    for m in standard_monomials(G):
        bases.setdefault(sum(m), []).append(m)
    action = GradedMatrixAction(n, bases)
    for i in range(1, n):
        per_degree = {}
        for d, basis in bases.items():
            index = {m: a for a, m in enumerate(basis)}
            M = [[ZERO] * len(basis) for _ in basis]
            for col, m in enumerate(basis):
                image = normal_form(hecke_T(i, MPoly.monomial(m)), G)
                for mono, c in image.terms.items():
                    if sum(mono) != d:
                        raise AssertionError(f"T_{i} moved degree {d} to {sum(mono)}")
                    M[index[mono]][col] = c
            per_degree[d] = M
        action.matrices[i] = per_degree
    return action


def _specialize(M: list[list[QRat]], q0) -> list[list[Fraction]]:
    # PoleError propagates: a pole at q0 must abort the comparison
    return [[c.eval(q0) for c in row] for row in M]


def _matmul(A: list[list[Fraction]], B: list[list[Fraction]]) -> list[list[Fraction]]:
    cols = list(zip(*B))
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in A]


def character_at_q1(A: GradedMatrixAction, w: Sequence[int]) -> TPoly:
    """Σ_d trace(M_{i_1} ... M_{i_l} at q = 1) t^d for a reduced word i_1..i_l of w."""
    w = tuple(w)
    if sorted(w) != list(range(1, A.n + 1)):
        raise ValueError(f"{w} is not a permutation of [{A.n}]")
    word = reduced_word(w)
    coeffs = []
    for d in range(max(A.bases) + 1):
        size = len(A.bases.get(d, []))
        prod = [[Fraction(int(r == c)) for c in range(size)] for r in range(size)]
        for i in word:
            prod = _matmul(prod, _specialize(A.matrices[i][d], 1))
        tr = sum((prod[r][r] for r in range(size)), Fraction(0))
        if tr.denominator != 1:
            raise ArithmeticError(f"non-integral trace {tr} in degree {d}")
        coeffs.append(int(tr))
    return TPoly(coeffs)


# ---------------------------------------------------------------------------
# symmetric group characters


def _beta(lam: Sequence[int]) -> tuple[int, ...]:
    lam = [p for p in lam if p]
    m = len(lam)
    return tuple(sorted(lam[i] + (m - 1 - i) for i in range(m)))


@lru_cache(maxsize=None)
def _mn(beta: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    bset = set(beta)
    total = 0
    for b in beta:
        c = b - r
        if c < 0 or c in bset:
            continue
        # removing an r-rim hook moves a bead from b down to c
        height = sum(1 for x in beta if c < x < b)
        new = tuple(sorted((bset - {b}) | {c}))
        total += (-1) ** height * _mn(new, rest)
    return total


def murnaghan_nakayama(lam: Sequence[int], mu: Sequence[int]) -> int:
    """χ^λ at the class of cycle type μ, by border-strip removal."""
    if sum(lam) != sum(mu):
        raise ValueError(f"|{tuple(lam)}| != |{tuple(mu)}|")
    return _mn(_beta(lam), tuple(p for p in mu if p))


def expected_character(E: GradedSchurExpansion, mu: Sequence[int]) -> TPoly:
    """Σ_λ c_λ(t) χ^λ(μ)."""
    total = TPoly()
    for lam, c in E.coefficients.items():
        total = total + c * murnaghan_nakayama(lam, mu)
    return total


def permutation_character_osp(n: int, k: int, w: Sequence[int]) -> int:
    """Number of σ ∈ OP_{n,k} with w(σ) = σ."""
    return sum(1 for s in enumerate_osp(n, k) if s.relabel(w) == s)


@dataclass
class CharacterRecord:
    cls: tuple[int, ...]
    degree: int
    trace: int
    expected: int
    passed: bool


def character_records(A: GradedMatrixAction, E: GradedSchurExpansion) -> list[CharacterRecord]:
    """Degree-by-degree comparison on one representative of every class."""
    out = []
    for mu in partitions(A.n):
        got = character_at_q1(A, class_representative(mu))
        want = expected_character(E, mu)
        top = max(got.degree(), want.degree(), 0)
        for d in range(top + 1):
            out.append(CharacterRecord(mu, d, got[d], want[d], got[d] == want[d]))
    return out


def character_tsv(records: Sequence[CharacterRecord]) -> str:
    lines = ["class\tdegree\ttrace\texpected\tpass"]
    for r in records:
        lines.append(f"{_partition_label(r.cls)}\t{r.degree}\t{r.trace}\t{r.expected}\t{str(r.passed).lower()}")
    return "\n".join(lines) + "\n"


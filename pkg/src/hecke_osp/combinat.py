"""Partitions, tableaux, t-analogs, staircases and the monomial families
(Artin, generalized Garsia-Stanton) that index bases of the quotient rings."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb, factorial

__all__ = [
    "TPoly",
    "SYTableau",
    "partitions",
    "stirling2",
    "osp_count",
    "enumerate_syt",
    "syt_of_shape",
    "des_maj",
    "t_integer",
    "t_factorial",
    "q_binomial",
    "staircases",
    "artin_monomials",
    "gs_monomial",
    "gs_monomials",
    "perm_descents",
    "perm_inversions",
    "perm_compose",
    "perm_inverse",
    "reduced_word",
    "perm_from_word",
    "cycle_type",
    "class_representative",
]


# ---------------------------------------------------------------------------
# integer polynomials in the grading variable t


class TPoly:
    """Integer polynomial in t; ``coeffs[d]`` is the coefficient of t^d."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, d: int, c: int = 1) -> TPoly:
        return cls([0] * d + [c])

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other) -> TPoly:
        if isinstance(other, int):
            other = TPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return TPoly([self[d] + other[d] for d in range(n)])

    __radd__ = __add__

    def __neg__(self) -> TPoly:
        return TPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> TPoly:
        return self + (-other)

    def __mul__(self, other) -> TPoly:
        if isinstance(other, int):
            return TPoly([c * other for c in self.coeffs])
        out = [0] * max(0, len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return TPoly(out)

    __rmul__ = __mul__

    def exact_div(self, other: TPoly) -> TPoly:
        """Quotient of an exact division; raises if a remainder is left."""
        if not other:
            raise ZeroDivisionError("division by the zero t-polynomial")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            if any(rem):
                raise ArithmeticError("t-polynomial division is not exact")
            return TPoly()
        quot = [0] * (dq + 1)
        for s in range(dq, -1, -1):
            c = rem[s + len(other.coeffs) - 1]
            if c % lead:
                raise ArithmeticError("t-polynomial division is not exact")
            c //= lead
            quot[s] = c
            for j, b in enumerate(other.coeffs):
                rem[s + j] -= c * b
        if any(rem):
            raise ArithmeticError("t-polynomial division is not exact")
        return TPoly(quot)

    def __call__(self, t0):
        return sum(c * t0**d for d, c in enumerate(self.coeffs))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = TPoly([other])
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if d == 0 else "t" if d == 1 else f"t^{d}"
            body = str(abs(c)) if not mono else mono if abs(c) == 1 else f"{abs(c)}{mono}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"TPoly({list(self.coeffs)})"

    @classmethod
    def parse(cls, text: str) -> TPoly:
        s = text.replace(" ", "")
        if s == "0":
            return cls()
        out: dict[int, int] = {}
        for tok in s.replace("-", "+-").split("+"):
            if not tok:
                continue
            sign = -1 if tok.startswith("-") else 1
            tok = tok.lstrip("-")
            if "t" in tok:
                c, _, e = tok.partition("t")
                d = int(e[1:]) if e.startswith("^") else 1
                c = int(c) if c else 1
            else:
                c, d = int(tok), 0
            out[d] = out.get(d, 0) + sign * c
        top = max(out) if out else -1
        return cls([out.get(d, 0) for d in range(top + 1)])


def t_integer(n: int) -> TPoly:
    """[n]_t = 1 + t + ... + t^(n-1)."""
    return TPoly([1] * max(n, 0))


def t_factorial(n: int) -> TPoly:
    out = TPoly([1])
    for j in range(1, n + 1):
        out = out * t_integer(j)
    return out


@lru_cache(maxsize=None)
def q_binomial(a: int, b: int) -> TPoly:
    """Gaussian binomial [a choose b]_t; zero when a < b or b < 0."""
    if b < 0 or a < b:
        return TPoly()
    if b == 0 or b == a:
        return TPoly([1])
    # [a, b] = [a-1, b-1] + t^b [a-1, b]
    return q_binomial(a - 1, b - 1) + TPoly.monomial(b) * q_binomial(a - 1, b)


# ---------------------------------------------------------------------------
# partitions and counting


def partitions(n: int, max_part: int | None = None) -> list[tuple[int, ...]]:
    """All partitions of n as weakly decreasing tuples, in reverse lex order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling numbers of the second kind via S(n,k) = k S(n-1,k) + S(n-1,k-1)."""
    if n == k:
        return 1
    if n == 0 or k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def osp_count(n: int, k: int) -> int:
    """|OP_{n,k}| = k! S(n,k)."""
    return factorial(k) * stirling2(n, k)


# ---------------------------------------------------------------------------
# standard Young tableaux


@dataclass(frozen=True)
class SYTableau:
    """Standard Young tableau in English notation (rows top to bottom)."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        entries = sorted(x for row in self.rows for x in row)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError("entries must be exactly 1..n")
        for r, row in enumerate(self.rows):
            if not row:
                raise ValueError("empty row")
            if r and len(row) > len(self.rows[r - 1]):
                raise ValueError("row lengths must weakly decrease")
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError("rows must increase")
            if r and any(row[c] <= self.rows[r - 1][c] for c in range(len(row))):
                raise ValueError("columns must increase")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def row_of(self, x: int) -> int:
        for r, row in enumerate(self.rows):
            if x in row:
                return r
        raise KeyError(x)

    def __str__(self) -> str:
        return "/".join(" ".join(map(str, r)) for r in self.rows)


def syt_of_shape(shape: tuple[int, ...]) -> list[SYTableau]:
    """All standard fillings of ``shape``, built by placing n at a corner."""
    n = sum(shape)
    out: list[SYTableau] = []

    def rec(sh: tuple[int, ...], m: int, placed: dict):
        if m == 0:
            rows = tuple(tuple(placed[(r, c)] for c in range(shape[r])) for r in range(len(shape)))
            out.append(SYTableau(rows))
            return
        for r, length in enumerate(sh):
            if length and (r + 1 == len(sh) or sh[r + 1] < length):
                placed[(r, length - 1)] = m
                rec(sh[:r] + (length - 1,) + sh[r + 1 :], m - 1, placed)
                del placed[(r, length - 1)]

    rec(tuple(shape), n, {})
    out.sort(key=lambda t: t.rows)
    return out


def enumerate_syt(n: int) -> list[SYTableau]:
    """Every standard Young tableau with n boxes, over all shapes of n."""
    if n < 1:
        raise ValueError("n must be positive")
    return [t for lam in partitions(n) for t in syt_of_shape(lam)]


def des_maj(T: SYTableau) -> tuple[frozenset[int], int, int]:
    """Descent set (i strictly above i+1), its size and its sum."""
    rows = {x: r for r, row in enumerate(T.rows) for x in row}
    des = frozenset(i for i in range(1, T.size) if rows[i] < rows[i + 1])
    return des, len(des), sum(des)


# ---------------------------------------------------------------------------
# staircases and monomial bases


def staircases(n: int, k: int) -> list[tuple[int, ...]]:
    """Distinct shuffles of (k-1, ..., 1, 0) with n-k copies of k-1.

    Returned in decreasing lexicographic order.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    desc = list(range(k - 1, -1, -1))
    seen = set()
    for pos in combinations(range(n), k):
        seq = [k - 1] * n
        for p, v in zip(pos, desc):
            seq[p] = v
        seen.add(tuple(seq))
    return sorted(seen, reverse=True)


def artin_monomials(n: int, k: int) -> list[tuple[int, ...]]:
    """Exponent vectors componentwise below some (n,k)-staircase."""
    found: set[tuple[int, ...]] = set()
    for st in staircases(n, k):
        found.update(product(*(range(a + 1) for a in st)))
    return sorted(found, key=lambda m: (sum(m), m[::-1]))


def perm_descents(w: tuple[int, ...]) -> list[int]:
    """1-based positions i with w_i > w_{i+1}."""
    return [i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]]


def gs_monomial(w: tuple[int, ...]) -> tuple[int, ...]:
    """Exponent vector of gs_w = prod over descents i of x_{w_1} ... x_{w_i}."""
    e = [0] * len(w)
    for i in perm_descents(w):
        for j in range(i):
            e[w[j] - 1] += 1
    return tuple(e)


def gs_monomials(n: int, k: int) -> list[tuple[int, ...]]:
    """Generalized Garsia-Stanton monomials
    gs_w * x_{w_1}^{i_1} ... x_{w_{n-k}}^{i_{n-k}} with k - des(w) > i_1 >= ... >= 0."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    out: set[tuple[int, ...]] = set()
    m = n - k
    for w in permutations(range(1, n + 1)):
        top = k - len(perm_descents(w))
        if top <= 0 and m > 0:
            continue
        base = gs_monomial(w)
        for seq in _weakly_decreasing(m, top - 1):
            e = list(base)
            for j, a in enumerate(seq):
                e[w[j] - 1] += a
            out.add(tuple(e))
    return sorted(out, key=lambda e: (sum(e), e[::-1]))


def _weakly_decreasing(length: int, bound: int):
    # sequences bound >= i_1 >= ... >= i_length >= 0
    if length == 0:
        yield ()
        return
    for first in range(bound, -1, -1):
        for rest in _weakly_decreasing(length - 1, first):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# permutations in one-line notation (1-based values)


def perm_inversions(w: tuple[int, ...]) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def perm_compose(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    """(u v)(x) = u(v(x))."""
    return tuple(u[v[i] - 1] for i in range(len(v)))


def perm_inverse(w: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(w)
    for i, x in enumerate(w, start=1):
        inv[x - 1] = i
    return tuple(inv)


def perm_from_word(word, n: int) -> tuple[int, ...]:
    """The permutation s_{i_1} s_{i_2} ... s_{i_l}."""
    w = list(range(1, n + 1))
    for i in word:
        # right multiplication by s_i swaps positions i, i+1
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def reduced_word(w: tuple[int, ...]) -> tuple[int, ...]:
    """A reduced word for w found by bubble sorting."""
    w = list(w)
    word: list[int] = []
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                break
        else:
            break
    return tuple(reversed(word))


def cycle_type(w: tuple[int, ...]) -> tuple[int, ...]:
    seen = set()
    lengths = []
    for start in range(1, len(w) + 1):
        if start in seen:
            continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = w[x - 1]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def class_representative(mu: tuple[int, ...]) -> tuple[int, ...]:
    """Standard permutation of cycle type mu: consecutive cycles (1..mu_1)(...)."""
    n = sum(mu)
    w = [0] * n
    start = 1
    for length in mu:
        for j in range(length):
            x = start + j
            w[x - 1] = start + (j + 1) % length
        start += length
    return tuple(w)


def binomial(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0

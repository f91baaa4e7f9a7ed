"""Ordered set partitions, the three-case Hecke action on F[OP_{n,k}], and
the point loci attached to them (φ, Y_{n,k}^{(q)}, and quantization)."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .qfield import ONE, ZERO, Q, QRat

__all__ = [
    "OrderedSetPartition",
    "OSPVector",
    "enumerate_osp",
    "osp_hecke_T",
    "osp_swap",
    "phi",
    "generate_Y",
    "is_Y_point",
    "quantize_point",
    "quantize_points",
    "default_alpha",
    "parse_alpha",
]


@dataclass(frozen=True, order=True)
class OrderedSetPartition:
    """Blocks (B_1 | ... | B_k) of [n], each stored sorted."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        letters = sorted(x for b in blocks for x in b)
        if any(not b for b in blocks):
            raise ValueError("blocks must be nonempty")
        if letters != list(range(1, len(letters) + 1)):
            raise ValueError(f"blocks {blocks} do not partition [n]")

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def k(self) -> int:
        return len(self.blocks)

    def block_of(self, x: int) -> int:
        """0-based index of the block containing x."""
        for r, b in enumerate(self.blocks):
            if x in b:
                return r
        raise KeyError(x)

    def relabel(self, w: Sequence[int]) -> OrderedSetPartition:
        """Apply the permutation w (one-line, 1-based) to every letter."""
        return OrderedSetPartition(tuple(tuple(w[x - 1] for x in b) for b in self.blocks))

    def __str__(self) -> str:
        sep = "" if self.n <= 9 else " "
        return "(" + "|".join(sep.join(map(str, b)) for b in self.blocks) + ")"

    @classmethod
    def parse(cls, text: str) -> OrderedSetPartition:
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ValueError(f"bad ordered set partition {text!r}")
        blocks = []
        for chunk in body[1:-1].split("|"):
            chunk = chunk.strip()
            blocks.append(tuple(int(t) for t in chunk.split()) if " " in chunk else tuple(int(c) for c in chunk))
        return cls(tuple(blocks))


def enumerate_osp(n: int, k: int) -> list[OrderedSetPartition]:
    """All of OP_{n,k}, via surjections [n] -> [k] (letter i goes to block f(i))."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    out = []
    for f in product(range(k), repeat=n):
        if len(set(f)) != k:
            continue
        blocks = [[] for _ in range(k)]
        for letter, r in enumerate(f, start=1):
            blocks[r].append(letter)
        out.append(OrderedSetPartition(tuple(tuple(b) for b in blocks)))
    out.sort()
    return out


class OSPVector:
    """Finite F-linear combination of ordered set partitions."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict | None = None):
        self.coeffs = {s: c if isinstance(c, QRat) else QRat(c) for s, c in (coeffs or {}).items()}
        self.coeffs = {s: c for s, c in self.coeffs.items() if c}

    @classmethod
    def basis(cls, sigma: OrderedSetPartition) -> OSPVector:
        return cls({sigma: ONE})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: OSPVector) -> OSPVector:
        out = dict(self.coeffs)
        for s, c in other.coeffs.items():
            out[s] = out.get(s, ZERO) + c
        return OSPVector(out)

    def __neg__(self) -> OSPVector:
        return OSPVector({s: -c for s, c in self.coeffs.items()})

    def __sub__(self, other: OSPVector) -> OSPVector:
        return self + (-other)

    def __mul__(self, c) -> OSPVector:
        return OSPVector({s: v * c for s, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, OSPVector) and self.coeffs == other.coeffs

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"({c})*{s}" for s, c in sorted(self.coeffs.items()))

    __repr__ = __str__


def osp_swap(i: int, sigma: OrderedSetPartition) -> OrderedSetPartition:
    """s_i(σ): interchange the letters i and i+1."""
    swap = {i: i + 1, i + 1: i}
    return OrderedSetPartition(tuple(tuple(swap.get(x, x) for x in b) for b in sigma.blocks))


def _T_basis(i: int, sigma: OrderedSetPartition) -> dict:
    bi, bj = sigma.block_of(i), sigma.block_of(i + 1)
    if bj < bi:  # i+1 to the left of i
        return {osp_swap(i, sigma): Q, sigma: Q - ONE}
    if bj > bi:
        return {osp_swap(i, sigma): ONE}
    return {sigma: Q}


def osp_hecke_T(i: int, v: OSPVector | OrderedSetPartition) -> OSPVector:
    """Linear extension of the three-case rule for T_i on OP_{n,k}."""
    if isinstance(v, OrderedSetPartition):
        v = OSPVector.basis(v)
    out: dict = {}
    for sigma, c in v.coeffs.items():
        if not 1 <= i <= sigma.n - 1:
            raise IndexError(f"T_{i} undefined for n = {sigma.n}")
        for tau, a in _T_basis(i, sigma).items():
            out[tau] = out.get(tau, ZERO) + a * c
    return OSPVector(out)


# ---------------------------------------------------------------------------
# point loci


def default_alpha(k: int) -> list[Fraction]:
    return [Fraction(r) for r in range(1, k + 1)]


def parse_alpha(text: str) -> list[Fraction]:
    return [Fraction(t.strip()) for t in text.split(",") if t.strip()]


def _check_alpha(alpha: Sequence) -> list[Fraction]:
    alpha = [Fraction(a) for a in alpha]
    if len(set(alpha)) != len(alpha):
        raise ValueError("alpha entries must be distinct")
    if any(a == 0 for a in alpha):
        # q^j * 0 = 0 for every j, so blocks with label 0 would collide
        raise ValueError("alpha entries must be nonzero")
    return alpha


def _qpow_alpha(j: int, a: Fraction) -> QRat:
    return (Q**j) * QRat(a)


def phi(sigma: OrderedSetPartition, alpha: Sequence) -> tuple[QRat, ...]:
    """y_i = q^j α_r when i is the (j+1)-st smallest letter of block B_r."""
    alpha = _check_alpha(alpha)
    if len(alpha) != sigma.k:
        raise ValueError(f"need {sigma.k} alpha values, got {len(alpha)}")
    y: list[QRat | None] = [None] * sigma.n
    for r, block in enumerate(sigma.blocks):
        for j, letter in enumerate(block):
            y[letter - 1] = _qpow_alpha(j, alpha[r])
    return tuple(y)


def _decode(v: QRat, alpha: Sequence[Fraction]) -> tuple[int, int] | None:
    # (j, r) with v = q^j alpha_r, or None
    for r, a in enumerate(alpha):
        w = v / QRat(a)
        if w.den.is_one() and w.num.coeffs() and int(w.num.coeffs()[-1]) == 1:
            cs = [int(c) for c in w.num.coeffs()]
            if all(c == 0 for c in cs[:-1]):
                return len(cs) - 1, r
    return None


def is_Y_point(y: Sequence[QRat], alpha: Sequence) -> bool:
    """Check the four defining conditions of Y_{n,k}^{(q)} directly on values."""
    alpha = _check_alpha(alpha)
    decoded = [_decode(v, alpha) for v in y]
    if any(d is None for d in decoded):
        return False
    if len(set(y)) != len(y):
        return False
    values = set(y)
    if any(QRat(a) not in values for a in alpha):
        return False
    for idx, (j, r) in enumerate(decoded):
        if j > 0 and _qpow_alpha(j - 1, alpha[r]) not in y[:idx]:
            return False
    return True


def generate_Y(n: int, k: int, alpha: Sequence | None = None) -> list[tuple[QRat, ...]]:
    """Y_{n,k}^{(q)} by filtering candidate assignments with exponents j <= n-k.

    Independent of φ; the two constructions are compared in the tests.
    """
    alpha = _check_alpha(default_alpha(k) if alpha is None else alpha)
    if len(alpha) != k:
        raise ValueError("need exactly k alpha values")
    labels = [(j, r) for j in range(n - k + 1) for r in range(k)]
    values = {lab: _qpow_alpha(lab[0], alpha[lab[1]]) for lab in labels}
    out = []
    for cand in product(labels, repeat=n):
        # cheap structural pre-filter; the value-level validator decides
        if len(set(cand)) != n or len({r for j, r in cand if j == 0}) != k:
            continue
        y = tuple(values[lab] for lab in cand)
        if is_Y_point(y, alpha):
            out.append(y)
    return sorted(out, key=lambda p: tuple(str(c) for c in p))


def quantize_point(y: Sequence) -> tuple[QRat, ...]:
    """y_i -> q^(j-1) y_i when position i holds the j-th occurrence of y_i."""
    seen: dict = {}
    out = []
    for v in y:
        v = Fraction(v)
        j = seen.get(v, 0)
        seen[v] = j + 1
        out.append((Q**j) * QRat(v))
    return tuple(out)


def quantize_points(Y: Iterable[Sequence]) -> list[tuple[QRat, ...]]:
    return [quantize_point(y) for y in Y]

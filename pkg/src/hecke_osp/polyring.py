"""Sparse multivariate polynomials in x1..xn over Q(q).

Monomials are plain exponent tuples.  An :class:`MPoly` is a mapping from
exponent tuples to nonzero :class:`QRat` coefficients; it carries no term
order of its own, so every order-dependent query takes a :class:`TermOrder`.
"""

from __future__ import annotations

import heapq
import re
from collections.abc import Iterable, Iterator, Mapping, Sequence
from fractions import Fraction

from .qfield import ONE, ZERO, QRat, _balanced, parse_qrat

__all__ = [
    "Monomial",
    "TermOrder",
    "NEGLEX",
    "DEG_NEGLEX",
    "MPoly",
    "VariableCountError",
    "mono_mul",
    "mono_div",
    "mono_divides",
    "mono_lcm",
    "mono_degree",
    "leading_monomial",
    "top_component",
    "multivariate_division",
    "parse_mpoly",
]

Monomial = tuple  # tuple[int, ...] of length n


class VariableCountError(ValueError):
    """Operands live in polynomial rings with different numbers of variables."""


def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


class TermOrder:
    """One of the two supported monomial orders.

    ``neglex`` compares exponent vectors lexicographically from the *last*
    variable backwards, so x_n dominates.  ``deg-neglex`` compares total degree
    first and breaks ties by neglex.
    """

    __slots__ = ("name", "graded")

    def __init__(self, name: str):
        if name not in ("neglex", "deg-neglex"):
            raise ValueError(f"unknown term order {name!r}")
        self.name = name
        self.graded = name == "deg-neglex"

    def key(self, m: Monomial) -> tuple:
        if self.graded:
            return (sum(m),) + m[::-1]
        return m[::-1]

    def heap_key(self, m: Monomial) -> tuple:
        # min-heap key that pops the order-maximal monomial first
        return tuple(-x for x in self.key(m))

    def lt(self, a: Monomial, b: Monomial) -> bool:
        return self.key(a) < self.key(b)

    def max(self, monomials: Iterable[Monomial]) -> Monomial:
        return max(monomials, key=self.key)

    def sort(self, monomials: Iterable[Monomial], descending: bool = True) -> list:
        return sorted(monomials, key=self.key, reverse=descending)

    @classmethod
    def from_name(cls, name: str | TermOrder) -> TermOrder:
        if isinstance(name, TermOrder):
            return name
        return NEGLEX if name == "neglex" else DEG_NEGLEX if name == "deg-neglex" else cls(name)

    def __eq__(self, other) -> bool:
        return isinstance(other, TermOrder) and other.name == self.name

    def __hash__(self) -> int:
        return hash(self.name)

    def __repr__(self) -> str:
        return f"TermOrder({self.name!r})"

    def __str__(self) -> str:
        return self.name


NEGLEX = TermOrder("neglex")
DEG_NEGLEX = TermOrder("deg-neglex")


def _coerce_coeff(c) -> QRat:
    return c if isinstance(c, QRat) else QRat(c)


class MPoly:
    """Polynomial in ``nvars`` variables with coefficients in Q(q)."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping | None = None):
        self.nvars = nvars
        clean: dict = {}
        if terms:
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != nvars:
                    raise VariableCountError(f"monomial {m} does not have {nvars} exponents")
                c = _coerce_coeff(c)
                if c:
                    clean[m] = c
        self.terms = clean

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> MPoly:
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    # constructors -------------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> MPoly:
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c=1) -> MPoly:
        c = _coerce_coeff(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> MPoly:
        c = _coerce_coeff(c)
        exps = tuple(exps)
        return cls._raw(len(exps), {exps: c} if c else {})

    @classmethod
    def variable(cls, nvars: int, i: int) -> MPoly:
        """The variable x_i (1-based)."""
        if not 1 <= i <= nvars:
            raise IndexError(f"x{i} is not a variable of a ring in {nvars} variables")
        e = [0] * nvars
        e[i - 1] = 1
        return cls._raw(nvars, {tuple(e): ONE})

    @classmethod
    def gens(cls, nvars: int) -> list[MPoly]:
        return [cls.variable(nvars, i) for i in range(1, nvars + 1)]

    # basic queries --------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def monomials(self) -> list:
        return list(self.terms)

    def coefficient(self, m: Sequence[int]) -> QRat:
        return self.terms.get(tuple(m), ZERO)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def sorted_terms(self, order: TermOrder = NEGLEX) -> list:
        """(monomial, coefficient) pairs, strictly decreasing in ``order``."""
        return sorted(self.terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)

    def __iter__(self) -> Iterator:
        return iter(self.sorted_terms())

    def leading_monomial(self, order: TermOrder = NEGLEX) -> Monomial:
        return leading_monomial(self, order)

    def leading_coefficient(self, order: TermOrder = NEGLEX) -> QRat:
        return self.terms[leading_monomial(self, order)]

    def monic(self, order: TermOrder = NEGLEX) -> MPoly:
        lc = self.leading_coefficient(order)
        if lc.is_one():
            return self
        return self * lc.inverse()

    def homogeneous_component(self, d: int) -> MPoly:
        return MPoly._raw(self.nvars, {m: c for m, c in self.terms.items() if sum(m) == d})

    def top_component(self) -> MPoly:
        return top_component(self)

    # arithmetic ------------------------------------------------------------

    def _check(self, other: MPoly) -> None:
        if other.nvars != self.nvars:
            raise VariableCountError(f"cannot combine polynomials in {self.nvars} and {other.nvars} variables")

    def _lift(self, other) -> MPoly | None:
        if isinstance(other, MPoly):
            self._check(other)
            return other
        try:
            return MPoly.constant(self.nvars, other)
        except TypeError:
            return None

    def __add__(self, other) -> MPoly:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return MPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> MPoly:
        return MPoly._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> MPoly:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> MPoly:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> MPoly:
        c = _coerce_coeff(c)
        if not c:
            return MPoly.zero(self.nvars)
        if c.is_one():
            return self
        return MPoly._raw(self.nvars, {m: v * c for m, v in self.terms.items()})

    def shift(self, mono: Monomial, c=ONE) -> MPoly:
        """Multiply by the term ``c * x^mono``."""
        c = _coerce_coeff(c)
        if not c:
            return MPoly.zero(self.nvars)
        return MPoly._raw(self.nvars, {mono_mul(m, mono): v * c for m, v in self.terms.items()})

    def __mul__(self, other) -> MPoly:
        if not isinstance(other, MPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(m)
                out[m] = c1 * c2 if v is None else v + c1 * c2
        return MPoly._raw(self.nvars, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> MPoly:
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        out = MPoly.constant(self.nvars, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction, QRat)):
            return self == MPoly.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    # substitution / specialization ----------------------------------------------

    def permute_variables(self, perm: Sequence[int]) -> MPoly:
        """Apply x_j -> x_{perm[j]} (0-based positions)."""
        out = {}
        for m, c in self.terms.items():
            e = [0] * self.nvars
            for j, a in enumerate(m):
                e[perm[j]] = a
            out[tuple(e)] = c
        return MPoly._raw(self.nvars, out)

    def embed(self, nvars: int) -> MPoly:
        """View as a polynomial in more variables (x_{n+1}.. unused)."""
        if nvars < self.nvars:
            raise VariableCountError("cannot embed into fewer variables")
        pad = (0,) * (nvars - self.nvars)
        return MPoly._raw(nvars, {m + pad: c for m, c in self.terms.items()})

    def evaluate(self, point: Sequence) -> QRat:
        """Value at a point of F^n (coordinates QRat, int or Fraction)."""
        if len(point) != self.nvars:
            raise VariableCountError("point has the wrong number of coordinates")
        pt = [_coerce_coeff(v) for v in point]
        powers: list[dict] = [{0: ONE} for _ in pt]
        total = ZERO
        for m, c in self.terms.items():
            v = c
            for j, a in enumerate(m):
                if a:
                    cache = powers[j]
                    p = cache.get(a)
                    if p is None:
                        p = pt[j] ** a
                        cache[a] = p
                    v = v * p
            total = total + v
        return total

    def specialize(self, q0) -> MPoly:
        """Evaluate every coefficient at q = q0 (may raise PoleError)."""
        return MPoly(self.nvars, {m: c.eval(q0) for m, c in self.terms.items()})

    # text -------------------------------------------------------------------------

    def __str__(self) -> str:
        return format_mpoly(self)

    def __repr__(self) -> str:
        return f"MPoly({self.nvars}, {format_mpoly(self)!r})"


def leading_monomial(f: MPoly, order: TermOrder = NEGLEX) -> Monomial:
    """Order-maximal monomial of a nonzero polynomial."""
    if not f.terms:
        raise ValueError("the zero polynomial has no leading monomial")
    return max(f.terms, key=order.key)


def top_component(f: MPoly) -> MPoly:
    """Homogeneous part of ``f`` of maximal total degree."""
    if not f.terms:
        raise ValueError("the zero polynomial has no top component")
    return f.homogeneous_component(f.degree())


class _Divisor:
    __slots__ = ("lm", "inv_lc", "tail")

    def __init__(self, g: MPoly, order: TermOrder):
        self.lm = leading_monomial(g, order)
        self.inv_lc = g.terms[self.lm].inverse()
        self.tail = [(m, c) for m, c in g.terms.items() if m != self.lm]


def multivariate_division(
    f: MPoly,
    divisors: Sequence[MPoly],
    order: TermOrder = NEGLEX,
    *,
    with_quotients: bool = True,
) -> tuple[list[MPoly] | None, MPoly]:
    """Divide ``f`` by ``divisors``: ``f = sum(q_i * d_i) + r``.

    No monomial of ``r`` is divisible by a leading monomial of a divisor.  The
    first divisor (in list order) whose leading monomial divides the current
    leading term is used.  With ``with_quotients=False`` only the remainder is
    computed and ``None`` is returned for the quotients.
    """
    for d in divisors:
        f._check(d)
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
    divs = [_Divisor(d, order) for d in divisors]
    quots: list[dict] | None = [{} for _ in divs] if with_quotients else None
    p = dict(f.terms)
    heap = [(order.heap_key(m), m) for m in p]
    heapq.heapify(heap)
    rem: dict = {}
    hk = order.heap_key
    while heap:
        _, m = heapq.heappop(heap)
        c = p.pop(m, None)
        if c is None:
            continue
        for idx, d in enumerate(divs):
            lm = d.lm
            if all(a >= b for a, b in zip(m, lm)):
                break
        else:
            rem[m] = c
            continue
        t = tuple(a - b for a, b in zip(m, lm))
        coef = c * d.inv_lc
        if quots is not None:
            qd = quots[idx]
            v = qd.get(t)
            qd[t] = coef if v is None else v + coef
        for mg, cg in d.tail:
            mm = tuple(a + b for a, b in zip(mg, t))
            old = p.get(mm)
            if old is None:
                p[mm] = -(coef * cg)
                heapq.heappush(heap, (hk(mm), mm))
            else:
                v = old - coef * cg
                if v:
                    p[mm] = v
                else:
                    del p[mm]
    n = f.nvars
    quotients = None
    if quots is not None:
        quotients = [MPoly._raw(n, {m: c for m, c in qd.items() if c}) for qd in quots]
    return quotients, MPoly._raw(n, rem)


# text format -----------------------------------------------------------------------

_INT_RE = re.compile(r"-?\d+")


def _format_mono(m: Monomial) -> str:
    parts = []
    for j, a in enumerate(m, start=1):
        if a == 1:
            parts.append(f"x{j}")
        elif a > 1:
            parts.append(f"x{j}^{a}")
    return "*".join(parts)


def format_mpoly(f: MPoly, order: TermOrder = NEGLEX) -> str:
    """Terms joined by ' + ', each 'coeff * x1^a1*...'; decreasing in ``order``."""
    if not f.terms:
        return "0"
    out = []
    for m, c in f.sorted_terms(order):
        cs = str(c)
        if not _INT_RE.fullmatch(cs):
            cs = f"({cs})"
        mono = _format_mono(m)
        if not mono:
            out.append(cs)
        elif cs == "1":
            out.append(mono)
        else:
            out.append(f"{cs} * {mono}")
    return " + ".join(out)


def _split_top(s: str, sep: str) -> list[str]:
    parts, depth, start, i = [], 0, 0, 0
    while i < len(s):
        ch = s[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and s.startswith(sep, i):
            parts.append(s[start:i])
            i += len(sep)
            start = i
            continue
        i += 1
    parts.append(s[start:])
    return parts


_VAR_RE = re.compile(r"x(\d+)(?:\^(\d+))?")


def parse_mpoly(text: str, nvars: int) -> MPoly:
    """Inverse of :func:`format_mpoly`."""
    s = text.strip()
    if s == "0":
        return MPoly.zero(nvars)
    out = MPoly.zero(nvars)
    for term in _split_top(s, " + "):
        pieces = _split_top(term.strip(), " * ")
        if len(pieces) == 2:
            coeff_s, mono_s = pieces
        elif pieces[0].lstrip("-").startswith("x"):
            coeff_s, mono_s = "1", pieces[0]
        else:
            coeff_s, mono_s = pieces[0], ""
        coeff_s = coeff_s.strip()
        neg = False
        if mono_s.startswith("-"):
            neg, mono_s = True, mono_s[1:]
        if coeff_s.startswith("-x"):
            neg, coeff_s, mono_s = True, "1", coeff_s[1:]
        if coeff_s.startswith("(") and coeff_s.endswith(")") and _balanced(coeff_s[1:-1]):
            coeff_s = coeff_s[1:-1]
        c = parse_qrat(coeff_s)
        e = [0] * nvars
        for factor in filter(None, mono_s.strip().split("*")):
            mt = _VAR_RE.fullmatch(factor.strip())
            if mt is None:
                raise ValueError(f"bad monomial factor {factor!r} in {text!r}")
            j = int(mt.group(1))
            if not 1 <= j <= nvars:
                raise VariableCountError(f"x{j} out of range for {nvars} variables")
            e[j - 1] += int(mt.group(2) or 1)
        out = out + MPoly.monomial(e, -c if neg else c)
    return out

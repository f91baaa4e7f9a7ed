"""Exact arithmetic in the rational function field Q(q).

Elements are stored as reduced fractions ``num / den`` of integer-coefficient
polynomials in ``q`` (backed by FLINT's ``fmpz_poly``).  The representation is
canonical: ``gcd(num, den) = 1`` over Z[q] (content included) and ``den`` has a
positive leading coefficient, so structural equality is field equality.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from flint import fmpq, fmpz_poly

__all__ = ["QRat", "PoleError", "Q", "ONE", "ZERO", "parse_qrat", "format_qpoly"]

_ZERO_POLY = fmpz_poly([])
_ONE_POLY = fmpz_poly([1])


class PoleError(ArithmeticError):
    """Raised when a denominator vanishes at the requested value of q."""


def _as_poly(x) -> tuple[fmpz_poly, fmpz_poly]:
    # (num, den) pair for any supported scalar
    if isinstance(x, QRat):
        return x.num, x.den
    if isinstance(x, fmpz_poly):
        return x, _ONE_POLY
    if isinstance(x, int):
        return fmpz_poly([x]), _ONE_POLY
    if isinstance(x, Rational):
        return fmpz_poly([int(x.numerator)]), fmpz_poly([int(x.denominator)])
    raise TypeError(f"cannot convert {type(x).__name__} to QRat")


class QRat:
    """An element of Q(q) in lowest terms."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=None):
        n1, d1 = _as_poly(num)
        if den is None:
            n, d = n1, d1
        else:
            n2, d2 = _as_poly(den)
            if n2.is_zero():
                raise ZeroDivisionError("QRat denominator is zero")
            n, d = n1 * d2, d1 * n2
        self.num, self.den = _normalize(n, d)
        self._hash = None

    @classmethod
    def _raw(cls, num: fmpz_poly, den: fmpz_poly) -> QRat:
        # caller guarantees canonical form
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def gen(cls) -> QRat:
        """The transcendental q itself."""
        return cls._raw(fmpz_poly([0, 1]), _ONE_POLY)

    # predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    # arithmetic -----------------------------------------------------------

    def __neg__(self) -> QRat:
        return QRat._raw(-self.num, self.den)

    def __pos__(self) -> QRat:
        return self

    def __add__(self, other) -> QRat:
        if not isinstance(other, QRat):
            try:
                other = QRat(other)
            except TypeError:
                return NotImplemented
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den.is_one() and other.den.is_one():
            return QRat._raw(self.num + other.num, _ONE_POLY)
        if self.den == other.den:
            return QRat._raw(*_normalize(self.num + other.num, self.den))
        return QRat._raw(*_normalize(self.num * other.den + other.num * self.den, self.den * other.den))

    __radd__ = __add__

    def __sub__(self, other) -> QRat:
        if not isinstance(other, QRat):
            try:
                other = QRat(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> QRat:
        return QRat(other) - self

    def __mul__(self, other) -> QRat:
        if not isinstance(other, QRat):
            try:
                other = QRat(other)
            except TypeError:
                return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if self.den.is_one() and other.den.is_one():
            return QRat._raw(self.num * other.num, _ONE_POLY)
        # cross-cancel before multiplying keeps the operands small
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        num = (self.num // g1) * (other.num // g2)
        den = (self.den // g2) * (other.den // g1)
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return QRat._raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> QRat:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(q)")
        num, den = self.den, self.num
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return QRat._raw(num, den)

    def __truediv__(self, other) -> QRat:
        if not isinstance(other, QRat):
            try:
                other = QRat(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> QRat:
        return QRat(other) * self.inverse()

    def __pow__(self, e: int) -> QRat:
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        return QRat._raw(self.num**e, self.den**e)

    # comparison / hashing --------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, QRat):
            try:
                other = QRat(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((tuple(int(c) for c in self.num.coeffs()), tuple(int(c) for c in self.den.coeffs())))
        return self._hash

    # specialization -----------------------------------------------------------

    def eval(self, q0) -> Fraction:
        """Specialize at a rational value of q.

        Raises PoleError when the denominator vanishes at ``q0``; callers must
        not treat that as zero.
        """
        q0 = fmpq(Fraction(q0).numerator, Fraction(q0).denominator)
        d = self.den(q0)
        if d == 0:
            raise PoleError(f"{self} has a pole at q = {q0}")
        v = self.num(q0) / d
        return Fraction(int(v.p), int(v.q))

    def coefficient_lists(self) -> tuple[list[int], list[int]]:
        return [int(c) for c in self.num.coeffs()], [int(c) for c in self.den.coeffs()]

    # text -----------------------------------------------------------------------

    def __str__(self) -> str:
        if self.den.is_one():
            return format_qpoly(self.num)
        return f"{_wrap(format_qpoly(self.num))}/{_wrap(format_qpoly(self.den))}"

    def __repr__(self) -> str:
        return f"QRat({str(self)!r})"

    def is_integer(self) -> bool:
        return self.den.is_one() and self.num.degree() <= 0

    def __reduce__(self):
        return (parse_qrat, (str(self),))


def _wrap(s: str) -> str:
    return s if _INT_RE.fullmatch(s) else f"({s})"


def _normalize(num: fmpz_poly, den: fmpz_poly) -> tuple[fmpz_poly, fmpz_poly]:
    if num.is_zero():
        return _ZERO_POLY, _ONE_POLY
    g = num.gcd(den)
    if not g.is_one():
        num = num // g
        den = den // g
    if den.leading_coefficient() < 0:
        num, den = -num, -den
    return num, den


def format_qpoly(p: fmpz_poly, var: str = "q") -> str:
    """Sparse, descending-power text for an integer polynomial."""
    coeffs = [int(c) for c in p.coeffs()]
    if not coeffs:
        return "0"
    out: list[str] = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        if e == 0:
            body = str(abs(c))
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
        if not out:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(out)


_INT_RE = re.compile(r"-?\d+")
_TERM_RE = re.compile(r"([+-]?)(\d*)(?:\*?q(?:\^(\d+))?)?")


def _parse_qpoly(text: str) -> fmpz_poly:
    s = text.replace(" ", "")
    if s.startswith("(") and s.endswith(")") and _balanced(s[1:-1]):
        s = s[1:-1]
    if not s:
        raise ValueError("empty polynomial")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial in q: {text!r}")
        sign, digits, exp = m.groups()
        has_q = "q" in m.group(0)
        if not digits and not has_q:
            raise ValueError(f"cannot parse polynomial in q: {text!r}")
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        e = (int(exp) if exp else 1) if has_q else 0
        coeffs[e] = coeffs.get(e, 0) + c
        pos = m.end()
        if pos < len(s) and s[pos] not in "+-":
            raise ValueError(f"cannot parse polynomial in q: {text!r}")
    top = max(coeffs)
    return fmpz_poly([coeffs.get(e, 0) for e in range(top + 1)])


def _balanced(s: str) -> bool:
    depth = 0
    for ch in s:
        depth += ch == "("
        depth -= ch == ")"
        if depth < 0:
            return False
    return depth == 0


def parse_qrat(text: str) -> QRat:
    """Inverse of ``str(QRat)``; also accepts plain integers and ``a/b``."""
    s = text.strip()
    depth = 0
    split_at = None
    for idx, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            split_at = idx
    if split_at is None:
        return QRat(_parse_qpoly(s))
    return QRat(_parse_qpoly(s[:split_at]), _parse_qpoly(s[split_at + 1 :]))


ZERO = QRat._raw(_ZERO_POLY, _ONE_POLY)
ONE = QRat._raw(_ONE_POLY, _ONE_POLY)
Q = QRat.gen()

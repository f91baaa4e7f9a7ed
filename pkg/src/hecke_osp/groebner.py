"""Gröbner bases over Q(q): Buchberger's algorithm, vanishing ideals of
finite point sets (Buchberger-Möller), top-degree ideals T(Y), standard
monomials, Hilbert functions and H_n(q)-stability checks.
"""

from __future__ import annotations

import heapq
import json
import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from itertools import combinations

from .combinat import TPoly
from .heckeops import hecke_T
from .polyring import (
    DEG_NEGLEX,
    NEGLEX,
    MPoly,
    TermOrder,
    leading_monomial,
    mono_divides,
    mono_lcm,
    multivariate_division,
    parse_mpoly,
    top_component,
)
from .qfield import ONE, ZERO, Q, QRat
from .symfunc import (
    demazure_character,
    elementary_sym,
    elementary_sym_eval,
    hall_littlewood_P,
    homogeneous_sym_eval,
    skip_composition,
)

__all__ = [
    "Ideal",
    "GroebnerBasis",
    "ResourceBudgetExceeded",
    "NotZeroDimensional",
    "DEFAULT_PAIR_BUDGET",
    "s_polynomial",
    "buchberger",
    "interreduce",
    "normal_form",
    "is_groebner",
    "standard_monomials",
    "hilbert_function",
    "vanishing_ideal",
    "top_component_ideal",
    "ideal_equal",
    "check_stability",
    "ideal_generators",
    "demazure_basis",
    "IdentityRecord",
    "point_identity_checks",
]

log = logging.getLogger(__name__)

DEFAULT_PAIR_BUDGET = 200_000


class ResourceBudgetExceeded(RuntimeError):
    """Buchberger exceeded its S-pair budget; no (partial) basis is returned."""


class NotZeroDimensional(ValueError):
    """Standard monomials requested for an ideal with infinitely many of them."""


@dataclass
class Ideal:
    generators: list[MPoly]
    nvars: int

    def __post_init__(self):
        self.generators = [g for g in self.generators if not g.is_zero()]
        for g in self.generators:
            if g.nvars != self.nvars:
                raise ValueError("generators must share the variable count")


@dataclass
class GroebnerBasis:
    elements: list[MPoly]
    order: TermOrder
    nvars: int
    interreduced: bool = True
    stats: dict = field(default_factory=dict, compare=False)

    def leading_monomials(self) -> list[tuple]:
        return [leading_monomial(g, self.order) for g in self.elements]

    def normal_form(self, f: MPoly) -> MPoly:
        return normal_form(f, self)

    def contains(self, f: MPoly) -> bool:
        return normal_form(f, self).is_zero()

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.elements)

    def is_zero_dimensional(self) -> bool:
        pure = set()
        for m in self.leading_monomials():
            support = [j for j, a in enumerate(m) if a]
            if len(support) == 1:
                pure.add(support[0])
            elif not support:
                return True  # unit ideal
        return len(pure) == self.nvars

    def __len__(self) -> int:
        return len(self.elements)

    # serialization ----------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps(
            {
                "order": self.order.name,
                "nvars": self.nvars,
                "interreduced": self.interreduced,
                "elements": [str(g) for g in self.elements],
            },
            indent=1,
        )

    @classmethod
    def from_json(cls, text: str) -> GroebnerBasis:
        d = json.loads(text)
        n = d["nvars"]
        return cls(
            [parse_mpoly(s, n) for s in d["elements"]],
            TermOrder.from_name(d["order"]),
            n,
            d.get("interreduced", True),
        )


# ---------------------------------------------------------------------------
# Buchberger


def s_polynomial(f: MPoly, g: MPoly, order: TermOrder) -> MPoly:
    lf, lg = leading_monomial(f, order), leading_monomial(g, order)
    lcm = mono_lcm(lf, lg)
    a = tuple(x - y for x, y in zip(lcm, lf))
    b = tuple(x - y for x, y in zip(lcm, lg))
    return f.shift(a, f.terms[lf].inverse()) - g.shift(b, g.terms[lg].inverse())


def _coprime(a: tuple, b: tuple) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def buchberger(
    ideal: Ideal | Sequence[MPoly],
    order: TermOrder = NEGLEX,
    *,
    pair_budget: int = DEFAULT_PAIR_BUDGET,
) -> GroebnerBasis:
    """Reduced Gröbner basis of ``ideal`` under ``order``.

    Uses the Gebauer-Möller update (coprime and chain criteria).  Pairs are
    selected by sugar degree, ties broken by the smallest lcm (the normal
    strategy); for homogeneous input under a graded order the two coincide.
    """
    if not isinstance(ideal, Ideal):
        gens = list(ideal)
        ideal = Ideal(gens, gens[0].nvars if gens else 0)
    n = ideal.nvars
    key = order.key
    polys: list[MPoly] = []
    lms: list[tuple] = []
    sugar: list[int] = []
    active: list[int] = []
    pairs: list = []  # heap of ((sugar, key(lcm)), i, j, lcm)

    def update(h_idx: int) -> None:
        nonlocal pairs
        lh = lms[h_idx]
        new = [(mono_lcm(lms[g], lh), g) for g in active]
        kept: list = []
        for idx, (lcm, g) in enumerate(new):
            if _coprime(lms[g], lh):
                kept.append((lcm, g, True))
                continue
            # chain criterion among the new pairs
            others = [o for o, _ in new[idx + 1 :]] + [o for o, _, _ in kept]
            if not any(mono_divides(o, lcm) for o in others):
                kept.append((lcm, g, False))
        # among pairs with equal lcm keep one; coprime ones are dropped outright
        seen = set()
        fresh = []
        for lcm, g, coprime in kept:
            if lcm in seen:
                continue
            seen.add(lcm)
            if not coprime:
                fresh.append((lcm, g))
        survivors = []
        for item in pairs:
            _, i, j, lcm = item
            if (
                mono_divides(lh, lcm)
                and mono_lcm(lms[i], lh) != lcm
                and mono_lcm(lms[j], lh) != lcm
            ):
                continue
            survivors.append(item)
        for lcm, g in fresh:
            d = sum(lcm)
            s = max(sugar[g] + d - sum(lms[g]), sugar[h_idx] + d - sum(lh))
            survivors.append(((s, key(lcm)), g, h_idx, lcm))
        heapq.heapify(survivors)
        pairs = survivors
        active.append(h_idx)

    def add(h: MPoly, s: int) -> None:
        h = h.monic(order)
        sugar.append(s)
        polys.append(h)
        lms.append(leading_monomial(h, order))
        update(len(polys) - 1)

    for g in ideal.generators:
        _, r = multivariate_division(g, [polys[i] for i in active], order, with_quotients=False)
        if not r.is_zero():
            add(r, r.degree())
    processed = 0
    while pairs:
        (s_deg, _), i, j, _ = heapq.heappop(pairs)
        processed += 1
        if processed > pair_budget:
            raise ResourceBudgetExceeded(f"S-pair budget {pair_budget} exceeded")
        s = s_polynomial(polys[i], polys[j], order)
        if s.is_zero():
            continue
        _, r = multivariate_division(s, [polys[a] for a in active], order, with_quotients=False)
        if not r.is_zero():
            add(r, s_deg)
    basis = interreduce([polys[a] for a in active], order)
    log.debug("buchberger: %d pairs, %d elements", processed, len(basis))
    return GroebnerBasis(basis, order, n, True, {"pairs": processed})


def interreduce(elements: Sequence[MPoly], order: TermOrder) -> list[MPoly]:
    """Minimalize and fully reduce a Gröbner basis; leading coefficients 1."""
    elems = sorted((g.monic(order) for g in elements if not g.is_zero()), key=lambda g: order.key(leading_monomial(g, order)))
    minimal: list[MPoly] = []
    for g in elems:
        lg = leading_monomial(g, order)
        if not any(mono_divides(leading_monomial(h, order), lg) for h in minimal):
            minimal.append(g)
    out = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        _, r = multivariate_division(g, others, order, with_quotients=False)
        out.append(r.monic(order))
    return sorted(out, key=lambda g: order.key(leading_monomial(g, order)))


def normal_form(f: MPoly, G: GroebnerBasis | Sequence[MPoly], order: TermOrder | None = None) -> MPoly:
    """Remainder of f modulo a Gröbner basis (unique for a Gröbner basis)."""
    if isinstance(G, GroebnerBasis):
        order, elems = G.order, G.elements
    else:
        elems = list(G)
        order = order or NEGLEX
    if f.is_zero() or not elems:
        return f
    _, r = multivariate_division(f, elems, order, with_quotients=False)
    return r


@dataclass
class GroebnerReport:
    is_groebner: bool
    minimal: bool
    failures: list = field(default_factory=list)  # (i, j, remainder string)
    pairs_checked: int = 0

    def __bool__(self) -> bool:
        return self.is_groebner


def is_groebner(candidate: Sequence[MPoly], order: TermOrder = NEGLEX) -> GroebnerReport:
    """Check every S-pair of ``candidate`` reduces to zero (no criteria used)."""
    cand = [g for g in candidate if not g.is_zero()]
    if len(cand) != len(candidate):
        raise ValueError("candidates must be nonzero")
    failures = []
    checked = 0
    for (a, f), (b, g) in combinations(enumerate(cand), 2):
        checked += 1
        r = normal_form(s_polynomial(f, g, order), cand, order)
        if not r.is_zero():
            failures.append((a, b, str(r)))
    lms = [leading_monomial(g, order) for g in cand]
    minimal = not any(a != b and mono_divides(lms[a], lms[b]) for a in range(len(lms)) for b in range(len(lms)))
    return GroebnerReport(not failures, minimal, failures, checked)


# ---------------------------------------------------------------------------
# standard monomials and Hilbert functions


def standard_monomials(G: GroebnerBasis, degree_cap: int | None = None) -> list[tuple]:
    """Monomials outside the leading-monomial ideal, in increasing order."""
    if degree_cap is None and not G.is_zero_dimensional():
        raise NotZeroDimensional("ideal is not zero-dimensional; pass degree_cap")
    lms = G.leading_monomials()
    n = G.nvars
    if any(sum(m) == 0 for m in lms):
        return []
    one = (0,) * n
    found = {one}
    frontier = [one]
    while frontier:
        nxt = []
        for m in frontier:
            for j in range(n):
                e = list(m)
                e[j] += 1
                e = tuple(e)
                if e in found or (degree_cap is not None and sum(e) > degree_cap):
                    continue
                if any(mono_divides(lm, e) for lm in lms):
                    continue
                found.add(e)
                nxt.append(e)
        frontier = nxt
    return sorted(found, key=G.order.key)


def hilbert_function(G: GroebnerBasis) -> TPoly:
    """Sum over degrees d of (#standard monomials of degree d) t^d."""
    if not G.is_homogeneous():
        raise ValueError("Hilbert function from standard monomials needs a homogeneous ideal")
    counts: dict[int, int] = {}
    for m in standard_monomials(G):
        counts[sum(m)] = counts.get(sum(m), 0) + 1
    top = max(counts) if counts else -1
    return TPoly([counts.get(d, 0) for d in range(top + 1)])


# ---------------------------------------------------------------------------
# point sets


def vanishing_ideal(points: Sequence[Sequence], order: TermOrder = DEG_NEGLEX) -> GroebnerBasis:
    """Reduced Gröbner basis of I(points) by the Buchberger-Möller algorithm.

    Monomials are scanned in increasing order; each evaluation vector is
    reduced against the vectors of the standard monomials found so far.  A
    dependency yields a basis element, otherwise the monomial is standard.
    """
    pts = [tuple(c if isinstance(c, QRat) else QRat(c) for c in p) for p in points]
    if not pts:
        raise ValueError("need at least one point")
    n = len(pts[0])
    if len(set(pts)) != len(pts):
        raise ValueError("points must be pairwise distinct")
    npts = len(pts)
    key = order.key
    one = (0,) * n
    evals: dict[tuple, list] = {}
    rows: list[tuple[int, list, dict]] = []  # pivot, reduced vector, monomial combination
    basis: list[MPoly] = []
    lms: list[tuple] = []
    heap = [(key(one), one)]
    queued = {one}
    while heap:
        _, m = heapq.heappop(heap)
        if any(mono_divides(lm, m) for lm in lms):
            continue
        if m == one:
            v = [ONE] * npts
        else:
            j = next(j for j, a in enumerate(m) if a and tuple(b - (t == j) for t, b in enumerate(m)) in evals)
            prev = evals[tuple(b - (t == j) for t, b in enumerate(m))]
            v = [p[j] * w for p, w in zip(pts, prev)]
        r = list(v)
        comb: dict = {m: ONE}
        for piv, vec, poly in rows:
            c = r[piv]
            if c.is_zero():
                continue
            for t in range(npts):
                if not vec[t].is_zero():
                    r[t] = r[t] - c * vec[t]
            for mono, a in poly.items():
                comb[mono] = comb.get(mono, ZERO) - c * a
        piv = next((t for t in range(npts) if not r[t].is_zero()), None)
        if piv is None:
            basis.append(MPoly._raw(n, {mono: a for mono, a in comb.items() if a}))
            lms.append(m)
            continue
        inv = r[piv].inverse()
        rows.append((piv, [x * inv for x in r], {mono: a * inv for mono, a in comb.items() if a}))
        evals[m] = v
        for j in range(n):
            e = list(m)
            e[j] += 1
            e = tuple(e)
            if e not in queued:
                queued.add(e)
                heapq.heappush(heap, (key(e), e))
    if len(evals) != npts:
        raise AssertionError(f"quotient dimension {len(evals)} != {npts} points")
    basis.sort(key=lambda g: key(leading_monomial(g, order)))
    return GroebnerBasis(basis, order, n, True, {"standard": len(evals)})


def top_component_ideal(points: Sequence[Sequence], *, pair_budget: int = DEFAULT_PAIR_BUDGET) -> GroebnerBasis:
    """Gröbner basis (deg-neglex) of T(Y) = <τ(f) : f in I(Y), f != 0>.

    τ of a graded-order Gröbner basis of I(Y) generates T(Y); the result is
    re-run through Buchberger and its quotient dimension checked against |Y|.
    """
    vi = vanishing_ideal(points, DEG_NEGLEX)
    tops = [top_component(g) for g in vi.elements]
    G = buchberger(tops, DEG_NEGLEX, pair_budget=pair_budget)
    dim = len(standard_monomials(G))
    if dim != len(points):
        raise AssertionError(f"dim F[x]/T(Y) = {dim} but |Y| = {len(points)}")
    return G


def ideal_equal(A: GroebnerBasis, B: GroebnerBasis) -> bool:
    """Mutual containment, each side tested by normal forms modulo the other."""
    if A.nvars != B.nvars:
        raise ValueError("ideals live in different polynomial rings")
    return all(B.contains(g) for g in A.elements) and all(A.contains(g) for g in B.elements)


@dataclass
class StabilityRecord:
    generator: str
    i: int
    normal_form: str
    passed: bool


def check_stability(G: GroebnerBasis, gens: Sequence[MPoly]) -> list[StabilityRecord]:
    """NF(T_i g, G) for every generator g and every i; all zero means stable."""
    out = []
    for g in gens:
        for i in range(1, G.nvars):
            r = normal_form(hecke_T(i, g), G)
            out.append(StabilityRecord(str(g), i, str(r), r.is_zero()))
    return out


# ---------------------------------------------------------------------------
# the ideals I_{n,k}^{(q)}


def ideal_generators(n: int, k: int) -> list[MPoly]:
    """P_k(x_1..x_i; q) for i = 1..n, then e_n, e_{n-1}, ..., e_{n-k+1}."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    gens = [hall_littlewood_P(k, i, n) for i in range(1, n + 1)]
    gens += [elementary_sym(d, n) for d in range(n, n - k, -1)]
    return gens


def demazure_basis(n: int, k: int) -> list[MPoly]:
    """The Hall-Littlewood polynomials P_k(x_1..x_i; q), i = 1..n, together with
    the Demazure characters κ_{γ(S)*} for S ⊆ [n-1], |S| = n-k+1."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    out = [hall_littlewood_P(k, i, n) for i in range(1, n + 1)]
    for S in combinations(range(1, n), n - k + 1):
        out.append(demazure_character(tuple(reversed(skip_composition(S, n)))))
    return out


@dataclass
class IdentityRecord:
    identity: str
    point: str
    value: str
    expected: str
    passed: bool


def point_identity_checks(n: int, k: int, points: Sequence[Sequence[QRat]], alpha: Sequence) -> list[IdentityRecord]:
    """Evaluate the two polynomials whose top components give I_{n,k} ⊆ T(Y).

    (a) sum_{i=0}^d (-1)^(d-i) e_i(y) h_{d-i}(α) = 0 for n-k+1 <= d <= n;
    (b) sum_{j=0}^k (-1)^(k-j) (1-q) P_j(y_1..y_i; q) e_{k-j}(α) = (-1)^k q^i α_1...α_k
        for 1 <= i <= n, where (1-q) P_0 is read as 1.
    """
    alpha = [QRat(a) for a in alpha]
    prod_alpha = ONE
    for a in alpha:
        prod_alpha = prod_alpha * a
    e_alpha = [elementary_sym_eval(j, alpha) for j in range(k + 1)]
    h_alpha = [homogeneous_sym_eval(j, alpha) for j in range(n + 1)]
    one_minus_q = ONE - Q
    P = {(j, i): hall_littlewood_P(j, i, n).scale(one_minus_q) for j in range(1, k + 1) for i in range(1, n + 1)}
    out = []
    for y in points:
        label = "(" + ", ".join(map(str, y)) + ")"
        e_y = [elementary_sym_eval(i, y) for i in range(n + 1)]
        for d in range(n - k + 1, n + 1):
            val = ZERO
            for i in range(d + 1):
                term = e_y[i] * h_alpha[d - i]
                val = val + term if (d - i) % 2 == 0 else val - term
            out.append(IdentityRecord(f"(a) d={d}", label, str(val), "0", val.is_zero()))
        for i in range(1, n + 1):
            val = e_alpha[k] if k % 2 == 0 else -e_alpha[k]
            for j in range(1, k + 1):
                term = P[j, i].evaluate(y) * e_alpha[k - j]
                val = val + term if (k - j) % 2 == 0 else val - term
            expected = (Q**i) * prod_alpha
            if k % 2:
                expected = -expected
            out.append(IdentityRecord(f"(b) i={i}", label, str(val), str(expected), val == expected))
    return out

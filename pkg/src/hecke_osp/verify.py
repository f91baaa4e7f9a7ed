"""Verification procedures, one per checked statement, plus the report type
and the on-disk Gröbner basis cache shared by the CLI and the test-suite."""

from __future__ import annotations

import json
import logging
import random
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from pathlib import Path
from time import perf_counter

from .combinat import (
    TPoly,
    artin_monomials,
    class_representative,
    gs_monomials,
    osp_count,
    partitions,
)
from .groebner import (
    DEFAULT_PAIR_BUDGET,
    GroebnerBasis,
    ResourceBudgetExceeded,
    buchberger,
    check_stability,
    demazure_basis,
    hilbert_function,
    ideal_equal,
    ideal_generators,
    is_groebner,
    normal_form,
    point_identity_checks,
    standard_monomials,
    top_component_ideal,
)
from .heckeops import check_hecke_relations
from .osp import (
    OSPVector,
    default_alpha,
    enumerate_osp,
    generate_Y,
    osp_hecke_T,
    quantize_points,
)
from .polyring import DEG_NEGLEX, NEGLEX, MPoly, TermOrder
from .qfield import ZERO, Q, QRat
from .repn import (
    build_matrix_action,
    character_at_q1,
    character_records,
    graded_frobenius_formula,
    hilbert_from_frobenius,
    permutation_character_osp,
)
from .symfunc import (
    check_closure,
    hall_littlewood_P,
    hall_littlewood_P_gf,
    homogeneous_sym,
    power_sum,
)

log = logging.getLogger(__name__)

__all__ = [
    "CheckRecord",
    "VerificationReport",
    "Context",
    "BasisCache",
    "STATEMENTS",
    "STATEMENT_LIMITS",
    "random_polynomial",
    "random_symmetric_point_set",
    "qrat_rank",
    "run_statement",
]


@dataclass
class CheckRecord:
    statement: str
    witness: str
    passed: bool

    def as_dict(self) -> dict:
        return {"statement": self.statement, "witness": self.witness, "pass": self.passed}


@dataclass
class VerificationReport:
    command: str
    params: dict
    records: list[CheckRecord] = field(default_factory=list)
    wall_time: float | None = None
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(r.passed for r in self.records)

    def as_dict(self, timing: bool = False) -> dict:
        d = {
            "command": self.command,
            "params": self.params,
            "pass": self.passed,
            "records": [r.as_dict() for r in self.records],
        }
        if self.error is not None:
            d["error"] = self.error
        if timing and self.wall_time is not None:
            d["wall_time"] = round(self.wall_time, 3)
        return d

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.as_dict(timing), indent=1, sort_keys=True)

    def to_tsv(self) -> str:
        lines = ["statement\twitness\tpass"]
        for r in self.records:
            witness = r.witness.replace("\t", " ").replace("\n", " ")
            lines.append(f"{r.statement}\t{witness}\t{str(r.passed).lower()}")
        if self.error is not None:
            lines.append(f"error\t{self.error}\tfalse")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Gröbner basis cache


class BasisCache:
    """Memory cache of Gröbner bases, optionally mirrored to JSON files.

    Files are re-verified with :func:`is_groebner` and generator membership
    on load; a file that fails is discarded and recomputed.
    """

    def __init__(self, directory: str | Path | None = None):
        self.directory = Path(directory) if directory else None
        self._memory: dict[str, GroebnerBasis] = {}
        if self.directory:
            self.directory.mkdir(parents=True, exist_ok=True)

    @staticmethod
    def key(kind: str, n: int, k: int, order: TermOrder, alpha: Sequence | None = None) -> str:
        tag = "" if alpha is None else "-a" + "_".join(str(Fraction(a)).replace("/", "over") for a in alpha)
        return f"{kind}-n{n}-k{k}-{order.name}{tag}"

    def get(self, key: str, compute: Callable[[], GroebnerBasis], generators: Sequence[MPoly] = ()) -> GroebnerBasis:
        hit = self._memory.get(key)
        if hit is not None:
            return hit
        path = self.directory / f"{key}.json" if self.directory else None
        if path is not None and path.exists():
            try:
                G = GroebnerBasis.from_json(path.read_text())
                if is_groebner(G.elements, G.order) and all(G.contains(g) for g in generators):
                    self._memory[key] = G
                    return G
                log.warning("cached basis %s failed re-verification; recomputing", path)
            except (ValueError, KeyError) as exc:
                log.warning("unreadable cache file %s (%s); recomputing", path, exc)
        G = compute()
        self._memory[key] = G
        if path is not None:
            path.write_text(G.to_json())
        return G


@dataclass
class Context:
    n: int
    k: int | None = None
    alpha: list[Fraction] | None = None
    order: TermOrder = NEGLEX
    seed: int = 0
    budget: int = DEFAULT_PAIR_BUDGET
    cache: BasisCache = field(default_factory=BasisCache)

    def ks(self) -> list[int]:
        return [self.k] if self.k is not None else list(range(1, self.n + 1))

    def alpha_for(self, k: int) -> list[Fraction]:
        if self.alpha is None:
            return default_alpha(k)
        if len(self.alpha) != k:
            raise ValueError(f"--alpha needs exactly k = {k} values")
        return self.alpha

    def ideal_basis(self, n: int, k: int, order: TermOrder | None = None) -> GroebnerBasis:
        order = order or self.order
        gens = ideal_generators(n, k)
        return self.cache.get(
            BasisCache.key("I", n, k, order),
            lambda: buchberger(gens, order, pair_budget=self.budget),
            gens,
        )


# ---------------------------------------------------------------------------
# random inputs


def random_polynomial(rng: random.Random, n: int, max_degree: int = 4, max_terms: int = 4) -> MPoly:
    """Sparse polynomial of degree <= max_degree with coefficients a + b q."""
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(0, max_degree)
        e = [0] * n
        for _ in range(d):
            e[rng.randrange(n)] += 1
        c = QRat(rng.randint(-3, 3)) + QRat(rng.randint(-2, 2)) * Q
        terms[tuple(e)] = terms.get(tuple(e), ZERO) + c
    f = MPoly(n, terms)
    return f if not f.is_zero() else MPoly.monomial(tuple(e), 1)


def random_symmetric_point_set(rng: random.Random, n: int, values: Sequence[int] = (1, 2, 3), orbits: int = 3) -> list[tuple]:
    """Union of the S_n-orbits of a few random points of values^n."""
    pts: set = set()
    for _ in range(rng.randint(1, orbits)):
        p = tuple(rng.choice(values) for _ in range(n))
        pts.update(permutations(p))
    return sorted(pts)


def qrat_rank(vectors: Sequence[Sequence[QRat]]) -> int:
    """Rank over Q(q) by Gaussian elimination."""
    rows = [list(v) for v in vectors if any(not c.is_zero() for c in v)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if not rows[r][col].is_zero()), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][col].inverse()
        prow = [c * inv for c in rows[rank]]
        rows[rank] = prow
        for r in range(rank + 1, len(rows)):
            c = rows[r][col]
            if not c.is_zero():
                rows[r] = [a - c * b for a, b in zip(rows[r], prow)]
        rank += 1
    return rank


def _graded_counts(monomials) -> TPoly:
    counts: dict[int, int] = {}
    for m in monomials:
        counts[sum(m)] = counts.get(sum(m), 0) + 1
    return TPoly([counts.get(d, 0) for d in range(max(counts, default=-1) + 1)])


# ---------------------------------------------------------------------------
# statements


def verify_hecke_relations(ctx: Context, out: list[CheckRecord], samples: int = 50) -> None:
    rng = random.Random(ctx.seed)
    sample = [random_polynomial(rng, ctx.n) for _ in range(samples)]
    for r in check_hecke_relations(ctx.n, sample):
        out.append(CheckRecord(r.relation, r.witness, r.passed))


def verify_osp_action(ctx: Context, out: list[CheckRecord]) -> None:
    for k in ctx.ks():
        basis = [OSPVector.basis(s) for s in enumerate_osp(ctx.n, k)]
        for r in check_hecke_relations(ctx.n, basis, action=osp_hecke_T):
            out.append(CheckRecord(f"{r.relation} k={k}", r.witness, r.passed))


def verify_closure(ctx: Context, out: list[CheckRecord]) -> None:
    ks = [ctx.k] if ctx.k is not None else list(range(1, 6))
    for k in ks:
        for i in range(1, ctx.n):
            r = check_closure(i, k, ctx.n)
            out.append(CheckRecord(r.relation, f"{r.witness} lhs={r.lhs}", r.passed))


def verify_stability(ctx: Context, out: list[CheckRecord]) -> None:
    for k in ctx.ks():
        G = ctx.ideal_basis(ctx.n, k)
        for r in check_stability(G, ideal_generators(ctx.n, k)):
            out.append(CheckRecord(f"stability k={k} T{r.i}", f"g={r.generator} NF={r.normal_form}", r.passed))


def verify_point_theorem(ctx: Context, out: list[CheckRecord]) -> None:
    n = ctx.n
    for k in ctx.ks():
        alpha = ctx.alpha_for(k)
        Y = generate_Y(n, k, alpha)
        out.append(CheckRecord(f"|Y| = |OP| k={k}", f"{len(Y)} vs {osp_count(n, k)}", len(Y) == osp_count(n, k)))
        summary: dict[str, list] = {}
        for r in point_identity_checks(n, k, Y, alpha):
            summary.setdefault(r.identity, []).append(r)
        for label, recs in summary.items():
            bad = [r for r in recs if not r.passed]
            witness = f"all {len(recs)} points" if not bad else f"y={bad[0].point} value={bad[0].value}"
            out.append(CheckRecord(f"identity {label} k={k}", witness, not bad))
        T = ctx.cache.get(
            BasisCache.key("T", n, k, DEG_NEGLEX, alpha),
            lambda: top_component_ideal(Y, pair_budget=ctx.budget),
        )
        C = ctx.cache.get(
            BasisCache.key("C", n, k, NEGLEX),
            lambda: buchberger(demazure_basis(n, k), NEGLEX, pair_budget=ctx.budget),
        )
        dim = len(standard_monomials(T))
        out.append(CheckRecord(f"dim F[x]/T(Y) k={k}", f"{dim} vs {osp_count(n, k)}", dim == osp_count(n, k)))
        out.append(CheckRecord(f"T(Y) = I k={k}", f"alpha={','.join(map(str, alpha))}", ideal_equal(T, C)))


def verify_groebner(ctx: Context, out: list[CheckRecord]) -> None:
    n = ctx.n
    for k in ctx.ks():
        cand = demazure_basis(n, k)
        rep = is_groebner(cand, NEGLEX)
        witness = f"{rep.pairs_checked} S-pairs" if rep else f"pair {rep.failures[0][:2]} -> {rep.failures[0][2]}"
        out.append(CheckRecord(f"is_groebner k={k}", witness, rep.is_groebner))
        if k < n:
            out.append(CheckRecord(f"minimal k={k}", f"{len(cand)} elements", rep.minimal))
        G = GroebnerBasis(cand, NEGLEX, n, interreduced=False)
        std = standard_monomials(G)
        artin = artin_monomials(n, k)
        out.append(CheckRecord(f"standard = A k={k}", f"{len(std)} monomials", sorted(std) == sorted(artin)))
        graded, expected = _graded_counts(std), _graded_counts(artin)
        out.append(CheckRecord(f"graded counts k={k}", str(graded), graded == expected))
        IN = ctx.ideal_basis(n, k, NEGLEX)
        out.append(CheckRecord(f"ideal(candidates) = I k={k}", f"{len(IN)} reduced elements", ideal_equal(G, IN)))
        sizes = {
            "|OP|": len(enumerate_osp(n, k)),
            "k!S(n,k)": osp_count(n, k),
            "|A|": len(artin),
            "|GS|": len(gs_monomials(n, k)),
            "dim": len(standard_monomials(IN)),
        }
        out.append(CheckRecord(f"dimension chain k={k}", json.dumps(sizes), len(set(sizes.values())) == 1))


def verify_gs_basis(ctx: Context, out: list[CheckRecord]) -> None:
    n = ctx.n
    for k in ctx.ks():
        G = ctx.ideal_basis(n, k, NEGLEX)
        std = standard_monomials(G)
        index = {m: a for a, m in enumerate(std)}
        gs = gs_monomials(n, k)
        vectors, nonzero = [], True
        for m in gs:
            r = normal_form(MPoly.monomial(m), G)
            nonzero &= not r.is_zero()
            v = [ZERO] * len(std)
            for mono, c in r.terms.items():
                v[index[mono]] = c
            vectors.append(v)
        rank = qrat_rank(vectors)
        out.append(CheckRecord(f"GS normal forms nonzero k={k}", f"{len(gs)} monomials", nonzero))
        out.append(CheckRecord(f"GS rank k={k}", f"{rank} vs {osp_count(n, k)}", rank == osp_count(n, k) == len(gs)))


def verify_frobenius(ctx: Context, out: list[CheckRecord]) -> None:
    n = ctx.n
    for k in ctx.ks():
        E = graded_frobenius_formula(n, k)
        out.append(CheckRecord(f"grFrob k={k}", str(E), True))
        G = ctx.ideal_basis(n, k, NEGLEX)
        hf, hE = hilbert_function(G), hilbert_from_frobenius(E)
        out.append(CheckRecord(f"Hilbert series k={k}", f"{hf} vs {hE}", hf == hE))
        A = build_matrix_action(n, k, G)
        for r in character_records(A, E):
            out.append(
                CheckRecord(
                    f"character k={k} class={r.cls} degree={r.degree}",
                    f"trace={r.trace} expected={r.expected}",
                    r.passed,
                )
            )


def verify_ungraded(ctx: Context, out: list[CheckRecord]) -> None:
    n = ctx.n
    for k in ctx.ks():
        A = build_matrix_action(n, k, ctx.ideal_basis(n, k, NEGLEX))
        for mu in partitions(n):
            w = class_representative(mu)
            got, want = character_at_q1(A, w)(1), permutation_character_osp(n, k, w)
            out.append(CheckRecord(f"ungraded k={k} class={mu}", f"{got} vs {want}", got == want))


def verify_meyer(ctx: Context, out: list[CheckRecord], trials: int = 5) -> None:
    rng = random.Random(ctx.seed)
    for t in range(trials):
        Y = random_symmetric_point_set(rng, ctx.n)
        Yq = quantize_points(Y)
        T = top_component_ideal(Yq, pair_budget=ctx.budget)
        bad = [r for r in check_stability(T, T.elements) if not r.passed]
        witness = f"{len(Y)} points, {len(T)} basis elements"
        if bad:
            witness += f"; T{bad[0].i} g={bad[0].generator} NF={bad[0].normal_form}"
        out.append(CheckRecord(f"meyer trial {t}", witness, not bad))


def verify_hl_oracle(ctx: Context, out: list[CheckRecord]) -> None:
    top = ctx.n
    for d in range(1, top + 1):
        for i in range(1, top + 1):
            P = hall_littlewood_P(d, i)
            out.append(CheckRecord(f"P{d}(x1..x{i}) expansion = generating function", "", P == hall_littlewood_P_gf(d, i)))
            out.append(CheckRecord(f"P{d}(x1..x{i}; 1) = p{d}", "", P.specialize(1) == power_sum(d, i)))
            out.append(CheckRecord(f"P{d}(x1..x{i}; 0) = h{d}", "", P.specialize(0) == homogeneous_sym(d, i)))


STATEMENTS: dict[str, Callable[[Context, list], None]] = {
    "hecke-relations": verify_hecke_relations,
    "osp-action": verify_osp_action,
    "closure": verify_closure,
    "stability": verify_stability,
    "point-theorem": verify_point_theorem,
    "groebner": verify_groebner,
    "gs-basis": verify_gs_basis,
    "frobenius": verify_frobenius,
    "ungraded": verify_ungraded,
    "meyer": verify_meyer,
    "hl-oracle": verify_hl_oracle,
}

# largest n accepted without --allow-large
STATEMENT_LIMITS = {
    "hecke-relations": 5,
    "osp-action": 5,
    "closure": 5,
    "stability": 5,
    "point-theorem": 5,
    "groebner": 5,
    "gs-basis": 5,
    "frobenius": 4,
    "ungraded": 4,
    "meyer": 4,
    "hl-oracle": 5,
}


def run_statement(name: str, ctx: Context) -> VerificationReport:
    """Run one statement.  A budget overrun is recorded in ``report.error`` and
    the records gathered before it are kept."""
    params = {
        "n": ctx.n,
        "k": ctx.k,
        "alpha": None if ctx.alpha is None else [str(a) for a in ctx.alpha],
        "order": ctx.order.name,
        "seed": ctx.seed,
    }
    report = VerificationReport(name, params)
    start = perf_counter()
    try:
        STATEMENTS[name](ctx, report.records)
    except ResourceBudgetExceeded as exc:
        report.error = str(exc)
    report.wall_time = perf_counter() - start
    return report

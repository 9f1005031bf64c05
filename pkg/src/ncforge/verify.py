"""Check registry and verification engine.

Every computational claim in scope is a named check producing a
:class:`Report`: a status plus enough structured evidence to reconstruct
the verdict.  Reports are deterministic byte-for-byte given the same
:class:`CheckConfig` (fixed seed, fixed grids, no timestamps).

Grid scans sample deformation parameters over a default grid covering
every degenerate locus the theory names (alpha2 = 3*alpha1,
alpha2 = -alpha1, alpha3 = 0, gamma^3 = -beta^3), augmented with seeded
random points.  Finite-field caveat: identities verified pointwise over
F_p are evidence for the statements over the paper-level base field, and
each grid report records this as ``pointwise verification``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable, Optional

from . import gbasis, linalg, models, structure
from .field import PrimeField
from .freealg import Alphabet, NcPoly
from .models import ABC, ABCD, ABCY, ModelParams, ParameterDomainError
from .structure import AlgebraTable

GRID_VALUES = (0, 1, -1, 2, 3)
E3_WORD_NAMES = ("1", "a", "b", "c", "ab", "ac", "ba", "bc", "aba", "abc", "bac", "abac")
E3_WORDS = tuple(() if s == "1" else tuple(ABC.index[ch] for ch in s)
                 for s in E3_WORD_NAMES)


@dataclass
class CheckConfig:
    field: object = None
    seed: int = 42
    degree_bound: int = 12
    max_rules: int = 200
    grid: Optional[list] = None
    trials: int = 50

    def __post_init__(self):
        if self.field is None:
            self.field = PrimeField(10009)
        if self.trials < 1:
            raise ValueError("trials must be >= 1")


@dataclass
class Report:
    check_id: str
    status: str                      # pass | fail | skipped | error
    details: dict = dc_field(default_factory=dict)
    error_bound: Optional[str] = None

    def to_dict(self) -> dict:
        out = {"check_id": self.check_id, "status": self.status,
               "details": self.details}
        if self.error_bound is not None:
            out["error_bound"] = self.error_bound
        return out


class UnknownCheckError(KeyError):
    pass


# ---------------------------------------------------------------------------
# grids
# ---------------------------------------------------------------------------

def default_pair_grid(cfg: CheckConfig) -> list[tuple]:
    """{0,1,-1,2,3}^2 plus 20 seeded random points."""
    pts = [(a, b) for a in GRID_VALUES for b in GRID_VALUES]
    rng = random.Random(cfg.seed)
    span = cfg.field.modulus or 10009
    for _ in range(20):
        pts.append((rng.randrange(span), rng.randrange(span)))
    return pts


def default_triple_grid(cfg: CheckConfig) -> list[tuple]:
    """Each pair extended by alpha3 in {0, 1, -1, -beta^3, random}."""
    rng = random.Random(cfg.seed + 1)
    span = cfg.field.modulus or 10009
    pts = []
    for a1, a2 in default_pair_grid(cfg):
        beta = 3 * a1 - a2
        for a3 in (0, 1, -1, -beta ** 3, rng.randrange(span)):
            pts.append((a1, a2, a3))
    return pts


def grid_for(check_id: str, cfg: CheckConfig) -> list[tuple]:
    if cfg.grid:
        return [tuple(p) for p in cfg.grid]
    arity = CHECKS[check_id].grid_arity
    return default_pair_grid(cfg) if arity == 2 else default_triple_grid(cfg)


# ---------------------------------------------------------------------------
# shared context and helpers
# ---------------------------------------------------------------------------

class CheckContext:
    """Per-run caches: completed systems (all) and tables (bounded LRU)."""

    def __init__(self, cfg: CheckConfig):
        self.cfg = cfg
        self.field = cfg.field
        self._systems: dict = {}
        self._tables: dict = {}
        self._table_order: list = []

    def params(self, point, **kw) -> ModelParams:
        return ModelParams.make(self.field, *point, **kw)

    def system(self, model: str, point) -> gbasis.RewriteSystem:
        key = (model, tuple(point))
        if key not in self._systems:
            pres = models.presentation(model, self.params(point))
            self._systems[key] = gbasis.complete(
                pres, self.cfg.degree_bound, self.cfg.max_rules)
        return self._systems[key]

    def table(self, model: str, point) -> AlgebraTable:
        key = (model, tuple(point))
        if key not in self._tables:
            t = structure.build_table(self.system(model, point))
            self._tables[key] = t
            self._table_order.append(key)
            if len(self._table_order) > 8:
                self._tables.pop(self._table_order.pop(0), None)
        return self._tables[key]


def _jscalar(x):
    """JSON-safe scalar."""
    if isinstance(x, Fraction):
        return str(x)
    return x


def _word_names(rs: gbasis.RewriteSystem) -> list[str]:
    return [rs.alphabet.word_str(w) for w in gbasis.normal_words(rs)]


def _pbw_rank(ctx: CheckContext, table: AlgebraTable, factors_list) -> int:
    """Rank of the listed PBW products, each a list of (poly, power)."""
    vecs = []
    for factors in factors_list:
        el = table.unit()
        for poly, n in factors:
            base = table.from_poly(poly)
            for _ in range(n):
                el = el * base
        vecs.append(el.coords)
    return linalg.rank(vecs, table.field)


def _d3_pbw_factors(params: ModelParams, alphabet=ABC, with_y=False, with_d=False):
    """(a-b)^n1 a^n2 c^n3 [y^n4] [d^n5] exponent grid, deglex-agnostic order."""
    F = params.field
    g = {n: NcPoly.gen(alphabet, F, n) for n in alphabet.names}
    u = g["a"] - g["b"]
    out = []
    y = models.derived_element("y", params, alphabet) if with_y else None
    n4r = range(3) if with_y else (0,)
    n5r = range(2) if with_d else (0,)
    for n1 in range(3):
        for n2 in range(2):
            for n3 in range(2):
                for n4 in n4r:
                    for n5 in n5r:
                        fs = [(u, n1), (g["a"], n2), (g["c"], n3)]
                        if with_y:
                            fs.append((y, n4))
                        if with_d:
                            fs.append((g["d"], n5))
                        out.append(fs)
    return out


def _semisimple_locus_d3(F, params: ModelParams) -> bool:
    val = F.mul(params.beta, F.add(params.alpha1, params.alpha2))
    return not F.is_zero(val)


def _semisimple_locus_t(F, params: ModelParams) -> bool:
    b2 = F.mul(params.beta, params.beta)
    inner = F.add(params.alpha3, F.mul(F.add(params.alpha1, params.alpha2), b2))
    return not F.is_zero(F.mul(params.alpha3, inner))


def _int_poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


# ---------------------------------------------------------------------------
# the checks
# ---------------------------------------------------------------------------

class Check:
    def __init__(self, fn: Callable, doc: str, grid_arity: int = 0):
        self.fn = fn
        self.doc = doc
        self.grid_arity = grid_arity   # 0: fixed points; 2 or 3: scannable


CHECKS: dict[str, Check] = {}


def _register(check_id: str, doc: str, grid_arity: int = 0):
    def deco(fn):
        CHECKS[check_id] = Check(fn, doc, grid_arity)
        return fn
    return deco


@_register("e3-basis", "undeformed 12-dim basis and Hilbert series", 0)
def _check_e3_basis(ctx: CheckContext) -> Report:
    rs = ctx.system("E3", (0, 0))
    words = gbasis.normal_words(rs)
    hilb = gbasis.hilbert_series(rs, 6)
    expansion = _int_poly_mul(_int_poly_mul([1, 1], [1, 1]), [1, 1, 1])
    det = {
        "normal_words": _word_names(rs),
        "expected_words": list(E3_WORD_NAMES),
        "hilbert": hilb[:5],
        "hilbert_tail_zero": hilb[5:],
        "closed_form": expansion,
        "certified": rs.certified,
    }
    ok = (set(words) == set(E3_WORDS) and len(words) == 12
          and hilb == [1, 3, 4, 3, 1, 0, 0] and expansion == [1, 3, 4, 3, 1]
          and rs.certified)
    return Report("e3-basis", "pass" if ok else "fail", det)


D3_SAMPLE_POINTS = ((1, 1), (1, 3), (2, -1), (0, 1), (3, 2))


def _expected_d3_rules(params: ModelParams):
    F = params.field
    g = {n: NcPoly.gen(ABC, F, n) for n in "abc"}
    a, b, c = g["a"], g["b"], g["c"]
    a1, a2 = params.alpha1, params.alpha2
    one = NcPoly.one(ABC, F)
    return [
        (("a", "a"), one * a1),
        (("b", "b"), one * a1),
        (("c", "a"), a2 - b * c - a * b),
        (("c", "b"), a2 - b * a - a * c),
        (("c", "c"), one * a1),
        (("b", "a", "b"), a * b * a + a2 * b - a2 * a),
    ]


@_register("d3-groebner", "six-rule completed basis with exact tails", 0)
def _check_d3_groebner(ctx: CheckContext) -> Report:
    F = ctx.field
    points = []
    all_ok = True
    for pt in D3_SAMPLE_POINTS:
        rs = ctx.system("D3", pt)
        params = ctx.params(pt)
        expected = {tuple(ABC.index[x] for x in lead): tail
                    for lead, tail in _expected_d3_rules(params)}
        got = {lead: tail for lead, tail in rs.rules}
        ok = (set(got) == set(expected)
              and all(got[lead] == expected[lead] for lead in expected)
              and rs.certified)
        all_ok = all_ok and ok
        points.append({
            "point": list(pt), "ok": ok, "rules": len(rs.rules),
            "lead_words": [ABC.word_str(l) for l in rs.lead_words],
        })
    return Report("d3-groebner", "pass" if all_ok else "fail",
                  {"points": points, "expected_leads": ["a^2", "b^2", "c*a", "c*b", "c^2", "b*a*b"]})


@_register("d3-flatness", "dimension 12 and PBW basis across the grid", 2)
def _check_d3_flatness(ctx: CheckContext, grid=None) -> Report:
    grid = grid if grid is not None else default_pair_grid(ctx.cfg)
    entries = []
    all_ok = True
    for pt in grid:
        rs = ctx.system("D3", pt)
        words = gbasis.normal_words(rs)
        table = ctx.table("D3", pt)
        rank = _pbw_rank(ctx, table, _d3_pbw_factors(ctx.params(pt)))
        ok = set(words) == set(E3_WORDS) and len(words) == 12 and rank == 12
        all_ok = all_ok and ok
        entries.append({"point": list(pt), "dim": len(words), "pbw_rank": rank, "ok": ok})
    return Report("d3-flatness", "pass" if all_ok else "fail",
                  {"points": entries, "note": "pointwise verification over " + ctx.field.name})


@_register("d3-semisimple", "semisimplicity locus (3a1-a2)(a1+a2) != 0", 2)
def _check_d3_semisimple(ctx: CheckContext, grid=None) -> Report:
    grid = grid if grid is not None else default_pair_grid(ctx.cfg)
    F = ctx.field
    entries = []
    all_ok = True
    for pt in grid:
        params = ctx.params(pt)
        table = ctx.table("D3", pt)
        ss = structure.is_semisimple(table)
        predicted = _semisimple_locus_d3(F, params)
        ok = ss == predicted
        cdim = None
        if ss and ok:
            cdim = structure.center(table).dim
            ok = cdim == 3
        all_ok = all_ok and ok
        entries.append({"point": list(pt), "semisimple": ss,
                        "predicted": predicted, "center_dim": cdim, "ok": ok})
    return Report("d3-semisimple", "pass" if all_ok else "fail",
                  {"points": entries, "note": "pointwise verification over " + ctx.field.name})


@_register("d3-degenerate", "radicals and corners on the two degenerate lines", 0)
def _check_d3_degenerate(ctx: CheckContext) -> Report:
    F = ctx.field
    det: dict = {}
    ok = True

    # alpha2 = 3*alpha1 at (1, 3): nilpotent ideal of codimension 2
    table = ctx.table("D3", (1, 3))
    a = table.from_poly(NcPoly.gen(ABC, F, "a"))
    b = table.from_poly(NcPoly.gen(ABC, F, "b"))
    c = table.from_poly(NcPoly.gen(ABC, F, "c"))
    ideal = structure.two_sided_ideal(table, [a - b, b - c])
    nil = structure.nilpotency_index(table, ideal)
    rad = structure.radical(table)
    det["line_3a1"] = {
        "point": [1, 3], "ideal_dim": ideal.dim, "quotient_dim": table.dim - ideal.dim,
        "nilpotency_index": nil, "radical_dim": rad.dim,
        "radical_equals_ideal": rad == ideal,
    }
    ok &= (ideal.dim == 10 and table.dim - ideal.dim == 2
           and nil is not None and nil <= 5 and rad == ideal)

    # alpha1 + alpha2 = 0 at (1, -1): corner is a Clifford algebra with
    # 1-dim form radical generating the algebra radical
    table2 = ctx.table("D3", (1, -1))
    params2 = ctx.params((1, -1))
    rad2 = structure.radical(table2)
    e3 = table2.from_poly(models.derived_element("e3", params2, ABC))
    e3_poly = models.derived_element("e3", params2, ABC)
    cornert, emb = structure.corner_embedding(table2, e3)
    q = models.quadratic_form("FK3_CORNER", params2)
    gen = table2.from_poly(e3_poly * (NcPoly.gen(ABC, F, "a") + NcPoly.gen(ABC, F, "c")))
    # express the form-radical generator inside the corner and compare ideals
    inc = linalg.IncrementalBasis(F, table2.dim)
    for v in emb:
        inc.add(v)
    gen_corner = inc.express(gen.coords)
    corner_rad = structure.radical(cornert)
    corner_ideal = structure.two_sided_ideal(cornert, [gen_corner])
    det["line_a1_plus_a2"] = {
        "point": [1, -1], "radical_dim": rad2.dim, "corner_dim": cornert.dim,
        "form_radical_dim": q.radical_dim(),
        "corner_radical_dim": corner_rad.dim,
        "corner_radical_generated_by_form_radical": corner_rad == corner_ideal,
    }
    ok &= (rad2.dim > 0 and cornert.dim == 4 and q.radical_dim() == 1
           and corner_rad == corner_ideal and corner_rad.dim == 2)
    return Report("d3-degenerate", "pass" if ok else "fail", det)


def _points_with_beta(ctx: CheckContext, n: int) -> list[tuple]:
    out = []
    for pt in default_pair_grid(ctx.cfg):
        if not ctx.field.is_zero(ctx.params(pt).beta):
            out.append(pt)
        if len(out) == n:
            break
    return out


@_register("d3-idempotents", "central orthogonal idempotents summing to 1", 0)
def _check_d3_idempotents(ctx: CheckContext) -> Report:
    F = ctx.field
    entries = []
    all_ok = True
    for pt in _points_with_beta(ctx, 5):
        params = ctx.params(pt)
        table = ctx.table("D3", pt)
        es = []
        forms_agree = True
        for name in ("e1", "e2", "e3"):
            e = table.from_poly(models.derived_element(name, params, ABC))
            alt = table.from_poly(models.derived_element(name + "_alt", params, ABC))
            forms_agree = forms_agree and e == alt
            es.append(e)
        gens = [table.from_poly(NcPoly.gen(ABC, F, x)) for x in "abc"]
        idem = all((e * e) == e for e in es)
        orth = all((es[i] * es[j]).is_zero() for i in range(3) for j in range(3) if i != j)
        central = all(e.commutator(g).is_zero() for e in es for g in gens)
        total = es[0] + es[1] + es[2] == table.unit()
        ok = forms_agree and idem and orth and central and total
        all_ok = all_ok and ok
        entries.append({"point": list(pt), "both_forms_agree": forms_agree,
                        "idempotent": idem, "orthogonal": orth,
                        "central": central, "sum_is_one": total, "ok": ok})
    return Report("d3-idempotents", "pass" if all_ok else "fail", {"points": entries})


@_register("d3-corner", "4-dim corner with its Clifford relations", 0)
def _check_d3_corner(ctx: CheckContext) -> Report:
    F = ctx.field
    entries = []
    all_ok = True
    for pt in _points_with_beta(ctx, 5):
        params = ctx.params(pt)
        table = ctx.table("D3", pt)
        e3p = models.derived_element("e3", params, ABC)
        e3 = table.from_poly(e3p)
        cornert = structure.corner(table, e3)
        ea = table.from_poly(e3p * NcPoly.gen(ABC, F, "a"))
        ec = table.from_poly(e3p * NcPoly.gen(ABC, F, "c"))
        sq = ea * ea == e3.scale(params.alpha1) and ec * ec == e3.scale(params.alpha1)
        anti = ec * ea + ea * ec == e3.scale(F.sub(params.alpha2, params.alpha1))
        conseq = (ea - ec) ** 2 == e3.scale(params.beta)
        ok = cornert.dim == 4 and sq and anti and conseq
        all_ok = all_ok and ok
        entries.append({"point": list(pt), "corner_dim": cornert.dim,
                        "squares": sq, "anticommutator": anti,
                        "difference_square": conseq, "ok": ok})
    return Report("d3-corner", "pass" if all_ok else "fail", {"points": entries})


HALL_POINTS = ((1, 1), (1, 3), (1, -1), (0, 0), (2, 1),
               (0, 1), (3, 1), (2, -1), (1, 0), (3, 2))


def pi_test(table: AlgebraTable, identity: str, cfg: CheckConfig,
            elements=None) -> Report:
    """Randomized polynomial-identity test; for 'hall': [[x,y]^2, z] = 0.

    Draws coordinate vectors uniformly; the identity has total degree 5
    in the coordinates, so a false identity survives all trials with
    probability at most (5/p)^trials (Schwartz-Zippel).
    """
    if identity != "hall":
        raise UnknownCheckError(f"unknown identity {identity!r}")
    F = table.field
    span = F.modulus or 10009
    rng = random.Random(cfg.seed)
    failures = []
    trials = 1 if elements is not None else cfg.trials
    for t in range(trials):
        if elements is not None:
            x, y, z = (table.element(e) for e in elements)
        else:
            x, y, z = (structure.Element(
                table, [rng.randrange(span) for _ in range(table.dim)])
                for _ in range(3))
        comm = x.commutator(y)
        value = (comm * comm).commutator(z)
        if not value.is_zero():
            failures.append(t)
    bound = Fraction(5, span) ** trials
    det = {"identity": identity, "trials": trials, "failures": failures,
           "dim": table.dim}
    return Report("pi-test", "pass" if not failures else "fail", det,
                  error_bound=f"(5/{span})^{trials} = {bound.numerator}/{bound.denominator}")


@_register("hall-identity", "[[x,y]^2,z] = 0 across deformation points", 0)
def _check_hall(ctx: CheckContext) -> Report:
    entries = []
    all_ok = True
    bound = None
    for pt in HALL_POINTS:
        table = ctx.table("D3", pt)
        rep = pi_test(table, "hall", ctx.cfg)
        bound = rep.error_bound
        ok = rep.status == "pass"
        all_ok = all_ok and ok
        entries.append({"point": list(pt), "trials": rep.details["trials"], "ok": ok})
    return Report("hall-identity", "pass" if all_ok else "fail",
                  {"points": entries}, error_bound=bound)


K_SUITE_POINTS = D3_SAMPLE_POINTS
K_SUITES = ("k-generator-commutation", "k-eigenvector", "k-power")


@_register("k-suites", "derived relation suites vanish in the y-extension", 0)
def _check_k_suites(ctx: CheckContext) -> Report:
    entries = []
    all_ok = True
    for pt in K_SUITE_POINTS:
        params = ctx.params(pt, need_zeta=True)
        rs = ctx.system("K", pt)
        row = {"point": list(pt)}
        for suite in K_SUITES:
            polys = models.relation_suite(suite, params)
            row[suite] = all(gbasis.contains(rs, p) for p in polys)
        ok = all(row[s] for s in K_SUITES)
        all_ok = all_ok and ok
        row["ok"] = ok
        entries.append(row)
    return Report("k-suites", "pass" if all_ok else "fail", {"points": entries})


@_register("k-flatness", "dimension 36 and PBW basis across the grid", 3)
def _check_k_flatness(ctx: CheckContext, grid=None) -> Report:
    grid = grid if grid is not None else default_triple_grid(ctx.cfg)
    entries = []
    all_ok = True
    for pt in grid:
        rs = ctx.system("K3", pt)
        dim = len(gbasis.normal_words(rs))
        table = ctx.table("K3", pt)
        rank = _pbw_rank(ctx, table, _d3_pbw_factors(ctx.params(pt), ABCY, with_y=True))
        ok = dim == 36 and rank == 36
        all_ok = all_ok and ok
        entries.append({"point": list(pt), "dim": dim, "pbw_rank": rank, "ok": ok})
    return Report("k-flatness", "pass" if all_ok else "fail",
                  {"points": entries, "note": "pointwise verification over " + ctx.field.name})


RHO_POINTS = ((1, 0, 1), (1, 1, 1), (2, 1, 1), (1, 3, 1), (0, 1, 2),
              (1, -1, 1), (2, 3, 2), (3, 1, 1), (1, 2, 2), (2, -1, 3))


@_register("rho-matrices", "3x3 Clifford matrices realize the y-extension", 0)
def _check_rho(ctx: CheckContext) -> Report:
    F = ctx.field
    entries = []
    all_ok = True
    zeta = F.primitive_cube_root()
    for a1, a2, g in RHO_POINTS:
        gamma = F.of(g)
        g3 = F.mul(F.mul(gamma, gamma), gamma)
        params = ModelParams(F, a1, a2, alpha3=g3, gamma=gamma, zeta=zeta)
        row = {"point": [a1, a2, g]}
        try:
            Y, A, B, C, ctab = models.rho_matrices(params)
        except ParameterDomainError as exc:
            row["skipped"] = str(exc)
            entries.append(row)
            continue
        I1 = models.MatrixOverAlgebra.scalar(ctab, 3, params.alpha1)
        I2 = models.MatrixOverAlgebra.scalar(ctab, 3, params.alpha2)
        rel_sq = A * A == I1 and B * B == I1 and C * C == I1
        rel_cyc1 = A * B + B * C + C * A == I2
        rel_cyc2 = A * C + C * B + B * A == I2 + Y
        rel_y = Y ** 3 == models.MatrixOverAlgebra.scalar(ctab, 3, g3)
        row.update({"squares": rel_sq, "first_cyclic": rel_cyc1,
                    "second_cyclic": rel_cyc2, "y_cube": rel_y})
        ok = rel_sq and rel_cyc1 and rel_cyc2 and rel_y
        # simple-module condition: gamma (gamma^3+beta^3)(4 a1 g^3 + b^3 (a1+a2))
        beta = params.beta
        b3 = F.mul(F.mul(beta, beta), beta)
        cond = F.mul(F.mul(gamma, F.add(g3, b3)),
                     F.add(F.mul(F.of(4), F.mul(params.alpha1, g3)),
                           F.mul(b3, F.add(params.alpha1, params.alpha2))))
        row["simple_module_condition_nonzero"] = not F.is_zero(cond)
        if not F.is_zero(cond):
            mat = structure.matrix_algebra(ctab, 3)
            gens = [M.flatten_coords() for M in (A, B, C, Y)]
            sub = structure.subalgebra_with_unit(mat, gens)
            row["image_subalgebra_dim"] = sub.dim
            ok = ok and sub.dim == 36
        all_ok = all_ok and ok
        row["ok"] = ok
        entries.append(row)
    return Report("rho-matrices", "pass" if all_ok else "fail", {"points": entries})


PEIRCE_POINTS = ((1, 1, 1), (1, 0, 1), (2, -1, 1))


@_register("k-peirce", "corner Clifford algebra and 3x3 Peirce pieces", 0)
def _check_k_peirce(ctx: CheckContext) -> Report:
    F = ctx.field
    entries = []
    all_ok = True
    zeta = F.primitive_cube_root()
    for a1, a2, g in PEIRCE_POINTS:
        gamma = F.of(g)
        g3 = F.mul(F.mul(gamma, gamma), gamma)
        params = ModelParams(F, a1, a2, alpha3=g3, gamma=gamma, zeta=zeta)
        table = ctx.table("K3", (a1, a2, g3))
        row = {"point": [a1, a2, g]}
        yp = NcPoly.gen(ABCY, F, "y")
        y = table.from_poly(yp)
        # eigen-idempotent e = (y^2 + gamma y + gamma^2) / (3 gamma^2)
        denom = F.inv(F.mul(F.of(3), F.mul(gamma, gamma)))
        e = (y * y + y.scale(gamma) + table.unit().scale(F.mul(gamma, gamma))).scale(denom)
        idem = e * e == e and not e.is_zero()
        eig = y * e == e.scale(gamma)
        # primitivity inside span{1, y, y^2}: e K[y] e is one-dimensional
        sandwich = [(e * (y ** k) * e).coords for k in range(3)]
        primitive = linalg.rank(sandwich, F) == 1
        cornert, emb = structure.corner_embedding(table, e)
        q = models.quadratic_form("Q_GAMMA", params)
        t_el = table.from_poly(models.derived_element("t", params, ABCY))
        vp = table.from_poly(models.derived_element("vplus", params, ABCY))
        x1 = e * t_el
        x2 = e * vp ** 3
        clifford = (
            x1 * x1 == e.scale(q.diagonal[0])
            and x2 * x2 == e.scale(q.diagonal[1])
            and x1 * x2 + x2 * x1 == e.scale(F.mul(F.of(2), q.gram[0][1])))
        # invertibility witness x = v+ + lam v-^2 with y x = zeta x y
        vm = table.from_poly(models.derived_element("vminus", params, ABCY))
        witness = None
        # lam = 0 works when alpha3 + beta^3 != 0; small lam covers the rest
        for lam in range(min(64, F.modulus or 10009)):
            cand = vp + (vm * vm).scale(F.of(lam))
            if structure.is_invertible(table, cand):
                witness = lam
                x = cand
                break
        twisted = witness is not None and y * x == (x * y).scale(zeta)
        pieces = []
        stacked = []
        if witness is not None:
            xp = [table.unit()]
            for _ in range(2):
                xp.append(xp[-1] * x)
            for i in range(3):
                for j in range(3):
                    rows = [ (xp[i] * table.element(v) * xp[j]).coords for v in emb ]
                    sub = structure.Subspace.from_vectors(rows, F, table.dim)
                    pieces.append(sub.dim)
                    stacked.extend(sub.rows)
        total_rank = linalg.rank(stacked, F) if stacked else 0
        ok = (idem and eig and primitive and cornert.dim == 4 and clifford
              and twisted and sum(pieces) == 36 and total_rank == 36)
        all_ok = all_ok and ok
        row.update({"idempotent": idem, "eigenvalue": eig, "primitive": primitive,
                    "corner_dim": cornert.dim, "clifford_relations": clifford,
                    "witness_lambda": witness, "twisted_commutation": twisted,
                    "piece_dims": pieces, "pieces_total": sum(pieces),
                    "direct_sum_rank": total_rank, "ok": ok})
        entries.append(row)
    return Report("k-peirce", "pass" if all_ok else "fail", {"points": entries})


@_register("t-hilbert", "72-dim undeformed algebra and its Hilbert series", 0)
def _check_t_hilbert(ctx: CheckContext) -> Report:
    rs = ctx.system("B", (0, 0, 0))
    hilb = gbasis.hilbert_series(rs, 9)
    dim = len(gbasis.normal_words(rs))
    closed = _int_poly_mul(
        _int_poly_mul(_int_poly_mul([1, 1], [1, 1]), _int_poly_mul([1, 1], [1, 1, 1])),
        [1, 0, 1, 0, 1])
    expected = [1, 4, 8, 11, 12, 12, 11, 8, 4, 1]
    det = {"dim": dim, "hilbert": hilb, "expected": expected,
           "closed_form": closed, "certified": rs.certified}
    ok = dim == 72 and hilb == expected and closed == expected and rs.certified
    return Report("t-hilbert", "pass" if ok else "fail", det)


@_register("t-degree6", "the two degree-6 relation forms are interchangeable", 0)
def _check_t_degree6(ctx: CheckContext) -> Report:
    F = ctx.field
    rsb = ctx.system("B", (0, 0, 0))
    rst = ctx.system("T", (0, 0, 0))
    g = {n: NcPoly.gen(ABCD, F, n) for n in "abcd"}
    a, b, c = g["a"], g["b"], g["c"]
    y0 = c * b + b * a + a * c
    sum6 = (a + b + c) ** 6
    cba, bac, acb = c * b * a, b * a * c, a * c * b
    remark = y0 ** 3 - (cba * cba + bac * bac + acb * acb)
    det = {
        "t_relation_in_b_ideal": gbasis.contains(rsb, y0 ** 3),
        "b_relation_in_t_ideal": gbasis.contains(rst, sum6),
        "remark_identity_in_b_ideal": gbasis.contains(rsb, remark),
        "dims": [len(gbasis.normal_words(rsb)), len(gbasis.normal_words(rst))],
    }
    ok = all(det[k] for k in ("t_relation_in_b_ideal", "b_relation_in_t_ideal",
                              "remark_identity_in_b_ideal")) and det["dims"] == [72, 72]
    return Report("t-degree6", "pass" if ok else "fail", det)


@_register("t-flatness", "dimension 72 and PBW basis across the grid", 3)
def _check_t_flatness(ctx: CheckContext, grid=None) -> Report:
    grid = grid if grid is not None else default_triple_grid(ctx.cfg)
    entries = []
    all_ok = True
    for pt in grid:
        rs = ctx.system("T", pt)
        dim = len(gbasis.normal_words(rs))
        table = ctx.table("T", pt)
        rank = _pbw_rank(ctx, table,
                         _d3_pbw_factors(ctx.params(pt), ABCD, with_y=True, with_d=True))
        ok = dim == 72 and rank == 72
        all_ok = all_ok and ok
        entries.append({"point": list(pt), "dim": dim, "pbw_rank": rank, "ok": ok})
    return Report("t-flatness", "pass" if all_ok else "fail",
                  {"points": entries, "note": "pointwise verification over " + ctx.field.name})


@_register("t-semisimple", "semisimplicity locus a3(a3+(a1+a2)(3a1-a2)^2) != 0", 3)
def _check_t_semisimple(ctx: CheckContext, grid=None) -> Report:
    grid = grid if grid is not None else default_triple_grid(ctx.cfg)
    F = ctx.field
    entries = []
    skipped = []
    all_ok = True
    for pt in grid:
        try:
            params = ctx.params(pt, need_gamma=True)
        except ParameterDomainError as exc:
            skipped.append({"point": list(pt), "reason": str(exc)})
            continue
        table = ctx.table("T", pt)
        ss = structure.is_semisimple(table)
        predicted = _semisimple_locus_t(F, params)
        ok = ss == predicted
        cdim = None
        if ss and ok:
            cdim = structure.center(table).dim
            ok = cdim == 2
        all_ok = all_ok and ok
        entries.append({"point": list(pt), "semisimple": ss,
                        "predicted": predicted, "center_dim": cdim, "ok": ok})
    status = "pass" if all_ok else "fail"
    if not entries:
        status = "skipped"
    return Report("t-semisimple", status,
                  {"points": entries, "skipped_points": skipped,
                   "note": "pointwise verification over " + ctx.field.name
                           + "; points without a cube root of alpha3 are skipped"})


ORE_T_POINTS = ((1, 1, 1), (1, 2, 3), (0, 0, 1))


@_register("ore-equivariance", "Ore datum and module-algebra actions", 0)
def _check_ore(ctx: CheckContext) -> Report:
    F = ctx.field
    det: dict = {}
    ok = True

    sigma_rows = []
    for pt in K_SUITE_POINTS:
        params = ctx.params(pt)
        rs = ctx.system("K", pt)
        sigma, partial = models.ore_data(params)
        rels = models.presentation("K", params).relations
        s_ok = all(gbasis.contains(rs, sigma(r)) for r in rels)
        d_ok = all(gbasis.contains(rs, partial(r)) for r in rels)
        sigma_rows.append({"point": list(pt), "sigma_preserves": s_ok,
                           "partial_kills": d_ok})
        ok &= s_ok and d_ok
    det["ore"] = sigma_rows

    params0 = ctx.params(K_SUITE_POINTS[0])
    sigma, _ = models.ore_data(params0)
    s3 = sigma.compose(sigma).compose(sigma)
    gens = [NcPoly.gen(ABCY, F, i) for i in range(4)]
    sigma_cubed = (all(s3(g) == -g for g in gens[:3]) and s3(gens[3]) == gens[3])
    s6 = s3.compose(s3)
    det["sigma_cubed_is_minus_id"] = sigma_cubed
    det["sigma_sixth_is_id"] = all(s6(g) == g for g in gens)
    ok &= sigma_cubed and det["sigma_sixth_is_id"]

    d3_rows = []
    for pt in K_SUITE_POINTS:
        rs = ctx.system("D3", pt)
        rels = models.presentation("D3", ctx.params(pt)).relations
        row_ok = all(gbasis.contains(rs, m(r))
                     for m in models.group_action("D3", F) for r in rels)
        d3_rows.append({"point": list(pt), "equivariant": row_ok})
        ok &= row_ok
    det["s3_on_d3"] = d3_rows

    t_rows = []
    for pt in ORE_T_POINTS:
        params = ctx.params(pt)
        rs = ctx.system("T", pt)
        rels = models.presentation("T", params).relations
        act_ok = all(gbasis.contains(rs, m(r))
                     for m in models.group_action("T", F) for r in rels)
        suite_ok = all(gbasis.contains(rs, p)
                       for p in models.relation_suite("t-y-commutation", params))
        t_rows.append({"point": list(pt), "equivariant": act_ok,
                       "y_commutation": suite_ok})
        ok &= act_ok and suite_ok
    det["rack_group_on_t"] = t_rows

    acts = {m.name: m for m in models.group_action("T", F)}
    rel_ok = True
    for n1, n2, n3, n4, n5, n6 in models.GROUP_RELATION_TRIPLES:
        lhs = acts[n1].compose(acts[n2])
        mid = acts[n3].compose(acts[n4])
        rhs = acts[n5].compose(acts[n6])
        rel_ok &= lhs == mid == rhs
    det["rack_group_relations_on_generators"] = rel_ok
    ok &= rel_ok
    return Report("ore-equivariance", "pass" if ok else "fail", det)


@_register("quiver-preprojective", "corner presents the two-vertex quiver, squared arrows vanish", 0)
def _check_preprojective(ctx: CheckContext) -> Report:
    F = ctx.field
    pt = (1, -1)
    params = ctx.params(pt)
    rs = ctx.system("D3", pt)
    polys = models.relation_suite("preprojective", params)
    in_ideal = all(gbasis.contains(rs, p) for p in polys)
    table = ctx.table("D3", pt)
    e3 = models.derived_element("e3", params, ABC)
    a = NcPoly.gen(ABC, F, "a")
    c = NcPoly.gen(ABC, F, "c")
    root = F.square_root(params.alpha1)
    rinv = F.inv(root)
    half = F.inv(F.of(2))
    g1p = (e3 + (e3 * a) * rinv) * half
    g2p = (e3 - (e3 * a) * rinv) * half
    np_ = e3 * (a + c)
    x12 = table.from_poly(g1p * np_ * g2p)
    x21 = table.from_poly(g2p * np_ * g1p)
    span = structure.Subspace.from_vectors(
        [table.from_poly(q).coords for q in (g1p, g2p, g1p * np_ * g2p, g2p * np_ * g1p)],
        F, table.dim)
    cornert = structure.corner(table, table.from_poly(e3))
    det = {"point": list(pt), "relations_in_ideal": in_ideal,
           "arrows_nonzero": (not x12.is_zero()) and (not x21.is_zero()),
           "span_dim": span.dim, "corner_dim": cornert.dim}
    ok = in_ideal and det["arrows_nonzero"] and span.dim == 4 and cornert.dim == 4
    return Report("quiver-preprojective", "pass" if ok else "fail", det)


@_register("quiver-coinvariant", "coinvariant-ring relations at the nilpotent point", 0)
def _check_coinvariant(ctx: CheckContext) -> Report:
    F = ctx.field
    pt = (1, 3)
    params = ctx.params(pt)
    rs = ctx.system("D3", pt)
    polys = models.relation_suite("coinvariant", params)
    in_ideal = all(gbasis.contains(rs, p) for p in polys)
    table = ctx.table("D3", pt)
    f1p = models.derived_element("f1", params, ABC)
    f2p = models.derived_element("f2", params, ABC)
    f1 = table.from_poly(f1p)
    f2 = table.from_poly(f2p)
    u = models.derived_element("u", params, ABC)
    v = models.derived_element("v", params, ABC)
    gens = [f1p, f2p, f1p * u * f2p, f1p * v * f2p, f2p * u * f1p, f2p * v * f1p]
    sub = structure.subalgebra_with_unit(table, [table.from_poly(g) for g in gens])
    det = {"point": list(pt), "relations_in_ideal": in_ideal,
           "f_idempotent": f1 * f1 == f1 and f2 * f2 == f2,
           "f_sum_is_one": f1 + f2 == table.unit(),
           "generated_dim": sub.dim}
    ok = (in_ideal and det["f_idempotent"] and det["f_sum_is_one"]
          and sub.dim == 12)
    return Report("quiver-coinvariant", "pass" if ok else "fail", det)


@_register("clifford-structure", "dimension, radical, and simplicity of small Clifford algebras", 0)
def _check_clifford(ctx: CheckContext) -> Report:
    F = ctx.field
    rows = []
    ok = True
    cases = [
        ("nondegenerate dim 2", [1, 1], {(0, 1): 0}, {"dim": 4, "radical": 0, "center": 1}),
        ("nondegenerate dim 3", [1, 1, 1], {}, {"dim": 8, "radical": 0, "center": 2}),
        ("zero form dim 2", [0, 0], {(0, 1): 0}, {"dim": 4, "radical": 3, "center": None}),
        ("rank 1 dim 2", [1, 1], {(0, 1): -2}, {"dim": 4, "radical": 2, "center": None}),
        ("zero form dim 1", [0], {}, {"dim": 2, "radical": 1, "center": None}),
    ]
    for label, diag, cross, expect in cases:
        q = models.QuadraticForm.from_coefficients(F, diag, cross)
        table = models.clifford_table(q)
        rad = structure.radical(table)
        n = q.dim
        r = q.radical_dim()
        formula = 2 ** n - 2 ** (n - r)
        row = {"case": label, "dim": table.dim, "radical_dim": rad.dim,
               "expected_radical": formula}
        good = table.dim == expect["dim"] and rad.dim == expect["radical"] \
            and rad.dim == formula
        if expect["center"] is not None:
            cdim = structure.center(table).dim
            row["center_dim"] = cdim
            good = good and cdim == expect["center"] and structure.is_semisimple(table)
        rows.append(row)
        ok &= good
    return Report("clifford-structure", "pass" if ok else "fail", {"cases": rows})


# ---------------------------------------------------------------------------
# entry points
# ---------------------------------------------------------------------------

def run_check(check_id: str, cfg: CheckConfig, ctx: Optional[CheckContext] = None) -> Report:
    """Run one registered check under the given configuration."""
    if check_id not in CHECKS:
        raise UnknownCheckError(f"unknown check {check_id!r}; known: {sorted(CHECKS)}")
    ctx = ctx or CheckContext(cfg)
    check = CHECKS[check_id]
    try:
        if check.grid_arity:
            return check.fn(ctx, grid=grid_for(check_id, cfg))
        return check.fn(ctx)
    except gbasis.CompletionOverflow as exc:
        return Report(check_id, "error", {"error": f"completion overflow: {exc}"})


def scan(check_id: str, cfg: CheckConfig, ctx: Optional[CheckContext] = None) -> Report:
    """Run a grid check over cfg.grid (or the default grid)."""
    if check_id not in CHECKS:
        raise UnknownCheckError(f"unknown check {check_id!r}; known: {sorted(CHECKS)}")
    if not CHECKS[check_id].grid_arity:
        raise UnknownCheckError(f"check {check_id!r} is not a grid scan")
    return run_check(check_id, cfg, ctx)


def run_all(cfg: CheckConfig) -> list[Report]:
    """Every registered check, one shared context, registry order."""
    ctx = CheckContext(cfg)
    return [run_check(check_id, cfg, ctx) for check_id in CHECKS]


def report_document(reports: list[Report], cfg: CheckConfig) -> dict:
    """The versioned JSON document for one invocation."""
    counts = {"pass": 0, "fail": 0, "skipped": 0, "error": 0}
    for r in reports:
        counts[r.status] += 1
    return {
        "schema_version": 1,
        "tool": "ncforge",
        "field": cfg.field.name,
        "seed": cfg.seed,
        "degree_bound": cfg.degree_bound,
        "max_rules": cfg.max_rules,
        "trials": cfg.trials,
        "checks": [r.to_dict() for r in reports],
        "summary": counts,
    }


def exit_code(reports: list[Report]) -> int:
    """0 when everything passes or is skipped with reasons, 1 on failure."""
    if any(r.status == "error" for r in reports):
        return 2
    return 0 if all(r.status in ("pass", "skipped") for r in reports) else 1

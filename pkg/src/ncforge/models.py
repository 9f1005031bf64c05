"""The deformation families and their derived data.

Encodes the presentations D3(a1, a2), K(a1, a2[, a3]), T(a1, a2, a3), the
undeformed algebras E3 and B, Clifford algebras of explicit quadratic
forms, the group actions, the derived elements (u, v, w, t, v+, v-, y,
idempotents, corner generators), the Ore datum, the 3x3 matrix
representation over a rank-2 Clifford algebra, and the relation suites
whose ideal membership the verification checks reduce to zero.

Everything here is data construction; membership and structure checks
live in ``gbasis``/``structure``/``verify``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .field import FieldError
from .freealg import Alphabet, Morphism, NcPoly, SkewDerivation
from .gbasis import Presentation
from .structure import AlgebraTable, Element

ABC = Alphabet("abc")
ABCY = Alphabet(("a", "b", "c", "y"))
ABCD = Alphabet("abcd")

MODELS = ("E3", "D3", "K", "K3", "T", "B", "CLIFFORD")


class ParameterDomainError(ValueError):
    """Parameters outside a construction's domain (e.g. missing roots)."""


@dataclass(frozen=True)
class ModelParams:
    """Deformation parameters with the derived quantities the formulas use.

    beta = 3*alpha1 - alpha2 always; gamma is a cube root of alpha3 when
    set; zeta is a primitive cube root of unity when set.
    """

    field: object
    alpha1: object
    alpha2: object
    alpha3: object = None
    gamma: object = None
    zeta: object = None

    @property
    def beta(self):
        F = self.field
        return F.sub(F.mul(F.of(3), self.alpha1), self.alpha2)

    def __post_init__(self):
        F = self.field
        object.__setattr__(self, "alpha1", F.of(self.alpha1))
        object.__setattr__(self, "alpha2", F.of(self.alpha2))
        if self.alpha3 is not None:
            object.__setattr__(self, "alpha3", F.of(self.alpha3))
        if self.gamma is not None:
            g = F.of(self.gamma)
            object.__setattr__(self, "gamma", g)
            if self.alpha3 is not None and F.mul(F.mul(g, g), g) != self.alpha3:
                raise ParameterDomainError("gamma^3 does not equal alpha3")
        if self.zeta is not None:
            z = F.of(self.zeta)
            object.__setattr__(self, "zeta", z)
            if not F.is_zero(F.add(F.add(F.mul(z, z), z), F.one)):
                raise ParameterDomainError("zeta^2 + zeta + 1 != 0")

    @classmethod
    def make(cls, field, alpha1, alpha2, alpha3=None, *,
             need_zeta: bool = False, need_gamma: bool = False) -> "ModelParams":
        """Canonicalize parameters; derive zeta and/or gamma on request.

        If a cube root of alpha3 is requested but does not exist in the
        field, raises ParameterDomainError; grid scans catch it and skip
        the point with a reported reason.
        """
        zeta = field.primitive_cube_root() if need_zeta else None
        gamma = None
        if need_gamma:
            if alpha3 is None:
                raise ParameterDomainError("gamma requested without alpha3")
            gamma = field.cube_root(field.of(alpha3))
            if gamma is None:
                raise ParameterDomainError(
                    f"alpha3 = {field.of(alpha3)} has no cube root in {field.name}")
        return cls(field, alpha1, alpha2, alpha3, gamma, zeta)

    def point(self) -> tuple:
        if self.alpha3 is None:
            return (self.alpha1, self.alpha2)
        return (self.alpha1, self.alpha2, self.alpha3)


@dataclass(frozen=True)
class QuadraticForm:
    """A quadratic form via the Gram matrix of its bilinear form B_q.

    ``diagonal[i] = q(v_i) = gram[i][i]``; off-diagonal gram entries are
    half the mixed coefficients of q.
    """

    field: object
    gram: tuple
    diagonal: tuple

    @classmethod
    def from_coefficients(cls, field, diag: Sequence, cross: dict) -> "QuadraticForm":
        """diag[i] = q(v_i); cross[(i, j)] = coefficient of l_i l_j in q."""
        n = len(diag)
        F = field
        half = F.inv(F.of(2))
        gram = [[F.zero] * n for _ in range(n)]
        for i in range(n):
            gram[i][i] = F.of(diag[i])
        for (i, j), c in cross.items():
            v = F.mul(F.of(c), half)
            gram[i][j] = v
            gram[j][i] = v
        return cls(field, tuple(tuple(r) for r in gram),
                   tuple(F.of(d) for d in diag))

    @property
    def dim(self) -> int:
        return len(self.diagonal)

    def bilinear(self, u, v):
        F = self.field
        s = F.zero
        for i, ui in enumerate(u):
            for j, vj in enumerate(v):
                s = F.add(s, F.mul(F.mul(F.of(ui), F.of(vj)), self.gram[i][j]))
        return s

    def value(self, v):
        return self.bilinear(v, v)

    def det(self):
        F = self.field
        n = self.dim
        det = F.one
        rows = [list(r) for r in self.gram]
        for c in range(n):
            piv = next((i for i in range(c, n) if not F.is_zero(rows[i][c])), None)
            if piv is None:
                return F.zero
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                det = F.neg(det)
            det = F.mul(det, rows[c][c])
            inv = F.inv(rows[c][c])
            for i in range(c + 1, n):
                f = F.mul(rows[i][c], inv)
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[c])]
        return det

    def discriminant(self):
        """For a binary form a l1^2 + b l1 l2 + c l2^2: b^2 - 4ac = -4 det."""
        if self.dim != 2:
            raise ValueError("discriminant defined here for binary forms only")
        F = self.field
        return F.mul(F.of(-4), self.det())

    def is_nondegenerate(self) -> bool:
        return not self.field.is_zero(self.det())

    def radical_dim(self) -> int:
        from . import linalg
        rows = [list(r) for r in self.gram]
        return self.dim - linalg.rank(rows, self.field)


# ---------------------------------------------------------------------------
# presentations
# ---------------------------------------------------------------------------

def _gens(alphabet, field):
    return [NcPoly.gen(alphabet, field, i) for i in range(len(alphabet))]


def presentation(model: str, params: Optional[ModelParams] = None,
                 q: Optional[QuadraticForm] = None) -> Presentation:
    """The defining relations of a model, exactly as printed."""
    if model == "CLIFFORD":
        if q is None:
            raise ParameterDomainError("CLIFFORD requires a quadratic form")
        return clifford_presentation(q)
    if params is None:
        raise ParameterDomainError(f"{model} requires parameters")
    F = params.field
    a1, a2 = params.alpha1, params.alpha2

    if model in ("E3", "D3"):
        if model == "E3":
            a1 = a2 = F.zero
        a, b, c = _gens(ABC, F)
        rels = [
            a * a - a1, b * b - a1, c * c - a1,
            c * a + b * c + a * b - a2,
            c * b + b * a + a * c - a2,
        ]
        label = "E3" if model == "E3" else f"D3({a1},{a2})"
        return Presentation(ABC, rels, label)

    if model in ("K", "K3"):
        a, b, c, y = _gens(ABCY, F)
        rels = [
            a * a - a1, b * b - a1, c * c - a1,
            a * b + b * c + c * a - a2,
            a * c + c * b + b * a - a2 - y,
        ]
        if model == "K3":
            if params.alpha3 is None:
                raise ParameterDomainError("K3 requires alpha3")
            rels.append(y ** 3 - params.alpha3)
            return Presentation(ABCY, rels, f"K({a1},{a2},{params.alpha3})")
        return Presentation(ABCY, rels, f"K({a1},{a2})")

    if model in ("T", "B"):
        if model == "B":
            a1 = a2 = F.zero
        a, b, c, d = _gens(ABCD, F)
        rels = [
            a * a - a1, b * b - a1, c * c - a1, d * d - a1,
            c * a + b * c + a * b - a2,
            d * a + c * d + a * c - a2,
            d * b + b * a + a * d - a2,
            d * c + c * b + b * d - a2,
        ]
        if model == "B":
            rels.append((a + b + c) ** 6)
            return Presentation(ABCD, rels, "B")
        if params.alpha3 is None:
            raise ParameterDomainError("T requires alpha3")
        y = c * b + b * a + a * c - a2
        rels.append(y ** 3 - params.alpha3)
        return Presentation(ABCD, rels, f"T({a1},{a2},{params.alpha3})")

    raise ParameterDomainError(f"unknown model {model!r}")


def clifford_presentation(q: QuadraticForm) -> Presentation:
    """C(V, q): v_i^2 = q(v_i), v_j v_k + v_k v_j = 2 B(v_j, v_k)."""
    F = q.field
    n = q.dim
    alphabet = Alphabet([f"x{i + 1}" for i in range(n)])
    gens = _gens(alphabet, F)
    rels = []
    for i in range(n):
        rels.append(gens[i] * gens[i] - q.diagonal[i])
    two = F.of(2)
    for j in range(n):
        for k in range(j + 1, n):
            rels.append(gens[j] * gens[k] + gens[k] * gens[j]
                        - F.mul(two, q.gram[j][k]))
    return Presentation(alphabet, rels, f"Clifford(dim {n})")


# ---------------------------------------------------------------------------
# group actions
# ---------------------------------------------------------------------------

def group_action(model: str, field) -> list[Morphism]:
    """Sign-permutation module-algebra actions for D3 (two transpositions
    of the symmetric group on three letters) and T (the four generators
    acting per the rack table)."""
    if model in ("E3", "D3"):
        s12 = Morphism.signed_permutation(
            ABC, field, {"a": ("-", "b"), "b": ("-", "a"), "c": ("-", "c")}, "(12)")
        s23 = Morphism.signed_permutation(
            ABC, field, {"a": ("-", "a"), "b": ("-", "c"), "c": ("-", "b")}, "(23)")
        return [s12, s23]
    if model in ("T", "B"):
        rows = {
            "g_a": {"a": ("-", "a"), "b": ("-", "c"), "c": ("-", "d"), "d": ("-", "b")},
            "g_b": {"a": ("-", "d"), "b": ("-", "b"), "c": ("-", "a"), "d": ("-", "c")},
            "g_c": {"a": ("-", "b"), "b": ("-", "d"), "c": ("-", "c"), "d": ("-", "a")},
            "g_d": {"a": ("-", "c"), "b": ("-", "a"), "c": ("-", "b"), "d": ("-", "d")},
        }
        return [Morphism.signed_permutation(ABCD, field, rows[n], n)
                for n in ("g_a", "g_b", "g_c", "g_d")]
    raise ParameterDomainError(f"no group action for model {model!r}")


def s3_transposition_13(field) -> Morphism:
    """(13) = (12)(23)(12); swaps a,c with signs and fixes b up to sign."""
    s12, s23 = group_action("D3", field)
    return s12.compose(s23).compose(s12)


GROUP_RELATION_TRIPLES = (
    ("g_a", "g_b", "g_b", "g_c", "g_c", "g_a"),
    ("g_a", "g_c", "g_c", "g_d", "g_d", "g_a"),
    ("g_a", "g_d", "g_d", "g_b", "g_b", "g_a"),
    ("g_b", "g_d", "g_d", "g_c", "g_c", "g_b"),
)


# ---------------------------------------------------------------------------
# derived elements
# ---------------------------------------------------------------------------

def _named_gens(alphabet, field):
    return {n: NcPoly.gen(alphabet, field, n) for n in alphabet.names}

def derived_element(name: str, params: ModelParams, alphabet: Alphabet = ABC,
                    lam=None) -> NcPoly:
    """The printed linear/quadratic expressions in the generators.

    ``y`` is the generator in the 4-letter K alphabet and the quadratic
    expression ac + cb + ba - alpha2 elsewhere.  ``witness`` takes the
    extra scalar ``lam`` and yields v+ + lam * v-^2.
    """
    F = params.field
    g = _named_gens(alphabet, F)
    a, b, c = g["a"], g["b"], g["c"]
    if name == "u":
        return a - b
    if name == "v":
        return b - c
    if name == "w":
        return c - a
    if name == "t":
        return a + b + c
    if name in ("vplus", "vminus"):
        if params.zeta is None:
            raise ParameterDomainError(f"{name} requires zeta")
        z = params.zeta
        z2 = F.mul(z, z)
        return a + z * b + z2 * c if name == "vplus" else a + z2 * b + z * c
    if name == "y":
        if "y" in g:
            return g["y"]
        return a * c + c * b + b * a - params.alpha2
    if name in ("e1", "e2", "e3", "e1_alt", "e2_alt", "e3_alt"):
        beta = params.beta
        if F.is_zero(beta):
            raise ParameterDomainError("idempotents need 3*alpha1 - alpha2 != 0")
        inv = F.inv(beta)
        s = F.add(params.alpha1, params.alpha2)
        if name == "e1":
            return ((b + c) ** 2 - s) * inv
        if name == "e2":
            return ((a + c) ** 2 - s) * inv
        if name == "e3":
            return ((a + b) ** 2 - s) * inv
        if name == "e1_alt":
            return ((c - a) * (b - a)) * inv
        if name == "e2_alt":
            return ((c - b) * (a - b)) * inv
        return ((a - c) * (b - c)) * inv
    if name in ("f1", "f2"):
        root = F.square_root(params.alpha1)
        if root is None or F.is_zero(root):
            raise ParameterDomainError("f1, f2 need alpha1 a nonzero square")
        inv = F.inv(F.mul(F.of(2), root))
        if name == "f1":
            return (root + b) * inv
        return (NcPoly.scalar(alphabet, F, root) - b) * inv
    if name == "witness":
        if lam is None:
            raise ParameterDomainError("witness requires lam")
        vp = derived_element("vplus", params, alphabet)
        vm = derived_element("vminus", params, alphabet)
        return vp + F.of(lam) * (vm * vm)
    raise ParameterDomainError(f"unknown derived element {name!r}")


# ---------------------------------------------------------------------------
# quadratic forms of the families
# ---------------------------------------------------------------------------

def quadratic_form(kind: str, params: ModelParams) -> QuadraticForm:
    F = params.field
    a1, a2 = params.alpha1, params.alpha2
    beta = params.beta
    if kind == "FK3_CORNER":
        return QuadraticForm.from_coefficients(
            F, [a1, a1], {(0, 1): F.sub(a2, a1)})
    if kind in ("Q_GAMMA", "QPRIME_GAMMA"):
        if params.gamma is None:
            raise ParameterDomainError(f"{kind} requires gamma")
        gm = params.gamma
        g2 = F.mul(gm, gm)
        g3 = F.mul(g2, gm)
        b2 = F.mul(beta, beta)
        b3 = F.mul(b2, beta)
        q11 = F.add(gm, F.add(F.mul(F.of(3), a1), F.mul(F.of(2), a2)))
        q12 = F.sub(F.sub(F.mul(F.of(2), g2), F.mul(F.of(2), F.mul(beta, gm))), b2)
        q22 = F.add(g3, b3)
        if kind == "Q_GAMMA":
            return QuadraticForm.from_coefficients(F, [q11, q22], {(0, 1): q12})
        q33 = a1
        q13 = F.sub(F.mul(F.of(2), a2), gm)
        q23 = F.add(F.mul(F.of(2), g2), b2)
        return QuadraticForm.from_coefficients(
            F, [q11, q22, q33], {(0, 1): q12, (0, 2): q13, (1, 2): q23})
    raise ParameterDomainError(f"unknown quadratic form kind {kind!r}")


def q_gamma_discriminant(params: ModelParams):
    """Closed form -9(4 alpha1 gamma^3 + beta^3 (alpha1 + alpha2))."""
    F = params.field
    if params.gamma is None:
        raise ParameterDomainError("needs gamma")
    g3 = F.mul(F.mul(params.gamma, params.gamma), params.gamma)
    b = params.beta
    b3 = F.mul(F.mul(b, b), b)
    inner = F.add(F.mul(F.of(4), F.mul(params.alpha1, g3)),
                  F.mul(b3, F.add(params.alpha1, params.alpha2)))
    return F.mul(F.of(-9), inner)


# ---------------------------------------------------------------------------
# Ore datum
# ---------------------------------------------------------------------------

def ore_data(params: ModelParams) -> tuple[Morphism, SkewDerivation]:
    """sigma(a) = -c, sigma(b) = -a, sigma(c) = -b (y fixed) and the
    (sigma, id)-skew derivation with d(a) = alpha2 - ac, d(b) = alpha2 - ba,
    d(c) = alpha2 - cb, d(y) = 0, both over the K alphabet."""
    F = params.field
    g = _named_gens(ABCY, F)
    a, b, c, y = g["a"], g["b"], g["c"], g["y"]
    sigma = Morphism(ABCY, F, [-c, -a, -b, y], "sigma")
    a2 = params.alpha2
    partial = SkewDerivation(
        sigma,
        [a2 - a * c, a2 - b * a, a2 - c * b, NcPoly.zero(ABCY, F)],
        "partial")
    return sigma, partial


# ---------------------------------------------------------------------------
# the 3x3 Clifford-matrix representation
# ---------------------------------------------------------------------------

class MatrixOverAlgebra:
    """A square grid of elements of one AlgebraTable."""

    def __init__(self, entries):
        self.entries = [list(row) for row in entries]
        self.size = len(self.entries)
        self.table = self.entries[0][0].table

    @classmethod
    def scalar(cls, table: AlgebraTable, size: int, c) -> "MatrixOverAlgebra":
        z = table.unit().scale(table.field.zero)
        rows = [[z for _ in range(size)] for _ in range(size)]
        for i in range(size):
            rows[i][i] = table.unit().scale(c)
        return cls(rows)

    def __add__(self, other):
        return MatrixOverAlgebra(
            [[x + y for x, y in zip(r1, r2)]
             for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return MatrixOverAlgebra(
            [[x - y for x, y in zip(r1, r2)]
             for r1, r2 in zip(self.entries, other.entries)])

    def __mul__(self, other):
        n = self.size
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = self.entries[i][0] * other.entries[0][j]
                for k in range(1, n):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            rows.append(row)
        return MatrixOverAlgebra(rows)

    def __pow__(self, n: int):
        out = MatrixOverAlgebra.scalar(self.table, self.size, self.table.field.one)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, MatrixOverAlgebra) and self.entries == other.entries

    def flatten_coords(self):
        """Coordinates in the matrix-algebra table (row-major, entry-major)."""
        out = []
        for row in self.entries:
            for e in row:
                out.extend(e.coords)
        return out


def clifford_table(q: QuadraticForm, check: str = "full") -> AlgebraTable:
    from . import gbasis as _g
    from . import structure as _s
    rs = _g.complete(clifford_presentation(q))
    return _s.build_table(rs, check=check)


def rho_matrices(params: ModelParams):
    """The matrices Y, A, B, C over C(V, q_gamma), and the table they live in.

    Requires gamma^3 + beta^3 != 0 (else x2 is not invertible) and zeta.
    """
    F = params.field
    if params.zeta is None or params.gamma is None:
        raise ParameterDomainError("rho requires zeta and gamma")
    z, gm = params.zeta, params.gamma
    beta = params.beta
    g3 = F.mul(F.mul(gm, gm), gm)
    b3 = F.mul(F.mul(beta, beta), beta)
    denom = F.add(g3, b3)
    if F.is_zero(denom):
        raise ParameterDomainError("x2 not invertible: gamma^3 + beta^3 = 0")
    q = quadratic_form("Q_GAMMA", params)
    table = clifford_table(q)
    x1 = table.element(NcPoly.gen(table.rs.alphabet, F, 0))
    x2 = table.element(NcPoly.gen(table.rs.alphabet, F, 1))
    x2inv = x2.scale(F.inv(denom))          # x2^2 = gamma^3 + beta^3
    z2 = F.mul(z, z)
    c1 = F.add(beta, F.mul(z2, gm))         # beta + zeta^2 gamma
    c2 = F.add(beta, gm)                    # beta + gamma
    c3 = F.add(beta, F.mul(z, gm))          # beta + zeta gamma
    xp = -x1 - x2.scale(F.inv(c1))
    xpp = x1 + x2.scale(F.sub(F.inv(c1), F.inv(c2)))
    one = table.unit()
    third = F.inv(F.of(3))

    def M(rows):
        return MatrixOverAlgebra([[e.scale(third) for e in row] for row in rows])

    A = M([[x1, one.scale(c1), x2],
           [one, xp, one.scale(c2)],
           [x2inv.scale(c3), one, xpp]])
    B = M([[x1, one.scale(F.mul(z, c1)), x2.scale(z2)],
           [one.scale(z2), xp, one.scale(F.mul(z, c2))],
           [x2inv.scale(F.mul(z, c3)), one.scale(z2), xpp]])
    C = M([[x1, one.scale(F.mul(z2, c1)), x2.scale(z)],
           [one.scale(z), xp, one.scale(F.mul(z2, c2))],
           [x2inv.scale(F.mul(z2, c3)), one.scale(z), xpp]])
    zero = one.scale(F.zero)
    Y = MatrixOverAlgebra([[one.scale(gm), zero, zero],
                           [zero, one.scale(F.mul(z, gm)), zero],
                           [zero, zero, one.scale(F.mul(z2, gm))]])
    return Y, A, B, C, table


# ---------------------------------------------------------------------------
# relation suites
# ---------------------------------------------------------------------------

SUITES = ("fk3-u-relations", "k-generator-commutation", "k-eigenvector",
          "k-power", "t-y-commutation", "t-d-anticommutation",
          "coinvariant", "preprojective")


def relation_suite(suite: str, params: ModelParams) -> list[NcPoly]:
    """Polynomials expected to lie in the model's defining ideal."""
    F = params.field
    if suite == "fk3-u-relations":
        g = _named_gens(ABC, F)
        a, b, c = g["a"], g["b"], g["c"]
        u, v, w = a - b, b - c, c - a
        beta = params.beta
        return [
            u * a + b * u,
            u * b + a * u,
            u * c - (c - a - b) * u,
            u * v - v * u,
            u * w - w * u,
            v * w - w * v,
            u * v + v * w + u * w - F.sub(params.alpha2, F.mul(F.of(3), params.alpha1)),
            u ** 3 - beta * u,
            u * u * v + u * v * v,
            u * v * w,
        ]
    if suite == "k-generator-commutation":
        g = _named_gens(ABCY, F)
        a, b, c, y = g["a"], g["b"], g["c"], g["y"]
        return [
            y * a - c * y,
            y * b - a * y,
            y * c - b * y,
            b * a * b - a * b * a - params.alpha2 * (b - a),
            (b - a) ** 3 - params.beta * (b - a),
        ]
    if suite == "k-eigenvector":
        z = _require_zeta(params)
        g = _named_gens(ABCY, F)
        y = g["y"]
        t = derived_element("t", params, ABCY)
        vp = derived_element("vplus", params, ABCY)
        vm = derived_element("vminus", params, ABCY)
        z2 = F.mul(z, z)
        beta = params.beta
        return [
            y * vp - z * (vp * y),
            y * vm - z2 * (vm * y),
            vp * vm - (beta + z * y),
            vm * vp - (beta + z2 * y),
            t * vp + vp * t + vm * vm,
            t * vm + vm * t + vp * vp,
        ]
    if suite == "k-power":
        _require_zeta(params)
        g = _named_gens(ABCY, F)
        y = g["y"]
        t = derived_element("t", params, ABCY)
        vp = derived_element("vplus", params, ABCY)
        vm = derived_element("vminus", params, ABCY)
        beta = params.beta
        b2, b3 = F.mul(beta, beta), F.mul(F.mul(beta, beta), beta)
        three_a1 = F.mul(F.of(3), params.alpha1)
        return [
            t * t - (y + F.add(three_a1, F.mul(F.of(2), params.alpha2))),
            t * vp ** 3 + vp ** 3 * t - (F.of(2) * (y * y) - F.mul(F.of(2), beta) * y - b2),
            vp ** 6 - (y ** 3 + b3),
            vp ** 3 - vm ** 3,
        ]
    if suite == "t-y-commutation":
        g_d = group_action("T", F)[3]
        g = _named_gens(ABCD, F)
        y = derived_element("y", params, ABCD)
        return [y * g[x] + g_d(g[x]) * y for x in ("a", "b", "c", "d")]
    if suite == "t-d-anticommutation":
        _require_zeta(params)
        g = _named_gens(ABCD, F)
        d = g["d"]
        y = derived_element("y", params, ABCD)
        t = derived_element("t", params, ABCD)
        vp = derived_element("vplus", params, ABCD)
        b2 = F.mul(params.beta, params.beta)
        return [
            d * d - params.alpha1,
            d * t + t * d - (F.mul(F.of(2), params.alpha2) - y),
            d * vp ** 3 + vp ** 3 * d - (F.of(2) * (y * y) + b2),
        ]
    if suite == "coinvariant":
        if params.alpha2 != F.mul(F.of(3), params.alpha1):
            raise ParameterDomainError("coinvariant suite needs alpha2 = 3*alpha1")
        f = {1: derived_element("f1", params, ABC), 2: derived_element("f2", params, ABC)}
        u = derived_element("u", params, ABC)
        v = derived_element("v", params, ABC)
        out = []
        for i, j in ((1, 2), (2, 1)):
            uij, uji = f[i] * u * f[j], f[j] * u * f[i]
            vij, vji = f[i] * v * f[j], f[j] * v * f[i]
            wij = -uij - vij
            wji = -uji - vji
            out.append(uij * vji - vij * uji)
            out.append(uij * vji + vij * wji + uij * wji)
            out.append(uij * vji * wij)
        return out
    if suite == "preprojective":
        if params.alpha2 != F.neg(params.alpha1):
            raise ParameterDomainError("preprojective suite needs alpha2 = -alpha1")
        root = F.square_root(params.alpha1)
        if root is None or F.is_zero(root):
            raise ParameterDomainError("preprojective suite needs alpha1 a nonzero square")
        g = _named_gens(ABC, F)
        a, c = g["a"], g["c"]
        e3 = derived_element("e3", params, ABC)
        half = F.inv(F.of(2))
        rinv = F.inv(root)
        g1 = (e3 + (e3 * a) * rinv) * half
        g2 = (e3 - (e3 * a) * rinv) * half
        n = e3 * (a + c)
        x12 = g1 * n * g2
        x21 = g2 * n * g1
        return [
            g1 * g1 - g1, g2 * g2 - g2, g1 * g2, g2 * g1,
            g1 + g2 - e3,
            n * n,
            x12 * x21, x21 * x12,
        ]
    raise ParameterDomainError(f"unknown suite {suite!r}")


def _require_zeta(params: ModelParams):
    if params.zeta is None:
        raise ParameterDomainError("suite requires zeta")
    return params.zeta

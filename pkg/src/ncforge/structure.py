"""Structure theory of finite-dimensional quotients.

An :class:`AlgebraTable` holds the structure constants of a quotient on
its normal-word basis (index 0 is the unit).  All queries are exact; over
F_p the table is a dense int64 numpy tensor and the linear algebra is
vectorized, otherwise a sparse generic representation is used.

The radical is computed as the kernel of the trace form (Dickson's
criterion), valid in characteristic 0 or p > dim; the precondition is
enforced, not worked around.
"""

from __future__ import annotations

import numpy as np

from . import gbasis, linalg
from .freealg import NcPoly


class AssociativityError(RuntimeError):
    """Structure constants failed an internal consistency check."""


class Subspace:
    """A subspace given by its canonical (RREF) basis matrix."""

    def __init__(self, rows, pivots, field, width: int):
        self.rows = [list(r) for r in rows]
        self.pivots = list(pivots)
        self.field = field
        self.width = width

    @classmethod
    def from_vectors(cls, vecs, field, width: int) -> "Subspace":
        red, piv = linalg.rref(list(vecs), field)
        return cls(red, piv, field, width)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, vec) -> bool:
        res = linalg.reduce_against(vec, self.rows, self.pivots, self.field)
        return all(self.field.is_zero(x) for x in res)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.width == other.width
                and self.rows == other.rows)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.width})"


class Element:
    """An algebra element as a coordinate vector over a table's basis."""

    __slots__ = ("table", "coords")

    def __init__(self, table: "AlgebraTable", coords):
        F = table.field
        coords = [F.of(c) for c in coords]
        if len(coords) != table.dim:
            raise ValueError("coordinate length does not match basis size")
        self.table = table
        self.coords = coords

    def _check(self, other: "Element"):
        if self.table is not other.table:
            raise ValueError("elements over different tables")

    def __add__(self, other):
        self._check(other)
        F = self.table.field
        return Element(self.table, [F.add(x, y) for x, y in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        F = self.table.field
        return Element(self.table, [F.sub(x, y) for x, y in zip(self.coords, other.coords)])

    def __neg__(self):
        F = self.table.field
        return Element(self.table, [F.neg(x) for x in self.coords])

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            return Element(self.table, self.table.mul_vec(self.coords, other.coords))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        F = self.table.field
        c = F.of(c)
        return Element(self.table, [F.mul(x, c) for x in self.coords])

    def __pow__(self, n: int):
        out = self.table.unit()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, Element) and self.table is other.table \
            and self.coords == other.coords

    def is_zero(self) -> bool:
        F = self.table.field
        return all(F.is_zero(x) for x in self.coords)

    def commutator(self, other: "Element") -> "Element":
        return self * other - other * self

    def __repr__(self):
        F = self.table.field
        parts = [f"{c}*{self.table.label(i)}" for i, c in enumerate(self.coords)
                 if not F.is_zero(c)]
        return " + ".join(parts) if parts else "0"


class AlgebraTable:
    """Structure constants of a finite-dimensional algebra on a fixed basis."""

    def __init__(self, field, basis, tensor=None, rows=None, rs=None,
                 unit_coords=None, rmul=None, check: str = "full"):
        self.field = field
        self.basis = list(basis)
        self.rs = rs
        self._tensor = tensor          # np.int64 (n, n, n) over F_p
        self._rows = rows              # list[list[dict col->coeff]] otherwise
        self._rmul = rmul              # generator right-multiplication matrices
        if (tensor is None) == (rows is None):
            raise ValueError("exactly one of tensor/rows required")
        if unit_coords is None:
            unit_coords = [field.one] + [field.zero] * (self.dim - 1)
        self.unit_coords = [field.of(c) for c in unit_coords]
        self._unit_check()
        if check == "full":
            self.check_associativity()
        elif check == "generators":
            self.check_associativity_generators()
        elif check != "none":
            raise ValueError(f"unknown check mode {check!r}")

    # -- basics ---------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.basis)

    def label(self, i: int) -> str:
        b = self.basis[i]
        if isinstance(b, tuple) and self.rs is not None:
            return self.rs.alphabet.word_str(b)
        return str(b)

    def __repr__(self):
        return f"AlgebraTable(dim={self.dim}, field={self.field.name})"

    def mul_basis(self, i: int, j: int):
        """Coordinates of basis[i] * basis[j]."""
        if self._tensor is not None:
            return [int(x) for x in self._tensor[i, j]]
        F = self.field
        vec = [F.zero] * self.dim
        for k, c in self._rows[i][j].items():
            vec[k] = c
        return vec

    def mul_vec(self, x, y):
        """Coordinates of the product of two coordinate vectors."""
        F = self.field
        if self._tensor is not None:
            p = F.modulus
            xa = np.asarray(x, dtype=np.int64)
            ya = np.asarray(y, dtype=np.int64)
            t = np.tensordot(xa, self._tensor, axes=([0], [0])) % p
            return [int(v) for v in (np.tensordot(ya, t, axes=([0], [0])) % p)]
        out = [F.zero] * self.dim
        for i, cx in enumerate(x):
            if F.is_zero(cx):
                continue
            row_i = self._rows[i]
            for j, cy in enumerate(y):
                if F.is_zero(cy):
                    continue
                cxy = F.mul(cx, cy)
                for k, c in row_i[j].items():
                    out[k] = F.add(out[k], F.mul(cxy, c))
        return out

    def mul_pairs(self, xs, ys):
        """All products x*y for x in xs, y in ys, as a flat list of vectors."""
        if self._tensor is not None and xs and ys:
            p = self.field.modulus
            X = np.asarray(xs, dtype=np.int64)
            Y = np.asarray(ys, dtype=np.int64)
            t1 = np.tensordot(X, self._tensor, axes=([1], [0])) % p   # (a, j, l)
            prod = np.tensordot(Y, t1, axes=([1], [1])) % p           # (b, a, l)
            prod = np.transpose(prod, (1, 0, 2))
            return [[int(v) for v in row] for block in prod for row in block]
        return [self.mul_vec(x, y) for x in xs for y in ys]

    def unit(self) -> Element:
        return Element(self, self.unit_coords)

    def element(self, obj) -> Element:
        """Coerce coordinates, a basis index, or an NcPoly into an Element."""
        if isinstance(obj, Element):
            if obj.table is not self:
                raise ValueError("element of a different table")
            return obj
        if isinstance(obj, NcPoly):
            return self.from_poly(obj)
        if isinstance(obj, int):
            F = self.field
            coords = [F.zero] * self.dim
            coords[obj] = F.one
            return Element(self, coords)
        return Element(self, list(obj))

    def from_poly(self, p: NcPoly) -> Element:
        if self.rs is None:
            raise ValueError("table was not built from a rewrite system")
        nf = gbasis.normal_form(self.rs, p)
        F = self.field
        coords = [F.zero] * self.dim
        idx = self._word_index()
        for w, c in nf.terms.items():
            if w not in idx:
                raise ValueError(f"normal word {w} outside the stored basis")
            coords[idx[w]] = c
        return Element(self, coords)

    def _word_index(self):
        if not hasattr(self, "_widx"):
            self._widx = {w: i for i, w in enumerate(self.basis)}
        return self._widx

    # -- integrity -------------------------------------------------------

    def _unit_check(self):
        n = self.dim
        for i in range(n):
            e_i = self.element(i).coords
            if self.mul_vec(self.unit_coords, e_i) != e_i \
                    or self.mul_vec(e_i, self.unit_coords) != e_i:
                raise AssociativityError("declared unit does not act as the identity")

    def check_associativity(self):
        """Exhaustive check of (wi wj) wk == wi (wj wk) on all basis triples."""
        n = self.dim
        if self._tensor is not None:
            p = self.field.modulus
            C = self._tensor
            if (p - 1) * (p - 1) * n < 2**53:
                work = C.astype(np.float64)
            else:
                work = C
            flat = work.reshape(n, n * n)
            stack = work.reshape(n * n, n)
            for i in range(n):
                lhs = (work[i] @ flat) % p          # (j, k*l)
                rhs = (stack @ work[i]) % p         # (j*k, l)
                if not np.array_equal(lhs.reshape(n, n, n), rhs.reshape(n, n, n)):
                    raise AssociativityError(f"associativity fails at left factor {i}")
            return
        F = self.field
        for i in range(n):
            for j in range(n):
                ij = self.mul_basis(i, j)
                for k in range(n):
                    left = self.mul_vec(ij, self.element(k).coords)
                    right = self.mul_vec(self.element(i).coords, self.mul_basis(j, k))
                    if left != right:
                        raise AssociativityError(f"associativity fails at triple {(i, j, k)}")

    def check_associativity_generators(self):
        """Associativity on all basis triples via the construction invariants.

        The table is filled by the recursion w_i * (w'g) = (w_i * w') * R_g
        over a prefix-closed basis, so bilinearity and induction on the
        length of the right factor reduce associativity of every triple
        (w_i, w_j, w_k) to the checked identities C[i] R_g = R_g C[i].
        """
        if self._rmul is None:
            raise AssociativityError("generator check needs stored right-multiplication data")
        n = self.dim
        if self._tensor is not None:
            p = self.field.modulus
            C = self._tensor
            for g, R in enumerate(self._rmul):
                Rg = np.asarray(R, dtype=np.int64)
                for i in range(n):
                    if not np.array_equal(C[i] @ Rg % p, Rg @ C[i] % p):
                        raise AssociativityError(
                            f"associativity fails at (basis {i}, *, generator {g})")
            return
        F = self.field
        for g, R in enumerate(self._rmul):
            for i in range(n):
                for j in range(n):
                    lhs = [F.zero] * n
                    for m, c in enumerate(self.mul_basis(i, j)):
                        if not F.is_zero(c):
                            for l in range(n):
                                lhs[l] = F.add(lhs[l], F.mul(c, R[m][l]))
                    rhs = [F.zero] * n
                    for m in range(n):
                        c = R[j][m]
                        if not F.is_zero(c):
                            row = self.mul_basis(i, m)
                            for l in range(n):
                                rhs[l] = F.add(rhs[l], F.mul(c, row[l]))
                    if lhs != rhs:
                        raise AssociativityError(
                            f"associativity fails at (basis {i}, basis {j}, generator {g})")


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def build_table(rs: gbasis.RewriteSystem, check: str = "generators") -> AlgebraTable:
    """Structure constants of the quotient by a certified finite system.

    Associativity is verified on every basis triple: the default
    ``generators`` mode checks the generator identities that, together
    with the prefix-recursion used to fill the table, imply all triples;
    ``full`` runs the cubic brute-force comparison instead.
    """
    if not rs.certified:
        raise ValueError("rewrite system must be certified")
    if not gbasis.is_finite_dimensional(rs):
        raise ValueError("quotient is infinite-dimensional")
    words = gbasis.normal_words(rs)
    if not words:
        raise ValueError("the quotient is the zero algebra")
    n = len(words)
    idx = {w: i for i, w in enumerate(words)}
    F = rs.field
    index = rs.index()
    from .gbasis import _nf  # internal reducer on dict polynomials

    n_gens = len(rs.alphabet)
    # right-multiplication-by-generator matrices from normal forms
    rmul = []
    for g in range(n_gens):
        mat = [[F.zero] * n for _ in range(n)]
        for i, w in enumerate(words):
            for nw, c in _nf({w + (g,): F.one}, index, F).items():
                mat[i][idx[nw]] = c
        rmul.append(mat)

    parent = [None] * n   # basis j extends basis[parent[j]] by generator lastg[j]
    lastg = [None] * n
    for j, w in enumerate(words):
        if w:
            parent[j] = idx[w[:-1]]
            lastg[j] = w[-1]

    if F.modulus is not None and (F.modulus - 1) ** 2 * (n + 1) < 2**63:
        p = F.modulus
        C = np.zeros((n, n, n), dtype=np.int64)
        C[:, 0, :] = np.eye(n, dtype=np.int64)
        rmul_np = [np.array(m, dtype=np.int64) for m in rmul]
        for j in range(1, n):
            C[:, j, :] = C[:, parent[j], :] @ rmul_np[lastg[j]] % p
        return AlgebraTable(F, words, tensor=C, rs=rs, rmul=rmul, check=check)

    rows = [[{} for _ in range(n)] for _ in range(n)]
    for i in range(n):
        rows[i][0] = {i: F.one}
    for j in range(1, n):
        g = lastg[j]
        for i in range(n):
            acc: dict = {}
            for c_idx, c in rows[i][parent[j]].items():
                for k, rc in enumerate(rmul[g][c_idx]):
                    if F.is_zero(rc):
                        continue
                    s = F.add(acc.get(k, F.zero), F.mul(c, rc))
                    if F.is_zero(s):
                        acc.pop(k, None)
                    else:
                        acc[k] = s
            rows[i][j] = acc
    return AlgebraTable(F, words, rows=rows, rs=rs, rmul=rmul, check=check)


def truncated_free_table(alphabet, field, max_degree: int) -> AlgebraTable:
    """Free algebra truncated above max_degree (overflowing products are 0).

    Kept sparse regardless of field: the tensor would be huge and nearly
    empty.  Associativity holds by construction (concatenate-or-kill).
    """
    words = [()]
    level = [()]
    for _ in range(max_degree):
        level = [w + (g,) for w in level for g in range(len(alphabet))]
        words.extend(level)
    idx = {w: i for i, w in enumerate(words)}
    n = len(words)
    rows = [[{} for _ in range(n)] for _ in range(n)]
    for i, u in enumerate(words):
        for j, v in enumerate(words):
            w = u + v
            if len(w) <= max_degree:
                rows[i][j] = {idx[w]: field.one}
    return AlgebraTable(field, words, rows=rows, check="none")


def matrix_algebra(table: AlgebraTable, size: int) -> AlgebraTable:
    """The algebra of size x size matrices with entries in ``table``.

    Basis: matrix units E_rc tensor the base basis; the unit is the
    identity matrix (a sum of basis vectors, supplied as unit_coords).
    """
    n = table.dim
    F = table.field
    N = size * size * n
    labels = [f"E{r}{c}*{table.label(k)}"
              for r in range(size) for c in range(size) for k in range(n)]

    def bidx(r, c, k):
        return (r * size + c) * n + k

    rows = [[{} for _ in range(N)] for _ in range(N)]
    base = [[table.mul_basis(k, l) for l in range(n)] for k in range(n)]
    for r in range(size):
        for c in range(size):
            for k in range(n):
                i1 = bidx(r, c, k)
                for c2 in range(size):
                    for l in range(n):
                        i2 = bidx(c, c2, l)
                        entry = {}
                        for m, coeff in enumerate(base[k][l]):
                            if not F.is_zero(coeff):
                                entry[bidx(r, c2, m)] = coeff
                        rows[i1][i2] = entry
    unit = [F.zero] * N
    for r in range(size):
        for k2, c2 in enumerate(table.unit_coords):
            unit[bidx(r, r, k2)] = c2
    if F.modulus is not None and (F.modulus - 1) ** 2 * (N + 1) < 2**63 and N <= 128:
        C = np.zeros((N, N, N), dtype=np.int64)
        for i in range(N):
            for j, entry in enumerate(rows[i]):
                for k, c in entry.items():
                    C[i, j, k] = c
        return AlgebraTable(F, labels, tensor=C, unit_coords=unit, check="full")
    return AlgebraTable(F, labels, rows=rows, unit_coords=unit, check="none")


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def left_regular(table: AlgebraTable, x) -> list:
    """Matrix of left multiplication by x (columns indexed by basis)."""
    x = table.element(x)
    n = table.dim
    if table._tensor is not None:
        p = table.field.modulus
        xa = np.asarray(x.coords, dtype=np.int64)
        t = np.tensordot(xa, table._tensor, axes=([0], [0])) % p
        return [[int(v) for v in row] for row in t.T]
    cols = [table.mul_vec(x.coords, table.element(j).coords) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def trace_vector(table: AlgebraTable):
    """tr(left_regular(w_c)) for each basis index c."""
    n = table.dim
    F = table.field
    if table._tensor is not None:
        tr = np.einsum("ckk->c", table._tensor) % F.modulus
        return [int(v) for v in tr]
    out = []
    for c in range(n):
        s = F.zero
        for k in range(n):
            s = F.add(s, table._rows[c][k].get(k, F.zero))
        out.append(s)
    return out


def trace_form(table: AlgebraTable) -> list:
    """Gram matrix (i, j) -> tr(L_{w_i} L_{w_j}) = tr(L_{w_i w_j})."""
    _require_trace_valid(table)
    n = table.dim
    F = table.field
    tr = trace_vector(table)
    if table._tensor is not None:
        p = F.modulus
        tra = np.asarray(tr, dtype=np.int64)
        tf = np.tensordot(table._tensor, tra, axes=([2], [0])) % p
        return [[int(v) for v in row] for row in tf]
    out = [[F.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            s = F.zero
            for k, c in table._rows[i][j].items():
                s = F.add(s, F.mul(c, tr[k]))
            out[i][j] = s
    return out


def _require_trace_valid(table: AlgebraTable):
    if table.field.char != 0 and table.field.char <= table.dim:
        raise ValueError(
            f"trace-form criterion invalid at characteristic {table.field.char} "
            f"<= dim {table.dim}")


def radical(table: AlgebraTable, verify: bool = True) -> Subspace:
    """Kernel of the trace form, verified to be a nilpotent two-sided ideal."""
    tf = trace_form(table)
    ker = linalg.right_nullspace(tf, table.field)
    sub = Subspace.from_vectors(ker, table.field, table.dim)
    if verify:
        if not _is_two_sided_ideal(table, sub):
            raise AssociativityError("trace-form kernel is not a two-sided ideal")
        if nilpotency_index(table, sub) is None:
            raise AssociativityError("trace-form kernel is not nilpotent")
    return sub


def is_semisimple(table: AlgebraTable) -> bool:
    """True iff the trace form is nondegenerate (Dickson criterion)."""
    tf = trace_form(table)
    return linalg.rank(tf, table.field) == table.dim


def center(table: AlgebraTable) -> Subspace:
    """Solution space of x w_i = w_i x for all basis elements w_i.

    When the basis comes from a rewrite system it is enough to centralize
    the generator images, which generate the algebra.
    """
    n = table.dim
    F = table.field
    witnesses = None
    if table.rs is not None:
        witnesses = [table.from_poly(
            NcPoly.gen(table.rs.alphabet, F, g)).coords
            for g in range(len(table.rs.alphabet))]
    if table._tensor is not None:
        p = F.modulus
        C = table._tensor
        if witnesses is not None:
            rows_list = []
            for wv in witnesses:
                wa = np.asarray(wv, dtype=np.int64)
                right = np.tensordot(C, wa, axes=([1], [0])) % p   # (j, l): w_j * w
                left = np.tensordot(wa, C, axes=([0], [0])) % p    # (j, l): w * w_j
                rows_list.append((right - left) % p)               # rows (l) per j
            M = np.concatenate([np.transpose(d, (1, 0)) for d in rows_list], axis=0)
        else:
            # all-basis constraints: sum_j x_j (C[j,i,l] - C[i,j,l]) = 0
            D = (C - np.transpose(C, (1, 0, 2))) % p
            M = np.transpose(D, (1, 2, 0)).reshape(n * n, n)
        ker = linalg.right_nullspace([[int(v) for v in row] for row in M], F)
    else:
        rows = []
        if witnesses is not None:
            basis = _basis_vectors(table)
            for wv in witnesses:
                diffs = [[F.sub(r, l_) for r, l_ in zip(table.mul_vec(e_j, wv),
                                                        table.mul_vec(wv, e_j))]
                         for e_j in basis]
                for l in range(n):
                    rows.append([diffs[j][l] for j in range(n)])
        else:
            for i in range(n):
                for l in range(n):
                    row = []
                    for j in range(n):
                        row.append(F.sub(table._rows[j][i].get(l, F.zero),
                                         table._rows[i][j].get(l, F.zero)))
                    rows.append(row)
        ker = linalg.right_nullspace(rows, F)
    return Subspace.from_vectors(ker, F, n)


def _basis_vectors(table: AlgebraTable):
    F = table.field
    n = table.dim
    return [[F.one if k == i else F.zero for k in range(n)] for i in range(n)]


def _mult_closure_rows(table: AlgebraTable, vecs):
    """Products w_i * v and v * w_i for all basis i and v in vecs."""
    basis = _basis_vectors(table)
    return table.mul_pairs(basis, vecs) + table.mul_pairs(vecs, basis)


def two_sided_ideal(table: AlgebraTable, gens) -> Subspace:
    """Smallest subspace containing gens, closed under both multiplications."""
    F = table.field
    vecs = [table.element(g).coords for g in gens]
    current = Subspace.from_vectors(vecs, F, table.dim)
    while True:
        if current.dim == 0:
            return current
        new_rows = _mult_closure_rows(table, current.rows)
        bigger = Subspace.from_vectors(current.rows + new_rows, F, table.dim)
        if bigger.dim == current.dim:
            return bigger
        current = bigger


def _is_two_sided_ideal(table: AlgebraTable, sub: Subspace) -> bool:
    if sub.dim == 0:
        return True
    return all(sub.contains(row) for row in _mult_closure_rows(table, sub.rows))


def product_span(table: AlgebraTable, a: Subspace, b: Subspace) -> Subspace:
    rows = table.mul_pairs(a.rows, b.rows)
    return Subspace.from_vectors(rows, table.field, table.dim)


def nilpotency_index(table: AlgebraTable, sub: Subspace):
    """Smallest k with sub^k = 0, or None if not nilpotent within dim+1 steps."""
    if sub.dim == 0:
        return 1
    power = sub
    for k in range(2, table.dim + 2):
        power = product_span(table, power, sub)
        if power.dim == 0:
            return k
    return None


def is_invertible(table: AlgebraTable, x) -> bool:
    """True iff left multiplication by x is nonsingular."""
    return linalg.rank(left_regular(table, x), table.field) == table.dim


def corner_embedding(table: AlgebraTable, e) -> tuple[AlgebraTable, list]:
    """The algebra eAe (unit e) and the ambient coordinates of its basis.

    The basis is e followed by a deterministic independent subset of
    {e w_i e}, in basis order.
    """
    e = table.element(e)
    if e * e != e:
        raise ValueError("corner requires an idempotent")
    if e.is_zero():
        raise ValueError("corner requires a nonzero idempotent")
    F = table.field
    n = table.dim
    inc = linalg.IncrementalBasis(F, n)
    chosen = [e.coords]
    inc.add(e.coords)
    sandwich = table.mul_pairs([e.coords], _basis_vectors(table))
    sandwich = table.mul_pairs(sandwich, [e.coords])
    for cand in sandwich:
        if inc.add(cand):
            chosen.append(cand)
    m = len(chosen)
    labels = ["e"] + [f"e*x{i}*e" for i in range(1, m)]
    rows = [[{} for _ in range(m)] for _ in range(m)]
    prods = table.mul_pairs(chosen, chosen)
    for a in range(m):
        for b in range(m):
            coeffs = inc.express(prods[a * m + b])
            if coeffs is None:
                raise AssociativityError("corner products left the corner span")
            rows[a][b] = {k: c for k, c in enumerate(coeffs) if not F.is_zero(c)}
    if F.modulus is not None and (F.modulus - 1) ** 2 * (m + 1) < 2**63:
        C = np.zeros((m, m, m), dtype=np.int64)
        for a in range(m):
            for b in range(m):
                for k, c in rows[a][b].items():
                    C[a, b, k] = c
        return AlgebraTable(F, labels, tensor=C, check="full"), chosen
    return AlgebraTable(F, labels, rows=rows, check="full"), chosen


def corner(table: AlgebraTable, e) -> AlgebraTable:
    """The corner algebra eAe with unit e."""
    return corner_embedding(table, e)[0]


def subalgebra_with_unit(table: AlgebraTable, gens) -> Subspace:
    """Smallest unital subspace closed under products of its members."""
    F = table.field
    vecs = [table.unit().coords] + [table.element(g).coords for g in gens]
    current = Subspace.from_vectors(vecs, F, table.dim)
    while True:
        prods = table.mul_pairs(current.rows, current.rows)
        bigger = Subspace.from_vectors(current.rows + prods, F, table.dim)
        if bigger.dim == current.dim:
            return bigger
        current = bigger

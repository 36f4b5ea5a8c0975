"""Building 3-Lie algebras, and transferring weighted operators onto them.

Three sources feed the same pipeline.  A Lie algebra with a functional
vanishing on brackets gives [x,y,z]_f = f(x)[y,z] + f(y)[z,x] + f(z)[x,y].
A pre-Lie algebra reaches that construction through its commutator Lie
algebra.  A commutative associative algebra with a derivation D reaches it
through the pre-Lie product x*y = D(x)y, or directly through the 3x3
determinant bracket with rows (f(x),f(y),f(z)), (Dx,Dy,Dz), (x,y,z).

For each route there is a residual expression whose vanishing decides
whether an operator that is modified Rota-Baxter on the source structure
stays modified Rota-Baxter on the constructed 3-Lie algebra.  The three
residuals share one core: the Lie-level formula evaluated over the
appropriate commutator bracket.
"""

from fractions import Fraction
from itertools import combinations, product

from .linalg import Matrix, Vec
from .trilie import Counterexample, ThreeLieAlgebra, _as_vec

_ZERO = Fraction(0)


class LieAlgebra:
    """Antisymmetric bilinear bracket given on basis pairs i < j."""

    __slots__ = ("dim", "label", "_table")

    def __init__(self, dim: int, entries=None, label: str = ""):
        self.dim = dim
        self.label = label
        table: dict[tuple[int, int], Vec] = {}
        for key, value in (entries or {}).items():
            i, j = key
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"basis index out of range in {key}")
            if i == j:
                raise ValueError(f"repeated index in {key}")
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            if (i, j) in table:
                raise ValueError(f"duplicate entry for pair ({i}, {j})")
            v = sign * _as_vec(value, dim)
            if not v.is_zero():
                table[(i, j)] = v
        self._table = table

    def bracket_basis(self, i: int, j: int) -> Vec:
        if i == j:
            return Vec.zero(self.dim)
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        v = self._table.get((i, j))
        if v is None:
            return Vec.zero(self.dim)
        return sign * v

    def bracket(self, x: Vec, y: Vec) -> Vec:
        out = Vec.zero(self.dim)
        for (i, j), v in self._table.items():
            c = x[i] * y[j] - x[j] * y[i]
            if c:
                out = out + c * v
        return out

    def __repr__(self):
        return f"LieAlgebra<{self.label or f'dim {self.dim}'}>"


def check_jacobi(L: LieAlgebra) -> Counterexample | None:
    """Cyclic Jacobi sum on basis triples; None when it vanishes."""
    n = L.dim
    e = [Vec.basis(n, i) for i in range(n)]
    for i, j, k in combinations(range(n), 3):
        r = (
            L.bracket(L.bracket(e[i], e[j]), e[k])
            + L.bracket(L.bracket(e[j], e[k]), e[i])
            + L.bracket(L.bracket(e[k], e[i]), e[j])
        )
        if not r.is_zero():
            return Counterexample("jacobi", f"basis triple ({i}, {j}, {k})", r)
    return None


class PreLieAlgebra:
    """Bilinear product on basis pairs; no symmetry assumed."""

    __slots__ = ("dim", "label", "_table")

    def __init__(self, dim: int, products=None, label: str = ""):
        self.dim = dim
        self.label = label
        table: dict[tuple[int, int], Vec] = {}
        for (i, j), value in (products or {}).items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"basis index out of range in ({i}, {j})")
            v = _as_vec(value, dim)
            if not v.is_zero():
                table[(i, j)] = v
        self._table = table

    def star_basis(self, i: int, j: int) -> Vec:
        return self._table.get((i, j), Vec.zero(self.dim))

    def star(self, x: Vec, y: Vec) -> Vec:
        out = Vec.zero(self.dim)
        for (i, j), v in self._table.items():
            c = x[i] * y[j]
            if c:
                out = out + c * v
        return out

    def __repr__(self):
        return f"PreLieAlgebra<{self.label or f'dim {self.dim}'}>"


def _associator(P: PreLieAlgebra, x: Vec, y: Vec, z: Vec) -> Vec:
    return P.star(P.star(x, y), z) - P.star(x, P.star(y, z))


def check_left_symmetry(P: PreLieAlgebra) -> Counterexample | None:
    """Associator symmetric in its first two slots; None when it is."""
    n = P.dim
    e = [Vec.basis(n, i) for i in range(n)]
    for i, j in combinations(range(n), 2):
        for k in range(n):
            r = _associator(P, e[i], e[j], e[k]) - _associator(P, e[j], e[i], e[k])
            if not r.is_zero():
                return Counterexample(
                    "left symmetry", f"basis triple ({i}, {j}, {k})", r
                )
    return None


def check_right_symmetry(P: PreLieAlgebra) -> Counterexample | None:
    """Associator symmetric in its last two slots; None when it is."""
    n = P.dim
    e = [Vec.basis(n, i) for i in range(n)]
    for i in range(n):
        for j, k in combinations(range(n), 2):
            r = _associator(P, e[i], e[j], e[k]) - _associator(P, e[i], e[k], e[j])
            if not r.is_zero():
                return Counterexample(
                    "right symmetry", f"basis triple ({i}, {j}, {k})", r
                )
    return None


def pre_lie_chirality(P: PreLieAlgebra) -> str | None:
    """Which symmetry the associator has: "left", "right", "both", or None.

    Either chirality makes the commutator a Lie bracket, so everything
    downstream accepts both and this only reports.
    """
    left = check_left_symmetry(P) is None
    right = check_right_symmetry(P) is None
    if left and right:
        return "both"
    if left:
        return "left"
    if right:
        return "right"
    return None


class CommAssocWithDerivation:
    """Commutative product constants, a derivation matrix, and functional
    values, packaged together for the determinant bracket."""

    __slots__ = ("dim", "label", "D", "f", "_table")

    def __init__(self, dim: int, products=None, D: Matrix = None, f=None, label: str = ""):
        self.dim = dim
        self.label = label
        if D is None:
            D = Matrix.zero(dim, dim)
        if D.nrows != dim or D.ncols != dim:
            raise ValueError("derivation matrix has wrong shape")
        self.D = D
        self.f = _as_vec(f if f is not None else [0] * dim, dim)
        table: dict[tuple[int, int], Vec] = {}
        for (i, j), value in (products or {}).items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"basis index out of range in ({i}, {j})")
            key = (i, j) if i <= j else (j, i)
            v = _as_vec(value, dim)
            prior = table.get(key)
            if prior is not None and prior != v:
                raise ValueError(f"conflicting products for pair {key}")
            if not v.is_zero():
                table[key] = v
        self._table = table

    def product(self, x: Vec, y: Vec) -> Vec:
        out = Vec.zero(self.dim)
        for (i, j), v in self._table.items():
            c = x[i] * y[j] + (x[j] * y[i] if i != j else _ZERO)
            if c:
                out = out + c * v
        return out

    def functional(self, x: Vec):
        return sum((a * b for a, b in zip(self.f, x)), _ZERO)

    def __repr__(self):
        return f"CommAssocWithDerivation<{self.label or f'dim {self.dim}'}>"


def check_commassoc_data(C: CommAssocWithDerivation) -> Counterexample | None:
    """Associativity, Leibniz rule, and the functional symmetry
    f(D(x)y) = f(xD(y)); commutativity is built into storage."""
    n = C.dim
    e = [Vec.basis(n, i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                r = C.product(C.product(e[i], e[j]), e[k]) - C.product(
                    e[i], C.product(e[j], e[k])
                )
                if not r.is_zero():
                    return Counterexample(
                        "associativity", f"basis triple ({i}, {j}, {k})", r
                    )
    for i in range(n):
        for j in range(n):
            r = (
                C.D @ C.product(e[i], e[j])
                - C.product(C.D @ e[i], e[j])
                - C.product(e[i], C.D @ e[j])
            )
            if not r.is_zero():
                return Counterexample("leibniz", f"basis pair ({i}, {j})", r)
    for i in range(n):
        for j in range(n):
            lhs = C.functional(C.product(C.D @ e[i], e[j]))
            rhs = C.functional(C.product(e[i], C.D @ e[j]))
            if lhs != rhs:
                return Counterexample(
                    "functional symmetry", f"basis pair ({i}, {j})", lhs - rhs
                )
    return None


class TraceFunctional:
    """A functional recorded by its values on the basis."""

    __slots__ = ("values",)

    def __init__(self, values):
        self.values = Vec(Fraction(v) if isinstance(v, int) else v for v in values)

    def __call__(self, x: Vec):
        return sum((a * b for a, b in zip(self.values, x)), _ZERO)

    def vanishes_on_brackets(self, L: LieAlgebra) -> bool:
        return all(
            not self(L.bracket_basis(i, j))
            for i, j in combinations(range(L.dim), 2)
        )


def lie_to_3lie(L: LieAlgebra, f: TraceFunctional) -> ThreeLieAlgebra:
    """[x,y,z]_f = f(x)[y,z] + f(y)[z,x] + f(z)[x,y].

    Demands that f kill all brackets; that hypothesis is what makes the
    result satisfy the fundamental identity.
    """
    if len(f.values) != L.dim:
        raise ValueError("functional has wrong dimension")
    if not f.vanishes_on_brackets(L):
        raise ValueError("functional does not vanish on brackets")
    n = L.dim
    e = [Vec.basis(n, i) for i in range(n)]
    entries = {}
    for i, j, k in combinations(range(n), 3):
        v = (
            f(e[i]) * L.bracket_basis(j, k)
            + f(e[j]) * L.bracket_basis(k, i)
            + f(e[k]) * L.bracket_basis(i, j)
        )
        if not v.is_zero():
            entries[(i, j, k)] = v
    label = f"{L.label}_trace" if L.label else "trace"
    return ThreeLieAlgebra(n, entries, label=label)


def _check_mrb_bilinear(prod, dim: int, R: Matrix, lam, pairs, check: str):
    for i, j in pairs:
        x, y = Vec.basis(dim, i), Vec.basis(dim, j)
        Rx, Ry = R @ x, R @ y
        r = prod(Rx, Ry) - (R @ (prod(Rx, y) + prod(x, Ry))) - prod(x, y) * lam
        if not r.is_zero():
            return Counterexample(check, f"basis pair ({i}, {j})", r)
    return None


def check_mrb_on_lie(L: LieAlgebra, R: Matrix, lam) -> Counterexample | None:
    """[Rx,Ry] = R([Rx,y] + [x,Ry]) + lam [x,y] on basis pairs."""
    return _check_mrb_bilinear(
        L.bracket, L.dim, R, lam, combinations(range(L.dim), 2), "mrb on lie"
    )


def check_mrb_on_prelie(P: PreLieAlgebra, R: Matrix, lam) -> Counterexample | None:
    """Same shape of identity, for the (nonsymmetric) pre-Lie product."""
    pairs = product(range(P.dim), repeat=2)
    return _check_mrb_bilinear(P.star, P.dim, R, lam, pairs, "mrb on prelie")


def check_mrb_on_commassoc(C: CommAssocWithDerivation, R: Matrix, lam) -> Counterexample | None:
    pairs = ((i, j) for i in range(C.dim) for j in range(i, C.dim))
    return _check_mrb_bilinear(C.product, C.dim, R, lam, pairs, "mrb on commassoc")


def prelie_to_lie(P: PreLieAlgebra) -> LieAlgebra:
    """Commutator Lie algebra [x,y] = x*y - y*x."""
    entries = {}
    for i, j in combinations(range(P.dim), 2):
        v = P.star_basis(i, j) - P.star_basis(j, i)
        if not v.is_zero():
            entries[(i, j)] = v
    label = f"{P.label}_comm" if P.label else "commutator"
    return LieAlgebra(P.dim, entries, label=label)


def commassoc_deriv_to_prelie(
    C: CommAssocWithDerivation, operator: Matrix | None = None
) -> PreLieAlgebra:
    """Pre-Lie product x*y = D(x)y.

    The associator of this product is D(D(x))yz, symmetric in the last two
    slots, so the result is right pre-Lie (and only that, unless D squares
    to zero on products).  When an operator is supplied the transfer of the
    modified identity additionally needs D and the operator to commute, so
    that is enforced here rather than silently producing a wrong claim.
    """
    if operator is not None and C.D @ operator != operator @ C.D:
        raise ValueError("derivation does not commute with the operator")
    n = C.dim
    e = [Vec.basis(n, i) for i in range(n)]
    products = {}
    for i in range(n):
        Dei = C.D @ e[i]
        for j in range(n):
            v = C.product(Dei, e[j])
            if not v.is_zero():
                products[(i, j)] = v
    label = f"{C.label}_prelie" if C.label else "derived prelie"
    return PreLieAlgebra(n, products, label=label)


def commassoc_deriv_to_3lie(C: CommAssocWithDerivation) -> ThreeLieAlgebra:
    """Determinant bracket with rows (f(x),f(y),f(z)), (Dx,Dy,Dz), (x,y,z),
    expanded along the functional row so every product stays in the algebra.
    """
    bad = check_commassoc_data(C)
    if bad is not None:
        raise ValueError(f"invalid input data: {bad}")
    n = C.dim
    e = [Vec.basis(n, i) for i in range(n)]

    def two_det(a, b):
        # det [[Da, Db], [a, b]] with entries multiplied in C
        return C.product(C.D @ a, b) - C.product(C.D @ b, a)

    entries = {}
    for i, j, k in combinations(range(n), 3):
        x, y, z = e[i], e[j], e[k]
        v = (
            C.functional(x) * two_det(y, z)
            - C.functional(y) * two_det(x, z)
            + C.functional(z) * two_det(x, y)
        )
        if not v.is_zero():
            entries[(i, j, k)] = v
    label = f"{C.label}_det" if C.label else "determinant"
    return ThreeLieAlgebra(n, entries, label=label)


def _dot(values: Vec, x: Vec):
    return sum((a * b for a, b in zip(values, x)), _ZERO)


def _transfer_residuals(bracket2, fvals: Vec, dim: int, R: Matrix, lam, literal: bool):
    """Core residual: vanishes exactly when an operator that is modified
    Rota-Baxter for the bilinear bracket stays so for the trace bracket.

    literal swaps in the doubled f(Ry) term some sources print in place of
    the f(Rx) term; kept only so the discrepancy can be demonstrated.
    """

    def f(v):
        return _dot(fvals, v)

    out = {}
    for i, j, k in combinations(range(dim), 3):
        x, y, z = Vec.basis(dim, i), Vec.basis(dim, j), Vec.basis(dim, k)
        Rx, Ry, Rz = R @ x, R @ y, R @ z
        inside = (
            f(x) * bracket2(Ry, Rz)
            + f(y) * bracket2(Rz, Rx)
            + f(z) * bracket2(Rx, Ry)
            + lam * (
                f(x) * bracket2(y, z)
                + f(y) * bracket2(z, x)
                + f(z) * bracket2(x, y)
            )
        )
        single = (
            f(x) * (bracket2(Ry, z) + bracket2(y, Rz))
            + f(y) * (bracket2(Rz, x) + bracket2(z, Rx))
            + f(z) * (bracket2(Rx, y) + bracket2(x, Ry))
        )
        if literal:
            tail = 2 * (f(Ry) * bracket2(z, x)) + 2 * (
                f(Ry) * bracket2(z, x)
            ) + 2 * (f(Rz) * bracket2(x, y))
        else:
            tail = 2 * (
                f(Rx) * bracket2(y, z)
                + f(Ry) * bracket2(z, x)
                + f(Rz) * bracket2(x, y)
            )
        r = (R @ inside) - lam * single - lam * tail
        if not r.is_zero():
            out[(i, j, k)] = r
    return out


def lie_transfer_residual(
    L: LieAlgebra,
    f: TraceFunctional,
    R: Matrix,
    lam,
    literal_statement: bool = False,
    require_lie_mrb: bool = True,
) -> dict:
    """Residual deciding transfer from the Lie algebra to [.,.,.]_f.

    Returns the nonzero residual vectors keyed by basis triple; an empty
    dict means the operator is modified Rota-Baxter on lie_to_3lie(L, f).
    That equivalence needs R to be modified Rota-Baxter on L itself, which
    is enforced unless require_lie_mrb is switched off (symbolic runs).
    """
    if require_lie_mrb:
        bad = check_mrb_on_lie(L, R, lam)
        if bad is not None:
            raise ValueError(f"operator fails the Lie-level identity: {bad}")
    return _transfer_residuals(L.bracket, f.values, L.dim, R, lam, literal_statement)


def prelie_transfer_residual(
    P: PreLieAlgebra,
    f: TraceFunctional,
    R: Matrix,
    lam,
    require_prelie_mrb: bool = True,
) -> dict:
    """Transfer residual for the pre-Lie route, evaluated over the
    commutator bracket."""
    if require_prelie_mrb:
        bad = check_mrb_on_prelie(P, R, lam)
        if bad is not None:
            raise ValueError(f"operator fails the pre-Lie identity: {bad}")
    L = prelie_to_lie(P)
    return _transfer_residuals(L.bracket, f.values, P.dim, R, lam, False)


def derivation_transfer_residual(
    C: CommAssocWithDerivation,
    R: Matrix,
    lam,
    require_commassoc_mrb: bool = True,
) -> dict:
    """Transfer residual for the derivation route, using the functional
    packaged in C; needs D and R to commute."""
    if C.D @ R != R @ C.D:
        raise ValueError("derivation does not commute with the operator")
    if require_commassoc_mrb:
        bad = check_mrb_on_commassoc(C, R, lam)
        if bad is not None:
            raise ValueError(f"operator fails the product identity: {bad}")
    P = commassoc_deriv_to_prelie(C)
    L = prelie_to_lie(P)
    return _transfer_residuals(L.bracket, C.f, C.dim, R, lam, False)

"""3-Lie algebras from structure constants, and the checks that make the
rest of the toolkit trustworthy: fundamental identity, representations,
actions, derived algebra and center, Nijenhuis operators, and almost
product structures with their eigenspace decompositions.

All verification prunes by multilinearity: identities are checked on
ordered basis tuples only (i<j inside wedge slots, i<j<k inside fully
alternating slots), which is enough by linearity and alternation.
Counterexamples report the first violating tuple in canonical iteration
order together with the exact residual.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .combinat import sort_with_sign, triples, wedge_pairs
from .linalg import Matrix, Vec, in_span, rank_kernel, row_space_basis


@dataclass(frozen=True)
class Counterexample:
    check: str
    where: tuple
    residual: object

    def __str__(self):
        return f"{self.check} fails at {self.where}: residual {self.residual}"

    def __bool__(self):
        # Truthy, so `if check_x(...)` reads as "if it failed".
        return True


def _as_vec(value, dim: int) -> Vec:
    if isinstance(value, Vec):
        v = value
    elif isinstance(value, dict):
        entries = [Fraction(0)] * dim
        for i, c in value.items():
            entries[i] = c
        v = Vec(entries)
    else:
        v = Vec(value)
    if len(v) != dim:
        raise ValueError(f"expected a vector of length {dim}")
    return v


class ThreeLieAlgebra:
    """Alternating trilinear bracket given on strictly increasing triples.

    entries maps basis index triples (any order, 0-based) to the bracket
    value as a Vec, a dense sequence, or a sparse {index: scalar} dict.
    """

    def __init__(self, dim: int, entries=None, label: str = "", basis=None):
        if dim <= 0:
            raise ValueError("dim must be positive")
        self.dim = dim
        self.label = label
        self.basis = tuple(basis) if basis else tuple(f"e{i+1}" for i in range(dim))
        if len(self.basis) != dim:
            raise ValueError("basis names do not match dim")
        table: dict[tuple[int, int, int], Vec] = {}
        for key, value in (entries or {}).items():
            skey, sign = sort_with_sign(key)
            if sign == 0:
                raise ValueError(f"repeated index in bracket key {key}")
            if any(i < 0 or i >= dim for i in skey):
                raise ValueError(f"index out of range in {key}")
            v = sign * _as_vec(value, dim)
            if skey in table:
                raise ValueError(f"duplicate bracket key {key}")
            if not v.is_zero():
                table[skey] = v
        self._table = table

    @classmethod
    def zero(cls, dim: int, label: str = "") -> "ThreeLieAlgebra":
        return cls(dim, {}, label=label)

    def structure_constants(self) -> dict[tuple[int, int, int], Vec]:
        return dict(self._table)

    def bracket_basis(self, i: int, j: int, k: int) -> Vec:
        key, sign = sort_with_sign((i, j, k))
        if sign == 0:
            return Vec.zero(self.dim)
        v = self._table.get(key)
        if v is None:
            return Vec.zero(self.dim)
        return sign * v

    def bracket(self, x: Vec, y: Vec, z: Vec) -> Vec:
        if not len(x) == len(y) == len(z) == self.dim:
            raise ValueError("dimension mismatch")
        out = Vec.zero(self.dim)
        for (i, j, k), v in self._table.items():
            # 3x3 determinant of the (i,j,k) coordinates of x, y, z.
            det = (
                x[i] * (y[j] * z[k] - y[k] * z[j])
                - x[j] * (y[i] * z[k] - y[k] * z[i])
                + x[k] * (y[i] * z[j] - y[j] * z[i])
            )
            if det:
                out = out + det * v
        return out

    def is_zero_bracket(self) -> bool:
        return not self._table

    def __repr__(self):
        name = self.label or f"dim {self.dim}"
        return f"ThreeLieAlgebra<{name}>"


def check_fundamental_identity(A: ThreeLieAlgebra) -> Counterexample | None:
    """[x,y,[u,v,w]] = [[x,y,u],v,w] + [u,[x,y,v],w] + [u,v,[x,y,w]]."""
    e = [Vec.basis(A.dim, i) for i in range(A.dim)]
    for a, b in wedge_pairs(A.dim):
        for c, d, f in triples(A.dim):
            lhs = A.bracket(e[a], e[b], A.bracket_basis(c, d, f))
            rhs = (
                A.bracket(A.bracket_basis(a, b, c), e[d], e[f])
                + A.bracket(e[c], A.bracket_basis(a, b, d), e[f])
                + A.bracket(e[c], e[d], A.bracket_basis(a, b, f))
            )
            if lhs != rhs:
                return Counterexample(
                    "fundamental identity", (a, b, c, d, f), lhs - rhs
                )
    return None


class Representation:
    """Wedge-indexed family of matrices acting on a repDim space."""

    def __init__(self, algebra: ThreeLieAlgebra, rep_dim: int, rho=None):
        self.algebra = algebra
        self.rep_dim = rep_dim
        table: dict[tuple[int, int], Matrix] = {}
        for (i, j), m in (rho or {}).items():
            if not isinstance(m, Matrix):
                m = Matrix(m)
            if m.nrows != rep_dim or m.ncols != rep_dim:
                raise ValueError(f"rho({i},{j}) has wrong shape")
            if i == j:
                raise ValueError("wedge index (i, i)")
            if i > j:
                i, j, m = j, i, -m
            if not m.is_zero():
                table[(i, j)] = m
        self._rho = table

    @classmethod
    def zero(cls, algebra: ThreeLieAlgebra, rep_dim: int) -> "Representation":
        return cls(algebra, rep_dim)

    def matrix(self, i: int, j: int) -> Matrix:
        if i == j:
            return Matrix.zero(self.rep_dim, self.rep_dim)
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        m = self._rho.get((i, j))
        if m is None:
            return Matrix.zero(self.rep_dim, self.rep_dim)
        return m if sign == 1 else -m

    def of(self, x: Vec, y: Vec) -> Matrix:
        out = Matrix.zero(self.rep_dim, self.rep_dim)
        for (i, j), m in self._rho.items():
            c = x[i] * y[j] - x[j] * y[i]
            if c:
                out = out + c * m
        return out


def adjoint(A: ThreeLieAlgebra) -> Representation:
    rho = {}
    for i, j in wedge_pairs(A.dim):
        cols = [A.bracket_basis(i, j, k) for k in range(A.dim)]
        rho[(i, j)] = Matrix.from_cols(cols)
    return Representation(A, A.dim, rho)


def check_representation(rep: Representation) -> Counterexample | None:
    """Both defining equations, on ordered basis 4-tuples."""
    A = rep.algebra
    e = [Vec.basis(A.dim, i) for i in range(A.dim)]
    for x1, x2 in wedge_pairs(A.dim):
        for x3, x4 in wedge_pairs(A.dim):
            r12, r34 = rep.matrix(x1, x2), rep.matrix(x3, x4)
            lhs = r12 @ r34 - r34 @ r12
            rhs = rep.of(A.bracket_basis(x1, x2, x3), e[x4]) + rep.of(
                e[x3], A.bracket_basis(x1, x2, x4)
            )
            if lhs != rhs:
                return Counterexample(
                    "representation (commutator equation)",
                    (x1, x2, x3, x4),
                    lhs - rhs,
                )
    for x1 in range(A.dim):
        for x2, x3, x4 in triples(A.dim):
            lhs = rep.of(e[x1], A.bracket_basis(x2, x3, x4))
            rhs = (
                rep.matrix(x3, x4) @ rep.matrix(x1, x2)
                - rep.matrix(x2, x4) @ rep.matrix(x1, x3)
                + rep.matrix(x2, x3) @ rep.matrix(x1, x4)
            )
            if lhs != rhs:
                return Counterexample(
                    "representation (bracket equation)",
                    (x1, x2, x3, x4),
                    lhs - rhs,
                )
    return None


def derived_and_center(A: ThreeLieAlgebra) -> tuple[list[Vec], list[Vec]]:
    """Span of all brackets, and the kernel of the stacked bracket maps."""
    derived = row_space_basis(
        [A.bracket_basis(i, j, k) for i, j, k in triples(A.dim)], A.dim
    )
    ad = adjoint(A)
    stacked = []
    for i, j in wedge_pairs(A.dim):
        stacked.extend(ad.matrix(i, j).rows)
    _, center = rank_kernel(stacked, A.dim)
    return derived, center


def derived_in_center(A: ThreeLieAlgebra) -> bool:
    derived, center = derived_and_center(A)
    return all(in_span(v, center, A.dim) for v in derived)


class ActionPair:
    """An algebra acting on another one through a representation."""

    def __init__(self, acting: ThreeLieAlgebra, acted: ThreeLieAlgebra, rho: Representation):
        if rho.algebra is not acting and rho.algebra.dim != acting.dim:
            raise ValueError("rho is not a representation of the acting algebra")
        if rho.rep_dim != acted.dim:
            raise ValueError("rho does not act on the acted algebra's space")
        self.acting = acting
        self.acted = acted
        self.rho = rho


def check_action(pair: ActionPair) -> Counterexample | None:
    """Representation axioms, values in the center, brackets killed."""
    bad = check_representation(pair.rho)
    if bad:
        return bad
    h = pair.acted
    _, center = derived_and_center(h)
    for i, j in wedge_pairs(pair.acting.dim):
        m = pair.rho.matrix(i, j)
        for u in range(h.dim):
            img = m @ Vec.basis(h.dim, u)
            if not in_span(img, center, h.dim):
                return Counterexample("action (values not central)", (i, j, u), img)
        for u, v, w in triples(h.dim):
            img = m @ h.bracket_basis(u, v, w)
            if not img.is_zero():
                return Counterexample(
                    "action (bracket not killed)", (i, j, u, v, w), img
                )
    return None


def check_nijenhuis_operator(A: ThreeLieAlgebra, N: Matrix) -> Counterexample | None:
    """[Nx,Ny,Nz] = N(three mixed terms) - N^2(three single terms) + N^3[x,y,z]."""
    if N.nrows != A.dim or N.ncols != A.dim:
        raise ValueError("dimension mismatch")
    e = [Vec.basis(A.dim, i) for i in range(A.dim)]
    ne = [N @ v for v in e]
    for i, j, k in triples(A.dim):
        x, y, z = e[i], e[j], e[k]
        nx, ny, nz = ne[i], ne[j], ne[k]
        lhs = A.bracket(nx, ny, nz)
        mixed = A.bracket(nx, ny, z) + A.bracket(x, ny, nz) + A.bracket(nx, y, nz)
        single = A.bracket(nx, y, z) + A.bracket(x, ny, z) + A.bracket(x, y, nz)
        cube = A.bracket_basis(i, j, k)
        rhs = N @ (mixed - (N @ (single - (N @ cube))))
        if lhs != rhs:
            return Counterexample("Nijenhuis operator", (i, j, k), lhs - rhs)
    return None


@dataclass(frozen=True)
class ProductStructureReport:
    counterexample: Counterexample | None
    plus_basis: tuple[Vec, ...]
    minus_basis: tuple[Vec, ...]
    plus_closed: bool
    minus_closed: bool

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def __str__(self):
        if self.ok:
            return (
                f"product structure: pass; dim(+1 eigenspace)={len(self.plus_basis)} "
                f"(subalgebra: {self.plus_closed}), "
                f"dim(-1 eigenspace)={len(self.minus_basis)} "
                f"(subalgebra: {self.minus_closed})"
            )
        return str(self.counterexample)


def _closed_under_bracket(A: ThreeLieAlgebra, vectors) -> bool:
    vecs = list(vectors)
    for a, b, c in combinations(vecs, 3):
        if not in_span(A.bracket(a, b, c), vecs, A.dim):
            return False
    return True


def check_product_structure(A: ThreeLieAlgebra, E: Matrix) -> ProductStructureReport:
    """E^2 = id, E != +-id, and the six-term integrability condition.

    Also reports the +-1 eigenspaces and whether each one is a subalgebra,
    which characterizes the passing operators.
    """
    if E.nrows != A.dim or E.ncols != A.dim:
        raise ValueError("dimension mismatch")
    ident = Matrix.identity(A.dim)
    _, plus = rank_kernel((E - ident).rows, A.dim)
    _, minus = rank_kernel((E + ident).rows, A.dim)
    report = lambda ce: ProductStructureReport(  # noqa: E731
        ce,
        tuple(plus),
        tuple(minus),
        _closed_under_bracket(A, plus),
        _closed_under_bracket(A, minus),
    )
    sq = E @ E
    if sq != ident:
        return report(Counterexample("almost product (E^2 = id)", (), sq - ident))
    if E == ident or E == -ident:
        return report(Counterexample("almost product (E != +-id)", (), E))
    e = [Vec.basis(A.dim, i) for i in range(A.dim)]
    ee = [E @ v for v in e]
    for i, j, k in triples(A.dim):
        x, y, z = e[i], e[j], e[k]
        ex, ey, ez = ee[i], ee[j], ee[k]
        lhs = E @ A.bracket_basis(i, j, k)
        rhs = (
            A.bracket(ex, ey, ez)
            + A.bracket(ex, y, z)
            + A.bracket(x, ey, z)
            + A.bracket(x, y, ez)
            - (
                E
                @ (
                    A.bracket(ex, ey, z)
                    + A.bracket(x, ey, ez)
                    + A.bracket(ex, y, ez)
                )
            )
        )
        if lhs != rhs:
            return report(
                Counterexample("product structure integrability", (i, j, k), lhs - rhs)
            )
    return report(None)

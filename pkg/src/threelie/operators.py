"""Weighted operators on 3-Lie algebras.

Two flavours of operator identity live here.  The *modified* identity for
an operator R of nonzero weight lam reads, on every triple,

    [Rx, Ry, Rz] = R([Rx, Ry, z] + [x, Ry, Rz] + [Rx, y, Rz] + lam [x, y, z])
                   - lam ([Rx, y, z] + [x, Ry, z] + [x, y, Rz])

and the plain weighted identity (seven terms under one R) reads

    [Rx, Ry, Rz] = R([Rx, Ry, z] + [x, Ry, Rz] + [Rx, y, Rz]
                     + lam ([Rx, y, z] + [x, Ry, z] + [x, y, Rz])
                     + lam^2 [x, y, z]).

Both are checked exactly over rationals (or quadratic extensions), and the
modified identity can also be expanded symbolically over a generic matrix
to produce the defining polynomial system.  A modified operator whose
domain has its derived ideal inside the center induces a second 3-Lie
bracket together with a representation on the same space; those live here
too, as does an exhaustive finite search over structured matrix shapes.
"""

from fractions import Fraction
from itertools import combinations, product

from .linalg import Matrix, Vec
from .polynomials import Poly, matrix_variables
from .trilie import (
    ActionPair,
    Counterexample,
    Representation,
    ThreeLieAlgebra,
    check_action,
    derived_in_center,
)

_ZERO = Fraction(0)


class WeightedOperator:
    """A linear operator R with a fixed nonzero weight on a 3-Lie algebra."""

    __slots__ = ("algebra", "matrix", "weight")

    def __init__(self, algebra: ThreeLieAlgebra, matrix: Matrix, weight):
        if matrix.nrows != algebra.dim or matrix.ncols != algebra.dim:
            raise ValueError(
                f"operator is {matrix.nrows}x{matrix.ncols}, "
                f"algebra has dimension {algebra.dim}"
            )
        if not weight:
            raise ValueError("weight must be nonzero")
        self.algebra = algebra
        self.matrix = matrix
        self.weight = weight

    def __repr__(self):
        return (
            f"WeightedOperator(dim={self.algebra.dim}, weight={self.weight})"
        )


def _mixed_sum(bracket, R, x, y, z):
    # [Rx,Ry,z] + [x,Ry,Rz] + [Rx,y,Rz]
    Rx, Ry, Rz = R @ x, R @ y, R @ z
    return bracket(Rx, Ry, z) + bracket(x, Ry, Rz) + bracket(Rx, y, Rz)


def _single_sum(bracket, R, x, y, z):
    # [Rx,y,z] + [x,Ry,z] + [x,y,Rz]
    return (
        bracket(R @ x, y, z) + bracket(x, R @ y, z) + bracket(x, y, R @ z)
    )


def modified_residual(algebra, R, lam, x, y, z) -> Vec:
    """[Rx,Ry,Rz] - R(mixed + lam [x,y,z]) + lam (single), as a vector.

    Zero on every triple exactly when (R, lam) satisfies the modified
    identity.  Works verbatim over polynomial entries, which is how the
    symbolic condition system is produced.
    """
    br = algebra.bracket
    lhs = br(R @ x, R @ y, R @ z)
    inner = _mixed_sum(br, R, x, y, z) + br(x, y, z) * lam
    return lhs - (R @ inner) + _single_sum(br, R, x, y, z) * lam


def _weighted_residual(algebra, R, lam, x, y, z) -> Vec:
    br = algebra.bracket
    lhs = br(R @ x, R @ y, R @ z)
    inner = (
        _mixed_sum(br, R, x, y, z)
        + _single_sum(br, R, x, y, z) * lam
        + br(x, y, z) * (lam * lam)
    )
    return lhs - (R @ inner)


def _first_violation(algebra, residual, check: str) -> Counterexample | None:
    n = algebra.dim
    for i, j, k in combinations(range(n), 3):
        r = residual(Vec.basis(n, i), Vec.basis(n, j), Vec.basis(n, k))
        if not r.is_zero():
            return Counterexample(
                check=check, where=f"basis triple ({i}, {j}, {k})", residual=r
            )
    return None


def check_mrb_absolute(op: WeightedOperator) -> Counterexample | None:
    """First basis triple violating the modified identity, or None."""
    A, R, lam = op.algebra, op.matrix, op.weight
    return _first_violation(
        A, lambda x, y, z: modified_residual(A, R, lam, x, y, z), "mrb"
    )


def check_rb(op: WeightedOperator) -> Counterexample | None:
    """First basis triple violating the seven-term weighted identity."""
    A, R, lam = op.algebra, op.matrix, op.weight
    return _first_violation(
        A, lambda x, y, z: _weighted_residual(A, R, lam, x, y, z), "rb"
    )


class RelativeMRBDatum:
    """A linear map T: h -> g between 3-Lie algebras linked by a pair of
    cross actions, with a nonzero weight.

    rho represents g on the space of h and zeta represents h on the space
    of g.  The identity checked by check_mrb_relative only evaluates these
    maps; whether they honestly form actions (central values, brackets
    killed) is a separate obligation, available as validate().
    """

    __slots__ = ("h", "g", "rho", "zeta", "T", "weight")

    def __init__(self, h, g, rho: Representation, zeta: Representation, T: Matrix, weight):
        if not weight:
            raise ValueError("weight must be nonzero")
        if rho.algebra.dim != g.dim or rho.rep_dim != h.dim:
            raise ValueError("rho must represent g on the space of h")
        if zeta.algebra.dim != h.dim or zeta.rep_dim != g.dim:
            raise ValueError("zeta must represent h on the space of g")
        if T.nrows != g.dim or T.ncols != h.dim:
            raise ValueError(f"T is {T.nrows}x{T.ncols}, expected {g.dim}x{h.dim}")
        self.h = h
        self.g = g
        self.rho = rho
        self.zeta = zeta
        self.T = T
        self.weight = weight

    def validate(self) -> Counterexample | None:
        """Action axioms for both rho and zeta."""
        bad = check_action(ActionPair(self.g, self.h, self.rho))
        if bad is not None:
            return bad
        return check_action(ActionPair(self.h, self.g, self.zeta))


def check_mrb_relative(datum: RelativeMRBDatum) -> Counterexample | None:
    """First basis triple of h violating the relative modified identity

        [Tu,Tv,Tw] = T(rho(Tu,Tv)w + rho(Tv,Tw)u + rho(Tw,Tu)v + lam {u,v,w})
                     - lam (zeta(u,v)Tw + zeta(v,w)Tu + zeta(w,u)Tv)

    or None when it holds throughout.
    """
    h, g = datum.h, datum.g
    rho, zeta = datum.rho, datum.zeta
    T, lam = datum.T, datum.weight
    for i, j, k in combinations(range(h.dim), 3):
        u, v, w = (Vec.basis(h.dim, t) for t in (i, j, k))
        Tu, Tv, Tw = T @ u, T @ v, T @ w
        lhs = g.bracket(Tu, Tv, Tw)
        inner = (
            rho.of(Tu, Tv) @ w
            + rho.of(Tv, Tw) @ u
            + rho.of(Tw, Tu) @ v
            + h.bracket(u, v, w) * lam
        )
        mod = zeta.of(u, v) @ Tw + zeta.of(v, w) @ Tu + zeta.of(w, u) @ Tv
        r = lhs - (T @ inner) + mod * lam
        if not r.is_zero():
            return Counterexample(
                check="relative mrb",
                where=f"basis triple ({i}, {j}, {k}) of h",
                residual=r,
            )
    return None


def mrb_negation_closure(op: WeightedOperator) -> bool:
    """Whether -R satisfies the modified identity at the same weight.

    True whenever op itself does: the identity only sees even products
    of R per term group.
    """
    neg = WeightedOperator(op.algebra, -op.matrix, op.weight)
    return check_mrb_absolute(neg) is None


def is_automorphism(algebra: ThreeLieAlgebra, psi: Matrix) -> bool:
    """Invertible and bracket-preserving on all basis triples."""
    if psi.nrows != algebra.dim or psi.ncols != algebra.dim:
        return False
    if psi.inverse() is None:
        return False
    n = algebra.dim
    for i, j, k in combinations(range(n), 3):
        lhs = psi @ algebra.bracket_basis(i, j, k)
        rhs = algebra.bracket(psi.col(i), psi.col(j), psi.col(k))
        if not (lhs - rhs).is_zero():
            return False
    return True


def mrb_conjugation(op: WeightedOperator, psi: Matrix) -> WeightedOperator:
    """Transport R along an algebra automorphism: psi^-1 R psi.

    Raises ValueError unless psi really is an automorphism; conjugation by
    anything else has no reason to preserve the identity.
    """
    if not is_automorphism(op.algebra, psi):
        raise ValueError("psi is not an automorphism of the algebra")
    inv = psi.inverse()
    return WeightedOperator(op.algebra, inv @ op.matrix @ psi, op.weight)


def rb_to_mrb(op: WeightedOperator) -> WeightedOperator:
    """Map a weight-lam operator to (2R + lam id, lam^2).

    The seven-term identity for R holds iff the modified identity holds
    for the image; the weight gets squared.
    """
    A, lam = op.algebra, op.weight
    two_r = op.matrix + op.matrix
    return WeightedOperator(A, two_r + Matrix.diagonal([lam] * A.dim), lam * lam)


def induced_bracket(op: WeightedOperator) -> ThreeLieAlgebra:
    """The deformed bracket [x,y,z]_R = mixed + lam [x,y,z] as a new algebra.

    Demands that op passes check_mrb_absolute and that the derived ideal of
    the domain sits inside its center; outside that regime the deformed
    bracket need not satisfy the fundamental identity, so we refuse rather
    than hand back a non-algebra.
    """
    A, R, lam = op.algebra, op.matrix, op.weight
    if not derived_in_center(A):
        raise ValueError("derived ideal is not central in the domain algebra")
    bad = check_mrb_absolute(op)
    if bad is not None:
        raise ValueError(f"operator fails the modified identity: {bad}")
    n = A.dim
    entries = {}
    for i, j, k in combinations(range(n), 3):
        x, y, z = Vec.basis(n, i), Vec.basis(n, j), Vec.basis(n, k)
        val = _mixed_sum(A.bracket, R, x, y, z) + A.bracket(x, y, z) * lam
        if not val.is_zero():
            entries[(i, j, k)] = val
    label = f"{A.label}_induced" if A.label else "induced"
    return ThreeLieAlgebra(n, entries, label=label)


def rho_R(op: WeightedOperator) -> Representation:
    """The twisted adjoint action attached to a modified operator.

    rho(x,y)z = [Rx,Ry,z] - R([Rx,y,z] + [x,Ry,z]) + lam [x,y,z]; it is a
    representation of the induced algebra on the underlying space.
    """
    induced = induced_bracket(op)
    A, R, lam = op.algebra, op.matrix, op.weight
    n = A.dim
    rho = {}
    for i, j in combinations(range(n), 2):
        x, y = Vec.basis(n, i), Vec.basis(n, j)
        Rx, Ry = R @ x, R @ y
        cols = []
        for k in range(n):
            z = Vec.basis(n, k)
            col = (
                A.bracket(Rx, Ry, z)
                - (R @ (A.bracket(Rx, y, z) + A.bracket(x, Ry, z)))
                + A.bracket(x, y, z) * lam
            )
            cols.append(col)
        rho[(i, j)] = Matrix.from_cols(cols)
    return Representation(induced, n, rho)


def mrb_polynomial_conditions(algebra: ThreeLieAlgebra, weight) -> list[Poly]:
    """The modified identity over a generic matrix, one polynomial per
    nonzero residual coordinate.

    Entries of the generic matrix are named a11 .. ann (row then column).
    Conditions are emitted per basis triple in lexicographic order, then
    per coordinate, each normalized so its graded-lex leading coefficient
    is positive; exact duplicates are dropped.  The operator (a_ij)
    satisfies the identity at this weight iff all returned polynomials
    vanish.
    """
    if not weight:
        raise ValueError("weight must be nonzero")
    n = algebra.dim
    R = matrix_variables(n)
    lam = Poly.const(weight)
    out: list[Poly] = []
    seen = set()
    for i, j, k in combinations(range(n), 3):
        x, y, z = Vec.basis(n, i), Vec.basis(n, j), Vec.basis(n, k)
        res = modified_residual(algebra, R, lam, x, y, z)
        for c in range(n):
            p = res[c]
            if not isinstance(p, Poly):
                p = Poly.const(p)
            if not p:
                continue
            if p.leading_coefficient() < 0:
                p = -p
            if p not in seen:
                seen.add(p)
                out.append(p)
    return out


_SHAPES = ("diagonal", "upper", "full")


def _shape_positions(n: int, shape: str) -> list[tuple[int, int]]:
    if shape == "diagonal":
        return [(i, i) for i in range(n)]
    if shape == "upper":
        return [(i, j) for i in range(n) for j in range(i, n)]
    if shape == "full":
        return [(i, j) for i in range(n) for j in range(n)]
    raise ValueError(f"unknown shape {shape!r}; expected one of {_SHAPES}")


def search_mrb(
    algebra: ThreeLieAlgebra,
    weight,
    values,
    shape: str = "diagonal",
    budget: int = 65536,
) -> list[Matrix]:
    """Exhaustively list matrices over the value set satisfying the
    modified identity at the given weight.

    shape restricts which entries may be nonzero (diagonal, upper, full);
    values are tried per entry in the order given, so the output order is
    deterministic.  Refuses up front when the grid exceeds budget.
    """
    if not weight:
        raise ValueError("weight must be nonzero")
    values = list(values)
    positions = _shape_positions(algebra.dim, shape)
    total = len(values) ** len(positions)
    if total > budget:
        raise ValueError(
            f"search space has {total} candidates, over budget {budget}"
        )
    n = algebra.dim
    hits = []
    for combo in product(values, repeat=len(positions)):
        rows = [[_ZERO] * n for _ in range(n)]
        for (i, j), v in zip(positions, combo):
            rows[i][j] = Fraction(v) if isinstance(v, int) else v
        R = Matrix(rows)
        op = WeightedOperator(algebra, R, weight)
        if check_mrb_absolute(op) is None:
            hits.append(R)
    return hits

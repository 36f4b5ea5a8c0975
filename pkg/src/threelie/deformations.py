"""Linear deformations R_t = R + t*Rhat of weighted modified operators.

Validity of a direction Rhat is a polynomial identity in t: the modified
residual of R_t is cubic with zero constant term, so over a field of
characteristic zero the line stays modified for every t exactly when the
order 1, 2, 3 coefficient identities hold on basis triples.  Coefficients
are extracted exactly by running the residual over polynomial entries; the
three-point specialization t = 1, 2, 3 is an equivalent independent oracle
through LinearDeformation.at.

The order-1 identity is literally closedness of the direction in the
operator complex, equivalent lines differ by a seam coboundary, and
Nijenhuis wedge vectors produce trivial deformations.
"""

from fractions import Fraction

from .cohomology import ad_wedge, cochain_from_matrix, d_R, partial_R
from .combinat import triples
from .linalg import Matrix, Vec
from .operators import (
    WeightedOperator,
    check_mrb_absolute,
    induced_bracket,
    modified_residual,
    rho_R,
)
from .polynomials import Poly
from .trilie import (
    Counterexample,
    ThreeLieAlgebra,
    check_nijenhuis_operator,
    derived_in_center,
)

_T = "t"


class LinearDeformation:
    """A direction matrix attached to a base operator, standing for the
    line R_t = R + t*Rhat at the base weight."""

    __slots__ = ("base", "direction")

    def __init__(self, base: WeightedOperator, direction):
        if not isinstance(direction, Matrix):
            direction = Matrix(direction)
        n = base.algebra.dim
        if direction.nrows != n or direction.ncols != n:
            raise ValueError("direction does not match the algebra dimension")
        self.base = base
        self.direction = direction

    def at(self, t) -> WeightedOperator:
        """The operator on the line at a concrete parameter value."""
        return WeightedOperator(
            self.base.algebra,
            self.base.matrix + Fraction(t) * self.direction,
            self.base.weight,
        )

    def line_matrix(self) -> Matrix:
        """R + t*Rhat with polynomial entries in the formal parameter."""
        return self.base.matrix + Poly.var(_T) * self.direction

    def __repr__(self):
        zero = "zero " if self.direction.is_zero() else ""
        return f"LinearDeformation({zero}direction, weight={self.base.weight})"


def _coefficient(entry, m: int):
    if isinstance(entry, Poly):
        return entry.terms.get((_T,) * m, Fraction(0))
    return Fraction(entry) if m == 0 else Fraction(0)


def coefficient_vec(v: Vec, m: int) -> Vec:
    """The order-m part of a vector of polynomials in the line parameter."""
    return Vec([_coefficient(c, m) for c in v])


def _require_valid_base(op: WeightedOperator):
    bad = check_mrb_absolute(op)
    if bad:
        raise ValueError(f"base operator is not modified: {bad}")


def check_linear_deformation(d: LinearDeformation) -> Counterexample | None:
    """First failing coefficient identity of the line, or None.

    The report names the order (power of t), the basis triple, and the
    residual vector.  Passing is equivalent to R + t*Rhat satisfying the
    modified identity for every value of t.
    """
    _require_valid_base(d.base)
    A, lam = d.base.algebra, d.base.weight
    line = d.line_matrix()
    e = [Vec.basis(A.dim, i) for i in range(A.dim)]
    for i, j, k in triples(A.dim):
        res = modified_residual(A, line, lam, e[i], e[j], e[k])
        for m in (1, 2, 3):
            coeff = coefficient_vec(res, m)
            if not coeff.is_zero():
                return Counterexample(
                    f"order-{m} condition", f"basis triple ({i}, {j}, {k})", coeff
                )
    return None


def deformation_is_cocycle(d: LinearDeformation) -> bool:
    """Whether the order-1 coefficient identity of the line agrees, on every
    basis triple, with closedness of the direction in the operator complex.

    The two conditions are the same expansion read in two notations, so
    valid deformation directions always come out True.
    """
    bad = check_linear_deformation(d)
    if bad:
        raise ValueError(f"not a linear deformation: {bad}")
    base = d.base
    A, lam = base.algebra, base.weight
    f = cochain_from_matrix(induced_bracket(base), rho_R(base), d.direction)
    df = partial_R(base, f)
    line = d.line_matrix()
    e = [Vec.basis(A.dim, i) for i in range(A.dim)]
    for i, j, k in triples(A.dim):
        res = modified_residual(A, line, lam, e[i], e[j], e[k])
        if coefficient_vec(res, 1) != df.evaluate([(i, j)], k):
            return False
    return True


def _as_wedge(X) -> dict:
    if isinstance(X, NijenhuisElement):
        return X.wedge
    return dict(X)


def check_equivalence(d1, d2, X) -> Counterexample | None:
    """Equivalence of two deformation lines through phi_t = id + t*ad_X.

    Two conditions, both coefficientwise in t: phi_t must be multiplicative
    on the bracket (its order-1 part is the derivation property of ad_X and
    holds automatically, so failures show at order 2 or 3), and the second
    line composed with phi_t must match phi_t composed with the first.
    Passing forces the directions to differ by the seam coboundary of X.
    """
    for d in (d1, d2):
        bad = check_linear_deformation(d)
        if bad:
            raise ValueError(f"not a linear deformation: {bad}")
    if d1.base.algebra.dim != d2.base.algebra.dim or (
        d1.base.matrix != d2.base.matrix or d1.base.weight != d2.base.weight
    ):
        raise ValueError("the deformations have different base operators")
    A = d1.base.algebra
    ad = ad_wedge(A, _as_wedge(X))
    phi = Matrix.identity(A.dim) + Poly.var(_T) * ad
    e = [Vec.basis(A.dim, i) for i in range(A.dim)]
    for i, j, k in triples(A.dim):
        res = phi @ A.bracket_basis(i, j, k) - A.bracket(phi @ e[i], phi @ e[j], phi @ e[k])
        for m in (1, 2, 3):
            coeff = coefficient_vec(res, m)
            if not coeff.is_zero():
                return Counterexample(
                    f"bracket compatibility at order {m}",
                    f"basis triple ({i}, {j}, {k})",
                    coeff,
                )
    diff = d2.line_matrix() @ phi - phi @ d1.line_matrix()
    for m in (1, 2):
        for u in range(A.dim):
            coeff = coefficient_vec(diff.col(u), m)
            if not coeff.is_zero():
                return Counterexample(
                    f"operator intertwining at order {m}", f"basis vector {u}", coeff
                )
    return None


def check_nijenhuis_element(op: WeightedOperator, X) -> Counterexample | None:
    """Three conditions on a wedge vector: brackets with three, then with
    two, arguments from the image of ad_X vanish, and ad_X R ad_X agrees
    with ad_X ad_X R.  Nothing is assumed of the base operator."""
    X = _as_wedge(X)
    A, R = op.algebra, op.matrix
    ad = ad_wedge(A, X)
    e = [Vec.basis(A.dim, i) for i in range(A.dim)]
    img = [ad @ v for v in e]
    for i, j, k in triples(A.dim):
        r = A.bracket(img[i], img[j], img[k])
        if not r.is_zero():
            return Counterexample(
                "triple-image bracket", f"basis triple ({i}, {j}, {k})", r
            )
        r = (
            A.bracket(e[i], img[j], img[k])
            + A.bracket(img[i], img[j], e[k])
            + A.bracket(img[i], e[j], img[k])
        )
        if not r.is_zero():
            return Counterexample(
                "double-image bracket", f"basis triple ({i}, {j}, {k})", r
            )
    lhs = ad @ (R @ ad)
    rhs = ad @ (ad @ R)
    for u in range(A.dim):
        if lhs.col(u) != rhs.col(u):
            return Counterexample(
                "operator interleaving", f"basis vector {u}", lhs.col(u) - rhs.col(u)
            )
    return None


class NijenhuisElement:
    """A wedge vector passing check_nijenhuis_element for its operator."""

    __slots__ = ("op", "wedge")

    def __init__(self, op: WeightedOperator, X):
        X = dict(X)
        bad = check_nijenhuis_element(op, X)
        if bad:
            raise ValueError(f"not a Nijenhuis element: {bad}")
        self.op = op
        self.wedge = X

    def __repr__(self):
        return f"NijenhuisElement({self.wedge})"


def trivial_deformation_from_nijenhuis(op: WeightedOperator, X) -> LinearDeformation:
    """The line R + t*d_R(X).  For a Nijenhuis element this is a valid
    deformation and is equivalent to the undeformed line through the very
    same wedge vector."""
    X = _as_wedge(X)
    bad = check_nijenhuis_element(op, X)
    if bad:
        raise ValueError(f"not a Nijenhuis element: {bad}")
    return LinearDeformation(op, d_R(op, X))


def omega_from_direction(d: LinearDeformation, require_valid: bool = True) -> ThreeLieAlgebra:
    """The trilinear direction along which the induced bracket moves.

    Six terms, one R and one Rhat spread over two slots each way.  When the
    direction is valid and its image brackets to zero against itself (for
    instance when the image is central), the induced bracket of R + t*Rhat
    is the induced bracket of R plus t times this map, exactly; the
    quadratic remainder is the mixed two-direction sum.
    """
    base = d.base
    if require_valid:
        bad = check_linear_deformation(d)
        if bad:
            raise ValueError(f"not a linear deformation: {bad}")
    if not derived_in_center(base.algebra):
        raise ValueError("derived ideal is not central in the domain algebra")
    A, R, Rh = base.algebra, base.matrix, d.direction
    br = A.bracket
    table = {}
    for i, j, k in triples(A.dim):
        x, y, z = Vec.basis(A.dim, i), Vec.basis(A.dim, j), Vec.basis(A.dim, k)
        Rx, Ry, Rz = R @ x, R @ y, R @ z
        hx, hy, hz = Rh @ x, Rh @ y, Rh @ z
        w = (
            br(Rx, hy, z)
            + br(hx, Ry, z)
            + br(Rx, y, hz)
            + br(hx, y, Rz)
            + br(x, hy, Rz)
            + br(x, Ry, hz)
        )
        if not w.is_zero():
            table[(i, j, k)] = w
    return ThreeLieAlgebra(A.dim, table, label="bracket direction")


def check_adX_nijenhuis_on_induced(op: WeightedOperator, X) -> Counterexample | None:
    """ad_X as a Nijenhuis operator for the induced bracket.

    Requires a Nijenhuis element and an existing induced algebra; the
    contract is that such elements always pass."""
    X = _as_wedge(X)
    bad = check_nijenhuis_element(op, X)
    if bad:
        raise ValueError(f"not a Nijenhuis element: {bad}")
    return check_nijenhuis_operator(induced_bracket(op), ad_wedge(op.algebra, X))

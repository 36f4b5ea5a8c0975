"""Cochain complexes for 3-Lie algebras and for weighted modified operators.

The generic complex has C^n = Hom((wedge^2 g)^(n-1) wedge g, V) with the
five-group coboundary; a cochain is stored by its values on the canonical
basis (a tuple of n-1 ordered wedge pairs plus a final basis index).

The operator complex puts the wedge square g^g in degree 1, shifts the
generic spaces up by one from degree 2 on, and differentiates with d_R at
the seam and with the generic coboundary of the induced algebra (with the
twisted adjoint coefficients) above it.
"""

from fractions import Fraction
from itertools import combinations, product
from math import comb

from .linalg import Matrix, Vec
from .operators import WeightedOperator, induced_bracket, rho_R
from .trilie import Representation, ThreeLieAlgebra

_ZERO = Fraction(0)


def _wedge_entries(v: Vec, idx: int):
    """v wedge e_idx as {(a, b): coeff} with a < b."""
    out = {}
    for i, c in enumerate(v):
        if not c or i == idx:
            continue
        if i < idx:
            out[(i, idx)] = out.get((i, idx), _ZERO) + c
        else:
            out[(idx, i)] = out.get((idx, i), _ZERO) - c
    return out


class Cochain:
    """Element of Hom((wedge^2 g)^(n-1) wedge g, V) on the canonical basis."""

    __slots__ = ("algebra", "rep", "degree", "values")

    def __init__(self, algebra: ThreeLieAlgebra, rep: Representation, degree: int, values=None):
        if degree < 1:
            raise ValueError("cochain degree must be at least 1")
        self.algebra = algebra
        self.rep = rep
        self.degree = degree
        n = algebra.dim
        table = {}
        for key, value in (values or {}).items():
            key = tuple(key)
            if len(key) != degree:
                raise ValueError(f"key {key} has wrong length for degree {degree}")
            *wedges, final = key
            for w in wedges:
                a, b = w
                if not (0 <= a < b < n):
                    raise ValueError(f"wedge index {w} not canonical")
            if not (0 <= final < n):
                raise ValueError(f"final index {final} out of range")
            v = value if isinstance(value, Vec) else Vec(value)
            if len(v) != rep.rep_dim:
                raise ValueError("value has wrong dimension")
            if not v.is_zero():
                table[tuple(wedges) + (final,)] = v
        self.values = table

    @classmethod
    def zero(cls, algebra, rep, degree):
        return cls(algebra, rep, degree)

    def _get(self, key) -> Vec:
        return self.values.get(key, Vec.zero(self.rep.rep_dim))

    def evaluate(self, wedges, final) -> Vec:
        """Multilinear evaluation; wedge slots take (a, b) pairs or
        {(a, b): coeff} dicts, the final slot an index or a vector."""
        slots = []
        for w in wedges:
            if isinstance(w, dict):
                slots.append(w)
            else:
                a, b = w
                if a == b:
                    return Vec.zero(self.rep.rep_dim)
                if a < b:
                    slots.append({(a, b): Fraction(1)})
                else:
                    slots.append({(b, a): Fraction(-1)})
        if isinstance(final, Vec):
            fin = {i: c for i, c in enumerate(final) if c}
        else:
            fin = {final: Fraction(1)}
        out = Vec.zero(self.rep.rep_dim)
        for combo in product(*(s.items() for s in slots)):
            coeff = Fraction(1)
            key = []
            for w, c in combo:
                coeff *= c
                key.append(w)
            for i, c in fin.items():
                v = self._get(tuple(key) + (i,))
                if not v.is_zero():
                    out = out + (coeff * c) * v
        return out

    def is_zero(self) -> bool:
        return not self.values

    def _like(self, other):
        if not isinstance(other, Cochain) or other.degree != self.degree:
            raise ValueError("cochain degree mismatch")
        if other.rep.rep_dim != self.rep.rep_dim or other.algebra.dim != self.algebra.dim:
            raise ValueError("cochain space mismatch")

    def __add__(self, other):
        self._like(other)
        values = dict(self.values)
        for key, v in other.values.items():
            values[key] = values.get(key, Vec.zero(self.rep.rep_dim)) + v
        return Cochain(self.algebra, self.rep, self.degree, values)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, c):
        values = {key: c * v for key, v in self.values.items()}
        return Cochain(self.algebra, self.rep, self.degree, values)

    def __eq__(self, other):
        return (
            isinstance(other, Cochain)
            and self.degree == other.degree
            and self.values == other.values
        )

    def __repr__(self):
        return f"Cochain<degree {self.degree}, {len(self.values)} values>"


def cochain_from_matrix(algebra, rep, M: Matrix) -> Cochain:
    """A linear map g -> V as a degree-1 cochain."""
    values = {(i,): M.col(i) for i in range(algebra.dim)}
    return Cochain(algebra, rep, 1, values)


def matrix_from_cochain(f: Cochain) -> Matrix:
    if f.degree != 1:
        raise ValueError("only degree-1 cochains are plain linear maps")
    return Matrix.from_cols([f._get((i,)) for i in range(f.algebra.dim)])


def coboundary(f: Cochain) -> Cochain:
    """The five-group coboundary C^n -> C^(n+1) of f's algebra and
    coefficients; composing it with itself gives zero."""
    A, rep, n = f.algebra, f.rep, f.degree
    dim = A.dim
    wedges = list(combinations(range(dim), 2))
    sign_last = Fraction(-1) ** (n + 1)
    values = {}
    for key in product(wedges, repeat=n):
        for t in range(dim):
            W = key
            out = Vec.zero(rep.rep_dim)
            head = W[:-1]
            a_n, b_n = W[-1]
            # rho against the last wedge and the final argument
            out = out + sign_last * (rep.matrix(b_n, t) @ f._get(head + (a_n,)))
            out = out + sign_last * (rep.matrix(t, a_n) @ f._get(head + (b_n,)))
            for j in range(n):
                a_j, b_j = W[j]
                rest = W[:j] + W[j + 1 :]
                sign = Fraction(-1) ** (j + 1)
                # acting on the value / bracketing the final argument
                out = out - sign * (rep.matrix(a_j, b_j) @ f._get(rest + (t,)))
                v = A.bracket_basis(a_j, b_j, t)
                for i, c in enumerate(v):
                    if c:
                        out = out + sign * c * f._get(rest + (i,))
                # bracketing into a later wedge slot
                for k in range(j + 1, n):
                    a_k, b_k = W[k]
                    mid = W[:j] + W[j + 1 : k]
                    tail = W[k + 1 :]
                    ws = _wedge_entries(A.bracket_basis(a_j, b_j, a_k), b_k)
                    for (p, q), c in _wedge_entries(
                        A.bracket_basis(a_j, b_j, b_k), a_k
                    ).items():
                        ws[(p, q)] = ws.get((p, q), _ZERO) - c
                    for w, c in ws.items():
                        if c:
                            out = out + sign * c * f._get(mid + (w,) + tail + (t,))
            if not out.is_zero():
                values[W + (t,)] = out
    return Cochain(A, rep, n + 1, values)


def partial_R(op: WeightedOperator, f: Cochain) -> Cochain:
    """Coboundary of the induced algebra with twisted adjoint coefficients,
    applied to f's values (f is read as a cochain of that complex)."""
    induced = induced_bracket(op)
    rep = rho_R(op)
    g = Cochain(induced, rep, f.degree, f.values)
    return coboundary(g)


def ad_wedge(algebra: ThreeLieAlgebra, X: dict) -> Matrix:
    """The inner map x -> sum c [a, b, x] of a wedge vector {(a,b): c}."""
    n = algebra.dim
    cols = []
    for t in range(n):
        col = Vec.zero(n)
        for (a, b), c in X.items():
            if c:
                col = col + c * algebra.bracket_basis(a, b, t)
        cols.append(col)
    return Matrix.from_cols(cols)


def d_R(op: WeightedOperator, X: dict) -> Matrix:
    """Seam differential of the operator complex: x -> R[X, x] - [X, Rx]."""
    induced_bracket(op)  # enforce the same preconditions as the rest
    ad = ad_wedge(op.algebra, X)
    return op.matrix @ ad - ad @ op.matrix


def D_R(op: WeightedOperator, element) -> Cochain:
    """Differential of the operator complex.

    Degree-1 elements are wedge vectors {(a, b): coeff}; higher degrees are
    Cochain values over the induced data (degree n of the operator complex
    is stored as a generic cochain of degree n-1).
    """
    if isinstance(element, dict):
        return cochain_from_matrix(induced_bracket(op), rho_R(op), d_R(op, element))
    return partial_R(op, element)


def operator_cochain_dim(dim: int, degree: int) -> int:
    if degree < 1:
        raise ValueError("degree must be at least 1")
    if degree == 1:
        return comb(dim, 2)
    return comb(dim, 2) ** (degree - 2) * dim * dim


def _flat_keys(dim: int, degree: int):
    wedges = list(combinations(range(dim), 2))
    for key in product(wedges, repeat=degree - 1):
        for t in range(dim):
            yield key + (t,)


def _column(f: Cochain):
    coords = []
    for key in _flat_keys(f.algebra.dim, f.degree):
        coords.extend(f._get(key))
    return Vec(coords)


def cohomology_dims(op: WeightedOperator, max_degree: int, budget: int = 20000):
    """Exact (degree, dim Z, dim B, dim H) rows of the operator complex.

    The differential is assembled as a matrix on the canonical basis in
    lexicographic order, so the ranks (hence all dimensions) are exact.
    """
    induced = induced_bracket(op)
    rep = rho_R(op)
    dim = op.algebra.dim
    wedges = list(combinations(range(dim), 2))

    for n in range(1, max_degree + 2):
        space = operator_cochain_dim(dim, n)
        if space > budget:
            raise ValueError(
                f"cochain space of degree {n} has dimension {space}, over budget {budget}"
            )

    ranks = []
    for n in range(1, max_degree + 1):
        if n == 1:
            cols = [_column(D_R(op, {w: Fraction(1)})) for w in wedges]
        else:
            cols = []
            for key in _flat_keys(dim, n - 1):
                for r in range(dim):
                    f = Cochain(induced, rep, n - 1, {key: Vec.basis(dim, r)})
                    cols.append(_column(coboundary(f)))
        ranks.append(Matrix.from_cols(cols).rank() if cols else 0)

    rows = []
    prev_rank = 0
    for n in range(1, max_degree + 1):
        source = operator_cochain_dim(dim, n)
        z = source - ranks[n - 1]
        rows.append((n, z, prev_rank, z - prev_rank))
        prev_rank = ranks[n - 1]
    return rows

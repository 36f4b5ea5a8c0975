"""Exact dense vectors and matrices, plus sparse elimination.

Entries are duck-typed: anything with field arithmetic works (Fraction,
Quad, polynomials).  Elimination divides by pivots, so rank/kernel/solve
are for invertible-scalar entries only.
"""

from __future__ import annotations

from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Vec:
    __slots__ = ("entries",)

    def __init__(self, entries):
        object.__setattr__(self, "entries", tuple(entries))

    def __setattr__(self, name, value):
        raise AttributeError("Vec is immutable")

    @classmethod
    def zero(cls, n: int) -> "Vec":
        return cls([_ZERO] * n)

    @classmethod
    def basis(cls, n: int, i: int) -> "Vec":
        return cls([_ONE if j == i else _ZERO for j in range(n)])

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __add__(self, other):
        if not isinstance(other, Vec):
            return NotImplemented
        return Vec(a + b for a, b in zip(self.entries, other.entries, strict=True))

    def __sub__(self, other):
        if not isinstance(other, Vec):
            return NotImplemented
        return Vec(a - b for a, b in zip(self.entries, other.entries, strict=True))

    def __neg__(self):
        return Vec(-a for a in self.entries)

    def __rmul__(self, c):
        return Vec(c * a for a in self.entries)

    def __mul__(self, c):
        if isinstance(c, (Vec, Matrix)):
            return NotImplemented
        return Vec(a * c for a in self.entries)

    def __eq__(self, other):
        if not isinstance(other, Vec):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __repr__(self):
        return f"Vec({list(self.entries)!r})"


class Matrix:
    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[_ZERO] * ncols for _ in range(nrows)])

    @classmethod
    def diagonal(cls, entries) -> "Matrix":
        entries = list(entries)
        n = len(entries)
        return cls(
            [[entries[i] if i == j else _ZERO for j in range(n)] for i in range(n)]
        )

    @classmethod
    def from_cols(cls, cols) -> "Matrix":
        return cls(zip(*cols, strict=True))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def col(self, j: int) -> Vec:
        return Vec(r[j] for r in self.rows)

    def apply(self, v: Vec) -> Vec:
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        return Vec(
            sum((a * x for a, x in zip(row, v) if a), _ZERO) for row in self.rows
        )

    def __matmul__(self, other):
        if isinstance(other, Vec):
            return self.apply(other)
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError("dimension mismatch")
            cols = list(zip(*other.rows))
            return Matrix(
                [
                    [sum((a * b for a, b in zip(row, col) if a), _ZERO) for col in cols]
                    for row in self.rows
                ]
            )
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return Matrix(
            [a + b for a, b in zip(ra, rb, strict=True)]
            for ra, rb in zip(self.rows, other.rows, strict=True)
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return Matrix(
            [a - b for a, b in zip(ra, rb, strict=True)]
            for ra, rb in zip(self.rows, other.rows, strict=True)
        )

    def __neg__(self):
        return Matrix([-a for a in r] for r in self.rows)

    def __rmul__(self, c):
        return Matrix([c * a for a in r] for r in self.rows)

    def __mul__(self, c):
        if isinstance(c, (Vec, Matrix)):
            return NotImplemented
        return Matrix([a * c for a in r] for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows)) if self.rows else Matrix([])

    def is_zero(self) -> bool:
        return all(not a for r in self.rows for a in r)

    def rank(self) -> int:
        return rank_kernel(self.rows, self.ncols)[0]

    def inverse(self) -> "Matrix | None":
        """Exact inverse, or None when singular."""
        if self.nrows != self.ncols:
            raise ValueError("not square")
        n = self.nrows
        aug = []
        for i, row in enumerate(self.rows):
            r = {c: v for c, v in enumerate(row) if v}
            r[n + i] = _ONE
            aug.append(r)
        pivots = _eliminate(aug)
        if sorted(k for k in pivots if k < n) != list(range(n)):
            return None
        return Matrix(
            [[pivots[i].get(n + j, _ZERO) for j in range(n)] for i in range(n)]
        )

    def kernel(self) -> list[Vec]:
        return rank_kernel(self.rows, self.ncols)[1]

    def __repr__(self):
        return f"Matrix({[list(r) for r in self.rows]!r})"


def _sparse(row) -> dict:
    if isinstance(row, dict):
        return {c: v for c, v in row.items() if v}
    return {c: v for c, v in enumerate(row) if v}


def _eliminate(rows):
    """Forward-eliminate into a reduced pivot map {col: unit row dict}."""
    pivots: dict[int, dict] = {}
    for row in rows:
        r = _sparse(row)
        while r:
            c = min(r)
            if c in pivots:
                coef = r.pop(c)
                for cc, vv in pivots[c].items():
                    if cc == c:
                        continue
                    nv = r.get(cc, _ZERO) - coef * vv
                    if nv:
                        r[cc] = nv
                    else:
                        r.pop(cc, None)
            else:
                inv = r[c]
                pivots[c] = {cc: vv / inv for cc, vv in r.items()}
                break
    # Back substitution: clear pivot columns from earlier pivot rows.
    for c in sorted(pivots, reverse=True):
        pr = pivots[c]
        for cc in sorted(k for k in pr if k != c and k in pivots):
            vv = pr.pop(cc)
            for c3, v3 in pivots[cc].items():
                if c3 == cc:
                    continue
                nv = pr.get(c3, _ZERO) - vv * v3
                if nv:
                    pr[c3] = nv
                else:
                    pr.pop(c3, None)
    return pivots


def rank_kernel(rows, ncols: int) -> tuple[int, list[Vec]]:
    """Rank and kernel basis of the matrix with the given rows.

    Rows may be dense sequences or sparse {col: value} dicts; the kernel
    basis is indexed by free columns in increasing order, which keeps every
    downstream answer deterministic.
    """
    pivots = _eliminate(rows)
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = [_ZERO] * ncols
        v[f] = _ONE
        for c, pr in pivots.items():
            if f in pr:
                v[c] = -pr[f]
        basis.append(Vec(v))
    return len(pivots), basis


def row_space_basis(rows, ncols: int) -> list[Vec]:
    """Reduced-echelon basis of the span, ordered by pivot column."""
    pivots = _eliminate(rows)
    out = []
    for c in sorted(pivots):
        v = [_ZERO] * ncols
        for cc, vv in pivots[c].items():
            v[cc] = vv
        out.append(Vec(v))
    return out


def in_span(v: Vec, basis_rows, ncols: int) -> bool:
    """Whether v lies in the row space of basis_rows."""
    rows = list(basis_rows)
    r0, _ = rank_kernel(rows, ncols)
    r1, _ = rank_kernel(rows + [v], ncols)
    return r0 == r1


def solve(rows, ncols: int, rhs) -> Vec | None:
    """One solution of A x = rhs, or None when inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    aug = []
    for row, b in zip(rows, rhs, strict=True):
        r = _sparse(row)
        if b:
            r[ncols] = b
        aug.append(r)
    pivots = _eliminate(aug)
    if ncols in pivots:
        return None
    x = [_ZERO] * ncols
    for c, pr in pivots.items():
        x[c] = pr.get(ncols, _ZERO)
    return Vec(x)

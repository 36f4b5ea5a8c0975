"""Multivariate polynomials over exact rationals.

Just enough ring structure to push symbolic matrix entries through the
bracket machinery: monomial-dict storage, graded-lex printing, exact
substitution.  Coefficients are Fractions; variables are plain names like
"a11".
"""

from __future__ import annotations

from fractions import Fraction


def _key_mul(k1: tuple, k2: tuple) -> tuple:
    return tuple(sorted(k1 + k2))


class Poly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        # terms: {sorted tuple of variable names: nonzero Fraction}
        clean = {}
        for k, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[tuple(sorted(k))] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls({(name,): Fraction(1)})

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({(): Fraction(c)})

    @staticmethod
    def _as_poly(x):
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction)):
            return Poly.const(x)
        return None

    def __add__(self, other):
        o = self._as_poly(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for k, c in o.terms.items():
            terms[k] = terms.get(k, Fraction(0)) + c
        return Poly(terms)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._as_poly(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._as_poly(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._as_poly(other)
        if o is None:
            return NotImplemented
        terms: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in o.terms.items():
                k = _key_mul(k1, k2)
                terms[k] = terms.get(k, Fraction(0)) + c1 * c2
        return Poly(terms)

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction)):
            return Poly({k: v / c for k, v in self.terms.items()})
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = Poly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __neg__(self):
        return Poly({k: -c for k, c in self.terms.items()})

    def __pos__(self):
        return self

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._as_poly(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degree(self) -> int:
        return max((len(k) for k in self.terms), default=0)

    def variables(self) -> list[str]:
        return sorted({v for k in self.terms for v in k})

    def constant_part(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def leading_coefficient(self) -> Fraction:
        """Coefficient of the graded-lex leading monomial (0 for the zero
        polynomial)."""
        if not self.terms:
            return Fraction(0)
        return self._sorted_terms()[0][1]

    def subs(self, values: dict):
        """Substitute scalars for variables; full substitution gives a scalar."""
        out_poly: dict = {}
        out_scalar = Fraction(0)
        for k, c in self.terms.items():
            rest = []
            for v in k:
                if v in values:
                    c = c * values[v]
                else:
                    rest.append(v)
            if rest:
                rk = tuple(rest)
                out_poly[rk] = out_poly.get(rk, Fraction(0)) + c
            else:
                out_scalar = out_scalar + c
        if not out_poly:
            return out_scalar
        if out_scalar:
            out_poly[()] = out_poly.get((), Fraction(0)) + out_scalar
        return Poly(out_poly)

    def _sorted_terms(self):
        # graded lex, highest degree first: deterministic printing
        return sorted(self.terms.items(), key=lambda kc: (-len(kc[0]), kc[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in self._sorted_terms():
            mono = "*".join(k)
            if not k:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Poly<{self}>"


def matrix_variables(n: int, prefix: str = "a"):
    """n x n grid of fresh variables a11..ann (1-based, so n <= 9)."""
    from .linalg import Matrix

    if n > 9:
        raise ValueError("variable names need single-digit indices")
    return Matrix(
        [[Poly.var(f"{prefix}{i + 1}{j + 1}") for j in range(n)] for i in range(n)]
    )

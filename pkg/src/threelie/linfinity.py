"""Shifted brackets, Maurer-Cartan checks and twisting.

The graded Lie algebra of graded.py projects onto its coefficient
corner: cochains with every leg in the h block and values in g.  Pairing
a shifted structure cochain with a coefficient element yields a strongly
homotopy family l_k whose Maurer-Cartan elements are exactly the
operator structures of operators.py; the nonzero operations are the
unary projection, the two-shifted bracket, and nested insertions of
coefficients into one shifted slot.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .graded import (
    GradedCochain,
    GradedSpace,
    abelian_element,
    bracket_cochain,
    double_cochain,
    graded_bracket,
    is_abelian,
    is_one_sided,
    is_pair_typed,
    pair_cochain,
    project_abelian,
    project_pure,
    undouble_cochain,
)
from .linalg import Matrix, Vec
from .scalars import scalar_sqrt
from .trilie import Counterexample, Representation, ThreeLieAlgebra

VARIANTS = ("rPair", "Pair", "h-sub")


def typed_bracket(x: GradedCochain, y: GradedCochain) -> GradedCochain:
    """Bracket followed by the drop onto single-block wedge slots.

    This is the bracket of the two-part complex itself: insertions that
    would wedge the two blocks together have no slot there and vanish."""
    return project_pure(graded_bracket(x, y))


def _nonzero(f: GradedCochain | None) -> GradedCochain | None:
    if f is None or f.is_zero():
        return None
    return f


class LElement:
    """A shifted cochain together with a coefficient cochain.

    The shifted half of arity n sits in degree n - 1, the coefficient
    half of arity n in degree n; a homogeneous element pairs an arity
    n + 1 shifted part with an arity n coefficient part.
    """

    __slots__ = ("shifted", "abelian", "degree")

    def __init__(self, shifted=None, abelian=None, degree=None):
        shifted = _nonzero(shifted)
        abelian = _nonzero(abelian)
        degs = []
        if shifted is not None:
            degs.append(shifted.arity - 1)
        if abelian is not None:
            degs.append(abelian.arity)
        if degree is not None:
            degs.append(degree)
        if not degs:
            raise ValueError("empty element needs an explicit degree")
        if len(set(degs)) > 1:
            raise ValueError(f"parts of mixed degree: {sorted(set(degs))}")
        self.shifted = shifted
        self.abelian = abelian
        self.degree = degs[0]

    def is_zero(self) -> bool:
        return self.shifted is None and self.abelian is None

    def __eq__(self, other):
        return (
            isinstance(other, LElement)
            and self.degree == other.degree
            and self.shifted == other.shifted
            and self.abelian == other.abelian
        )

    def __repr__(self):
        parts = []
        if self.shifted is not None:
            parts.append(f"shifted {self.shifted!r}")
        if self.abelian is not None:
            parts.append(f"abelian {self.abelian!r}")
        return f"LElement<degree {self.degree}, {', '.join(parts) or 'zero'}>"


class MCResult:
    """Residual of the Maurer-Cartan sum, split into its two halves."""

    __slots__ = ("shifted", "abelian")

    def __init__(self, shifted, abelian):
        self.shifted = _nonzero(shifted)
        self.abelian = _nonzero(abelian)

    @property
    def passed(self) -> bool:
        return self.shifted is None and self.abelian is None

    def __repr__(self):
        if self.passed:
            return "MCResult<flat>"
        parts = []
        if self.shifted is not None:
            parts.append(f"shifted residual {self.shifted!r}")
        if self.abelian is not None:
            parts.append(f"coefficient residual {self.abelian!r}")
        return f"MCResult<{', '.join(parts)}>"


class LInfinityOps:
    """The operation family on shifted cochains plus coefficients.

    variant "rPair" works with pair-typed cochains on a two-part space,
    "Pair" with one-part cochains spread over a doubled space on the fly,
    "h-sub" with the one-sided cochains (no action of h back on g).
    Insertion chains always run in the full complex of the two-part
    space; the variant governs how elements enter and leave it.  The
    optional background is an ambient degree-1 element whose bracket
    feeds the unary operation and the pure-coefficient operations; the
    operator instances all run with it absent.
    """

    def __init__(self, space: GradedSpace, variant: str = "rPair", background=None):
        if variant not in VARIANTS:
            raise ValueError(f"unknown variant {variant!r}")
        if variant == "Pair" and space.dim_g != space.dim_h:
            raise ValueError("the doubled variant needs matching block sizes")
        if background is not None and background.space != space:
            raise ValueError("background lives on the wrong space")
        self.space = space
        self.variant = variant
        self.background = background

    def _embed(self, f: GradedCochain) -> GradedCochain:
        if self.variant == "Pair":
            if f.space.dim_h != 0 or f.space.dim_g != self.space.dim_g:
                raise ValueError("shifted parts of the doubled variant are one-part cochains")
            return double_cochain(f, self.space)
        if f.space != self.space:
            raise ValueError("cochain lives on the wrong space")
        # bracket results can ride mixed-wedge components along; only the
        # single-block part is the element of the subcomplex
        if self.variant == "h-sub":
            if not is_one_sided(project_pure(f)):
                raise ValueError("cochain is not one-sided")
        elif not is_pair_typed(project_pure(f)):
            raise ValueError("cochain is not pair typed")
        return f

    def _retract(self, F: GradedCochain) -> GradedCochain:
        if self.variant == "Pair":
            return undouble_cochain(F)
        if self.variant == "h-sub" and not is_one_sided(project_pure(F)):
            raise ValueError("bracket left the one-sided subspace")
        return F

    def _check_abelian(self, a: GradedCochain):
        if a.space != self.space:
            raise ValueError("coefficient part lives on the wrong space")
        if not is_abelian(a):
            raise ValueError("coefficient part is not in the coefficient corner")

    def _nest(self, x: GradedCochain, thetas) -> GradedCochain | None:
        cur = x
        for th in thetas:
            cur = graded_bracket(cur, th)
            if cur.is_zero():
                return None
        return cur

    def l(self, k: int, elems) -> LElement:
        """l_k on a list of k homogeneous elements."""
        elems = list(elems)
        if k < 1 or len(elems) != k:
            raise ValueError(f"l_{k} takes exactly {k} arguments")
        out_deg = sum(e.degree for e in elems) + 1
        shifted_sum = None
        abelian_sum = None

        def add_shifted(f):
            nonlocal shifted_sum
            shifted_sum = f if shifted_sum is None else shifted_sum + f

        def add_abelian(f):
            nonlocal abelian_sum
            abelian_sum = f if abelian_sum is None else abelian_sum + f

        for pattern in itertools.product((0, 1), repeat=k):
            parts = []
            for e, which in zip(elems, pattern):
                part = e.shifted if which == 0 else e.abelian
                if part is None:
                    parts = None
                    break
                parts.append(part)
            if parts is None:
                continue
            s = k - sum(pattern)
            if s == 0:
                if self.background is None:
                    continue
                for a in parts:
                    self._check_abelian(a)
                nested = self._nest(self.background, parts)
                if nested is not None:
                    add_abelian(project_abelian(nested))
            elif s == 1:
                idx = pattern.index(0)
                par = elems[idx].degree % 2
                swap = sum(elems[j].degree for j in range(idx)) % 2
                sign = -1 if par and swap else 1
                x = self._embed(parts[idx])
                thetas = parts[:idx] + parts[idx + 1 :]
                for a in thetas:
                    self._check_abelian(a)
                nested = self._nest(x, thetas)
                if nested is not None:
                    add_abelian(sign * project_abelian(nested))
                if k == 1 and self.background is not None:
                    add_shifted(self._retract(-1 * graded_bracket(self.background, x)))
            elif s == 2 and k == 2:
                x, y = (self._embed(p) for p in parts)
                sign = -1 if parts[0].arity % 2 else 1
                add_shifted(self._retract(sign * graded_bracket(x, y)))
        return LElement(shifted=shifted_sum, abelian=abelian_sum, degree=out_deg)

    def l1(self, e: LElement) -> LElement:
        return self.l(1, [e])

    def l2(self, e1: LElement, e2: LElement) -> LElement:
        return self.l(2, [e1, e2])

    def maurer_cartan_residual(self, alpha: LElement) -> MCResult:
        """sum_k l_k(alpha, ..., alpha) / k!, evaluated exactly.

        alpha must be homogeneous of degree 0 with an arity-0 coefficient
        part; such a part squares to zero under composition, which kills
        every insertion chain past twice the slot count and makes the sum
        finite.
        """
        if alpha.degree != 0:
            raise ValueError("Maurer-Cartan elements are homogeneous of degree 0")
        theta = alpha.abelian
        if theta is not None:
            self._check_abelian(theta)
            if theta.arity != 0:
                raise ValueError("coefficient part must have arity 0")
        shifted_sum = None
        abelian_sum = None
        if alpha.shifted is not None:
            x = self._embed(alpha.shifted)
            half = Fraction(1, 2)
            sq = graded_bracket(x, x)
            shifted_sum = (-half if alpha.shifted.arity % 2 else half) * sq
            if self.background is not None:
                shifted_sum = shifted_sum - graded_bracket(self.background, x)
            abelian_sum = project_abelian(x)
            if theta is not None:
                cur = x
                fact = 1
                for m in range(1, 2 * x.arity + 4):
                    cur = graded_bracket(cur, theta)
                    if cur.is_zero():
                        break
                    fact *= m
                    abelian_sum = abelian_sum + Fraction(1, fact) * project_abelian(cur)
                else:
                    raise RuntimeError("insertion chain did not terminate")
        if self.background is not None and theta is not None:
            cur = self.background
            fact = 1
            for m in range(1, 2 * self.background.arity + 4):
                cur = graded_bracket(cur, theta)
                if cur.is_zero():
                    break
                fact *= m
                extra = Fraction(1, fact) * project_abelian(cur)
                abelian_sum = extra if abelian_sum is None else abelian_sum + extra
            else:
                raise RuntimeError("insertion chain did not terminate")
        return MCResult(
            None if shifted_sum is None else self._retract(shifted_sum),
            abelian_sum,
        )

    def twist(self, alpha: LElement, check: bool = True) -> "TwistedOps":
        """Operations shifted by a flat element: l_n^alpha inserts alpha
        in front in every multiplicity, weighted by 1/i!."""
        if check:
            res = self.maurer_cartan_residual(alpha)
            if not res.passed:
                raise ValueError("twisting element fails the Maurer-Cartan equation")
        elif alpha.degree != 0:
            raise ValueError("twisting element must be homogeneous of degree 0")
        if alpha.abelian is not None and alpha.abelian.arity != 0:
            raise ValueError("coefficient part must have arity 0")
        return TwistedOps(self, alpha)


class TwistedOps:
    """The family l_k after twisting by a degree-0 element."""

    __slots__ = ("base", "alpha")

    def __init__(self, base: LInfinityOps, alpha: LElement):
        self.base = base
        self.alpha = alpha

    def l(self, k: int, elems) -> LElement:
        elems = list(elems)
        if k < 1 or len(elems) != k:
            raise ValueError(f"l_{k} takes exactly {k} arguments")
        out_deg = sum(e.degree for e in elems) + 1
        arities = [e.degree + 1 for e in elems if e.shifted is not None]
        if self.alpha.shifted is not None:
            arities.append(self.alpha.shifted.arity)
        extra = sum(e.abelian.arity for e in elems if e.abelian is not None)
        cap = 2 * (max(arities, default=0) + extra) + 4
        shifted_sum = None
        abelian_sum = None
        fact = 1
        streak = 0
        for i in range(cap + 1):
            if i:
                fact *= i
            term = self.base.l(k + i, [self.alpha] * i + elems)
            if term.is_zero():
                streak += 1
                if streak >= 2 and i >= 4:
                    break
                continue
            streak = 0
            c = Fraction(1, fact)
            if term.shifted is not None:
                add = c * term.shifted
                shifted_sum = add if shifted_sum is None else shifted_sum + add
            if term.abelian is not None:
                add = c * term.abelian
                abelian_sum = add if abelian_sum is None else abelian_sum + add
        return LElement(shifted=shifted_sum, abelian=abelian_sum, degree=out_deg)

    def l1(self, e: LElement) -> LElement:
        return self.l(1, [e])

    def l2(self, e1: LElement, e2: LElement) -> LElement:
        return self.l(2, [e1, e2])


def mc_check_relative_modified(parts, T: Matrix, lam) -> MCResult:
    """Maurer-Cartan residual for parts = (pi, rho, mu, zeta) and a map T.

    The structure cochain is pi + rho + lam*(mu + zeta); flatness is
    equivalent to the pair axioms plus the weight-lam relative modified
    identity of operators.check_mrb_relative.
    """
    pi, rho, mu, zeta = parts
    if not lam:
        raise ValueError("weight must be nonzero")
    delta = pair_cochain(pi, rho, mu, zeta, lam)
    alpha = LElement(
        shifted=delta, abelian=abelian_element(delta.space, T), degree=0
    )
    return LInfinityOps(delta.space, "rPair").maurer_cartan_residual(alpha)


def mc_check_absolute(pi: ThreeLieAlgebra, T: Matrix, lam) -> MCResult:
    """Maurer-Cartan residual for a bracket pi and an operator T on one
    space, spread over the doubled space with coefficient 1/sqrt(lam).

    Flatness is equivalent to the fundamental identity for pi plus the
    weight-lam identity of operators.check_mrb_absolute.  A weight whose
    square root is irrational needs an open quadratic session.
    """
    if not lam:
        raise ValueError("weight must be nonzero")
    s = scalar_sqrt(Fraction(1) / Fraction(lam))
    space = GradedSpace(pi.dim, pi.dim)
    alpha = LElement(
        shifted=bracket_cochain(pi),
        abelian=abelian_element(space, s * T),
        degree=0,
    )
    return LInfinityOps(space, "Pair").maurer_cartan_residual(alpha)


def mc_check_relative_rb(pi, rho, mu, T: Matrix, lam) -> MCResult:
    """Maurer-Cartan residual for the one-sided structure pi + rho + lam*mu.

    With no action of h back on g, flatness is equivalent to the pair
    axioms plus the weight-lam relative Rota-Baxter identity
    [Tu,Tv,Tw] = T(rho(Tu,Tv)w + rho(Tv,Tw)u + rho(Tw,Tu)v + lam*mu(u,v,w)).
    """
    if not lam:
        raise ValueError("weight must be nonzero")
    zeta = Representation.zero(mu, pi.dim)
    delta = pair_cochain(pi, rho, mu, zeta, lam)
    alpha = LElement(
        shifted=delta, abelian=abelian_element(delta.space, T), degree=0
    )
    return LInfinityOps(delta.space, "h-sub").maurer_cartan_residual(alpha)


def _random_cochain(space: GradedSpace, arity: int, rng, bound: int = 2) -> GradedCochain:
    vals = {}
    if arity == 0:
        keys = list(range(space.dim))
    else:
        keys = [
            lead + (tri,)
            for lead in itertools.product(space.wedges(), repeat=arity - 1)
            for tri in space.triples()
        ]
    for key in keys:
        v = [Fraction(rng.randint(-bound, bound)) for _ in range(space.dim)]
        if any(v):
            vals[key] = Vec(v)
    return GradedCochain(space, arity, vals)


def _random_one_sided(space: GradedSpace, rng) -> GradedCochain:
    # pi-, rho- and mu-typed components only, never g values on two-h triples
    vals = {}
    for tri in space.triples():
        hc = space.h_count(tri)
        if hc == 2:
            continue
        if hc == 0:
            v = space.embed_g(Vec([Fraction(rng.randint(-2, 2)) for _ in range(space.dim_g)]))
        else:
            v = space.embed_h(Vec([Fraction(rng.randint(-2, 2)) for _ in range(space.dim_h)]))
        if not v.is_zero():
            vals[tri] = v
    return GradedCochain(space, 1, vals)


def embeddings_nu_iota(trials: int = 3, seed: int = 1003) -> dict:
    """Sample reports that the two embeddings respect the typed bracket.

    The doubling embedding spreads a one-part cochain over both halves of
    g + g; the report checks it lands pair typed and turns brackets of
    one-part cochains into typed brackets of spread cochains.  The
    one-sided inclusion is the identity; its report checks the typed
    bracket of one-sided cochains never grows a g-valued two-h-leg
    component.
    """
    rng = random.Random(seed)
    report: dict = {"doubling": None, "one-sided": None}
    small = GradedSpace(3, 0)
    for t in range(trials):
        f = _random_cochain(small, 1, rng)
        g = _random_cochain(small, rng.choice([1, 2]), rng)
        F, G = double_cochain(f), double_cochain(g)
        if not (is_pair_typed(F) and is_pair_typed(G)):
            report["doubling"] = Counterexample(
                "doubling (image not pair typed)", f"trial {t}", F
            )
            break
        lhs = double_cochain(graded_bracket(f, g))
        rhs = typed_bracket(F, G)
        if lhs != rhs:
            report["doubling"] = Counterexample(
                "doubling (bracket not preserved)", f"trial {t}", rhs - lhs
            )
            break
    two = GradedSpace(3, 3)
    for t in range(trials):
        f = _random_one_sided(two, rng)
        g = _random_one_sided(two, rng)
        br = typed_bracket(f, g)
        if not is_one_sided(br):
            report["one-sided"] = Counterexample(
                "one-sided (bracket escaped)", f"trial {t}", br
            )
            break
    return report

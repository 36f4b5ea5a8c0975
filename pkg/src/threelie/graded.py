"""Graded cochains on a two-part space and their insertion bracket.

A cochain of arity n eats n wedge slots and a final vector, and is
alternating in the three arguments closest to the output: the last wedge
and the final slot together behave like a cube slot.  Storage therefore
keys on (n-1) increasing pairs plus one increasing triple.  Arity 0 is a
plain linear map.  The bracket [P,Q] = P.Q - (-1)^(pq) Q.P of the
insertion product turns the whole tower into a graded Lie algebra whose
arity-1 squares recover the fundamental identity.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .combinat import shuffle_splits, sort_with_sign, triples, wedge_pairs
from .linalg import Matrix, Vec
from .trilie import Representation, ThreeLieAlgebra

_ONE = Fraction(1)


class GradedSpace:
    """Direct sum of a g part and an h part with a fixed basis order.

    Indices below dim_g name the g block, the rest the h block.  A plain
    one-part space is dim_h = 0.
    """

    __slots__ = ("dim_g", "dim_h")

    def __init__(self, dim_g: int, dim_h: int = 0):
        if dim_g < 0 or dim_h < 0 or dim_g + dim_h < 1:
            raise ValueError("space dimensions must be nonnegative and not both zero")
        object.__setattr__(self, "dim_g", dim_g)
        object.__setattr__(self, "dim_h", dim_h)

    def __setattr__(self, name, value):
        raise AttributeError("GradedSpace is immutable")

    @property
    def dim(self) -> int:
        return self.dim_g + self.dim_h

    def is_h(self, i: int) -> bool:
        return i >= self.dim_g

    def h_count(self, indices) -> int:
        return sum(1 for i in indices if self.is_h(i))

    def pure_wedge(self, pair) -> bool:
        a, b = pair
        return self.is_h(a) == self.is_h(b)

    def wedges(self):
        return wedge_pairs(self.dim)

    def triples(self):
        return triples(self.dim)

    def embed_g(self, v: Vec) -> Vec:
        if len(v) != self.dim_g:
            raise ValueError("vector does not fit the g block")
        return Vec(list(v) + [0] * self.dim_h)

    def embed_h(self, v: Vec) -> Vec:
        if len(v) != self.dim_h:
            raise ValueError("vector does not fit the h block")
        return Vec([0] * self.dim_g + list(v))

    def g_part(self, v: Vec) -> Vec:
        return Vec(list(v)[: self.dim_g])

    def h_part(self, v: Vec) -> Vec:
        return Vec(list(v)[self.dim_g :])

    def __eq__(self, other):
        return (
            isinstance(other, GradedSpace)
            and self.dim_g == other.dim_g
            and self.dim_h == other.dim_h
        )

    def __hash__(self):
        return hash((self.dim_g, self.dim_h))

    def __repr__(self):
        return f"GradedSpace({self.dim_g}, {self.dim_h})"


def _coords(x, n: int) -> dict:
    """Sparse coordinates of a basis index or a vector."""
    if isinstance(x, Vec):
        if len(x) != n:
            raise ValueError("vector has wrong dimension")
        return {i: c for i, c in enumerate(x) if c}
    if not 0 <= x < n:
        raise ValueError(f"index {x} out of range")
    return {x: _ONE}


def wedge_dict(u, v, n: int) -> dict:
    """u wedge v as {(a, b): coeff} with a < b; arguments are indices or Vecs."""
    out: dict[tuple[int, int], object] = {}
    for a, ca in _coords(u, n).items():
        for b, cb in _coords(v, n).items():
            if a == b:
                continue
            c = ca * cb
            if a < b:
                key = (a, b)
            else:
                key, c = (b, a), -c
            prev = out.get(key)
            c = c if prev is None else prev + c
            if c:
                out[key] = c
            elif prev is not None:
                del out[key]
    return out


class GradedCochain:
    """Multilinear map on a GradedSpace, alternating in the last three slots.

    Keys: an int for arity 0; otherwise (arity - 1) increasing pairs
    followed by one increasing triple.  Arity-1 values may be given with
    the bare triple as key.
    """

    __slots__ = ("space", "arity", "values")

    def __init__(self, space: GradedSpace, arity: int, values=None):
        if arity < 0:
            raise ValueError("arity must be nonnegative")
        self.space = space
        self.arity = arity
        n = space.dim
        table = {}
        for key, value in (values or {}).items():
            v = value if isinstance(value, Vec) else Vec(value)
            if len(v) != n:
                raise ValueError("value has wrong dimension")
            if arity == 0:
                if not (isinstance(key, int) and 0 <= key < n):
                    raise ValueError(f"arity-0 key {key} is not a basis index")
                norm = key
            else:
                key = tuple(key)
                if arity == 1 and len(key) == 3 and all(isinstance(t, int) for t in key):
                    key = (key,)
                if len(key) != arity:
                    raise ValueError(f"key {key} has wrong length for arity {arity}")
                for a, b in key[:-1]:
                    if not (0 <= a < b < n):
                        raise ValueError(f"wedge index {(a, b)} not canonical")
                i, j, k = key[-1]
                if not (0 <= i < j < k < n):
                    raise ValueError(f"triple {key[-1]} not canonical")
                norm = key
            if norm in table:
                raise ValueError(f"duplicate key {key}")
            if not v.is_zero():
                table[norm] = v
        self.values = table

    @classmethod
    def zero(cls, space: GradedSpace, arity: int) -> "GradedCochain":
        return cls(space, arity)

    def _slot(self, w) -> dict:
        if isinstance(w, dict):
            return w
        u, v = w
        return wedge_dict(u, v, self.space.dim)

    def evaluate(self, wedges, final) -> Vec:
        """Wedge slots take (a, b) pairs, (Vec, Vec) pairs or coefficient
        dicts; the final slot an index or a vector."""
        if len(wedges) != self.arity:
            raise ValueError(f"expected {self.arity} wedge arguments")
        n = self.space.dim
        fin = _coords(final, n)
        out = Vec.zero(n)
        if self.arity == 0:
            for i, c in fin.items():
                v = self.values.get(i)
                if v is not None:
                    out = out + c * v
            return out
        slots = [self._slot(w) for w in wedges]
        for combo in itertools.product(*(s.items() for s in slots[:-1])):
            lead = tuple(pair for pair, _ in combo)
            coeff = _ONE
            for _, c in combo:
                coeff = coeff * c
            for (a, b), cw in slots[-1].items():
                for i, cf in fin.items():
                    tri, sign = sort_with_sign((a, b, i))
                    if sign == 0:
                        continue
                    v = self.values.get(lead + (tri,))
                    if v is not None:
                        out = out + (coeff * cw * cf * sign) * v
        return out

    def is_zero(self) -> bool:
        return not self.values

    def _like(self, other):
        if not isinstance(other, GradedCochain) or other.arity != self.arity:
            raise ValueError("graded cochain arity mismatch")
        if other.space != self.space:
            raise ValueError("graded cochain space mismatch")

    def __add__(self, other):
        self._like(other)
        values = dict(self.values)
        zero = Vec.zero(self.space.dim)
        for key, v in other.values.items():
            values[key] = values.get(key, zero) + v
        return GradedCochain(self.space, self.arity, values)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, c):
        return GradedCochain(
            self.space, self.arity, {key: c * v for key, v in self.values.items()}
        )

    def __neg__(self):
        return (-1) * self

    def __eq__(self, other):
        return (
            isinstance(other, GradedCochain)
            and self.arity == other.arity
            and self.space == other.space
            and self.values == other.values
        )

    def __repr__(self):
        return f"GradedCochain<arity {self.arity}, {len(self.values)} values>"


def bracket_cochain(A: ThreeLieAlgebra) -> GradedCochain:
    """The bracket of a 3-Lie algebra as an arity-1 cochain on a one-part space."""
    space = GradedSpace(A.dim, 0)
    return GradedCochain(space, 1, dict(A.structure_constants()))


def endo_cochain(space: GradedSpace, M: Matrix) -> GradedCochain:
    """A linear endomorphism of the whole space as an arity-0 cochain."""
    if M.nrows != space.dim or M.ncols != space.dim:
        raise ValueError("matrix does not act on the space")
    return GradedCochain(space, 0, {i: M.col(i) for i in range(space.dim)})


def abelian_element(space: GradedSpace, T: Matrix) -> GradedCochain:
    """A map from the h block to the g block as an arity-0 cochain."""
    if T.nrows != space.dim_g or T.ncols != space.dim_h:
        raise ValueError(f"expected a {space.dim_g}x{space.dim_h} matrix")
    vals = {space.dim_g + u: space.embed_g(T.col(u)) for u in range(space.dim_h)}
    return GradedCochain(space, 0, vals)


def circle_product(P: GradedCochain, Q: GradedCochain) -> GradedCochain:
    """Insertion product: Q enters each wedge member of P through every
    rising shuffle of the leading slots, and the final slot directly."""
    if P.space != Q.space:
        raise ValueError("graded cochain space mismatch")
    space = P.space
    p, q = P.arity, Q.arity
    if p + q == 0:
        vals = {}
        for i in range(space.dim):
            v = P.evaluate([], Q.evaluate([], i))
            if not v.is_zero():
                vals[i] = v
        return GradedCochain(space, 0, vals)
    values = {}
    zero = Vec.zero(space.dim)
    base3 = -1 if (p * q) % 2 else 1
    lead_choices = itertools.product(space.wedges(), repeat=p + q - 1)
    for lead in lead_choices:
        for tri in space.triples():
            slots = list(lead) + [(tri[0], tri[1])]
            final = tri[2]
            total = zero
            for k in range(1, p + 1):
                m = k - 1 + q
                sx, sy = slots[m]
                trail = slots[m + 1 :]
                base = -1 if ((k - 1) * q) % 2 else 1
                for left, right, sgn in shuffle_splits(k - 1, q):
                    p_lead = [slots[i] for i in left]
                    q_args = [slots[i] for i in right]
                    qv = Q.evaluate(q_args, sx)
                    if not qv.is_zero():
                        ins = wedge_dict(qv, sy, space.dim)
                        if ins:
                            total = total + (base * sgn) * P.evaluate(
                                p_lead + [ins] + trail, final
                            )
                    qv = Q.evaluate(q_args, sy)
                    if not qv.is_zero():
                        ins = wedge_dict(sx, qv, space.dim)
                        if ins:
                            total = total + (base * sgn) * P.evaluate(
                                p_lead + [ins] + trail, final
                            )
            for left, right, sgn in shuffle_splits(p, q):
                qv = Q.evaluate([slots[i] for i in right], final)
                if not qv.is_zero():
                    total = total + (base3 * sgn) * P.evaluate(
                        [slots[i] for i in left], qv
                    )
            if not total.is_zero():
                values[tuple(lead) + (tri,)] = total
    return GradedCochain(space, p + q, values)


def graded_bracket(P: GradedCochain, Q: GradedCochain) -> GradedCochain:
    """[P, Q] = P.Q - (-1)^(pq) Q.P with p, q the arities."""
    sign = -1 if (P.arity * Q.arity) % 2 else 1
    return circle_product(P, Q) - sign * circle_product(Q, P)


def _blocks(space: GradedSpace, v: Vec) -> tuple[bool, bool]:
    """Whether the g block and the h block of v carry anything."""
    has_g = any(v[i] for i in range(space.dim_g))
    has_h = any(v[i] for i in range(space.dim_g, space.dim))
    return has_g, has_h


def is_pair_typed(f: GradedCochain) -> bool:
    """Pure wedge slots, g values where the final triple has an even
    number of h legs, h values where it is odd.  These are the cochains a
    pair of algebras acting on each other can produce.  At arity 0 the
    rule degenerates to block-diagonal maps."""
    space = f.space
    for key, v in f.values.items():
        has_g, has_h = _blocks(space, v)
        if f.arity == 0:
            if space.is_h(key):
                if has_g:
                    return False
            elif has_h:
                return False
            continue
        if any(not space.pure_wedge(w) for w in key[:-1]):
            return False
        hc = space.h_count(key[-1])
        if has_g and hc not in (0, 2):
            return False
        if has_h and hc not in (1, 3):
            return False
    return True


def is_abelian(f: GradedCochain) -> bool:
    """All legs in the h block, all values in the g block."""
    space = f.space
    for key, v in f.values.items():
        has_g, has_h = _blocks(space, v)
        if has_h:
            return False
        if f.arity == 0:
            if not space.is_h(key):
                return False
            continue
        if any(not space.is_h(a) or not space.is_h(b) for a, b in key[:-1]):
            return False
        if any(not space.is_h(t) for t in key[-1]):
            return False
    return True


def project_abelian(f: GradedCochain) -> GradedCochain:
    """Keep the components with every leg in h and the value in g."""
    space = f.space
    out = {}
    for key, v in f.values.items():
        if f.arity == 0:
            if not space.is_h(key):
                continue
        else:
            if any(not space.is_h(a) or not space.is_h(b) for a, b in key[:-1]):
                continue
            if any(not space.is_h(t) for t in key[-1]):
                continue
        g = space.g_part(v)
        if not g.is_zero():
            out[key] = space.embed_g(g)
    return GradedCochain(space, f.arity, out)


def project_pure(f: GradedCochain) -> GradedCochain:
    """Part of a cochain supported on single-block wedge slots.

    The two-part complex takes every leading wedge inside one summand, so
    components over mixed wedges fall outside it.  Composing typed
    cochains can grow such components; this drops them again."""
    if f.arity <= 1:
        return f
    vals = {
        key: v
        for key, v in f.values.items()
        if all(f.space.pure_wedge(w) for w in key[:-1])
    }
    return GradedCochain(f.space, f.arity, vals)


def is_one_sided(f: GradedCochain) -> bool:
    """Pair typed, with no g values on the two-h-leg triples: the h side
    does not act back on g."""
    if not is_pair_typed(f):
        return False
    space = f.space
    if f.arity == 0:
        return True
    for key, v in f.values.items():
        if space.h_count(key[-1]) == 2 and not space.g_part(v).is_zero():
            return False
    return True


def double_cochain(f: GradedCochain, space: GradedSpace | None = None) -> GradedCochain:
    """Spread a one-part cochain over both halves of a doubled space.

    Every pure choice of halves for each wedge slot and each triple leg
    receives the value of f on the underlying indices; the output block
    follows the pair typing (g for 0 or 2 h legs, h for 1 or 3).
    """
    if f.space.dim_h != 0:
        raise ValueError("doubling expects a one-part cochain")
    d = f.space.dim_g
    if space is None:
        space = GradedSpace(d, d)
    if space.dim_g != d or space.dim_h != d:
        raise ValueError("target space must double the source")
    out: dict = {}
    zero = Vec.zero(space.dim)
    if f.arity == 0:
        for i, v in f.values.items():
            out[i] = space.embed_g(v)
            out[d + i] = space.embed_h(v)
        return GradedCochain(space, 0, out)
    for key, v in f.values.items():
        lead, tri = key[:-1], key[-1]
        for marks in itertools.product((0, d), repeat=len(lead)):
            mlead = tuple((a + off, b + off) for (a, b), off in zip(lead, marks))
            for offs in itertools.product((0, d), repeat=3):
                mtri, sign = sort_with_sign(tuple(t + off for t, off in zip(tri, offs)))
                hc = sum(1 for off in offs if off)
                mv = space.embed_g(v) if hc in (0, 2) else space.embed_h(v)
                mkey = mlead + (mtri,)
                out[mkey] = out.get(mkey, zero) + sign * mv
    return GradedCochain(space, f.arity, out)


def undouble_cochain(F: GradedCochain) -> GradedCochain:
    """Read back the all-g component of a doubled cochain."""
    space = F.space
    d = space.dim_g
    if space.dim_h != d:
        raise ValueError("undoubling expects a doubled space")
    small = GradedSpace(d, 0)
    out = {}
    for key, v in F.values.items():
        if F.arity == 0:
            if space.is_h(key):
                continue
            out[key] = space.g_part(v)
            continue
        if any(space.is_h(a) or space.is_h(b) for a, b in key[:-1]):
            continue
        if any(space.is_h(t) for t in key[-1]):
            continue
        g = space.g_part(v)
        if not g.is_zero():
            out[key] = g
    return GradedCochain(small, F.arity, out)


def pair_cochain(
    pi: ThreeLieAlgebra,
    rho: Representation,
    mu: ThreeLieAlgebra,
    zeta: Representation,
    lam=1,
) -> GradedCochain:
    """Assemble pi + rho + lam*(mu + zeta) as one arity-1 cochain on g + h.

    pi and rho live on the g side (rho representing g on h's space), mu
    and zeta on the h side; the h-side pieces enter scaled by the weight.
    """
    dg, dh = pi.dim, mu.dim
    if rho.algebra.dim != dg or rho.rep_dim != dh:
        raise ValueError("rho must represent the g side on the h space")
    if zeta.algebra.dim != dh or zeta.rep_dim != dg:
        raise ValueError("zeta must represent the h side on the g space")
    space = GradedSpace(dg, dh)
    vals: dict = {}
    for (i, j, k), v in pi.structure_constants().items():
        vals[(i, j, k)] = space.embed_g(v)
    for i, j in wedge_pairs(dg):
        m = rho.matrix(i, j)
        for u in range(dh):
            col = m.col(u)
            if not col.is_zero():
                vals[(i, j, dg + u)] = space.embed_h(col)
    for (u, v, w), val in mu.structure_constants().items():
        scaled = lam * val
        if not scaled.is_zero():
            vals[(dg + u, dg + v, dg + w)] = space.embed_h(scaled)
    for u, v in wedge_pairs(dh):
        m = zeta.matrix(u, v)
        for z in range(dg):
            col = lam * m.col(z)
            if not col.is_zero():
                # delta(z, u, v) = zeta(u, v) z: the cycle (u, v, z) -> (z, u, v) is even
                vals[(z, dg + u, dg + v)] = space.embed_g(col)
    return GradedCochain(space, 1, vals)


def decompose_delta(delta: GradedCochain):
    """Split an arity-1 pair-typed cochain into (pi, rho, mu, zeta).

    pi and mu come back as 3-Lie tables on the two blocks, rho and zeta
    as wedge-indexed matrix families.  Whether each piece passes its own
    axioms is the caller's question; the split is purely by leg types.
    """
    if delta.arity != 1:
        raise ValueError(f"expected arity 1, got {delta.arity}")
    space = delta.space
    dg, dh = space.dim_g, space.dim_h
    if dg == 0 or dh == 0:
        raise ValueError("decomposition needs both blocks nonempty")
    if not is_pair_typed(delta):
        raise ValueError("cochain is not pair typed")
    pi_tab: dict = {}
    mu_tab: dict = {}
    rho_cols = {}
    zeta_cols = {}
    for key, v in delta.values.items():
        i, j, k = key[-1]
        hc = space.h_count((i, j, k))
        if hc == 0:
            pi_tab[(i, j, k)] = space.g_part(v)
        elif hc == 3:
            mu_tab[(i - dg, j - dg, k - dg)] = space.h_part(v)
        elif hc == 1:
            cols = rho_cols.setdefault((i, j), [Vec.zero(dh) for _ in range(dh)])
            cols[k - dg] = space.h_part(v)
        else:
            # key (z, u, v) with z in g: stored value is zeta(u, v) z
            cols = zeta_cols.setdefault((j - dg, k - dg), [Vec.zero(dg) for _ in range(dg)])
            cols[i] = space.g_part(v)
    pi = ThreeLieAlgebra(dg, pi_tab)
    mu = ThreeLieAlgebra(dh, mu_tab)
    rho = Representation(
        pi, dh, {key: Matrix.from_cols(cols) for key, cols in rho_cols.items()}
    )
    zeta = Representation(
        mu, dg, {key: Matrix.from_cols(cols) for key, cols in zeta_cols.items()}
    )
    return pi, rho, mu, zeta

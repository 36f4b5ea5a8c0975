"""Graded cochains, the insertion bracket, and the two-part typing."""

import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from threelie.graded import (
    GradedCochain,
    GradedSpace,
    abelian_element,
    bracket_cochain,
    circle_product,
    decompose_delta,
    double_cochain,
    endo_cochain,
    graded_bracket,
    is_abelian,
    is_one_sided,
    is_pair_typed,
    pair_cochain,
    project_abelian,
    project_pure,
    undouble_cochain,
    wedge_dict,
)
from threelie.linalg import Matrix, Vec
from threelie.trilie import (
    Representation,
    ThreeLieAlgebra,
    adjoint,
    check_fundamental_identity,
)

F1 = Fraction(1)


@pytest.fixture(scope="module")
def cross4():
    # every basis triple brackets to the signed missing vector
    return ThreeLieAlgebra(
        4,
        {
            (1, 2, 3): [1, 0, 0, 0],
            (0, 2, 3): [0, -1, 0, 0],
            (0, 1, 3): [0, 0, 1, 0],
            (0, 1, 2): [0, 0, 0, -1],
        },
        label="cross4",
    )


def random_cochain(space, arity, rng, bound=2):
    vals = {}
    if arity == 0:
        keys = list(range(space.dim))
    else:
        keys = [
            lead + (tri,)
            for lead in product(space.wedges(), repeat=arity - 1)
            for tri in space.triples()
        ]
    for key in keys:
        v = [Fraction(rng.randint(-bound, bound)) for _ in range(space.dim)]
        if any(v):
            vals[key] = Vec(v)
    return GradedCochain(space, arity, vals)


def test_space_blocks():
    sp = GradedSpace(2, 1)
    assert sp.dim == 3
    assert not sp.is_h(1) and sp.is_h(2)
    assert sp.h_count((0, 1, 2)) == 1
    assert sp.pure_wedge((0, 1)) and not sp.pure_wedge((1, 2))
    assert sp == GradedSpace(2, 1) and sp != GradedSpace(1, 2)
    assert hash(sp) == hash(GradedSpace(2, 1))


def test_space_is_immutable_and_rejects_bad_dims():
    sp = GradedSpace(2, 2)
    with pytest.raises(AttributeError):
        sp.dim_g = 3
    with pytest.raises(ValueError, match="dimensions"):
        GradedSpace(0, 0)
    with pytest.raises(ValueError, match="dimensions"):
        GradedSpace(-1, 2)


def test_embed_and_parts():
    sp = GradedSpace(2, 1)
    v = sp.embed_g(Vec([3, 4]))
    assert list(v) == [3, 4, 0]
    w = sp.embed_h(Vec([5]))
    assert list(w) == [0, 0, 5]
    assert list(sp.g_part(v + w)) == [3, 4]
    assert list(sp.h_part(v + w)) == [5]
    with pytest.raises(ValueError, match="g block"):
        sp.embed_g(Vec([1, 2, 3]))
    with pytest.raises(ValueError, match="h block"):
        sp.embed_h(Vec([1, 2]))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=4, max_size=4),
       st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_wedge_dict_is_alternating(a, b):
    u, v = Vec(a), Vec(b)
    uv = wedge_dict(u, v, 4)
    vu = wedge_dict(v, u, 4)
    assert {k: -c for k, c in uv.items()} == vu
    assert wedge_dict(u, u, 4) == {}


def test_wedge_dict_on_indices():
    assert wedge_dict(0, 2, 3) == {(0, 2): F1}
    assert wedge_dict(2, 0, 3) == {(0, 2): -F1}
    assert wedge_dict(1, 1, 3) == {}


def test_cochain_key_validation():
    sp = GradedSpace(3, 0)
    with pytest.raises(ValueError, match="not canonical"):
        GradedCochain(sp, 2, {((1, 0), (0, 1, 2)): Vec([1, 0, 0])})
    with pytest.raises(ValueError, match="not canonical"):
        GradedCochain(sp, 1, {(0, 2, 1): Vec([1, 0, 0])})
    with pytest.raises(ValueError, match="wrong length"):
        GradedCochain(sp, 2, {((0, 1, 2),): Vec([1, 0, 0])})
    with pytest.raises(ValueError, match="wrong dimension"):
        GradedCochain(sp, 1, {(0, 1, 2): Vec([1, 0])})
    with pytest.raises(ValueError, match="basis index"):
        GradedCochain(sp, 0, {(0, 1): Vec([1, 0, 0])})
    with pytest.raises(ValueError, match="duplicate"):
        GradedCochain(sp, 1, {(0, 1, 2): Vec([1, 0, 0]), ((0, 1, 2),): Vec([0, 1, 0])})


def test_zero_values_are_dropped():
    sp = GradedSpace(3, 0)
    f = GradedCochain(sp, 1, {(0, 1, 2): Vec([0, 0, 0])})
    assert f.is_zero() and f.values == {}
    assert GradedCochain.zero(sp, 2).is_zero()


def test_arity1_bare_triple_key():
    sp = GradedSpace(3, 0)
    f = GradedCochain(sp, 1, {(0, 1, 2): Vec([1, 2, 0])})
    g = GradedCochain(sp, 1, {((0, 1, 2),): Vec([1, 2, 0])})
    assert f == g
    assert ((0, 1, 2),) in f.values


def test_evaluate_alternates_in_last_three():
    sp = GradedSpace(4, 0)
    rng = random.Random(11)
    f = random_cochain(sp, 2, rng)
    w = (0, 1)
    assert f.evaluate([w, (2, 3)], 0) == -f.evaluate([w, (3, 2)], 0)
    # moving the final leg into the wedge flips the sign too
    assert f.evaluate([w, (0, 2)], 3) == -f.evaluate([w, (0, 3)], 2)
    assert f.evaluate([w, (2, 3)], 2).is_zero()


def test_evaluate_takes_vectors_and_dicts():
    sp = GradedSpace(3, 0)
    f = GradedCochain(sp, 1, {(0, 1, 2): Vec([1, 0, 0])})
    e = [Vec.basis(3, i) for i in range(3)]
    assert f.evaluate([(e[0], e[1] + e[2])], e[2]) == Vec([1, 0, 0])
    assert f.evaluate([{(0, 1): Fraction(2)}], 2) == Vec([2, 0, 0])
    with pytest.raises(ValueError, match="expected 1 wedge"):
        f.evaluate([], 2)


def test_arity0_cochains_compose_like_matrices():
    sp = GradedSpace(3, 0)
    rng = random.Random(3)
    M = Matrix([[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)])
    N = Matrix([[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)])
    em, en = endo_cochain(sp, M), endo_cochain(sp, N)
    assert circle_product(em, en) == endo_cochain(sp, M * N)
    assert em.evaluate([], Vec([1, 1, 1])) == M * Vec([1, 1, 1])
    with pytest.raises(ValueError, match="act on the space"):
        endo_cochain(sp, Matrix.identity(4))


def test_self_bracket_detects_fundamental_identity(dim3_algebra, dim4_algebra, cross4):
    for A in (dim3_algebra, dim4_algebra, cross4):
        m = bracket_cochain(A)
        assert graded_bracket(m, m).is_zero()


def test_self_bracket_agrees_with_identity_check_on_random_tables():
    # two independent generators on dim 4 make violations generic
    rng = random.Random(7)
    for _ in range(12):
        A = ThreeLieAlgebra(
            4,
            {
                (0, 1, 2): [Fraction(rng.randint(-2, 2)) for _ in range(4)],
                (0, 1, 3): [Fraction(rng.randint(-2, 2)) for _ in range(4)],
            },
        )
        m = bracket_cochain(A)
        assert graded_bracket(m, m).is_zero() == (
            check_fundamental_identity(A) is None
        )


def test_circle_product_matches_hand_insertion_sum(cross4):
    b = cross4.bracket
    e = [Vec.basis(4, i) for i in range(4)]
    m = bracket_cochain(cross4)
    c = circle_product(m, m)

    def hand(i1, j1, i2, j2, k):
        x1, y1, x2, y2, x = e[i1], e[j1], e[i2], e[j2], e[k]
        return (
            b(b(x1, y1, x2), y2, x)
            + b(x2, b(x1, y1, y2), x)
            - b(x1, y1, b(x2, y2, x))
            + b(x2, y2, b(x1, y1, x))
        )

    for (i1, j1), (i2, j2) in product([(0, 1), (1, 2), (2, 3), (0, 3)], repeat=2):
        for k in range(4):
            assert c.evaluate([(i1, j1), (i2, j2)], k) == hand(i1, j1, i2, j2, k)


def test_circle_product_space_mismatch():
    f = GradedCochain(GradedSpace(3, 0), 1, {(0, 1, 2): Vec([1, 0, 0])})
    g = GradedCochain(GradedSpace(2, 1), 1, {(0, 1, 2): Vec([1, 0, 0])})
    with pytest.raises(ValueError, match="space mismatch"):
        circle_product(f, g)


def test_odd_self_bracket_is_twice_the_square():
    sp = GradedSpace(2, 1)
    rng = random.Random(13)
    P = random_cochain(sp, 1, rng)
    assert graded_bracket(P, P) == 2 * circle_product(P, P)
    Q = random_cochain(sp, 2, rng)
    assert graded_bracket(Q, Q).is_zero()


def test_graded_antisymmetry_and_jacobi():
    sp = GradedSpace(2, 1)
    rng = random.Random(99)

    def sgn(k):
        return -1 if k % 2 else 1

    for _ in range(4):
        ar = [rng.choice([0, 1, 2]) for _ in range(3)]
        P, Q, R = (random_cochain(sp, a, rng, bound=1) for a in ar)
        p, q, r = ar
        assert (graded_bracket(P, Q) + sgn(p * q) * graded_bracket(Q, P)).is_zero()
        jac = (
            sgn(p * r) * graded_bracket(graded_bracket(P, Q), R)
            + sgn(q * p) * graded_bracket(graded_bracket(Q, R), P)
            + sgn(r * q) * graded_bracket(graded_bracket(R, P), Q)
        )
        assert jac.is_zero()


def test_abelian_element_shape_and_projection():
    sp = GradedSpace(4, 4)
    T = Matrix.diagonal([1, 1, -1, -1])
    a = abelian_element(sp, T)
    assert is_abelian(a)
    assert not is_pair_typed(a)
    assert a.values[4] == sp.embed_g(Vec([1, 0, 0, 0]))
    assert project_abelian(a) == a
    with pytest.raises(ValueError, match="4x4 matrix"):
        abelian_element(sp, Matrix.identity(3))


def test_pair_cochain_places_all_four_pieces(dim4_algebra):
    ad = adjoint(dim4_algebra)
    d = pair_cochain(dim4_algebra, ad, dim4_algebra, ad, 2)
    sp = d.space
    assert sp == GradedSpace(4, 4)
    # pi on the g block, unscaled
    assert d.values[(1, 2, 3)] == sp.embed_g(Vec([1, 0, 0, 0]))
    # rho: ad(e2, e3) e1' = e0'
    assert d.values[(2, 3, 4 + 1)] == sp.embed_h(Vec([1, 0, 0, 0]))
    # mu scaled by the weight
    assert d.values[(5, 6, 7)] == sp.embed_h(Vec([2, 0, 0, 0]))
    # zeta scaled and reordered: value at (z, u', v') is zeta(u, v) z
    assert d.values[(1, 4 + 2, 4 + 3)] == sp.embed_g(Vec([2, 0, 0, 0]))
    assert is_pair_typed(d)


def test_pair_cochain_shape_mismatch(dim3_algebra, dim4_algebra):
    ad3, ad4 = adjoint(dim3_algebra), adjoint(dim4_algebra)
    with pytest.raises(ValueError, match="rho"):
        pair_cochain(dim4_algebra, ad3, dim4_algebra, ad4)
    with pytest.raises(ValueError, match="zeta"):
        pair_cochain(dim4_algebra, ad4, dim4_algebra, ad3)


def test_decompose_delta_roundtrip(dim4_algebra):
    ad = adjoint(dim4_algebra)
    d = pair_cochain(dim4_algebra, ad, dim4_algebra, ad, 1)
    pi, rho, mu, zeta = decompose_delta(d)
    assert pi._table == dim4_algebra._table
    assert mu._table == dim4_algebra._table
    for i, j in GradedSpace(4, 0).wedges():
        assert rho.matrix(i, j) == ad.matrix(i, j)
        assert zeta.matrix(i, j) == ad.matrix(i, j)


def test_decompose_delta_error_paths(dim4_algebra):
    ad = adjoint(dim4_algebra)
    d = pair_cochain(dim4_algebra, ad, dim4_algebra, ad, 1)
    with pytest.raises(ValueError, match="expected arity 1"):
        decompose_delta(GradedCochain.zero(d.space, 2))
    with pytest.raises(ValueError, match="both blocks"):
        decompose_delta(bracket_cochain(dim4_algebra))
    broken = GradedCochain(
        d.space, 1, {(0, 1, 4): d.space.embed_g(Vec([1, 0, 0, 0]))}
    )
    with pytest.raises(ValueError, match="not pair typed"):
        decompose_delta(broken)


def test_pair_typing_predicates():
    sp = GradedSpace(2, 2)
    g_on_even = GradedCochain(sp, 1, {(0, 2, 3): sp.embed_g(Vec([1, 0]))})
    assert is_pair_typed(g_on_even)
    g_on_odd = GradedCochain(sp, 1, {(0, 1, 2): sp.embed_g(Vec([1, 0]))})
    assert not is_pair_typed(g_on_odd)
    mixed_wedge = GradedCochain(
        sp, 2, {((0, 2), (0, 1, 2)): sp.embed_h(Vec([1, 0]))}
    )
    assert not is_pair_typed(mixed_wedge)
    # arity 0: block-diagonal only
    sp4 = GradedSpace(2, 2)
    blockdiag = endo_cochain(sp4, Matrix.diagonal([1, 2, 3, 4]))
    assert is_pair_typed(blockdiag)
    offdiag = GradedCochain(sp4, 0, {0: sp4.embed_h(Vec([1, 0]))})
    assert not is_pair_typed(offdiag)


def test_one_sided_means_no_backaction(dim4_algebra):
    ad = adjoint(dim4_algebra)
    zeta0 = Representation.zero(dim4_algebra, 4)
    assert is_one_sided(pair_cochain(dim4_algebra, ad, dim4_algebra, zeta0, 1))
    assert not is_one_sided(pair_cochain(dim4_algebra, ad, dim4_algebra, ad, 1))


def test_project_pure_drops_only_mixed_wedges():
    sp = GradedSpace(2, 1)
    pure_key = ((0, 1), (0, 1, 2))
    mixed_key = ((1, 2), (0, 1, 2))
    f = GradedCochain(sp, 2, {pure_key: Vec([1, 0, 0]), mixed_key: Vec([0, 1, 0])})
    p = project_pure(f)
    assert set(p.values) == {pure_key}
    assert p.values[pure_key] == Vec([1, 0, 0])
    # nothing to drop below arity 2
    g = GradedCochain(sp, 1, {(0, 1, 2): Vec([1, 0, 0])})
    assert project_pure(g) == g


def test_double_then_undouble_is_identity():
    sp = GradedSpace(3, 0)
    rng = random.Random(17)
    for arity in (0, 1, 2):
        f = random_cochain(sp, arity, rng)
        F = double_cochain(f)
        assert is_pair_typed(F)
        assert undouble_cochain(F) == f


def test_double_cochain_spreads_legs():
    sp = GradedSpace(2, 0)
    f = GradedCochain(sp, 0, {0: Vec([1, 2])})
    F = double_cochain(f)
    big = F.space
    assert F.values[0] == big.embed_g(Vec([1, 2]))
    assert F.values[2] == big.embed_h(Vec([1, 2]))


def test_double_cochain_error_paths():
    two = GradedSpace(2, 2)
    f = GradedCochain(two, 1, {(0, 1, 2): two.embed_h(Vec([1, 0]))})
    with pytest.raises(ValueError, match="one-part"):
        double_cochain(f)
    small = GradedCochain(GradedSpace(3, 0), 1, {(0, 1, 2): Vec([1, 0, 0])})
    with pytest.raises(ValueError, match="double the source"):
        double_cochain(small, GradedSpace(3, 2))
    with pytest.raises(ValueError, match="doubled space"):
        undouble_cochain(GradedCochain.zero(GradedSpace(2, 1), 1))

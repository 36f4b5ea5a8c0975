"""Deformation lines R + t*Rhat: validity, cocycles, equivalence, Nijenhuis."""

import random
from fractions import Fraction
from itertools import combinations, product

import pytest

from threelie.cohomology import d_R
from threelie.deformations import (
    LinearDeformation,
    NijenhuisElement,
    check_adX_nijenhuis_on_induced,
    check_equivalence,
    check_linear_deformation,
    check_nijenhuis_element,
    deformation_is_cocycle,
    omega_from_direction,
    trivial_deformation_from_nijenhuis,
)
from threelie.linalg import Matrix, Vec
from threelie.operators import WeightedOperator, check_mrb_absolute, induced_bracket
from threelie.trilie import ThreeLieAlgebra, check_fundamental_identity

F1 = Fraction(1)


def diag(*entries) -> Matrix:
    return Matrix.diagonal([Fraction(e) for e in entries])


@pytest.fixture(scope="module")
def R1(dim4_algebra):
    return WeightedOperator(dim4_algebra, diag(1, 1, -1, -1), F1)


@pytest.fixture(scope="module")
def id4(dim4_algebra):
    return WeightedOperator(dim4_algebra, Matrix.identity(4), F1)


@pytest.fixture(scope="module")
def cross4():
    # the four-dimensional algebra with all coordinate triples productive
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


def zero_deformation(op):
    return LinearDeformation(op, Matrix.zero(op.algebra.dim, op.algebra.dim))


def test_cross4_is_an_algebra(cross4):
    assert check_fundamental_identity(cross4) is None


def test_direction_shape_is_checked(R1):
    with pytest.raises(ValueError, match="dimension"):
        LinearDeformation(R1, Matrix.identity(3))


def test_base_must_be_modified(dim4_algebra):
    bad = WeightedOperator(dim4_algebra, diag(1, 0, 0, 0), F1)
    with pytest.raises(ValueError, match="not modified"):
        check_linear_deformation(zero_deformation(bad))


def test_zero_direction_is_a_deformation(R1):
    assert check_linear_deformation(zero_deformation(R1)) is None


def test_base_direction_fails_at_order_one(R1):
    # R + tR is modified only at t = 0 and t = -2
    bad = check_linear_deformation(LinearDeformation(R1, R1.matrix))
    assert bad.check == "order-1 condition"
    assert "basis triple (1, 2, 3)" in str(bad)
    assert bad.residual == Vec([4, 0, 0, 0])


def test_line_points(R1):
    d = LinearDeformation(R1, diag(1, 0, 1, 0))
    two = d.at(2)
    assert two.matrix == diag(3, 1, 1, -1)
    assert two.weight == R1.weight


def test_diagonal_direction_families(R1, id4):
    # exhaustive small sweep; the valid loci are cut out by one vanishing
    # entry and one vanishing product each
    found = set()
    for p, q, r, s in product((-1, 0, 1), repeat=4):
        d = LinearDeformation(R1, diag(p, q, r, s))
        if check_linear_deformation(d) is None:
            found.add((p, q, r, s))
    assert found == {
        (p, q, r, s)
        for p, q, r, s in product((-1, 0, 1), repeat=4)
        if q == 0 and p * r * s == 0
    }
    assert len(found) == 19

    found_id = set()
    for p, q, r, s in product((-1, 0, 1), repeat=4):
        d = LinearDeformation(id4, diag(p, q, r, s))
        if check_linear_deformation(d) is None:
            found_id.add((p, q, r, s))
    assert found_id == {
        (p, q, r, s)
        for p, q, r, s in product((-1, 0, 1), repeat=4)
        if p == 0 and q * r * s == 0
    }


def test_specialization_points_give_the_same_verdict(R1):
    # the residual is cubic in t, so t = 1, 2, 3 decide the line
    rng = random.Random(1215)
    directions = [
        Matrix([[Fraction(rng.randint(-2, 2)) for _ in range(4)] for _ in range(4)])
        for _ in range(40)
    ]
    directions += [diag(*entries) for entries in product((-1, 0, 1), repeat=4)]
    for M in directions:
        d = LinearDeformation(R1, M)
        verdict = check_linear_deformation(d) is None
        points = all(check_mrb_absolute(d.at(t)) is None for t in (1, 2, 3))
        assert verdict == points


# ------------------------------------------------------ Nijenhuis elements


def test_every_wedge_vector_is_nijenhuis_here(R1, dim4_algebra):
    # ad_X lands in the one-dimensional centre whatever X is
    for w in combinations(range(4), 2):
        assert check_nijenhuis_element(R1, {w: F1}) is None
    combo = {(1, 2): F1, (0, 3): Fraction(-2), (2, 3): Fraction(3)}
    assert check_nijenhuis_element(R1, combo) is None
    assert check_nijenhuis_element(R1, {}) is None


def test_nijenhuis_double_image_failure(cross4):
    op = WeightedOperator(cross4, Matrix.identity(4), F1)
    bad = check_nijenhuis_element(op, {(0, 1): F1})
    assert bad.check == "double-image bracket"
    assert "basis triple (0, 2, 3)" in str(bad)
    assert bad.residual == Vec([0, -1, 0, 0])


def test_nijenhuis_triple_image_failure(cross4):
    op = WeightedOperator(cross4, Matrix.identity(4), F1)
    bad = check_nijenhuis_element(op, {(0, 1): F1, (2, 3): F1})
    assert bad.check == "triple-image bracket"
    assert "basis triple (0, 1, 2)" in str(bad)
    assert bad.residual == Vec([0, 0, -1, 0])


def test_nijenhuis_interleaving_failure(dim4_algebra):
    # a base swapping e1 and e4 pushes the image back out of the kernel
    P = Matrix([[0, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 0]])
    op = WeightedOperator(dim4_algebra, P, F1)
    bad = check_nijenhuis_element(op, {(1, 2): F1})
    assert bad.check == "operator interleaving"
    assert "basis vector 3" in str(bad)
    assert bad.residual == Vec([1, 0, 0, 0])
    with pytest.raises(ValueError, match="Nijenhuis"):
        NijenhuisElement(op, {(1, 2): F1})


def test_nijenhuis_wrapper_holds_wedge(R1):
    elem = NijenhuisElement(R1, {(1, 2): F1})
    assert elem.wedge == {(1, 2): F1}
    assert check_nijenhuis_element(R1, elem) is None


# ----------------------------------------------------- trivial deformations


def test_trivial_deformation_contracts(R1):
    X = {(1, 2): F1}
    d = trivial_deformation_from_nijenhuis(R1, X)
    assert d.direction == d_R(R1, X)
    assert d.direction.col(3) == Vec([2, 0, 0, 0])
    assert check_linear_deformation(d) is None
    assert deformation_is_cocycle(d)
    assert check_equivalence(d, zero_deformation(R1), X) is None


def test_trivial_deformation_sweep(R1, id4, dim4_algebra):
    R2 = WeightedOperator(dim4_algebra, diag(1, -1, 1, -1), F1)
    for op in (R1, R2, id4):
        for w in combinations(range(4), 2):
            d = trivial_deformation_from_nijenhuis(op, {w: F1})
            assert check_linear_deformation(d) is None
            assert check_equivalence(d, zero_deformation(op), {w: F1}) is None
            assert check_adX_nijenhuis_on_induced(op, {w: F1}) is None


def test_trivial_deformation_rejects_non_nijenhuis(dim4_algebra):
    P = Matrix([[0, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 0]])
    op = WeightedOperator(dim4_algebra, P, F1)
    with pytest.raises(ValueError, match="Nijenhuis"):
        trivial_deformation_from_nijenhuis(op, {(1, 2): F1})


# ------------------------------------------------------------- equivalence


def test_equivalence_of_equal_lines(R1):
    d = zero_deformation(R1)
    assert check_equivalence(d, d, {}) is None


def test_equivalence_reports_intertwining(R1):
    d = zero_deformation(R1)
    # equal lines, but the wedge has a nonzero seam coboundary
    bad = check_equivalence(d, d, {(1, 2): F1})
    assert bad.check == "operator intertwining at order 1"
    assert "basis vector 3" in str(bad)
    assert bad.residual == Vec([2, 0, 0, 0])

    dd = LinearDeformation(R1, diag(1, 0, 1, 0))
    assert check_linear_deformation(dd) is None
    # the seam coboundary of e3^e4 vanishes, but ad_X and the direction
    # fail to commute, which surfaces one order higher
    bad = check_equivalence(dd, dd, {(2, 3): F1})
    assert bad.check == "operator intertwining at order 2"
    assert "basis vector 1" in str(bad)
    assert bad.residual == Vec([1, 0, 0, 0])


def test_equivalence_reports_bracket_compatibility(cross4):
    op = WeightedOperator(cross4, Matrix.identity(4), F1)
    d = zero_deformation(op)
    bad = check_equivalence(d, d, {(0, 1): F1})
    assert bad.check == "bracket compatibility at order 2"
    assert "basis triple (0, 2, 3)" in str(bad)
    assert bad.residual == Vec([0, 1, 0, 0])


def test_equivalence_rejects_mismatched_bases(R1, id4):
    with pytest.raises(ValueError, match="base operators"):
        check_equivalence(zero_deformation(R1), zero_deformation(id4), {})


def test_equivalent_lines_differ_by_a_seam_coboundary(R1):
    # two nonzero directions related by d_R of the wedge; the shared
    # diagonal part commutes with ad_X, so the check passes at all orders
    X = {(1, 2): F1}
    shared = diag(1, 0, 0, 1)
    d1 = LinearDeformation(R1, d_R(R1, X) + shared)
    d2 = LinearDeformation(R1, shared)
    assert check_linear_deformation(d1) is None
    assert check_linear_deformation(d2) is None
    assert check_equivalence(d1, d2, X) is None
    assert d1.direction - d2.direction == d_R(R1, X)


# ----------------------------------------------------------------- cocycle


def test_valid_directions_are_cocycles(R1):
    for p, q, r, s in product((-1, 0, 1), repeat=4):
        d = LinearDeformation(R1, diag(p, q, r, s))
        if check_linear_deformation(d) is None:
            assert deformation_is_cocycle(d)


def test_cocycle_requires_validity(R1):
    with pytest.raises(ValueError, match="not a linear deformation"):
        deformation_is_cocycle(LinearDeformation(R1, R1.matrix))


# ------------------------------------------------------- bracket direction


def test_omega_of_zero_direction(R1):
    assert omega_from_direction(zero_deformation(R1))._table == {}


def test_omega_formula_on_the_base_direction(R1, dim4_algebra, e4):
    # the six terms collapse to twice the two-operator mixed sum
    d = LinearDeformation(R1, R1.matrix)
    with pytest.raises(ValueError, match="not a linear deformation"):
        omega_from_direction(d)
    om = omega_from_direction(d, require_valid=False)
    br = dim4_algebra.bracket
    R = R1.matrix
    for i, j, k in combinations(range(4), 3):
        x, y, z = e4[i], e4[j], e4[k]
        mixed = (
            br(R @ x, R @ y, z) + br(x, R @ y, R @ z) + br(R @ x, y, R @ z)
        )
        assert om.bracket(x, y, z) == 2 * mixed
    assert om._table == {(1, 2, 3): Vec([-2, 0, 0, 0])}


def test_omega_requires_central_derived_ideal(dim3_algebra):
    base = WeightedOperator(dim3_algebra, diag(1, 1, -1), F1)
    with pytest.raises(ValueError, match="central"):
        omega_from_direction(zero_deformation(base))


def test_omega_moves_the_induced_bracket_linearly(id4):
    # direction with no two-direction remainder: the induced bracket of the
    # line is the base induced bracket plus t times omega, exactly
    d = LinearDeformation(id4, diag(0, 1, 0, 0))
    assert check_linear_deformation(d) is None
    om = omega_from_direction(d)
    assert om._table == {(1, 2, 3): Vec([2, 0, 0, 0])}
    for t in (1, 2, 3):
        moved = induced_bracket(d.at(t))
        assert moved._table == {(1, 2, 3): Vec([4 + 2 * t, 0, 0, 0])}


def test_omega_misses_the_quadratic_remainder(R1):
    # valid direction whose image brackets against itself: the line's
    # induced bracket moves purely at second order, which omega cannot see
    d = LinearDeformation(R1, diag(0, 0, 1, 1))
    assert check_linear_deformation(d) is None
    assert omega_from_direction(d)._table == {}
    for t in (1, 2, 3):
        moved = induced_bracket(d.at(t))
        assert moved._table == {(1, 2, 3): Vec([t * t, 0, 0, 0])}


def test_omega_directions_keep_the_fundamental_identity(id4):
    # [.]_R + t omega stays a bracket for the exact-motion direction
    d = LinearDeformation(id4, diag(0, 1, 0, 0))
    om = omega_from_direction(d)
    base_table = induced_bracket(id4)._table
    for t in (1, 2, 3):
        table = dict(base_table)
        for key, v in om._table.items():
            table[key] = table.get(key, Vec.zero(4)) + Fraction(t) * v
        assert check_fundamental_identity(ThreeLieAlgebra(4, table)) is None


# -------------------------------------------- Nijenhuis on the induced side


def test_adX_nijenhuis_needs_a_nijenhuis_element(cross4):
    op = WeightedOperator(cross4, Matrix.identity(4), F1)
    with pytest.raises(ValueError, match="Nijenhuis"):
        check_adX_nijenhuis_on_induced(op, {(0, 1): F1})


def test_adX_nijenhuis_combo_sweep(R1):
    rng = random.Random(4046)
    wedges = list(combinations(range(4), 2))
    for _ in range(10):
        X = {w: Fraction(rng.randint(-1, 1)) for w in wedges}
        assert check_nijenhuis_element(R1, X) is None
        assert check_adX_nijenhuis_on_induced(R1, X) is None

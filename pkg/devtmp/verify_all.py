import itertools, random
from fractions import Fraction
from threelie.linalg import Vec, Matrix
from threelie.trilie import ThreeLieAlgebra, adjoint, Representation
from threelie.operators import (check_mrb_relative, check_rb,
    RelativeMRBDatum, WeightedOperator)
from threelie.graded import (GradedSpace, GradedCochain, graded_bracket,
    bracket_cochain, abelian_element, pair_cochain, project_abelian,
    project_pure)
from threelie.linfinity import (LElement, LInfinityOps, mc_check_relative_modified,
    mc_check_absolute, mc_check_relative_rb, embeddings_nu_iota, typed_bracket)

def diag(*e):
    n = len(e)
    return Matrix([[e[i] if i == j else 0 for j in range(n)] for i in range(n)])

g4 = ThreeLieAlgebra(4, {(1, 2, 3): [1, 0, 0, 0]})
R1 = diag(1, 1, -1, -1)
bad = diag(2, 1, 1, 1)
ad = adjoint(g4)
parts = (g4, ad, g4, ad)
print("rel-mod R1:", mc_check_relative_modified(parts, R1, 1).passed,
      "| oracle ok:", check_mrb_relative(RelativeMRBDatum(g4, g4, ad, ad, R1, 1)) is None)
r = mc_check_relative_modified(parts, bad, 1)
print("rel-mod bad:", r.passed, "| shifted none:", r.shifted is None,
      "| oracle fails:", check_mrb_relative(RelativeMRBDatum(g4, g4, ad, ad, bad, 1)) is not None)
print("abs R1 lam1:", mc_check_absolute(g4, R1, 1).passed,
      "| abs 2R1 lam4:", mc_check_absolute(g4, 2 * R1, 4).passed,
      "| abs bad:", mc_check_absolute(g4, bad, 1).passed)
rb = diag(0, 0, -1, -1)
print("rel-rb rb-witness:", mc_check_relative_rb(g4, ad, g4, rb, 1).passed,
      "| oracle ok:", check_rb(WeightedOperator(g4, rb, 1)) is None)
print("rel-rb R1:", mc_check_relative_rb(g4, ad, g4, R1, 1).passed,
      "| rb oracle fails:", check_rb(WeightedOperator(g4, R1, 1)) is not None)
print("embeddings:", embeddings_nu_iota())

space4 = GradedSpace(4, 4)
delta4 = pair_cochain(g4, ad, g4, ad, 1)
Tc4 = abelian_element(space4, R1)
ops4 = LInfinityOps(space4, "rPair")
al4 = LElement(shifted=delta4, abelian=Tc4, degree=0)
l2v = ops4.l(2, [al4, al4])
dT = graded_bracket(delta4, Tc4)
dd = graded_bracket(delta4, delta4)
print("[d,d] zero:", dd.is_zero(),
      "| l2 shifted none:", l2v.shifted is None,
      "| l2 abelian == 2P[d,T]:", (l2v.abelian - 2 * project_abelian(dT)).is_zero())
print("l3 zero:", ops4.l(3, [al4] * 3).is_zero())
l4v = ops4.l(4, [al4] * 4)
ad3n = graded_bracket(graded_bracket(dT, Tc4), Tc4)
print("l4 abelian == 4P(ad^3):", (l4v.abelian - 4 * project_abelian(ad3n)).is_zero(),
      "| l4 shifted none:", l4v.shifted is None)
print("l5 zero:", ops4.l(5, [al4] * 5).is_zero())

# twisted squares, all variants, arity-2 elements, dim-3 data
g3 = ThreeLieAlgebra(3, {(0, 1, 2): [1, 0, 0]})
ad3 = adjoint(g3)
T3 = diag(1, 1, -1)
space = GradedSpace(3, 3)
rng = random.Random(321)

def rand_typed(space, arity, rng, skip=0.6, one_sided=False):
    vals = {}
    pures = [w for w in space.wedges() if space.pure_wedge(w)]
    for lead in itertools.product(pures, repeat=arity - 1):
        for tri in space.triples():
            hc = space.h_count(tri)
            if one_sided and hc == 2:
                continue
            if rng.random() < skip:
                continue
            gv = hc in (0, 2)
            col = Vec([rng.randint(-1, 1) for _ in range(space.dim_g if gv else space.dim_h)])
            if col.is_zero():
                continue
            v = space.embed_g(col) if gv else space.embed_h(col)
            vals[lead + (tri,) if arity > 1 else tri] = v
    return GradedCochain(space, arity, vals)

delta3 = pair_cochain(g3, ad3, g3, ad3, 1)
tw = LInfinityOps(space, "rPair").twist(
    LElement(shifted=delta3, abelian=abelian_element(space, T3), degree=0))
x = rand_typed(space, 2, rng)
print("rPair twisted l1^2 on arity-2:",
      tw.l1(tw.l1(LElement(shifted=x, degree=1))).is_zero())

# the adjoint fold is not a valid one-sided pair on g3, so use the trivial
# action; T = diag(1,2,1) is relative RB at weight 2 but not at weight 1
rho0 = Representation.zero(g3, 3)
zeta0 = Representation.zero(g3, 3)
rb3 = diag(1, 2, 1)
print("  (h-sub MC for rb3 at 2:", mc_check_relative_rb(g3, rho0, g3, rb3, 2).passed,
      "| at 1:", mc_check_relative_rb(g3, rho0, g3, rb3, 1).passed, ")")
delta_os = pair_cochain(g3, rho0, g3, zeta0, 2)
twh = LInfinityOps(space, "h-sub").twist(
    LElement(shifted=delta_os, abelian=abelian_element(space, rb3), degree=0))
xh = rand_typed(space, 2, rng, one_sided=True)
print("h-sub twisted l1^2 on arity-2 one-sided:",
      twh.l1(twh.l1(LElement(shifted=xh, degree=1))).is_zero())

twp = LInfinityOps(space, "Pair").twist(
    LElement(shifted=bracket_cochain(g3), abelian=abelian_element(space, T3), degree=0))
one = GradedSpace(3, 0)
xp = rand_typed(one, 2, rng, skip=0.3)
print("Pair twisted l1^2 on arity-2 one-part:",
      twp.l1(twp.l1(LElement(shifted=xp, degree=1))).is_zero())

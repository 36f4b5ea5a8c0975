import itertools, random
from fractions import Fraction
from threelie.linalg import Vec, Matrix
from threelie.trilie import ThreeLieAlgebra, adjoint, Representation
from threelie.graded import (GradedSpace, GradedCochain, abelian_element,
    pair_cochain, bracket_cochain, graded_bracket, project_abelian)
import threelie.linfinity as lf
from threelie.linfinity import LElement, LInfinityOps

def diag(*e):
    n = len(e)
    return Matrix([[e[i] if i == j else 0 for j in range(n)] for i in range(n)])

g3 = ThreeLieAlgebra(3, {(0, 1, 2): [1, 0, 0]})
ad3 = adjoint(g3)
T3 = diag(1, 1, -1)
space = GradedSpace(3, 3)
delta = pair_cochain(g3, ad3, g3, ad3, 1)
rng = random.Random(321)

def rand_typed(space, arity, rng, skip=0.6):
    vals = {}
    pures = [w for w in space.wedges() if space.pure_wedge(w)]
    for lead in itertools.product(pures, repeat=arity - 1):
        for tri in space.triples():
            if rng.random() < skip:
                continue
            hc = space.h_count(tri)
            gv = hc in (0, 2)
            col = Vec([rng.randint(-1, 1) for _ in range(space.dim_g if gv else space.dim_h)])
            if col.is_zero():
                continue
            v = space.embed_g(col) if gv else space.embed_h(col)
            vals[lead + (tri,) if arity > 1 else tri] = v
    return GradedCochain(space, arity, vals)

x = rand_typed(space, 2, rng)

for label, bk in (("typed", lf.typed_bracket), ("full", None)):
    if bk is None:
        lf.typed_bracket = lambda a, b: graded_bracket(a, b)
    ops = LInfinityOps(space, "rPair")
    al = LElement(shifted=delta, abelian=abelian_element(space, T3), degree=0)
    tw = ops.twist(al)
    e = LElement(shifted=x, degree=1)
    once = tw.l1(e)
    twice = tw.l1(once)
    sh = twice.shifted
    ab = twice.abelian
    print(f"{label}: square zero: {twice.is_zero()}"
          f" | shifted {'0' if sh is None else len(sh.values)}"
          f" | abelian {'0' if ab is None else len(ab.values)}")

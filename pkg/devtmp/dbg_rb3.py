from fractions import Fraction
from threelie.linalg import Matrix, Vec
from threelie.trilie import ThreeLieAlgebra, adjoint, Representation, check_fundamental_identity
from threelie.graded import pair_cochain, graded_bracket, project_pure
from threelie.linfinity import mc_check_relative_rb

g3 = ThreeLieAlgebra(3, {(0, 1, 2): [1, 0, 0]})
ad3 = adjoint(g3)
g4 = ThreeLieAlgebra(4, {(1, 2, 3): [1, 0, 0, 0]})
ad4 = adjoint(g4)

for name, alg, rho in [("dim3 fold", g3, ad3), ("dim4 fold", g4, ad4)]:
    zeta0 = Representation.zero(alg, alg.dim)
    d = pair_cochain(alg, rho, alg, zeta0, 1)
    dd = graded_bracket(d, d)
    pure = project_pure(dd)
    print(name, "| [d,d] zero:", dd.is_zero(), "| pure part zero:", pure.is_zero())
    # the same data as an honest 6/8-dim algebra table: does the FI hold?
    n = alg.dim
    entries = {}
    for (tri,), vec in d.values.items():
        entries[tri] = list(vec)
    big = ThreeLieAlgebra(2 * n, entries)
    print("   semidirect FI holds:", check_fundamental_identity(big) is None)

# candidate replacement datum: trivial action, own bracket on the h side
zeta0 = Representation.zero(g3, 3)
rho0 = Representation.zero(g3, 3)
d_tr = pair_cochain(g3, rho0, g3, zeta0, 1)
dd = graded_bracket(d_tr, d_tr)
print("trivial-action pair | [d,d] zero:", dd.is_zero())
for t, lam in [((1, 1, 1), 1), ((2, 1, 1), 1), ((1, 2, 1), 1), ((1, 2, 1), 2), ((0, 5, -3), 1)]:
    res = mc_check_relative_rb(g3, rho0, g3, Matrix.diagonal([Fraction(x) for x in t]), lam)
    print("  T=diag%s lam=%s passed: %s" % (t, lam, res.passed))

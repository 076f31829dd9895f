"""Series on the open unit disc for p = 2 and E(u) = u - 2.

lambda solves lambda = (E/E(0)) phi(lambda), and N = -u lambda d/du
satisfies N phi = p (E/E(0)) phi N.  Both identities are checked on the
truncation window.
"""

from hodgepink import PrimeContext
from hodgepink.series import TruncatedLaurent
from hodgepink.unit_disc import (EisensteinPoly, USeriesContext, eta_matrix,
                                 lambda_residual, lambda_series,
                                 nnabla_commutator, rank1_twist_factor)

c = USeriesContext(EisensteinPoly((-2,), PrimeContext(2)), 8)
print("lambda =", lambda_series(c))
print("residual =", lambda_residual(c))
g = TruncatedLaurent({0: 1, 1: 3, 2: -1, 5: 2}, None, "u")
print("commutator on", g, "=", nnabla_commutator(g, c))
print("twist (pE/E(0))^-1 =", rank1_twist_factor(-1, c))
eta = eta_matrix([[0, 1], [0, 0]], 4)
print("eta for N0 = E12:", eta[0, 1])

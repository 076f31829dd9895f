"""Which characteristic polynomials can carry a weakly admissible
module with Hodge weights (2, 0)?

The test is val(c_1) >= 0 and val(c_2) = 2.  For each admissible point we
also search for an explicit filtered module lying over it.
"""

from fractions import Fraction

from hodgepink import Cocharacter, PrimeContext, newton_membership
from hodgepink.admissibility import newton_preimage_search

p = 2
ctx = PrimeContext(p)
mu = Cocharacter.single((2, 0))
roots = [(Fraction(1), Fraction(4)), (Fraction(2), Fraction(2)),
         (Fraction(1, 2), Fraction(8)), (Fraction(2), Fraction(4))]
for a, b in roots:
    c = (-(a + b), a * b)
    member = newton_membership(c, mu, ctx)
    line = f"roots {a}, {b}: c = ({c[0]}, {c[1]}) member {member}"
    if member:
        found = newton_preimage_search(c, mu, ctx)
        line += "; preimage found" if found else "; no preimage in search"
    print(line)

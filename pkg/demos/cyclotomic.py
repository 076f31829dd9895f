"""The cyclotomic character and its dual as rank-one objects.

Frobenius acts by 1/p (resp. p) and the lattice is t p (resp. t^-1 p).
Both sit at slope zero, are weakly admissible, and come from a filtration.
"""

from hodgepink import (hodge_polygon, is_weakly_admissible, is_zero_section,
                       lattice_to_filtration, t_invariants)
from hodgepink.suites import cyclotomic_pair

for name, (m, q) in zip(("cyclotomic", "dual"), cyclotomic_pair(p=3)):
    s = t_invariants(m, q)
    print(f"{name}: F = {m.F[0][0]}, polygon {hodge_polygon(q).mu('psi0')}")
    print(f"  t_N = {s.t_N}, t_H = {s.t_H}, sigma = {s.sigma}")
    print(f"  weakly admissible: {is_weakly_admissible(m, q).wa}")
    F = lattice_to_filtration(q)
    print(f"  filtration jumps {F.jump_type('psi0')}, "
          f"section image: {is_zero_section(m, q)}")

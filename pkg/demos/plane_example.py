"""F = p on a plane with N = 0 and lattice p + t^-2 (u + t u') Q[[t]].

Whether the object is weakly admissible depends only on whether u and u'
are independent.  In the dependent case the line through u has hodge
number 2 against a Newton number of 1, so it destabilizes.  The
independent case shows that a lattice can be weakly admissible while the
filtration it induces is not.
"""

from hodgepink import (harder_narasimhan, hodge_polygon, induced_subobject,
                       is_weakly_admissible, is_zero_section,
                       lattice_to_filtration, t_invariants)
from hodgepink.suites import plane_example

for dependent in (False, True):
    m, q = plane_example(dependent)
    tag = "dependent" if dependent else "independent"
    rep = is_weakly_admissible(m, q)
    print(f"{tag}: polygon {hodge_polygon(q).mu('psi0')}, wa = {rep.wa}")
    sub_m, sub_q = induced_subobject(m, q, [[1, 0]])
    s = t_invariants(sub_m, sub_q)
    print(f"  line e1: t_H = {s.t_H}, t_N = {s.t_N}")
    if not rep.wa:
        print(f"  witness {[list(map(str, v)) for v in rep.witness]}")
    hn = harder_narasimhan(m, q)
    print(f"  HN sigmas {[str(x) for x in hn.sigmas]}")
    F = lattice_to_filtration(q)
    print(f"  induced filtration wa = {is_weakly_admissible(m, F).wa}, "
          f"lattice is a section image: {is_zero_section(m, q)}")

"""Harder-Narasimhan filtrations of small diagonal modules.

With F = diag(1, p) and the filtration jumping at e1, the line e1 carries
Hodge weight 1 but Newton weight 0, so it is the first HN step.
"""

from hodgepink import (KFiltration, PhiNModule, PrimeContext,
                       filtration_to_lattice, harder_narasimhan)

ctx = PrimeContext(2)
m = PhiNModule(1, [[1, 0], [0, 2]], [[0, 0], [0, 0]], ctx)
for top in ([1, 0], [0, 1], [1, 1]):
    F = KFiltration([("psi0", [top, [0, 1] if top != [0, 1] else [1, 0]],
                      [1, 0])])
    hn = harder_narasimhan(m, filtration_to_lattice(F))
    steps = [len(s) for s in hn.steps]
    print(f"F^1 = span {top}: step ranks {steps}, "
          f"sigmas {[str(s) for s in hn.sigmas]}")

"""Regenerate the JSON fixtures shipped in src/hodgepink/fixtures."""

import sys
from pathlib import Path

from hodgepink import serialize as S, suites
from hodgepink.arithmetic import PrimeContext
from hodgepink.cocharacters import Cocharacter
from hodgepink.hodge_pink import KFiltration
from hodgepink.phin import PhiNModule, generic_representative

OUT = Path(__file__).resolve().parents[1] / "src" / "hodgepink" / "fixtures"


def write(name, doc):
    (OUT / name).write_text(S.dumps(doc), encoding="utf-8")


def instance(m, q=None, F=None, mu=None, galois=(), extra=None):
    mod = S.dump_module(m)
    doc = {"p": mod.pop("p"), "module": mod}
    if q is not None:
        doc["lattice"] = S.dump_lattice(q)
    if F is not None:
        doc["filtration"] = S.dump_filtration(F)
    if mu is not None:
        doc["cocharacter"] = S.dump_cocharacter(mu, galois)
    doc.update(extra or {})
    return doc


def main():
    OUT.mkdir(exist_ok=True)
    (m, q), (md, qd) = suites.cyclotomic_pair()
    disc = {"unit_disc": {"eisenstein": ["-3"], "precision": 40}}
    write("cyclotomic.json",
          instance(m, q, mu=Cocharacter.single((-1,)), extra=disc))
    write("cyclotomic_dual.json",
          instance(md, qd, mu=Cocharacter.single((1,)), extra=disc))
    write("cyclotomic_filtration.json",
          instance(m, F=KFiltration([("psi0", [(1,)], (-1,))]), extra=disc))
    write("cyclotomic_dual_filtration.json",
          instance(md, F=KFiltration([("psi0", [(1,)], (1,))]), extra=disc))
    for dependent, name in [(False, "independent_vectors.json"),
                            (True, "dependent_vectors.json")]:
        m2, q2 = suites.plane_example(dependent)
        write(name, instance(m2, q2, mu=Cocharacter.single((2, 0))))
    write("mu_2_0.json",
          {"cocharacter": S.dump_cocharacter(Cocharacter.single((2, 0)))})
    swap = [("psi1", "psi0")]
    for name, ws in [("reflex_mu.json", ((2, 0), (2, 0))),
                     ("reflex_mu_prime.json", ((2, 0), (1, 1))),
                     ("reflex_mu_double_prime.json", ((1, 1), (1, 1)))]:
        write(name, {"cocharacter": S.dump_cocharacter(Cocharacter.of(*ws),
                                                       swap)})
    ctx = PrimeContext(3)
    write("jordan_chain.json",
          instance(PhiNModule(1, [[1, 0], [0, 3]], [[0, 1], [0, 0]], ctx)))
    write("jordan_two_block.json",
          instance(generic_representative((2, 1), 1, ctx)))
    diag = PhiNModule(1, [[1, 0], [0, 3]], [[0, 0], [0, 0]], ctx)
    write("hn_diagonal.json",
          instance(diag, F=KFiltration([("psi0", [(1, 0), (0, 1)], (1, 0))])))
    write("newton_scalar.json",
          instance(PhiNModule(1, [[3, 0], [0, 3]], [[0, 0], [0, 0]], ctx),
                   mu=Cocharacter.single((2, 0))))
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Print the worked examples on the bundled fixture graphs next to the oracle values."""

from cliquecover.drivers import min_assignment_cover, min_ecc
from cliquecover.fixtures import LRCC_NAMES, g_isr, g_lrcc, g_lrcc_estar, k4_weighted
from cliquecover.oracles import oracle_ewcd, oracle_min_assignment, oracle_min_ecc, oracle_vcc, verify_solution
from cliquecover.problems import AewcdInstance
from cliquecover.search_f2 import aewcds, eccs2, lrccs


def show(label, value, expected):
    mark = "ok" if value == expected else "MISMATCH"
    print(f"{label:<38} {value!s:<28} expected {expected!s:<10} {mark}")


def main():
    g = g_isr()
    k, cover, _ = min_ecc(g)
    show("isr: min clique cover", k, oracle_min_ecc(g)[0])
    show("isr: cover verifies", bool(verify_solution("ecc", g, cover, k)), True)
    show("isr: cover with 4 cliques", eccs2(g, 4).answer, False)
    show("isr: min total clique size", min_assignment_cover(g)[0], oracle_min_assignment(g)[0])

    g, we = k4_weighted()
    sol = aewcds(AewcdInstance(g, 3, we))
    show("k4w: weights with 3 cliques", sorted(int(w) for w in sol.gamma), [1, 1, 99])
    show("k4w: 2 cliques", aewcds(AewcdInstance(g, 2, we)).answer, oracle_ewcd(g, 2, we) is not None)

    g = g_lrcc()
    sol = lrccs(g, 3, g_lrcc_estar())
    named = sorted("".join(sorted(LRCC_NAMES[v] for v in c)) for c in sol.cliques)
    show("lrcc: cover with bd required", named, ["a", "bcd", "efg"])
    for k in (2, 3):
        show(f"lrcc: vertex cover k={k}, no edges", lrccs(g, k).answer, oracle_vcc(g, k))


if __name__ == "__main__":
    main()

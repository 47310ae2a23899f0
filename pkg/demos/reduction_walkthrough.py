"""Walk a graph through the reduction pipeline and show where it escapes.

For a small graph every step is printed.  For the cubic k=7 family the
counting report shows which inequality of the chain fails: its long faces
have length 2k+3, one short of what the chain needs.
"""

from csl.constructions import FamilySpec, build_family
from csl.errors import CSLError
from csl.reduction import counting_report, discharge, long_faces_in, make_subcubic, reduce_to_g_prime
from csl.polyhedra import diamond


def show(G, k, label):
    print(f"== {label}, k={k}: n={G.n} m={G.m}")
    Gp, trace = reduce_to_g_prime(G, k)
    for s in trace.steps[:5]:
        print(f"  step {s.index}: removed {len(s.deleted_edges)} shared edge(s), "
              f"{s.m_before} -> {s.m_after} edges")
    if len(trace.steps) > 5:
        print(f"  ... {len(trace.steps) - 5} more steps")
    held = ", ".join(f"{p}={'ok' if c.holds else 'FAIL'}" for p, c in trace.properties.checks.items())
    print(f"  reduced graph n={Gp.n} m={Gp.m}; {held}")
    G2, split = make_subcubic(Gp, k, G=G)
    print(f"  after splitting: n={G2.n}, {len(split.steps)} split(s)")
    try:
        rep = counting_report(G2, k)
    except CSLError as exc:  # a bare cycle has nothing to count
        print(f"  counting skipped: {type(exc).__name__}")
        return
    print(f"  n={rep.n} x={rep.x} y={rep.y}  failing: {rep.failures or 'none'}")
    if G.is_cubic():
        ledger = discharge(G, k, long_faces_in(G, Gp, k))
        print(f"  charges: sum(l-6)={ledger.euler_sum}, {len(ledger.transfers)} transfers, "
              f"{len(ledger.deficient)} faces end below 6")


if __name__ == "__main__":
    show(diamond(), 4, "diamond")
    show(build_family(FamilySpec("cubic-k7", 7)).graph, 7, "cubic k=7 family")

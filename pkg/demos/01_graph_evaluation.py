"""Build and evaluate a small argumentation graph, step by step.

A graph holds arguments with initial strengths in [0, 1], connected by
attack and support edges.  The DF-QuAD semantics turns initial strengths
into final strengths: supporters pull an argument towards 1, attackers
towards 0, and a single full-strength attacker can silence an argument
completely.
"""

from qbag import build_qbag, evaluate, topological_order


def show(title, g):
    sigma = evaluate(g)
    print(f"\n{title}")
    print(f"  evaluation order: {' -> '.join(topological_order(g))}")
    for x in sorted(g.args):
        print(f"  {x}: initial {g.tau[x]:.2f} -> final {sigma[x]:.4g}")


# A claim a with moderate credibility, backed by a weak supporter c.
seed = build_qbag(
    [("a", 0.5), ("b", 0.7), ("c", 0.2)],
    supports=[("c", "a")],
)
show("Seed graph: c backs a, b stands alone", seed)

# A maximally credible attacker d arrives and goes after both a and b.
# b collapses to 0 outright; a keeps a remnant thanks to its supporter.
attacked = build_qbag(
    [("a", 0.5), ("b", 0.7), ("c", 0.2), ("d", 1.0)],
    attacks=[("d", "a"), ("d", "b")],
    supports=[("c", "a")],
)
show("d arrives with full strength and attacks a and b", attacked)

# A counter-attacker e undermines d, and both victims recover.
countered = build_qbag(
    [("a", 0.5), ("b", 0.7), ("c", 0.2), ("d", 1.0), ("e", 0.8)],
    attacks=[("d", "a"), ("d", "b"), ("e", "d")],
    supports=[("c", "a")],
)
show("e counter-attacks d; a and b bounce back", countered)

print(
    """
Note how d drops from 1.0 to 0.2 once e weighs in, which in turn lifts
a back to its initial 0.5 and b most of the way back to 0.56.
"""
)

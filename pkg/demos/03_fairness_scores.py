"""From exceedance counts to gradual fairness scores.

For each topic, count the steps at which its final strength reaches the
threshold.  Sorting those counts ascending and accumulating them yields a
Lorenz-style safety curve; the straight line to the same total is the
perfectly-fair reference.  The area between the two, squashed through a
sigmoid, is the Gini-style score (0 = perfectly even).  The Shannon-style
score is the entropy of the count distribution in base lcm-of-denominators
(1 = perfectly even).
"""

from qbag import (
    SLFQuery,
    build_chain,
    build_qbag,
    evaluate_chain,
    export_curve_csv,
    fairness_report,
)

steps = [
    build_qbag(
        [("a", 0.5), ("b", 0.7), ("c", 0.2)],
        supports=[("c", "a")],
    ),
    build_qbag(
        [("a", 0.5), ("b", 0.7), ("c", 0.2), ("d", 1.0)],
        attacks=[("d", "a"), ("d", "b")],
        supports=[("c", "a")],
    ),
    build_qbag(
        [("a", 0.5), ("b", 0.7), ("c", 0.2), ("d", 1.0), ("e", 0.8)],
        attacks=[("d", "a"), ("d", "b"), ("e", "d")],
        supports=[("c", "a")],
    ),
]
matrix = evaluate_chain(build_chain(steps))
query = SLFQuery(topics=frozenset("abc"), threshold=0.2)
report = fairness_report(matrix, query)

print("threshold exceedance counts:", report.exceed_counts)
print("ascending order:", " <= ".join(report.ordering))
print("fairness line: slope", report.line_slope, "through", report.curve_points[-1])
print("safety curve breakpoints:", list(report.curve_points))
print()
print("enclosed area (exact):", report.gini_area)
print(f"gini score:    {report.gini_score:.5f}   (0 would be perfectly even)")
print("exceedance shares:", {x: str(p) for x, p in report.p.items()})
print("entropy base:", report.base_b)
print(f"shannon score: {report.shannon_score:.5f}   (1 would be perfectly even)")

print("\ncurve CSV, ready for any plotting tool:\n")
print(export_curve_csv(report))

# the same data at threshold 0: every topic exceeds at every step, the
# curve collapses onto the line, and both scores report perfect evenness
uniform = fairness_report(matrix, SLFQuery(topics=frozenset("abc"), threshold=0.0))
print("at threshold 0:", "gini", uniform.gini_score, "/ shannon", uniform.shannon_score)

"""Non-monotonic knock-on effects of a single strength change.

A source argument f supports three middlemen; e supports a and attacks
b, while c and d do the opposite.  Raising f therefore pushes a and b in
both directions at once, and the net effect switches sign halfway: a is
worst off (and b best off) when f sits at 0.5.  This is why safety and
liveness guarantees are hard to give even for one-parameter families of
graphs; the checks below make the flip visible.
"""

from qbag import (
    SLFQuery,
    build_qbag,
    evaluate_chain,
    is_live,
    is_strongly_safe,
    is_weakly_safe,
    sweep_chain,
)

base = build_qbag(
    [("a", 0.2), ("b", 0.0), ("c", 0.0), ("d", 0.0), ("e", 0.0), ("f", 0.1)],
    attacks=[("c", "a"), ("d", "a"), ("e", "b")],
    supports=[("e", "a"), ("c", "b"), ("d", "b"), ("f", "e"), ("f", "c"), ("f", "d")],
)

# coarse three-point sweep: f at 0.1, 0.5, 0.9
chain = sweep_chain(base, "f", [0.1, 0.5, 0.9])
matrix = evaluate_chain(chain)
print("tau(f)    sigma(a)  sigma(b)")
for g, row in zip(chain, matrix.rows):
    print(f"{g.tau['f']:6.2f}    {row['a']:8.4g}  {row['b']:8.4g}")

for t in (0.1, 0.175):
    print(f"\nthreshold t = {t}:")
    for topic in "ab":
        q = SLFQuery(topics=frozenset(topic), threshold=t)
        print(
            f"  {{{topic}}}: strongly safe {str(is_strongly_safe(matrix, q)):5}"
            f"  weakly safe {str(is_weakly_safe(matrix, q)):5}"
            f"  live {is_live(matrix, q)}"
        )

# dense sweep: where exactly does a bottom out?
dense = sweep_chain(base, "f", [i / 100 for i in range(101)])
dense_rows = evaluate_chain(dense).rows
lowest = min(range(101), key=lambda i: dense_rows[i]["a"])
print(
    f"\ndense sweep over 101 points: sigma(a) is minimal at tau(f) = {lowest / 100:.2f}"
    f" with {dense_rows[lowest]['a']:.4g}"
)
print("closed forms: sigma(a) = 0.2 - 0.2*s*(1-s), sigma(b) = s*(1-s) for tau(f) = s")

"""Track argument strengths across a dialogue and check safety and liveness.

A dialogue (chain) is a sequence of graphs.  Here each step expands the
previous one, which classifies as a *normal* expansion chain: every new
relation touches a newly added argument.  Against a justification
threshold t we then ask:

  strong safety  -- does every topic stay >= t at every step?
  weak safety    -- is every topic >= t at the final step?
  liveness       -- does every topic cross t at least once (fluctuate)?
"""

from qbag import (
    SLFQuery,
    build_chain,
    build_qbag,
    evaluate_chain,
    fluctuation_count,
    is_expansion_chain,
    is_live,
    is_normal_expansion_chain,
    is_strongly_safe,
    is_weak_expansion_chain,
    is_weakly_safe,
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
chain = build_chain(steps)

print("chain classification:")
print(f"  expansion chain: {is_expansion_chain(chain)}")
print(f"  normal expansion: {is_normal_expansion_chain(chain)}")
print(f"  weak expansion:   {is_weak_expansion_chain(chain)}  (d reaches old arguments)")

matrix = evaluate_chain(chain)
print("\nfinal strengths per step:")
for x in "abc":
    cells = "  ".join(f"{v:6.4g}" for v in matrix.trajectory(x))
    print(f"  {x}: {cells}")

for t in (0.1, 0.2):
    print(f"\nthreshold t = {t}:")
    for topic in "abc":
        q = SLFQuery(topics=frozenset(topic), threshold=t)
        print(
            f"  {{{topic}}}: strongly safe {str(is_strongly_safe(matrix, q)):5}"
            f"  weakly safe {str(is_weakly_safe(matrix, q)):5}"
            f"  fluctuations {fluctuation_count(matrix, topic, t)}"
            f"  live {is_live(matrix, q)}"
        )

print(
    """
At t = 0.1, c never moves from 0.2, so it is strongly safe and shows no
fluctuations; b dips to 0.0 in the middle step and recovers, making it
weakly safe and live.  A topic can never be both strongly safe and live:
liveness is exactly the failure mode of strong safety.
"""
)

"""Quantitative bipolar argumentation graphs (QBAGs) and structural queries.

A QBAG is a set of arguments, an initial strength for each argument in
[0, 1], and two disjoint binary relations over the arguments: attacks and
supports.  Everything in this module is a pure function over immutable
values; graphs can be shared freely between threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    CyclicGraph,
    DanglingEndpoint,
    DuplicateArgument,
    InvalidArgumentId,
    RelationOverlap,
    StrengthOutOfRange,
    UnknownArgument,
)

Edge = tuple[str, str]


@dataclass(frozen=True, eq=True)
class QBAG:
    """Arguments with initial strengths plus attack and support relations.

    Instances are immutable; use :func:`build_qbag` rather than the raw
    constructor so the invariants (disjoint relations, declared endpoints,
    strengths in range) are enforced.
    """

    args: frozenset[str]
    tau: dict[str, float]
    att: frozenset[Edge]
    supp: frozenset[Edge]

    def __repr__(self) -> str:
        return (
            f"QBAG(args={sorted(self.args)}, "
            f"att={sorted(self.att)}, supp={sorted(self.supp)})"
        )


def validate_strength(value: float, owner: str = "strength") -> float:
    """Coerce to float and check membership in the closed unit interval."""
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise StrengthOutOfRange(f"{owner}: {value!r} is not a number") from None
    if not 0.0 <= value <= 1.0:
        raise StrengthOutOfRange(f"{owner}: {value!r} outside [0, 1]")
    return value


def validate_argument_id(arg: object) -> str:
    if not isinstance(arg, str) or not arg:
        raise InvalidArgumentId(f"argument id must be a non-empty string, got {arg!r}")
    if any(ch.isspace() for ch in arg) or "," in arg:
        raise InvalidArgumentId(f"argument id {arg!r} contains whitespace or a comma")
    return arg


def build_qbag(
    args: Iterable[tuple[str, float]],
    attacks: Iterable[Edge] = (),
    supports: Iterable[Edge] = (),
) -> QBAG:
    """Validate and build a QBAG.

    Raises DuplicateArgument, DanglingEndpoint, RelationOverlap,
    StrengthOutOfRange, or InvalidArgumentId on bad input.  Self-loops are
    structurally allowed here; they are cycles and get rejected at
    evaluation time.
    """
    tau: dict[str, float] = {}
    for arg, strength in args:
        arg = validate_argument_id(arg)
        if arg in tau:
            raise DuplicateArgument(f"argument {arg!r} declared twice")
        tau[arg] = validate_strength(strength, owner=f"initial strength of {arg!r}")
    declared = frozenset(tau)

    att = frozenset((str(s), str(t)) for s, t in attacks)
    supp = frozenset((str(s), str(t)) for s, t in supports)
    for name, relation in (("attacks", att), ("supports", supp)):
        for pair in relation:
            for endpoint in pair:
                if endpoint not in declared:
                    raise DanglingEndpoint(
                        f"{name} pair {pair!r} references undeclared argument {endpoint!r}"
                    )
    overlap = att & supp
    if overlap:
        raise RelationOverlap(f"pairs in both attacks and supports: {sorted(overlap)}")

    return QBAG(args=declared, tau=tau, att=att, supp=supp)


def _require_argument(g: QBAG, x: str) -> None:
    if x not in g.args:
        raise UnknownArgument(f"argument {x!r} not in graph")


def attackers(g: QBAG, x: str) -> set[str]:
    """The set of arguments attacking x."""
    _require_argument(g, x)
    return {a for (a, b) in g.att if b == x}


def supporters(g: QBAG, x: str) -> set[str]:
    """The set of arguments supporting x."""
    _require_argument(g, x)
    return {a for (a, b) in g.supp if b == x}


def _successors(g: QBAG) -> dict[str, list[str]]:
    adj: dict[str, set[str]] = {x: set() for x in g.args}
    for s, t in g.att:
        adj[s].add(t)
    for s, t in g.supp:
        adj[s].add(t)
    return {x: sorted(adj[x]) for x in adj}


def reaches(g: QBAG, x: str, y: str) -> bool:
    """True iff a directed path of length >= 1 leads from x to y."""
    _require_argument(g, x)
    _require_argument(g, y)
    adj = _successors(g)
    seen: set[str] = set()
    frontier = deque(adj[x])
    while frontier:
        node = frontier.popleft()
        if node == y:
            return True
        if node in seen:
            continue
        seen.add(node)
        frontier.extend(adj[node])
    return False


def is_acyclic(g: QBAG) -> bool:
    """True iff no argument can reach itself."""
    return all(not reaches(g, x, x) for x in g.args)


def restrict(g: QBAG, keep: Iterable[str]) -> QBAG:
    """The restriction of g to the given argument subset."""
    keep = set(keep)
    for x in keep:
        _require_argument(g, x)
    return QBAG(
        args=frozenset(keep),
        tau={x: g.tau[x] for x in keep},
        att=frozenset(p for p in g.att if p[0] in keep and p[1] in keep),
        supp=frozenset(p for p in g.supp if p[0] in keep and p[1] in keep),
    )


def is_sub_qbag(small: QBAG, large: QBAG) -> bool:
    """Containment: arguments, relations, and initial strengths all carry over."""
    return (
        small.args <= large.args
        and small.att <= large.att
        and small.supp <= large.supp
        and all(small.tau[x] == large.tau[x] for x in small.args)
    )


def topological_order(g: QBAG) -> list[str]:
    """A deterministic topological order of the arguments.

    Reverse post-order of a depth-first traversal that visits roots and
    successors in ascending id order.  Every edge source precedes its
    target.  Raises CyclicGraph when the graph contains a cycle
    (including self-loops).
    """
    adj = _successors(g)
    WHITE, GRAY, BLACK = 0, 1, 2
    state = dict.fromkeys(g.args, WHITE)
    finished: list[str] = []
    for root in sorted(g.args):
        if state[root] != WHITE:
            continue
        stack: list[tuple[str, Iterable[str]]] = [(root, iter(adj[root]))]
        state[root] = GRAY
        while stack:
            node, children = stack[-1]
            advanced = False
            for child in children:
                if state[child] == GRAY:
                    raise CyclicGraph(f"cycle through argument {child!r}")
                if state[child] == WHITE:
                    state[child] = GRAY
                    stack.append((child, iter(adj[child])))
                    advanced = True
                    break
            if not advanced:
                state[node] = BLACK
                finished.append(node)
                stack.pop()
    finished.reverse()
    return finished

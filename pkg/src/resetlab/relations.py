"""Binary relations over {1, ..., n} as digraphs: strong connectivity,
cyclic parts, and the increasing pair chain of a one-point automaton.

For a one-point singular f with duplicate state d and excluded states
e_1, ..., e_{k-1}, the chain starts from the seed pairs (e_i, d) and grows
by applying the permutation generators componentwise; level m holds exactly
the images of the seeds under group elements of word length <= m.  The
chain stabilizes at the group closure of the seeds (the singular relation),
and ``msc`` is the first level that is strongly connected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Optional

from .errors import DiagonalPairError, DimensionError, DomainError
from .transform import Transformation, one_point_profile

if TYPE_CHECKING:  # pragma: no cover
    from .automaton import Automaton
    from .groups import PermutationSet


@dataclass(frozen=True)
class BinaryRelation:
    """A set of ordered pairs (s, t) with s != t, over states 1..n."""

    n: int
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        for s, t in self.pairs:
            if not (1 <= s <= self.n and 1 <= t <= self.n):
                raise DomainError(f"pair ({s},{t}) outside 1..{self.n}")
            if s == t:
                raise DiagonalPairError(f"diagonal pair ({s},{t}) not allowed")

    @classmethod
    def of(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "BinaryRelation":
        return cls(n, frozenset((int(s), int(t)) for s, t in pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair) -> bool:
        return tuple(pair) in self.pairs

    def sorted_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.pairs))

    def issubset(self, other: "BinaryRelation") -> bool:
        if self.n != other.n:
            raise DimensionError("relations on different universes")
        return self.pairs <= other.pairs

    def union(self, other: "BinaryRelation") -> "BinaryRelation":
        if self.n != other.n:
            raise DimensionError("relations on different universes")
        return BinaryRelation(self.n, self.pairs | other.pairs)

    def __repr__(self):
        inner = ",".join(f"({s},{t})" for s, t in self.sorted_pairs())
        return "{" + inner + "}" + f"/{self.n}"


def _successors(n: int, pairs) -> list[list[int]]:
    out: list[list[int]] = [[] for _ in range(n + 1)]
    for s, t in pairs:
        out[s].append(t)
    return out


def strongly_connected_components(n: int, pairs) -> list[int]:
    """Component id per state (1-indexed list entry; entry 0 unused).

    Iterative Tarjan; ids are assigned in completion order, so they carry
    no ordering guarantee beyond being distinct per component.
    """
    out = _successors(n, pairs)
    index = [0] * (n + 1)  # 0 = unvisited; stored value = order + 1
    low = [0] * (n + 1)
    comp = [-1] * (n + 1)
    on_stack = [False] * (n + 1)
    stack: list[int] = []
    counter = 1
    ncomp = 0
    for root in range(1, n + 1):
        if index[root]:
            continue
        work = [(root, 0)]
        while work:
            v, ei = work.pop()
            if ei == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            while ei < len(out[v]):
                w = out[v][ei]
                ei += 1
                if not index[w]:
                    work.append((v, ei))
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comp


def is_strongly_connected(rho: BinaryRelation) -> bool:
    """Whether the transitive closure of rho is all of S x S.

    Equivalently: the digraph (S, rho) is one strongly connected component
    covering every state.  The single-state universe counts as strongly
    connected (degenerate case; the formal definition needs n > 2).
    """
    if rho.n == 1:
        return True
    if not rho.pairs:
        return False
    comp = strongly_connected_components(rho.n, rho.pairs)
    first = comp[1]
    return all(c == first for c in comp[1:])


def cyclic_part(rho: BinaryRelation) -> BinaryRelation:
    """The arcs of rho that lie on some cycle: both endpoints share a
    strongly connected component."""
    comp = strongly_connected_components(rho.n, rho.pairs)
    return BinaryRelation(rho.n, frozenset((s, t) for s, t in rho.pairs if comp[s] == comp[t]))


@dataclass(frozen=True)
class PiChain:
    """The increasing pair chain of a one-point automaton.

    ``relations[m]`` is level m; the list stops at the first level equal to
    ``closure`` (the group closure of the seed pairs).  ``msc`` is the first
    strongly connected level, or None when the closure itself is not
    strongly connected.
    """

    relations: tuple[BinaryRelation, ...]
    closure: BinaryRelation
    msc: Optional[int]


def pi_chain(f: Transformation, Y: "PermutationSet") -> PiChain:
    """Build the pair chain seeded by (excluded state, duplicate state)
    pairs of f, grown componentwise by the generators of Y."""
    if f.n != Y.n:
        raise DimensionError(f"singular on {f.n} states, permutations on {Y.n}")
    prof = one_point_profile(f)
    d = prof.duplicate
    current = frozenset((e, d) for e in prof.excluded.members())
    levels = [BinaryRelation(f.n, current)]
    gens = [g.images for g in Y.perms]
    while True:
        grown = set(current)
        for s, t in current:
            for img in gens:
                grown.add((img[s - 1], img[t - 1]))
        nxt = frozenset(grown)
        if nxt == current:
            break
        current = nxt
        levels.append(BinaryRelation(f.n, current))
    closure = levels[-1]
    msc = None
    if is_strongly_connected(closure):
        for m, rel in enumerate(levels):
            if is_strongly_connected(rel):
                msc = m
                break
    return PiChain(relations=tuple(levels), closure=closure, msc=msc)


def msc(automaton: "Automaton") -> Optional[int]:
    """First strongly connected chain level of a one-point automaton, or
    None when the chain closure is not strongly connected."""
    singulars = [t for _, t in automaton.generators if not t.is_permutation]
    if len(singulars) != 1:
        raise DomainError(
            f"need exactly one singular generator, found {len(singulars)}"
        )
    from .groups import PermutationSet

    named_perms = [(name, t) for name, t in automaton.generators if t.is_permutation]
    Y = PermutationSet.of(automaton.n, named_perms)
    return pi_chain(singulars[0], Y).msc

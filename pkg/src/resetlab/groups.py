"""Permutation groups on the state set, given by generators: orbits,
orbitals (orbits of the componentwise action on off-diagonal pairs),
group closures of relations, and two independent primitivity tests.

A group is primitive when its only congruences (invariant equivalences)
are the diagonal and the full square.  The strong-connectivity test says:
a transitive group is primitive iff every orbital digraph is strongly
connected.  The block-system oracle checks instead that the smallest
congruence containing any single pair is the full square; both routes
must agree, and primitivity implies transitivity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DimensionError, DomainError
from .relations import BinaryRelation, is_strongly_connected
from .transform import StateSet, Transformation

HIGMAN_SIMS = "higman-sims"
BLOCK_ORACLE = "block-oracle"


@dataclass(frozen=True)
class PermutationSet:
    """An ordered list of named permutations of {1, ..., n}.

    Declaration order is meaningful (it defines word-length tie-breaking);
    inverses are materialized up front so closure walks never search.
    """

    n: int
    names: tuple[str, ...]
    perms: tuple[Transformation, ...]
    inverses: tuple[Transformation, ...] = field(compare=False, repr=False)

    def __post_init__(self):
        if len(self.names) != len(self.perms):
            raise DomainError("names and permutations must align")
        if len(set(self.names)) != len(self.names):
            raise DomainError("generator names must be unique")
        for name, p in zip(self.names, self.perms):
            if p.n != self.n:
                raise DimensionError(f"generator {name} is on {p.n} states, expected {self.n}")
            if not p.is_permutation:
                raise DomainError(f"generator {name} is not a permutation")

    @classmethod
    def of(cls, n: int, named_perms: Iterable[tuple[str, Transformation]]) -> "PermutationSet":
        named = tuple(named_perms)
        perms = tuple(t for _, t in named)
        return cls(
            n=n,
            names=tuple(name for name, _ in named),
            perms=perms,
            inverses=tuple(t.inverse() for t in perms),
        )

    def __len__(self) -> int:
        return len(self.perms)


def orbits(Y: PermutationSet) -> tuple[StateSet, ...]:
    """The finest partition of states closed under all generators and their
    inverses, ordered by smallest member.  One block iff the group is
    transitive."""
    n = Y.n
    seen = [False] * (n + 1)
    blocks = []
    walk = list(Y.perms) + list(Y.inverses)
    for root in range(1, n + 1):
        if seen[root]:
            continue
        orbit = [root]
        seen[root] = True
        stack = [root]
        while stack:
            s = stack.pop()
            for g in walk:
                t = g(s)
                if not seen[t]:
                    seen[t] = True
                    orbit.append(t)
                    stack.append(t)
        blocks.append(StateSet.of(n, orbit))
    return tuple(blocks)


def is_transitive(Y: PermutationSet) -> bool:
    return len(orbits(Y)) == 1


def group_closure(Y: PermutationSet, rho: BinaryRelation) -> BinaryRelation:
    """Smallest superset of rho closed under the componentwise action of
    every generator and its inverse; the union of the orbitals of rho's
    pairs."""
    if Y.n != rho.n:
        raise DimensionError(f"relation on {rho.n} states, permutations on {Y.n}")
    closed = set(rho.pairs)
    stack = list(rho.pairs)
    walk = [g.images for g in Y.perms] + [g.images for g in Y.inverses]
    while stack:
        s, t = stack.pop()
        for img in walk:
            pair = (img[s - 1], img[t - 1])
            if pair not in closed:
                closed.add(pair)
                stack.append(pair)
    return BinaryRelation(rho.n, frozenset(closed))


def orbitals(Y: PermutationSet) -> tuple[BinaryRelation, ...]:
    """All orbits of the pair action, seeded in lexicographic pair order."""
    n = Y.n
    seen: set[tuple[int, int]] = set()
    result = []
    for s in range(1, n + 1):
        for t in range(1, n + 1):
            if s == t or (s, t) in seen:
                continue
            orb = group_closure(Y, BinaryRelation.of(n, [(s, t)]))
            seen |= orb.pairs
            result.append(orb)
    return tuple(result)


def congruence_closure(Y: PermutationSet, s: int, t: int) -> tuple[StateSet, ...]:
    """Blocks of the smallest Y-invariant equivalence merging s and t.

    Union-find over states; whenever u and v merge, (u)g and (v)g merge for
    every generator.  At the fixpoint the partition is also closed under
    inverses, so generators suffice.
    """
    n = Y.n
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue = [(s, t)]
    while queue:
        a, b = queue.pop()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        parent[rb] = ra
        for g in Y.perms:
            queue.append((g(a), g(b)))
    blocks: dict[int, list[int]] = {}
    for x in range(1, n + 1):
        blocks.setdefault(find(x), []).append(x)
    return tuple(StateSet.of(n, b) for b in sorted(blocks.values()))


def nontrivial_block_system(Y: PermutationSet) -> tuple[StateSet, ...] | None:
    """A proper non-diagonal congruence if one exists, else None.

    Scans seed pairs in lexicographic order, so the reported system is
    deterministic.
    """
    n = Y.n
    for s in range(1, n + 1):
        for t in range(s + 1, n + 1):
            blocks = congruence_closure(Y, s, t)
            if len(blocks) > 1:
                return blocks
    return None


def is_primitive(Y: PermutationSet, method: str = HIGMAN_SIMS) -> bool:
    """Primitivity of the group generated by Y; requires n > 2.

    ``higman-sims``: transitive and every orbital digraph strongly
    connected.  ``block-oracle``: every pair's congruence closure is the
    full square.  An intransitive group reports False under both (its
    orbit partition is already a proper congruence).
    """
    if Y.n <= 2:
        raise DomainError(f"primitivity needs more than 2 states, got {Y.n}")
    if method == HIGMAN_SIMS:
        if not is_transitive(Y):
            return False
        return all(is_strongly_connected(orb) for orb in orbitals(Y))
    if method == BLOCK_ORACLE:
        return nontrivial_block_system(Y) is None
    raise DomainError(f"unknown primitivity method {method!r}")


def permutation_set_from_maps(n: int, maps: Sequence[Transformation], prefix: str = "g") -> PermutationSet:
    """Wrap anonymous permutations with generated names g0, g1, ..."""
    return PermutationSet.of(n, [(f"{prefix}{i}", t) for i, t in enumerate(maps)])

"""Transition monoids made explicit: breadth-first closure with shortest
decomposition lengths, monoid-level invariants, the reset threshold over
generating sets, the built-in generator families, and the isomorphism of
the sink family's monoid with the partial bijections.

The monoid reset threshold maximizes the automaton reset threshold over
generating sets; adding generators never increases it, so only
inclusion-minimal generating sets need enumerating.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import config
from ._kernels import impl as _k
from .automaton import Automaton, Word, exact_reset_threshold
from .errors import CapacityError, DomainError
from .transform import Transformation, compose, identity, map_profile

CERNY = "cerny"
RN = "rn"


@dataclass(frozen=True, eq=False)
class MonoidTable:
    """Elements of a transition monoid with shortest decomposition lengths
    over the originating generators (the identity always has length 0)."""

    elements: tuple[Transformation, ...]
    lengths: tuple[int, ...]
    origin: Automaton
    index: dict[tuple[int, ...], int] = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.elements)

    def index_of(self, t: Transformation) -> int:
        try:
            return self.index[t.images]
        except KeyError:
            raise DomainError(f"{t!r} is not an element of this monoid") from None

    def __contains__(self, t: Transformation) -> bool:
        return t.images in self.index

    def length_of(self, t: Transformation) -> int:
        return self.lengths[self.index_of(t)]

    def multiplication_table(self) -> np.ndarray:
        """index of elements[i] * elements[j], as an int32 matrix."""
        m = self.size
        table = np.empty((m, m), np.int32)
        for i, f in enumerate(self.elements):
            for j, g in enumerate(self.elements):
                table[i, j] = self.index[compose(f, g).images]
        return table


def generate_monoid(a: Automaton, cap: Optional[int] = None) -> MonoidTable:
    """Breadth-first closure of the generators under composition, recording
    first-reach word length; the identity is adjoined with length 0."""
    if cap is None:
        cap = config.gate("monoid_cap")
    if cap <= 0:
        raise DomainError("cap must be positive")
    ident = identity(a.n)
    elements = [ident]
    lengths = [0]
    index = {ident.images: 0}
    frontier = [ident]
    gens = a.maps
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for f in frontier:
            for g in gens:
                h = compose(f, g)
                if h.images not in index:
                    if len(elements) >= cap:
                        raise CapacityError(
                            f"monoid closure exceeded cap {cap}",
                            partial_count=len(elements),
                        )
                    index[h.images] = len(elements)
                    elements.append(h)
                    lengths.append(depth)
                    nxt.append(h)
        frontier = nxt
    return MonoidTable(
        elements=tuple(elements),
        lengths=tuple(lengths),
        origin=a,
        index=index,
    )


@dataclass(frozen=True)
class MonoidStats:
    size: int
    sr: Optional[int]
    has_one_point_of_rank_sr: bool
    synchronizing: bool


def monoid_stats(m: MonoidTable) -> MonoidStats:
    """Size, maximal singular rank (None for groups), whether a one-point
    map attains it, and whether a constant is present."""
    sr: Optional[int] = None
    has_one_point = False
    synchronizing = False
    for t in m.elements:
        if t.rank == 1:
            synchronizing = True
        if t.is_permutation:
            continue
        if sr is None or t.rank > sr:
            sr = t.rank
            has_one_point = t.kernel_type().is_one_point
        elif t.rank == sr and not has_one_point:
            has_one_point = t.kernel_type().is_one_point
    return MonoidStats(
        size=m.size,
        sr=sr,
        has_one_point_of_rank_sr=has_one_point,
        synchronizing=synchronizing,
    )


class _GenSetSearch:
    """Depth-first enumeration of inclusion-minimal generating sets.

    Candidates are the non-identity elements ordered by rank descending;
    a branch dies as soon as the closure of the chosen elements plus the
    whole remainder misses the monoid.
    """

    def __init__(self, m: MonoidTable):
        self.m = m
        self.table = m.multiplication_table()
        self.id_idx = m.index_of(identity(m.origin.n))
        order = sorted(
            (i for i in range(m.size) if i != self.id_idx),
            key=lambda i: (-m.elements[i].rank, m.elements[i].images),
        )
        self.candidates = order
        self.full = (1 << m.size) - 1
        self._closure_memo: dict[int, int] = {}
        self.results: list[tuple[int, ...]] = []

    def closure(self, mask: int) -> int:
        cached = self._closure_memo.get(mask)
        if cached is not None:
            return cached
        closed = mask | (1 << self.id_idx)
        members = [i for i in range(self.m.size) if closed >> i & 1]
        work = list(members)
        table = self.table
        while work:
            a = work.pop()
            for b in list(members):
                for c in (int(table[a, b]), int(table[b, a])):
                    if not closed >> c & 1:
                        closed |= 1 << c
                        members.append(c)
                        work.append(c)
        self._closure_memo[mask] = closed
        return closed

    def _suffix_mask(self, i: int) -> int:
        mask = 0
        for j in self.candidates[i:]:
            mask |= 1 << j
        return mask

    def run(self) -> list[tuple[int, ...]]:
        suffix = [self._suffix_mask(i) for i in range(len(self.candidates) + 1)]

        def dfs(i: int, chosen: tuple[int, ...], chosen_mask: int):
            if self.closure(chosen_mask) == self.full:
                for x in chosen:
                    if self.closure(chosen_mask & ~(1 << x)) == self.full:
                        return
                self.results.append(chosen)
                return
            if i == len(self.candidates):
                return
            if self.closure(chosen_mask | suffix[i]) != self.full:
                return
            c = self.candidates[i]
            dfs(i + 1, chosen + (c,), chosen_mask | (1 << c))
            dfs(i + 1, chosen, chosen_mask)

        dfs(0, (), 0)
        return self.results


def minimal_generating_sets(m: MonoidTable, gate: Optional[int] = None) -> list[tuple[Transformation, ...]]:
    """All inclusion-minimal generating sets (identity excluded; it is
    implicitly adjoined).  Gated by element count."""
    if gate is None:
        gate = config.gate("genset_max")
    if m.size > gate:
        raise CapacityError(
            f"generating-set enumeration capped at |M| <= {gate}, monoid has {m.size}",
            partial_count=m.size,
        )
    search = _GenSetSearch(m)
    return [tuple(m.elements[i] for i in idxs) for idxs in search.run()]


def _automaton_from_elements(n: int, elements) -> Automaton:
    return Automaton.of(n, [(f"m{i}", t) for i, t in enumerate(elements)])


def monoid_reset_threshold(m: MonoidTable, gate: Optional[int] = None) -> int:
    """Max of the automaton reset threshold over all minimal generating
    sets of the monoid."""
    if not monoid_stats(m).synchronizing:
        raise DomainError("monoid has no constant; reset threshold undefined")
    best = -1
    for gens in minimal_generating_sets(m, gate=gate):
        result = exact_reset_threshold(_automaton_from_elements(m.origin.n, gens))
        if result is None:  # cannot happen: the monoid is synchronizing
            raise DomainError("generating set lost synchronizability")
        best = max(best, result[0])
    return best


def lemma15_check(m: MonoidTable, gate: Optional[int] = None) -> Optional[bool]:
    """Whether every minimal generating set contains a one-point map of
    maximal singular rank.  None when the monoid itself has no such map
    (not applicable); False is a counterexample alarm."""
    stats = monoid_stats(m)
    if stats.sr is None or not stats.has_one_point_of_rank_sr:
        return None
    for gens in minimal_generating_sets(m, gate=gate):
        if not any(
            t.rank == stats.sr and not t.is_permutation and t.kernel_type().is_one_point
            for t in gens
        ):
            return False
    return True


def build_family(kind: str, n: int) -> Automaton:
    """Built-in families on states 1..n.

    ``cerny``: the two-generator family with a full cycle a (i -> i+1 mod n)
    and b merging state 1 into 2, identity elsewhere.  ``rn``: the sink
    family whose transition monoid is the partial-bijection monoid of an
    (n-1)-set: x1 sends state 2 to the sink state 1 and fixes the rest,
    x2..x_{n-1} are the adjacent transpositions on 2..n.
    """
    if n < 2:
        raise DomainError(f"family {kind!r} needs n >= 2, got {n}")
    if kind == CERNY:
        a = Transformation(n, tuple(i % n + 1 for i in range(1, n + 1)))
        b_images = list(range(1, n + 1))
        b_images[0] = 2
        b = Transformation(n, tuple(b_images))
        return Automaton.of(n, [("a", a), ("b", b)])
    if kind == RN:
        gens = []
        x1 = list(range(1, n + 1))
        x1[1] = 1
        gens.append(("x1", Transformation(n, tuple(x1))))
        for i in range(2, n):
            imgs = list(range(1, n + 1))
            imgs[i - 1], imgs[i] = imgs[i], imgs[i - 1]
            gens.append((f"x{i}", Transformation(n, tuple(imgs))))
        return Automaton.of(n, gens)
    raise DomainError(f"unknown family {kind!r}")


@dataclass(frozen=True)
class PartialBijection:
    """A partial injective map on {1..m}; entry 0 means undefined."""

    m: int
    mapping: tuple[int, ...]

    def __post_init__(self):
        if len(self.mapping) != self.m:
            raise DomainError(f"expected {self.m} entries, got {len(self.mapping)}")
        seen = set()
        for v in self.mapping:
            if not 0 <= v <= self.m:
                raise DomainError(f"value {v} outside 0..{self.m}")
            if v:
                if v in seen:
                    raise DomainError("mapping is not injective")
                seen.add(v)

    @classmethod
    def identity(cls, m: int) -> "PartialBijection":
        return cls(m, tuple(range(1, m + 1)))

    @classmethod
    def empty(cls, m: int) -> "PartialBijection":
        return cls(m, (0,) * m)

    def __call__(self, s: int) -> int:
        return self.mapping[s - 1]

    def compose(self, other: "PartialBijection") -> "PartialBijection":
        """Relational composition, self first: defined at s iff both legs
        are defined along the way."""
        if self.m != other.m:
            raise DomainError("cannot compose partial bijections on different sets")
        out = []
        for v in self.mapping:
            out.append(other.mapping[v - 1] if v else 0)
        return PartialBijection(self.m, tuple(out))

    def __mul__(self, other: "PartialBijection") -> "PartialBijection":
        return self.compose(other)

    @property
    def domain_size(self) -> int:
        return sum(1 for v in self.mapping if v)


def enumerate_partial_bijections(m: int) -> list[PartialBijection]:
    """All partial bijections of {1..m}: sum over k of C(m,k)^2 * k!."""
    result = []
    universe = range(1, m + 1)
    for k in range(m + 1):
        for dom in itertools.combinations(universe, k):
            for img in itertools.permutations(universe, k):
                mapping = [0] * m
                for s, v in zip(dom, img):
                    mapping[s - 1] = v
                result.append(PartialBijection(m, tuple(mapping)))
    return result


def restrict_to_partial(t: Transformation, sink: int = 1) -> PartialBijection:
    """Restriction of a sink-fixing map away from the sink's preimage,
    relabelled onto {1..n-1} (state s corresponds to s-1)."""
    if t(sink) != sink:
        raise DomainError(f"map does not fix the sink state {sink}")
    m = t.n - 1
    mapping = []
    for s in range(2, t.n + 1):
        v = t(s)
        mapping.append(0 if v == sink else v - 1)
    return PartialBijection(m, tuple(mapping))


@dataclass(frozen=True)
class Theorem17Report:
    n: int
    monoid_size: int
    inverse_monoid_size: int
    phi_is_isomorphism: bool
    rt: int
    rt_expected: int


def verify_theorem17(n: int, gate: Optional[int] = None) -> Theorem17Report:
    """Check that the sink family's transition monoid is isomorphic, via
    restriction away from the sink, to the partial bijections of an
    (n-1)-set, and that its reset threshold is n(n-1)/2."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if gate is None:
        gate = config.gate("thm17_max_n")
    if n > gate:
        raise CapacityError(f"theorem-17 verification capped at n <= {gate}, got {n}")
    a = build_family(RN, n)
    m = generate_monoid(a)
    phi = [restrict_to_partial(t) for t in m.elements]
    injective = len({p.mapping for p in phi}) == m.size
    oracle = enumerate_partial_bijections(n - 1)
    surjective = {p.mapping for p in phi} == {p.mapping for p in oracle}
    elems = np.empty((m.size, n), np.int64)
    for i, t in enumerate(m.elements):
        elems[i] = [v - 1 for v in t.images]
    morphism_ok = int(_k.thm17_morphism_violations(elems, n)) == 0
    result = exact_reset_threshold(a)
    if result is None:
        raise DomainError("sink family lost synchronizability")
    return Theorem17Report(
        n=n,
        monoid_size=m.size,
        inverse_monoid_size=len(oracle),
        phi_is_isomorphism=injective and surjective and morphism_ok,
        rt=result[0],
        rt_expected=n * (n - 1) // 2,
    )

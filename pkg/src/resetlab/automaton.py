"""Monoidal semiautomata: a state count plus an ordered list of named
generator maps.  Classification, exact and constructive reset words,
augment thresholds, image reachability, and the bound report.

Generator declaration order is part of the automaton: every BFS breaks
ties in that order, so reported words are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import config
from ._kernels import impl as _k
from .errors import DimensionError, DomainError, ScopeCappedError
from .groups import PermutationSet, is_primitive, is_transitive
from .relations import is_strongly_connected, pi_chain
from .transform import StateSet, Transformation, compose, identity, one_point_profile, preimage


@dataclass(frozen=True)
class Word:
    """A sequence of generator names; the empty word induces the identity."""

    letters: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(self.letters) if self.letters else "<empty>"


@dataclass(frozen=True)
class Automaton:
    n: int
    generators: tuple[tuple[str, Transformation], ...]

    def __post_init__(self):
        names = [name for name, _ in self.generators]
        if len(set(names)) != len(names):
            raise DomainError("generator names must be unique")
        for name, t in self.generators:
            if t.n != self.n:
                raise DimensionError(f"generator {name} is on {t.n} states, automaton on {self.n}")

    @classmethod
    def of(cls, n: int, generators) -> "Automaton":
        return cls(n, tuple((name, t) for name, t in generators))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.generators)

    @property
    def maps(self) -> tuple[Transformation, ...]:
        return tuple(t for _, t in self.generators)

    def generator(self, name: str) -> Transformation:
        for gname, t in self.generators:
            if gname == name:
                return t
        raise DomainError(f"no generator named {name!r}")

    def word_map(self, word: Word) -> Transformation:
        """The map induced by a word (letters applied left to right)."""
        result = identity(self.n)
        for letter in word.letters:
            result = compose(result, self.generator(letter))
        return result

    def images_array(self) -> np.ndarray:
        """0-indexed generator rows for the kernels."""
        arr = np.empty((len(self.generators), self.n), np.int64)
        for i, (_, t) in enumerate(self.generators):
            arr[i] = [v - 1 for v in t.images]
        return arr


@dataclass(frozen=True)
class Classification:
    synchronizing: bool
    transitive: bool
    directable: bool
    one_point: bool
    weakly_singular: bool
    permutation_part: PermutationSet
    singular_part: tuple[Transformation, ...]


def classify(a: Automaton) -> Classification:
    """Classify an automaton.

    Synchronizability uses the pair-merge criterion (every unordered pair
    of states can reach a directly merging pair), not monoid enumeration;
    transitivity is strong connectivity of the one-letter digraph; and
    directable is their conjunction.  One-point means exactly one singular
    generator which is a one-point singular, the rest permutations;
    weakly singular narrows that to a simple singular.
    """
    n = a.n
    perm_named = [(name, t) for name, t in a.generators if t.is_permutation]
    singulars = tuple(t for _, t in a.generators if not t.is_permutation)
    if a.generators:
        arr = a.images_array()
        gcount = arr.shape[0]
        synchronizing = bool(_k._sync_pair_merge(arr, gcount, n))
        transitive = bool(_k._transitive_digraph(arr, gcount, n))
    else:
        synchronizing = n == 1
        transitive = n == 1
    one_point = len(singulars) == 1 and singulars[0].kernel_type().is_one_point
    weakly = one_point and singulars[0].corank == 1
    return Classification(
        synchronizing=synchronizing,
        transitive=transitive,
        directable=synchronizing and transitive,
        one_point=one_point,
        weakly_singular=weakly,
        permutation_part=PermutationSet.of(n, perm_named),
        singular_part=singulars,
    )


def _check_subset_gate(a: Automaton):
    limit = config.gate("subset_bfs_max_n")
    if a.n > limit:
        raise ScopeCappedError(
            f"subset search capped at n <= {limit}, automaton has n = {a.n}"
        )


def exact_reset_threshold(a: Automaton) -> Optional[tuple[int, Word]]:
    """Length and word of the shortest constant, by BFS over image subsets
    from the full set; None when the automaton is not synchronizing.  The
    word is the lexicographically least among the shortest (declaration
    order)."""
    _check_subset_gate(a)
    if not a.generators:
        return (0, Word(())) if a.n == 1 else None
    length, letters = _k.rt_bfs(a.images_array(), a.n)
    if length < 0:
        return None
    names = a.names
    return int(length), Word(tuple(names[i] for i in letters))


def augment_threshold(a: Automaton) -> Optional[int]:
    """Max over proper nonempty subsets T of the shortest word whose
    preimage of T is strictly larger; None as soon as one T has no
    augmenting word (the search is exhaustive per subset, independent of
    the classification route)."""
    limit = config.gate("at_exact_max_n")
    if a.n > limit:
        raise ScopeCappedError(
            f"exact augment threshold capped at n <= {limit}, automaton has n = {a.n}"
        )
    if a.n == 1:
        return 0
    if not a.generators:
        return None
    value = _k.at_exact(a.images_array(), a.n)
    return None if value < 0 else int(value)


def greedy_reset_word(a: Automaton) -> Optional[Word]:
    """A constant word built by the augmenting procedure: apply one merging
    generator, then repeatedly prepend a shortest augmenting word for the
    current preimage set.  None when the automaton is not directable.
    Length is at most at(A) * (n - 2) + 1."""
    _check_subset_gate(a)
    c = classify(a)
    if not c.directable:
        return None
    if a.n == 1:
        return Word(())
    arr = a.images_array()
    names = a.names
    fidx = next(i for i, t in enumerate(a.maps) if not t.is_permutation)
    f = a.maps[fidx]
    # duplicate state with the largest preimage class; smallest state on ties
    sizes: dict[int, int] = {}
    for v in f.images:
        sizes[v] = sizes.get(v, 0) + 1
    s1 = max(sorted(sizes), key=lambda s: sizes[s])
    current = preimage(f, StateSet.of(a.n, [s1]))
    letters = [names[fidx]]
    while not current.is_full:
        found, widx, result_mask = _k.augmenting_word_bfs(arr, a.n, current.mask)
        if not found:  # unreachable for directable input
            return None
        letters = [names[i] for i in widx] + letters
        current = StateSet(a.n, int(result_mask))
    return Word(tuple(letters))


@dataclass(frozen=True)
class ReachabilityResult:
    reachable_images: tuple[StateSet, ...]
    completely_reachable: bool

    @property
    def count(self) -> int:
        return len(self.reachable_images)


def reachability(a: Automaton) -> ReachabilityResult:
    """All image subsets (S)w over words w, by forward BFS from the full
    set; completely reachable iff every nonempty subset occurs."""
    _check_subset_gate(a)
    if not a.generators:
        masks = [(1 << a.n) - 1]
    else:
        masks = [int(m) for m in _k.reachable_masks(a.images_array(), a.n)]
    masks.sort(key=lambda m: (-m.bit_count(), m))
    images = tuple(StateSet(a.n, m) for m in masks)
    return ReachabilityResult(
        reachable_images=images,
        completely_reachable=len(masks) == (1 << a.n) - 1,
    )


def _witness_by_construction(a: Automaton, target: StateSet) -> Word:
    """Image witness for a weakly singular automaton with strongly
    connected chain closure, by the inductive construction: find a pair
    (p, q) of the closure entering the target, pull the target back along
    the pair's group word and the singular, and recurse on the larger set.
    """
    n = a.n
    names = a.names
    fidx = next(i for i, t in enumerate(a.maps) if not t.is_permutation)
    f = a.maps[fidx]
    prof = one_point_profile(f)
    d = prof.duplicate
    e = prof.excluded.members()[0]
    perm_named = [(name, t) for name, t in a.generators if t.is_permutation]
    # BFS over the pair action records a positive witness word per pair
    words: dict[tuple[int, int], tuple[str, ...]] = {(e, d): ()}
    frontier = [(e, d)]
    while frontier:
        nxt = []
        for pair in frontier:
            for name, g in perm_named:
                image = (g(pair[0]), g(pair[1]))
                if image not in words:
                    words[image] = words[pair] + (name,)
                    nxt.append(image)
        frontier = nxt
    letters: list[str] = []
    current = target
    while not current.is_full:
        chosen = None
        for p, q in sorted(words):
            if q in current and p not in current:
                chosen = (p, q)
                break
        if chosen is None:  # impossible for a strongly connected closure
            raise DomainError("chain closure is not strongly connected")
        gword = words[chosen]
        pulled = current
        for name in reversed(gword):
            pulled = preimage(a.generator(name), pulled)
        bigger = preimage(f, pulled)
        letters = [names[fidx], *gword, *letters]
        current = bigger
    return Word(tuple(letters))


def subset_witness_word(a: Automaton, target: StateSet) -> Optional[Word]:
    """A word w with (S)w = target, or None when the target is not an
    image.  Weakly singular automata with strongly connected chain closure
    take the inductive construction (never None there); everything else
    falls back to the image-subset BFS."""
    if target.n != a.n:
        raise DimensionError("target universe differs from the automaton")
    if target.is_empty:
        raise DomainError("the empty set is never an image of a total map")
    if target.is_full:
        return Word(())
    c = classify(a)
    if c.weakly_singular:
        singular = c.singular_part[0]
        chain = pi_chain(singular, c.permutation_part)
        if is_strongly_connected(chain.closure):
            return _witness_by_construction(a, target)
    _check_subset_gate(a)
    if not a.generators:
        return None
    found, letters = _k.witness_bfs(a.images_array(), a.n, target.mask)
    if not found:
        return None
    names = a.names
    return Word(tuple(names[i] for i in letters))


@dataclass(frozen=True)
class BoundsReport:
    n: int
    synchronizing: bool
    transitive: bool
    directable: bool
    is_one_point: bool
    group_transitive: Optional[bool]
    group_primitive: Optional[bool]
    pi_strongly_connected: Optional[bool]
    msc: Optional[int]
    msc_bound: int
    at: Optional[int]
    at_bound: Optional[int]
    rt_exact: Optional[int]
    rt_bound: int
    greedy_word_length: Optional[int]
    lemma3_bound: Optional[int]
    all_ok: bool
    notes: tuple[str, ...]


def verify_bounds(a: Automaton) -> BoundsReport:
    """Compute every applicable quantity and check the proved inequalities:
    chain level msc <= 2n-3, at <= msc+1 and rt <= 2(n-1)(n-2)+1 on
    one-point automata with transitive group and strongly connected chain
    closure, rt <= at*(n-2)+1 plus greedy-word consistency on directable
    automata.  Inapplicable fields are None and skipped."""
    n = a.n
    c = classify(a)
    notes: list[str] = []
    group_transitive = is_transitive(c.permutation_part)
    group_primitive: Optional[bool] = None
    if n > 2:
        group_primitive = is_primitive(c.permutation_part)
    pi_sc: Optional[bool] = None
    msc_val: Optional[int] = None
    if c.one_point:
        chain = pi_chain(c.singular_part[0], c.permutation_part)
        pi_sc = is_strongly_connected(chain.closure)
        msc_val = chain.msc
    rt_word = exact_reset_threshold(a)
    rt_exact = rt_word[0] if rt_word is not None else None
    if rt_exact is None:
        notes.append("not synchronizing")
    at_val: Optional[int] = None
    if n <= config.gate("at_exact_max_n"):
        at_val = augment_threshold(a)
    else:
        notes.append("at skipped: n exceeds the exact gate")
    greedy = greedy_reset_word(a)
    greedy_len = len(greedy) if greedy is not None else None
    msc_bound = 2 * n - 3
    rt_bound = 2 * (n - 1) * (n - 2) + 1
    at_bound = msc_val + 1 if msc_val is not None else None
    lemma3_bound = at_val * (n - 2) + 1 if at_val is not None else None
    ok = True
    if c.one_point and group_transitive and pi_sc:
        if msc_val is None or msc_val > msc_bound:
            ok = False
        if at_val is not None and msc_val is not None and at_val > msc_val + 1:
            ok = False
        if rt_exact is None or rt_exact > rt_bound:
            ok = False
    if c.directable and rt_exact is not None:
        if lemma3_bound is not None and rt_exact > lemma3_bound:
            ok = False
        if greedy_len is not None:
            if greedy_len < rt_exact:
                ok = False
            if lemma3_bound is not None and greedy_len > lemma3_bound:
                ok = False
    return BoundsReport(
        n=n,
        synchronizing=c.synchronizing,
        transitive=c.transitive,
        directable=c.directable,
        is_one_point=c.one_point,
        group_transitive=group_transitive,
        group_primitive=group_primitive,
        pi_strongly_connected=pi_sc,
        msc=msc_val,
        msc_bound=msc_bound,
        at=at_val,
        at_bound=at_bound,
        rt_exact=rt_exact,
        rt_bound=rt_bound,
        greedy_word_length=greedy_len,
        lemma3_bound=lemma3_bound,
        all_ok=ok,
        notes=tuple(notes),
    )

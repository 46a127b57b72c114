"""Exhaustive and sampled verification sweeps over small automata.

The sweeps drive the compiled kernels over every one-point singular and
every permutation set with at most two generators (or seeded random
instances above the exhaustive range) and count violations of the proved
inequalities: chain level at most 2n-3, augment threshold at most one more
than the chain level, reset threshold at most 2(n-1)(n-2)+1 and at most
at*(n-2)+1, the greedy word sandwiched between the exact threshold and the
latter bound, the cyclic-pair witness in level n-1, primitivity method
agreement, chain-closure strong connectivity under primitive groups, and
complete reachability for simple singulars under primitive groups.

State counts are small enough that instances are enumerated outright; the
n = 6 complete-reachability leg iterates one representative per conjugacy
class of the singular against every permutation pair, which covers the
full product space because every quantity checked is invariant under
simultaneous relabelling.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._kernels import impl as _k


@lru_cache(maxsize=None)
def all_permutations(n: int) -> np.ndarray:
    """All permutations of {0..n-1} as rows, in lexicographic order."""
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    perms.setflags(write=False)
    return perms


@lru_cache(maxsize=None)
def permutation_inverses(n: int) -> np.ndarray:
    perms = all_permutations(n)
    inv = np.empty_like(perms)
    rows = np.arange(perms.shape[0])[:, None]
    inv[rows, perms] = np.arange(n)[None, :]
    inv.setflags(write=False)
    return inv


@lru_cache(maxsize=None)
def generator_sets(n: int) -> np.ndarray:
    """All permutation sets with one or two distinct generators, as index
    pairs into ``all_permutations(n)`` (second entry -1 for singletons)."""
    p = all_permutations(n).shape[0]
    singles = [(i, -1) for i in range(p)]
    pairs = [(i, j) for i in range(p) for j in range(i + 1, p)]
    arr = np.array(singles + pairs, dtype=np.int64)
    arr.setflags(write=False)
    return arr


@lru_cache(maxsize=None)
def one_point_maps(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Every one-point singular on {0..n-1}: image rows, duplicate state,
    and excluded-set mask.  Constants are included (k = n)."""
    imgs = []
    dups = []
    emasks = []
    states = list(range(n))
    full = (1 << n) - 1
    for k in range(2, n + 1):
        for kernel_class in itertools.combinations(states, k):
            kc = set(kernel_class)
            rest = [s for s in states if s not in kc]
            for d in states:
                targets = [t for t in states if t != d]
                for assign in itertools.permutations(targets, len(rest)):
                    row = [0] * n
                    for s in kernel_class:
                        row[s] = d
                    used = 1 << d
                    for s, t in zip(rest, assign):
                        row[s] = t
                        used |= 1 << t
                    imgs.append(row)
                    dups.append(d)
                    emasks.append(full ^ used)
    order = np.lexsort(np.array(imgs, dtype=np.int64).T[::-1])
    imgs_arr = np.array(imgs, dtype=np.int64)[order]
    dups_arr = np.array(dups, dtype=np.int64)[order]
    emasks_arr = np.array(emasks, dtype=np.int64)[order]
    for a in (imgs_arr, dups_arr, emasks_arr):
        a.setflags(write=False)
    return imgs_arr, dups_arr, emasks_arr


def simple_maps(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """The simple singulars (k = 2): exactly one excluded state."""
    imgs, dups, emasks = one_point_maps(n)
    keep = np.array([int(m).bit_count() == 1 for m in emasks])
    return imgs[keep], dups[keep], emasks[keep]


def simple_map_class_representatives(n: int) -> np.ndarray:
    """One simple singular per conjugacy class (minimum base-n encoding
    over all relabellings); checking a representative settles its whole
    class for any relabelling-invariant property."""
    imgs, _, _ = simple_maps(n)
    keys = _k.canonical_min_keys(imgs, all_permutations(n), permutation_inverses(n), n)
    _, first = np.unique(np.asarray(keys), return_index=True)
    return imgs[np.sort(first)]


@dataclass(frozen=True)
class OnePointSweepReport:
    n: int
    y_sets: int
    y_transitive: int
    instances: int
    qualifying: int
    combos: int
    viol_msc_bound: int
    viol_at_vs_msc: int
    viol_rt_quadratic: int
    viol_rt_vs_at: int
    viol_greedy_low: int
    viol_greedy_high: int
    viol_cyclic_witness: int
    internal_errors: int

    @property
    def violations(self) -> int:
        return (
            self.viol_msc_bound
            + self.viol_at_vs_msc
            + self.viol_rt_quadratic
            + self.viol_rt_vs_at
            + self.viol_greedy_low
            + self.viol_greedy_high
            + self.viol_cyclic_witness
            + self.internal_errors
        )

    @property
    def ok(self) -> bool:
        return self.violations == 0


def _one_point_report(n: int, counters: np.ndarray) -> OnePointSweepReport:
    c = [int(v) for v in counters]
    return OnePointSweepReport(
        n=n,
        y_sets=c[_k.OP_Y_TOTAL],
        y_transitive=c[_k.OP_Y_TRANSITIVE],
        instances=c[_k.OP_INSTANCES],
        qualifying=c[_k.OP_QUALIFYING],
        combos=c[_k.OP_COMBOS],
        viol_msc_bound=c[_k.OP_VIOL_MSC],
        viol_at_vs_msc=c[_k.OP_VIOL_EQ9],
        viol_rt_quadratic=c[_k.OP_VIOL_COR10],
        viol_rt_vs_at=c[_k.OP_VIOL_LEMMA3],
        viol_greedy_low=c[_k.OP_VIOL_GREEDY_LOW],
        viol_greedy_high=c[_k.OP_VIOL_GREEDY_HIGH],
        viol_cyclic_witness=c[_k.OP_VIOL_LEMMA8],
        internal_errors=c[_k.OP_INTERNAL],
    )


def one_point_bounds_exhaustive(n: int) -> OnePointSweepReport:
    """Every one-point singular crossed with every 1- or 2-generator
    permutation set; bound checks on the instances whose group is
    transitive and whose chain closure is strongly connected."""
    imgs, dups, emasks = one_point_maps(n)
    counters = _k.sweep_one_point_cross(
        n, imgs, dups, emasks, all_permutations(n), generator_sets(n)
    )
    return _one_point_report(n, counters)


def _random_one_point_batch(n: int, batch: int, rng: np.random.Generator):
    """Seeded random one-point instances by rejection from uniform maps;
    permutation sets have one or two generators, evenly."""
    f_rows = []
    dups = []
    emasks = []
    full = (1 << n) - 1
    while len(f_rows) < batch:
        row = rng.integers(0, n, size=n)
        counts = np.bincount(row, minlength=n)
        big = np.flatnonzero(counts >= 2)
        if len(big) != 1:
            continue
        f_rows.append(row.astype(np.int64))
        dups.append(int(big[0]))
        used = 0
        for v in row:
            used |= 1 << int(v)
        emasks.append(full ^ used)
    g1 = np.empty((batch, n), np.int64)
    g2 = np.empty((batch, n), np.int64)
    gcounts = np.empty(batch, np.int64)
    for i in range(batch):
        g1[i] = rng.permutation(n)
        two = rng.integers(0, 2) == 1
        gcounts[i] = 2 if two else 1
        g2[i] = rng.permutation(n) if two else np.arange(n)
    return (
        np.array(f_rows, dtype=np.int64),
        np.array(dups, dtype=np.int64),
        np.array(emasks, dtype=np.int64),
        g1,
        g2,
        gcounts,
    )


def one_point_bounds_sampled(n: int, samples: int, seed: int) -> OnePointSweepReport:
    """Seeded random one-point instances, accumulated until at least
    ``samples`` of them pass the transitive + strongly connected filter."""
    rng = np.random.default_rng(seed)
    total = np.zeros(_k.OP_NCOUNTERS, np.int64)
    total[_k.OP_EX_Y] = -1
    total[_k.OP_EX_F] = -1
    batch = max(1024, samples // 4)
    while total[_k.OP_QUALIFYING] < samples:
        fs, dups, emasks, g1, g2, gcounts = _random_one_point_batch(n, batch, rng)
        counters = _k.sweep_one_point_paired(n, fs, dups, emasks, g1, g2, gcounts)
        for i in range(_k.OP_NCOUNTERS):
            if i in (_k.OP_EX_Y, _k.OP_EX_F):
                if total[i] < 0 and counters[i] >= 0:
                    total[i] = counters[i]
            else:
                total[i] += counters[i]
    return _one_point_report(n, total)


@dataclass(frozen=True)
class PrimitiveSweepReport:
    n: int
    y_sets: int
    y_transitive: int
    y_primitive: int
    method_disagreements: int
    chain_closure_checks: int
    chain_closure_failures: int
    reachability_checks: int
    reachability_failures: int

    @property
    def violations(self) -> int:
        return (
            self.method_disagreements
            + self.chain_closure_failures
            + self.reachability_failures
        )

    @property
    def ok(self) -> bool:
        return self.violations == 0


def primitive_sweep(n: int) -> PrimitiveSweepReport:
    """Primitivity method agreement over every 1- or 2-generator set; for
    the primitive ones, chain-closure strong connectivity for every seed
    combination and complete reachability for the simple singulars (all of
    them up to n = 5, conjugacy-class representatives at n = 6)."""
    if n >= 6:
        reps = simple_map_class_representatives(n)
    else:
        reps, _, _ = simple_maps(n)
    counters = _k.sweep_primitive_cross(n, all_permutations(n), generator_sets(n), reps)
    c = [int(v) for v in counters]
    return PrimitiveSweepReport(
        n=n,
        y_sets=c[_k.PR_Y_TOTAL],
        y_transitive=c[_k.PR_Y_TRANSITIVE],
        y_primitive=c[_k.PR_Y_PRIMITIVE],
        method_disagreements=c[_k.PR_VIOL_AGREE],
        chain_closure_checks=c[_k.PR_PIA_COMBOS],
        chain_closure_failures=c[_k.PR_VIOL_PIA],
        reachability_checks=c[_k.PR_CR_CHECKS],
        reachability_failures=c[_k.PR_VIOL_CR],
    )


@dataclass(frozen=True)
class EquivalenceSweepReport:
    n: int
    instances: int
    directable: int
    viol_directable_equivalence: int
    viol_pair_merge_equivalence: int
    viol_rt_vs_at: int
    viol_greedy_low: int
    viol_greedy_high: int
    internal_errors: int

    @property
    def violations(self) -> int:
        return (
            self.viol_directable_equivalence
            + self.viol_pair_merge_equivalence
            + self.viol_rt_vs_at
            + self.viol_greedy_low
            + self.viol_greedy_high
            + self.internal_errors
        )

    @property
    def ok(self) -> bool:
        return self.violations == 0


@lru_cache(maxsize=None)
def all_maps(n: int) -> np.ndarray:
    """All n^n self-maps of {0..n-1} as rows, in lexicographic order."""
    arr = np.array(list(itertools.product(range(n), repeat=n)), dtype=np.int64)
    arr.setflags(write=False)
    return arr


def _equiv_report(n: int, counters: np.ndarray) -> EquivalenceSweepReport:
    c = [int(v) for v in counters]
    return EquivalenceSweepReport(
        n=n,
        instances=c[_k.EQ_INSTANCES],
        directable=c[_k.EQ_DIRECTABLE],
        viol_directable_equivalence=c[_k.EQ_VIOL_LEMMA2],
        viol_pair_merge_equivalence=c[_k.EQ_VIOL_PROP1],
        viol_rt_vs_at=c[_k.EQ_VIOL_LEMMA3],
        viol_greedy_low=c[_k.EQ_VIOL_GREEDY_LOW],
        viol_greedy_high=c[_k.EQ_VIOL_GREEDY_HIGH],
        internal_errors=c[_k.EQ_INTERNAL],
    )


def equivalences_exhaustive(n: int) -> EquivalenceSweepReport:
    """Every single generator and every ordered generator pair."""
    maps = all_maps(n)
    m = maps.shape[0]
    singles = [(i, -1) for i in range(m)]
    pairs = [(i, j) for i in range(m) for j in range(m)]
    insts = np.array(singles + pairs, dtype=np.int64)
    return _equiv_report(n, _k.sweep_equivalences(n, maps, insts))


def equivalences_sampled(n: int, samples: int, seed: int) -> EquivalenceSweepReport:
    """Seeded ordered generator pairs, uniform with replacement."""
    maps = all_maps(n)
    rng = np.random.default_rng(seed)
    insts = rng.integers(0, maps.shape[0], size=(samples, 2)).astype(np.int64)
    return _equiv_report(n, _k.sweep_equivalences(n, maps, insts))


@dataclass(frozen=True)
class MonotonicityReport:
    n: int
    instances: int
    violations: int

    @property
    def ok(self) -> bool:
        return self.violations == 0


def rt_monotonicity_sampled(n: int, samples: int, seed: int) -> MonotonicityReport:
    """Adding a generator never increases the reset threshold: seeded
    random synchronizing base automata with one random extra generator."""
    rng = np.random.default_rng(seed)
    checked = 0
    violations = 0
    while checked < samples:
        gcount = int(rng.integers(1, 4))
        base = rng.integers(0, n, size=(gcount, n)).astype(np.int64)
        extra = rng.integers(0, n, size=n).astype(np.int64)
        rt_base, rt_ext = _k.rt_monotone_check(n, base, extra)
        if rt_base < 0:
            continue
        checked += 1
        if rt_ext < 0 or rt_ext > rt_base:
            violations += 1
    return MonotonicityReport(n=n, instances=checked, violations=violations)

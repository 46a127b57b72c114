"""Total self-maps of a finite state set {1, ..., n}.

Maps act on the right: the image of state s under f is ``f(s)`` here, and
``compose(f, g)`` applies f first, then g.  Rank is the image size, corank
its complement, and the kernel type is the multiset of kernel-class sizes.
A *one-point singular* has kernel type (k, 1, ..., 1) with k >= 2: a single
non-trivial kernel class.  Constants (k = n) count as one-point singulars;
a *simple* singular is the k = 2 case.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DimensionError, DomainError, NotOnePointError

KIND_PERMUTATION = "permutation"
KIND_CONSTANT = "constant"
KIND_SIMPLE_SINGULAR = "simple-singular"
KIND_ONE_POINT_SINGULAR = "one-point-singular"
KIND_OTHER_SINGULAR = "other-singular"


@dataclass(frozen=True)
class StateSet:
    """A subset of {1, ..., n}, stored as a bit mask (bit i-1 <=> state i)."""

    n: int
    mask: int

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("universe size must be >= 0")
        if self.mask < 0 or self.mask >> self.n:
            raise DomainError(f"mask {self.mask:#x} has bits outside 1..{self.n}")

    @classmethod
    def empty(cls, n: int) -> "StateSet":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "StateSet":
        return cls(n, (1 << n) - 1)

    @classmethod
    def of(cls, n: int, states: Iterable[int]) -> "StateSet":
        mask = 0
        for s in states:
            if not 1 <= s <= n:
                raise DomainError(f"state {s} outside 1..{n}")
            mask |= 1 << (s - 1)
        return cls(n, mask)

    def members(self) -> tuple[int, ...]:
        return tuple(s for s in range(1, self.n + 1) if self.mask >> (s - 1) & 1)

    def __contains__(self, s: int) -> bool:
        return 1 <= s <= self.n and bool(self.mask >> (s - 1) & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.members())

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    @property
    def is_full(self) -> bool:
        return self.mask == (1 << self.n) - 1

    @property
    def is_proper_nonempty(self) -> bool:
        return not self.is_empty and not self.is_full

    def union(self, other: "StateSet") -> "StateSet":
        self._check(other)
        return StateSet(self.n, self.mask | other.mask)

    def intersection(self, other: "StateSet") -> "StateSet":
        self._check(other)
        return StateSet(self.n, self.mask & other.mask)

    def difference(self, other: "StateSet") -> "StateSet":
        self._check(other)
        return StateSet(self.n, self.mask & ~other.mask)

    def complement(self) -> "StateSet":
        return StateSet(self.n, ((1 << self.n) - 1) ^ self.mask)

    def issubset(self, other: "StateSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def _check(self, other: "StateSet"):
        if self.n != other.n:
            raise DimensionError(f"state sets on different universes: {self.n} vs {other.n}")

    def __repr__(self):
        return "{" + ",".join(map(str, self.members())) + "}" + f"/{self.n}"


@dataclass(frozen=True)
class KernelType:
    """Multiset of kernel-class sizes, sorted descending; sums to n."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise DomainError("kernel class sizes must be positive")
        if tuple(sorted(self.parts, reverse=True)) != self.parts:
            raise DomainError("kernel type must be sorted descending")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def rank(self) -> int:
        return len(self.parts)

    @property
    def is_one_point(self) -> bool:
        """Exactly one non-trivial class: type (k, 1, ..., 1), k >= 2."""
        return len(self.parts) >= 1 and self.parts[0] >= 2 and all(p == 1 for p in self.parts[1:])


@dataclass(frozen=True)
class Transformation:
    """A total map on {1, ..., n}; ``images[i-1]`` is the image of state i."""

    n: int
    images: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("need at least one state")
        if len(self.images) != self.n:
            raise DomainError(f"expected {self.n} images, got {len(self.images)}")
        for s, v in enumerate(self.images, start=1):
            if not 1 <= v <= self.n:
                raise DomainError(f"image of state {s} is {v}, outside 1..{self.n}")

    @classmethod
    def from_images(cls, images: Iterable[int]) -> "Transformation":
        images = tuple(images)
        return cls(len(images), images)

    def __call__(self, s: int) -> int:
        if not 1 <= s <= self.n:
            raise DomainError(f"state {s} outside 1..{self.n}")
        return self.images[s - 1]

    def __mul__(self, other: "Transformation") -> "Transformation":
        return compose(self, other)

    @property
    def rank(self) -> int:
        return len(set(self.images))

    @property
    def corank(self) -> int:
        return self.n - self.rank

    @property
    def is_permutation(self) -> bool:
        return self.corank == 0

    @property
    def is_constant(self) -> bool:
        return self.rank == 1

    def image(self) -> StateSet:
        return StateSet.of(self.n, self.images)

    def coimage(self) -> StateSet:
        return self.image().complement()

    def kernel_type(self) -> KernelType:
        sizes: dict[int, int] = {}
        for v in self.images:
            sizes[v] = sizes.get(v, 0) + 1
        return KernelType(tuple(sorted(sizes.values(), reverse=True)))

    def inverse(self) -> "Transformation":
        if not self.is_permutation:
            raise DomainError("only permutations are invertible")
        inv = [0] * self.n
        for s, v in enumerate(self.images, start=1):
            inv[v - 1] = s
        return Transformation(self.n, tuple(inv))

    def __repr__(self):
        return "(" + ",".join(map(str, self.images)) + ")"


def identity(n: int) -> Transformation:
    return Transformation(n, tuple(range(1, n + 1)))


def constant(n: int, target: int) -> Transformation:
    if not 1 <= target <= n:
        raise DomainError(f"target {target} outside 1..{n}")
    return Transformation(n, (target,) * n)


def compose(f: Transformation, g: Transformation) -> Transformation:
    """Apply f first, then g: the image of s is g(f(s))."""
    if f.n != g.n:
        raise DimensionError(f"cannot compose maps on {f.n} and {g.n} states")
    return Transformation(f.n, tuple(g.images[v - 1] for v in f.images))


def preimage(f: Transformation, T: StateSet) -> StateSet:
    """All states s with f(s) in T."""
    if f.n != T.n:
        raise DimensionError(f"map on {f.n} states, subset on {T.n}")
    mask = 0
    for s, v in enumerate(f.images):
        if T.mask >> (v - 1) & 1:
            mask |= 1 << s
    return StateSet(f.n, mask)


def augments(f: Transformation, T: StateSet) -> bool:
    """Whether the preimage of T under f is strictly larger than T.

    Defined for proper nonempty subsets only; bijections never augment.
    """
    if f.n != T.n:
        raise DimensionError(f"map on {f.n} states, subset on {T.n}")
    if not T.is_proper_nonempty:
        raise DomainError("augmentation is defined for proper nonempty subsets only")
    return len(preimage(f, T)) > len(T)


@dataclass(frozen=True)
class MapProfile:
    """Rank/kernel anatomy of a map, plus its classification flags."""

    image: StateSet
    coimage: StateSet
    rank: int
    corank: int
    kernel: KernelType
    kind: str
    is_permutation: bool
    is_constant: bool
    is_simple_singular: bool
    is_one_point_singular: bool


def map_profile(f: Transformation) -> MapProfile:
    """Classify f.  ``kind`` is the most specific label; the boolean flags
    keep the overlaps (a constant on n >= 2 is also a one-point singular,
    a simple singular is the one-point case k = 2)."""
    kernel = f.kernel_type()
    is_perm = f.corank == 0
    is_const = f.rank == 1
    is_one_point = not is_perm and kernel.is_one_point
    is_simple = not is_perm and f.corank == 1
    if is_perm:
        kind = KIND_PERMUTATION
    elif is_const:
        kind = KIND_CONSTANT
    elif is_simple:
        kind = KIND_SIMPLE_SINGULAR
    elif is_one_point:
        kind = KIND_ONE_POINT_SINGULAR
    else:
        kind = KIND_OTHER_SINGULAR
    return MapProfile(
        image=f.image(),
        coimage=f.coimage(),
        rank=f.rank,
        corank=f.corank,
        kernel=kernel,
        kind=kind,
        is_permutation=is_perm,
        is_constant=is_const,
        is_simple_singular=is_simple,
        is_one_point_singular=is_one_point,
    )


@dataclass(frozen=True)
class OnePointProfile:
    """Anatomy of a one-point singular.

    ``duplicate`` is the unique state with k preimages, ``cyclepoint`` the
    unique preimage of it lying on the cycle through it (equal to
    ``duplicate`` exactly when the duplicate is a fixed point),
    ``excluded`` the k-1 states outside the image, and ``rest`` the other
    image states (each with exactly one preimage).
    """

    k: int
    duplicate: int
    cyclepoint: int
    excluded: StateSet
    rest: StateSet


def one_point_profile(f: Transformation) -> OnePointProfile:
    """Profile a one-point singular; raises NotOnePointError otherwise."""
    if f.is_permutation:
        raise NotOnePointError(f"{f!r} is a permutation, not a one-point singular")
    counts: dict[int, int] = {}
    for v in f.images:
        counts[v] = counts.get(v, 0) + 1
    big = [v for v, c in counts.items() if c >= 2]
    if len(big) != 1:
        raise NotOnePointError(f"{f!r} has {len(big)} non-trivial kernel classes, need exactly 1")
    d = big[0]
    k = counts[d]
    # d always sits on a cycle of the functional graph: any arc entering a
    # cycle from outside would give some cycle state two preimages.
    t = d
    while f(t) != d:
        t = f(t)
    image = f.image()
    excluded = image.complement()
    rest = image.difference(StateSet.of(f.n, [d]))
    return OnePointProfile(k=k, duplicate=d, cyclepoint=t, excluded=excluded, rest=rest)

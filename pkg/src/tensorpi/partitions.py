"""Integer partitions, compositions and the refinement order.

Partitions are stored as weakly decreasing tuples of positive integers. A
partition ``mu`` *refines* ``lam`` when the parts of ``mu`` can be grouped so
that the group sums are exactly the parts of ``lam``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    >>> Partition([1, 3, 5])
    Partition(5, 3, 1)
    >>> Partition([1, 3, 5]).weight
    9
    """

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = [int(p) for p in parts]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive, got {parts}")
        return super().__new__(cls, sorted(parts, reverse=True))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __add__(self, other):  # tuple concatenation would break sortedness
        return oplus(self, other)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"5,3,1"``, ``"2^4"`` or mixtures such as ``"3^2,1"``."""
        return Partition(_parse_parts(text))


class Composition(tuple):
    """An ordered sequence of non-negative integers."""

    def __new__(cls, parts: Iterable[int] = ()) -> "Composition":
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"composition parts must be non-negative, got {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def to_partition(self) -> Partition:
        """Drop zero parts and sort."""
        return Partition(p for p in self if p > 0)

    def __repr__(self) -> str:
        return f"Composition({', '.join(map(str, self))})"

    def __str__(self) -> str:
        return ",".join(map(str, self))

    @classmethod
    def parse(cls, text: str) -> "Composition":
        return Composition(_parse_parts(text, allow_zero=True))


_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def _parse_parts(text: str, allow_zero: bool = False) -> list[int]:
    text = text.strip().strip("()[]")
    if not text:
        return []
    parts: list[int] = []
    for token in text.split(","):
        match = _TOKEN.match(token)
        if match is None:
            raise ValueError(f"malformed partition token {token!r} in {text!r}")
        value = int(match.group(1))
        count = int(match.group(2)) if match.group(2) is not None else 1
        if value == 0 and not allow_zero:
            raise ValueError(f"partition parts must be positive, got {text!r}")
        parts.extend([value] * count)
    return parts


def make_partition(parts: Sequence[int]) -> Partition:
    return Partition(parts)


def delta(d: int) -> Partition:
    """The staircase of the first ``d`` odd integers, a partition of ``d**2``."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    return Partition(range(2 * d - 1, 0, -2))


def oplus(lam1: Sequence[int], lam2: Sequence[int]) -> Partition:
    """Multiset union of the parts of two partitions."""
    return Partition(tuple(lam1) + tuple(lam2))


def pad_with_ones(lam: Partition, target: int) -> Partition:
    """Return ``lam`` with ones appended until its weight is ``target``."""
    lam = Partition(lam)
    if target < lam.weight:
        raise ValueError(f"cannot pad {lam} (weight {lam.weight}) down to {target}")
    return Partition(tuple(lam) + (1,) * (target - lam.weight))


def cycles_of(images: Sequence[int]) -> list[tuple[int, ...]]:
    """Disjoint cycles (fixed points included) of a 0-based one-line permutation."""
    seen = [False] * len(images)
    cycles = []
    for start in range(len(images)):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            i = images[i]
        cycles.append(tuple(cycle))
    return cycles


def sigma_action(sigma: Sequence[int], lam: Sequence[int]) -> Partition:
    """Sum the parts of ``lam`` over each cycle of ``sigma``.

    ``sigma`` is a 0-based one-line permutation (a ``Permutation`` works too)
    whose degree equals the number of parts of ``lam``.
    """
    if len(sigma) != len(lam):
        raise ValueError(
            f"permutation degree {len(sigma)} does not match {len(lam)} parts"
        )
    return Partition(sum(lam[i] for i in cycle) for cycle in cycles_of(sigma))


@dataclass(frozen=True)
class RefinementWitness:
    """A grouping of part positions of ``mu`` whose sums give ``target``.

    ``groups[j]`` holds the (0-based) positions of ``mu`` assigned to the j-th
    part of ``target``.
    """

    mu: Partition
    target: Partition
    groups: tuple[tuple[int, ...], ...]

    @property
    def group_sums(self) -> Partition:
        return Partition(sum(self.mu[i] for i in g) for g in self.groups)

    def describe(self) -> str:
        chunks = []
        for group, part in zip(self.groups, self.target):
            values = ",".join(str(self.mu[i]) for i in group)
            chunks.append(f"{{{values}}}->{part}")
        return ", ".join(chunks)


def refinement_witness(mu: Sequence[int], lam: Sequence[int]) -> Optional[RefinementWitness]:
    """Find one grouping of the parts of ``mu`` summing to the parts of ``lam``.

    Parts of ``mu`` are placed largest first into the bins given by ``lam``;
    a state is the index of the next part together with the multiset of
    residual bin capacities, and failed states are memoised.
    """
    mu = Partition(mu)
    lam = Partition(lam)
    if mu.weight != lam.weight:
        return None
    if len(mu) < len(lam):
        return None

    capacities = list(lam)
    assignment = [-1] * len(mu)
    failed: set[tuple[int, tuple[int, ...]]] = set()

    def place(i: int) -> bool:
        if i == len(mu):
            return all(c == 0 for c in capacities)
        key = (i, tuple(sorted(capacities)))
        if key in failed:
            return False
        part = mu[i]
        # bins with equal residual capacity are interchangeable
        tried: set[int] = set()
        for b, cap in enumerate(capacities):
            if cap < part or cap in tried:
                continue
            tried.add(cap)
            capacities[b] -= part
            assignment[i] = b
            if place(i + 1):
                return True
            capacities[b] += part
        failed.add(key)
        return False

    if not place(0):
        return None
    groups = tuple(
        tuple(i for i, b in enumerate(assignment) if b == j) for j in range(len(lam))
    )
    return RefinementWitness(mu, lam, groups)


def is_refinement(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff ``mu`` refines ``lam``."""
    return refinement_witness(mu, lam) is not None


def pad_refines(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff ``mu`` padded with ones to the weight of ``lam`` refines ``lam``."""
    mu, lam = Partition(mu), Partition(lam)
    if mu.weight > lam.weight:
        return False
    return is_refinement(pad_with_ones(mu, lam.weight), lam)


def all_refinement_groupings(
    parts: Sequence[int], targets: Sequence[int]
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Every set partition of positions of ``parts`` into groups summing to ``targets``.

    ``parts`` may be unsorted (a composition) and ``targets`` must be distinct,
    which makes each grouping correspond to exactly one assignment of groups to
    target values. Yields ``groups`` with ``groups[j]`` summing to ``targets[j]``.
    """
    targets = list(targets)
    if len(set(targets)) != len(targets):
        raise ValueError("targets must be distinct")
    if sum(parts) != sum(targets):
        return
    n = len(parts)

    def subsets(available: list[int], total: int, start: int) -> Iterator[tuple[int, ...]]:
        if total == 0:
            yield ()
            return
        for idx in range(start, len(available)):
            pos = available[idx]
            if parts[pos] <= total:
                for rest in subsets(available, total - parts[pos], idx + 1):
                    yield (pos,) + rest

    def assign(j: int, available: list[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if j == len(targets):
            if not available:
                yield ()
            return
        for group in subsets(available, targets[j], 0):
            if not group:
                continue
            rest = [p for p in available if p not in group]
            for tail in assign(j + 1, rest):
                yield (group,) + tail

    yield from assign(0, list(range(n)))


def integer_part_count(d: int, m: int) -> int:
    """``sum(floor((2i - 1) / m) for i in 1..d)``: how many ``m``-sized pieces fit in ``delta(d)``."""
    if d < 1 or m < 1:
        raise ValueError(f"need d >= 1 and m >= 1, got d={d}, m={m}")
    return sum((2 * i - 1) // m for i in range(1, d + 1))


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Young diagram inclusion ``lam ⊂ mu``."""
    if len(lam) > len(mu):
        return False
    return all(a <= b for a, b in zip(lam, mu))


def remove_one_box(lam: Sequence[int]) -> list[Partition]:
    """All distinct partitions obtained by removing a single box."""
    lam = Partition(lam)
    if lam.weight < 1:
        raise ValueError("cannot remove a box from the empty partition")
    seen: dict[Partition, None] = {}
    for i in range(len(lam)):
        parts = list(lam)
        parts[i] -= 1
        seen.setdefault(Partition(p for p in parts if p > 0), None)
    return list(seen)


def partitions_of(k: int, max_len: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of ``k`` in reverse-lexicographic order, optionally with at most ``max_len`` parts."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    for parts in _partitions(k, k):
        if max_len is None or len(parts) <= max_len:
            yield Partition(parts)


@lru_cache(maxsize=None)
def _partitions(k: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if k == 0:
        return ((),)
    out = []
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions(k - first, first):
            out.append((first,) + rest)
    return tuple(out)

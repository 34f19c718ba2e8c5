"""Relative order complex, its Hilbert function, and the Ehrhart quasisymmetric function.

Faces are strict chains of family members.  A face survives (lies outside the
relative subcomplex) when its chain, with the empty set prepended and the
ground set appended, has every consecutive interval in the ideal.  Nothing is
realized geometrically: a lattice point lies in the cone of the flag given by
its cumulative level sets.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterator, Mapping, Sequence

from .core import ColoringProblem, GuardExceeded, is_subset, popcount
from .invariants import ORACLE_LIMIT, level_sets
from .qsym import QSymPoly

MAX_HILBERT_DEGREE = 12


@dataclass(frozen=True)
class RelativeFace:
    chain: tuple[int, ...]
    augmented: tuple[int, ...]

    @property
    def type(self):
        return tuple(popcount(b ^ a) for a, b in zip(self.augmented, self.augmented[1:]))


def augment(chain: Sequence[int], full: int) -> tuple[int, ...]:
    out = [0]
    for s in list(chain) + [full]:
        if s != out[-1]:
            out.append(s)
    return tuple(out)


def _chains(family: Sequence[int]) -> Iterator[tuple[int, ...]]:
    fam = sorted(family, key=lambda s: (popcount(s), s))

    def grow(chain, start):
        yield tuple(chain)
        for i in range(start, len(fam)):
            s = fam[i]
            if not chain or (s != chain[-1] and is_subset(chain[-1], s)):
                chain.append(s)
                yield from grow(chain, i + 1)
                chain.pop()

    yield from grow([], 0)


def relative_faces(c: ColoringProblem) -> Iterator[RelativeFace]:
    """Chains of the family whose augmented chain stays inside the ideal."""
    full = c.full
    for chain in _chains(c.family):
        aug = augment(chain, full)
        if all((a, b) in c.ideal for a, b in zip(aug, aug[1:])):
            yield RelativeFace(chain, aug)


def hilbert_function(c: ColoringProblem, n: int) -> int:
    """Number of degree-n monomials supported on a surviving face."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > MAX_HILBERT_DEGREE:
        raise GuardExceeded(f"degree {n} exceeds {MAX_HILBERT_DEGREE}")
    total = 0
    for face in relative_faces(c):
        k = len(face.chain)
        if k == 0:
            total += n == 0
        elif n >= k:
            # positive exponents a_1..a_k summing to n
            total += comb(n - 1, k - 1)
    return total


def surviving_flags(c: ColoringProblem) -> set[tuple[int, ...]]:
    # faces sharing an augmented chain realize the same cone
    return {face.augmented for face in relative_faces(c)}


def ehrhart_qsym(c: ColoringProblem) -> QSymPoly:
    """Lattice-point generating function of the union of the surviving cones."""
    counts = Counter()
    for aug in surviving_flags(c):
        counts[tuple(popcount(b ^ a) for a, b in zip(aug, aug[1:]))] += 1
    return QSymPoly(counts)


def flag_of_point(point, labels: Sequence[str]) -> tuple[int, ...]:
    """Distinct nonempty cumulative level sets of a positive integer point, as masks."""
    if isinstance(point, Mapping):
        coords = [point[x] for x in labels]
    else:
        coords = list(point)
        if len(coords) != len(labels):
            raise ValueError(f"point has {len(coords)} coordinates for {len(labels)} elements")
    if any(not isinstance(v, int) or v < 1 for v in coords):
        raise ValueError("coordinates must be positive integers")
    out = []
    for s in level_sets(coords)[1:]:
        if s and (not out or s != out[-1]):
            out.append(s)
    return tuple(out)


def count_lattice_points(c: ColoringProblem, box: int) -> int:
    """Points of {1..box}^N lying in the cone of some surviving flag."""
    if box < 1:
        raise ValueError("box must be positive")
    if box ** c.n > ORACLE_LIMIT:
        raise GuardExceeded(f"{box}^{c.n} lattice points exceed the limit {ORACLE_LIMIT}")
    flags = surviving_flags(c)
    total = 0
    for point in itertools.product(range(1, box + 1), repeat=c.n):
        if (0,) + flag_of_point(point, c.labels) in flags:
            total += 1
    return total

"""Proper colorings, the chromatic polynomial and the chromatic quasisymmetric function.

Each invariant has a slow exhaustive route (:func:`count_colorings`) and a
fast route: walks in the ideal's transfer matrix for the polynomial, stable
flags for the quasisymmetric function.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .core import ColoringProblem, GuardExceeded, bits, popcount
from .qsym import Composition, QSymPoly, UniPoly, lagrange_interpolate

ORACLE_LIMIT = 10**8
MAX_TRANSFER_STATES = 4096


@dataclass(frozen=True)
class StableFlag:
    """Strict chain 0 = S_0 < S_1 < ... < S_k = N of masks; ``type`` holds the step sizes."""

    chain: tuple[int, ...]
    type: Composition


def _color_vector(c: ColoringProblem, f) -> list[int]:
    if isinstance(f, Mapping):
        try:
            colors = [f[x] for x in c.labels]
        except KeyError as e:
            raise ValueError(f"coloring is not total: {e.args[0]!r} has no color") from None
    else:
        colors = list(f)
        if len(colors) != c.n:
            raise ValueError(f"coloring has {len(colors)} entries for {c.n} elements")
    for col in colors:
        if not isinstance(col, int) or col < 1:
            raise ValueError(f"colors must be positive integers, got {col!r}")
    return colors


def level_sets(colors: Sequence[int]) -> list[int]:
    """Cumulative masks f^-1({1..i}) for i = 0..max color."""
    top = max(colors, default=0)
    classes = [0] * (top + 1)
    for i, col in enumerate(colors):
        classes[col] |= 1 << i
    out, acc = [0], 0
    for col in range(1, top + 1):
        acc |= classes[col]
        out.append(acc)
    return out


def is_proper_coloring(c: ColoringProblem, f) -> bool:
    """``f`` maps each element (by label, or by position) to a color >= 1."""
    chain = level_sets(_color_vector(c, f))
    return all((a, b) in c.ideal for a, b in zip(chain, chain[1:]))


def count_colorings(c: ColoringProblem, k: int) -> int:
    """Exhaustive count of proper colorings with colors 1..k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k ** c.n > ORACLE_LIMIT:
        raise GuardExceeded(f"{k}^{c.n} colorings exceed the oracle limit {ORACLE_LIMIT}")
    ideal = c.ideal
    total = 0
    for colors in itertools.product(range(1, k + 1), repeat=c.n):
        chain = level_sets(colors)
        if all((a, b) in ideal for a, b in zip(chain, chain[1:])):
            total += 1
    return total


def transfer_matrix(c: ColoringProblem) -> tuple[list[int], list[list[int]]]:
    """Family order and adjacency lists: ``adj[i]`` holds j with (family[i], family[j]) in the ideal."""
    if len(c.family) > MAX_TRANSFER_STATES:
        raise GuardExceeded(f"family has {len(c.family)} members, limit {MAX_TRANSFER_STATES}")
    index = {s: i for i, s in enumerate(c.family)}
    adj = [[] for _ in c.family]
    for s, t in c.ideal:
        adj[index[s]].append(index[t])
    return list(c.family), adj


def count_walks(c: ColoringProblem, k: int) -> int:
    """Number of length-k walks from the empty set to N, i.e. k-colorings."""
    fam, adj = transfer_matrix(c)
    vec = [0] * len(fam)
    vec[fam.index(0)] = 1
    for _ in range(k):
        nxt = [0] * len(fam)
        for i, v in enumerate(vec):
            if v:
                for j in adj[i]:
                    nxt[j] += v
        vec = nxt
    return vec[fam.index(c.full)]


def chromatic_polynomial(c: ColoringProblem) -> UniPoly:
    # degree is at most |N|, so |N| + 1 samples determine it
    return lagrange_interpolate([(k, count_walks(c, k)) for k in range(c.n + 1)])


def enumerate_stable_flags(c: ColoringProblem) -> Iterator[StableFlag]:
    """Depth-first over ideal edges from the empty set, successors in mask order."""
    succ = {s: [] for s in c.family}
    for s, t in sorted(c.ideal, key=lambda p: (p[0], p[1])):
        if s != t:
            succ[s].append(t)
    full = c.full

    def walk(chain):
        top = chain[-1]
        if top == full:
            yield StableFlag(tuple(chain), tuple(popcount(b ^ a) for a, b in zip(chain, chain[1:])))
            return
        for t in succ[top]:
            chain.append(t)
            yield from walk(chain)
            chain.pop()

    yield from walk([0])


def chromatic_qsym(c: ColoringProblem) -> QSymPoly:
    """Sum of M_type over the stable flags of ``c``."""
    return QSymPoly(Counter(flag.type for flag in enumerate_stable_flags(c)))


def flag_labels(c: ColoringProblem, flag: StableFlag) -> list[list[str]]:
    return [[c.labels[i] for i in bits(s)] for s in flag.chain]


def coloring_of_flag(c: ColoringProblem, flag: StableFlag) -> dict[str, int]:
    """The coloring giving block i of the flag color i."""
    out = {}
    for col, (a, b) in enumerate(zip(flag.chain, flag.chain[1:]), start=1):
        for i in bits(b & ~a):
            out[c.labels[i]] = col
    return out


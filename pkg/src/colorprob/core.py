"""Coloring problems: a family of subsets plus an order ideal of its intervals.

Subsets are integer bitmasks over an ordered tuple of element labels; bit ``i``
is ``labels[i]``.  Operations that can hit the base point of the pointed set
species (restriction and contraction by a set outside the family) return
``None`` for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

MAX_ELEMENTS = 64


class ColoringError(Exception):
    """Base class for errors raised by this package."""


class InvalidStructure(ColoringError, ValueError):
    """Raised when raw data does not describe a valid structure."""

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations)
        super().__init__(lines or "invalid structure")


class GuardExceeded(ColoringError):
    """An instance is too large for an exhaustive algorithm."""


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    witness: tuple = ()

    def __str__(self):
        return f"{self.kind}: {self.message}"


# -- bitmask helpers --------------------------------------------------------

def popcount(mask: int) -> int:
    return mask.bit_count()


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` (including 0 and ``mask``), descending."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def compress(mask: int, keep: Sequence[int]) -> int:
    """Re-index the bits of ``mask`` at positions ``keep`` onto 0..len(keep)-1."""
    out = 0
    for j, i in enumerate(keep):
        if mask >> i & 1:
            out |= 1 << j
    return out


def nested_pairs(family: Iterable[int]) -> list[tuple[int, int]]:
    fam = sorted(family)
    return [(s, t) for t in fam for s in fam if is_subset(s, t)]


# -- validation -------------------------------------------------------------

def _fmt(mask: int, labels: Sequence[str]) -> str:
    return "{" + ",".join(labels[i] for i in bits(mask) if i < len(labels)) + "}"


def validate(labels, family, ideal, paranoid: bool = False) -> list[Violation]:
    """Return every violated coloring-problem invariant (empty list = valid).

    ``family`` is an iterable of masks and ``ideal`` an iterable of mask pairs.
    Order-ideal closure is checked through covers by default; ``paranoid``
    checks every sub-interval of every pair instead.
    """
    out: list[Violation] = []
    labels = list(labels)
    n = len(labels)
    if n > MAX_ELEMENTS:
        out.append(Violation("ground too large", f"{n} elements, at most {MAX_ELEMENTS} allowed", (n,)))
        return out
    if len(set(labels)) != n:
        dups = sorted({x for x in labels if labels.count(x) > 1})
        out.append(Violation("duplicate labels", f"labels repeated: {dups}", tuple(dups)))
    full = (1 << n) - 1
    family = list(family)
    ideal = list(ideal)

    seen = set()
    for s in family:
        if not isinstance(s, int) or s < 0 or s & ~full:
            out.append(Violation("subset out of range", f"family member {s!r} does not fit {n} elements", (s,)))
            continue
        if s in seen:
            out.append(Violation("duplicate family member", f"{_fmt(s, labels)} listed twice", (s,)))
        seen.add(s)
    fam = seen
    if 0 not in fam:
        out.append(Violation("empty set absent", "the family must contain the empty set", (0,)))
    if full not in fam:
        out.append(Violation(
            "full set absent",
            f"the family must contain the full ground set {_fmt(full, labels)}",
            (full,),
        ))

    pairs = set()
    for pair in ideal:
        try:
            s, t = pair
        except (TypeError, ValueError):
            out.append(Violation("malformed pair", f"{pair!r} is not a pair of subsets", (pair,)))
            continue
        if s not in fam or t not in fam:
            out.append(Violation(
                "endpoint outside family",
                f"[{_fmt(s, labels)}, {_fmt(t, labels)}] has an endpoint outside the family",
                (s, t),
            ))
            continue
        if not is_subset(s, t):
            out.append(Violation("not nested", f"{_fmt(s, labels)} is not contained in {_fmt(t, labels)}", (s, t)))
            continue
        pairs.add((s, t))

    for s in sorted(fam):
        if (s, s) not in pairs:
            out.append(Violation("reflexive pair absent", f"[{_fmt(s, labels)}, {_fmt(s, labels)}] missing", (s, s)))

    fam_sorted = sorted(fam)
    for s, t in sorted(pairs):
        inside = [x for x in fam_sorted if is_subset(s, x) and is_subset(x, t)]
        if paranoid:
            need = [(a, b) for a in inside for b in inside if is_subset(a, b)]
        else:
            above = [x for x in inside if x != s]
            below = [x for x in inside if x != t]
            ups = [x for x in above if not any(y != x and is_subset(y, x) for y in above)]
            downs = [x for x in below if not any(y != x and is_subset(x, y) for y in below)]
            need = [(u, t) for u in ups] + [(s, d) for d in downs]
        for a, b in need:
            if (a, b) not in pairs:
                out.append(Violation(
                    "order-ideal closure",
                    f"[{_fmt(s, labels)}, {_fmt(t, labels)}] is in the ideal "
                    f"but [{_fmt(a, labels)}, {_fmt(b, labels)}] is not",
                    (s, t, a, b),
                ))
    return out


# -- the structure ----------------------------------------------------------

class ColoringProblem:
    """A family ``p`` of subsets of the ground set and an interval ideal ``I``.

    ``family`` is a sorted tuple of masks, ``ideal`` a frozenset of mask pairs.
    Equality is by labels, so two problems listing their elements in different
    orders compare equal when they describe the same sets.
    """

    __slots__ = ("labels", "family", "ideal", "_family_set", "_key")

    def __init__(self, labels, family, ideal, *, paranoid=False, check=True):
        labels = tuple(labels)
        family = sorted(set(family))
        ideal = [tuple(p) for p in ideal]
        if check:
            problems = validate(labels, family, ideal, paranoid=paranoid)
            if problems:
                raise InvalidStructure(problems)
        self.labels = labels
        self.family = tuple(family)
        self.ideal = frozenset(ideal)
        self._family_set = frozenset(family)
        self._key = None

    @classmethod
    def _trusted(cls, labels, family, ideal):
        return cls(labels, family, ideal, check=False)

    @classmethod
    def from_sets(cls, labels, family, ideal=None, *, generators=None, paranoid=False):
        """Build from label collections.

        Either ``ideal`` lists every pair, or ``generators`` lists pairs whose
        downward closure (plus all reflexive pairs) is the ideal.
        """
        labels = tuple(labels)
        index = {x: i for i, x in enumerate(labels)}

        def m(subset):
            try:
                return sum(1 << index[x] for x in set(subset))
            except KeyError as e:
                raise InvalidStructure([Violation("unknown label", f"{e.args[0]!r} is not an element")]) from None

        fam = [m(s) for s in family]
        if generators is not None:
            pairs = close_ideal(fam, [(m(s), m(t)) for s, t in generators])
        else:
            pairs = [(m(s), m(t)) for s, t in ideal or ()]
        return cls(labels, fam, pairs, paranoid=paranoid)

    # basic accessors
    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << len(self.labels)) - 1

    def in_family(self, s: int) -> bool:
        return s in self._family_set

    def in_ideal(self, s: int, t: int) -> bool:
        return (s, t) in self.ideal

    def mask(self, subset) -> int:
        """Mask of ``subset`` given as a mask or a collection of labels."""
        if isinstance(subset, int):
            if subset < 0 or subset & ~self.full:
                raise ValueError(f"subset {subset!r} does not fit {self.n} elements")
            return subset
        out = 0
        for x in subset:
            try:
                out |= 1 << self.labels.index(x)
            except ValueError:
                raise ValueError(f"{x!r} is not an element") from None
        return out

    def labels_of(self, mask: int) -> frozenset:
        return frozenset(self.labels[i] for i in bits(mask))

    def key(self):
        if self._key is None:
            lab = self.labels_of
            self._key = (
                frozenset(self.labels),
                frozenset(lab(s) for s in self.family),
                frozenset((lab(s), lab(t)) for s, t in self.ideal),
            )
        return self._key

    def __eq__(self, other):
        if not isinstance(other, ColoringProblem):
            return NotImplemented
        if self.labels == other.labels:
            return self.family == other.family and self.ideal == other.ideal
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return (f"ColoringProblem(elements={list(self.labels)}, "
                f"family={[_fmt(s, self.labels) for s in self.family]}, "
                f"ideal_size={len(self.ideal)})")

    # uniform structure surface shared with the species classes
    def product(self, other):
        return product(self, other)

    def restrict(self, subset):
        return restrict(self, subset)

    def contract(self, subset):
        return contract(self, subset)

    def is_stable(self):
        return is_stable(self)

    def relabel(self, mapping):
        return relabel(self, mapping)

    def empty(self):
        return unit()


def unit() -> ColoringProblem:
    """The problem on the empty ground set; the unit of the product."""
    return ColoringProblem._trusted((), (0,), ((0, 0),))


def close_ideal(family, generators) -> set[tuple[int, int]]:
    """Downward closure of ``generators`` inside Int(family), plus reflexive pairs."""
    fam = sorted(set(family))
    out = {(s, s) for s in fam}
    for s, t in generators:
        inside = [x for x in fam if is_subset(s, x) and is_subset(x, t)]
        out.update((a, b) for a in inside for b in inside if is_subset(a, b))
    return out


def full_interval_set(family) -> frozenset[tuple[int, int]]:
    """All nested pairs of family members: the interval poset Int(p)."""
    return frozenset(nested_pairs(family))


def product(c: ColoringProblem, d: ColoringProblem) -> ColoringProblem:
    """Product on the disjoint union; the labels of ``c`` come first."""
    clash = set(c.labels) & set(d.labels)
    if clash:
        raise ValueError(f"non-disjoint ground sets: {sorted(clash)}")
    k = c.n
    family = [x | y << k for x in c.family for y in d.family]
    ideal = [(x | y << k, x2 | y2 << k) for x, x2 in c.ideal for y, y2 in d.ideal]
    return ColoringProblem._trusted(c.labels + d.labels, family, ideal)


def restrict(c: ColoringProblem, subset):
    """``c|_S`` on ground set ``S``, or ``None`` when ``S`` is not in the family."""
    s = c.mask(subset)
    if not c.in_family(s):
        return None
    keep = list(bits(s))
    family = [compress(t, keep) for t in c.family if is_subset(t, s)]
    ideal = [(compress(x, keep), compress(y, keep)) for x, y in c.ideal if is_subset(y, s)]
    return ColoringProblem._trusted(tuple(c.labels[i] for i in keep), family, ideal)


def contract(c: ColoringProblem, subset):
    """``c/S`` on ground set ``N - S``, or ``None`` when ``S`` is not in the family."""
    s = c.mask(subset)
    if not c.in_family(s):
        return None
    keep = list(bits(c.full & ~s))
    family = [compress(t, keep) for t in c.family if is_subset(s, t)]
    ideal = [(compress(x, keep), compress(y, keep)) for x, y in c.ideal if is_subset(s, x)]
    return ColoringProblem._trusted(tuple(c.labels[i] for i in keep), family, ideal)


def is_stable(c: ColoringProblem) -> bool:
    # a valid ideal is a subset of Int(p), so comparing sizes suffices
    return len(c.ideal) == len(nested_pairs(c.family))


def relabel(c: ColoringProblem, mapping: Mapping[str, str]) -> ColoringProblem:
    """Rename elements through the bijection ``mapping``; masks are unchanged."""
    missing = [x for x in c.labels if x not in mapping]
    if missing:
        raise ValueError(f"relabeling is not total: {missing} unmapped")
    new = tuple(mapping[x] for x in c.labels)
    if len(set(new)) != len(new):
        raise ValueError("relabeling is not injective")
    return ColoringProblem._trusted(new, c.family, c.ideal)

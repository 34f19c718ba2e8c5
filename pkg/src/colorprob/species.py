"""Graphs, hypergraphs, posets, matroids and antimatroids as combinatorial Hopf monoids.

Every structure class offers the same surface as :class:`ColoringProblem`:
``product``, ``restrict``, ``contract`` (``None`` is the base point),
``is_stable``, ``relabel`` and ``empty``.  Subsets are passed either as label
collections or as masks over ``labels``.  :func:`phi` is the terminal
morphism into coloring problems and :func:`psi` the quasisymmetric invariant.
"""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Union

from .core import ColoringProblem, InvalidStructure, Violation, bits, is_subset, popcount
from .qsym import QSymPoly


class Structure:
    """Shared plumbing: labels, subset coercion, label-based equality."""

    kind = "structure"
    labels: tuple[str, ...]

    def _init_labels(self, labels):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise InvalidStructure([Violation("duplicate labels", f"labels repeated in {list(labels)}")])
        self.labels = labels

    @property
    def n(self) -> int:
        return len(self.labels)

    def subset(self, s) -> frozenset:
        if isinstance(s, int):
            if s < 0 or s >> self.n:
                raise ValueError(f"subset {s!r} does not fit {self.n} elements")
            return frozenset(self.labels[i] for i in bits(s))
        s = frozenset(s)
        unknown = s - set(self.labels)
        if unknown:
            raise ValueError(f"not elements: {sorted(unknown)}")
        return s

    def mask(self, s) -> int:
        s = self.subset(s)
        return sum(1 << i for i, x in enumerate(self.labels) if x in s)

    def _key(self):
        raise NotImplementedError

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return frozenset(self.labels) == frozenset(other.labels) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self.labels), self._key()))

    def _check_disjoint(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot multiply {type(self).__name__} by {type(other).__name__}")
        clash = set(self.labels) & set(other.labels)
        if clash:
            raise ValueError(f"non-disjoint ground sets: {sorted(clash)}")

    def _rename(self, mapping):
        missing = [x for x in self.labels if x not in mapping]
        if missing:
            raise ValueError(f"relabeling is not total: {missing} unmapped")
        new = tuple(mapping[x] for x in self.labels)
        if len(set(new)) != len(new):
            raise ValueError("relabeling is not injective")
        return new

    def _keep(self, s):
        return tuple(x for x in self.labels if x in s)


def _set_family_mapped(family, mapping):
    return [frozenset(mapping[x] for x in block) for block in family]


class Graph(Structure):
    kind = "graph"

    def __init__(self, labels, edges=()):
        self._init_labels(labels)
        es = set()
        for e in edges:
            e = tuple(e)
            if len(e) != 2 or e[0] == e[1]:
                raise InvalidStructure([Violation("bad edge", f"{e!r} is not a pair of distinct vertices")])
            if not set(e) <= set(self.labels):
                raise InvalidStructure([Violation("bad edge", f"{e!r} has an endpoint outside the vertex set")])
            es.add(frozenset(e))
        self.edges = frozenset(es)

    def _key(self):
        return self.edges

    def __repr__(self):
        return f"Graph({list(self.labels)}, edges={sorted(sorted(e) for e in self.edges)})"

    def product(self, other):
        self._check_disjoint(other)
        return Graph(self.labels + other.labels, self.edges | other.edges)

    def _induced(self, keep):
        keep_set = set(keep)
        return Graph(keep, [e for e in self.edges if e <= keep_set])

    def restrict(self, s):
        return self._induced(self._keep(self.subset(s)))

    def contract(self, s):
        s = self.subset(s)
        return self._induced(tuple(x for x in self.labels if x not in s))

    def is_stable(self):
        return not self.edges

    def relabel(self, mapping):
        return Graph(self._rename(mapping), _set_family_mapped(self.edges, mapping))

    def empty(self):
        return Graph(())


class Hypergraph(Structure):
    """Hypergraph with edges of size at least 2 (size 1 allowed on request)."""

    kind = "hypergraph"

    def __init__(self, labels, edges=(), allow_singletons=False):
        self._init_labels(labels)
        self.allow_singletons = allow_singletons
        smallest = 1 if allow_singletons else 2
        es = set()
        for e in edges:
            e = frozenset(e)
            if len(e) < smallest:
                raise InvalidStructure([Violation("bad edge", f"edge {sorted(e)} has fewer than {smallest} vertices")])
            if not e <= set(self.labels):
                raise InvalidStructure([Violation("bad edge", f"edge {sorted(e)} leaves the vertex set")])
            es.add(e)
        self.edges = frozenset(es)

    def _key(self):
        return self.edges

    def __repr__(self):
        return f"Hypergraph({list(self.labels)}, edges={sorted(sorted(e) for e in self.edges)})"

    def _make(self, labels, edges):
        return Hypergraph(labels, edges, allow_singletons=self.allow_singletons)

    def product(self, other):
        self._check_disjoint(other)
        return Hypergraph(self.labels + other.labels, self.edges | other.edges,
                          allow_singletons=self.allow_singletons or other.allow_singletons)

    def _induced(self, keep):
        keep_set = set(keep)
        return self._make(keep, [e for e in self.edges if e <= keep_set])

    def restrict(self, s):
        return self._induced(self._keep(self.subset(s)))

    def contract(self, s):
        s = self.subset(s)
        return self._induced(tuple(x for x in self.labels if x not in s))

    def is_stable(self):
        return not self.edges

    def relabel(self, mapping):
        return self._make(self._rename(mapping), _set_family_mapped(self.edges, mapping))

    def empty(self):
        return self._make((), ())


class Poset(Structure):
    """Partial order; ``leq`` stores the full reflexive-transitive relation as (a, b) with a <= b."""

    kind = "poset"

    def __init__(self, labels, less=()):
        self._init_labels(labels)
        index = set(self.labels)
        rel = {(x, x) for x in self.labels}
        for a, b in less:
            if a not in index or b not in index:
                raise InvalidStructure([Violation("bad relation", f"({a!r}, {b!r}) leaves the ground set")])
            rel.add((a, b))
        # transitive closure (Warshall)
        up = {x: {b for a, b in rel if a == x} for x in self.labels}
        for k in self.labels:
            for i in self.labels:
                if k in up[i]:
                    up[i] |= up[k]
        for a in self.labels:
            for b in up[a]:
                if a != b and a in up[b]:
                    raise InvalidStructure([Violation("not antisymmetric", f"{a!r} and {b!r} lie on a cycle")])
        self.leq = frozenset((a, b) for a in self.labels for b in up[a])

    def _key(self):
        return self.leq

    def __repr__(self):
        return f"Poset({list(self.labels)}, covers={self.covers()})"

    def less_than(self, a, b) -> bool:
        return a != b and (a, b) in self.leq

    def covers(self) -> list[tuple[str, str]]:
        """Covering pairs (a, b): a < b with nothing strictly between."""
        out = []
        for a, b in self.leq:
            if a == b:
                continue
            if not any(self.less_than(a, z) and self.less_than(z, b) for z in self.labels):
                out.append((a, b))
        pos = {x: i for i, x in enumerate(self.labels)}
        return sorted(out, key=lambda p: (pos[p[0]], pos[p[1]]))

    def is_order_ideal(self, s) -> bool:
        s = self.subset(s)
        return all(a in s for a, b in self.leq if b in s)

    def order_ideals(self) -> list[frozenset]:
        return [s for s in (self.subset(m) for m in range(1 << self.n)) if self.is_order_ideal(s)]

    def _induced(self, keep):
        keep_set = set(keep)
        return Poset(keep, [(a, b) for a, b in self.leq if a in keep_set and b in keep_set])

    def product(self, other):
        self._check_disjoint(other)
        return Poset(self.labels + other.labels, self.leq | other.leq)

    def restrict(self, s):
        s = self.subset(s)
        if not self.is_order_ideal(s):
            return None
        return self._induced(self._keep(s))

    def contract(self, s):
        s = self.subset(s)
        if not self.is_order_ideal(s):
            return None
        return self._induced(tuple(x for x in self.labels if x not in s))

    def is_stable(self):
        return all(a == b for a, b in self.leq)

    def relabel(self, mapping):
        return Poset(self._rename(mapping), [(mapping[a], mapping[b]) for a, b in self.leq])

    def empty(self):
        return Poset(())


def _exchange_violation(bases):
    for b1 in bases:
        for b2 in bases:
            for x in b1 - b2:
                if not any((b1 - {x}) | {y} in bases for y in b2 - b1):
                    return b1, b2, x
    return None


class Matroid(Structure):
    """Matroid given by its bases; minors are computed from the basis list."""

    kind = "matroid"

    def __init__(self, labels, bases):
        self._init_labels(labels)
        bs = frozenset(frozenset(b) for b in bases)
        if not bs:
            raise InvalidStructure([Violation("no bases", "a matroid needs at least one basis")])
        if len({len(b) for b in bs}) != 1:
            raise InvalidStructure([Violation("unequal bases", "bases have different sizes")])
        for b in bs:
            if not b <= set(self.labels):
                raise InvalidStructure([Violation("bad basis", f"basis {sorted(b)} leaves the ground set")])
        bad = _exchange_violation(bs)
        if bad:
            b1, b2, x = bad
            raise InvalidStructure([Violation(
                "basis exchange",
                f"removing {x!r} from {sorted(b1)} admits no replacement from {sorted(b2)}",
            )])
        self.bases = bs

    def _key(self):
        return self.bases

    def __repr__(self):
        return f"Matroid({list(self.labels)}, bases={sorted(sorted(b) for b in self.bases)})"

    @property
    def rank(self) -> int:
        return len(next(iter(self.bases)))

    def loops(self) -> frozenset:
        return frozenset(x for x in self.labels if not any(x in b for b in self.bases))

    def coloops(self) -> frozenset:
        return frozenset(x for x in self.labels if all(x in b for b in self.bases))

    def is_loop_coloop_only(self) -> bool:
        """Every element is a loop or a coloop (the stable matroids)."""
        return len(self.loops()) + len(self.coloops()) == self.n

    def product(self, other):
        self._check_disjoint(other)
        return Matroid(self.labels + other.labels, [a | b for a in self.bases for b in other.bases])

    def restrict(self, s):
        s = self.subset(s)
        r = max(len(b & s) for b in self.bases)
        return Matroid(self._keep(s), {b & s for b in self.bases if len(b & s) == r})

    def contract(self, s):
        s = self.subset(s)
        r = max(len(b & s) for b in self.bases)
        return Matroid(tuple(x for x in self.labels if x not in s),
                       {b - s for b in self.bases if len(b & s) == r})

    def is_stable(self):
        return len(self.bases) == 1

    def relabel(self, mapping):
        return Matroid(self._rename(mapping), _set_family_mapped(self.bases, mapping))

    def empty(self):
        return Matroid((), [()])


class Antimatroid(Structure):
    """Accessible, union-closed family of feasible sets containing the empty set."""

    kind = "antimatroid"

    def __init__(self, labels, feasible):
        self._init_labels(labels)
        fam = frozenset(frozenset(x) for x in feasible)
        problems = antimatroid_violations(self.labels, fam)
        if problems:
            raise InvalidStructure(problems)
        self.feasible = fam

    def _key(self):
        return self.feasible

    def __repr__(self):
        pos = {x: i for i, x in enumerate(self.labels)}
        fam = sorted((sorted(s, key=pos.get) for s in self.feasible), key=lambda s: (len(s), [pos[x] for x in s]))
        return f"Antimatroid({list(self.labels)}, feasible={fam})"

    def product(self, other):
        self._check_disjoint(other)
        return Antimatroid(self.labels + other.labels, [a | b for a in self.feasible for b in other.feasible])

    def restrict(self, s):
        s = self.subset(s)
        if s not in self.feasible:
            return None
        return Antimatroid(self._keep(s), [x for x in self.feasible if x <= s])

    def contract(self, s):
        s = self.subset(s)
        if s not in self.feasible:
            return None
        return Antimatroid(tuple(x for x in self.labels if x not in s), [x - s for x in self.feasible if s <= x])

    def is_stable(self):
        return len(self.feasible) == 1 << self.n

    def relabel(self, mapping):
        return Antimatroid(self._rename(mapping), _set_family_mapped(self.feasible, mapping))

    def empty(self):
        return Antimatroid((), [()])


def antimatroid_violations(labels, feasible) -> list[Violation]:
    out = []
    ground = frozenset(labels)
    if frozenset() not in feasible:
        out.append(Violation("empty set absent", "the empty set must be feasible"))
    if ground not in feasible:
        out.append(Violation("full set absent", "the ground set must be feasible"))
    for x in feasible:
        if not x <= ground:
            out.append(Violation("bad feasible set", f"{sorted(x)} leaves the ground set"))
    for a in feasible:
        for b in feasible:
            if a | b not in feasible:
                out.append(Violation("union closure", f"{sorted(a)} | {sorted(b)} is not feasible"))
                return out
    for x in feasible:
        if x and not any(x - {e} in feasible for e in x):
            out.append(Violation("accessibility", f"no element of {sorted(x)} can be removed feasibly"))
    return out


HopfStructure = Union[ColoringProblem, Graph, Hypergraph, Poset, Matroid, Antimatroid]

SPECIES = {
    "coloring-problem": ColoringProblem,
    "graph": Graph,
    "hypergraph": Hypergraph,
    "poset": Poset,
    "matroid": Matroid,
    "antimatroid": Antimatroid,
}


def species_product(x: HopfStructure, y: HopfStructure) -> HopfStructure:
    if type(x) is not type(y):
        raise TypeError(f"mixed variants: {type(x).__name__} and {type(y).__name__}")
    return x.product(y)


def species_restrict(x: HopfStructure, s):
    return x.restrict(s)


def species_contract(x: HopfStructure, s):
    return x.contract(s)


def species_is_stable(x: HopfStructure) -> bool:
    return x.is_stable()


def _label_subset(x, m: int) -> frozenset:
    return frozenset(x.labels[i] for i in bits(m))


def phi(x: HopfStructure) -> ColoringProblem:
    """Terminal morphism: (sets with nonzero restriction, intervals with stable minor)."""
    n = len(x.labels)
    restricted = {}
    for m in range(1 << n):
        r = x.restrict(_label_subset(x, m))
        if r is not None:
            restricted[m] = r
    family = sorted(restricted)
    ideal = []
    for t in family:
        for s in family:
            if is_subset(s, t):
                minor = restricted[t].contract(_label_subset(x, s))
                if minor is not None and minor.is_stable():
                    ideal.append((s, t))
    return ColoringProblem(x.labels, family, ideal)


def psi(x: HopfStructure) -> QSymPoly:
    """Sum over chains 0 = S_0 < ... < S_k = N with every x|S_i / S_(i-1) stable of M_type."""
    n = len(x.labels)
    full = (1 << n) - 1
    restricted = {}

    def rest(m):
        if m not in restricted:
            restricted[m] = x.restrict(_label_subset(x, m))
        return restricted[m]

    counts = Counter()

    def walk(s, steps):
        if s == full:
            counts[tuple(steps)] += 1
            return
        rest_mask = full & ~s
        sub = rest_mask
        while sub:
            t = s | sub
            top = rest(t)
            if top is not None:
                minor = top.contract(_label_subset(x, s))
                if minor is not None and minor.is_stable():
                    steps.append(popcount(sub))
                    walk(t, steps)
                    steps.pop()
            sub = (sub - 1) & rest_mask

    if rest(0) is not None:
        walk(0, [])
    return QSymPoly(counts)


def poset_to_antimatroid(p: Poset) -> Antimatroid:
    """The antimatroid of order ideals of ``p``."""
    return Antimatroid(p.labels, p.order_ideals())


def all_subsets(labels) -> list[frozenset]:
    return [frozenset(c) for r in range(len(labels) + 1) for c in itertools.combinations(labels, r)]

"""Seeded random instances of every structure, for the law suites."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, replace
from functools import lru_cache

from .core import ColoringProblem, close_ideal, nested_pairs
from .species import Antimatroid, Graph, Hypergraph, Matroid, Poset, _exchange_violation

MAX_GEN_SIZE = 5


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    ground_size: int = 4
    edge_prob: float = 0.5
    relation_prob: float = 0.4
    basis_count: int | None = None
    family_density: float = 0.5
    ideal_density: float = 0.4

    def __post_init__(self):
        if not 1 <= self.ground_size <= MAX_GEN_SIZE:
            raise ValueError(f"ground_size must be in 1..{MAX_GEN_SIZE}")
        for name in ("edge_prob", "relation_prob", "family_density", "ideal_density"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name}={p} is not a probability")
        if self.basis_count is not None and self.basis_count < 1:
            raise ValueError("basis_count must be positive")

    def rng(self) -> random.Random:
        return random.Random(self.seed)

    def with_seed(self, seed) -> "GenConfig":
        return replace(self, seed=seed)


def default_labels(n: int, offset: int = 0) -> tuple[str, ...]:
    """a, b, c, ... ; past z the labels become e26, e27, ..."""
    return tuple(chr(ord("a") + i) if i < 26 else f"e{i}" for i in range(offset, offset + n))


def _setup(cfg, rng, n, labels):
    rng = rng if rng is not None else cfg.rng()
    n = cfg.ground_size if n is None else n
    labels = default_labels(n) if labels is None else tuple(labels)
    if len(labels) != n:
        raise ValueError("need exactly one label per element")
    return rng, n, labels


def gen_coloring_problem(cfg: GenConfig, rng=None, n=None, labels=None) -> ColoringProblem:
    """Random family containing 0 and N, ideal = downward closure of random pairs."""
    rng, n, labels = _setup(cfg, rng, n, labels)
    full = (1 << n) - 1
    family = {0, full}
    for m in range(1, full):
        if rng.random() < cfg.family_density:
            family.add(m)
    candidates = [(s, t) for s, t in nested_pairs(family) if s != t]
    gens = [p for p in candidates if rng.random() < cfg.ideal_density]
    return ColoringProblem(labels, family, close_ideal(family, gens))


def gen_graph(cfg: GenConfig, rng=None, n=None, labels=None) -> Graph:
    rng, n, labels = _setup(cfg, rng, n, labels)
    edges = [e for e in itertools.combinations(labels, 2) if rng.random() < cfg.edge_prob]
    return Graph(labels, edges)


def gen_hypergraph(cfg: GenConfig, rng=None, n=None, labels=None) -> Hypergraph:
    rng, n, labels = _setup(cfg, rng, n, labels)
    edges = []
    if n >= 2:
        for _ in range(rng.randint(0, n)):
            if rng.random() < cfg.edge_prob:
                size = rng.randint(2, n)
                edges.append(rng.sample(labels, size))
    return Hypergraph(labels, edges)


def gen_poset(cfg: GenConfig, rng=None, n=None, labels=None) -> Poset:
    """Random DAG along a shuffled linear order, closed transitively."""
    rng, n, labels = _setup(cfg, rng, n, labels)
    order = list(labels)
    rng.shuffle(order)
    less = [(a, b) for i, a in enumerate(order) for b in order[i + 1:] if rng.random() < cfg.relation_prob]
    return Poset(labels, less)


@lru_cache(maxsize=None)
def _matroid_bases_catalog(n: int) -> tuple[frozenset, ...]:
    """Every basis family on range(n) passing the exchange axiom, as frozensets of index sets."""
    if n > MAX_GEN_SIZE:
        raise ValueError(f"matroid catalog limited to {MAX_GEN_SIZE} elements")
    out = []
    for r in range(n + 1):
        cands = [frozenset(c) for c in itertools.combinations(range(n), r)]
        for pick in range(1, 1 << len(cands)):
            bases = frozenset(cands[i] for i in range(len(cands)) if pick >> i & 1)
            if _exchange_violation(bases) is None:
                out.append(bases)
    return tuple(out)


def matroid_catalog(labels) -> list[Matroid]:
    """All matroids on the given labels (labeled, not up to isomorphism)."""
    labels = tuple(labels)
    return [Matroid(labels, [[labels[i] for i in b] for b in bases])
            for bases in _matroid_bases_catalog(len(labels))]


def gen_matroid(cfg: GenConfig, rng=None, n=None, labels=None) -> Matroid:
    rng, n, labels = _setup(cfg, rng, n, labels)
    catalog = _matroid_bases_catalog(n)
    if cfg.basis_count is not None:
        sized = [b for b in catalog if len(b) == cfg.basis_count]
        catalog = sized or catalog
    bases = rng.choice(catalog)
    return Matroid(labels, [[labels[i] for i in b] for b in bases])


def gen_antimatroid(cfg: GenConfig, rng=None, n=None, labels=None) -> Antimatroid:
    """Union closure of random seeds, repaired until accessible."""
    rng, n, labels = _setup(cfg, rng, n, labels)
    ground = frozenset(labels)
    fam = {frozenset(), ground}
    for m in range(1, (1 << n) - 1):
        if rng.random() < cfg.family_density:
            fam.add(frozenset(labels[i] for i in range(n) if m >> i & 1))
    while True:
        changed = False
        for a, b in itertools.combinations(list(fam), 2):
            if a | b not in fam:
                fam.add(a | b)
                changed = True
        for x in sorted(fam, key=lambda s: (len(s), sorted(s))):
            if x and not any(x - {e} in fam for e in x):
                fam.add(x - {rng.choice(sorted(x))})
                changed = True
        if not changed:
            return Antimatroid(labels, fam)


GENERATORS = {
    "coloring-problem": gen_coloring_problem,
    "graph": gen_graph,
    "hypergraph": gen_hypergraph,
    "poset": gen_poset,
    "matroid": gen_matroid,
    "antimatroid": gen_antimatroid,
}

SPECIES_TAGS = {
    "C": "coloring-problem",
    "G": "graph",
    "HG": "hypergraph",
    "P": "poset",
    "M": "matroid",
    "A": "antimatroid",
}


def species_tag(tag: str) -> str:
    """Normalize a short tag (C, G, HG, P, M, A) or a JSON type name."""
    if tag in GENERATORS:
        return tag
    try:
        return SPECIES_TAGS[tag.upper()]
    except KeyError:
        raise ValueError(f"unknown species {tag!r}; use one of {sorted(SPECIES_TAGS)} or {sorted(GENERATORS)}") from None


def generate(variant: str, cfg: GenConfig, rng=None, n=None, labels=None):
    return GENERATORS[species_tag(variant)](cfg, rng=rng, n=n, labels=labels)

"""Randomized law suites: Hopf monoid axioms per species, and cross-module identities.

Every trial draws its instances from its own RNG, seeded by (seed, suite, law,
trial index), so reports are reproducible and independent of trial order.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field
from math import comb
from typing import Callable

from .core import ColoringProblem, validate
from .generators import GenConfig, default_labels, generate, species_tag
from .geometry import count_lattice_points, ehrhart_qsym, flag_of_point, hilbert_function, surviving_flags
from .invariants import (
    chromatic_polynomial,
    chromatic_qsym,
    count_colorings,
    enumerate_stable_flags,
    is_proper_coloring,
)
from .qsym import principal_specialization, qsym_mul
from .serialize import to_json
from .species import phi, poset_to_antimatroid, psi

MAX_SUITE_SIZE = 5


@dataclass
class SuiteReport:
    suite: str
    trials: int
    failures: list[tuple[str, str]] = field(default_factory=list)
    elapsed: float = 0.0
    laws: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def failed_laws(self) -> set[str]:
        return {law for law, _ in self.failures}

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        head = (f"{status} {self.suite}: {self.trials} trials, {len(self.laws)} laws, "
                f"{len(self.failures)} failures, {self.elapsed:.2f}s")
        lines = [head]
        for law, example in self.failures[:10]:
            lines.append(f"  {law}: {example}")
        if len(self.failures) > 10:
            lines.append(f"  ... {len(self.failures) - 10} more")
        return "\n".join(lines)


@dataclass(frozen=True)
class HopfOps:
    """The operations a suite exercises; tests swap in broken ones to check the harness."""

    product: Callable = lambda x, y: x.product(y)
    restrict: Callable = lambda x, s: x.restrict(s)
    contract: Callable = lambda x, s: x.contract(s)
    is_stable: Callable = lambda x: x.is_stable()
    relabel: Callable = lambda x, m: x.relabel(m)


DEFAULT_OPS = HopfOps()


def describe(*items) -> str:
    out = []
    for item in items:
        if item is None:
            out.append("0")
        elif hasattr(item, "labels"):
            out.append(json.dumps(to_json(item), sort_keys=True, separators=(",", ":")))
        elif isinstance(item, frozenset):
            out.append("{" + ",".join(sorted(item)) + "}")
        else:
            out.append(repr(item))
    return " | ".join(out)


def _trial_rng(seed, suite, law, trial) -> random.Random:
    return random.Random(f"{seed}:{suite}:{law}:{trial}")


def _random_subset(rng, labels) -> frozenset:
    return frozenset(x for x in labels if rng.random() < 0.5)


def _sizes(rng, total, parts):
    """``parts`` sizes, the first at least 1, summing to at most ``total``."""
    out = [rng.randint(1, total)]
    for _ in range(parts - 1):
        out.append(rng.randint(0, total - sum(out)))
    return out


def _draw(variant, cfg, rng, sizes):
    out, offset = [], 0
    for n in sizes:
        out.append(generate(variant, cfg, rng=rng, n=n, labels=default_labels(n, offset)))
        offset += n
    return out


def well_formed(x) -> bool:
    if isinstance(x, ColoringProblem):
        return not validate(x.labels, x.family, x.ideal)
    return True


# -- Hopf monoid axioms -----------------------------------------------------

def check_axioms(x, y, z, rng, ops: HopfOps = DEFAULT_OPS) -> list[tuple[str, str]]:
    """Every bimonoid / combinatorial Hopf monoid law on one triple of disjoint structures."""
    fails = []

    def fail(law, *items):
        fails.append((law, describe(*items)))

    def R(a, s):
        return None if a is None else ops.restrict(a, s)

    def C(a, s):
        return None if a is None else ops.contract(a, s)

    def mul(a, b):
        return None if a is None or b is None else ops.product(a, b)

    N = frozenset(x.labels)
    one = x.empty()

    # monoid
    if mul(mul(x, y), z) != mul(x, mul(y, z)):
        fail("associativity", x, y, z)
    if mul(one, x) != x or mul(x, one) != x:
        fail("unit", x)
    xy = mul(x, y)
    if xy is None or not well_formed(xy):
        fail("zero-divisor", x, y)
        return fails

    # naturality under a random bijection onto fresh labels
    both = list(x.labels) + list(y.labels)
    fresh = [f"v{i}" for i in range(len(both))]
    rng.shuffle(fresh)
    sigma = dict(zip(both, fresh))
    if ops.relabel(xy, sigma) != mul(ops.relabel(x, {k: sigma[k] for k in x.labels}),
                                     ops.relabel(y, {k: sigma[k] for k in y.labels})):
        fail("naturality", x, y)
    s = _random_subset(rng, both)
    s_img = frozenset(sigma[k] for k in s)
    for op, name in ((R, "restriction"), (C, "contraction")):
        direct = op(xy, s)
        moved = op(ops.relabel(xy, sigma), s_img)
        if direct is None or moved is None:
            if (direct is None) != (moved is None):
                fail("naturality", xy, s, name)
            continue
        if ops.relabel(direct, {k: sigma[k] for k in direct.labels}) != moved:
            fail("naturality", xy, s, name)

    # comonoid
    if R(x, N) != x or C(x, frozenset()) != x:
        fail("counit", x)
    for m in range(1 << len(x.labels)):
        t = frozenset(x.labels[i] for i in range(len(x.labels)) if m >> i & 1)
        if (R(x, t) is None) != (C(x, t) is None):
            fail("zero conditions", x, t)
    for _ in range(8):
        big = _random_subset(rng, x.labels)
        small = _random_subset(rng, big)
        mid = C(R(x, big), small)
        if mid != R(C(x, small), big - small):
            fail("coassociativity", x, small, big)
        if mid is not None:
            if R(R(x, big), small) != R(x, small):
                fail("coassociativity", x, small, big)
            if C(x, big) != C(C(x, small), big - small):
                fail("coassociativity", x, small, big)
        if R(x, small) is not None and R(x, big) is not None and mid is None:
            fail("combinatorial comonoid", x, small, big)

    # bimonoid compatibility
    M, Nn = frozenset(x.labels), frozenset(y.labels)
    for _ in range(4):
        t = _random_subset(rng, both)
        if R(xy, t) != mul(R(x, t & M), R(y, t & Nn)):
            fail("bimonoid compatibility", x, y, t, "restriction")
        if C(xy, t) != mul(C(x, t & M), C(y, t & Nn)):
            fail("bimonoid compatibility", x, y, t, "contraction")

    # stable structures: Hopf submonoid, unstable ones an ideal
    sx, sy = ops.is_stable(x), ops.is_stable(y)
    if not ops.is_stable(one):
        fail("stable submonoid", one)
    if sx and sy and not ops.is_stable(xy):
        fail("stable submonoid", x, y)
    if not (sx and sy) and ops.is_stable(xy):
        fail("unstable ideal", x, y)
    if sx:
        for _ in range(4):
            t = _random_subset(rng, x.labels)
            for minor in (R(x, t), C(x, t)):
                if minor is not None and not ops.is_stable(minor):
                    fail("stable subcomonoid", x, t)

    # minors stay inside the species
    for _ in range(4):
        t = _random_subset(rng, x.labels)
        for minor in (R(x, t), C(x, t)):
            if minor is not None and not well_formed(minor):
                fail("well-formed minors", x, t)
    return fails


AXIOM_LAWS = (
    "associativity", "unit", "zero-divisor", "naturality", "counit", "zero conditions",
    "coassociativity", "combinatorial comonoid", "bimonoid compatibility",
    "stable submonoid", "unstable ideal", "stable subcomonoid", "well-formed minors",
)


def run_axiom_suite(variant: str, trials: int, cfg: GenConfig, ops: HopfOps = DEFAULT_OPS) -> SuiteReport:
    """Check the Hopf monoid axioms on ``trials`` random triples of one species."""
    if cfg.ground_size > MAX_SUITE_SIZE:
        raise ValueError(f"suites are limited to ground size {MAX_SUITE_SIZE}")
    tag = species_tag(variant)
    report = SuiteReport(f"axioms[{tag}]", trials, laws=list(AXIOM_LAWS))
    start = time.perf_counter()
    for trial in range(trials):
        rng = _trial_rng(cfg.seed, report.suite, "all", trial)
        x, y, z = _draw(tag, cfg, rng, _sizes(rng, cfg.ground_size, 3))
        report.failures.extend(check_axioms(x, y, z, rng, ops))
    report.elapsed = time.perf_counter() - start
    return report


# -- cross-module identities --------------------------------------------------

def law_oracle_agreement(rng, cfg):
    (c,) = _draw("coloring-problem", cfg, rng, _sizes(rng, cfg.ground_size, 1))
    poly = chromatic_polynomial(c)
    return [("oracle agreement", describe(c, k)) for k in range(6) if poly(k) != count_colorings(c, k)]


def law_specialization(rng, cfg):
    (c,) = _draw("coloring-problem", cfg, rng, _sizes(rng, cfg.ground_size, 1))
    q = chromatic_qsym(c)
    flags = list(enumerate_stable_flags(c))
    out = []
    for k in range(6):
        count = count_colorings(c, k)
        if principal_specialization(q, k) != count:
            out.append(("specialization", describe(c, k)))
        if sum(comb(k, len(f.type)) for f in flags) != count:
            out.append(("flag-coloring bijection", describe(c, k)))
    return out


def law_multiplicativity(rng, cfg):
    c, d = _draw("coloring-problem", cfg, rng, _sizes(rng, cfg.ground_size, 2))
    if chromatic_qsym(c.product(d)) != qsym_mul(chromatic_qsym(c), chromatic_qsym(d)):
        return [("multiplicativity", describe(c, d))]
    return []


def law_binomial(rng, cfg):
    (c,) = _draw("coloring-problem", cfg, rng, _sizes(rng, cfg.ground_size, 1))
    out = []
    minors = [(c.restrict(s), c.contract(s)) for s in c.family]
    for x in range(6):
        for y in range(6 - x):
            rhs = sum(count_colorings(r, x) * count_colorings(q, y) for r, q in minors)
            if count_colorings(c, x + y) != rhs:
                out.append(("binomial", describe(c, x, y)))
    return out


def law_hilbert(rng, cfg):
    (c,) = _draw("coloring-problem", cfg, rng, _sizes(rng, cfg.ground_size, 1))
    poly = chromatic_polynomial(c)
    return [("hilbert", describe(c, n)) for n in range(5) if hilbert_function(c, n) != poly(n + 1)]


def law_ehrhart(rng, cfg):
    (c,) = _draw("coloring-problem", cfg, rng, _sizes(rng, cfg.ground_size, 1))
    out = []
    if ehrhart_qsym(c) != chromatic_qsym(c):
        out.append(("ehrhart", describe(c)))
    for box in range(1, 5):
        if count_lattice_points(c, box) != count_colorings(c, box):
            out.append(("ehrhart lattice points", describe(c, box)))
    return out


def law_point_flag(rng, cfg):
    (c,) = _draw("coloring-problem", cfg, rng, _sizes(rng, cfg.ground_size, 1))
    flags = surviving_flags(c)
    out = []
    for point in itertools.product(range(1, 4), repeat=c.n):
        counted = (0,) + flag_of_point(point, c.labels) in flags
        if counted != is_proper_coloring(c, point):
            out.append(("point-flag consistency", describe(c, point)))
    return out


def law_phi_idempotent(rng, cfg):
    (c,) = _draw("coloring-problem", cfg, rng, _sizes(rng, cfg.ground_size, 1))
    return [] if phi(c) == c else [("phi idempotence", describe(c))]


def check_morphism(x, y, rng) -> list[tuple[str, str]]:
    """phi preserves product, restriction, contraction, stability; psi factors through phi."""
    out = []
    px = phi(x)
    if phi(x.product(y)) != px.product(phi(y)):
        out.append(("phi product", describe(x, y)))
    for m in range(1 << len(x.labels)):
        s = frozenset(x.labels[i] for i in range(len(x.labels)) if m >> i & 1)
        r, q = x.restrict(s), x.contract(s)
        pr, pq = px.restrict(s), px.contract(s)
        if (r is None) != (pr is None) or (r is not None and phi(r) != pr):
            out.append(("phi restriction", describe(x, s)))
        if (q is None) != (pq is None) or (q is not None and phi(q) != pq):
            out.append(("phi contraction", describe(x, s)))
    if x.is_stable() != px.is_stable():
        out.append(("phi stability", describe(x)))
    if psi(x) != chromatic_qsym(px):
        out.append(("psi preservation", describe(x)))
    return out


def _morphism_law(variant):
    def law(rng, cfg):
        x, y = _draw(variant, cfg, rng, _sizes(rng, cfg.ground_size, 2))
        return check_morphism(x, y, rng)

    law.__name__ = f"law_phi_morphism_{variant}"
    return law


def law_j_naturality(rng, cfg):
    p, q = _draw("poset", cfg, rng, _sizes(rng, cfg.ground_size, 2))
    J = poset_to_antimatroid
    out = []
    if J(p.product(q)) != J(p).product(J(q)):
        out.append(("J naturality", describe(p, q, "product")))
    for m in range(1 << p.n):
        s = p.subset(m)
        for name, a, b in (("restriction", p.restrict(s), J(p).restrict(s)),
                           ("contraction", p.contract(s), J(p).contract(s))):
            if (a is None) != (b is None) or (a is not None and J(a) != b):
                out.append(("J naturality", describe(p, s, name)))
    if p.is_stable() != J(p).is_stable():
        out.append(("J naturality", describe(p, "stability")))
    return out


THEOREM_LAWS: dict[str, Callable] = {
    "oracle agreement": law_oracle_agreement,
    "specialization": law_specialization,
    "multiplicativity": law_multiplicativity,
    "binomial": law_binomial,
    "hilbert": law_hilbert,
    "ehrhart": law_ehrhart,
    "point-flag consistency": law_point_flag,
    "phi idempotence": law_phi_idempotent,
    **{f"phi morphism [{v}]": _morphism_law(v)
       for v in ("coloring-problem", "graph", "hypergraph", "poset", "matroid", "antimatroid")},
    "J naturality": law_j_naturality,
}


def run_law(name: str, trials: int, cfg: GenConfig) -> SuiteReport:
    law = THEOREM_LAWS[name]
    report = SuiteReport(name, trials, laws=[name])
    start = time.perf_counter()
    for trial in range(trials):
        report.failures.extend(law(_trial_rng(cfg.seed, "theorems", name, trial), cfg))
    report.elapsed = time.perf_counter() - start
    return report


def run_theorem_suite(trials: int, cfg: GenConfig, laws=None) -> SuiteReport:
    """Run every cross-module identity (or the named subset) ``trials`` times."""
    if cfg.ground_size > MAX_SUITE_SIZE:
        raise ValueError(f"suites are limited to ground size {MAX_SUITE_SIZE}")
    names = list(THEOREM_LAWS) if laws is None else list(laws)
    report = SuiteReport("theorems", trials, laws=names)
    start = time.perf_counter()
    for name in names:
        report.failures.extend(run_law(name, trials, cfg).failures)
    report.elapsed = time.perf_counter() - start
    return report

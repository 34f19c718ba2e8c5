"""Brute-force oracles used by the tests.

Each one recomputes a quantity by a route that shares no code with the
library path it checks.
"""

import itertools
from collections import Counter
from math import comb


def surjective_coloring_qsym(c):
    """Coefficient of M_alpha = number of proper colorings onto [len(alpha)] with class sizes alpha."""
    out = Counter()
    n = len(c.labels)
    for k in range(n + 1):
        for f in itertools.product(range(1, k + 1), repeat=n):
            if set(f) != set(range(1, k + 1)):
                continue
            if proper(c, f):
                out[tuple(f.count(i) for i in range(1, k + 1))] += 1
    return dict(out)


def proper(c, f):
    """Literal reading: [f^-1([i]), f^-1([i+1])] in the ideal for every i up to max color."""
    top = max(f, default=0)
    for i in range(top + 1):
        lo = sum(1 << j for j, col in enumerate(f) if col <= i)
        hi = sum(1 << j for j, col in enumerate(f) if col <= i + 1)
        if (lo, hi) not in c.ideal:
            return False
    return True


def closure_violations(family, pairs):
    """Every (S,T) in pairs and S <= S' <= T' <= T in family with (S',T') missing."""
    out = []
    for s, t in pairs:
        for a in family:
            for b in family:
                if s & ~a == 0 and a & ~b == 0 and b & ~t == 0 and (a, b) not in pairs:
                    out.append((s, t, a, b))
    return out


def expand_monomials(terms, nvars):
    """Polynomial in x_1..x_nvars (exponent tuple -> coeff) of sum c_alpha M_alpha."""
    out = Counter()
    for alpha, k in terms.items():
        for idx in itertools.combinations(range(nvars), len(alpha)):
            exps = [0] * nvars
            for i, a in zip(idx, alpha):
                exps[i] = a
            out[tuple(exps)] += k
    return {e: k for e, k in out.items() if k}


def poly_mul(p, q):
    out = Counter()
    for e1, a in p.items():
        for e2, b in q.items():
            out[tuple(x + y for x, y in zip(e1, e2))] += a * b
    return {e: k for e, k in out.items() if k}


def graph_colorings(labels, edges, k):
    pos = {x: i for i, x in enumerate(labels)}
    return sum(
        all(f[pos[u]] != f[pos[v]] for u, v in edges)
        for f in itertools.product(range(k), repeat=len(labels))
    )


def strict_order_maps(labels, less, k):
    """Maps f into [k] with f(a) < f(b) whenever a < b."""
    pos = {x: i for i, x in enumerate(labels)}
    return sum(
        all(f[pos[a]] < f[pos[b]] for a, b in less)
        for f in itertools.product(range(k), repeat=len(labels))
    )


def matroid_independent(bases):
    return {frozenset(s) for b in bases for r in range(len(b) + 1) for s in itertools.combinations(sorted(b), r)}


def matroid_rank(bases, s):
    return max(len(set(b) & set(s)) for b in bases)


def contraction_bases(labels, bases, s):
    """Bases of m/S from independent sets: I is independent in m/S iff r(I u S) = |I| + r(S)."""
    s = frozenset(s)
    rest = [x for x in labels if x not in s]
    rs = matroid_rank(bases, s)
    indep = [frozenset(i) for r in range(len(rest) + 1) for i in itertools.combinations(rest, r)
             if matroid_rank(bases, set(i) | s) == len(i) + rs]
    top = max(len(i) for i in indep)
    return {i for i in indep if len(i) == top}


def restriction_bases(bases, s):
    indep = [i for i in matroid_independent(bases) if i <= frozenset(s)]
    top = max(len(i) for i in indep)
    return {i for i in indep if len(i) == top}


def interpolate_exact(values):
    """Newton forward differences: the polynomial through (k, values[k]) as a callable."""
    diffs, row = [], list(values)
    while row:
        diffs.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    return lambda x: sum(d * comb(x, j) for j, d in enumerate(diffs))

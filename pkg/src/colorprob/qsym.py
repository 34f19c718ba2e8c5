"""Compositions, monomial quasisymmetric functions and univariate polynomials.

All arithmetic is exact: integer coefficients in the monomial basis, and
``fractions.Fraction`` coefficients for polynomials (binomial polynomials
introduce denominators).
"""

from __future__ import annotations

import re
from collections import Counter
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping, Tuple

Composition = Tuple[int, ...]

MAX_COMPOSITION_WEIGHT = 20


def composition_key(alpha: Composition):
    """Canonical term order: by weight, then finer compositions first, then lexicographic."""
    return (sum(alpha), -len(alpha), alpha)


def compositions_of(n: int) -> list[Composition]:
    """All 2^(n-1) compositions of ``n`` (one empty composition for n = 0)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > MAX_COMPOSITION_WEIGHT:
        raise ValueError(f"n={n} too large, at most {MAX_COMPOSITION_WEIGHT}")
    if n == 0:
        return [()]
    out = []
    # each of the n-1 gaps between unit cells is either a cut or not
    for cuts in range(1 << (n - 1)):
        parts, run = [], 1
        for gap in range(n - 1):
            if cuts >> gap & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(tuple(parts))
    return sorted(out, key=composition_key)


def quasi_shuffle(alpha: Composition, beta: Composition) -> Counter:
    """Expansion of M_alpha * M_beta as a Counter over compositions."""
    if not alpha:
        return Counter({beta: 1})
    if not beta:
        return Counter({alpha: 1})
    a, rest_a = alpha[0], alpha[1:]
    b, rest_b = beta[0], beta[1:]
    out = Counter()
    for comp, k in quasi_shuffle(rest_a, beta).items():
        out[(a,) + comp] += k
    for comp, k in quasi_shuffle(alpha, rest_b).items():
        out[(b,) + comp] += k
    for comp, k in quasi_shuffle(rest_a, rest_b).items():
        out[(a + b,) + comp] += k
    return out


class QSymPoly:
    """Finite integer combination of monomial quasisymmetric functions M_alpha."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Composition, int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc = Counter()
        for alpha, k in items:
            alpha = tuple(int(p) for p in alpha)
            if any(p < 1 for p in alpha):
                raise ValueError(f"composition parts must be positive: {alpha}")
            if int(k) != k:
                raise ValueError(f"coefficients must be integers, got {k!r}")
            acc[alpha] += int(k)
        self._terms = {a: acc[a] for a in sorted(acc, key=composition_key) if acc[a]}

    @classmethod
    def monomial(cls, alpha: Iterable[int], coeff: int = 1) -> "QSymPoly":
        return cls({tuple(alpha): coeff})

    @classmethod
    def one(cls) -> "QSymPoly":
        return cls({(): 1})

    @classmethod
    def zero(cls) -> "QSymPoly":
        return cls()

    @property
    def terms(self) -> dict[Composition, int]:
        return dict(self._terms)

    def coeff(self, alpha: Iterable[int]) -> int:
        return self._terms.get(tuple(alpha), 0)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QSymPoly({(): other})
        if not isinstance(other, QSymPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __add__(self, other):
        return qsym_add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return QSymPoly({a: -k for a, k in self._terms.items()})

    def __sub__(self, other):
        return qsym_add(self, -_coerce(other))

    def __mul__(self, other):
        if isinstance(other, int):
            return QSymPoly({a: k * other for a, k in self._terms.items()})
        return qsym_mul(self, _coerce(other))

    def __rmul__(self, other):
        return self * other

    def __str__(self):
        return render_qsym(self)

    def __repr__(self):
        return f"QSymPoly({render_qsym(self)!r})"


def _coerce(x) -> QSymPoly:
    if isinstance(x, QSymPoly):
        return x
    if isinstance(x, int):
        return QSymPoly({(): x})
    raise TypeError(f"cannot use {type(x).__name__} as a quasisymmetric function")


def qsym_add(a: QSymPoly, b: QSymPoly) -> QSymPoly:
    acc = Counter(a._terms)
    acc.update(b._terms)
    return QSymPoly(acc)


def qsym_mul(a: QSymPoly, b: QSymPoly) -> QSymPoly:
    acc = Counter()
    for alpha, x in a._terms.items():
        for beta, y in b._terms.items():
            for gamma, k in quasi_shuffle(alpha, beta).items():
                acc[gamma] += x * y * k
    return QSymPoly(acc)


def principal_specialization(q: QSymPoly, n: int) -> int:
    """Value of ``q`` at x_1 = ... = x_n = 1 and all other variables 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(k * comb(n, len(alpha)) for alpha, k in q._terms.items())


def render_qsym(q: QSymPoly) -> str:
    """Canonical text form, e.g. ``2*M[1,1] + M[2]``."""
    out = []
    for alpha, k in q._terms.items():
        if not alpha:
            body = str(abs(k))
        else:
            name = "M[" + ",".join(map(str, alpha)) + "]"
            body = name if abs(k) == 1 else f"{abs(k)}*{name}"
        if not out:
            out.append(("-" if k < 0 else "") + body)
        else:
            out.append((" - " if k < 0 else " + ") + body)
    return "".join(out) or "0"


_QSYM_TERM = re.compile(r"^(?:(\d+)\*)?M\[([\d,\s]*)\]$|^(\d+)$")


def parse_qsym(text: str) -> QSymPoly:
    """Inverse of :func:`render_qsym`."""
    text = text.strip()
    if text == "0":
        return QSymPoly()
    acc = Counter()
    for sign, term in re.findall(r"([+-]?)\s*([^+-]+)", text.replace(" ", "")):
        m = _QSYM_TERM.match(term)
        if not m:
            raise ValueError(f"cannot parse term {term!r}")
        if m.group(3) is not None:
            alpha, k = (), int(m.group(3))
        else:
            inner = m.group(2).strip()
            alpha = tuple(int(p) for p in inner.split(",")) if inner else ()
            k = int(m.group(1) or 1)
        acc[alpha] += -k if sign == "-" else k
    return QSymPoly(acc)


# -- univariate polynomials -------------------------------------------------

class UniPoly:
    """Polynomial in ``x`` with exact rational coefficients, ``coeffs[i]`` of x^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __str__(self):
        return render_poly(self)

    def __repr__(self):
        return f"UniPoly({render_poly(self)!r})"


def _as_poly(x) -> UniPoly:
    if isinstance(x, UniPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return UniPoly([x])
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


def binomial_poly(k: int) -> UniPoly:
    """The polynomial x(x-1)...(x-k+1)/k!, i.e. C(x, k)."""
    p = UniPoly([1])
    for i in range(k):
        p = p * UniPoly([-i, 1])
    return p * Fraction(1, factorial(k))


def qsym_to_polynomial(q: QSymPoly) -> UniPoly:
    """The polynomial interpolating ``principal_specialization(q, n)`` in ``n``."""
    out = UniPoly()
    for alpha, k in q.terms.items():
        out = out + binomial_poly(len(alpha)) * k
    return out


def lagrange_interpolate(points) -> UniPoly:
    """Unique polynomial of degree < len(points) through the given (x, y) points."""
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    if not pts:
        raise ValueError("need at least one point")
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate x-values")
    out = UniPoly()
    for i, (xi, yi) in enumerate(pts):
        basis = UniPoly([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * UniPoly([-xj, 1])
                denom *= xi - xj
        out = out + basis * (yi / denom)
    return out


def render_poly(p: UniPoly) -> str:
    """Canonical text form, e.g. ``x^2 - x`` or ``1/2*x^2 - 1/2*x``."""
    out = []
    for d in range(p.degree, -1, -1):
        c = p.coeffs[d]
        if c == 0:
            continue
        mag = abs(c)
        mono = "" if d == 0 else ("x" if d == 1 else f"x^{d}")
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out) or "0"

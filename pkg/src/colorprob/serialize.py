"""JSON form of every structure.

Each document is ``{"type": ..., "elements": [labels...], ...}``; subsets are
arrays of labels.  Rendering is canonical: keys sorted, labels inside a subset
in element order, subset lists sorted by their bitmask.
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import ColoringProblem, ColoringError, bits
from .species import Antimatroid, Graph, Hypergraph, Matroid, Poset


class ParseError(ColoringError, ValueError):
    """The document is not well-formed JSON for any known structure."""


def _mask_of(labels, subset) -> int:
    pos = {x: i for i, x in enumerate(labels)}
    return sum(1 << pos[x] for x in subset)


def _as_list(labels, subset) -> list[str]:
    pos = {x: i for i, x in enumerate(labels)}
    return sorted(subset, key=pos.__getitem__)


def _sorted_sets(labels, sets) -> list[list[str]]:
    return [_as_list(labels, s) for s in sorted(sets, key=lambda s: _mask_of(labels, s))]


def to_json(x) -> dict:
    if not isinstance(x, (ColoringProblem, Graph, Hypergraph, Poset, Matroid, Antimatroid)):
        raise TypeError(f"cannot serialize {type(x).__name__}")
    labels = list(x.labels)
    doc = {"elements": labels}
    if isinstance(x, ColoringProblem):
        doc["type"] = "coloring-problem"
        lab = lambda m: [x.labels[i] for i in bits(m)]  # noqa: E731
        doc["family"] = [lab(s) for s in x.family]
        doc["ideal"] = [[lab(s), lab(t)] for s, t in sorted(x.ideal)]
    elif isinstance(x, Graph):
        doc["type"] = "graph"
        doc["edges"] = _sorted_sets(labels, x.edges)
    elif isinstance(x, Hypergraph):
        doc["type"] = "hypergraph"
        doc["edges"] = _sorted_sets(labels, x.edges)
        if x.allow_singletons:
            doc["allow_singletons"] = True
    elif isinstance(x, Poset):
        doc["type"] = "poset"
        doc["covers"] = [list(p) for p in x.covers()]
    elif isinstance(x, Matroid):
        doc["type"] = "matroid"
        doc["bases"] = _sorted_sets(labels, x.bases)
    else:
        doc["type"] = "antimatroid"
        doc["feasible"] = _sorted_sets(labels, x.feasible)
    return doc


def dumps(x) -> str:
    return json.dumps(to_json(x), sort_keys=True, indent=2) + "\n"


def _need(doc, key, kind=list):
    if key not in doc:
        raise ParseError(f"missing key {key!r}")
    val = doc[key]
    if not isinstance(val, kind):
        raise ParseError(f"{key!r} must be a {kind.__name__}")
    return val


def _subsets(val, key):
    if not all(isinstance(s, list) and all(isinstance(e, str) for e in s) for s in val):
        raise ParseError(f"{key!r} must be a list of label arrays")
    return val


def _pairs(val, key):
    for p in val:
        if not (isinstance(p, list) and len(p) == 2):
            raise ParseError(f"{key!r} entries must be [S, T] pairs")
        _subsets(p, key)
    return val


def from_json(doc):
    """Build a structure from its JSON document.

    Raises :class:`ParseError` for schema problems and
    :class:`~colorprob.core.InvalidStructure` when the data is well formed but
    breaks the structure's axioms.
    """
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    kind = _need(doc, "type", str)
    labels = _need(doc, "elements")
    if not all(isinstance(x, str) for x in labels):
        raise ParseError("'elements' must be a list of strings")
    known = set(labels)

    def check_labels(sets):
        for s in sets:
            for e in s:
                if e not in known:
                    raise ParseError(f"unknown element {e!r}")

    if kind == "coloring-problem":
        family = _subsets(_need(doc, "family"), "family")
        check_labels(family)
        ideal = doc.get("ideal")
        if isinstance(ideal, dict):
            gens = _pairs(_need(ideal, "generators"), "generators")
            check_labels(s for p in gens for s in p)
            return ColoringProblem.from_sets(labels, family, generators=gens)
        ideal = _pairs(_need(doc, "ideal"), "ideal")
        check_labels(s for p in ideal for s in p)
        return ColoringProblem.from_sets(labels, family, ideal)
    if kind == "graph":
        edges = _subsets(_need(doc, "edges"), "edges")
        check_labels(edges)
        return Graph(labels, edges)
    if kind == "hypergraph":
        edges = _subsets(_need(doc, "edges"), "edges")
        check_labels(edges)
        return Hypergraph(labels, edges, allow_singletons=bool(doc.get("allow_singletons", False)))
    if kind == "poset":
        covers = _need(doc, "covers")
        for p in covers:
            if not (isinstance(p, list) and len(p) == 2 and all(isinstance(e, str) for e in p)):
                raise ParseError("'covers' entries must be [lower, upper] label pairs")
        check_labels(covers)
        return Poset(labels, [tuple(p) for p in covers])
    if kind == "matroid":
        bases = _subsets(_need(doc, "bases"), "bases")
        check_labels(bases)
        return Matroid(labels, bases)
    if kind == "antimatroid":
        feas = _subsets(_need(doc, "feasible"), "feasible")
        check_labels(feas)
        return Antimatroid(labels, feas)
    raise ParseError(f"unknown type {kind!r}")


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    return from_json(doc)


def load(path) -> object:
    return loads(Path(path).read_text(encoding="utf-8"))


def dump(x, path) -> None:
    Path(path).write_text(dumps(x), encoding="utf-8")

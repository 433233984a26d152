"""Isospectrality comparators and batch classification.

Comparisons are only meaningful (and only performed) between groups with the
same holonomy order; the batch driver buckets by order first.  Comparator
failures for a single group (nondiagonal type for the Sunada comparator,
nonabelian holonomy for class-length multiplicities) are reported per entry
instead of aborting the run.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .group import BieberbachGroup, GroupError, sunada_tuple
from .lengths import length_set, length_spectrum
from .theta import heat_trace_poly, poly_equal

MODES = ("p0", "p1", "p2", "p3", "p4", "all-p", "sunada", "L", "bracketL")


def p_isospectral(a: BieberbachGroup, b: BieberbachGroup, p: int) -> bool:
    """Equality of the exact p-form heat traces."""
    return poly_equal(heat_trace_poly(a, p), heat_trace_poly(b, p))


def sunada_isospectral(a: BieberbachGroup, b: BieberbachGroup) -> bool:
    """Equality of the Sunada numbers (diagonal-type groups only)."""
    return a.order == b.order and sunada_tuple(a) == sunada_tuple(b)


def L_isospectral(a: BieberbachGroup, b: BieberbachGroup, max2=4) -> bool:
    """Equality of the sets of geodesic lengths.

    The length set is determined by the monomial support of the 0-form heat
    trace, so support equality is used as the exact criterion; the finite
    length sets up to max2 are compared as a cross-check.
    """
    same_support = heat_trace_poly(a, 0).support() == heat_trace_poly(b, 0).support()
    same_sets = length_set(a, max2) == length_set(b, max2)
    if same_support != same_sets:
        raise GroupError("length set and heat trace support disagree")
    return same_support


_BRACKETL_CACHE: dict[tuple, tuple] = {}


def bracketL_signature(G: BieberbachGroup, max2) -> tuple:
    # class-length spectra are by far the costliest signature; groups hash by
    # their generators and holonomy, so equal groups share one computation
    key = (G, Fraction(max2))
    if key not in _BRACKETL_CACHE:
        _BRACKETL_CACHE[key] = tuple(sorted(length_spectrum(G, max2).items()))
    return _BRACKETL_CACHE[key]


def bracketL_isospectral(a: BieberbachGroup, b: BieberbachGroup, max2=3) -> bool:
    """Equality of class-length multiplicities for all squared lengths <= max2.

    Missing values count as multiplicity zero, so comparing the two signature
    maps directly covers the union of the length sets.
    """
    return bracketL_signature(a, max2) == bracketL_signature(b, max2)


# -- batch classification ---------------------------------------------------


_ID_RE = re.compile(r"^(\d+)('*)$")


def id_sort_key(name: str):
    m = _ID_RE.match(name)
    if not m:
        return (1 << 30, name)
    return (int(m.group(1)), len(m.group(2)))


@dataclass
class ClassificationReport:
    mode: str
    params: dict
    classes: list[list[str]]
    errors: dict[str, str] = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(
            {
                "mode": self.mode,
                "params": self.params,
                "classes": self.classes,
                "errors": self.errors,
            },
            indent=2,
        )

    def nontrivial_classes(self) -> list[list[str]]:
        return [cls for cls in self.classes if len(cls) > 1]


def classify_all(groups: list[BieberbachGroup], mode: str, max2=3) -> ClassificationReport:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; choose from {MODES}")
    params: dict = {}
    errors: dict[str, str] = {}

    if mode == "sunada":
        def signature(G):
            return ("sunada", G.order, sunada_tuple(G))
    elif mode == "L":
        def signature(G):
            return ("L", G.order, heat_trace_poly(G, 0).support())
    elif mode == "bracketL":
        params["max_squared_length"] = str(Fraction(max2))

        def signature(G):
            return ("bracketL", G.order, bracketL_signature(G, max2))
    elif mode == "all-p":
        def signature(G):
            return ("all-p", G.order,
                    tuple(heat_trace_poly(G, p).coeffs for p in range(5)))
    else:
        p = int(mode[1])
        params["p"] = p

        def signature(G):
            return ("p", p, G.order, heat_trace_poly(G, p).coeffs)

    buckets: dict = {}
    for G in groups:
        try:
            sig = signature(G)
        except (GroupError, ValueError) as exc:
            errors[G.name] = str(exc)
            continue
        buckets.setdefault(sig, []).append(G.name)

    classes = [sorted(names, key=id_sort_key) for names in buckets.values()]
    classes.sort(key=lambda cls: id_sort_key(cls[0]))
    return ClassificationReport(mode, params, classes, errors)

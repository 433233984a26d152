"""Heat trace polynomials in one-dimensional theta functions.

The p-form heat trace of a flat manifold R^4/Gamma is a polynomial with
coefficients in Q(sqrt2, sqrt3) in the functions

    z_{d,r}(s) = (4 pi s)^{-1/2} * sum_m exp(-((m + r)^2 / d) / (4 s))

for d in {1, 2, 3, 4} and a rational offset r folded into [0, 1/2].  The two
classical variables are x = z_{1,0} and y = z_{1,1/2}.  Each holonomy
representative gamma = B L_b contributes

    tr_p(B) / vol(fixed lattice) * prod_i z_{d_i, r_i}

where (d_i, r_i) come from the component decomposition of the fixed lattice
of B and the offsets of b.  Polynomials keep the holonomy order |F| as an
explicit scale, so stored coefficients are |F| times the true ones.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .group import BieberbachGroup
from .qfield import QuadNumber

Monomial = tuple[tuple[tuple[int, Fraction], int], ...]  # ((d, r), exponent), sorted


class ThetaError(ValueError):
    pass


def fold_offset(r) -> Fraction:
    f = Fraction(r)
    f = f - (f.numerator // f.denominator)
    return min(f, 1 - f)


def var_name(d: int, r: Fraction) -> str:
    if d == 1 and r == 0:
        return "x"
    if d == 1 and r == Fraction(1, 2):
        return "y"
    return f"z[{d},{r}]"


def monomial(vars_with_exp) -> Monomial:
    """Canonical monomial from ((d, r), exponent) pairs; offsets get folded."""
    acc: dict[tuple[int, Fraction], int] = {}
    for (d, r), e in vars_with_exp:
        if e == 0:
            continue
        if d not in (1, 2, 3, 4):
            raise ThetaError(f"unsupported theta dimension {d}")
        key = (d, fold_offset(r))
        acc[key] = acc.get(key, 0) + e
    return tuple(sorted(acc.items()))


def monomial_str(m: Monomial) -> str:
    if not m:
        return "1"
    parts = []
    for (d, r), e in m:
        name = var_name(d, r)
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


@dataclass(frozen=True)
class HeatTracePoly:
    """|F|-scaled heat trace polynomial: true value is sum(coeffs)/order."""

    order: int
    coeffs: tuple[tuple[Monomial, QuadNumber], ...]

    @classmethod
    def from_terms(cls, order: int, terms) -> "HeatTracePoly":
        acc: dict[Monomial, QuadNumber] = {}
        for mono, coef in terms:
            coef = QuadNumber.coerce(coef)
            cur = acc.get(mono)
            total = coef if cur is None else cur + coef
            if total.is_zero():
                acc.pop(mono, None)
            else:
                acc[mono] = total
        return cls(order, tuple(sorted(acc.items(), key=lambda kv: _mono_key(kv[0]))))

    def coeff_dict(self) -> dict[Monomial, QuadNumber]:
        return dict(self.coeffs)

    def unscaled(self) -> dict[Monomial, QuadNumber]:
        inv = QuadNumber(Fraction(1, self.order))
        return {m: c * inv for m, c in self.coeffs}

    def support(self) -> frozenset[Monomial]:
        return frozenset(m for m, _ in self.coeffs)

    def render(self) -> str:
        if not self.coeffs:
            return f"{self.order}*Z_p = 0"
        parts = [f"({c}) {monomial_str(m)}" for m, c in self.coeffs]
        return f"{self.order}*Z_p = " + " + ".join(parts)

    def eval_numeric(self, s: float, terms: int = 40) -> float:
        total = 0.0
        for mono, coef in self.coeffs:
            val = float(coef)
            for (d, r), e in mono:
                val *= theta_value(d, r, s, terms) ** e
            total += val
        return total / self.order


def _mono_key(m: Monomial):
    deg = sum(e for _, e in m)
    return (-deg, m)


def poly_equal(a: HeatTracePoly, b: HeatTracePoly) -> bool:
    """Exact equality of the underlying (unscaled) polynomials."""
    if a.order == b.order:
        return a.coeffs == b.coeffs
    ua, ub = a.unscaled(), b.unscaled()
    return ua == ub


def theta_value(d: int, r, s: float, terms: int = 40) -> float:
    """Numeric z_{d,r}(s) with the sum truncated at |m| <= terms."""
    r = float(Fraction(r))
    quarter = 1.0 / (4.0 * s)
    total = 0.0
    for m in range(-terms, terms + 1):
        total += math.exp(-((m + r) ** 2 / d) * quarter)
    return total / math.sqrt(4.0 * math.pi * s)


def heat_trace_poly(G: BieberbachGroup, p: int) -> HeatTracePoly:
    """Exact p-form heat trace of R^4/G as a theta polynomial."""
    if not 0 <= p <= 4:
        raise ValueError("form degree out of range")
    terms = []
    for g in G.holonomy:
        tr = g.traces()[p]
        if tr == 0:
            continue
        dec = g.decomposition()
        mono = monomial(((comp.d, r), 1) for comp, r in
                        zip(dec.components, _offsets(g, dec)))
        coef = QuadNumber(tr) / dec.volume()
        terms.append((mono, coef))
    return HeatTracePoly.from_terms(G.order, terms)


def _offsets(g, dec):
    from . import intlat

    _, offsets = intlat.project_fixed(g.b, dec)
    return offsets

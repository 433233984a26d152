"""Bieberbach groups with translation lattice Z^4.

A group is generated by affine isometries gamma = B L_b acting by
x -> B x + B b, with B an integral orthogonal (signed permutation) matrix and
b rational.  Elements are normalized so b lies in [0, 1)^4; the holonomy
group is the finite set of coset representatives mod the lattice.

Composition follows from the action:
    (B, b) * (B', b') = (B B', B'^{-1} b + b')      (translation part mod Z^4)
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from . import intlat
from .intlat import FixedDecomposition, IntMatrix, RatVector
from .kraw import charpoly_coeffs
from .qfield import QuadNumber

MAX_HOLONOMY_ORDER = 48


class GroupError(ValueError):
    pass


def _norm_vec(v: Sequence) -> RatVector:
    out = []
    for x in v:
        f = Fraction(x)
        out.append(f - (f.numerator // f.denominator))
    return tuple(out)


@dataclass(frozen=True)
class AffineIsometry:
    B: IntMatrix
    b: RatVector

    def __post_init__(self):
        if not intlat.is_signed_permutation(self.B):
            raise GroupError("matrix part must be a signed permutation")
        object.__setattr__(self, "b", _norm_vec(self.b))

    @classmethod
    def make(cls, B: Sequence[Sequence[int]], b: Sequence) -> "AffineIsometry":
        return cls(intlat.as_matrix(B), tuple(Fraction(x) for x in b))

    @classmethod
    def identity(cls, n: int = 4) -> "AffineIsometry":
        return cls(intlat.identity(n), (Fraction(0),) * n)

    def __mul__(self, other: "AffineIsometry") -> "AffineIsometry":
        binv = intlat.transpose(other.B)  # orthogonal: inverse is transpose
        newb = tuple(x + y for x, y in zip(intlat.mat_vec(binv, self.b), other.b))
        return AffineIsometry(intlat.mat_mul(self.B, other.B), newb)

    def inverse(self) -> "AffineIsometry":
        binv = intlat.transpose(self.B)
        newb = tuple(-x for x in intlat.mat_vec(self.B, self.b))
        return AffineIsometry(binv, newb)

    def is_identity_matrix(self) -> bool:
        return self.B == intlat.identity(len(self.B))

    def apply(self, x: Sequence[Fraction]) -> RatVector:
        shifted = tuple(Fraction(xi) + bi for xi, bi in zip(x, self.b))
        return intlat.mat_vec(self.B, shifted)

    # -- invariants ----------------------------------------------------

    def decomposition(self) -> FixedDecomposition:
        return intlat.decompose_fixed(self.B)

    def traces(self) -> tuple[int, ...]:
        return charpoly_coeffs(self.B)

    def translation_offsets(self) -> tuple[tuple[int, Fraction], ...]:
        """Pairs (d_i, r_i): component support size and folded offset of b."""
        dec = self.decomposition()
        _, offsets = intlat.project_fixed(self.b, dec)
        return tuple((comp.d, r) for comp, r in zip(dec.components, offsets))

    def b_plus(self) -> RatVector:
        proj, _ = intlat.project_fixed(self.b, self.decomposition())
        return proj

    def is_fixed_point_free(self) -> bool:
        """True when no translate B L_{b + lambda} fixes a point of R^4.

        Equivalent to some component offset of b being nonintegral, i.e. the
        minimal squared displacement on the fixed space is positive.
        """
        if self.is_identity_matrix():
            return False
        raw = intlat.raw_offsets(self.b, self.decomposition())
        return any(r != 0 for r in raw)


def _sort_key(g: AffineIsometry):
    return (g.B, g.b)


@dataclass(frozen=True)
class BieberbachGroup:
    name: str
    generators: tuple[AffineIsometry, ...]
    holonomy: tuple[AffineIsometry, ...]  # identity first, then sorted
    metadata: dict = field(default_factory=dict, compare=False)

    @property
    def order(self) -> int:
        return len(self.holonomy)

    def nontrivial(self) -> tuple[AffineIsometry, ...]:
        return self.holonomy[1:]


def build_group(generators: Sequence[AffineIsometry], name: str = "",
                metadata: dict | None = None) -> BieberbachGroup:
    """Close the generators modulo Z^4 and validate the Bieberbach conditions."""
    gens = tuple(generators)
    ident = AffineIsometry.identity(4)
    elements = {ident.B: ident}
    order = [ident]
    consistent = True
    frontier = [ident]
    while frontier:
        cur = frontier.pop(0)
        for g in gens:
            for nxt in (cur * g, g * cur):
                if nxt.B not in elements:
                    if len(elements) >= MAX_HOLONOMY_ORDER:
                        raise GroupError("holonomy closure exceeded bound 48")
                    elements[nxt.B] = nxt
                    order.append(nxt)
                    frontier.append(nxt)
                elif elements[nxt.B].b != nxt.b:
                    # The products do not close over Z^4; one catalog entry
                    # (29') has this defect as printed.  Keep the first
                    # representative found per matrix (breadth-first, hence
                    # deterministic) and record the inconsistency.
                    consistent = False
    holonomy = sorted(elements.values(), key=_sort_key)
    holonomy.remove(ident)
    holonomy.insert(0, ident)
    for g in holonomy[1:]:
        if not g.is_fixed_point_free():
            raise GroupError(f"not torsion-free: element with matrix {g.B} fixes a point")
    meta = dict(metadata or {})
    meta.setdefault("translation_consistent", consistent)
    return BieberbachGroup(name, gens, tuple(holonomy), meta)


# -- group level invariants ------------------------------------------------


def holonomy_order(G: BieberbachGroup) -> int:
    return G.order


def is_orientable(G: BieberbachGroup) -> bool:
    return all(intlat.det(g.B) == 1 for g in G.holonomy)


def is_diagonal_type(G: BieberbachGroup) -> bool:
    return all(
        all(g.B[i][j] == 0 for i in range(4) for j in range(4) if i != j)
        for g in G.holonomy
    )


def is_abelian_holonomy(G: BieberbachGroup) -> bool:
    mats = [g.B for g in G.holonomy]
    return all(
        intlat.mat_mul(a, b) == intlat.mat_mul(b, a) for a in mats for b in mats
    )


def betti(G: BieberbachGroup, p: int) -> int:
    """p-th Betti number, the average of p-form traces over the holonomy."""
    if not 0 <= p <= 4:
        raise ValueError("form degree out of range")
    total = sum(g.traces()[p] for g in G.holonomy)
    if total % G.order != 0:
        raise GroupError("trace average is not integral")
    return total // G.order


def sunada_numbers(G: BieberbachGroup) -> dict[tuple[int, int], int]:
    """Counts c_{d,t} of nontrivial elements by (fixed rank, half offsets).

    Only defined for diagonal type: d is the number of +1 diagonal entries of
    B and t the number of fixed axes whose translation coordinate is 1/2.
    """
    if not is_diagonal_type(G):
        raise GroupError("Sunada numbers need a diagonal-type group")
    counts = {(d, t): 0 for d in range(1, 5) for t in range(0, d + 1)}
    for g in G.nontrivial():
        fixed = [i for i in range(4) if g.B[i][i] == 1]
        d = len(fixed)
        t = sum(1 for i in fixed if g.b[i] == Fraction(1, 2))
        if any(g.b[i] not in (Fraction(0), Fraction(1, 2)) for i in fixed):
            raise GroupError("diagonal group with offsets outside {0, 1/2}")
        counts[(d, t)] += 1
    return counts


def sunada_tuple(G: BieberbachGroup) -> tuple[int, ...]:
    """(c_{1,1}, c_{2,1}, c_{2,2}, c_{3,1}, c_{3,2}, c_{3,3})."""
    c = sunada_numbers(G)
    return (c[1, 1], c[2, 1], c[2, 2], c[3, 1], c[3, 2], c[3, 3])


def element_volume(g: AffineIsometry) -> QuadNumber:
    return g.decomposition().volume()


def binom4(p: int) -> int:
    return comb(4, p)

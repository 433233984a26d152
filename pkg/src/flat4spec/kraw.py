"""Krawtchouk polynomials and exterior-power traces of integral orthogonal matrices.

For a signed permutation matrix B acting on R^n, the trace of the induced
action on p-forms is the coefficient of t^p in det(Id + t*B).  When B is
diagonal with j entries equal to -1, this trace equals the Krawtchouk value
K_p^n(j).
"""
from __future__ import annotations

from itertools import permutations
from math import comb

from .intlat import IntMatrix, dim


def krawtchouk(n: int, p: int, j: int) -> int:
    """K_p^n(j) = sum_t (-1)^t C(j, t) C(n - j, p - t)."""
    if not (0 <= p <= n and 0 <= j <= n):
        raise ValueError("krawtchouk arguments out of range")
    return sum((-1) ** t * comb(j, t) * comb(n - j, p - t) for t in range(p + 1))


_PARITY_SIGN = {0: 1, 1: -1}


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def charpoly_coeffs(B: IntMatrix) -> tuple[int, ...]:
    """Coefficients (c_0, ..., c_n) of det(Id + t*B), so c_p = tr_p(B)."""
    n = dim(B)
    coeffs = [0] * (n + 1)
    for perm in permutations(range(n)):
        sign = _perm_sign(perm)
        # each entry Id[i][perm[i]] + t*B[i][perm[i]] is linear in t
        poly = [1]
        for i in range(n):
            const = 1 if perm[i] == i else 0
            lin = B[i][perm[i]]
            if const == 0 and lin == 0:
                poly = None
                break
            nxt = [0] * (len(poly) + 1)
            for k, c in enumerate(poly):
                nxt[k] += c * const
                nxt[k + 1] += c * lin
            poly = nxt
        if poly is None:
            continue
        for k, c in enumerate(poly):
            coeffs[k] += sign * c
    return tuple(coeffs)


def trace_p(B: IntMatrix, p: int) -> int:
    """Trace of B acting on p-forms."""
    n = dim(B)
    if not 0 <= p <= n:
        raise ValueError("form degree out of range")
    return charpoly_coeffs(B)[p]

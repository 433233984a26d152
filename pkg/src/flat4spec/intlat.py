"""Exact integer linear algebra on the lattice Z^4.

Matrices are immutable tuples of tuples of ints (row major).  Vectors with
rational entries are tuples of Fraction.  Everything here is small (4x4), so
clarity beats asymptotics; the Smith reduction is plain gcd elimination with
unimodular bookkeeping.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .qfield import QuadNumber

IntMatrix = tuple[tuple[int, ...], ...]
IntVector = tuple[int, ...]
RatVector = tuple[Fraction, ...]


class LatticeError(ValueError):
    pass


def as_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def dim(M: IntMatrix) -> int:
    return len(M)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(M: IntMatrix) -> IntMatrix:
    return tuple(zip(*M))


def mat_mul(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    return tuple(
        tuple(sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0])))
        for i in range(len(A))
    )


def mat_vec(M: IntMatrix, v: Sequence) -> tuple:
    return tuple(sum(M[i][k] * v[k] for k in range(len(v))) for i in range(len(M)))


def mat_sub(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def is_signed_permutation(M: IntMatrix) -> bool:
    n = len(M)
    if any(len(row) != n for row in M):
        return False
    for row in M:
        if sum(1 for x in row if x in (1, -1)) != 1 or any(x not in (-1, 0, 1) for x in row):
            return False
    for col in transpose(M):
        if sum(1 for x in col if x != 0) != 1:
            return False
    return True


def det(M: IntMatrix) -> int:
    n = len(M)
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j] == 0:
            continue
        minor = tuple(tuple(row[k] for k in range(n) if k != j) for row in M[1:])
        total += (-1) ** j * M[0][j] * det(minor)
    return total


# -- Smith normal form ---------------------------------------------------


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def _apply_left_2x2(A, U, i, m):
    for target in (A, U):
        ri = [m[0][0] * a + m[0][1] * b for a, b in zip(target[i], target[i + 1])]
        rj = [m[1][0] * a + m[1][1] * b for a, b in zip(target[i], target[i + 1])]
        target[i], target[i + 1] = ri, rj


def _apply_right_2x2(A, V, i, m):
    for target in (A, V):
        for row in target:
            ci = m[0][0] * row[i] + m[1][0] * row[i + 1]
            cj = m[0][1] * row[i] + m[1][1] * row[i + 1]
            row[i], row[i + 1] = ci, cj


def smith_normal_form(M: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return unimodular (U, V) and diagonal D with U*M*V = D.

    Diagonal entries are nonnegative and satisfy the divisibility chain.
    Works for any rectangular integer matrix.
    """
    rows = len(M)
    cols = len(M[0]) if rows else 0
    A = [list(row) for row in M]
    U = [list(row) for row in identity(rows)]
    V = [list(row) for row in identity(cols)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):
        # row_dst += k * row_src
        A[dst] = [a + k * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, k):
        for row in A:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    def negate_row(i):
        A[i] = [-a for a in A[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    while t < min(rows, cols):
        # move a nonzero pivot of minimal magnitude to (t, t)
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if A[i][j] != 0 and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, rows):
                if A[i][t] != 0:
                    q = A[i][t] // A[t][t]
                    add_row(t, i, -q)
                    if A[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if A[t][j] != 0:
                    q = A[t][j] // A[t][t]
                    add_col(t, j, -q)
                    if A[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
        if A[t][t] < 0:
            negate_row(t)
        t += 1

    # enforce the divisibility chain d_i | d_{i+1} with exact 2x2 transforms:
    # diag(a, b) = U2^{-1} diag(g, ab/g) V2^{-1} for g = gcd(a, b) = x a + y b
    r = t
    changed = True
    while changed:
        changed = False
        for i in range(r - 1):
            a, b = A[i][i], A[i + 1][i + 1]
            if b % a == 0:
                continue
            g, x, y = _xgcd(a, b)
            u2 = ((x, y), (-b // g, a // g))
            v2 = ((1, -y * b // g), (1, x * a // g))
            _apply_left_2x2(A, U, i, u2)
            _apply_right_2x2(A, V, i, v2)
            changed = True
    return (
        tuple(tuple(row) for row in U),
        tuple(tuple(row) for row in A),
        tuple(tuple(row) for row in V),
    )


def kernel_basis(M: IntMatrix) -> tuple[IntVector, ...]:
    """Saturated basis of the integer kernel {v : M v = 0}."""
    U, D, V = smith_normal_form(M)
    cols = len(M[0])
    rank = sum(1 for i in range(min(len(M), cols)) if D[i][i] != 0)
    Vt = transpose(V)
    return tuple(Vt[j] for j in range(rank, cols))


# -- fixed lattices of signed permutations --------------------------------


@dataclass(frozen=True)
class FixedComponent:
    vector: IntVector  # entries in {-1, 0, 1}
    d: int             # support size, equal to |vector|^2


@dataclass(frozen=True)
class FixedDecomposition:
    components: tuple[FixedComponent, ...]

    @property
    def rank(self) -> int:
        return len(self.components)

    def volume(self) -> QuadNumber:
        vol = QuadNumber(1)
        for comp in self.components:
            vol = vol * QuadNumber.sqrt_int(comp.d)
        return vol


def fixed_lattice_basis(B: IntMatrix) -> tuple[IntVector, ...]:
    """Saturated basis of the fixed lattice ker(B - Id), via Smith reduction."""
    return kernel_basis(mat_sub(B, identity(dim(B))))


def decompose_fixed(B: IntMatrix) -> FixedDecomposition:
    """Fixed lattice of a signed permutation as disjoint-support {-1,0,1} vectors.

    B permutes the signed coordinate axes; each cycle of the underlying
    permutation whose sign product is +1 contributes one component supported
    on the cycle.
    """
    if not is_signed_permutation(B):
        raise LatticeError("decompose_fixed needs a signed permutation matrix")
    n = dim(B)
    image = {}
    for i in range(n):
        for j in range(n):
            if B[j][i] != 0:
                image[i] = (j, B[j][i])  # B e_i = sign * e_j
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        cycle, signs = [], []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            j, s = image[i]
            signs.append(s)
            i = j
        prod = 1
        for s in signs:
            prod *= s
        if prod != 1:
            continue
        vec = [0] * n
        vec[cycle[0]] = 1
        for k in range(len(cycle) - 1):
            vec[cycle[k + 1]] = vec[cycle[k]] * signs[k]
        comps.append(FixedComponent(tuple(vec), len(cycle)))
    comps.sort(key=lambda c: min(i for i, x in enumerate(c.vector) if x != 0))
    return FixedDecomposition(tuple(comps))


def project_fixed(v: Sequence, dec: FixedDecomposition) -> tuple[RatVector, tuple[Fraction, ...]]:
    """Orthogonal projection of v onto the fixed space, plus component offsets.

    Offsets are (v . u_i) mod 1, folded into [0, 1/2] (the translate r and
    1 - r give the same one-dimensional theta value and the same squared
    length set).
    """
    n = len(v)
    v = tuple(Fraction(x) for x in v)
    proj = [Fraction(0)] * n
    offsets = []
    for comp in dec.components:
        dot = sum(v[i] * comp.vector[i] for i in range(n))
        for i in range(n):
            proj[i] += dot * comp.vector[i] / comp.d
        frac = dot - (dot.numerator // dot.denominator)
        offsets.append(min(frac, 1 - frac))
    return tuple(proj), tuple(offsets)


def raw_offsets(v: Sequence, dec: FixedDecomposition) -> tuple[Fraction, ...]:
    """Component offsets (v . u_i) mod 1 without folding."""
    v = tuple(Fraction(x) for x in v)
    out = []
    for comp in dec.components:
        dot = sum(v[i] * comp.vector[i] for i in range(len(v)))
        out.append(dot - (dot.numerator // dot.denominator))
    return tuple(out)

"""Exact integer and rational matrix helpers."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from sympy import Matrix as SympyMatrix
from sympy import factorint
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import invariant_factors

from ..core.errors import NotSymmetric

IntMatrix = Sequence[Sequence[int]]


def as_tuple_matrix(matrix: IntMatrix) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(int(entry) for entry in row) for row in matrix)


def is_symmetric(matrix: IntMatrix) -> bool:
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        return False
    return all(
        matrix[i][j] == matrix[j][i] for i in range(size) for j in range(i + 1, size)
    )


def require_symmetric(matrix: IntMatrix) -> None:
    if not is_symmetric(matrix):
        raise NotSymmetric("matrix is not symmetric")


def block_sum(first: IntMatrix, second: IntMatrix) -> Tuple[Tuple[int, ...], ...]:
    """Block direct sum ``first (+) second`` of two square matrices."""

    m, n = len(first), len(second)
    rows = [tuple(first[i]) + (0,) * n for i in range(m)]
    rows += [(0,) * m + tuple(second[i]) for i in range(n)]
    return tuple(rows)


def congruent(matrix: IntMatrix, change: IntMatrix) -> Tuple[Tuple[int, ...], ...]:
    """Return ``U^T Q U`` for a square change of basis ``U``."""

    size = len(matrix)
    q = SympyMatrix(size, size, lambda i, j: matrix[i][j]) if size else None
    if q is None:
        return ()
    u = SympyMatrix(size, size, lambda i, j: change[i][j])
    return as_tuple_matrix((u.T * q * u).tolist())


def determinant(matrix: IntMatrix) -> int:
    if not matrix:
        return 1
    return int(DM([list(row) for row in matrix], ZZ).det())


def small_determinant(matrix: IntMatrix) -> int:
    """Cofactor expansion up to 3x3; larger matrices go through sympy."""

    n = len(matrix)
    if n == 0:
        return 1
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = matrix
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    return determinant(matrix)


def adjugate_pairing(matrix: IntMatrix, vector: Sequence[int]) -> int:
    """``v^T adj(M) v`` for a square matrix of size at most 3."""

    n = len(matrix)
    if n > 3:
        raise ValueError("adjugate pairing is only computed by cofactors up to 3x3")
    total = 0
    for i in range(n):
        for j in range(n):
            if vector[i] and vector[j]:
                # adj(M)[i][j] is the signed minor with row j and column i removed.
                minor = [[matrix[r][c] for c in range(n) if c != i] for r in range(n) if r != j]
                total += (-1) ** (i + j) * vector[i] * vector[j] * small_determinant(minor)
    return total


def solve_rational(matrix: IntMatrix, rhs: Sequence[int]) -> Tuple[Fraction, ...]:
    """Solve ``matrix * x = rhs`` exactly for a nonsingular square matrix."""

    size = len(matrix)
    if size == 0:
        return ()
    a = SympyMatrix(size, size, lambda i, j: matrix[i][j])
    b = SympyMatrix(size, 1, lambda i, _: rhs[i])
    solution = a.LUsolve(b)
    return tuple(Fraction(int(value.p), int(value.q)) for value in solution)


def _canonical_torsion(factors: Sequence[int]) -> Tuple[int, ...]:
    """Rebuild the divisibility chain from the elementary divisors."""

    powers: Dict[int, List[int]] = defaultdict(list)
    for factor in factors:
        for prime, exponent in factorint(abs(factor)).items():
            powers[prime].append(prime**exponent)
    length = max((len(values) for values in powers.values()), default=0)
    chain = [1] * length
    for values in powers.values():
        values.sort()
        # Largest prime powers go to the end of the chain.
        for offset, value in enumerate(values):
            chain[length - len(values) + offset] *= value
    return tuple(d for d in chain if d > 1)


def cokernel(matrix: IntMatrix, rows: int) -> Tuple[int, Tuple[int, ...]]:
    """Free rank and torsion of ``Z^rows / image(matrix)``."""

    if rows == 0:
        return 0, ()
    columns = len(matrix[0]) if matrix else 0
    if columns == 0:
        return rows, ()
    factors = invariant_factors(DM([list(row) for row in matrix], ZZ))
    nonzero = [int(f) for f in factors if int(f) != 0]
    return rows - len(nonzero), _canonical_torsion(nonzero)


def inertia_of(matrix: IntMatrix) -> Tuple[int, int, int]:
    """Positive, negative and null index of a symmetric integer matrix.

    Rational symmetric elimination: a nonzero diagonal pivot is split off,
    and when every remaining diagonal entry vanishes a hyperbolic pair
    ``e_i, e_j`` is replaced by ``e_i + e_j`` to create one.
    """

    require_symmetric(matrix)
    a = [[Fraction(entry) for entry in row] for row in matrix]
    active = list(range(len(a)))
    positive = negative = 0
    while active:
        pivot = next((i for i in active if a[i][i] != 0), None)
        if pivot is None:
            pair = next(
                ((i, j) for i in active for j in active if i != j and a[i][j] != 0),
                None,
            )
            if pair is None:
                break
            i, j = pair
            for k in active:
                a[i][k] += a[j][k]
            for k in active:
                a[k][i] = a[i][k]
            a[i][i] = a[i][i] + a[j][i]
            pivot = i
        d = a[pivot][pivot]
        if d > 0:
            positive += 1
        else:
            negative += 1
        rest = [k for k in active if k != pivot]
        for j in rest:
            factor = a[j][pivot] / d
            if factor:
                for k in rest:
                    a[j][k] -= factor * a[pivot][k]
        active = rest
    return positive, negative, len(active)


def signature(matrix: IntMatrix) -> int:
    positive, negative, _ = inertia_of(matrix)
    return positive - negative


def small_signature(matrix: IntMatrix) -> int:
    """Signature from the signs of the leading minors when none vanishes (size <= 3)."""

    n = len(matrix)
    if n <= 3:
        minors = [small_determinant([row[:k] for row in matrix[:k]]) for k in range(1, n + 1)]
        if all(minors):
            chain = [1] + minors
            negative = sum(1 for a, b in zip(chain, chain[1:]) if (a > 0) != (b > 0))
            return n - 2 * negative
    return signature(matrix)


__all__ = [
    "adjugate_pairing",
    "as_tuple_matrix",
    "block_sum",
    "cokernel",
    "congruent",
    "determinant",
    "inertia_of",
    "is_symmetric",
    "require_symmetric",
    "signature",
    "small_determinant",
    "small_signature",
    "solve_rational",
]

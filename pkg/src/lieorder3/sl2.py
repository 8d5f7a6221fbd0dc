"""Weight method for the symmetric-bracket deformation space.

Basis maps phi_{i,j,k}^s of Hom(S^3 V_1, V_0) (sending the sorted triple
(Y_i, Y_j, Y_k) to X_s) carry two integer weights: the raising-operator
weight lambda = 3m - n + 2(s - i - j - k + 1) and the diagonal-derivation
weight p = s - i - j - k, related by lambda = 2p + 3m - n + 2.  Counting
the weight-0 (m - n even) or weight-1 (m - n odd) basis maps gives the
dimension of the space of maximal vectors, which coincides with the kernel
dimension computed by the linear solver - the two methods cross-check each
other exactly.

The lowering operator of the ambient rank-1 triple <X_-, H, X_+> plays no
computational role here and is intentionally not implemented.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .graded_core import Vector, vec_add_scaled


def _validate_indices(n: int, m: int, s: int, i: int, j: int, k: int) -> None:
    if n < 1 or m < 1:
        raise ValueError(f"n and m must be >= 1, got ({n}, {m})")
    if not 1 <= s <= n:
        raise ValueError(f"target index s={s} out of range 1..{n}")
    if not (1 <= i <= j <= k <= m):
        raise ValueError(f"source indices ({i}, {j}, {k}) must be sorted within 1..{m}")


def weight_lambda(n: int, m: int, s: int, i: int, j: int, k: int) -> int:
    """Raising-operator weight of the basis map phi_{i,j,k}^s."""
    _validate_indices(n, m, s, i, j, k)
    return 3 * m - n + 2 * (s - i - j - k + 1)


def weight_p(n: int, m: int, s: int, i: int, j: int, k: int) -> int:
    """Diagonal-derivation weight s - i - j - k of phi_{i,j,k}^s."""
    _validate_indices(n, m, s, i, j, k)
    return s - i - j - k


@dataclass(frozen=True)
class WeightedMap:
    """A basis map phi_{i,j,k}^s together with its two weights."""

    n: int
    m: int
    s: int
    i: int
    j: int
    k: int
    lam: int
    p: int


def weighted_map(n: int, m: int, s: int, i: int, j: int, k: int) -> WeightedMap:
    return WeightedMap(n, m, s, i, j, k,
                       weight_lambda(n, m, s, i, j, k),
                       weight_p(n, m, s, i, j, k))


def target_weight(n: int, m: int) -> int:
    """0 when m - n is even, 1 when odd: the parity class all weights share."""
    return 0 if (m - n) % 2 == 0 else 1


def weight_basis_maps(n: int, m: int, lam: int) -> list[WeightedMap]:
    """All basis maps of the given raising-operator weight."""
    out = []
    for s in range(1, n + 1):
        for i, j, k in itertools.combinations_with_replacement(range(1, m + 1), 3):
            if weight_lambda(n, m, s, i, j, k) == lam:
                out.append(weighted_map(n, m, s, i, j, k))
    return out


def dim_C_by_weights(n: int, m: int) -> int:
    """Dimension of the symmetric-bracket deformation subspace, by counting.

    Counts sorted tuples (s, i <= j <= k) of weight 0 (m - n even) or 1
    (m - n odd); asking for the opposite parity would simply count nothing.
    """
    if n < 1 or m < 1:
        raise ValueError(f"n and m must be >= 1, got ({n}, {m})")
    return len(weight_basis_maps(n, m, target_weight(n, m)))


def maximal_vector_residual(n: int, m: int,
                            phi: dict[tuple[int, int, int, int], Fraction],
                            ) -> dict[tuple[int, int, int], Vector]:
    """Residual of the raising action on a coefficient table.

    ``phi`` maps (s, i, j, k) over the sorted basis to coefficients.  The
    residual at each sorted triple is the raising-operator image of the
    value minus the three argument shifts; an empty table means phi is a
    maximal vector, equivalently a member of the deformation subspace C.
    """
    values: dict[tuple[int, int, int], Vector] = {}
    for (s, i, j, k), coeff in phi.items():
        _validate_indices(n, m, s, i, j, k)
        coeff = Fraction(coeff)
        if coeff:
            vec_add_scaled(values.setdefault((i, j, k), {}), {s: coeff})

    def value(triple: tuple[int, int, int]) -> Vector:
        return values.get(tuple(sorted(triple)), {})

    residuals: dict[tuple[int, int, int], Vector] = {}
    for t in itertools.combinations_with_replacement(range(1, m + 1), 3):
        res: Vector = {s + 1: coeff for s, coeff in value(t).items() if s + 1 <= n}
        for slot in range(3):
            if t[slot] + 1 <= m:
                shifted = t[:slot] + (t[slot] + 1,) + t[slot + 1:]
                vec_add_scaled(res, value(shifted), Fraction(-1))
        if res:
            residuals[t] = res
    return residuals


def is_maximal_vector(n: int, m: int,
                      phi: dict[tuple[int, int, int, int], Fraction]) -> bool:
    return not maximal_vector_residual(n, m, phi)

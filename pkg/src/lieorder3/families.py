"""Closed-form deformation families and the two concrete example algebras.

The phi tables are hard-coded: the coefficient patterns are the point, and
the cocycle checker validates them rather than re-deriving them.  Every
family builds a psi3-only deformation; any X target past the top of the
chain truncates to zero.

``psi_t`` is accepted for max(1, n - m + 1) <= t <= n.  At t = n - m the
displayed entry list would reference the nonexistent Y_{m+1} and the
surviving entries fail the cocycle equation at (Y_1, Y_1, Y_m), so that
endpoint is rejected as out of range.  ``psi_k`` is constructed exactly as
displayed; see the verification suite for its status.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .deformation import Deformation, added, scaled
from .graded_core import OrderFAlgebra, Vector

F = Fraction

# (i, j, k) -> (offset from s, coefficient); targets are X_{s + offset}
_PHI1_TABLE: dict[tuple[int, int, int], tuple[int, Fraction]] = {
    (1, 1, 1): (0, F(1)),
    (1, 1, 2): (1, F(1, 3)),
    (1, 2, 2): (2, F(1, 6)),
    (2, 2, 2): (3, F(1, 6)),
    (2, 2, 3): (4, F(1, 18)),
    (1, 3, 3): (4, F(-1, 18)),
    (2, 3, 3): (5, F(1, 36)),
    (3, 3, 3): (6, F(1, 36)),
}

_PHI3_TABLE: dict[tuple[int, int, int], tuple[int, Fraction]] = {
    (1, 1, 3): (0, F(1)),
    (1, 2, 2): (0, F(-1, 2)),
    (1, 2, 3): (1, F(1, 2)),
    (2, 2, 2): (1, F(-3, 2)),
    (2, 2, 3): (2, F(-1, 2)),
    (1, 3, 3): (2, F(1)),
    (2, 3, 3): (3, F(-1, 4)),
    (3, 3, 3): (4, F(-1, 4)),
}

_PHI13_TABLE: dict[tuple[int, int, int], tuple[int, Fraction]] = {
    (1, 1, 1): (0, F(1)),
    (1, 1, 2): (1, F(1, 3)),
    (1, 1, 3): (2, F(1, 15)),
    (1, 2, 2): (2, F(2, 15)),
    (2, 2, 2): (3, F(1, 15)),
    (1, 2, 3): (3, F(1, 30)),
    (2, 2, 3): (4, F(1, 45)),
    (1, 3, 3): (4, F(1, 90)),
    (2, 3, 3): (5, F(1, 90)),
    (3, 3, 3): (6, F(1, 90)),
}


@dataclass(frozen=True)
class NamedDeformation:
    """A named family member with its parameter and realized tables."""

    name: str
    parameter: int
    n: int
    m: int
    deformation: Deformation


def _from_table(table, n: int, s: int) -> Deformation:
    psi3: dict[tuple[int, int, int], Vector] = {}
    for key, (offset, coeff) in table.items():
        target = s + offset
        if target <= n:
            psi3[key] = {target: coeff}
    return Deformation(n, 3, psi3=psi3)


def _check_s(n: int, s: int) -> None:
    if not 1 <= s <= n:
        raise ValueError(f"parameter s={s} out of range 1..{n}")


def phi1(n: int, s: int) -> NamedDeformation:
    """Weight s - 3 basis family seeded at (Y_1,Y_1,Y_1) -> X_s (m = 3)."""
    _check_s(n, s)
    return NamedDeformation("phi1", s, n, 3, _from_table(_PHI1_TABLE, n, s))


def phi3(n: int, s: int) -> NamedDeformation:
    """Weight s - 5 basis family seeded at (Y_1,Y_1,Y_3) -> X_s (m = 3)."""
    _check_s(n, s)
    return NamedDeformation("phi3", s, n, 3, _from_table(_PHI3_TABLE, n, s))


def phi13(n: int, s: int) -> NamedDeformation:
    """The mixed family phi1(s) + (1/15) phi3(s+2), realized as one table."""
    _check_s(n, s)
    return NamedDeformation("phi13", s, n, 3, _from_table(_PHI13_TABLE, n, s))


def phi_combination(n: int, s: int, a: Fraction) -> Deformation:
    """phi1(s) + a * phi3(s+2); only a = 1/15 can pass the cocycle equations
    once the mixing actually matters (used to probe the boundary)."""
    _check_s(n, s)
    _check_s(n, s + 2)
    return added(phi1(n, s).deformation, scaled(phi3(n, s + 2).deformation, a))


def theorem4_basis(n: int) -> list[NamedDeformation]:
    """Explicit basis of the symmetric-bracket deformation subspace (m = 3).

    Defined for odd n; the returned list has 2, 6, 8 or 10 members for
    n = 1, 3, 5 and n >= 7 respectively, matching the weight count.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError(f"the explicit basis is defined for odd n >= 1, got {n}")
    if n == 1:
        return [phi1(1, 1), phi3(1, 1)]
    if n == 3:
        return [phi1(3, s) for s in (3, 2, 1)] + [phi3(3, s) for s in (3, 2, 1)]
    if n == 5:
        return ([phi1(5, s) for s in (5, 4, 3, 2, 1)]
                + [phi3(5, s) for s in (5, 4, 3)])
    return ([phi1(n, s) for s in range(n, n - 5, -1)]
            + [phi3(n, s) for s in range(n, n - 3, -1)]
            + [phi13(n, n - 5), phi13(n, n - 6)])


def psi_k(n: int, m: int, k: int) -> NamedDeformation:
    """Family supported on (Y_{k+i}, Y_m, Y_m) -> X_{1+i}, 0 <= i <= min(n-1, m-k).

    Requires n >= 2 (for n <= 1 the grade-0 part is abelian, where the
    family is not defined).  Constructed exactly as displayed; these maps
    do not satisfy the cocycle equations (the suite documents this).
    """
    if n < 2:
        raise ValueError(f"psi_k requires n >= 2, got n={n}")
    if not 1 <= k <= m:
        raise ValueError(f"parameter k={k} out of range 1..{m}")
    psi3: dict[tuple[int, int, int], Vector] = {}
    for i in range(0, min(n - 1, m - k) + 1):
        psi3[tuple(sorted((k + i, m, m)))] = {1 + i: F(1)}
    return NamedDeformation("psi_k", k, n, m, Deformation(n, m, psi3=psi3))


def psi_t(n: int, m: int, t: int) -> NamedDeformation:
    """Family seeded by (Y_1,Y_1,Y_1) -> 3 X_t with chain (Y_1,Y_1,Y_{1+i}) -> X_{t+i}.

    Requires n >= m and max(1, n - m + 1) <= t <= n; below that range the
    entry list is not well formed and the cocycle equations fail.
    """
    if n < m:
        raise ValueError(f"psi_t requires n >= m, got n={n}, m={m}")
    low = max(1, n - m + 1)
    if not low <= t <= n:
        raise ValueError(f"parameter t={t} out of range {low}..{n}")
    psi3: dict[tuple[int, int, int], Vector] = {(1, 1, 1): {t: F(3)}}
    for i in range(1, n - t + 1):
        psi3[(1, 1, 1 + i)] = {t + i: F(1)}
    return NamedDeformation("psi_t", t, n, m, Deformation(n, m, psi3=psi3))


# ---------------------------------------------------------------------------
# example algebras
# ---------------------------------------------------------------------------

def example_poincare(D: int) -> OrderFAlgebra:
    """Poincare algebra in D dimensions acting on its vector representation,
    with the symmetric bracket {V,V,V} = eta-symmetrized momenta.

    Grade-0 positions list L_{mu,nu} (mu < nu, lexicographic) then P_mu;
    grade-1 positions are V_mu at mu + 1.  Metric eta = diag(1, -1, .., -1).
    """
    if D < 2:
        raise ValueError(f"Poincare example needs dimension D >= 2, got {D}")
    eta = [1] + [-1] * (D - 1)
    l_pairs = list(itertools.combinations(range(D), 2))
    l_pos = {pair: idx for idx, pair in enumerate(l_pairs)}
    p_pos = {mu: len(l_pairs) + mu for mu in range(D)}
    n = len(l_pairs) + D - 1

    def l_vector(acc: dict[int, int], mu: int, nu: int, coeff: int) -> None:
        # accumulate coeff * L_{mu,nu} with L antisymmetric in its labels
        if mu == nu or coeff == 0:
            return
        if mu > nu:
            mu, nu, coeff = nu, mu, -coeff
        pos = l_pos[(mu, nu)]
        acc[pos] = acc.get(pos, 0) + coeff
        if not acc[pos]:
            del acc[pos]

    bracket00: dict[tuple[int, int], Vector] = {}
    bracket01: dict[tuple[int, int], Vector] = {}
    tri1: dict[tuple[int, int, int], Vector] = {}

    def store(table, key, vec):
        cleaned = {pos: F(val) for pos, val in vec.items() if val}
        if cleaned:
            table[key] = cleaned

    for (mu, nu), (rho, sig) in itertools.combinations(l_pairs, 2):
        acc: dict[int, int] = {}
        if nu == sig:
            l_vector(acc, rho, mu, eta[nu])
        if mu == sig:
            l_vector(acc, rho, nu, -eta[mu])
        if nu == rho:
            l_vector(acc, mu, sig, eta[nu])
        if mu == rho:
            l_vector(acc, nu, sig, -eta[mu])
        store(bracket00, (l_pos[(mu, nu)], l_pos[(rho, sig)]), acc)

    for mu, nu in l_pairs:
        for rho in range(D):
            acc = {}
            if nu == rho:
                acc[p_pos[mu]] = acc.get(p_pos[mu], 0) + eta[nu]
            if mu == rho:
                acc[p_pos[nu]] = acc.get(p_pos[nu], 0) - eta[mu]
            store(bracket00, (l_pos[(mu, nu)], p_pos[rho]), acc)
            acc_v: dict[int, int] = {}
            if nu == rho:
                acc_v[mu + 1] = acc_v.get(mu + 1, 0) + eta[nu]
            if mu == rho:
                acc_v[nu + 1] = acc_v.get(nu + 1, 0) - eta[mu]
            store(bracket01, (l_pos[(mu, nu)], rho + 1), acc_v)
    # [P, P] = 0 and [P, V] = 0: no further bracket entries

    for a, b, c in itertools.combinations_with_replacement(range(D), 3):
        acc = {}
        if a == b:
            acc[p_pos[c]] = acc.get(p_pos[c], 0) + eta[a]
        if a == c:
            acc[p_pos[b]] = acc.get(p_pos[b], 0) + eta[a]
        if b == c:
            acc[p_pos[a]] = acc.get(p_pos[a], 0) + eta[b]
        store(tri1, (a + 1, b + 1, c + 1), acc)

    return OrderFAlgebra(F=3, n=n, m=D, p=0, bracket00=bracket00,
                         bracket01=bracket01, tri1=tri1)


def _mat_mul_int(a, b):
    size = len(a)
    return [[sum(a[r][k] * b[k][c] for k in range(size)) for c in range(size)]
            for r in range(size)]


@lru_cache(maxsize=1)
def _so23_data() -> tuple[dict[tuple[int, int], dict[int, int]], list[list[int]]]:
    """Structure constants of so(2,3) and the adjoint trace table.

    Generators are the 5x5 matrices M_{ab} = E_{ab} g_b - E_{ba} g_a for
    g = diag(1, 1, -1, -1, -1) and 0 <= a < b <= 4, ordered
    lexicographically; commutators decompose integrally in this basis.
    """
    g = [1, 1, -1, -1, -1]
    pairs = list(itertools.combinations(range(5), 2))
    pair_index = {pair: idx for idx, pair in enumerate(pairs)}
    gens = []
    for a, b in pairs:
        mat = [[0] * 5 for _ in range(5)]
        mat[a][b] = g[b]
        mat[b][a] = -g[a]
        gens.append(mat)
    dim = len(gens)

    def decompose(mat) -> dict[int, int]:
        # the only generator hitting entry (x, y), x < y, is M_{xy} with value g_y
        coeffs = {}
        for (x, y), idx in pair_index.items():
            num = mat[x][y]
            if num:
                if num % g[y]:
                    raise ArithmeticError("non-integral decomposition")
                coeffs[idx] = num // g[y]
        rebuilt = [[0] * 5 for _ in range(5)]
        for idx, coeff in coeffs.items():
            gen = gens[idx]
            for r in range(5):
                for c in range(5):
                    rebuilt[r][c] += coeff * gen[r][c]
        if rebuilt != mat:
            raise ArithmeticError("matrix not in the span of the basis")
        return coeffs

    structure: dict[tuple[int, int], dict[int, int]] = {}
    for a in range(dim):
        for b in range(a + 1, dim):
            prod_ab = _mat_mul_int(gens[a], gens[b])
            prod_ba = _mat_mul_int(gens[b], gens[a])
            comm = [[prod_ab[r][c] - prod_ba[r][c] for c in range(5)] for r in range(5)]
            coeffs = decompose(comm)
            if coeffs:
                structure[(a, b)] = coeffs

    adjoint = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    for (a, b), coeffs in structure.items():
        for c, val in coeffs.items():
            adjoint[a][c][b] = val
            adjoint[b][c][a] = -val
    trace = [[sum(_mat_mul_int(adjoint[a], adjoint[b])[r][r] for r in range(dim))
              for b in range(dim)] for a in range(dim)]
    return structure, trace


def so23_trace_table() -> list[list[int]]:
    """Trace pairings of the adjoint matrices (integers, symmetric)."""
    return [list(row) for row in _so23_data()[1]]


def example_so23_adjoint() -> OrderFAlgebra:
    """so(2,3) acting on its own adjoint representation, with the symmetric
    bracket {A_a, A_b, A_c} = Tr(A_a A_b) J_c + Tr(A_a A_c) J_b + Tr(A_b A_c) J_a.

    The trace is the plain matrix trace of the adjoint matrices, which for
    an adjoint representation is the Killing form; all structure constants
    are integers.
    """
    structure, trace = _so23_data()
    dim = len(trace)

    bracket00 = {key: {pos: F(val) for pos, val in coeffs.items()}
                 for key, coeffs in structure.items()}

    bracket01: dict[tuple[int, int], Vector] = {}
    for a in range(dim):
        for b in range(dim):
            if a == b:
                continue
            coeffs = structure.get((a, b))
            sign = 1
            if coeffs is None:
                coeffs = structure.get((b, a))
                sign = -1
            if coeffs:
                bracket01[(a, b + 1)] = {c + 1: F(sign * val) for c, val in coeffs.items()}

    tri1: dict[tuple[int, int, int], Vector] = {}
    for a, b, c in itertools.combinations_with_replacement(range(dim), 3):
        acc: dict[int, int] = {}
        for x, y, z in ((a, b, c), (a, c, b), (b, c, a)):
            t = trace[x][y]
            if t:
                acc[z] = acc.get(z, 0) + t
        vec = {pos: F(val) for pos, val in acc.items() if val}
        if vec:
            tri1[(a + 1, b + 1, c + 1)] = vec

    return OrderFAlgebra(F=3, n=dim - 1, m=dim, p=0,
                         bracket00=bracket00, bracket01=bracket01, tri1=tri1)

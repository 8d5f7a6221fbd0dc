"""Model filiform algebras, descending ideals, nilindex and example families.

The model algebra is the one where only the characteristic vector X_0 acts,
shifting each graded chain by one step, with all symmetric brackets zero.
Filiformity is decided through the order-nilindex: an algebra with grade
dimensions (n+1, m[, p]) is filiform exactly when its descending ideal
sequences annihilate in the maximal number of steps (n, m[, p]).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactlin import reduced_pivot_rows
from .graded_core import (
    InvalidAlgebraError,
    OrderFAlgebra,
    Vector,
    act0_on_vector,
    bracket00_elem,
)

ONE = Fraction(1)


class NotNilpotentError(ValueError):
    """Descending ideal sequence stabilized above zero."""

    def __init__(self, grade: int, stabilized_dim: int):
        super().__init__(f"grade-{grade} descending sequence stabilizes at "
                         f"dimension {stabilized_dim}, not 0")
        self.grade = grade
        self.stabilized_dim = stabilized_dim


@dataclass(frozen=True)
class OrderNilindex:
    """Smallest exponents annihilating each grade's descending sequence."""

    p0: int
    p1: int
    p2: int | None = None

    def as_tuple(self) -> tuple[int, ...]:
        if self.p2 is None:
            return (self.p0, self.p1)
        return (self.p0, self.p1, self.p2)


@dataclass(frozen=True)
class FiliformReport:
    filiform: bool
    nilindex: OrderNilindex

    def __bool__(self) -> bool:
        return self.filiform


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def model(n: int, m: int, p: int = 0) -> OrderFAlgebra:
    """The model filiform algebra: X_0 shifts each chain, everything else zero."""
    if n < 1 or m < 1:
        raise InvalidAlgebraError(f"model requires n >= 1 and m >= 1, got ({n}, {m})")
    if p < 0:
        raise InvalidAlgebraError("p must be >= 0")
    bracket00 = {(0, i): {i + 1: ONE} for i in range(1, n)}
    bracket01 = {(0, j): {j + 1: ONE} for j in range(1, m)}
    bracket02 = {(0, k): {k + 1: ONE} for k in range(1, p)}
    return OrderFAlgebra(F=3, n=n, m=m, p=p,
                         bracket00=bracket00, bracket01=bracket01, bracket02=bracket02)


def abelian(n: int, m: int, p: int = 0) -> OrderFAlgebra:
    """All products zero (used as the degenerate comparison point)."""
    return OrderFAlgebra(F=3, n=n, m=m, p=p)


def family_mu1(n: int, m: int, p: int = 0) -> OrderFAlgebra:
    """Model plus {Y_1,Y_1,Y_1} = X_n (and {Z_1,Z_1,Z_1} = X_n when p >= 1)."""
    alg = model(n, m, p)
    tri1 = {(1, 1, 1): {n: ONE}}
    tri2 = {(1, 1, 1): {n: ONE}} if p >= 1 else {}
    return OrderFAlgebra(F=3, n=n, m=m, p=p, bracket00=alg.bracket00,
                         bracket01=alg.bracket01, bracket02=alg.bracket02,
                         tri1=tri1, tri2=tri2)


def family_mu2(n: int, m: int, p: int = 0) -> OrderFAlgebra:
    """Model plus {Y_1,Y_1,Y_1} = 3 X_1 and {Y_1,Y_1,Y_j} = X_j for 2 <= j <= n.

    Only defined when m >= n (the chain of Y's must be long enough).
    """
    if m < n:
        raise InvalidAlgebraError(f"family mu2 requires m >= n, got n={n}, m={m}")
    alg = model(n, m, p)
    tri1: dict[tuple[int, int, int], Vector] = {(1, 1, 1): {1: Fraction(3)}}
    for j in range(2, n + 1):
        tri1[(1, 1, j)] = {j: ONE}
    return OrderFAlgebra(F=3, n=n, m=m, p=p, bracket00=alg.bracket00,
                         bracket01=alg.bracket01, bracket02=alg.bracket02, tri1=tri1)


# ---------------------------------------------------------------------------
# descending ideals and nilindex
# ---------------------------------------------------------------------------

def _reduced_basis(rows: list[Vector]) -> list[Vector]:
    pivots = reduced_pivot_rows(rows)
    return [pivots[col] for col in sorted(pivots)]


def descending_sequence(alg: OrderFAlgebra, grade: int) -> list[int]:
    """Dimensions of C^0 >= C^1 >= ... until hitting 0 or a fixed point.

    C^{k+1} = [g0, C^k] with C^0 the full grade-``grade`` space; subspaces
    are kept as exact reduced bases so the stabilization test is canonical.
    """
    dim = alg.grade_dim(grade)
    low = 0 if grade == 0 else 1
    current: list[Vector] = [{pos: ONE} for pos in range(low, (alg.n if grade == 0 else dim) + 1)]
    dims = [len(current)]
    while True:
        images: list[Vector] = []
        for i in range(alg.n + 1):
            for vec in current:
                img = act0_on_vector(alg, i, grade, vec)
                if img:
                    images.append(img)
        nxt = _reduced_basis(images)
        dims.append(len(nxt))
        if len(nxt) == 0 or len(nxt) == len(current):
            return dims
        current = nxt


def order_nilindex(alg: OrderFAlgebra) -> OrderNilindex:
    """Order-nilindex (p0, p1[, p2]); rejects non-nilpotent inputs."""
    exponents: list[int] = []
    for grade in alg.grades():
        if grade != 0 and alg.grade_dim(grade) == 0:
            exponents.append(0)
            continue
        dims = descending_sequence(alg, grade)
        if dims[-1] != 0:
            raise NotNilpotentError(grade, dims[-1])
        exponents.append(len(dims) - 1)
    p2 = exponents[2] if len(exponents) > 2 and alg.p > 0 else None
    return OrderNilindex(exponents[0], exponents[1] if len(exponents) > 1 else 0, p2)


def is_filiform(alg: OrderFAlgebra) -> FiliformReport:
    """Maximal order-nilindex test: filiform iff nilindex equals (n, m[, p]).

    The caller is expected to have verified the defining identities first;
    this predicate only inspects the descending sequences.
    """
    nilindex = order_nilindex(alg)
    expected = (alg.n, alg.m) if alg.p == 0 else (alg.n, alg.m, alg.p)
    return FiliformReport(nilindex.as_tuple() == expected, nilindex)


def is_adapted_form(alg: OrderFAlgebra) -> bool:
    """True iff the stored constants realize the characteristic-vector chains.

    Checks literally that [X_0, X_i] = X_{i+1} (i < n), [X_0, X_n] = 0, the
    same for the Y chain and, when p > 0, the Z chain.  Products not
    involving X_0's chain action are unconstrained.
    """
    for i in range(1, alg.n + 1):
        expected = {i + 1: ONE} if i < alg.n else {}
        if bracket00_elem(alg, 0, i) != expected:
            return False
    chains = [(1, alg.m, alg.bracket01)]
    if alg.p > 0:
        chains.append((2, alg.p, alg.bracket02))
    for _grade, dim, table in chains:
        for j in range(1, dim + 1):
            expected = {j + 1: ONE} if j < dim else {}
            if table.get((0, j), {}) != expected:
                return False
    return True

"""Infinitesimal deformations of the model elementary algebra.

A deformation is a triple of coefficient tables (psi1, psi2, psi3) for maps
g0^g0 -> g0, g0^g1 -> g1 and S^3 g1 -> g0 that vanish on the characteristic
vector X_0 and avoid X_0 in their images.  ``is_infinitesimal`` evaluates
the four cocycle equations against the model law, ``is_integrable`` the four
quadratic self-composition equations, and ``deform`` adds an admissible
deformation onto the model's structure constants.

The cocycle space Z = A + B + C is computed two ways: per-block reduced
linear systems (``solve_subspace_A/B/C``) and, as an independent witness, a
symbolic assembly of the full four-equation system on a dense unknown with
the X_0 output coordinates included (``full_system_kernel_dimension``).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .exactlin import ZERO, kernel_basis_of_rows, rational_from_string, rational_to_string
from .filiform import model
from .graded_core import (
    OrderFAlgebra,
    Vector,
    Violation,
    VerificationReport,
    action_elem,
    bracket00_elem,
    tri_elem,
    vec_add_scaled,
    vec_neg,
)

ONE = Fraction(1)


class DeformationError(ValueError):
    """Deformation rejected; carries the verification report when relevant."""

    def __init__(self, message: str, report: VerificationReport | None = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class Deformation:
    """Coefficient tables (psi1, psi2, psi3) of a candidate deformation.

    Keys never involve X_0 and psi1/psi3 images live in <X_1..X_n>; both
    facts are structural invariants of the type, matching the vanishing and
    image constraints every admissible deformation satisfies.
    """

    n: int
    m: int
    psi1: dict[tuple[int, int], Vector] = field(default_factory=dict)
    psi2: dict[tuple[int, int], Vector] = field(default_factory=dict)
    psi3: dict[tuple[int, int, int], Vector] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.n < 1 or self.m < 1:
            raise DeformationError(f"deformation needs n, m >= 1, got ({self.n}, {self.m})")

        def clean(table, check_key, low, high, where):
            out = {}
            for key, vec in table.items():
                check_key(key)
                cleaned = {}
                for pos, val in vec.items():
                    if not low <= pos <= high:
                        raise DeformationError(
                            f"{where}{key}: output position {pos} outside [{low}, {high}]")
                    val = Fraction(val)
                    if val:
                        cleaned[pos] = val
                if cleaned:
                    out[tuple(key)] = cleaned
            return out

        def key1(key):
            i, j = key
            if not 1 <= i < j <= self.n:
                raise DeformationError(f"psi1 key {key} must satisfy 1 <= i < j <= n")

        def key2(key):
            i, j = key
            if not (1 <= i <= self.n and 1 <= j <= self.m):
                raise DeformationError(f"psi2 key {key} out of range")

        def key3(key):
            if list(key) != sorted(key) or not all(1 <= x <= self.m for x in key):
                raise DeformationError(f"psi3 key {key} must be sorted within 1..m")

        object.__setattr__(self, "psi1", clean(self.psi1, key1, 1, self.n, "psi1"))
        object.__setattr__(self, "psi2", clean(self.psi2, key2, 1, self.m, "psi2"))
        object.__setattr__(self, "psi3", clean(self.psi3, key3, 1, self.n, "psi3"))

    def is_zero(self) -> bool:
        return not (self.psi1 or self.psi2 or self.psi3)


def zero_deformation(n: int, m: int) -> Deformation:
    return Deformation(n, m)


def scaled(psi: Deformation, c: Fraction) -> Deformation:
    c = Fraction(c)
    return Deformation(
        psi.n, psi.m,
        {k: {p: c * v for p, v in vec.items()} for k, vec in psi.psi1.items()},
        {k: {p: c * v for p, v in vec.items()} for k, vec in psi.psi2.items()},
        {k: {p: c * v for p, v in vec.items()} for k, vec in psi.psi3.items()},
    )


def added(a: Deformation, b: Deformation) -> Deformation:
    if (a.n, a.m) != (b.n, b.m):
        raise DeformationError("cannot add deformations of different shapes")

    def merge(x, y):
        out = {k: dict(v) for k, v in x.items()}
        for k, vec in y.items():
            acc = out.setdefault(k, {})
            vec_add_scaled(acc, vec)
            if not acc:
                del out[k]
        return out

    return Deformation(a.n, a.m, merge(a.psi1, b.psi1),
                       merge(a.psi2, b.psi2), merge(a.psi3, b.psi3))


def combination(terms: list[tuple[Fraction, Deformation]], n: int, m: int) -> Deformation:
    total = zero_deformation(n, m)
    for coeff, psi in terms:
        total = added(total, scaled(psi, coeff))
    return total


# ---------------------------------------------------------------------------
# element accessors (antisymmetry / symmetry applied, X_0 vanishing built in)
# ---------------------------------------------------------------------------

def _psi1_elem(psi: Deformation, i: int, j: int) -> Vector:
    if i == j or i == 0 or j == 0:
        return {}
    if i < j:
        return psi.psi1.get((i, j), {})
    return vec_neg(psi.psi1.get((j, i), {}))


def _psi2_elem(psi: Deformation, i: int, j: int) -> Vector:
    if i == 0:
        return {}
    return psi.psi2.get((i, j), {})


def _psi3_elem(psi: Deformation, indices) -> Vector:
    return psi.psi3.get(tuple(sorted(indices)), {})


def _psi2_on_xvec(psi: Deformation, xvec: Vector, y: int) -> Vector:
    out: Vector = {}
    for s, val in xvec.items():
        vec_add_scaled(out, _psi2_elem(psi, s, y), val)
    return out


def _psi2_x_on_yvec(psi: Deformation, i: int, yvec: Vector) -> Vector:
    out: Vector = {}
    for t, val in yvec.items():
        vec_add_scaled(out, _psi2_elem(psi, i, t), val)
    return out


def _psi1_on_vec_left(psi: Deformation, xvec: Vector, k: int) -> Vector:
    out: Vector = {}
    for s, val in xvec.items():
        vec_add_scaled(out, _psi1_elem(psi, s, k), val)
    return out


def _psi1_x_on_vec(psi: Deformation, x: int, xvec: Vector) -> Vector:
    out: Vector = {}
    for s, val in xvec.items():
        vec_add_scaled(out, _psi1_elem(psi, x, s), val)
    return out


def _psi3_with_vec(psi: Deformation, indices, slot: int, yvec: Vector) -> Vector:
    out: Vector = {}
    for b, val in yvec.items():
        replaced = indices[:slot] + (b,) + indices[slot + 1:]
        vec_add_scaled(out, _psi3_elem(psi, replaced), val)
    return out


# ---------------------------------------------------------------------------
# symbolic cocycle system (the four defining equations against the model law)
# ---------------------------------------------------------------------------

# A symbolic vector maps an output basis position to a linear form in the
# deformation's coefficients; forms map variable ids to rational coefficients.
Form = dict[int, Fraction]
SymVec = dict[int, Form]


def _sym_add_scaled(acc: SymVec, sym: SymVec, scale: Fraction = ONE) -> None:
    if not scale:
        return
    for pos, form in sym.items():
        dst = acc.setdefault(pos, {})
        for var, coeff in form.items():
            new = dst.get(var, ZERO) + scale * coeff
            if new:
                dst[var] = new
            else:
                dst.pop(var, None)
        if not dst:
            del acc[pos]


@dataclass(frozen=True)
class CocycleSystem:
    """Cached symbolic form of the four cocycle equations for (n, m).

    The unknown has exactly the Deformation type's coordinates: psi1/psi3
    images stay inside <X_1..X_n> structurally (an X_0 coordinate would
    admit maps that are not deformations of anything filiform, visibly so
    at the degenerate abelian sizes).  ``instances`` lists (identity, index
    tuple, residual grade, {position: linear form}).
    """

    n: int
    m: int
    variables: tuple[tuple, ...]
    var_index: dict[tuple, int]
    instances: tuple[tuple[str, tuple[int, ...], int, SymVec], ...]


@lru_cache(maxsize=None)
def _cocycle_system(n: int, m: int) -> CocycleSystem:
    mu0 = model(n, m)
    variables: list[tuple] = []
    for s in range(1, n + 1):
        for i, j in itertools.combinations(range(1, n + 1), 2):
            variables.append(("psi1", s, i, j))
    for t in range(1, m + 1):
        for i in range(1, n + 1):
            for j in range(1, m + 1):
                variables.append(("psi2", t, i, j))
    for s in range(1, n + 1):
        for tri in itertools.combinations_with_replacement(range(1, m + 1), 3):
            variables.append(("psi3", s) + tri)
    var_index = {label: idx for idx, label in enumerate(variables)}

    def sym_psi1(i: int, j: int) -> SymVec:
        if i == j or i == 0 or j == 0:
            return {}
        sign = ONE if i < j else -ONE
        a, b = min(i, j), max(i, j)
        return {s: {var_index[("psi1", s, a, b)]: sign} for s in range(1, n + 1)}

    def sym_psi2(i: int, j: int) -> SymVec:
        if i == 0:
            return {}
        return {t: {var_index[("psi2", t, i, j)]: ONE} for t in range(1, m + 1)}

    def sym_psi3(indices) -> SymVec:
        key = tuple(sorted(indices))
        return {s: {var_index[("psi3", s) + key]: ONE} for s in range(1, n + 1)}

    def mu1(i: int, j: int) -> Vector:
        return bracket00_elem(mu0, i, j)

    def mu2(i: int, j: int) -> Vector:
        return action_elem(mu0, 1, i, j)

    def mu1_sym_left(sym: SymVec, k: int) -> SymVec:
        # mu1(sym, X_k) = sum_pos sym[pos] * mu1(X_pos, X_k)
        out: SymVec = {}
        for pos, form in sym.items():
            for tgt, coeff in mu1(pos, k).items():
                _sym_add_scaled(out, {tgt: form}, coeff)
        return out

    def mu1_sym_right(x: int, sym: SymVec) -> SymVec:
        out: SymVec = {}
        for pos, form in sym.items():
            for tgt, coeff in mu1(x, pos).items():
                _sym_add_scaled(out, {tgt: form}, coeff)
        return out

    def mu2_x_sym(i: int, sym: SymVec) -> SymVec:
        # mu2(X_i, sym) for a grade-1-valued symbolic vector
        out: SymVec = {}
        for pos, form in sym.items():
            for tgt, coeff in mu2(i, pos).items():
                _sym_add_scaled(out, {tgt: form}, coeff)
        return out

    def mu2_symx_on_elem(sym: SymVec, y: int) -> SymVec:
        # mu2(sym, Y_y) for a grade-0-valued symbolic vector
        out: SymVec = {}
        for pos, form in sym.items():
            for tgt, coeff in mu2(pos, y).items():
                _sym_add_scaled(out, {tgt: form}, coeff)
        return out

    def sym_psi1_vec_left(xvec: Vector, k: int) -> SymVec:
        out: SymVec = {}
        for s, val in xvec.items():
            _sym_add_scaled(out, sym_psi1(s, k), val)
        return out

    def sym_psi2_vec_left(xvec: Vector, y: int) -> SymVec:
        out: SymVec = {}
        for s, val in xvec.items():
            _sym_add_scaled(out, sym_psi2(s, y), val)
        return out

    def sym_psi2_x_on_yvec(i: int, yvec: Vector) -> SymVec:
        out: SymVec = {}
        for t, val in yvec.items():
            _sym_add_scaled(out, sym_psi2(i, t), val)
        return out

    def sym_psi3_with_vec(indices, slot: int, yvec: Vector) -> SymVec:
        out: SymVec = {}
        for b, val in yvec.items():
            replaced = indices[:slot] + (b,) + indices[slot + 1:]
            _sym_add_scaled(out, sym_psi3(replaced), val)
        return out

    def mu3_with_sym(indices, slot: int, sym: SymVec) -> SymVec:
        # mu3 of the model with one symbolic slot (identically zero tables,
        # kept in literal equation shape)
        out: SymVec = {}
        for b, form in sym.items():
            replaced = indices[:slot] + (b,) + indices[slot + 1:]
            for tgt, coeff in tri_elem(mu0, 1, replaced).items():
                _sym_add_scaled(out, {tgt: form}, coeff)
        return out

    instances: list[tuple[str, tuple[int, ...], int, SymVec]] = []

    # (1) over triples of g0 basis vectors
    for i, j, k in itertools.combinations(range(0, n + 1), 3):
        acc: SymVec = {}
        _sym_add_scaled(acc, mu1_sym_left(sym_psi1(i, j), k))
        _sym_add_scaled(acc, sym_psi1_vec_left(mu1(i, j), k))
        _sym_add_scaled(acc, mu1_sym_left(sym_psi1(k, i), j))
        _sym_add_scaled(acc, sym_psi1_vec_left(mu1(k, i), j))
        _sym_add_scaled(acc, mu1_sym_left(sym_psi1(j, k), i))
        _sym_add_scaled(acc, sym_psi1_vec_left(mu1(j, k), i))
        if acc:
            instances.append(("(1)", (i, j, k), 0, acc))

    # (2) over pairs of g0 and one grade-1 basis vector
    for i, j in itertools.combinations(range(0, n + 1), 2):
        for y in range(1, m + 1):
            acc = {}
            _sym_add_scaled(acc, mu2_symx_on_elem(sym_psi1(i, j), y))
            _sym_add_scaled(acc, sym_psi2_vec_left(mu1(i, j), y))
            # mu2(psi2(X_j, Y), X_i) = -mu2(X_i, psi2(X_j, Y))
            _sym_add_scaled(acc, mu2_x_sym(i, sym_psi2(j, y)), -ONE)
            # psi2(mu2(X_j, Y), X_i) = -psi2(X_i, mu2(X_j, Y))
            _sym_add_scaled(acc, sym_psi2_x_on_yvec(i, mu2(j, y)), -ONE)
            # mu2(psi2(Y, X_i), X_j) = +mu2(X_j, psi2(X_i, Y))
            _sym_add_scaled(acc, mu2_x_sym(j, sym_psi2(i, y)))
            # psi2(mu2(Y, X_i), X_j) = +psi2(X_j, mu2(X_i, Y))
            _sym_add_scaled(acc, sym_psi2_x_on_yvec(j, mu2(i, y)))
            if acc:
                instances.append(("(2)", (i, j, y), 1, acc))

    # (3) over one g0 and a sorted triple of grade-1 basis vectors
    triples = list(itertools.combinations_with_replacement(range(1, m + 1), 3))
    for x in range(0, n + 1):
        for t in triples:
            acc = {}
            _sym_add_scaled(acc, mu1_sym_right(x, sym_psi3(t)))
            _sym_add_scaled(acc, sym_psi1_vec_left(tri_elem(mu0, 1, t), x), -ONE)
            # psi1(X, mu3(t)) = -psi1(mu3(t), X); the model's mu3 is zero
            for slot in range(3):
                _sym_add_scaled(acc, mu3_with_sym(t, slot, sym_psi2(x, t[slot])), -ONE)
                _sym_add_scaled(acc, sym_psi3_with_vec(t, slot, mu2(x, t[slot])), -ONE)
            if acc:
                instances.append(("(3)", (x,) + t, 0, acc))

    # (4) over sorted quadruples of grade-1 basis vectors
    for q in itertools.combinations_with_replacement(range(1, m + 1), 4):
        acc = {}
        for slot in range(4):
            pick = q[slot]
            rest = q[:slot] + q[slot + 1:]
            # mu2(Y_pick, psi3(rest)) = -mu2(psi3(rest), Y_pick)
            _sym_add_scaled(acc, mu2_symx_on_elem(sym_psi3(rest), pick), -ONE)
            # psi2(Y_pick, mu3(rest)) = -psi2(mu3(rest), Y_pick); model mu3 = 0
            _sym_add_scaled(acc, sym_psi2_vec_left(tri_elem(mu0, 1, rest), pick), -ONE)
        if acc:
            instances.append(("(4)", q, 1, acc))

    return CocycleSystem(n, m, tuple(variables), var_index, tuple(instances))


def _deformation_coordinates(psi: Deformation, system: CocycleSystem) -> dict[int, Fraction]:
    coords: dict[int, Fraction] = {}
    for (i, j), vec in psi.psi1.items():
        for s, val in vec.items():
            coords[system.var_index[("psi1", s, i, j)]] = val
    for (i, j), vec in psi.psi2.items():
        for t, val in vec.items():
            coords[system.var_index[("psi2", t, i, j)]] = val
    for key, vec in psi.psi3.items():
        for s, val in vec.items():
            coords[system.var_index[("psi3", s) + key]] = val
    return coords


def _require_model(mu0: OrderFAlgebra, psi: Deformation) -> None:
    if (mu0.n, mu0.m) != (psi.n, psi.m):
        raise DeformationError(
            f"dimension mismatch: model is ({mu0.n}, {mu0.m}), "
            f"deformation is ({psi.n}, {psi.m})")
    if mu0.p != 0 or mu0 != model(mu0.n, mu0.m):
        raise DeformationError("base algebra must be the elementary model law")


def is_infinitesimal(mu0: OrderFAlgebra, psi: Deformation) -> VerificationReport:
    """Evaluate the four cocycle equations of the deformation condition.

    Empty violation list <=> psi is an infinitesimal deformation of the
    model vanishing on the characteristic vector.
    """
    _require_model(mu0, psi)
    system = _cocycle_system(psi.n, psi.m)
    coords = _deformation_coordinates(psi, system)
    violations = []
    for identity, indices, grade, symvec in system.instances:
        residual: Vector = {}
        for pos, form in symvec.items():
            total = ZERO
            for var, coeff in form.items():
                val = coords.get(var)
                if val is not None:
                    total += coeff * val
            if total:
                residual[pos] = total
        if residual:
            violations.append(Violation(identity, None, indices, grade, residual))
    return VerificationReport(tuple(violations))


def is_integrable(psi: Deformation) -> VerificationReport:
    """Evaluate the four self-composition equations (psi o psi = 0).

    Instances quantify over the basis away from X_0; the X_0 instances
    vanish structurally because deformations vanish there.
    """
    n, m = psi.n, psi.m
    violations = []

    for i, j, k in itertools.combinations(range(1, n + 1), 3):
        res: Vector = {}
        vec_add_scaled(res, _psi1_on_vec_left(psi, _psi1_elem(psi, i, j), k))
        vec_add_scaled(res, _psi1_on_vec_left(psi, _psi1_elem(psi, k, i), j))
        vec_add_scaled(res, _psi1_on_vec_left(psi, _psi1_elem(psi, j, k), i))
        if res:
            violations.append(Violation("(1)", None, (i, j, k), 0, res))

    for i, j in itertools.combinations(range(1, n + 1), 2):
        for y in range(1, m + 1):
            res = {}
            vec_add_scaled(res, _psi2_on_xvec(psi, _psi1_elem(psi, i, j), y))
            # psi2(psi2(Y, X_i), X_j) = +psi2(X_j, psi2(X_i, Y))
            vec_add_scaled(res, _psi2_x_on_yvec(psi, j, _psi2_elem(psi, i, y)))
            # psi2(psi2(X_j, Y), X_i) = -psi2(X_i, psi2(X_j, Y))
            vec_add_scaled(res, _psi2_x_on_yvec(psi, i, _psi2_elem(psi, j, y)), -ONE)
            if res:
                violations.append(Violation("(2)", None, (i, j, y), 1, res))

    triples = list(itertools.combinations_with_replacement(range(1, m + 1), 3))
    for x in range(1, n + 1):
        for t in triples:
            res = {}
            vec_add_scaled(res, _psi1_x_on_vec(psi, x, _psi3_elem(psi, t)))
            for slot in range(3):
                vec_add_scaled(res, _psi3_with_vec(psi, t, slot,
                                                   _psi2_elem(psi, x, t[slot])), -ONE)
            if res:
                violations.append(Violation("(3)", None, (x,) + t, 0, res))

    for q in itertools.combinations_with_replacement(range(1, m + 1), 4):
        res = {}
        for slot in range(4):
            pick = q[slot]
            rest = q[:slot] + q[slot + 1:]
            # psi2(Y_pick, v) = -psi2(v, Y_pick) for the grade-0 value v
            vec_add_scaled(res, _psi2_on_xvec(psi, _psi3_elem(psi, rest), pick), -ONE)
        if res:
            violations.append(Violation("(4)", None, q, 1, res))

    return VerificationReport(tuple(violations))


def deform(mu0: OrderFAlgebra, psi: Deformation, force: bool = False) -> OrderFAlgebra:
    """Structure constants of model + psi.

    Refuses deformations that fail the cocycle or integrability equations
    unless ``force`` is set (the CLI's escape hatch); the refusal names the
    first violated equation and index tuple.
    """
    _require_model(mu0, psi)
    if not force:
        for stage, report in (("infinitesimal-deformation", is_infinitesimal(mu0, psi)),
                              ("integrability", is_integrable(psi))):
            if not report.ok:
                first = report.violations[0]
                raise DeformationError(
                    f"{stage} equation {first.identity} violated at {first.indices}",
                    report)

    bracket00 = {key: dict(vec) for key, vec in mu0.bracket00.items()}
    for (i, j), vec in psi.psi1.items():
        acc = bracket00.setdefault((i, j), {})
        vec_add_scaled(acc, vec)
        if not acc:
            del bracket00[(i, j)]
    bracket01 = {key: dict(vec) for key, vec in mu0.bracket01.items()}
    for (i, j), vec in psi.psi2.items():
        acc = bracket01.setdefault((i, j), {})
        vec_add_scaled(acc, vec)
        if not acc:
            del bracket01[(i, j)]
    tri1 = {key: dict(vec) for key, vec in psi.psi3.items()}
    return OrderFAlgebra(F=3, n=mu0.n, m=mu0.m, p=0,
                         bracket00=bracket00, bracket01=bracket01, tri1=tri1)


# ---------------------------------------------------------------------------
# kernel solvers for the subspaces A, B, C
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KernelBasis:
    """Reduced-echelon kernel basis with its variable-order metadata."""

    variables: tuple[tuple, ...]
    vectors: tuple[tuple[Fraction, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.vectors)


def _solve(variables: list[tuple], rows: list[dict[int, Fraction]]) -> KernelBasis:
    basis = kernel_basis_of_rows(rows, len(variables))
    return KernelBasis(tuple(variables), tuple(tuple(v) for v in basis))


def solve_subspace_A(n: int, m: int) -> KernelBasis:
    """Kernel of the psi1 block: psi1(X_{j+1},X_k) + psi1(X_j,X_{k+1})
    + [psi1(X_j,X_k), X_0] = 0 over all 1 <= j < k <= n."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    variables = [("psi1", s, i, j) for s in range(1, n + 1) for (i, j) in pairs]
    index = {label: pos for pos, label in enumerate(variables)}
    rows = []
    for j, k in pairs:
        for r in range(1, n + 1):
            form: dict[int, Fraction] = {}

            def add(label, coeff):
                if label in index:
                    var = index[label]
                    new = form.get(var, ZERO) + coeff
                    if new:
                        form[var] = new
                    else:
                        form.pop(var, None)

            if j + 1 <= n and j + 1 != k:
                add(("psi1", r, j + 1, k), ONE)
            if k + 1 <= n:
                add(("psi1", r, j, k + 1), ONE)
            if r >= 2:
                add(("psi1", r - 1, j, k), -ONE)
            if form:
                rows.append(form)
    return _solve(variables, rows)


def solve_subspace_B(n: int, m: int) -> KernelBasis:
    """Kernel of the psi2 block: psi2(X_{j+1},Y_k) + [psi2(X_j,Y_k), X_0]
    + psi2(X_j,Y_{k+1}) = 0 over 1 <= j <= n, 1 <= k <= m."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    keys = [(i, j) for i in range(1, n + 1) for j in range(1, m + 1)]
    variables = [("psi2", t, i, j) for t in range(1, m + 1) for (i, j) in keys]
    index = {label: pos for pos, label in enumerate(variables)}
    rows = []
    for j in range(1, n + 1):
        for k in range(1, m + 1):
            for t in range(1, m + 1):
                form: dict[int, Fraction] = {}
                if j + 1 <= n:
                    form[index[("psi2", t, j + 1, k)]] = ONE
                if t >= 2:
                    form[index[("psi2", t - 1, j, k)]] = -ONE
                if k + 1 <= m:
                    form[index[("psi2", t, j, k + 1)]] = ONE
                if form:
                    rows.append(form)
    return _solve(variables, rows)


def solve_subspace_C(n: int, m: int) -> KernelBasis:
    """Kernel of the psi3 block: [X_0, phi(Y_i,Y_j,Y_k)] equals the sum of
    the three argument shifts, over every sorted triple."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    triples = list(itertools.combinations_with_replacement(range(1, m + 1), 3))
    variables = [("psi3", s) + t for s in range(1, n + 1) for t in triples]
    index = {label: pos for pos, label in enumerate(variables)}
    rows = []
    for t in triples:
        for r in range(1, n + 1):
            form: dict[int, Fraction] = {}
            if r >= 2:
                form[index[("psi3", r - 1) + t]] = ONE
            for slot in range(3):
                if t[slot] + 1 <= m:
                    shifted = tuple(sorted(t[:slot] + (t[slot] + 1,) + t[slot + 1:]))
                    var = index[("psi3", r) + shifted]
                    new = form.get(var, ZERO) - ONE
                    if new:
                        form[var] = new
                    else:
                        form.pop(var, None)
            if form:
                rows.append(form)
    return _solve(variables, rows)


def full_system_kernel_dimension(n: int, m: int) -> int:
    """Kernel dimension of the complete four-equation system on a dense
    unknown with the Deformation type's coordinates; the independent
    witness for the Z = A + B + C decomposition."""
    system = _cocycle_system(n, m)
    rows = []
    for _identity, _indices, _grade, symvec in system.instances:
        rows.extend(form for form in symvec.values() if form)
    return len(kernel_basis_of_rows(rows, len(system.variables)))


@dataclass(frozen=True)
class ZDecomposition:
    a: KernelBasis
    b: KernelBasis
    c: KernelBasis
    combined_dimension: int

    @property
    def consistent(self) -> bool:
        return (self.a.dimension + self.b.dimension + self.c.dimension
                == self.combined_dimension)


def decompose_Z(n: int, m: int) -> ZDecomposition:
    """Solve the three block systems and witness the direct-sum property."""
    return ZDecomposition(
        a=solve_subspace_A(n, m),
        b=solve_subspace_B(n, m),
        c=solve_subspace_C(n, m),
        combined_dimension=full_system_kernel_dimension(n, m),
    )


def deformation_from_vector(variables: tuple[tuple, ...], vector, n: int, m: int) -> Deformation:
    """Reinterpret a kernel vector as a Deformation using its variable labels."""
    psi1: dict[tuple[int, int], Vector] = {}
    psi2: dict[tuple[int, int], Vector] = {}
    psi3: dict[tuple[int, int, int], Vector] = {}
    for label, value in zip(variables, vector):
        if not value:
            continue
        kind, s = label[0], label[1]
        key = label[2:]
        if kind == "psi1":
            psi1.setdefault(key, {})[s] = value
        elif kind == "psi2":
            psi2.setdefault(key, {})[s] = value
        elif kind == "psi3":
            psi3.setdefault(key, {})[s] = value
        else:
            raise ValueError(f"unknown variable label {label}")
    return Deformation(n, m, psi1, psi2, psi3)


# ---------------------------------------------------------------------------
# JSON format (mirrors the algebra format)
# ---------------------------------------------------------------------------

def _table_to_json(table, names):
    out = []
    for key, vec in sorted(table.items()):
        entry = dict(zip(names, key))
        entry["out"] = [[pos, rational_to_string(val)] for pos, val in sorted(vec.items())]
        out.append(entry)
    return out


def deformation_to_json(psi: Deformation) -> dict:
    return {
        "n": psi.n,
        "m": psi.m,
        "psi1": _table_to_json(psi.psi1, ("i", "j")),
        "psi2": _table_to_json(psi.psi2, ("i", "j")),
        "psi3": _table_to_json(psi.psi3, ("i", "j", "l")),
    }


def deformation_to_json_text(psi: Deformation) -> str:
    return json.dumps(deformation_to_json(psi), indent=2)


def deformation_from_json(obj) -> Deformation:
    if not isinstance(obj, dict):
        raise ValueError("deformation JSON must be an object")
    allowed = {"n", "m", "psi1", "psi2", "psi3"}
    unknown = set(obj) - allowed
    if unknown:
        raise ValueError(f"unknown fields in deformation JSON: {sorted(unknown)}")

    def require_int(key):
        value = obj.get(key)
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"field {key!r} must be an integer")
        return value

    n = require_int("n")
    m = require_int("m")

    def parse(key, names, low, high):
        raw = obj.get(key, [])
        if not isinstance(raw, list):
            raise ValueError(f"field {key!r} must be a list")
        table = {}
        for entry in raw:
            if not isinstance(entry, dict):
                raise ValueError(f"{key}: entries must be objects")
            extra = set(entry) - set(names) - {"out"}
            if extra:
                raise ValueError(f"{key}: unknown entry fields {sorted(extra)}")
            idx = []
            for name in names:
                value = entry.get(name)
                if not isinstance(value, int) or isinstance(value, bool):
                    raise ValueError(f"{key}: field {name!r} must be an integer")
                idx.append(value)
            idx = tuple(idx)
            if idx in table:
                raise ValueError(f"{key}: duplicate key {idx}")
            raw_out = entry.get("out")
            if not isinstance(raw_out, list):
                raise ValueError(f"{key}: 'out' must be a list")
            vec: Vector = {}
            for item in raw_out:
                if not (isinstance(item, list) and len(item) == 2):
                    raise ValueError(f"{key}: 'out' entries must be pairs")
                pos, coeff = item
                if not isinstance(pos, int) or isinstance(pos, bool) or not low <= pos <= high:
                    raise ValueError(f"{key}: position {pos!r} out of range")
                if pos in vec:
                    raise ValueError(f"{key}: duplicate position {pos}")
                value = rational_from_string(coeff)
                if not value:
                    raise ValueError(f"{key}: explicit zero coefficient")
                vec[pos] = value
            table[idx] = vec
        return table

    return Deformation(
        n=n, m=m,
        psi1=parse("psi1", ("i", "j"), 1, n),
        psi2=parse("psi2", ("i", "j"), 1, m),
        psi3=parse("psi3", ("i", "j", "l"), 1, n),
    )


def deformation_from_json_text(text: str) -> Deformation:
    return deformation_from_json(json.loads(text))

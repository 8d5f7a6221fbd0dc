"""Structure-constant model of graded Lie algebras of order F (F <= 3).

An algebra lives on a homogeneous basis ``X_0..X_n`` (grade 0), ``Y_1..Y_m``
(grade 1) and ``Z_1..Z_p`` (grade 2, only for F = 3).  Products are stored
sparsely: ``bracket00[(i, j)]`` with i < j holds ``[X_i, X_j]`` expanded over
the X basis, ``bracket01``/``bracket02`` hold the grade-0 action on grades 1
and 2, and ``tri1``/``tri2`` hold the F-fold symmetric brackets keyed by
sorted index tuples.  Absent keys mean zero; evaluation applies antisymmetry
and full symmetry as needed.

``verify_jacobi`` checks the four defining identity families and reports
every violated index tuple together with its exact residual vector;
``verify_representation`` does the same for matrix representations.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .exactlin import ZERO, rational_from_string, rational_to_string

# Sparse coefficient vector over a basis, keyed by basis position.
Vector = dict[int, Fraction]


class InvalidAlgebraError(ValueError):
    """Structure-constant tables violate the data-model invariants."""


class UnsupportedBracketError(ValueError):
    """Bracket requested for a grade pair the theory does not define."""


# ---------------------------------------------------------------------------
# sparse vector helpers (shared by the other modules)
# ---------------------------------------------------------------------------

def vec_normalized(vec: dict) -> Vector:
    return {pos: Fraction(val) for pos, val in vec.items() if val}


def vec_add_scaled(acc: Vector, vec: Vector, scale: Fraction = Fraction(1)) -> None:
    """In-place ``acc += scale * vec``, dropping cancelled entries."""
    if not scale:
        return
    for pos, val in vec.items():
        new = acc.get(pos, ZERO) + scale * val
        if new:
            acc[pos] = new
        else:
            acc.pop(pos, None)


def vec_scaled(vec: Vector, scale: Fraction) -> Vector:
    return {pos: scale * val for pos, val in vec.items()} if scale else {}


def vec_neg(vec: Vector) -> Vector:
    return {pos: -val for pos, val in vec.items()}


# ---------------------------------------------------------------------------
# data model
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GradeIndex:
    """Position of a homogeneous basis element: grade 0 runs 0..n, others 1..dim."""

    grade: int
    position: int


@dataclass(frozen=True, eq=True)
class OrderFAlgebra:
    """Lie algebra of order F given by its structure constants.

    Values are treated as immutable after construction; all evaluation
    helpers are pure functions of the stored tables.
    """

    F: int
    n: int
    m: int
    p: int
    bracket00: dict[tuple[int, int], Vector] = field(default_factory=dict)
    bracket01: dict[tuple[int, int], Vector] = field(default_factory=dict)
    bracket02: dict[tuple[int, int], Vector] = field(default_factory=dict)
    tri1: dict[tuple[int, ...], Vector] = field(default_factory=dict)
    tri2: dict[tuple[int, ...], Vector] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.F not in (1, 2, 3):
            raise InvalidAlgebraError(f"order F must be 1, 2 or 3, got {self.F}")
        if self.n < 0:
            raise InvalidAlgebraError("n must be >= 0 (dim g0 = n + 1)")
        if self.m < 0 or self.p < 0:
            raise InvalidAlgebraError("grade dimensions must be >= 0")
        if self.F < 2 and self.m != 0:
            raise InvalidAlgebraError("F = 1 admits no grade-1 part")
        if self.F < 3 and self.p != 0:
            raise InvalidAlgebraError(f"F = {self.F} admits no grade-2 part")
        object.__setattr__(self, "bracket00",
                           self._clean_bracket(self.bracket00, 0, "bracket00"))
        object.__setattr__(self, "bracket01",
                           self._clean_action(self.bracket01, self.m, "bracket01"))
        object.__setattr__(self, "bracket02",
                           self._clean_action(self.bracket02, self.p, "bracket02"))
        object.__setattr__(self, "tri1", self._clean_tri(self.tri1, self.m, "tri1"))
        object.__setattr__(self, "tri2", self._clean_tri(self.tri2, self.p, "tri2"))

    # -- table validation -------------------------------------------------

    def _clean_vector(self, vec: dict, low: int, high: int, where: str) -> Vector:
        out = {}
        for pos, val in vec.items():
            if not isinstance(pos, int) or not low <= pos <= high:
                raise InvalidAlgebraError(f"{where}: basis position {pos} out of range")
            val = Fraction(val)
            if val:
                out[pos] = val
        return out

    def _clean_bracket(self, table: dict, _grade: int, where: str) -> dict:
        out = {}
        for key, vec in table.items():
            i, j = key
            if not (0 <= i < j <= self.n):
                raise InvalidAlgebraError(f"{where}: key {key} must satisfy 0 <= i < j <= n")
            cleaned = self._clean_vector(vec, 0, self.n, where)
            if cleaned:
                out[(i, j)] = cleaned
        return out

    def _clean_action(self, table: dict, dim: int, where: str) -> dict:
        out = {}
        for key, vec in table.items():
            i, j = key
            if not (0 <= i <= self.n and 1 <= j <= dim):
                raise InvalidAlgebraError(f"{where}: key {key} out of range")
            cleaned = self._clean_vector(vec, 1, dim, where)
            if cleaned:
                out[(i, j)] = cleaned
        return out

    def _clean_tri(self, table: dict, dim: int, where: str) -> dict:
        out = {}
        for key, vec in table.items():
            if len(key) != self.F:
                raise InvalidAlgebraError(
                    f"{where}: key {key} must have {self.F} indices for order {self.F}")
            if list(key) != sorted(key):
                raise InvalidAlgebraError(f"{where}: key {key} must be sorted")
            if not all(1 <= idx <= dim for idx in key):
                raise InvalidAlgebraError(f"{where}: key {key} out of range")
            cleaned = self._clean_vector(vec, 0, self.n, where)
            if cleaned:
                out[tuple(key)] = cleaned
        return out

    # -- basic queries ----------------------------------------------------

    def grade_dim(self, grade: int) -> int:
        if grade == 0:
            return self.n + 1
        if grade == 1:
            return self.m
        if grade == 2:
            return self.p
        raise ValueError(f"grade {grade} out of range")

    def grades(self) -> list[int]:
        """Nonzero grades present in the data model (0 always, then 1, 2)."""
        out = [0]
        if self.F >= 2:
            out.append(1)
        if self.F >= 3:
            out.append(2)
        return out

    def action_table(self, grade: int) -> dict[tuple[int, int], Vector]:
        if grade == 1:
            return self.bracket01
        if grade == 2:
            return self.bracket02
        raise ValueError(f"no grade-0 action table for grade {grade}")

    def tri_table(self, grade: int) -> dict[tuple[int, ...], Vector]:
        if grade == 1:
            return self.tri1
        if grade == 2:
            return self.tri2
        raise ValueError(f"no symmetric bracket for grade {grade}")


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

def bracket00_elem(alg: OrderFAlgebra, i: int, j: int) -> Vector:
    """[X_i, X_j] as an X-coefficient vector (antisymmetry applied)."""
    if i == j:
        return {}
    if i < j:
        return alg.bracket00.get((i, j), {})
    return vec_neg(alg.bracket00.get((j, i), {}))


def action_elem(alg: OrderFAlgebra, grade: int, i: int, j: int) -> Vector:
    """[X_i, (grade-g basis element)_j] expanded over the grade-g basis."""
    return alg.action_table(grade).get((i, j), {})


def tri_elem(alg: OrderFAlgebra, grade: int, indices: tuple[int, ...]) -> Vector:
    """F-fold symmetric bracket of basis elements; lookup by sorted key."""
    return alg.tri_table(grade).get(tuple(sorted(indices)), {})


def act0_on_vector(alg: OrderFAlgebra, i: int, grade: int, vec: Vector) -> Vector:
    """[X_i, v] for a grade-``grade`` coefficient vector v."""
    out: Vector = {}
    if grade == 0:
        for pos, val in vec.items():
            vec_add_scaled(out, bracket00_elem(alg, i, pos), val)
    else:
        for pos, val in vec.items():
            vec_add_scaled(out, action_elem(alg, grade, i, pos), val)
    return out


def act_vector_on_elem(alg: OrderFAlgebra, xvec: Vector, grade: int, pos: int) -> Vector:
    """[v, e] for an X-coefficient vector v and grade-``grade`` basis element e."""
    out: Vector = {}
    if grade == 0:
        for s, val in xvec.items():
            vec_add_scaled(out, bracket00_elem(alg, s, pos), val)
    else:
        for s, val in xvec.items():
            vec_add_scaled(out, action_elem(alg, grade, s, pos), val)
    return out


def tri_with_vector(alg: OrderFAlgebra, grade: int, indices: tuple[int, ...],
                    slot: int, vec: Vector) -> Vector:
    """Symmetric bracket with one basis slot replaced by a coefficient vector."""
    out: Vector = {}
    for pos, val in vec.items():
        replaced = indices[:slot] + (pos,) + indices[slot + 1:]
        vec_add_scaled(out, tri_elem(alg, grade, replaced), val)
    return out


def bracket(alg: OrderFAlgebra, a: GradeIndex, b: GradeIndex) -> Vector:
    """Bracket of two basis elements; at least one argument must have grade 0.

    The result is expanded over the target grade's basis (the nonzero grade
    of the pair, or grade 0 for an X-X pair) and is antisymmetric in its
    arguments.
    """
    for idx in (a, b):
        if idx.grade not in alg.grades():
            raise UnsupportedBracketError(f"grade {idx.grade} not present for F={alg.F}")
        dim = alg.grade_dim(idx.grade)
        low = 0 if idx.grade == 0 else 1
        if not low <= idx.position <= (alg.n if idx.grade == 0 else dim):
            raise UnsupportedBracketError(f"position {idx.position} out of range "
                                          f"for grade {idx.grade}")
    if a.grade == 0 and b.grade == 0:
        return bracket00_elem(alg, a.position, b.position)
    if a.grade == 0:
        return action_elem(alg, b.grade, a.position, b.position)
    if b.grade == 0:
        return vec_neg(action_elem(alg, a.grade, b.position, a.position))
    raise UnsupportedBracketError(
        f"no bracket is defined between grades {a.grade} and {b.grade}")


def tribracket(alg: OrderFAlgebra, grade: int, indices: tuple[int, ...]) -> Vector:
    """F-fold symmetric bracket of grade-``grade`` basis elements.

    The value is independent of argument order (looked up by sorted key) and
    is expanded over the grade-0 basis.
    """
    if grade not in alg.grades() or grade == 0:
        raise UnsupportedBracketError(f"no symmetric bracket on grade {grade} for F={alg.F}")
    if len(indices) != alg.F:
        raise UnsupportedBracketError(
            f"symmetric bracket takes {alg.F} arguments for order {alg.F}")
    dim = alg.grade_dim(grade)
    for idx in indices:
        if not 1 <= idx <= dim:
            raise UnsupportedBracketError(f"index {idx} out of range for grade {grade}")
    return tri_elem(alg, grade, tuple(indices))


# ---------------------------------------------------------------------------
# identity verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    identity: str              # "2.1", "2.2", "2.3" or "2.4" family tag
    grade: int | None          # the non-zero grade involved, if any
    indices: tuple[int, ...]
    residual_grade: int
    residual: Vector

    def describe(self) -> str:
        grade = "" if self.grade is None else f" grade {self.grade}"
        body = " + ".join(f"{rational_to_string(v)}*e{k}"
                          for k, v in sorted(self.residual.items()))
        return f"identity {self.identity}{grade} at {self.indices}: residual {body}"


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def describe(self) -> str:
        if self.ok:
            return "all identities hold"
        lines = [f"{len(self.violations)} violation(s):"]
        lines.extend("  " + v.describe() for v in self.violations)
        return "\n".join(lines)


def _jacobi_00(alg: OrderFAlgebra, out: list[Violation]) -> None:
    for i, j, k in itertools.combinations(range(alg.n + 1), 3):
        res: Vector = {}
        vec_add_scaled(res, act0_on_vector(alg, k, 0, bracket00_elem(alg, i, j)), Fraction(-1))
        vec_add_scaled(res, act0_on_vector(alg, j, 0, bracket00_elem(alg, i, k)))
        vec_add_scaled(res, act0_on_vector(alg, i, 0, bracket00_elem(alg, j, k)), Fraction(-1))
        if res:
            out.append(Violation("2.1", None, (i, j, k), 0, res))


def _jacobi_0g(alg: OrderFAlgebra, grade: int, out: list[Violation]) -> None:
    dim = alg.grade_dim(grade)
    for i, j in itertools.combinations(range(alg.n + 1), 2):
        w = bracket00_elem(alg, i, j)
        for y in range(1, dim + 1):
            res = act_vector_on_elem(alg, w, grade, y)
            vec_add_scaled(res, act0_on_vector(alg, i, grade, action_elem(alg, grade, j, y)),
                           Fraction(-1))
            vec_add_scaled(res, act0_on_vector(alg, j, grade, action_elem(alg, grade, i, y)))
            if res:
                out.append(Violation("2.2", grade, (i, j, y), grade, res))


def _jacobi_equivariance(alg: OrderFAlgebra, grade: int, out: list[Violation]) -> None:
    dim = alg.grade_dim(grade)
    for x in range(alg.n + 1):
        for t in itertools.combinations_with_replacement(range(1, dim + 1), alg.F):
            res = act0_on_vector(alg, x, 0, tri_elem(alg, grade, t))
            for slot in range(alg.F):
                moved = action_elem(alg, grade, x, t[slot])
                vec_add_scaled(res, tri_with_vector(alg, grade, t, slot, moved),
                               Fraction(-1))
            if res:
                out.append(Violation("2.3", grade, (x,) + t, 0, res))


def _jacobi_fold(alg: OrderFAlgebra, grade: int, out: list[Violation]) -> None:
    dim = alg.grade_dim(grade)
    for q in itertools.combinations_with_replacement(range(1, dim + 1), alg.F + 1):
        res: Vector = {}
        for slot in range(alg.F + 1):
            rest = q[:slot] + q[slot + 1:]
            value = tri_elem(alg, grade, rest)
            # [Y, v] = -[v, Y] for the grade-0-valued bracket image v
            vec_add_scaled(res, act_vector_on_elem(alg, value, grade, q[slot]), Fraction(-1))
        if res:
            out.append(Violation("2.4", grade, q, grade, res))


def verify_jacobi(alg: OrderFAlgebra) -> VerificationReport:
    """Check all defining identities; violations are data, not errors.

    An empty violation list is equivalent to the structure constants
    defining a Lie algebra of order F.
    """
    violations: list[Violation] = []
    _jacobi_00(alg, violations)
    for grade in alg.grades():
        if grade == 0 or alg.grade_dim(grade) == 0:
            continue
        _jacobi_0g(alg, grade, violations)
        _jacobi_equivariance(alg, grade, violations)
        _jacobi_fold(alg, grade, violations)
    return VerificationReport(tuple(violations))


# ---------------------------------------------------------------------------
# matrix representations
# ---------------------------------------------------------------------------

Matrix = tuple[tuple[Fraction, ...], ...]


def _as_matrix(rows) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def _zero_matrix(dim: int) -> Matrix:
    return tuple((ZERO,) * dim for _ in range(dim))


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    dim = len(a)
    return tuple(
        tuple(sum((a[r][k] * b[k][c] for k in range(dim) if a[r][k]), ZERO)
              for c in range(dim))
        for r in range(dim))


def _mat_addto(acc: list[list[Fraction]], mat: Matrix, scale: Fraction) -> None:
    for r, row in enumerate(mat):
        for c, v in enumerate(row):
            if v:
                acc[r][c] += scale * v


@dataclass(frozen=True)
class MatrixRepresentation:
    """Square rational matrices for each basis element, on a graded target.

    ``dims`` splits the target space V = V_0 + ... + V_{F-1}; ``matrices``
    maps (grade, position) to a matrix, absent generators acting as zero.
    """

    dims: tuple[int, ...]
    matrices: dict[tuple[int, int], Matrix]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def matrix(self, grade: int, position: int) -> Matrix:
        return self.matrices.get((grade, position)) or _zero_matrix(self.total_dim)

    def block_of(self, index: int) -> int:
        offset = 0
        for a, d in enumerate(self.dims):
            if index < offset + d:
                return a
            offset += d
        raise ValueError(f"index {index} outside the graded splitting")


def verify_representation(alg: OrderFAlgebra,
                          rep: MatrixRepresentation) -> VerificationReport:
    """Check the representation equations and the grading condition.

    Rejects dimension mismatches outright; equation failures are reported
    as violations, with residual matrices flattened to sparse vectors over
    (row * total_dim + col) positions.
    """
    if len(rep.dims) != alg.F:
        raise ValueError(f"representation must split into F={alg.F} graded parts, "
                         f"got {len(rep.dims)}")
    if any(d < 0 for d in rep.dims):
        raise ValueError("graded dimensions must be nonnegative")
    total = rep.total_dim
    for key, mat in rep.matrices.items():
        if len(mat) != total or any(len(row) != total for row in mat):
            raise ValueError(f"matrix for {key} is not {total}x{total}")
        grade, pos = key
        if grade not in alg.grades():
            raise ValueError(f"matrix given for absent grade {grade}")
        low = 0 if grade == 0 else 1
        high = alg.n if grade == 0 else alg.grade_dim(grade)
        if not low <= pos <= high:
            raise ValueError(f"matrix given for out-of-range element {key}")

    violations: list[Violation] = []

    def residual(acc: list[list[Fraction]]) -> Vector:
        return {r * total + c: acc[r][c]
                for r in range(total) for c in range(total) if acc[r][c]}

    def check(tag: str, grade: int | None, indices: tuple[int, ...],
              lhs_vec: Vector, lhs_grade_matrices, rhs: Matrix) -> None:
        acc = [[ZERO] * total for _ in range(total)]
        for pos, coeff in lhs_vec.items():
            _mat_addto(acc, lhs_grade_matrices(pos), coeff)
        _mat_addto(acc, rhs, Fraction(-1))
        res = residual(acc)
        if res:
            violations.append(Violation(tag, grade, indices, 0, res))

    def commutator(a: Matrix, b: Matrix) -> Matrix:
        ab = _mat_mul(a, b)
        ba = _mat_mul(b, a)
        return tuple(tuple(ab[r][c] - ba[r][c] for c in range(total)) for r in range(total))

    def rho0(pos: int) -> Matrix:
        return rep.matrix(0, pos)

    for i, j in itertools.combinations(range(alg.n + 1), 2):
        check("rho[X,X]", None, (i, j), bracket00_elem(alg, i, j), rho0,
              commutator(rep.matrix(0, i), rep.matrix(0, j)))

    for grade in alg.grades():
        if grade == 0 or alg.grade_dim(grade) == 0:
            continue
        dim = alg.grade_dim(grade)

        def rho_g(pos: int, g: int = grade) -> Matrix:
            return rep.matrix(g, pos)

        for i in range(alg.n + 1):
            for y in range(1, dim + 1):
                check("rho[X,Y]", grade, (i, y), action_elem(alg, grade, i, y), rho_g,
                      commutator(rep.matrix(0, i), rep.matrix(grade, y)))
        for t in itertools.combinations_with_replacement(range(1, dim + 1), alg.F):
            acc = [[ZERO] * total for _ in range(total)]
            for perm in itertools.permutations(t):
                prod = rep.matrix(grade, perm[0])
                for idx in perm[1:]:
                    prod = _mat_mul(prod, rep.matrix(grade, idx))
                _mat_addto(acc, prod, Fraction(1))
            product_sum = tuple(tuple(row) for row in acc)
            check("rho{Y..Y}", grade, t, tri_elem(alg, grade, t), rho0, product_sum)

    # grading: rho(g_gamma) shifts V_a into V_(a+gamma mod F)
    for (grade, pos), mat in sorted(rep.matrices.items()):
        bad: Vector = {}
        for c in range(total):
            target = (rep.block_of(c) + grade) % alg.F
            for r in range(total):
                if mat[r][c] and rep.block_of(r) != target:
                    bad[r * total + c] = mat[r][c]
        if bad:
            violations.append(Violation("grading", grade, (pos,), 0, bad))

    return VerificationReport(tuple(violations))


# ---------------------------------------------------------------------------
# JSON format
# ---------------------------------------------------------------------------

_TRI_KEY_NAMES = {1: ("i",), 2: ("i", "j"), 3: ("i", "j", "l")}


def _out_to_json(vec: Vector) -> list:
    return [[pos, rational_to_string(val)] for pos, val in sorted(vec.items())]


def _out_from_json(raw, low: int, high: int, where: str) -> Vector:
    if not isinstance(raw, list):
        raise ValueError(f"{where}: 'out' must be a list")
    vec: Vector = {}
    for item in raw:
        if not (isinstance(item, list) and len(item) == 2):
            raise ValueError(f"{where}: 'out' entries must be [position, coefficient] pairs")
        pos, coeff = item
        if not isinstance(pos, int) or isinstance(pos, bool) or not low <= pos <= high:
            raise ValueError(f"{where}: position {pos!r} out of range [{low}, {high}]")
        if pos in vec:
            raise ValueError(f"{where}: duplicate position {pos}")
        value = rational_from_string(coeff)
        if not value:
            raise ValueError(f"{where}: explicit zero coefficient at position {pos}")
        vec[pos] = value
    return vec


def _require_int(obj: dict, key: str) -> int:
    value = obj.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValueError(f"field {key!r} must be an integer")
    return value


def algebra_to_json(alg: OrderFAlgebra) -> dict:
    def bracket_entries(table):
        return [{"i": i, "j": j, "out": _out_to_json(vec)}
                for (i, j), vec in sorted(table.items())]

    def tri_entries(table):
        names = _TRI_KEY_NAMES[alg.F]
        out = []
        for key, vec in sorted(table.items()):
            entry = dict(zip(names, key))
            entry["out"] = _out_to_json(vec)
            out.append(entry)
        return out

    return {
        "F": alg.F,
        "n": alg.n,
        "m": alg.m,
        "p": alg.p,
        "bracket00": bracket_entries(alg.bracket00),
        "bracket01": bracket_entries(alg.bracket01),
        "bracket02": bracket_entries(alg.bracket02),
        "tri1": tri_entries(alg.tri1),
        "tri2": tri_entries(alg.tri2),
    }


def algebra_to_json_text(alg: OrderFAlgebra) -> str:
    return json.dumps(algebra_to_json(alg), indent=2)


def algebra_from_json(obj) -> OrderFAlgebra:
    """Strict parser for the algebra JSON format.

    Unknown fields are rejected; the only tolerated extra is an optional
    top-level "warning" string (attached by ``deform --force`` output),
    which does not affect the parsed algebra.
    """
    if not isinstance(obj, dict):
        raise ValueError("algebra JSON must be an object")
    allowed = {"F", "n", "m", "p", "bracket00", "bracket01", "bracket02",
               "tri1", "tri2", "warning"}
    unknown = set(obj) - allowed
    if unknown:
        raise ValueError(f"unknown fields in algebra JSON: {sorted(unknown)}")
    if "warning" in obj and not isinstance(obj["warning"], str):
        raise ValueError("field 'warning' must be a string")
    F = _require_int(obj, "F")
    n = _require_int(obj, "n")
    m = _require_int(obj, "m")
    p = _require_int(obj, "p")
    if F not in (1, 2, 3):
        raise ValueError(f"order F must be 1, 2 or 3, got {F}")

    def parse_bracket(key: str, dim: int, low: int, high: int) -> dict:
        raw = obj.get(key, [])
        if not isinstance(raw, list):
            raise ValueError(f"field {key!r} must be a list")
        table = {}
        for entry in raw:
            if not isinstance(entry, dict):
                raise ValueError(f"{key}: entries must be objects")
            extra = set(entry) - {"i", "j", "out"}
            if extra:
                raise ValueError(f"{key}: unknown entry fields {sorted(extra)}")
            i = _require_int(entry, "i")
            j = _require_int(entry, "j")
            if (i, j) in table:
                raise ValueError(f"{key}: duplicate key ({i}, {j})")
            table[(i, j)] = _out_from_json(entry.get("out"), low, high, key)
        return table

    def parse_tri(key: str, dim: int) -> dict:
        raw = obj.get(key, [])
        if not isinstance(raw, list):
            raise ValueError(f"field {key!r} must be a list")
        names = _TRI_KEY_NAMES[F]
        table = {}
        for entry in raw:
            if not isinstance(entry, dict):
                raise ValueError(f"{key}: entries must be objects")
            extra = set(entry) - set(names) - {"out"}
            if extra:
                raise ValueError(f"{key}: unknown entry fields {sorted(extra)}")
            idx = tuple(_require_int(entry, name) for name in names)
            if idx in table:
                raise ValueError(f"{key}: duplicate key {idx}")
            table[idx] = _out_from_json(entry.get("out"), 0, n, key)
        return table

    try:
        return OrderFAlgebra(
            F=F, n=n, m=m, p=p,
            bracket00=parse_bracket("bracket00", n, 0, n),
            bracket01=parse_bracket("bracket01", m, 1, m),
            bracket02=parse_bracket("bracket02", p, 1, p),
            tri1=parse_tri("tri1", m),
            tri2=parse_tri("tri2", p),
        )
    except InvalidAlgebraError as exc:
        raise ValueError(str(exc)) from exc


def algebra_from_json_text(text: str) -> OrderFAlgebra:
    return algebra_from_json(json.loads(text))

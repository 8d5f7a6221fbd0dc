"""Acceptance suite: one test and one printed PASS/FAIL line per criterion.

All comparisons are exact (integer or rational equality); the only
tolerances are the stated wall-clock budgets.  Criterion 7 is split into
its two family sweeps: the psi-k half is implemented faithfully and is
expected to fail (the constructed maps violate the defining identities;
see the psi-k tests in test_families.py for the minimal counterexample).
"""

import itertools
import random
import time
from fractions import Fraction

import pytest

from lieorder3.deformation import (
    Deformation,
    DeformationError,
    combination,
    decompose_Z,
    deform,
    is_infinitesimal,
    solve_subspace_C,
)
from lieorder3.exactlin import rank_of_rows
from lieorder3.families import (
    example_poincare,
    example_so23_adjoint,
    phi_combination,
    phi1,
    phi13,
    psi_k,
    psi_t,
    theorem4_basis,
)
from lieorder3.filiform import family_mu1, family_mu2, is_filiform, model, order_nilindex
from lieorder3.graded_core import verify_jacobi
from lieorder3.sl2 import dim_C_by_weights

F = Fraction

EXPECTED_DIM_C_M3 = {1: 2, 3: 6, 5: 8, 7: 10, 9: 10, 11: 10}


def report(capsys, label, ok, detail=""):
    suffix = f" ({detail})" if detail else ""
    with capsys.disabled():
        print(f"[acceptance] {label}: {'PASS' if ok else 'FAIL'}{suffix}", flush=True)
    assert ok, f"{label}{suffix}"


def test_criterion_1_dimension_table_by_both_methods(capsys):
    start = time.perf_counter()
    results = {}
    for n, expected in EXPECTED_DIM_C_M3.items():
        by_weights = dim_C_by_weights(n, 3)
        by_kernel = solve_subspace_C(n, 3).dimension
        results[n] = (by_weights, by_kernel, expected)
    elapsed = time.perf_counter() - start
    ok = (all(w == k == e for (w, k, e) in results.values()) and elapsed < 10.0)
    report(capsys, "criterion 1: dimension table m=3, both methods", ok,
           f"{results}, {elapsed:.2f}s")


def test_criterion_2_method_equivalence_grid(capsys):
    start = time.perf_counter()
    mismatches = []
    for n in range(1, 11):
        for m in range(1, 5):
            by_weights = dim_C_by_weights(n, m)
            by_kernel = solve_subspace_C(n, m).dimension
            if by_weights != by_kernel:
                mismatches.append((n, m, by_weights, by_kernel))
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 60.0
    report(capsys, "criterion 2: weight count == kernel dim, n<=10 m<=4", ok,
           f"mismatches={mismatches}, {elapsed:.2f}s")


def test_criterion_3_explicit_bases(capsys):
    problems = []
    for n in (1, 3, 5, 7, 9):
        members = theorem4_basis(n)
        mu0 = model(n, 3)
        if len(members) != EXPECTED_DIM_C_M3[n]:
            problems.append((n, "cardinality", len(members)))
        for nd in members:
            if not is_infinitesimal(mu0, nd.deformation).ok:
                problems.append((n, "cocycle", f"{nd.name}({nd.parameter})"))
        kb = solve_subspace_C(n, 3)
        cols = {label: idx for idx, label in enumerate(kb.variables)}
        rows = []
        for nd in members:
            rows.append({cols[("psi3", s) + key]: val
                         for key, vec in nd.deformation.psi3.items()
                         for s, val in vec.items()})
        if rank_of_rows(rows) != len(members):
            problems.append((n, "dependence", rank_of_rows(rows)))
    report(capsys, "criterion 3: explicit bases are independent cocycles of the right size",
           not problems, f"problems={problems}")


def test_criterion_4_membership_boundary_sweep(capsys):
    mu0 = model(9, 3)
    phi1_members = [s for s in range(1, 10)
                    if is_infinitesimal(mu0, phi1(9, s).deformation).ok]
    from lieorder3.families import phi3
    phi3_members = [s for s in range(1, 10)
                    if is_infinitesimal(mu0, phi3(9, s).deformation).ok]
    ok = phi1_members == [5, 6, 7, 8, 9] and phi3_members == [7, 8, 9]
    report(capsys, "criterion 4: membership boundaries at n=9", ok,
           f"phi1={phi1_members}, phi3={phi3_members}")


def test_criterion_5_mixed_family_boundary(capsys):
    mu0 = model(11, 3)
    rejected = not is_infinitesimal(mu0, phi13(11, 3).deformation).ok
    admitted = all(is_infinitesimal(mu0, phi13(11, s).deformation).ok for s in (5, 6))
    wrong_mix_fails = not is_infinitesimal(mu0, phi_combination(11, 5, F(1, 10))).ok
    ok = rejected and admitted and wrong_mix_fails
    report(capsys, "criterion 5: mixed-family boundary at n=11", ok,
           f"s=3 rejected={rejected}, s=5,6 admitted={admitted}, "
           f"1/10 variant fails={wrong_mix_fails}")


def test_criterion_6_deformation_round_trip(capsys):
    rng = random.Random(20260808)
    n, m = 7, 3
    mu0 = model(n, m)
    members = [nd.deformation for nd in theorem4_basis(n)]
    good = 0
    for _ in range(20):
        coeffs = [F(rng.randint(-4, 4)) for _ in members]
        psi = combination(list(zip(coeffs, members)), n, m)
        alg = deform(mu0, psi)
        if verify_jacobi(alg).ok and is_filiform(alg).filiform:
            good += 1
    refused = 0
    triples = list(itertools.combinations_with_replacement(range(1, m + 1), 3))
    attempts = 0
    while refused < 20 and attempts < 200:
        attempts += 1
        psi3 = {t: {rng.randint(1, n): F(rng.randint(-5, 5))}
                for t in rng.sample(triples, rng.randint(2, 6))}
        psi = Deformation(n, m, psi3=psi3)
        if is_infinitesimal(mu0, psi).ok:
            continue
        try:
            deform(mu0, psi)
        except DeformationError:
            refused += 1
        else:
            break
    ok = good == 20 and refused == 20
    report(capsys, "criterion 6: span deformations verify, non-cocycles are refused",
           ok, f"verified={good}/20, refused={refused}/20")


def test_criterion_7a_psi_k_family_sweep(capsys):
    # Faithful sweep of the displayed psi_k maps.  These maps fail the
    # cocycle equations at the sorted triple (k, m-1, m) for every k (and at
    # (1,1,1) for m=1), so the deformed laws violate the Jacobi identities:
    # this criterion cannot pass with the family as displayed.  Kept red on
    # purpose rather than weakening the check.
    failures = []
    checked = 0
    for n in range(2, 9):
        for m in range(1, 9):
            for k in range(1, m + 1):
                psi = psi_k(n, m, k).deformation
                alg = deform(model(n, m), psi, force=True)
                checked += 1
                if not verify_jacobi(alg).ok:
                    failures.append((n, m, k))
                elif order_nilindex(alg).as_tuple() != (n, m):
                    failures.append((n, m, k, "nilindex"))
    ok = not failures
    report(capsys, "criterion 7a: psi-k sweep deforms to valid filiform laws", ok,
           f"{len(failures)}/{checked} parameter triples fail verify_jacobi; "
           f"first failures {failures[:3]}")


def test_criterion_7b_psi_t_family_sweep(capsys):
    failures = []
    checked = 0
    for n in range(1, 9):
        for m in range(1, n + 1):
            for t in range(max(1, n - m + 1), n + 1):
                psi = psi_t(n, m, t).deformation
                alg = deform(model(n, m), psi)
                checked += 1
                if not verify_jacobi(alg).ok:
                    failures.append((n, m, t))
                elif order_nilindex(alg).as_tuple() != (n, m):
                    failures.append((n, m, t, "nilindex"))
    ok = not failures and checked > 0
    report(capsys, "criterion 7b: psi-t sweep deforms to valid filiform laws", ok,
           f"checked={checked}, failures={failures}")


def test_criterion_8_example_algebras(capsys):
    start = time.perf_counter()
    failures = []
    for D in (2, 3, 4, 5):
        if not verify_jacobi(example_poincare(D)).ok:
            failures.append(("poincare", D))
    if not verify_jacobi(example_so23_adjoint()).ok:
        failures.append(("so23",))
    for n in range(1, 7):
        for m in range(1, 7):
            for p in range(0, 7):
                if not verify_jacobi(family_mu1(n, m, p)).ok:
                    failures.append(("mu1", n, m, p))
                if m >= n and not verify_jacobi(family_mu2(n, m, p)).ok:
                    failures.append(("mu2", n, m, p))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 30.0
    report(capsys, "criterion 8: example algebras satisfy the identities", ok,
           f"failures={failures}, {elapsed:.2f}s")


def test_criterion_9_decomposition_dimensions(capsys):
    mismatches = []
    for n in range(1, 7):
        for m in range(1, 7):
            z = decompose_Z(n, m)
            if not z.consistent:
                mismatches.append((n, m, z.a.dimension, z.b.dimension,
                                   z.c.dimension, z.combined_dimension))
    report(capsys, "criterion 9: full-system kernel equals dim A + dim B + dim C",
           not mismatches, f"mismatches={mismatches}")

import itertools
import random
from fractions import Fraction

import pytest

from lieorder3.deformation import (
    Deformation,
    is_infinitesimal,
    solve_subspace_C,
)
from lieorder3.filiform import model
from lieorder3.sl2 import (
    dim_C_by_weights,
    is_maximal_vector,
    maximal_vector_residual,
    target_weight,
    weight_basis_maps,
    weight_lambda,
    weight_p,
    weighted_map,
)

F = Fraction


class TestWeights:
    def test_forced_arithmetic_example(self):
        assert weight_lambda(3, 3, 1, 1, 1, 1) == 4

    def test_weight_zero_map_behind_smallest_dimension(self):
        assert weight_lambda(1, 3, 1, 1, 2, 3) == 0

    @pytest.mark.parametrize("seed", range(10))
    def test_parity_matches_m_minus_n(self, seed):
        rng = random.Random(seed)
        n, m = rng.randint(1, 9), rng.randint(1, 6)
        s = rng.randint(1, n)
        i, j, k = sorted(rng.randint(1, m) for _ in range(3))
        assert weight_lambda(n, m, s, i, j, k) % 2 == (m - n) % 2

    @pytest.mark.parametrize("n,m", [(3, 3), (5, 2), (4, 4), (7, 3)])
    def test_lambda_equals_2p_plus_offset_everywhere(self, n, m):
        for s in range(1, n + 1):
            for i, j, k in itertools.combinations_with_replacement(range(1, m + 1), 3):
                lam = weight_lambda(n, m, s, i, j, k)
                p = weight_p(n, m, s, i, j, k)
                assert lam == 2 * p + 3 * m - n + 2
                wm = weighted_map(n, m, s, i, j, k)
                assert (wm.lam, wm.p) == (lam, p)

    def test_h_action_formula_reproduces_lambda(self):
        # eigenvalue bookkeeping: lambda(X_s) - lambda(Y_i) - lambda(Y_j)
        # - lambda(Y_k) with the standard chain eigenvalues
        n, m = 5, 3
        for s in range(1, n + 1):
            for i, j, k in itertools.combinations_with_replacement(range(1, m + 1), 3):
                h_x = -n + 2 * s - 1
                h_y = [-m + 2 * idx - 1 for idx in (i, j, k)]
                assert weight_lambda(n, m, s, i, j, k) == h_x - sum(h_y)

    @pytest.mark.parametrize("bad", [(3, 3, 0, 1, 1, 1), (3, 3, 4, 1, 1, 1),
                                     (3, 3, 1, 2, 1, 1), (3, 3, 1, 1, 1, 4)])
    def test_out_of_range_rejected(self, bad):
        with pytest.raises(ValueError):
            weight_lambda(*bad)


class TestDimByWeights:
    @pytest.mark.parametrize("n,expected", [(1, 2), (5, 8), (9, 10)])
    def test_known_values_at_m3(self, n, expected):
        assert dim_C_by_weights(n, 3) == expected

    def test_wrong_parity_count_is_zero(self):
        n, m = 4, 3  # m - n odd: the weight-0 subspace is empty
        assert target_weight(n, m) == 1
        assert weight_basis_maps(n, m, 0) == []

    @pytest.mark.parametrize("n", range(1, 7))
    @pytest.mark.parametrize("m", range(1, 5))
    def test_matches_kernel_dimension(self, n, m):
        assert dim_C_by_weights(n, m) == solve_subspace_C(n, m).dimension


class TestMaximalVectorResidual:
    def test_truncated_top_family_is_maximal(self):
        for n in (3, 5, 7, 9):
            phi = {(n, 1, 1, 1): F(1)}
            assert is_maximal_vector(n, 3, phi)

    def test_single_basis_map_is_not_maximal(self):
        residual = maximal_vector_residual(3, 3, {(1, 1, 1, 1): F(1)})
        assert residual == {(1, 1, 1): {2: F(1)}}

    def test_zero_table_is_maximal(self):
        assert maximal_vector_residual(3, 3, {}) == {}

    @pytest.mark.parametrize("seed", range(6))
    def test_residual_matches_the_kernel_system(self, seed):
        # zero residual exactly when the corresponding symmetric-bracket
        # deformation satisfies the cocycle equations
        rng = random.Random(40 + seed)
        n, m = 4, 3
        triples = list(itertools.combinations_with_replacement(range(1, m + 1), 3))
        phi = {}
        for t in rng.sample(triples, 4):
            phi[(rng.randint(1, n),) + t] = F(rng.randint(-3, 3))
        phi = {key: val for key, val in phi.items() if val}
        psi3 = {}
        for (s, i, j, k), val in phi.items():
            psi3.setdefault((i, j, k), {})[s] = psi3.get((i, j, k), {}).get(s, F(0)) + val
        psi = Deformation(n, m, psi3=psi3)
        by_residual = is_maximal_vector(n, m, phi)
        by_system = is_infinitesimal(model(n, m), psi).ok
        assert by_residual == by_system

    def test_kernel_vectors_are_maximal(self):
        kb = solve_subspace_C(5, 3)
        for vec in kb.vectors:
            phi = {label[1:]: value
                   for label, value in zip(kb.variables, vec) if value}
            phi = {(s, i, j, k): v for (s, i, j, k), v in phi.items()}
            assert is_maximal_vector(5, 3, phi)


class TestWeightMultiplicities:
    @pytest.mark.parametrize("n", range(1, 8))
    @pytest.mark.parametrize("m", range(1, 5))
    def test_multiplicities_are_unimodal_from_the_center(self, n, m):
        # weight multiplicities of a direct sum of irreducible chains never
        # increase moving away from weight 0/1; a bookkeeping error in the
        # weight formula would typically break this
        parity = target_weight(n, m)
        mult = {}
        for s in range(1, n + 1):
            for i, j, k in itertools.combinations_with_replacement(range(1, m + 1), 3):
                lam = weight_lambda(n, m, s, i, j, k)
                mult[lam] = mult.get(lam, 0) + 1
        top = max(abs(lam) for lam in mult)
        for lam in range(parity, top + 1, 2):
            assert mult.get(lam, 0) >= mult.get(lam + 2, 0)
            # mirror symmetry of chain weights
            assert mult.get(lam, 0) == mult.get(-lam, 0)

    @pytest.mark.parametrize("n,m", [(3, 3), (5, 2), (6, 4)])
    def test_summand_count_telescopes_to_the_center_count(self, n, m):
        # number of chains = sum over lam of (mult(lam) - mult(lam + 2)),
        # which telescopes to the weight-0/1 multiplicity
        parity = target_weight(n, m)
        mult = {}
        for s in range(1, n + 1):
            for i, j, k in itertools.combinations_with_replacement(range(1, m + 1), 3):
                lam = weight_lambda(n, m, s, i, j, k)
                mult[lam] = mult.get(lam, 0) + 1
        top = max(mult)
        summands = sum(mult.get(lam, 0) - mult.get(lam + 2, 0)
                       for lam in range(parity, top + 1, 2))
        assert summands == dim_C_by_weights(n, m)

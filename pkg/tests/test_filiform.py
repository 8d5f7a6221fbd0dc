import pytest
from fractions import Fraction

from lieorder3.families import example_so23_adjoint
from lieorder3.filiform import (
    NotNilpotentError,
    abelian,
    descending_sequence,
    family_mu1,
    family_mu2,
    is_adapted_form,
    is_filiform,
    model,
    order_nilindex,
)
from lieorder3.graded_core import (
    GradeIndex,
    InvalidAlgebraError,
    OrderFAlgebra,
    bracket,
    verify_jacobi,
)

F = Fraction


class TestModel:
    def test_chain_ends_at_top(self):
        alg = model(3, 3)
        assert bracket(alg, GradeIndex(0, 0), GradeIndex(0, 3)) == {}

    def test_grade1_chain(self):
        alg = model(3, 3)
        assert bracket(alg, GradeIndex(0, 0), GradeIndex(1, 2)) == {3: F(1)}

    def test_smallest_model_passes_jacobi(self):
        assert verify_jacobi(model(1, 1)).ok

    @pytest.mark.parametrize("n,m", [(0, 3), (3, 0)])
    def test_degenerate_dimensions_rejected(self, n, m):
        with pytest.raises(InvalidAlgebraError):
            model(n, m)


class TestDescendingSequence:
    def test_model_grade0(self):
        # ad X_0 image starts at X_2, so the first step drops two dimensions
        assert descending_sequence(model(4, 3), 0) == [5, 3, 2, 1, 0]

    def test_model_grade1(self):
        assert descending_sequence(model(4, 3), 1) == [3, 2, 1, 0]

    def test_abelian_stops_immediately(self):
        assert descending_sequence(abelian(2, 2), 0) == [3, 0]

    def test_non_nilpotent_stabilizes(self):
        seq = descending_sequence(example_so23_adjoint(), 0)
        assert seq[-1] == seq[-2] == 10

    def test_strictly_decreasing_for_filiform_inputs(self):
        for n, m in [(3, 2), (5, 4), (6, 6)]:
            for grade in (0, 1):
                seq = descending_sequence(model(n, m), grade)
                assert all(a > b for a, b in zip(seq, seq[1:]))
                assert seq[-1] == 0


class TestOrderNilindex:
    def test_model(self):
        assert order_nilindex(model(4, 3)).as_tuple() == (4, 3)

    def test_mu1_matches_model_on_grades_0_1(self):
        nil = order_nilindex(family_mu1(4, 3, 2))
        assert (nil.p0, nil.p1) == (4, 3)
        assert nil.p2 == 2

    def test_abelian(self):
        assert order_nilindex(abelian(2, 2)).as_tuple() == (1, 1)

    def test_non_nilpotent_rejected_with_stabilized_dimension(self):
        with pytest.raises(NotNilpotentError) as err:
            order_nilindex(example_so23_adjoint())
        assert err.value.stabilized_dim == 10


class TestIsFiliform:
    def test_model_is_filiform(self):
        assert is_filiform(model(5, 4)).filiform

    def test_abelian_is_not(self):
        report = is_filiform(abelian(2, 2))
        assert not report.filiform
        assert report.nilindex.as_tuple() == (1, 1)

    def test_mu2_is_filiform(self):
        assert is_filiform(family_mu2(4, 4, 1)).filiform

    @pytest.mark.parametrize("n", range(1, 9))
    @pytest.mark.parametrize("m", range(1, 9))
    def test_model_grid_filiform_and_jacobi(self, n, m):
        alg = model(n, m)
        assert is_filiform(alg).filiform
        assert verify_jacobi(alg).ok


class TestIsAdaptedForm:
    @pytest.mark.parametrize("n", range(1, 9))
    @pytest.mark.parametrize("m", range(1, 9))
    def test_model_is_adapted(self, n, m):
        assert is_adapted_form(model(n, m))

    def test_scaled_chain_coefficient_breaks_adapted_form(self):
        base = model(3, 3)
        bracket01 = dict(base.bracket01)
        bracket01[(0, 1)] = {2: F(2)}
        perturbed = OrderFAlgebra(F=3, n=3, m=3, p=0,
                                  bracket00=base.bracket00, bracket01=bracket01)
        assert not is_adapted_form(perturbed)

    def test_any_chain_perturbation_breaks_adapted_form(self):
        base = model(4, 2)
        bracket00 = dict(base.bracket00)
        del bracket00[(0, 2)]
        assert not is_adapted_form(OrderFAlgebra(F=3, n=4, m=2, p=0,
                                                 bracket00=bracket00,
                                                 bracket01=base.bracket01))

    def test_families_are_adapted(self):
        assert is_adapted_form(family_mu1(4, 3, 2))
        assert is_adapted_form(family_mu2(3, 4, 1))


class TestExampleFamilies:
    def test_mu1_entries(self):
        alg = family_mu1(4, 3, 2)
        assert alg.tri1 == {(1, 1, 1): {4: F(1)}}
        assert alg.tri2 == {(1, 1, 1): {4: F(1)}}

    def test_mu2_entries(self):
        alg = family_mu2(3, 4, 1)
        assert alg.tri1 == {(1, 1, 1): {1: F(3)},
                            (1, 1, 2): {2: F(1)},
                            (1, 1, 3): {3: F(1)}}

    def test_mu2_needs_long_grade1_chain(self):
        with pytest.raises(InvalidAlgebraError):
            family_mu2(3, 2, 1)

    @pytest.mark.parametrize("n,m,p", [(1, 1, 0), (2, 3, 1), (4, 3, 2),
                                       (6, 6, 6), (5, 2, 0), (3, 6, 4)])
    def test_mu1_passes_jacobi_and_is_filiform(self, n, m, p):
        alg = family_mu1(n, m, p)
        assert verify_jacobi(alg).ok
        assert is_filiform(alg).filiform

    @pytest.mark.parametrize("n,m,p", [(1, 1, 0), (2, 2, 1), (3, 4, 1),
                                       (4, 4, 0), (5, 6, 3), (6, 6, 6)])
    def test_mu2_passes_jacobi_and_is_filiform(self, n, m, p):
        alg = family_mu2(n, m, p)
        assert verify_jacobi(alg).ok
        assert is_filiform(alg).filiform

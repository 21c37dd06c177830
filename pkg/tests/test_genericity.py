import pytest

from symorbits import (
    QQ,
    PermGroup,
    Polynomial,
    SupportSet,
    monomials_of_type,
    rank_condition,
    sample_genericity,
)


class TestHypothesisValidation:
    def test_irrelevant_radical_needs_variable_power(self):
        support = SupportSet.of(3, [(1, 1, 1)])
        with pytest.raises(ValueError, match="power of a variable"):
            sample_genericity(support, PermGroup.symmetric(3), "irrelevant_radical", 2)

    def test_irrelevant_radical_needs_transitive_group(self):
        support = SupportSet.of(3, [(3, 0, 0), (1, 1, 1)])
        group = PermGroup.generated(3, ["(1 2)"])
        with pytest.raises(ValueError, match="transitive"):
            sample_genericity(support, group, "irrelevant_radical", 2)

    def test_monomial_ideal_needs_single_type(self):
        support = SupportSet.of(3, [(2, 1, 0), (1, 1, 1)])
        with pytest.raises(ValueError, match="single-type"):
            sample_genericity(support, PermGroup.symmetric(3), "monomial_ideal", 2)

    def test_radical_orbit_k_must_match_support(self):
        support = SupportSet.of(3, [(2, 1, 0), (1, 2, 0)])
        with pytest.raises(ValueError, match="minimal positive count"):
            sample_genericity(
                support, PermGroup.symmetric(3), "radical_orbit", 2, k=1
            )

    def test_unknown_property(self):
        support = SupportSet.of(3, [(2, 1, 0)])
        with pytest.raises(ValueError, match="unknown property"):
            sample_genericity(support, PermGroup.symmetric(3), "nope", 2)

    def test_small_n_flagged_not_rejected(self):
        support = SupportSet.of(3, monomials_of_type((2, 1), 3))
        report = sample_genericity(
            support, PermGroup.symmetric(3), "radical_orbit", 2, seed=5
        )
        assert "fewer than 5 variables" in report.notes


class TestSampling:
    def test_deterministic_given_seed(self):
        support = SupportSet.of(3, [(3, 0, 0), (1, 1, 1)])
        first = sample_genericity(
            support, PermGroup.symmetric(3), "irrelevant_radical", 8, seed=42
        )
        second = sample_genericity(
            support, PermGroup.symmetric(3), "irrelevant_radical", 8, seed=42
        )
        assert first.machine() == second.machine()

    def test_bookkeeping_invariant(self):
        support = SupportSet.of(3, monomials_of_type((2, 1), 3))
        report = sample_genericity(
            support, PermGroup.symmetric(3), "monomial_ideal", 10, seed=3
        )
        assert report.successes + len(report.failures) == report.trials

    def test_all_ones_coefficient_vector_is_deterministic_failure(self):
        # the fully symmetric polynomial has a rank-one orbit matrix
        f = Polynomial(QQ, 3, {m: 1 for m in monomials_of_type((2, 1), 3)})
        report = rank_condition(f, PermGroup.symmetric(3))
        assert not report.verdict and report.parameters["rank"] == 1

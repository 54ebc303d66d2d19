"""Cycle geometric means, definite forms and the critical digraph."""

import random
from fractions import Fraction

import pytest

from helpers import planted_matrix, rand_matrix, rand_positive_vector
from maxvis import (IrrationalLambda, MaxMatrix, OracleLimitExceeded,
                    ZeroLambda, brute_force_lambda, brute_force_lambda_root,
                    critical_edges_oracle, critical_structure, definite_form,
                    diag_similarity, max_cycle_geometric_mean, max_cycle_root)
from maxvis.spectral import CycleMeanRoot, is_irreducible


def m(rows):
    return MaxMatrix.from_rows(rows)


class TestLambda:
    def test_identity(self):
        assert max_cycle_geometric_mean(MaxMatrix.identity(3)) == 1

    def test_two_cycle_dominates(self):
        # loops weight 1, 2-cycle weight 16 -> mean 4
        assert max_cycle_geometric_mean(m([["1", "8"], ["2", "1"]])) == 4

    def test_zero_matrix(self):
        assert max_cycle_geometric_mean(MaxMatrix.zeros(3)) == 0

    def test_scaling_homogeneity(self):
        rng = random.Random(21)
        for _ in range(50):
            a = planted_matrix(rng, rng.randint(1, 7))
            alpha = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            from maxvis.semiring import scalar_mul

            assert max_cycle_geometric_mean(scalar_mul(alpha, a)) == \
                alpha * max_cycle_geometric_mean(a)

    def test_irrational_root_raises_but_root_form_works(self):
        a = m([["0", "2"], ["1", "0"]])  # single 2-cycle of weight 2
        with pytest.raises(IrrationalLambda):
            max_cycle_geometric_mean(a)
        root = max_cycle_root(a)
        assert (root.weight, root.length) == (Fraction(2), 2)

    def test_float_mode(self):
        a = m([["1", "8"], ["2", "1"]]).to_float()
        assert abs(max_cycle_geometric_mean(a) - 4.0) < 1e-9


class TestBruteForce:
    def test_examples(self):
        assert brute_force_lambda(MaxMatrix.identity(2)) == 1
        assert brute_force_lambda(m([["0", "2"], ["2", "0"]])) == 2
        assert brute_force_lambda(m([["2"]])) == 2

    def test_limit(self):
        with pytest.raises(OracleLimitExceeded):
            brute_force_lambda(MaxMatrix.identity(9))

    def test_karp_equals_enumeration(self):
        rng = random.Random(42)
        for _ in range(120):
            a = rand_matrix(rng, rng.randint(1, 8), zero_p=0.4)
            karp = max_cycle_root(a)
            brute = brute_force_lambda_root(a)
            assert karp.value_equals(brute)

    def test_karp_equals_enumeration_float(self):
        import numpy as np

        from maxvis.spectral import lambda_log

        rng = np.random.default_rng(9)
        for _ in range(40):
            n = int(rng.integers(1, 8))
            lin = rng.uniform(0.1, 4.0, size=(n, n))
            lin[rng.random((n, n)) < 0.4] = 0.0
            a = MaxMatrix.from_rows(lin.tolist(), mode="float")
            lead = lambda_log(a)
            import math

            brute = brute_force_lambda(a)
            if brute == 0.0:
                assert lead == float("-inf")
            else:
                assert abs(lead - math.log(brute)) < 1e-9


class TestDefiniteForm:
    def test_already_definite(self):
        a = m([["1", "2"], ["1/8", "1"]])
        assert definite_form(a) == a

    def test_divides_by_lambda(self):
        assert definite_form(m([["1", "8"], ["2", "1"]])) == \
            m([["1/4", "2"], ["1/2", "1/4"]])

    def test_zero_lambda(self):
        with pytest.raises(ZeroLambda):
            definite_form(MaxMatrix.zeros(2))


class TestCriticalStructure:
    def test_identity(self):
        data = critical_structure(MaxMatrix.identity(3))
        assert data.critical_edges == frozenset({(0, 0), (1, 1), (2, 2)})
        assert data.n_components_critical == 3
        assert data.representatives == (0, 1, 2)
        assert data.non_critical == frozenset()

    def test_two_cycle(self):
        data = critical_structure(m([["1/4", "2"], ["1/2", "1/4"]]))
        assert data.critical_edges == frozenset({(0, 1), (1, 0)})
        assert data.components == ((0, 1),)
        assert data.representatives == (0,)

    def test_component_count_invariant(self):
        rng = random.Random(77)
        for _ in range(60):
            a = planted_matrix(rng, rng.randint(1, 7))
            data = critical_structure(a)
            assert data.n_components == \
                data.n_components_critical + len(data.non_critical)
            for i, j in data.critical_edges:
                assert i in data.critical_nodes and j in data.critical_nodes
            crit_comps = [c for c in data.components if c[0] in data.critical_nodes]
            assert data.representatives == tuple(c[0] for c in crit_comps)
            assert len(crit_comps) == data.n_components_critical

    def test_matches_cycle_oracle(self):
        rng = random.Random(101)
        for _ in range(80):
            a = planted_matrix(rng, rng.randint(1, 7))
            data = critical_structure(a)
            assert data.critical_edges == critical_edges_oracle(a)

    def test_diag_similarity_invariance(self):
        rng = random.Random(55)
        for _ in range(60):
            a = planted_matrix(rng, rng.randint(1, 7))
            x = rand_positive_vector(rng, a.n)
            b = diag_similarity(a, x)
            da, db = critical_structure(a), critical_structure(b)
            assert da.lam == db.lam
            assert da.critical_edges == db.critical_edges
            assert da.components == db.components

    def test_float_agrees_with_exact(self):
        rng = random.Random(31)
        for _ in range(40):
            a = planted_matrix(rng, rng.randint(1, 6))
            da = critical_structure(a)
            df = critical_structure(a.to_float())
            assert da.critical_edges == df.critical_edges


class TestIrreducibility:
    def test_cases(self):
        assert is_irreducible(m([["0", "1"], ["1", "0"]]))
        assert not is_irreducible(m([["1", "1"], ["0", "1"]]))
        assert is_irreducible(m([["2"]]))
        assert not is_irreducible(m([["0"]]))


class TestRootForm:
    def test_ordering_and_equality(self):
        assert CycleMeanRoot(Fraction(2), 2) < CycleMeanRoot(Fraction(3), 2)
        assert CycleMeanRoot(Fraction(4), 2).value_equals(CycleMeanRoot(Fraction(2), 1))
        assert CycleMeanRoot(Fraction(8, 27), 3).as_fraction() == Fraction(2, 3)
        assert CycleMeanRoot(Fraction(2), 2).as_fraction() is None

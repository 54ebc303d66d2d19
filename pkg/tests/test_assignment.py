"""Max-product assignment and the two-sided assignment visualization."""

import random
from fractions import Fraction

import pytest

from helpers import rand_entry, rand_fraction
from maxvis import (MaxMatrix, NoPositivePermutation, OracleLimitExceeded,
                    all_maximal_permutations, brute_force_assignment,
                    max_cycle_geometric_mean, maximal_permutation,
                    visualize_assignment)

def m(rows):
    return MaxMatrix.from_rows(rows)


def rand_feasible(rng, n, zero_p=0.3):
    """Random matrix guaranteed to have a positive permutation (one random
    permutation is forced positive)."""
    rows = [[rand_entry(rng, zero_p) for _ in range(n)] for _ in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    for i, j in enumerate(perm):
        if rows[i][j] == 0:
            rows[i][j] = rand_fraction(rng)
    return MaxMatrix.from_rows(rows)


class TestMaximalPermutation:
    def test_identity(self):
        perm = maximal_permutation(MaxMatrix.identity(3))
        assert perm.mapping == (0, 1, 2)
        assert perm.weight == 1

    def test_diagonal_wins(self):
        perm = maximal_permutation(m([["2", "4"], ["1", "3"]]))
        assert perm.mapping == (0, 1)
        assert perm.weight == 6

    def test_infeasible(self):
        with pytest.raises(NoPositivePermutation):
            maximal_permutation(m([["0", "1"], ["0", "1"]]))

    def test_matches_brute_force(self):
        rng = random.Random(149)
        for _ in range(150):
            a = rand_feasible(rng, rng.randint(1, 7))
            hungarian = maximal_permutation(a)
            brute = brute_force_assignment(a)
            assert hungarian.weight == brute.weight

    def test_oracle_limit(self):
        with pytest.raises(OracleLimitExceeded):
            brute_force_assignment(MaxMatrix.identity(8))

    def test_brute_examples(self):
        assert brute_force_assignment(MaxMatrix.identity(2)).mapping == (0, 1)
        perm = brute_force_assignment(m([["2", "4"], ["1", "3"]]))
        assert perm.mapping == (0, 1) and perm.weight == 6
        assert brute_force_assignment(m([["5"]])).weight == 5


class TestVisualizeAssignment:
    def test_identity(self):
        av = visualize_assignment(MaxMatrix.identity(2))
        assert av.result == MaxMatrix.identity(2)
        assert av.pi.mapping == (0, 1)
        assert av.x.vec.to_values() == [Fraction(1), Fraction(1)]

    def test_worked_example(self):
        av = visualize_assignment(m([["2", "4"], ["1", "3"]]))
        assert av.pi.mapping == (0, 1)
        assert av.strongly_definite_form == m([["1", "2"], ["1/3", "1"]])
        assert av.x.vec.to_values() == [Fraction(3), Fraction(4, 3)]
        assert av.result == m([["1", "8/9"], ["3/4", "1"]])

    def test_all_ties(self):
        av = visualize_assignment(m([["1", "1"], ["1", "1"]]))
        assert av.result == MaxMatrix.ones(2)

    def test_strongly_definite_form_properties(self):
        rng = random.Random(151)
        for _ in range(60):
            a = rand_feasible(rng, rng.randint(1, 6))
            av = visualize_assignment(a)
            b = av.strongly_definite_form
            assert all(b.exact_rows()[i][i] == 1 for i in range(b.n))
            assert max_cycle_geometric_mean(b) == 1

    def test_ones_exactly_on_maximal_permutations(self):
        rng = random.Random(157)
        for _ in range(80):
            a = rand_feasible(rng, rng.randint(1, 6))
            av = visualize_assignment(a)
            support = set()
            for perm in all_maximal_permutations(a):
                support.update(enumerate(perm))
            rows = av.result.exact_rows()
            for i in range(a.n):
                for j in range(a.n):
                    if (i, j) in support:
                        assert rows[i][j] == 1
                    else:
                        assert rows[i][j] < 1

    def test_two_sided_factorization(self):
        rng = random.Random(163)
        for _ in range(60):
            a = rand_feasible(rng, rng.randint(1, 6))
            av = visualize_assignment(a)
            rows = a.exact_rows()
            left = av.left_diagonal
            right = av.right_diagonal
            rebuilt = [
                [left._vals[i] * rows[i][j] * right._vals[j] for j in range(a.n)]
                for i in range(a.n)
            ]
            assert rebuilt == [list(r) for r in av.result.exact_rows()]

    def test_entry_multiset_invariant_under_relabeling(self):
        # conjugating by a permutation forces a different tie-break but
        # must not change which positions end up at 1 (mapped back), nor
        # the multiset of entries
        rng = random.Random(167)
        for _ in range(40):
            n = rng.randint(2, 5)
            a = rand_feasible(rng, n)
            base = visualize_assignment(a)
            sigma = list(range(n))
            rng.shuffle(sigma)
            rows = a.exact_rows()
            conj = [[rows[sigma[i]][sigma[j]] for j in range(n)] for i in range(n)]
            other = visualize_assignment(MaxMatrix.from_rows(conj))
            ones_base = {(i, j) for i in range(n) for j in range(n)
                         if base.result.exact_rows()[i][j] == 1}
            ones_other = {(sigma[i], sigma[j]) for i in range(n) for j in range(n)
                          if other.result.exact_rows()[i][j] == 1}
            assert ones_base == ones_other

    def test_float_mode(self):
        a = m([["2", "4"], ["1", "3"]]).to_float()
        av = visualize_assignment(a)
        assert av.pi.mapping == (0, 1)
        rows = av.result.to_rows()
        assert abs(rows[0][0] - 1) < 1e-9 and abs(rows[1][1] - 1) < 1e-9
        assert rows[0][1] < 1 and rows[1][0] < 1

"""Kleene star closure against the truncated-series and path oracles."""

import random
from fractions import Fraction

import pytest

from helpers import planted_definite, rand_positive_vector
from maxvis import (LambdaExceedsOne, MaxMatrix, diag_similarity,
                    is_kleene_star, kleene_series_oracle, kleene_star,
                    max_cycle_geometric_mean, matrices_close)
from maxvis._graph import simple_paths
from maxvis.spectral import is_irreducible


def m(rows):
    return MaxMatrix.from_rows(rows)


GOLDEN6 = [
    ["1", "5/11", "5/11", "7/11", "7/11", "7/11"],
    ["5/11", "1", "5/11", "7/11", "7/11", "7/11"],
    ["5/11", "5/11", "1", "7/11", "7/11", "7/11"],
    ["7/11", "7/11", "7/11", "1", "5/11", "5/11"],
    ["7/11", "7/11", "7/11", "5/11", "1", "5/11"],
    ["7/11", "7/11", "7/11", "5/11", "5/11", "1"],
]


class TestKleeneStar:
    def test_identity(self):
        assert kleene_star(MaxMatrix.identity(3)).star == MaxMatrix.identity(3)

    def test_hand_expansion(self):
        assert kleene_star(m([["1/4", "2"], ["1/2", "1/4"]])).star == \
            m([["1", "2"], ["1/2", "1"]])

    def test_divergent(self):
        with pytest.raises(LambdaExceedsOne):
            kleene_star(m([["2"]]))

    def test_series_oracle_limit(self):
        from maxvis import OracleLimitExceeded

        with pytest.raises(OracleLimitExceeded):
            kleene_series_oracle(MaxMatrix.identity(9))

    def test_series_oracle_examples(self):
        assert kleene_series_oracle(MaxMatrix.identity(2)) == MaxMatrix.identity(2)
        a = m([["1", "2"], ["1/8", "1"]])
        assert kleene_series_oracle(a) == a
        g = m(GOLDEN6)
        assert kleene_series_oracle(g) == g

    def test_closure_equals_series(self):
        rng = random.Random(17)
        for _ in range(80):
            a = planted_definite(rng, rng.randint(1, 8))
            assert kleene_star(a).star == kleene_series_oracle(a)

    def test_star_is_fixed_point(self):
        rng = random.Random(19)
        for _ in range(40):
            a = planted_definite(rng, rng.randint(1, 7))
            star = kleene_star(a).star
            assert kleene_star(star).star == star
            assert max_cycle_geometric_mean(star) == 1
            assert is_kleene_star(star)

    def test_positive_when_irreducible(self):
        rng = random.Random(23)
        found = 0
        for _ in range(60):
            a = planted_definite(rng, rng.randint(2, 6), zero_p=0.25)
            if not is_irreducible(a):
                continue
            found += 1
            star = kleene_star(a).star
            assert all(v > 0 for row in star.exact_rows() for v in row)
        assert found > 10

    def test_entries_are_best_path_weights(self):
        rng = random.Random(29)
        for _ in range(30):
            a = planted_definite(rng, rng.randint(2, 6))
            star = kleene_star(a).star.exact_rows()
            rows = a.exact_rows()
            adjacency = a.positive_adjacency()
            for i in range(a.n):
                for j in range(a.n):
                    if i == j:
                        continue
                    best = Fraction(0)
                    for path in simple_paths(adjacency, a.n, i, j):
                        w = Fraction(1)
                        for u, v in zip(path, path[1:]):
                            w *= rows[u][v]
                        best = max(best, w)
                    assert star[i][j] == best

    def test_diag_similarity_commutes(self):
        rng = random.Random(31)
        for _ in range(40):
            a = planted_definite(rng, rng.randint(1, 7))
            x = rand_positive_vector(rng, a.n)
            lhs = kleene_star(diag_similarity(a, x)).star
            rhs = diag_similarity(kleene_star(a).star, x)
            assert lhs == rhs

    def test_float_matches_exact(self):
        rng = random.Random(37)
        for _ in range(30):
            a = planted_definite(rng, rng.randint(1, 7))
            assert matrices_close(kleene_star(a).star.to_float(),
                                  kleene_star(a.to_float()).star, 1e-9)


class TestIsKleeneStar:
    def test_identity(self):
        assert is_kleene_star(MaxMatrix.identity(4))

    def test_golden_matrix(self):
        assert is_kleene_star(m(GOLDEN6))

    def test_squaring_grows(self):
        assert not is_kleene_star(m([["1", "2"], ["1", "1"]]))

    def test_float_mode(self):
        assert is_kleene_star(m(GOLDEN6).to_float())
        assert not is_kleene_star(m([["1", "2"], ["1", "1"]]).to_float())

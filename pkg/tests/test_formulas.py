import itertools

import pytest

from crownbetti import (
    binomial,
    complete_bipartite,
    crown,
    edge_ideal,
    enumerate_M,
    enumerate_N,
    family_top_betti,
    generalized_crown,
    graded_betti_formula,
    induced_subgraph,
    multigraded_betti,
    multigraded_betti_formula,
    predicted_contribution,
    regularity_formula,
    theta,
    total_betti_closed_form,
    unbalanced_crown,
    xy_variables,
)


class TestTotalClosedForm:
    def test_generator_count_at_index_zero(self):
        assert total_betti_closed_form(3, 0) == 6

    def test_top_value(self):
        assert total_betti_closed_form(3, 3) == 2  # n - 1 at i = 2n - 3

    def test_crown3_sequence_and_alternating_sum(self):
        seq = [total_betti_closed_form(3, i) for i in range(4)]
        assert seq == [6, 9, 6, 2]
        assert 1 + sum((-1) ** (i + 1) * b for i, b in enumerate(seq)) == 0

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_vanishes_beyond_pdim(self, n):
        for i in range(2 * n - 2, 2 * n + 4):
            assert total_betti_closed_form(n, i) == 0
        assert total_betti_closed_form(n, 2 * n - 3) == n - 1


class TestEnumerateN:
    def test_cardinality_formula(self):
        n, i, k = 4, 3, 2
        expected = 2 ** (i + 3 - 2 * k) * binomial(n, k) * binomial(n - k, i + 3 - 2 * k)
        assert len(enumerate_N(n, (1,) * n, i, k)) == expected == 24

    def test_pairs_only_case(self):
        # (n, i, k) = (3, 1, 2): pure pair selections x_a x_b y_a^wa y_b^wb
        w = (2, 1, 3)
        vs = xy_variables(3)
        expected = {
            vs.from_dict({f"x{a}": 1, f"x{b}": 1, f"y{a}": w[a - 1], f"y{b}": w[b - 1]})
            for a, b in itertools.combinations((1, 2, 3), 2)
        }
        assert enumerate_N(3, w, 1, 2) == expected

    def test_empty_when_too_many_pairs(self):
        assert enumerate_N(4, (1, 1, 1, 1), 0, 2) == frozenset()

    def test_matches_oracle_support_of_beta1(self):
        w = (2, 1, 3)
        table = multigraded_betti(edge_ideal(crown(3, w)))
        from_n = enumerate_N(3, w, 1, 2)
        from_m = enumerate_M(3, w, 1)
        assert {a for (i, a) in table.entries if i == 1} == from_n | from_m

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_cardinalities_across_range(self, n):
        w = tuple(range(1, n + 1))
        for i in range(0, 2 * n - 2):
            for k in range(2, n + 1):
                j = i + 3 - 2 * k
                expected = 0 if j < 0 else 2**j * binomial(n, k) * binomial(n - k, j)
                assert len(enumerate_N(n, w, i, k)) == expected

    def test_theta_agrees_with_graph_route(self):
        # direct selection products equal theta of the induced subgraph
        n, w = 4, (1, 2, 3, 4)
        graph = crown(n, w)
        for i in range(0, 2 * n - 2):
            for k in range(2, n + 1):
                for a in enumerate_N(n, w, i, k):
                    sub = induced_subgraph(graph, a.support())
                    assert theta(sub) == a


class TestEnumerateM:
    def test_index_zero_gives_generators(self):
        w = (2, 1, 3)
        assert enumerate_M(3, w, 0) == frozenset(edge_ideal(crown(3, w)).generators)

    def test_one_sided_selections_excluded(self):
        for a in enumerate_M(3, (1, 1, 1), 1):
            labels = {v[0] for v in a.support()}
            assert labels == {"x", "y"}

    def test_crown2_base(self):
        w = (3, 4)
        assert len(enumerate_M(2, w, 0)) == 2

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_cardinality_formula(self, n):
        w = (1,) * n
        for i in range(0, 2 * n - 2):
            assert len(enumerate_M(n, w, i)) == (2 ** (i + 2) - 2) * binomial(n, i + 2)

    def test_theta_agrees_with_graph_route(self):
        n, w = 4, (2, 1, 1, 3)
        graph = crown(n, w)
        for i in range(0, 2 * n - 2):
            for a in enumerate_M(n, w, i):
                assert theta(induced_subgraph(graph, a.support())) == a


class TestPartitionConsistency:
    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_counts_add_to_closed_form(self, n):
        w = tuple(range(1, n + 1))
        for i in range(0, 2 * n - 2):
            total = sum(
                (k - 1) * len(enumerate_N(n, w, i, k)) for k in range(2, n + 1)
            )
            total += len(enumerate_M(n, w, i))
            assert total == total_betti_closed_form(n, i)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_selection_families_are_disjoint(self, n):
        w = (2,) + (1,) * (n - 1)
        for i in range(0, 2 * n - 2):
            sets = [enumerate_N(n, w, i, k) for k in range(2, n + 1)]
            sets.append(enumerate_M(n, w, i))
            for a, b in itertools.combinations(sets, 2):
                assert not (a & b)

    def test_degree_bookkeeping(self):
        n, w = 4, (1, 2, 3, 4)
        for i in range(0, 2 * n - 2):
            for k in range(2, n + 1):
                for a in enumerate_N(n, w, i, k):
                    n_x = sum(1 for v in a.support() if v.startswith("x"))
                    n_y = sum(1 for v in a.support() if v.startswith("y"))
                    y_weight = sum(
                        w[int(v[1:]) - 1] for v in a.support() if v.startswith("y")
                    )
                    assert n_x + n_y == i + 3
                    assert min(n_x, n_y) >= k
                    assert a.degree() == n_x + y_weight
            for a in enumerate_M(n, w, i):
                assert len(a.support()) == i + 2

    def test_weight_one_degrees(self):
        n = 4
        w = (1,) * n
        for i in range(0, 2 * n - 2):
            for k in range(2, n + 1):
                assert all(a.degree() == i + 3 for a in enumerate_N(n, w, i, k))
            assert all(a.degree() == i + 2 for a in enumerate_M(n, w, i))


class TestMultigradedFormula:
    def test_crown2_table(self):
        w = (3, 2)
        vs = xy_variables(2)
        table = multigraded_betti_formula(2, w)
        assert table.entries == {
            (0, vs.from_dict({"x1": 1, "y2": w[1]})): 1,
            (0, vs.from_dict({"x2": 1, "y1": w[0]})): 1,
            (1, vs.from_dict({"x1": 1, "x2": 1, "y1": w[0], "y2": w[1]})): 1,
        }

    @pytest.mark.parametrize("w", [(1, 1, 1), (1, 2, 1), (3, 1, 2)])
    def test_matches_oracle_crown3(self, w):
        assert multigraded_betti_formula(3, w) == multigraded_betti(edge_ideal(crown(3, w)))

    def test_top_entry_crown4(self):
        w = (1, 2, 3, 4)
        table = multigraded_betti_formula(4, w)
        assert table.entry(5, theta(crown(4, w))) == 3  # n - 1 at i = 2n - 3
        assert table.pdim() == 5

    @pytest.mark.parametrize("n", [3, 4])
    def test_weight_independent_totals(self, n):
        vectors = [(1,) * n, (2,) + (1,) * (n - 1), tuple(range(1, n + 1))]
        totals = {tuple(multigraded_betti_formula(n, w).total_sequence()) for w in vectors}
        assert len(totals) == 1
        (seq,) = totals
        assert list(seq) == [total_betti_closed_form(n, i) for i in range(len(seq))]


class TestGradedFormula:
    def test_weight_one_j_is_i_plus_2(self):
        n, i = 4, 1
        assert graded_betti_formula(n, (1,) * n, i, i + 2) == (2 ** (i + 2) - 2) * binomial(n, i + 2) == 24

    def test_weight_one_support(self):
        n = 4
        w = (1,) * n
        for i in range(0, 2 * n - 2):
            for j in range(0, 3 * n):
                value = graded_betti_formula(n, w, i, j)
                if j not in (i + 2, i + 3):
                    assert value == 0

    def test_degree_sum_is_generator_count(self):
        n, w = 3, (2, 1, 1)
        assert sum(graded_betti_formula(n, w, 0, j) for j in range(0, 20)) == 6


class TestRegularityFormula:
    @pytest.mark.parametrize(
        "n,w,expected", [(3, (1, 1, 1), 3), (3, (2, 2, 2), 6), (4, (1, 1, 1, 1), 3)]
    )
    def test_values(self, n, w, expected):
        assert regularity_formula(n, w) == expected == sum(w) - n + 3

    def test_matches_oracle(self):
        w = (1, 2, 3)
        table = multigraded_betti(edge_ideal(crown(3, w)))
        assert table.regularity() == regularity_formula(3, w)


class TestFamilyTopBetti:
    def test_crown(self):
        w = (1, 1, 1)
        top = family_top_betti("crown", (3,), w)
        assert (top.pdim, top.top_value) == (3, 2)
        assert top.top_multidegree == theta(crown(3, w))

    def test_unbalanced(self):
        w = (2, 1)
        top = family_top_betti("unbalanced", (3, 2), w)
        assert (top.pdim, top.top_value) == (2, 1)
        assert top.top_multidegree == theta(unbalanced_crown(3, 2, w))

    def test_generalized_value_is_m_minus_1(self):
        top = family_top_betti("generalized", (2, 3, 3), (1, 1, 1))
        assert (top.pdim, top.top_value) == (3, 1)

    def test_complete_bipartite(self):
        w = (3, 1)
        top = family_top_betti("complete_bipartite", (2, 2), w)
        assert (top.pdim, top.top_value) == (2, 1)
        assert top.top_multidegree == theta(complete_bipartite(2, 2, w))

    def test_constraint_violations_rejected(self):
        with pytest.raises(ValueError):
            family_top_betti("crown", (1,), (1,))
        with pytest.raises(ValueError):
            family_top_betti("unbalanced", (2, 2), (1, 1))
        with pytest.raises(ValueError):
            family_top_betti("bogus", (2,), (1, 1))


class TestPredictedContribution:
    def test_full_vertex_set(self):
        n, w = 3, (1, 2, 1)
        out = predicted_contribution(n, w, xy_variables(n).names)
        assert out == (2 * n - 3, theta(crown(n, w)), n - 1)

    def test_single_cross_edge(self):
        w = (1, 2, 1)
        out = predicted_contribution(3, w, {"x1", "y2"})
        assert out == (0, xy_variables(3).from_dict({"x1": 1, "y2": w[1]}), 1)

    def test_one_pair_contributes_nothing(self):
        assert predicted_contribution(3, (1, 1, 1), {"x1", "y1", "x2"}) is None

    @pytest.mark.parametrize("n,w", [(3, (1, 2, 1)), (4, (1, 1, 1, 1))])
    def test_reassembles_full_table(self, n, w):
        entries = {}
        for size in range(2 * n + 1):
            for subset in itertools.combinations(xy_variables(n).names, size):
                out = predicted_contribution(n, w, subset)
                if out is not None:
                    i, a, value = out
                    assert (i, a) not in entries
                    entries[(i, a)] = value
        assert entries == multigraded_betti_formula(n, w).entries

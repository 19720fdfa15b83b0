"""Exact-solver tests: worked examples, error contracts, serialization."""

import numpy as np
import pytest

from cfedit.assignment import (
    INFEASIBLE,
    BipartiteGraph,
    CostMatrix,
    InfeasiblePair,
    InstanceTooLarge,
    Matching,
    NoFeasibleAssignment,
    ShapeError,
    cost_to_graph,
    graph_to_cost,
    matching_weight,
    solve_exhaustive,
    solve_rlap,
)

# frozen from the seed-42 enumeration over all 24 injective assignments
SEED42_PAIRS = ((0, 0), (1, 1), (2, 2))
SEED42_WEIGHT = 0.5511191334793676


def seed42_matrix() -> CostMatrix:
    return CostMatrix(np.random.RandomState(42).uniform(0, 1, size=(3, 4)))


def brute_force_weight(costs: np.ndarray) -> float:
    """Independent oracle: plain recursive enumeration of injective maps."""
    n, m = costs.shape

    def go(i, used):
        if i == n:
            return 0.0
        best = float("inf")
        for j in range(m):
            if j in used or not np.isfinite(costs[i, j]):
                continue
            best = min(best, costs[i, j] + go(i + 1, used | {j}))
        return best

    return go(0, frozenset())


class TestSolveExhaustive:
    def test_single_cell(self):
        m = solve_exhaustive(CostMatrix([[0.3]]))
        assert m.pairs == ((0, 0),)
        assert m.total_weight == pytest.approx(0.3)

    def test_zero_diagonal_forced(self):
        m = solve_exhaustive(CostMatrix([[0.0, 1.0], [1.0, 0.0]]))
        assert m.pairs == ((0, 0), (1, 1))
        assert m.total_weight == 0.0

    def test_seed42_regression(self):
        m = solve_exhaustive(seed42_matrix())
        assert m.pairs == SEED42_PAIRS
        assert m.total_weight == pytest.approx(SEED42_WEIGHT, abs=1e-12)

    def test_matches_recursive_oracle(self):
        for seed in range(25):
            rng = np.random.RandomState(seed)
            n, m = rng.randint(1, 5), rng.randint(4, 7)
            costs = rng.uniform(0, 1, size=(n, m))
            assert solve_exhaustive(CostMatrix(costs)).total_weight == pytest.approx(
                brute_force_weight(costs), abs=1e-12
            )

    def test_guard(self):
        with pytest.raises(InstanceTooLarge):
            solve_exhaustive(CostMatrix(np.ones((9, 9))))
        with pytest.raises(InstanceTooLarge):
            solve_exhaustive(CostMatrix(np.ones((2, 10))))

    def test_no_feasible_assignment(self):
        costs = np.array([[INFEASIBLE, 1.0], [INFEASIBLE, 1.0]])
        with pytest.raises(NoFeasibleAssignment):
            solve_exhaustive(CostMatrix(costs))

    def test_tie_breaks_lexicographically(self):
        m = solve_exhaustive(CostMatrix(np.zeros((2, 3))))
        assert m.pairs == ((0, 0), (1, 1))


class TestSolveRlap:
    def test_single_row_argmin(self):
        m = solve_rlap(CostMatrix([[0.9, 0.2, 0.5, 0.8, 0.3]]))
        assert m.pairs == ((0, 1),)
        assert m.total_weight == pytest.approx(0.2)

    def test_zero_diagonal_identity(self):
        costs = np.ones((4, 4)) - np.eye(4)
        m = solve_rlap(CostMatrix(costs))
        assert m.pairs == tuple((i, i) for i in range(4))
        assert m.total_weight == 0.0

    def test_shape_error(self):
        with pytest.raises(ShapeError):
            solve_rlap(CostMatrix(np.ones((3, 2))))

    def test_infeasible_instance(self):
        costs = np.array([[INFEASIBLE, 1.0], [INFEASIBLE, INFEASIBLE]])
        with pytest.raises(NoFeasibleAssignment):
            solve_rlap(CostMatrix(costs))

    def test_respects_missing_edges(self):
        costs = np.array([[INFEASIBLE, 5.0], [1.0, INFEASIBLE]])
        m = solve_rlap(CostMatrix(costs))
        assert m.pairs == ((0, 1), (1, 0))
        assert m.total_weight == pytest.approx(6.0)

    @pytest.mark.parametrize("backend", ["compiled", "pure"])
    def test_backends_match_oracle(self, backend):
        from cfedit.assignment import BACKENDS

        if backend not in BACKENDS:
            pytest.skip("compiled kernel not built")
        for seed in range(40):
            rng = np.random.RandomState(seed)
            n = rng.randint(1, 7)
            m = rng.randint(n, 9)
            cost = CostMatrix(rng.uniform(0, 1, size=(n, m)))
            expected = solve_exhaustive(cost).total_weight
            got = solve_rlap(cost, backend=backend).total_weight
            assert abs(got - expected) <= 1e-9


class TestMatchingWeight:
    def test_arithmetic(self):
        cost = CostMatrix([[0.1, 0.9], [0.9, 0.2]])
        m = Matching(((0, 0), (1, 1)), 0.3)
        assert matching_weight(m, cost) == pytest.approx(0.3)

    def test_empty_sum(self):
        assert matching_weight(Matching((), 0.0), CostMatrix([[1.0]])) == 0.0

    def test_seed42_fixture_weight(self):
        m = Matching(SEED42_PAIRS, SEED42_WEIGHT)
        assert matching_weight(m, seed42_matrix()) == pytest.approx(SEED42_WEIGHT, abs=1e-12)

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            matching_weight(Matching(((0, 5),), 0.0), CostMatrix([[1.0, 2.0]]))

    def test_infeasible_pair(self):
        cost = CostMatrix([[1.0, INFEASIBLE]])
        with pytest.raises(InfeasiblePair):
            matching_weight(Matching(((0, 1),), 0.0), cost)


class TestGraphCostConversion:
    def test_direct_transcription(self):
        g = BipartiteGraph(("a",), ("x", "y"), ((0, 0, 0.4), (0, 1, 0.7)))
        assert graph_to_cost(g).costs.tolist() == [[0.4, 0.7]]

    def test_absent_edge_maps_to_sentinel(self):
        g = BipartiteGraph(("a",), ("x", "y"), ((0, 0, 0.4),))
        costs = graph_to_cost(g).costs
        assert costs[0, 0] == 0.4
        assert costs[0, 1] == INFEASIBLE

    def test_roundtrip_preserves_edges(self):
        g = BipartiteGraph(("a", "b"), ("x", "y", "z"),
                           ((0, 0, 0.4), (0, 2, 0.1), (1, 1, 0.9)))
        again = cost_to_graph(graph_to_cost(g), g.source_words, g.target_words)
        assert again.edges == g.edges

    def test_graph_invariants(self):
        with pytest.raises(ShapeError):
            BipartiteGraph(("a", "b"), ("x",), ())
        with pytest.raises(ValueError):
            BipartiteGraph(("a",), ("x",), ((0, 0, 0.5), (0, 0, 0.6)))
        with pytest.raises(ValueError):
            BipartiteGraph(("a",), ("x",), ((0, 0, -1.0),))
        with pytest.raises(IndexError):
            BipartiteGraph(("a",), ("x",), ((0, 3, 1.0),))


class TestSerialization:
    def test_cost_roundtrip_with_infeasible(self):
        cost = CostMatrix([[0.25, INFEASIBLE], [1.5, 0.125]])
        again = CostMatrix.from_text(cost.to_text())
        assert again.costs[0, 1] == INFEASIBLE
        assert np.array_equal(
            again.costs[np.isfinite(again.costs)], cost.costs[np.isfinite(cost.costs)]
        )

    def test_cost_text_layout(self):
        text = CostMatrix([[0.5, INFEASIBLE]]).to_text()
        first, second = text.strip().splitlines()
        assert first == "1 2"
        assert second.split() == ["0.5", "inf"]

    def test_matching_roundtrip(self):
        cost = CostMatrix([[0.1, 0.9], [0.9, 0.2]])
        m = Matching(((0, 0), (1, 1)), 0.3)
        again = Matching.from_text(m.to_text(cost))
        assert again.pairs == m.pairs
        assert again.total_weight == pytest.approx(0.3)

    def test_matching_rejects_duplicates(self):
        with pytest.raises(ValueError):
            Matching(((0, 0), (0, 1)), 1.0)
        with pytest.raises(ValueError):
            Matching(((0, 0), (1, 0)), 1.0)

import pytest

from src.core.exceptions import BoundExceededError, HypothesisError, ValidationError
from src.models.quiver import Quiver
from src.services.ensembles import factorize_ensemble, star_height_of_expr
from src.services.families import make_family
from src.services.starheight import (
	cycle_rank,
	longest_simple_paths_from,
	star_height_cycles,
	star_height_graph,
	star_height_open,
)
from tests.conftest import random_undirected


@pytest.fixture
def looped_edge() -> Quiver:
	return Quiver.from_names(['1', '2'], [('1', '2'), ('2', '1'), ('1', '1')])


class TestRecursion:
	def test_cycle_heights(self, k3, lk3, c5, loop_vertex):
		assert star_height_cycles(loop_vertex, '1') == 1
		assert star_height_cycles(k3, '1') == 2
		assert star_height_cycles(lk3, '1') == 3
		assert star_height_cycles(c5, '0') == 4

	def test_deletion_set(self, k3):
		assert star_height_cycles(k3, '1', deleted=['3']) == 1
		assert star_height_cycles(k3, '1', deleted=['2', '3']) == 0

	def test_open_heights(self, k3, example3):
		assert star_height_open(k3, '1', '2') == 2
		assert star_height_open(example3, '1', '4') == 3
		assert star_height_open(example3, '4', '1') == 0

	def test_open_needs_distinct_endpoints(self, k3):
		with pytest.raises(ValidationError):
			star_height_open(k3, '1', '1')

	def test_agrees_with_expression_height(self, acceptance_suite):
		for q in acceptance_suite:
			for alpha in q.ids:
				for omega in q.ids:
					expected = star_height_of_expr(factorize_ensemble(q, alpha, omega))
					if alpha == omega:
						assert star_height_cycles(q, alpha) == expected, (q, alpha)
					else:
						assert star_height_open(q, alpha, omega) == expected, (q, alpha, omega)


class TestLongestPaths:
	def test_complete(self, k3):
		report = longest_simple_paths_from(k3, '1')
		assert report.length == 2
		assert [end.vertex for end in report.ends] == ['2', '3']
		assert not any(end.has_loop for end in report.ends)
		assert len(report.witness) == 3

	def test_path_end(self, p4):
		report = longest_simple_paths_from(p4, '1')
		assert report.length == 3
		assert report.witness == ['1', '2', '3', '4']

	def test_single_vertex(self):
		report = longest_simple_paths_from(Quiver.from_names(['7'], []), '7')
		assert report.length == 0
		assert report.witness == ['7']

	def test_witness_prefers_loop(self):
		q = Quiver.from_names(['1', '2', '3'], [('1', '2'), ('2', '1'), ('1', '3'), ('3', '1'), ('3', '3')])
		report = longest_simple_paths_from(q, '1')
		assert report.witness == ['1', '3']

	def test_bound(self):
		with pytest.raises(BoundExceededError):
			longest_simple_paths_from(make_family('path', 5), '1', max_vertices=4)


class TestClosedForm:
	def test_spot_values(self, k3, lk3, c5):
		assert star_height_graph(k3, '1').height == 2
		assert star_height_graph(lk3, '1').height == 3
		report = star_height_graph(c5, '0')
		assert report.height == 4
		assert report.longest_path_length == 4
		assert not report.witness_ends_on_loop

	def test_loop_only_counts_at_the_far_end(self, looped_edge):
		assert star_height_graph(looped_edge, '1').height == 1
		report = star_height_graph(looped_edge, '2')
		assert report.height == 2
		assert report.witness == ['2', '1']
		assert report.witness_ends_on_loop

	def test_hypotheses(self, example3):
		with pytest.raises(HypothesisError):
			star_height_graph(example3, '1')
		with pytest.raises(HypothesisError):
			star_height_graph(Quiver.from_names(['1', '2'], []), '1')

	@pytest.mark.slow
	def test_random_undirected_graphs(self, rng):
		for _ in range(30):
			q = random_undirected(rng, int(rng.integers(1, 8)))
			rank = cycle_rank(q)
			for v in q.ids:
				height = star_height_graph(q, v).height
				assert height == star_height_cycles(q, v), (q, v)
				assert height == star_height_of_expr(factorize_ensemble(q, v, v)), (q, v)
				assert rank <= height, (q, v)
				for w in q.ids:
					if w != v:
						assert star_height_open(q, v, w) == height, (q, v, w)


class TestCycleRank:
	def test_spot_values(self, k3, lk3, c5, loop_vertex):
		assert cycle_rank(make_family('path', 1)) == 0
		assert cycle_rank(Quiver.from_names(['1', '2', '3'], [('1', '2'), ('2', '3')])) == 0
		assert cycle_rank(loop_vertex) == 1
		assert cycle_rank(k3) == 2
		assert cycle_rank(c5) == 3
		assert cycle_rank(lk3) == 3

	def test_bound(self, c5):
		with pytest.raises(BoundExceededError):
			cycle_rank(c5, max_vertices=4)

from fractions import Fraction

import numpy as np
import pytest

from src.core.exceptions import NonInvertibleError, SingularBracketError, ValidationError
from src.models.quiver import Quiver
from src.models.rational import RationalFn
from src.models.walk import parse_walk
from src.models.weighted import WeightedQuiver
from src.services.enumeration import count_walks, enumerate_walks
from src.services.families import make_family
from src.services.pathsum import continued_fraction, dressed_weight, genfunc, walk_weight, weighted_path_sum
from src.services.resolvent import bethe_genfunc_value, bethe_root_series, block_resolvent, resolvent_block, resolvent_entry
from tests.conftest import all_pairs, random_quiver, random_weighted

EXAMPLE5_G11 = RationalFn.from_coefficients([1, -1, -1, -1], [1, -2, 0, -1, 2, 0, 1])
C5_DIAGONAL = RationalFn.from_coefficients([1, -1, -1], [1, -1, -3, 2])


def assert_matches_oracles(q, alpha, omega, terms=12):
	g = genfunc(q, alpha, omega)
	assert g == resolvent_entry(q, alpha, omega), (q, alpha, omega)
	assert g.series(terms) == count_walks(q, alpha, omega, terms), (q, alpha, omega)


# ── Scalar generating functions ────────────────────────────────


class TestGenfunc:
	def test_single_loop(self, loop_vertex):
		z = RationalFn.z()
		assert genfunc(loop_vertex, '1', '1') == (1 - z).inverse()
		assert resolvent_entry(loop_vertex, '1', '1') == (1 - z).inverse()

	def test_example5_closed_form(self, example5):
		g = genfunc(example5, '1', '1')
		assert g == EXAMPLE5_G11
		assert str(g) == '(1 - z - z^2 - z^3) / (1 - 2z - z^3 + 2z^4 + z^6)'
		assert g.series(6) == count_walks(example5, '1', '1', 6)

	def test_pentagon(self, c5):
		for v in c5.ids:
			assert genfunc(c5, v, v) == C5_DIAGONAL
		for d in (1, 2):
			assert genfunc(c5, '0', str(d)) == resolvent_entry(c5, '0', str(d))

	def test_path_end(self, p3):
		assert genfunc(p3, '1', '1') == RationalFn.from_coefficients([1, 0, -1], [1, 0, -2])

	def test_unreachable_is_zero(self, example3):
		assert genfunc(example3, '4', '1').is_zero
		assert resolvent_entry(example3, '4', '1').is_zero

	def test_polynomial_edge_weights(self, loop_vertex):
		half = RationalFn.from_coefficients([0, Fraction(1, 2)])
		g = genfunc(loop_vertex, '1', '1', {(0, 0): half})
		assert g.series(3) == [1, Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)]

	def test_zero_bracket(self, loop_vertex):
		with pytest.raises(NonInvertibleError, match='vertex 1'):
			genfunc(loop_vertex, '1', '1', {(0, 0): RationalFn.constant(1)})

	def test_suite_matches_oracles(self, acceptance_suite):
		for q in acceptance_suite + [make_family('path', 5)]:
			for alpha, omega in all_pairs(q):
				assert_matches_oracles(q, alpha, omega)

	@pytest.mark.slow
	def test_random_quivers_match_oracles(self, rng):
		for _ in range(20):
			q = random_quiver(rng, int(rng.integers(2, 7)))
			for alpha, omega in all_pairs(q):
				assert_matches_oracles(q, alpha, omega)


class TestDressedWeight:
	def test_isolated_vertex(self):
		q = Quiver.from_names(['1'], [])
		assert dressed_weight(q, '1').value == 1

	def test_k3_deleted_vertex(self, k3):
		z = RationalFn.z()
		dressed = dressed_weight(k3, '2', deleted=['1'])
		assert dressed.value == (1 - z**2).inverse()
		assert dressed.deleted == frozenset({0})

	def test_matrix_loop(self):
		q = Quiver.from_names(['1'], [('1', '1')])
		w = np.array([[0.2, 0.1], [0.0, 0.3]], dtype=complex)
		wq = WeightedQuiver(q, {0: 2}, {(0, 0): w})
		np.testing.assert_allclose(dressed_weight(wq, '1').value, np.linalg.inv(np.eye(2) - w))

	def test_vertex_in_its_own_deletion_set(self, k3):
		with pytest.raises(ValidationError):
			dressed_weight(k3, '1', deleted=['1'])


class TestContinuedFraction:
	def test_loop(self, loop_vertex):
		assert continued_fraction(loop_vertex, '1', '1') == '[1 - z[1,1]]^-1'

	def test_path(self, p3):
		assert continued_fraction(p3, '1', '1') == '[1 - z[2,1] [1 - z[3,2] z[2,3]]^-1 z[1,2]]^-1'

	def test_open(self):
		q = Quiver.from_names(['1', '2'], [('1', '2')])
		assert continued_fraction(q, '1', '2') == 'z[1,2]'
		assert continued_fraction(q, '2', '1') == '0'


# ── Matrix path-sums ───────────────────────────────────────────


class TestWeightedPathSum:
	def test_scalar_weights_evaluate_genfunc(self, example5):
		wq = WeightedQuiver.scalar(example5, 0.1)
		expected = genfunc(example5, '1', '1').evaluate(0.1)
		assert weighted_path_sum(wq, '1', '1')[0, 0] == pytest.approx(expected, rel=1e-12)

	def test_noncommuting_order(self):
		q = Quiver.from_names(['1', '2'], [('1', '2'), ('2', '1')])
		a = np.array([[0.1, 0.2], [0.0, 0.1]], dtype=complex)
		b = np.array([[0.1, 0.0], [0.3, 0.2]], dtype=complex)
		assert not np.allclose(a @ b, b @ a)
		wq = WeightedQuiver(q, {0: 2, 1: 2}, {(0, 1): a, (1, 0): b})
		result = weighted_path_sum(wq, '1', '2')
		expected = a @ np.linalg.inv(np.eye(2) - b @ a)
		np.testing.assert_allclose(result, expected, rtol=1e-12)
		assert not np.allclose(result, np.linalg.inv(np.eye(2) - b @ a) @ a)

	def test_shapes_follow_dims(self):
		q = Quiver.from_names(['1', '2'], [('1', '2')])
		wq = WeightedQuiver(q, {0: 3, 1: 2}, {(0, 1): np.ones((2, 3), dtype=complex)})
		assert weighted_path_sum(wq, '1', '2').shape == (2, 3)
		assert weighted_path_sum(wq, '2', '1').shape == (3, 2)
		assert not weighted_path_sum(wq, '2', '1').any()

	def test_singular_bracket(self, loop_vertex):
		wq = WeightedQuiver.scalar(loop_vertex, 1.0)
		with pytest.raises(SingularBracketError) as exc:
			weighted_path_sum(wq, '1', '1')
		assert exc.value.details['vertex'] == '1'

	def test_walk_weight(self, example5):
		wq = WeightedQuiver.scalar(example5, 0.5)
		assert walk_weight(wq, parse_walk(example5, '1231'))[0, 0] == pytest.approx(0.125)
		assert walk_weight(wq, parse_walk(example5, '1'))[0, 0] == 1

	def test_truncated_walk_sum_approaches_path_sum(self, rng):
		wq = random_weighted(rng, 3, norm=0.1)
		q = wq.quiver
		alpha, omega = q.ids[0], q.ids[-1]
		partial = sum(walk_weight(wq, w) for w in enumerate_walks(q, alpha, omega, 10))
		np.testing.assert_allclose(partial, weighted_path_sum(wq, alpha, omega), atol=1e-9)

	@pytest.mark.slow
	def test_random_matches_dense_resolvent(self, rng):
		noncommuting = 0
		for i in range(50):
			wq = random_weighted(rng, int(rng.integers(2, 6)), dim=2 if i % 2 == 0 else None)
			dense = block_resolvent(wq)
			offsets = wq.offsets()
			for alpha, omega in all_pairs(wq.quiver):
				r0, r1 = offsets[omega]
				c0, c1 = offsets[alpha]
				np.testing.assert_allclose(weighted_path_sum(wq, alpha, omega), dense[r0:r1, c0:c1], rtol=1e-10, atol=1e-12)
			square = [w for w in wq.weights.values() if w.shape == (2, 2)]
			if any(not np.allclose(x @ y, y @ x) for x in square for y in square):
				noncommuting += 1
		assert noncommuting >= 10

	def test_resolvent_block(self, example5):
		wq = WeightedQuiver.scalar(example5, 0.1)
		np.testing.assert_allclose(resolvent_block(wq, '1', '4'), weighted_path_sum(wq, '1', '4'), rtol=1e-12)


# ── Bethe lattice ──────────────────────────────────────────────


class TestBethe:
	def test_central_binomials(self):
		q = make_family('truncated_bethe', 2, 8)
		counts = count_walks(q, '0', '0', 12)
		assert counts[::2] == [1, 2, 6, 20, 70, 252, 924]
		assert counts == bethe_root_series(2, 12)

	def test_closed_form_value(self):
		assert bethe_genfunc_value(2, 0.1) == pytest.approx(1 / np.sqrt(1 - 4 * 0.01))
		with pytest.raises(ValidationError):
			bethe_genfunc_value(3, 0.1, kind='edge')

	@pytest.mark.slow
	def test_truncation_series(self):
		q = make_family('truncated_bethe', 3, 6)
		g = genfunc(q, '0', '0')
		assert g.series(12) == count_walks(q, '0', '0', 12)
		assert g.series(12) == bethe_root_series(3, 12)

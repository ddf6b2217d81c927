import itertools

import pytest

from src.core.exceptions import BoundExceededError, InvalidWalkError, ValidationError
from src.models.walk import ZERO, Walk, parse_walk
from src.services.enumeration import enumerate_walks, simple_cycles_at
from src.services.nesting import concat, divides, is_canonical_pair, is_irreducible, nest, nest_power, nest_splits, nontrivial_splits


@pytest.fixture
def w(lk3):
	return lambda text: parse_walk(lk3, text)


class TestNest:
	def test_inserts_at_last_appearance(self, w):
		assert nest(w('123'), w('33')) == w('1233')
		assert nest(w('131'), w('33')) == w('1331')
		assert nest(w('1223'), w('232')) == w('122323')

	def test_cycle_off_the_same_base(self, w):
		assert nest(w('121'), w('131')) == w('12131')

	def test_non_canonical_pair_is_zero(self, w):
		assert not is_canonical_pair(w('1231'), w('212'))
		assert nest(w('1231'), w('212')) is ZERO

	def test_unvisited_base_is_zero(self, w):
		assert nest(w('12'), w('33')) is ZERO

	def test_open_right_factor_is_zero(self, w):
		assert nest(w('123'), w('23')) is ZERO

	def test_trivial_walks_are_local_identities(self, lk3, w):
		one, two = Walk.trivial(lk3, '1'), Walk.trivial(lk3, '2')
		assert nest(w('131'), one) == w('131')
		assert nest(one, w('131')) == w('131')
		assert nest(two, w('131')) is ZERO
		assert nest(w('33'), one) is ZERO

	def test_zero_absorbs(self, w):
		assert nest(ZERO, w('11')) is ZERO
		assert nest(w('11'), ZERO) is ZERO
		assert concat(ZERO, w('11')) is ZERO

	def test_different_quivers_rejected(self, k3, w):
		with pytest.raises(InvalidWalkError):
			nest(parse_walk(k3, '121'), w('11'))


class TestPowersAndConcat:
	def test_powers(self, lk3, w):
		assert nest_power(w('11'), 3) == w('1111')
		assert nest_power(w('121'), 2) == w('12121')
		assert nest_power(w('11'), 0) == Walk.trivial(lk3, '1')

	def test_open_walk_powers(self, w):
		assert nest_power(w('12'), 1) == w('12')
		with pytest.raises(ValidationError):
			nest_power(w('12'), 2)

	def test_concat(self, w):
		assert concat(w('12'), w('23')) == w('123')
		assert concat(w('12'), w('13')) is ZERO


class TestDivisibility:
	def test_primes(self, w):
		assert is_irreducible(w('1'))
		assert is_irreducible(w('11'))
		assert is_irreducible(w('1231'))
		assert is_irreducible(w('123'))
		assert not is_irreducible(w('12312'))
		assert not is_irreducible(w('1331'))

	def test_splits_recompose(self, w):
		target = w('133112')
		splits = list(nest_splits(target))
		assert splits
		assert all(nest(x, y) == target for x, y in splits)

	def test_divides(self, w):
		assert divides(w('33'), w('1331'))
		assert divides(w('131'), w('1331'))
		assert not divides(w('11'), w('1331'))

	def test_trivial_divisors(self, lk3, w):
		one, two, three = (Walk.trivial(lk3, v) for v in '123')
		assert divides(one, w('12'))
		assert divides(two, w('12'))
		assert not divides(three, w('12'))
		assert divides(three, w('1331'))
		assert divides(one, one)
		assert not divides(one, two)

	def test_prime_has_only_trivial_divisors(self, w):
		assert not divides(w('121'), w('1231'))
		assert divides(w('1231'), w('1231'))

	def test_length_guard(self, w):
		with pytest.raises(BoundExceededError):
			divides(w('11'), w('111111'), max_length=3)


class TestAlgebra:
	def test_worked_products(self, lk4):
		def w(text):
			return parse_walk(lk4, text)

		assert nest(w('11'), w('131')) == w('1131')
		assert nest(w('131'), w('11')) == w('1311')
		assert nest(nest(w('12'), w('242')), w('11')) == w('11242')
		assert nest(w('12'), nest(w('242'), w('11'))) is ZERO

	def test_canonical_pairs(self, w):
		assert is_canonical_pair(w('123'), w('232'))
		assert not is_canonical_pair(w('1213'), w('121'))
		assert is_canonical_pair(w('121'), w('131'))

	def test_associative_over_cycles_off_one_vertex(self, k3):
		cycles = [c for c in enumerate_walks(k3, '1', '1', 4) if not c.is_trivial]
		for c1, c2, c3 in itertools.product(cycles, repeat=3):
			assert nest(nest(c1, c2), c3) == nest(c1, nest(c2, c3))
			assert nest(c1, c2) == concat(c1, c2)

	def test_right_distributive_cut(self, w):
		c = w('123')
		for inserted in (w('22'), w('232')):
			assert nest(c, inserted).vertices == c.vertices[:1] + inserted.vertices + c.vertices[2:]

	def test_irreducible_iff_no_nontrivial_split(self, k3):
		for alpha in k3.ids:
			for omega in k3.ids:
				for walk in enumerate_walks(k3, alpha, omega, 6):
					assert is_irreducible(walk) == (not any(nontrivial_splits(walk))), walk

	def test_non_simple_walk_is_not_prime(self, w):
		square = w('12121')
		assert divides(square, nest(w('121'), w('121')))
		assert not divides(square, w('121'))

	@pytest.mark.slow
	def test_simple_cycles_are_prime(self, k3):
		short = [x for a in k3.ids for b in k3.ids for x in enumerate_walks(k3, a, b, 3)]
		products = {(a, b, nest(a, b)) for a in short for b in short if not a.is_trivial and not b.is_trivial and nest(a, b)}
		primes = [c for v in k3.ids for c in simple_cycles_at(k3, v)]
		for p in primes:
			for a, b, m in products:
				if divides(p, m):
					assert divides(p, a) or divides(p, b), (p, a, b)

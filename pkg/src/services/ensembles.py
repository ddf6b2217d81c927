"""
Walk ensembles as nested Kleene-star expressions.

cycle_ensemble(Q, μ) is the union over non-trivial simple cycles (μ μ1 ... μ μ)
of the cycle with every internal vertex μi dressed by the star of the cycle
ensemble of μi on Q∖{μ, μ1, ..., μ(i-1)}; the last internal vertex is dressed
first. factorize_ensemble dresses simple paths the same way. expand() turns an
expression back into its walks up to a length bound.

Usage:
    from src.services.ensembles import factorize_ensemble, expand

    expr = factorize_ensemble(q, '1', '4')
    walks = expand(expr, 8)
"""

import logging
from collections import Counter
from typing import Dict, FrozenSet, Optional, Set, Tuple

from src.core.config import settings
from src.core.exceptions import CapExceededError, ValidationError
from src.models.quiver import Quiver, VertexKey
from src.models.walk import Walk, format_walk
from src.models.walk_expr import Atom, NestProd, Star, Trivial, Union, WalkExpr, is_trivial_only, shares_endpoints, union_of
from src.services.enumeration import NO_BLOCK, simple_cycles_at, simple_paths
from src.services.nesting import nest

logger = logging.getLogger(__name__)


class EnsembleBuilder:
	"""
	Builds dressed cycle ensembles on vertex-deleted subgraphs of one quiver.

	Sub-ensembles are memoized by (vertex, deletion set).
	"""

	def __init__(self, quiver: Quiver):
		self.quiver = quiver
		self._memo: Dict[Tuple[int, FrozenSet[int]], WalkExpr] = {}

	def _dress(self, skeleton: Walk, positions: range, deleted: FrozenSet[int]) -> WalkExpr:
		"""Nest the star ensemble of each listed position into the skeleton, last position first."""
		seq = skeleton.vertices
		expr: WalkExpr = Atom(skeleton)
		for i in reversed(positions):
			removed = deleted | frozenset(seq[:i])
			sub = self.cycles(seq[i], removed)
			if isinstance(sub, Trivial):
				continue
			expr = NestProd(expr, Star(sub, seq[i], self.quiver))
		return expr

	def cycles(self, mu: int, deleted: FrozenSet[int] = NO_BLOCK) -> WalkExpr:
		key = (mu, deleted)
		if key in self._memo:
			return self._memo[key]
		members = [self._dress(c, range(1, len(c.vertices) - 1), deleted) for c in simple_cycles_at(self.quiver, mu, deleted)]
		result = union_of(members) if members else Trivial(mu, self.quiver)
		self._memo[key] = result
		return result

	def paths(self, alpha: int, omega: int) -> WalkExpr:
		if alpha == omega:
			return Star(self.cycles(alpha), alpha, self.quiver)
		members = [self._dress(p, range(len(p.vertices)), NO_BLOCK) for p in simple_paths(self.quiver, alpha, omega)]
		logger.debug(f'ensemble {self.quiver.name(alpha)}->{self.quiver.name(omega)}: {len(members)} simple paths, {len(self._memo)} sub-ensembles')
		return union_of(members)


def cycle_ensemble(q: Quiver, mu: VertexKey) -> WalkExpr:
	return EnsembleBuilder(q).cycles(q.resolve(mu))


def factorize_ensemble(q: Quiver, alpha: VertexKey, omega: VertexKey) -> WalkExpr:
	return EnsembleBuilder(q).paths(q.resolve(alpha), q.resolve(omega))


# ── Expansion ──────────────────────────────────────────────────


def _check_cap(found: Counter, cap: int) -> None:
	if len(found) > cap:
		raise CapExceededError(cap, 'ensemble expansion')


def _expand(e: WalkExpr, max_length: int, cap: int) -> Counter:
	"""Walks of length ≤ L mapped to their number of derivations."""
	found: Counter = Counter()
	if isinstance(e, Atom):
		if e.walk.length <= max_length:
			found[e.walk] = 1
	elif isinstance(e, Trivial):
		found[e.walk] = 1
	elif isinstance(e, Union):
		if not shares_endpoints(e.members):
			raise ValidationError('union members must share head and tail', field='expr')
		for m in e.members:
			found.update(_expand(m, max_length, cap))
	elif isinstance(e, NestProd):
		base = _expand(e.base, max_length, cap)
		inserted = _expand(e.inserted, max_length, cap)
		for a, ca in base.items():
			for b, cb in inserted.items():
				if a.length + b.length > max_length:
					continue
				r = nest(a, b)
				if r:
					found[r] += ca * cb
	elif isinstance(e, Star):
		body = {c: n for c, n in _expand(e.body, max_length, cap).items() if c.length > 0}
		stray = next((c for c in body if not (c.is_cycle and c.head == e.base)), None)
		if stray is not None:
			raise ValidationError(f'star body walk {format_walk(stray)} is not a cycle off {e.quiver.name(e.base)}', field='expr')
		frontier: Counter = Counter({Walk((e.base,), e.quiver): 1})
		found.update(frontier)
		while frontier:
			nxt: Counter = Counter()
			for f, cf in frontier.items():
				for c, cc in body.items():
					if f.length + c.length > max_length:
						continue
					r = nest(f, c)
					if r:
						nxt[r] += cf * cc
			found.update(nxt)
			_check_cap(found, cap)
			frontier = nxt
	_check_cap(found, cap)
	return found


def expand_with_multiplicity(e: WalkExpr, max_length: int, cap: Optional[int] = None) -> Counter:
	return _expand(e, max_length, cap or settings.enumeration_cap)


def expand(e: WalkExpr, max_length: int, cap: Optional[int] = None) -> Set[Walk]:
	return set(expand_with_multiplicity(e, max_length, cap))


# ── Star height ────────────────────────────────────────────────


def star_height_of_expr(e: WalkExpr) -> int:
	if isinstance(e, (Atom, Trivial)):
		return 0
	if isinstance(e, Union):
		return max((star_height_of_expr(m) for m in e.members), default=0)
	if isinstance(e, NestProd):
		return max(star_height_of_expr(e.base), star_height_of_expr(e.inserted))
	if is_trivial_only(e.body):
		return 0
	return 1 + star_height_of_expr(e.body)

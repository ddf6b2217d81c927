"""
Prime-walk enumeration and brute-force walk oracles.

Simple paths and simple cycles come from a backtracking DFS with an on-path
visited set; successors are visited in ascending id order, so results are
lexicographic on vertex-id sequences. `blocked` removes vertices without
building a subgraph quiver.

Cost: the number of simple paths/cycles and of walks grows exponentially with
the graph size and the length bound; enumerate_walks is guarded by a cap.

Usage:
    from src.services.enumeration import simple_paths, count_walks

    paths = simple_paths(q, '1', '3')
    counts = count_walks(q, '1', '1', 12)
"""

import logging
from collections import deque
from typing import AbstractSet, Dict, List, Optional, Set

from src.core.config import settings
from src.core.exceptions import CapExceededError, UnknownVertexError, ValidationError
from src.models.quiver import Quiver, VertexKey
from src.models.walk import Walk

logger = logging.getLogger(__name__)

NO_BLOCK: frozenset = frozenset()


def simple_paths(q: Quiver, alpha: VertexKey, omega: VertexKey, blocked: AbstractSet[int] = NO_BLOCK) -> List[Walk]:
	"""All walks α → ω with pairwise-distinct vertices."""
	a, w = q.resolve(alpha), q.resolve(omega)
	if a == w:
		raise ValidationError(
			f'simple paths need distinct endpoints; the only path from {q.name(a)} to itself is the trivial walk ({q.name(a)})',
			field='omega',
		)
	if a in blocked:
		raise UnknownVertexError(q.name(a))
	if w in blocked:
		return []

	found: List[Walk] = []
	path = [a]
	on_path = {a}

	def _extend(u: int) -> None:
		for x in q.successors(u):
			if x in on_path or x in blocked:
				continue
			if x == w:
				found.append(Walk(tuple(path) + (x,), q))
				continue
			path.append(x)
			on_path.add(x)
			_extend(x)
			on_path.discard(x)
			path.pop()

	_extend(a)
	return found


def simple_cycles_at(q: Quiver, alpha: VertexKey, blocked: AbstractSet[int] = NO_BLOCK) -> List[Walk]:
	"""Non-trivial simple cycles off α: distinct internal vertices, none equal to α."""
	a = q.resolve(alpha)
	if a in blocked:
		raise UnknownVertexError(q.name(a))

	found: List[Walk] = []
	path = [a]
	on_path = {a}

	def _extend(u: int) -> None:
		for x in q.successors(u):
			if x == a:
				found.append(Walk(tuple(path) + (a,), q))
				continue
			if x in on_path or x in blocked:
				continue
			path.append(x)
			on_path.add(x)
			_extend(x)
			on_path.discard(x)
			path.pop()

	_extend(a)
	return found


def count_walks(q: Quiver, alpha: VertexKey, omega: VertexKey, max_length: int) -> List[int]:
	"""Entry n is the number of length-n walks α → ω, by exact repeated adjacency application."""
	if max_length < 0:
		raise ValidationError('length bound must be non-negative', field='max_length')
	a, w = q.resolve(alpha), q.resolve(omega)
	vec: Dict[int, int] = {v: 0 for v in q.ids}
	vec[a] = 1
	counts = [vec[w]]
	for _ in range(max_length):
		nxt = {v: 0 for v in q.ids}
		for tail, head in q.edges:
			if vec[tail]:
				nxt[head] += vec[tail]
		vec = nxt
		counts.append(vec[w])
	return counts


def _distance_to(q: Quiver, target: int) -> Dict[int, int]:
	dist = {target: 0}
	queue = deque([target])
	while queue:
		v = queue.popleft()
		for p in q.predecessors(v):
			if p not in dist:
				dist[p] = dist[v] + 1
				queue.append(p)
	return dist


def enumerate_walks(q: Quiver, alpha: VertexKey, omega: VertexKey, max_length: int, cap: Optional[int] = None) -> Set[Walk]:
	"""Every walk α → ω of length ≤ L, by exhaustive extension."""
	if max_length < 0:
		raise ValidationError('length bound must be non-negative', field='max_length')
	cap = cap or settings.enumeration_cap
	a, w = q.resolve(alpha), q.resolve(omega)
	dist = _distance_to(q, w)
	if a not in dist:
		return set()

	result: Set[Walk] = set()
	stack = [(a,)]
	while stack:
		seq = stack.pop()
		if seq[-1] == w:
			result.add(Walk(seq, q))
			if len(result) > cap:
				raise CapExceededError(cap, 'walk enumeration')
		remaining = max_length - (len(seq) - 1)
		if remaining == 0:
			continue
		for x in q.successors(seq[-1]):
			if dist.get(x, max_length + 1) <= remaining - 1:
				stack.append(seq + (x,))
	if len(result) > cap // 2:
		logger.info(f'walk enumeration produced {len(result)} walks, cap is {cap}')
	return result

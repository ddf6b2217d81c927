"""
Star height of factorized walk ensembles.

star_height_cycles / star_height_open follow the ensemble construction directly
and agree with star_height_of_expr on its output. On connected undirected graphs
star_height_graph gives the same number from the longest simple paths out of the
query vertex, plus one when such a path can end on a self-loop. cycle_rank is the
classical lower bound.

Longest simple paths and cycle rank are found by exhaustive search, exponential
in the vertex count, and are refused above `longest_path_max_vertices`.

Usage:
    from src.services.starheight import star_height_graph

    report = star_height_graph(make_family('complete_with_loops', 3), '1')
    report.height   # 3
"""

import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from src.core.config import settings
from src.core.exceptions import BoundExceededError, HypothesisError, ValidationError
from src.models.quiver import Quiver, VertexKey
from src.models.reports import LongestPathReport, PathEnd, StarHeightReport
from src.services.enumeration import NO_BLOCK, simple_cycles_at, simple_paths

logger = logging.getLogger(__name__)


class StarHeightEvaluator:
	"""Height recursion over vertex-deleted subgraphs, memoized by (vertex, deletion set)."""

	def __init__(self, quiver: Quiver):
		self.quiver = quiver
		self._memo: Dict[Tuple[int, FrozenSet[int]], int] = {}

	def _dressing(self, seq: Tuple[int, ...], positions: Iterable[int], deleted: FrozenSet[int]) -> int:
		return max((self.cycles(seq[i], deleted | frozenset(seq[:i])) for i in positions), default=0)

	def cycles(self, mu: int, deleted: FrozenSet[int] = NO_BLOCK) -> int:
		key = (mu, deleted)
		if key not in self._memo:
			found = simple_cycles_at(self.quiver, mu, deleted)
			if not found:
				self._memo[key] = 0
			else:
				self._memo[key] = 1 + max(self._dressing(c.vertices, range(1, len(c.vertices) - 1), deleted) for c in found)
		return self._memo[key]

	def open(self, alpha: int, omega: int) -> int:
		paths = simple_paths(self.quiver, alpha, omega)
		return max((self._dressing(p.vertices, range(len(p.vertices)), NO_BLOCK) for p in paths), default=0)


def star_height_cycles(q: Quiver, mu: VertexKey, deleted: Iterable[VertexKey] = ()) -> int:
	removed = frozenset(q.resolve(d) for d in deleted)
	return StarHeightEvaluator(q).cycles(q.resolve(mu), removed)


def star_height_open(q: Quiver, alpha: VertexKey, omega: VertexKey) -> int:
	a, w = q.resolve(alpha), q.resolve(omega)
	if a == w:
		raise ValidationError('open star height needs distinct endpoints; use star_height_cycles', field='omega')
	return StarHeightEvaluator(q).open(a, w)


# ── Longest simple paths ───────────────────────────────────────


def _check_size(q: Quiver, max_vertices: Optional[int], what: str) -> None:
	bound = max_vertices or settings.longest_path_max_vertices
	if len(q) > bound:
		raise BoundExceededError(bound, len(q), what)


def longest_simple_paths_from(q: Quiver, alpha: VertexKey, max_vertices: Optional[int] = None) -> LongestPathReport:
	_check_size(q, max_vertices, 'longest_simple_paths_from')
	a = q.resolve(alpha)
	best = 0
	ends: Dict[int, bool] = {}
	witness: List[int] = [a]
	path = [a]
	on_path = {a}

	def _visit() -> None:
		nonlocal best, ends, witness
		length = len(path) - 1
		end = path[-1]
		if length > best:
			best, ends, witness = length, {}, list(path)
		if length == best:
			ends[end] = q.has_loop(end)
			if q.has_loop(end) and not q.has_loop(witness[-1]):
				witness = list(path)
		for x in q.successors(end):
			if x in on_path:
				continue
			path.append(x)
			on_path.add(x)
			_visit()
			on_path.discard(x)
			path.pop()

	_visit()
	return LongestPathReport(
		start=q.name(a),
		length=best,
		ends=[PathEnd(vertex=q.name(v), has_loop=ends[v]) for v in sorted(ends)],
		witness=[q.name(v) for v in witness],
	)


def star_height_graph(q: Quiver, alpha: VertexKey, max_vertices: Optional[int] = None) -> StarHeightReport:
	"""Closed form for connected undirected graphs: ℓ, or ℓ + 1 when a longest path can end on a loop."""
	if not q.is_bidirectional():
		raise HypothesisError('closed-form star height needs an undirected graph (every edge present in both directions)')
	if not nx.is_connected(q.to_networkx().to_undirected()):
		raise HypothesisError('closed-form star height needs a connected graph')
	report = longest_simple_paths_from(q, alpha, max_vertices)
	on_loop = any(end.has_loop for end in report.ends)
	height = report.length + 1 if on_loop else report.length
	logger.debug(f'star height at {report.start}: longest path {report.length}, ends on loop: {on_loop}')
	return StarHeightReport(
		vertex=report.start,
		height=height,
		longest_path_length=report.length,
		witness=report.witness,
		witness_ends_on_loop=on_loop,
	)


# ── Cycle rank ─────────────────────────────────────────────────


def cycle_rank(q: Quiver, max_vertices: Optional[int] = None) -> int:
	"""Vertex-removal cycle rank; a self-loop counts as a cycle."""
	_check_size(q, max_vertices, 'cycle_rank')
	graph = q.to_networkx()
	memo: Dict[FrozenSet[int], int] = {}

	def _rank(nodes: FrozenSet[int]) -> int:
		if nodes in memo:
			return memo[nodes]
		sub = graph.subgraph(nodes)
		if nx.is_directed_acyclic_graph(sub):
			result = 0
		else:
			components = [frozenset(c) for c in nx.strongly_connected_components(sub)]
			if len(components) == 1:
				result = 1 + min(_rank(nodes - {v}) for v in nodes)
			else:
				result = max(_rank(c) for c in components)
		memo[nodes] = result
		return result

	return _rank(frozenset(graph.nodes))

"""
Standard graph families with canonical labelings.

complete / complete_with_loops / path are named 1..n; cycle is named 0..n-1
clockwise; truncated_bethe is named in BFS order from the root 0, the root
having n children and every other interior vertex n-1.
"""

import logging
from typing import Dict, Sequence, Tuple

import networkx as nx

from src.core.exceptions import ValidationError
from src.models.quiver import Quiver

logger = logging.getLogger(__name__)

FAMILIES = ('complete', 'complete_with_loops', 'cycle', 'path', 'truncated_bethe')


def _one_based(n: int) -> Dict[int, str]:
	return {i: str(i + 1) for i in range(n)}


def _bethe_tree(coordination: int, depth: int) -> nx.Graph:
	tree = nx.Graph()
	tree.add_node(0)
	frontier = [0]
	next_id = 1
	for _ in range(depth):
		new_frontier = []
		for v in frontier:
			children = coordination if v == 0 else coordination - 1
			for _ in range(children):
				tree.add_edge(v, next_id)
				new_frontier.append(next_id)
				next_id += 1
		frontier = new_frontier
	return tree


def make_family(kind: str, *params: int) -> Quiver:
	if kind not in FAMILIES:
		raise ValidationError(f'unknown family {kind!r}; expected one of {", ".join(FAMILIES)}', field='kind')

	if kind == 'truncated_bethe':
		if len(params) != 2:
			raise ValidationError('truncated_bethe takes coordination n and depth d', field='params')
		n, d = params
		if n < 2 or d < 0:
			raise ValidationError(f'truncated_bethe needs n >= 2 and d >= 0, got n={n}, d={d}', field='params')
		q = Quiver.from_networkx(_bethe_tree(n, d))
		logger.debug(f'truncated_bethe({n}, {d}): {len(q)} vertices')
		return q

	if len(params) != 1:
		raise ValidationError(f'{kind} takes a single size parameter', field='params')
	(n,) = params
	if n < 1:
		raise ValidationError(f'{kind} needs size >= 1, got {n}', field='params')

	if kind == 'cycle':
		if n < 3:
			raise ValidationError(f'cycle needs n >= 3, got {n}', field='params')
		return Quiver.from_networkx(nx.cycle_graph(n))
	if kind == 'path':
		return Quiver.from_networkx(nx.path_graph(n), _one_based(n))

	base = Quiver.from_networkx(nx.complete_graph(n), _one_based(n))
	if kind == 'complete':
		return base
	loops = [(v, v) for v in base.ids]
	return Quiver(base.vertices, sorted(base.edges) + loops)


def parse_family_spec(spec: str) -> Tuple[str, Sequence[int]]:
	"""`cycle:5` -> ('cycle', [5]); `truncated_bethe:3,2` -> ('truncated_bethe', [3, 2])."""
	kind, _, args = spec.partition(':')
	try:
		params = [int(x) for x in args.split(',') if x.strip()]
	except ValueError as e:
		raise ValidationError(f'family parameters must be integers: {spec!r}', field='family') from e
	return kind.strip(), params


def family_from_spec(spec: str) -> Quiver:
	kind, params = parse_family_spec(spec)
	return make_family(kind, *params)

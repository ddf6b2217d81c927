"""
Shared fixtures: standard families, the worked-example quivers and seeded random quivers.
"""

from typing import List, Optional, Tuple

import networkx as nx
import numpy as np
import pytest

from src.models.quiver import Quiver
from src.models.weighted import WeightedQuiver
from src.services.families import make_family

EXAMPLE3_EDGES = [('1', '2', 'a'), ('2', '3', 'c'), ('3', '3', 'c'), ('3', '2', 'b'), ('3', '1', 'a'), ('3', '4', 'd')]
EXAMPLE5_EDGES = [('1', '1'), ('1', '2'), ('2', '3'), ('3', '1'), ('2', '4'), ('4', '2'), ('4', '4'), ('4', '5'), ('5', '6'), ('6', '4')]


def build_example3() -> Quiver:
	return Quiver.from_names(
		['1', '2', '3', '4'],
		[(t, h) for t, h, _ in EXAMPLE3_EDGES],
		{(t, h): label for t, h, label in EXAMPLE3_EDGES},
	)


def build_example5() -> Quiver:
	return Quiver.from_names(['1', '2', '3', '4', '5', '6'], EXAMPLE5_EDGES)


def random_quiver(rng: np.random.Generator, n: int, p: float = 0.35, loop_p: float = 0.3) -> Quiver:
	"""Weakly connected random quiver on n vertices named 1..n."""
	names = [str(i + 1) for i in range(n)]
	edges = set()
	order = rng.permutation(n)
	for a, b in zip(order, order[1:]):
		edges.add((int(a), int(b)) if rng.random() < 0.5 else (int(b), int(a)))
	for t in range(n):
		for h in range(n):
			chance = loop_p if t == h else p
			if rng.random() < chance:
				edges.add((t, h))
	return Quiver.from_names(names, [(names[t], names[h]) for t, h in sorted(edges)])


def random_undirected(rng: np.random.Generator, n: int, p: float = 0.4, loop_p: float = 0.25) -> Quiver:
	"""Connected undirected graph as a bidirectional quiver, with random self-loops."""
	while True:
		graph = nx.gnp_random_graph(n, p, seed=int(rng.integers(1 << 31)))
		if nx.is_connected(graph):
			break
	for v in range(n):
		if rng.random() < loop_p:
			graph.add_edge(v, v)
	return Quiver.from_networkx(graph, {v: str(v + 1) for v in range(n)})


def random_weighted(rng: np.random.Generator, n: int, max_dim: int = 3, norm: float = 0.4, dim: Optional[int] = None) -> WeightedQuiver:
	"""Random complex block weights scaled so the block adjacency matrix has spectral norm `norm`; `dim` fixes every block size."""
	q = random_quiver(rng, n)
	dims = {v: dim or int(rng.integers(1, max_dim + 1)) for v in q.ids}
	weights = {}
	for tail, head in q.edges:
		shape = (dims[head], dims[tail])
		weights[(tail, head)] = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
	wq = WeightedQuiver(q, dims, weights)
	scale = norm / np.linalg.norm(wq.block_matrix(), 2)
	return WeightedQuiver(q, dims, {e: w * scale for e, w in weights.items()})


def all_pairs(q: Quiver) -> List[Tuple[int, int]]:
	return [(a, w) for a in q.ids for w in q.ids]


@pytest.fixture
def k3() -> Quiver:
	return make_family('complete', 3)


@pytest.fixture
def lk3() -> Quiver:
	return make_family('complete_with_loops', 3)


@pytest.fixture
def lk4() -> Quiver:
	return make_family('complete_with_loops', 4)


@pytest.fixture
def c5() -> Quiver:
	return make_family('cycle', 5)


@pytest.fixture
def p3() -> Quiver:
	return make_family('path', 3)


@pytest.fixture
def p4() -> Quiver:
	return make_family('path', 4)


@pytest.fixture
def example3() -> Quiver:
	return build_example3()


@pytest.fixture
def example5() -> Quiver:
	return build_example5()


@pytest.fixture
def loop_vertex() -> Quiver:
	return Quiver.from_names(['1'], [('1', '1')])


@pytest.fixture
def rng() -> np.random.Generator:
	return np.random.default_rng(20240611)


@pytest.fixture
def acceptance_suite() -> List[Quiver]:
	return [
		make_family('complete', 3),
		make_family('complete_with_loops', 3),
		make_family('cycle', 5),
		make_family('path', 4),
		build_example3(),
		build_example5(),
	]

"""
Quiver: finite directed graph with at most one edge per ordered vertex pair.

Vertices carry a dense integer id and a display name. Vertex deletion keeps the
surviving ids unchanged, so walks and memo keys computed on a subgraph stay
comparable with the parent quiver.

Usage:
    from src.models.quiver import Quiver

    q = Quiver.from_names(['1', '2', '3'], [('1', '2'), ('2', '3'), ('3', '1')])
    sub = q.delete_vertices({'1'})
"""

from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

from src.core.exceptions import UnknownVertexError, ValidationError

Edge = Tuple[int, int]
VertexKey = Union[int, str, 'VertexId']


@dataclass(frozen=True, order=True)
class VertexId:
	id: int
	name: str

	def __str__(self) -> str:
		return self.name


class Quiver:
	"""
	Immutable quiver. Edges are (tail, head) pairs of vertex ids; self-loops allowed.
	"""

	__slots__ = ('_vertices', '_by_id', '_by_name', '_edges', '_labels', '_succ', '_pred')

	def __init__(
		self,
		vertices: Iterable[VertexId],
		edges: Iterable[Edge],
		labels: Optional[Mapping[Edge, str]] = None,
	):
		ordered = tuple(sorted(vertices))
		by_id: Dict[int, VertexId] = {}
		by_name: Dict[str, VertexId] = {}
		for v in ordered:
			if v.id in by_id:
				raise ValidationError(f'duplicate vertex id {v.id}', field='vertices')
			if v.name in by_name:
				raise ValidationError(f'duplicate vertex name {v.name!r}', field='vertices')
			by_id[v.id] = v
			by_name[v.name] = v

		edge_set = set()
		for tail, head in edges:
			for end in (tail, head):
				if end not in by_id:
					raise UnknownVertexError(end)
			if (tail, head) in edge_set:
				raise ValidationError(f'duplicate edge ({by_id[tail]},{by_id[head]})', field='edges')
			edge_set.add((tail, head))

		label_map = dict(labels or {})
		for edge in label_map:
			if edge not in edge_set:
				raise ValidationError(f'label on missing edge ({edge[0]},{edge[1]})', field='labels')

		succ: Dict[int, list] = {v.id: [] for v in ordered}
		pred: Dict[int, list] = {v.id: [] for v in ordered}
		for tail, head in sorted(edge_set):
			succ[tail].append(head)
			pred[head].append(tail)

		self._vertices = ordered
		self._by_id = MappingProxyType(by_id)
		self._by_name = MappingProxyType(by_name)
		self._edges = frozenset(edge_set)
		self._labels = MappingProxyType(label_map)
		self._succ = MappingProxyType({k: tuple(v) for k, v in succ.items()})
		self._pred = MappingProxyType({k: tuple(v) for k, v in pred.items()})

	# ─── Construction ─────────────────────────────────────────

	@classmethod
	def from_names(
		cls,
		names: Sequence[str],
		edges: Iterable[Tuple[str, str]],
		labels: Optional[Mapping[Tuple[str, str], str]] = None,
	) -> 'Quiver':
		"""Build a quiver from vertex names; ids follow the order of `names`."""
		vertices = [VertexId(i, str(name)) for i, name in enumerate(names)]
		index = {v.name: v.id for v in vertices}

		def _id(name) -> int:
			key = str(name)
			if key not in index:
				raise UnknownVertexError(key)
			return index[key]

		edge_ids = [(_id(t), _id(h)) for t, h in edges]
		label_ids = {(_id(t), _id(h)): sym for (t, h), sym in (labels or {}).items()}
		return cls(vertices, edge_ids, label_ids)

	@classmethod
	def from_networkx(cls, graph: nx.Graph, names: Optional[Mapping[int, str]] = None) -> 'Quiver':
		"""Undirected graphs become bidirectional quivers; nodes must be integer ids."""
		names = names or {}
		vertices = [VertexId(int(n), names.get(n, str(n))) for n in graph.nodes]
		edges = set()
		for u, v in graph.edges:
			edges.add((int(u), int(v)))
			if not graph.is_directed():
				edges.add((int(v), int(u)))
		return cls(vertices, sorted(edges))

	# ─── Accessors ────────────────────────────────────────────

	@property
	def vertices(self) -> Tuple[VertexId, ...]:
		return self._vertices

	@property
	def ids(self) -> Tuple[int, ...]:
		return tuple(v.id for v in self._vertices)

	@property
	def edges(self) -> FrozenSet[Edge]:
		return self._edges

	@property
	def labels(self) -> Mapping[Edge, str]:
		return self._labels

	def __len__(self) -> int:
		return len(self._vertices)

	def __contains__(self, key) -> bool:
		try:
			self.resolve(key)
		except UnknownVertexError:
			return False
		return True

	def resolve(self, key: VertexKey) -> int:
		"""Map a VertexId, vertex name or raw id to the vertex id."""
		if isinstance(key, VertexId):
			if self._by_id.get(key.id) != key:
				raise UnknownVertexError(key.name)
			return key.id
		if isinstance(key, str):
			if key in self._by_name:
				return self._by_name[key].id
			raise UnknownVertexError(key)
		if isinstance(key, int) and key in self._by_id:
			return key
		raise UnknownVertexError(key)

	def vertex(self, key: VertexKey) -> VertexId:
		return self._by_id[self.resolve(key)]

	def name(self, vid: int) -> str:
		return self._by_id[vid].name

	def successors(self, vid: int) -> Tuple[int, ...]:
		return self._succ[vid]

	def predecessors(self, vid: int) -> Tuple[int, ...]:
		return self._pred[vid]

	def has_edge(self, tail: int, head: int) -> bool:
		return (tail, head) in self._edges

	def has_loop(self, vid: int) -> bool:
		return (vid, vid) in self._edges

	def label(self, edge: Edge) -> Optional[str]:
		return self._labels.get(edge)

	@property
	def single_char_names(self) -> bool:
		return all(len(v.name) == 1 for v in self._vertices)

	def is_bidirectional(self) -> bool:
		return all((h, t) in self._edges for t, h in self._edges)

	# ─── Subgraphs ────────────────────────────────────────────

	def delete_vertices(self, keys: Iterable[VertexKey]) -> 'Quiver':
		"""Quiver on vertices∖S keeping only edges with both endpoints outside S."""
		removed = {self.resolve(k) for k in keys}
		if not removed:
			return self
		vertices = [v for v in self._vertices if v.id not in removed]
		edges = [(t, h) for t, h in self._edges if t not in removed and h not in removed]
		labels = {e: s for e, s in self._labels.items() if e[0] not in removed and e[1] not in removed}
		return Quiver(vertices, edges, labels)

	def to_networkx(self) -> nx.DiGraph:
		graph = nx.DiGraph()
		graph.add_nodes_from(self.ids)
		graph.add_edges_from(sorted(self._edges))
		return graph

	# ─── Dunder ───────────────────────────────────────────────

	def __eq__(self, other) -> bool:
		if not isinstance(other, Quiver):
			return NotImplemented
		return self._vertices == other._vertices and self._edges == other._edges and dict(self._labels) == dict(other._labels)

	def __hash__(self) -> int:
		return hash((self._vertices, self._edges))

	def __repr__(self) -> str:
		return f'Quiver(vertices={len(self._vertices)}, edges={len(self._edges)})'


def delete_vertices(q: Quiver, keys: Iterable[VertexKey]) -> Quiver:
	return q.delete_vertices(keys)

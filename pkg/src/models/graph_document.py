"""
Graph file document: the on-disk form of a quiver consumed by the CLI.

JSON (`.json`) or YAML (`.yaml`/`.yml`), one graph per file:

    vertices: ["1", "2", "3"]
    edges: [["1", "2"], ["2", "3"], ["3", "1"]]
    labels: {"1,2": "a"}                    # optional
    weights: {"1,2": [[0.1, [0, 0.2]]]}     # optional, matrix rows; [re, im] for complex entries
    dims: {"1": 1}                          # optional, defaults to 1
    polynomials: {"1,2": [0, 1]}            # optional scalar edge weights as coefficient lists

Usage:
    from src.models.graph_document import load_graph_document

    doc = load_graph_document('example5.json')
    q = doc.to_quiver()
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Tuple, Union

import numpy as np
import orjson
import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError as PydanticValidationError, field_validator

from src.core.exceptions import GraphFileError, ValidationError
from src.models.quiver import Edge, Quiver
from src.models.rational import RationalFn
from src.models.weighted import WeightedQuiver

logger = logging.getLogger(__name__)

Entry = Union[float, int, List[float]]


def _edge_key(key: str) -> Tuple[str, str]:
	parts = [p.strip() for p in str(key).split(',')]
	if len(parts) != 2 or not all(parts):
		raise ValueError(f'edge key {key!r} must look like "tail,head"')
	return parts[0], parts[1]


class GraphDocument(BaseModel):
	"""
	Validated graph file contents.
	"""

	vertices: List[str] = Field(..., description='Vertex names in id order')
	edges: List[Tuple[str, str]] = Field(default_factory=list, description='Directed edges as [tail, head] names')
	labels: Dict[str, str] = Field(default_factory=dict, description='"tail,head" -> symbol')
	weights: Dict[str, List[List[Entry]]] = Field(default_factory=dict, description='"tail,head" -> matrix rows')
	dims: Dict[str, int] = Field(default_factory=dict, description='vertex name -> block dimension')
	polynomials: Dict[str, List[int]] = Field(default_factory=dict, description='"tail,head" -> coefficient list in z')

	model_config = ConfigDict(extra='forbid')

	@field_validator('vertices', mode='before')
	@classmethod
	def stringify_vertices(cls, v: Any) -> Any:
		return [str(x) for x in v] if isinstance(v, list) else v

	@field_validator('edges', mode='before')
	@classmethod
	def stringify_edges(cls, v: Any) -> Any:
		if isinstance(v, list):
			return [[str(x) for x in pair] if isinstance(pair, (list, tuple)) else pair for pair in v]
		return v

	@field_validator('dims', mode='before')
	@classmethod
	def stringify_dim_keys(cls, v: Any) -> Any:
		return {str(k): d for k, d in v.items()} if isinstance(v, dict) else v

	@field_validator('labels', 'weights', 'polynomials')
	@classmethod
	def check_edge_keys(cls, v: Dict[str, Any]) -> Dict[str, Any]:
		for key in v:
			_edge_key(key)
		return v

	# ─── Conversion ───────────────────────────────────────────

	def to_quiver(self) -> Quiver:
		labels = {_edge_key(k): sym for k, sym in self.labels.items()}
		return Quiver.from_names(self.vertices, self.edges, labels)

	def _edge_ids(self, q: Quiver, key: str) -> Edge:
		tail, head = _edge_key(key)
		edge = (q.resolve(tail), q.resolve(head))
		if edge not in q.edges:
			raise ValidationError(f'edge ({tail},{head}) is not in the graph', field='weights')
		return edge

	def to_weighted(self, q: Quiver) -> WeightedQuiver:
		dims = {q.resolve(name): d for name, d in self.dims.items()}
		for v in q.ids:
			dims.setdefault(v, 1)
		weights: Dict[Edge, np.ndarray] = {}
		for key, rows in self.weights.items():
			weights[self._edge_ids(q, key)] = _to_matrix(rows)
		return WeightedQuiver(q, dims, weights)

	def edge_polynomials(self, q: Quiver) -> Dict[Edge, RationalFn]:
		return {self._edge_ids(q, key): RationalFn.from_coefficients(coeffs) for key, coeffs in self.polynomials.items()}

	@classmethod
	def from_quiver(cls, q: Quiver) -> 'GraphDocument':
		edges = sorted(q.edges)
		return cls(
			vertices=[v.name for v in q.vertices],
			edges=[(q.name(t), q.name(h)) for t, h in edges],
			labels={f'{q.name(t)},{q.name(h)}': sym for (t, h), sym in sorted(q.labels.items())},
		)

	def dump(self, fmt: str = 'json') -> str:
		payload = self.model_dump(exclude_defaults=True)
		payload['edges'] = [list(e) for e in self.edges]
		if fmt == 'yaml':
			return yaml.safe_dump(payload, sort_keys=False, default_flow_style=None)
		return orjson.dumps(payload, option=orjson.OPT_INDENT_2).decode('utf-8')


def _to_matrix(rows: List[List[Entry]]) -> np.ndarray:
	def _entry(x: Entry) -> complex:
		if isinstance(x, list):
			if len(x) != 2:
				raise ValidationError(f'complex entry {x!r} must be a [re, im] pair', field='weights')
			return complex(x[0], x[1])
		return complex(x)

	widths = {len(r) for r in rows}
	if len(widths) != 1:
		raise ValidationError('weight matrix rows have different lengths', field='weights')
	return np.array([[_entry(x) for x in r] for r in rows], dtype=complex)


# ── Loading ────────────────────────────────────────────────────


def _byte_offset(text: str, char_pos: int) -> int:
	return len(text[:char_pos].encode('utf-8'))


def parse_graph_text(text: str, fmt: str = 'json', source: str = '<string>') -> GraphDocument:
	if fmt == 'yaml':
		try:
			data = yaml.safe_load(text)
		except yaml.YAMLError as e:
			mark = getattr(e, 'problem_mark', None)
			offset = _byte_offset(text, mark.index) if mark is not None else None
			raise GraphFileError(f'{source}: invalid YAML ({getattr(e, "problem", e)})', offset=offset, path=source) from e
	else:
		try:
			data = orjson.loads(text)
		except orjson.JSONDecodeError as e:
			raise GraphFileError(f'{source}: invalid JSON ({e.msg})', offset=_byte_offset(text, e.pos), path=source) from e

	if not isinstance(data, dict):
		raise GraphFileError(f'{source}: top level must be a mapping', offset=0, path=source)
	try:
		return GraphDocument.model_validate(data)
	except PydanticValidationError as e:
		first = e.errors()[0]
		where = '.'.join(str(p) for p in first.get('loc', ()))
		raise GraphFileError(f'{source}: {where}: {first.get("msg")}', path=source) from e


def load_graph_document(path: Union[str, Path]) -> GraphDocument:
	path = Path(path)
	try:
		raw = path.read_bytes()
	except OSError as e:
		raise GraphFileError(f'cannot read {path}: {e.strerror}', path=str(path)) from e
	try:
		text = raw.decode('utf-8')
	except UnicodeDecodeError as e:
		raise GraphFileError(f'{path}: not valid UTF-8', offset=e.start, path=str(path)) from e

	fmt = 'yaml' if path.suffix.lower() in ('.yaml', '.yml') else 'json'
	doc = parse_graph_text(text, fmt=fmt, source=str(path))
	logger.debug(f'Loaded graph {path}: {len(doc.vertices)} vertices, {len(doc.edges)} edges')
	return doc

"""
Walk value type and its text syntax.

A walk is a non-empty vertex sequence along quiver edges. Failed nestings return
the distinguished ZERO value rather than raising.

Usage:
    from src.models.walk import Walk, ZERO, parse_walk, format_walk

    w = parse_walk(q, '(1 3 3 1)')
    print(format_walk(w))   # 1331
"""

from dataclasses import dataclass, field
from typing import Iterable, Tuple, Union

from src.core.exceptions import InvalidWalkError, ParseError, UnknownVertexError
from src.models.quiver import Quiver, VertexKey


class _Zero:
	"""Absorbing element of the nesting product."""

	_instance = None

	def __new__(cls):
		if cls._instance is None:
			cls._instance = super().__new__(cls)
		return cls._instance

	def __bool__(self) -> bool:
		return False

	def __repr__(self) -> str:
		return 'ZERO'

	def __str__(self) -> str:
		return '0'


ZERO = _Zero()


@dataclass(frozen=True)
class Walk:
	vertices: Tuple[int, ...]
	quiver: Quiver = field(compare=False, hash=False, repr=False)

	@classmethod
	def from_vertices(cls, q: Quiver, keys: Iterable[VertexKey]) -> 'Walk':
		"""Validated constructor: every consecutive pair must be an edge of `q`."""
		seq = tuple(q.resolve(k) for k in keys)
		if not seq:
			raise InvalidWalkError('a walk needs at least one vertex')
		for tail, head in zip(seq, seq[1:]):
			if not q.has_edge(tail, head):
				raise InvalidWalkError(f'no edge ({q.name(tail)},{q.name(head)}) in quiver', edge=(q.name(tail), q.name(head)))
		return cls(seq, q)

	@classmethod
	def trivial(cls, q: Quiver, key: VertexKey) -> 'Walk':
		return cls((q.resolve(key),), q)

	@property
	def length(self) -> int:
		return len(self.vertices) - 1

	@property
	def head(self) -> int:
		return self.vertices[0]

	@property
	def tail(self) -> int:
		return self.vertices[-1]

	@property
	def is_trivial(self) -> bool:
		return len(self.vertices) == 1

	@property
	def is_cycle(self) -> bool:
		return len(self.vertices) >= 2 and self.vertices[0] == self.vertices[-1]

	@property
	def is_open(self) -> bool:
		return self.vertices[0] != self.vertices[-1]

	def visits(self, vid: int) -> bool:
		return vid in self.vertices

	def edges(self) -> Tuple[Tuple[int, int], ...]:
		return tuple(zip(self.vertices, self.vertices[1:]))

	def names(self) -> Tuple[str, ...]:
		return tuple(self.quiver.name(v) for v in self.vertices)

	def __len__(self) -> int:
		return len(self.vertices)

	def __lt__(self, other: 'Walk') -> bool:
		return self.vertices < other.vertices

	def __str__(self) -> str:
		return format_walk(self)


NestResult = Union[Walk, _Zero]


# ── Text syntax ────────────────────────────────────────────────


def format_walk(w: Walk, compact: bool = True) -> str:
	"""`1331` when every vertex name is one character, else `(1 3 3 1)`."""
	names = w.names()
	if compact and w.quiver.single_char_names:
		return ''.join(names)
	return '(' + ' '.join(names) + ')'


def parse_walk(q: Quiver, text: str) -> Walk:
	"""Parse `(a b c)` or the single-token shorthand `abc` (single-character names only)."""
	raw = text.strip()
	if raw.startswith('('):
		if not raw.endswith(')'):
			raise ParseError(f'unterminated walk {raw!r}', offset=len(raw))
		raw = raw[1:-1].strip()
	tokens = raw.split()
	if not tokens:
		raise ParseError('empty walk', offset=0)
	if len(tokens) == 1:
		token = tokens[0]
		if token in q:
			return Walk.from_vertices(q, [token])
		if not q.single_char_names:
			raise UnknownVertexError(token)
		tokens = list(token)
	return Walk.from_vertices(q, tokens)

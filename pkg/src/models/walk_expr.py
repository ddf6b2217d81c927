from dataclasses import dataclass, field
from typing import Tuple, Union as TypingUnion

from src.models.quiver import Quiver
from src.models.walk import Walk


@dataclass(frozen=True)
class Atom:
	walk: Walk


@dataclass(frozen=True)
class Trivial:
	vertex: int
	quiver: Quiver = field(compare=False, hash=False, repr=False)

	@property
	def walk(self) -> Walk:
		return Walk((self.vertex,), self.quiver)


@dataclass(frozen=True)
class Union:
	members: Tuple['WalkExpr', ...]


@dataclass(frozen=True)
class NestProd:
	base: 'WalkExpr'
	inserted: 'WalkExpr'


@dataclass(frozen=True)
class Star:
	"""Kleene star of a set of cycles off `base`."""

	body: 'WalkExpr'
	base: int
	quiver: Quiver = field(compare=False, hash=False, repr=False)


WalkExpr = TypingUnion[Atom, Trivial, Union, NestProd, Star]


def union_of(members) -> WalkExpr:
	"""Union with single members unwrapped."""
	members = tuple(members)
	if len(members) == 1:
		return members[0]
	return Union(members)


def head_vertex(e: WalkExpr) -> int:
	"""Start vertex shared by every walk the expression denotes."""
	if isinstance(e, Atom):
		return e.walk.head
	if isinstance(e, Trivial):
		return e.vertex
	if isinstance(e, Star):
		return e.base
	if isinstance(e, NestProd):
		return head_vertex(e.base)
	if not e.members:
		raise ValueError('empty union has no head vertex')
	return head_vertex(e.members[0])


def is_trivial_only(e: WalkExpr) -> bool:
	if isinstance(e, Trivial):
		return True
	if isinstance(e, Union):
		return bool(e.members) and all(is_trivial_only(m) for m in e.members)
	return False


def tail_vertex(e: WalkExpr) -> int:
	"""End vertex shared by every walk the expression denotes."""
	if isinstance(e, Atom):
		return e.walk.tail
	if isinstance(e, Trivial):
		return e.vertex
	if isinstance(e, Star):
		return e.base
	if isinstance(e, NestProd):
		return tail_vertex(e.base)
	if not e.members:
		raise ValueError('empty union has no tail vertex')
	return tail_vertex(e.members[0])


def shares_endpoints(members) -> bool:
	"""True iff every member starts at one vertex and ends at one vertex."""
	ends = {(head_vertex(m), tail_vertex(m)) for m in members if not (isinstance(m, Union) and not m.members)}
	return len(ends) <= 1

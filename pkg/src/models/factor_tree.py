from dataclasses import dataclass
from typing import Iterator, Union

from src.models.walk import Walk


@dataclass(frozen=True)
class Leaf:
	walk: Walk


@dataclass(frozen=True)
class Nest:
	left: 'FactorTree'
	right: 'FactorTree'


FactorTree = Union[Leaf, Nest]


def leaves(t: FactorTree) -> Iterator[Walk]:
	"""Leaf walks in left-to-right order."""
	if isinstance(t, Leaf):
		yield t.walk
		return
	yield from leaves(t.left)
	yield from leaves(t.right)


def chain(*trees: FactorTree) -> FactorTree:
	"""Left-associated nesting ((t1 ⊙ t2) ⊙ ...) ⊙ tk."""
	out = trees[0]
	for t in trees[1:]:
		out = Nest(out, t)
	return out

"""
Nesting-product algebra on walks.

nest(a, b) inserts the cycle b (off β) at the last appearance of β in a, when
(a, b) is a canonical pair; otherwise the result is ZERO. Trivial walks act as
local identities on both sides.

Usage:
    from src.services.nesting import nest, nest_power, divides

    nest(parse_walk(q, '11'), parse_walk(q, '131'))   # 1131
"""

import logging
from typing import Iterator, Optional, Tuple

from src.core.config import settings
from src.core.exceptions import BoundExceededError, InvalidWalkError, ValidationError
from src.models.walk import ZERO, NestResult, Walk

logger = logging.getLogger(__name__)


def _same_quiver(a: Walk, b: Walk) -> None:
	if a.quiver is not b.quiver and a.quiver != b.quiver:
		raise InvalidWalkError('walks belong to different quivers')


def _last_index(seq: Tuple[int, ...], v: int) -> int:
	return len(seq) - 1 - seq[::-1].index(v)


def is_canonical_pair(a: Walk, b: Walk) -> bool:
	_same_quiver(a, b)
	if not b.is_cycle:
		return False
	beta = b.head
	if not a.visits(beta):
		return False
	if a.is_cycle and a.head == beta:
		return True
	j = _last_index(a.vertices, beta)
	before = set(a.vertices[:j]) - {beta}
	return before.isdisjoint(b.vertices)


def nest(a: NestResult, b: NestResult) -> NestResult:
	if a is ZERO or b is ZERO:
		return ZERO
	_same_quiver(a, b)
	if b.is_trivial:
		return a if a.visits(b.head) else ZERO
	if a.is_trivial:
		return b if b.visits(a.head) else ZERO
	if not is_canonical_pair(a, b):
		return ZERO
	j = _last_index(a.vertices, b.head)
	return Walk(a.vertices[:j] + b.vertices + a.vertices[j + 1 :], a.quiver)


def concat(a: NestResult, b: NestResult) -> NestResult:
	if a is ZERO or b is ZERO:
		return ZERO
	_same_quiver(a, b)
	if a.tail != b.head:
		return ZERO
	return Walk(a.vertices + b.vertices[1:], a.quiver)


def nest_power(c: Walk, p: int) -> Walk:
	if p < 0:
		raise ValidationError('nesting power must be non-negative', field='p')
	if c.is_open:
		if p != 1:
			raise ValidationError('only cycles have nesting powers other than 1', field='c')
		return c
	result: NestResult = Walk((c.head,), c.quiver)
	for _ in range(p):
		result = nest(result, c)
	return result


# ── Splits and divisibility ────────────────────────────────────


def nest_splits(w: Walk) -> Iterator[Tuple[Walk, Walk]]:
	"""Every (x, y) with y a non-trivial cycle, x ⊙ y = w."""
	seq = w.vertices
	n = len(seq)
	for i in range(n):
		for k in range(i + 1, n):
			if seq[i] != seq[k]:
				continue
			x = Walk(seq[: i + 1] + seq[k + 1 :], w.quiver)
			y = Walk(seq[i : k + 1], w.quiver)
			if nest(x, y) == w:
				yield x, y


def nontrivial_splits(w: Walk) -> Iterator[Tuple[Walk, Walk]]:
	"""Splits with both factors non-trivial."""
	for x, y in nest_splits(w):
		if not x.is_trivial:
			yield x, y


def _left_factor_is(m: Walk, d: Walk) -> bool:
	"""m = d ⊙ b for some walk b (trivial b allowed)."""
	return m == d or any(x == d for x, _ in nest_splits(m))


def _right_factor_is(m: Walk, d: Walk) -> bool:
	"""m = a ⊙ d for some walk a (trivial a allowed)."""
	if m == d:
		return True
	return d.is_cycle and any(y == d for _, y in nest_splits(m))


def divides(d: Walk, w: Walk, max_length: Optional[int] = None) -> bool:
	"""
	True iff w = (a ⊙ d) ⊙ b or w = a ⊙ (d ⊙ b) for some walks a, b.

	Exhaustive over contiguous-segment splits; cost grows quickly with ℓ(w).
	"""
	bound = max_length or settings.divides_max_length
	if w.length > bound:
		raise BoundExceededError(bound, w.length, 'divides')
	_same_quiver(d, w)
	if d == w:
		return True
	if d.is_trivial:
		return w.visits(d.head)
	# (a ⊙ d) ⊙ b
	if _right_factor_is(w, d) or any(_right_factor_is(m, d) for m, _ in nest_splits(w)):
		return True
	# a ⊙ (d ⊙ b)
	return _left_factor_is(w, d) or any(_left_factor_is(m, d) for _, m in nest_splits(w))


def is_irreducible(w: Walk) -> bool:
	"""Simple path, simple cycle or trivial walk."""
	seq = w.vertices
	if w.is_trivial:
		return True
	if w.is_open:
		return len(set(seq)) == len(seq)
	internal = seq[1:-1]
	return len(set(internal)) == len(internal) and w.head not in internal

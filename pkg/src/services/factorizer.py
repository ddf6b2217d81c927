"""
Canonical factorization of a walk into nesting products of prime walks.

factorize() applies two splitting rules recursively:
  - a cycle off μ that passes through μ internally is cut at every internal μ,
    giving the left-associated chain c0 ⊙ c1 ⊙ ... ⊙ ck;
  - otherwise the span between the first and last appearance of the earliest
    repeated vertex is cut out (for cycles, scanning internal vertices only),
    repeatedly, until a prime remains: ((r ⊙ s_m) ⊙ ...) ⊙ s_1.

normalize_tree() maps any tree to a structural normal form by recording where
every factor attaches in the prime it nests into, so equivalent factorizations
compare equal.

Usage:
    from src.services.factorizer import factorize, recompose, trees_equivalent

    tree = factorize(parse_walk(q, '133112343442333'))
    assert recompose(tree) == w
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from src.core.config import settings
from src.core.exceptions import BoundExceededError, InvalidWalkError
from src.models.factor_tree import FactorTree, Leaf, Nest, chain
from src.models.walk import ZERO, NestResult, Walk
from src.services.nesting import is_irreducible, nest, nontrivial_splits

logger = logging.getLogger(__name__)


# ── Algorithm ──────────────────────────────────────────────────


def _earliest_repeat(region: Sequence[int]) -> Optional[Tuple[int, int]]:
	"""First and last index of the repeated vertex whose first appearance comes earliest."""
	counts = Counter(region)
	for i, v in enumerate(region):
		if counts[v] > 1:
			last = len(region) - 1 - region[::-1].index(v)
			return i, last
	return None


def _factorize(w: Walk) -> FactorTree:
	if is_irreducible(w):
		return Leaf(w)

	seq = w.vertices
	q = w.quiver
	if w.is_cycle:
		cuts = [i for i in range(1, len(seq) - 1) if seq[i] == w.head]
		if cuts:
			bounds = [0] + cuts + [len(seq) - 1]
			pieces = [Walk(seq[s : e + 1], q) for s, e in zip(bounds, bounds[1:])]
			return chain(*(_factorize(p) for p in pieces))

	offset = 1 if w.is_cycle else 0
	spans: List[Walk] = []
	current = seq
	while True:
		stop = len(current) - 1 if w.is_cycle else len(current)
		hit = _earliest_repeat(current[offset:stop])
		if hit is None:
			break
		i, k = hit[0] + offset, hit[1] + offset
		spans.append(Walk(current[i : k + 1], q))
		current = current[: i + 1] + current[k + 1 :]

	tree: FactorTree = Leaf(Walk(current, q))
	for span in reversed(spans):
		tree = Nest(tree, _factorize(span))
	return tree


def factorize(w: Walk) -> FactorTree:
	if w is ZERO:
		raise InvalidWalkError('cannot factorize the zero walk')
	tree = _factorize(w)
	logger.debug(f'factorized walk of length {w.length}')
	return tree


def recompose(t: FactorTree) -> NestResult:
	if isinstance(t, Leaf):
		return t.walk
	return nest(recompose(t.left), recompose(t.right))


# ── Normal form ────────────────────────────────────────────────


@dataclass(eq=False)
class _Node:
	"""A prime factor and the factors attached at each of its positions."""

	prime: Walk
	slots: Dict[int, List['_Node']] = field(default_factory=dict)


_Token = Tuple[int, _Node, int]


def _structure(t: FactorTree) -> Tuple[_Node, List[_Token]]:
	if isinstance(t, Leaf):
		node = _Node(t.walk)
		return node, [(v, node, i) for i, v in enumerate(t.walk.vertices)]

	host, host_tokens = _structure(t.left)
	guest, guest_tokens = _structure(t.right)
	q = host.prime.quiver
	left = Walk(tuple(v for v, _, _ in host_tokens), q)
	right = Walk(tuple(v for v, _, _ in guest_tokens), q)
	if nest(left, right) is ZERO:
		raise InvalidWalkError('factor tree recomposes to zero')
	if right.is_trivial:
		return host, host_tokens
	if left.is_trivial:
		return guest, guest_tokens

	beta = right.head
	j = max(i for i, (v, _, _) in enumerate(host_tokens) if v == beta)
	_, anchor, anchor_pos = host_tokens[j]
	end = len(guest.prime.vertices) - 1
	slot = anchor.slots.setdefault(anchor_pos, [])
	slot.append(guest)
	# factors chained at the guest's closing vertex become siblings of the guest
	slot.extend(guest.slots.pop(end, []))
	moved = [(v, anchor, anchor_pos) if (n is guest and p == end) else (v, n, p) for v, n, p in guest_tokens]
	return host, host_tokens[:j] + moved + host_tokens[j + 1 :]


def _rebuild(node: _Node) -> FactorTree:
	tree: FactorTree = Leaf(node.prime)
	end = len(node.prime.vertices) - 1
	closes = node.prime.is_cycle
	for pos in sorted(node.slots, reverse=True):
		if closes and pos == end:
			continue
		tree = Nest(tree, chain(*(_rebuild(child) for child in node.slots[pos])))
	if closes:
		for child in node.slots.get(end, []):
			tree = Nest(tree, _rebuild(child))
	return tree


def normalize_tree(t: FactorTree) -> FactorTree:
	"""Strip local identities, left-associate cycle chains, order factors by descending attachment position."""
	root, _ = _structure(t)
	return _rebuild(root)


def trees_equivalent(t1: FactorTree, t2: FactorTree) -> bool:
	return normalize_tree(t1) == normalize_tree(t2)


# ── Uniqueness oracle ──────────────────────────────────────────


def all_canonical_factorizations(w: Walk, bound: Optional[int] = None) -> FrozenSet[FactorTree]:
	"""Every tree with prime leaves recomposing to w, by exhaustive search over binary splits."""
	bound = bound or settings.factorization_bound
	if w.length > bound:
		raise BoundExceededError(bound, w.length, 'all_canonical_factorizations')

	memo: Dict[Walk, FrozenSet[FactorTree]] = {}

	def _all(x: Walk) -> FrozenSet[FactorTree]:
		if x in memo:
			return memo[x]
		found = set()
		if is_irreducible(x):
			found.add(Leaf(x))
		for a, b in nontrivial_splits(x):
			for ta in _all(a):
				for tb in _all(b):
					found.add(Nest(ta, tb))
		memo[x] = frozenset(found)
		return memo[x]

	result = _all(w)
	logger.debug(f'{len(result)} factorizations for a walk of length {w.length} ({len(memo)} sub-walks)')
	return result

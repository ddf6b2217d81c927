"""
Path-sums: the sum of all walks between two vertices as a finite continued fraction.

The dressed value of vertex v on Q∖D is

    F(v; D) = [1 - Σ over simple cycles (v x1 ... xk v) in Q∖D of
               w(xk→v) F(xk; D∪{v,x1..x(k-1)}) ... w(x1→x2) F(x1; D∪{v}) w(v→x1)]^-1

and the path-sum from α to ω is the sum over simple paths (ν0 ... νp) of

    F(νp; {ν0..ν(p-1)}) w(ν(p-1)→νp) ... F(ν1; {ν0}) w(ν0→ν1) F(ν0; ∅)

with products taken right to left so non-commuting matrix weights are honored.
SymbolicPathSum evaluates this exactly in QQ(z); MatrixPathSum evaluates it
with numpy blocks.

Usage:
    from src.services.pathsum import genfunc, weighted_path_sum

    g = genfunc(q, '1', '1')
    block = weighted_path_sum(wq, '1', '4')
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple, Union

import numpy as np

from src.core.config import settings
from src.core.exceptions import NonInvertibleError, SingularBracketError, ValidationError
from src.models.quiver import Edge, Quiver, VertexKey
from src.models.rational import RationalFn
from src.models.walk import ZERO, NestResult
from src.models.weighted import WeightedQuiver
from src.services.enumeration import NO_BLOCK, simple_cycles_at, simple_paths

logger = logging.getLogger(__name__)

Value = Union[RationalFn, np.ndarray]


@dataclass(frozen=True)
class DressedWeight:
	vertex: int
	deleted: FrozenSet[int]
	value: Any


# ── Evaluators ─────────────────────────────────────────────────


class PathSumEvaluator(ABC):
	"""
	Shared recursion for scalar and matrix path-sums.

	Dressed values are memoized by (vertex, deletion set) for the lifetime of
	the evaluator.
	"""

	def __init__(self, quiver: Quiver):
		self.quiver = quiver
		self._memo: Dict[Tuple[int, FrozenSet[int]], Value] = {}

	@abstractmethod
	def one(self, v: int) -> Value: ...

	@abstractmethod
	def zero(self, v: int) -> Value: ...

	@abstractmethod
	def weight(self, tail: int, head: int) -> Value: ...

	@abstractmethod
	def mul(self, left: Value, right: Value) -> Value: ...

	@abstractmethod
	def invert_bracket(self, v: int, deleted: FrozenSet[int], cycle_sum: Value) -> Value:
		"""[1 - cycle_sum]^-1, or raise when it does not exist."""

	def _along(self, seq: Tuple[int, ...], start: Value, deleted: FrozenSet[int]) -> Value:
		"""Multiply weights and dressed internal vertices of seq onto start, right to left."""
		acc = start
		for i in range(1, len(seq)):
			acc = self.mul(self.weight(seq[i - 1], seq[i]), acc)
			if i < len(seq) - 1:
				acc = self.mul(self.dressed(seq[i], deleted | frozenset(seq[:i])), acc)
		return acc

	def dressed(self, v: int, deleted: FrozenSet[int] = NO_BLOCK) -> Value:
		key = (v, deleted)
		if key in self._memo:
			return self._memo[key]
		total = self.zero(v)
		for c in simple_cycles_at(self.quiver, v, deleted):
			total = total + self._along(c.vertices, self.one(v), deleted)
		value = self.invert_bracket(v, deleted, total)
		self._memo[key] = value
		return value

	def path_sum(self, alpha: int, omega: int) -> Value:
		if alpha == omega:
			return self.dressed(alpha)
		total = None
		paths = simple_paths(self.quiver, alpha, omega)
		for p in paths:
			seq = p.vertices
			term = self._along(seq, self.dressed(alpha), NO_BLOCK)
			term = self.mul(self.dressed(omega, frozenset(seq[:-1])), term)
			total = term if total is None else total + term
		logger.debug(f'path-sum over {len(paths)} simple paths, {len(self._memo)} dressed values')
		if total is None:
			return self.zero_between(alpha, omega)
		return total

	def zero_between(self, alpha: int, omega: int) -> Value:
		return self.zero(alpha)


class SymbolicPathSum(PathSumEvaluator):
	"""Exact evaluation in QQ(z); edges default to weight z."""

	def __init__(self, quiver: Quiver, edge_weights: Optional[Mapping[Edge, RationalFn]] = None):
		super().__init__(quiver)
		self._z = RationalFn.z()
		self._weights = dict(edge_weights or {})

	def one(self, v: int) -> RationalFn:
		return RationalFn.constant(1)

	def zero(self, v: int) -> RationalFn:
		return RationalFn.constant(0)

	def weight(self, tail: int, head: int) -> RationalFn:
		return self._weights.get((tail, head), self._z)

	def mul(self, left: RationalFn, right: RationalFn) -> RationalFn:
		return left * right

	def invert_bracket(self, v: int, deleted: FrozenSet[int], cycle_sum: RationalFn) -> RationalFn:
		bracket = 1 - cycle_sum
		if bracket.is_zero:
			raise NonInvertibleError(vertex=self.quiver.name(v), deleted=[self.quiver.name(d) for d in deleted])
		return bracket.inverse()


class MatrixPathSum(PathSumEvaluator):
	"""Numeric evaluation with d_head × d_tail complex blocks."""

	def __init__(self, weighted: WeightedQuiver, rcond_threshold: Optional[float] = None):
		super().__init__(weighted.quiver)
		self.weighted = weighted
		self.rcond_threshold = rcond_threshold or settings.rcond_threshold

	def one(self, v: int) -> np.ndarray:
		return self.weighted.identity(v)

	def zero(self, v: int) -> np.ndarray:
		return np.zeros((self.weighted.dim(v), self.weighted.dim(v)), dtype=complex)

	def zero_between(self, alpha: int, omega: int) -> np.ndarray:
		return np.zeros((self.weighted.dim(omega), self.weighted.dim(alpha)), dtype=complex)

	def weight(self, tail: int, head: int) -> np.ndarray:
		return self.weighted.weight(tail, head)

	def mul(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
		return left @ right

	def invert_bracket(self, v: int, deleted: FrozenSet[int], cycle_sum: np.ndarray) -> np.ndarray:
		bracket = self.one(v) - cycle_sum
		with np.errstate(divide='ignore', invalid='ignore'):
			rcond = 1.0 / np.linalg.cond(bracket)
		if not np.isfinite(rcond) or rcond < self.rcond_threshold:
			raise SingularBracketError(self.quiver.name(v), [self.quiver.name(d) for d in deleted], float(np.nan_to_num(rcond)))
		return np.linalg.inv(bracket)


# ── Operations ─────────────────────────────────────────────────


def genfunc(
	q: Quiver, alpha: VertexKey, omega: VertexKey, edge_weights: Optional[Mapping[Edge, RationalFn]] = None
) -> RationalFn:
	"""Generating function of the walks from α to ω as an exact rational function."""
	return SymbolicPathSum(q, edge_weights).path_sum(q.resolve(alpha), q.resolve(omega))


def weighted_path_sum(
	wq: WeightedQuiver, alpha: VertexKey, omega: VertexKey, rcond_threshold: Optional[float] = None
) -> np.ndarray:
	"""Sum of the weights of all walks from α to ω, a d_ω × d_α matrix."""
	q = wq.quiver
	return MatrixPathSum(wq, rcond_threshold).path_sum(q.resolve(alpha), q.resolve(omega))


def dressed_weight(
	source: Union[Quiver, WeightedQuiver],
	vertex: VertexKey,
	deleted: Iterable[VertexKey] = (),
	edge_weights: Optional[Mapping[Edge, RationalFn]] = None,
	rcond_threshold: Optional[float] = None,
) -> DressedWeight:
	if isinstance(source, WeightedQuiver):
		q = source.quiver
		evaluator: PathSumEvaluator = MatrixPathSum(source, rcond_threshold)
	else:
		q = source
		evaluator = SymbolicPathSum(source, edge_weights)
	v = q.resolve(vertex)
	removed = frozenset(q.resolve(d) for d in deleted)
	if v in removed:
		raise ValidationError(f'vertex {q.name(v)} is in its own deletion set', field='deleted')
	return DressedWeight(v, removed, evaluator.dressed(v, removed))


def walk_weight(wq: WeightedQuiver, w: NestResult) -> np.ndarray:
	"""Product of the edge weights along w, right to left; identity for a trivial walk."""
	if w is ZERO:
		return np.zeros((1, 1), dtype=complex)
	acc = wq.identity(w.head)
	for tail, head in w.edges():
		acc = wq.weight(tail, head) @ acc
	return acc


# ── Continued-fraction text ────────────────────────────────────


class _FractionText:
	def __init__(self, q: Quiver):
		self.q = q
		self._memo: Dict[Tuple[int, FrozenSet[int]], str] = {}

	def edge(self, tail: int, head: int) -> str:
		return f'z[{self.q.name(tail)},{self.q.name(head)}]'

	def _along(self, seq: Tuple[int, ...], deleted: FrozenSet[int]) -> List[str]:
		factors: List[str] = []
		for i in range(1, len(seq)):
			factors.append(self.edge(seq[i - 1], seq[i]))
			if i < len(seq) - 1:
				inner = self.dressed(seq[i], deleted | frozenset(seq[:i]))
				if inner != '1':
					factors.append(inner)
		return factors

	def dressed(self, v: int, deleted: FrozenSet[int] = NO_BLOCK) -> str:
		key = (v, deleted)
		if key not in self._memo:
			terms = [' '.join(reversed(self._along(c.vertices, deleted))) for c in simple_cycles_at(self.q, v, deleted)]
			self._memo[key] = f'[1 - {" - ".join(terms)}]^-1' if terms else '1'
		return self._memo[key]

	def path_sum(self, alpha: int, omega: int) -> str:
		if alpha == omega:
			return self.dressed(alpha)
		terms = []
		for p in simple_paths(self.q, alpha, omega):
			seq = p.vertices
			factors = [self.dressed(alpha)] + self._along(seq, NO_BLOCK) + [self.dressed(omega, frozenset(seq[:-1]))]
			factors = [f for f in factors if f != '1']
			terms.append(' '.join(reversed(factors)))
		return ' + '.join(terms) if terms else '0'


def continued_fraction(q: Quiver, alpha: VertexKey, omega: VertexKey) -> str:
	"""Unevaluated path-sum text with one symbol z[t,h] per edge."""
	return _FractionText(q).path_sum(q.resolve(alpha), q.resolve(omega))

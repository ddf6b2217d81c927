from dataclasses import dataclass, field
from typing import Dict, Mapping, Tuple

import numpy as np

from src.core.exceptions import ValidationError
from src.models.quiver import Edge, Quiver


@dataclass(frozen=True, eq=False)
class WeightedQuiver:
	"""
	Quiver with a d_ν × d_μ complex matrix on every edge μ → ν.
	"""

	quiver: Quiver
	dims: Mapping[int, int]
	weights: Mapping[Edge, np.ndarray] = field(repr=False)

	def __post_init__(self):
		for v in self.quiver.ids:
			d = self.dims.get(v)
			if d is None or d < 1:
				raise ValidationError(f'vertex {self.quiver.name(v)} needs a positive dimension', field='dims')
		for edge in self.quiver.edges:
			if edge not in self.weights:
				tail, head = edge
				raise ValidationError(f'edge ({self.quiver.name(tail)},{self.quiver.name(head)}) has no weight', field='weights')
		for (tail, head), w in self.weights.items():
			if (tail, head) not in self.quiver.edges:
				raise ValidationError(f'weight on missing edge ({tail},{head})', field='weights')
			expected = (self.dims[head], self.dims[tail])
			if np.shape(w) != expected:
				raise ValidationError(
					f'weight on ({self.quiver.name(tail)},{self.quiver.name(head)}) has shape {np.shape(w)}, expected {expected}',
					field='weights',
				)

	@classmethod
	def scalar(cls, q: Quiver, value: complex) -> 'WeightedQuiver':
		"""Every edge weighted by the same 1×1 value."""
		return cls(q, {v: 1 for v in q.ids}, {e: np.array([[value]], dtype=complex) for e in q.edges})

	def dim(self, vid: int) -> int:
		return self.dims[vid]

	def weight(self, tail: int, head: int) -> np.ndarray:
		return self.weights[(tail, head)]

	def identity(self, vid: int) -> np.ndarray:
		return np.eye(self.dims[vid], dtype=complex)

	def offsets(self) -> Dict[int, Tuple[int, int]]:
		"""Row/column slice bounds of each vertex block in the assembled matrix."""
		out: Dict[int, Tuple[int, int]] = {}
		start = 0
		for v in self.quiver.ids:
			out[v] = (start, start + self.dims[v])
			start += self.dims[v]
		return out

	def block_matrix(self) -> np.ndarray:
		"""M with block (ν, μ) = w_{νμ} for every edge μ → ν."""
		offsets = self.offsets()
		size = sum(self.dims[v] for v in self.quiver.ids)
		m = np.zeros((size, size), dtype=complex)
		for (tail, head), w in self.weights.items():
			r0, r1 = offsets[head]
			c0, c1 = offsets[tail]
			m[r0:r1, c0:c1] = w
		return m

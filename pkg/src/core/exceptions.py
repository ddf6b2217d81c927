"""
Custom Exceptions for quiverwalks
Provides structured error handling across the library and CLI
"""

from typing import Any, Dict, Iterable, Optional


class QuiverWalkException(Exception):
	"""Base exception for all quiverwalks errors."""

	def __init__(self, message: str, code: str = 'INTERNAL_ERROR', details: Optional[Dict[str, Any]] = None, exit_code: int = 2):
		super().__init__(message)
		self.message = message
		self.code = code
		self.details = details or {}
		self.exit_code = exit_code

	def to_dict(self) -> Dict[str, Any]:
		"""Convert exception to a machine-readable diagnostic."""
		return {'error': True, 'code': self.code, 'message': self.message, 'details': self.details}


class ValidationError(QuiverWalkException):
	"""Invalid input parameters."""

	def __init__(self, message: str, field: Optional[str] = None, details: Optional[Dict] = None):
		super().__init__(message=message, code='VALIDATION_ERROR', details={'field': field, **(details or {})})


class UnknownVertexError(QuiverWalkException):
	"""Vertex is not part of the quiver."""

	def __init__(self, vertex: Any):
		super().__init__(message=f'unknown vertex: {vertex}', code='UNKNOWN_VERTEX', details={'vertex': str(vertex)})


class InvalidWalkError(QuiverWalkException):
	"""Vertex sequence is not a walk of the quiver."""

	def __init__(self, message: str, edge: Optional[tuple] = None):
		details = {'edge': [str(v) for v in edge]} if edge else {}
		super().__init__(message=message, code='INVALID_WALK', details=details)


class CapExceededError(QuiverWalkException):
	"""Enumeration produced more items than allowed."""

	def __init__(self, cap: int, what: str):
		super().__init__(
			message=f'{what} exceeded the cardinality cap of {cap}',
			code='CAP_EXCEEDED',
			details={'cap': cap, 'what': what},
		)


class BoundExceededError(QuiverWalkException):
	"""Exhaustive search requested beyond its size guard."""

	def __init__(self, bound: int, size: int, what: str):
		super().__init__(
			message=f'{what}: size {size} exceeds the bound {bound}',
			code='BOUND_EXCEEDED',
			details={'bound': bound, 'size': size, 'what': what},
		)


def _deleted_names(deleted: Iterable[Any]) -> list:
	return sorted(str(v) for v in deleted)


class NonInvertibleError(QuiverWalkException):
	"""A required inverse does not exist."""

	def __init__(self, message: str = 'required inverse does not exist', vertex: Any = None, deleted: Iterable[Any] = ()):
		names = _deleted_names(deleted)
		if vertex is not None:
			message = f'{message} (vertex {vertex}, deleted {{{", ".join(names)}}})'
		super().__init__(
			message=message,
			code='NOT_INVERTIBLE',
			details={'vertex': None if vertex is None else str(vertex), 'deleted': names},
		)


class SingularBracketError(QuiverWalkException):
	"""Matrix bracket is singular or ill-conditioned."""

	def __init__(self, vertex: Any, deleted: Iterable[Any], rcond: float):
		names = _deleted_names(deleted)
		super().__init__(
			message=f'bracket at vertex {vertex} on deletion set {{{", ".join(names)}}} is singular (rcond={rcond:.3e})',
			code='SINGULAR_BRACKET',
			details={'vertex': str(vertex), 'deleted': names, 'rcond': rcond},
		)


class GraphFileError(QuiverWalkException):
	"""Graph file could not be read or is malformed."""

	def __init__(self, message: str, offset: Optional[int] = None, path: Optional[str] = None):
		if offset is not None:
			message = f'{message} at byte offset {offset}'
		super().__init__(message=message, code='GRAPH_FILE_ERROR', details={'offset': offset, 'path': path})


class MissingLabelError(QuiverWalkException):
	"""Language rendering needs a label on every edge."""

	def __init__(self, edge: tuple):
		tail, head = edge
		super().__init__(
			message=f'edge ({tail},{head}) has no label',
			code='MISSING_LABEL',
			details={'edge': [str(tail), str(head)]},
		)


class HypothesisError(QuiverWalkException):
	"""Input does not satisfy the hypothesis of a closed-form result."""

	def __init__(self, message: str):
		super().__init__(message=message, code='HYPOTHESIS_ERROR')


class ParseError(QuiverWalkException):
	"""Textual walk, tree or expression could not be parsed."""

	def __init__(self, message: str, offset: Optional[int] = None):
		if offset is not None:
			message = f'{message} at offset {offset}'
		super().__init__(message=message, code='PARSE_ERROR', details={'offset': offset})

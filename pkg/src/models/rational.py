"""
RationalFn: exact rational functions in one indeterminate z over QQ.

Backed by a sympy fraction field, so every value is kept reduced. Coefficient
views are returned as `fractions.Fraction` lists in ascending degree.

Usage:
    from src.models.rational import RationalFn

    z = RationalFn.z()
    g = (1 - z).inverse()
    g.series(4)   # [1, 1, 1, 1, 1]
"""

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from numbers import Number
from typing import List, Sequence, Tuple, Union

from sympy import QQ, Expr, Symbol
from sympy.polys.fields import field

from src.core.exceptions import NonInvertibleError

_FIELD, _Z = field('z', QQ)
Z_SYMBOL = Symbol('z')

Scalar = Union[int, Fraction]


def _to_qq(c: Scalar):
	c = Fraction(c)
	return QQ(c.numerator, c.denominator)


def _poly_coeffs(poly) -> List[Fraction]:
	"""Dense ascending-degree coefficients of a univariate PolyElement."""
	terms = dict(poly.terms())
	if not terms:
		return [Fraction(0)]
	degree = max(k for (k,) in terms)
	out = [Fraction(0)] * (degree + 1)
	for (k,), c in terms.items():
		out[k] = Fraction(int(c.numerator), int(c.denominator))
	return out


def _trim(coeffs: List[Fraction]) -> List[Fraction]:
	while len(coeffs) > 1 and coeffs[-1] == 0:
		coeffs.pop()
	return coeffs


class RationalFn:
	__slots__ = ('_f',)

	def __init__(self, element):
		self._f = element

	# ─── Construction ─────────────────────────────────────────

	@classmethod
	def z(cls) -> 'RationalFn':
		return cls(_Z)

	@classmethod
	def constant(cls, c: Scalar) -> 'RationalFn':
		return cls(_FIELD.one * _to_qq(c))

	@classmethod
	def from_coefficients(cls, numerator: Sequence[Scalar], denominator: Sequence[Scalar] = (1,)) -> 'RationalFn':
		num = reduce(lambda acc, kc: acc + _Z ** kc[0] * _to_qq(kc[1]), enumerate(numerator), _FIELD.zero)
		den = reduce(lambda acc, kc: acc + _Z ** kc[0] * _to_qq(kc[1]), enumerate(denominator), _FIELD.zero)
		if den == 0:
			raise NonInvertibleError('denominator is identically zero')
		return cls(num / den)

	@classmethod
	def from_expr(cls, expr: Expr) -> 'RationalFn':
		"""Convert a sympy expression in the symbol `z`."""
		return cls(_FIELD.from_expr(expr))

	# ─── Coefficient views ────────────────────────────────────

	def _normalized(self) -> Tuple[List[Fraction], List[Fraction]]:
		num = _trim(_poly_coeffs(self._f.numer))
		den = _trim(_poly_coeffs(self._f.denom))
		lead = next(c for c in den if c != 0)
		return [c / lead for c in num], [c / lead for c in den]

	def coefficients(self) -> Tuple[List[Fraction], List[Fraction]]:
		"""(numerator, denominator) with the lowest-order denominator coefficient equal to 1."""
		return self._normalized()

	def integer_coefficients(self) -> Tuple[List[int], List[int]]:
		"""Same shape as `coefficients`, scaled to coprime integers."""
		num, den = self._normalized()
		scale = reduce(lcm, (c.denominator for c in num + den), 1)
		num_i = [int(c * scale) for c in num]
		den_i = [int(c * scale) for c in den]
		common = reduce(gcd, (abs(c) for c in num_i + den_i if c), 0) or 1
		return [c // common for c in num_i], [c // common for c in den_i]

	def to_expr(self) -> Expr:
		return self._f.as_expr(Z_SYMBOL)

	# ─── Arithmetic ───────────────────────────────────────────

	def _coerce(self, other) -> 'RationalFn':
		if isinstance(other, RationalFn):
			return other
		if isinstance(other, (int, Fraction)):
			return RationalFn.constant(other)
		return NotImplemented

	def __add__(self, other):
		other = self._coerce(other)
		if other is NotImplemented:
			return other
		return RationalFn(self._f + other._f)

	__radd__ = __add__

	def __sub__(self, other):
		other = self._coerce(other)
		if other is NotImplemented:
			return other
		return RationalFn(self._f - other._f)

	def __rsub__(self, other):
		other = self._coerce(other)
		if other is NotImplemented:
			return other
		return RationalFn(other._f - self._f)

	def __mul__(self, other):
		other = self._coerce(other)
		if other is NotImplemented:
			return other
		return RationalFn(self._f * other._f)

	__rmul__ = __mul__

	def __neg__(self) -> 'RationalFn':
		return RationalFn(-self._f)

	def __truediv__(self, other):
		other = self._coerce(other)
		if other is NotImplemented:
			return other
		return self * other.inverse()

	def __rtruediv__(self, other):
		other = self._coerce(other)
		if other is NotImplemented:
			return other
		return other * self.inverse()

	def __pow__(self, k: int) -> 'RationalFn':
		if k < 0:
			return self.inverse() ** (-k)
		return RationalFn(self._f**k)

	def inverse(self) -> 'RationalFn':
		if self.is_zero:
			raise NonInvertibleError('cannot invert the zero rational function')
		return RationalFn(_FIELD.one / self._f)

	@property
	def is_zero(self) -> bool:
		return self._f == 0

	# ─── Equality ─────────────────────────────────────────────

	def equals(self, other) -> bool:
		"""Representation-independent equality by cross-multiplication."""
		other = self._coerce(other)
		if other is NotImplemented:
			return False
		return self._f.numer * other._f.denom == other._f.numer * self._f.denom

	def __eq__(self, other) -> bool:
		if not isinstance(other, (RationalFn, int, Fraction)):
			return NotImplemented
		return self.equals(other)

	def __hash__(self) -> int:
		num, den = self._normalized()
		return hash((tuple(num), tuple(den)))

	# ─── Evaluation ───────────────────────────────────────────

	def series(self, n: int) -> List[Fraction]:
		"""First n+1 Taylor coefficients at z=0."""
		num, den = self._normalized()
		if den[0] == 0:
			raise NonInvertibleError('series requested at a pole (denominator vanishes at z=0)')
		out: List[Fraction] = []
		for k in range(n + 1):
			acc = num[k] if k < len(num) else Fraction(0)
			for j in range(1, min(k, len(den) - 1) + 1):
				acc -= den[j] * out[k - j]
			out.append(acc / den[0])
		return out

	def evaluate(self, z0: Union[Number, Fraction]):
		num, den = self._normalized()
		if isinstance(z0, (int, Fraction)):
			num_c, den_c = num, den
		else:
			num_c = [complex(c) if isinstance(z0, complex) else float(c) for c in num]
			den_c = [complex(c) if isinstance(z0, complex) else float(c) for c in den]
		d = _horner(den_c, z0)
		if d == 0:
			raise NonInvertibleError(f'denominator vanishes at z={z0}')
		return _horner(num_c, z0) / d

	# ─── Text ─────────────────────────────────────────────────

	def __str__(self) -> str:
		num, den = self.integer_coefficients()
		return f'{_wrap(num)} / {_wrap(den)}'

	def __repr__(self) -> str:
		return f'RationalFn({self})'


def _horner(coeffs, x):
	acc = coeffs[-1] * 0
	for c in reversed(coeffs):
		acc = acc * x + c
	return acc


def format_polynomial(coeffs: Sequence[int]) -> str:
	"""Ascending-degree integer polynomial, e.g. `1 - 2z - z^3`."""
	parts: List[str] = []
	for k, c in enumerate(coeffs):
		if c == 0:
			continue
		mag = abs(c)
		if k == 0:
			body = str(mag)
		else:
			power = 'z' if k == 1 else f'z^{k}'
			body = power if mag == 1 else f'{mag}{power}'
		if not parts:
			parts.append(body if c > 0 else f'-{body}')
		else:
			parts.append(f'+ {body}' if c > 0 else f'- {body}')
	return ' '.join(parts) if parts else '0'


def _wrap(coeffs: Sequence[int]) -> str:
	text = format_polynomial(coeffs)
	nonzero = sum(1 for c in coeffs if c)
	return f'({text})' if nonzero > 1 else text

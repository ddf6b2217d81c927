"""
Resolvent oracles for path-sums.

resolvent_entry() computes one entry of [I - zA]^-1 by fraction-free
elimination over polynomials (sympy DomainMatrix determinants), independent of
the continued-fraction recursion. block_resolvent() is the dense numeric
counterpart for weighted quivers, and the Bethe helpers give the closed form
for the infinite Bethe lattice root.

Usage:
    from src.services.resolvent import resolvent_entry

    assert resolvent_entry(q, '1', '1') == genfunc(q, '1', '1')
"""

import logging
from fractions import Fraction
from typing import List

import numpy as np
from sympy import Matrix, Poly, Rational, sqrt, sympify, zeros
from sympy.polys.matrices import DomainMatrix

from src.core.exceptions import ValidationError
from src.models.quiver import Quiver, VertexKey
from src.models.rational import Z_SYMBOL, RationalFn
from src.models.weighted import WeightedQuiver

logger = logging.getLogger(__name__)


def _det(m: Matrix):
	if m.rows == 0:
		return 1
	dm = DomainMatrix.from_Matrix(m)
	return dm.domain.to_sympy(dm.det())


def resolvent_entry(q: Quiver, alpha: VertexKey, omega: VertexKey) -> RationalFn:
	"""([I - zA]^-1)_{ωα} with A[head, tail] = 1 for every edge, by cofactors."""
	ids = q.ids
	index = {v: i for i, v in enumerate(ids)}
	a, w = index[q.resolve(alpha)], index[q.resolve(omega)]
	n = len(ids)
	m = zeros(n, n)
	for i in range(n):
		m[i, i] = 1
	for tail, head in q.edges:
		m[index[head], index[tail]] -= Z_SYMBOL
	det = _det(m)
	minor = _det(m.minor_submatrix(a, w))
	sign = -1 if (a + w) % 2 else 1
	logger.debug(f'resolvent entry on {n} vertices, det degree {Poly(det, Z_SYMBOL).degree()}')
	return RationalFn.from_expr(sympify(sign * minor)) / RationalFn.from_expr(sympify(det))


def block_resolvent(wq: WeightedQuiver) -> np.ndarray:
	"""(I - M)^-1 for the block adjacency matrix M; block (ω, α) sums all walks α → ω."""
	m = wq.block_matrix()
	return np.linalg.inv(np.eye(m.shape[0], dtype=complex) - m)


def resolvent_block(wq: WeightedQuiver, alpha: VertexKey, omega: VertexKey) -> np.ndarray:
	q = wq.quiver
	offsets = wq.offsets()
	r0, r1 = offsets[q.resolve(omega)]
	c0, c1 = offsets[q.resolve(alpha)]
	return block_resolvent(wq)[r0:r1, c0:c1]


# ── Bethe lattice ──────────────────────────────────────────────


def _bethe_root_expr(n: int):
	return 2 * (n - 1) / (n * sqrt(1 - 4 * (n - 1) * Z_SYMBOL**2) + n - 2)


def bethe_genfunc_value(n: int, z: complex, kind: str = 'root') -> complex:
	"""Walk generating function of the root of the infinite Bethe lattice with coordination n."""
	if kind != 'root':
		raise ValidationError(f'unsupported Bethe lattice entry {kind!r}', field='kind')
	if n < 2:
		raise ValidationError('Bethe lattice coordination must be at least 2', field='n')
	root = np.sqrt(complex(1 - 4 * (n - 1) * z * z))
	return 2 * (n - 1) / (n * root + n - 2)


def bethe_root_series(n: int, terms: int) -> List[Fraction]:
	"""Taylor coefficients z^0 .. z^terms of the Bethe root generating function."""
	if n < 2:
		raise ValidationError('Bethe lattice coordination must be at least 2', field='n')
	expansion = _bethe_root_expr(n).series(Z_SYMBOL, 0, terms + 1).removeO()
	coeffs = Poly(expansion, Z_SYMBOL).all_coeffs()[::-1]
	coeffs += [0] * (terms + 1 - len(coeffs))
	return [Fraction(int(Rational(c).p), int(Rational(c).q)) for c in coeffs[: terms + 1]]

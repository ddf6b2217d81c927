"""
Services Package - walk algebra, ensembles, path-sums and star height
"""

from .ensembles import expand, factorize_ensemble
from .factorizer import factorize, recompose
from .pathsum import continued_fraction, genfunc, weighted_path_sum
from .starheight import star_height_cycles, star_height_graph, star_height_open

__all__ = [
	'factorize',
	'recompose',
	'factorize_ensemble',
	'expand',
	'genfunc',
	'continued_fraction',
	'weighted_path_sum',
	'star_height_cycles',
	'star_height_open',
	'star_height_graph',
]

"""
quiverwalks - Command Line Interface
Factorize walks, build walk ensembles and evaluate path-sums on a quiver
"""

import argparse
import sys
from pathlib import Path
from typing import Dict, Optional, Tuple

# Add project root to path
root_dir = str(Path(__file__).resolve().parent.parent)
if root_dir not in sys.path:
	sys.path.insert(0, root_dir)

import numpy as np
import orjson
import structlog

from src.core.config import settings
from src.core.console import console
from src.core.exceptions import QuiverWalkException, ValidationError
from src.core.logging_config import bind_run_context, configure_logging
from src.models.graph_document import GraphDocument, load_graph_document
from src.models.quiver import Edge, Quiver
from src.models.rational import RationalFn
from src.models.walk import format_walk, parse_walk

COMMANDS = ('factor', 'ensemble', 'expand', 'genfunc', 'series', 'weighted-sum', 'starheight', 'language', 'enumerate', 'family')


def _graph_options() -> argparse.ArgumentParser:
	parent = argparse.ArgumentParser(add_help=False)
	source = parent.add_mutually_exclusive_group(required=True)
	source.add_argument('-g', '--graph', help='Graph file (.json, .yaml, .yml)')
	source.add_argument('--family', metavar='KIND:ARGS', help='Built-in family, e.g. cycle:5 or truncated_bethe:3,2')
	charset = parent.add_mutually_exclusive_group()
	charset.add_argument('--ascii', dest='charset', action='store_const', const='ascii', help='ASCII operators (default)')
	charset.add_argument('--unicode', dest='charset', action='store_const', const='unicode', help='Unicode operators')
	parent.add_argument('--cap', type=int, default=None, help=f'Enumeration cardinality cap (default: {settings.enumeration_cap})')
	return parent


def _endpoints(p: argparse.ArgumentParser, target_required: bool = False) -> None:
	p.add_argument('-s', '--source', required=True, help='Start vertex')
	p.add_argument('-t', '--target', required=target_required, default=None, help='End vertex (default: the start vertex)')


def create_parser():
	"""Create argument parser with subcommands."""
	parser = argparse.ArgumentParser(
		prog='quiverwalks',
		description='quiverwalks - walk factorization, walk ensembles and path-sums on quivers',
		formatter_class=argparse.RawDescriptionHelpFormatter,
		epilog="""
Examples:
  python -m src.cli factor --family complete_with_loops:4 -w 133112343442333
  python -m src.cli language -g example3.json -s 1 -t 4
  python -m src.cli genfunc -g example5.json -s 1 -t 1
  python -m src.cli series --family cycle:5 -s 0 -N 12
  python -m src.cli family truncated_bethe:3,2 --format yaml
        """,
	)

	subparsers = parser.add_subparsers(dest='command', help='Available commands')
	graph = _graph_options()

	# ============================================
	# FACTOR - Canonical factorization of one walk
	# ============================================
	factor_parser = subparsers.add_parser('factor', parents=[graph], help='Factorize a walk into prime walks')
	factor_parser.add_argument('-w', '--walk', required=True, help='Walk, e.g. 1331 or "(1 3 3 1)"')

	# ============================================
	# ENSEMBLE / LANGUAGE - Nested star expressions
	# ============================================
	ensemble_parser = subparsers.add_parser('ensemble', parents=[graph], help='Factorized ensemble of all walks s -> t')
	_endpoints(ensemble_parser)
	ensemble_parser.add_argument('--mode', choices=('vertex', 'edge', 'language'), default='vertex', help='Rendering (default: vertex)')

	language_parser = subparsers.add_parser('language', parents=[graph], help='Regular expression over edge labels')
	_endpoints(language_parser)

	expand_parser = subparsers.add_parser('expand', parents=[graph], help='Walks of the ensemble up to a length bound')
	_endpoints(expand_parser)
	expand_parser.add_argument('-L', '--max-length', type=int, required=True, help='Length bound')

	# ============================================
	# GENFUNC / SERIES / WEIGHTED-SUM - Path-sums
	# ============================================
	genfunc_parser = subparsers.add_parser('genfunc', parents=[graph], help='Walk generating function as a rational function')
	_endpoints(genfunc_parser)
	genfunc_parser.add_argument('--form', choices=('rational', 'continued-fraction'), default='rational', help='Output form')

	series_parser = subparsers.add_parser('series', parents=[graph], help='Taylor coefficients of the generating function')
	_endpoints(series_parser)
	series_parser.add_argument('-N', '--terms', type=int, default=12, help='Highest power of z (default: 12)')

	weighted_parser = subparsers.add_parser('weighted-sum', parents=[graph], help='Matrix path-sum from the weights block')
	_endpoints(weighted_parser)

	# ============================================
	# STARHEIGHT - Star height of the ensembles
	# ============================================
	starheight_parser = subparsers.add_parser('starheight', parents=[graph], help='Star height of the factorized ensemble')
	_endpoints(starheight_parser)
	starheight_parser.add_argument('--closed-form', action='store_true', help='Longest-simple-path form (undirected graphs)')

	# ============================================
	# ENUMERATE / FAMILY - Oracles and generators
	# ============================================
	enumerate_parser = subparsers.add_parser('enumerate', parents=[graph], help='Brute-force walks s -> t')
	_endpoints(enumerate_parser)
	enumerate_parser.add_argument('-L', '--max-length', type=int, required=True, help='Length bound')
	enumerate_parser.add_argument('--count', action='store_true', help='Print walk counts per length instead of walks')

	family_parser = subparsers.add_parser('family', help='Write a built-in family as a graph file')
	family_parser.add_argument('spec', metavar='KIND:ARGS', help='e.g. complete_with_loops:3')
	family_parser.add_argument('--format', choices=('json', 'yaml'), default='json', help='Output format (default: json)')

	return parser


# ─── Helpers ──────────────────────────────────────────────────────


def _load(args) -> Tuple[Quiver, Optional[GraphDocument]]:
	if args.graph:
		doc = load_graph_document(args.graph)
		return doc.to_quiver(), doc
	from src.services.families import family_from_spec

	return family_from_spec(args.family), None


def _ends(q: Quiver, args) -> Tuple[int, int]:
	alpha = q.resolve(args.source)
	omega = q.resolve(args.target) if args.target is not None else alpha
	return alpha, omega


def _edge_weights(q: Quiver, doc: Optional[GraphDocument]) -> Optional[Dict[Edge, RationalFn]]:
	return doc.edge_polynomials(q) if doc else None


def _format_entry(x: complex) -> str:
	if abs(x.imag) <= 1e-15 * max(1.0, abs(x.real)):
		return f'{x.real:.12g}'
	return f'{x.real:.12g}{x.imag:+.12g}j'


def _format_matrix(m: np.ndarray) -> str:
	return '\n'.join(' '.join(_format_entry(complex(x)) for x in row) for row in m)


def _check_length(n: int, what: str) -> None:
	if n < 0:
		raise ValidationError(f'{what} must be non-negative', field=what)


# ─── Commands ─────────────────────────────────────────────────────


def run_factor(args) -> str:
	from src.services.factorizer import factorize
	from src.services.rendering import format_tree

	q, _ = _load(args)
	return format_tree(factorize(parse_walk(q, args.walk)), args.charset)


def run_ensemble(args, mode: Optional[str] = None) -> str:
	from src.services.ensembles import factorize_ensemble
	from src.services.rendering import render

	q, _ = _load(args)
	alpha, omega = _ends(q, args)
	return render(factorize_ensemble(q, alpha, omega), q, mode or args.mode, args.charset)


def run_expand(args) -> str:
	from src.services.ensembles import expand, factorize_ensemble

	_check_length(args.max_length, 'max_length')
	q, _ = _load(args)
	alpha, omega = _ends(q, args)
	walks = expand(factorize_ensemble(q, alpha, omega), args.max_length, args.cap)
	return '\n'.join(format_walk(w) for w in sorted(walks))


def run_genfunc(args) -> str:
	from src.services.pathsum import continued_fraction, genfunc

	q, doc = _load(args)
	alpha, omega = _ends(q, args)
	if args.form == 'continued-fraction':
		return continued_fraction(q, alpha, omega)
	return str(genfunc(q, alpha, omega, _edge_weights(q, doc)))


def run_series(args) -> str:
	from src.services.pathsum import genfunc

	_check_length(args.terms, 'terms')
	q, doc = _load(args)
	alpha, omega = _ends(q, args)
	return ' '.join(str(c) for c in genfunc(q, alpha, omega, _edge_weights(q, doc)).series(args.terms))


def run_weighted_sum(args) -> str:
	from src.models.weighted import WeightedQuiver
	from src.services.pathsum import weighted_path_sum

	q, doc = _load(args)
	alpha, omega = _ends(q, args)
	wq = doc.to_weighted(q) if doc else WeightedQuiver.scalar(q, 1.0)
	return _format_matrix(weighted_path_sum(wq, alpha, omega))


def run_starheight(args) -> str:
	from src.services.starheight import star_height_cycles, star_height_graph, star_height_open

	q, _ = _load(args)
	alpha, omega = _ends(q, args)
	if args.closed_form:
		report = star_height_graph(q, alpha)
		return orjson.dumps(report.model_dump()).decode()
	height = star_height_cycles(q, alpha) if alpha == omega else star_height_open(q, alpha, omega)
	return orjson.dumps({'vertex': q.name(alpha), 'target': q.name(omega), 'height': height, 'method': 'recursion'}).decode()


def run_enumerate(args) -> str:
	from src.services.enumeration import count_walks, enumerate_walks

	_check_length(args.max_length, 'max_length')
	q, _ = _load(args)
	alpha, omega = _ends(q, args)
	if args.count:
		return ' '.join(str(c) for c in count_walks(q, alpha, omega, args.max_length))
	return '\n'.join(format_walk(w) for w in sorted(enumerate_walks(q, alpha, omega, args.max_length, args.cap)))


def run_family(args) -> str:
	from src.services.families import family_from_spec

	return GraphDocument.from_quiver(family_from_spec(args.spec)).dump(args.format).rstrip('\n')


def dispatch(args) -> str:
	if args.command == 'factor':
		return run_factor(args)
	elif args.command == 'ensemble':
		return run_ensemble(args)
	elif args.command == 'language':
		return run_ensemble(args, mode='language')
	elif args.command == 'expand':
		return run_expand(args)
	elif args.command == 'genfunc':
		return run_genfunc(args)
	elif args.command == 'series':
		return run_series(args)
	elif args.command == 'weighted-sum':
		return run_weighted_sum(args)
	elif args.command == 'starheight':
		return run_starheight(args)
	elif args.command == 'enumerate':
		return run_enumerate(args)
	return run_family(args)


def main(argv=None) -> int:
	"""Main CLI entry point."""
	parser = create_parser()
	args = parser.parse_args(argv)

	if not args.command:
		parser.print_help()
		return 2

	configure_logging()
	bind_run_context(args.command, getattr(args, 'graph', None), getattr(args, 'family', None) or getattr(args, 'spec', None))

	try:
		output = dispatch(args)
	except QuiverWalkException as e:
		console.error(e.message, e.code)
		return e.exit_code
	except KeyboardInterrupt:
		console.warning('stopped by user')
		return 130
	except Exception as e:
		console.error(f'unexpected failure: {e}')
		return 1
	finally:
		structlog.contextvars.clear_contextvars()

	if output:
		console.result(output)
	return 0


if __name__ == '__main__':
	sys.exit(main())

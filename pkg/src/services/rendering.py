"""
Text forms of factor trees and walk expressions, and their parsers.

Factor trees:   ((123 . 33^2) . ((2342 . 44) . 343)) . ((131 . 33) . 11)
Vertex mode:    {11, 121 . {22, 232 . {33}*}*, ...}*
Edge mode:      ((12)((23)(33)*(32))*(23)(33)*(31))*(12)...
Language mode:  the edge-mode string with every edge replaced by its label

ASCII uses `.` and `*`; unicode uses `⊙`, `∗` and superscript powers. Edge and
language modes always use `*`, `+` between union members and `()` for the
empty word.

Usage:
    from src.services.rendering import format_tree, render, parse_expr

    print(render(expr, q, mode='language'))
"""

import logging
from typing import Callable, Dict, List, Optional, Tuple

from src.core.config import settings
from src.core.exceptions import MissingLabelError, ParseError, ValidationError
from src.models.factor_tree import FactorTree, Leaf, Nest, chain
from src.models.quiver import Edge, Quiver
from src.models.walk import Walk, format_walk, parse_walk
from src.models.walk_expr import (
	Atom,
	NestProd,
	Star,
	Trivial,
	Union,
	WalkExpr,
	head_vertex,
	is_trivial_only,
	shares_endpoints,
	tail_vertex,
	union_of,
)

logger = logging.getLogger(__name__)

MODES = ('vertex', 'edge', 'language')

_SUPERSCRIPTS = str.maketrans('0123456789', '⁰¹²³⁴⁵⁶⁷⁸⁹')
_FROM_SUPERSCRIPTS = str.maketrans('⁰¹²³⁴⁵⁶⁷⁸⁹', '0123456789')
_SPECIAL = set('(){},.⊙*∗^') | set('⁰¹²³⁴⁵⁶⁷⁸⁹')
_OPS = ('.', '⊙')
_STARS = ('*', '∗')


def _symbols(charset: Optional[str]) -> Tuple[str, str]:
	charset = charset or settings.charset
	return (' ⊙ ', '∗') if charset == 'unicode' else (' . ', '*')


# ── Factor trees ───────────────────────────────────────────────


def _as_power(t: FactorTree) -> Optional[Tuple[Walk, int]]:
	"""(c, k) when t is the left-associated chain c ⊙ c ⊙ ... ⊙ c of one cycle."""
	if isinstance(t, Leaf):
		return (t.walk, 1) if t.walk.is_cycle else None
	left = _as_power(t.left)
	if left and isinstance(t.right, Leaf) and t.right.walk == left[0]:
		return left[0], left[1] + 1
	return None


def format_tree(t: FactorTree, charset: Optional[str] = None) -> str:
	op, _ = _symbols(charset)
	unicode = op.strip() == '⊙'

	def _fmt(node: FactorTree, top: bool) -> str:
		if isinstance(node, Leaf):
			return format_walk(node.walk)
		power = _as_power(node)
		if power and power[1] >= 2:
			exponent = str(power[1]).translate(_SUPERSCRIPTS) if unicode else f'^{power[1]}'
			return format_walk(power[0]) + exponent
		text = _fmt(node.left, False) + op + _fmt(node.right, False)
		return text if top else f'({text})'

	return _fmt(t, True)


# ── Walk expressions ───────────────────────────────────────────


def _render_vertex(e: WalkExpr, op: str, star: str) -> str:
	if isinstance(e, Atom):
		return format_walk(e.walk)
	if isinstance(e, Trivial):
		return format_walk(e.walk)
	if isinstance(e, Union):
		return '{' + ', '.join(_render_vertex(m, op, star) for m in e.members) + '}'
	if isinstance(e, NestProd):
		left = _render_vertex(e.base, op, star)
		right = _render_vertex(e.inserted, op, star)
		if isinstance(e.base, NestProd):
			left = f'({left})'
		if isinstance(e.inserted, NestProd):
			right = f'({right})'
		return left + op + right
	inner = _render_vertex(e.body, op, star)
	if isinstance(e.body, Union):
		return inner + star
	return '{' + inner + '}' + star


def _skeleton(e: WalkExpr, token: Callable[[Edge], str]) -> Tuple[Tuple[int, ...], Dict[int, List[str]]]:
	if isinstance(e, Atom):
		return e.walk.vertices, {}
	if isinstance(e, Trivial):
		return (e.vertex,), {}
	if isinstance(e, NestProd):
		seq, slots = _skeleton(e.base, token)
		beta = head_vertex(e.inserted)
		j = len(seq) - 1 - seq[::-1].index(beta)
		slots.setdefault(j, []).append(_splice(e.inserted, token)[0])
		return seq, slots
	raise ValidationError('a union or star cannot be the base of a nesting in edge rendering', field='expr')


def _splice(e: WalkExpr, token: Callable[[Edge], str]) -> Tuple[str, bool]:
	"""(text, is a single edge token)."""
	if isinstance(e, Union):
		parts = [_splice(m, token)[0] for m in e.members]
		if len(parts) == 1:
			return parts[0], False
		return '+'.join(parts), False
	if isinstance(e, Star):
		if is_trivial_only(e.body):
			return '', False
		text, single = _splice(e.body, token)
		if single:
			return text + '*', False
		return f'({text})*', False
	seq, slots = _skeleton(e, token)
	parts: List[str] = []
	for i, v in enumerate(seq):
		parts.extend(slots.get(i, []))
		if i + 1 < len(seq):
			parts.append(token((v, seq[i + 1])))
	single = len(seq) == 2 and not any(slots.values())
	return ''.join(parts), single


def render(e: WalkExpr, q: Quiver, mode: str = 'vertex', charset: Optional[str] = None) -> str:
	if mode not in MODES:
		raise ValidationError(f'unknown render mode {mode!r}', field='mode')
	if mode == 'vertex':
		op, star = _symbols(charset)
		return _render_vertex(e, op, star)
	if isinstance(e, Union) and not e.members:
		return '{}'

	if mode == 'edge':
		compact = q.single_char_names

		def token(edge: Edge) -> str:
			tail, head = q.name(edge[0]), q.name(edge[1])
			return f'({tail}{head})' if compact else f'({tail} {head})'

	else:

		def token(edge: Edge) -> str:
			label = q.label(edge)
			if label is None:
				raise MissingLabelError((q.name(edge[0]), q.name(edge[1])))
			return label if len(label) == 1 else f'({label})'

	text, _ = _splice(e, token)
	return text or '()'


def walk_labels(q: Quiver, w: Walk) -> str:
	"""Label word of a walk (language-mode oracle)."""
	out = []
	for edge in w.edges():
		label = q.label(edge)
		if label is None:
			raise MissingLabelError((q.name(edge[0]), q.name(edge[1])))
		out.append(label)
	return ''.join(out)


# ── Parsing ────────────────────────────────────────────────────


class _Parser:
	"""Recursive-descent reader shared by the tree and expression grammars."""

	def __init__(self, q: Quiver, text: str):
		self.q = q
		self.text = text
		self.pos = 0

	def skip(self) -> None:
		while self.pos < len(self.text) and self.text[self.pos].isspace():
			self.pos += 1

	def peek(self) -> str:
		self.skip()
		return self.text[self.pos] if self.pos < len(self.text) else ''

	def expect(self, ch: str) -> None:
		if self.peek() != ch:
			raise ParseError(f'expected {ch!r}', offset=self.pos)
		self.pos += 1

	def at_end(self) -> bool:
		return self.peek() == ''

	def _closing_paren(self) -> int:
		depth = 0
		for i in range(self.pos, len(self.text)):
			if self.text[i] == '(':
				depth += 1
			elif self.text[i] == ')':
				depth -= 1
				if depth == 0:
					return i
		raise ParseError('unbalanced parenthesis', offset=self.pos)

	def walk_literal(self) -> Optional[Walk]:
		"""A walk token at the cursor, or None when the cursor opens a group."""
		ch = self.peek()
		start = self.pos
		if ch == '(':
			close = self._closing_paren()
			content = self.text[start + 1 : close]
			if not content.strip() or any(c in _SPECIAL for c in content):
				return None
			self.pos = close + 1
			return self._walk(self.text[start : close + 1], start)
		end = start
		while end < len(self.text) and not self.text[end].isspace() and self.text[end] not in _SPECIAL:
			end += 1
		if end == start:
			raise ParseError(f'unexpected {ch!r}' if ch else 'unexpected end of input', offset=start)
		self.pos = end
		return self._walk(self.text[start:end], start)

	def _walk(self, token: str, offset: int) -> Walk:
		try:
			return parse_walk(self.q, token)
		except ParseError as e:
			raise ParseError(f'bad walk {token!r}: {e.message}', offset=offset) from e

	def exponent(self) -> int:
		ch = self.peek()
		if ch == '^':
			self.pos += 1
			start = self.pos
			while self.pos < len(self.text) and self.text[self.pos].isdigit():
				self.pos += 1
			digits = self.text[start : self.pos]
		else:
			start = self.pos
			while self.pos < len(self.text) and self.text[self.pos] in '⁰¹²³⁴⁵⁶⁷⁸⁹':
				self.pos += 1
			digits = self.text[start : self.pos].translate(_FROM_SUPERSCRIPTS)
		if not digits or int(digits) < 1:
			raise ParseError('power must be a positive integer', offset=start)
		return int(digits)


def parse_tree(q: Quiver, text: str) -> FactorTree:
	p = _Parser(q, text)

	def _term() -> FactorTree:
		if p.peek() == '(':
			w = p.walk_literal()
			if w is None:
				p.expect('(')
				node = _expr()
				p.expect(')')
			else:
				node = Leaf(w)
		else:
			node = Leaf(p.walk_literal())
		nxt = p.peek()
		if nxt == '^' or (nxt and nxt in '⁰¹²³⁴⁵⁶⁷⁸⁹'):
			if not isinstance(node, Leaf):
				raise ParseError('powers apply to single walks', offset=p.pos)
			node = chain(*([node] * p.exponent()))
		return node

	def _expr() -> FactorTree:
		node = _term()
		while p.peek() in _OPS and p.peek():
			p.pos += 1
			node = Nest(node, _term())
		return node

	tree = _expr()
	if not p.at_end():
		raise ParseError('trailing input', offset=p.pos)
	return tree


def parse_expr(q: Quiver, text: str) -> WalkExpr:
	"""Read the vertex-mode rendering back into a WalkExpr."""
	p = _Parser(q, text)

	def _primary() -> WalkExpr:
		ch = p.peek()
		if ch == '{':
			start = p.pos
			p.pos += 1
			members: List[WalkExpr] = []
			if p.peek() != '}':
				members.append(_expr())
				while p.peek() == ',':
					p.pos += 1
					members.append(_expr())
			p.expect('}')
			if not shares_endpoints(members):
				raise ParseError('union members must share head and tail', offset=start)
			if p.peek() in _STARS and p.peek():
				p.pos += 1
				if not members:
					raise ParseError('star of an empty set', offset=start)
				body = union_of(members)
				if head_vertex(body) != tail_vertex(body):
					raise ParseError('star body must consist of cycles off one vertex', offset=start)
				return Star(body, head_vertex(body), q)
			return union_of(members)
		if ch == '(':
			w = p.walk_literal()
			if w is not None:
				return _atom(w)
			p.expect('(')
			node = _expr()
			p.expect(')')
			return node
		return _atom(p.walk_literal())

	def _atom(w: Walk) -> WalkExpr:
		return Trivial(w.head, q) if w.is_trivial else Atom(w)

	def _expr() -> WalkExpr:
		node = _primary()
		while p.peek() in _OPS and p.peek():
			p.pos += 1
			node = NestProd(node, _primary())
		return node

	expr = _expr()
	if not p.at_end():
		raise ParseError('trailing input', offset=p.pos)
	return expr

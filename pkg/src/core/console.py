"""
Console Output Utilities for the quiverwalks CLI.
Results go to stdout as plain text; diagnostics go to stderr through rich.
"""

import sys

from rich.console import Console as RichConsole
from rich.markup import escape


class Console:
	"""
	Split output handler: plain stdout for results, styled stderr for diagnostics.
	"""

	SYMBOL_ERROR = 'error'
	SYMBOL_WARNING = 'warning'

	def __init__(self):
		self._err = RichConsole(stderr=True, highlight=False, soft_wrap=True)

	def result(self, text: str) -> None:
		"""Write one result line to stdout, unstyled."""
		sys.stdout.write(text + '\n')

	def error(self, message: str, code: str = '') -> None:
		label = f'{self.SYMBOL_ERROR}[{code}]' if code else self.SYMBOL_ERROR
		self._err.print(f'[bold red]{escape(label)}[/bold red]: {escape(message)}')

	def warning(self, message: str) -> None:
		self._err.print(f'[yellow]{self.SYMBOL_WARNING}[/yellow]: {escape(message)}')

	def info(self, message: str) -> None:
		self._err.print(f'[dim]{escape(message)}[/dim]')


console = Console()

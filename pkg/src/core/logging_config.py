import logging
import sys
from typing import Optional

import structlog

from src.core.config import settings

# Held at WARNING or above whatever LOG_LEVEL says.
_QUIET_LOGGERS = ('sympy', 'networkx')


def _renderer(colors: bool = True):
	if settings.is_production:
		return structlog.processors.JSONRenderer()
	return structlog.dev.ConsoleRenderer(colors=colors)


def configure_logging() -> None:
	"""
	Configure structured logging for the CLI.
	Logs go to stderr; stdout carries command output only.
	"""

	shared_processors = [
		structlog.contextvars.merge_contextvars,
		structlog.stdlib.add_logger_name,
		structlog.stdlib.add_log_level,
		structlog.stdlib.PositionalArgumentsFormatter(),
		structlog.processors.TimeStamper(fmt='iso'),
		structlog.processors.StackInfoRenderer(),
	]
	tail = [structlog.processors.dict_tracebacks] if settings.is_production else []

	structlog.configure(
		processors=shared_processors + tail + [_renderer()],
		logger_factory=structlog.stdlib.LoggerFactory(),
		wrapper_class=structlog.stdlib.BoundLogger,
		cache_logger_on_first_use=True,
	)

	handler = logging.StreamHandler(sys.stderr)
	handler.setFormatter(
		structlog.stdlib.ProcessorFormatter(
			foreign_pre_chain=shared_processors,
			processors=[structlog.stdlib.ProcessorFormatter.remove_processors_meta, _renderer(colors=False)],
		)
	)

	root_logger = logging.getLogger()
	root_logger.handlers = [handler]
	root_logger.setLevel(settings.get_log_level())

	for name in _QUIET_LOGGERS:
		logging.getLogger(name).setLevel(max(logging.WARNING, settings.get_log_level()))


def bind_run_context(command: str, graph: Optional[str] = None, family: Optional[str] = None) -> None:
	"""Attach the subcommand and graph source to every log line of this run."""
	structlog.contextvars.clear_contextvars()
	context = {'command': command}
	if graph:
		context['graph'] = graph
	elif family:
		context['family'] = family
	structlog.contextvars.bind_contextvars(**context)

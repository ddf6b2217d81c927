import logging

import pytest
import structlog
from pydantic import ValidationError as PydanticValidationError

from src.core.config import Settings
from src.core.exceptions import CapExceededError, NonInvertibleError, QuiverWalkException, SingularBracketError
from src.core.logging_config import bind_run_context, configure_logging


class TestSettings:
	def test_defaults(self, monkeypatch):
		for name in ('LOG_LEVEL', 'QW_ENUMERATION_CAP', 'QW_RCOND_THRESHOLD', 'QW_CHARSET'):
			monkeypatch.delenv(name, raising=False)
		s = Settings(_env_file=None)
		assert s.enumeration_cap == 1_000_000
		assert s.charset == 'ascii'
		assert s.get_log_level() == logging.WARNING

	def test_environment_overrides(self, monkeypatch):
		monkeypatch.setenv('QW_ENUMERATION_CAP', '50')
		monkeypatch.setenv('LOG_LEVEL', 'debug')
		s = Settings(_env_file=None)
		assert s.enumeration_cap == 50
		assert s.get_log_level() == logging.DEBUG

	def test_validators(self):
		with pytest.raises(PydanticValidationError):
			Settings(_env_file=None, QW_ENUMERATION_CAP=0)
		with pytest.raises(PydanticValidationError):
			Settings(_env_file=None, QW_RCOND_THRESHOLD=1.5)
		with pytest.raises(PydanticValidationError):
			Settings(_env_file=None, QW_CHARSET='latin1')


class TestExceptions:
	def test_to_dict(self):
		err = CapExceededError(10, 'walk enumeration')
		assert err.to_dict() == {
			'error': True,
			'code': 'CAP_EXCEEDED',
			'message': 'walk enumeration exceeded the cardinality cap of 10',
			'details': {'cap': 10, 'what': 'walk enumeration'},
		}
		assert isinstance(err, QuiverWalkException)
		assert err.exit_code == 2

	def test_diagnostics_name_the_vertex(self):
		err = NonInvertibleError(vertex='3', deleted=['1', '2'])
		assert err.details == {'vertex': '3', 'deleted': ['1', '2']}
		assert 'vertex 3' in err.message
		singular = SingularBracketError('2', [], 0.0)
		assert singular.details['rcond'] == 0.0
		assert 'vertex 2' in singular.message


class TestLoggingContext:
	def test_binds_command_and_graph_source(self):
		bind_run_context('genfunc', graph='example5.yaml')
		assert structlog.contextvars.get_contextvars() == {'command': 'genfunc', 'graph': 'example5.yaml'}
		bind_run_context('enumerate', family='complete:3')
		assert structlog.contextvars.get_contextvars() == {'command': 'enumerate', 'family': 'complete:3'}
		structlog.contextvars.clear_contextvars()

	def test_library_loggers_stay_quiet(self, monkeypatch):
		monkeypatch.setattr('src.core.logging_config.settings', Settings(_env_file=None, LOG_LEVEL='DEBUG'))
		root = logging.getLogger()
		saved = (root.handlers[:], root.level)
		try:
			configure_logging()
			assert root.level == logging.DEBUG
			assert logging.getLogger('sympy').level == logging.WARNING
		finally:
			root.handlers = saved[0]
			root.setLevel(saved[1])

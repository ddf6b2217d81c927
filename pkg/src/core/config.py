import logging
from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
	"""
	Application Settings managed by Pydantic.
	Reads from environment variables and .env file.
	"""

	# ============================================
	# Environment & Logging
	# ============================================
	environment: Literal['development', 'staging', 'production'] = Field('development', alias='ENVIRONMENT')
	log_level: str = Field('WARNING', alias='LOG_LEVEL')

	# ============================================
	# Enumeration Guards
	# ============================================
	enumeration_cap: int = Field(1_000_000, alias='QW_ENUMERATION_CAP')
	divides_max_length: int = Field(12, alias='QW_DIVIDES_MAX_LENGTH')
	factorization_bound: int = Field(8, alias='QW_FACTORIZATION_BOUND')
	longest_path_max_vertices: int = Field(12, alias='QW_LONGEST_PATH_MAX_VERTICES')

	# ============================================
	# Numerics
	# ============================================
	rcond_threshold: float = Field(1e-12, alias='QW_RCOND_THRESHOLD')

	# ============================================
	# Output
	# ============================================
	charset: Literal['ascii', 'unicode'] = Field('ascii', alias='QW_CHARSET')

	model_config = SettingsConfigDict(env_file='.env', env_file_encoding='utf-8', extra='ignore', populate_by_name=True)

	@field_validator('enumeration_cap', 'divides_max_length', 'factorization_bound', 'longest_path_max_vertices')
	@classmethod
	def validate_positive(cls, v: int) -> int:
		if v <= 0:
			raise ValueError('must be a positive integer')
		return v

	@field_validator('rcond_threshold')
	@classmethod
	def validate_threshold(cls, v: float) -> float:
		if not 0 < v < 1:
			raise ValueError('must lie strictly between 0 and 1')
		return v

	@property
	def is_production(self) -> bool:
		return self.environment == 'production'

	def get_log_level(self) -> int:
		"""Get logging level as integer."""
		return getattr(logging, self.log_level.upper(), logging.WARNING)


settings = Settings()

from typing import List

from pydantic import BaseModel, ConfigDict, Field


class PathEnd(BaseModel):
	vertex: str = Field(..., description='Terminal vertex of a longest simple path')
	has_loop: bool = Field(..., description='Whether the terminal vertex carries a self-loop')

	model_config = ConfigDict(extra='forbid', frozen=True)


class LongestPathReport(BaseModel):
	"""
	Longest simple paths starting on one vertex.
	"""

	start: str = Field(..., description='Query vertex')
	length: int = Field(..., ge=0, description='Length of the longest simple paths')
	ends: List[PathEnd] = Field(default_factory=list, description='Distinct terminal vertices of the longest paths')
	witness: List[str] = Field(default_factory=list, description='One longest path, preferring one that ends on a loop')

	model_config = ConfigDict(extra='forbid')


class StarHeightReport(BaseModel):
	"""
	Star height of the factorized walk ensembles of a connected undirected graph.
	"""

	vertex: str = Field(..., description='Query vertex')
	height: int = Field(..., ge=0, description='Star height')
	longest_path_length: int = Field(..., ge=0, description='Length of the longest simple paths from the vertex')
	witness: List[str] = Field(default_factory=list, description='A longest simple path from the vertex')
	witness_ends_on_loop: bool = Field(default=False, description='Whether the witness ends on a looped vertex')
	method: str = Field(default='longest-simple-path', description='longest-simple-path or recursion')

	model_config = ConfigDict(extra='forbid')

"""Graph products of cyclic groups: words, cube complexes, embeddings and
surface-subgroup classification."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

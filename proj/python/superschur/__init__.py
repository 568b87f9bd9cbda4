"""Exact Schur multipliers of Lie superalgebras and pairs."""

from ._superschur import *  # noqa: F401,F403
from ._superschur import __version__  # noqa: F401

"""Python bindings for the markovlab C++ library."""

from ._core import *  # noqa: F401,F403
from ._core import (
    CancellationError,
    DegenerateSpectrum,
    Infeasible,
    InvalidArgument,
    InterlacingError,
    MarkovlabError,
)

__version__ = "0.1.0"

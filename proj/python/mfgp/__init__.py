"""Multi-fidelity Gaussian-process surrogates with cost-aware adaptive sampling."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401

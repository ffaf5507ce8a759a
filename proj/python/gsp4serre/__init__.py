"""Exact Serre-weight predictions for tame p-ordinary symplectic inertial types."""

try:
    from ._gsp4serre import *  # noqa: F401,F403
    from ._gsp4serre import Gsp4Error  # noqa: F401
except ImportError:  # running against a plain cmake build directory
    from _gsp4serre import *  # noqa: F401,F403
    from _gsp4serre import Gsp4Error  # noqa: F401

__version__ = "0.1.0"

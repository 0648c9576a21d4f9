"""Kernel backend selection: the compiled extension when built, else pure Python."""
from kdistant import _pykernels

try:
    from kdistant import _ckernels as _impl
except ImportError:  # extension not built
    _impl = _pykernels

BACKEND = _impl.BACKEND
profile_count = _impl.profile_count
crossing_distance_histogram = _impl.crossing_distance_histogram

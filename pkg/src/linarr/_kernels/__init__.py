"""Backend dispatch for the hot loops.

The compiled extension (`linarr._kernels._speed`) is used when it imported
cleanly; `linarr._kernels._ref` holds numpy/pure-Python equivalents. Setting
LINARR_PURE=1 forces the reference backend. Both backends consume the same
pre-drawn numpy arrays and perform identical integer/double arithmetic, so
results are bit-for-bit equal either way.
"""
import os

from . import _ref

_impl = _ref
_backend_name = "python"

if not os.environ.get("LINARR_PURE"):
    try:
        from . import _speed as _impl_mod

        _impl = _impl_mod
        _backend_name = "native"
    except ImportError:
        pass


def backend() -> str:
    """Name of the active backend: 'native' or 'python'."""
    return _backend_name


def distribution_from_table(table, rows, dmax):
    return _impl.distribution_from_table(table, rows, dmax)


def stream_distribution(n, eu, ev):
    return _impl.stream_distribution(n, eu, ev)


def gnm_prefix_variances(n, pu, pv):
    return _impl.gnm_prefix_variances(n, pu, pv)


def tree_draws_d(codes, perms):
    return _impl.tree_draws_d(codes, perms)


def arrangements_d(eu, ev, perms):
    return _impl.arrangements_d(eu, ev, perms)

"""Mutation matrix kernels.

The hot loop of the package is the single-vertex mutation of a signed
weight matrix, called millions of times by the breadth-first reddening
search.  Two interchangeable implementations live here:

* a numba ``@njit`` kernel (default when numba is importable), and
* a pure-numpy fallback using exact object arithmetic.

Selection: set ``QMUT_BACKEND=numpy`` to force the fallback, or
``QMUT_BACKEND=numba`` to require the jit path (ImportError if numba is
missing).  Both paths perform checked 64-bit arithmetic: an overflowing
mutation raises ``ArithmeticOverflow`` instead of wrapping.
"""

import os

import numpy as np

from .errors import ArithmeticOverflow

INT64_MAX = np.iinfo(np.int64).max

_BACKEND = os.environ.get("QMUT_BACKEND", "").strip().lower()

if _BACKEND not in ("", "numba", "numpy"):
    raise ValueError(f"QMUT_BACKEND must be 'numba' or 'numpy', got {_BACKEND!r}")

try:
    if _BACKEND == "numpy":
        raise ImportError
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    if _BACKEND == "numba":
        raise
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f

        if args and callable(args[0]):
            return args[0]
        return wrap


@njit(cache=True)
def _mutate_njit(b, k, n_mut):
    """Checked mutation of the full signed weight matrix at index k.

    Returns (new matrix, overflow flag); frozen rows/cols occupy indices
    >= n_mut and frozen-frozen entries are zeroed.
    """
    n = b.shape[0]
    out = np.empty((n, n), dtype=np.int64)
    overflow = False
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                out[i, j] = -b[i, j]
            else:
                w = b[i, j]
                a = b[i, k]
                c = b[k, j]
                if a > 0 and c > 0:
                    if a > INT64_MAX // c:
                        overflow = True
                        p = 0
                    else:
                        p = a * c
                    if w > INT64_MAX - p:
                        overflow = True
                    w = w + p
                elif a < 0 and c < 0:
                    # product positive, sign(a) negative: subtract
                    if (-a) > INT64_MAX // (-c):
                        overflow = True
                        p = 0
                    else:
                        p = a * c
                    if w < -INT64_MAX - 1 + p:
                        overflow = True
                    w = w - p
                out[i, j] = w
    for i in range(n_mut, n):
        for j in range(n_mut, n):
            out[i, j] = 0
    return out, overflow


def _mutate_numpy(b, k, n_mut):
    """Fallback path: exact python-int arithmetic via an object array."""
    bo = b.astype(object)
    col = bo[:, k : k + 1]
    row = bo[k : k + 1, :]
    prod = col * row
    out = bo + np.sign(col) * np.maximum(prod, 0)
    out[k, :] = -bo[k, :]
    out[:, k] = -bo[:, k]
    out[n_mut:, n_mut:] = 0
    if np.abs(out).max(initial=0) > INT64_MAX:
        return None, True
    return out.astype(np.int64), False


def mutate_matrix(b, k, n_mut):
    """Mutate the n x n signed weight matrix at mutable index k.

    Vertex order is mutables first (indices < n_mut) then frozens;
    raises ArithmeticOverflow when a weight leaves the int64 range.
    """
    if HAVE_NUMBA:
        out, overflow = _mutate_njit(b, k, n_mut)
    else:
        out, overflow = _mutate_numpy(b, k, n_mut)
    if overflow:
        raise ArithmeticOverflow()
    return out


def backend_name():
    return "numba" if HAVE_NUMBA else "numpy"

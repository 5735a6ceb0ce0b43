"""Hot numeric kernels for the clustering loop, in two flavours.

The numba-compiled versions are used by default. Set the environment
variable SENTICLUST_DISABLE_NUMBA=1 (or uninstall numba) to run on the pure
numpy implementations instead; both produce the same results. The active
flavour is fixed at import time and reported by `active_backend()`.

Matrices arrive as raw CSR arrays: float64 `data`, int64 `indices` (column
ids) and int64 `indptr` (row offsets, length rows+1).

Kernel set:
  - row_norms(data, indices, indptr, n_rows)        -> (n_rows,) L2 norms
  - two_centroid_dots(data, indices, indptr, c1, c2) -> per-row dot products
  - group_sums(data, indices, indptr, labels, n_cols) -> per-group column sums
"""

from __future__ import annotations

import os

import numpy as np

ENV_DISABLE = "SENTICLUST_DISABLE_NUMBA"


def _numba_requested() -> bool:
    return os.environ.get(ENV_DISABLE, "").strip() in ("", "0")


def _row_norms_np(data, indices, indptr, n_rows):
    cumulative = np.concatenate(([0.0], np.cumsum(data * data)))
    sums = cumulative[indptr[1:]] - cumulative[indptr[:-1]]
    return np.sqrt(np.maximum(sums, 0.0))


def _two_centroid_dots_np(data, indices, indptr, c1, c2):
    weighted1 = data * c1[indices]
    weighted2 = data * c2[indices]
    cum1 = np.concatenate(([0.0], np.cumsum(weighted1)))
    cum2 = np.concatenate(([0.0], np.cumsum(weighted2)))
    dots1 = cum1[indptr[1:]] - cum1[indptr[:-1]]
    dots2 = cum2[indptr[1:]] - cum2[indptr[:-1]]
    return dots1, dots2


def _group_sums_np(data, indices, indptr, labels, n_cols):
    n_rows = labels.size
    row_of_entry = np.repeat(np.arange(n_rows), np.diff(indptr))
    entry_labels = labels[row_of_entry]
    mask1 = entry_labels == 0
    mask2 = entry_labels == 1
    sum1 = np.bincount(indices[mask1], weights=data[mask1], minlength=n_cols)
    sum2 = np.bincount(indices[mask2], weights=data[mask2], minlength=n_cols)
    count1 = int(np.count_nonzero(labels == 0))
    count2 = int(np.count_nonzero(labels == 1))
    return sum1.astype(np.float64), sum2.astype(np.float64), count1, count2


_HAVE_NUMBA = False
if _numba_requested():
    try:
        from numba import njit

        _HAVE_NUMBA = True
    except ImportError:
        _HAVE_NUMBA = False

if _HAVE_NUMBA:

    @njit(cache=True, nogil=True)
    def _row_norms_nb(data, indices, indptr, n_rows):
        out = np.empty(n_rows, dtype=np.float64)
        for i in range(n_rows):
            acc = 0.0
            for j in range(indptr[i], indptr[i + 1]):
                acc += data[j] * data[j]
            out[i] = np.sqrt(acc)
        return out

    @njit(cache=True, nogil=True)
    def _two_centroid_dots_nb(data, indices, indptr, c1, c2):
        n_rows = indptr.size - 1
        dots1 = np.empty(n_rows, dtype=np.float64)
        dots2 = np.empty(n_rows, dtype=np.float64)
        for i in range(n_rows):
            acc1 = 0.0
            acc2 = 0.0
            for j in range(indptr[i], indptr[i + 1]):
                value = data[j]
                column = indices[j]
                acc1 += value * c1[column]
                acc2 += value * c2[column]
            dots1[i] = acc1
            dots2[i] = acc2
        return dots1, dots2

    @njit(cache=True, nogil=True)
    def _group_sums_nb(data, indices, indptr, labels, n_cols):
        sum1 = np.zeros(n_cols, dtype=np.float64)
        sum2 = np.zeros(n_cols, dtype=np.float64)
        count1 = 0
        count2 = 0
        for i in range(labels.size):
            label = labels[i]
            if label == 0:
                count1 += 1
                for j in range(indptr[i], indptr[i + 1]):
                    sum1[indices[j]] += data[j]
            elif label == 1:
                count2 += 1
                for j in range(indptr[i], indptr[i + 1]):
                    sum2[indices[j]] += data[j]
        return sum1, sum2, count1, count2


NUMPY_BACKEND = {
    "row_norms": _row_norms_np,
    "two_centroid_dots": _two_centroid_dots_np,
    "group_sums": _group_sums_np,
}

if _HAVE_NUMBA:
    NUMBA_BACKEND = {
        "row_norms": _row_norms_nb,
        "two_centroid_dots": _two_centroid_dots_nb,
        "group_sums": _group_sums_nb,
    }
    _ACTIVE = NUMBA_BACKEND
    _ACTIVE_NAME = "numba"
else:
    NUMBA_BACKEND = None
    _ACTIVE = NUMPY_BACKEND
    _ACTIVE_NAME = "numpy"


def active_backend() -> str:
    return _ACTIVE_NAME


def get_backend(name: str | None = None) -> dict:
    """Return a kernel table by name; None means the active one."""
    if name is None:
        return _ACTIVE
    if name == "numpy":
        return NUMPY_BACKEND
    if name == "numba":
        if NUMBA_BACKEND is None:
            raise RuntimeError("numba backend unavailable (disabled or not installed)")
        return NUMBA_BACKEND
    raise ValueError(f"unknown backend {name!r}")


def row_norms(data, indices, indptr, n_rows, backend: dict | None = None):
    return (backend or _ACTIVE)["row_norms"](data, indices, indptr, n_rows)


def two_centroid_dots(data, indices, indptr, c1, c2, backend: dict | None = None):
    return (backend or _ACTIVE)["two_centroid_dots"](data, indices, indptr, c1, c2)


def group_sums(data, indices, indptr, labels, n_cols, backend: dict | None = None):
    return (backend or _ACTIVE)["group_sums"](data, indices, indptr, labels, n_cols)

"""Minimal write-once CSR storage for document-term matrices."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels


@dataclass(frozen=True)
class CsrMatrix:
    data: np.ndarray  # float64 values
    indices: np.ndarray  # int64 column ids, sorted within each row
    indptr: np.ndarray  # int64 offsets, length n_rows + 1
    n_cols: int

    @property
    def n_rows(self) -> int:
        return self.indptr.size - 1

    @classmethod
    def from_rows(cls, rows: list[dict[int, float]], n_cols: int) -> "CsrMatrix":
        """Build from one {column: value} mapping per row."""
        indptr = np.zeros(len(rows) + 1, dtype=np.int64)
        columns: list[int] = []
        values: list[float] = []
        for i, row in enumerate(rows):
            for column in sorted(row):
                columns.append(column)
                values.append(row[column])
            indptr[i + 1] = len(columns)
        return cls(
            data=np.asarray(values, dtype=np.float64),
            indices=np.asarray(columns, dtype=np.int64),
            indptr=indptr,
            n_cols=n_cols,
        )

    @classmethod
    def from_dense(cls, dense) -> "CsrMatrix":
        dense = np.asarray(dense, dtype=np.float64)
        rows = [
            {int(j): float(dense[i, j]) for j in np.nonzero(dense[i])[0]}
            for i in range(dense.shape[0])
        ]
        return cls.from_rows(rows, dense.shape[1])

    def with_data(self, new_data: np.ndarray) -> "CsrMatrix":
        """Same sparsity structure, different values."""
        if new_data.shape != self.data.shape:
            raise ValueError("replacement data must match the existing structure")
        return CsrMatrix(
            data=np.asarray(new_data, dtype=np.float64),
            indices=self.indices,
            indptr=self.indptr,
            n_cols=self.n_cols,
        )

    def row(self, i: int) -> tuple[np.ndarray, np.ndarray]:
        start, end = self.indptr[i], self.indptr[i + 1]
        return self.indices[start:end], self.data[start:end]

    def row_dense(self, i: int) -> np.ndarray:
        out = np.zeros(self.n_cols, dtype=np.float64)
        columns, values = self.row(i)
        out[columns] = values
        return out

    def toarray(self) -> np.ndarray:
        out = np.zeros((self.n_rows, self.n_cols), dtype=np.float64)
        for i in range(self.n_rows):
            columns, values = self.row(i)
            out[i, columns] = values
        return out

    def row_lengths(self) -> np.ndarray:
        return np.diff(self.indptr)

    def row_norms(self, backend: dict | None = None) -> np.ndarray:
        return kernels.row_norms(self.data, self.indices, self.indptr, self.n_rows, backend)

    def two_centroid_dots(self, c1, c2, backend: dict | None = None):
        return kernels.two_centroid_dots(self.data, self.indices, self.indptr, c1, c2, backend)

    def group_sums(self, labels, backend: dict | None = None):
        return kernels.group_sums(
            self.data, self.indices, self.indptr, labels, self.n_cols, backend
        )

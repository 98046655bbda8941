"""Exact integer matrices and their Smith normal form."""
import dataclasses as dcl
import logging
import typing as t

import numpy as np

from shelflab.errors import PreconditionError


SparseEntries = dict[tuple[int, int], int]


class IntMatrix:
    """A dense matrix of arbitrary-precision integers (numpy object dtype)."""

    def __init__(
        self, entries: t.Any, rows: int | None = None, cols: int | None = None,
    ) -> None:
        array = np.array(entries, dtype=object)
        if array.size == 0:
            shape = array.shape if rows is None or cols is None else (rows, cols)
            array = np.zeros(shape, dtype=object)
        if array.ndim != 2:  # noqa: PLR2004
            raise PreconditionError(f"Expected a 2-d matrix, got shape {array.shape}")
        if array.size:
            array = np.vectorize(int, otypes=[object])(array)
        self.entries = array

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(np.zeros((rows, cols), dtype=object), rows, cols)

    @classmethod
    def identity(cls, size: int) -> "IntMatrix":
        return cls(np.eye(size, dtype=int).astype(object), size, size)

    @classmethod
    def from_sparse(cls, entries: SparseEntries, rows: int, cols: int) -> "IntMatrix":
        array = np.zeros((rows, cols), dtype=object)
        for (i, j), value in entries.items():
            array[i, j] = value
        return cls(array, rows, cols)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise PreconditionError(f"Cannot multiply {self.shape} by {other.shape}")
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return IntMatrix.zeros(self.rows, other.cols)
        return IntMatrix(self.entries.dot(other.entries), self.rows, other.cols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and bool((self.entries == other.entries).all())

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"IntMatrix({self.entries.tolist()!r})"

    def is_zero(self) -> bool:
        return not self.entries.any() if self.entries.size else True

    def to_sparse(self) -> SparseEntries:
        return {
            (int(i), int(j)): int(self.entries[i, j])
            for i, j in zip(*np.nonzero(self.entries), strict=True)
        }

    def determinant(self) -> int:
        """Fraction-free (Bareiss) determinant."""
        if self.rows != self.cols:
            raise PreconditionError(f"Determinant of a non-square {self.shape} matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [[int(v) for v in row] for row in self.entries.tolist()]
        sign = 1
        previous = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
            previous = a[k][k]
        return sign * a[n - 1][n - 1]

    def is_unimodular(self) -> bool:
        return self.determinant() in (1, -1)

    def to_triplets(self) -> str:
        """Plain "rows cols" header followed by one "i j value" line per nonzero."""
        lines = [f"{self.rows} {self.cols}"]
        lines.extend(f"{i} {j} {v}" for (i, j), v in sorted(self.to_sparse().items()))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_triplets(cls, text: str) -> "IntMatrix":
        lines = [line.split() for line in text.splitlines() if line.strip()]
        if not lines or len(lines[0]) != 2:  # noqa: PLR2004
            raise PreconditionError("Triplet text must start with 'rows cols'")
        rows, cols = (int(v) for v in lines[0])
        entries: SparseEntries = {}
        for words in lines[1:]:
            i, j, value = (int(v) for v in words)
            entries[(i, j)] = value
        return cls.from_sparse(entries, rows, cols)


@dcl.dataclass
class SnfResult:
    """U @ A @ V == D, with D diagonal and d_1 | d_2 | ... | d_rank."""

    invariant_factors: list[int]
    rank: int
    diagonal: IntMatrix
    left_transform: IntMatrix | None = None
    right_transform: IntMatrix | None = None

    def torsion(self) -> list[int]:
        return [d for d in self.invariant_factors if d > 1]


def _least_nonzero(block: np.ndarray) -> tuple[int, int] | None:
    best = None
    best_value = 0
    for i, j in zip(*np.nonzero(block), strict=True):
        value = abs(block[i, j])
        if best is None or value < best_value:
            best, best_value = (int(i), int(j)), value
            if value == 1:
                break
    return best


def smith_normal_form(matrix: IntMatrix, *, transforms: bool = True) -> SnfResult:
    """Diagonalize by unimodular row and column operations.

    The pivot is always an entry of least absolute value, which keeps the
    entries from growing.
    """
    d = matrix.entries.copy()
    m, n = d.shape
    u = np.eye(m, dtype=int).astype(object) if transforms else None
    v = np.eye(n, dtype=int).astype(object) if transforms else None

    def swap_rows(i: int, j: int) -> None:
        if i != j:
            d[[i, j]] = d[[j, i]]
            if u is not None:
                u[[i, j]] = u[[j, i]]

    def swap_cols(i: int, j: int) -> None:
        if i != j:
            d[:, [i, j]] = d[:, [j, i]]
            if v is not None:
                v[:, [i, j]] = v[:, [j, i]]

    rank = 0
    for step in range(min(m, n)):
        found = _least_nonzero(d[step:, step:])
        if found is None:
            break
        swap_rows(step, step + found[0])
        swap_cols(step, step + found[1])
        while True:
            pivot = d[step, step]
            clean = True
            for i in range(step + 1, m):
                if q := d[i, step] // pivot:
                    d[i] -= q * d[step]
                    if u is not None:
                        u[i] -= q * u[step]
                clean &= d[i, step] == 0
            for j in range(step + 1, n):
                if q := d[step, j] // pivot:
                    d[:, j] -= q * d[:, step]
                    if v is not None:
                        v[:, j] -= q * v[:, step]
                clean &= d[step, j] == 0
            if not clean:
                # Some remainder is smaller than the pivot; bring it in.
                candidates = [
                    (abs(d[i, step]), 0, i) for i in range(step + 1, m) if d[i, step]
                ] + [
                    (abs(d[step, j]), 1, j) for j in range(step + 1, n) if d[step, j]
                ]
                _, axis, index = min(candidates)
                if axis == 0:
                    swap_rows(step, index)
                else:
                    swap_cols(step, index)
                continue
            if abs(pivot) != 1:
                rest = d[step + 1:, step + 1:]
                bad = np.argwhere(rest % pivot != 0) if rest.size else []
                if len(bad):
                    # Restore divisibility by folding an offending row in.
                    i = step + 1 + int(bad[0][0])
                    d[step] += d[i]
                    if u is not None:
                        u[step] += u[i]
                    continue
            break
        if d[step, step] < 0:
            d[step] = -d[step]
            if u is not None:
                u[step] = -u[step]
        rank += 1

    factors = [int(d[i, i]) for i in range(rank)]
    logging.debug("SNF of %dx%d matrix: rank %d", m, n, rank)
    return SnfResult(
        invariant_factors=factors,
        rank=rank,
        diagonal=IntMatrix(d, m, n),
        left_transform=IntMatrix(u, m, m) if u is not None else None,
        right_transform=IntMatrix(v, n, n) if v is not None else None,
    )


def sparse_invariant_factors(
    entries: SparseEntries, rows: int, cols: int,
) -> tuple[int, list[int]]:
    """Return (rank, invariant factors) of a sparse integer matrix.

    Entries of absolute value 1 are eliminated first, sparsely; whatever is
    left goes through the dense Smith normal form.
    """
    by_row: dict[int, dict[int, int]] = {}
    by_col: dict[int, set[int]] = {}
    for (i, j), value in entries.items():
        if value:
            by_row.setdefault(i, {})[j] = value
            by_col.setdefault(j, set()).add(i)

    def eliminate(pivot_row: int, pivot_col: int) -> None:
        source = by_row.pop(pivot_row)
        unit = source[pivot_col]
        for i in by_col.pop(pivot_col) - {pivot_row}:
            target = by_row[i]
            factor = target[pivot_col] * unit
            for j, value in source.items():
                updated = target.get(j, 0) - factor * value
                if updated:
                    if j not in target:
                        by_col[j].add(i)
                    target[j] = updated
                elif j in target:
                    del target[j]
                    if j != pivot_col:
                        by_col[j].discard(i)
            if not target:
                del by_row[i]
        for j in source:
            if j != pivot_col and j in by_col:
                by_col[j].discard(pivot_row)
                if not by_col[j]:
                    del by_col[j]

    pivots = 0
    progress = True
    while progress:
        progress = False
        for i in sorted(by_row, key=lambda i: len(by_row[i])):
            row = by_row.get(i)
            if row is None:
                continue
            units = [j for j, value in row.items() if value in (1, -1)]
            if not units:
                continue
            eliminate(i, min(units, key=lambda j: len(by_col[j])))
            pivots += 1
            progress = True

    residual_rows = sorted(by_row)
    residual_cols = sorted(j for j, members in by_col.items() if members)
    logging.debug(
        "Sparse elimination of %dx%d: %d unit pivots, %dx%d left",
        rows, cols, pivots, len(residual_rows), len(residual_cols),
    )
    if not residual_rows:
        return pivots, [1] * pivots
    row_index = {i: k for k, i in enumerate(residual_rows)}
    col_index = {j: k for k, j in enumerate(residual_cols)}
    residual = IntMatrix.from_sparse(
        {
            (row_index[i], col_index[j]): value
            for i, row in by_row.items()
            for j, value in row.items()
        },
        len(residual_rows),
        len(residual_cols),
    )
    result = smith_normal_form(residual, transforms=False)
    return pivots + result.rank, [1] * pivots + result.invariant_factors

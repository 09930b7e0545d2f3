"""Dense exact matrices and deterministic Gaussian elimination.

Row reduction always takes the leftmost column with a nonzero entry and,
within it, the topmost unfinished row, with no magnitude heuristics (they
would be meaningless for exact scalars anyway).  Echelon forms, ranks,
kernels and particular solutions are therefore reproducible byte for byte
across runs and platforms.
"""

from __future__ import annotations


class Matrix:
    """A rows x cols matrix of exact scalars over a shared field."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, data, cols: int | None = None):
        self.field = field
        self.data = [list(row) for row in data]
        self.rows = len(self.data)
        if self.rows:
            self.cols = len(self.data[0])
            for row in self.data:
                if len(row) != self.cols:
                    raise ValueError("ragged rows")
        else:
            self.cols = 0 if cols is None else cols

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zeros(cls, field, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return cls(field, [[z] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, field, columns, rows: int | None = None) -> "Matrix":
        columns = [list(c) for c in columns]
        if columns:
            rows = len(columns[0])
        elif rows is None:
            raise ValueError("from_columns with no columns needs an explicit row count")
        data = [[col[i] for col in columns] for i in range(rows)]
        return cls(field, data, cols=len(columns))

    @classmethod
    def stack(cls, field, blocks, cols: int | None = None) -> "Matrix":
        """Stack matrices (or raw row lists) vertically."""
        data = []
        for b in blocks:
            if isinstance(b, Matrix):
                if cols is None:
                    cols = b.cols
                elif b.cols != cols:
                    raise ValueError("column count mismatch in stack")
                data.extend(b.data)
            else:
                for row in b:
                    if cols is None:
                        cols = len(row)
                    elif len(row) != cols:
                        raise ValueError("column count mismatch in stack")
                    data.append(list(row))
        if cols is None:
            raise ValueError("cannot stack an empty block list without a column count")
        return cls(field, data, cols=cols)

    # ------------------------------------------------------------------
    # basic operations

    def column(self, j: int) -> list:
        return [row[j] for row in self.data]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, [list(col) for col in zip(*self.data)], cols=self.rows) \
            if self.rows else Matrix(self.field, [[] for _ in range(self.cols)], cols=0)

    def matvec(self, v: list) -> list:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch in matvec")
        f = self.field
        out = []
        for row in self.data:
            acc = f.zero
            for a, x in zip(row, v):
                if a and x:
                    acc = f.add(acc, f.mul(a, x))
            out.append(acc)
        return out

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise ValueError("field mismatch in matrix product")
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        f = self.field
        z = f.zero
        out = [[z] * other.cols for _ in range(self.rows)]
        for i in range(self.rows):
            row = self.data[i]
            acc = out[i]
            for k in range(self.cols):
                a = row[k]
                if not a:
                    continue
                brow = other.data[k]
                for j in range(other.cols):
                    b = brow[j]
                    if b:
                        acc[j] = f.add(acc[j], f.mul(a, b))
        return Matrix(f, out, cols=other.cols)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        f = self.field
        return Matrix(f, [[f.add(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.data, other.data)], cols=self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        f = self.field
        return Matrix(f, [[f.sub(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.data, other.data)], cols=self.cols)

    def _check_shape(self, other: "Matrix") -> None:
        if self.field != other.field or self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape or field mismatch")

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.data)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Matrix) and self.field == other.field
                and self.rows == other.rows and self.cols == other.cols
                and self.data == other.data)

    __hash__ = None  # matrices are mutable containers

    def __repr__(self) -> str:
        f = self.field
        body = "; ".join(", ".join(f.fmt(x) for x in row) for row in self.data)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    # ------------------------------------------------------------------
    # elimination

    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row echelon form and the list of pivot columns.

        Pivoting is leftmost-first: for each column in order, the first
        nonzero entry at or below the current row becomes the pivot.
        """
        f = self.field
        m = [row[:] for row in self.data]
        n_rows, n_cols = self.rows, self.cols
        pivots: list[int] = []
        r = 0
        for c in range(n_cols):
            pivot_row = None
            for i in range(r, n_rows):
                if m[i][c]:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            m[r], m[pivot_row] = m[pivot_row], m[r]
            pv = m[r][c]
            if pv != f.one:
                inv = f.inv(pv)
                m[r] = [f.mul(inv, x) for x in m[r]]
            mr = m[r]
            for i in range(n_rows):
                if i == r:
                    continue
                factor = m[i][c]
                if not factor:
                    continue
                mi = m[i]
                for j in range(c, n_cols):
                    if mr[j]:
                        mi[j] = f.sub(mi[j], f.mul(factor, mr[j]))
            pivots.append(c)
            r += 1
            if r == n_rows:
                break
        return Matrix(f, m, cols=n_cols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list[list]:
        """Basis of the right kernel, one vector per free column.

        Free columns are taken in ascending order; each basis vector has a
        one in its free position, so the result is deterministic.
        """
        reduced, pivots = self.rref()
        return kernel_from_rref(self.field, reduced, pivots)

    def solve(self, rhs: list) -> list | None:
        """One exact solution of self @ x = rhs, or None if inconsistent.

        Free variables are set to zero, so the particular solution is
        deterministic.
        """
        if len(rhs) != self.rows:
            raise ValueError("dimension mismatch in solve")
        f = self.field
        aug = Matrix(f, [row + [rhs[i]] for i, row in enumerate(self.data)],
                     cols=self.cols + 1)
        reduced, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [f.zero] * self.cols
        for r, c in enumerate(pivots):
            x[c] = reduced.data[r][self.cols]
        return x


def kernel_from_rref(field, reduced: Matrix, pivots: list[int]) -> list[list]:
    """Kernel basis read off an already reduced matrix (see Matrix.kernel_basis)."""
    pivot_set = set(pivots)
    free = [c for c in range(reduced.cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [field.zero] * reduced.cols
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            coeff = reduced.data[r][fc]
            if coeff:
                v[pc] = field.neg(coeff)
        basis.append(v)
    return basis

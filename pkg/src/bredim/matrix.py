"""Exact integer matrices and their normal forms.

Entries are plain Python integers, so every operation is exact at any size;
there is no overflow to detect and no fallback path.

Conventions used throughout the package:

* Hermite normal form is row-style: ``u @ m == h`` with ``u`` unimodular,
  pivots positive, every entry above a pivot reduced into ``[0, pivot)``,
  and zero rows collected at the bottom.  This form is unique, so two
  matrices have equal row span over the integers exactly when their Hermite
  forms agree after dropping zero rows.
* Smith normal form is two-sided: ``s @ m @ t == d`` with ``s`` and ``t``
  unimodular and ``d`` diagonal, ``d[0] | d[1] | ...``, all entries >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatchError

__all__ = [
    "IntMatrix",
    "ext_gcd",
    "hermite_normal_form",
    "smith_normal_form",
    "determinant",
    "rank",
    "left_kernel",
    "inverse_unimodular",
]


@dataclass(frozen=True)
class IntMatrix:
    """An immutable integer matrix stored row-major as a flat tuple."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatchError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, data: Iterable[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        """Build a matrix from an iterable of rows.

        ``cols`` is required when ``data`` is empty; otherwise it is checked
        against the row width.
        """
        rows = [list(r) for r in data]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise DimensionMismatchError("rows have unequal lengths")
            if cols is not None and cols != width:
                raise DimensionMismatchError(f"rows have {width} entries, expected {cols}")
        else:
            if cols is None:
                raise DimensionMismatchError("column count required for an empty matrix")
            width = cols
        flat = tuple(int(x) for r in rows for x in r)
        return cls(len(rows), width, flat)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def take_rows(self, indices: Sequence[int]) -> "IntMatrix":
        return IntMatrix.from_rows([self.row(i) for i in indices], cols=self.cols)

    def vstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.cols:
            raise DimensionMismatchError("cannot stack matrices of different widths")
        return IntMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum(ri[k] * other.at(k, j) for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.at(i, i) for i in range(min(self.rows, self.cols)))

    def format_rows(self) -> str:
        return "\n".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))

    def __str__(self) -> str:  # pragma: no cover - debugging aid
        return self.format_rows() if self.rows else f"(empty {self.rows}x{self.cols})"


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``g = gcd(a, b) >= 0`` and ``x*a + y*b == g``."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def _combine_rows(mat: list[list[int]], i: int, j: int, x: int, y: int, p: int, q: int) -> None:
    # row_i <- x*row_i + y*row_j ; row_j <- -q*row_i + p*row_j.
    # The 2x2 block [[x, y], [-q, p]] must have determinant 1.
    ri, rj = mat[i], mat[j]
    mat[i] = [x * a + y * b for a, b in zip(ri, rj)]
    mat[j] = [-q * a + p * b for a, b in zip(ri, rj)]


def _combine_cols(mat: list[list[int]], i: int, j: int, x: int, y: int, p: int, q: int) -> None:
    # col_i <- x*col_i + y*col_j ; col_j <- -q*col_i + p*col_j.
    for row in mat:
        a, b = row[i], row[j]
        row[i] = x * a + y * b
        row[j] = -q * a + p * b


def hermite_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form with its left transform.

    Returns ``(h, u)`` where ``u`` is unimodular, ``u @ m == h``, and ``h``
    is canonical: pivots positive, entries above each pivot reduced into
    ``[0, pivot)``, zero rows at the bottom.  ``h`` keeps the shape of ``m``;
    callers that want a lattice basis drop the zero rows.
    """
    a = m.to_rows()
    n_rows, n_cols = m.rows, m.cols
    u = [[1 if i == j else 0 for j in range(n_rows)] for i in range(n_rows)]
    pr = 0
    for col in range(n_cols):
        if pr == n_rows:
            break
        piv = next((i for i in range(pr, n_rows) if a[i][col] != 0), None)
        if piv is None:
            continue
        if piv != pr:
            a[pr], a[piv] = a[piv], a[pr]
            u[pr], u[piv] = u[piv], u[pr]
        for i in range(pr + 1, n_rows):
            if a[i][col] == 0:
                continue
            if a[i][col] % a[pr][col] == 0:
                d = a[i][col] // a[pr][col]
                a[i] = [v - d * w for v, w in zip(a[i], a[pr])]
                u[i] = [v - d * w for v, w in zip(u[i], u[pr])]
                continue
            g, x, y = ext_gcd(a[pr][col], a[i][col])
            p, q = a[pr][col] // g, a[i][col] // g
            _combine_rows(a, pr, i, x, y, p, q)
            _combine_rows(u, pr, i, x, y, p, q)
        if a[pr][col] < 0:
            a[pr] = [-v for v in a[pr]]
            u[pr] = [-v for v in u[pr]]
        piv_val = a[pr][col]
        for i in range(pr):
            q = a[i][col] // piv_val
            if q:
                a[i] = [v - q * w for v, w in zip(a[i], a[pr])]
                u[i] = [v - q * w for v, w in zip(u[i], u[pr])]
        pr += 1
    return IntMatrix.from_rows(a, n_cols), IntMatrix.from_rows(u, n_rows)


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form with both transforms.

    Returns ``(d, s, t)`` with ``s @ m @ t == d``; ``s`` and ``t`` are
    unimodular, ``d`` is diagonal with nonnegative entries forming a
    divisibility chain ``d[0] | d[1] | ...``.
    """
    n_rows, n_cols = m.rows, m.cols
    a = m.to_rows()
    s = [[1 if i == j else 0 for j in range(n_rows)] for i in range(n_rows)]
    t = [[1 if i == j else 0 for j in range(n_cols)] for i in range(n_cols)]

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        s[i], s[j] = s[j], s[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in t:
            row[i], row[j] = row[j], row[i]

    for k in range(min(n_rows, n_cols)):
        pivot_pos = next(
            ((i, j) for i in range(k, n_rows) for j in range(k, n_cols) if a[i][j] != 0),
            None,
        )
        if pivot_pos is None:
            break
        if pivot_pos[0] != k:
            swap_rows(k, pivot_pos[0])
        if pivot_pos[1] != k:
            swap_cols(k, pivot_pos[1])
        while True:
            for i in range(k + 1, n_rows):
                if a[i][k] == 0:
                    continue
                if a[i][k] % a[k][k] == 0:
                    # Plain shear; a full Bezout transform here would leak the
                    # other row back into the pivot row and can oscillate.
                    d = a[i][k] // a[k][k]
                    a[i] = [v - d * w for v, w in zip(a[i], a[k])]
                    s[i] = [v - d * w for v, w in zip(s[i], s[k])]
                    continue
                g, x, y = ext_gcd(a[k][k], a[i][k])
                p, q = a[k][k] // g, a[i][k] // g
                _combine_rows(a, k, i, x, y, p, q)
                _combine_rows(s, k, i, x, y, p, q)
            for j in range(k + 1, n_cols):
                if a[k][j] == 0:
                    continue
                if a[k][j] % a[k][k] == 0:
                    d = a[k][j] // a[k][k]
                    for row in a:
                        row[j] -= d * row[k]
                    for row in t:
                        row[j] -= d * row[k]
                    continue
                g, x, y = ext_gcd(a[k][k], a[k][j])
                p, q = a[k][k] // g, a[k][j] // g
                _combine_cols(a, k, j, x, y, p, q)
                _combine_cols(t, k, j, x, y, p, q)
            if any(a[i][k] != 0 for i in range(k + 1, n_rows)):
                continue
            # Pivot must divide the whole remaining block; if not, fold the
            # offending row into row k and clear again.  Each pass replaces
            # the pivot by a proper divisor, so this terminates.
            piv = a[k][k]
            bad = next(
                (
                    i
                    for i in range(k + 1, n_rows)
                    for j in range(k + 1, n_cols)
                    if a[i][j] % piv != 0
                ),
                None,
            )
            if bad is None:
                break
            a[k] = [v + w for v, w in zip(a[k], a[bad])]
            s[k] = [v + w for v, w in zip(s[k], s[bad])]
    for k in range(min(n_rows, n_cols)):
        if a[k][k] < 0:
            a[k] = [-v for v in a[k]]
            s[k] = [-v for v in s[k]]
    return IntMatrix.from_rows(a, n_cols), IntMatrix.from_rows(s, n_rows), IntMatrix.from_rows(t, n_cols)


def determinant(m: IntMatrix) -> int:
    """Exact determinant of a square matrix (fraction-free Bareiss elimination)."""
    if m.rows != m.cols:
        raise DimensionMismatchError("determinant needs a square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(m: IntMatrix) -> int:
    """Rank over the rationals (= number of nonzero rows of the Hermite form)."""
    h, _ = hermite_normal_form(m)
    return sum(1 for i in range(h.rows) if any(h.row(i)))


def left_kernel(m: IntMatrix) -> IntMatrix:
    """A basis of the left kernel ``{x : x @ m == 0}`` as matrix rows.

    The rows come from the unimodular Hermite transform, so they generate the
    full integer kernel (a direct summand of Z^rows).
    """
    h, u = hermite_normal_form(m)
    zero_rows = [i for i in range(h.rows) if not any(h.row(i))]
    return u.take_rows(zero_rows) if zero_rows else IntMatrix.from_rows([], cols=m.rows)


def inverse_unimodular(m: IntMatrix) -> IntMatrix:
    """Exact inverse of a unimodular matrix.

    The Hermite form of a unimodular matrix is the identity, so its left
    transform is the inverse.  Raises if ``m`` is not unimodular.
    """
    if m.rows != m.cols:
        raise DimensionMismatchError("only square matrices can be unimodular")
    h, u = hermite_normal_form(m)
    if h != IntMatrix.identity(m.rows):
        raise DimensionMismatchError("matrix is not unimodular")
    return u

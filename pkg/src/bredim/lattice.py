"""Exact arithmetic on subgroups of Z^n.

A :class:`Sublattice` is a finite-rank subgroup of Z^n stored by its
canonical basis: the row-style Hermite normal form of any generating set,
with zero rows dropped.  Canonical bases make equality of subgroups a plain
value comparison.

The operations here are the subgroup combinatorics the dimension formulas
rest on: indices, intersections, sums, commensurability, saturation
(the unique direct summand a finite-index overgroup lives in), direct
complements of saturated sublattices, and unimodular automorphisms carrying
one saturated sublattice onto another of the same rank.

All values are immutable and every function is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    AmbientMismatchError,
    ContainmentError,
    DimensionMismatchError,
    InputError,
    MaximalityRequiredError,
    ParseError,
    RankMismatchError,
)
from .matrix import (
    IntMatrix,
    determinant,
    hermite_normal_form,
    inverse_unimodular,
    left_kernel,
    smith_normal_form,
)

__all__ = [
    "IndexResult",
    "Sublattice",
    "sublattice_from_generators",
    "index",
    "intersect",
    "lattice_sum",
    "commensurable",
    "saturation",
    "is_maximal",
    "direct_complement",
    "mapping_automorphism",
    "unimodular_completion",
    "read_lattice",
    "write_lattice",
    "read_matrix",
    "write_matrix",
]


@dataclass(frozen=True)
class IndexResult:
    """The index of one sublattice in another: a positive integer or infinite."""

    value: int | None  # None means infinite

    def __post_init__(self) -> None:
        if self.value is not None and self.value < 1:
            raise InputError("a finite index is at least 1")

    @classmethod
    def finite(cls, value: int) -> "IndexResult":
        return cls(value)

    @classmethod
    def infinite(cls) -> "IndexResult":
        return cls(None)

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __str__(self) -> str:
        return "infinite" if self.value is None else str(self.value)


def _canonical_basis(ambient_dim: int, generators: IntMatrix) -> IntMatrix:
    h, _ = hermite_normal_form(generators)
    nonzero = [i for i in range(h.rows) if any(h.row(i))]
    return h.take_rows(nonzero) if nonzero else IntMatrix.from_rows([], cols=ambient_dim)


@dataclass(frozen=True)
class Sublattice:
    """A subgroup of Z^n in canonical Hermite-normal-form basis.

    ``basis`` has ``rank`` rows and ``ambient_dim`` columns; rows are
    linearly independent.  Use :meth:`from_generators` rather than the raw
    constructor, which insists on an already-canonical basis.
    """

    ambient_dim: int
    basis: IntMatrix

    def __post_init__(self) -> None:
        if self.ambient_dim < 0:
            raise DimensionMismatchError("ambient dimension must be nonnegative")
        if self.basis.cols != self.ambient_dim:
            raise DimensionMismatchError(
                f"basis has {self.basis.cols} columns, ambient dimension is {self.ambient_dim}"
            )
        if self.basis != _canonical_basis(self.ambient_dim, self.basis):
            raise InputError("basis is not in canonical Hermite normal form")

    @classmethod
    def from_generators(
        cls, ambient_dim: int, generators: Iterable[Sequence[int]]
    ) -> "Sublattice":
        gens = [list(v) for v in generators]
        for v in gens:
            if len(v) != ambient_dim:
                raise DimensionMismatchError(
                    f"generator {v} has length {len(v)}, ambient dimension is {ambient_dim}"
                )
        mat = IntMatrix.from_rows(gens, cols=ambient_dim)
        return cls(ambient_dim, _canonical_basis(ambient_dim, mat))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Sublattice":
        return cls.from_generators(ambient_dim, [])

    @classmethod
    def full(cls, ambient_dim: int) -> "Sublattice":
        return cls(ambient_dim, IntMatrix.identity(ambient_dim))

    @property
    def rank(self) -> int:
        return self.basis.rows

    @property
    def is_full(self) -> bool:
        return self.rank == self.ambient_dim and self.basis == IntMatrix.identity(self.ambient_dim)

    def coordinates_of(self, vector: Sequence[int]) -> tuple[int, ...] | None:
        """Integer coordinates of ``vector`` in this basis, or None if outside.

        Works by successive elimination against the echelon basis: each basis
        row is the only one with a nonzero entry at its pivot column among the
        later rows, so coordinates are forced.
        """
        if len(vector) != self.ambient_dim:
            raise DimensionMismatchError(
                f"vector has length {len(vector)}, ambient dimension is {self.ambient_dim}"
            )
        v = [int(x) for x in vector]
        coords = []
        for i in range(self.rank):
            row = self.basis.row(i)
            pivot_col = next(j for j, x in enumerate(row) if x)
            if v[pivot_col] % row[pivot_col] != 0:
                return None
            c = v[pivot_col] // row[pivot_col]
            coords.append(c)
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        if any(v):
            return None
        return tuple(coords)

    def contains_vector(self, vector: Sequence[int]) -> bool:
        return self.coordinates_of(vector) is not None

    def contains(self, other: "Sublattice") -> bool:
        """Whether ``other`` is a subgroup of this lattice."""
        if other.ambient_dim != self.ambient_dim:
            raise AmbientMismatchError(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}"
            )
        return all(self.contains_vector(other.basis.row(i)) for i in range(other.rank))


def sublattice_from_generators(
    ambient_dim: int, generators: Iterable[Sequence[int]]
) -> Sublattice:
    """Canonical sublattice spanned by the given integer vectors."""
    return Sublattice.from_generators(ambient_dim, generators)


def _require_same_ambient(a: Sublattice, b: Sublattice) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatchError(
            f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}"
        )


def index(sub: Sublattice, sup: Sublattice) -> IndexResult:
    """Index ``[sup : sub]``; requires ``sub`` to be contained in ``sup``.

    Finite exactly when the ranks agree, in which case it is the absolute
    determinant of the matrix expressing ``sub``'s basis in ``sup``'s basis.

    >>> print(index(sublattice_from_generators(2, [(2, 0), (0, 2)]), Sublattice.full(2)))
    4
    >>> print(index(sublattice_from_generators(2, [(1, 0)]), Sublattice.full(2)))
    infinite
    """
    _require_same_ambient(sub, sup)
    coord_rows = []
    for i in range(sub.rank):
        coords = sup.coordinates_of(sub.basis.row(i))
        if coords is None:
            raise ContainmentError("first lattice is not contained in the second")
        coord_rows.append(list(coords))
    if sub.rank < sup.rank:
        return IndexResult.infinite()
    x = IntMatrix.from_rows(coord_rows, cols=sup.rank)
    return IndexResult.finite(abs(determinant(x)))


def intersect(a: Sublattice, b: Sublattice) -> Sublattice:
    """Intersection of two sublattices of the same ambient group."""
    _require_same_ambient(a, b)
    if a.rank == 0 or b.rank == 0:
        return Sublattice.zero(a.ambient_dim)
    stacked = a.basis.vstack(b.basis)
    kern = left_kernel(stacked)
    # A kernel row (x | y) says x @ basis_a == -y @ basis_b, a vector in both.
    gens = []
    for i in range(kern.rows):
        x = kern.row(i)[: a.rank]
        gens.append(
            [
                sum(x[r] * a.basis.at(r, c) for r in range(a.rank))
                for c in range(a.ambient_dim)
            ]
        )
    return Sublattice.from_generators(a.ambient_dim, gens)


def lattice_sum(a: Sublattice, b: Sublattice) -> Sublattice:
    """Smallest sublattice containing both summands."""
    _require_same_ambient(a, b)
    rows = a.basis.to_rows() + b.basis.to_rows()
    return Sublattice.from_generators(a.ambient_dim, rows)


def commensurable(a: Sublattice, b: Sublattice) -> bool:
    """Whether the intersection has finite index in both lattices.

    For subgroups of Z^n this happens exactly when both have the rank of
    their intersection.
    """
    _require_same_ambient(a, b)
    if a.rank != b.rank:
        return False
    return intersect(a, b).rank == a.rank


def saturation(a: Sublattice) -> Sublattice:
    """The unique direct summand of Z^n containing ``a`` with finite index.

    Computed from the Smith decomposition ``s @ basis @ t == d``: the basis
    rows equal ``s^-1 @ d @ t^-1``, so dividing out the invariant factors
    leaves the first ``rank`` rows of ``t^-1``, which extend to a basis of
    Z^n and therefore span the saturation.

    >>> saturation(sublattice_from_generators(2, [(2, 4)])).basis.to_rows()
    [[1, 2]]
    >>> saturation(sublattice_from_generators(3, [(2, 0, 0), (0, 2, 0)])).basis.to_rows()
    [[1, 0, 0], [0, 1, 0]]
    """
    if a.rank == 0:
        return a
    _, _, t = smith_normal_form(a.basis)
    t_inv = inverse_unimodular(t)
    rows = [t_inv.row(i) for i in range(a.rank)]
    return Sublattice.from_generators(a.ambient_dim, rows)


def is_maximal(a: Sublattice) -> bool:
    """Whether ``a`` is a direct summand of Z^n (saturated).

    Tested via the Smith normal form of the rank x n basis being all ones on
    the diagonal.  Note this is not a condition on any single maximal minor:
    a saturated rank-k lattice can have every k x k minor of absolute value
    larger than one, as long as the minors are coprime overall.

    Undefined for the zero lattice, whose commensurability class has no
    maximal member to speak of; raises InputError there.
    """
    if a.rank == 0:
        raise InputError("maximality is undefined for the rank-0 lattice")
    d, _, _ = smith_normal_form(a.basis)
    return all(x == 1 for x in d.diagonal()[: a.rank])


def unimodular_completion(a: Sublattice) -> IntMatrix:
    """Extend the basis of a saturated sublattice to a basis of Z^n.

    Returns an n x n unimodular matrix whose first ``rank`` rows are exactly
    ``a.basis``.  Deterministic: the completion comes from inverting the
    Hermite transform of the transposed basis, so identical inputs yield
    identical completions.
    """
    n, r = a.ambient_dim, a.rank
    if r == 0:
        return IntMatrix.identity(n)
    h, u = hermite_normal_form(a.basis.transpose())
    expected = IntMatrix.identity(r).vstack(IntMatrix.zero(n - r, r))
    if h != expected:
        raise MaximalityRequiredError(
            "basis completion needs a saturated (direct summand) sublattice"
        )
    w = inverse_unimodular(u).transpose()
    completed = w.take_rows(range(r))
    if completed != a.basis:
        raise AssertionError("completion does not start with the input basis")
    return w


def direct_complement(a: Sublattice) -> Sublattice:
    """A sublattice N with ``a + N = Z^n`` and ``a`` meets ``N`` only in 0.

    Requires ``a`` saturated.  The complement is read off the deterministic
    unimodular completion, so repeated runs agree.
    """
    if a.rank == 0:
        raise MaximalityRequiredError("the rank-0 lattice is not a maximality-class member")
    if not is_maximal(a):
        raise MaximalityRequiredError("direct complements exist only for saturated sublattices")
    w = unimodular_completion(a)
    rows = [w.row(i) for i in range(a.rank, a.ambient_dim)]
    return Sublattice.from_generators(a.ambient_dim, rows)


def mapping_automorphism(src: Sublattice, dst: Sublattice) -> IntMatrix:
    """A unimodular matrix carrying ``src`` onto ``dst`` as a set.

    Both lattices must be saturated, of equal rank, in the same ambient
    group.  The matrix acts on column vectors and maps the i-th basis vector
    of ``src`` to the i-th basis vector of ``dst``; in particular the image
    of ``src`` is exactly ``dst``.
    """
    _require_same_ambient(src, dst)
    if src.rank != dst.rank:
        raise RankMismatchError(f"ranks differ: {src.rank} vs {dst.rank}")
    for lat in (src, dst):
        if lat.rank == 0:
            raise MaximalityRequiredError("the rank-0 lattice is not a maximality-class member")
        if not is_maximal(lat):
            raise MaximalityRequiredError("both lattices must be saturated")
    w_src = unimodular_completion(src)
    w_dst = unimodular_completion(dst)
    auto = w_dst.transpose() @ inverse_unimodular(w_src).transpose()
    if abs(determinant(auto)) != 1:
        raise AssertionError("constructed map is not unimodular")
    if auto @ src.basis.transpose() != dst.basis.transpose():
        raise AssertionError("constructed map does not carry the basis across")
    return auto


# ---------------------------------------------------------------------------
# Text format: first line "n r" (ambient dimension, generator count), then r
# lines of n whitespace-separated integers.  Lines starting with '#' and blank
# lines are ignored on input; output is canonical and deterministic.
# ---------------------------------------------------------------------------


def _payload_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((number, line))
    return out


def _parse_int_fields(line_number: int, line: str, expected: int | None = None) -> list[int]:
    fields = line.split()
    if expected is not None and len(fields) != expected:
        raise ParseError(line_number, f"expected {expected} integers, got {len(fields)}")
    values = []
    for f in fields:
        try:
            values.append(int(f))
        except ValueError:
            raise ParseError(line_number, f"not an integer: {f!r}") from None
    return values


def read_matrix(text: str) -> IntMatrix:
    """Read an integer matrix in the lattice file layout ("n r" then r rows of n)."""
    lines = _payload_lines(text)
    if not lines:
        raise ParseError(1, "empty input")
    head_no, head = lines[0]
    n, r = _parse_int_fields(head_no, head, expected=2)
    if n < 0 or r < 0:
        raise ParseError(head_no, "dimensions must be nonnegative")
    body = lines[1:]
    if len(body) != r:
        last = body[-1][0] if body else head_no
        raise ParseError(last, f"expected {r} rows, got {len(body)}")
    rows = [_parse_int_fields(no, line, expected=n) for no, line in body]
    return IntMatrix.from_rows(rows, cols=n)


def write_matrix(m: IntMatrix) -> str:
    head = f"{m.cols} {m.rows}"
    return head + ("\n" + m.format_rows() if m.rows else "") + "\n"


def read_lattice(text: str) -> Sublattice:
    """Read generators in the lattice file format and canonicalize them."""
    mat = read_matrix(text)
    return Sublattice.from_generators(mat.cols, mat.to_rows())


def write_lattice(a: Sublattice) -> str:
    return write_matrix(a.basis)

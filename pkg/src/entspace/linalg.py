"""Dense vectors over an exact field and reduced-echelon subspace calculus.

Subspaces are stored as a reduced row-echelon basis, which is canonical:
two subspaces are equal iff their stored rows are identical, and spanning
any permutation or rescaling of a generating set reproduces the same rows.
All arithmetic is exact; there is deliberately no floating-point rank or
elimination here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .fields import COMPLEX, Field, Fp, GaussianRational, Scalar, prime_field
from .grading import Dims, MultiIndex


@dataclass(frozen=True)
class StateVector:
    """Coefficient vector over the global lexicographic product basis."""

    dims: Dims
    field: Field
    coeffs: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.dims.total:
            raise ValueError(
                f"expected {self.dims.total} coefficients, got {len(self.coeffs)}"
            )

    @staticmethod
    def from_values(dims: Dims, field: Field, values) -> "StateVector":
        return StateVector(dims, field, tuple(field.coerce(v) for v in values))

    @staticmethod
    def zero(dims: Dims, field: Field) -> "StateVector":
        return StateVector(dims, field, (field.zero(),) * dims.total)

    @staticmethod
    def basis_vector(dims: Dims, field: Field, idx: MultiIndex) -> "StateVector":
        pos = dims.position(idx)
        coeffs = [field.zero()] * dims.total
        coeffs[pos] = field.one()
        return StateVector(dims, field, tuple(coeffs))

    def _check_compatible(self, other: "StateVector") -> None:
        if not isinstance(other, StateVector):
            raise TypeError(f"expected StateVector, got {type(other).__name__}")
        if self.dims != other.dims or self.field != other.field:
            raise TypeError(
                f"mismatched vectors: {self.dims}/{self.field.label} vs "
                f"{other.dims}/{other.field.label}"
            )

    def __add__(self, other: "StateVector") -> "StateVector":
        self._check_compatible(other)
        return StateVector(
            self.dims, self.field,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __sub__(self, other: "StateVector") -> "StateVector":
        self._check_compatible(other)
        return StateVector(
            self.dims, self.field,
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def scale(self, c) -> "StateVector":
        c = self.field.coerce(c)
        return StateVector(self.dims, self.field, tuple(c * a for a in self.coeffs))

    def inner(self, other: "StateVector") -> Scalar:
        """Sesquilinear inner product, conjugate-linear in ``self``."""
        self._check_compatible(other)
        acc = self.field.zero()
        for a, b in zip(self.coeffs, other.coeffs):
            acc = acc + a.conjugate() * b
        return acc

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_complex(self) -> "StateVector":
        """Convert an exact vector to complex floats for the numerical verifier."""
        if self.field.kind == "fp":
            raise TypeError("prime-field vectors have no complex embedding")
        return StateVector.from_values(self.dims, COMPLEX, self.coeffs)


@dataclass(frozen=True)
class Subspace:
    """Subspace held as a reduced row-echelon basis (canonical form)."""

    dims: Dims
    field: Field
    rows: tuple[StateVector, ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    def pivots(self) -> list[int]:
        out = []
        for row in self.rows:
            out.append(next(i for i, c in enumerate(row.coeffs) if c))
        return out

    def contains(self, v: StateVector) -> bool:
        """Exact membership, by elimination against the echelon rows."""
        if v.dims != self.dims or v.field != self.field:
            raise TypeError(
                f"mismatched vector for subspace: {v.dims}/{v.field.label} vs "
                f"{self.dims}/{self.field.label}"
            )
        work = list(v.coeffs)
        for row, piv in zip(self.rows, self.pivots()):
            f = work[piv]
            if f:
                for i, c in enumerate(row.coeffs):
                    if c:
                        work[i] = work[i] - f * c
        return not any(work)


def _rref(rows: list[list[Scalar]]) -> list[list[Scalar]]:
    """In-place Gauss-Jordan elimination; returns the nonzero rows."""
    nrows = len(rows)
    if nrows == 0:
        return []
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == nrows:
            break
    return rows[:r]


def span(vectors, *, dims: Dims | None = None, field: Field | None = None) -> Subspace:
    """Reduced echelon basis of the linear span.

    ``dims`` and ``field`` are only needed when ``vectors`` is empty.
    """
    vectors = list(vectors)
    if not vectors:
        if dims is None or field is None:
            raise TypeError("empty span needs explicit dims and field")
        return Subspace(dims, field, ())
    head = vectors[0]
    for v in vectors[1:]:
        head._check_compatible(v)
    if dims is not None and dims != head.dims:
        raise TypeError(f"vectors have dims {head.dims}, expected {dims}")
    if field is not None and field != head.field:
        raise TypeError(f"vectors are over {head.field.label}, expected {field.label}")
    if not head.field.exact:
        raise TypeError("span requires an exact field; convert floats upstream")
    reduced = _rref([list(v.coeffs) for v in vectors])
    rows = tuple(StateVector(head.dims, head.field, tuple(r)) for r in reduced)
    return Subspace(head.dims, head.field, rows)


def member(s: Subspace, v: StateVector) -> bool:
    return s.contains(v)


def orthocomplement(s: Subspace) -> Subspace:
    """Orthogonal complement under the standard sesquilinear form.

    Exact fields only.  Conjugation is the identity except over the
    Gaussian rationals, so over the rationals and prime fields this is the
    plain bilinear-form complement.
    """
    if not s.field.exact:
        raise TypeError("orthocomplement is defined for exact fields only")
    total = s.dims.total
    if s.dim == 0:
        basis = [
            StateVector.basis_vector(s.dims, s.field, s.dims.multi_index(p))
            for p in range(total)
        ]
        return span(basis)
    # Conjugating a reduced echelon matrix keeps it reduced (pivots are 1),
    # so the kernel can be read off directly.
    a = [[c.conjugate() for c in row.coeffs] for row in s.rows]
    pivots = []
    for row in a:
        pivots.append(next(i for i, c in enumerate(row) if c))
    pivot_set = set(pivots)
    zero = s.field.zero()
    kernel: list[StateVector] = []
    for f in range(total):
        if f in pivot_set:
            continue
        w = [zero] * total
        w[f] = s.field.one()
        for j, pj in enumerate(pivots):
            w[pj] = -a[j][f]
        kernel.append(StateVector(s.dims, s.field, tuple(w)))
    return span(kernel, dims=s.dims, field=s.field)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_same_space(a, b)
    return span(list(a.rows) + list(b.rows), dims=a.dims, field=a.field)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the Zassenhaus block trick (no inner product needed)."""
    _check_same_space(a, b)
    total = a.dims.total
    zero = a.field.zero()
    block: list[list[Scalar]] = []
    for row in a.rows:
        block.append(list(row.coeffs) + list(row.coeffs))
    for row in b.rows:
        block.append(list(row.coeffs) + [zero] * total)
    reduced = _rref(block)
    gens = []
    for row in reduced:
        if not any(row[:total]):
            gens.append(StateVector(a.dims, a.field, tuple(row[total:])))
    return span(gens, dims=a.dims, field=a.field)


def _check_same_space(a: Subspace, b: Subspace) -> None:
    if a.dims != b.dims or a.field != b.field:
        raise TypeError(
            f"mismatched subspaces: {a.dims}/{a.field.label} vs {b.dims}/{b.field.label}"
        )


def _as_int(c: Scalar) -> int:
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        if c.denominator != 1:
            raise ValueError(f"coefficient {c} is not an integer")
        return c.numerator
    if isinstance(c, GaussianRational):
        if c.im:
            raise ValueError(f"coefficient {c} is not a rational integer")
        return _as_int(c.re)
    raise ValueError(f"coefficient {c!r} is not an integer")


def reduce_mod_p(vectors, dims: Dims, p: int) -> Subspace:
    """Echelon basis over F_p of an integer-coefficient spanning set.

    The reduction happens on the generators, never on an already-echelonized
    rational basis, so mod-p rank drops are visible to the caller.
    """
    fld = prime_field(p)
    reduced = []
    for v in vectors:
        if v.dims != dims:
            raise TypeError(f"vector dims {v.dims} do not match {dims}")
        reduced.append(
            StateVector(dims, fld, tuple(Fp(_as_int(c), p) for c in v.coeffs))
        )
    return span(reduced, dims=dims, field=fld)


def integer_generators(s: Subspace) -> list[StateVector]:
    """Rescale each basis row by its denominator lcm to integer coefficients."""
    if s.field.kind not in ("rational",):
        raise TypeError(f"integer generators undefined over {s.field.label}")
    out = []
    for row in s.rows:
        denom = 1
        for c in row.coeffs:
            denom = math.lcm(denom, c.denominator)
        out.append(row.scale(denom))
    return out

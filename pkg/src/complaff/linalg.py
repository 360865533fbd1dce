"""Exact matrices over a scalar domain, one-sided conventions throughout.

Vectors are rows.  Scalars multiply vectors and matrix rows on the LEFT.
Linear maps act on the right of row vectors, so the matrix of "apply f,
then g" is ``matrix(f) * matrix(g)``.  None of the routines here ever
commutes two scalar factors, which keeps everything valid over the
quaternions; "transpose" deliberately does not exist.

Row reduction uses left row operations only (swap, left-scale by a unit,
add a left multiple of another row).  The resulting reduced echelon form
is the unique canonical basis of the row space, so two row spaces are
equal exactly when their reduced forms are equal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Scalar, ScalarDomain
from .errors import DomainMismatchError

Vector = tuple  # tuple[Scalar, ...]


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------

def vector(domain: ScalarDomain, items) -> Vector:
    return tuple(domain.scalar(x) for x in items)

def zero_vector(domain: ScalarDomain, n: int) -> Vector:
    z = domain.zero()
    return (z,) * n

def unit_vector(domain: ScalarDomain, n: int, i: int) -> Vector:
    return tuple(domain.one() if j == i else domain.zero() for j in range(n))

def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))

def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))

def vec_scale(k: Scalar, v: Vector) -> Vector:
    """Left scalar multiple k*v."""
    return tuple(k * a for a in v)

def vec_is_zero(v: Vector) -> bool:
    return all(a.is_zero() for a in v)

def apply(v: Vector, m: "MatrixK") -> Vector:
    """Row vector times matrix; vector entries multiply on the left."""
    if len(v) != m.rows:
        raise ValueError(f"vector of length {len(v)} times {m.rows}x{m.cols} matrix")
    cols = []
    for j in range(m.cols):
        acc = m.domain.zero()
        for i, vi in enumerate(v):
            acc = acc + vi * m.entries[i][j]
        cols.append(acc)
    return tuple(cols)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

class MatrixK:
    """Immutable matrix of Scalars; may have zero rows (empty row space)."""

    __slots__ = ("domain", "rows", "cols", "entries")

    def __init__(self, domain: ScalarDomain, entries, cols: int | None = None):
        ents = tuple(tuple(domain.scalar(x) for x in row) for row in entries)
        if ents:
            width = len(ents[0])
            if any(len(r) != width for r in ents):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError(f"rows have {width} columns, not {cols}")
        else:
            if cols is None:
                raise ValueError("empty matrix needs an explicit column count")
            width = cols
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "rows", len(ents))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "entries", ents)

    def __setattr__(self, *args):
        raise AttributeError("MatrixK is immutable")

    @classmethod
    def identity(cls, domain: ScalarDomain, n: int) -> "MatrixK":
        one, zero = domain.one(), domain.zero()
        return cls(domain, [[one if i == j else zero for j in range(n)]
                            for i in range(n)], cols=n)

    @classmethod
    def zero(cls, domain: ScalarDomain, rows: int, cols: int) -> "MatrixK":
        z = domain.zero()
        return cls(domain, [[z] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def from_rows(cls, domain: ScalarDomain, rows, cols: int | None = None) -> "MatrixK":
        return cls(domain, rows, cols=cols)

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def _check(self, other):
        if not isinstance(other, MatrixK):
            raise TypeError("expected MatrixK")
        if other.domain != self.domain:
            raise DomainMismatchError(f"{self.domain} vs {other.domain}")

    def __add__(self, other):
        self._check(other)
        if (other.rows, other.cols) != (self.rows, self.cols):
            raise ValueError("shape mismatch in addition")
        return MatrixK(self.domain,
                       [vec_add(a, b) for a, b in zip(self.entries, other.entries)],
                       cols=self.cols)

    def __sub__(self, other):
        self._check(other)
        if (other.rows, other.cols) != (self.rows, self.cols):
            raise ValueError("shape mismatch in subtraction")
        return MatrixK(self.domain,
                       [vec_sub(a, b) for a, b in zip(self.entries, other.entries)],
                       cols=self.cols)

    def __neg__(self):
        return MatrixK(self.domain, [[-x for x in row] for row in self.entries],
                       cols=self.cols)

    def __mul__(self, other):
        """Matrix product; self's entries stay on the left of other's."""
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by "
                             f"{other.rows}x{other.cols}")
        return MatrixK(self.domain, [apply(row, other) for row in self.entries],
                       cols=other.cols)

    def scale_left(self, k: Scalar) -> "MatrixK":
        """Entrywise left multiple k*M (the matrix of lambda_k followed by M)."""
        k = self.domain.scalar(k)
        return MatrixK(self.domain, [[k * x for x in row] for row in self.entries],
                       cols=self.cols)

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.entries for x in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        return (isinstance(other, MatrixK) and other.domain == self.domain
                and other.cols == self.cols and other.entries == self.entries)

    def __hash__(self):
        return hash((self.cols, self.entries))

    def __repr__(self):
        if not self.entries:
            return f"MatrixK(0x{self.cols})"
        body = "; ".join("[" + ", ".join(repr(x) for x in row) + "]"
                         for row in self.entries)
        return f"[{body}]"


def compose(first: MatrixK, then: MatrixK) -> MatrixK:
    """Matrix of "apply `first`, then `then`"."""
    return first * then


# ---------------------------------------------------------------------------
# row reduction and everything built on it
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Echelon:
    matrix: MatrixK          # the reduced form R = transform * original
    pivots: tuple            # pivot column per nonzero row
    transform: MatrixK       # invertible record of the row operations

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rref(m: MatrixK) -> Echelon:
    """Left-reduced row echelon form with the row-operation transform."""
    domain = m.domain
    r = [list(row) for row in m.entries]
    e = [list(row) for row in MatrixK.identity(domain, m.rows).entries]
    pivots = []
    lead = 0
    for col in range(m.cols):
        if lead == m.rows:
            break
        piv = next((i for i in range(lead, m.rows) if not r[i][col].is_zero()), None)
        if piv is None:
            continue
        r[lead], r[piv] = r[piv], r[lead]
        e[lead], e[piv] = e[piv], e[lead]
        inv = r[lead][col].inverse()
        r[lead] = [inv * x for x in r[lead]]
        e[lead] = [inv * x for x in e[lead]]
        for i in range(m.rows):
            if i == lead or r[i][col].is_zero():
                continue
            f = r[i][col]
            r[i] = [x - f * y for x, y in zip(r[i], r[lead])]
            e[i] = [x - f * y for x, y in zip(e[i], e[lead])]
        pivots.append(col)
        lead += 1
    return Echelon(MatrixK(domain, r, cols=m.cols), tuple(pivots),
                   MatrixK(domain, e, cols=m.rows))


def rank(m: MatrixK) -> int:
    return rref(m).rank


def row_space(m: MatrixK) -> MatrixK:
    """Canonical echelon basis of the row space (zero rows dropped)."""
    ech = rref(m)
    return MatrixK(m.domain, ech.matrix.entries[:ech.rank], cols=m.cols)


def kernel(m: MatrixK) -> MatrixK:
    """Canonical basis of {v : v*M = 0} (left coefficients)."""
    ech = rref(m)
    null_rows = ech.transform.entries[ech.rank:]
    return row_space(MatrixK(m.domain, null_rows, cols=m.rows))


def inverse(m: MatrixK) -> MatrixK | None:
    """Two-sided inverse, or None when the matrix is not invertible."""
    if not m.is_square():
        raise ValueError("inverse needs a square matrix")
    ech = rref(m)
    if ech.rank != m.rows:
        return None
    return ech.transform


def is_invertible(m: MatrixK) -> bool:
    return m.is_square() and rref(m).rank == m.rows


def solve(m: MatrixK, rhs: Vector) -> Vector | None:
    """Some x with x*M = rhs, or None when rhs is not in the row space."""
    if len(rhs) != m.cols:
        raise ValueError("right-hand side has the wrong length")
    ech = rref(m)
    w = [m.domain.zero()] * m.rows
    for idx, col in enumerate(ech.pivots):
        w[idx] = rhs[col]
    candidate = apply(tuple(w), ech.matrix)
    if candidate != tuple(rhs):
        return None
    return apply(tuple(w), ech.transform)


def stack(domain: ScalarDomain, parts, cols: int) -> MatrixK:
    """Vertical concatenation of matrices and/or row vectors."""
    rows = []
    for part in parts:
        if isinstance(part, MatrixK):
            rows.extend(part.entries)
        else:
            rows.append(tuple(part))
    return MatrixK(domain, rows, cols=cols)

"""Exact coefficient fields and dense linear algebra over them.

Two kinds of field are supported: the rationals (elements are ``gmpy2.mpq``,
always in lowest terms with a positive denominator) and prime fields GF(p)
(elements are plain ``int`` residues in ``[0, p)``).  There is no floating
point anywhere in this package.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import gmpy2
import numpy as np

DEFAULT_PRIME = 32003

# numpy elimination keeps products of two residues below 2**63
_NUMPY_PRIME_LIMIT = 3037000499
# primes for one-sided modular certificates over QQ (a rank mod q never exceeds the rational rank)
CERTIFICATE_PRIMES = (1000003, 1000033, 1000037)


class FieldMismatchError(ValueError):
    """Raised when values from two different coefficient fields are combined."""


class Field:
    """Base class for coefficient fields.  Calling a field coerces a value into it."""

    char: int

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def inv(self, a):
        raise NotImplementedError

    def check_same(self, other: "Field") -> None:
        if self != other:
            raise FieldMismatchError(f"field mismatch: {self} vs {other}")


@dataclass(frozen=True)
class RationalField(Field):
    char: int = 0

    def __call__(self, x):
        if isinstance(x, str):
            return gmpy2.mpq(x.strip())
        if isinstance(x, float):
            raise TypeError("floating point values are not exact field elements")
        return gmpy2.mpq(x)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / gmpy2.mpq(a)

    def spec(self) -> str:
        return "qq"

    def __str__(self) -> str:
        return "QQ"


@dataclass(frozen=True)
class PrimeField(Field):
    char: int = DEFAULT_PRIME

    def __post_init__(self):
        p = self.char
        if p < 2 or not gmpy2.is_prime(p):
            raise ValueError(f"{p} is not a prime")

    def __call__(self, x):
        p = self.char
        if isinstance(x, int):
            return x % p
        if isinstance(x, str):
            x = gmpy2.mpq(x.strip())
        if isinstance(x, float):
            raise TypeError("floating point values are not exact field elements")
        if isinstance(x, (Fraction, type(gmpy2.mpq()))):
            num, den = int(x.numerator), int(x.denominator)
            if den % p == 0:
                raise ZeroDivisionError(f"denominator {den} vanishes mod {p}")
            return num * pow(den, -1, p) % p
        if isinstance(x, type(gmpy2.mpz())):
            return int(x) % p
        raise TypeError(f"cannot coerce {type(x).__name__} into GF({p})")

    def inv(self, a):
        if a % self.char == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(int(a), -1, self.char)

    def spec(self) -> str:
        return f"fp:{self.char}"

    def __str__(self) -> str:
        return f"GF({self.char})"


QQ = RationalField()


def GF(p: int = DEFAULT_PRIME) -> PrimeField:
    return PrimeField(p)


def field_from_spec(spec: str) -> Field:
    """Parse ``qq`` or ``fp:<p>`` into a field."""
    s = spec.strip().lower()
    if s in ("qq", "q"):
        return QQ
    if s.startswith("fp:"):
        try:
            p = int(s[3:])
        except ValueError:
            raise ValueError(f"bad prime in field spec {spec!r}") from None
        return PrimeField(p)
    raise ValueError(f"unknown field spec {spec!r} (expected qq or fp:<p>)")


def format_scalar(field: Field, c) -> str:
    """Canonical text for a scalar; prime-field residues use the symmetric range."""
    if field.char:
        c = int(c)
        return str(c - field.char if c > field.char // 2 else c)
    return str(gmpy2.mpq(c))


@dataclass(frozen=True)
class ExactMatrix:
    """Dense row-major matrix over an exact field."""

    field: Field
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length must equal rows * cols")

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], cols: int | None = None) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        ncols = cols if cols is not None else (len(rows[0]) if rows else 0)
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(field, len(rows), ncols, tuple(field(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "ExactMatrix":
        return cls(field, rows, cols, (field.zero,) * (rows * cols))

    @classmethod
    def identity(cls, field: Field, n: int) -> "ExactMatrix":
        return cls.from_rows(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "ExactMatrix":
        t = [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)]
        return ExactMatrix(self.field, self.cols, self.rows, tuple(t))

    def stack(self, other: "ExactMatrix") -> "ExactMatrix":
        self.field.check_same(other.field)
        if self.cols != other.cols:
            raise ValueError("column counts differ")
        return ExactMatrix(self.field, self.rows + other.rows, self.cols, self.entries + other.entries)

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            self.field.check_same(other.field)
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            cols = [other.column(j) for j in range(other.cols)]
            out = [_dot(self.field, self.row(i), c) for i in range(self.rows) for c in cols]
            return ExactMatrix(self.field, self.rows, other.cols, tuple(out))
        vec = [self.field(x) for x in other]
        if len(vec) != self.cols:
            raise ValueError("shape mismatch")
        return [_dot(self.field, self.row(i), vec) for i in range(self.rows)]

    def column(self, j: int) -> tuple:
        return self.entries[j::self.cols] if self.cols else ()

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_scalar(self.field, x) for x in self.row(i)) for i in range(self.rows))
        return f"ExactMatrix<{self.field} {self.rows}x{self.cols}>[{body}]"


def _dot(field: Field, a, b):
    s = sum((x * y for x, y in zip(a, b)), field.zero)
    return s % field.char if field.char else s


@dataclass(frozen=True)
class RREF:
    matrix: ExactMatrix
    rank: int
    pivots: tuple[int, ...]
    kernel: list[tuple]


def _rref_rows_mod_p(rows: list[list[int]], ncols: int, p: int):
    if not rows or ncols == 0:
        return [list(r) for r in rows], []
    if p >= _NUMPY_PRIME_LIMIT:
        return _rref_rows_generic(rows, ncols, p)
    m = np.array(rows, dtype=np.int64) % p
    nrows = m.shape[0]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            m[[r, k]] = m[[k, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r] = (m[r] * inv) % p
        col = m[:, c].copy()
        col[r] = 0
        rows_nz = np.nonzero(col)[0]
        if rows_nz.size:
            m[rows_nz] = (m[rows_nz] - np.outer(col[rows_nz], m[r])) % p
        pivots.append(c)
        r += 1
    return m.tolist(), pivots


def _rref_rows_generic(rows: list[list], ncols: int, p: int):
    # p == 0 means rational arithmetic
    m = [list(r) for r in rows]
    nrows = len(m)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        k = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if k is None:
            continue
        m[r], m[k] = m[k], m[r]
        piv = m[r]
        if p:
            inv = pow(int(piv[c]), -1, p)
            piv = [x * inv % p for x in piv]
        else:
            inv = 1 / piv[c]
            piv = [x * inv for x in piv]
        m[r] = piv
        for i in range(nrows):
            if i != r:
                f = m[i][c]
                if f != 0:
                    row = m[i]
                    if p:
                        m[i] = [(a - f * b) % p for a, b in zip(row, piv)]
                    else:
                        m[i] = [a - f * b for a, b in zip(row, piv)]
        pivots.append(c)
        r += 1
    return m, pivots


def _rref_rows_rational(rows: list[list], ncols: int):
    # fraction-free Gauss-Jordan on integer rows: after each pivot every entry
    # is a minor of the scaled input, so the divisions by the previous pivot
    # are exact, and at the end all pivots share one value
    m = []
    for row in rows:
        den = gmpy2.mpz(1)
        for x in row:
            if x != 0:
                den = gmpy2.lcm(den, gmpy2.mpq(x).denominator)
        m.append([gmpy2.mpz(gmpy2.mpq(x) * den) for x in row])
    nrows = len(m)
    pivots = []
    prev = gmpy2.mpz(1)
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        k = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if k is None:
            continue
        m[r], m[k] = m[k], m[r]
        piv = m[r]
        a = piv[c]
        for i in range(nrows):
            if i == r:
                continue
            row = m[i]
            f = row[c]
            if f == 0:
                if a != prev:
                    m[i] = [gmpy2.divexact(x * a, prev) for x in row]
            else:
                m[i] = [gmpy2.divexact(a * x - f * y, prev) for x, y in zip(row, piv)]
        prev = a
        pivots.append(c)
        r += 1
    zero = gmpy2.mpq(0)
    out = [[gmpy2.mpq(x, prev) if x else zero for x in row] for row in m[:r]]
    out += [[zero] * ncols for _ in range(nrows - r)]
    return out, pivots


def rref(m: ExactMatrix) -> RREF:
    """Reduced row echelon form, rank and canonical kernel basis of ``m``.

    The kernel basis has one vector per free column (ascending); that vector
    carries a 1 in its free column and the negated RREF entries in the pivot
    columns.
    """
    if not isinstance(m, ExactMatrix):
        raise TypeError("rref expects an ExactMatrix")
    field = m.field
    rows = m.to_rows()
    if field.char:
        red, pivots = _rref_rows_mod_p(rows, m.cols, field.char)
    else:
        red, pivots = _rref_rows_rational(rows, m.cols)
    rank = len(pivots)
    zero = field.zero
    red = [[field(x) if field.char else x for x in row] for row in red]
    pivot_set = set(pivots)
    kernel = []
    for j in range(m.cols):
        if j in pivot_set:
            continue
        v = [zero] * m.cols
        v[j] = field.one
        for i, pc in enumerate(pivots):
            a = red[i][j]
            if a != 0:
                v[pc] = (-a) % field.char if field.char else -a
        kernel.append(tuple(v))
    out = ExactMatrix(field, m.rows, m.cols, tuple(x for row in red for x in row))
    return RREF(out, rank, tuple(pivots), kernel)


def reduce_rows_mod(rows: Sequence[Sequence], q: int) -> list[list[int]] | None:
    """Rational rows reduced modulo the prime ``q``; ``None`` if some denominator is divisible by ``q``."""
    out = []
    for row in rows:
        r = []
        for x in row:
            d = int(x.denominator)
            if d % q == 0:
                return None
            r.append(int(x.numerator) * pow(d, -1, q) % q)
        out.append(r)
    return out


def rank(m: ExactMatrix) -> int:
    return rref(m).rank


def kernel(m: ExactMatrix) -> list[tuple]:
    return rref(m).kernel


def _integral(v: Sequence) -> list:
    # rational vector times the lcm of its denominators
    den = functools.reduce(gmpy2.lcm, (x.denominator for x in v if x), gmpy2.mpz(1))
    return [gmpy2.mpz(x * den) for x in v]


def tall_kernel(m: ExactMatrix) -> list[tuple]:
    """Canonical kernel basis of ``m``, as in :func:`rref`.

    Over QQ a matrix with more rows than columns is first cut down to
    rows that are independent modulo a prime.  The kernel of those rows
    contains the true kernel, and is accepted once it kills every row.
    """
    if m.field.char or m.rows <= m.cols:
        return rref(m).kernel
    rows = m.to_rows()
    irows = None
    for q in CERTIFICATE_PRIMES:
        red = reduce_rows_mod(rows, q)
        if red is None:
            continue
        cols = [list(c) for c in zip(*red)]
        keep = rref(ExactMatrix.from_rows(GF(q), cols, m.rows)).pivots
        ker = rref(ExactMatrix.from_rows(m.field, [rows[i] for i in keep], m.cols)).kernel
        if irows is None:
            irows = [_integral(r) for r in rows]
        if all(sum(a * b for a, b in zip(r, v) if a) == 0 for v in map(_integral, ker) for r in irows):
            return ker
    return rref(m).kernel


def row_space_basis(field: Field, vectors: Iterable[Sequence], ncols: int) -> tuple[list[list], list[int]]:
    """Echelon basis (nonzero RREF rows) of the span of ``vectors`` plus pivot columns."""
    rows = [list(v) for v in vectors]
    if not rows:
        return [], []
    if field.char:
        red, pivots = _rref_rows_mod_p(rows, ncols, field.char)
    else:
        red, pivots = _rref_rows_rational(rows, ncols)
    return [list(r) for r in red[:len(pivots)]], pivots


def solve(m: ExactMatrix, b: Sequence):
    """One solution ``x`` of ``m x = b`` (free variables set to zero), or ``None``."""
    field = m.field
    b = [field(x) for x in b]
    if len(b) != m.rows:
        raise ValueError("right-hand side has wrong length")
    aug = ExactMatrix(field, m.rows, m.cols + 1,
                      tuple(x for i in range(m.rows) for x in (*m.row(i), b[i])))
    red = rref(aug)
    if red.pivots and red.pivots[-1] == m.cols:
        return None
    x = [field.zero] * m.cols
    for i, pc in enumerate(red.pivots):
        x[pc] = red.matrix[i, m.cols]
    return x

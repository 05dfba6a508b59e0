"""Exact arithmetic in GF(2^k) and dense linear algebra over it.

Field elements are plain ints whose bits are polynomial coefficients.
Vectors and matrix rows are stored bit-plane packed: a row of length n over
GF(2^k) is a tuple of k ints, plane t holding bit t of every entry.  Over
GF(2) adding two rows is therefore a single XOR of machine words.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

__all__ = [
    "Field",
    "FieldElement",
    "Matrix",
    "Echelon",
    "FieldError",
    "make_field",
    "row_reduce",
    "invert",
    "nullspace",
    "poly_mod",
    "poly_mul",
]


class FieldError(ValueError):
    pass


def poly_mul(a: int, b: int) -> int:
    """Carry-less product of two GF(2)[x] polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def poly_mod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def _find_factor(modulus: int) -> int | None:
    """Smallest nontrivial divisor of ``modulus`` over GF(2), or None."""
    deg = modulus.bit_length() - 1
    for d in range(1, deg // 2 + 1):
        for p in range(1 << d, 1 << (d + 1)):
            if poly_mod(modulus, p) == 0:
                return p
    return None


def _poly_str(p: int) -> str:
    if p == 0:
        return "0"
    terms = []
    for e in range(p.bit_length() - 1, -1, -1):
        if p >> e & 1:
            terms.append("1" if e == 0 else ("x" if e == 1 else f"x^{e}"))
    return " + ".join(terms)


_DEFAULT_CACHE: dict[int, int] = {}


def default_modulus(k: int) -> int:
    """Smallest irreducible polynomial of degree k (as a bitmask)."""
    if k not in _DEFAULT_CACHE:
        for m in range(1 << k, 1 << (k + 1)):
            if _find_factor(m) is None:
                _DEFAULT_CACHE[k] = m
                break
    return _DEFAULT_CACHE[k]


class Field:
    """GF(2^k) given by an irreducible modulus."""

    def __init__(self, k: int, modulus: int | None = None):
        if not 1 <= k <= 16:
            raise FieldError(f"extension degree must be in 1..16, got {k}")
        if modulus is None:
            modulus = default_modulus(k)
        if modulus.bit_length() - 1 != k:
            raise FieldError(f"modulus {_poly_str(modulus)} does not have degree {k}")
        factor = _find_factor(modulus)
        if factor is not None:
            raise FieldError(
                f"modulus {_poly_str(modulus)} is reducible: divisible by {_poly_str(factor)}"
            )
        self.k = k
        self.modulus = modulus
        self.order = 1 << k
        self._low = modulus ^ (1 << k)  # x^k = low (mod modulus)
        self._build_tables()

    def _build_tables(self) -> None:
        q = self.order
        n = q - 1
        # pick the smallest generator of the multiplicative group
        for alpha in range(1, q):
            exp = [0] * (2 * n + 1)
            log = [0] * q
            v = 1
            ok = True
            for i in range(n):
                if i and v == 1:
                    ok = False
                    break
                exp[i] = v
                log[v] = i
                v = poly_mod(poly_mul(v, alpha), self.modulus)
            if ok:
                for i in range(n, 2 * n + 1):
                    exp[i] = exp[i - n]
                self._exp, self._log = exp, log
                self.generator = alpha
                return
        raise AssertionError("no primitive element")  # unreachable for irreducible moduli

    # scalar arithmetic on ints
    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(2^k)")
        return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of 0")
            return 0
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def frobenius(self, a: int) -> int:
        return self.mul(a, a)

    def sqrt(self, a: int) -> int:
        return self.pow(a, self.order // 2)

    def elements(self) -> range:
        return range(self.order)

    def nonzero(self) -> range:
        return range(1, self.order)

    def random(self, rng: random.Random, nonzero: bool = False) -> int:
        return rng.randrange(1 if nonzero else 0, self.order)

    def __call__(self, v: int) -> "FieldElement":
        return FieldElement(self, v)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and (self.k, self.modulus) == (other.k, other.modulus)

    def __hash__(self) -> int:
        return hash((self.k, self.modulus))

    def __repr__(self) -> str:
        return f"GF(2^{self.k}) mod {_poly_str(self.modulus)}"

    # packed-row helpers
    def zero_row(self) -> tuple:
        return (0,) * self.k

    def row_from(self, values: Iterable[int]) -> tuple:
        planes = [0] * self.k
        for j, v in enumerate(values):
            t = 0
            while v:
                if v & 1:
                    planes[t] |= 1 << j
                v >>= 1
                t += 1
        return tuple(planes)

    def row_to(self, row: tuple, n: int) -> list[int]:
        out = [0] * n
        for t, p in enumerate(row):
            while p:
                low = p & -p
                j = low.bit_length() - 1
                if j < n:
                    out[j] |= 1 << t
                p ^= low
        return out

    def row_get(self, row: tuple, j: int) -> int:
        v = 0
        for t, p in enumerate(row):
            if p >> j & 1:
                v |= 1 << t
        return v

    def row_unit(self, j: int, c: int = 1) -> tuple:
        return tuple(((c >> t) & 1) << j for t in range(self.k))

    def row_scale(self, row: tuple, c: int) -> tuple:
        if c == 1:
            return row
        if c == 0:
            return (0,) * self.k
        k = self.k
        if k == 1:
            return row
        res = [0] * k
        cur = list(row)
        low = self._low
        while True:
            if c & 1:
                for t in range(k):
                    res[t] ^= cur[t]
            c >>= 1
            if not c:
                break
            top = cur[k - 1]
            cur = [0] + cur[:-1]
            if top:
                for t in range(k):
                    if low >> t & 1:
                        cur[t] ^= top
        return tuple(res)

    def row_axpy(self, row: tuple, c: int, other: tuple) -> tuple:
        """row + c * other"""
        if c == 0:
            return row
        if self.k == 1:
            return (row[0] ^ other[0],)
        s = self.row_scale(other, c)
        return tuple(a ^ b for a, b in zip(row, s))

    def row_add(self, a: tuple, b: tuple) -> tuple:
        if self.k == 1:
            return (a[0] ^ b[0],)
        return tuple(x ^ y for x, y in zip(a, b))

    @staticmethod
    def row_mask(row: tuple) -> int:
        m = 0
        for p in row:
            m |= p
        return m


class FieldElement:
    """Thin operator wrapper around an int residue."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        if not 0 <= value < field.order:
            value = poly_mod(value, field.modulus)
        self.field = field
        self.value = value

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            return other.value
        if isinstance(other, int):
            return other & 1 if self.field.k == 1 else poly_mod(other, self.field.modulus)
        return NotImplemented

    def __add__(self, other):
        return FieldElement(self.field, self.value ^ self._coerce(other))

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._coerce(other)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def __neg__(self):
        return self

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return _poly_str(self.value).replace("x", "w")


def make_field(k: int = 1, modulus: int | None = None) -> Field:
    return Field(k, modulus)


_FIELD_CACHE: dict[tuple, Field] = {}


def cached_field(k: int = 1) -> Field:
    if k not in _FIELD_CACHE:
        _FIELD_CACHE[k] = Field(k)
    return _FIELD_CACHE[k]


class Matrix:
    """Dense matrix over GF(2^k); rows stored as packed bit planes."""

    __slots__ = ("field", "nrows", "ncols", "rows", "_cols")

    def __init__(self, field: Field, nrows: int, ncols: int, rows: Sequence[tuple]):
        if len(rows) != nrows:
            raise ValueError("row count mismatch")
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.rows = tuple(rows)
        self._cols = None

    @classmethod
    def from_lists(cls, field: Field, data: Sequence[Sequence[int]], ncols: int | None = None) -> "Matrix":
        data = [list(r) for r in data]
        if ncols is None:
            ncols = len(data[0]) if data else 0
        for r in data:
            if len(r) != ncols:
                raise ValueError("ragged matrix")
        return cls(field, len(data), ncols, [field.row_from(r) for r in data])

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int | None = None) -> "Matrix":
        ncols = nrows if ncols is None else ncols
        return cls(field, nrows, ncols, [field.zero_row()] * nrows)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, n, n, [field.row_unit(i) for i in range(n)])

    @classmethod
    def from_columns(cls, field: Field, nrows: int, cols: Sequence[tuple]) -> "Matrix":
        """Build from packed column vectors."""
        return cls(field, len(cols), nrows, cols).transpose()

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.field.row_get(self.rows[i], j)

    def to_lists(self) -> list[list[int]]:
        return [self.field.row_to(r, self.ncols) for r in self.rows]

    def transpose(self) -> "Matrix":
        F = self.field
        planes = [[0] * self.ncols for _ in range(F.k)]
        for i, row in enumerate(self.rows):
            for t, p in enumerate(row):
                while p:
                    low = p & -p
                    planes[t][low.bit_length() - 1] |= 1 << i
                    p ^= low
        rows = [tuple(planes[t][j] for t in range(F.k)) for j in range(self.ncols)]
        return Matrix(F, self.ncols, self.nrows, rows)

    def columns(self) -> tuple:
        """Packed columns (cached)."""
        if self._cols is None:
            self._cols = self.transpose().rows
        return self._cols

    def mul_vec(self, v: tuple) -> tuple:
        """self @ v for a packed column vector v of length ncols."""
        F = self.field
        cols = self.columns()
        out = F.zero_row()
        m = F.row_mask(v)
        while m:
            low = m & -m
            j = low.bit_length() - 1
            out = F.row_axpy(out, F.row_get(v, j), cols[j])
            m ^= low
        return out

    def vec_mul(self, v: tuple) -> tuple:
        """v @ self for a packed row vector v of length nrows."""
        F = self.field
        out = F.zero_row()
        m = F.row_mask(v)
        while m:
            low = m & -m
            j = low.bit_length() - 1
            out = F.row_axpy(out, F.row_get(v, j), self.rows[j])
            m ^= low
        return out

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return Matrix(self.field, self.nrows, other.ncols, [other.vec_mul(r) for r in self.rows])

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        F = self.field
        return Matrix(F, self.nrows, self.ncols, [F.row_add(a, b) for a, b in zip(self.rows, other.rows)])

    __sub__ = __add__

    def scale(self, c: int) -> "Matrix":
        F = self.field
        return Matrix(F, self.nrows, self.ncols, [F.row_scale(r, c) for r in self.rows])

    def power(self, e: int) -> "Matrix":
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def apply_entrywise(self, fn) -> "Matrix":
        return Matrix.from_lists(self.field, [[fn(x) for x in r] for r in self.to_lists()], self.ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def is_zero(self) -> bool:
        return all(not any(r) for r in self.rows)

    def is_identity(self) -> bool:
        return self.nrows == self.ncols and self == Matrix.identity(self.field, self.nrows)

    def rank(self) -> int:
        return row_reduce(self)[0]

    def trace(self) -> int:
        t = 0
        for i in range(min(self.nrows, self.ncols)):
            t ^= self[i, i]
        return t

    def block_diag(self, other: "Matrix") -> "Matrix":
        F = self.field
        n = self.ncols
        rows = list(self.rows) + [tuple(p << n for p in r) for r in other.rows]
        return Matrix(F, self.nrows + other.nrows, n + other.ncols, rows)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Matrix)
            and self.shape == other.shape
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.shape, self.rows))

    def __repr__(self) -> str:
        body = "\n".join(" ".join(str(x) for x in r) for r in self.to_lists())
        return f"Matrix {self.nrows}x{self.ncols} over GF(2^{self.field.k})\n{body}"


def _rref_rows(F: Field, rows: list[tuple], ncols: int) -> tuple[list[tuple], list[int]]:
    rows = [r for r in rows if any(r)]
    pivots: list[int] = []
    out: list[tuple] = []
    # process pivot columns left to right
    remaining = rows
    col_mask_all = (1 << ncols) - 1
    while remaining:
        best = None
        best_col = ncols
        for idx, r in enumerate(remaining):
            m = F.row_mask(r) & col_mask_all
            if not m:
                continue
            c = (m & -m).bit_length() - 1
            if c < best_col:
                best_col, best = c, idx
        if best is None:
            break
        piv = remaining[best]
        piv = F.row_scale(piv, F.inv(F.row_get(piv, best_col)))
        bit = 1 << best_col
        new_remaining = []
        for idx, r in enumerate(remaining):
            if idx == best:
                continue
            if F.row_mask(r) & bit:
                r = F.row_axpy(r, F.row_get(r, best_col), piv)
            if any(r):
                new_remaining.append(r)
        for i, r in enumerate(out):
            if F.row_mask(r) & bit:
                out[i] = F.row_axpy(r, F.row_get(r, best_col), piv)
        out.append(piv)
        pivots.append(best_col)
        remaining = new_remaining
    return out, pivots


def nullspace(m: Matrix) -> list[tuple]:
    """Packed vectors spanning {v : m v = 0}."""
    F = m.field
    rref, pivots = _rref_rows(F, list(m.rows), m.ncols)
    pivset = set(pivots)
    basis = []
    for f in range(m.ncols):
        if f in pivset:
            continue
        v = F.row_unit(f)
        for r, p in zip(rref, pivots):
            c = F.row_get(r, f)
            if c:
                v = F.row_axpy(v, c, F.row_unit(p))
        basis.append(v)
    return basis


def row_reduce(m: Matrix) -> tuple[int, list[int], Matrix, Matrix]:
    """(rank, pivot columns, kernel basis as columns, reduced row-echelon form)."""
    F = m.field
    rref, pivots = _rref_rows(F, list(m.rows), m.ncols)
    kern = nullspace(m)
    kernel = Matrix.from_columns(F, m.ncols, kern) if kern else Matrix(F, m.ncols, 0, [F.zero_row()] * m.ncols)
    padded = rref + [F.zero_row()] * (m.nrows - len(rref))
    return len(pivots), pivots, kernel, Matrix(F, m.nrows, m.ncols, padded)


def invert(m: Matrix) -> Matrix | str:
    if m.nrows != m.ncols:
        raise ValueError(f"cannot invert a {m.nrows}x{m.ncols} matrix")
    F = m.field
    n = m.nrows
    aug = [tuple(a | (b << n) for a, b in zip(r, F.row_unit(i))) for i, r in enumerate(m.rows)]
    rref, pivots = _rref_rows(F, aug, 2 * n)
    if len(pivots) < n or pivots[n - 1] >= n:
        return "singular"
    mask = (1 << n) - 1
    return Matrix(F, n, n, [tuple(p >> n & mask for p in r) for r in rref])


class Echelon:
    """Incrementally maintained reduced echelon basis of a subspace."""

    def __init__(self, field: Field, dim: int):
        self.field = field
        self.dim = dim
        self.basis: list[tuple] = []
        self.pivots: list[int] = []
        self._pivmask = 0

    def reduce(self, v: tuple) -> tuple:
        F = self.field
        hit = F.row_mask(v) & self._pivmask
        if not hit:
            return v
        for p, b in zip(self.pivots, self.basis):
            if hit >> p & 1:
                c = F.row_get(v, p)
                if c:
                    v = F.row_axpy(v, c, b)
        return v

    def add(self, v: tuple) -> bool:
        """Insert v; return True if it enlarged the span."""
        F = self.field
        v = self.reduce(v)
        m = F.row_mask(v)
        if not m:
            return False
        p = (m & -m).bit_length() - 1
        v = F.row_scale(v, F.inv(F.row_get(v, p)))
        bit = 1 << p
        for i, b in enumerate(self.basis):
            if F.row_mask(b) & bit:
                self.basis[i] = F.row_axpy(b, F.row_get(b, p), v)
        self.basis.append(v)
        self.pivots.append(p)
        self._pivmask |= bit
        return True

    def contains(self, v: tuple) -> bool:
        return not any(self.reduce(v))

    def __len__(self) -> int:
        return len(self.basis)

    def sorted_basis(self) -> list[tuple]:
        order = sorted(range(len(self.pivots)), key=self.pivots.__getitem__)
        return [self.basis[i] for i in order]

    def matrix(self) -> Matrix:
        rows = self.sorted_basis()
        return Matrix(self.field, len(rows), self.dim, rows)

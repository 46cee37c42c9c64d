"""Exact dense linear algebra over the rationals and over prime fields.

Everything downstream (representation homs, point counts, Lie subspaces,
cohomology ranks) reduces to small exact eliminations, so this module keeps
two hand-tuned Gaussian elimination cores: one on `fractions.Fraction`
entries, one on plain ints mod p.  No floating point anywhere.

Conventions: matrices act on column vectors from the left; kernel_basis
returns row vectors spanning the right null space; rref_cells enumerates
reduced row-echelon bases, one per k-dimensional subspace of F_p^n.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


class RationalField:
    """Marker object for QQ; elements are fractions.Fraction."""

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()

_PRIME_FIELDS: dict[int, "PrimeField"] = {}


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """The field F_p; elements are ints in range(p), reduced on coercion."""

    __slots__ = ("p",)

    def __new__(cls, p: int):
        cached = _PRIME_FIELDS.get(p)
        if cached is not None:
            return cached
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self = super().__new__(cls)
        self.p = p
        _PRIME_FIELDS[p] = self
        return self

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
            return (x.numerator * pow(den, self.p - 2, self.p)) % self.p
        raise TypeError(f"cannot coerce {x!r} into GF({self.p})")

    def __repr__(self):
        return f"GF({self.p})"


def GF(p: int) -> PrimeField:
    return PrimeField(p)


class Matrix:
    """Immutable dense matrix with an explicit field.

    Mixed-field arithmetic is a bug, not a feature: all binary operations
    assert the fields agree.
    """

    __slots__ = ("field", "nrows", "ncols", "entries")

    def __init__(self, field, rows, ncols: int | None = None):
        rows = [tuple(field.coerce(x) for x in row) for row in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
        else:
            if ncols is None:
                raise ValueError("empty matrix needs explicit ncols")
            width = ncols
        if ncols is not None and rows and ncols != width:
            raise ValueError("ncols disagrees with row width")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", width)
        object.__setattr__(self, "entries", tuple(rows))

    def __setattr__(self, *a):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, field, n: int) -> "Matrix":
        one, zero = field.coerce(1), field.coerce(0)
        rows = [[one if i == j else zero for j in range(n)] for i in range(n)]
        return cls(field, rows, ncols=n)

    @classmethod
    def zeros(cls, field, nrows: int, ncols: int) -> "Matrix":
        zero = field.coerce(0)
        return cls(field, [[zero] * ncols for _ in range(nrows)], ncols=ncols)

    # -- structure --------------------------------------------------------

    def row(self, i: int):
        return self.entries[i]

    def column(self, j: int):
        return tuple(r[j] for r in self.entries)

    def to_lists(self):
        return [list(r) for r in self.entries]

    def transpose(self) -> "Matrix":
        if self.nrows == 0 or self.ncols == 0:
            return Matrix(self.field, [[] for _ in range(self.ncols)], ncols=self.nrows)
        return Matrix(self.field, zip(*self.entries), ncols=self.nrows)

    def is_zero(self) -> bool:
        zero = self.field.coerce(0)
        return all(x == zero for row in self.entries for x in row)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field is other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((id(self.field), self.nrows, self.ncols, self.entries))

    def __repr__(self):
        return f"Matrix({self.field}, {self.nrows}x{self.ncols})"

    # -- arithmetic -------------------------------------------------------

    def _check_field(self, other: "Matrix"):
        if self.field is not other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch in addition")
        if isinstance(self.field, PrimeField):
            p = self.field.p
            rows = [
                [(a + b) % p for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ]
        else:
            rows = [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ]
        return Matrix(self.field, rows, ncols=self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def scale(self, c) -> "Matrix":
        c = self.field.coerce(c)
        if isinstance(self.field, PrimeField):
            p = self.field.p
            rows = [[(c * a) % p for a in r] for r in self.entries]
        else:
            rows = [[c * a for a in r] for r in self.entries]
        return Matrix(self.field, rows, ncols=self.ncols)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def __mul__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.ncols != other.nrows:
            raise ValueError(
                f"shape mismatch in product: {self.nrows}x{self.ncols} times "
                f"{other.nrows}x{other.ncols}"
            )
        if self.ncols == 0:
            return Matrix.zeros(self.field, self.nrows, other.ncols)
        cols = list(zip(*other.entries)) if other.entries else []
        if isinstance(self.field, PrimeField):
            p = self.field.p
            rows = [
                [sum(a * b for a, b in zip(r, c)) % p for c in cols]
                for r in self.entries
            ]
        else:
            rows = [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.entries]
        return Matrix(self.field, rows, ncols=other.ncols)

    def apply(self, vec):
        """Matrix times column vector, returned as a tuple."""
        vec = [self.field.coerce(x) for x in vec]
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        if isinstance(self.field, PrimeField):
            p = self.field.p
            return tuple(sum(a * b for a, b in zip(r, vec)) % p for r in self.entries)
        return tuple(sum(a * b for a, b in zip(r, vec)) for r in self.entries)

    # -- eliminations -----------------------------------------------------

    def rank(self) -> int:
        if isinstance(self.field, PrimeField):
            return _rank_mod([list(r) for r in self.entries], self.field.p)
        return _rank_qq([list(r) for r in self.entries])

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form with zero rows dropped, plus pivot columns."""
        if isinstance(self.field, PrimeField):
            rows, pivots = _rref_mod([list(r) for r in self.entries], self.field.p)
        else:
            rows, pivots = _rref_qq([list(r) for r in self.entries])
        return Matrix(self.field, rows, ncols=self.ncols), tuple(pivots)

    def kernel_basis(self) -> "Matrix":
        """Rows span {v : self @ v = 0}, one row per free column of the RREF."""
        R, pivots = self.rref()
        field = self.field
        n = self.ncols
        modulus = field.p if isinstance(field, PrimeField) else None
        pivset = set(pivots)
        basis = []
        for j in (j for j in range(n) if j not in pivset):
            v = [field.coerce(0)] * n
            v[j] = field.coerce(1)
            for i, pj in enumerate(pivots):
                x = -R.entries[i][j]
                v[pj] = x % modulus if modulus else x
            basis.append(v)
        return Matrix(field, basis, ncols=n)

    def solve(self, b):
        """One solution x of self @ x = b, or None if inconsistent."""
        field = self.field
        vec = [field.coerce(x) for x in b]
        if len(vec) != self.nrows:
            raise ValueError("rhs length mismatch")
        aug = [list(r) + [vec[i]] for i, r in enumerate(self.entries)]
        if isinstance(field, PrimeField):
            rows, pivots = _rref_mod(aug, field.p)
        else:
            rows, pivots = _rref_qq(aug)
        if self.ncols in pivots:
            return None
        zero = field.coerce(0)
        x = [zero] * self.ncols
        for i, pj in enumerate(pivots):
            x[pj] = rows[i][-1]
        return tuple(x)

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of non-square matrix")
        n = self.nrows
        field = self.field
        aug = [list(r) + list(Matrix.identity(field, n).entries[i]) for i, r in enumerate(self.entries)]
        if isinstance(field, PrimeField):
            rows, pivots = _rref_mod(aug, field.p)
        else:
            rows, pivots = _rref_qq(aug)
        if list(pivots) != list(range(n)):
            raise ValueError("matrix is singular")
        return Matrix(field, [r[n:] for r in rows], ncols=n)

    def reduce_mod(self, p: int) -> "Matrix":
        """Image of a QQ matrix in GF(p); fails if any denominator vanishes."""
        gf = GF(p)
        return Matrix(gf, [[gf.coerce(x) for x in r] for r in self.entries], ncols=self.ncols)


def hstack(*mats: Matrix) -> Matrix:
    field = mats[0].field
    nrows = mats[0].nrows
    for m in mats:
        if m.field is not field or m.nrows != nrows:
            raise ValueError("hstack mismatch")
    rows = [sum((list(m.entries[i]) for m in mats), []) for i in range(nrows)]
    return Matrix(field, rows, ncols=sum(m.ncols for m in mats))


def vstack(*mats: Matrix) -> Matrix:
    field = mats[0].field
    ncols = mats[0].ncols
    for m in mats:
        if m.field is not field or m.ncols != ncols:
            raise ValueError("vstack mismatch")
    rows = [list(r) for m in mats for r in m.entries]
    return Matrix(field, rows, ncols=ncols)


# -- raw elimination cores -----------------------------------------------


def _rref_mod(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """In-place RREF over GF(p); returns (nonzero rows, pivot columns)."""
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(rows)):
            if rows[i][c] % p:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        rowr = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rowr)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _rank_mod(rows: list[list[int]], p: int) -> int:
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        pr = None
        for i in range(rank, len(rows)):
            if rows[i][c] % p:
                pr = i
                break
        if pr is None:
            continue
        rows[rank], rows[pr] = rows[pr], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        rowr = [(x * inv) % p for x in rows[rank]]
        rows[rank] = rowr
        for i in range(rank + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rowr)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _rref_qq(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        rowr = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rowr)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _rank_qq(rows: list[list[Fraction]]) -> int:
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        pr = None
        for i in range(rank, len(rows)):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[rank], rows[pr] = rows[pr], rows[rank]
        for i in range(rank + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


# -- subspace enumeration -------------------------------------------------


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def rref_cells_raw(k: int, n: int, p: int):
    """Yield tuples-of-tuples: every k x n RREF matrix of rank k over GF(p).

    These are in bijection with k-dimensional subspaces of GF(p)^n (row
    spans), which is what the point-counting loops iterate over.
    """
    if k == 0:
        yield ()
        return
    if k > n:
        return
    elts = tuple(range(p))
    for pivots in itertools.combinations(range(n), k):
        pivset = set(pivots)
        # free slots: to the right of the row's pivot, skipping pivot columns
        free = [
            (i, j)
            for i in range(k)
            for j in range(pivots[i] + 1, n)
            if j not in pivset
        ]
        base = [[0] * n for i in range(k)]
        for i, c in enumerate(pivots):
            base[i][c] = 1
        if not free:
            yield tuple(tuple(r) for r in base)
            continue
        for vals in itertools.product(elts, repeat=len(free)):
            rows = [list(r) for r in base]
            for (i, j), v in zip(free, vals):
                rows[i][j] = v
            yield tuple(tuple(r) for r in rows)


def rref_cells(k: int, n: int, field: PrimeField):
    """Matrix-valued wrapper around rref_cells_raw (finite fields only)."""
    if not isinstance(field, PrimeField):
        raise TypeError("subspace enumeration needs a finite field")
    for rows in rref_cells_raw(k, n, field.p):
        yield Matrix(field, rows, ncols=n)

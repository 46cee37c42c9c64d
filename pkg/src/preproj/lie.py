"""The Lie algebra of primitive elements and its structure theory.

Commutators of the generators u_i in the convolution algebra land back
in the span of the u_k: compute_brackets evaluates every pair, checks
that claim on the nose, and stores the integer structure constants.
Everything downstream is exact linear algebra over the rationals in the
u-coordinates: central series, the subalgebra generated by the vertex
simples, and the nilpotency class.

Subspaces are kept in reduced row echelon form so equality of spans is
literal equality of basis matrices.
"""

from __future__ import annotations

import functools
import importlib.resources
import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType

from .catalog import CheckResult, load_catalog
from .exactlin import Matrix, QQ
from .hall import CheckReport, HallElement, product

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class Subspace:
    """A subspace of the u-coordinate space, basis in RREF, no zero rows."""

    ambient_dim: int
    basis: tuple[Vector, ...]

    @classmethod
    def span(cls, ambient_dim: int, vectors) -> "Subspace":
        vectors = [tuple(Fraction(x) for x in v) for v in vectors]
        if not vectors:
            return cls(ambient_dim, ())
        reduced, pivots = Matrix(QQ, vectors, ncols=ambient_dim).rref()
        rows = tuple(tuple(row) for row in reduced.to_lists()[: len(pivots)])
        return cls(ambient_dim, rows)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        eye = Matrix.identity(QQ, ambient_dim)
        return cls(ambient_dim, tuple(tuple(r) for r in eye.to_lists()))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x) for row in self.basis)

    def reduce(self, vec) -> Vector:
        """Canonical representative of vec modulo this subspace."""
        v = [Fraction(x) for x in vec]
        for row, p in zip(self.basis, self._pivots()):
            if v[p]:
                c = v[p]
                for j in range(p, self.ambient_dim):
                    v[j] -= c * row[j]
        return tuple(v)

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))

    def quotient_coords(self, vec) -> Vector:
        """Coordinates of vec in the complement of the pivot columns."""
        reduced = self.reduce(vec)
        pivots = set(self._pivots())
        return tuple(x for j, x in enumerate(reduced) if j not in pivots)

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(row) for row in self.basis)


def unit_vector(r: int, k: int) -> Vector:
    """Coordinate vector of u_k (1-based)."""
    return tuple(Fraction(1 if i == k - 1 else 0) for i in range(r))


@dataclass(frozen=True)
class LieData:
    """Structure constants of the primitive Lie algebra in the u-basis.

    c maps (i, j) with i > j to the nonzero integer coordinates of
    [u_i, u_j]; pairs with zero bracket are absent, the other triangle
    follows by antisymmetry.
    """

    n: int
    r: int
    degrees: tuple[tuple[int, ...], ...]
    c: MappingProxyType

    def bracket_units(self, i: int, j: int) -> dict[int, int]:
        """[u_i, u_j] as a sparse map k -> coefficient."""
        if i == j:
            return {}
        if i > j:
            return dict(self.c.get((i, j), {}))
        return {k: -v for k, v in self.c.get((j, i), {}).items()}

    def bracket(self, x, y) -> Vector:
        """Bilinear extension to coordinate vectors."""
        out = [Fraction(0)] * self.r
        for i, xi in enumerate(x, start=1):
            if not xi:
                continue
            for j, yj in enumerate(y, start=1):
                if not yj:
                    continue
                for k, coeff in self.bracket_units(i, j).items():
                    out[k - 1] += xi * yj * coeff
        return tuple(out)

    def ad_columns(self, k: int) -> Matrix:
        """Matrix of x -> [x, u_k], columns indexed by the u_i."""
        cols = []
        for i in range(1, self.r + 1):
            col = [Fraction(0)] * self.r
            for target, coeff in self.bracket_units(i, k).items():
                col[target - 1] = Fraction(coeff)
            cols.append(col)
        return Matrix(QQ, [list(row) for row in zip(*cols)], ncols=self.r)


@functools.lru_cache(maxsize=None)
def compute_brackets(quiver) -> LieData:
    """Structure constants of all generator commutators.

    Every pair is evaluated, not just those whose grade sum is the
    dimension vector of an indecomposable, so the vanishing of the rest
    is checked rather than assumed.  The commutator must be supported on
    single-generator labels with integer coefficients of the matching
    grade; anything else is a consistency failure, not a result.
    """
    catalog = load_catalog(quiver)
    n, r = catalog.quiver.n, catalog.r
    degrees = tuple(e.dimv for e in catalog.entries)
    c: dict = {}
    for i in range(2, r + 1):
        ui = HallElement.generator(n, i)
        for j in range(1, i):
            uj = HallElement.generator(n, j)
            diff = product(ui, uj) - product(uj, ui)
            entry: dict[int, int] = {}
            grade = tuple(a + b for a, b in zip(degrees[i - 1], degrees[j - 1]))
            for label, coeff in diff.terms.items():
                k = label.unit_index()
                if k is None or coeff.denominator != 1:
                    raise RuntimeError(
                        f"[u{i}, u{j}] is not primitive: term {coeff}*I{tuple(label)}"
                    )
                if degrees[k - 1] != grade:
                    raise RuntimeError(
                        f"[u{i}, u{j}] has an off-grade term at u{k}"
                    )
                entry[k] = int(coeff)
            if entry:
                c[(i, j)] = MappingProxyType(dict(sorted(entry.items())))
    return LieData(n=n, r=r, degrees=degrees, c=MappingProxyType(c))


def check_jacobi(L: LieData) -> CheckReport:
    """Cyclic sum over every generator triple; reports the first failure."""
    checks = []
    bad = None
    for i, j, k in itertools.combinations(range(1, L.r + 1), 3):
        total = [Fraction(0)] * L.r
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            left = L.bracket(unit_vector(L.r, a), unit_vector(L.r, b))
            for t, coeff in enumerate(L.bracket(left, unit_vector(L.r, c))):
                total[t] += coeff
        if any(total):
            bad = (i, j, k)
            break
    if bad is None:
        checks.append(CheckResult(f"jacobi on {L.r} generators", True))
    else:
        checks.append(
            CheckResult(
                "jacobi", False, f"cyclic sum nonzero on (u{bad[0]}, u{bad[1]}, u{bad[2]})"
            )
        )
    return CheckReport(f"jacobi sweep, rank {L.n}", checks)


# -- central series -------------------------------------------------------


def _bracket_span(L: LieData, left: Subspace, right: Subspace) -> Subspace:
    vecs = [
        L.bracket(x, y) for x in left.basis for y in right.basis
    ]
    return Subspace.span(L.r, [v for v in vecs if any(v)])


def lower_central_series(L: LieData) -> list[Subspace]:
    """Chain from the whole algebra down to zero, bracketing with the whole."""
    full = Subspace.full(L.r)
    chain = [full]
    while chain[-1].dim > 0:
        nxt = _bracket_span(L, full, chain[-1])
        if nxt.dim >= chain[-1].dim:
            raise RuntimeError("lower central series stalled; algebra not nilpotent")
        chain.append(nxt)
    return chain


def generalized_center(L: LieData, ideal: Subspace) -> Subspace:
    """{x : [x, everything] lies in the ideal}, via one kernel computation."""
    rows = []
    for k in range(1, L.r + 1):
        rows.extend(_quotient_rows(ideal, L.ad_columns(k)))
    if not rows:
        return Subspace.full(L.r)
    kernel = Matrix(QQ, rows, ncols=L.r).kernel_basis()
    return Subspace.span(L.r, [tuple(row) for row in kernel.to_lists()])


def _quotient_rows(ideal: Subspace, ad: Matrix) -> list[list[Fraction]]:
    """Rows of the composite x -> ad(x) mod ideal, in complement coordinates."""
    cols = list(zip(*ad.to_lists()))
    reduced_cols = [ideal.quotient_coords(col) for col in cols]
    return [list(row) for row in zip(*reduced_cols) if any(row)]


def upper_central_series(L: LieData) -> list[Subspace]:
    """Chain from zero up to the whole algebra through generalized centers."""
    chain = [Subspace.span(L.r, [])]
    while chain[-1].dim < L.r:
        nxt = generalized_center(L, chain[-1])
        if nxt.dim <= chain[-1].dim:
            raise RuntimeError("upper central series stalled; algebra not nilpotent")
        chain.append(nxt)
    return chain


def nilpotency_class(L: LieData) -> int:
    """Smallest N with the N-th lower central term zero."""
    return len(lower_central_series(L)) - 1


# -- generated subalgebras ------------------------------------------------


@dataclass(frozen=True)
class GeneratedSubalgebra:
    """Bracket closure of chosen generators, with its own central series."""

    subalgebra: Subspace
    series: tuple[Subspace, ...]

    @property
    def dim(self) -> int:
        return self.subalgebra.dim

    def layer_dims(self) -> tuple[int, ...]:
        """Successive quotient dimensions down the series, ending in 0."""
        dims = [s.dim for s in self.series]
        return tuple(a - b for a, b in zip(dims, dims[1:])) + (0,)


def generated_subalgebra(L: LieData, gens) -> GeneratedSubalgebra:
    """Close the span of gens under the bracket and track its series."""
    current = Subspace.span(L.r, gens)
    while True:
        grown = Subspace.span(
            L.r,
            list(current.basis)
            + [
                L.bracket(x, y)
                for x, y in itertools.combinations(current.basis, 2)
            ],
        )
        if grown.dim == current.dim:
            break
        current = grown
    series = [current]
    while series[-1].dim > 0:
        nxt = _bracket_span(L, current, series[-1])
        if nxt.dim >= series[-1].dim:
            raise RuntimeError("subalgebra series stalled; not nilpotent")
        series.append(nxt)
    return GeneratedSubalgebra(subalgebra=current, series=tuple(series))


def vertex_simple_generators(L: LieData) -> list[Vector]:
    """Coordinate vectors of the simples, one per quiver vertex."""
    out = []
    for v in range(L.n):
        wanted = tuple(1 if w == v else 0 for w in range(L.n))
        k = next(i + 1 for i, deg in enumerate(L.degrees) if deg == wanted)
        out.append(unit_vector(L.r, k))
    return out


# -- known-good tables ----------------------------------------------------


@functools.lru_cache(maxsize=None)
def reference_tables(n: int) -> dict:
    """Independently tabulated structure data bundled with the package.

    Bracket constants, central series dimensions, nilpotency class, and
    (where small enough to have been worked out) total cohomology
    dimensions, for cross-checking recomputed results.
    """
    text = (
        importlib.resources.files("preproj")
        .joinpath("data/reference_tables.json")
        .read_text(encoding="utf-8")
    )
    return json.loads(text)[f"A{n}"]


def bracket_constants_as_json_obj(L: LieData) -> dict:
    """The c map in the reference-table JSON shape, for comparisons."""
    return {
        f"{i},{j}": {str(k): v for k, v in sorted(entry.items())}
        for (i, j), entry in sorted(L.c.items())
    }

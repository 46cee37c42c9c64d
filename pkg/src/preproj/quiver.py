"""Representations of doubled A_n quivers with the preprojective relation.

Vertices are 1..n (stored 0-based), forward arrows f_i: i -> i+1 and
backward arrows q_i: i+1 -> i.  Matrices act on column vectors, so
f[i] has shape d_{i+1} x d_i and q[i] has shape d_i x d_{i+1}.  The
relation imposed at every vertex i is

    q_i o f_i = f_{i-1} o q_{i-1}        (out-of-range terms are zero),

an equality of endomorphisms of the vertex-i space.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactlin import (
    GF,
    QQ,
    Matrix,
    PrimeField,
    _rank_mod,
    _rank_qq,
    hstack,
    vstack,
)


@dataclass(frozen=True)
class QuiverSpec:
    """The doubled quiver of type A_n, 1 <= n <= 4."""

    n: int

    def __post_init__(self):
        if not 1 <= self.n <= 4:
            raise ValueError("only A1..A4 are supported")

    @property
    def name(self) -> str:
        return f"A{self.n}"

    @property
    def edges(self) -> int:
        return self.n - 1


@dataclass(frozen=True)
class Representation:
    """A representation of the doubled quiver, relation not assumed.

    f and q are tuples of length n-1; entry i carries the maps along the
    edge between vertices i+1 and i+2 (1-based).
    """

    quiver: QuiverSpec
    field: object
    dimv: tuple[int, ...]
    f: tuple[Matrix, ...]
    q: tuple[Matrix, ...]

    def __post_init__(self):
        n = self.quiver.n
        if len(self.dimv) != n:
            raise ValueError("dimension vector length mismatch")
        if len(self.f) != n - 1 or len(self.q) != n - 1:
            raise ValueError("need n-1 forward and n-1 backward maps")
        for i in range(n - 1):
            if (self.f[i].nrows, self.f[i].ncols) != (self.dimv[i + 1], self.dimv[i]):
                raise ValueError(f"f[{i}] has wrong shape")
            if (self.q[i].nrows, self.q[i].ncols) != (self.dimv[i], self.dimv[i + 1]):
                raise ValueError(f"q[{i}] has wrong shape")
            if self.f[i].field is not self.field or self.q[i].field is not self.field:
                raise ValueError("arrow matrix field mismatch")

    @property
    def total_dim(self) -> int:
        return sum(self.dimv)

    def arrows(self):
        """Yield (tail, head, matrix) over all 2(n-1) arrows, 0-based."""
        for i in range(self.quiver.n - 1):
            yield i, i + 1, self.f[i]
            yield i + 1, i, self.q[i]

    def reduce_mod(self, p: int) -> "Representation":
        return Representation(
            self.quiver,
            GF(p),
            self.dimv,
            tuple(m.reduce_mod(p) for m in self.f),
            tuple(m.reduce_mod(p) for m in self.q),
        )


def make_representation(n: int, dimv, f_mats, q_mats, field=QQ) -> Representation:
    """Build a Representation from nested-list matrices."""
    quiver = QuiverSpec(n)
    dimv = tuple(dimv)
    f = tuple(
        Matrix(field, f_mats[i], ncols=dimv[i]) for i in range(n - 1)
    )
    q = tuple(
        Matrix(field, q_mats[i], ncols=dimv[i + 1]) for i in range(n - 1)
    )
    return Representation(quiver, field, dimv, f, q)


def zero_representation(n: int, field=QQ) -> Representation:
    return make_representation(n, (0,) * n, [[] for _ in range(n - 1)], [[] for _ in range(n - 1)], field)


def check_relations(rep: Representation) -> bool:
    """True iff q_i f_i = f_{i-1} q_{i-1} holds at every vertex."""
    n = rep.quiver.n
    field = rep.field
    for v in range(n):
        d = rep.dimv[v]
        lhs = rep.q[v] * rep.f[v] if v <= n - 2 else Matrix.zeros(field, d, d)
        rhs = rep.f[v - 1] * rep.q[v - 1] if v >= 1 else Matrix.zeros(field, d, d)
        if lhs != rhs:
            return False
    return True


def nilpotency_check(rep: Representation) -> bool:
    """True iff the radical filtration W -> sum of arrow images reaches zero."""
    field = rep.field
    bases = [Matrix.identity(field, d) for d in rep.dimv]
    dims = list(rep.dimv)
    while sum(dims) > 0:
        collected: list[list[Matrix]] = [[] for _ in rep.dimv]
        for t, h, X in rep.arrows():
            if dims[t] and X.nrows:
                collected[h].append((X * bases[t].transpose()).transpose())
        new_bases = []
        new_dims = []
        for v, pieces in enumerate(collected):
            if pieces:
                r, _ = vstack(*pieces).rref()
            else:
                r = Matrix.zeros(field, 0, rep.dimv[v])
            new_bases.append(r)
            new_dims.append(r.nrows)
        if new_dims == dims:
            return False  # stabilized above zero
        bases, dims = new_bases, new_dims
    return True


def direct_sum(x: Representation, y: Representation) -> Representation:
    if x.quiver != y.quiver or x.field is not y.field:
        raise ValueError("direct sum needs matching quiver and field")
    field = x.field
    dimv = tuple(a + b for a, b in zip(x.dimv, y.dimv))

    def block(a: Matrix, b: Matrix) -> Matrix:
        rows = []
        for r in a.entries:
            rows.append(list(r) + [0] * b.ncols)
        for r in b.entries:
            rows.append([0] * a.ncols + list(r))
        return Matrix(field, rows, ncols=a.ncols + b.ncols)

    f = tuple(block(x.f[i], y.f[i]) for i in range(x.quiver.n - 1))
    q = tuple(block(x.q[i], y.q[i]) for i in range(x.quiver.n - 1))
    return Representation(x.quiver, field, dimv, f, q)


def direct_sum_list(reps: list[Representation], n: int | None = None, field=QQ) -> Representation:
    if not reps:
        if n is None:
            raise ValueError("empty sum needs the quiver size")
        return zero_representation(n, field)
    acc = reps[0]
    for r in reps[1:]:
        acc = direct_sum(acc, r)
    return acc


# -- submodules -----------------------------------------------------------


def _membership_reduce(vec, rref_rows, pivots, field):
    """Reduce vec against RREF rows; returns (coords, residual)."""
    v = list(vec)
    coords = []
    modulus = field.p if isinstance(field, PrimeField) else None
    for row, pj in zip(rref_rows, pivots):
        c = v[pj]
        coords.append(c)
        if c:
            if modulus:
                v = [(a - c * b) % modulus for a, b in zip(v, row)]
            else:
                v = [a - c * b for a, b in zip(v, row)]
    return coords, v


def is_submodule(rep: Representation, subspaces: list[Matrix]) -> bool:
    """Does the graded subspace (one basis matrix per vertex) absorb all arrows?"""
    field = rep.field
    rrefs = []
    for v, W in enumerate(subspaces):
        if W.ncols != rep.dimv[v]:
            raise ValueError(f"subspace at vertex {v} has wrong ambient dimension")
        R, piv = W.rref()
        if R.nrows != W.nrows:
            raise ValueError("subspace basis is not independent")
        rrefs.append((R, piv))
    for t, h, X in rep.arrows():
        R_h, piv_h = rrefs[h]
        for w in rrefs[t][0].entries:
            _, residual = _membership_reduce(X.apply(w), R_h.entries, piv_h, field)
            if any(residual):
                return False
    return True


def sub_and_quotient(
    rep: Representation, subspaces: list[Matrix]
) -> tuple[Representation, Representation]:
    """Restrict to a graded submodule and form the quotient.

    Subspace bases are put in RREF; sub maps are written in those bases and
    quotient maps in the complementary (non-pivot) coordinates.  Both
    outputs are checked against the preprojective relation.
    """
    field = rep.field
    n = rep.quiver.n
    rrefs = []
    for v, W in enumerate(subspaces):
        R, piv = W.rref()
        if R.nrows != W.nrows:
            raise ValueError("subspace basis is not independent")
        rrefs.append((R, piv))

    def sub_matrix(t, h, X):
        R_h, piv_h = rrefs[h]
        cols = []
        for w in rrefs[t][0].entries:
            coords, residual = _membership_reduce(X.apply(w), R_h.entries, piv_h, field)
            if any(residual):
                raise ValueError("subspaces do not form a submodule")
            cols.append(coords)
        rows = list(zip(*cols)) if cols else []
        return Matrix(field, rows, ncols=len(cols)) if rows or not cols else Matrix(field, [], ncols=0)

    def quotient_matrix(t, h, X):
        R_h, piv_h = rrefs[h]
        nonpiv_h = [j for j in range(rep.dimv[h]) if j not in set(piv_h)]
        nonpiv_t = [j for j in range(rep.dimv[t]) if j not in set(rrefs[t][1])]
        cols = []
        for j in nonpiv_t:
            e = [0] * rep.dimv[t]
            e[j] = 1
            _, residual = _membership_reduce(X.apply(e), R_h.entries, piv_h, field)
            cols.append([residual[c] for c in nonpiv_h])
        rows = list(zip(*cols)) if cols else [[] for _ in nonpiv_h]
        return Matrix(field, rows, ncols=len(nonpiv_t))

    sub_dimv = tuple(rrefs[v][0].nrows for v in range(n))
    quot_dimv = tuple(rep.dimv[v] - sub_dimv[v] for v in range(n))
    sub_f, sub_q, quot_f, quot_q = [], [], [], []
    for i in range(n - 1):
        sub_f.append(_shape_fix(sub_matrix(i, i + 1, rep.f[i]), sub_dimv[i + 1], sub_dimv[i], field))
        sub_q.append(_shape_fix(sub_matrix(i + 1, i, rep.q[i]), sub_dimv[i], sub_dimv[i + 1], field))
        quot_f.append(_shape_fix(quotient_matrix(i, i + 1, rep.f[i]), quot_dimv[i + 1], quot_dimv[i], field))
        quot_q.append(_shape_fix(quotient_matrix(i + 1, i, rep.q[i]), quot_dimv[i], quot_dimv[i + 1], field))
    sub = Representation(rep.quiver, field, sub_dimv, tuple(sub_f), tuple(sub_q))
    quot = Representation(rep.quiver, field, quot_dimv, tuple(quot_f), tuple(quot_q))
    assert check_relations(sub) and check_relations(quot)
    return sub, quot


def _shape_fix(m: Matrix, nrows: int, ncols: int, field) -> Matrix:
    """Normalize possibly-degenerate (0-row/0-col) matrices to exact shape."""
    if m.nrows == nrows and m.ncols == ncols:
        return m
    if nrows == 0 or ncols == 0:
        return Matrix(field, [[] for _ in range(nrows)], ncols=ncols)
    raise AssertionError("unexpected matrix shape")


# -- homomorphisms --------------------------------------------------------


def hom_dimension(x: Representation, y: Representation) -> int:
    """dim Hom(x, y): tuples (phi_v) with phi_head X_a = Y_a phi_tail."""
    if x.quiver != y.quiver or x.field is not y.field:
        raise ValueError("hom needs matching quiver and field")
    field = x.field
    n = x.quiver.n
    offsets = []
    total = 0
    for v in range(n):
        offsets.append(total)
        total += y.dimv[v] * x.dimv[v]
    if total == 0:
        return 0
    rows = []
    for i in range(n - 1):
        _hom_equations(rows, offsets, x, y, i, i + 1, x.f[i], y.f[i])
        _hom_equations(rows, offsets, x, y, i + 1, i, x.q[i], y.q[i])
    if not rows:
        return total
    if isinstance(field, PrimeField):
        return total - _rank_mod(rows, field.p)
    return total - _rank_qq([[_to_frac(e) for e in r] for r in rows])


def _to_frac(e):
    from fractions import Fraction

    return e if isinstance(e, Fraction) else Fraction(e)


def _hom_equations(rows, offsets, x, y, t, h, X: Matrix, Y: Matrix):
    """Append the scalar equations of phi_h X - Y phi_t = 0."""
    dh_y, dt_x = Y.nrows, X.ncols
    dh_x, dt_y = X.nrows, Y.ncols
    width = _hom_width(offsets, x, y)
    for i in range(dh_y):
        for j in range(dt_x):
            row = [0] * width
            # phi_h[i][l] * X[l][j]
            for l in range(dh_x):
                row[offsets[h] + i * dh_x + l] += X.entries[l][j]
            # - Y[i][l] * phi_t[l][j]
            for l in range(dt_y):
                row[offsets[t] + l * dt_x + j] -= Y.entries[i][l]
            if any(row):
                rows.append(row)


def _hom_width(offsets, x, y):
    n = x.quiver.n
    return offsets[-1] + y.dimv[n - 1] * x.dimv[n - 1]


def hom_basis(x: Representation, y: Representation) -> list[tuple[Matrix, ...]]:
    """Basis of Hom(x, y), each element a tuple of per-vertex matrices."""
    field = x.field
    n = x.quiver.n
    offsets = []
    total = 0
    for v in range(n):
        offsets.append(total)
        total += y.dimv[v] * x.dimv[v]
    rows = []
    for i in range(n - 1):
        _hom_equations(rows, offsets, x, y, i, i + 1, x.f[i], y.f[i])
        _hom_equations(rows, offsets, x, y, i + 1, i, x.q[i], y.q[i])
    system = Matrix(field, rows, ncols=total) if rows else Matrix.zeros(field, 0, total)
    basis = []
    for vec in system.kernel_basis().entries:
        mats = []
        for v in range(n):
            dy, dx = y.dimv[v], x.dimv[v]
            block = [
                [vec[offsets[v] + r * dx + c] for c in range(dx)] for r in range(dy)
            ]
            mats.append(Matrix(field, block, ncols=dx))
        basis.append(tuple(mats))
    return basis


def top_dims(rep: Representation) -> tuple[int, ...]:
    """Per-vertex dimensions of rep / rad(rep); equals dim Hom(rep, S_v)."""
    out = []
    for v in range(rep.quiver.n):
        incoming = [X for t, h, X in rep.arrows() if h == v and X.ncols > 0]
        if incoming and rep.dimv[v]:
            r = hstack(*incoming).rank()
        else:
            r = 0
        out.append(rep.dimv[v] - r)
    return tuple(out)


def socle_dims(rep: Representation) -> tuple[int, ...]:
    """Per-vertex dimensions of the socle; equals dim Hom(S_v, rep)."""
    out = []
    for v in range(rep.quiver.n):
        outgoing = [X for t, h, X in rep.arrows() if t == v and X.nrows > 0]
        if outgoing and rep.dimv[v]:
            r = vstack(*outgoing).rank()
        else:
            r = 0
        out.append(rep.dimv[v] - r)
    return tuple(out)


# -- constructors ---------------------------------------------------------


def simple(n: int, vertex: int, field=QQ) -> Representation:
    """The simple module at a 1-based vertex."""
    dimv = tuple(1 if v == vertex - 1 else 0 for v in range(n))
    f = [[[0] * dimv[i] for _ in range(dimv[i + 1])] for i in range(n - 1)]
    q = [[[0] * dimv[i + 1] for _ in range(dimv[i])] for i in range(n - 1)]
    return make_representation(n, dimv, f, q, field)


def string_module(n: int, lo: int, hi: int, directions: str, field=QQ) -> Representation:
    """Thin module on the 1-based interval [lo, hi].

    directions has one char per edge lo..hi-1: 'f' puts the identity on the
    forward arrow of that edge, 'q' on the backward one.
    """
    if len(directions) != hi - lo:
        raise ValueError("one direction per edge of the interval")
    dimv = tuple(1 if lo - 1 <= v <= hi - 1 else 0 for v in range(n))
    f = [[[0] * dimv[i] for _ in range(dimv[i + 1])] for i in range(n - 1)]
    q = [[[0] * dimv[i + 1] for _ in range(dimv[i])] for i in range(n - 1)]
    for k, d in enumerate(directions):
        edge = lo - 1 + k
        if d == "f":
            f[edge] = [[1]]
        elif d == "q":
            q[edge] = [[1]]
        else:
            raise ValueError("directions must be 'f'/'q'")
    return make_representation(n, dimv, f, q, field)


def diamond_module(n: int, center: int, field=QQ) -> Representation:
    """Dimension (..,1,2,1,..) centered at a 1-based vertex.

    The 2-dimensional center has a top vector mapping onto both neighbours
    and a bottom vector receiving from both; this is the unique
    indecomposable of its dimension vector.
    """
    c = center - 1
    if c - 1 < 0 or c + 1 > n - 1:
        raise ValueError("diamond needs both neighbours inside the quiver")
    dimv = tuple(2 if v == c else (1 if abs(v - c) == 1 else 0) for v in range(n))
    f = [[[0] * dimv[i] for _ in range(dimv[i + 1])] for i in range(n - 1)]
    q = [[[0] * dimv[i + 1] for _ in range(dimv[i])] for i in range(n - 1)]
    # top = first coordinate of the center, bottom = second
    q[c - 1] = [[1, 0]]      # center top -> left neighbour
    f[c - 1] = [[0], [1]]    # left neighbour -> center bottom
    f[c] = [[1, 0]]          # center top -> right neighbour
    q[c] = [[0], [1]]        # right neighbour -> center bottom
    return make_representation(n, dimv, f, q, field)


def reverse(rep: Representation) -> Representation:
    """Apply the quiver flip i -> n+1-i, exchanging forward and backward maps."""
    n = rep.quiver.n
    dimv = tuple(reversed(rep.dimv))
    f = tuple(rep.q[n - 2 - i] for i in range(n - 1))
    q = tuple(rep.f[n - 2 - i] for i in range(n - 1))
    return Representation(rep.quiver, rep.field, dimv, f, q)


def transpose_dual(rep: Representation) -> Representation:
    """Arrow-reversing duality: transpose every map, swapping f and q."""
    n = rep.quiver.n
    f = tuple(rep.q[i].transpose() for i in range(n - 1))
    q = tuple(rep.f[i].transpose() for i in range(n - 1))
    return Representation(rep.quiver, rep.field, rep.dimv, f, q)

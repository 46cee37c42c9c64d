"""Chevalley-Eilenberg cohomology of the primitive Lie algebra.

The complex is the exterior algebra on the dual generators with the
differential determined by the structure constants: on a dual generator
it reads off the brackets landing on that generator, and it extends to
wedge monomials as a degree-one derivation, which reproduces the usual
alternating-sum formula with signs (-1)^(i+j) in 0-based positions.

Every wedge monomial carries the sum of its generators' dimension
vectors as a grade, the differential preserves that grade, so ranks are
computed block by block.  The whole complex has 2^r monomials; building
it is refused beyond a size budget rather than attempted, which rules
out the rank-40 case by design.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .catalog import CheckResult
from .exactlin import GF, Matrix, QQ
from .hall import CheckReport
from .lie import LieData


class BudgetExceeded(RuntimeError):
    """The complex would be larger than the allowed budget."""


def _wedge_sort(indices):
    """(sign, sorted tuple) of a wedge word, or None when an index repeats."""
    indices = list(indices)
    sign = 1
    for i in range(1, len(indices)):
        j = i
        while j > 0 and indices[j - 1] > indices[j]:
            indices[j - 1], indices[j] = indices[j], indices[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and indices[j - 1] == indices[j]:
            return None
    return sign, tuple(indices)


def _dual_two_forms(L: LieData) -> dict:
    """d of each dual generator: k -> {(i, j) with i < j: coefficient}.

    A term v*u_k in [u_i, u_j] (i > j) contributes +v on the monomial
    u_j* ^ u_i*, which is the evaluation convention
    (d phi)(x, y) = -phi([x, y]) written out on the basis.
    """
    out: dict[int, dict] = {k: {} for k in range(1, L.r + 1)}
    for (i, j), entry in L.c.items():
        for k, v in entry.items():
            out[k][(j, i)] = out[k].get((j, i), 0) + v
    return out


def _d_monomial(two_forms: dict, mono: tuple) -> dict:
    """Image of a wedge monomial under the differential, sparse."""
    out: dict[tuple, int] = {}
    for t, m in enumerate(mono):
        rest = mono[:t] + mono[t + 1 :]
        for (i, j), coeff in two_forms[m].items():
            sorted_word = _wedge_sort(mono[:t] + (i, j) + mono[t + 1 :])
            if sorted_word is None:
                continue
            sign, word = sorted_word
            value = out.get(word, 0) + (-1) ** t * coeff * sign
            if value:
                out[word] = value
            else:
                out.pop(word, None)
    return out


@dataclass(frozen=True)
class CEComplex:
    """Graded pieces and differentials of the exterior-algebra complex.

    blocks maps a grade to {cohomological degree: ordered monomials};
    differentials maps (grade, k) to the matrix of d from degree k to
    k+1 inside that grade block.
    """

    L: LieData
    blocks: dict
    differentials: dict

    def block(self, grade, k: int) -> list:
        return self.blocks.get(grade, {}).get(k, [])

    def differential(self, grade, k: int) -> Matrix:
        d = self.differentials.get((grade, k))
        if d is not None:
            return d
        return Matrix(
            QQ,
            [[] for _ in range(len(self.block(grade, k + 1)))],
            ncols=len(self.block(grade, k)),
        )


DEFAULT_BUDGET = 1 << 16


def check_budget(r: int, budget: int = DEFAULT_BUDGET) -> None:
    """Refuse ranks whose exterior algebra is too large to enumerate."""
    if 2**r > budget:
        raise BudgetExceeded(
            f"complex needs 2^{r} monomials, exceeds budget {budget}"
        )


def build_complex(L: LieData, *, budget: int = DEFAULT_BUDGET) -> CEComplex:
    """Assemble all graded blocks and differentials, checking d of d = 0.

    The monomial count is 2^r; anything above the budget is refused up
    front with the required size in the message, since there is no
    partial answer worth returning.
    """
    check_budget(L.r, budget)
    blocks: dict = {}
    for k in range(L.r + 1):
        for mono in itertools.combinations(range(1, L.r + 1), k):
            grade = tuple(
                sum(L.degrees[m - 1][v] for m in mono) for v in range(L.n)
            )
            blocks.setdefault(grade, {}).setdefault(k, []).append(mono)

    two_forms = _dual_two_forms(L)
    differentials: dict = {}
    for grade, by_k in blocks.items():
        for k, monos in by_k.items():
            targets = by_k.get(k + 1, [])
            index = {mono: row for row, mono in enumerate(targets)}
            cols = []
            for mono in monos:
                col = [Fraction(0)] * len(targets)
                for word, coeff in _d_monomial(two_forms, mono).items():
                    row = index.get(word)
                    if row is None:
                        raise RuntimeError("differential left its grade block")
                    col[row] = Fraction(coeff)
                cols.append(col)
            if targets:
                rows = [
                    [cols[c][r] for c in range(len(monos))]
                    for r in range(len(targets))
                ]
                differentials[(grade, k)] = Matrix(QQ, rows, ncols=len(monos))

    complex_ = CEComplex(L=L, blocks=blocks, differentials=differentials)
    _assert_square_zero(complex_)
    return complex_


def _assert_square_zero(C: CEComplex) -> None:
    for grade, by_k in C.blocks.items():
        for k in by_k:
            d0 = C.differentials.get((grade, k))
            d1 = C.differentials.get((grade, k + 1))
            if d0 is None or d1 is None:
                continue
            square = d1 * d0
            if any(any(row) for row in square.to_lists()):
                raise RuntimeError(f"d^2 != 0 at grade {grade}, degree {k}")


@dataclass(frozen=True)
class CohomologyTable:
    """Cohomology dimensions per (degree, grade), with marginals."""

    lie_dim: int
    dims: dict

    def marginals(self) -> tuple[int, ...]:
        out = [0] * (self.lie_dim + 1)
        for (k, _grade), d in self.dims.items():
            out[k] += d
        return tuple(out)

    def grade_dims(self, k: int) -> dict:
        return {grade: d for (kk, grade), d in self.dims.items() if kk == k}

    def iter_rows(self):
        """(degree, grade, dim) in a fixed order, nonzero entries only."""
        for (k, grade), d in sorted(self.dims.items()):
            yield k, grade, d


def _rank(matrix: Matrix | None) -> int:
    if matrix is None:
        return 0
    return matrix.rank()


def cohomology_dims(C: CEComplex, *, check_primes=()) -> CohomologyTable:
    """Exact dimensions per block: dim C^k - rank d_k - rank d_{k-1}.

    check_primes, when given, recomputes every rank modulo those primes
    and insists on agreement with the rational ranks; disagreement means
    an arithmetic fault somewhere, so it raises rather than warns.
    """
    dims: dict = {}
    for grade, by_k in C.blocks.items():
        for k, monos in by_k.items():
            d_here = C.differentials.get((grade, k))
            d_prev = C.differentials.get((grade, k - 1))
            r_here, r_prev = _rank(d_here), _rank(d_prev)
            for p in check_primes:
                for mat, expect in ((d_here, r_here), (d_prev, r_prev)):
                    if mat is not None and _modular_rank(mat, p) != expect:
                        raise RuntimeError(
                            f"rank mismatch mod {p} at grade {grade}, degree {k}"
                        )
            value = len(monos) - r_here - r_prev
            if value < 0:
                raise RuntimeError("negative cohomology dimension")
            if value:
                dims[(k, grade)] = value
    return CohomologyTable(lie_dim=C.L.r, dims=dims)


def _modular_rank(matrix: Matrix, p: int) -> int:
    reduced = Matrix(
        GF(p),
        [[x for x in row] for row in matrix.to_lists()],
        ncols=matrix.ncols,
    )
    return reduced.rank()


def duality_check(table: CohomologyTable, dim_n: int) -> CheckReport:
    """Top-degree symmetry of the marginals plus vanishing Euler sum."""
    marginals = table.marginals()
    checks = []
    bad = [
        k
        for k in range(dim_n + 1)
        if marginals[k] != marginals[dim_n - k]
    ]
    checks.append(
        CheckResult(
            "duality",
            not bad,
            "" if not bad else f"asymmetric at degrees {bad}",
        )
    )
    euler = sum((-1) ** k * m for k, m in enumerate(marginals))
    checks.append(
        CheckResult("alternating sum", euler == 0, f"sum {euler}")
    )
    return CheckReport(f"duality, top degree {dim_n}", checks)

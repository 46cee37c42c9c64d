"""Catalogs of indecomposable modules and iso-type identification.

A catalog is the ordered list U_1..U_r of indecomposable nilpotent
modules over the algebra attached to one of the quivers A1..A4
(r = 1, 4, 12, 40), read from a bundled JSON file with integer
matrices.  The order is weakly increasing in total dimension, so a
proper submodule always has a strictly smaller index.

Identification goes through hom fingerprints.  With
H[k][l] = dim Hom(U_k, U_l), the matrix H is invertible, and the
multiplicities a in x = a_1 U_1 + ... + a_r U_r are recovered from the
vector h[k] = dim Hom(U_k, x) by one exact solve of H a = h.  Over a
finite field the same works whenever the prime preserves every catalog
hom dimension; validated primes are exactly those that do.

discover_indecomposables re-derives small catalogs from nothing but the
relations: it enumerates every matrix tuple over F_p satisfying them,
partitions the tuples into isomorphism classes under base change, and
discards each class isomorphic to a direct sum of smaller classes.
"""

from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass, field as dataclass_field
from importlib import resources

from .exactlin import GF, Matrix, PrimeField, QQ, _is_prime
from .quiver import (
    QuiverSpec,
    Representation,
    check_relations,
    direct_sum_list,
    hom_basis,
    hom_dimension,
    make_representation,
    nilpotency_check,
    zero_representation,
)

EXPECTED_COUNTS = {1: 1, 2: 4, 3: 12, 4: 40}
DEFAULT_PRIMES = (2, 3, 5, 7, 11, 13)


class CatalogError(RuntimeError):
    """Bundled catalog data is missing, malformed, or fails validation."""


def _as_n(quiver) -> int:
    if isinstance(quiver, QuiverSpec):
        return quiver.n
    if isinstance(quiver, int):
        return quiver
    if isinstance(quiver, str) and quiver and quiver[0] in "aA" and quiver[1:].isdigit():
        return int(quiver[1:])
    raise ValueError(f"cannot interpret {quiver!r} as a quiver")


# -- labels ---------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class OrbitLabel:
    """Multiplicity vector (a_1, .., a_r) of a direct sum of catalog modules."""

    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if any(x < 0 for x in self.a):
            raise ValueError("multiplicities must be nonnegative")

    @classmethod
    def zero(cls, r: int) -> "OrbitLabel":
        return cls((0,) * r)

    @classmethod
    def unit(cls, r: int, k: int) -> "OrbitLabel":
        """The label of the single module U_k, k 1-based."""
        if not 1 <= k <= r:
            raise ValueError("unit index out of range")
        return cls(tuple(1 if i == k - 1 else 0 for i in range(r)))

    def __len__(self):
        return len(self.a)

    def __iter__(self):
        return iter(self.a)

    def __getitem__(self, i):
        return self.a[i]

    def __add__(self, other: "OrbitLabel") -> "OrbitLabel":
        return OrbitLabel(tuple(x + y for x, y in zip(self.a, other.a, strict=True)))

    def try_sub(self, other: "OrbitLabel"):
        """self - other, or None if any multiplicity would go negative."""
        diff = tuple(x - y for x, y in zip(self.a, other.a, strict=True))
        if any(x < 0 for x in diff):
            return None
        return OrbitLabel(diff)

    def __sub__(self, other: "OrbitLabel") -> "OrbitLabel":
        diff = self.try_sub(other)
        if diff is None:
            raise ValueError("label subtraction went negative")
        return diff

    @property
    def is_zero(self) -> bool:
        return not any(self.a)

    def multiplicity_sum(self) -> int:
        return sum(self.a)

    def unit_index(self):
        """The 1-based k with self = e_k, or None if not a unit label."""
        if sum(self.a) != 1:
            return None
        return self.a.index(1) + 1

    def support(self) -> tuple[int, ...]:
        """1-based indices with nonzero multiplicity."""
        return tuple(i + 1 for i, x in enumerate(self.a) if x)

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i, m in enumerate(self.a):
            if m == 1:
                parts.append(f"U{i + 1}")
            elif m:
                parts.append(f"{m}U{i + 1}")
        return "+".join(parts)


# -- catalog entries ------------------------------------------------------


@dataclass(frozen=True)
class IndecomposableEntry:
    """One catalog module: integer matrices plus a human-readable note."""

    id: int
    dimv: tuple[int, ...]
    f: tuple[tuple[tuple[int, ...], ...], ...]
    q: tuple[tuple[tuple[int, ...], ...], ...]
    notes: str

    @property
    def total_dim(self) -> int:
        return sum(self.dimv)

    def representation(self, field=QQ) -> Representation:
        return make_representation(len(self.dimv), self.dimv, self.f, self.q, field)

    def to_json_obj(self) -> dict:
        return {
            "id": self.id,
            "dimv": list(self.dimv),
            "f": [[list(row) for row in m] for m in self.f],
            "q": [[list(row) for row in m] for m in self.q],
            "notes": self.notes,
        }


class Catalog:
    """Immutable ordered list of the indecomposable modules for one quiver.

    Derived data (representations per field, hom matrices, the fingerprint
    solve, prime validation) is cached on the instance; everything else is
    read-only, so sharing one catalog across threads is safe.
    """

    def __init__(self, quiver: QuiverSpec, entries):
        self.quiver = quiver
        self.entries = tuple(entries)
        self.report = None
        self._reps: dict = {}
        self._hom: dict = {}
        self._hom_inverse = None
        self._prime_ok: dict[int, bool] = {}
        self._labels_by_dimv: dict = {}

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def r(self) -> int:
        return len(self.entries)

    def entry(self, k: int) -> IndecomposableEntry:
        """Entry U_k, k 1-based."""
        if not 1 <= k <= self.r:
            raise ValueError("entry index out of range")
        return self.entries[k - 1]

    def reps(self, field=QQ) -> tuple[Representation, ...]:
        if field not in self._reps:
            self._reps[field] = tuple(e.representation(field) for e in self.entries)
        return self._reps[field]

    def rep(self, k: int, field=QQ) -> Representation:
        return self.reps(field)[k - 1]

    # -- labels -----------------------------------------------------------

    def zero_label(self) -> OrbitLabel:
        return OrbitLabel.zero(self.r)

    def unit_label(self, k: int) -> OrbitLabel:
        return OrbitLabel.unit(self.r, k)

    def simple_id(self, vertex: int) -> int:
        """Catalog index of the simple concentrated at `vertex` (1-based)."""
        for e in self.entries:
            if e.total_dim == 1 and e.dimv[vertex - 1] == 1:
                return e.id
        raise ValueError("no simple at that vertex")

    def label_dimv(self, label: OrbitLabel) -> tuple[int, ...]:
        n = self.quiver.n
        out = [0] * n
        for mult, e in zip(label, self.entries, strict=True):
            if mult:
                for v in range(n):
                    out[v] += mult * e.dimv[v]
        return tuple(out)

    def label_total(self, label: OrbitLabel) -> int:
        return sum(m * e.total_dim for m, e in zip(label, self.entries, strict=True))

    def module_of(self, label: OrbitLabel, field=QQ) -> Representation:
        """The direct sum with the label's multiplicities, in catalog order."""
        parts = []
        for mult, rep in zip(label, self.reps(field), strict=True):
            parts.extend([rep] * mult)
        if not parts:
            return zero_representation(self.quiver.n, field)
        return direct_sum_list(parts, n=self.quiver.n, field=field)

    def labels_with_dimv(self, dimv) -> tuple[OrbitLabel, ...]:
        """Every label whose module has the given dimension vector.

        Lexicographically increasing in the multiplicity tuple; memoized,
        since grading enumerations re-ask the same vectors constantly.
        """
        dimv = tuple(int(x) for x in dimv)
        cached = self._labels_by_dimv.get(dimv)
        if cached is not None:
            return cached
        n = self.quiver.n
        out = []
        mults = [0] * self.r

        def rec(k, remaining):
            if not any(remaining):
                out.append(OrbitLabel(tuple(mults)))
                return
            if k == self.r:
                return
            entry_dimv = self.entries[k].dimv
            limit = min(
                remaining[v] // entry_dimv[v]
                for v in range(n) if entry_dimv[v]
            )
            for mult in range(limit + 1):
                mults[k] = mult
                rec(k + 1, tuple(r - mult * d for r, d in zip(remaining, entry_dimv)))
            mults[k] = 0

        rec(0, dimv)
        result = tuple(out)
        self._labels_by_dimv[dimv] = result
        return result

    # -- hom fingerprints -------------------------------------------------

    def hom_matrix(self, field=QQ) -> tuple[tuple[int, ...], ...]:
        """H[k][l] = dim Hom(U_k, U_l) over `field` (0-based tuples)."""
        if field not in self._hom:
            reps = self.reps(field)
            self._hom[field] = tuple(
                tuple(hom_dimension(x, y) for y in reps) for x in reps
            )
        return self._hom[field]

    @property
    def hom_inverse(self) -> Matrix:
        if self._hom_inverse is None:
            self._hom_inverse = Matrix(QQ, self.hom_matrix(QQ)).inverse()
        return self._hom_inverse

    def is_validated_prime(self, p: int) -> bool:
        """True when reduction mod p preserves every catalog hom dimension."""
        if p not in self._prime_ok:
            self._prime_ok[p] = self.hom_matrix(GF(p)) == self.hom_matrix(QQ)
        return self._prime_ok[p]

    def validated_primes(self, candidates=DEFAULT_PRIMES) -> tuple[int, ...]:
        return tuple(p for p in candidates if self.is_validated_prime(p))

    def iter_validated_primes(self, candidates=DEFAULT_PRIMES):
        """Validated primes from the candidate list, then larger ones forever."""
        last = 1
        for p in candidates:
            last = max(last, p)
            if self.is_validated_prime(p):
                yield p
        p = last
        while True:
            p = _next_prime(p)
            if self.is_validated_prime(p):
                yield p

    def iso_type(self, x: Representation) -> OrbitLabel:
        """Multiplicities of x as a direct sum of catalog modules.

        Defined over the rationals or any validated prime field; raises
        ValueError when the hom fingerprint is not a nonnegative integer
        combination of catalog fingerprints, which is exactly the failure
        mode for a bad field or a non-module.
        """
        field = x.field
        if isinstance(field, PrimeField):
            if not self.is_validated_prime(field.p):
                raise ValueError(
                    f"prime {field.p} fails hom-dimension validation for {self.quiver.name}"
                )
        elif field is not QQ:
            raise ValueError("iso_type needs the rationals or a validated prime field")
        if x.quiver.n != self.quiver.n:
            raise ValueError("quiver mismatch")
        if not check_relations(x):
            raise ValueError("matrices do not satisfy the relations")
        h = [hom_dimension(u, x) for u in self.reps(field)]
        coords = self.hom_inverse.apply(h)
        mults = []
        for c in coords:
            if c.denominator != 1 or c < 0:
                raise ValueError(
                    "hom fingerprint is not a nonnegative integer combination "
                    "of catalog modules"
                )
            mults.append(int(c))
        label = OrbitLabel(tuple(mults))
        if self.label_dimv(label) != x.dimv:
            raise ValueError("fingerprint solve does not match the dimension vector")
        return label

    # -- serialization ----------------------------------------------------

    def to_json(self) -> str:
        return render_catalog_json(
            self.quiver.name, [e.to_json_obj() for e in self.entries]
        )


def iso_type(catalog: Catalog, x: Representation) -> OrbitLabel:
    return catalog.iso_type(x)


def _next_prime(m: int) -> int:
    m += 1
    while not _is_prime(m):
        m += 1
    return m


# -- loading --------------------------------------------------------------


def render_catalog_json(quiver_name: str, entry_objs: list[dict]) -> str:
    return json.dumps({"quiver": quiver_name, "entries": entry_objs}, indent=1) + "\n"


def _data_text(n: int) -> str:
    return resources.files("preproj").joinpath("data", f"catalog_a{n}.json").read_text()


def _catalog_from_obj(obj: dict) -> Catalog:
    quiver = QuiverSpec(_as_n(obj["quiver"]))
    entries = []
    for pos, e in enumerate(obj["entries"], start=1):
        if e["id"] != pos:
            raise CatalogError("entry ids must run 1..r in order")
        entries.append(IndecomposableEntry(
            id=pos,
            dimv=tuple(int(x) for x in e["dimv"]),
            f=tuple(tuple(tuple(int(x) for x in row) for row in m) for m in e["f"]),
            q=tuple(tuple(tuple(int(x) for x in row) for row in m) for m in e["q"]),
            notes=str(e["notes"]),
        ))
    return Catalog(quiver, entries)


def load_catalog(quiver, *, validate: bool = True) -> Catalog:
    """The bundled catalog for A_n; one shared instance per process.

    With validate=True (the default) the full validation report is run on
    first load and a CatalogError raised if anything fails; the report is
    kept on the returned catalog.
    """
    return _load(_as_n(quiver), validate)


@functools.lru_cache(maxsize=None)
def _load(n: int, validate: bool) -> Catalog:
    if n not in EXPECTED_COUNTS:
        raise CatalogError(f"no catalog for n={n}")
    try:
        text = _data_text(n)
    except FileNotFoundError as exc:
        raise CatalogError(f"catalog data file for A{n} is missing") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"catalog data file for A{n} is corrupt") from exc
    catalog = _catalog_from_obj(obj)
    if len(catalog) != EXPECTED_COUNTS[n]:
        raise CatalogError(
            f"A{n} catalog has {len(catalog)} entries, expected {EXPECTED_COUNTS[n]}"
        )
    if validate:
        report = validate_catalog(catalog)
        if not report.ok:
            raise CatalogError("catalog validation failed:\n" + str(report))
        catalog.report = report
    return catalog


# -- indecomposability over the rationals ---------------------------------


def _flatten_endo(endo) -> list:
    out = []
    for m in endo:
        for row in m.entries:
            out.extend(row)
    return out


def is_indecomposable(x: Representation) -> bool:
    """Whether End(x) is local with residue field QQ.

    The radical of End(x) is computed by the characteristic-zero trace
    criterion: it is the kernel of the form t(a, b) = trace of ab in the
    regular representation, so dim End - dim rad = rank of the Gram
    matrix.  Indecomposable here means that rank is one, i.e. End(x) is
    local and splits over the rationals; every module in these catalogs
    is of that kind, and direct sums never are.
    """
    if x.field is not QQ:
        raise ValueError("indecomposability test runs over the rationals")
    if x.total_dim == 0:
        raise ValueError("zero module")
    basis = hom_basis(x, x)
    d = len(basis)
    # Coordinates of an endomorphism = solve against the flattened basis.
    flat = [_flatten_endo(b) for b in basis]
    coord_mat = Matrix(QQ, flat, ncols=len(flat[0])).transpose()
    left_mult = []
    for a in range(d):
        cols = []
        for b in range(d):
            prod = tuple(ma * mb for ma, mb in zip(basis[a], basis[b]))
            coords = coord_mat.solve(_flatten_endo(prod))
            assert coords is not None, "endomorphism product left the span"
            cols.append(coords)
        left_mult.append(Matrix(QQ, cols, ncols=d).transpose())
    gram = Matrix(
        QQ,
        [
            [_trace(left_mult[a] * left_mult[b]) for b in range(d)]
            for a in range(d)
        ],
        ncols=d,
    )
    return gram.rank() == 1


def _trace(m: Matrix):
    return sum((m.entries[i][i] for i in range(m.nrows)), QQ.coerce(0))


# -- validation -----------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class CatalogReport:
    quiver_name: str
    checks: list[CheckResult] = dataclass_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def violations(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.ok]

    def __str__(self):
        lines = [f"catalog {self.quiver_name}"]
        for c in self.checks:
            flag = "ok  " if c.ok else "FAIL"
            lines.append(f"  {flag} {c.name}" + (f": {c.detail}" if c.detail else ""))
        return "\n".join(lines)


def _dominates(small, big) -> bool:
    return all(s <= b for s, b in zip(small, big))


def _embeds(x: Representation, y: Representation, cap: int = 1 << 14) -> bool:
    """Exhaustive search for an injective homomorphism x -> y over F_p."""
    if not _dominates(x.dimv, y.dimv):
        return False
    basis = hom_basis(x, y)
    if not basis:
        return False
    p = x.field.p
    if p ** len(basis) > cap:
        raise ValueError("hom space too large for exhaustive embedding search")
    n = x.quiver.n
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        if not any(coeffs):
            continue
        phi = [Matrix.zeros(x.field, y.dimv[v], x.dimv[v]) for v in range(n)]
        for c, b in zip(coeffs, basis):
            if c:
                phi = [acc + m.scale(c) for acc, m in zip(phi, b)]
        if all(phi[v].rank() == x.dimv[v] for v in range(n)):
            return True
    return False


def validate_catalog(catalog: Catalog, *, ordering_prime: int | None = None) -> CatalogReport:
    """Run every catalog certification check; never raises on violations.

    Checks: entry count, consecutive ids, relations, nilpotency,
    indecomposability over the rationals, pairwise distinct hom
    fingerprints, invertibility of the hom matrix, unit iso types,
    weakly increasing total dimension, and the submodule ordering rule
    (x embeds in y implies index(x) <= index(y)) by exhaustive
    injective-hom search over a validated prime.
    """
    report = CatalogReport(catalog.quiver.name)

    def add(name, ok, detail=""):
        report.checks.append(CheckResult(name, bool(ok), detail))

    n = catalog.quiver.n
    r = catalog.r
    expected = EXPECTED_COUNTS.get(n)
    add("entry count", r == expected, f"{r} entries, expected {expected}")

    reps = catalog.reps(QQ)
    bad = [e.id for e, rep in zip(catalog, reps) if not check_relations(rep)]
    add("relations", not bad, f"violated by {bad}" if bad else "all entries")

    bad = [e.id for e, rep in zip(catalog, reps) if not nilpotency_check(rep)]
    add("nilpotency", not bad, f"violated by {bad}" if bad else "all entries")

    bad = [e.id for e, rep in zip(catalog, reps) if not is_indecomposable(rep)]
    add("indecomposability", not bad, f"violated by {bad}" if bad else "all entries")

    hom = catalog.hom_matrix(QQ)
    seen: dict = {}
    dup = []
    for l in range(r):
        col = tuple(hom[k][l] for k in range(r))
        if col in seen:
            dup.append((seen[col] + 1, l + 1))
        else:
            seen[col] = l
    add("pairwise non-isomorphic", not dup,
        f"equal hom fingerprints: {dup}" if dup else "hom fingerprints distinct")

    invertible = Matrix(QQ, hom).rank() == r
    add("hom matrix invertible", invertible, f"rank over QQ of the {r}x{r} hom matrix")

    if invertible:
        bad = [k for k in range(1, r + 1)
               if catalog.iso_type(reps[k - 1]) != catalog.unit_label(k)]
        add("unit iso types", not bad, f"violated by {bad}" if bad else "all entries")

    dims = [e.total_dim for e in catalog]
    add("dimension ordering", all(a <= b for a, b in zip(dims, dims[1:])),
        "total dimension weakly increasing")

    p = ordering_prime
    if p is None:
        validated = catalog.validated_primes()
        p = validated[0] if validated else None
    if p is None:
        add("submodule ordering", False, "no validated prime available")
    else:
        gf_reps = catalog.reps(GF(p))
        violations = []
        for j in range(r):
            for i in range(r):
                if i == j or not _dominates(catalog.entries[i].dimv,
                                            catalog.entries[j].dimv):
                    continue
                if _embeds(gf_reps[i], gf_reps[j]) and i > j:
                    violations.append((i + 1, j + 1))
        add("submodule ordering", not violations,
            f"over F_{p}; embeddings at larger index: {violations}"
            if violations else f"exhaustive embedding search over F_{p}")

    return report


# -- brute-force discovery over small prime fields ------------------------


def _all_mats(rows: int, cols: int, p: int):
    """Every rows x cols matrix over F_p as a tuple of row tuples."""
    cells = itertools.product(range(p), repeat=rows * cols)
    return [
        tuple(flat[i * cols:(i + 1) * cols] for i in range(rows))
        for flat in cells
    ]


def _mmul(a, b, p: int, rows: int, inner: int, cols: int):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(inner)) % p for j in range(cols))
        for i in range(rows)
    )


def _zero_mat(rows: int, cols: int):
    return tuple((0,) * cols for _ in range(rows))


@functools.lru_cache(maxsize=None)
def _relation_points(n: int, dimv: tuple, p: int) -> tuple:
    """All arrow tuples over F_p satisfying the relations, flat encoding.

    A point is (F_1, Q_1, .., F_{n-1}, Q_{n-1}) with each matrix a tuple
    of row tuples.  The relations are enforced edge by edge: the first
    backward-forward product must vanish, each next one must equal the
    previous forward-backward product, and the last forward-backward
    product must vanish.
    """
    if n == 1:
        return ((),)
    buckets = []
    for e in range(n - 1):
        a, b = dimv[e], dimv[e + 1]
        last = e == n - 2
        grouped: dict = {}
        for fmat in _all_mats(b, a, p):
            for qmat in _all_mats(a, b, p):
                fq = _mmul(fmat, qmat, p, b, a, b)
                if last and any(any(row) for row in fq):
                    continue
                qf = _mmul(qmat, fmat, p, a, b, a)
                grouped.setdefault(qf, []).append((fmat, qmat, fq))
        buckets.append(grouped)

    out = []
    acc: list = []

    def rec(e, need):
        if e == n - 1:
            out.append(tuple(acc))
            return
        for fmat, qmat, fq in buckets[e].get(need, ()):
            acc.append(fmat)
            acc.append(qmat)
            rec(e + 1, fq)
            acc.pop()
            acc.pop()

    rec(0, _zero_mat(dimv[0], dimv[0]))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _gl_list(d: int, p: int) -> tuple:
    """All of GL_d(F_p) as (g, g_inverse) pairs."""
    if d == 0:
        return (((), ()),)
    mats = [m for m in _all_mats(d, d, p) if _tuple_rank(m, p) == d]
    ident = tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))
    out = []
    for g in mats:
        for h in mats:
            if _mmul(g, h, p, d, d, d) == ident:
                out.append((g, h))
                break
    return tuple(out)


def _tuple_rank(m, p: int) -> int:
    from .exactlin import _rank_mod

    return _rank_mod([list(r) for r in m], p)


@functools.lru_cache(maxsize=None)
def _base_change_group(dimv: tuple, p: int) -> tuple:
    per_vertex = [_gl_list(d, p) for d in dimv]
    size = 1
    for lst in per_vertex:
        size *= len(lst)
    if size > 1 << 20:
        raise ValueError("base-change group too large; enumeration budget exceeded")
    return tuple(itertools.product(*per_vertex))


def _transform(n: int, dimv: tuple, point: tuple, gs: tuple, p: int) -> tuple:
    out = []
    for e in range(n - 1):
        a, b = dimv[e], dimv[e + 1]
        fmat, qmat = point[2 * e], point[2 * e + 1]
        g_t, ginv_t = gs[e]
        g_h, ginv_h = gs[e + 1]
        out.append(_mmul(_mmul(g_h, fmat, p, b, b, a), ginv_t, p, b, a, a))
        out.append(_mmul(_mmul(g_t, qmat, p, a, a, b), ginv_h, p, a, b, b))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _iso_classes(n: int, dimv: tuple, p: int):
    """(representative points, point -> class index) for one dimension vector."""
    points = _relation_points(n, dimv, p)
    group = _base_change_group(dimv, p)
    class_of: dict = {}
    reps = []
    for pt in points:
        if pt in class_of:
            continue
        idx = len(reps)
        reps.append(pt)
        for gs in group:
            class_of[_transform(n, dimv, pt, gs, p)] = idx
    return tuple(reps), class_of


def _block_diag(a, b, ra: int, ca: int, rb: int, cb: int):
    rows = [row + (0,) * cb for row in a]
    rows += [(0,) * ca + row for row in b]
    return tuple(rows)


def _direct_sum_point(n: int, d1: tuple, pt1: tuple, d2: tuple, pt2: tuple) -> tuple:
    out = []
    for e in range(n - 1):
        a1, b1 = d1[e], d1[e + 1]
        a2, b2 = d2[e], d2[e + 1]
        out.append(_block_diag(pt1[2 * e], pt2[2 * e], b1, a1, b2, a2))
        out.append(_block_diag(pt1[2 * e + 1], pt2[2 * e + 1], a1, b1, a2, b2))
    return tuple(out)


def _proper_splits(dimv: tuple):
    ranges = [range(d + 1) for d in dimv]
    for d1 in itertools.product(*ranges):
        if not any(d1) or d1 == dimv:
            continue
        d2 = tuple(x - y for x, y in zip(dimv, d1))
        if d1 <= d2:
            yield d1, d2


@functools.lru_cache(maxsize=None)
def _indecomposable_ids(n: int, dimv: tuple, p: int) -> tuple[int, ...]:
    reps, class_of = _iso_classes(n, dimv, p)
    decomposable = set()
    for d1, d2 in _proper_splits(dimv):
        for pt1 in _iso_classes(n, d1, p)[0]:
            for pt2 in _iso_classes(n, d2, p)[0]:
                decomposable.add(class_of[_direct_sum_point(n, d1, pt1, d2, pt2)])
    return tuple(i for i in range(len(reps)) if i not in decomposable)


def _point_to_rep(n: int, dimv: tuple, p: int, point: tuple) -> Representation:
    f = [point[2 * e] for e in range(n - 1)]
    q = [point[2 * e + 1] for e in range(n - 1)]
    return make_representation(n, dimv, f, q, GF(p))


def discover_indecomposables(quiver, dimv, p: int = 2, *,
                             budget: int = 1 << 22,
                             check_idempotents: bool = False) -> list[Representation]:
    """One representative per indecomposable class with this dimension vector.

    Pure brute force, independent of the bundled data: enumerate all
    relation-satisfying matrix tuples over F_p, split them into orbits of
    the base-change group (= isomorphism classes), and drop every class
    that is a direct sum of two smaller classes.  With check_idempotents
    the survivors are re-certified by exhaustive idempotent search in
    their endomorphism algebras.
    """
    n = _as_n(quiver)
    dimv = tuple(int(x) for x in dimv)
    if len(dimv) != n or any(d < 0 for d in dimv):
        raise ValueError("bad dimension vector")
    if sum(dimv) > 8:
        raise ValueError("total dimension above the enumeration bound")
    if p not in (2, 3):
        raise ValueError("discovery runs over F_2 or F_3")
    cost = p ** sum(2 * dimv[e] * dimv[e + 1] for e in range(n - 1))
    if cost > budget:
        raise ValueError("enumeration budget exceeded")
    reps, _ = _iso_classes(n, dimv, p)
    found = [_point_to_rep(n, dimv, p, reps[i])
             for i in _indecomposable_ids(n, dimv, p)]
    if check_idempotents:
        for rep in found:
            assert not has_nontrivial_idempotent(rep), "decomposable class survived"
    return found


def has_nontrivial_idempotent(x: Representation, *, budget: int = 1 << 20) -> bool:
    """Exhaustive search for a splitting idempotent in End(x) over F_p."""
    if not isinstance(x.field, PrimeField):
        raise ValueError("idempotent search runs over a prime field")
    p = x.field.p
    basis = hom_basis(x, x)
    if p ** len(basis) > budget:
        raise ValueError("endomorphism algebra too large for exhaustive search")
    n = x.quiver.n
    ident = tuple(Matrix.identity(x.field, d) for d in x.dimv)
    zero = tuple(Matrix.zeros(x.field, d, d) for d in x.dimv)
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        endo = list(zero)
        for c, b in zip(coeffs, basis):
            if c:
                endo = [acc + m.scale(c) for acc, m in zip(endo, b)]
        endo = tuple(endo)
        if endo == zero or endo == ident:
            continue
        if all((m * m) == m for m in endo):
            return True
    return False

"""Convolution algebra on invariant constructible functions.

Elements are finite rational combinations of the indicator basis I(a),
one basis vector per orbit label a.  The product of two basis vectors
runs over every label in the summed grade and weighs it by the Euler
characteristic of the variety of submodules of that type: the I(c)
coefficient of I(a)*I(b) counts (in the Euler sense) submodules of type
b inside c with quotient of type a.  The coproduct splits a label over
all componentwise decompositions; it is where primitivity, and hence
the Lie algebra structure downstream, comes from.

Products against a single generator u_j are triangular: the straightened
term I(a+e_j) appears with coefficient a_j+1 and every other term bumps
some strictly larger index.  check_triangular_product verifies that
shape directly, and express_in_generators runs the induction it enables
to rewrite any basis vector as a polynomial in the u_j.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType

from .catalog import CheckResult, OrbitLabel, load_catalog
from .grassmann import SubmoduleQuery, euler_characteristic


def _clean(terms) -> dict:
    out = {}
    for key, value in terms.items():
        value = Fraction(value)
        if value:
            out[key] = value
    return out


class HallElement:
    """Finite rational combination of basis vectors I(a), one quiver."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=()):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", MappingProxyType(_clean(dict(terms))))

    def __setattr__(self, name, value):
        raise AttributeError("HallElement is immutable")

    @classmethod
    def basis(cls, n: int, label: OrbitLabel) -> "HallElement":
        return cls(n, {label: Fraction(1)})

    @classmethod
    def one(cls, n: int) -> "HallElement":
        return cls.basis(n, load_catalog(n).zero_label())

    @classmethod
    def generator(cls, n: int, k: int) -> "HallElement":
        return cls.basis(n, load_catalog(n).unit_label(k))

    def coefficient(self, label: OrbitLabel) -> Fraction:
        return self.terms.get(label, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def grades(self) -> set:
        catalog = load_catalog(self.n)
        return {catalog.label_dimv(a) for a in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.grades()) <= 1

    def _check_compatible(self, other):
        if not isinstance(other, HallElement) or other.n != self.n:
            raise TypeError("operands live over different quivers")

    def __add__(self, other):
        self._check_compatible(other)
        terms = dict(self.terms)
        for label, c in other.terms.items():
            terms[label] = terms.get(label, Fraction(0)) + c
        return HallElement(self.n, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return HallElement(self.n, {a: -c for a, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HallElement):
            return product(self, other)
        if isinstance(other, Rational):
            return HallElement(self.n, {a: c * other for a, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        return (
            isinstance(other, HallElement)
            and self.n == other.n
            and dict(self.terms) == dict(other.terms)
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for label in sorted(self.terms, key=tuple):
            c = self.terms[label]
            name = _basis_name(label)
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{c}*{name}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def _basis_name(label: OrbitLabel) -> str:
    if label.is_zero:
        return "1"
    k = label.unit_index()
    if k is not None:
        return f"u{k}"
    return "I" + str(tuple(label))


class TensorElement:
    """Finite rational combination of I(a) (x) I(b) pairs."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=()):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", MappingProxyType(_clean(dict(terms))))

    def __setattr__(self, name, value):
        raise AttributeError("TensorElement is immutable")

    def __add__(self, other):
        if not isinstance(other, TensorElement) or other.n != self.n:
            raise TypeError("operands live over different quivers")
        terms = dict(self.terms)
        for pair, c in other.terms.items():
            terms[pair] = terms.get(pair, Fraction(0)) + c
        return TensorElement(self.n, terms)

    def __sub__(self, other):
        return self + TensorElement(self.n, {p: -c for p, c in other.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, TensorElement)
            and self.n == other.n
            and dict(self.terms) == dict(other.terms)
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def swap(self) -> "TensorElement":
        return TensorElement(self.n, {(b, a): c for (a, b), c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"{'' if c == 1 else f'{c}*'}{_basis_name(a)}(x){_basis_name(b)}"
            for (a, b), c in sorted(self.terms.items(), key=lambda kv: tuple(map(tuple, kv[0])))
        )


# -- product --------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _basis_product(n: int, a: OrbitLabel, b: OrbitLabel) -> tuple:
    """Structure constants of I(a)*I(b) as ((label, coefficient), ...).

    I(c) picks up the Euler characteristic of submodules of type b in c
    with quotient of type a, so the left factor sits on the quotient.
    """
    catalog = load_catalog(n)
    grade = tuple(
        x + y
        for x, y in zip(catalog.label_dimv(a), catalog.label_dimv(b))
    )
    terms = []
    for c in catalog.labels_with_dimv(grade):
        chi = euler_characteristic(SubmoduleQuery(n, c, b, a))
        if chi:
            terms.append((c, chi))
    return tuple(terms)


def product(f: HallElement, g: HallElement) -> HallElement:
    """Convolution product, bilinear in both slots."""
    f._check_compatible(g)
    terms: dict = {}
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            weight = ca * cb
            for c, chi in _basis_product(f.n, a, b):
                terms[c] = terms.get(c, Fraction(0)) + weight * chi
    return HallElement(f.n, terms)


# -- coproduct ------------------------------------------------------------


def _splittings(a: OrbitLabel):
    for b in itertools.product(*[range(m + 1) for m in a]):
        yield OrbitLabel(b), a - OrbitLabel(b)


def coproduct(f: HallElement) -> TensorElement:
    """Split every label over all componentwise decompositions."""
    terms: dict = {}
    for a, c in f.terms.items():
        for b, rest in _splittings(a):
            terms[(b, rest)] = terms.get((b, rest), Fraction(0)) + c
    return TensorElement(f.n, terms)


def tensor_multiply(s: TensorElement, t: TensorElement) -> TensorElement:
    """Componentwise product, (f1 (x) f2)*(g1 (x) g2) = f1*g1 (x) f2*g2."""
    if s.n != t.n:
        raise TypeError("operands live over different quivers")
    terms: dict = {}
    for (a1, a2), cs in s.terms.items():
        for (b1, b2), ct in t.terms.items():
            weight = cs * ct
            for c1, chi1 in _basis_product(s.n, a1, b1):
                for c2, chi2 in _basis_product(s.n, a2, b2):
                    key = (c1, c2)
                    terms[key] = terms.get(key, Fraction(0)) + weight * chi1 * chi2
    return TensorElement(s.n, terms)


def is_primitive(f: HallElement) -> bool:
    """Whether the coproduct is f (x) 1 + 1 (x) f."""
    zero = load_catalog(f.n).zero_label()
    expected: dict = {}
    for a, c in f.terms.items():
        expected[(a, zero)] = expected.get((a, zero), Fraction(0)) + c
        expected[(zero, a)] = expected.get((zero, a), Fraction(0)) + c
    return coproduct(f) == TensorElement(f.n, expected)


# -- structural checks ----------------------------------------------------


@dataclass
class CheckReport:
    title: str
    checks: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __str__(self):
        lines = [self.title]
        for c in self.checks:
            flag = "ok  " if c.ok else "FAIL"
            lines.append(f"  {flag} {c.name}" + (f": {c.detail}" if c.detail else ""))
        return "\n".join(lines)


def _expand_left(t: TensorElement) -> dict:
    """Apply the coproduct to the first tensor slot; triple-label map."""
    out: dict = {}
    for (a, b), c in t.terms.items():
        for a1, a2 in _splittings(a):
            key = (a1, a2, b)
            out[key] = out.get(key, Fraction(0)) + c
    return {k: v for k, v in out.items() if v}


def _expand_right(t: TensorElement) -> dict:
    out: dict = {}
    for (a, b), c in t.terms.items():
        for b1, b2 in _splittings(b):
            key = (a, b1, b2)
            out[key] = out.get(key, Fraction(0)) + c
    return {k: v for k, v in out.items() if v}


def check_bialgebra(samples) -> CheckReport:
    """Compatibility of product and coproduct on sample element pairs.

    For each pair (f, g): the coproduct of f*g must match the tensor
    product of the coproducts, the coproduct must be coassociative and
    swap-invariant on f, and the first failure is reported with the
    offending terms.
    """
    checks = []
    for idx, (f, g) in enumerate(samples):
        tag = f"pair {idx}"
        lhs = coproduct(product(f, g))
        rhs = tensor_multiply(coproduct(f), coproduct(g))
        if lhs != rhs:
            diff = lhs - rhs
            checks.append(
                CheckResult(f"{tag} compatibility", False, f"difference {diff!r}")
            )
            continue
        df = coproduct(f)
        left, right = _expand_left(df), _expand_right(df)
        if left != right:
            keys = sorted(
                set(left) ^ set(right)
                | {k for k in set(left) & set(right) if left[k] != right[k]},
                key=lambda triple: tuple(map(tuple, triple)),
            )
            checks.append(
                CheckResult(f"{tag} coassociativity", False, f"mismatch at {keys[:3]}")
            )
            continue
        if df != df.swap():
            checks.append(
                CheckResult(f"{tag} cocommutativity", False, f"coproduct {df!r}")
            )
            continue
        checks.append(CheckResult(tag, True))
    return CheckReport("bialgebra checks", checks)


def check_triangular_product(a: OrbitLabel, j: int, *, n: int) -> CheckReport:
    """Shape of I(a)*u_j: leading straightened term, higher-index rest.

    The coefficient of I(a+e_j) must be a_j+1, and every other label b
    in the product must exceed a at some index strictly beyond j.
    """
    catalog = load_catalog(n)
    result = product(HallElement.basis(n, a), HallElement.generator(n, j))
    lead = a + catalog.unit_label(j)
    checks = []
    got = result.coefficient(lead)
    checks.append(
        CheckResult(
            "leading coefficient",
            got == a[j - 1] + 1,
            f"I({tuple(lead)}) carries {got}, expected {a[j - 1] + 1}",
        )
    )
    stragglers = [
        b
        for b in result.terms
        if b != lead and not any(b[i] == a[i] + 1 for i in range(j, catalog.r))
    ]
    checks.append(
        CheckResult(
            "higher-index support",
            not stragglers,
            "" if not stragglers else f"terms without an index bump past {j}: {stragglers}",
        )
    )
    return CheckReport(f"I({tuple(a)}) * u{j}", checks)


# -- expression in the generators -----------------------------------------


@dataclass(frozen=True)
class GeneratorExpression:
    """Rational combination of ordered products of generators u_i."""

    n: int
    terms: tuple  # ((coefficient, (i_1, ..., i_k)), ...)

    def evaluate(self) -> HallElement:
        total = HallElement(self.n)
        for coeff, word in self.terms:
            acc = HallElement.one(self.n)
            for k in word:
                acc = product(acc, HallElement.generator(self.n, k))
            total = total + coeff * acc
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for coeff, word in self.terms:
            mono = "*".join(f"u{k}" for k in word) if word else "1"
            parts.append(mono if coeff == 1 else f"({coeff})*{mono}")
        return " + ".join(parts)


def _scale(terms, factor: Fraction):
    return {word: c * factor for word, c in terms.items()}


@functools.lru_cache(maxsize=None)
def _express(n: int, a: OrbitLabel) -> tuple:
    """Word map for I(a), keyed by generator tuples; see express_in_generators."""
    if a.is_zero:
        return (((), Fraction(1)),)
    j = max(a.support())
    prev = a - load_catalog(n).unit_label(j)
    lead = Fraction(a[j - 1])
    # I(prev)*u_j = a_j I(a) + higher-index terms, each solved recursively
    expansion = dict(_basis_product(n, prev, load_catalog(n).unit_label(j)))
    got = expansion.pop(a, None)
    if got != lead:
        raise RuntimeError(
            f"triangular product failed: I({tuple(a)}) carries {got}, expected {lead}"
        )
    terms: dict = {}
    for word, c in _express(n, prev):
        terms[word + (j,)] = terms.get(word + (j,), Fraction(0)) + c
    for b, chi in expansion.items():
        for word, c in _express(n, b):
            terms[word] = terms.get(word, Fraction(0)) - c * chi
    terms = {w: c / lead for w, c in terms.items() if c}
    return tuple(sorted(terms.items()))


def express_in_generators(a: OrbitLabel, *, n: int) -> GeneratorExpression:
    """Rewrite I(a) as a polynomial in the u_j.

    Strips the largest occupied index with the triangular product shape:
    I(a-e_j)*u_j has I(a) as its leading term and only labels bumping an
    index beyond j otherwise, so recursion terminates by induction on
    total dimension and then on that largest index.  Terms are listed in
    lexicographic word order; the expression is one valid choice among
    many, deterministic but not mathematically canonical.
    """
    return GeneratorExpression(
        n, tuple((coeff, word) for word, coeff in _express(n, a))
    )

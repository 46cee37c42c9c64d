"""Both counting routes against hand-checked cases, plus their agreement."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from preproj.catalog import Catalog, OrbitLabel, load_catalog
from preproj.grassmann import (
    CountingPolynomial,
    SubmoduleQuery,
    _probes,
    chi_single,
    count_points,
    euler_characteristic,
    fit_counts,
    fixed_point_reduce,
)


def _query(n, ambient, sub, quot):
    catalog = load_catalog(n)

    def as_label(x):
        if isinstance(x, OrbitLabel):
            return x
        if isinstance(x, int):
            return catalog.unit_label(x)
        return OrbitLabel(tuple(x))

    return SubmoduleQuery(n, as_label(ambient), as_label(sub), as_label(quot))


# -- query validation -----------------------------------------------------


def test_query_requires_matching_grades():
    with pytest.raises(ValueError):
        _query(2, 1, 1, 2)  # (1,0) + (0,1) is not (1,0)


def test_query_requires_catalog_length_labels():
    with pytest.raises(ValueError):
        SubmoduleQuery(
            2, OrbitLabel((1, 0)), OrbitLabel((1, 0)), OrbitLabel((0, 0))
        )


# -- polynomial fitting ---------------------------------------------------


def test_counting_polynomial_evaluates_lowest_degree_first():
    poly = CountingPolynomial((Fraction(1), Fraction(0), Fraction(2)), 2)
    assert poly.evaluate(3) == 19
    assert poly.at_one() == 3


def test_counting_polynomial_rejects_excess_coefficients():
    with pytest.raises(ValueError):
        CountingPolynomial((Fraction(1), Fraction(1)), 0)


def test_counting_polynomial_rejects_fractional_value_at_one():
    poly = CountingPolynomial((Fraction(1, 2),), 0)
    with pytest.raises(RuntimeError):
        poly.at_one()


@settings(deadline=None, max_examples=50)
@given(st.lists(st.integers(min_value=0, max_value=9), min_size=1, max_size=5))
def test_fit_counts_recovers_integer_polynomials(coeffs):
    degree = len(coeffs) - 1
    points = [2, 3, 5, 7, 11, 13, 17][: degree + 2]
    samples = [(q, sum(c * q**k for k, c in enumerate(coeffs))) for q in points]
    poly = fit_counts(samples, degree)
    assert poly.at_one() == sum(coeffs)
    assert poly.evaluate(19) == sum(c * 19**k for k, c in enumerate(coeffs))


def test_fit_counts_rejects_non_polynomial_data():
    samples = [(q, 2**q) for q in (2, 3, 5)]
    with pytest.raises(RuntimeError, match="non-polynomial"):
        fit_counts(samples, 1)


def test_fit_counts_requires_a_spare_sample():
    with pytest.raises(ValueError):
        fit_counts([(2, 1), (3, 1)], 1)


# -- hand-checked counts --------------------------------------------------


def test_lines_in_a_cube_of_simples():
    # submodules of S^3 at the only vertex are plain subspaces
    q = _query(1, (3,), 1, (2,))
    assert count_points(q, 2) == 7
    assert count_points(q, 3) == 13
    assert euler_characteristic(q, method="interpolate") == 3
    assert euler_characteristic(q, method="fixed_point") == 3


def test_socle_is_a_submodule_and_top_is_not():
    # the two-vertex strings differ in which simple sits at the bottom
    down = _query(2, 3, 2, 1)
    up = _query(2, 4, 2, 1)
    assert count_points(down, 2) == 1
    assert count_points(up, 2) == 0
    assert euler_characteristic(down) == 1
    assert euler_characteristic(up) == 0


def test_diamond_splits_one_way_only():
    # the diamond's unique length-two submodule reaches down the left arm
    good = _query(3, 12, 4, 5)
    bad = _query(3, 12, 5, 4)
    for method in ("interpolate", "fixed_point"):
        assert euler_characteristic(good, method=method) == 1
        assert euler_characteristic(bad, method=method) == 0


def test_split_ambient_locates_the_simple_summand():
    q = _query(2, (1, 1, 0, 0), 2, 1)
    assert euler_characteristic(q, method="interpolate") == 1
    assert fixed_point_reduce(q) == 1


def test_chi_single_handles_impossible_and_rigid_grades():
    catalog = load_catalog(2)
    assert chi_single(2, 1, 2, catalog.zero_label()) == 0  # sub too big at vertex 1
    assert chi_single(2, 1, 3, catalog.unit_label(1)) == 0  # quotient grade off
    # grades fine, but the top of a string is not a submodule
    assert chi_single(2, 1, 3, catalog.unit_label(2)) == 0
    assert chi_single(2, 2, 3, catalog.unit_label(1)) == 1


def test_full_and_empty_subspaces():
    catalog = load_catalog(2)
    full = _query(2, 3, 3, catalog.zero_label())
    empty = _query(2, 3, catalog.zero_label(), 3)
    assert euler_characteristic(full) == 1
    assert euler_characteristic(empty) == 1
    relabeled = _query(2, 3, catalog.zero_label(), (1, 1, 0, 0))
    assert euler_characteristic(relabeled) == 0


# -- route independence ---------------------------------------------------


def _unit_sub_queries(n, max_total):
    catalog = load_catalog(n)
    for total in range(1, max_total + 1):
        for dimv in itertools.product(range(total + 1), repeat=n):
            if sum(dimv) != total:
                continue
            for ambient in catalog.labels_with_dimv(dimv):
                for j in range(1, catalog.r + 1):
                    sub_dimv = catalog.entry(j).dimv
                    quot_dimv = tuple(a - s for a, s in zip(dimv, sub_dimv))
                    if any(x < 0 for x in quot_dimv):
                        continue
                    for quot in catalog.labels_with_dimv(quot_dimv):
                        yield _query(n, ambient, j, quot)


@pytest.mark.parametrize("n,max_total", [(1, 4), (2, 3), (3, 3)])
def test_routes_agree_on_unit_submodule_queries(n, max_total):
    checked = 0
    for q in _unit_sub_queries(n, max_total):
        assert euler_characteristic(q, method="interpolate") == fixed_point_reduce(q), q
        checked += 1
    assert checked >= max_total


def test_fixed_point_route_rejects_composite_submodule_types():
    q = _query(1, (2,), (2,), (0,))
    with pytest.raises(ValueError):
        fixed_point_reduce(q)
    assert euler_characteristic(q) == 1  # auto falls back to interpolation


# -- guard rails ----------------------------------------------------------


def test_count_points_insists_on_validated_primes(monkeypatch):
    q = _query(2, 3, 2, 1)
    monkeypatch.setattr(Catalog, "is_validated_prime", lambda self, p: False)
    with pytest.raises(ValueError, match="not validated"):
        count_points(q, 5)


def test_unknown_method_is_rejected():
    with pytest.raises(ValueError):
        euler_characteristic(_query(2, 3, 2, 1), method="guess")


def test_probe_sets_stay_small():
    probe_ids, lookup = _probes(2, (1, 1))
    assert probe_ids == (1, 2)
    assert len(lookup) == 3
    probe_ids_a3, lookup_a3 = _probes(3, (1, 1, 1))
    assert len(probe_ids_a3) < 12
    catalog = load_catalog(3)
    assert all(catalog.label_dimv(v) == (1, 1, 1) for v in lookup_a3.values())

"""Product, coproduct, and the generator-rewriting induction."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from preproj.catalog import OrbitLabel, load_catalog
from preproj.hall import (
    GeneratorExpression,
    HallElement,
    TensorElement,
    check_bialgebra,
    check_triangular_product,
    coproduct,
    express_in_generators,
    is_primitive,
    product,
    tensor_multiply,
)


def _I(n, *mults):
    return HallElement.basis(n, OrbitLabel(mults))


def _labels_up_to(n, max_total):
    catalog = load_catalog(n)
    for total in range(max_total + 1):
        for dimv in itertools.product(range(total + 1), repeat=n):
            if sum(dimv) == total:
                yield from catalog.labels_with_dimv(dimv)


# -- element arithmetic ---------------------------------------------------


def test_elements_drop_zero_terms_and_compare_by_value():
    u1 = HallElement.generator(2, 1)
    assert (u1 - u1).is_zero()
    assert u1 + u1 == 2 * u1
    assert Fraction(1, 2) * (2 * u1) == u1
    assert u1 != HallElement.generator(2, 2)


def test_elements_are_immutable():
    u1 = HallElement.generator(2, 1)
    with pytest.raises(AttributeError):
        u1.n = 3
    with pytest.raises(TypeError):
        u1.terms[load_catalog(2).zero_label()] = 1


def test_mixed_quivers_are_rejected():
    with pytest.raises(TypeError):
        HallElement.generator(2, 1) + HallElement.generator(3, 1)
    with pytest.raises(TypeError):
        product(HallElement.generator(2, 1), HallElement.generator(3, 1))


# -- products -------------------------------------------------------------


def test_generator_products_in_rank_two():
    u1, u2 = HallElement.generator(2, 1), HallElement.generator(2, 2)
    assert u1 * u2 == _I(2, 1, 1, 0, 0) + _I(2, 0, 0, 1, 0)
    assert u2 * u1 == _I(2, 1, 1, 0, 0) + _I(2, 0, 0, 0, 1)


def test_single_vertex_products_count_multiplicity():
    assert _I(1, 2) * _I(1, 1) == 3 * _I(1, 3)
    assert _I(1, 1) * _I(1, 2) == 3 * _I(1, 3)
    assert _I(1, 1) * _I(1, 1) == 2 * _I(1, 2)


def test_one_is_the_unit():
    one = HallElement.one(3)
    f = _I(3, *([1] + [0] * 10 + [1]))
    assert one * f == f
    assert f * one == f


def test_products_are_graded():
    catalog = load_catalog(2)
    for a, b in itertools.product(_labels_up_to(2, 2), repeat=2):
        result = product(HallElement.basis(2, a), HallElement.basis(2, b))
        expected = tuple(
            x + y for x, y in zip(catalog.label_dimv(a), catalog.label_dimv(b))
        )
        assert all(catalog.label_dimv(c) == expected for c in result.terms)


@pytest.mark.parametrize("n", [2, 3])
def test_products_associate_on_small_grades(n):
    catalog = load_catalog(n)
    labels = list(_labels_up_to(n, 4))
    triples = [
        (a, b, c)
        for a, b, c in itertools.product(labels, repeat=3)
        if catalog.label_total(a) + catalog.label_total(b) + catalog.label_total(c) <= 4
    ]
    assert len(triples) > 100
    for a, b, c in triples:
        f, g, h = (HallElement.basis(n, lab) for lab in (a, b, c))
        assert (f * g) * h == f * (g * h), (a, b, c)


# -- coproduct and bialgebra ----------------------------------------------


def test_coproduct_of_counit_and_generators():
    one = HallElement.one(2)
    zero = load_catalog(2).zero_label()
    assert coproduct(one) == TensorElement(2, {(zero, zero): 1})
    u1 = HallElement.generator(2, 1)
    e1 = load_catalog(2).unit_label(1)
    assert coproduct(u1) == TensorElement(2, {(e1, zero): 1, (zero, e1): 1})


def test_coproduct_splits_all_sublabels():
    a = OrbitLabel((1, 1, 0, 0))
    e1, e2 = (load_catalog(2).unit_label(k) for k in (1, 2))
    zero = load_catalog(2).zero_label()
    assert coproduct(HallElement.basis(2, a)) == TensorElement(
        2, {(a, zero): 1, (zero, a): 1, (e1, e2): 1, (e2, e1): 1}
    )


def test_bialgebra_checks_pass_on_generator_pairs():
    pairs = [
        (HallElement.generator(2, i), HallElement.generator(2, j))
        for i in range(1, 5)
        for j in range(1, 5)
    ]
    pairs.append((HallElement.one(2), _I(2, 1, 1, 0, 0)))
    report = check_bialgebra(pairs)
    assert report.ok, str(report)


def test_bialgebra_check_reports_a_failure(monkeypatch):
    # the identity holds for every honest pair, so break the product
    import preproj.hall as hall_module

    u1, u2 = HallElement.generator(2, 1), HallElement.generator(2, 2)
    monkeypatch.setattr(
        hall_module, "product", lambda f, g: HallElement.generator(2, 3)
    )
    report = hall_module.check_bialgebra([(u1, u2)])
    assert not report.ok
    assert "compatibility" in report.checks[0].name
    assert "difference" in report.checks[0].detail


def test_tensor_multiply_is_componentwise():
    u1, u2 = HallElement.generator(1, 1), 2 * HallElement.generator(1, 1)
    t = tensor_multiply(coproduct(u1), coproduct(u2))
    assert t == coproduct(product(u1, u2))


def test_primitives_are_exactly_unit_combinations():
    for lab in _labels_up_to(2, 3):
        f = HallElement.basis(2, lab)
        assert is_primitive(f) == (lab.unit_index() is not None)
    mix = HallElement.generator(2, 3) - HallElement.generator(2, 4)
    assert is_primitive(mix)
    assert not is_primitive(mix + _I(2, 1, 1, 0, 0))


# -- triangular shape -----------------------------------------------------


def test_triangular_product_examples():
    assert check_triangular_product(OrbitLabel((1, 0, 0, 0)), 2, n=2).ok
    assert check_triangular_product(OrbitLabel((4,)), 1, n=1).ok


def test_last_generator_multiplies_cleanly():
    catalog = load_catalog(3)
    for a in _labels_up_to(3, 3):
        result = product(HallElement.basis(3, a), HallElement.generator(3, catalog.r))
        lead = a + catalog.unit_label(catalog.r)
        assert result == (a[catalog.r - 1] + 1) * HallElement.basis(3, lead)


@settings(deadline=None, max_examples=30)
@given(st.data())
def test_triangular_shape_holds_on_random_small_labels(data):
    n = data.draw(st.sampled_from([2, 3]))
    labels = list(_labels_up_to(n, 3))
    a = data.draw(st.sampled_from(labels))
    j = data.draw(st.integers(min_value=1, max_value=load_catalog(n).r))
    assert check_triangular_product(a, j, n=n).ok


# -- expression in generators ---------------------------------------------


def test_units_express_as_single_generators():
    for k in (1, 5, 12):
        expr = express_in_generators(load_catalog(3).unit_label(k), n=3)
        assert expr.terms == ((Fraction(1), (k,)),)


def test_thickened_vertex_needs_divided_powers():
    expr = express_in_generators(OrbitLabel((3,)), n=1)
    assert expr.terms == ((Fraction(1, 6), (1, 1, 1)),)


def test_two_vertex_expression_matches_hand_computation():
    expr = express_in_generators(OrbitLabel((1, 1, 0, 0)), n=2)
    assert dict((w, c) for c, w in expr.terms) == {
        (1, 2): Fraction(1),
        (3,): Fraction(-1),
    }


def test_expressions_evaluate_back_to_their_labels():
    for n, cap in ((1, 5), (2, 4)):
        for lab in _labels_up_to(n, cap):
            expr = express_in_generators(lab, n=n)
            assert expr.evaluate() == HallElement.basis(n, lab), lab
            words = [word for _, word in expr.terms]
            assert words == sorted(words), "term order is deterministic"

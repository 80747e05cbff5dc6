from hypothesis import given, settings

from conftest import elements
from qaffine.morphisms import delta_seed
from qaffine.pbw import Element, K, PBWMonomial, c_half, h, x, y
from qaffine.scalar import LaurentPoly, ScalarQ, q_int
from qaffine.tensor import Tensor3Element, TensorElement, tensor3_of, tensor_commutator, tensor_mul, tensor_of

ONE = Element.one()


def test_tensor_of_examples():
    t = tensor_of(x(0), K(1))
    assert len(t.terms) == 1
    assert str(t) == "x[0] (x) K"
    assert tensor_of(Element.zero(), x(3)).is_zero()
    assert tensor_of(x(0) + x(1), K(1)) == tensor_of(x(0), K(1)) + tensor_of(x(1), K(1))


def test_unit_and_factorwise_product():
    t = tensor_of(x(0), K(1))
    assert tensor_mul(TensorElement.one(), t) == t
    got = tensor_mul(t, tensor_of(ONE, x(0)))
    assert got == tensor_of(x(0), x(0) * K(1)).scale(ScalarQ(LaurentPoly.monomial(2)))


def test_tensor_commutator_examples():
    t = tensor_of(x(1), h(2)) + tensor_of(K(1), y(0))
    assert tensor_commutator(t, t).is_zero()
    got = tensor_commutator(tensor_of(ONE, h(1)), tensor_of(ONE, x(0)))
    assert got == tensor_of(ONE, c_half(-1) * x(1)).scale(q_int(2))


def test_commutator_of_seed_coproducts_matches_cartan_image():
    # [x_0, y_1] = c^{-1/2} K h_1, so the seeds must reproduce Delta of the right side
    lhs = tensor_commutator(delta_seed("x0"), delta_seed("y1"))
    rhs = delta_seed("c_minus_half") * delta_seed("K") * delta_seed("h1")
    assert lhs == rhs


def test_flip_is_involutive_and_antidiagonal():
    t = tensor_of(x(1), y(2) * K(1)) + tensor_of(h(1), c_half(3))
    assert t.flip().flip() == t
    assert t.flip() == tensor_of(y(2) * K(1), x(1)) + tensor_of(c_half(3), h(1))


def test_shift_central_per_factor():
    t = tensor_of(x(0), K(1))
    assert t.shift_central(2, -1) == tensor_of(c_half(2) * x(0), c_half(-1) * K(1))


def test_bigrading_per_factor():
    assert tensor_of(x(3), y(-1)).bigrading() == ((3, 2), (-1, -2))
    assert (tensor_of(x(0), ONE) + tensor_of(ONE, x(0))).bigrading() is None


@settings(max_examples=60, deadline=None)
@given(elements, elements, elements, elements)
def test_product_of_pure_tensors_is_factorwise(a, b, c, d):
    assert tensor_of(a, b) * tensor_of(c, d) == tensor_of(a * c, b * d)


@settings(max_examples=40, deadline=None)
@given(elements, elements, elements, elements, elements, elements)
def test_tensor_mul_associative(a, b, c, d, e, f):
    s, t, u = tensor_of(a, b), tensor_of(c, d) + tensor_of(e, ONE), tensor_of(f, a)
    assert (s * t) * u == s * (t * u)


@settings(max_examples=40, deadline=None)
@given(elements, elements, elements)
def test_triple_tensor_factorwise(a, b, c):
    t = tensor3_of(a, b, c)
    assert t * Tensor3Element.one() == t
    assert t * t == tensor3_of(a * a, b * b, c * c)


@settings(max_examples=60, deadline=None)
@given(elements, elements)
def test_json_round_trip(a, b):
    t = tensor_of(a, b) + tensor_of(b, ONE)
    assert TensorElement.from_json(t.to_json()) == t
    t3 = tensor3_of(a, b, a)
    assert Tensor3Element.from_json(t3.to_json()) == t3


def test_rejects_unordered_factor():
    import pytest

    with pytest.raises(ValueError):
        TensorElement({(PBWMonomial(0, 0, (2, 0)), PBWMonomial()): 1})

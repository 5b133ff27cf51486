from fractions import Fraction

import pytest

from icequiver.quiver import (
    Arrow,
    Element,
    IceQuiver,
    Potential,
    Quiver,
    QuiverError,
    canonical_cycle,
    cyclic_derivative,
    delta,
)


@pytest.fixture
def triangle():
    return Quiver(["1", "2", "3"], [Arrow("a", "1", "2"), Arrow("b", "2", "3"), Arrow("c", "3", "1")])


def test_composition_is_right_to_left(triangle):
    p = triangle.path("b", "a")  # a then b
    assert (p.source, p.target) == ("1", "3")
    with pytest.raises(QuiverError):
        triangle.path("a", "b")


def test_path_product_and_zero(triangle):
    b = triangle.path("b")
    a = triangle.path("a")
    assert (b * a).word == ("b", "a")
    assert a * b is None


def test_lazy_paths_are_units(triangle):
    x = Element.of(triangle.path("a"))
    assert Element.of(triangle.lazy("2")) * x == x
    assert x * Element.of(triangle.lazy("1")) == x
    assert not (Element.of(triangle.lazy("3")) * x)


def test_element_arithmetic_cancels(triangle):
    x = triangle.element("a")
    assert not (x - x)
    assert (x + x).coeff(triangle.path("a")) == 2


def test_potential_identifies_rotations(triangle):
    W = Potential(triangle, [(1, ("a", "c", "b")), (Fraction(1, 2), ("c", "b", "a"))])
    assert len(W.terms) == 1
    assert W.terms[0][0] == Fraction(3, 2)
    assert canonical_cycle(triangle, ("c", "b", "a")).word == ("a", "c", "b")


def test_potential_rejects_non_cycles(triangle):
    with pytest.raises(QuiverError):
        Potential(triangle, [(1, ("b", "a"))])


def test_cyclic_derivative(triangle):
    W = Potential(triangle, [(1, ("a", "c", "b"))])
    # d_a (a c b) = c b, which starts at 2 and ends at 1
    assert cyclic_derivative("a", W) == triangle.element("c", "b")
    assert cyclic_derivative("b", W) == triangle.element("a", "c")
    assert cyclic_derivative("c", W) == triangle.element("b", "a")


def test_cyclic_derivative_counts_repeats():
    q = Quiver(["1", "2"], [Arrow("x", "1", "2"), Arrow("y", "2", "1")])
    W = Potential(q, [(1, ("x", "y", "x", "y"))])
    assert cyclic_derivative("x", W) == q.element("y", "x", "y").scale(2)


def test_delta_lists_every_occurrence():
    q = Quiver(["1", "2"], [Arrow("x", "1", "2"), Arrow("y", "2", "1")])
    triples = delta(q, "x", q.element("x", "y", "x"))
    assert [(t.left.word, t.right.word) for t in triples] == [((), ("y", "x")), (("x", "y"), ())]


def test_ice_quiver_fullness(triangle):
    iq = IceQuiver(triangle, {"1", "2"}, {"a"})
    assert iq.is_full
    assert not IceQuiver(triangle, {"1", "2"}, set()).is_full
    assert [a.name for a in iq.unfrozen_arrows] == ["b", "c"]
    assert iq.unfrozen_vertices == ["3"]


def test_frozen_arrow_needs_frozen_endpoints(triangle):
    with pytest.raises(QuiverError):
        IceQuiver(triangle, {"1"}, {"a"})


def test_duplicate_arrow_names_rejected():
    with pytest.raises(QuiverError):
        Quiver(["1", "2"], [Arrow("a", "1", "2"), Arrow("a", "2", "1")])

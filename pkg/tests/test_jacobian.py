import pytest

from oracles import preprojective_dimension_a, quotient_dimension_by_span

from icequiver.algebra import AlgebraError
from icequiver.jacobian import (
    boundary_algebra,
    bound_quiver_algebra,
    brute_force_dimension,
    jacobian_relations,
    path_algebra,
    relative_jacobian,
)
from icequiver.quiver import Arrow, Quiver
from icequiver.repfin import dynkin_quiver, preprojective_classical
from icequiver.rewriting import JacobiFinite


def preprojective_relations(q):
    """Mesh relations on the double quiver, written out directly."""
    arrows = list(q.arrows) + [Arrow(a.name + "~", a.target, a.source) for a in q.arrows]
    dq = Quiver(q.labels, arrows)
    rels = []
    for v in q.labels:
        r = None
        for a in q.arrows:
            if a.source == v:
                term = -dq.element(a.name + "~", a.name)
            elif a.target == v:
                term = dq.element(a.name, a.name + "~")
            else:
                continue
            r = term if r is None else r + term
        if r is not None:
            rels.append(r)
    return dq, rels


@pytest.mark.parametrize("name,dim,labels", [
    ("example1", 6, ["e1", "e2", "e3", "b", "a", "ab"]),
    ("example2", 7, ["e1", "e2", "e3", "a'", "b'", "c'", "c'b'"]),
])
def test_jacobian_dimension_matches_span_oracle(name, dim, labels, request):
    iq, W = request.getfixturevalue(name)
    J, cert = relative_jacobian(iq, W)
    assert cert == JacobiFinite(dim)
    assert J.labels == labels
    total, per = quotient_dimension_by_span(iq.quiver, jacobian_relations(iq, W), 6)
    assert total == dim
    assert per[-1] == 0
    # enumerate up to the longest basis path + 2 as well as to length 6
    longest = max(p.length for p in J.words)
    assert brute_force_dimension(J, longest + 2) == dim
    assert brute_force_dimension(J, 6) == dim


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_preprojective_type_a_against_both_oracles(n):
    q = dynkin_quiver(f"A{n}")
    P = preprojective_classical(q)
    assert P.dim == preprojective_dimension_a(n)
    dq, rels = preprojective_relations(q)
    total, per = quotient_dimension_by_span(dq, rels, n + 1)
    assert total == P.dim and per[-1] == 0


def test_preprojective_d4_against_span_oracle():
    q = dynkin_quiver("D4")
    P = preprojective_classical(q)
    dq, rels = preprojective_relations(q)
    total, per = quotient_dimension_by_span(dq, rels, 6)
    assert per[-1] == 0
    assert P.dim == total == 28


def test_boundary_algebra_example2(example2):
    iq, W = example2
    J, _ = relative_jacobian(iq, W)
    B = boundary_algebra(J, iq.frozen_vertices)
    assert B.dim == 4
    assert sorted(B.labels) == sorted(["e1", "e2", "a'", "c'b'"])
    assert B.check_associativity() is None
    # c'b' a' = 0 and a' c'b' = 0 in J
    i, j = B.index("a'"), B.index("c'b'")
    assert not B.mul_basis(i, j) and not B.mul_basis(j, i)


def test_boundary_algebra_endpoint_filter(example1):
    iq, W = example1
    J, _ = relative_jacobian(iq, W)
    B = boundary_algebra(J, {"1", "2"})
    want = [J.labels[i] for i in range(J.dim) if J.sources[i] in "12" and J.targets[i] in "12"]
    assert sorted(B.labels) == sorted(want) == ["a", "e1", "e2"]


def test_boundary_algebra_errors(example2):
    J, _ = relative_jacobian(*example2)
    with pytest.raises(AlgebraError):
        boundary_algebra(J, set())
    with pytest.raises(AlgebraError):
        boundary_algebra(J, {"9"})


def test_associativity_exhaustive(example1, example2):
    for iq, W in (example1, example2):
        J, _ = relative_jacobian(iq, W)
        assert J.check_associativity() is None
    for n in (2, 3):
        assert preprojective_classical(dynkin_quiver(f"A{n}")).check_associativity() is None


def test_path_algebra_of_acyclic_quiver():
    q = dynkin_quiver("A3")
    A, cert = path_algebra(q)
    assert cert == JacobiFinite(6)
    assert A.nilpotency_index() == 3


def test_order_does_not_change_the_algebra(example2):
    iq, W = example2
    J1, _ = relative_jacobian(iq, W)
    J2, _ = relative_jacobian(iq, W, precedence=["c'", "b'", "a'"])
    assert J1.dim == J2.dim
    from icequiver.algebra import find_isomorphism

    assert find_isomorphism(J1, J2, {v: v for v in J1.vertices}) is not None


def test_bound_quiver_algebra_generators(example2):
    J, _ = relative_jacobian(*example2)
    assert sorted(J.labels[i] for i in J.generators()) == ["a'", "b'", "c'"]
    # a relation making a' redundant still gives a consistent algebra
    q = J.quiver
    A, cert, _ = bound_quiver_algebra(q, [q.element("c'", "b'"), q.element("b'", "a'"), q.element("a'", "c'")])
    assert cert == JacobiFinite(6)

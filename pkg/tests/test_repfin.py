import itertools

import pytest

from oracles import positive_roots, preprojective_dimension_a

from icequiver.jacobian import path_algebra, relative_jacobian
from icequiver.modules import (
    ext_dim,
    global_dimension,
    hom_basis,
    hom_dim,
    identity,
    injective_dimension,
    is_indecomposable,
    simple,
)
from icequiver.quiver import Arrow, Quiver
from icequiver.repfin import (
    RepFinError,
    auslander_algebra,
    check_rigidity,
    cluster_tilting_module,
    dynkin_quiver,
    dynkin_type,
    endomorphism_algebra,
    extract_h0_algebra,
    higher_end_algebra,
    higher_preprojective,
    indecomposables_dynkin,
    isomorphic,
    preprojective_classical,
    self_injectivity,
    stable_auslander,
    tau_n_inverse,
    tau_n_inverse_morphism,
    tau_orbits,
)


@pytest.fixture(scope="module")
def a2_higher():
    q = dynkin_quiver("A2")
    H = higher_end_algebra(q)
    A, e = extract_h0_algebra(H)
    return q, H, A, e


def test_dynkin_recognition():
    for name in ("A1", "A4", "D4", "D5", "E6", "E7", "E8"):
        assert dynkin_type(dynkin_quiver(name)) == name
    # orientation does not matter
    q = Quiver(["1", "2", "3", "4"], [Arrow("x", "2", "1"), Arrow("y", "2", "3"), Arrow("z", "4", "2")])
    assert dynkin_type(q) == "D4"
    cycle = Quiver(["1", "2", "3"], [Arrow("a", "1", "2"), Arrow("b", "2", "3"), Arrow("c", "3", "1")])
    assert dynkin_type(cycle) is None
    star5 = Quiver([str(i) for i in range(5)], [Arrow(f"a{i}", "0", str(i)) for i in range(1, 5)])
    assert dynkin_type(star5) is None
    # T(2,3,6) is affine E8-like, not Dynkin
    e9 = Quiver([str(i) for i in range(1, 10)], [Arrow(f"a{i}", str(i), str(i + 1)) for i in range(1, 8)] + [Arrow("b", "3", "9")])
    assert dynkin_type(e9) is None


def test_unknown_types_rejected():
    for bad in ("A0", "D3", "E9", "F4", "X"):
        with pytest.raises(RepFinError):
            dynkin_quiver(bad)
    cycle = Quiver(["1", "2", "3"], [Arrow("a", "1", "2"), Arrow("b", "2", "3"), Arrow("c", "3", "1")])
    with pytest.raises(RepFinError):
        auslander_algebra(cycle)


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4", "D4"])
def test_indecomposables_match_positive_roots(name):
    q = dynkin_quiver(name)
    ind = indecomposables_dynkin(q)
    assert len(ind) == positive_roots(name[0], int(name[1:]))
    for obj in ind:
        assert obj.module.check()
        assert is_indecomposable(obj.module)
    assert len({o.module.dimension_vector() for o in ind}) == len(ind)


def test_type_a_dimension_vectors_are_intervals():
    n = 4
    ind = indecomposables_dynkin(dynkin_quiver(f"A{n}"))
    intervals = {tuple(1 if i <= k <= j else 0 for k in range(n)) for i in range(n) for j in range(i, n)}
    assert {o.module.dimension_vector() for o in ind} == intervals


def test_tau_inverse_on_kA2():
    A, _ = path_algebra(dynkin_quiver("A2"))
    objs = tau_orbits(A)
    labels = {o.label: o.module.dimension_vector() for o in objs}
    assert labels == {"1.0": (1, 0), "1.1": (0, 1), "2.0": (1, 1)}


@pytest.mark.parametrize("name", ["A3", "D4"])
def test_tau_inverse_vanishes_exactly_on_injectives(name):
    for obj in indecomposables_dynkin(dynkin_quiver(name)):
        killed = tau_n_inverse(obj.module).result.is_zero()
        assert killed == (injective_dimension(obj.module, 0) == 0)


def test_tau_inverse_is_a_functor():
    A, _ = path_algebra(dynkin_quiver("A3"))
    objs = [o for o in tau_orbits(A) if not o.tau.result.is_zero()]
    for X in objs:
        idX = tau_n_inverse_morphism(identity(X.module), 1, X.tau, X.tau)
        assert idX.is_iso() and (idX.matrix() == identity(X.tau.result).matrix()).all()
    for X, Y, Z in itertools.product(objs, repeat=3):
        for f in hom_basis(X.module, Y.module):
            for g in hom_basis(Y.module, Z.module):
                lhs = tau_n_inverse_morphism(g @ f, 1, X.tau, Z.tau)
                rhs = tau_n_inverse_morphism(g, 1, Y.tau, Z.tau) @ tau_n_inverse_morphism(f, 1, X.tau, Y.tau)
                assert ((lhs.matrix() - rhs.matrix()) == 0).all()


def test_tau_inverse_rejects_long_resolutions(example2):
    J, _ = relative_jacobian(*example2)
    S3 = simple(J, "3")
    assert injective_dimension(S3, 5) == 3
    with pytest.raises(RepFinError):
        tau_n_inverse(S3, 1)
    assert tau_n_inverse(S3, 3).result is not None
    assert tau_n_inverse(simple(J, "2"), 2).result.is_zero()


def test_auslander_algebras():
    A2 = auslander_algebra(dynkin_quiver("A2"))
    assert A2.dim == 5 and global_dimension(A2, 6) == 2
    assert not self_injectivity(A2)
    q = dynkin_quiver("A3")
    A3 = auslander_algebra(q)
    ind = indecomposables_dynkin(q)
    assert A3.dim == sum(hom_dim(X.module, Y.module) for X in ind for Y in ind) == 15
    assert global_dimension(A3, 6) <= 2
    assert A3.check_associativity() is None


def test_stable_auslander_algebras():
    assert stable_auslander(dynkin_quiver("A2")).dim == 1
    # the stable Auslander algebra of A3 is the Auslander algebra of A2
    assert isomorphic(stable_auslander(dynkin_quiver("A3")), auslander_algebra(dynkin_quiver("A2")))


def test_h0_algebra(a2_higher):
    q, H, A, e = a2_higher
    assert A.dim == 7
    assert H.grade_dims() == {0: 5, 1: 2}
    assert sorted(e) == ["1.0", "2.0"]
    assert global_dimension(A, 6) == 3
    assert A.check_associativity() is None


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "D4"])
def test_preprojective_two_ways(name):
    q = dynkin_quiver(name)
    P1 = preprojective_classical(q)
    P2 = higher_preprojective(q)
    assert P1.dim == P2.dim
    if name[0] == "A":
        assert P1.dim == preprojective_dimension_a(int(name[1:]))
    assert isomorphic(P1, P2, {v: v for v in P1.vertices})


def test_higher_n_is_not_supported():
    with pytest.raises(NotImplementedError):
        higher_end_algebra(dynkin_quiver("A2"), n=2)


def test_cluster_tilting_module(a2_higher):
    q, H, A, e = a2_higher
    T = cluster_tilting_module(A, e)
    assert T.module.check()
    assert T.module.dim == 5
    assert isomorphic(T.boundary, preprojective_classical(q))
    assert sorted(S.dimension_vector() for _, S in T.summands) == [(0, 1), (1, 1), (1, 1)]
    assert all(is_indecomposable(S) for _, S in T.summands)
    assert check_rigidity(T.module, 2, 4)
    # Ext^2 does not vanish, so rigidity is only asked below degree n
    assert ext_dim(T.module, T.module, 2) == 1
    E = endomorphism_algebra(T.summands)
    assert E.dim == 7
    assert isomorphic(E, A, {v: v for v in A.vertices})

import copy
import json
from fractions import Fraction

import numpy as np

from icequiver import linalg
from icequiver.algebra import find_isomorphism, is_isomorphism, trace_radical
from icequiver.jacobian import bound_quiver_algebra, path_algebra, relative_jacobian
from icequiver.quiver import Arrow, Quiver
from icequiver.repfin import dynkin_quiver, preprojective_classical


def test_radical_and_generators(example2):
    J, _ = relative_jacobian(*example2)
    assert sorted(J.labels[i] for i in J.radical()) == ["a'", "b'", "c'", "c'b'"]
    assert sorted(J.labels[i] for i in J.generators()) == ["a'", "b'", "c'"]
    assert J.nilpotency_index() == 3
    assert J.check_idempotents() and J.check_homogeneous() and J.is_radical_nilpotent()


def test_trace_radical_matches_path_radical():
    # regular representation of kA3: the radical is spanned by the arrows and paths
    A, _ = path_algebra(dynkin_quiver("A3"))
    mats = []
    for i in range(A.dim):
        m = linalg.zeros(A.dim, A.dim)
        for j in range(A.dim):
            for k, c in A.mul_basis(i, j).items():
                m[k, j] = c
        mats.append(m)
    rad = trace_radical(mats)
    assert rad.shape[1] == len(A.radical())
    for c in range(rad.shape[1]):
        support = {i for i in range(A.dim) if rad[i, c] != 0}
        assert support <= set(A.radical())


def test_associativity_failure_is_detected(example2):
    J, _ = relative_jacobian(*example2)
    bad = copy.deepcopy(J)
    i, j = bad.index("c'"), bad.index("b'")
    bad.table[(i, j)] = {i: Fraction(1)}
    assert bad.check_associativity() is not None


def test_corner_and_quotient(example2):
    J, _ = relative_jacobian(*example2)
    C = J.corner({"3"})
    assert C.labels == ["e3"]
    Q = J.quotient([J.unit("3")])
    assert Q.vertices == ["1", "2"]
    assert sorted(Q.labels) == ["a'", "e1", "e2"]
    assert Q.check_associativity() is None


def test_opposite_is_associative(example2):
    J, _ = relative_jacobian(*example2)
    op = J.opposite()
    assert op.check_associativity() is None
    i, j = J.index("c'"), J.index("b'")
    assert op.mul_basis(j, i) == J.mul_basis(i, j)


def test_dump_is_stable_json(example2):
    J1, _ = relative_jacobian(*example2)
    J2, _ = relative_jacobian(*example2)
    a = json.dumps(J1.dump())
    assert a == json.dumps(J2.dump())
    d = J1.dump()
    assert d["dimension"] == 7 and d["idempotents"] == {"1": 0, "2": 1, "3": 2}
    assert [J1.index("c'"), J1.index("b'"), J1.index("c'b'"), "1"] in d["structure_constants"]


def test_isomorphism_search():
    q = dynkin_quiver("A2")
    P = preprojective_classical(q)
    assert find_isomorphism(P, P) is not None
    kron = Quiver(["1", "2"], [Arrow("x", "1", "2"), Arrow("y", "1", "2")])
    K, _ = path_algebra(kron)
    assert K.dim == P.dim == 4
    assert find_isomorphism(K, P) is None
    # a rescaled copy: the relation x y = y x with a sign change
    two = Quiver(["1", "2"], [Arrow("x", "1", "2"), Arrow("y", "2", "1")])
    A, _, _ = bound_quiver_algebra(two, [two.element("x", "y"), two.element("y", "x")])
    phi = find_isomorphism(A, P)
    assert phi is not None and is_isomorphism(phi, A, P)


def test_is_isomorphism_rejects_non_multiplicative(example2):
    J, _ = relative_jacobian(*example2)
    phi = linalg.eye(J.dim)
    assert is_isomorphism(phi, J, J)
    # scaling c' alone would have to scale c'b' too
    bad = phi.copy()
    bad[J.index("c'"), J.index("c'")] = Fraction(2)
    assert not is_isomorphism(bad, J, J)
    bad[J.index("c'b'"), J.index("c'b'")] = Fraction(2)
    assert is_isomorphism(bad, J, J)
    assert not is_isomorphism(np.zeros_like(phi), J, J)

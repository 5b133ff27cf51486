"""Frozen Jacobian algebras and other bound quiver algebras."""

from .algebra import AlgebraError, FinDimAlgebra
from .quiver import Element, IceQuiver, Potential, Quiver, QuiverError, cyclic_derivative
from .rewriting import JacobiFinite, PathOrder, complete_rewriting, quotient_basis


def jacobian_relations(iq: IceQuiver, W: Potential):
    """``d_a W`` for every unfrozen arrow ``a``, dropping zeros."""
    rels = [cyclic_derivative(a.name, W) for a in iq.unfrozen_arrows]
    return [r for r in rels if r]


def bound_quiver_algebra(q: Quiver, relations, D=None, precedence=None, name=""):
    """``kQ / (relations)`` via completion; returns ``(algebra, certificate, system)``."""
    order = PathOrder(q, precedence)
    R = complete_rewriting(relations, order, D)
    A, cert = quotient_basis(R, name=name)
    return A, cert, R


def relative_jacobian(iq: IceQuiver, W: Potential, D=None, precedence=None):
    """``J(Q, F, W) = kQ / <d_a W : a unfrozen>`` with a finiteness certificate."""
    if iq.quiver.has_loops():
        raise QuiverError("ice quivers with potential must not have loops")
    A, cert, _ = bound_quiver_algebra(
        iq.quiver, jacobian_relations(iq, W), D, precedence, name="J"
    )
    return A, cert


def is_jacobi_finite(cert):
    return isinstance(cert, JacobiFinite)


def boundary_algebra(J: FinDimAlgebra, frozen):
    """The corner ``eJe`` for ``e`` the sum of the idempotents at ``frozen``."""
    frozen = set(frozen)
    if not frozen:
        raise AlgebraError("empty frozen set: the boundary algebra would be zero")
    unknown = frozen - set(J.vertices)
    if unknown:
        raise AlgebraError(f"unknown vertices {sorted(unknown)}")
    return J.corner(frozen, name="eJe")


def brute_force_dimension(A: FinDimAlgebra, max_length):
    """Reduce every path up to ``max_length`` and count the independent normal forms.

    Used as a consistency check on ``quotient_basis``: once ``max_length``
    exceeds the longest basis path, the count must equal ``A.dim``.
    """
    from . import linalg
    from .rewriting import element_to_vector

    q = A.quiver
    vecs = []
    for n in range(max_length + 1):
        for p in q.paths_of_length(n):
            v = element_to_vector(A, Element.of(p))
            if v:
                vecs.append(A.vector(v))
    if not vecs:
        return 0
    return linalg.rank(linalg.hstack(vecs, A.dim))


def path_algebra(q: Quiver, D=None):
    A, cert, _ = bound_quiver_algebra(q, [], D, name="kQ")
    return A, cert


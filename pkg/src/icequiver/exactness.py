"""Per-vertex complexes of projective modules over the frozen Jacobian algebra,
and the degree-0 concentration test built from their exactness.

At an unfrozen vertex ``v`` the complex is::

    0 -> e_v J -(b)-> (+)_{s(b)=v} e_{t(b)} J -(a^-1 d_b W)-> (+)_{t(a)=v} e_{s(a)} J -(a)-> e_v J -> S_v -> 0

and at a frozen vertex the first term is dropped and ``b`` only runs over
unfrozen arrows.  Maps are matrices of algebra elements acting by left
multiplication on column vectors; the last map is the projection onto the
coefficient of ``e_v``.
"""

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import linalg
from .algebra import FinDimAlgebra
from .jacobian import relative_jacobian
from .modules import left_multiplication, projective_sum
from .quiver import Element, IceQuiver, Path, Potential, Quiver, cyclic_derivative, lazy
from .rewriting import JacobiFinite, element_to_vector

CONCENTRATED = "CONCENTRATED"
NOT_CONCENTRATED = "NOT_CONCENTRATED"
INAPPLICABLE = "INAPPLICABLE"


class ExactnessError(ValueError):
    pass


def a_inverse(q: Quiver, a: str, x: Element):
    """``a^-1 c = b`` when ``c = a b``, and 0 otherwise; extended linearly."""
    arrow = q.arrow(a)
    out = {}
    for p, c in x.items():
        if p.word and p.word[0] == a:
            rest = p.word[1:]
            r = Path(rest, p.source, arrow.source) if rest else lazy(arrow.source)
            out[r] = out.get(r, Fraction(0)) + c
    return Element(out)


@dataclass
class ModuleComplex:
    """Projective sums ``positions[k]`` (vertex lists) with element matrices between them.

    ``maps[k]`` goes from ``positions[k]`` to ``positions[k + 1]``; rows index
    the target summands and columns the source summands.  The last position
    maps onto ``S_vertex``.
    """

    algebra: FinDimAlgebra
    vertex: str
    frozen: bool
    positions: list
    maps: list
    labels: list = field(default_factory=list)

    def entry(self, k, row, col):
        return self.maps[k][row][col]


def _paths_vector(J, x: Element):
    return element_to_vector(J, x)


def _complex(J, iq, W, v, frozen):
    q = iq.quiver
    if frozen:
        bs = [b for b in iq.unfrozen_arrows if b.source == v]
    else:
        bs = [b for b in q.arrows if b.source == v]
    into = [a for a in q.arrows if a.target == v]
    mid = [[_paths_vector(J, a_inverse(q, a.name, cyclic_derivative(b.name, W))) for b in bs] for a in into]
    last = [[_paths_vector(J, q.element(a.name)) for a in into]]
    if frozen:
        positions = [[b.target for b in bs], [a.source for a in into], [v]]
        maps = [mid, last]
        labels = [[b.name for b in bs], [a.name for a in into], [v]]
    else:
        first = [[_paths_vector(J, q.element(b.name))] for b in bs]
        positions = [[v], [b.target for b in bs], [a.source for a in into], [v]]
        maps = [first, mid, last]
        labels = [[v], [b.name for b in bs], [a.name for a in into], [v]]
    return ModuleComplex(J, v, frozen, positions, maps, labels)


def unfrozen_simple_complex(J, iq: IceQuiver, W: Potential, v):
    if v in iq.frozen_vertices:
        raise ExactnessError(f"vertex {v} is frozen")
    return _complex(J, iq, W, v, False)


def frozen_simple_complex(J, iq: IceQuiver, W: Potential, v):
    if v not in iq.frozen_vertices:
        raise ExactnessError(f"vertex {v} is not frozen")
    return _complex(J, iq, W, v, True)


def simple_complex(J, iq, W, v):
    return _complex(J, iq, W, v, v in iq.frozen_vertices)


def _mul_matrices(A, X, Y):
    """Element-matrix product ``X Y`` (``Y`` applied first)."""
    out = []
    for row in X:
        new = []
        for k in range(len(Y[0]) if Y else 0):
            acc = {}
            for j, x in enumerate(row):
                y = Y[j][k]
                if x and y:
                    acc = A.add(acc, A.mul(x, y))
            new.append(acc)
        out.append(new)
    return out


def symbolic_zero_compositions(C: ModuleComplex):
    """Consecutive maps multiply to zero in the algebra (including the augmentation)."""
    A = C.algebra
    for k in range(len(C.maps) - 1):
        prod = _mul_matrices(A, C.maps[k + 1], C.maps[k])
        if any(x for row in prod for x in row):
            return False
    if C.maps:
        # augmentation: coefficient of e_v in the image of the last map
        unit = A.units[C.vertex]
        if any(x.get(unit, 0) for x in C.maps[-1][0]):
            return False
    return True


def realize_scalar(C: ModuleComplex):
    """Rational matrices of the complex, augmentation to ``S_v`` last."""
    A = C.algebra
    mods = [projective_sum(A, pos) for pos in C.positions]
    mats = []
    for k, X in enumerate(C.maps):
        mats.append(left_multiplication(mods[k], mods[k + 1], X).matrix())
    P0 = mods[-1]
    aug = linalg.zeros(1, P0.dim)
    unit = A.units[C.vertex]
    off = P0.offset(C.vertex)
    for n, (k, i) in enumerate(P0.coords[C.vertex]):
        if i == unit:
            aug[0, off + n] = Fraction(1)
    mats.append(aug)
    dims = [M.dim for M in mods] + [1]
    return dims, mats


@dataclass
class ExactnessReport:
    vertex: str
    frozen: bool
    position_dims: list
    homology_dims: list
    ranks: list
    exact: bool
    scalar_zero: bool
    symbolic_zero: bool
    witness: list = field(default_factory=list)

    def to_dict(self):
        return {
            "vertex": self.vertex,
            "frozen": self.frozen,
            "position_dims": self.position_dims,
            "homology_dims": self.homology_dims,
            "exact": self.exact,
        }


def check_exactness(C: ModuleComplex):
    dims, mats = realize_scalar(C)
    ranks = [linalg.rank(m) for m in mats]
    scalar_zero = all(
        linalg.is_zero(mats[k + 1] @ mats[k]) for k in range(len(mats) - 1)
    )
    homology = []
    witness = []
    for k, n in enumerate(dims):
        out_rank = ranks[k] if k < len(mats) else 0
        in_rank = ranks[k - 1] if k > 0 else 0
        h = n - out_rank - in_rank
        homology.append(h)
        if h:
            # a kernel vector outside the incoming image
            ker = linalg.nullspace(mats[k]) if k < len(mats) else linalg.eye(n)
            img = mats[k - 1] if k > 0 else linalg.zeros(n, 0)
            base = linalg.column_basis(img)
            for c in range(ker.shape[1]):
                col = ker[:, [c]]
                if linalg.rank(np.concatenate([base, col], axis=1)) > base.shape[1]:
                    witness.append((k, [linalg.fmt(x) for x in col[:, 0]]))
                    break
    return ExactnessReport(
        C.vertex,
        C.frozen,
        dims,
        homology,
        ranks,
        all(h == 0 for h in homology),
        scalar_zero,
        symbolic_zero_compositions(C),
        witness,
    )


@dataclass
class Verdict:
    status: str
    reports: list
    witness: str = None
    reason: str = ""
    certificate: object = None
    algebra: FinDimAlgebra = None

    def to_dict(self):
        out = {"verdict": self.status}
        if self.witness is not None:
            out["witness_vertex"] = self.witness
        if self.reason:
            out["reason"] = self.reason
        out["certificate"] = str(self.certificate) if self.certificate is not None else None
        out["vertices"] = [r.to_dict() for r in self.reports]
        return out


def degree0_verdict(iq: IceQuiver, W: Potential, D=None, precedence=None):
    """Exactness test for concentration in degree 0.

    Needs the frozen subquiver to be full and the Jacobian algebra to be
    certified finite-dimensional; otherwise the verdict is ``INAPPLICABLE``.
    """
    if not iq.is_full:
        return Verdict(INAPPLICABLE, [], reason="hypotheses: frozen subquiver is not full")
    J, cert = relative_jacobian(iq, W, D, precedence)
    if not isinstance(cert, JacobiFinite):
        return Verdict(INAPPLICABLE, [], reason="hypotheses: Jacobian algebra not certified finite", certificate=cert)
    reports = []
    for v in iq.quiver.labels:
        rep = check_exactness(simple_complex(J, iq, W, v))
        if not (rep.scalar_zero and rep.symbolic_zero):
            raise ExactnessError(f"complex at vertex {v} is not a complex")
        reports.append(rep)
    bad = [r.vertex for r in reports if not r.exact]
    if bad:
        return Verdict(NOT_CONCENTRATED, reports, witness=bad[0], certificate=cert, algebra=J)
    return Verdict(CONCENTRATED, reports, certificate=cert, algebra=J)

"""Right modules over finite-dimensional basic algebras.

A module ``M`` is stored vertex by vertex: ``M_v = M e_v`` has dimension
``dims[v]``, and a basis element ``b = e_t b e_s`` of the algebra acts by a
matrix ``M_t -> M_s`` (column vectors), so ``m (b b') = (m b) b'``.  For a
path algebra this means an arrow ``a: u -> v`` acts ``M_v -> M_u``.

Morphisms are stored as one matrix per vertex.
"""

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import linalg
from .algebra import FinDimAlgebra, trace_radical


class ModuleError(ValueError):
    pass


class Module:
    def __init__(self, algebra: FinDimAlgebra, dims, act, name=""):
        self.algebra = algebra
        self.dims = {v: int(dims.get(v, 0)) for v in algebra.vertices}
        self.act = {}
        for i in algebra.radical():
            s, t = algebra.sources[i], algebra.targets[i]
            m = act.get(i)
            shape = (self.dims[s], self.dims[t])
            if m is None:
                m = linalg.zeros(*shape)
            if m.shape != shape:
                raise ModuleError(f"action of {algebra.labels[i]} has shape {m.shape}, expected {shape}")
            self.act[i] = m
        self.name = name

    @property
    def dim(self):
        return sum(self.dims.values())

    def dimension_vector(self):
        return tuple(self.dims[v] for v in self.algebra.vertices)

    def is_zero(self):
        return self.dim == 0

    def offset(self, v):
        out = 0
        for w in self.algebra.vertices:
            if w == v:
                return out
            out += self.dims[w]
        raise KeyError(v)

    def action(self, i):
        """Matrix of basis element ``i`` as a map ``M_target -> M_source``."""
        A = self.algebra
        if i in self.act:
            return self.act[i]
        v = A.sources[i]
        return linalg.eye(self.dims[v])

    def element_action(self, x, t, s):
        """Matrix ``M_t -> M_s`` of a homogeneous element ``x in e_t A e_s``."""
        out = linalg.zeros(self.dims[s], self.dims[t])
        for i, c in x.items():
            out = out + self.action(i) * c
        return out

    def check(self):
        """Every product of basis elements acts as the composite of the actions."""
        A = self.algebra
        for i in range(A.dim):
            for j in range(A.dim):
                if A.sources[i] != A.targets[j]:
                    continue
                lhs = self.element_action(A.mul_basis(i, j), A.targets[i], A.sources[j])
                rhs = self.action(j) @ self.action(i)
                if not np.array_equal(lhs, rhs):
                    return False
        return True

    def arrow_matrices(self):
        """Matrices of the generators of the algebra (the arrows for a path algebra)."""
        return {self.algebra.labels[i]: self.act[i] for i in self.algebra.generators()}

    def to_dict(self):
        A = self.algebra
        return {
            "dimension_vector": list(self.dimension_vector()),
            "matrices": {
                A.labels[i]: [[linalg.fmt(x) for x in row] for row in self.act[i].tolist()]
                for i in A.generators()
            },
        }

    def __repr__(self):
        return f"Module({self.name or '?'}, dims={self.dimension_vector()})"


@dataclass
class Morphism:
    src: Module
    dst: Module
    blocks: dict = field(default_factory=dict)

    def __post_init__(self):
        for v in self.src.algebra.vertices:
            shape = (self.dst.dims[v], self.src.dims[v])
            b = self.blocks.get(v)
            if b is None:
                b = linalg.zeros(*shape)
            if b.shape != shape:
                raise ModuleError(f"morphism block at {v} has shape {b.shape}, expected {shape}")
            self.blocks[v] = b

    def __matmul__(self, other):
        """Composition ``self o other``."""
        if other.dst is not self.src and other.dst.dims != self.src.dims:
            raise ModuleError("morphisms are not composable")
        return Morphism(other.src, self.dst, {v: self.blocks[v] @ other.blocks[v] for v in self.blocks})

    def __add__(self, other):
        return Morphism(self.src, self.dst, {v: self.blocks[v] + other.blocks[v] for v in self.blocks})

    def scale(self, c):
        return Morphism(self.src, self.dst, {v: self.blocks[v] * Fraction(c) for v in self.blocks})

    def is_zero(self):
        return all(linalg.is_zero(b) for b in self.blocks.values())

    def rank(self):
        return sum(linalg.rank(b) for b in self.blocks.values())

    def is_iso(self):
        return self.src.dim == self.dst.dim == self.rank()

    def is_module_map(self):
        A = self.src.algebra
        for i in A.radical():
            s, t = A.sources[i], A.targets[i]
            if not np.array_equal(self.blocks[s] @ self.src.action(i), self.dst.action(i) @ self.blocks[t]):
                return False
        return True

    def matrix(self):
        """Block-diagonal matrix on the total spaces."""
        out = linalg.zeros(self.dst.dim, self.src.dim)
        for v, b in self.blocks.items():
            r, c = self.dst.offset(v), self.src.offset(v)
            out[r:r + b.shape[0], c:c + b.shape[1]] = b
        return out

    def vector(self):
        return np.concatenate([self.blocks[v].reshape(-1) for v in self.src.algebra.vertices]) if self.blocks else linalg.zeros(0, 1)[:, 0]


def identity(M: Module):
    return Morphism(M, M, {v: linalg.eye(M.dims[v]) for v in M.algebra.vertices})


def zero_map(M: Module, N: Module):
    return Morphism(M, N, {})


def zero_module(A: FinDimAlgebra):
    return Module(A, {}, {}, name="0")


# ---- standard modules ------------------------------------------------------


def simple(A: FinDimAlgebra, v):
    return Module(A, {v: 1}, {}, name=f"S{v}")


def projective_sum(A: FinDimAlgebra, vertices, name=None):
    """``(+)_k e_{v_k} A``; component ``u`` lists ``e_{v_k} A e_u`` summand by summand."""
    vertices = list(vertices)
    comps = {u: [(k, i) for k, v in enumerate(vertices) for i in A.block(v, u)] for u in A.vertices}
    pos = {u: {key: n for n, key in enumerate(comps[u])} for u in A.vertices}
    act = {}
    for b in A.radical():
        s, t = A.sources[b], A.targets[b]
        m = linalg.zeros(len(comps[s]), len(comps[t]))
        for col, (k, p) in enumerate(comps[t]):
            for r, c in A.mul_basis(p, b).items():
                m[pos[s][(k, r)], col] = c
        act[b] = m
    M = Module(A, {u: len(comps[u]) for u in A.vertices}, act, name=name or "P(" + ",".join(vertices) + ")")
    M.summands = vertices
    M.kind = "projective"
    M.coords = comps
    return M


def projective(A: FinDimAlgebra, v):
    return projective_sum(A, [v], name=f"P{v}")


def injective_sum(A: FinDimAlgebra, vertices, name=None):
    """``(+)_k D(A e_{v_k})``; component ``u`` is dual to ``e_u A e_{v_k}``."""
    vertices = list(vertices)
    comps = {u: [(k, i) for k, v in enumerate(vertices) for i in A.block(u, v)] for u in A.vertices}
    pos = {u: {key: n for n, key in enumerate(comps[u])} for u in A.vertices}
    act = {}
    for b in A.radical():
        s, t = A.sources[b], A.targets[b]
        m = linalg.zeros(len(comps[s]), len(comps[t]))
        # (phi . b)(x) = phi(b x) for x in e_s A e_v
        for row, (k, x) in enumerate(comps[s]):
            for j, c in A.mul_basis(b, x).items():
                m[row, pos[t][(k, j)]] = c
        act[b] = m
    M = Module(A, {u: len(comps[u]) for u in A.vertices}, act, name=name or "I(" + ",".join(vertices) + ")")
    M.summands = vertices
    M.kind = "injective"
    M.coords = comps
    return M


def injective(A: FinDimAlgebra, v):
    return injective_sum(A, [v], name=f"I{v}")


def regular(A: FinDimAlgebra):
    return projective_sum(A, A.vertices, name="A")


def direct_sum(modules, name=""):
    """Direct sum with the list of inclusions and projections."""
    A = modules[0].algebra
    dims = {v: sum(M.dims[v] for M in modules) for v in A.vertices}
    act = {}
    for b in A.radical():
        s, t = A.sources[b], A.targets[b]
        m = linalg.zeros(dims[s], dims[t])
        r = c = 0
        for M in modules:
            blk = M.action(b)
            m[r:r + blk.shape[0], c:c + blk.shape[1]] = blk
            r += blk.shape[0]
            c += blk.shape[1]
        act[b] = m
    S = Module(A, dims, act, name=name or " + ".join(M.name for M in modules))
    incl, proj = [], []
    off = {v: 0 for v in A.vertices}
    for M in modules:
        ib, pb = {}, {}
        for v in A.vertices:
            e = linalg.zeros(dims[v], M.dims[v])
            for k in range(M.dims[v]):
                e[off[v] + k, k] = Fraction(1)
            ib[v] = e
            pb[v] = e.T.copy()
            off[v] += M.dims[v]
        incl.append(Morphism(M, S, ib))
        proj.append(Morphism(S, M, pb))
    return S, incl, proj


# ---- sub and quotient modules ---------------------------------------------


def submodule(M: Module, spaces, name=""):
    """Submodule with per-vertex basis columns ``spaces[v]``; returns ``(S, inclusion)``."""
    A = M.algebra
    bases = {v: spaces.get(v, linalg.zeros(M.dims[v], 0)) for v in A.vertices}
    act = {}
    for b in A.radical():
        s, t = A.sources[b], A.targets[b]
        if bases[t].shape[1] == 0 or bases[s].shape[1] == 0:
            continue
        img = M.action(b) @ bases[t]
        coords = linalg.solve(bases[s], img)
        if coords is None:
            raise ModuleError("subspace is not a submodule")
        act[b] = coords
    S = Module(A, {v: bases[v].shape[1] for v in A.vertices}, act, name=name)
    return S, Morphism(S, M, {v: bases[v] for v in A.vertices})


def quotient(M: Module, spaces, name=""):
    """``M / U`` for ``U`` given by per-vertex spanning columns; returns ``(Q, projection, section)``.

    The quotient basis is the set of standard vectors completing ``U``; the
    section sends them back to ``M``.
    """
    A = M.algebra
    proj_blocks, sec_blocks, dims = {}, {}, {}
    for v in A.vertices:
        n = M.dims[v]
        U = spaces.get(v, linalg.zeros(n, 0))
        U = linalg.column_basis(U) if U.shape[1] else U
        chosen = linalg.complement_basis(U, n)
        E = linalg.zeros(n, len(chosen))
        for k, c in enumerate(chosen):
            E[c, k] = Fraction(1)
        full = np.concatenate([E, U], axis=1) if U.shape[1] else E
        if n:
            coords = linalg.coordinates(full, linalg.eye(n))
            proj_blocks[v] = coords[: len(chosen), :]
        else:
            proj_blocks[v] = linalg.zeros(0, 0)
        sec_blocks[v] = E
        dims[v] = len(chosen)
    act = {}
    for b in A.radical():
        s, t = A.sources[b], A.targets[b]
        act[b] = proj_blocks[s] @ M.action(b) @ sec_blocks[t]
    Q = Module(A, dims, act, name=name)
    return Q, Morphism(M, Q, proj_blocks), Morphism(Q, M, sec_blocks)


def kernel(f: Morphism):
    return submodule(f.src, {v: linalg.nullspace(b) for v, b in f.blocks.items()})


def image_spaces(f: Morphism):
    return {v: linalg.column_basis(b) if b.shape[1] else b for v, b in f.blocks.items()}


def cokernel(f: Morphism):
    return quotient(f.dst, image_spaces(f))


def radical_spaces(M: Module):
    """``M rad`` per vertex."""
    A = M.algebra
    out = {}
    for v in A.vertices:
        cols = [M.action(b) for b in A.radical() if A.sources[b] == v and M.action(b).shape[1]]
        cols = [c for c in cols if c.shape[0]]
        out[v] = linalg.column_basis(linalg.hstack(cols, M.dims[v])) if cols else linalg.zeros(M.dims[v], 0)
    return out


def top_dims(M: Module):
    rad = radical_spaces(M)
    return {v: M.dims[v] - rad[v].shape[1] for v in M.algebra.vertices}


def socle_spaces(M: Module):
    A = M.algebra
    out = {}
    for v in A.vertices:
        rows = [M.action(b) for b in A.radical() if A.targets[b] == v and M.action(b).shape[0]]
        if rows and M.dims[v]:
            out[v] = linalg.nullspace(linalg.vstack(rows, M.dims[v]))
        else:
            out[v] = linalg.eye(M.dims[v])
    return out


# ---- Hom -----------------------------------------------------------------


def hom_basis(M: Module, N: Module):
    """Basis of ``Hom_A(M, N)``."""
    A = M.algebra
    offs, n = {}, 0
    for v in A.vertices:
        offs[v] = n
        n += N.dims[v] * M.dims[v]
    if n == 0:
        return []
    rows = []
    for b in A.generators():
        s, t = A.sources[b], A.targets[b]
        Ma, Na = M.action(b), N.action(b)
        # F_s Ma - Na F_t = 0, entries indexed by N_s x M_t
        for r in range(N.dims[s]):
            for c in range(M.dims[t]):
                row = [Fraction(0)] * n
                for k in range(M.dims[s]):
                    if Ma[k, c]:
                        row[offs[s] + r * M.dims[s] + k] += Ma[k, c]
                for k in range(N.dims[t]):
                    if Na[r, k]:
                        row[offs[t] + k * M.dims[t] + c] -= Na[r, k]
                if any(row):
                    rows.append(row)
    sol = linalg.nullspace(linalg.qmat(rows, n)) if rows else linalg.eye(n)
    out = []
    for j in range(sol.shape[1]):
        blocks = {}
        for v in A.vertices:
            size = N.dims[v] * M.dims[v]
            blocks[v] = sol[offs[v]:offs[v] + size, j].reshape(N.dims[v], M.dims[v]).copy()
        out.append(Morphism(M, N, blocks))
    return out


def hom_dim(M, N):
    return len(hom_basis(M, N))


def combine(basis, coeffs, M, N):
    out = zero_map(M, N)
    for f, c in zip(basis, coeffs):
        if c:
            out = out + f.scale(c)
    return out


def solve_in_span(basis, target: Morphism):
    """Coefficients ``c`` with ``sum c_k basis[k] = target`` (free ones zero), or ``None``."""
    if not basis:
        return [] if target.is_zero() else None
    mat = np.stack([f.vector() for f in basis], axis=1)
    rhs = target.vector().reshape(-1, 1)
    if mat.shape[0] == 0:
        return [Fraction(0)] * len(basis)
    x = linalg.solve(mat, rhs)
    return None if x is None else [x[k, 0] for k in range(len(basis))]


def endomorphism_radical_dim(M: Module):
    basis = hom_basis(M, M)
    mats = [f.matrix() for f in basis]
    return len(basis), trace_radical(mats).shape[1]


def is_indecomposable(M: Module):
    """``End(M)`` is local, i.e. ``End(M) / rad`` is one-dimensional."""
    if M.is_zero():
        return False
    total, rad = endomorphism_radical_dim(M)
    return total - rad == 1


# ---- projective resolutions -----------------------------------------------


def _generator_vectors(M: Module):
    """Top generators: per vertex, standard vectors completing ``M rad``."""
    rad = radical_spaces(M)
    gens = []
    for v in M.algebra.vertices:
        for c in linalg.complement_basis(rad[v], M.dims[v]):
            vec = linalg.zeros(M.dims[v], 1)
            vec[c, 0] = Fraction(1)
            gens.append((v, vec))
    return gens


def cover_from_generators(M: Module, gens):
    """The map ``(+) e_{v_k} A -> M`` sending ``e_{v_k}`` to the given vectors."""
    A = M.algebra
    P = projective_sum(A, [v for v, _ in gens])
    blocks = {}
    for u in A.vertices:
        cols = []
        for k, i in P.coords[u]:
            v, m = gens[k]
            if A.sources[i] == A.targets[i] and i == A.units[v]:
                cols.append(m)
            else:
                cols.append(M.action(i) @ m)
        blocks[u] = linalg.hstack(cols, M.dims[u]) if cols else linalg.zeros(M.dims[u], 0)
    return P, Morphism(P, M, blocks)


def projective_cover(M: Module):
    return cover_from_generators(M, _generator_vectors(M))


def decode_projective_vector(P: Module, u, vec):
    """Split a vector of ``P e_u`` into one algebra element per summand."""
    out = [dict() for _ in P.summands]
    for n, (k, i) in enumerate(P.coords[u]):
        c = vec[n]
        if c:
            out[k][i] = Fraction(c)
    return out


@dataclass
class ProjectiveResolution:
    """``... -> P_1 -> P_0 -> M``; ``maps[i]`` is ``P_{i+1} -> P_i`` as a matrix of algebra elements."""

    algebra: FinDimAlgebra
    terms: list
    maps: list
    finite: bool

    @property
    def length(self):
        return len(self.terms) - 1 if self.finite else None

    def multiplicities(self, i):
        out = {}
        for v in self.terms[i]:
            out[v] = out.get(v, 0) + 1
        return out


def minimal_projective_resolution(M: Module, L):
    """Minimal projective resolution computed up to ``P_L`` (further terms not built)."""
    A = M.algebra
    P, pi = projective_cover(M)
    terms, maps = [list(P.summands)], []
    K, incl = kernel(pi)
    while not K.is_zero():
        if len(terms) > L:
            return ProjectiveResolution(A, terms, maps, False)
        gens = _generator_vectors(K)
        Pn, piK = cover_from_generators(K, gens)
        d = incl @ piK
        # column k of the differential: image of e_{v_k}, split by summand of the previous term
        prev = incl.dst
        mat = [[dict() for _ in gens] for _ in prev.summands]
        for k, (v, m) in enumerate(gens):
            vec = (incl.blocks[v] @ m)[:, 0]
            for j, x in enumerate(decode_projective_vector(prev, v, vec)):
                mat[j][k] = x
        terms.append(list(Pn.summands))
        maps.append(mat)
        K, incl = kernel(d)
    return ProjectiveResolution(A, terms, maps, True)


def projective_dimension(M: Module, L):
    """``pd M`` if at most ``L``, else ``None``."""
    res = minimal_projective_resolution(M, L)
    return res.length


def global_dimension(A: FinDimAlgebra, L):
    """Maximum projective dimension of the simples, or ``None`` when some exceeds ``L``."""
    out = 0
    for v in A.vertices:
        d = projective_dimension(simple(A, v), L)
        if d is None:
            return None
        out = max(out, d)
    return out


def _hom_into(N: Module, rows_vertices, cols_vertices, mat):
    """Matrix of ``Hom(P_i, N) -> Hom(P_{i+1}, N)`` induced by an element matrix."""
    roff, coff = [0], [0]
    for v in cols_vertices:
        roff.append(roff[-1] + N.dims[v])
    for v in rows_vertices:
        coff.append(coff[-1] + N.dims[v])
    out = linalg.zeros(roff[-1], coff[-1])
    for j, w in enumerate(rows_vertices):
        for k, v in enumerate(cols_vertices):
            x = mat[j][k]
            if x:
                blk = N.element_action(x, w, v)
                out[roff[k]:roff[k + 1], coff[j]:coff[j + 1]] = blk
    return out


def ext_dim(M: Module, N: Module, i, res=None):
    """``dim Ext^i_A(M, N)``."""
    if res is None:
        res = minimal_projective_resolution(M, i + 1)
    if not res.finite and i >= len(res.maps):
        raise ModuleError(f"resolution truncated before degree {i + 1}; cannot compute Ext^{i}")
    if i >= len(res.terms):
        return 0
    dims = [sum(N.dims[v] for v in t) for t in res.terms]

    def delta(k):
        # Hom(P_k, N) -> Hom(P_{k+1}, N)
        if k < 0:
            return linalg.zeros(dims[0], 0)
        if k >= len(res.maps):
            return linalg.zeros(0, dims[k])
        return _hom_into(N, res.terms[k], res.terms[k + 1], res.maps[k])

    out_map = delta(i)
    ker = dims[i] - linalg.rank(out_map)
    if i == 0:
        return ker
    return ker - linalg.rank(delta(i - 1))


def is_gorenstein_projective(M: Module, L):
    """``Ext^i(M, A) = 0`` for ``1 <= i <= L``."""
    A = M.algebra
    res = minimal_projective_resolution(M, L + 1)
    R = regular(A)
    return all(ext_dim(M, R, i, res) == 0 for i in range(1, L + 1))


# ---- injective resolutions -------------------------------------------------


def injective_envelope(M: Module):
    """Embedding ``M -> (+) I_v`` that is an isomorphism on socles."""
    A = M.algebra
    soc = socle_spaces(M)
    pieces = []
    for v in A.vertices:
        S = soc[v]
        if S.shape[1] == 0:
            continue
        # functionals dual to the socle basis, extended by zero on a complement
        comp = linalg.complement_basis(S, M.dims[v])
        full = np.concatenate([S] + [linalg.eye(M.dims[v])[:, [c]] for c in comp], axis=1)
        inv = linalg.coordinates(full, linalg.eye(M.dims[v]))
        for k in range(S.shape[1]):
            pieces.append((v, inv[k:k + 1, :]))
    I = injective_sum(A, [v for v, _ in pieces])
    blocks = {}
    for u in A.vertices:
        rows = []
        for k, i in I.coords[u]:
            v, phi = pieces[k]
            if i == A.units[v] and u == v:
                rows.append(phi)
            else:
                rows.append(phi @ M.action(i))
        blocks[u] = linalg.vstack(rows, M.dims[u]) if rows else linalg.zeros(0, M.dims[u])
    return I, Morphism(M, I, blocks)


@dataclass
class InjectiveResolution:
    """``M -> I^0 -> I^1 -> ...`` with explicit module maps."""

    module: Module
    coaugmentation: Morphism
    terms: list
    maps: list
    finite: bool

    @property
    def length(self):
        return len(self.terms) - 1 if self.finite else None


def minimal_injective_resolution(M: Module, L):
    I, iota = injective_envelope(M)
    terms, maps = [I], []
    C, proj, _ = cokernel(iota)
    while not C.is_zero():
        if len(terms) > L:
            return InjectiveResolution(M, iota, terms, maps, False)
        J, j = injective_envelope(C)
        maps.append(j @ proj)
        terms.append(J)
        C, proj, _ = cokernel(maps[-1])
    return InjectiveResolution(M, iota, terms, maps, True)


def injective_dimension(M: Module, L):
    return minimal_injective_resolution(M, L).length


def injective_dimension_of_regular(A: FinDimAlgebra, L):
    return injective_dimension(regular(A), L)


def is_self_injective(A: FinDimAlgebra):
    return injective_dimension_of_regular(A, 0) == 0


# ---- Nakayama functor ------------------------------------------------------


def _nu_matrix(A, I_src, I_dst, k, j, x):
    """Blocks of ``nu(x): I_{v_k} -> I_{w_j}`` inside the sums, for ``x in e_w A e_v``."""
    blocks = {}
    for u in A.vertices:
        m = linalg.zeros(I_dst.dims[u], I_src.dims[u])
        cols = {i: n for n, (kk, i) in enumerate(I_src.coords[u]) if kk == k}
        for r, (jj, y) in enumerate(I_dst.coords[u]):
            if jj != j:
                continue
            for key, c in A.mul({y: Fraction(1)}, x).items():
                if key in cols:
                    m[r, cols[key]] = c
        blocks[u] = m
    return blocks


def nakayama_inverse(g: Morphism):
    """Element matrix ``X`` with ``nu(left multiplication by X) = g`` for ``g`` between injective sums."""
    I_src, I_dst = g.src, g.dst
    if getattr(I_src, "kind", None) != "injective" or getattr(I_dst, "kind", None) != "injective":
        raise ModuleError("nakayama_inverse needs maps between standard injective sums")
    A = I_src.algebra
    X = [[dict() for _ in I_src.summands] for _ in I_dst.summands]
    for j, w in enumerate(I_dst.summands):
        for k, v in enumerate(I_src.summands):
            cand = A.block(w, v)
            # restrict g to the (j, k) component
            target = {}
            for u in A.vertices:
                rows = [r for r, (jj, _) in enumerate(I_dst.coords[u]) if jj == j]
                cols = [c for c, (kk, _) in enumerate(I_src.coords[u]) if kk == k]
                target[u] = g.blocks[u][np.ix_(rows, cols)] if rows and cols else linalg.zeros(len(rows), len(cols))
            vec_t = np.concatenate([target[u].reshape(-1) for u in A.vertices])
            if not any(x != 0 for x in vec_t):
                continue
            mats = []
            for i in cand:
                full = _nu_matrix(A, I_src, I_dst, k, j, {i: Fraction(1)})
                sub = []
                for u in A.vertices:
                    rows = [r for r, (jj, _) in enumerate(I_dst.coords[u]) if jj == j]
                    cols = [c for c, (kk, _) in enumerate(I_src.coords[u]) if kk == k]
                    sub.append(full[u][np.ix_(rows, cols)].reshape(-1) if rows and cols else np.zeros(0, dtype=object))
                mats.append(np.concatenate(sub))
            if not mats:
                raise ModuleError("map between injectives is not in the image of nu")
            sol = linalg.solve(np.stack(mats, axis=1), vec_t.reshape(-1, 1))
            if sol is None:
                raise ModuleError("map between injectives is not in the image of nu")
            X[j][k] = {i: sol[n, 0] for n, i in enumerate(cand) if sol[n, 0]}
    return X


def left_multiplication(P_src: Module, P_dst: Module, X):
    """Module map ``(+) e_{v_k} A -> (+) e_{w_j} A``, ``e_{v_k} -> sum_j X[j][k]``."""
    A = P_src.algebra
    blocks = {}
    for u in A.vertices:
        m = linalg.zeros(P_dst.dims[u], P_src.dims[u])
        rows = {key: r for r, key in enumerate(P_dst.coords[u])}
        for col, (k, p) in enumerate(P_src.coords[u]):
            for j in range(len(P_dst.summands)):
                x = X[j][k]
                if not x:
                    continue
                for r, c in A.mul(x, {p: Fraction(1)}).items():
                    m[rows[(j, r)], col] += c
        blocks[u] = m
    return Morphism(P_src, P_dst, blocks)


def nu_inverse_morphism(g: Morphism):
    """``nu^{-1}(g)`` as a map of projective sums."""
    A = g.src.algebra
    X = nakayama_inverse(g)
    return left_multiplication(projective_sum(A, g.src.summands), projective_sum(A, g.dst.summands), X)

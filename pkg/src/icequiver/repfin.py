"""Representation-finite workbench: Dynkin quivers, the inverse (higher)
Auslander-Reiten translation, Auslander and preprojective algebras, and the
cluster-tilting module of a boundary algebra.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .algebra import AlgebraError, FinDimAlgebra, find_isomorphism, trace_radical
from .dg import build_pi2, h0_presentation
from .jacobian import bound_quiver_algebra, boundary_algebra, path_algebra
from .modules import (
    Module,
    Morphism,
    combine,
    cokernel,
    ext_dim,
    hom_basis,
    identity,
    injective_dimension_of_regular,
    left_multiplication,
    minimal_injective_resolution,
    minimal_projective_resolution,
    nakayama_inverse,
    nu_inverse_morphism,
    projective,
    projective_sum,
    solve_in_span,
    submodule,
    zero_map,
    zero_module,
)
from .quiver import Arrow, Quiver


class RepFinError(ValueError):
    pass


# ---- Dynkin quivers --------------------------------------------------------


def dynkin_quiver(name):
    """Quiver of type ``A_n``, ``D_n`` or ``E_6,7,8`` with a fixed orientation.

    ``A_n`` is linear ``1 -> 2 -> ... -> n``; ``D_n`` is the chain ``1 .. n-1``
    with ``n-2 -> n``; ``E_n`` is the chain ``1 .. n-1`` with ``3 -> n``.
    """
    m = re.fullmatch(r"([ADE])(\d+)", name.strip())
    if not m:
        raise RepFinError(f"unknown Dynkin type {name!r}")
    kind, n = m.group(1), int(m.group(2))
    if (kind == "A" and n < 1) or (kind == "D" and n < 4) or (kind == "E" and n not in (6, 7, 8)):
        raise RepFinError(f"unknown Dynkin type {name!r}")
    vertices = [str(i) for i in range(1, n + 1)]
    if kind == "A":
        edges = [(i, i + 1) for i in range(1, n)]
    elif kind == "D":
        edges = [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    else:
        edges = [(i, i + 1) for i in range(1, n - 1)] + [(3, n)]
    arrows = [Arrow(f"a{k}", str(s), str(t)) for k, (s, t) in enumerate(edges, 1)]
    return Quiver(vertices, arrows)


def dynkin_type(q: Quiver):
    """``'A'``, ``'D'`` or ``'E'`` with rank, or ``None`` when the underlying graph is not Dynkin."""
    n = len(q.vertices)
    if n == 0 or len(q.arrows) != n - 1:
        return None
    adj = {v: set() for v in q.labels}
    for a in q.arrows:
        if a.source == a.target or a.target in adj[a.source]:
            return None
        adj[a.source].add(a.target)
        adj[a.target].add(a.source)
    seen, stack = set(), [q.labels[0]]
    while stack:
        v = stack.pop()
        if v not in seen:
            seen.add(v)
            stack.extend(adj[v] - seen)
    if len(seen) != n:
        return None
    branch = [v for v in adj if len(adj[v]) >= 3]
    if not branch:
        return f"A{n}"
    if len(branch) > 1 or len(adj[branch[0]]) > 3:
        return None
    c = branch[0]
    arms = []
    for start in adj[c]:
        length, prev, cur = 1, c, start
        while True:
            nxt = adj[cur] - {prev}
            if not nxt:
                break
            prev, cur = cur, next(iter(nxt))
            length += 1
        arms.append(length + 1)
    p, r, s = sorted(arms)
    if Fraction(1, p) + Fraction(1, r) + Fraction(1, s) <= 1:
        return None
    if p == 2 and r == 2:
        return f"D{n}"
    return f"E{n}"


def _check_dynkin(q):
    t = dynkin_type(q)
    if t is None:
        raise RepFinError("quiver is not of Dynkin type")
    return t


# ---- inverse higher Auslander-Reiten translation ---------------------------


@dataclass
class TauData:
    module: Module
    n: int
    resolution: object
    result: Module
    projection: Morphism = None
    section: Morphism = None


def tau_n_inverse(M: Module, n=1):
    """``tau_n^-1 M``: cokernel of ``nu^-1`` applied to the last map of a minimal injective resolution.

    A resolution shorter than ``n`` gives zero; a longer one is an error.
    """
    if n < 1:
        raise RepFinError("n must be at least 1")
    A = M.algebra
    res = minimal_injective_resolution(M, n)
    if not res.finite:
        raise RepFinError(f"injective resolution of {M.name or 'module'} is longer than n={n}")
    if res.length < n:
        return TauData(M, n, res, zero_module(A))
    d = res.maps[n - 1]
    X = nakayama_inverse(d)
    P_prev = projective_sum(A, d.src.summands)
    P_last = projective_sum(A, d.dst.summands)
    Q, proj, sec = cokernel(left_multiplication(P_prev, P_last, X))
    return TauData(M, n, res, Q, proj, sec)


def _lift(basis, condition, target):
    """First element ``F`` of span(basis) with ``condition(F) == target``."""
    images = [condition(h) for h in basis]
    if not basis:
        if not target.is_zero():
            raise RepFinError("morphism does not lift")
        return None
    coeffs = solve_in_span(images, target)
    if coeffs is None:
        raise RepFinError("morphism does not lift")
    return coeffs


def tau_n_inverse_morphism(f: Morphism, n=1, src=None, dst=None):
    """``tau_n^-1 f`` between the modules produced by :func:`tau_n_inverse`."""
    src = src or tau_n_inverse(f.src, n)
    dst = dst or tau_n_inverse(f.dst, n)
    if src.result.is_zero() or dst.result.is_zero():
        return zero_map(src.result, dst.result)
    rM, rN = src.resolution, dst.resolution
    basis = hom_basis(rM.terms[0], rN.terms[0])
    coeffs = _lift(basis, lambda h: h @ rM.coaugmentation, rN.coaugmentation @ f)
    cur = combine(basis, coeffs, rM.terms[0], rN.terms[0])
    for k in range(n):
        basis = hom_basis(rM.terms[k + 1], rN.terms[k + 1])
        prev = cur
        coeffs = _lift(basis, lambda h: h @ rM.maps[k], rN.maps[k] @ prev)
        cur = combine(basis, coeffs, rM.terms[k + 1], rN.terms[k + 1])
    g = nu_inverse_morphism(cur)
    return dst.projection @ g @ src.section


# ---- indecomposables by tau-orbits -----------------------------------------


@dataclass
class OrbitObject:
    """``tau^-index P_vertex`` together with its translate data."""

    vertex: str
    index: int
    module: Module
    tau: TauData = None

    @property
    def label(self):
        return f"{self.vertex}.{self.index}"

    @property
    def is_projective(self):
        return self.index == 0


def tau_orbits(A: FinDimAlgebra, n=1, limit=200):
    """All nonzero ``tau_n^-i P_v``, orbit by orbit."""
    out = []
    for v in A.vertices:
        M = projective(A, v)
        i = 0
        while not M.is_zero():
            obj = OrbitObject(v, i, M)
            obj.tau = tau_n_inverse(M, n)
            out.append(obj)
            M = obj.tau.result
            i += 1
            if len(out) > limit:
                raise RepFinError("tau-orbits do not terminate")
    return out


def indecomposables_dynkin(q: Quiver):
    """Indecomposable representations of a Dynkin quiver, one per dimension vector."""
    _check_dynkin(q)
    A, _ = path_algebra(q)
    seen = {}
    for obj in tau_orbits(A, 1):
        seen.setdefault(obj.module.dimension_vector(), obj)
    return list(seen.values())


# ---- graded hom algebras ----------------------------------------------------


def adapted_endomorphisms(M: Module, basis):
    """Basis of ``End(M)``: the identity first, then a basis of the radical."""
    if not basis:
        return []
    mats = [f.matrix() for f in basis]
    rad = trace_radical(mats)
    if len(basis) - rad.shape[1] != 1:
        raise RepFinError("endomorphism ring is not local")
    out = [identity(M)]
    for c in range(rad.shape[1]):
        out.append(combine(basis, list(rad[:, c]), M, M))
    return out


def _assemble(vertices, blocks, compose, name):
    """Algebra with basis the union of ``blocks[(L, M, g)]`` (maps of source L, target M)."""
    keys, labels, sources, targets, grades = [], [], [], [], []
    for (L, M, g), maps in blocks.items():
        for k, _ in enumerate(maps):
            keys.append((L, M, g, k))
            suffix = f"#{k}" if len(maps) > 1 else ""
            labels.append(f"{L}->{M}" + (f"[{g}]" if g else "") + suffix if L != M or g else f"e{L}" + suffix)
            sources.append(L)
            targets.append(M)
            grades.append(g)
    index = {key: n for n, key in enumerate(keys)}
    units = {}
    for v in vertices:
        if (v, v, 0, 0) not in index:
            raise AlgebraError(f"object {v} has no identity")
        units[v] = index[(v, v, 0, 0)]
    table = {}
    for a, (M, N, k, i) in enumerate(keys):
        for b, (L, M2, g, j) in enumerate(keys):
            if M2 != M:
                continue
            out = compose((M, N, k), blocks[(M, N, k)][i], (L, M, g), blocks[(L, M, g)][j])
            if out is None:
                continue
            key, mor = out
            if mor.is_zero():
                continue
            target = blocks.get(key)
            coeffs = solve_in_span(target or [], mor)
            if coeffs is None:
                raise AlgebraError("composition leaves the hom space")
            vec = {index[key + (n,)]: c for n, c in enumerate(coeffs) if c}
            if vec:
                table[(a, b)] = vec
    A = FinDimAlgebra(vertices, labels, sources, targets, table, units, name=name, grades=grades)
    A.keys = keys
    return A


@dataclass
class HigherEndAlgebra:
    objects: list
    homs: dict
    algebra: FinDimAlgebra
    e: list
    n: int = 1

    def grade_dims(self):
        out = {}
        for (L, M, g), maps in self.homs.items():
            out[g] = out.get(g, 0) + len(maps)
        return out


def _graded_homs(universe, objects, max_grade, label):
    by_key = {(o.vertex, o.index): o for o in universe}
    blocks = {}
    for L in objects:
        for M in objects:
            g = 0
            while g <= max_grade:
                T = by_key.get((M.vertex, M.index + g))
                if T is None:
                    break
                maps = hom_basis(L.module, T.module)
                if L is M and g == 0:
                    maps = adapted_endomorphisms(L.module, maps)
                if maps:
                    blocks[(label(L), label(M), g)] = maps
                g += 1
    return by_key, blocks


def _tau_power_morphism(h, start, steps, by_key):
    """Apply ``tau^-1`` ``steps`` times to ``h: start -> target`` using cached orbit data."""
    src_obj, dst_obj = start
    for _ in range(steps):
        nxt_src = by_key.get((src_obj.vertex, src_obj.index + 1))
        nxt_dst = by_key.get((dst_obj.vertex, dst_obj.index + 1))
        if nxt_src is None or nxt_dst is None:
            return None
        h = tau_n_inverse_morphism(h, 1, src_obj.tau, dst_obj.tau)
        h = Morphism(nxt_src.module, nxt_dst.module, h.blocks)
        src_obj, dst_obj = nxt_src, nxt_dst
    return h


def _graded_algebra(universe, objects, max_grade, label, name):
    by_key, blocks = _graded_homs(universe, objects, max_grade, label)
    lookup = {label(o): o for o in objects}

    def compose(hk, h, fk, f):
        M, N, k = hk
        L, _, g = fk
        Mo, No = lookup[M], lookup[N]
        target_src = by_key[(Mo.vertex, Mo.index)]
        target_dst = by_key.get((No.vertex, No.index + k))
        moved = _tau_power_morphism(h, (target_src, target_dst), g, by_key)
        if moved is None:
            return None
        return (L, N, g + k), moved @ f

    verts = [label(o) for o in objects]
    return _assemble(verts, blocks, compose, name), blocks


def higher_end_algebra(q: Quiver, n=1):
    """Graded homs ``Hom(L, tau^-i M)`` among all ``tau^-i P_v`` with the twisted composition."""
    if n != 1:
        raise NotImplementedError("unsupported: only n = 1 (Dynkin hereditary) is implemented")
    _check_dynkin(q)
    B0, _ = path_algebra(q)
    universe = tau_orbits(B0, 1)
    A, blocks = _graded_algebra(universe, universe, len(universe), lambda o: o.label, "H0")
    e = [o.label for o in universe if o.is_projective]
    return HigherEndAlgebra(universe, blocks, A, e, n)


def extract_h0_algebra(H: HigherEndAlgebra):
    return H.algebra, list(H.e)


def auslander_algebra(q: Quiver):
    """``End`` of the sum of all indecomposables (degree-0 part of the graded algebra)."""
    _check_dynkin(q)
    B0, _ = path_algebra(q)
    universe = tau_orbits(B0, 1)
    A, _ = _graded_algebra(universe, universe, 0, lambda o: o.label, "Aus")
    return A


def higher_preprojective(q: Quiver, n=1):
    """``(+)_i Hom(B0, tau^-i B0)``; vertices are the vertices of ``q``."""
    if n != 1:
        raise NotImplementedError("unsupported: only n = 1 (Dynkin hereditary) is implemented")
    _check_dynkin(q)
    B0, _ = path_algebra(q)
    universe = tau_orbits(B0, 1)
    projectives = [o for o in universe if o.is_projective]
    A, _ = _graded_algebra(universe, projectives, len(universe), lambda o: o.vertex, "Pi")
    return A


def preprojective_classical(q: Quiver, D=None):
    """Double quiver modulo the vertex commutators, through the rewriting engine."""
    _check_dynkin(q)
    q0, rels = h0_presentation(build_pi2(q))
    A, cert, _ = bound_quiver_algebra(q0, rels, D, name="Pi")
    return A


def stable_auslander(q: Quiver):
    """Auslander algebra modulo the ideal generated by the projective objects."""
    Aus = auslander_algebra(q)
    proj = [v for v in Aus.vertices if v.endswith(".0")]
    return Aus.quotient([Aus.unit(v) for v in proj], name="stable Aus")


def self_injectivity(A: FinDimAlgebra, L=0):
    return injective_dimension_of_regular(A, L) == 0


# ---- the cluster-tilting module Je ----------------------------------------


@dataclass
class TiltingModule:
    module: Module
    boundary: FinDimAlgebra
    summands: list = field(default_factory=list)  # (label, Module)


def cluster_tilting_module(J: FinDimAlgebra, e):
    """``Je`` as a right module over ``B' = eJe``, with its summands ``e_v J e``."""
    B = boundary_algebra(J, e)
    origin = B.origin
    comps = {u: [i for i in range(J.dim) if J.sources[i] == u] for u in B.vertices}
    pos = {u: {i: n for n, i in enumerate(comps[u])} for u in B.vertices}
    act = {}
    for b in B.radical():
        jb = origin[b]
        s, t = B.sources[b], B.targets[b]
        m = linalg.zeros(len(comps[s]), len(comps[t]))
        for col, x in enumerate(comps[t]):
            for r, c in J.mul_basis(x, jb).items():
                m[pos[s][r], col] = c
        act[b] = m
    T = Module(B, {u: len(comps[u]) for u in B.vertices}, act, name="Je")
    summands = []
    for v in J.vertices:
        spaces = {}
        for u in B.vertices:
            cols = [n for n, i in enumerate(comps[u]) if J.targets[i] == v]
            m = linalg.zeros(len(comps[u]), len(cols))
            for k, n in enumerate(cols):
                m[n, k] = Fraction(1)
            spaces[u] = m
        S, _ = submodule(T, spaces, name=f"e{v}Je")
        if not S.is_zero():
            summands.append((v, S))
    return TiltingModule(T, B, summands)


def check_rigidity(T: Module, n, L=None):
    """``Ext^i(T, T) = 0`` for ``0 < i < n``; resolutions are built to depth ``L``."""
    L = max(L or n, n)
    res = minimal_projective_resolution(T, L)
    return all(ext_dim(T, T, i, res) == 0 for i in range(1, n))


def endomorphism_algebra(summands, name="End"):
    """``End(+ X_v)`` with vertices the summand labels; ``f: X_L -> X_M`` has source L, target M."""
    blocks = {}
    for L, X in summands:
        for M, Y in summands:
            maps = hom_basis(X, Y)
            if L == M:
                maps = adapted_endomorphisms(X, maps)
            if maps:
                blocks[(L, M, 0)] = maps

    def compose(hk, h, fk, f):
        return (fk[0], hk[1], 0), h @ f

    return _assemble([v for v, _ in summands], blocks, compose, name)


def isomorphic(A: FinDimAlgebra, B: FinDimAlgebra, vertex_map=None):
    return find_isomorphism(A, B, vertex_map) is not None

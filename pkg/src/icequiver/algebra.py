"""Finite-dimensional basic algebras given by exact structure constants.

Every basis element ``b`` is homogeneous, ``b = e_t b e_s``, with ``s`` its
source and ``t`` its target vertex; products follow ``gf = g after f`` so
``b_i b_j`` can be nonzero only when ``source(b_i) == target(b_j)``.
Vectors are sparse dicts ``{basis index: Fraction}``.
"""

import itertools
import random
from fractions import Fraction

import numpy as np

from . import linalg


class AlgebraError(ValueError):
    pass


def _add_into(acc, vec, c=Fraction(1)):
    for k, v in vec.items():
        x = acc.get(k, Fraction(0)) + c * v
        if x:
            acc[k] = x
        else:
            acc.pop(k, None)


class FinDimAlgebra:
    def __init__(self, vertices, labels, sources, targets, table, units, name="", grades=None):
        self.vertices = list(vertices)
        self.labels = list(labels)
        self.sources = list(sources)
        self.targets = list(targets)
        self.table = {k: dict(v) for k, v in table.items() if v}
        self.units = dict(units)
        self.name = name
        self.grades = list(grades) if grades is not None else [0] * len(self.labels)
        # path-algebra extras, filled in by the rewriting layer
        self.words = None
        self.rewriting = None
        self.quiver = None
        self.truncation = None
        if set(self.units) != set(self.vertices):
            raise AlgebraError("every vertex needs an idempotent basis element")

    @property
    def dim(self):
        return len(self.labels)

    def __len__(self):
        return self.dim

    def basis(self, i):
        return {i: Fraction(1)}

    def unit(self, v):
        return {self.units[v]: Fraction(1)}

    def one(self):
        return {self.units[v]: Fraction(1) for v in self.vertices}

    def mul_basis(self, i, j):
        return self.table.get((i, j), {})

    def mul(self, x, y):
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                prod = self.table.get((i, j))
                if prod:
                    _add_into(out, prod, a * b)
        return out

    def add(self, x, y):
        out = dict(x)
        _add_into(out, y)
        return out

    def scale(self, x, c):
        return {k: c * v for k, v in x.items() if c * v}

    def index(self, label):
        return self.labels.index(label)

    def block(self, target, source):
        """Basis indices of ``e_target A e_source``."""
        return [
            i for i in range(self.dim) if self.targets[i] == target and self.sources[i] == source
        ]

    def left_ideal(self, v):
        """Indices spanning ``e_v A`` (the basis of the right projective at ``v``)."""
        return [i for i in range(self.dim) if self.targets[i] == v]

    def right_ideal(self, v):
        """Indices spanning ``A e_v``."""
        return [i for i in range(self.dim) if self.sources[i] == v]

    def radical(self):
        idem = set(self.units.values())
        return [i for i in range(self.dim) if i not in idem]

    def vector(self, x):
        out = linalg.zeros(self.dim, 1)
        for k, v in x.items():
            out[k, 0] = v
        return out

    def from_vector(self, col):
        return {i: Fraction(col[i]) for i in range(self.dim) if col[i] != 0}

    def format_vector(self, x):
        if not x:
            return "0"
        parts = []
        for k in sorted(x):
            c = x[k]
            parts.append(("" if c == 1 else "-" if c == -1 else f"{linalg.fmt(c)}*") + self.labels[k])
        return " + ".join(parts).replace("+ -", "- ")

    # ---- checks -------------------------------------------------------

    def check_associativity(self, sample=None, seed=0):
        n = self.dim
        triples = itertools.product(range(n), repeat=3)
        if sample is not None:
            rng = random.Random(seed)
            triples = [tuple(rng.randrange(n) for _ in range(3)) for _ in range(sample)]
        for i, j, k in triples:
            left = self.mul(self.mul_basis(i, j), {k: Fraction(1)})
            right = self.mul({i: Fraction(1)}, self.mul_basis(j, k))
            if left != right:
                return (i, j, k)
        return None

    def check_idempotents(self):
        one = self.one()
        for i in range(self.dim):
            x = {i: Fraction(1)}
            if self.mul(one, x) != x or self.mul(x, one) != x:
                return False
        for v in self.vertices:
            for w in self.vertices:
                p = self.mul(self.unit(v), self.unit(w))
                if p != (self.unit(v) if v == w else {}):
                    return False
        return True

    def check_homogeneous(self):
        for (i, j), prod in self.table.items():
            if self.sources[i] != self.targets[j]:
                return False
            for k in prod:
                if self.targets[k] != self.targets[i] or self.sources[k] != self.sources[j]:
                    return False
        return True

    def is_radical_nilpotent(self):
        try:
            self.nilpotency_index()
        except AlgebraError:
            return False
        return True

    def generators(self):
        """Radical basis elements spanning ``rad / rad^2``, block by block."""
        if getattr(self, "_generators", None) is not None:
            return self._generators
        rad = self.radical()
        squares = []
        for i in rad:
            for j in rad:
                prod = self.table.get((i, j))
                if prod:
                    squares.append(prod)
        out = []
        blocks = {}
        for i in rad:
            blocks.setdefault((self.targets[i], self.sources[i]), []).append(i)
        for (t, s), blk in blocks.items():
            pos = {k: n for n, k in enumerate(blk)}
            cols = []
            for vec in squares:
                if any(k in pos for k in vec):
                    col = linalg.zeros(len(blk), 1)
                    for k, c in vec.items():
                        col[pos[k], 0] = c
                    cols.append(col)
            sub = linalg.hstack(cols, len(blk))
            out.extend(blk[n] for n in linalg.complement_basis(sub, len(blk)))
        self._generators = sorted(out)
        return self._generators

    def nilpotency_index(self):
        """Least ``m`` with ``rad^m = 0``."""
        rad = self.radical()
        if not rad:
            return 1
        span = [{i: Fraction(1)} for i in rad]
        m = 1
        while span:
            nxt = []
            for x in span:
                for r in rad:
                    y = self.mul(x, {r: Fraction(1)})
                    if y:
                        nxt.append(self.vector(y))
            m += 1
            if not nxt:
                return m
            basis = linalg.column_basis(linalg.hstack(nxt, self.dim))
            span = [self.from_vector(basis[:, c]) for c in range(basis.shape[1])]
            if m > self.dim + 1:
                raise AlgebraError("radical is not nilpotent")
        return m

    # ---- constructions ------------------------------------------------

    def corner(self, vertices, name=""):
        """``e A e`` for ``e`` the sum of the idempotents at ``vertices``."""
        keep = [v for v in self.vertices if v in set(vertices)]
        if not keep:
            raise AlgebraError("empty idempotent: the zero algebra is not supported")
        idx = [i for i in range(self.dim) if self.sources[i] in keep and self.targets[i] in keep]
        return self._restrict(idx, keep, name)

    def _restrict(self, idx, keep, name):
        pos = {old: new for new, old in enumerate(idx)}
        table = {}
        for i in idx:
            for j in idx:
                prod = self.table.get((i, j))
                if prod:
                    table[(pos[i], pos[j])] = {pos[k]: c for k, c in prod.items()}
        out = FinDimAlgebra(
            keep,
            [self.labels[i] for i in idx],
            [self.sources[i] for i in idx],
            [self.targets[i] for i in idx],
            table,
            {v: pos[self.units[v]] for v in keep},
            name=name,
            grades=[self.grades[i] for i in idx],
        )
        if self.words is not None:
            out.words = [self.words[i] for i in idx]
        out.origin = idx
        return out

    def ideal_span(self, generators):
        """Basis (as columns) of the two-sided ideal generated by ``generators``."""
        vecs = []
        for g in generators:
            for i in range(self.dim):
                left = self.mul({i: Fraction(1)}, g)
                if not left:
                    continue
                for j in range(self.dim):
                    y = self.mul(left, {j: Fraction(1)})
                    if y:
                        vecs.append(self.vector(y))
        if not vecs:
            return linalg.zeros(self.dim, 0)
        return linalg.column_basis(linalg.hstack(vecs, self.dim))

    def quotient(self, generators, name=""):
        """``A / A g A``; vertices whose idempotent dies are dropped."""
        ideal = self.ideal_span(generators)
        chosen = []
        for t in self.vertices:
            for s in self.vertices:
                blk = self.block(t, s)
                if not blk:
                    continue
                rows = ideal[blk, :]
                keep_cols = [c for c in range(ideal.shape[1]) if any(x != 0 for x in rows[:, c])]
                sub = rows[:, keep_cols] if keep_cols else linalg.zeros(len(blk), 0)
                for local in linalg.complement_basis(sub, len(blk)):
                    chosen.append(blk[local])
        chosen.sort()
        keep = [v for v in self.vertices if self.units[v] in chosen]
        full = np.concatenate([self.vector({i: Fraction(1)}) for i in chosen] + [ideal], axis=1) if chosen else ideal
        pos = {old: new for new, old in enumerate(chosen)}

        def reduce(vec):
            if not vec:
                return {}
            coords = linalg.coordinates(full, self.vector(vec))
            return {k: Fraction(coords[k, 0]) for k in range(len(chosen)) if coords[k, 0] != 0}

        table = {}
        for i in chosen:
            for j in chosen:
                prod = self.table.get((i, j))
                if prod:
                    r = reduce(prod)
                    if r:
                        table[(pos[i], pos[j])] = r
        if any(self.units[v] not in pos for v in keep):
            raise AlgebraError("quotient lost an idempotent")
        out = FinDimAlgebra(
            keep,
            [self.labels[i] for i in chosen],
            [self.sources[i] for i in chosen],
            [self.targets[i] for i in chosen],
            table,
            {v: pos[self.units[v]] for v in keep},
            name=name,
            grades=[self.grades[i] for i in chosen],
        )
        out.origin = chosen
        return out

    def opposite(self):
        table = {(j, i): dict(v) for (i, j), v in self.table.items()}
        return FinDimAlgebra(
            self.vertices, self.labels, self.targets, self.sources, table, self.units, name=self.name + "^op"
        )

    def dump(self):
        """Stable machine-readable dump."""
        triples = []
        for (i, j) in sorted(self.table):
            for k in sorted(self.table[(i, j)]):
                triples.append([i, j, k, linalg.fmt(self.table[(i, j)][k])])
        return {
            "name": self.name,
            "dimension": self.dim,
            "vertices": self.vertices,
            "basis": [
                {"label": self.labels[i], "source": self.sources[i], "target": self.targets[i]}
                for i in range(self.dim)
            ],
            "idempotents": {v: self.units[v] for v in self.vertices},
            "structure_constants": triples,
        }


def is_homomorphism(phi, A: FinDimAlgebra, B: FinDimAlgebra):
    """``phi`` is a ``B.dim x A.dim`` matrix; check multiplicativity and unit."""

    cols = [{r: phi[r, i] for r in range(B.dim) if phi[r, i] != 0} for i in range(A.dim)]

    def image(x):
        out = {}
        for i, c in x.items():
            _add_into(out, cols[i], c)
        return out

    if image(A.one()) != B.one():
        return False
    for i in range(A.dim):
        for j in range(A.dim):
            if image(A.mul_basis(i, j)) != B.mul(cols[i], cols[j]):
                return False
    return True


def is_isomorphism(phi, A: FinDimAlgebra, B: FinDimAlgebra):
    return (
        A.dim == B.dim
        and phi.shape == (B.dim, A.dim)
        and linalg.rank(phi) == A.dim
        and is_homomorphism(phi, A, B)
    )


def trace_radical(matrices):
    """Jacobson radical of the algebra spanned by square ``matrices``.

    In characteristic zero ``rad E = {x in E : tr(xy) = 0 for all y in E}``.
    Returns coefficient vectors (columns) in terms of ``matrices``.
    """
    k = len(matrices)
    gram = linalg.zeros(k, k)
    for a in range(k):
        for b in range(k):
            gram[a, b] = sum((matrices[a] @ matrices[b]).diagonal(), Fraction(0))
    return linalg.nullspace(gram)


def _generator_paths(A, gens):
    """Products of generators (``word[0]`` applied last) with their values, until they vanish."""
    out = [((), A.unit(v), v, v) for v in A.vertices]
    frontier = [((g,), {g: Fraction(1)}, A.sources[g], A.targets[g]) for g in gens]
    while frontier:
        out.extend(frontier)
        nxt = []
        for word, val, s, t in frontier:
            if not val:
                continue
            for g in gens:
                if A.sources[g] == t:
                    nxt.append(((g,) + word, A.mul({g: Fraction(1)}, val), s, A.targets[g]))
        frontier = nxt
    return out


def find_isomorphism(A: FinDimAlgebra, B: FinDimAlgebra, vertex_map=None):
    """Search for an algebra isomorphism ``A -> B`` matching idempotents.

    Generators of ``A`` (a basis of ``rad/rad^2``) are sent to scalar multiples of
    generators of ``B`` in the corresponding block, so every block of
    ``rad/rad^2`` must be at most one-dimensional.  Scalars on a spanning forest
    are normalised to 1; the rest solve the relations of ``A``.  Returns the
    ``B.dim x A.dim`` matrix or ``None``.
    """
    import sympy

    if A.dim != B.dim or len(A.vertices) != len(B.vertices):
        return None
    maps = [vertex_map] if vertex_map is not None else [
        dict(zip(A.vertices, perm)) for perm in itertools.permutations(B.vertices)
    ]
    gA, gB = A.generators(), B.generators()
    for sigma in maps:
        beta = {}
        ok = True
        for g in gA:
            cands = [h for h in gB if B.targets[h] == sigma[A.targets[g]] and B.sources[h] == sigma[A.sources[g]]]
            same = [x for x in gA if A.targets[x] == A.targets[g] and A.sources[x] == A.sources[g]]
            if len(cands) != 1 or len(same) != 1:
                ok = False
                break
            beta[g] = cands[0]
        if not ok or len(gB) != len(gA):
            continue
        phi = _solve_scalars(A, B, sigma, gA, beta, sympy)
        if phi is not None and is_isomorphism(phi, A, B):
            return phi
    return None


def _solve_scalars(A, B, sigma, gens, beta, sympy):
    # spanning forest over the generator arrows
    parent = {v: v for v in A.vertices}

    def root(v):
        while parent[v] != v:
            v = parent[v]
        return v

    lam = {}
    free = []
    for g in gens:
        a, b = root(A.sources[g]), root(A.targets[g])
        if a != b:
            parent[a] = b
            lam[g] = sympy.Integer(1)
        else:
            lam[g] = sympy.Symbol(f"l{g}")
            free.append(lam[g])

    paths = _generator_paths(A, gens)

    def image_path(word, s):
        val = B.unit(sigma[s])
        coeff = sympy.Integer(1)
        for g in reversed(word):
            val = B.mul({beta[g]: Fraction(1)}, val)
            coeff *= lam[g]
        return coeff, val

    images = [image_path(word, s) for word, _, s, _ in paths]
    equations = []
    blocks = {}
    for n, (word, val, s, t) in enumerate(paths):
        blocks.setdefault((t, s), []).append(n)
    for blk in blocks.values():
        cols = linalg.hstack([A.vector(paths[n][1]) for n in blk], A.dim)
        rels = linalg.nullspace(cols)
        for r in range(rels.shape[1]):
            total = {}
            for pos, n in enumerate(blk):
                c = rels[pos, r]
                if not c:
                    continue
                coeff, val = images[n]
                for k, x in val.items():
                    total[k] = total.get(k, 0) + sympy.Rational(c.numerator, c.denominator) * x * coeff
            equations.extend(sympy.expand(e) for e in total.values() if sympy.expand(e) != 0)
    values = {}
    if free:
        if equations:
            sols = sympy.solve(equations, free, dict=True)
        else:
            sols = [{}]
        chosen = None
        for sol in sols:
            full = {}
            for x in free:
                full[x] = sol.get(x, x)
            full = {x: sympy.sympify(e).subs({y: 1 for y in free if y not in sol}) for x, e in full.items()}
            if all(v.is_rational and v != 0 for v in full.values()):
                chosen = full
                break
        if chosen is None:
            return None
        values = chosen
    elif any(e != 0 for e in equations):
        return None

    def num(x):
        x = sympy.Rational(sympy.sympify(x).subs(values))
        return Fraction(int(x.p), int(x.q))

    # pick spanning paths and build phi on the basis of A
    cols = linalg.hstack([A.vector(val) for _, val, _, _ in paths], A.dim)
    _, pivots = linalg.rref(cols)
    basis = linalg.hstack([cols[:, [p]] for p in pivots], A.dim)
    if len(pivots) != A.dim:
        return None
    img = linalg.zeros(B.dim, len(pivots))
    for c, p in enumerate(pivots):
        coeff, val = images[p]
        f = num(coeff)
        for k, x in val.items():
            img[k, c] = f * x
    coords = linalg.coordinates(basis, linalg.eye(A.dim))
    return img @ coords

"""Relative Ginzburg dg algebras, the dg preprojective algebra of the frozen part,
and the Ginzburg functor between them.

Generators live in a graded quiver; the differential is stored on generators
and extended to paths by the graded Leibniz rule
``d(uv) = d(u) v + (-1)^|u| u d(v)``.
"""

from dataclasses import dataclass, field

from .quiver import (
    Arrow,
    Element,
    IceQuiver,
    Path,
    Potential,
    Quiver,
    QuiverError,
    cyclic_derivative,
    lazy,
)


class DgError(ValueError):
    pass


def star(name):
    return f"{name}*"


def tilde(name):
    return f"{name}~"


def loop_t(v):
    return f"t{v}"


def loop_r(v):
    return f"r{v}"


class DgAlgebraPresentation:
    """A graded quiver together with the differential of each generator."""

    def __init__(self, quiver: Quiver, differential: dict, check=True):
        self.quiver = quiver
        self.differential = {a.name: differential.get(a.name, Element()) for a in quiver.arrows}
        self._memo = {}
        if check:
            self.check_degrees()

    def check_degrees(self):
        q = self.quiver
        for a in q.arrows:
            value = self.differential[a.name]
            if a.degree == 0 and value:
                raise DgError(f"d({a.name}) must vanish on a degree-0 generator")
            for p in value.paths():
                if q.degree(p) != a.degree + 1:
                    raise DgError(
                        f"d({a.name}) has a term {p} of degree {q.degree(p)}, expected {a.degree + 1}"
                    )
                if p.source != a.source or p.target != a.target:
                    raise DgError(f"d({a.name}) has a term {p} with the wrong endpoints")

    def generators(self):
        return list(self.quiver.arrows)

    def d_path(self, p: Path):
        if p in self._memo:
            return self._memo[p]
        q = self.quiver
        out = Element()
        sign = 1
        word = p.word
        for k, name in enumerate(word):
            dk = self.differential[name]
            if dk:
                prefix = Element.of(q.path(word[:k])) if k else Element.of(lazy(q.arrow(name).target))
                rest = word[k + 1:]
                suffix = Element.of(q.path(rest)) if rest else Element.of(lazy(q.arrow(name).source))
                out = out + (prefix * dk * suffix).scale(sign)
            if q.arrow(name).degree % 2:
                sign = -sign
        self._memo[p] = out
        return out

    def d(self, x: Element):
        out = Element()
        for p, c in x.items():
            if p.word:
                out = out + self.d_path(p).scale(c)
        return out

    def degree0_quiver(self):
        return Quiver(self.quiver.labels, [a for a in self.quiver.arrows if a.degree == 0])

    def table(self):
        """Rows ``(name, degree, source, target, d-value)``."""
        return [
            (a.name, a.degree, a.source, a.target, str(self.differential[a.name]))
            for a in self.quiver.arrows
        ]

    def to_dict(self):
        return {
            "vertices": self.quiver.labels,
            "generators": [
                {"name": n, "degree": deg, "source": s, "target": t, "d": dv}
                for n, deg, s, t, dv in self.table()
            ],
        }

    def format(self):
        rows = self.table()
        width = max([len(r[0]) for r in rows] + [9])
        lines = [f"{'generator':<{width}}  degree  source  target  differential"]
        for name, deg, s, t, dv in rows:
            lines.append(f"{name:<{width}}  {deg:>6}  {s:>6}  {t:>6}  d({name}) = {dv}")
        return "\n".join(lines)


def _commutator_at(v, pairs):
    """``e_v (sum_a a a' - a' a) e_v`` for ``(a, a')`` path pairs."""
    out = Element()
    for a, b in pairs:
        ab = a * b
        ba = b * a
        if ab is not None and ab.target == v and ab.source == v:
            out = out + Element.of(ab)
        if ba is not None and ba.target == v and ba.source == v:
            out = out - Element.of(ba)
    return out


def build_relative_ginzburg(iq: IceQuiver, W: Potential):
    q = iq.quiver
    if q.has_loops():
        raise QuiverError("ice quivers with potential must not have loops")
    arrows = [Arrow(a.name, a.source, a.target, 0) for a in q.arrows]
    unfrozen = iq.unfrozen_arrows
    arrows += [Arrow(star(a.name), a.target, a.source, -1) for a in unfrozen]
    arrows += [Arrow(loop_t(v), v, v, -2) for v in iq.unfrozen_vertices]
    graded = Quiver(q.labels, arrows)
    d = {}
    for a in unfrozen:
        d[star(a.name)] = cyclic_derivative(a.name, W)
    for v in iq.unfrozen_vertices:
        pairs = [(graded.path(a.name), graded.path(star(a.name))) for a in unfrozen]
        d[loop_t(v)] = _commutator_at(v, pairs)
    return DgAlgebraPresentation(graded, d)


def build_ginzburg(q: Quiver, W: Potential):
    """Ginzburg dg algebra of a quiver with potential (nothing frozen)."""
    return build_relative_ginzburg(IceQuiver(q), W)


def build_pi2(F: Quiver):
    """Undeformed dg preprojective algebra of a quiver."""
    arrows = [Arrow(a.name, a.source, a.target, 0) for a in F.arrows]
    arrows += [Arrow(tilde(a.name), a.target, a.source, 0) for a in F.arrows]
    arrows += [Arrow(loop_r(v), v, v, -1) for v in F.labels]
    graded = Quiver(F.labels, arrows)
    d = {}
    for v in F.labels:
        pairs = [(graded.path(a.name), graded.path(tilde(a.name))) for a in F.arrows]
        d[loop_r(v)] = _commutator_at(v, pairs)
    return DgAlgebraPresentation(graded, d)


@dataclass
class GeneratorFunctor:
    domain: DgAlgebraPresentation
    codomain: DgAlgebraPresentation
    vertex_map: dict
    images: dict

    def apply_path(self, p: Path):
        if not p.word:
            return Element.of(lazy(self.vertex_map[p.source]))
        out = self.images[p.word[0]]
        for name in p.word[1:]:
            out = out * self.images[name]
        return out

    def apply(self, x: Element):
        out = Element()
        for p, c in x.items():
            out = out + self.apply_path(p).scale(c)
        return out


@dataclass
class Report:
    ok: bool
    offenders: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def verify_d_squared(P: DgAlgebraPresentation):
    bad = []
    for a in P.quiver.arrows:
        dd = P.d(P.differential[a.name])
        if dd:
            bad.append((a.name, str(dd)))
    return Report(not bad, bad)


def verify_functor(G: GeneratorFunctor):
    bad = []
    cod = G.codomain
    for a in G.domain.quiver.arrows:
        image = G.images[a.name]
        for p in image.paths():
            if cod.quiver.degree(p) != a.degree:
                bad.append((a.name, "degree"))
                break
        lhs = cod.d(image)
        rhs = G.apply(G.domain.differential[a.name])
        if lhs != rhs:
            bad.append((a.name, f"d(G({a.name})) = {lhs} but G(d({a.name})) = {rhs}"))
    return Report(not bad, bad)


def identity_functor(P: DgAlgebraPresentation):
    return GeneratorFunctor(
        P, P, {v: v for v in P.quiver.labels}, {a.name: Element.of(P.quiver.path(a.name)) for a in P.quiver.arrows}
    )


def ginzburg_functor(iq: IceQuiver, W: Potential):
    gamma = build_relative_ginzburg(iq, W)
    pi2 = build_pi2(iq.frozen_quiver())
    g = gamma.quiver
    images = {}
    for a in iq.frozen_quiver().arrows:
        images[a.name] = Element.of(g.path(a.name))
        images[tilde(a.name)] = -cyclic_derivative(a.name, W)
    pairs = [(g.path(a.name), g.path(star(a.name))) for a in iq.unfrozen_arrows]
    for v in pi2.quiver.labels:
        images[loop_r(v)] = _commutator_at(v, pairs)
    return GeneratorFunctor(pi2, gamma, {v: v for v in pi2.quiver.labels}, images)


def cofiber_quotient(iq: IceQuiver, W: Potential):
    """Delete the frozen vertices, their arrows, and the cycles through them."""
    q = iq.quiver
    keep = [v for v in q.labels if v not in iq.frozen_vertices]
    qbar = q.subquiver(keep)
    terms = [(c, p) for c, p in W.terms if not (W.vertices_met(p) & iq.frozen_vertices)]
    return qbar, Potential(qbar, [(c, qbar.path(p.word)) for c, p in terms])


def delete_vertices(P: DgAlgebraPresentation, vertices):
    """Quotient of a presentation by the ideal of the given vertices."""
    drop = set(vertices)
    q = P.quiver
    keep = [v for v in q.labels if v not in drop]
    arrows = [a for a in q.arrows if a.source not in drop and a.target not in drop]
    sub = Quiver(keep, arrows)
    names = {a.name for a in arrows}
    d = {}
    for a in arrows:
        d[a.name] = Element(
            {p: c for p, c in P.differential[a.name].items() if all(n in names for n in p.word)}
        )
    return DgAlgebraPresentation(sub, d)


def h0_presentation(P: DgAlgebraPresentation):
    """Degree-0 quiver and the relations ``d(g)`` for degree -1 generators."""
    rels = [P.differential[a.name] for a in P.quiver.arrows if a.degree == -1]
    return P.degree0_quiver(), [r for r in rels if r]

"""Quivers, ice quivers, paths and the (graded) path algebra.

Composition follows the ``gf = g after f`` rule: a path is stored as the
tuple of arrow names as it is written, so ``word[0]`` is the arrow applied
last and ``word[-1]`` the arrow applied first.  Products of elements are
concatenations of these words.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable


class QuiverError(ValueError):
    """Invalid quiver data."""


@dataclass(frozen=True)
class Vertex:
    id: int
    label: str


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str
    degree: int = 0


@dataclass(frozen=True, order=True)
class Path:
    """A path ``word[0] ... word[-1]``, or the lazy path at ``source`` if empty."""

    word: tuple
    source: str
    target: str

    @property
    def length(self):
        return len(self.word)

    @property
    def is_lazy(self):
        return not self.word

    def __mul__(self, other):
        """Concatenation ``self . other`` (``other`` first), or ``None``."""
        if self.source != other.target:
            return None
        return Path(self.word + other.word, other.source, self.target)

    def __str__(self):
        if not self.word:
            return f"e{self.source}"
        return _join_word(self.word)


_ATOM = re.compile(r"^[A-Za-z][0-9]*['*~]*$")


def _join_word(word):
    if all(_ATOM.match(name) for name in word):
        return "".join(word)
    return "*".join(word) if not any("*" in n for n in word) else ".".join(word)


def lazy(v):
    return Path((), v, v)


class Element:
    """Finite rational combination of paths.  Zero coefficients are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for p, c in items:
                c = Fraction(c)
                if c:
                    clean[p] = clean.get(p, Fraction(0)) + c
                    if not clean[p]:
                        del clean[p]
        self.terms = clean

    @classmethod
    def of(cls, path, coeff=1):
        return cls({path: coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, Element) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for p, c in other.terms.items():
            v = out.get(p, Fraction(0)) + c
            if v:
                out[p] = v
            else:
                out.pop(p, None)
        e = Element()
        e.terms = out
        return e

    def __neg__(self):
        e = Element()
        e.terms = {p: -c for p, c in self.terms.items()}
        return e

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return Element({p: c * v for p, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(Fraction(c))

    def __mul__(self, other):
        if not isinstance(other, Element):
            return self.scale(Fraction(other))
        out = {}
        for p, c in self.terms.items():
            for q, d in other.terms.items():
                r = p * q
                if r is not None:
                    out[r] = out.get(r, Fraction(0)) + c * d
        return Element(out)

    def paths(self):
        return list(self.terms)

    def items(self):
        return self.terms.items()

    def coeff(self, path):
        return self.terms.get(path, Fraction(0))

    def left(self, v):
        """``e_v * self``."""
        return Element({p: c for p, c in self.terms.items() if p.target == v})

    def right(self, v):
        """``self * e_v``."""
        return Element({p: c for p, c in self.terms.items() if p.source == v})

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda pc: (pc[0].length, pc[0].word, pc[0].source))

    def __str__(self):
        return format_element(self)

    __repr__ = __str__


def format_element(x):
    if not x.terms:
        return "0"
    out = ""
    for i, (p, c) in enumerate(x.sorted_items()):
        mag = abs(c)
        body = str(p) if mag == 1 else f"{mag}*{p}"
        if i == 0:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out


class Quiver:
    """Finite quiver with optionally graded arrows."""

    def __init__(self, vertices: Iterable[str], arrows: Iterable[Arrow]):
        labels = [str(v) for v in vertices]
        if len(set(labels)) != len(labels):
            raise QuiverError("duplicate vertex label")
        self.vertices = tuple(Vertex(i, lab) for i, lab in enumerate(labels))
        self.arrows = tuple(arrows)
        self._vindex = {v.label: v.id for v in self.vertices}
        self._arrows = {}
        for a in self.arrows:
            if a.name in self._arrows:
                raise QuiverError(f"duplicate arrow name {a.name!r}")
            for end in (a.source, a.target):
                if end not in self._vindex:
                    raise QuiverError(f"arrow {a.name!r} has dangling endpoint {end!r}")
            self._arrows[a.name] = a
        self._order = {a.name: i for i, a in enumerate(self.arrows)}

    @property
    def labels(self):
        return [v.label for v in self.vertices]

    def __contains__(self, name):
        return name in self._arrows

    def arrow(self, name):
        try:
            return self._arrows[name]
        except KeyError:
            raise QuiverError(f"unknown arrow {name!r}") from None

    def vertex_index(self, label):
        return self._vindex[label]

    def arrows_from(self, v):
        return [a for a in self.arrows if a.source == v]

    def arrows_to(self, v):
        return [a for a in self.arrows if a.target == v]

    def has_loops(self):
        return any(a.source == a.target for a in self.arrows)

    def arrow_rank(self, name):
        return self._order[name]

    def path(self, *names):
        """Path from arrow names written left to right (last applied first)."""
        if len(names) == 1 and isinstance(names[0], (list, tuple)):
            names = tuple(names[0])
        if not names:
            raise QuiverError("empty word; use lazy()")
        arrows = [self.arrow(n) for n in names]
        for left, right in zip(arrows, arrows[1:]):
            if left.source != right.target:
                raise QuiverError(f"arrows {left.name!r} and {right.name!r} are not composable")
        return Path(tuple(names), arrows[-1].source, arrows[0].target)

    def lazy(self, v):
        if v not in self._vindex:
            raise QuiverError(f"unknown vertex {v!r}")
        return lazy(v)

    def element(self, *names, coeff=1):
        return Element.of(self.path(*names), coeff)

    def idempotent(self, v):
        return Element.of(self.lazy(v))

    def one(self):
        return Element({lazy(v.label): 1 for v in self.vertices})

    def degree(self, p: Path):
        return sum(self._arrows[n].degree for n in p.word)

    def compose(self, p: Path, q: Path):
        """``p q`` (``q`` first) or ``None`` when the endpoints do not match."""
        for n in p.word + q.word:
            self.arrow(n)
        return p * q

    def sort_key(self, p: Path):
        return (p.length, tuple(self._order[n] for n in p.word), self._vindex[p.source])

    def paths_of_length(self, n):
        if n == 0:
            return [lazy(v.label) for v in self.vertices]
        out = []
        for p in self.paths_of_length(n - 1):
            if p.is_lazy:
                out.extend(Path((a.name,), a.source, a.target) for a in self.arrows_from(p.target))
            else:
                out.extend(Path((a.name,) + p.word, p.source, a.target) for a in self.arrows_from(p.target))
        return sorted(out, key=self.sort_key)

    def is_acyclic(self):
        indeg = {v.label: 0 for v in self.vertices}
        for a in self.arrows:
            indeg[a.target] += 1
        ready = [v for v, d in indeg.items() if d == 0]
        seen = 0
        while ready:
            v = ready.pop()
            seen += 1
            for a in self.arrows_from(v):
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    ready.append(a.target)
        return seen == len(self.vertices)

    def subquiver(self, vertices, arrows=None):
        keep = [v.label for v in self.vertices if v.label in set(vertices)]
        ks = set(keep)
        if arrows is None:
            arr = [a for a in self.arrows if a.source in ks and a.target in ks]
        else:
            arr = [a for a in self.arrows if a.name in set(arrows)]
        return Quiver(keep, arr)

    def __eq__(self, other):
        return (
            isinstance(other, Quiver)
            and self.labels == other.labels
            and self.arrows == other.arrows
        )

    def __repr__(self):
        return f"Quiver({self.labels}, {[a.name for a in self.arrows]})"


@dataclass(frozen=True)
class IceQuiver:
    quiver: Quiver
    frozen_vertices: frozenset = field(default_factory=frozenset)
    frozen_arrows: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "frozen_vertices", frozenset(self.frozen_vertices))
        object.__setattr__(self, "frozen_arrows", frozenset(self.frozen_arrows))
        labels = set(self.quiver.labels)
        for v in self.frozen_vertices:
            if v not in labels:
                raise QuiverError(f"frozen vertex {v!r} is not a vertex")
        for name in self.frozen_arrows:
            a = self.quiver.arrow(name)
            if a.source not in self.frozen_vertices or a.target not in self.frozen_vertices:
                raise QuiverError(f"frozen arrow endpoint: {name!r} has an unfrozen endpoint")

    @property
    def is_full(self):
        inside = {
            a.name
            for a in self.quiver.arrows
            if a.source in self.frozen_vertices and a.target in self.frozen_vertices
        }
        return inside == set(self.frozen_arrows)

    def is_frozen(self, v):
        return v in self.frozen_vertices

    @property
    def unfrozen_arrows(self):
        return [a for a in self.quiver.arrows if a.name not in self.frozen_arrows]

    @property
    def unfrozen_vertices(self):
        return [v.label for v in self.quiver.vertices if v.label not in self.frozen_vertices]

    def frozen_quiver(self):
        return Quiver(
            [v for v in self.quiver.labels if v in self.frozen_vertices],
            [a for a in self.quiver.arrows if a.name in self.frozen_arrows],
        )


def _rotations(word):
    return [word[i:] + word[:i] for i in range(len(word))]


def canonical_cycle(quiver: Quiver, word):
    """Lexicographically least rotation (by arrow name) of a cycle."""
    return quiver.path(min(_rotations(tuple(word))))


class Potential:
    """Linear combination of cycles, each stored by its canonical rotation."""

    def __init__(self, quiver: Quiver, terms=()):
        self.quiver = quiver
        acc = {}
        for coeff, cycle in terms:
            word = cycle.word if isinstance(cycle, Path) else tuple(cycle)
            if not word:
                raise QuiverError("potential term is not a cycle of positive length")
            p = quiver.path(word)
            if p.source != p.target:
                raise QuiverError(f"potential term {_join_word(word)} is not a cycle")
            key = canonical_cycle(quiver, word)
            acc[key] = acc.get(key, Fraction(0)) + Fraction(coeff)
        self.terms = tuple(
            (c, p) for p, c in sorted(acc.items(), key=lambda pc: pc[0].word) if c
        )

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Potential) and self.terms == other.terms

    def __iter__(self):
        return iter(self.terms)

    def __str__(self):
        return format_element(Element({p: c for c, p in self.terms}))

    def vertices_met(self, cycle: Path):
        return {self.quiver.arrow(n).source for n in cycle.word} | {
            self.quiver.arrow(n).target for n in cycle.word
        }


def cyclic_derivative(a: str, W: Potential):
    """Sum over decompositions ``p = u a v`` of ``v u``."""
    arrow = W.quiver.arrow(a)
    out = {}
    for coeff, p in W.terms:
        w = p.word
        for i, name in enumerate(w):
            if name != a:
                continue
            word = w[i + 1:] + w[:i]
            q = Path(word, arrow.target, arrow.source)
            out[q] = out.get(q, Fraction(0)) + coeff
    return Element(out)


@dataclass(frozen=True)
class Triple:
    coeff: Fraction
    left: Path
    middle: str
    right: Path


def delta(quiver: Quiver, a: str, x: Element):
    """Occurrence expansion ``sum left (x) a (x) right`` over each occurrence of ``a``."""
    arrow = quiver.arrow(a)
    out = []
    for p, c in x.sorted_items():
        for i, name in enumerate(p.word):
            if name != a:
                continue
            left = Path(p.word[:i], arrow.target, p.target) if i else lazy(arrow.target)
            rw = p.word[i + 1:]
            right = Path(rw, p.source, arrow.source) if rw else lazy(arrow.source)
            out.append(Triple(c, left, a, right))
    return out

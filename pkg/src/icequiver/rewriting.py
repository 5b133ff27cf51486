"""Two-sided noncommutative rewriting (Groebner completion) on path algebras.

Relations are turned into rules ``lead -> tail`` with respect to a
degree-lexicographic path order.  Completion resolves overlaps up to a
degree bound ``D``; the irreducible paths then span the quotient algebra.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import FinDimAlgebra
from .quiver import Element, Path, Quiver, lazy


class RewritingError(ValueError):
    pass


class PathOrder:
    """Deglex: shorter paths are smaller, ties broken left to right by arrow precedence."""

    def __init__(self, quiver: Quiver, precedence=None):
        names = list(precedence) if precedence is not None else [a.name for a in quiver.arrows]
        known = {a.name for a in quiver.arrows}
        if set(names) != known or len(names) != len(known):
            missing = sorted(known - set(names))
            extra = sorted(set(names) - known)
            raise RewritingError(f"arrow order must list every arrow once (missing {missing}, unknown {extra})")
        self.quiver = quiver
        self.precedence = names
        self.rank = {n: i for i, n in enumerate(names)}
        self._vindex = {v: i for i, v in enumerate(quiver.labels)}

    def key(self, p: Path):
        return (p.length, tuple(self.rank[n] for n in p.word), self._vindex[p.source])

    def lead(self, x: Element):
        return max(x.paths(), key=self.key)


@dataclass(frozen=True)
class JacobiFinite:
    dimension: int

    def __str__(self):
        return f"JacobiFinite(dimension={self.dimension})"


@dataclass(frozen=True)
class UnknownUpToDegree:
    D: int

    def __str__(self):
        return f"UnknownUpToDegree(D={self.D})"


@dataclass
class RewritingSystem:
    quiver: Quiver
    order: PathOrder
    D: int
    rules: dict = field(default_factory=dict)  # lead word -> (lead Path, tail Element)
    complete: bool = True

    def __post_init__(self):
        self._by_first = None

    def _index(self):
        if self._by_first is None:
            idx = {}
            for word, (lead, tail) in sorted(self.rules.items(), key=lambda kv: self.order.key(kv[1][0])):
                idx.setdefault(word[0], []).append((word, tail))
            self._by_first = idx
        return self._by_first

    def _touch(self):
        self._by_first = None

    @property
    def leads(self):
        return sorted((lead for lead, _ in self.rules.values()), key=self.order.key)

    def rule_list(self):
        return [(lead, self.rules[lead.word][1]) for lead in self.leads]

    def _match(self, word, leftmost=True):
        idx = self._index()
        positions = range(len(word)) if leftmost else range(len(word) - 1, -1, -1)
        for i in positions:
            for lw, tail in idx.get(word[i], ()):
                if word[i:i + len(lw)] == lw:
                    return i, lw, tail
        return None

    def is_irreducible(self, p: Path):
        return self._match(p.word) is None

    def reduce(self, x: Element, strategy="left"):
        """Normal form.  ``strategy`` picks the occurrence and the term to rewrite first."""
        leftmost = strategy == "left"
        work = dict(x.terms)
        done = {}
        key = self.order.key
        while work:
            p = max(work, key=key) if leftmost else min(work, key=key)
            c = work.pop(p)
            m = self._match(p.word, leftmost)
            if m is None:
                done[p] = done.get(p, Fraction(0)) + c
                continue
            i, lw, tail = m
            u, v = p.word[:i], p.word[i + len(lw):]
            for q, d in tail.items():
                r = Path(u + q.word + v, p.source, p.target)
                val = work.get(r, Fraction(0)) + c * d
                if val:
                    work[r] = val
                else:
                    work.pop(r, None)
        return Element(done)

    def normal_form(self, x, strategy="left"):
        return self.reduce(x, strategy)

    def format(self):
        lines = []
        for lead, tail in self.rule_list():
            lines.append(f"{lead} -> {tail}")
        return "\n".join(lines)


def _overlaps(f, g):
    """Lengths ``k`` with ``f[-k:] == g[:k]`` and both leftovers nonempty."""
    return [k for k in range(1, min(len(f), len(g))) if f[-k:] == g[:k]]


def _make_rule(order, f: Element):
    lead = order.lead(f)
    c = f.coeff(lead)
    tail = Element({p: -x / c for p, x in f.items() if p != lead})
    return lead, tail


def _check_relation(rel: Element):
    ends = {(p.source, p.target) for p in rel.paths()}
    if len(ends) > 1:
        raise RewritingError(f"relation {rel} mixes paths with different endpoints")


def complete_rewriting(relations, order: PathOrder, D=None):
    """Interreduced rewriting system whose overlaps of length <= D all resolve."""
    rels = [r for r in relations if r]
    for r in rels:
        _check_relation(r)
        if any(p.is_lazy for p in r.paths()) and all(p.is_lazy for p in r.paths()):
            raise RewritingError(f"relation {r} kills an idempotent; not supported")
    longest = max((p.length for r in rels for p in r.paths()), default=0)
    if D is None:
        D = max(12, 3 * longest)
    if D < 2 * longest:
        raise RewritingError(f"degree bound D={D} too small: need at least {2 * longest}")
    R = RewritingSystem(order.quiver, order, D)
    q = order.quiver
    pending = list(rels)

    def path_of(word, source, target):
        return Path(word, source, target) if word else lazy(source)

    while pending:
        f = R.reduce(pending.pop(0))
        if not f:
            continue
        lead, tail = _make_rule(order, f)
        if lead.is_lazy:
            raise RewritingError(f"relation {f} has an idempotent as leading term")
        # rules whose lead contains the new lead go back into the queue
        for word in list(R.rules):
            if any(word[i:i + lead.length] == lead.word for i in range(len(word) - lead.length + 1)):
                old_lead, old_tail = R.rules.pop(word)
                pending.append(Element.of(old_lead) - old_tail)
        R.rules[lead.word] = (lead, tail)
        R._touch()
        for _, (other, otail) in list(R.rules.items()):
            for first, ftail, second, stail in ((lead, tail, other, otail), (other, otail, lead, tail)):
                for k in _overlaps(first.word, second.word):
                    if first.length + second.length - k > D:
                        continue
                    U = first.word[:-k]
                    V = second.word[k:]
                    Vp = path_of(V, second.source, q.arrow(V[0]).target)
                    Up = path_of(U, q.arrow(U[-1]).source, first.target)
                    s = ftail * Element.of(Vp) - Element.of(Up) * stail
                    if s:
                        pending.append(s)
                if first is other:
                    break
    # fully reduce the tails
    for word, (lead, tail) in list(R.rules.items()):
        R.rules[word] = (lead, R.reduce(tail))
    R._touch()
    R.complete = all(
        a.length + b.length - k <= D
        for a in R.leads
        for b in R.leads
        for k in _overlaps(a.word, b.word)
    )
    return R


PATH_BUDGET = 500


def irreducible_paths(R: RewritingSystem, budget=PATH_BUDGET):
    """Irreducible paths by length, up to ``R.D``.  Returns ``(paths, closed, degree)``.

    ``degree`` is the last length that was fully enumerated.  Enumeration
    stops early, keeping only complete lengths, once more than ``budget``
    paths would be listed.
    """
    q = R.quiver
    leads = set(R.rules)
    level = [lazy(v) for v in q.labels]
    out = list(level)
    for n in range(1, R.D + 1):
        nxt = []
        for p in level:
            for a in q.arrows_from(p.target):
                word = (a.name,) + p.word
                if any(word[:m] in leads for m in range(1, len(word) + 1)):
                    continue
                nxt.append(Path(word, p.source, a.target))
            if budget is not None and len(out) + len(nxt) > budget:
                return out, False, n - 1
        if not nxt:
            return out, True, n - 1
        nxt.sort(key=R.order.key)
        out.extend(nxt)
        level = nxt
    return out, False, R.D


def quotient_basis(R: RewritingSystem, name=""):
    """The quotient algebra spanned by irreducible paths, with a finiteness certificate.

    When the irreducible paths do not run out below ``D`` (or exceed the path
    budget first) the returned algebra is the truncation by longer paths and
    the certificate is ``UnknownUpToDegree`` at the degree reached.
    """
    paths, closed, degree = irreducible_paths(R)
    limit = R.D if closed else degree
    paths.sort(key=R.order.key)
    index = {p: i for i, p in enumerate(paths)}
    table = {}
    for i, p in enumerate(paths):
        for j, r in enumerate(paths):
            if p.source != r.target:
                continue
            word = p.word + r.word
            if len(word) > limit:
                continue
            prod = R.reduce(Element.of(Path(word, r.source, p.target)))
            vec = {index[x]: c for x, c in prod.items() if x in index}
            if vec:
                table[(i, j)] = vec
    q = R.quiver
    A = FinDimAlgebra(
        q.labels,
        [str(p) for p in paths],
        [p.source for p in paths],
        [p.target for p in paths],
        table,
        {v: index[lazy(v)] for v in q.labels},
        name=name,
        grades=[p.length for p in paths],
    )
    A.words = paths
    A.rewriting = R
    A.quiver = q
    A.truncation = limit
    certificate = JacobiFinite(len(paths)) if closed and R.complete else UnknownUpToDegree(degree)
    return A, certificate


def element_to_vector(A: FinDimAlgebra, x: Element):
    """Coordinates of a path-algebra element in a rewriting-built algebra."""
    nf = A.rewriting.reduce(x)
    index = {p: i for i, p in enumerate(A.words)}
    out = {}
    for p, c in nf.items():
        if p not in index:
            if p.length > A.truncation:
                continue
            raise RewritingError(f"normal form {p} is not a basis path")
        out[index[p]] = c
    return out


def vector_to_element(A: FinDimAlgebra, vec):
    return Element({A.words[i]: c for i, c in vec.items()})

"""Reading and writing ``.iqp`` ice-quiver-with-potential files.

The format is UTF-8 JSON::

    {"vertices": ["1", "2", "3"],
     "arrows": [{"name": "a", "source": "2", "target": "1"}, ...],
     "frozen_vertices": ["1", "2"],
     "frozen_arrows": ["a"],
     "potential": [{"coeff": "1", "cycle": ["c", "b", "a"]}]}

A cycle array spells the path word: the first name is applied last.
"""

import json
from fractions import Fraction

from .quiver import Arrow, IceQuiver, Potential, Quiver, QuiverError

KEYS = ("vertices", "arrows", "frozen_vertices", "frozen_arrows", "potential")


class FormatError(ValueError):
    def __init__(self, message, line=None, path=None):
        self.message = message
        self.line = line
        self.path = path
        super().__init__(self.diagnostic())

    def diagnostic(self):
        where = self.path or "<input>"
        if self.line is not None:
            where += f":{self.line}"
        return f"{where}: {self.message}"


def _line_of(text, needle, nth=1):
    """Line of the ``nth`` mention of the JSON string ``needle``."""
    token = json.dumps(needle)
    seen = 0
    for i, line in enumerate(text.splitlines(), 1):
        seen += line.count(token)
        if seen >= nth:
            return i
    return None


def parse_rational(s):
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise ValueError(f"malformed rational {s!r}")
    text = str(s).strip().replace("−", "-")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"malformed rational {s!r}") from None


def parse_quiver(text, path=None):
    """Parse file contents into ``(IceQuiver, Potential)``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", exc.lineno, path) from None

    def fail(msg, needle=None, nth=1):
        line = _line_of(text, needle, nth) if needle is not None else None
        # structural problems with no better anchor point at the opening line
        raise FormatError(msg, line or 1, path)

    if not isinstance(data, dict):
        fail("top level must be an object")
    for key in data:
        if key not in KEYS:
            fail(f"unknown key {key!r}", key)
    for key in ("vertices", "arrows"):
        if key not in data:
            fail(f"missing key {key!r}")

    vertices = data["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        fail("vertices must be a list of strings", "vertices")
    seen = set()
    for v in vertices:
        if v in seen:
            fail(f"duplicate vertex {v!r}", v, 2)
        seen.add(v)

    arrows = []
    names = set()
    for entry in data["arrows"]:
        if not isinstance(entry, dict) or set(entry) != {"name", "source", "target"}:
            fail("each arrow needs exactly name, source, target", "arrows")
        name, s, t = entry["name"], entry["source"], entry["target"]
        if not all(isinstance(x, str) for x in (name, s, t)):
            fail("arrow fields must be strings", "arrows")
        if name in names:
            fail(f"duplicate arrow name {name!r}", name, 2)
        names.add(name)
        for end in (s, t):
            if end not in seen:
                fail(f"arrow {name!r} has dangling endpoint {end!r}", name)
        if s == t:
            fail(f"loop {name!r} at vertex {s!r} is not allowed", name)
        arrows.append(Arrow(name, s, t))
    quiver = Quiver(vertices, arrows)

    frozen_v = data.get("frozen_vertices", [])
    frozen_a = data.get("frozen_arrows", [])
    for v in frozen_v:
        if v not in seen:
            fail(f"frozen vertex {v!r} is not a vertex", "frozen_vertices")
    for name in frozen_a:
        if name not in names:
            fail(f"frozen arrow {name!r} is not an arrow", "frozen_arrows")
        a = quiver.arrow(name)
        if a.source not in frozen_v or a.target not in frozen_v:
            fail(f"frozen arrow endpoint: {name!r} has an unfrozen endpoint", "frozen_arrows")
    iq = IceQuiver(quiver, frozenset(frozen_v), frozenset(frozen_a))

    terms = []
    for entry in data.get("potential", []):
        if not isinstance(entry, dict) or set(entry) != {"coeff", "cycle"}:
            fail("each potential term needs exactly coeff and cycle", "potential")
        try:
            c = parse_rational(entry["coeff"])
        except ValueError as exc:
            fail(str(exc), entry["coeff"] if isinstance(entry["coeff"], str) else "potential")
        word = entry["cycle"]
        if not isinstance(word, list) or not word or not all(isinstance(n, str) for n in word):
            fail("cycle must be a nonempty list of arrow names", "cycle")
        try:
            p = quiver.path(word)
        except QuiverError as exc:
            fail(str(exc), "cycle")
        if p.source != p.target:
            fail(f"potential term {' '.join(word)} is not a cycle", "cycle")
        if c:
            terms.append((c, p))
    return iq, Potential(quiver, terms)


def read_quiver(path):
    with open(path, encoding="utf-8") as fh:
        return parse_quiver(fh.read(), path=str(path))


def serialize_quiver(iq: IceQuiver, W: Potential):
    q = iq.quiver
    data = {
        "vertices": q.labels,
        "arrows": [{"name": a.name, "source": a.source, "target": a.target} for a in q.arrows],
        "frozen_vertices": [v for v in q.labels if v in iq.frozen_vertices],
        "frozen_arrows": [a.name for a in q.arrows if a.name in iq.frozen_arrows],
        "potential": [{"coeff": _fmt(c), "cycle": list(p.word)} for c, p in W.terms],
    }
    return _dump(data)


def _dump(data):
    # one record per line; stable key order
    def one(x):
        return json.dumps(x, ensure_ascii=False)

    lines = ["{"]
    keys = list(data)
    for i, key in enumerate(keys):
        value = data[key]
        tail = "," if i < len(keys) - 1 else ""
        if value and isinstance(value[0], dict):
            lines.append(f'  "{key}": [')
            for j, item in enumerate(value):
                lines.append("    " + one(item) + ("," if j < len(value) - 1 else ""))
            lines.append("  ]" + tail)
        else:
            lines.append(f'  "{key}": {one(value)}{tail}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _fmt(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"

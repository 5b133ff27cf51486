"""Independent reference computations used only by the tests.

Nothing here touches the rewriting code: quotient dimensions come from
plain linear algebra on spans of paths.
"""

import sympy

from icequiver.quiver import Element


def paths_up_to(q, n):
    out = {0: [q.lazy(v) for v in q.labels]}
    for k in range(1, n + 1):
        out[k] = q.paths_of_length(k)
    return out


def quotient_dimension_by_span(q, relations, max_length):
    """``dim kQ/I`` in path lengths ``<= max_length`` for homogeneous relations.

    The ideal in length ``k`` is spanned by ``u r v`` over paths ``u, v`` and
    relations ``r``; its rank is subtracted from the number of paths of length ``k``.
    Returns ``(total, per_length)``.
    """
    by_len = paths_up_to(q, max_length)
    per = []
    for k in range(max_length + 1):
        index = {p: i for i, p in enumerate(by_len[k])}
        rows = []
        for r in relations:
            rl = next(iter(r.paths())).length
            for a in range(k - rl + 1):
                b = k - rl - a
                for u in by_len[a]:
                    for v in by_len[b]:
                        x = Element.of(u) * r * Element.of(v)
                        if x:
                            row = [0] * len(index)
                            for p, c in x.items():
                                row[index[p]] = c
                            rows.append(row)
        rank = sympy.Matrix(rows).rank() if rows else 0
        per.append(len(by_len[k]) - rank)
    return sum(per), per


def preprojective_dimension_a(n):
    return n * (n + 1) * (n + 2) // 6


def positive_roots(kind, n):
    return {"A": n * (n + 1) // 2, "D": n * (n - 1)}[kind]

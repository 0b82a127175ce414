"""Hypergraph isomorphism between restricted matrices, witnessed by row and
column permutations. Encoded as bipartite graph isomorphism restricted to
class-preserving maps and solved by deterministic backtracking."""

from __future__ import annotations

from dataclasses import dataclass

from .logicals import Subcomplex


@dataclass
class MonicSpan:
    """Permutations aligning subcomplex ``a`` onto subcomplex ``b``:
    a.boundary[i, j] == b.boundary[row_perm[i], col_perm[j]]."""

    row_perm: tuple
    col_perm: tuple


def _degree_signatures(adj, other_adj):
    """Per-vertex (degree, sorted multiset of neighbour degrees)."""
    degs = [len(a) for a in adj]
    other_degs = [len(a) for a in other_adj]
    return [
        (degs[v], tuple(sorted(other_degs[u] for u in adj[v])))
        for v in range(len(adj))
    ]


def find_monic_span(a: Subcomplex, b: Subcomplex) -> MonicSpan | None:
    """First hypergraph isomorphism under a fixed deterministic ordering,
    or None. Sound (the returned permutations satisfy the defining matrix
    equation) and complete (backtracking explores all class-preserving maps).
    """
    ra, ca = a.boundary.rows, a.boundary.cols
    rb, cb = b.boundary.rows, b.boundary.cols
    if (ra, ca) != (rb, cb):
        return None

    a_rows = [set(a.boundary.row(i).support()) for i in range(ra)]
    b_rows = [set(b.boundary.row(i).support()) for i in range(rb)]
    a_cols = [set() for _ in range(ca)]
    b_cols = [set() for _ in range(cb)]
    for i, sup in enumerate(a_rows):
        for j in sup:
            a_cols[j].add(i)
    for i, sup in enumerate(b_rows):
        for j in sup:
            b_cols[j].add(i)

    a_row_sig = _degree_signatures(a_rows, a_cols)
    b_row_sig = _degree_signatures(b_rows, b_cols)
    a_col_sig = _degree_signatures(a_cols, a_rows)
    b_col_sig = _degree_signatures(b_cols, b_rows)
    if sorted(a_row_sig) != sorted(b_row_sig) or sorted(a_col_sig) != sorted(b_col_sig):
        return None

    # Vertices: ('r', i) and ('c', j); assign a-vertices in an order that
    # prefers high degree and rare signatures, ties broken by index.
    order = sorted(
        [("r", i) for i in range(ra)] + [("c", j) for j in range(ca)],
        key=lambda v: (
            -(len(a_rows[v[1]]) if v[0] == "r" else len(a_cols[v[1]])),
            a_row_sig[v[1]] if v[0] == "r" else a_col_sig[v[1]],
            v[0],
            v[1],
        ),
    )

    row_map = [-1] * ra
    col_map = [-1] * ca
    row_used = [False] * rb
    col_used = [False] * cb

    def candidates(kind, idx):
        if kind == "r":
            sig = a_row_sig[idx]
            for t in range(rb):
                if row_used[t] or b_row_sig[t] != sig:
                    continue
                # adjacency with already-mapped columns must match exactly
                ok = True
                for j in range(ca):
                    if col_map[j] >= 0 and ((j in a_rows[idx]) != (col_map[j] in b_rows[t])):
                        ok = False
                        break
                if ok:
                    yield t
        else:
            sig = a_col_sig[idx]
            for t in range(cb):
                if col_used[t] or b_col_sig[t] != sig:
                    continue
                ok = True
                for i in range(ra):
                    if row_map[i] >= 0 and ((i in a_cols[idx]) != (row_map[i] in b_cols[t])):
                        ok = False
                        break
                if ok:
                    yield t

    def backtrack(pos):
        if pos == len(order):
            return True
        kind, idx = order[pos]
        for t in candidates(kind, idx):
            if kind == "r":
                row_map[idx] = t
                row_used[t] = True
            else:
                col_map[idx] = t
                col_used[t] = True
            if backtrack(pos + 1):
                return True
            if kind == "r":
                row_map[idx] = -1
                row_used[t] = False
            else:
                col_map[idx] = -1
                col_used[t] = False
        return False

    if not backtrack(0):
        return None
    return MonicSpan(row_perm=tuple(row_map), col_perm=tuple(col_map))

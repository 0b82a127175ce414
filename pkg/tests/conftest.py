"""Shared helpers: independent oracles and random code generation.

The oracles here are deliberately naive re-implementations (plain python
lists, no packing) so they stay independent of the library's elimination
code paths.
"""

from __future__ import annotations

import itertools
import random

import pytest

from qsurg.css import CssCode
from qsurg.gf2 import BitMatrix, BitVector, kernel_basis


def naive_echelon(rows):
    """Row-echelon elimination on lists of 0/1 ints. Returns (rows, rank)."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                rows[i] = [a ^ b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rows, rank


def naive_rank(m: BitMatrix) -> int:
    return naive_echelon(m.to_dense().tolist())[1]


def naive_in_span(vec, rows) -> bool:
    """Membership via rank comparison of the augmented system."""
    base = naive_echelon(rows)[1]
    return naive_echelon(list(rows) + [list(vec)])[1] == base


def enumerate_logicals(code: CssCode, basis: str):
    """Every nontrivial logical of the given basis, by kernel enumeration."""
    annihilator = code.px if basis == "Z" else code.pz
    stabilisers = code.pz if basis == "Z" else code.px
    kernel = kernel_basis(annihilator)
    stab_rows = stabilisers.to_dense().tolist()
    out = []
    for mask in range(1, 1 << len(kernel)):
        bits = 0
        m = mask
        i = 0
        while m:
            if m & 1:
                bits ^= kernel[i].bits
            m >>= 1
            i += 1
        v = BitVector(code.n, bits)
        if bits and not naive_in_span(v.to_list(), stab_rows):
            out.append(v)
    return out


def random_classical(rng: random.Random, max_rows=4, max_cols=6) -> BitMatrix:
    r = rng.randint(1, max_rows)
    c = rng.randint(1, max_cols)
    return BitMatrix.from_rows([[rng.randint(0, 1) for _ in range(c)] for _ in range(r)], c)


def random_css(rng: random.Random, n_min=4, n_max=14) -> CssCode:
    """Random CSS code: random pz, px drawn from the kernel's row space."""
    n = rng.randint(n_min, n_max)
    mz = rng.randint(1, max(1, n // 2))
    pz = BitMatrix.from_rows(
        [[rng.randint(0, 1) for _ in range(n)] for _ in range(mz)], n
    )
    dual = kernel_basis(pz)
    mx = rng.randint(1, max(1, len(dual)))
    rows = []
    for _ in range(mx):
        bits = 0
        for v in dual:
            if rng.random() < 0.5:
                bits ^= v.bits
        rows.append(bits)
    px = BitMatrix.from_row_ints(rows, n)
    return CssCode(pz, px)


def first_irreducible_logical(code: CssCode, basis: str = "Z", max_weight: int = 6):
    """Lightest-first search for an irreducible logical, or None."""
    from qsurg.gf2 import SpanReducer
    from qsurg.logicals import is_irreducible

    annihilator = code.px if basis == "Z" else code.pz
    stabilisers = code.pz if basis == "Z" else code.px
    cols = annihilator.col_ints()
    reducer = SpanReducer(stabilisers)
    for w in range(2, min(max_weight, code.n) + 1):
        for sup in itertools.combinations(range(code.n), w):
            syn = 0
            bits = 0
            for q in sup:
                syn ^= cols[q]
                bits |= 1 << q
            if syn == 0 and not reducer.contains_bits(bits):
                v = BitVector(code.n, bits)
                if is_irreducible(code, v, basis):
                    return v
    return None


def weight3_merge_logical(code: CssCode, basis: str):
    """First weight-3 logical whose restricted matrix has two checks."""
    from qsurg.gf2 import SpanReducer
    from qsurg.logicals import is_irreducible, restricted_matrix

    annihilator = code.px if basis == "Z" else code.pz
    stabilisers = code.pz if basis == "Z" else code.px
    cols = annihilator.col_ints()
    reducer = SpanReducer(stabilisers)
    for sup in itertools.combinations(range(code.n), 3):
        syn = cols[sup[0]] ^ cols[sup[1]] ^ cols[sup[2]]
        bits = (1 << sup[0]) | (1 << sup[1]) | (1 << sup[2])
        if syn == 0 and not reducer.contains_bits(bits):
            v = BitVector(code.n, bits)
            sub = restricted_matrix(code, v, basis)
            if sub.n_checks == 2 and is_irreducible(code, v, basis):
                return v
    return None


@pytest.fixture(scope="session")
def gross_code():
    from qsurg import families

    return families.gross()


@pytest.fixture(scope="session")
def gross_unprimed_z(gross_code):
    """A computed irreducible weight-12 Z logical with 18 adjacent X checks,
    supported on the first qubit block."""
    import numpy as np

    from qsurg.distance import information_set_trials
    from qsurg.gf2 import SpanReducer
    from qsurg.logicals import is_irreducible, restricted_matrix

    red = SpanReducer(gross_code.pz)
    mask = (1 << 72) - 1
    for _t, weights, words in information_set_trials(gross_code, "Z", trials=400, seed=0):
        for i in np.nonzero(weights == 12)[0]:
            bits = int.from_bytes(words[i].tobytes(), "little")
            if bits == 0 or red.contains_bits(bits) or bits & mask != bits:
                continue
            v = BitVector(144, bits)
            if restricted_matrix(gross_code, v, "Z").n_checks == 18 and is_irreducible(
                gross_code, v, "Z"
            ):
                return v
    raise AssertionError("no suitable gross-code logical found")

"""Code distance computation: exhaustive enumeration, incremental-weight
search, randomized information-set upper bounds, and dressed subsystem
distance."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .css import CssCode, k_of
from .errors import CapExceeded, NoLogicals, NotALogical, ShapeError
from .gf2 import BitMatrix, BitVector, SpanReducer, _eliminate, kernel_basis, vstack
from .logicals import is_logical

DEFAULT_TRIALS = 10_000
DEFAULT_SEED = 0


@dataclass
class DistanceReport:
    value: int
    basis: str
    method: str
    exact: bool
    witness: BitVector
    trials: int | None = None
    seed: int | None = None


def _sides(code: CssCode, basis: str):
    if basis == "Z":
        return code.px, code.pz
    if basis == "X":
        return code.pz, code.px
    raise ShapeError(f"basis must be 'Z' or 'X', got {basis!r}")


def _require_logicals(code: CssCode):
    if k_of(code) < 1:
        raise NoLogicals("code has k = 0")


def _colex_supports(n: int, w: int):
    """Weight-w supports in colexicographic order."""
    if w == 0:
        yield ()
        return
    for top in range(w - 1, n):
        for rest in itertools.combinations(range(top), w - 1):
            yield rest + (top,)


def distance_exact(code: CssCode, basis: str = "Z", max_weight: int | None = None) -> DistanceReport:
    """Minimum logical weight by incremental support search.

    Supports of each weight are enumerated in colexicographic order and
    tested for kernel membership by XOR of check columns; the first kernel
    hit outside the stabiliser span wins. ``max_weight`` caps the search
    and raises CapExceeded when nothing is found at or below it.
    """
    _require_logicals(code)
    annihilator, stabilisers = _sides(code, basis)
    cols = annihilator.col_ints()
    reducer = SpanReducer(stabilisers)
    cap = code.n if max_weight is None else min(max_weight, code.n)
    for w in range(1, cap + 1):
        for support in _colex_supports(code.n, w):
            syndrome = 0
            bits = 0
            for q in support:
                syndrome ^= cols[q]
                bits |= 1 << q
            if syndrome == 0 and not reducer.contains_bits(bits):
                return DistanceReport(
                    value=w,
                    basis=basis,
                    method="incremental",
                    exact=True,
                    witness=BitVector(code.n, bits),
                )
    raise CapExceeded(f"no {basis} logical of weight <= {cap}")


def distance_exhaustive(code: CssCode, basis: str = "Z") -> DistanceReport:
    """Minimum logical weight by enumerating the whole kernel.

    Exponential in the kernel dimension; useful as an independent check on
    small codes.
    """
    _require_logicals(code)
    annihilator, stabilisers = _sides(code, basis)
    kernel = kernel_basis(annihilator)
    reducer = SpanReducer(stabilisers)
    best_w = None
    best = None
    for mask in range(1, 1 << len(kernel)):
        bits = 0
        m = mask
        idx = 0
        while m:
            if m & 1:
                bits ^= kernel[idx].bits
            m >>= 1
            idx += 1
        w = bits.bit_count()
        if (best_w is None or w < best_w or (w == best_w and _lex_less(bits, best))) and not reducer.contains_bits(bits):
            best_w, best = w, bits
    if best_w is None:
        raise NoLogicals("kernel contains only stabilisers")
    return DistanceReport(
        value=best_w, basis=basis, method="exact_enum", exact=True, witness=BitVector(code.n, best)
    )


def _lex_less(a: int, b: int) -> bool:
    """Lexicographic order on bit vectors read from index 0."""
    if a == b:
        return False
    diff = (a ^ b) & -(a ^ b)
    return (a & diff) == 0


def _trial_rows(gen_words: np.ndarray, n: int, rng) -> np.ndarray:
    """One information-set pass: eliminate in a random column order.

    Equivalent to permuting columns, running RREF, and un-permuting: the
    resulting rows are the same vectors either way.
    """
    words = gen_words.copy()
    order = [int(c) for c in rng.permutation(n)]
    _eliminate(words, n, col_order=order)
    return words


def information_set_trials(code: CssCode, basis: str = "Z", trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED):
    """Yield (trial index, weight, bits) for every row produced by the
    randomized elimination; rows in the stabiliser span are filtered out
    lazily by the caller via the returned reducer."""
    annihilator, stabilisers = _sides(code, basis)
    gen = kernel_basis(annihilator)
    if not gen:
        return
    g = BitMatrix.from_bitvectors(gen, code.n)
    for t in range(trials):
        rng = np.random.default_rng((seed ^ t) & 0xFFFFFFFFFFFFFFFF)
        words = _trial_rows(g.words, code.n, rng)
        weights = np.bitwise_count(words).sum(axis=1)
        yield t, weights, words


def distance_upper_random(
    code: CssCode,
    basis: str = "Z",
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
) -> DistanceReport:
    """Randomized information-set upper bound on the distance.

    Each trial randomly reorders the columns of a kernel generator matrix,
    Gaussian-eliminates, and scans the resulting rows for light vectors
    outside the stabiliser span. The reported value is the weight of an
    actual logical, hence always >= the true distance. Deterministic for a
    fixed (seed, trials): trial t draws from the stream seed^t, and ties
    are broken toward the lexicographically smallest witness, so the
    reduction over trials is order-independent.
    """
    if trials < 1:
        raise ShapeError("trials must be at least 1")
    _require_logicals(code)
    annihilator, stabilisers = _sides(code, basis)
    reducer = SpanReducer(stabilisers)
    best_w = None
    best_bits = None
    for _t, weights, words in information_set_trials(code, basis, trials, seed):
        if best_w is not None:
            candidates = np.nonzero(weights <= best_w)[0]
        else:
            candidates = np.argsort(weights, kind="stable")
        for i in candidates:
            w = int(weights[i])
            if w == 0:
                continue
            bits = int.from_bytes(words[i].tobytes(), "little")
            if best_w is not None and w == best_w and not _lex_less(bits, best_bits):
                continue
            if reducer.contains_bits(bits):
                continue
            if best_w is None or w < best_w or (w == best_w and _lex_less(bits, best_bits)):
                best_w, best_bits = w, bits
    if best_w is None:
        raise NoLogicals("no logical found in any trial; is k = 0?")
    return DistanceReport(
        value=best_w,
        basis=basis,
        method="random_is",
        exact=False,
        witness=BitVector(code.n, best_bits),
        trials=trials,
        seed=seed,
    )


@dataclass
class GaugeSpec:
    """Spanning sets of the gauge logicals, one list per basis."""

    gauge_z: list = None
    gauge_x: list = None

    def __post_init__(self):
        self.gauge_z = list(self.gauge_z or [])
        self.gauge_x = list(self.gauge_x or [])


def _dressed_code(code: CssCode, gauge: GaugeSpec, basis: str) -> CssCode:
    """Append the gauge logicals of one type to the matching check matrix."""
    if basis == "Z":
        if not gauge.gauge_z:
            return code
        extra = BitMatrix.from_bitvectors(gauge.gauge_z, code.n)
        return CssCode(vstack([code.pz, extra]), code.px)
    if not gauge.gauge_x:
        return code
    extra = BitMatrix.from_bitvectors(gauge.gauge_x, code.n)
    return CssCode(code.pz, vstack([code.px, extra]))


def subsystem_distance(
    code: CssCode,
    gauge: GaugeSpec,
    basis: str = "min",
    method: str = "incremental",
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    max_weight: int | None = None,
) -> DistanceReport:
    """Dressed distance with the given logicals relegated to gauge qubits.

    The Z side is the distance of (pz + gauge_z, px); the X side dually;
    ``basis='min'`` reports the smaller of the two.
    """
    for v in gauge.gauge_z:
        if not is_logical(code, v, "Z"):
            raise NotALogical("gauge_z entry is not a Z logical")
    for v in gauge.gauge_x:
        if not is_logical(code, v, "X"):
            raise NotALogical("gauge_x entry is not an X logical")

    def one_side(side):
        dressed = _dressed_code(code, gauge, side)
        if method == "random_is":
            return distance_upper_random(dressed, side, trials=trials, seed=seed)
        if method == "exact_enum":
            return distance_exhaustive(dressed, side)
        return distance_exact(dressed, side, max_weight=max_weight)

    if basis in ("Z", "X"):
        return one_side(basis)
    if basis != "min":
        raise ShapeError("basis must be 'Z', 'X' or 'min'")
    rz = one_side("Z")
    rx = one_side("X")
    return rz if rz.value <= rx.value else rx


def find_low_weight_logicals(
    code: CssCode,
    basis: str = "Z",
    weight: int | None = None,
    count: int = 1,
    seed: int = DEFAULT_SEED,
    max_trials: int = 2000,
) -> list:
    """Collect distinct logicals of at most the target weight via
    information-set trials; used to seed surgery on large codes."""
    _require_logicals(code)
    _, stabilisers = _sides(code, basis)
    reducer = SpanReducer(stabilisers)
    found = {}
    for _t, weights, words in information_set_trials(code, basis, max_trials, seed):
        order = np.nonzero(weights <= weight)[0] if weight is not None else np.argsort(weights)
        for i in order:
            if not int(weights[i]):
                continue
            bits = int.from_bytes(words[i].tobytes(), "little")
            if bits in found or reducer.contains_bits(bits):
                continue
            found[bits] = BitVector(code.n, bits)
            if len(found) >= count:
                return list(found.values())
    return list(found.values())

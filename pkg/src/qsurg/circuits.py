"""Z-preserving code map components as circuits over CNOT, plus-state
preparation, and zero-effect projection, verified as GF(2) maps on X-basis
labels."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ShapeError
from .gf2 import BitMatrix


@dataclass(frozen=True)
class CNOT:
    control: int
    target: int


@dataclass(frozen=True)
class PrepPlus:
    wire: int


@dataclass(frozen=True)
class ProjZero:
    wire: int


@dataclass(frozen=True)
class Permute:
    perm: tuple  # new wire i carries old wire perm[i]


@dataclass
class Circuit:
    in_wires: int
    out_wires: int
    gates: list


def evaluate(circuit: Circuit) -> BitMatrix:
    """The out x in GF(2) matrix of the circuit on X-basis labels.

    CNOT adds the control row into the target row, PrepPlus inserts a zero
    row, ProjZero deletes a row, Permute reorders rows.
    """
    rows = [1 << j for j in range(circuit.in_wires)]
    wires = circuit.in_wires
    for gate in circuit.gates:
        if isinstance(gate, CNOT):
            if not (0 <= gate.control < wires and 0 <= gate.target < wires):
                raise ShapeError(f"CNOT wires out of range: {gate}")
            if gate.control == gate.target:
                raise ShapeError("CNOT control equals target")
            rows[gate.target] ^= rows[gate.control]
        elif isinstance(gate, PrepPlus):
            if not 0 <= gate.wire <= wires:
                raise ShapeError(f"PrepPlus wire out of range: {gate}")
            rows.insert(gate.wire, 0)
            wires += 1
        elif isinstance(gate, ProjZero):
            if not 0 <= gate.wire < wires:
                raise ShapeError(f"ProjZero wire out of range: {gate}")
            rows.pop(gate.wire)
            wires -= 1
        elif isinstance(gate, Permute):
            if sorted(gate.perm) != list(range(wires)):
                raise ShapeError("Permute is not a permutation of the current wires")
            rows = [rows[p] for p in gate.perm]
        else:
            raise ShapeError(f"unknown gate {gate!r}")
    if wires != circuit.out_wires:
        raise ShapeError(f"circuit ends on {wires} wires, declared {circuit.out_wires}")
    return BitMatrix.from_row_ints(rows, circuit.in_wires)


def synthesize(f1: BitMatrix) -> Circuit:
    """A circuit whose X-basis action is exactly ``f1``.

    Row elimination contributes CNOTs on the output side, column
    elimination CNOTs on the input side; the residue is a partial
    permutation realized with ProjZero (empty columns), Permute, and
    PrepPlus (empty rows).
    """
    rows, cols = f1.rows, f1.cols
    work = [f1.row_int(i) for i in range(rows)]
    out_side = []  # CNOTs applied after the permutation stage, in order

    # Row reduction: adding row s into row t is CNOT(s, t) on the output side,
    # applied in reverse order after the residue.
    r = 0
    pivots = []
    for c in range(cols):
        p = next((i for i in range(r, rows) if (work[i] >> c) & 1), None)
        if p is None:
            continue
        if p != r:
            # realize a swap as three CNOTs
            for ctl, tgt in ((p, r), (r, p), (p, r)):
                work[tgt] ^= work[ctl]
                out_side.append(CNOT(ctl, tgt))
        for i in range(rows):
            if i != r and (work[i] >> c) & 1:
                work[i] ^= work[r]
                out_side.append(CNOT(r, i))
        pivots.append(c)
        r += 1
        if r == rows:
            break

    # Column reduction: in RREF a non-pivot column has support only on pivot
    # rows, and pivot column pivots[i] is e_i, so adding it into column d
    # (input-side CNOT(d, pivots[i])) clears the (i, d) entry alone.
    in_side = []
    pivot_set = set(pivots)
    for d in range(cols):
        if d in pivot_set:
            continue
        for i, c in enumerate(pivots):
            if (work[i] >> d) & 1:
                work[i] ^= 1 << d
                in_side.append(CNOT(d, c))

    # Residue: work[i] has a single 1 at pivots[i] for i < len(pivots).
    gates = list(in_side)
    pivot_cols = list(pivots)
    empty_cols = [c for c in range(cols) if c not in pivot_set]
    # drop unused inputs (highest first so earlier indices stay valid)
    for c in sorted(empty_cols, reverse=True):
        gates.append(ProjZero(c))
    # the surviving wires are pivot columns in ascending order; route pivot
    # column pivots[i] to output position i
    ranks = {c: i for i, c in enumerate(sorted(pivot_cols))}
    perm = tuple(ranks[c] for c in pivot_cols)
    if perm != tuple(range(len(pivot_cols))):
        gates.append(Permute(perm))
    # append fresh |+> wires for empty rows (rows beyond the pivot count)
    for i in range(len(pivot_cols), rows):
        gates.append(PrepPlus(i))
    gates.extend(reversed(out_side))
    return Circuit(in_wires=cols, out_wires=rows, gates=gates)


def dump(circuit: Circuit) -> str:
    """One gate per line: CNOT c t / PREP+ w / PROJ0 w / PERM i0 i1 ..."""
    lines = []
    for g in circuit.gates:
        if isinstance(g, CNOT):
            lines.append(f"CNOT {g.control} {g.target}")
        elif isinstance(g, PrepPlus):
            lines.append(f"PREP+ {g.wire}")
        elif isinstance(g, ProjZero):
            lines.append(f"PROJ0 {g.wire}")
        else:
            lines.append("PERM " + " ".join(str(p) for p in g.perm))
    return "\n".join(lines) + ("\n" if lines else "")

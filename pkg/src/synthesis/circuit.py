"""
Layered circuit representation for H / CX / CZ / X / Z circuits.

Wires are 0-based: qubit k of the lattice or graph (1-based) lives on wire
k - 1. A circuit is a sequence of layers; no wire appears twice in a layer,
so depth is simply the number of layers.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from src.errors import LayerConflictError, ShapeError


class GateKind(str, Enum):
    H = 'h'
    CX = 'cx'
    CZ = 'cz'
    X = 'x'
    Z = 'z'

    @property
    def arity(self) -> int:
        return 2 if self in (GateKind.CX, GateKind.CZ) else 1


@dataclass(frozen=True)
class Gate:
    kind: GateKind
    qubits: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'kind', GateKind(self.kind))
        object.__setattr__(self, 'qubits', tuple(int(q) for q in self.qubits))
        if len(self.qubits) != self.kind.arity:
            raise ShapeError(f"{self.kind.value} takes {self.kind.arity} qubits, got {self.qubits}")
        if len(set(self.qubits)) != len(self.qubits):
            raise ShapeError(f"{self.kind.value} on repeated qubit {self.qubits}")
        if min(self.qubits) < 0:
            raise ShapeError(f"negative wire in {self.qubits}")

    @classmethod
    def h(cls, q: int) -> 'Gate':
        return cls(GateKind.H, (q,))

    @classmethod
    def cx(cls, control: int, target: int) -> 'Gate':
        return cls(GateKind.CX, (control, target))

    @classmethod
    def cz(cls, a: int, b: int) -> 'Gate':
        return cls(GateKind.CZ, (a, b))

    def to_dict(self) -> Dict:
        return {'kind': self.kind.value, 'qubits': list(self.qubits)}

    def qasm(self) -> str:
        return f"{self.kind.value} " + ','.join(f"q[{q}]" for q in self.qubits) + ';'


Layer = Tuple[Gate, ...]


def _touched(layer: Iterable[Gate]) -> Set[int]:
    seen: Set[int] = set()
    for gate in layer:
        for q in gate.qubits:
            if q in seen:
                raise LayerConflictError(f"wire {q} used twice in one layer")
            seen.add(q)
    return seen


@dataclass(frozen=True)
class DepthReport:
    total: int
    non_h: int
    layers_by_kind: Dict[str, int] = field(default_factory=dict)
    gates_by_kind: Dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> Dict:
        return {
            'total': self.total,
            'non_h': self.non_h,
            'layers_by_kind': dict(self.layers_by_kind),
            'gates_by_kind': dict(self.gates_by_kind),
        }


@dataclass(frozen=True)
class Circuit:
    n_qubits: int
    layers: Tuple[Layer, ...] = ()

    def __post_init__(self):
        layers = tuple(tuple(layer) for layer in self.layers if layer)
        object.__setattr__(self, 'layers', layers)
        for k, layer in enumerate(layers, start=1):
            wires = _touched(layer)
            if wires and max(wires) >= self.n_qubits:
                raise ShapeError(f"layer {k} uses wire {max(wires)} on a {self.n_qubits}-qubit circuit")

    @classmethod
    def hadamard_layer(cls, n_qubits: int, wires: Optional[Iterable[int]] = None) -> 'Circuit':
        wires = range(n_qubits) if wires is None else sorted(wires)
        return cls(n_qubits, (tuple(Gate.h(q) for q in wires),))

    @property
    def depth(self) -> int:
        return len(self.layers)

    def gates(self) -> List[Gate]:
        return [gate for layer in self.layers for gate in layer]

    def gate_count(self, kind: Optional[GateKind] = None) -> int:
        return sum(1 for g in self.gates() if kind is None or g.kind == kind)

    def depth_report(self) -> DepthReport:
        layers_by_kind: Dict[str, int] = {}
        gates_by_kind: Dict[str, int] = {}
        non_h = 0
        for layer in self.layers:
            kinds = {g.kind.value for g in layer}
            if kinds != {GateKind.H.value}:
                non_h += 1
            for kind in kinds:
                layers_by_kind[kind] = layers_by_kind.get(kind, 0) + 1
            for g in layer:
                gates_by_kind[g.kind.value] = gates_by_kind.get(g.kind.value, 0) + 1
        return DepthReport(self.depth, non_h, dict(sorted(layers_by_kind.items())), dict(sorted(gates_by_kind.items())))

    # -- combinators ----------------------------------------------------------

    def _check_width(self, other: 'Circuit') -> None:
        if other.n_qubits != self.n_qubits:
            raise ShapeError(f"circuit widths differ: {self.n_qubits} vs {other.n_qubits}")

    def compose(self, other: 'Circuit') -> 'Circuit':
        """self followed by other."""
        self._check_width(other)
        return Circuit(self.n_qubits, self.layers + other.layers)

    def parallel(self, other: 'Circuit') -> 'Circuit':
        """Merge layer k of both circuits; the two must act on disjoint wires."""
        self._check_width(other)
        depth = max(self.depth, other.depth)
        merged = []
        for k in range(depth):
            left = self.layers[k] if k < self.depth else ()
            right = other.layers[k] if k < other.depth else ()
            merged.append(left + right)
        return Circuit(self.n_qubits, tuple(merged))

    def without(self, kind: GateKind) -> 'Circuit':
        """Drop every gate of one kind; layers left empty disappear."""
        return Circuit(self.n_qubits, tuple(tuple(g for g in layer if g.kind != kind) for layer in self.layers))

    def inverse(self) -> 'Circuit':
        """Every supported gate is self-inverse, so reversing the layers inverts the circuit."""
        return Circuit(self.n_qubits, tuple(reversed(self.layers)))

    def remapped(self, wire_map: Mapping[int, int], n_qubits: int) -> 'Circuit':
        """Move wire w to wire_map[w] on a circuit of n_qubits wires."""
        return Circuit(
            n_qubits,
            tuple(tuple(Gate(g.kind, tuple(wire_map[q] for q in g.qubits)) for g in layer) for layer in self.layers),
        )

    def apply_classical(self, bits: Sequence[int]) -> List[int]:
        """Track a basis state through X / CX gates; Z and CZ only add phases."""
        state = [int(b) & 1 for b in bits]
        if len(state) != self.n_qubits:
            raise ShapeError(f"{len(state)} bits for a {self.n_qubits}-qubit circuit")
        for layer in self.layers:
            for g in layer:
                if g.kind == GateKind.H:
                    raise ValueError('H does not map basis states to basis states')
                if g.kind == GateKind.X:
                    state[g.qubits[0]] ^= 1
                elif g.kind == GateKind.CX:
                    state[g.qubits[1]] ^= state[g.qubits[0]]
        return state

    # -- serialization --------------------------------------------------------

    def to_dict(self) -> Dict:
        return {'n_qubits': self.n_qubits, 'layers': [[g.to_dict() for g in layer] for layer in self.layers]}

    @classmethod
    def from_dict(cls, data: Mapping) -> 'Circuit':
        return cls(
            data['n_qubits'],
            tuple(tuple(Gate(GateKind(g['kind']), tuple(g['qubits'])) for g in layer) for layer in data['layers']),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + '\n'

    def to_qasm(self) -> str:
        """OpenQASM 2 text with one commented stanza per layer."""
        lines = ['OPENQASM 2.0;', 'include "qelib1.inc";', f"qreg q[{self.n_qubits}];"]
        for k, layer in enumerate(self.layers, start=1):
            lines.append('')
            lines.append(f"// layer {k}")
            lines.extend(g.qasm() for g in layer)
        return '\n'.join(lines) + '\n'


def circuit_depth(c: Circuit) -> DepthReport:
    return c.depth_report()

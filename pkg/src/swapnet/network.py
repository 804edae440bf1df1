"""Cyclic CNOT networks over d-level systems and their verification.

Conventions used throughout:

* A CNOT gate with control c and target t maps basis labels by
  ``x[t] <- (x[t] + x[c]) mod d`` and leaves everything else alone.
* Basis indices are big-endian over system digits:
  ``|x0 x1 ... x_{n-1}>  <->  sum x_k * d^(n-1-k)``.
* Operators built from such gates permute basis states, so they are
  represented as index permutations; dense 0/1 matrices exist only as a
  rendering for eyeballing.
* ``LinearMapZd`` describes the same action on the exponent vector:
  after the circuit, system i carries ``sum_j M[i][j] * x[j] mod d``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import cycles
from .errors import SizeBudgetError, SwapnetError
from .seqcore import _check_modulus

OPERATOR_SIZE_LIMIT = 10 ** 6
NORM_TOL = 1e-12


@dataclass(frozen=True)
class Gate:
    """One generalized CNOT: adds the control digit into the target digit."""

    control: int
    target: int

    def __post_init__(self):
        if self.control == self.target:
            raise ValueError("control and target must differ")
        if self.control < 0 or self.target < 0:
            raise ValueError("system indices must be >= 0")


@dataclass(frozen=True)
class Circuit:
    """Ordered CNOT gates over ``n_systems`` systems of dimension ``d``."""

    d: int
    n_systems: int
    gates: tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self):
        _check_modulus(self.d)
        if self.n_systems < 1:
            raise ValueError("need at least one system")
        for g in self.gates:
            if g.control >= self.n_systems or g.target >= self.n_systems:
                raise ValueError(f"gate {g} outside {self.n_systems} systems")

    def __len__(self) -> int:
        return len(self.gates)


def build_cyclic_network(d: int, gate_count: int) -> Circuit:
    """The periodic schedule: gate k controls system k mod d, targets k+1 mod d."""
    _check_modulus(d)
    if gate_count < 0:
        raise ValueError("gate_count must be >= 0")
    gates = tuple(Gate(k % d, (k + 1) % d) for k in range(gate_count))
    return Circuit(d, d, gates)


@dataclass(frozen=True)
class LinearMapZd:
    """Action of a circuit on the exponent vector, as a matrix over Z_d."""

    d: int
    matrix: np.ndarray

    def apply(self, exponents) -> tuple[int, ...]:
        vec = np.asarray(exponents, dtype=np.int64)
        return tuple(int(v) for v in (self.matrix @ vec) % self.d)

    def permutation(self) -> tuple[int, ...] | None:
        """sigma with output system i holding input digit sigma(i), if any.

        None when the matrix mixes digits instead of permuting them.
        """
        n = self.matrix.shape[0]
        sigma = []
        for i in range(n):
            row = self.matrix[i]
            ones = np.flatnonzero(row == 1)
            if len(ones) != 1 or row.sum() != 1:
                return None
            sigma.append(int(ones[0]))
        if sorted(sigma) != list(range(n)):
            return None
        return tuple(sigma)

    def cyclic_shift(self) -> int | None:
        """s such that output system i holds input digit (i - s) mod n, if any."""
        sigma = self.permutation()
        if sigma is None:
            return None
        n = len(sigma)
        s = (0 - sigma[0]) % n
        if all(sigma[i] == (i - s) % n for i in range(n)):
            return s
        return None


def linear_map(circuit: Circuit) -> LinearMapZd:
    """Compose all gates into one matrix over Z_d (identity if empty)."""
    n = circuit.n_systems
    mat = np.eye(n, dtype=np.int64)
    for g in circuit.gates:
        mat[g.target] = (mat[g.target] + mat[g.control]) % circuit.d
    return LinearMapZd(circuit.d, mat)


@dataclass(frozen=True)
class TraceArray:
    """Per-system coefficient rows of the network over time.

    Column at time t (t runs from -(d-1) to T) gives each system's
    current digit as a linear form in the initial digits: dotting the
    column with the initial-digit vector yields that system's state.
    Columns at t <= 0 are the unit vectors of the initial preparation;
    later columns obey column(t) = column(t-1) + column(t-d) mod d.
    """

    d: int
    columns: tuple[tuple[int, ...], ...]

    @property
    def t_start(self) -> int:
        return -(self.d - 1)

    @property
    def t_end(self) -> int:
        return self.t_start + len(self.columns) - 1

    def column(self, t: int) -> tuple[int, ...]:
        return self.columns[t - self.t_start]

    def row(self, i: int) -> list[int]:
        """Coefficient sequence of initial digit i across all columns."""
        return [col[i] for col in self.columns]

    def header(self, exponents=None) -> list[int]:
        """Scalar sequence obtained by dotting columns with initial digits.

        With the all-ones digit vector (the default) this is exactly the
        binomial summation sequence mod d, starting at its term 0.
        """
        e = tuple(exponents) if exponents is not None else (1,) * self.d
        return [sum(ei * ci for ei, ci in zip(e, col)) % self.d for col in self.columns]


def trace_array(d: int, T: int) -> TraceArray:
    """Columns for t = -(d-1) .. T of the dimension-d construction."""
    _check_modulus(d)
    if T < 0:
        raise ValueError("T must be >= 0")
    cols: list[tuple[int, ...]] = []
    for t in range(-(d - 1), 1):
        unit = [0] * d
        unit[t % d] = 1
        cols.append(tuple(unit))
    for t in range(1, T + 1):
        prev, old = cols[-1], cols[-d]
        cols.append(tuple((a + b) % d for a, b in zip(prev, old)))
    return TraceArray(d, tuple(cols))


class StateVector:
    """Complex amplitudes over the d^n computational basis, unit norm."""

    __slots__ = ("d", "n", "amplitudes")

    def __init__(self, d: int, n: int, amplitudes):
        _check_modulus(d)
        if n < 1:
            raise ValueError("need at least one system")
        amps = np.asarray(amplitudes, dtype=np.complex128)
        if amps.shape != (d ** n,):
            raise ValueError(f"expected {d ** n} amplitudes, got {amps.shape}")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"state norm {norm} deviates from 1 beyond {NORM_TOL}")
        self.d = d
        self.n = n
        self.amplitudes = amps

    @classmethod
    def basis(cls, d: int, n: int, digits) -> "StateVector":
        """Computational basis state from a digit sequence or string."""
        if isinstance(digits, str):
            digits = [int(ch) for ch in digits]
        digits = list(digits)
        if len(digits) != n or any(not 0 <= x < d for x in digits):
            raise ValueError(f"need {n} digits in [0, {d})")
        amps = np.zeros(d ** n, dtype=np.complex128)
        amps[index_of_digits(d, digits)] = 1.0
        return cls(d, n, amps)

    @classmethod
    def product(cls, d: int, factors) -> "StateVector":
        """Tensor product of per-system amplitude vectors (each unit norm)."""
        parts = [np.asarray(f, dtype=np.complex128) for f in factors]
        amps = np.ones(1, dtype=np.complex128)
        for f in parts:
            amps = np.kron(amps, f)
        return cls(d, len(parts), amps)

    @classmethod
    def random(cls, d: int, n: int, seed: int) -> "StateVector":
        """Reproducible Haar-ish random state from a seed."""
        rng = np.random.default_rng(seed)
        amps = rng.standard_normal(d ** n) + 1j * rng.standard_normal(d ** n)
        return cls(d, n, amps / np.linalg.norm(amps))

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def random_qudit(d: int, rng) -> np.ndarray:
    """One random unit vector in C^d drawn from the given generator."""
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return v / np.linalg.norm(v)


def index_of_digits(d: int, digits) -> int:
    idx = 0
    for x in digits:
        idx = idx * d + x
    return idx


def digits_of_index(d: int, n: int, index: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        out.append(index % d)
        index //= d
    return tuple(reversed(out))


def _gate_map(d: int, n: int, gate: Gate) -> np.ndarray:
    """Forward basis map g with g[i] = index of the image of basis i."""
    idx = np.arange(d ** n, dtype=np.int64)
    wc = d ** (n - 1 - gate.control)
    wt = d ** (n - 1 - gate.target)
    xc = (idx // wc) % d
    xt = (idx // wt) % d
    return idx + ((xt + xc) % d - xt) * wt


def simulate(circuit: Circuit, state: StateVector) -> StateVector:
    """Run the circuit gate by gate; each gate permutes basis amplitudes."""
    if state.d != circuit.d or state.n != circuit.n_systems:
        raise ValueError(
            f"state is {state.n} systems of dimension {state.d}, "
            f"circuit wants {circuit.n_systems} of {circuit.d}"
        )
    amps = state.amplitudes
    for g in circuit.gates:
        fwd = _gate_map(circuit.d, circuit.n_systems, g)
        out = np.empty_like(amps)
        out[fwd] = amps
        amps = out
    return StateVector(circuit.d, circuit.n_systems, amps)


def full_operator(circuit: Circuit) -> np.ndarray:
    """The whole circuit as one forward basis permutation.

    ``perm[i]`` is the basis index that ``|i>`` is sent to.  Refuses
    sizes beyond the in-memory budget of 10^6 basis states.
    """
    size = circuit.d ** circuit.n_systems
    if size > OPERATOR_SIZE_LIMIT:
        raise SizeBudgetError(
            f"operator over {size} basis states exceeds the {OPERATOR_SIZE_LIMIT} limit"
        )
    perm = np.arange(size, dtype=np.int64)
    for g in circuit.gates:
        fwd = _gate_map(circuit.d, circuit.n_systems, g)
        perm = fwd[perm]
    return perm


def permutation_matrix_text(perm: np.ndarray) -> str:
    """Rows of space-separated 0/1 digits for the permutation operator.

    Row r has a single 1 in column c whenever basis c maps to basis r;
    this is the dense unitary as it would be printed for inspection.
    """
    size = len(perm)
    lines = []
    for r in range(size):
        row = ["0"] * size
        row[int(np.flatnonzero(perm == r)[0])] = "1"
        lines.append(" ".join(row))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SwapVerdict:
    """Classification of what one full cycle of the network does.

    kind is one of "swap" (cyclic shift by -1, the full SWAP),
    "grouped" (prime-power grouped cyclic swaps), "identity", "other".
    ``permutation[i]`` is where the state starting on system i ends up.
    """

    kind: str
    shift: int | None
    permutation: tuple[int, ...] | None
    gate_count: int

    def describe(self) -> str:
        if self.kind == "swap":
            return f"SWAP: cyclic shift by -1, {self.gate_count} gates"
        if self.kind == "identity":
            return f"IDENTITY: shift 0, {self.gate_count} gates"
        if self.kind == "grouped":
            return f"GROUPED: shift {self.shift}, {self.gate_count} gates"
        return f"OTHER: permutation {list(self.permutation or ())}, {self.gate_count} gates"


def verify_swap(d: int, budget: int | None = None) -> SwapVerdict:
    """Build one full cycle of the network and classify its linear map."""
    report = cycles.cycle_length(d, budget)
    circuit = build_cyclic_network(d, report.length)
    mapping = linear_map(circuit)
    shift = mapping.cyclic_shift()
    if shift is None:
        sigma = mapping.permutation()
        dest = None
        if sigma is not None:
            dest = tuple(sigma.index(i) for i in range(d))
        return SwapVerdict("other", None, dest, report.length)
    dest = tuple((i + shift) % d for i in range(d))
    if shift == 0:
        kind = "identity"
    elif shift == d - 1:
        kind = "swap"
    else:
        f = cycles.Factorization.of(d)
        kind = "other"
        if f.is_prime_power:
            p, m = f.factors[0]
            if m > 1 and shift == (d - p ** (m - 1)) % d:
                kind = "grouped"
    return SwapVerdict(kind, shift, dest, report.length)


def export_circuit(circuit: Circuit, format: str = "gatelist") -> str:
    """Serialize deterministically as JSON or as a line-per-gate list."""
    if format == "json":
        import json

        doc = {
            "d": circuit.d,
            "systems": circuit.n_systems,
            "gates": [[g.control, g.target] for g in circuit.gates],
        }
        return json.dumps(doc, separators=(",", ":"))
    if format == "gatelist":
        lines = [f"DIM {circuit.d} SYSTEMS {circuit.n_systems}"]
        lines.extend(f"CNOT {g.control} {g.target}" for g in circuit.gates)
        return "\n".join(lines)
    raise ValueError(f"unknown format {format!r}")


def parse_circuit(text: str) -> Circuit:
    """Read back either serialization produced by export_circuit."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        import json

        doc = json.loads(text)
        gates = tuple(Gate(c, t) for c, t in doc["gates"])
        return Circuit(doc["d"], doc["systems"], gates)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("DIM "):
        raise SwapnetError("gatelist must start with a 'DIM <d> SYSTEMS <n>' header")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "DIM" or head[2] != "SYSTEMS":
        raise SwapnetError(f"malformed header: {lines[0]!r}")
    d, n = int(head[1]), int(head[3])
    gates = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3 or parts[0] != "CNOT":
            raise SwapnetError(f"malformed gate line: {ln!r}")
        gates.append(Gate(int(parts[1]), int(parts[2])))
    return Circuit(d, n, tuple(gates))

"""Cycle lengths of the sequence mod m and the permutation they induce.

For prime d the period of the sequence mod d is d^2 - 1; for prime
powers p^m the expected period is p^(m-1) * (p^(2m) - 1), checked here
by brute force rather than assumed.  Composite moduli decompose into
prime powers whose periods combine by LCM.  The period mod d, reduced
mod d, is the shift by which a network of that many gates cycles its
systems.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import InconclusiveError, InvalidPrimeError, VerificationError
from .seqcore import first_window_return, is_prime

DEFAULT_STEP_BUDGET = 10 ** 8
BUDGET_ENV_VAR = "SWAPNET_BUDGET"


@dataclass(frozen=True)
class Factorization:
    """Prime factorization n = p1^m1 * ... * pr^mr, primes increasing."""

    n: int
    factors: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, n: int) -> "Factorization":
        if n < 2:
            raise ValueError(f"cannot factorize {n}: need n >= 2")
        left = n
        factors = []
        p = 2
        while p * p <= left:
            if left % p == 0:
                e = 0
                while left % p == 0:
                    left //= p
                    e += 1
                factors.append((p, e))
            p += 1 if p == 2 else 2
        if left > 1:
            factors.append((left, 1))
        return cls(n, tuple(factors))

    def prime_powers(self) -> list[int]:
        return [p ** e for p, e in self.factors]

    @property
    def is_prime_power(self) -> bool:
        return len(self.factors) == 1


def predicted_cycle(p: int, m: int) -> int:
    """Expected period of the order-p^m sequence mod p^m.

    For m = 1 this is the proven p^2 - 1; for m > 1 it is the value the
    brute-force checks confirm instance by instance.
    """
    if not is_prime(p):
        raise InvalidPrimeError(f"p must be prime, got {p}")
    if m < 1:
        raise ValueError("m must be >= 1")
    return p ** (m - 1) * (p ** (2 * m) - 1)


def default_budget(order: int, modulus: int) -> int:
    """Step budget used when the caller does not supply one.

    Twice the predicted period when the order equals a prime-power
    modulus; otherwise the SWAPNET_BUDGET environment value or 10^8.
    """
    if order == modulus:
        f = Factorization.of(modulus)
        if f.is_prime_power:
            p, m = f.factors[0]
            return 2 * predicted_cycle(p, m)
    env = os.environ.get(BUDGET_ENV_VAR)
    if env is not None:
        return int(env)
    return DEFAULT_STEP_BUDGET


def cycle_length_direct(d: int, m: int, budget: int) -> int:
    """Brute-force period of the order-d sequence mod m.

    Advances the d-term window until it first returns to all ones,
    which is the period because the recurrence is reversible.
    """
    steps, _ = first_window_return(d, m, budget)
    if steps is None:
        raise InconclusiveError(
            f"no window return within {budget} steps (order {d}, mod {m})",
            steps=budget,
        )
    return steps


@dataclass(frozen=True)
class CycleReport:
    """Everything the period mod d says about the induced permutation.

    ``permutation[i]`` is the system on which the state initially held
    by system i ends up after one full cycle of the network.
    ``conjecture_ok`` is set for prime-power d with d = p^m, m > 1,
    and records whether the measured period matches the predicted one.
    """

    d: int
    length: int
    per_factor: tuple[tuple[int, int], ...]  # (prime power, period mod it)
    shift: int
    permutation: tuple[int, ...]
    method: str  # "direct" | "composed" | "predicted-and-verified"
    conjecture_ok: bool | None = field(default=None)

    def to_dict(self) -> dict:
        out = {
            "d": self.d,
            "length": self.length,
            "factors": [{"pm": pm, "len": ln} for pm, ln in self.per_factor],
            "shift": self.shift,
            "permutation": list(self.permutation),
            "method": self.method,
        }
        if self.conjecture_ok is not None:
            out["conjecture_ok"] = self.conjecture_ok
        return out


@dataclass(frozen=True)
class ScanFailure:
    """Placeholder for a dimension whose search ran out of budget."""

    d: int
    budget: int
    reason: str

    def to_dict(self) -> dict:
        return {"d": self.d, "inconclusive": True, "budget": self.budget, "reason": self.reason}


def _report(d: int, length: int, per_factor, method: str, conjecture_ok=None) -> CycleReport:
    shift = length % d
    perm = tuple((i + shift) % d for i in range(d))
    return CycleReport(d, length, tuple(per_factor), shift, perm, method, conjecture_ok)


def cycle_length(d: int, budget: int | None = None) -> CycleReport:
    """Period of the order-d sequence mod d, via per-prime-power runs.

    Prime-power dimensions are cross-checked against the predicted
    period: a mismatch for prime d is impossible and raises; for m > 1
    it is recorded in ``conjecture_ok``.
    """
    f = Factorization.of(d)
    per_factor = []
    for p, e in f.factors:
        q = p ** e
        b = budget if budget is not None else default_budget(d, q)
        per_factor.append((q, cycle_length_direct(d, q, b)))
    length = math.lcm(*(ln for _, ln in per_factor))
    if f.is_prime_power:
        p, m = f.factors[0]
        expected = predicted_cycle(p, m)
        if m == 1:
            if length != expected:
                raise VerificationError(
                    f"prime d={d}: measured period {length} != d^2-1 = {expected}"
                )
            return _report(d, length, per_factor, "predicted-and-verified")
        ok = length == expected
        method = "predicted-and-verified" if ok else "direct"
        return _report(d, length, per_factor, method, conjecture_ok=ok)
    return _report(d, length, per_factor, "composed")


def cycle_report_direct(d: int, budget: int | None = None) -> CycleReport:
    """Single-run report measured mod d itself, without factorizing."""
    b = budget if budget is not None else default_budget(d, d)
    length = cycle_length_direct(d, d, b)
    return _report(d, length, [(d, length)], "direct")


def verify_conjecture(p: int, m: int, budget: int | None = None) -> bool:
    """Check one prime-power instance of the predicted period.

    True iff the measured period equals p^(m-1) * (p^(2m) - 1) and the
    window that closes the cycle is preceded by d-1 zeros (the
    sufficient condition for periodicity restated on the sequence).
    """
    expected = predicted_cycle(p, m)
    if budget is None:
        budget = 2 * expected
    if budget < expected:
        raise InconclusiveError(
            f"budget {budget} below predicted period {expected}", steps=0
        )
    d = p ** m
    steps, tail = first_window_return(d, d, budget)
    if steps is None:
        raise InconclusiveError(
            f"no window return within {budget} steps for d={d}", steps=budget
        )
    return steps == expected and all(v == 0 for v in tail)


def induced_shift(d: int, budget: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Shift (period mod d) and the system permutation it induces."""
    report = cycle_length(d, budget)
    return report.shift, report.permutation


def scan(max_n: int, budget: int | None = None, jobs: int = 1) -> list[CycleReport | ScanFailure]:
    """Reports for every dimension 2..max_n, in dimension order.

    Budget exhaustion for one dimension yields a ScanFailure entry and
    never aborts the rest.  ``jobs`` > 1 distributes dimensions across
    worker processes; each dimension is computed sequentially.
    """
    dims = list(range(2, max_n + 1))
    if jobs > 1 and len(dims) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            raw = list(pool.map(_scan_one, dims, [budget] * len(dims)))
    else:
        raw = [_scan_one(n, budget) for n in dims]
    return raw


def _scan_one(n: int, budget: int | None) -> CycleReport | ScanFailure:
    try:
        return cycle_length(n, budget)
    except InconclusiveError as exc:
        return ScanFailure(n, exc.steps, str(exc))


def scan_csv(entries: list[CycleReport | ScanFailure]) -> str:
    """Two-column table of dimension and period, one row per entry."""
    lines = ["d,length"]
    for entry in entries:
        if isinstance(entry, CycleReport):
            lines.append(f"{entry.d},{entry.length}")
        else:
            lines.append(f"{entry.d},inconclusive")
    return "\n".join(lines) + "\n"

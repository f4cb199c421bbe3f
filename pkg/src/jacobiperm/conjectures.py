"""Enumeration harness for the open conjectures on Jacobi permutations.

Three conjectured identities are checked by computing both sides
exhaustively for each length:

- ``cpen``: the complement-penultimate statistic over Jacobi permutations
  is Entringer-distributed, like the last letter.
- ``cpen-last``: the joint (cpen, last) counts equal the Entringer number
  E(n-1, n+1-i-k) (a symmetric joint distribution).
- ``asc-last``: the joint (asc, last) distribution over Jacobi
  permutations equals the joint (des, first) distribution over Andre
  permutations.

A failing conjecture is a finding, not an error: reports carry a
HOLDS/FAILS verdict per length and the first counterexample cell. The
``perturb`` hook adds 1 to one reference cell so the failure path itself
can be exercised and tested.
"""

from __future__ import annotations

from dataclasses import dataclass

from jacobiperm import formulas
from jacobiperm.enumeration import ClassSpec, distribution

CONJECTURES = ("cpen", "cpen-last", "asc-last")

DEFAULT_MAX_N = 9
HARD_CEILING = 10


@dataclass(frozen=True)
class Counterexample:
    n: int
    key: tuple
    lhs: int
    rhs: int

    def __str__(self):
        return f"n={self.n} at {self.key}: lhs={self.lhs} rhs={self.rhs}"


@dataclass(frozen=True)
class ConjectureResult:
    n: int
    holds: bool
    counterexample: Counterexample | None


@dataclass(frozen=True)
class ConjectureReport:
    name: str
    results: tuple[ConjectureResult, ...]

    @property
    def holds(self) -> bool:
        return all(r.holds for r in self.results)

    def first_counterexample(self) -> Counterexample | None:
        for r in self.results:
            if not r.holds:
                return r.counterexample
        return None

    def summary(self) -> str:
        lines = []
        for r in self.results:
            if r.holds:
                lines.append(f"n={r.n}: HOLDS")
            else:
                lines.append(f"n={r.n}: FAILS ({r.counterexample})")
        verdict = "HOLDS" if self.holds else "FAILS"
        lines.append(f"{self.name}: {verdict} for all checked lengths" if self.holds
                     else f"{self.name}: {verdict}, first counterexample {self.first_counterexample()}")
        return "\n".join(lines)


def _compare(n: int, lhs: dict, rhs: dict) -> ConjectureResult:
    for key in sorted(set(lhs) | set(rhs)):
        a, b = lhs.get(key, 0), rhs.get(key, 0)
        if a != b:
            return ConjectureResult(n, False, Counterexample(n, key, a, b))
    return ConjectureResult(n, True, None)


def _apply_perturb(rhs: dict, n: int, perturb: tuple | None) -> dict:
    if perturb is None or perturb[0] != n:
        return rhs
    key = perturb[1:]
    key = key[0] if len(key) == 1 else key
    out = dict(rhs)
    out[key] = out.get(key, 0) + 1
    return out


def check_conjecture(
    name: str, max_n: int = DEFAULT_MAX_N, *, perturb: tuple | None = None
) -> ConjectureReport:
    """Check one named conjecture for all lengths up to max_n.

    ``perturb`` is (n, *key): the reference side gains 1 at that cell,
    forcing a FAILS verdict whose counterexample points exactly there.
    """
    if name not in CONJECTURES:
        raise ValueError(f"unknown conjecture {name!r}; known: {CONJECTURES}")
    if max_n > HARD_CEILING:
        raise ValueError(f"max_n {max_n} exceeds the hard ceiling {HARD_CEILING}")
    results = []
    if name == "cpen":
        for n in range(2, max_n + 1):
            lhs = distribution(ClassSpec(n=n, jacobi=True), "cpen").counts
            rhs = {k: formulas.entringer(n, k) for k in range(1, n + 1)}
            results.append(_compare(n, lhs, _apply_perturb(rhs, n, perturb)))
    elif name == "cpen-last":
        for n in range(3, max_n + 1):
            lhs = distribution(ClassSpec(n=n, jacobi=True), ("cpen", "last")).counts
            rhs = {
                (i, k): formulas.entringer_or_zero(n - 1, n + 1 - i - k)
                for i in range(1, n + 1)
                for k in range(1, n + 1)
            }
            results.append(_compare(n, lhs, _apply_perturb(rhs, n, perturb)))
    else:
        for n in range(1, max_n + 1):
            lhs = distribution(ClassSpec(n=n, jacobi=True), ("asc", "last")).counts
            rhs = distribution(
                ClassSpec(n=n, andre=True), ("des", "first"), max_n=max_n
            ).counts
            results.append(_compare(n, lhs, _apply_perturb(rhs, n, perturb)))
    return ConjectureReport(name, tuple(results))

"""Dyck paths and their correspondence with 123-avoiding permutations.

A Dyck path is a word over {U, D} with equally many U's and D's in which
every prefix has at least as many U's as D's; it is stored as that string
(e.g. "UUDUDD"). An *ascent* (*descent*) of a path is a maximal run of
U's (D's).

The map :func:`chi` sends a 123-avoiding permutation of [n] to a path of
semilength n; under it, a 123-avoider is Jacobi exactly when every
descent of its path is odd, and it is doubly Jacobi exactly when every
ascent and every descent is odd.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from jacobiperm import perms
from jacobiperm.errors import GuardError
from jacobiperm.perms import Perm

DYCK_GUARD = 14


def check_path(steps: str) -> str:
    """Validate a U/D word as a Dyck path; returns it unchanged."""
    height = 0
    for ch in steps:
        if ch == "U":
            height += 1
        elif ch == "D":
            height -= 1
            if height < 0:
                raise ValueError(f"path dips below the axis: {steps!r}")
        else:
            raise ValueError(f"steps must be 'U' or 'D': {steps!r}")
    if height != 0:
        raise ValueError(f"path does not return to the axis: {steps!r}")
    return steps


def semilength(path: str) -> int:
    return len(path) // 2


def chi(p: Sequence[int]) -> str:
    """Dyck path of a standardized 123-avoiding permutation.

    With the left-to-right minima of p at positions i_1 < ... < i_m, the
    path climbs to clear the first minimum, then alternates runs
    D^(i_{k+1} - i_k) U^(p_{i_k} - p_{i_{k+1}}), closing with the final
    descent. The UD-factors of the result mark the left-to-right minima.

    >>> chi((5, 7, 6, 2, 1, 4, 3))
    'UUUDDDUUUDUDDD'
    >>> chi((1,))
    'UD'
    """
    p = tuple(p)
    n = len(p)
    if perms.standardize(p) != p:
        raise ValueError(f"input must be standardized: {p}")
    if perms.contains_pattern(p, (1, 2, 3)):
        raise ValueError(f"input must avoid the pattern 123: {p}")
    if n == 0:
        return ""
    mins: list[tuple[int, int]] = []  # (position, value), 1-indexed
    cur = n + 1
    for i, x in enumerate(p, start=1):
        if x < cur:
            mins.append((i, x))
            cur = x
    out = ["U" * (n + 1 - mins[0][1])]
    for (i1, v1), (i2, v2) in zip(mins, mins[1:]):
        out.append("D" * (i2 - i1))
        out.append("U" * (v1 - v2))
    out.append("D" * (n + 1 - mins[-1][0]))
    return "".join(out)


def chi_inv(path: str) -> Perm:
    """Inverse of :func:`chi`, defined on every Dyck path.

    The UD-factors determine the left-to-right minima (their positions
    from the D-count, their values from the U-count); the remaining
    letters are then forced in decreasing order.

    >>> chi_inv("UUDD")
    (1, 2)
    >>> chi_inv("UDUD")
    (2, 1)
    """
    check_path(path)
    n = semilength(path)
    word = [0] * n
    ups = downs = 0
    minima = set()
    for prev, ch in zip(" " + path, path):
        if ch == "U":
            ups += 1
        else:
            if prev == "U":
                word[downs] = n + 1 - ups
                minima.add(n + 1 - ups)
            downs += 1
    rest = sorted(set(range(1, n + 1)) - minima, reverse=True)
    it = iter(rest)
    for i in range(n):
        if word[i] == 0:
            word[i] = next(it)
    return tuple(word)


@dataclass(frozen=True)
class PathStats:
    descent_lengths: tuple[int, ...]
    ascent_lengths: tuple[int, ...]
    occ_UD: int
    occ_UDD: int


def run_lengths(path: str, step: str) -> tuple[int, ...]:
    """Lengths of the maximal runs of the given step, left to right."""
    out = []
    count = 0
    for ch in path:
        if ch == step:
            count += 1
        elif count:
            out.append(count)
            count = 0
    if count:
        out.append(count)
    return tuple(out)


def occ(path: str, factor: str) -> int:
    """Occurrences of a word as a factor (consecutive subword).

    >>> occ("UUUDDDUUUDUDDD", "UD")
    3
    >>> occ("UUUDDDUUUDUDDD", "UDD")
    2
    """
    if not factor:
        raise ValueError("factor must be nonempty")
    return sum(1 for i in range(len(path) - len(factor) + 1) if path.startswith(factor, i))


def path_stats(path: str) -> PathStats:
    """Descent/ascent run lengths and the UD / UDD factor counts.

    >>> path_stats("UUDD")
    PathStats(descent_lengths=(2,), ascent_lengths=(2,), occ_UD=1, occ_UDD=1)
    """
    return PathStats(
        descent_lengths=run_lengths(path, "D"),
        ascent_lengths=run_lengths(path, "U"),
        occ_UD=occ(path, "UD") if path else 0,
        occ_UDD=occ(path, "UDD") if path else 0,
    )


def all_descents_odd(path: str) -> bool:
    """Every maximal D-run has odd length (vacuously true when empty).

    Among 123-avoiders, exactly the Jacobi ones have such paths.
    """
    return all(length % 2 == 1 for length in run_lengths(path, "D"))


def all_ascents_and_descents_odd(path: str) -> bool:
    """Every maximal U-run and D-run has odd length.

    Among 123-avoiders, exactly the doubly Jacobi ones have such paths;
    these paths are counted by the secondary structure numbers.
    """
    return all_descents_odd(path) and all(
        length % 2 == 1 for length in run_lengths(path, "U")
    )


def gen_dyck(n: int, *, max_n: int | None = None) -> Iterator[str]:
    """All Dyck paths of semilength n, each exactly once.

    >>> sorted(gen_dyck(2))
    ['UDUD', 'UUDD']
    """
    guard = DYCK_GUARD if max_n is None else max_n
    if n > guard:
        raise GuardError(f"path generation at semilength {n} exceeds guard {guard}")

    def extend(prefix: list[str], ups: int, downs: int) -> Iterator[str]:
        if ups == downs == n:
            yield "".join(prefix)
            return
        if ups < n:
            prefix.append("U")
            yield from extend(prefix, ups + 1, downs)
            prefix.pop()
        if downs < ups:
            prefix.append("D")
            yield from extend(prefix, ups, downs + 1)
            prefix.pop()

    return extend([], 0, 0)

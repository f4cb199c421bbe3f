"""Exhaustive and structured generation of permutation classes.

Two generation strategies coexist on purpose, each serving as a test
oracle for the other:

- *filter mode* walks all of S_n in lexicographic order and applies
  predicates (the brute-force oracle);
- *direct mode* constructs Jacobi permutations recursively without
  touching the rest of S_n (the performance path).

Desk-scale guards protect against accidental huge enumerations; they can
be overridden per call with ``max_n`` or globally through the
``JACOBI_MAX_N`` environment variable.
"""

from __future__ import annotations

import functools
import itertools
import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from jacobiperm import perms
from jacobiperm.errors import GuardError
from jacobiperm.perms import Perm

FILTER_GUARD = 11
DIRECT_GUARD = 15

# the six standardized patterns of length 3, in lexicographic order
S3_PATTERNS: tuple[Perm, ...] = (
    (1, 2, 3),
    (1, 3, 2),
    (2, 1, 3),
    (2, 3, 1),
    (3, 1, 2),
    (3, 2, 1),
)


def default_guard() -> int:
    """Filter-mode guard, honoring the JACOBI_MAX_N environment variable."""
    env = os.environ.get("JACOBI_MAX_N")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"JACOBI_MAX_N must be an integer, got {env!r}") from None
    return FILTER_GUARD


@dataclass(frozen=True)
class ClassSpec:
    """A permutation class: length n plus composable membership predicates.

    ``patterns`` are standardized patterns that members must avoid;
    ``alternating`` is ``"up-down"`` or ``"down-up"``; ``r`` asks for all
    rho-run lengths divisible by r.
    """

    n: int
    patterns: frozenset[Perm] = frozenset()
    jacobi: bool = False
    doubly_jacobi: bool = False
    r: int | None = None
    alternating: str | None = None
    andre: bool = False

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"length must be nonnegative, got {self.n}")
        if self.r is not None and self.r < 1:
            raise ValueError(f"modulus must be a positive integer, got {self.r}")
        if self.alternating not in (None, "up-down", "down-up"):
            raise ValueError(f"unknown alternating kind: {self.alternating!r}")
        for sigma in self.patterns:
            if perms.standardize(sigma) != tuple(sigma):
                raise ValueError(f"pattern must be standardized: {sigma}")


def jacobi_class(n: int, patterns: Iterable[Sequence[int]] = ()) -> ClassSpec:
    """Shorthand for the Jacobi permutations of [n] avoiding ``patterns``."""
    return ClassSpec(n=n, jacobi=True, patterns=frozenset(tuple(s) for s in patterns))


def _predicates(spec: ClassSpec, *, skip_jacobi: bool = False):
    preds = []
    if spec.jacobi and not skip_jacobi:
        preds.append(perms.is_jacobi)
    if spec.r is not None and not (skip_jacobi and spec.r == 2):
        r = spec.r
        preds.append(lambda p: perms.is_r_jacobi(p, r))
    if spec.doubly_jacobi:
        preds.append(lambda p: perms.is_jacobi(p) and perms.is_jacobi(perms.inverse(p)))
    if spec.alternating == "up-down":
        preds.append(perms.is_up_down)
    elif spec.alternating == "down-up":
        preds.append(perms.is_down_up)
    if spec.andre:
        preds.append(perms.is_andre)
    if spec.patterns:
        pats = sorted(spec.patterns)
        preds.append(lambda p: perms.avoids(p, pats))
    return preds


def enumerate_class(
    spec: ClassSpec, *, max_n: int | None = None, first: int | None = None
) -> Iterator[Perm]:
    """Yield the members of the class once each, in lexicographic order.

    Filter mode: walks S_n and applies the predicates. ``first`` restricts
    to members with the given first letter, so a full enumeration can be
    split into n independent streams whose concatenation (in letter order)
    is the full lexicographic stream.

    >>> [p for p in enumerate_class(ClassSpec(n=3, jacobi=True))]
    [(1, 3, 2), (3, 2, 1)]
    """
    guard = default_guard() if max_n is None else max_n
    if spec.n > guard:
        raise GuardError(
            f"filter enumeration of length {spec.n} exceeds guard {guard}; "
            "raise max_n (or JACOBI_MAX_N) to override"
        )
    preds = _predicates(spec)
    letters = range(1, spec.n + 1)
    if first is None:
        stream = itertools.permutations(letters)
    elif first not in letters:
        return
    else:
        rest = [x for x in letters if x != first]
        stream = ((first, *tail) for tail in itertools.permutations(rest))
    for p in stream:
        if all(pred(p) for pred in preds):
            yield p


def generate_jacobi_direct(n: int, *, max_n: int | None = None) -> Iterator[Perm]:
    """Construct the Jacobi permutations of [n] without filtering S_n.

    Recursive construction: place the minimum letter, choose which of the
    remaining letters go to its left (the rest, of even count, go right),
    and recurse on both sides. Standardized blocks are cached per size --
    the Jacobi property depends only on relative order -- and relabeled
    through each sorted letter subset.

    >>> sorted(generate_jacobi_direct(3))
    [(1, 3, 2), (3, 2, 1)]
    """
    guard = DIRECT_GUARD if max_n is None else max_n
    if n > guard:
        raise GuardError(f"direct generation of length {n} exceeds guard {guard}")
    return _jacobi_on_letters(tuple(range(1, n + 1)))


_MEMO_CAP = 10


@functools.lru_cache(maxsize=None)
def _std_jacobi(n: int) -> tuple[Perm, ...]:
    """All standardized Jacobi permutations of [n], cached for small n."""
    return tuple(_jacobi_uncached(tuple(range(1, n + 1))))


def _jacobi_on_letters(letters: tuple[int, ...]) -> Iterator[Perm]:
    n = len(letters)
    if n <= _MEMO_CAP:
        if letters == tuple(range(1, n + 1)):
            yield from _std_jacobi(n)
        else:
            for q in _std_jacobi(n):
                yield tuple(letters[v - 1] for v in q)
    else:
        yield from _jacobi_uncached(letters)


def _jacobi_uncached(letters: tuple[int, ...]) -> Iterator[Perm]:
    if not letters:
        yield ()
        return
    y, rest = letters[0], letters[1:]
    m = len(rest)
    for a in range(m % 2, m + 1, 2):  # right block size m - a must be even
        for left in itertools.combinations(rest, a):
            left_set = set(left)
            right = tuple(x for x in rest if x not in left_set)
            for alpha in _jacobi_on_letters(left):
                for beta in _jacobi_on_letters(right):
                    yield alpha + (y,) + beta


def _supports_direct(spec: ClassSpec) -> bool:
    return spec.jacobi or spec.r == 2


def _members(spec: ClassSpec, method: str, max_n: int | None) -> Iterator[Perm]:
    if method not in ("auto", "filter", "direct"):
        raise ValueError(f"unknown method {method!r}")
    if method == "auto":
        method = "direct" if _supports_direct(spec) else "filter"
    if method == "direct":
        if not _supports_direct(spec):
            raise ValueError("direct generation requires the jacobi flag (or r=2)")
        preds = _predicates(spec, skip_jacobi=True)
        stream = generate_jacobi_direct(spec.n, max_n=max_n)
        return (p for p in stream if all(pred(p) for pred in preds))
    return enumerate_class(spec, max_n=max_n)


def count(spec: ClassSpec, *, method: str = "auto", max_n: int | None = None) -> int:
    """Number of members of the class; nothing is materialized.

    >>> count(ClassSpec(n=8, jacobi=True, patterns=frozenset({(2, 1, 3)})))
    55
    """
    return sum(1 for _ in _members(spec, method, max_n))


@dataclass(frozen=True)
class Distribution:
    """Exact histogram of one statistic (or a pair) over a class."""

    stats: tuple[str, ...]
    counts: dict = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.counts.values())

    def marginal(self, stat: str) -> "Distribution":
        """Collapse a joint distribution onto one of its two statistics."""
        i = self.stats.index(stat)
        out: dict = {}
        for key, c in self.counts.items():
            out[key[i]] = out.get(key[i], 0) + c
        return Distribution((stat,), out)


def distribution(
    spec: ClassSpec,
    stats: str | Sequence[str],
    *,
    method: str = "auto",
    max_n: int | None = None,
) -> Distribution:
    """Histogram of a statistic (or pair of statistics) over the class.

    Members on which a statistic is undefined (``last`` of the empty word,
    ``cpen`` of a one-letter word) are left out of the histogram.

    >>> distribution(ClassSpec(n=6, jacobi=True), "asc").counts
    {0: 1, 1: 26, 2: 34}
    """
    names = (stats,) if isinstance(stats, str) else tuple(stats)
    if not 1 <= len(names) <= 2:
        raise ValueError("one or two statistic names required")
    for name in names:
        if name not in perms.STATISTICS:
            raise ValueError(f"unknown statistic {name!r}")
    funcs = [perms.STATISTICS[name] for name in names]
    minlen = max(_MIN_LENGTH[name] for name in names)
    counts: dict = {}
    for p in _members(spec, method, max_n):
        if len(p) < minlen:
            continue
        key = funcs[0](p) if len(funcs) == 1 else (funcs[0](p), funcs[1](p))
        counts[key] = counts.get(key, 0) + 1
    return Distribution(names, dict(sorted(counts.items())))


_MIN_LENGTH = {"asc": 0, "des": 0, "lrmin": 0, "first": 1, "last": 1, "cpen": 2}


# ---------------------------------------------------------------------------
# bulk oracles used by the verification registry


def s3_pattern_mask(p: Sequence[int]) -> int:
    """Bitmask of the length-3 patterns contained in p.

    Bit i corresponds to S3_PATTERNS[i]. Scans all position triples.
    """
    n = len(p)
    mask = 0
    for i in range(n - 2):
        a = p[i]
        for j in range(i + 1, n - 1):
            b = p[j]
            for k in range(j + 1, n):
                c = p[k]
                if a < b:
                    bit = 0 if b < c else (1 if a < c else 3)
                else:
                    bit = 2 if b < c and a < c else (4 if b < c else 5)
                mask |= 1 << bit
                if mask == 0b111111:
                    return mask
    return mask


def pattern_subset_counts(
    n: int, *, jacobi: bool = True, max_n: int | None = None
) -> dict[frozenset, int]:
    """Counts of avoiders for every subset of the length-3 patterns at once.

    One pass computes the contained-pattern mask of each class member;
    a member avoids a subset iff its mask is disjoint from the subset's.
    Returns a dict keyed by frozenset of patterns, covering all 64 subsets.
    """
    if jacobi:
        stream: Iterable[Perm] = generate_jacobi_direct(n, max_n=max_n)
    else:
        stream = enumerate_class(ClassSpec(n=n), max_n=max_n)
    by_mask = [0] * 64
    for p in stream:
        by_mask[s3_pattern_mask(p)] += 1
    out = {}
    for bits in range(64):
        subset = frozenset(S3_PATTERNS[i] for i in range(6) if bits >> i & 1)
        out[subset] = sum(c for mask, c in enumerate(by_mask) if mask & bits == 0)
    return out


def r_jacobi_counts(
    max_len: int, rs: Sequence[int], *, max_n: int | None = None
) -> dict[tuple[int, int], int]:
    """Counts of r-Jacobi permutations of [n] for every r in rs, n <= max_len.

    One pass per n computes all rho-run lengths of each permutation and
    tests divisibility for each modulus.
    """
    guard = default_guard() if max_n is None else max_n
    if max_len > guard:
        raise GuardError(f"length {max_len} exceeds guard {guard}")
    out = {(r, n): 0 for r in rs for n in range(1, max_len + 1)}
    for n in range(1, max_len + 1):
        for p in itertools.permutations(range(1, n + 1)):
            lengths = perms.rho_lengths(p)
            for r in rs:
                if all(length % r == 0 for length in lengths):
                    out[r, n] += 1
    return out

"""Permutation words, the Jacobi property, patterns, and statistics.

A permutation of a finite set S of positive integers is a word listing the
elements of S, represented throughout as a tuple of ints. The empty tuple
is the empty permutation. Most functions accept any sequence of distinct
positive integers and return tuples.

Text form: contiguous digits when every letter is at most 9 ("315624"),
or letters joined by single spaces ("3 1 5 6 2 4"); both are accepted by
:func:`parse_perm`, and :func:`format_perm` always emits the
space-separated form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]


def check_word(word: Sequence[int]) -> Perm:
    """Validate a permutation word: distinct, positive letters.

    Returns the word as a tuple; raises ValueError otherwise.
    """
    w = tuple(word)
    if any(not isinstance(x, int) or x < 1 for x in w):
        raise ValueError(f"letters must be positive integers: {w}")
    if len(set(w)) != len(w):
        raise ValueError(f"letters must be pairwise distinct: {w}")
    return w


def parse_perm(text: str) -> Perm:
    """Parse a permutation from its text form.

    >>> parse_perm("315624")
    (3, 1, 5, 6, 2, 4)
    >>> parse_perm("10 2 13")
    (10, 2, 13)
    >>> parse_perm("")
    ()
    """
    text = text.strip()
    if not text:
        return ()
    if any(ch.isspace() for ch in text):
        parts = text.split()
    else:
        parts = list(text)
    try:
        word = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"not a permutation word: {text!r}") from None
    return check_word(word)


def format_perm(p: Sequence[int]) -> str:
    """Render a permutation in the space-separated text form."""
    return " ".join(str(x) for x in p)


def standardize(word: Sequence[int]) -> Perm:
    """Replace the i-th smallest letter by i, preserving relative order.

    >>> standardize((4, 1, 7, 9, 2, 6))
    (3, 1, 5, 6, 2, 4)
    >>> standardize(())
    ()
    >>> standardize((6, 3, 9))
    (2, 1, 3)
    """
    w = check_word(word)
    rank = {x: i + 1 for i, x in enumerate(sorted(w))}
    return tuple(rank[x] for x in w)


def rho(p: Sequence[int], x: int) -> Perm:
    """The maximal run of letters immediately right of ``x`` all larger than x.

    >>> rho((4, 1, 7, 9, 2, 6), 1)
    (7, 9, 2, 6)
    >>> rho((4, 1, 7, 9, 2, 6), 7)
    (9,)
    >>> rho((4, 1, 7, 9, 2, 6), 4)
    ()
    """
    p = tuple(p)
    try:
        i = p.index(x)
    except ValueError:
        raise ValueError(f"letter {x} does not occur in {p}") from None
    j = i + 1
    while j < len(p) and p[j] > x:
        j += 1
    return p[i + 1 : j]


def rho_lengths(p: Sequence[int]) -> list[int]:
    """Lengths of all runs rho(p, p[i]), position by position.

    Computed in one pass with a decreasing stack: the run at position i
    ends just before the next letter smaller than p[i].
    """
    n = len(p)
    out = [0] * n
    stack: list[int] = []
    for j in range(n):
        x = p[j]
        while stack and p[stack[-1]] > x:
            i = stack.pop()
            out[i] = j - i - 1
        stack.append(j)
    for i in stack:
        out[i] = n - i - 1
    return out


def is_jacobi(p: Sequence[int]) -> bool:
    """Whether every run rho(p, x) has even length.

    >>> is_jacobi((4, 1, 7, 9, 2, 6))
    False
    >>> is_jacobi((4, 1, 6, 9, 7, 2))
    True
    >>> is_jacobi(())
    True
    """
    n = len(p)
    stack: list[int] = []
    for j in range(n):
        x = p[j]
        while stack and p[stack[-1]] > x:
            # run length j - i - 1 must be even
            if (j - stack.pop()) % 2 == 0:
                return False
        stack.append(j)
    for i in stack:
        if (n - i) % 2 == 0:
            return False
    return True


def is_jacobi_recursive(p: Sequence[int]) -> bool:
    """Jacobi test via the recursive definition.

    The empty word is Jacobi; otherwise split p = alpha y beta at the
    minimum letter y, and p is Jacobi when alpha and beta are Jacobi and
    beta has even length. Agrees with :func:`is_jacobi` on every input.

    >>> is_jacobi_recursive((3, 1, 4, 2))
    True
    >>> is_jacobi_recursive((1, 2))
    False
    """
    p = tuple(p)
    if not p:
        return True
    i = p.index(min(p))
    beta = p[i + 1 :]
    if len(beta) % 2 != 0:
        return False
    return is_jacobi_recursive(p[:i]) and is_jacobi_recursive(beta)


def is_r_jacobi(p: Sequence[int], r: int) -> bool:
    """Whether every |rho(p, x)| is divisible by r.

    Every permutation is 1-Jacobi; 2-Jacobi means Jacobi.

    >>> is_r_jacobi((2, 1), 3)
    True
    >>> is_r_jacobi((1, 2), 3)
    False
    """
    if r < 1:
        raise ValueError(f"modulus must be a positive integer, got {r}")
    if r == 1:
        return True
    return all(length % r == 0 for length in rho_lengths(p))


def contains_pattern(p: Sequence[int], sigma: Sequence[int]) -> bool:
    """Whether some subword of p standardizes to the pattern sigma.

    sigma must be standardized. The search walks positions left to right,
    keeping only prefixes that are order-isomorphic to a prefix of sigma.

    >>> contains_pattern((3, 1, 5, 6, 2, 4), (1, 3, 2))
    True
    >>> contains_pattern((3, 1, 5, 6, 2, 4), (3, 2, 1))
    False
    >>> contains_pattern((1, 2), (1,))
    True
    """
    sigma = tuple(sigma)
    if standardize(sigma) != sigma:
        raise ValueError(f"pattern must be standardized: {sigma}")
    k = len(sigma)
    if k == 0:
        return True
    p = tuple(p)
    n = len(p)
    if n < k:
        return False

    def extend(chosen: tuple[int, ...], start: int) -> bool:
        j = len(chosen)
        if j == k:
            return True
        for i in range(start, n - (k - j) + 1):
            x = p[i]
            # x must sit in the same relative slot as sigma[j] does among
            # sigma[:j]; compare against each chosen letter
            if all((x > c) == (sigma[j] > sigma[t]) for t, c in enumerate(chosen)):
                if extend(chosen + (x,), i + 1):
                    return True
        return False

    return extend((), 0)


def avoids(p: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    """Whether p contains no pattern from the given set."""
    return not any(contains_pattern(p, sigma) for sigma in patterns)


# ---------------------------------------------------------------------------
# statistics


def asc(p: Sequence[int]) -> int:
    """Number of ascents p[k] < p[k+1]."""
    return sum(1 for a, b in zip(p, p[1:]) if a < b)


def des(p: Sequence[int]) -> int:
    """Number of descents p[k] > p[k+1]."""
    return sum(1 for a, b in zip(p, p[1:]) if a > b)


def lrmin(p: Sequence[int]) -> int:
    """Number of left-to-right minima."""
    count = 0
    cur = None
    for x in p:
        if cur is None or x < cur:
            count += 1
            cur = x
    return count


def first(p: Sequence[int]) -> int:
    if not p:
        raise ValueError("empty permutation has no first letter")
    return p[0]


def last(p: Sequence[int]) -> int:
    if not p:
        raise ValueError("empty permutation has no last letter")
    return p[-1]


def cpen(p: Sequence[int]) -> int:
    """Penultimate letter of the complement of p (length >= 2).

    >>> cpen((2, 6, 3, 1, 5, 4))
    2
    """
    if len(p) < 2:
        raise ValueError("cpen needs length at least 2")
    return complement(p)[-2]


@dataclass(frozen=True)
class PermStats:
    """Statistic record; fields are None when the input is too short."""

    asc: int
    des: int
    lrmin: int
    first: int | None
    last: int | None
    cpen: int | None


def statistics(p: Sequence[int]) -> PermStats:
    """All supported statistics of p in one record.

    >>> statistics((3, 1, 5, 6, 2, 4))
    PermStats(asc=3, des=2, lrmin=2, first=3, last=4, cpen=5)
    """
    p = tuple(p)
    return PermStats(
        asc=asc(p),
        des=des(p),
        lrmin=lrmin(p),
        first=p[0] if p else None,
        last=p[-1] if p else None,
        cpen=cpen(p) if len(p) >= 2 else None,
    )


# statistic name -> function, for distribution queries by name
STATISTICS = {
    "asc": asc,
    "des": des,
    "lrmin": lrmin,
    "first": first,
    "last": last,
    "cpen": cpen,
}


# ---------------------------------------------------------------------------
# structural transforms


def complement(p: Sequence[int]) -> Perm:
    """Replace the i-th smallest letter by the i-th largest. An involution.

    >>> complement((3, 1, 9, 7, 5, 4))
    (7, 9, 1, 3, 4, 5)
    >>> complement((2, 6, 3, 1, 5, 4))
    (5, 1, 4, 6, 2, 3)
    """
    letters = sorted(p)
    swap = {x: y for x, y in zip(letters, reversed(letters))}
    return tuple(swap[x] for x in p)


def inverse(p: Sequence[int]) -> Perm:
    """The inverse permutation, on the same letter set.

    For p in S_n this is the group inverse; in general it is the unique
    permutation of the same set whose standardization is std(p)^{-1}
    (the array reflected about the main diagonal).

    >>> inverse((7, 2, 4, 8, 5))
    (4, 5, 8, 2, 7)
    >>> inverse((2, 5, 3, 6, 4, 1))
    (6, 1, 3, 5, 2, 4)
    >>> inverse((2, 1, 4, 3))
    (2, 1, 4, 3)
    """
    p = tuple(p)
    letters = sorted(p)
    std = standardize(p)
    inv = [0] * len(p)
    for i, v in enumerate(std):
        inv[v - 1] = i + 1
    return tuple(letters[v - 1] for v in inv)


def direct_sum(a: Sequence[int], b: Sequence[int]) -> Perm:
    """Diagonal juxtaposition: b shifted above a.

    Inputs are standardized first.

    >>> direct_sum((1, 3, 2), (2, 1))
    (1, 3, 2, 5, 4)
    >>> direct_sum((), (2, 1))
    (2, 1)
    """
    a, b = standardize(a), standardize(b)
    m = len(a)
    return a + tuple(x + m for x in b)


def skew_sum(a: Sequence[int], b: Sequence[int]) -> Perm:
    """Antidiagonal juxtaposition: a shifted above b.

    >>> skew_sum((1, 3, 2), (2, 1))
    (3, 5, 4, 2, 1)
    """
    a, b = standardize(a), standardize(b)
    n = len(b)
    return tuple(x + n for x in a) + b


def is_up_down(p: Sequence[int]) -> bool:
    """p1 < p2 > p3 < p4 > ...; the empty and one-letter words qualify.

    >>> is_up_down((2, 3, 1))
    True
    >>> is_up_down((2, 1))
    False
    """
    return all((p[i] < p[i + 1]) == (i % 2 == 0) for i in range(len(p) - 1))


def is_down_up(p: Sequence[int]) -> bool:
    """p1 > p2 < p3 > p4 < ...; the empty and one-letter words qualify."""
    return all((p[i] > p[i + 1]) == (i % 2 == 0) for i in range(len(p) - 1))


def is_andre(p: Sequence[int]) -> bool:
    """Recursive Andre test (first kind).

    Split p = alpha y beta at the minimum letter y; p is Andre when alpha
    and beta are Andre and the largest letter of the concatenation
    alpha beta lies in beta. Andre permutations of [n] are counted by the
    Euler numbers.

    >>> is_andre(())
    True
    >>> is_andre((1, 2))
    True
    >>> is_andre((2, 1))
    False
    """
    p = tuple(p)
    if len(p) <= 1:
        return True
    i = p.index(min(p))
    alpha, beta = p[:i], p[i + 1 :]
    if alpha and (not beta or max(alpha) > max(beta)):
        return False
    return is_andre(alpha) and is_andre(beta)


def is_doubly_jacobi(p: Sequence[int]) -> bool:
    """Whether both p and its inverse are Jacobi."""
    return is_jacobi(p) and is_jacobi(inverse(p))


# ---------------------------------------------------------------------------
# bijections


def phi_viennot(p: Sequence[int]) -> Perm:
    """Bijection from Jacobi permutations of S onto up-down permutations of S.

    Defined recursively: the empty word maps to itself, and for
    p = alpha y beta split at the minimum y, the image is
    phi(beta) y complement(phi(alpha)). The first letter of the image
    equals the last letter of p.

    >>> phi_viennot((2, 1))
    (1, 2)
    >>> phi_viennot((1, 3, 2))
    (2, 3, 1)
    """
    p = tuple(p)
    if not is_jacobi(p):
        raise ValueError(f"{p} is not Jacobi")
    return _phi(p)


def _phi(p: Perm) -> Perm:
    if not p:
        return ()
    i = p.index(min(p))
    return _phi(p[i + 1 :]) + (p[i],) + complement(_phi(p[:i]))


def phi_viennot_inv(p: Sequence[int]) -> Perm:
    """Inverse of :func:`phi_viennot`, defined on up-down permutations.

    >>> phi_viennot_inv((1, 2))
    (2, 1)
    """
    p = tuple(p)
    if not is_up_down(p):
        raise ValueError(f"{p} is not up-down")
    return _phi_inv(p)


def _phi_inv(p: Perm) -> Perm:
    if not p:
        return ()
    i = p.index(min(p))
    beta_bar, alpha_bar = p[:i], p[i + 1 :]
    return _phi_inv(complement(alpha_bar)) + (p[i],) + _phi_inv(beta_bar)


def delta_321(p: Sequence[int], k: int, n: int) -> Perm:
    """Extend a 321-avoiding Jacobi permutation of [2n-2] to one of [2n].

    Increases every letter >= k by 1, then appends the letters 2n and k.
    Requires n <= k <= 2n-1 and last(p) between n-1 and k-1; the image is
    the 321-avoiding Jacobi permutation of [2n] whose last letter is k.

    >>> delta_321((4, 1, 5, 2, 6, 3), 5, 4)
    (4, 1, 6, 2, 7, 3, 8, 5)
    >>> delta_321((2, 1), 2, 2)
    (3, 1, 4, 2)
    """
    p = tuple(p)
    if not (n <= k <= 2 * n - 1):
        raise ValueError(f"need n <= k <= 2n-1, got k={k}, n={n}")
    if sorted(p) != list(range(1, 2 * n - 1)):
        raise ValueError(f"input must be a permutation of [2n-2] = [{2 * n - 2}]")
    if p and not (n - 1 <= p[-1] <= k - 1):
        raise ValueError(f"last letter {p[-1]} not in [{n - 1}, {k - 1}]")
    if not (is_jacobi(p) and avoids(p, [(3, 2, 1)])):
        raise ValueError(f"{p} is not a 321-avoiding Jacobi permutation")
    return tuple(x + 1 if x >= k else x for x in p) + (2 * n, k)


def delta_321_inv(p: Sequence[int]) -> Perm:
    """Inverse of :func:`delta_321`: drop the last two letters, close the gap.

    >>> delta_321_inv((4, 1, 6, 2, 7, 3, 8, 5))
    (4, 1, 5, 2, 6, 3)
    """
    p = tuple(p)
    if len(p) < 2 or len(p) % 2 != 0:
        raise ValueError(f"input must have positive even length, got {p}")
    n2 = len(p)
    if sorted(p) != list(range(1, n2 + 1)):
        raise ValueError(f"input must be a permutation of [{n2}]")
    if not (is_jacobi(p) and avoids(p, [(3, 2, 1)])):
        raise ValueError(f"{p} is not a 321-avoiding Jacobi permutation")
    k = p[-1]
    if p[-2] != n2:
        raise ValueError(f"penultimate letter must be {n2}")
    return tuple(x - 1 if x > k else x for x in p[:-2])

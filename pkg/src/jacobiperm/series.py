"""Exact truncated multivariate formal power series, and the solvers for
every generating-function identity in this package.

A :class:`SeriesRing` fixes an ordered tuple of variable names and a
truncation order per variable; its :class:`Series` elements store sparse
coefficient tables of exact rationals (plain ints where possible).
Arithmetic never consults coefficients beyond the truncation, and all
dropped exponents exceed the truncation in some variable, so results are
exact within the declared box.

The concrete series built here:

- ``solve_asc_system`` / ``jasc_closed_form`` -- the ascent EGF over
  Jacobi permutations, once from its ODE system and once in closed form;
- ``jlrmin_series`` -- (sec x + tan x)^t, the left-to-right-minimum EGF;
- ``fe_series`` / ``fo_series`` / ``u_series`` / ``v_series`` -- Jacobi
  trees by left children and their companion algebraic series;
- ``ge_series`` / ``go_series`` -- Jacobi trees by size;
- ``last_letter_series`` -- last-letter generating functions over the
  312- and 231-avoiding classes;
- ``p_series`` -- the trivariate series counting odd-descent Dyck paths
  by UD- and UDD-factors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from jacobiperm.formulas import binom, exact_div

Coeff = int | Fraction
Expo = tuple[int, ...]


def _norm(value: Coeff) -> Coeff:
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


class SeriesRing:
    """Truncated power series in fixed variables with per-variable orders.

    >>> R = SeriesRing(("t", "x"), (4, 4))
    >>> geom = (R.one() - R.var("x")).reciprocal()
    >>> [geom.coeff(0, j) for j in range(5)]
    [1, 1, 1, 1, 1]
    """

    def __init__(self, variables: tuple[str, ...], trunc: tuple[int, ...]):
        if len(variables) != len(set(variables)) or not variables:
            raise ValueError(f"variables must be distinct and nonempty: {variables}")
        if len(trunc) != len(variables) or any(t < 0 for t in trunc):
            raise ValueError(f"bad truncation orders: {trunc}")
        self.variables = tuple(variables)
        self.trunc = tuple(trunc)

    def __eq__(self, other):
        return (
            isinstance(other, SeriesRing)
            and self.variables == other.variables
            and self.trunc == other.trunc
        )

    def __repr__(self):
        orders = ", ".join(f"{v}^<={t}" for v, t in zip(self.variables, self.trunc))
        return f"SeriesRing({orders})"

    def make(self, coeffs: dict[Expo, Coeff]) -> "Series":
        trunc = self.trunc
        clean = {}
        for e, c in coeffs.items():
            if c and all(a <= t for a, t in zip(e, trunc)):
                clean[e] = _norm(c)
        return Series(self, clean)

    def zero(self) -> "Series":
        return Series(self, {})

    def one(self) -> "Series":
        return self.constant(1)

    def constant(self, c: Coeff) -> "Series":
        return self.make({(0,) * len(self.variables): c})

    def monomial(self, c: Coeff, **powers: int) -> "Series":
        """A single term, e.g. ``ring.monomial(2, t=1, x=3)`` for 2*t*x^3."""
        unknown = set(powers) - set(self.variables)
        if unknown:
            raise ValueError(f"unknown variables {sorted(unknown)}")
        e = tuple(powers.get(v, 0) for v in self.variables)
        return self.make({e: c})

    def var(self, name: str) -> "Series":
        return self.monomial(1, **{name: 1})

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise ValueError(f"no variable {name!r} in {self}") from None


class Series:
    """Immutable sparse element of a :class:`SeriesRing`."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: SeriesRing, coeffs: dict[Expo, Coeff]):
        self.ring = ring
        self.coeffs = coeffs

    def coeff(self, *expo: int) -> Coeff:
        if len(expo) != len(self.ring.variables):
            raise ValueError(f"expected {len(self.ring.variables)} exponents")
        if any(a > t for a, t in zip(expo, self.ring.trunc)):
            raise ValueError(f"exponent {expo} exceeds truncation {self.ring.trunc}")
        return self.coeffs.get(tuple(expo), 0)

    def constant_term(self) -> Coeff:
        return self.coeffs.get((0,) * len(self.ring.variables), 0)

    def __eq__(self, other):
        if not isinstance(other, Series) or self.ring != other.ring:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "Series(0)"
        parts = []
        for e in sorted(self.coeffs)[:8]:
            mono = "*".join(
                f"{v}^{a}" for v, a in zip(self.ring.variables, e) if a
            )
            parts.append(f"{self.coeffs[e]}{'*' + mono if mono else ''}")
        tail = " + ..." if len(self.coeffs) > 8 else ""
        return f"Series({' + '.join(parts)}{tail})"

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Series | None":
        if isinstance(other, Series):
            if other.ring != self.ring:
                raise ValueError("series from different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return self.ring.make(out)

    __radd__ = __add__

    def __neg__(self):
        return Series(self.ring, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.ring.zero()
            return Series(
                self.ring, {e: _norm(c * other) for e, c in self.coeffs.items()}
            )
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        trunc = self.ring.trunc
        out: dict[Expo, Coeff] = {}
        small, large = self.coeffs, other.coeffs
        if len(small) > len(large):
            small, large = large, small
        large_items = list(large.items())
        for e1, c1 in small.items():
            for e2, c2 in large_items:
                e = tuple(a + b for a, b in zip(e1, e2))
                if all(a <= t for a, t in zip(e, trunc)):
                    out[e] = out.get(e, 0) + c1 * c2
        return self.ring.make(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def reciprocal(self) -> "Series":
        """Multiplicative inverse; the constant term must be nonzero.

        Newton iteration doubles the correct total degree each step.
        """
        c0 = self.constant_term()
        if not c0:
            raise ValueError("reciprocal needs a nonzero constant term")
        inv = self.ring.constant(Fraction(1, 1) / Fraction(c0))
        goal = sum(self.ring.trunc)
        reach = 1
        while reach <= goal:
            inv = inv * (self.ring.constant(2) - self * inv)
            reach *= 2
        return inv

    def exp(self) -> "Series":
        """exp of a series with zero constant term."""
        if self.constant_term():
            raise ValueError("exp needs a zero constant term")
        out = self.ring.one()
        term = self.ring.one()
        for k in range(1, sum(self.ring.trunc) + 1):
            term = term * self * Fraction(1, k)
            if not term.coeffs:
                break
            out = out + term
        return out

    def log(self) -> "Series":
        """log of a series with constant term 1."""
        if self.constant_term() != 1:
            raise ValueError("log needs constant term 1")
        u = self - 1
        out = self.ring.zero()
        power = self.ring.one()
        for k in range(1, sum(self.ring.trunc) + 1):
            power = power * u
            if not power.coeffs:
                break
            out = out + power * Fraction((-1) ** (k + 1), k)
        return out

    def sqrt_one_plus(self) -> "Series":
        """sqrt(1 + self) for a series with zero constant term.

        >>> R = SeriesRing(("t",), (6,))
        >>> r = (R.monomial(-2, t=1)).sqrt_one_plus()
        >>> (r * r) == R.one() - R.monomial(2, t=1)
        True
        """
        if self.constant_term():
            raise ValueError("sqrt_one_plus needs a zero constant term")
        out = self.ring.one()
        power = self.ring.one()
        coeff = Fraction(1)
        for k in range(1, sum(self.ring.trunc) + 1):
            power = power * self
            if not power.coeffs:
                break
            coeff = coeff * (Fraction(1, 2) - (k - 1)) / k
            out = out + power * coeff
        return out

    def differentiate(self, name: str) -> "Series":
        """Partial derivative; the top order in ``name`` becomes unknown."""
        i = self.ring.index(name)
        out = {}
        for e, c in self.coeffs.items():
            if e[i]:
                e2 = e[:i] + (e[i] - 1,) + e[i + 1 :]
                out[e2] = c * e[i]
        return self.ring.make(out)

    def integrate(self, name: str) -> "Series":
        """Antiderivative with zero constant of integration."""
        i = self.ring.index(name)
        out = {}
        top = self.ring.trunc[i]
        for e, c in self.coeffs.items():
            if e[i] + 1 <= top:
                e2 = e[:i] + (e[i] + 1,) + e[i + 1 :]
                out[e2] = Fraction(c, e[i] + 1) if isinstance(c, int) else c / (e[i] + 1)
        return self.ring.make(out)

    def substitute(self, name: str, replacement: "Series") -> "Series":
        """Substitute a series with zero constant term for a variable."""
        replacement = self._coerce(replacement)
        if replacement.constant_term():
            raise ValueError("substitution target must have zero constant term")
        i = self.ring.index(name)
        slices: dict[int, dict[Expo, Coeff]] = {}
        for e, c in self.coeffs.items():
            e0 = e[:i] + (0,) + e[i + 1 :]
            slices.setdefault(e[i], {})[e0] = c
        out = self.ring.zero()
        power = self.ring.one()
        for j in range(self.ring.trunc[i] + 1):
            if j:
                power = power * replacement
                if not power.coeffs:
                    break
            if j in slices:
                out = out + Series(self.ring, slices[j]) * power
        return out

    def collapse_at_one(self, name: str) -> "Series":
        """Set a variable to 1 by summing its exponents away.

        Exact only when every contributing exponent lies inside the
        truncation box (true for the marginals used here, where the
        collapsed degree is bounded by the retained ones).
        """
        i = self.ring.index(name)
        out: dict[Expo, Coeff] = {}
        for e, c in self.coeffs.items():
            e0 = e[:i] + (0,) + e[i + 1 :]
            out[e0] = out.get(e0, 0) + c
        return self.ring.make(out)

    def truncate(self, trunc: tuple[int, ...]) -> "Series":
        """Restrict to a smaller truncation box (a new ring)."""
        if any(a > b for a, b in zip(trunc, self.ring.trunc)):
            raise ValueError("can only truncate downward")
        return SeriesRing(self.ring.variables, trunc).make(dict(self.coeffs))


def divide_monomial(series: Series, name: str, power: int = 1) -> Series:
    """Exact division by ``name**power``; every term must be divisible.

    The top ``power`` orders of the result in that variable are unknown
    (they came from beyond the truncation), so they are dropped: the
    result lives in a ring whose order in ``name`` is reduced by
    ``power``.
    """
    i = series.ring.index(name)
    out = {}
    for e, c in series.coeffs.items():
        if e[i] < power:
            raise ArithmeticError(
                f"term with exponent {e} is not divisible by {name}^{power}"
            )
        out[e[:i] + (e[i] - power,) + e[i + 1 :]] = c
    trunc = list(series.ring.trunc)
    trunc[i] -= power
    return SeriesRing(series.ring.variables, tuple(trunc)).make(out)


def egf_extract(series: Series, k: int, n: int) -> int:
    """n! times the t^k x^n coefficient, asserted to be an integer."""
    value = Fraction(series.coeff(k, n)) * math.factorial(n)
    if value.denominator != 1:
        raise ArithmeticError(f"EGF coefficient at t^{k} x^{n} is not integral: {value}")
    return int(value)


def dump_lines(series: Series) -> list[str]:
    """Nonzero coefficients as lines ``i<TAB>j<TAB>num/denom``.

    i runs over the leading variables (tab-separated when more than one)
    and j is the x-exponent; lines are sorted by (j, i). Every
    coefficient is printed as a normalized fraction.
    """
    rows = []
    for e, c in series.coeffs.items():
        frac = Fraction(c)
        key = (e[-1],) + e[:-1]
        rows.append((key, e, f"{frac.numerator}/{frac.denominator}"))
    rows.sort()
    return ["\t".join([*map(str, e[:-1]), str(e[-1]), text]) for _, e, text in rows]


# ---------------------------------------------------------------------------
# fixed-point solver


def solve_fixed_point(
    update: Callable[[Series], Series], seed: Series, max_iter: int | None = None
) -> Series:
    """Iterate S -> update(S) until stable to truncation.

    The update must be contracting in the adic sense (each application
    pins down at least one more order); non-convergence within the bound
    signals a transcription bug and raises ArithmeticError.
    """
    bound = max_iter if max_iter is not None else sum(seed.ring.trunc) + 2
    s = seed
    for _ in range(bound):
        nxt = update(s)
        if nxt == s:
            return s
        s = nxt
    raise ArithmeticError("fixed-point iteration did not converge within bound")


# ---------------------------------------------------------------------------
# ascent EGF over Jacobi permutations


def solve_asc_system(t_order: int, x_order: int) -> tuple[Series, Series]:
    """Even/odd-length ascent EGFs from their differential system.

    J_e collects even lengths and J_o odd lengths, both as ordinary EGFs
    in x (coefficient of t^k x^n is the count with n-letter members times
    1/n!). They satisfy

        dJ_e/dx = J_o + t J_o (J_e - 1),   J_e(t, 0) = 1,
        dJ_o/dx = J_e + t J_e (J_e - 1),   J_o(t, 0) = 0,

    integrated term by term in x.
    """
    ring = SeriesRing(("t", "x"), (t_order, x_order))
    t = ring.var("t")
    je, jo = ring.one(), ring.zero()
    for _ in range(x_order + 1):
        je_next = ring.one() + (jo + t * jo * (je - 1)).integrate("x")
        jo_next = (je + t * je * (je - 1)).integrate("x")
        if je_next == je and jo_next == jo:
            break
        je, jo = je_next, jo_next
    return je, jo


def jasc_closed_form(t_order: int, x_order: int) -> Series:
    """Closed form 1 + 2(e^{rx} - 1) / (1 + r + (r - 1)e^{rx}), r = sqrt(1-2t).

    r is represented by its honest t-series (constant term 1), so the
    whole expression is ordinary series arithmetic. Equals the sum of the
    two components of :func:`solve_asc_system`.
    """
    ring = SeriesRing(("t", "x"), (t_order, x_order))
    r = ring.monomial(-2, t=1).sqrt_one_plus()
    erx = (r * ring.var("x")).exp()
    numer = (erx - 1) * 2
    denom = ring.one() + r + (r - 1) * erx
    return ring.one() + numer * denom.reciprocal()


def andre_descent_egf(t_order: int, x_order: int) -> Series:
    """EGF r(1 + w e^{rx}) / (1 - w e^{rx}) with w = (1-r)/(1+r).

    Its x^n coefficient times n! counts Andre permutations of [n] by
    t^(des+1) for n >= 1; subtracting 1 and dividing by t recovers the
    ascent EGF over Jacobi permutations.
    """
    ring = SeriesRing(("t", "x"), (t_order, x_order))
    r = ring.monomial(-2, t=1).sqrt_one_plus()
    w = (ring.one() - r) * (ring.one() + r).reciprocal()
    erx = (r * ring.var("x")).exp()
    return r * (ring.one() + w * erx) * (ring.one() - w * erx).reciprocal()


def sec_plus_tan(ring: SeriesRing) -> Series:
    """sec x + tan x = (1 + sin x) / cos x in the given ring."""
    x = ring.var("x")
    top = ring.trunc[ring.index("x")]
    cos = ring.zero()
    sin = ring.zero()
    for k in range(0, top + 1):
        term = ring.monomial(Fraction((-1) ** (k // 2), math.factorial(k)), x=k)
        if k % 2 == 0:
            cos = cos + term
        else:
            sin = sin + term
    return (ring.one() + sin) * cos.reciprocal()


def jlrmin_series(t_order: int, x_order: int) -> Series:
    """(sec x + tan x)^t: the EGF of Jacobi permutations by left-to-right
    minima, via exp(t log(sec x + tan x))."""
    ring = SeriesRing(("t", "x"), (t_order, x_order))
    return (ring.var("t") * sec_plus_tan(ring).log()).exp()


# ---------------------------------------------------------------------------
# Jacobi trees by left children: F_e, F_o and the companion series U, V


def fe_series(t_order: int, x_order: int) -> Series:
    """Even-size Jacobi trees by left children (t) and size (x),
    from the equation F_e = 1 + tx^2 (1-t) F_e^2 + t^2 x^2 F_e^3."""
    ring = SeriesRing(("t", "x"), (t_order, x_order))
    t, x = ring.var("t"), ring.var("x")
    tx2 = t * x * x
    return solve_fixed_point(
        lambda f: ring.one() + tx2 * (1 - t) * f**2 + t**2 * x**2 * f**3,
        ring.one(),
    )


def fo_series(t_order: int, x_order: int) -> Series:
    """Odd-size Jacobi trees by left children (t) and size (x)."""
    ring = SeriesRing(("t", "x"), (t_order, x_order))
    t, x = ring.var("t"), ring.var("x")
    return solve_fixed_point(
        lambda f: x + (t - 1) * t * x**2 * f + 2 * t * x * f**2 - t**2 * x**2 * f**3,
        ring.zero(),
    )


def u_series(t_order: int, x_order: int) -> Series:
    """Solution of U = (1 + txU)(1 + xU)^2: ternary trees on n nodes by
    middle children, [t^k x^n] U = C(n+1,k) C(2n+2,n-k) / (n+1)."""
    ring = SeriesRing(("t", "x"), (t_order, x_order))
    t, x = ring.var("t"), ring.var("x")
    return solve_fixed_point(
        lambda u: (ring.one() + t * x * u) * (ring.one() + x * u) ** 2, ring.one()
    )


def v_series(t_order: int, x_order: int) -> Series:
    """Solution of V(1 - xV)^2 = 1 + (t-1)xV, solved in the expanded form
    V = 1 + (t-1)xV + 2xV^2 - x^2 V^3."""
    ring = SeriesRing(("t", "x"), (t_order, x_order))
    t, x = ring.var("t"), ring.var("x")
    return solve_fixed_point(
        lambda v: ring.one() + (t - 1) * x * v + 2 * x * v**2 - x**2 * v**3,
        ring.one(),
    )


# ---------------------------------------------------------------------------
# Jacobi trees by size: G_e, G_o


def ge_series(ring: SeriesRing) -> Series:
    """Even-size Jacobi trees by size: sum C(3m,m)/(2m+1) x^{2m}."""
    top = ring.trunc[ring.index("x")]
    coeffs = {}
    for m in range(0, top // 2 + 1):
        e = [0] * len(ring.variables)
        e[ring.index("x")] = 2 * m
        coeffs[tuple(e)] = exact_div(binom(3 * m, m), 2 * m + 1)
    return ring.make(coeffs)


def ge_series_fixed_point(ring: SeriesRing) -> Series:
    """The same series from its defining equation G_e = 1 + x^2 G_e^3."""
    x = ring.var("x")
    return solve_fixed_point(lambda g: ring.one() + x * x * g**3, ring.one())


def go_series(ring: SeriesRing) -> Series:
    """Odd-size Jacobi trees by size: G_o = x G_e^2."""
    return ring.var("x") * ge_series(ring) ** 2


def last_letter_series(t_order: int, x_order: int) -> tuple[Series, Series]:
    """Last-letter generating functions over the 312- and 231-avoiding
    Jacobi classes, with t marking the last letter and x the length.

    312: t x G_e(x) + t x G(tx) G_o(x), with G = G_e + G_o.
    231: t x (1 + x G_e(tx)) / (1 - x^2 G_e(tx) (1 + t G_e(tx))).
    """
    ring = SeriesRing(("t", "x"), (t_order, x_order))
    t, x = ring.var("t"), ring.var("x")
    tx = t * x
    ge = ge_series(ring)
    go = go_series(ring)
    g_tx = (ge + go).substitute("x", tx)
    j312 = tx * ge + tx * g_tx * go
    ge_tx = ge.substitute("x", tx)
    numer = tx * (ring.one() + x * ge_tx)
    denom = ring.one() - x * x * ge_tx * (ring.one() + t * ge_tx)
    j231 = numer * denom.reciprocal()
    return j312, j231


# ---------------------------------------------------------------------------
# odd-descent Dyck paths refined by UD- and UDD-factors


def p_series(s_order: int, t_order: int, x_order: int) -> Series:
    """Solution of P = 1 + sxP - x^2 P^2 + (x^2 + stx^3 - sx^3) P^3.

    [s^i t^k x^n] P counts Dyck paths of semilength n with all descents
    odd, i UD-factors and k UDD-factors; equivalently 123-avoiding Jacobi
    permutations of [n] with i left-to-right minima and k ascents.
    """
    ring = SeriesRing(("s", "t", "x"), (s_order, t_order, x_order))
    s, t, x = ring.var("s"), ring.var("t"), ring.var("x")
    poly = x**2 + s * t * x**3 - s * x**3

    def update(p: Series) -> Series:
        p2 = p * p
        return ring.one() + s * x * p - x * x * p2 + poly * (p2 * p)

    return solve_fixed_point(update, ring.one(), max_iter=x_order + 2)


def q_series(p: Series) -> Series:
    """Companion series Q = stx^2 P^2 + xP(P - 1 - sxP) for paths whose
    last descent is even and all other descents odd."""
    ring = p.ring
    s, t, x = ring.var("s"), ring.var("t"), ring.var("x")
    return s * t * x * x * p * p + x * p * (p - 1 - s * x * p)


# ---------------------------------------------------------------------------
# identity reports


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class IdentityReport:
    checks: tuple[IdentityCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def summary(self) -> str:
        return "\n".join(
            f"{'ok  ' if c.ok else 'FAIL'} {c.name}" + (f" ({c.detail})" if c.detail else "")
            for c in self.checks
        )


def _first_mismatch(a: Series, b: Series) -> str:
    keys = sorted(set(a.coeffs) | set(b.coeffs))
    for e in keys:
        if a.coeffs.get(e, 0) != b.coeffs.get(e, 0):
            return f"first mismatch at {e}: {a.coeffs.get(e, 0)} != {b.coeffs.get(e, 0)}"
    return ""


def _check(name: str, lhs: Series, rhs: Series) -> IdentityCheck:
    ok = lhs == rhs
    return IdentityCheck(name, ok, "" if ok else _first_mismatch(lhs, rhs))


def substitution_identities(t_order: int = 12, x_order: int = 12) -> IdentityReport:
    """Verify the functional equations tying F_e, F_o to U and V.

    Checks, coefficient by coefficient up to the given orders:
    the four defining equations of F_e and F_o, the two substitution
    identities F_e = 1 + tx^2 U(t, tx^2) and F_o = x V(t, tx^2), and the
    implicit equations of U and V themselves. Returns a report rather
    than raising, so callers can surface every failure at once.
    """
    ring = SeriesRing(("t", "x"), (t_order, x_order))
    t, x = ring.var("t"), ring.var("x")
    fe = fe_series(t_order, x_order)
    fo = fo_series(t_order, x_order)
    u = u_series(t_order, x_order)
    v = v_series(t_order, x_order)
    tx2 = t * x * x
    checks = [
        _check("fe_cubic", fe, ring.one() + tx2 * (1 - t) * fe**2 + t**2 * x**2 * fe**3),
        _check("fe_via_fo", fe * (ring.one() - t * x * fo), ring.one()),
        _check("fo_via_fe", fo, x * fe + t * x * (fe - 1) * fe),
        _check("fo_cubic", fo, x + (t - 1) * t * x**2 * fo + 2 * t * x * fo**2 - t**2 * x**2 * fo**3),
        _check("u_equation", u, (ring.one() + t * x * u) * (ring.one() + x * u) ** 2),
        _check("v_equation", v * (ring.one() - x * v) ** 2, ring.one() + (t - 1) * x * v),
        _check("fe_substitution", fe, ring.one() + tx2 * u.substitute("x", tx2)),
        _check("fo_substitution", fo, x * v.substitute("x", tx2)),
    ]
    return IdentityReport(tuple(checks))

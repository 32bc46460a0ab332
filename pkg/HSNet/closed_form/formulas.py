"""
Closed-form values of the network design game.

Notation shared by every function: n nodes in total, s singletons, m
singleton leaves, k = n - s nodes outside the singletons, f the component
value and beta the capture penalty of a UtilitySpec. All quantities are exact
Fractions. Each function re-derives the same quantity a second way wherever an
equivalent form exists and raises ClosedFormIdentityError on disagreement.

Domain rules: a design keeps either every node isolated (s = n) or at least
four nodes outside the singletons (s <= n - 4); s in {n-3, n-2, n-1} is
rejected with code "domain".
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Sequence

from django.core.exceptions import ValidationError

from payoff_engine.rationals import format_rational
from payoff_engine.utilities import UtilitySpec

logger = logging.getLogger(__name__)


class ClosedFormIdentityError(AssertionError):
    """Two equivalent forms of a closed-form quantity disagree."""


def _domain_error(message: str, **params) -> ValidationError:
    return ValidationError(message, code="domain", params=params)


def _require_component(n: int, s: int, minimum: int) -> int:
    k = n - s
    if s < 0 or k < minimum:
        raise _domain_error(
            "n - s must be at least %(minimum)s (n=%(n)s, s=%(s)s)", minimum=minimum, n=n, s=s
        )
    return k


def check_singleton_count(n: int, s: int) -> None:
    """
    Raises:
        ValidationError: unless 0 <= s <= n - 4 or s = n
    """
    if n < 1 or s < 0 or s > n or n - 4 < s < n:
        raise _domain_error("s=%(s)s is not a valid singleton count for n=%(n)s", n=n, s=s)


def _identity(name: str, left: Fraction, right: Fraction) -> None:
    if left != right:
        raise ClosedFormIdentityError(f"{name}: {left} != {right}")


@dataclass(frozen=True)
class ClosedFormContext:
    n: int
    s: int
    m: int
    u: UtilitySpec
    r_empty: bool | None = None

    def __post_init__(self):
        if not 0 <= self.s <= self.n:
            raise _domain_error("s=%(s)s must lie in 0..%(n)s", s=self.s, n=self.n)
        if not 0 <= self.m <= (self.n - self.s) // 2:
            raise _domain_error(
                "m=%(m)s must lie in 0..%(top)s", m=self.m, top=(self.n - self.s) // 2
            )
        if self.r_empty and self.k != 2 * self.m:
            raise _domain_error("R(G) can only be empty when n - s = 2m")

    @property
    def k(self) -> int:
        return self.n - self.s

    @property
    def r(self) -> int:
        return self.k - 2 * self.m

    @property
    def is_r_empty(self) -> bool:
        return self.k == 2 * self.m if self.r_empty is None else self.r_empty


# ----------------------------------------------------------------------------
# Building blocks
# ----------------------------------------------------------------------------


def value_D(n: int, s: int, u: UtilitySpec) -> Fraction:
    """D(n, s) = f(n - s - 1) + beta."""
    k = _require_component(n, s, 1)
    return u.f(k - 1) + u.beta


def threshold_T(n: int, s: int, u: UtilitySpec) -> Fraction:
    """
    (n-s-3) f(n-s-1) - (n-s-2) f(n-s-2).

    The component is a cycle when T >= beta and a maximal core-periphery
    network otherwise.
    """
    k = _require_component(n, s, 3)
    t = (k - 3) * u.f(k - 1) - (k - 2) * u.f(k - 2)
    d_form = (k - 3) * value_D(n, s, u) - (k - 2) * value_D(n - 1, s, u) + u.beta
    _identity("T", t, d_form)
    return t


def value_B(s: int, u: UtilitySpec) -> Fraction:
    """Seeker's payoff from seeking uniformly among s singletons when the hider is there."""
    if s < 1:
        raise _domain_error("B(s) needs s >= 1")
    return u.beta / s - (1 - Fraction(1, s)) * u.f(1)


def _rho(ctx: ClosedFormContext) -> Fraction:
    d = value_D(ctx.n, ctx.s, ctx.u)
    d1 = value_D(ctx.n - 1, ctx.s, ctx.u)
    return ctx.r * d1 / (3 * ctx.m * d + ctx.r * d1)


def mixing_rho(n: int, m: int, s: int, u: UtilitySpec) -> Fraction:
    """Interior weight on R(G): (n-s-2m) D(n-1,s) / (3m D(n,s) + (n-s-2m) D(n-1,s)); 1 at m = 0."""
    return _rho(ClosedFormContext(n, s, m, u))


def _context(n: int, m: int, s: int, u: UtilitySpec, r_empty: bool | None) -> ClosedFormContext:
    ctx = ClosedFormContext(n, s, m, u, r_empty)
    _require_component(n, s, 4)
    return ctx


def value_A(n: int, m: int, s: int, u: UtilitySpec, r_empty: bool | None = None) -> Fraction:
    """
    The seeker's guarantee against a hider outside the singletons, before
    any singleton mixing: A(n, m, s).

    Strictly increasing in m when T > beta, strictly decreasing when
    T < beta and constant when T = beta.

    Raises:
        ValidationError: outside the context invariants or when n - s < 4
        ClosedFormIdentityError: if the two closed forms disagree
    """
    ctx = _context(n, m, s, u, r_empty)
    k, beta = ctx.k, u.beta
    f1, f2 = u.f(k - 1), u.f(k - 2)
    d, d1 = f1 + beta, f2 + beta
    t = threshold_T(n, s, u)
    width = 3 * d - 2 * d1
    d_form = d * d1 / width * (3 * (beta - t) / (m * width + k * d1) - 1) + beta

    if ctx.is_r_empty:
        value = beta / m - Fraction(m - 1, m) * f2
    elif m == 0:
        value = 3 * beta / k - (1 - Fraction(3, k)) * f1
    else:
        rho = _rho(ctx)
        value = (1 - rho) * (beta / m - (1 - Fraction(1, m)) * f2) - rho * f1
    _identity("A", value, d_form)
    return value


# ----------------------------------------------------------------------------
# Seeker mixing and lower bounds
# ----------------------------------------------------------------------------


def mixing_lambda_S(n: int, m: int, s: int, u: UtilitySpec, r_empty: bool | None = None) -> Fraction:
    """Probability the seeker inspects a singleton."""
    if s == n:
        return Fraction(1)
    check_singleton_count(n, s)
    if s == 0:
        return Fraction(0)
    a = value_A(n, m, s, u, r_empty)
    f1, fk = u.f(1), u.f(n - s)
    if a > -f1:
        return (a + f1) / (a + value_B(s, u) + f1 + fk)
    return Fraction(0)


def lower_bound_R(
    n: int,
    m: int,
    s: int,
    u: UtilitySpec,
    lambda_R: Fraction | None = None,
    lambda_S: Fraction | None = None,
    r_empty: bool | None = None,
) -> Fraction:
    """Seeker's guarantee when the hider is in R(G); needs R(G) nonempty."""
    ctx = _context(n, m, s, u, r_empty)
    if ctx.r == 0:
        raise _domain_error("L^R is undefined when R(G) is empty")
    lam_r = mixing_lambda_R(n, m, s, u, r_empty) if lambda_R is None else lambda_R
    lam_s = mixing_lambda_S(n, m, s, u, r_empty) if lambda_S is None else lambda_S
    k, r = ctx.k, ctx.r
    f1, f2 = u.f(k - 1), u.f(k - 2)
    inner = lam_r * (3 * u.beta / r - (1 - Fraction(3, r)) * f1) - (1 - lam_r) * f2
    return (1 - lam_s) * inner - lam_s * u.f(k)


def lower_bound_M(
    n: int,
    m: int,
    s: int,
    u: UtilitySpec,
    lambda_R: Fraction | None = None,
    lambda_S: Fraction | None = None,
    r_empty: bool | None = None,
) -> Fraction:
    """Seeker's guarantee when the hider is in M(G) or SL(G); needs m >= 1."""
    ctx = _context(n, m, s, u, r_empty)
    if m == 0:
        raise _domain_error("L^M is undefined without singleton leaves")
    lam_r = mixing_lambda_R(n, m, s, u, r_empty) if lambda_R is None else lambda_R
    lam_s = mixing_lambda_S(n, m, s, u, r_empty) if lambda_S is None else lambda_S
    k = ctx.k
    f1, f2 = u.f(k - 1), u.f(k - 2)
    inner = (1 - lam_r) * (u.beta / m - (1 - Fraction(1, m)) * f2) - lam_r * f1
    return (1 - lam_s) * inner - lam_s * u.f(k)


def mixing_lambda_R(n: int, m: int, s: int, u: UtilitySpec, r_empty: bool | None = None) -> Fraction:
    """
    Probability the seeker inspects R(G) given that it skips the singletons.

    Zero when R(G) is empty; otherwise the weight that makes the guarantees
    on R(G) and on M(G) equal.
    """
    ctx = _context(n, m, s, u, r_empty)
    check_singleton_count(n, s)
    if ctx.is_r_empty:
        return Fraction(0)
    rho = _rho(ctx)
    if m >= 1 and ctx.r >= 1:
        lam_s = mixing_lambda_S(n, m, s, u, r_empty)
        _identity(
            "L^R = L^M",
            lower_bound_R(n, m, s, u, rho, lam_s, r_empty),
            lower_bound_M(n, m, s, u, rho, lam_s, r_empty),
        )
    return rho


def lower_bound_L(n: int, m: int, s: int, u: UtilitySpec, r_empty: bool | None = None) -> Fraction:
    """Seeker's guarantee against a hider outside the singletons."""
    check_singleton_count(n, s)
    if s == n:
        raise _domain_error("L is undefined without a non-singleton component")
    lam_s = mixing_lambda_S(n, m, s, u, r_empty)
    return (1 - lam_s) * value_A(n, m, s, u, r_empty) - lam_s * u.f(n - s)


def lower_bound_S(n: int, m: int, s: int, u: UtilitySpec, lambda_S: Fraction | None = None) -> Fraction:
    """Seeker's guarantee against a hider in a singleton."""
    lam_s = mixing_lambda_S(n, m, s, u) if lambda_S is None else lambda_S
    return lam_s * value_B(s, u) - (1 - lam_s) * u.f(1)


def bound_Q(n: int, m: int, s: int, u: UtilitySpec, r_empty: bool | None = None) -> Fraction:
    """
    Payoff the seeker secures on any network with s singletons and m
    singleton leaves.

    Raises:
        ValidationError: for s in {n-3, n-2, n-1} or a bad context
    """
    check_singleton_count(n, s)
    if s == n:
        return value_B(n, u)
    a = value_A(n, m, s, u, r_empty)
    f1, fk = u.f(1), u.f(n - s)
    if s == 0 or a <= -f1:
        return a
    b = value_B(s, u)
    q = (a * b - f1 * fk) / (a + b + f1 + fk)
    lam_s = (a + f1) / (a + b + f1 + fk)
    _identity("Q = L", q, (1 - lam_s) * a - lam_s * fk)
    _identity("Q = L^S", q, lam_s * b - (1 - lam_s) * f1)
    return q


def phi(z: Fraction, s: int, n: int, u: UtilitySpec) -> Fraction:
    """Blends a component guarantee z with uniform seeking among s singletons; strictly increasing in z."""
    if not 1 <= s <= n:
        raise _domain_error("phi needs 1 <= s <= n")
    f1, fk = u.f(1), u.f(n - s)
    if z > -f1:
        b = value_B(s, u)
        return (b * z - f1 * fk) / (z + b + fk + f1)
    return Fraction(z)


# ----------------------------------------------------------------------------
# Optimal networks for a fixed singleton count
# ----------------------------------------------------------------------------


def _optimal_m(n: int, s: int, u: UtilitySpec) -> int:
    k = n - s
    if threshold_T(n, s, u) >= u.beta:
        return 0
    return k // 2 if k % 2 == 0 else (k - 3) // 2


def bound_Qbar(n: int, s: int, u: UtilitySpec) -> Fraction:
    """
    The seeker's equilibrium payoff over networks with exactly s singletons;
    the hider's is its negation.

    T >= beta selects the cycle (m = 0). T < beta selects the maximal
    core-periphery network: m = (n-s)/2 for even n-s, m = (n-s-3)/2 for odd.
    """
    check_singleton_count(n, s)
    if s == n:
        return value_B(n, u)
    m = _optimal_m(n, s, u)
    q = bound_Q(n, m, s, u)
    k = n - s
    if m and k % 2 == 1:
        # the unattainable (n-s-1)/2 bound sits strictly below
        upper = bound_Q(n, (k - 1) // 2, s, u)
        if not q > upper:
            raise ClosedFormIdentityError(f"odd Qbar {q} is not above the half-periphery bound {upper}")
    return q


def abar(n: int, s: int, u: UtilitySpec) -> Fraction:
    """A(n, m, s) at the m selected by bound_Qbar."""
    check_singleton_count(n, s)
    if s == n:
        raise _domain_error("Abar is undefined without a non-singleton component")
    return value_A(n, _optimal_m(n, s, u), s, u)


def mixing_kappa(n: int, s: int, u: UtilitySpec, a_bar: Fraction | None = None) -> Fraction:
    """Probability the hider hides in the non-singleton component."""
    check_singleton_count(n, s)
    if s == n:
        raise _domain_error("kappa is undefined without a non-singleton component")
    if s == 0:
        return Fraction(1)
    computed = abar(n, s, u)
    a = computed if a_bar is None else Fraction(a_bar)
    f1, fk, b = u.f(1), u.f(n - s), value_B(s, u)
    kappa = (b + f1) / (a + b + fk + f1) if a > -f1 else Fraction(1)
    if a == computed:
        _identity("hider guarantee = -Qbar", -kappa * a + (1 - kappa) * f1, -bound_Qbar(n, s, u))
    return kappa


def _require_odd_cp(n: int, s: int, u: UtilitySpec) -> int:
    k = _require_component(n, s, 5)
    if k % 2 == 0:
        raise _domain_error("n - s must be odd (n=%(n)s, s=%(s)s)", n=n, s=s)
    if not threshold_T(n, s, u) < u.beta:
        raise _domain_error("odd core-periphery quantities need T(n, s) < beta")
    return k


def mixing_mu(n: int, s: int, u: UtilitySpec) -> Fraction:
    """Share of the component mass the hider puts on the periphery of an odd maximal core-periphery network."""
    k = _require_odd_cp(n, s, u)
    beta, f1, f2 = u.beta, u.f(k - 1), u.f(k - 2)
    mu = ((k - 3) * f2 + (k - 3) * beta) / ((k - 3) * f1 + 2 * f2 + (k - 1) * beta)
    orphan_seek = mu * f1 - (1 - mu) * beta
    periphery_seek = mu * (-2 * beta / (k - 3) + (1 - Fraction(2, k - 3)) * f2) + (1 - mu) * f2
    _identity("orphan vs periphery guarantee", orphan_seek, periphery_seek)
    _identity("mu guarantee = -A", orphan_seek, -value_A(n, (k - 3) // 2, s, u))
    return mu


def _orphan_x(k: int, u: UtilitySpec) -> Fraction:
    return 2 * u.beta / (k - 1) - (1 - Fraction(2, k - 1)) * u.f(k - 2)


def orphan_gap(n: int, s: int, u: UtilitySpec) -> Fraction:
    """X(n, s) - A(n, (n-s-3)/2, s), in closed form; positive for strictly increasing f."""
    k = _require_component(n, s, 5)
    if k % 2 == 0:
        raise _domain_error("n - s must be odd (n=%(n)s, s=%(s)s)", n=n, s=s)
    beta, f1, f2 = u.beta, u.f(k - 1), u.f(k - 2)
    closed = 2 * (f1 - f2) * (f2 + beta) * (k - 3) / ((k - 1) * (f1 * (k - 3) + 2 * f2 + beta * (k - 1)))
    _identity("X - A", closed, _orphan_x(k, u) - value_A(n, (k - 3) // 2, s, u))
    return closed


def orphan_bound_XY(n: int, s: int, u: UtilitySpec) -> tuple[Fraction, Fraction]:
    """
    (X, Y): seeker guarantees on odd networks with (n-s-1)/2 singleton
    leaves. Both exceed the values the three-orphan design concedes.
    """
    k = _require_odd_cp(n, s, u)
    x = _orphan_x(k, u)
    y = phi(x, s, n, u) if s >= 1 else x
    m = (k - 3) // 2
    a, q = value_A(n, m, s, u), bound_Q(n, m, s, u)
    if not x > a:
        raise ClosedFormIdentityError(f"X={x} does not exceed A={a}")
    if not y > q:
        raise ClosedFormIdentityError(f"Y={y} does not exceed Q={q}")
    return x, y


def optimal_singletons(n: int, u: UtilitySpec) -> tuple[frozenset[int], Fraction]:
    """
    S*(n): every singleton count minimising Qbar, with the minimum. The
    hider's optimal payoff is minus that minimum.
    """
    if n < 1:
        raise _domain_error("n must be positive")
    values = {s: bound_Qbar(n, s, u) for s in [*range(0, n - 3), n]}
    best = min(values.values())
    winners = frozenset(s for s, q in values.items() if q == best)
    logger.debug("S*(%d) = %s for %s, Qbar = %s", n, sorted(winners), u.label, best)
    return winners, best


# ----------------------------------------------------------------------------
# Linear utilities f(x) = slope * x
# ----------------------------------------------------------------------------


def _linear(u: UtilitySpec) -> tuple[Fraction, Fraction]:
    if not u.is_linear:
        raise ValidationError("linear closed forms need a linear utility", code="utility")
    return u.slope, u.beta / u.slope


def linear_A_tilde(n: int, s: int, u: UtilitySpec) -> Fraction:
    """A(n, (n-s)/2, s) for linear f, defined on 0 <= s <= n - 2."""
    lam, bt = _linear(u)
    k = _require_component(n, s, 2)
    return lam * (2 * (bt - 2) / k + 4 - k)


def linear_rho(n: int, s: int, u: UtilitySpec) -> Fraction:
    """Weight on singleton seeking that equalises the two guarantees for linear f."""
    _, bt = _linear(u)
    k = _require_component(n, s, 2)
    if s < 1:
        raise _domain_error("linear rho needs s >= 1")
    head = s * (2 * (bt - 2) - k * (k - 5))
    return head / (head + k * (s * (k - 1) + bt + 1))


def linear_case_AB(n: int, s: int, u: UtilitySpec) -> Fraction:
    """
    Seeker guarantee on a maximal core-periphery design with s singletons for
    linear f, as one rational function of s; equals B(n) at s = n.
    """
    lam, bt = _linear(u)
    if s == n:
        return value_B(n, u)
    if not 1 <= s <= n - 2:
        raise _domain_error("AB(n, s) needs 1 <= s <= n - 2 or s = n")
    k = n - s
    a_tilde = linear_A_tilde(n, s, u)
    rho = linear_rho(n, s, u)
    ab = (1 - rho) * a_tilde - rho * lam * k

    num = (
        n * n * (bt + 1)
        - 2 * n * (s * (bt - 1) + 2 * (bt + 1))
        + s * s * (bt - 3)
        + 6 * s * bt
        - 2 * (bt + 1) * (bt - 2)
    )
    den = s * (4 * s - bt + 5) - n * (4 * s + bt + 1)
    if den:
        _identity("AB rational form", ab, lam * num / den)
    if k % 2 == 0 and k >= 4:
        _identity("A tilde", a_tilde, value_A(n, k // 2, s, u))
        if a_tilde > -lam:
            _identity("AB = Q", ab, bound_Q(n, k // 2, s, u))
    return ab


def linear_W(n: int, s: Fraction | int, u: UtilitySpec) -> Fraction:
    """Polynomial whose sign is the sign of d AB(n, s) / ds."""
    _, bt = _linear(u)
    s = Fraction(s)
    x = 4 * n - bt - 15
    y = 4 * n * n + n * (bt - 19) - 8 * (bt - 2)
    half = (bt - 2) / 2
    return x * s * s - 2 * y * s + (n + half) * y - half * (n - 4) * (bt + 1)


def is_decreasing_or_unimodal(values: Sequence[Fraction]) -> bool:
    """True unless the sequence strictly rises again after strictly falling."""
    fallen = False
    for prev, cur in zip(values, values[1:]):
        if cur < prev:
            fallen = True
        elif cur > prev and fallen:
            return False
    return True


# ----------------------------------------------------------------------------
# Utility classes with a known topology
# ----------------------------------------------------------------------------


def second_differences(u: UtilitySpec, upto: int) -> list[Fraction]:
    """f(x+1) - 2 f(x) + f(x-1) for x in 1..upto-1."""
    v = u.values(upto)
    return [v[x + 1] - 2 * v[x] + v[x - 1] for x in range(1, upto)]


def is_concave_on(u: UtilitySpec, upto: int) -> bool:
    return all(d <= 0 for d in second_differences(u, upto))


def is_slow_convex_on(u: UtilitySpec, upto: int) -> bool:
    """Convex with f(x+1) < x/(x-1) f(x) for 2 <= x < upto."""
    v = u.values(upto)
    return all(d >= 0 for d in second_differences(u, upto)) and all(
        v[x + 1] * (x - 1) < x * v[x] for x in range(2, upto)
    )


# ----------------------------------------------------------------------------
# Reports
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class ValueReport:
    T: Fraction | None = None
    D_n: Fraction | None = None
    D_n1: Fraction | None = None
    A: Fraction | None = None
    B: Fraction | None = None
    rho: Fraction | None = None
    lambda_R: Fraction | None = None
    lambda_S: Fraction | None = None
    L: Fraction | None = None
    Q: Fraction | None = None
    Qbar: Fraction | None = None
    kappa: Fraction | None = None
    mu: Fraction | None = None

    def __post_init__(self):
        for name in ("rho", "lambda_R", "lambda_S", "kappa", "mu"):
            value = getattr(self, name)
            if value is not None and not 0 <= value <= 1:
                raise ClosedFormIdentityError(f"{name}={value} is not a probability")

    def to_dict(self, exact: bool = True) -> dict:
        return {
            f.name: None if getattr(self, f.name) is None else format_rational(getattr(self, f.name), exact)
            for f in fields(self)
        }


def value_report(ctx: ClosedFormContext) -> ValueReport:
    """Every quantity defined for the context; undefined ones stay None."""
    n, s, m, u = ctx.n, ctx.s, ctx.m, ctx.u
    check_singleton_count(n, s)
    if s == n:
        b = value_B(n, u)
        return ValueReport(B=b, lambda_S=Fraction(1), Q=b, Qbar=b)
    k = ctx.k
    t = threshold_T(n, s, u)
    odd_cp = k % 2 == 1 and t < u.beta
    return ValueReport(
        T=t,
        D_n=value_D(n, s, u),
        D_n1=value_D(n - 1, s, u),
        A=value_A(n, m, s, u, ctx.r_empty),
        B=value_B(s, u) if s else None,
        rho=_rho(ctx),
        lambda_R=mixing_lambda_R(n, m, s, u, ctx.r_empty),
        lambda_S=mixing_lambda_S(n, m, s, u, ctx.r_empty),
        L=lower_bound_L(n, m, s, u, ctx.r_empty),
        Q=bound_Q(n, m, s, u, ctx.r_empty),
        Qbar=bound_Qbar(n, s, u),
        kappa=mixing_kappa(n, s, u),
        mu=mixing_mu(n, s, u) if odd_cp else None,
    )


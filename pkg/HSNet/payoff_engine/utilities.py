"""
Utility specifications: the component-value function f and the capture penalty beta.

f is only ever evaluated on component sizes 0..n. Every family returns exact
Fractions; powers with a non-integer exponent are computed in floating point
and converted exactly, and the UtilitySpec is then flagged as inexact so reports can
say so.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Mapping

from django.core.exceptions import ValidationError

from .rationals import format_rational, parse_rational

logger = logging.getLogger(__name__)

FAMILIES = ("linear", "power", "ratio_power", "table")
ALIASES = {
    "identity": ("linear", {"slope": 1}),
    "square": ("power", {"gamma": 2}),
}


@dataclass(frozen=True)
class UtilitySpec:
    family: str
    beta: Fraction = Fraction(0)
    slope: Fraction | None = None
    gamma: Fraction | None = None
    table: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        if self.beta < 0:
            raise ValidationError("beta must be nonnegative", code="utility")
        if self.family not in FAMILIES:
            raise ValidationError("Unknown utility family %(f)s", code="utility", params={"f": self.family})
        if self.family == "linear" and (self.slope is None or self.slope <= 0):
            raise ValidationError("linear utilities need slope > 0", code="utility")
        if self.family == "power" and (self.gamma is None or self.gamma <= 0):
            raise ValidationError("power utilities need gamma > 0", code="utility")
        if self.family == "ratio_power" and (self.gamma is None or self.gamma <= 1):
            raise ValidationError("ratio_power utilities need gamma > 1", code="utility")
        if self.family == "table":
            self._check_table()

    def _check_table(self):
        values = self.table or ()
        if not values or values[0] != 0:
            raise ValidationError("table utilities need f(0) = 0", code="utility")
        for x in range(1, len(values)):
            if values[x] <= values[x - 1]:
                raise ValidationError(
                    "table utility is not strictly increasing at %(x)s", code="utility", params={"x": x}
                )

    @property
    def exact(self) -> bool:
        return self.gamma is None or self.gamma.denominator == 1

    @property
    def is_linear(self) -> bool:
        return self.family == "linear"

    def f(self, x: int) -> Fraction:
        if x < 0:
            raise ValidationError("component size must be nonnegative", code="utility")
        if self.family == "linear":
            return self.slope * x
        if self.family == "table":
            if x >= len(self.table):
                raise ValidationError(
                    "table utility is undefined at %(x)s (defined up to %(top)s)",
                    code="utility",
                    params={"x": x, "top": len(self.table) - 1},
                )
            return self.table[x]
        if x == 0:
            return Fraction(0)
        if self.gamma.denominator == 1:
            g = int(self.gamma)
            if self.family == "power":
                return Fraction(x) ** g
            return Fraction(x**g, (x + 1) ** (g - 1))
        g = float(self.gamma)
        if self.family == "power":
            return Fraction(x**g)
        return Fraction(x**g / (x + 1) ** (g - 1))

    __call__ = f

    def values(self, upto: int) -> tuple[Fraction, ...]:
        """f(0), ..., f(upto)."""
        return tuple(self.f(x) for x in range(upto + 1))

    def with_beta(self, beta: Fraction | int | str) -> "UtilitySpec":
        return UtilitySpec(self.family, parse_rational(beta, "beta"), self.slope, self.gamma, self.table)

    def params(self) -> dict:
        if self.family == "linear":
            return {"slope": format_rational(self.slope)}
        if self.family == "table":
            return {"values": [format_rational(v) for v in self.table]}
        return {"gamma": format_rational(self.gamma)}

    def to_dict(self) -> dict:
        return {"family": self.family, "params": self.params(), "beta": format_rational(self.beta)}

    @property
    def label(self) -> str:
        params = ",".join(f"{k}={v}" for k, v in self.params().items())
        return f"{self.family}({params}) beta={format_rational(self.beta)}"


def builtin_utilities(name: str, params: Mapping | None = None, beta: Fraction | int | str = 0) -> UtilitySpec:
    """
    Build one of the supported utility families.

    Args:
        name: linear, power, ratio_power, table, or an alias (identity, square)
        params: slope for linear, gamma for the power families, values for table
        beta: capture penalty

    Raises:
        ValidationError: if the parameters are invalid for the family
    """
    params = dict(params or {})
    if name in ALIASES:
        name, defaults = ALIASES[name]
        params = {**defaults, **params}
    beta_q = parse_rational(beta, "beta")
    if name == "linear":
        spec = UtilitySpec("linear", beta_q, slope=parse_rational(params.get("slope", 1), "slope"))
    elif name in ("power", "ratio_power"):
        if "gamma" not in params:
            raise ValidationError("%(name)s utilities need gamma", code="utility", params={"name": name})
        spec = UtilitySpec(name, beta_q, gamma=parse_rational(params["gamma"], "gamma"))
    elif name == "table":
        values = params.get("values")
        if not values:
            raise ValidationError("table utilities need values", code="utility")
        spec = UtilitySpec("table", beta_q, table=tuple(parse_rational(v, "values") for v in values))
    else:
        raise ValidationError("Unknown utility family %(f)s", code="utility", params={"f": name})
    if not spec.exact:
        logger.warning("Utility %s is evaluated in floating point and converted to rationals", spec.label)
    return spec


def identity(beta: Fraction | int | str = 0) -> UtilitySpec:
    return builtin_utilities("identity", beta=beta)


def square(beta: Fraction | int | str = 0) -> UtilitySpec:
    return builtin_utilities("square", beta=beta)


def ratio_square(beta: Fraction | int | str = 0) -> UtilitySpec:
    """f(x) = x^2/(x+1)."""
    return builtin_utilities("ratio_power", {"gamma": 2}, beta=beta)


def rounded_sqrt_table(upto: int, beta: Fraction | int | str = 0, denominator: int = 10**6) -> UtilitySpec:
    """Concave table f(x) ~ sqrt(x) rounded to rationals, strictly increasing on 0..upto."""
    values = [Fraction(isqrt(x * denominator * denominator), denominator) for x in range(upto + 1)]
    return builtin_utilities("table", {"values": values}, beta=beta)

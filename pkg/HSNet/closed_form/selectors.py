"""Read-only tabulations of the closed forms."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from payoff_engine.rationals import format_rational
from payoff_engine.utilities import UtilitySpec

from .formulas import bound_Q, bound_Qbar, mixing_lambda_S, mixing_rho, threshold_T, value_A, value_B

VALUE_TABLE_COLUMNS = ("n", "s", "m", "T", "A", "B", "rho", "lambda_S", "Q", "Qbar")


def _row(n: int, s: int, m: int, exact: bool, **values: Fraction | None) -> dict[str, str]:
    row = {"n": str(n), "s": str(s), "m": str(m)}
    for column in VALUE_TABLE_COLUMNS[3:]:
        value = values.get(column)
        row[column] = "" if value is None else format_rational(value, exact)
    return row


def value_table_rows(n_values: Iterable[int], u: UtilitySpec) -> list[dict[str, str]]:
    """
    One row per (n, s, m) with s in 0..n-4 and m in 0..(n-s)/2, then a row for
    s = n. Quantities undefined for a row are left blank.
    """
    rows = []
    for n in n_values:
        for s in range(0, n - 3):
            t, qbar = threshold_T(n, s, u), bound_Qbar(n, s, u)
            b = value_B(s, u) if s else None
            for m in range((n - s) // 2 + 1):
                rows.append(
                    _row(
                        n, s, m, u.exact,
                        T=t,
                        A=value_A(n, m, s, u),
                        B=b,
                        rho=mixing_rho(n, m, s, u),
                        lambda_S=mixing_lambda_S(n, m, s, u),
                        Q=bound_Q(n, m, s, u),
                        Qbar=qbar,
                    )
                )
        b_n = value_B(n, u)
        rows.append(_row(n, n, 0, u.exact, B=b_n, lambda_S=Fraction(1), Q=b_n, Qbar=b_n))
    return rows

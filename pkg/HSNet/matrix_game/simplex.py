"""
Exact primal simplex over Fractions.

The tableau maximises; entering columns and leaving rows are chosen by
Bland's rule (smallest eligible index, ratio ties broken by the smallest
basic variable) so degenerate problems terminate.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

logger = logging.getLogger(__name__)

ZERO = Fraction(0)

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"


class SimplexTableau:
    """
    Dense tableau in canonical form: the columns listed in `basis` are unit
    vectors and every right-hand side is nonnegative.
    """

    def __init__(
        self,
        rows: Sequence[Sequence[Fraction]],
        rhs: Sequence[Fraction],
        objective: Sequence[Fraction],
        basis: Sequence[int],
    ):
        self.A = [[Fraction(v) for v in row] for row in rows]
        self.b = [Fraction(v) for v in rhs]
        self.basis = list(basis)
        self.m = len(self.A)
        self.n = len(objective)
        self.pivots = 0
        self.set_objective(objective)

    def set_objective(self, objective: Sequence[Fraction]) -> None:
        """Install an objective and price out the basic columns."""
        c = [Fraction(v) for v in objective]
        self.r = list(c)
        self.z = ZERO
        for i, j in enumerate(self.basis):
            if c[j]:
                factor = c[j]
                row = self.A[i]
                for col in range(self.n):
                    if row[col]:
                        self.r[col] -= factor * row[col]
                self.z += factor * self.b[i]

    def pivot(self, i: int, j: int) -> None:
        piv = self.A[i][j]
        row = [v / piv for v in self.A[i]]
        self.A[i] = row
        self.b[i] /= piv
        for k in range(self.m):
            if k != i and self.A[k][j]:
                f = self.A[k][j]
                other = self.A[k]
                for col in range(self.n):
                    if row[col]:
                        other[col] -= f * row[col]
                self.b[k] -= f * self.b[i]
        f = self.r[j]
        if f:
            for col in range(self.n):
                if row[col]:
                    self.r[col] -= f * row[col]
            self.z += f * self.b[i]
        self.basis[i] = j
        self.pivots += 1

    def bland_step(self, allowed: Sequence[bool] | None = None) -> str | None:
        entering = next(
            (j for j in range(self.n) if self.r[j] > 0 and (allowed is None or allowed[j])),
            None,
        )
        if entering is None:
            return OPTIMAL
        candidates = [(self.b[i] / self.A[i][entering], self.basis[i], i) for i in range(self.m) if self.A[i][entering] > 0]
        if not candidates:
            return UNBOUNDED
        _, _, leaving = min(candidates)
        self.pivot(leaving, entering)
        return None

    def run(self, allowed: Sequence[bool] | None = None) -> str:
        while True:
            status = self.bland_step(allowed)
            if status is not None:
                logger.debug("simplex %s after %d pivots, objective %s", status, self.pivots, self.z)
                return status

    def primal(self) -> list[Fraction]:
        x = [ZERO] * self.n
        for i, j in enumerate(self.basis):
            x[j] = self.b[i]
        return x


@dataclass
class LPResult:
    status: str
    objective: Fraction | None = None
    x: list[Fraction] = field(default_factory=list)


def solve_lp(
    c: Sequence[Fraction],
    a_ub: Sequence[Sequence[Fraction]] = (),
    b_ub: Sequence[Fraction] = (),
    a_eq: Sequence[Sequence[Fraction]] = (),
    b_eq: Sequence[Fraction] = (),
) -> LPResult:
    """
    Maximise c.x subject to a_ub x <= b_ub, a_eq x = b_eq and x >= 0.

    Two-phase method: rows that cannot start on a slack get an artificial
    variable, phase one drives the artificials to zero, phase two optimises c.
    """
    nvars = len(c)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    kinds: list[str] = []
    for coeffs, bound in zip(a_ub, b_ub):
        coeffs, bound = [Fraction(v) for v in coeffs], Fraction(bound)
        if bound >= 0:
            rows.append(coeffs)
            rhs.append(bound)
            kinds.append("slack")
        else:
            rows.append([-v for v in coeffs])
            rhs.append(-bound)
            kinds.append("surplus")
    for coeffs, bound in zip(a_eq, b_eq):
        coeffs, bound = [Fraction(v) for v in coeffs], Fraction(bound)
        sign = 1 if bound >= 0 else -1
        rows.append([sign * v for v in coeffs])
        rhs.append(sign * bound)
        kinds.append("equality")

    extra = sum(1 for kind in kinds if kind != "equality")
    artificial = sum(1 for kind in kinds if kind != "slack")
    width = nvars + extra + artificial
    table: list[list[Fraction]] = []
    basis: list[int] = []
    next_extra, next_art = nvars, nvars + extra
    for row, kind in zip(rows, kinds):
        full = row + [ZERO] * (width - nvars)
        if kind == "slack":
            full[next_extra] = Fraction(1)
            basis.append(next_extra)
            next_extra += 1
        else:
            if kind == "surplus":
                full[next_extra] = Fraction(-1)
                next_extra += 1
            full[next_art] = Fraction(1)
            basis.append(next_art)
            next_art += 1
        table.append(full)

    tableau = SimplexTableau(table, rhs, [ZERO] * width, basis)
    first_artificial = nvars + extra
    if artificial:
        tableau.set_objective([ZERO] * first_artificial + [Fraction(-1)] * artificial)
        tableau.run()
        if tableau.z < 0:
            return LPResult(INFEASIBLE)
        _drive_out_artificials(tableau, first_artificial)

    allowed = [j < first_artificial for j in range(width)]
    tableau.set_objective([Fraction(v) for v in c] + [ZERO] * (width - nvars))
    status = tableau.run(allowed)
    if status != OPTIMAL:
        return LPResult(status)
    return LPResult(OPTIMAL, tableau.z, tableau.primal()[:nvars])


def _drive_out_artificials(tableau: SimplexTableau, first_artificial: int) -> None:
    """Pivot zero-level artificials out of the basis; drop rows that are redundant."""
    i = 0
    while i < tableau.m:
        if tableau.basis[i] >= first_artificial:
            col = next((j for j in range(first_artificial) if tableau.A[i][j] != 0), None)
            if col is None:
                del tableau.A[i]
                del tableau.b[i]
                del tableau.basis[i]
                tableau.m -= 1
                continue
            tableau.pivot(i, col)
        i += 1

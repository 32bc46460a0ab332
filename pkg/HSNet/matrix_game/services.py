"""
Zero-sum matrix games solved exactly.

The row player (the hider) maximises, the column player (the seeker)
minimises. Values and strategies are exact Fractions; every solution is
checked for a zero duality gap before it is returned.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from django.core.exceptions import ValidationError

from payoff_engine.rationals import format_rational
from payoff_engine.services import PayoffMatrix

from .simplex import OPTIMAL, SimplexTableau, solve_lp

logger = logging.getLogger(__name__)


class SolverConsistencyError(AssertionError):
    """Raised when a computed solution fails its own optimality certificate."""


@dataclass(frozen=True)
class MixedStrategy:
    probs: tuple[Fraction, ...]

    def __post_init__(self):
        if any(p < 0 for p in self.probs):
            raise ValidationError("strategy has a negative probability", code="strategy")
        if sum(self.probs, Fraction(0)) != 1:
            raise ValidationError("strategy probabilities must sum to 1", code="strategy")

    @classmethod
    def from_weights(cls, size: int, weights: Mapping[int, Fraction]) -> "MixedStrategy":
        probs = [Fraction(0)] * size
        for node, w in weights.items():
            probs[node] += Fraction(w)
        return cls(tuple(probs))

    @classmethod
    def uniform_on(cls, size: int, support: Iterable[int]) -> "MixedStrategy":
        nodes = sorted(set(support))
        if not nodes:
            raise ValidationError("uniform strategy needs a nonempty support", code="strategy")
        share = Fraction(1, len(nodes))
        return cls.from_weights(size, {i: share for i in nodes})

    @classmethod
    def uniform(cls, size: int) -> "MixedStrategy":
        return cls.uniform_on(size, range(size))

    @classmethod
    def pure(cls, size: int, action: int) -> "MixedStrategy":
        return cls.from_weights(size, {action: Fraction(1)})

    def __len__(self):
        return len(self.probs)

    def __getitem__(self, index: int) -> Fraction:
        return self.probs[index]

    def support(self) -> frozenset[int]:
        return frozenset(i for i, p in enumerate(self.probs) if p > 0)

    def to_list(self, exact: bool = True) -> list[str]:
        return [format_rational(p, exact) for p in self.probs]


@dataclass(frozen=True)
class GameSolution:
    value: Fraction
    row_strategy: MixedStrategy
    col_strategy: MixedStrategy

    def to_dict(self, exact: bool = True) -> dict:
        return {
            "value": format_rational(self.value, exact),
            "hider": self.row_strategy.to_list(exact),
            "seeker": self.col_strategy.to_list(exact),
        }


def _check_dimensions(m: PayoffMatrix, row: Sequence, col: Sequence) -> None:
    if len(row) != m.row_count or len(col) != m.col_count:
        raise ValidationError(
            "strategy sizes (%(r)s, %(c)s) do not match a %(rows)sx%(cols)s matrix",
            code="dimension",
            params={"r": len(row), "c": len(col), "rows": m.row_count, "cols": m.col_count},
        )


def row_payoffs(m: PayoffMatrix, col: Sequence[Fraction]) -> list[Fraction]:
    """(M y)_i: what each pure row earns against col."""
    return [sum((a * q for a, q in zip(row, col) if q), Fraction(0)) for row in m.entries]


def col_payoffs(m: PayoffMatrix, row: Sequence[Fraction]) -> list[Fraction]:
    """(x M)_j: what each pure column concedes against row."""
    return [sum((p * m.entries[i][j] for i, p in enumerate(row) if p), Fraction(0)) for j in range(m.col_count)]


def expected_payoff(m: PayoffMatrix, row: MixedStrategy, col: MixedStrategy) -> Fraction:
    _check_dimensions(m, row.probs, col.probs)
    return sum((p * v for p, v in zip(row.probs, row_payoffs(m, col.probs))), Fraction(0))


def best_response_gap(m: PayoffMatrix, row: MixedStrategy, col: MixedStrategy) -> tuple[Fraction, Fraction]:
    """
    (row regret, column regret): the gain of each player's best pure deviation.
    Both are zero exactly when (row, col) is an equilibrium.

    Raises:
        ValidationError: if the strategy sizes do not match the matrix
    """
    _check_dimensions(m, row.probs, col.probs)
    current = expected_payoff(m, row, col)
    return max(row_payoffs(m, col.probs)) - current, current - min(col_payoffs(m, row.probs))


def pure_minimax(m: PayoffMatrix) -> Fraction:
    """min over columns of the best row reply; an upper bound on the value."""
    return min(max(m.column(j)) for j in range(m.col_count))


def solve_zero_sum(m: PayoffMatrix) -> GameSolution:
    """
    Exact value and optimal strategies.

    With every entry shifted to at least 1, the column player's problem is
    max sum(w) s.t. M'w <= 1, w >= 0; the value is 1/sum(w) minus the shift,
    y = w/sum(w), and the hider's strategy is read from the slack prices.

    Raises:
        SolverConsistencyError: if the strategies do not certify the value
    """
    rows, cols = m.row_count, m.col_count
    if rows == 0 or cols == 0:
        raise ValidationError("cannot solve an empty game", code="dimension")
    shift = 1 - m.min_entry()
    table = [
        [v + shift for v in m.entries[i]] + [Fraction(int(i == s)) for s in range(rows)] for i in range(rows)
    ]
    objective = [Fraction(1)] * cols + [Fraction(0)] * rows
    tableau = SimplexTableau(table, [Fraction(1)] * rows, objective, list(range(cols, cols + rows)))
    status = tableau.run()
    if status != OPTIMAL or tableau.z <= 0:
        raise SolverConsistencyError(f"game LP ended with status {status}")

    total = tableau.z
    w = tableau.primal()[:cols]
    prices = [-tableau.r[cols + i] for i in range(rows)]
    value = 1 / total - shift
    col_strategy = MixedStrategy(tuple(v / total for v in w))
    row_strategy = MixedStrategy(tuple(p / total for p in prices))

    guaranteed = min(col_payoffs(m, row_strategy.probs))
    conceded = max(row_payoffs(m, col_strategy.probs))
    if not guaranteed == value == conceded:
        raise SolverConsistencyError(f"duality gap: row guarantees {guaranteed}, column concedes {conceded}, value {value}")
    logger.debug("solved %dx%d game in %d pivots, value %s", rows, cols, tableau.pivots, value)
    return GameSolution(value, row_strategy, col_strategy)


def max_row_weight(m: PayoffMatrix, value: Fraction, action: int) -> Fraction:
    """
    Largest probability any optimal row strategy can put on `action`:
    max x_action over x in the simplex with (x M)_j >= value for every column.
    """
    rows = m.row_count
    a_ub = [[-m.entries[i][j] for i in range(rows)] for j in range(m.col_count)]
    b_ub = [-value] * m.col_count
    c = [Fraction(int(i == action)) for i in range(rows)]
    result = solve_lp(c, a_ub, b_ub, [[Fraction(1)] * rows], [Fraction(1)])
    if result.status != OPTIMAL:
        raise SolverConsistencyError(f"optimal-strategy LP ended with status {result.status}")
    return result.objective


def optimal_row_support(m: PayoffMatrix, value: Fraction) -> frozenset[int]:
    """Rows used by at least one optimal row strategy."""
    return frozenset(i for i in range(m.row_count) if max_row_weight(m, value, i) > 0)

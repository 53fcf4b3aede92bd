"""Work-budget configuration, in one place.

A "budget" bounds the number of elementary candidates an exhaustive
enumeration may visit (maps n^d, colorings n^d, lattice points in a box,
order ideals).  Exceeding it raises :class:`~hstarlib.errors.BudgetExceeded`
rather than silently truncating; corpus sweeps report such inputs as
skipped.
"""

from .errors import BudgetExceeded

#: Default cap on elementary enumeration steps for a single operation.
DEFAULT_WORK_BUDGET = 5_000_000


def charge(amount: int, budget: int | None, what: str) -> None:
    """Raise BudgetExceeded if ``amount`` exceeds the effective budget."""
    limit = DEFAULT_WORK_BUDGET if budget is None else budget
    if amount > limit:
        raise BudgetExceeded(f"{what} needs {amount} steps, budget is {limit}")

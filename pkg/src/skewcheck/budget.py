"""Search budget resolution (argument > SKEWCHECK_BUDGET env > default)."""

import os

DEFAULT_BUDGET = 10**7


def resolve_budget(budget=None):
    if budget is not None:
        return int(budget)
    env = os.environ.get("SKEWCHECK_BUDGET")
    if env is not None:
        return int(env)
    return DEFAULT_BUDGET

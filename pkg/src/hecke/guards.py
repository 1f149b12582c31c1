"""Desk-scale guards for the exhaustive computations.

Guarded operations refuse oversized inputs instead of degrading.  Setting
the environment variable HECKE_GUARD_OVERRIDE to an integer raises every
guard to at least that ceiling, at the caller's risk.
"""

import os


class GuardExceeded(RuntimeError):
    pass


def guard_limit(default: int) -> int:
    override = os.environ.get("HECKE_GUARD_OVERRIDE")
    if override:
        return max(default, int(override))
    return default


def check_guard(value: int, default_limit: int, what: str):
    limit = guard_limit(default_limit)
    if value > limit:
        raise GuardExceeded(f"{what} = {value} exceeds the guard ({limit})")

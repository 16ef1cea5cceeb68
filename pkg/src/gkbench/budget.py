"""Global work budget for the enumeration-heavy operations.

The cap is read from the WORKBENCH_MAX_OPS environment variable once at
import time (default 10**8 primitive term operations).  Heavy loops charge
the counter in coarse chunks; exceeding the cap raises WorkBudgetExceeded
instead of letting a runaway enumeration eat the machine.
"""

import os

DEFAULT_CAP = 10**8


class WorkBudgetExceeded(RuntimeError):
    """An enumeration exceeded the configured operation cap."""


def _cap_from_env():
    raw = os.environ.get("WORKBENCH_MAX_OPS")
    if raw is None:
        return DEFAULT_CAP
    return int(raw)


_cap = _cap_from_env()
_used = 0


def set_cap(cap):
    """Set the operation cap (None disables the limit) and reset the counter."""
    global _cap, _used
    _cap = cap
    _used = 0


def cap():
    return _cap


def reset():
    """Zero the usage counter without touching the cap."""
    global _used
    _used = 0


def used():
    return _used


def charge(n=1):
    """Account for n primitive term operations."""
    global _used
    _used += n
    if _cap is not None and _used > _cap:
        raise WorkBudgetExceeded(
            f"operation budget exhausted: {_used} > {_cap} "
            "(raise WORKBENCH_MAX_OPS to allow more work)"
        )

"""Run configuration and logging setup for mcs-tools.

``RunConfig`` gathers the budgets and output settings a command runs with.
Logging verbosity comes from the ``MCS_LOG`` environment variable and only
ever goes to standard error.

Examples
--------
Build a configuration with a tighter oracle budget::

    from mcs_tools.config import RunConfig

    config = RunConfig(mask_cap=2**16)

"""

from __future__ import annotations

import dataclasses as dc
import logging
import os
import sys
import typing as typ

if typ.TYPE_CHECKING:
    from pathlib import Path

DEFAULT_MASK_CAP = 2**22
DEFAULT_TUPLE_CAP = 10**7
DEFAULT_VARIABLE_CAP = 20
DEFAULT_VERTEX_CAP = 20

LOG_ENV_VAR = "MCS_LOG"
LOG_FORMAT = "mcs: %(levelname)s %(name)s: %(message)s"
_LOG_LEVELS = {"debug": logging.DEBUG, "info": logging.INFO}
_HANDLER_NAME = "mcs-stderr"


@dc.dataclass(frozen=True)
class RunConfig:
    """Budgets and output settings for one command.

    Attributes
    ----------
    mask_cap : int
        Largest number of subsequence masks the brute-force oracle may try.
    tuple_cap : int
        Largest unshiftable index the enumerator may build.
    variable_cap : int
        Largest variable count for the brute-force SAT oracle.
    vertex_cap : int
        Largest vertex count for the brute-force MIS oracle.
    seed : int | None
        Seed for the instance generators.
    output : Path | None
        Destination file; None means standard output.

    """

    mask_cap: int = DEFAULT_MASK_CAP
    tuple_cap: int = DEFAULT_TUPLE_CAP
    variable_cap: int = DEFAULT_VARIABLE_CAP
    vertex_cap: int = DEFAULT_VERTEX_CAP
    seed: int | None = None
    output: Path | None = None

    def __post_init__(self) -> None:
        """Reject non-positive caps."""
        for field in ("mask_cap", "tuple_cap", "variable_cap", "vertex_cap"):
            value = getattr(self, field)
            if value <= 0:
                msg = f"{field.replace('_', '-')} must be positive, got {value}"
                raise ValueError(msg)


def log_level_from_env() -> int:
    """Return the logging level selected by ``MCS_LOG``.

    Returns
    -------
    int
        ``DEBUG`` or ``INFO`` when requested, otherwise ``WARNING``.

    """
    raw = os.environ.get(LOG_ENV_VAR, "").strip().lower()
    return _LOG_LEVELS.get(raw, logging.WARNING)


def configure_logging() -> None:
    """Send package diagnostics to standard error at the ``MCS_LOG`` level."""
    package_logger = logging.getLogger("mcs_tools")
    package_logger.setLevel(log_level_from_env())
    if any(h.get_name() == _HANDLER_NAME for h in package_logger.handlers):
        return
    handler = logging.StreamHandler(sys.stderr)
    handler.set_name(_HANDLER_NAME)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    package_logger.addHandler(handler)

"""CLI entry point for mcs-tools.

Provides the console-script entry point for running the ``mcs`` command
suite programmatically.

Examples
--------
Invoke the CLI entry point directly::

    from mcs_tools.cli import main

    main(["count", "strings.txt"])

Run the CLI from the command line (via the console script)::

    mcs --help

"""

from __future__ import annotations

from mcs_tools.cli.app import app, main

__all__ = ["app", "main"]

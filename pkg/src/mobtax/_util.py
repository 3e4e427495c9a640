from __future__ import annotations

import warnings


class TrajectoryWarning(UserWarning):
    """A trajectory point or observation was skipped, merged or excluded."""


def report(issues: list | None, message: str) -> None:
    """Append to ``issues`` when collecting, otherwise emit a warning."""
    if issues is None:
        warnings.warn(message, TrajectoryWarning, stacklevel=3)
    else:
        issues.append(message)

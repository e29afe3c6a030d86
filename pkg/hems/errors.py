"""Exceptions raised by the home energy management models.

Two families: ``ValidationError`` for inputs that are malformed or out of
range, and ``DegenerateInputError`` for inputs that are well formed but cannot
be used (missing history, singular fits, diverging training, gaps).

Date:
    10.19.2026

"""


__all__ = [
    "HemsError",
    "ValidationError",
    "ConfigError",
    "ConfigPathError",
    "DomainError",
    "CsvFormatError",
    "DegenerateInputError",
    "MissingHistoryError",
    "RankDeficiencyError",
    "InsufficientDataError",
    "DivergenceError",
    "GapError",
    "InfeasibleScheduleError",
]


from typing import Optional, Sequence


class HemsError(Exception):
    """Base class of every error raised by this package."""


class ValidationError(HemsError, ValueError):
    """An argument or a configuration entry is invalid."""


class ConfigError(ValidationError):
    """A configuration entry is invalid.

    Arguments:
        field -- Dotted name of the offending entry, e.g. ``ga.pop_size``.
        message -- What is wrong with it.
        line -- 1-based line number in the config file, when known.
    """

    def __init__(self, field: str, message: str, line: Optional[int] = None) -> None:
        self.field = field
        self.message = message
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{field}: {message}{where}")


class ConfigPathError(ConfigError):
    """A file referenced by the configuration does not exist."""

    def __init__(self, field: str, path: str) -> None:
        self.path = path
        super().__init__(field, f"file not found: {path}")


class DomainError(ValidationError):
    """A numeric argument lies outside its domain."""


class CsvFormatError(ValidationError):
    """A CSV file is malformed at a given data row (1-based)."""

    def __init__(self, path: str, row: Optional[int], message: str) -> None:
        self.path = path
        self.row = row
        where = f" row {row}" if row is not None else ""
        super().__init__(f"{path}{where}: {message}")


class DegenerateInputError(HemsError):
    """The input is well formed but cannot be used."""


class MissingHistoryError(DegenerateInputError):
    """A lag reaches before the start of the available history."""


class RankDeficiencyError(DegenerateInputError):
    """A least-squares design matrix is singular."""

    def __init__(self, columns: Sequence[str]) -> None:
        self.columns = tuple(columns)
        super().__init__(
            "design matrix is rank deficient; collinear columns: "
            + ", ".join(self.columns)
        )


class InsufficientDataError(DegenerateInputError):
    """Too few samples for the requested construction."""


class DivergenceError(DegenerateInputError):
    """Training produced a non-finite loss."""

    def __init__(self, iteration: int) -> None:
        self.iteration = iteration
        super().__init__(f"loss became non-finite at iteration {iteration}")


class GapError(DegenerateInputError):
    """An hourly series has missing hours."""

    def __init__(self, path: str, gaps: Sequence) -> None:
        self.path = path
        self.gaps = list(gaps)
        super().__init__(f"{path}: {len(self.gaps)} gap(s) in hourly series")


class InfeasibleScheduleError(DegenerateInputError):
    """A schedule violates the appliance or AC constraints."""

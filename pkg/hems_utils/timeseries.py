"""Hourly time-series CSV files.

Files have a ``timestamp`` column followed by numeric columns. Timestamps
must increase strictly and on whole hours; missing hours are reported as
gaps.

Date:
    10.19.2026

"""


__all__ = [
    "TIMESTAMP",
    "TimeseriesTable",
    "load_timeseries_csv",
    "write_timeseries_csv",
]


import logging
import os
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from hems.errors import CsvFormatError, DomainError, GapError
from hems.series import HorizonSeries, Unit


logger = logging.getLogger(__name__)


TIMESTAMP = "timestamp"
_HOUR = pd.Timedelta(hours=1)
_DATE_FORMAT = "%Y-%m-%dT%H:%M:%S"


@dataclass
class TimeseriesTable:
    """Parsed columns of an hourly CSV file.

    ``gaps`` lists ``(last hour before, first hour after)`` pairs.
    """

    timestamps: pd.DatetimeIndex
    columns: Dict[str, np.ndarray]
    gaps: List[Tuple[pd.Timestamp, pd.Timestamp]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.timestamps)

    def __getitem__(self, name: str) -> np.ndarray:
        return self.columns[name]

    @property
    def hours(self) -> np.ndarray:
        return self.timestamps.hour.to_numpy()

    def series(self, name: str, unit: Union[Unit, str],
               start: int = 0, horizon: Optional[int] = None) -> HorizonSeries:
        """Column ``name`` from row ``start`` as a horizon series."""
        values = self.columns[name][start:]
        if horizon is not None:
            if values.shape[0] < horizon:
                raise DomainError(f"{name}: {values.shape[0]} rows left, horizon {horizon}")
            values = values[:horizon]
        return HorizonSeries(values, unit)

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame(self.columns)
        frame.insert(0, TIMESTAMP, self.timestamps)
        return frame


def load_timeseries_csv(path: Union[str, os.PathLike],
                        expected_columns: Sequence[str],
                        strict: bool = False) -> TimeseriesTable:
    """Read and validate an hourly CSV file.

    Arguments:
        path -- CSV file.
        expected_columns -- Columns after ``timestamp``, in order.

    Keyword Arguments:
        strict -- Raise ``GapError`` instead of reporting gaps.
    """
    path = str(path)
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    except (pd.errors.EmptyDataError, pd.errors.ParserError) as exc:
        raise CsvFormatError(path, None, f"cannot parse file: {exc}") from None
    header = [TIMESTAMP, *expected_columns]
    if list(frame.columns) != header:
        raise CsvFormatError(path, None,
                             f"header {','.join(frame.columns)} != {','.join(header)}")
    if frame.empty:
        raise CsvFormatError(path, None, "no data rows")

    stamps = pd.to_datetime(frame[TIMESTAMP], errors="coerce")
    bad = np.flatnonzero(stamps.isna().to_numpy())
    if bad.size:
        row = int(bad[0]) + 1
        raise CsvFormatError(path, row, f"bad timestamp {frame[TIMESTAMP].iloc[row - 1]!r}")
    columns = {}
    for name in expected_columns:
        values = pd.to_numeric(frame[name], errors="coerce").to_numpy(dtype=float)
        bad = np.flatnonzero(~np.isfinite(values))
        if bad.size:
            rows = ", ".join(str(int(i) + 1) for i in bad[:5])
            more = f" and {bad.size - 5} more" if bad.size > 5 else ""
            raise CsvFormatError(path, int(bad[0]) + 1,
                                 f"bad {name} value {frame[name].iloc[bad[0]]!r} "
                                 f"(rows {rows}{more})")
        columns[name] = values

    steps = stamps.diff().iloc[1:]
    gaps = []
    for row, (step, prev, cur) in enumerate(zip(steps, stamps.iloc[:-1], stamps.iloc[1:]), start=2):
        if step <= pd.Timedelta(0):
            raise CsvFormatError(path, row, f"timestamp {cur} does not increase after {prev}")
        if step % _HOUR != pd.Timedelta(0):
            raise CsvFormatError(path, row, f"timestamp {cur} is not on the hourly grid")
        if step > _HOUR:
            gaps.append((prev, cur))
    if gaps:
        if strict:
            raise GapError(path, gaps)
        logger.warning("%s: %d gap(s) in hourly series, first after %s", path, len(gaps), gaps[0][0])
    return TimeseriesTable(pd.DatetimeIndex(stamps), columns, gaps)


def write_timeseries_csv(path: Union[str, os.PathLike],
                         timestamps: Sequence,
                         columns: Mapping[str, Sequence[float]]) -> str:
    """Write columns next to their timestamps; values survive a round trip."""
    frame = pd.DataFrame({name: np.asarray(values, dtype=float) for name, values in columns.items()})
    frame.insert(0, TIMESTAMP, pd.DatetimeIndex(timestamps))
    frame.to_csv(path, index=False, float_format="%.17g", date_format=_DATE_FORMAT)
    return str(path)

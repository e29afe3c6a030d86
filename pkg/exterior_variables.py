"""Model of the exterior environment

Date:
    10.19.2026

"""


__all__ = ["OutdoorTemperature"]


import numpy as np
import pandas as pd
from numbers import Number
from datetime import datetime, timedelta


class OutdoorTemperature:
    """Hourly outdoor temperature of a summer day.

    A sinusoid around ``mean`` with its maximum at ``peak_hour``, plus
    optional Gaussian noise.
    """

    def __init__(self,
                 name: str,
                 start_time: datetime,
                 timesteps: Number,
                 *,
                 mean: Number=29.0,
                 amplitude: Number=5.0,
                 peak_hour: Number=15,
                 noise: Number=0.0,
                 seed: int=None,
                 dt: timedelta=timedelta(hours=1)) -> None:
        self.name = name
        self.mean = mean
        self.amplitude = amplitude
        self.peak_hour = peak_hour
        self.start_time = start_time
        self.dt = dt
        self.timesteps = int(timesteps)
        self.end_time = self.start_time + (self.timesteps - 1) * self.dt

        self.timestamps = pd.date_range(self.start_time, self.end_time, periods=self.timesteps)
        hours = self.timestamps.hour.to_numpy() + self.timestamps.minute.to_numpy() / 60.0
        data = self.profile(hours)
        if noise > 0.0:
            data = data + np.random.default_rng(seed).normal(0.0, noise, size=data.shape)
        self.data = data

    def profile(self, hours) -> np.ndarray:
        """Noise-free temperature at the given hours of day."""
        phase = 2.0 * np.pi * (np.asarray(hours, dtype=float) - self.peak_hour) / 24.0
        return self.mean + self.amplitude * np.cos(phase)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"timestamp": self.timestamps, "outdoor_temp_c": self.data})

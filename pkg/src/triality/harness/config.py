from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass, field, replace

from ..reference import SWEEP_THETAS
from ..tomography import NoiseConfig


class ConfigError(ValueError):
    """Invalid experiment setting; ``field`` names the offending option."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


class Mode(str, enum.Enum):
    SINGLE = "single"
    SWEEP_CASE1 = "sweep_case1"
    SWEEP_CASE2 = "sweep_case2"
    EXACT = "exact"

    @property
    def sweep_case(self) -> int | None:
        return {Mode.SWEEP_CASE1: 1, Mode.SWEEP_CASE2: 2}.get(self)


# "1/4pi", "0.5pi", "pi" and "3pi/4", "pi/4"
_PI_PREFIX = re.compile(r"^(?P<sign>[+-]?)(?P<num>\d+(?:\.\d*)?)?(?:/(?P<den>\d+))?\*?pi$")
_PI_SUFFIX = re.compile(r"^(?P<sign>[+-]?)(?P<num>\d+(?:\.\d*)?)?\*?pi/(?P<den>\d+)$")


def parse_angle(text: str) -> float:
    """Parse radians from a decimal or a pi fraction such as ``"1/4pi"`` or ``"3pi/4"``."""
    s = str(text).strip().lower().replace(" ", "").replace("π", "pi")
    m = _PI_PREFIX.match(s) or _PI_SUFFIX.match(s)
    if m:
        den = int(m["den"] or 1)
        if den == 0:
            raise ValueError(f"zero denominator in angle {text!r}")
        value = float(m["num"] or 1) * math.pi / den
        return -value if m["sign"] == "-" else value
    try:
        value = float(s)
    except ValueError:
        raise ValueError(f"cannot parse angle {text!r}") from None
    if not math.isfinite(value):
        raise ValueError(f"angle must be finite, got {text!r}")
    return value


@dataclass(frozen=True)
class ExperimentConfig:
    theta1: float = math.pi / 4
    theta2: float = math.pi / 6
    theta3: float = math.pi / 8
    shots: int = 10000
    repetitions: int = 5
    seed: int = 0
    noise: NoiseConfig = field(default_factory=NoiseConfig)
    mode: Mode = Mode.SINGLE
    sweep_points: tuple[float, ...] = SWEEP_THETAS

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "sweep_points", tuple(float(t) for t in self.sweep_points))
        for name in ("theta1", "theta2", "theta3"):
            if not math.isfinite(getattr(self, name)):
                raise ConfigError(name, "angle must be finite")
        if isinstance(self.shots, bool) or not isinstance(self.shots, int) or self.shots <= 0:
            raise ConfigError("shots", f"must be a positive integer, got {self.shots!r}")
        if self.shots % 2:
            raise ConfigError("shots", f"must be even so that n0 = shots/2 is an integer, got {self.shots}")
        if isinstance(self.repetitions, bool) or not isinstance(self.repetitions, int) or self.repetitions <= 0:
            raise ConfigError("repetitions", f"must be a positive integer, got {self.repetitions!r}")
        if not isinstance(self.seed, int) or self.seed < 0:
            raise ConfigError("seed", f"must be a non-negative integer, got {self.seed!r}")
        if self.mode.sweep_case is not None:
            if not self.sweep_points:
                raise ConfigError("sweep_points", "must not be empty in sweep mode")
            if not all(math.isfinite(t) for t in self.sweep_points):
                raise ConfigError("sweep_points", "angles must be finite")

    @property
    def thetas(self) -> tuple[float, float, float]:
        return (self.theta1, self.theta2, self.theta3)

    def with_thetas(self, theta1: float, theta2: float, theta3: float, **changes) -> ExperimentConfig:
        return replace(self, theta1=theta1, theta2=theta2, theta3=theta3, **changes)

    def to_dict(self) -> dict:
        return {
            "theta1": self.theta1,
            "theta2": self.theta2,
            "theta3": self.theta3,
            "shots": self.shots,
            "repetitions": self.repetitions,
            "seed": self.seed,
            "noise": {
                "readout_flip_probability": self.noise.readout_flip_probability,
                "depolarizing_probability": self.noise.depolarizing_probability,
            },
            "mode": self.mode.value,
            "sweep_points": list(self.sweep_points),
        }


def make_noise(readout_flip: float = 0.0, depolarizing: float = 0.0) -> NoiseConfig:
    try:
        return NoiseConfig(readout_flip, depolarizing)
    except ValueError as exc:
        name = "readout_flip" if not 0.0 <= readout_flip <= 1.0 else "depolarizing"
        raise ConfigError(name, str(exc)) from None

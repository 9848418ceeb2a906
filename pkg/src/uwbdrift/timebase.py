"""Clock drift arithmetic on an exact integer timebase.

All timeline values are integer picoseconds and all drifts integer
micro-ppm (parts per 10^12), so timeline arithmetic is exact and
reproducible across platforms. Applying a drift to a duration rounds
half away from zero; that single rounding step is the only place
precision can be lost, and it loses at most half a picosecond.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConfigError, DomainError

#: Micro-ppm units in a dimensionless factor of exactly 1.0.
PPM_SCALE = 10**12


def div_round_half_away(num: int, den: int) -> int:
    """Integer division of num/den rounding halves away from zero.

    den must be positive. Used for every ppm application so results do
    not depend on platform float behaviour.
    """
    if den <= 0:
        raise DomainError(f"denominator must be positive, got {den}")
    if num >= 0:
        return (2 * num + den) // (2 * den)
    return -((2 * -num + den) // (2 * den))


def _to_fraction(value: int | float | Fraction) -> Fraction:
    # Floats go through their repr so "16.384" means the decimal 16.384,
    # not the nearest binary double.
    if isinstance(value, float):
        return Fraction(str(value))
    return Fraction(value)


@dataclass(frozen=True, order=True)
class Ppm:
    """A signed clock drift in parts per million.

    Stored as an integer count of micro-ppm (10^-12 relative), which
    keeps sums and differences of sub-ppm sweep steps exact.
    """

    micro: int

    def __post_init__(self) -> None:
        if not isinstance(self.micro, int):
            raise DomainError(f"Ppm.micro must be an int, got {type(self.micro).__name__}")
        if abs(self.micro) > PPM_SCALE:
            raise DomainError(f"drift magnitude exceeds 10^6 ppm: {self.micro} micro-ppm")

    @classmethod
    def of(cls, value: int | float | Fraction) -> "Ppm":
        """Build from a ppm value; exact for up to six decimal digits."""
        frac = _to_fraction(value) * 10**6
        return cls(div_round_half_away(frac.numerator, frac.denominator))

    @property
    def ppm(self) -> float:
        return self.micro / 10**6

    def __add__(self, other: "Ppm") -> "Ppm":
        return Ppm(self.micro + other.micro)

    def __sub__(self, other: "Ppm") -> "Ppm":
        return Ppm(self.micro - other.micro)

    def __neg__(self) -> "Ppm":
        return Ppm(-self.micro)

    def __abs__(self) -> "Ppm":
        return Ppm(abs(self.micro))

    def __str__(self) -> str:
        return f"{self.ppm:+g} ppm"


PPM_ZERO = Ppm(0)


@dataclass(frozen=True, order=True)
class Duration:
    """A signed time interval in integer picoseconds."""

    ps: int

    def __post_init__(self) -> None:
        if not isinstance(self.ps, int):
            raise DomainError(f"Duration.ps must be an int, got {type(self.ps).__name__}")

    @classmethod
    def _scaled(cls, value: int | float | Fraction, scale: int) -> "Duration":
        frac = _to_fraction(value) * scale
        if frac.denominator != 1:
            raise DomainError(f"{value} does not convert to a whole number of picoseconds")
        return cls(frac.numerator)

    @classmethod
    def ns(cls, value: int | float | Fraction) -> "Duration":
        return cls._scaled(value, 10**3)

    @classmethod
    def us(cls, value: int | float | Fraction) -> "Duration":
        return cls._scaled(value, 10**6)

    @classmethod
    def ms(cls, value: int | float | Fraction) -> "Duration":
        return cls._scaled(value, 10**9)

    @classmethod
    def s(cls, value: int | float | Fraction) -> "Duration":
        return cls._scaled(value, 10**12)

    @property
    def as_ns(self) -> float:
        return self.ps / 10**3

    @property
    def as_us(self) -> float:
        return self.ps / 10**6

    @property
    def as_ms(self) -> float:
        return self.ps / 10**9

    @property
    def seconds(self) -> float:
        return self.ps / 10**12

    def __add__(self, other: "Duration") -> "Duration":
        return Duration(self.ps + other.ps)

    def __sub__(self, other: "Duration") -> "Duration":
        return Duration(self.ps - other.ps)

    def __neg__(self) -> "Duration":
        return Duration(-self.ps)

    def __abs__(self) -> "Duration":
        return Duration(abs(self.ps))

    def __mul__(self, factor: int) -> "Duration":
        if not isinstance(factor, int):
            return NotImplemented
        return Duration(self.ps * factor)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"{self.ps} ps"


DURATION_ZERO = Duration(0)


@dataclass(frozen=True)
class ClockModel:
    """A device oscillator: nominal frequency plus a constant drift.

    The drift is taken as constant for the lifetime of one ranging
    scenario; warm-up dynamics are out of scope.
    """

    f_nom_hz: float
    drift: Ppm = PPM_ZERO

    def __post_init__(self) -> None:
        if not self.f_nom_hz > 0:
            raise DomainError(f"nominal frequency must be positive, got {self.f_nom_hz}")
        if self.f_actual_hz <= 0:
            raise DomainError("actual frequency must remain positive")

    @property
    def f_actual_hz(self) -> float:
        return self.f_nom_hz * (1 + self.drift.micro / PPM_SCALE)


def scale_by_ppm(d: Duration, drift: Ppm) -> Duration:
    """The drift-proportional part of d: d * drift * 10^-6, rounded to ps."""
    return Duration(div_round_half_away(d.ps * drift.micro, PPM_SCALE))


def stretch(d: Duration, drift: Ppm) -> Duration:
    """Wall-clock length of a nominal interval d produced by a drifting clock.

    Returns d * (1 - drift * 10^-6): a slow clock (negative drift) takes
    longer than nominal to count d, a fast clock takes less.
    """
    return d - scale_by_ppm(d, drift)


def clock_reading(d: Duration, drift: Ppm) -> Duration:
    """Nominal ticks a clock with the given drift counts during real time d.

    First-order inverse of :func:`stretch`; round trips agree within 1 ps
    per rounding plus a second-order drift term.
    """
    return d + scale_by_ppm(d, drift)


def drift_from_frequencies(f_actual_hz: float, f_nom_hz: float) -> Ppm:
    """Clock drift implied by an actual vs nominal frequency pair."""
    if not f_nom_hz > 0:
        raise DomainError(f"nominal frequency must be positive, got {f_nom_hz}")
    frac = (Fraction(f_actual_hz) - Fraction(f_nom_hz)) / Fraction(f_nom_hz) * PPM_SCALE
    return Ppm(div_round_half_away(frac.numerator, frac.denominator))


def relative_drift(transmitter: Ppm, receiver: Ppm) -> Ppm:
    """Drift of the transmitter's clock as estimated by the receiver via CFO."""
    return transmitter - receiver


def sniffer_estimate(drift_vs_initiator: Ppm, drift_vs_responder: Ppm) -> Ppm:
    """Relative initiator/responder drift recovered from sniffer measurements.

    Both inputs are the sniffer's own CFO-derived drifts against the two
    devices; the sniffer's clock cancels out of the difference.
    """
    return drift_vs_initiator - drift_vs_responder


def median_filter(series: list[Ppm], window: int) -> list[Ppm]:
    """Rolling median with truncated windows at the edges.

    The window must be odd so interior medians are unique; truncated edge
    windows of even size use the lower median, which keeps every output an
    exact element of the input.
    """
    if window < 1 or window % 2 == 0:
        raise ConfigError(f"window must be odd and >= 1, got {window}")
    half = window // 2
    out: list[Ppm] = []
    for i in range(len(series)):
        chunk = sorted(series[max(0, i - half) : i + half + 1])
        out.append(chunk[(len(chunk) - 1) // 2])
    return out

"""Timing geometry of ranging frames.

Covers the multi-millisecond fragment format (ranging sequence fragments
followed by integrity fragments at a fixed interval) and the short
legacy frame whose integrity waveform directly follows the marker.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConfigError, DomainError
from .timebase import Duration, Ppm, scale_by_ppm

_ONE_MS = Duration.ms(1)


@dataclass(frozen=True)
class MmsFrameLayout:
    """Geometry of a fragmented multi-millisecond ranging frame.

    Fragment spacing is start-to-start: each ranging sequence fragment
    (RSF) and each integrity fragment (RIF) owns one fragment_interval,
    with the unused remainder of a RIF interval forming the pause that an
    attacker can cross for free.
    """

    n_rsf: int
    n_rif_frags: int
    bits_per_rif: int
    t_bit: Duration = field(default=Duration.ns(32))
    fragment_interval: Duration = field(default=_ONE_MS)
    rmarker_offset: Duration = field(default=Duration(0))

    def __post_init__(self) -> None:
        if self.n_rsf < 0:
            raise ConfigError(f"n_rsf must be >= 0, got {self.n_rsf}")
        if self.n_rif_frags < 0:
            raise ConfigError(f"n_rif_frags must be >= 0, got {self.n_rif_frags}")
        if self.bits_per_rif < 1:
            raise ConfigError(f"bits_per_rif must be >= 1, got {self.bits_per_rif}")
        if self.t_bit.ps <= 0:
            raise ConfigError("t_bit must be positive")
        if self.rif_duration >= self.fragment_interval:
            raise ConfigError(
                "a RIF must fit inside one fragment interval: "
                f"{self.rif_duration} >= {self.fragment_interval}"
            )

    @property
    def n_tot(self) -> int:
        """Total integrity bits in one frame."""
        return self.n_rif_frags * self.bits_per_rif

    @property
    def rif_duration(self) -> Duration:
        """Active span of a single RIF."""
        return self.bits_per_rif * self.t_bit

    @property
    def t_pause(self) -> Duration:
        """Silent remainder of a RIF's fragment interval."""
        return self.fragment_interval - self.rif_duration

    def t_rsfs(self) -> Duration:
        """Span from the RMARKER to the start of the first RIF."""
        return self.n_rsf * self.fragment_interval

    def t_rifs(self) -> Duration:
        """Span from the start of the first RIF to the end of the last bit."""
        if self.n_rif_frags < 1:
            raise ConfigError("layout has no RIFs")
        return (self.n_rif_frags - 1) * self.fragment_interval + self.rif_duration

    def unpredictable_time(self, n_att: int) -> Duration:
        """Time bought by sacrificing the first n_att integrity bits.

        Whole sacrificed RIFs are worth a full fragment interval each,
        because the pause behind them carries no bits and can be crossed
        for free; leftover bits are worth t_bit apiece.
        """
        if n_att < 0 or n_att > self.n_tot:
            raise DomainError(f"n_att must be in [0, {self.n_tot}], got {n_att}")
        whole, rest = divmod(n_att, self.bits_per_rif)
        return whole * self.fragment_interval + rest * self.t_bit


@dataclass(frozen=True)
class HrpFrameLayout:
    """Geometry of a legacy short frame with a scrambled-timestamp field."""

    sts_pulses: int = 8192
    sts_duration: Duration = field(default=Duration.us(131))
    rmarker_to_sts_gap: Duration = field(default=Duration(0))

    def __post_init__(self) -> None:
        if self.sts_duration.ps <= 0:
            raise ConfigError("sts_duration must be positive")
        if self.sts_pulses < 1:
            raise ConfigError(f"sts_pulses must be >= 1, got {self.sts_pulses}")


def t_rsfs(layout: MmsFrameLayout) -> Duration:
    return layout.t_rsfs()


def t_rifs(layout: MmsFrameLayout) -> Duration:
    return layout.t_rifs()


def unpredictable_time(layout: MmsFrameLayout, n_att: int) -> Duration:
    return layout.unpredictable_time(n_att)


def hrp_max_advance(layout: HrpFrameLayout, delta_c: Ppm) -> Duration:
    """Largest timing shift available on a short frame: the whole
    integrity field scaled by the drift difference."""
    return scale_by_ppm(layout.sts_duration, delta_c)


#: Named layouts addressable from scenario files.
PRESETS: dict[str, MmsFrameLayout | HrpFrameLayout] = {
    "4ab-default": MmsFrameLayout(n_rsf=8, n_rif_frags=8, bits_per_rif=512),
    "4ab-single": MmsFrameLayout(n_rsf=1, n_rif_frags=1, bits_per_rif=512),
    "4z-hrp-default": HrpFrameLayout(),
}


def preset(name: str) -> MmsFrameLayout | HrpFrameLayout:
    try:
        return PRESETS[name]
    except KeyError:
        raise ConfigError(f"unknown layout preset: {name!r}") from None

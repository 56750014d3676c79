"""Urban-microcell path loss and link-gain composition.

Implements the street-canyon LOS/NLOS path-loss curves for a 10 m base
station, valid below the LOS slope-breakpoint distance, together with the
dB bookkeeping used to turn a path loss and two antenna gains into a
linear channel gain.

All distances are in meters, frequencies in GHz, gains in dBi. Every
function is pure; nothing here holds state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

H_BS_FIXED = 10.0
FC_MIN_GHZ = 0.5
FC_MAX_GHZ = 100.0
H_UT_MIN = 1.5
H_UT_MAX = 22.5
D2D_MIN = 10.0
D2D_NLOS_MAX = 5000.0


class ValidityError(ValueError):
    """An input lies outside the validity region of the propagation model.

    Carries the offending quantity and the violated bounds so callers can
    name them in diagnostics, or suppress the check altogether via the
    ``checked=False`` evaluation mode.
    """

    def __init__(self, quantity: str, value: float, low: float, high: float,
                 link: str | None = None):
        self.quantity = quantity
        self.value = value
        self.low = low
        self.high = high
        self.link = link
        where = f" on link '{link}'" if link else ""
        super().__init__(
            f"{quantity}={value:g} outside valid range [{low:g}, {high:g}]{where}"
        )

    def annotated(self, link: str) -> "ValidityError":
        """Copy of this error tagged with the link it occurred on."""
        return ValidityError(self.quantity, self.value, self.low, self.high, link)


def db_to_linear(db: float) -> float:
    """Convert a dB quantity to its linear power ratio."""
    return 10.0 ** (db / 10.0)


def linear_to_db(value: float) -> float:
    """Convert a positive linear power ratio to dB."""
    if value <= 0.0:
        raise ValueError(f"linear value must be > 0, got {value!r}")
    return 10.0 * math.log10(value)


@dataclass(frozen=True)
class Gain:
    """Dimensionless linear power gain of a link."""

    linear: float

    def __post_init__(self):
        if not self.linear > 0.0:
            raise ValueError(f"gain must be > 0, got {self.linear!r}")

    @classmethod
    def from_db(cls, db: float) -> "Gain":
        return cls(db_to_linear(db))

    @property
    def db(self) -> float:
        return linear_to_db(self.linear)


@dataclass(frozen=True)
class PathLossInput:
    """Distances, frequency and endpoint heights for one path-loss query.

    ``d_2d`` is the horizontal transmitter-receiver separation and ``d_3d``
    the full 3D one. Use :meth:`from_geometry` to derive ``d_3d`` from the
    heights; direct construction only requires d_3d >= d_2d > 0, so formula
    probes off the geometric manifold remain possible.
    """

    d_2d: float
    d_3d: float
    f_c_ghz: float
    h_ut: float
    h_bs: float = H_BS_FIXED

    def __post_init__(self):
        if not self.d_2d > 0.0:
            raise ValueError(f"d_2d must be > 0, got {self.d_2d!r}")
        if self.d_3d < self.d_2d:
            raise ValueError(
                f"d_3d={self.d_3d!r} smaller than d_2d={self.d_2d!r}"
            )

    @classmethod
    def from_geometry(cls, d_2d: float, h_ut: float, f_c_ghz: float,
                      h_bs: float = H_BS_FIXED) -> "PathLossInput":
        dz = h_bs - h_ut
        d_3d = d_2d if dz == 0.0 else math.sqrt(d_2d * d_2d + dz * dz)
        return cls(d_2d, d_3d, f_c_ghz, h_ut, h_bs)


def breakpoint_distance(h_ut: float, f_c_ghz: float) -> float:
    """Distance in meters at which the LOS slope changes, for a 10 m BS.

    Evaluates 36*(h_ut - 1)*f_c / 0.3 in the algebraically identical form
    120*(h_ut - 1)*f_c, which is exact on the reference grid (the division
    by 0.3 loses the last bit).
    """
    if h_ut <= 1.0:
        raise ValueError(f"breakpoint distance undefined for h_ut={h_ut:g} <= 1 m")
    return 120.0 * (h_ut - 1.0) * f_c_ghz


def _check_envelope(inp: PathLossInput) -> None:
    if not (FC_MIN_GHZ <= inp.f_c_ghz <= FC_MAX_GHZ):
        raise ValidityError("f_c_ghz", inp.f_c_ghz, FC_MIN_GHZ, FC_MAX_GHZ)
    if not (H_UT_MIN <= inp.h_ut <= H_UT_MAX):
        raise ValidityError("h_ut", inp.h_ut, H_UT_MIN, H_UT_MAX)
    if inp.h_bs != H_BS_FIXED:
        raise ValidityError("h_bs", inp.h_bs, H_BS_FIXED, H_BS_FIXED)


def path_loss_los(inp: PathLossInput, *, checked: bool = True) -> float:
    """Line-of-sight path loss in dB: 32.4 + 21*log10(d_3d) + 20*log10(f_c).

    Valid for 10 m <= d_2d <= breakpoint distance. ``checked=False``
    evaluates the curve anyway; the NLOS max() needs that to probe the LOS
    curve outside its own envelope, and tests use it for formula pins.
    """
    if checked:
        _check_envelope(inp)
        d_bp = breakpoint_distance(inp.h_ut, inp.f_c_ghz)
        if not (D2D_MIN <= inp.d_2d <= d_bp):
            raise ValidityError("d_2d", inp.d_2d, D2D_MIN, d_bp)
    return 32.4 + 21.0 * math.log10(inp.d_3d) + 20.0 * math.log10(inp.f_c_ghz)


def path_loss_nlos(inp: PathLossInput, *, checked: bool = True) -> float:
    """Non-line-of-sight path loss in dB.

    The max of the LOS curve (evaluated unchecked) and
    22.4 + 35.3*log10(d_3d) + 21.3*log10(f_c) - 0.3*(h_ut - 1.5),
    valid for 10 m <= d_2d <= 5 km and 1.5 m <= h_ut <= 22.5 m.
    """
    if checked:
        _check_envelope(inp)
        if not (D2D_MIN <= inp.d_2d <= D2D_NLOS_MAX):
            raise ValidityError("d_2d", inp.d_2d, D2D_MIN, D2D_NLOS_MAX)
    pl_prime = (
        22.4
        + 35.3 * math.log10(inp.d_3d)
        + 21.3 * math.log10(inp.f_c_ghz)
        - 0.3 * (inp.h_ut - 1.5)
    )
    return max(path_loss_los(inp, checked=False), pl_prime)


def channel_gain(path_loss_db: float, g_tx_dbi: float, g_rx_dbi: float) -> Gain:
    """Linear link gain from the two endpoint antenna gains minus the loss."""
    if path_loss_db < 0.0:
        raise ValueError(f"path loss must be >= 0 dB, got {path_loss_db!r}")
    return Gain.from_db(g_tx_dbi + g_rx_dbi - path_loss_db)

"""Device model: array geometry, datatypes and neighbor memory sharing.

Everything else in the toolkit queries this module for what a core can
reach without going through the stream switches.  The sharing rule is:
a core always reaches its own tile's memory module plus the modules
directly north and south of it; laterally it reaches west when it sits
on an even row and east when it sits on an odd row.  Row 0 is the array
row adjacent to the interface row and counts as even.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import ConfigError

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib


@dataclass(frozen=True)
class DataTypeSpec:
    """Per-datatype element sizes and core peak throughput.

    int8 inputs accumulate into 32-bit outputs, hence the asymmetric
    byte sizes; fp32 is symmetric.
    """

    name: str
    input_bytes: int
    output_bytes: int
    peak_macs: int


INT8 = DataTypeSpec(name="int8", input_bytes=1, output_bytes=4, peak_macs=128)
FP32 = DataTypeSpec(name="fp32", input_bytes=4, output_bytes=4, peak_macs=8)

DATA_TYPES = {"int8": INT8, "fp32": FP32}


def data_type(name: str) -> DataTypeSpec:
    try:
        return DATA_TYPES[name]
    except KeyError:
        raise ConfigError(f"unknown data type {name!r}; expected one of {sorted(DATA_TYPES)}")


@dataclass(frozen=True, order=True)
class TileCoord:
    """0-based (row, col); row 0 at the bottom next to the interface row."""

    row: int
    col: int

    def __str__(self):
        return f"({self.row},{self.col})"


@dataclass(frozen=True)
class Device:
    """Immutable description of one AIE array.

    bw_io is the per-stream bandwidth in bytes/cycle; plio_in/plio_out
    are array-level totals across all interface tiles.
    """

    name: str
    rows: int
    cols: int
    banks_per_tile: int
    bank_bytes: int
    reserved_banks_per_core: int
    plio_in: int
    plio_out: int
    interface_tiles: int
    bw_io: float
    aie_clock_hz: float
    plio_bits: int
    interface_columns: tuple = field(default=())

    @property
    def total_cores(self) -> int:
        return self.rows * self.cols

    @property
    def tile_bytes(self) -> int:
        return self.banks_per_tile * self.bank_bytes

    @property
    def total_banks(self) -> int:
        return self.total_cores * self.banks_per_tile

    def in_grid(self, t: TileCoord) -> bool:
        return 0 <= t.row < self.rows and 0 <= t.col < self.cols

    def check_coord(self, t: TileCoord) -> None:
        if not self.in_grid(t):
            raise ValueError(f"tile {t} outside {self.rows}x{self.cols} grid")


def accessible_modules(device: Device, core: TileCoord) -> frozenset:
    """Memory modules the core can read/write without DMA.

    Own tile, north, south, and the lateral neighbor picked by row
    parity (west on even rows, east on odd rows).  Off-grid neighbors
    are dropped, so edge cores see fewer than four modules.
    """
    device.check_coord(core)
    mods = {core}
    for dr in (-1, 1):
        n = TileCoord(core.row + dr, core.col)
        if device.in_grid(n):
            mods.add(n)
    lateral_col = core.col - 1 if core.row % 2 == 0 else core.col + 1
    lat = TileCoord(core.row, lateral_col)
    if device.in_grid(lat):
        mods.add(lat)
    return frozenset(mods)


def can_share(device: Device, a: TileCoord, b: TileCoord) -> bool:
    """True iff some memory module is reachable by both cores."""
    return bool(accessible_modules(device, a) & accessible_modules(device, b))


VC1902 = Device(
    name="vc1902",
    rows=8,
    cols=50,
    banks_per_tile=8,
    bank_bytes=4096,
    reserved_banks_per_core=1,
    plio_in=78,
    plio_out=117,
    interface_tiles=39,
    bw_io=4,
    aie_clock_hz=1.25e9,
    plio_bits=128,
    interface_columns=tuple(range(39)),
)

_PRESETS = {"vc1902": VC1902}

_REQUIRED_FIELDS = (
    "rows", "cols", "banks_per_tile", "bank_bytes", "reserved_banks_per_core",
    "plio_in", "plio_out", "interface_tiles", "bw_io", "aie_clock_hz", "plio_bits",
)


def device_from_dict(data: dict, name: str = "custom") -> Device:
    missing = [f for f in _REQUIRED_FIELDS if f not in data]
    if missing:
        raise ConfigError(f"device description missing fields: {', '.join(missing)}")
    cols = data.get("interface_columns")
    if cols is None:
        cols = tuple(range(int(data["interface_tiles"])))
    dev = Device(
        name=data.get("name", name),
        rows=int(data["rows"]),
        cols=int(data["cols"]),
        banks_per_tile=int(data["banks_per_tile"]),
        bank_bytes=int(data["bank_bytes"]),
        reserved_banks_per_core=int(data["reserved_banks_per_core"]),
        plio_in=int(data["plio_in"]),
        plio_out=int(data["plio_out"]),
        interface_tiles=int(data["interface_tiles"]),
        bw_io=float(data["bw_io"]),
        aie_clock_hz=float(data["aie_clock_hz"]),
        plio_bits=int(data["plio_bits"]),
        interface_columns=tuple(cols),
    )
    if dev.rows <= 0 or dev.cols <= 0:
        raise ConfigError("device grid must be non-empty")
    return dev


def load_device(source: str | Path) -> Device:
    """Load a device from a preset name or a JSON/TOML file path."""
    if isinstance(source, str) and source in _PRESETS:
        return _PRESETS[source]
    path = Path(source)
    if not path.exists():
        raise ConfigError(f"device file not found: {path}")
    try:
        if path.suffix.lower() == ".toml":
            data = tomllib.loads(path.read_text())
        else:
            data = json.loads(path.read_text())
    except (json.JSONDecodeError, tomllib.TOMLDecodeError) as e:
        raise ConfigError(f"cannot parse device file {path}: {e}")
    if not isinstance(data, dict):
        raise ConfigError(f"device file {path} must hold a single table/object")
    return device_from_dict(data, name=path.stem)


def preset_path(name: str) -> Path:
    """Filesystem path of a bundled data file (for CLI --device defaults)."""
    return Path(str(resources.files("aiemap").joinpath("data", name)))

"""Loads parameter sweep files"""

from pathlib import Path
from typing import Dict, List, Tuple, Union

from ..exceptions import UsageError
from ..models.run import SweepSpec

KNOWN_KEYS = ("problem", "L", "h", "N", "nd", "overlap", "overlap_x", "overlap_y")


def parse_partition(text: str) -> Tuple[int, int]:
    """'MxN' -> (m, n); m splits x and n splits y"""
    parts = text.lower().replace("×", "x").split("x")
    if len(parts) != 2:
        raise UsageError(f"partition '{text}' is not of the form MxN")
    try:
        m, n = int(parts[0]), int(parts[1])
    except ValueError:
        raise UsageError(f"partition '{text}' is not of the form MxN")
    if m < 1 or n < 1:
        raise UsageError(f"partition '{text}' needs positive block counts")
    return m, n


def percent(value: float) -> float:
    """Overlap percentage to fraction in [0, 1]"""
    if not 0.0 <= value <= 100.0:
        raise UsageError(f"overlap {value}% is outside [0, 100]")
    return value / 100.0


class SweepLoader:
    """
    Reads a sweep file of `key = v1, v2, ...` lines.

    Blank lines and lines starting with '#' are skipped. Overlaps are given
    in percent; `overlap` sets both directions, `overlap_x`/`overlap_y`
    are crossed with each other.
    """

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)

    def _read_lists(self) -> Dict[str, List[str]]:
        try:
            text = self.path.read_text(encoding="utf-8")
        except OSError as e:
            raise UsageError(f"cannot read sweep file {self.path}: {e}")

        lists: Dict[str, List[str]] = {}
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise UsageError(f"{self.path}:{number}: expected key = values")
            key, _, values = line.partition("=")
            key = key.strip()
            if key not in KNOWN_KEYS:
                raise UsageError(f"{self.path}:{number}: unknown sweep key '{key}'")
            items = [v.strip() for v in values.split(",") if v.strip()]
            if not items:
                raise UsageError(f"{self.path}:{number}: sweep list '{key}' is empty")
            lists[key] = items
        return lists

    def load(self) -> SweepSpec:
        lists = self._read_lists()
        if "overlap" in lists and ("overlap_x" in lists or "overlap_y" in lists):
            raise UsageError("use either overlap or overlap_x/overlap_y, not both")

        try:
            fields: Dict = {}
            if "problem" in lists:
                fields["problems"] = [p.lower() for p in lists["problem"]]
            if "L" in lists:
                fields["lengths"] = [float(v) for v in lists["L"]]
            else:
                fields["lengths"] = [0.5]
            if "h" in lists:
                fields["spacings"] = [float(v) for v in lists["h"]]
            if "N" in lists:
                fields["sizes"] = [int(v) for v in lists["N"]]
            if "nd" in lists:
                fields["partitions"] = [parse_partition(v) for v in lists["nd"]]
            if "overlap" in lists:
                fields["overlaps"] = [
                    (percent(float(v)),) * 2 for v in lists["overlap"]
                ]
            elif "overlap_x" in lists or "overlap_y" in lists:
                xs = [percent(float(v)) for v in lists.get("overlap_x", ["20"])]
                ys = [percent(float(v)) for v in lists.get("overlap_y", ["20"])]
                fields["overlaps"] = [(px, py) for px in xs for py in ys]
            return SweepSpec(**fields)
        except ValueError as e:
            # ValidationError is a ValueError subclass
            raise UsageError(f"invalid sweep file {self.path}: {e}")


def load_sweep(path: Union[str, Path]) -> SweepSpec:
    return SweepLoader(path).load()

"""Layered state machines for Dyck prefixes with odd-length descents.

States are ``(layer, height)`` pairs.  Layer ``F`` means the path is empty or
ended with an up-step, ``G`` that the trailing descent has odd length so far,
``H`` that it has even length.  A path may only go up from ``F`` or ``G``,
which is exactly the rule that every completed descent is odd.

The bonus class relaxes the rule for descents that reach the axis: any such
descent lands in ``(G, 0)`` and ``(H, 0)`` does not exist.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .series import Series


class Layer(str, enum.Enum):
    F = "F"
    G = "G"
    H = "H"


class Step(str, enum.Enum):
    UP = "U"
    DOWN = "D"


class PathClass(str, enum.Enum):
    ODD_ALL = "odd-all"
    ODD_LAST_EVEN = "odd-last-even"
    ODD_LAST_ANY = "odd-last-any"
    BONUS = "bonus"

    @property
    def strict(self) -> bool:
        return self is not PathClass.BONUS

    @property
    def accepting(self) -> tuple[LayerState, ...]:
        return _ACCEPTING[self]


class LayerState(NamedTuple):
    layer: Layer
    height: int

    def __str__(self) -> str:
        return f"({self.layer.value},{self.height})"


START = LayerState(Layer.F, 0)

_ACCEPTING = {
    PathClass.ODD_ALL: (LayerState(Layer.G, 0),),
    PathClass.ODD_LAST_EVEN: (LayerState(Layer.H, 0),),
    PathClass.ODD_LAST_ANY: (LayerState(Layer.G, 0), LayerState(Layer.H, 0)),
    PathClass.BONUS: (LayerState(Layer.G, 0),),
}


def in_state_space(cls: PathClass, s: LayerState) -> bool:
    if s.height < 0:
        return False
    return not (cls is PathClass.BONUS and s == (Layer.H, 0))


def transitions(cls: PathClass, s: LayerState) -> list[tuple[Step, LayerState]]:
    """Outgoing moves of ``s``; the heights are unbounded."""
    if not in_state_space(cls, s):
        raise ValueError(f"{s} is not a state of class {cls.value}")
    layer, i = s
    out: list[tuple[Step, LayerState]] = []
    if layer is not Layer.H:
        out.append((Step.UP, LayerState(Layer.F, i + 1)))
    if i >= 1:
        if cls is PathClass.BONUS and i == 1:
            out.append((Step.DOWN, LayerState(Layer.G, 0)))
        elif layer is Layer.G:
            out.append((Step.DOWN, LayerState(Layer.H, i - 1)))
        else:
            out.append((Step.DOWN, LayerState(Layer.G, i - 1)))
    return out


@dataclass(frozen=True)
class CountTable:
    """``rows[n][state]`` is the number of prefixes with ``n`` steps ending in ``state``.

    Missing entries are zero.
    """

    n_max: int
    rows: tuple[dict[LayerState, int], ...]

    def __getitem__(self, key: tuple[int, LayerState]) -> int:
        n, s = key
        return self.rows[n].get(s, 0)

    def total(self, n: int) -> int:
        return sum(self.rows[n].values())

    def entries(self) -> Iterator[tuple[int, LayerState, int]]:
        """Nonzero entries sorted by length, layer, then height."""
        for n, row in enumerate(self.rows):
            for s in sorted(row, key=lambda s: (s.layer.value, s.height)):
                if row[s]:
                    yield n, s, row[s]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CountTable):
            return NotImplemented
        strip = lambda rows: [{s: c for s, c in r.items() if c} for r in rows]
        return self.n_max == other.n_max and strip(self.rows) == strip(other.rows)

    __hash__ = None


def dp_counts(cls: PathClass, n_max: int) -> CountTable:
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    row = {START: 1}
    rows = [row]
    for _ in range(n_max):
        nxt: dict[LayerState, int] = {}
        for s, c in row.items():
            for _step, t in transitions(cls, s):
                nxt[t] = nxt.get(t, 0) + c
        rows.append(nxt)
        row = nxt
    return CountTable(n_max, tuple(rows))


def complete_counts(cls: PathClass, m_max: int, table: CountTable | None = None) -> list[int]:
    """Counts of complete paths for semilengths ``1..m_max``."""
    if table is None or table.n_max < 2 * m_max:
        table = dp_counts(cls, 2 * m_max)
    return [sum(table[2 * m, s] for s in cls.accepting) for m in range(1, m_max + 1)]


def count_complete(cls: PathClass, m: int) -> int:
    if m < 1:
        raise ValueError("the empty path is not counted; semilength must be >= 1")
    return complete_counts(cls, m)[-1]


def partial_series(cls: PathClass, layer: Layer | str, height: int, n_max: int) -> Series:
    """Generating function in ``z`` of the prefixes ending in ``(layer, height)``, exact below ``z**(n_max+1)``."""
    if height < 0:
        raise ValueError("height must be nonnegative")
    s = LayerState(Layer(layer), height)
    table = dp_counts(cls, n_max)
    return Series.from_coeffs([table[n, s] for n in range(n_max + 1)], 0, n_max + 1)


def complete_series(cls: PathClass, n_max: int, table: CountTable | None = None) -> Series:
    """Complete-path generating function in ``z`` (empty path excluded)."""
    if table is None:
        table = dp_counts(cls, n_max)
    cs = [0] + [sum(table[n, s] for s in cls.accepting) for n in range(1, n_max + 1)]
    return Series.from_coeffs(cs, 0, n_max + 1)

"""Brute-force enumeration of Dyck prefixes, classified straight from the descent rules.

Nothing here consults :func:`oddyck.automaton.transitions`; the automaton is
checked against this module, not the other way round.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .automaton import CountTable, Layer, LayerState, PathClass, Step

ORACLE_CAP = 28

U, D = Step.UP, Step.DOWN


class OracleLimitExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Path:
    steps: tuple[Step, ...]

    def __post_init__(self):
        h = 0
        for k, st in enumerate(self.steps):
            h += 1 if st is U else -1
            if h < 0:
                raise ValueError(f"step {k} goes below the axis")

    @classmethod
    def parse(cls, word: str) -> Path:
        return cls(tuple(Step(c) for c in word.upper()))

    @property
    def height(self) -> int:
        return sum(1 if st is U else -1 for st in self.steps)

    def __str__(self) -> str:
        return "".join(st.value for st in self.steps)


@dataclass(frozen=True)
class DescentRun:
    start_height: int
    length: int
    completed: bool

    @property
    def end_height(self) -> int:
        return self.start_height - self.length

    @property
    def touches_axis(self) -> bool:
        return self.end_height == 0


def descent_runs(p: Path) -> list[DescentRun]:
    runs = []
    h = 0
    start = None
    length = 0
    for st in p.steps:
        if st is D:
            if length == 0:
                start = h
            length += 1
            h -= 1
        else:
            if length:
                runs.append(DescentRun(start, length, True))
                length = 0
            h += 1
    if length:
        runs.append(DescentRun(start, length, False))
    return runs


def _violates(cls: PathClass, run: DescentRun) -> bool:
    """True if a completed run breaks the class rule."""
    if run.length % 2:
        return False
    return cls.strict or not run.touches_axis


def classify(cls: PathClass, p: Path) -> Optional[LayerState]:
    """State reached by ``p``, or ``None`` if the class rejects it."""
    runs = descent_runs(p)
    if any(r.completed and _violates(cls, r) for r in runs):
        return None
    h = p.height
    if not p.steps or p.steps[-1] is U:
        return LayerState(Layer.F, h)
    last = runs[-1]
    if cls is PathClass.BONUS and last.touches_axis:
        return LayerState(Layer.G, 0)
    return LayerState(Layer.G if last.length % 2 else Layer.H, h)


def enumerate_prefixes(n: int) -> Iterator[Path]:
    """All Dyck prefixes with exactly ``n`` steps."""
    def rec(steps, h):
        if len(steps) == n:
            yield Path(tuple(steps))
            return
        for st, dh in ((U, 1), (D, -1)):
            if h + dh >= 0:
                steps.append(st)
                yield from rec(steps, h + dh)
                steps.pop()
    yield from rec([], 0)


def oracle_counts(cls: PathClass, n_max: int) -> CountTable:
    """Tally every Dyck prefix of length ``<= n_max`` by its class state.

    Depth-first with the height pruned at zero and a subtree dropped as soon
    as a completed descent breaks the class rule (no extension can repair it).
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if n_max > ORACLE_CAP:
        raise OracleLimitExceeded(f"brute force is capped at {ORACLE_CAP} steps")
    rows: list[dict[LayerState, int]] = [{} for _ in range(n_max + 1)]
    strict = cls.strict
    bonus = cls is PathClass.BONUS

    # run: length of the trailing descent (0 after an up-step)
    stack = [(0, 0, 0)]
    while stack:
        n, h, run = stack.pop()
        if run == 0:
            state = LayerState(Layer.F, h)
        elif bonus and h == 0:
            state = LayerState(Layer.G, 0)
        else:
            state = LayerState(Layer.G if run % 2 else Layer.H, h)
        row = rows[n]
        row[state] = row.get(state, 0) + 1
        if n == n_max:
            continue
        if h > 0:
            stack.append((n + 1, h - 1, run + 1))
        # going up completes the trailing descent
        if run == 0 or run % 2 or (not strict and h == 0):
            stack.append((n + 1, h + 1, 0))
    return CountTable(n_max, tuple(rows))


def classify_all(cls: PathClass, n_max: int) -> CountTable:
    """Slow reference: :func:`classify` applied to every prefix; for small ``n_max``."""
    rows = []
    for n in range(n_max + 1):
        row: dict[LayerState, int] = {}
        for p in enumerate_prefixes(n):
            s = classify(cls, p)
            if s is not None:
                row[s] = row.get(s, 0) + 1
        rows.append(row)
    return CountTable(n_max, tuple(rows))


def complete_tallies(table: CountTable, cls: PathClass) -> list[int]:
    return [sum(table[2 * m, s] for s in cls.accepting) for m in range(1, table.n_max // 2 + 1)]

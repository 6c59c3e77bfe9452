"""Multi-stage scramble schedules and the text key-file format.

A schedule is the whole secret key: an ordered list of (transform, iteration
count) stages plus the permutation giving the order they are applied in.
Unscrambling inverts the stages in reverse application order.

Key file format (UTF-8, LF line endings, ``#`` starts a comment):

    N <side>
    M <stage count>
    STAGE <CLASSIC|ROWFIRST|COLFIRST> <i> <t>     (M of these)
    ORDER <space-separated permutation of 0..M-1>
    PLANES <space-separated bit-plane indices, 0 = LSB>
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .arnold import (
    Family,
    TransformSpec,
    _as_int,
    grid_side,
    period,
    scramble,
    unscramble,
)


class KeyFormatError(ValueError):
    """Raised when key text cannot be parsed; message names the offending line."""


@dataclass(frozen=True)
class Stage:
    spec: TransformSpec
    t: int

    def __post_init__(self):
        t = _as_int(self.t, "iteration count t")
        if t < 0:
            raise ValueError(f"iteration count t must be >= 0, got {t}")
        object.__setattr__(self, "t", t)


@dataclass(frozen=True)
class ScrambleSchedule:
    side: int
    stages: tuple[Stage, ...]
    order: tuple[int, ...]

    def __post_init__(self):
        side = _as_int(self.side, "side")
        if side < 1:
            raise ValueError(f"side must be >= 1, got {side}")
        stages = tuple(self.stages)
        if not stages:
            raise ValueError("schedule needs at least one stage")
        order = tuple(_as_int(j, "order entry") for j in self.order)
        if sorted(order) != list(range(len(stages))):
            raise ValueError(
                f"order {order} is not a permutation of 0..{len(stages) - 1}"
            )
        object.__setattr__(self, "side", side)
        object.__setattr__(self, "stages", stages)
        object.__setattr__(self, "order", order)


def _check_side(grid: np.ndarray, sched: ScrambleSchedule) -> None:
    n = grid_side(grid)
    if n != sched.side:
        raise ValueError(f"grid side {n} does not match schedule side {sched.side}")


def schedule_scramble(msg: np.ndarray, sched: ScrambleSchedule) -> np.ndarray:
    """Apply every stage in application order."""
    _check_side(msg, sched)
    out = np.asarray(msg)
    for j in sched.order:
        stage = sched.stages[j]
        out = scramble(out, stage.spec, stage.t)
    return out


def schedule_unscramble(scrambled: np.ndarray, sched: ScrambleSchedule) -> np.ndarray:
    """Invert every stage in reverse application order."""
    _check_side(scrambled, sched)
    out = np.asarray(scrambled)
    for j in reversed(sched.order):
        stage = sched.stages[j]
        out = unscramble(out, stage.spec, stage.t)
    return out


# -- key file ------------------------------------------------------------------

_FAMILY_TAGS = {f.value: f for f in Family}


def serialize_key(sched: ScrambleSchedule, planes: list[int]) -> str:
    """Render a schedule plus its target bit planes as key text."""
    planes = [_as_int(p, "plane index") for p in planes]
    for p in planes:
        if not 0 <= p <= 7:
            raise ValueError(f"plane index must be in [0, 7], got {p}")
    lines = [f"N {sched.side}", f"M {len(sched.stages)}"]
    for stage in sched.stages:
        lines.append(f"STAGE {stage.spec.family.value} {stage.spec.i} {stage.t}")
    lines.append("ORDER " + " ".join(str(j) for j in sched.order))
    lines.append(("PLANES " + " ".join(str(p) for p in planes)).rstrip())
    return "\n".join(lines) + "\n"


def _key_int(token: str, what: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise KeyFormatError(f"line {lineno}: {what} must be an integer, got {token!r}") from None


class _Lines:
    """Iterator over meaningful key-file lines that remembers line numbers."""

    def __init__(self, text: str):
        self.entries = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            stripped = raw.split("#", 1)[0].strip()
            if stripped:
                self.entries.append((lineno, stripped.split()))
        self.pos = 0

    def next(self, expected: str) -> tuple[int, list[str]]:
        if self.pos >= len(self.entries):
            raise KeyFormatError(f"unexpected end of key: expected {expected} line")
        entry = self.entries[self.pos]
        self.pos += 1
        if entry[1][0] != expected:
            raise KeyFormatError(
                f"line {entry[0]}: expected {expected} line, got {entry[1][0]!r}"
            )
        return entry

    def done(self) -> None:
        if self.pos < len(self.entries):
            lineno = self.entries[self.pos][0]
            raise KeyFormatError(f"line {lineno}: trailing content after PLANES line")


def parse_key(text: str) -> tuple[ScrambleSchedule, list[int]]:
    """Parse key text back into (schedule, planes). Inverse of serialize_key."""
    lines = _Lines(text)

    lineno, toks = lines.next("N")
    if len(toks) != 2:
        raise KeyFormatError(f"line {lineno}: N line needs exactly one value")
    side = _key_int(toks[1], "side", lineno)
    if side < 1:
        raise KeyFormatError(f"line {lineno}: side must be >= 1, got {side}")

    lineno, toks = lines.next("M")
    if len(toks) != 2:
        raise KeyFormatError(f"line {lineno}: M line needs exactly one value")
    m = _key_int(toks[1], "stage count", lineno)
    if m < 1:
        raise KeyFormatError(f"line {lineno}: stage count must be >= 1, got {m}")

    stages = []
    for _ in range(m):
        lineno, toks = lines.next("STAGE")
        if len(toks) != 4:
            raise KeyFormatError(f"line {lineno}: STAGE line needs <family> <i> <t>")
        family = _FAMILY_TAGS.get(toks[1])
        if family is None:
            raise KeyFormatError(f"line {lineno}: unknown family tag {toks[1]!r}")
        i = _key_int(toks[2], "parameter i", lineno)
        t = _key_int(toks[3], "iteration count t", lineno)
        if family is not Family.CLASSIC and i < 1:
            raise KeyFormatError(f"line {lineno}: parameter i must be >= 1, got {i}")
        if t < 0:
            raise KeyFormatError(f"line {lineno}: iteration count t must be >= 0, got {t}")
        stages.append(Stage(TransformSpec(family, i if i >= 1 else 1), t))

    lineno, toks = lines.next("ORDER")
    order = [_key_int(tok, "order entry", lineno) for tok in toks[1:]]
    if sorted(order) != list(range(m)):
        raise KeyFormatError(
            f"line {lineno}: ORDER must be a permutation of 0..{m - 1}, got {toks[1:]}"
        )

    lineno, toks = lines.next("PLANES")
    planes = [_key_int(tok, "plane index", lineno) for tok in toks[1:]]
    for p in planes:
        if not 0 <= p <= 7:
            raise KeyFormatError(f"line {lineno}: plane index must be in [0, 7], got {p}")
    if len(set(planes)) != len(planes):
        raise KeyFormatError(f"line {lineno}: duplicate plane index in {planes}")

    lines.done()
    return ScrambleSchedule(side, tuple(stages), tuple(order)), planes


def random_schedule(side: int, m: int, rng: random.Random) -> ScrambleSchedule:
    """Draw a valid schedule: random families, i in [1, 20], 0 < t < period."""
    side = _as_int(side, "side")
    m = _as_int(m, "stage count")
    if side < 1:
        raise ValueError(f"side must be >= 1, got {side}")
    if m < 1:
        raise ValueError(f"stage count must be >= 1, got {m}")
    stages = []
    for _ in range(m):
        family = rng.choice(list(Family))
        spec = TransformSpec(family, rng.randint(1, 20))
        p = period(spec, side)
        stages.append(Stage(spec, rng.randint(1, max(1, p - 1))))
    order = list(range(m))
    rng.shuffle(order)
    return ScrambleSchedule(side, tuple(stages), tuple(order))


__all__ = [
    "KeyFormatError",
    "Stage",
    "ScrambleSchedule",
    "schedule_scramble",
    "schedule_unscramble",
    "serialize_key",
    "parse_key",
    "random_schedule",
]

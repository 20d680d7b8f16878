"""Run manifests: every mathematical default and every knob of a run.

A manifest fixes the command, filters, parameter values, q lists, seed and
caps, so the same manifest always produces the same reports.  The seed
draws one extra randomized parameter per run on top of the fixed ones.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field
from typing import Sequence

LAMBDAS = (2, 3)
APPENDIX_A = 2
Z_VALUE = 2
MU = 2
CHARS = (0, 2, 3, 5)
CELL_FIELDS = ("Q", "F2", "F3", "F5")
MAX_RANK = 8
CELL_RANKS = (2, 6)
APPENDIX_GL3_QS = (3, 5)
APPENDIX_SP4_QS = (5,)
GROWTH_QS = (3, 5, 7)
CENTRALIZER_QS = (3,)
DEFAULT_SEED = 20240611
RANDOM_LAMBDA_RANGE = (4, 97)


@dataclass
class RunManifest:
    command: str
    subcommand: str | None = None
    type_filter: str | None = None
    rank: int | None = None
    max_rank: int | None = None
    chars: tuple = CHARS
    fields: tuple = CELL_FIELDS
    lambdas: tuple = LAMBDAS
    a: int = APPENDIX_A
    z: int = Z_VALUE
    mu: int = MU
    qs: tuple = ()
    case: str | None = None
    seed: int = DEFAULT_SEED
    randomized: bool = True
    caps: dict = field(default_factory=dict)
    output: str | None = None
    fmt: str = "table"
    jobs: int = 1

    def random_lambda(self) -> int:
        """The per-run randomized value, fixed by the seed."""
        lo, hi = RANDOM_LAMBDA_RANGE
        return random.Random(self.seed).randint(lo, hi)

    def lambda_values(self) -> list[int]:
        vals = list(self.lambdas)
        if self.randomized:
            r = self.random_lambda()
            if r not in vals:
                vals.append(r)
        return vals

    def rank_range(self) -> tuple[int, int]:
        if self.rank is not None:
            return self.rank, self.rank
        if self.command == "cells":
            lo, hi = CELL_RANKS
            return lo, self.max_rank or hi
        return 1, self.max_rank or MAX_RANK

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def default_qs(command: str, subcommand: str | None) -> tuple:
    if command != "orbits":
        return ()
    return {
        "appendix-gl3": APPENDIX_GL3_QS,
        "appendix-sp4": APPENDIX_SP4_QS,
        "growth": GROWTH_QS,
        "centralizer": CENTRALIZER_QS,
    }.get(subcommand, ())


def parse_int_list(text: str | Sequence[int]) -> tuple[int, ...]:
    if isinstance(text, (list, tuple)):
        return tuple(int(x) for x in text)
    return tuple(int(x) for x in str(text).replace(" ", "").split(",") if x)

from __future__ import annotations

from dataclasses import asdict, dataclass

from .poincare import DEFAULT_DEGREE
from .umbrella import DEFAULT_HEIGHT, DEFAULT_TOLERANCE

DEFAULT_I_MAX = 11
FORMATS = ("json", "table", "csv")


@dataclass
class RunConfig:
    """Parameters of one CLI invocation; echoed into every report."""
    command: str
    flavor: str = "oriented"
    k: int | None = None
    r: int = 0
    max_degree: int = DEFAULT_DEGREE
    p: int = 2
    p_max: int = 3
    q_max: int = 10
    i_max: int = DEFAULT_I_MAX
    betti: str | None = None
    height: int = DEFAULT_HEIGHT
    pairs: int = 10_000
    sphere_points: int = 200
    seed: int = 0
    tolerance: float = DEFAULT_TOLERANCE
    stems: str | None = None
    include_p0: bool = False
    format: str = "table"

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        for name in ("r", "max_degree", "p", "p_max", "q_max", "i_max", "height", "pairs",
                     "sphere_points", "seed"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")
        if self.k is not None and self.k < 0:
            raise ValueError("k must be nonnegative")

    def header(self) -> dict:
        return {k: v for k, v in asdict(self).items() if k != "format"}

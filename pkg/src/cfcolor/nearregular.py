"""Randomized conflict-free vertex coloring for near-regular graphs.

Works on graphs whose minimum degree is at least ``alpha`` times the
maximum degree.  Stage 1 samples a core subset of vertices until every
closed neighborhood contains a number of core vertices inside a
logarithmic window.  Stage 2 colors all non-core vertices with one
reserved color and draws palette colors uniformly for the core, until
every vertex sees some palette color exactly once among its core
neighbors.  Both stages are Las Vegas loops with retry caps; on repeated
stage-2 failure the core itself is resampled.

The shipped "paper" profile keeps the original analysis constants, which
only make sense for astronomically large degrees; desk-scale runs use the
"scaled" profile.  The procedure is identical in both.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, replace

from .graph import Graph
from .verify import verify_vertex_cf


class DegreeRatioError(ValueError):
    """Minimum degree falls below alpha times the maximum degree."""


class RetryCapExceeded(RuntimeError):
    """A resampling loop hit its cap; carries diagnostic details."""

    def __init__(self, message: str, details: dict | None = None):
        super().__init__(message)
        self.details = details or {}


@dataclass(frozen=True)
class NearRegularParams:
    """Constants of the two-stage procedure.

    Selection probability is ``c_sel*ln(delta) / (alpha*delta)`` (clamped
    to 1).  The per-vertex core window is ``[c_lo*ln(delta),
    (c_hi_num/alpha)*ln(delta)]``.  The palette holds
    ``ceil((c_col/alpha)*ln(delta))`` colors, plus the one reserved color
    for non-core vertices.
    """

    alpha: float = 1.0
    c_sel: float = 400.0
    c_lo: float = 350.0
    c_hi_num: float = 450.0
    c_col: float = 2700.0
    sel_retry_cap: int = 1000
    col_retry_cap: int = 1000
    restart_cap: int = 5
    rng_seed: int = 0

    def validate(self) -> None:
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError(f"alpha must be in (0,1], got {self.alpha}")
        if not 0.0 < self.c_lo < self.c_sel < self.c_hi_num:
            raise ValueError(
                f"constants must satisfy 0 < c_lo < c_sel < c_hi_num, got "
                f"c_lo={self.c_lo}, c_sel={self.c_sel}, c_hi_num={self.c_hi_num}")
        if self.c_col <= 0:
            raise ValueError(f"c_col must be positive, got {self.c_col}")
        for name in ("sel_retry_cap", "col_retry_cap", "restart_cap"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")

    @classmethod
    def preset(cls, name: str, **overrides) -> "NearRegularParams":
        presets = {
            "paper": {},
            "scaled": {"c_sel": 4.0, "c_lo": 1.5, "c_hi_num": 16.0, "c_col": 16.0},
        }
        if name not in presets:
            raise ValueError(f"unknown preset {name!r}; choose from {sorted(presets)}")
        params = replace(cls(**presets[name]), **overrides)
        params.validate()
        return params

    @classmethod
    def from_dict(cls, data: dict) -> "NearRegularParams":
        data = dict(data)
        if "preset" in data:
            name = data.pop("preset")
            caps = data.pop("caps", {})
            return cls.preset(name, **data, **_cap_fields(caps))
        caps = data.pop("caps", {})
        params = cls(**data, **_cap_fields(caps))
        params.validate()
        return params

    @classmethod
    def from_file(cls, path: str) -> "NearRegularParams":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))


def _cap_fields(caps: dict) -> dict:
    allowed = {"sel_retry_cap", "col_retry_cap", "restart_cap"}
    unknown = set(caps) - allowed
    if unknown:
        raise ValueError(f"unknown cap fields: {sorted(unknown)}")
    return dict(caps)


def palette_size(params: NearRegularParams, delta: int) -> int:
    return math.ceil((params.c_col / params.alpha) * math.log(delta))


def _check_preconditions(g: Graph, params: NearRegularParams) -> int:
    delta = g.max_degree()
    if delta < 2:
        raise DegreeRatioError(f"maximum degree must be at least 2, got {delta}")
    floor = params.alpha * delta
    for v in g.vertices():
        if g.degree(v) < floor:
            raise DegreeRatioError(
                f"vertex {v} has degree {g.degree(v)} < alpha*delta = {floor:.3f}")
    return delta


def sample_dominating_subset(g: Graph, params: NearRegularParams,
                             rng: random.Random) -> tuple[frozenset[int], int]:
    """Sample the core subset until every closed neighborhood is in-window.

    Returns (core, attempts).  Raises :class:`DegreeRatioError` when the
    degree precondition fails and :class:`RetryCapExceeded` (reporting the
    worst-window vertex) when the cap runs out.  Window bounds are compared
    as reals; nothing is rounded.
    """
    params.validate()
    delta = _check_preconditions(g, params)
    ln_delta = math.log(delta)
    prob = min(1.0, params.c_sel * ln_delta / (params.alpha * delta))
    lo = params.c_lo * ln_delta
    hi = (params.c_hi_num / params.alpha) * ln_delta

    worst: tuple[float, int, int] | None = None  # (violation, vertex, count)
    for attempt in range(1, params.sel_retry_cap + 1):
        core = frozenset(v for v in g.vertices() if rng.random() < prob)
        ok = True
        for v in g.vertices():
            count = sum(1 for u in g.closed_neighborhood(v) if u in core)
            if count < lo or count > hi:
                ok = False
                violation = max(lo - count, count - hi)
                if worst is None or violation > worst[0]:
                    worst = (violation, v, count)
                break
        if ok:
            return core, attempt
    assert worst is not None
    raise RetryCapExceeded(
        f"core sampling cap ({params.sel_retry_cap}) exhausted; worst vertex "
        f"{worst[1]} had {worst[2]} core neighbors for window [{lo:.2f}, {hi:.2f}]",
        details={"vertex": worst[1], "count": worst[2], "window": (lo, hi)})


def color_with_subset(g: Graph, core: frozenset[int], params: NearRegularParams,
                      rng: random.Random) -> tuple[dict[int, int], int]:
    """Color with a fixed core until every vertex sees a unique core color.

    Non-core vertices share reserved color 0; core vertices draw uniformly
    from palette colors 1..P.  An attempt is accepted when, for every
    vertex v, some color occurs exactly once among the core members of
    v's closed neighborhood.  Returns (coloring, attempts).
    """
    delta = g.max_degree()
    size = palette_size(params, delta)
    if size < 2:
        raise ValueError(f"palette must hold at least 2 colors, got {size}")
    core_order = sorted(core)
    failing: list[int] = []
    for attempt in range(1, params.col_retry_cap + 1):
        coloring = {v: 0 for v in g.vertices()}
        for v in core_order:
            coloring[v] = 1 + rng.randrange(size)
        failing = []
        for v in g.vertices():
            counts: dict[int, int] = {}
            for u in g.closed_neighborhood(v):
                if u in core:
                    c = coloring[u]
                    counts[c] = counts.get(c, 0) + 1
            if 1 not in counts.values():
                failing.append(v)
                break
        if not failing:
            return coloring, attempt
    raise RetryCapExceeded(
        f"core coloring cap ({params.col_retry_cap}) exhausted; "
        f"vertices without a unique core color: {failing}",
        details={"failing": failing})


@dataclass
class NearRegularResult:
    """Coloring plus the run accounting.

    ``total_colors`` is the size of the color space actually offered: the
    palette plus the reserved color.  Individual palette colors may remain
    unused by the random draw; the assignment never uses a label outside
    the space.
    """

    coloring: dict[int, int]
    core: frozenset[int]
    palette_size: int
    total_colors: int
    stage1_attempts: int
    stage2_attempts: int
    restarts: int


def color_near_regular(g: Graph, params: NearRegularParams | None = None,
                       rng: random.Random | None = None) -> NearRegularResult:
    """Full two-stage pipeline with restart ladder.

    Stage 2 retries up to its own cap for a fixed core; when it fails, a
    fresh core is sampled, up to ``restart_cap`` restarts.  Both attempt
    counters are reported.  The returned coloring is re-verified before
    being handed back; a cap exhaustion raises instead of returning an
    unchecked coloring.
    """
    if params is None:
        params = NearRegularParams.preset("scaled")
    params.validate()
    if rng is None:
        rng = random.Random(params.rng_seed)

    stage1_total = 0
    stage2_total = 0
    last_error: RetryCapExceeded | None = None
    for restart in range(1, params.restart_cap + 1):
        core, attempts1 = sample_dominating_subset(g, params, rng)
        stage1_total += attempts1
        try:
            coloring, attempts2 = color_with_subset(g, core, params, rng)
        except RetryCapExceeded as exc:
            stage2_total += params.col_retry_cap
            last_error = exc
            continue
        stage2_total += attempts2
        report = verify_vertex_cf(g, coloring)
        if not report.ok:
            raise AssertionError(
                f"accepted coloring failed independent verification: {report.violators[:5]}")
        size = palette_size(params, g.max_degree())
        return NearRegularResult(coloring=coloring, core=core, palette_size=size,
                                 total_colors=size + 1, stage1_attempts=stage1_total,
                                 stage2_attempts=stage2_total, restarts=restart)
    assert last_error is not None
    raise RetryCapExceeded(
        f"all {params.restart_cap} restarts exhausted; last failure: {last_error}",
        details=last_error.details)

"""Bundled benchmark problems and reference fronts.

ZDT1-4 and ZDT6 (continuous, two objectives, no constraints) plus five
constrained engineering design problems. Constrained problems expose one
extra minimized objective equal to the total constraint violation, which
is zero exactly on the feasible set; the raw constraint values (g_i >= 0
feasible) stay available through the spec's constraint evaluator.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .dominance import domination_matrix
from .errors import InvalidInputError, UnsupportedProblemError
from .problems import Continuous, Discrete, Integer, ProblemSpec
from .results import read_front_csv

ZDT_NAMES = ("zdt1", "zdt2", "zdt3", "zdt4", "zdt6")

# Allowed spring wire diameters, ascending.
SPRING_WIRE_DIAMETERS = (
    0.009, 0.0095, 0.0104, 0.0118, 0.0128, 0.0132,
    0.014, 0.015, 0.0162, 0.0173, 0.018, 0.02,
    0.023, 0.025, 0.028, 0.032, 0.035, 0.041,
    0.047, 0.054, 0.063, 0.072, 0.08, 0.092,
    0.105, 0.12, 0.135, 0.148, 0.162, 0.177,
    0.192, 0.207, 0.225, 0.244, 0.263, 0.283,
    0.307, 0.331, 0.362, 0.394, 0.4375, 0.5,
)


def constraint_violation(g, literal: bool = False) -> float:
    """Total violation of constraints stated as g_i >= 0.

    The default sums max(-g_i, 0), so feasible points score exactly 0.
    ``literal=True`` switches to sum(max(g_i, 0)) for auditing against
    sources that state the penalty in that form (it penalizes feasible
    points and is not used by any bundled problem).
    """
    g = np.asarray(g, dtype=float)
    if literal:
        return float(np.maximum(g, 0.0).sum())
    return float(np.maximum(-g, 0.0).sum())


# --------------------------------------------------------------------------
# ZDT family
# --------------------------------------------------------------------------

def _zdt_g_linear(x: np.ndarray) -> float:
    n = x.shape[0]
    return 1.0 + 9.0 * x[1:].sum() / (n - 1)


def _zdt1_obj(x: np.ndarray) -> np.ndarray:
    f1 = x[0]
    g = _zdt_g_linear(x)
    return np.array([f1, g * (1.0 - math.sqrt(f1 / g))])


def _zdt2_obj(x: np.ndarray) -> np.ndarray:
    f1 = x[0]
    g = _zdt_g_linear(x)
    return np.array([f1, g * (1.0 - (f1 / g) ** 2)])


def _zdt3_obj(x: np.ndarray) -> np.ndarray:
    f1 = x[0]
    g = _zdt_g_linear(x)
    ratio = f1 / g
    return np.array([f1, g * (1.0 - math.sqrt(ratio) - ratio * math.sin(10.0 * math.pi * f1))])


def _zdt4_obj(x: np.ndarray) -> np.ndarray:
    f1 = x[0]
    n = x.shape[0]
    tail = x[1:]
    g = 1.0 + 10.0 * (n - 1) + float((tail**2 - 10.0 * np.cos(4.0 * math.pi * tail)).sum())
    return np.array([f1, g * (1.0 - math.sqrt(f1 / g))])


def _zdt6_f1(x1: float) -> float:
    return 1.0 - math.exp(-4.0 * x1) * math.sin(6.0 * math.pi * x1) ** 6


def _zdt6_obj(x: np.ndarray) -> np.ndarray:
    f1 = _zdt6_f1(x[0])
    n = x.shape[0]
    g = 1.0 + 9.0 * (x[1:].sum() / (n - 1)) ** 0.25
    return np.array([f1, g * (1.0 - (f1 / g) ** 2)])


_ZDT_TABLE: dict[str, tuple[Callable, int, float, float]] = {
    "zdt1": (_zdt1_obj, 30, 0.0, 1.0),
    "zdt2": (_zdt2_obj, 30, 0.0, 1.0),
    "zdt3": (_zdt3_obj, 30, 0.0, 1.0),
    "zdt6": (_zdt6_obj, 10, 0.0, 1.0),
}


def zdt(name: str) -> ProblemSpec:
    """Instantiate a ZDT benchmark by name (ZDT1-ZDT4, ZDT6)."""
    key = name.lower()
    if key == "zdt4":
        n = 10
        lower = np.full(n, -5.0)
        upper = np.full(n, 5.0)
        lower[0], upper[0] = 0.0, 1.0
        return ProblemSpec(
            name="zdt4",
            n_vars=n,
            n_objectives=2,
            lower=lower,
            upper=upper,
            kinds=tuple(Continuous() for _ in range(n)),
            objectives=_zdt4_obj,
        )
    if key not in _ZDT_TABLE:
        raise InvalidInputError(f"unknown ZDT problem {name!r}")
    obj, n, lo, hi = _ZDT_TABLE[key]
    return ProblemSpec(
        name=key,
        n_vars=n,
        n_objectives=2,
        lower=np.full(n, lo),
        upper=np.full(n, hi),
        kinds=tuple(Continuous() for _ in range(n)),
        objectives=obj,
    )


# --------------------------------------------------------------------------
# Engineering design problems
# --------------------------------------------------------------------------

_TRUSS_F = 10.0       # load, kN
_TRUSS_E = 2.0e5      # elastic modulus, kN/cm^2
_TRUSS_L = 200.0      # bar length, cm
_TRUSS_SIGMA = 10.0   # stress bound


def _truss_obj(x: np.ndarray) -> np.ndarray:
    x1, x2, x3, x4 = x
    f1 = _TRUSS_L * (2.0 * x1 + math.sqrt(2.0) * x2 + math.sqrt(x3) + x4)
    f2 = (_TRUSS_F * _TRUSS_L / _TRUSS_E) * (
        2.0 / x1 + 2.0 * math.sqrt(2.0) / x2 - 2.0 * math.sqrt(2.0) / x3 + 2.0 / x4
    )
    return np.array([f1, f2])


def four_bar_truss() -> ProblemSpec:
    """Four-bar truss sizing: structural volume vs joint displacement."""
    a = _TRUSS_F / _TRUSS_SIGMA
    lower = np.array([a, math.sqrt(2.0) * a, math.sqrt(2.0) * a, a])
    upper = np.array([3.0 * a, 3.0 * a, 3.0 * a, 3.0 * a])
    return ProblemSpec(
        name="four_bar_truss",
        n_vars=4,
        n_objectives=2,
        lower=lower,
        upper=upper,
        kinds=tuple(Continuous() for _ in range(4)),
        objectives=_truss_obj,
    )


def _vessel_g(x: np.ndarray) -> np.ndarray:
    x1, x2, x3, x4 = x
    return np.array(
        [
            x1 - 0.0193 * x3,
            x2 - 0.00954 * x3,
            math.pi * x3**2 * x4 + (4.0 / 3.0) * math.pi * x3**3 - 1296000.0,
        ]
    )


def pressure_vessel(literal_violation: bool = False) -> ProblemSpec:
    """Cylindrical pressure vessel: fabrication cost vs constraint violation.

    Shell and head thicknesses are integers in {1, ..., 100}; radius and
    length are continuous.
    """

    def objectives(x: np.ndarray) -> np.ndarray:
        x1, x2, x3, x4 = x
        f1 = (
            0.6224 * x1 * x3 * x4
            + 1.7781 * x2 * x3**2
            + 3.1661 * x1**2 * x4
            + 19.84 * x1**2 * x3
        )
        return np.array([f1, constraint_violation(_vessel_g(x), literal=literal_violation)])

    return ProblemSpec(
        name="pressure_vessel",
        n_vars=4,
        n_objectives=2,
        lower=np.array([1.0, 1.0, 10.0, 10.0]),
        upper=np.array([100.0, 100.0, 200.0, 240.0]),
        kinds=(Integer(1, 100), Integer(1, 100), Continuous(), Continuous()),
        objectives=objectives,
        constraints=_vessel_g,
    )


_SPRING_F_MAX = 1000.0     # highest working load, lb
_SPRING_S = 189000.0       # allowable shear stress, psi
_SPRING_L_MAX = 14.0       # highest free length, inch
_SPRING_D_MIN = 0.2        # lowest wire diameter, inch
_SPRING_D_MAX = 3.0        # highest exterior diameter, inch
_SPRING_F_P = 300.0        # preload compression force, lb
_SPRING_SIGMA_PM = 6.0     # allowable deflection under preload, inch
_SPRING_SIGMA_W = 1.25     # deflection from preload to full load, inch
_SPRING_G = 11.5e6         # shear modulus


def _spring_g(x: np.ndarray) -> np.ndarray:
    x1, x2, x3 = x
    ratio = x2 / x3
    c_f = (4.0 * ratio - 1.0) / (4.0 * ratio - 4.0) + 0.615 * x3 / x2
    k = _SPRING_G * x3**4 / (8.0 * x1 * x2**3)
    sigma_p = _SPRING_F_P / k
    l_f = _SPRING_F_MAX / k + 1.05 * (x1 + 2.0) * x3
    return np.array(
        [
            -8.0 * c_f * _SPRING_F_MAX * x2 / (math.pi * x3**3) + _SPRING_S,
            -l_f + _SPRING_L_MAX,
            -3.0 + ratio,
            -sigma_p + _SPRING_SIGMA_PM,
            -sigma_p - (_SPRING_F_MAX - _SPRING_F_P) / k - 1.05 * (x1 + 2.0) * x3 + l_f,
            -_SPRING_SIGMA_W + (_SPRING_F_MAX - _SPRING_F_P) / k,
        ]
    )


def coil_spring(literal_violation: bool = False) -> ProblemSpec:
    """Coil compression spring: wire volume vs constraint violation.

    Mixed variables: integer coil count, continuous exterior diameter, and
    wire diameter restricted to the catalogue of allowable sizes.
    """

    def objectives(x: np.ndarray) -> np.ndarray:
        x1, x2, x3 = x
        f1 = math.pi**2 * x2 * x3**2 * (x1 + 2.0) / 4.0
        return np.array([f1, constraint_violation(_spring_g(x), literal=literal_violation)])

    table = SPRING_WIRE_DIAMETERS
    return ProblemSpec(
        name="coil_spring",
        n_vars=3,
        n_objectives=2,
        lower=np.array([1.0, 0.6, table[0]]),
        upper=np.array([70.0, 30.0, table[-1]]),
        kinds=(Integer(1, 70), Continuous(), Discrete(table)),
        objectives=objectives,
        constraints=_spring_g,
    )


def _reducer_f2(x: np.ndarray) -> float:
    return math.sqrt((745.0 * x[3] / (x[1] * x[2])) ** 2 + 1.69e7) / (0.1 * x[5] ** 3)


def _reducer_g(x: np.ndarray) -> np.ndarray:
    x1, x2, x3, x4, x5, x6, x7 = x
    return np.array(
        [
            1.0 / 27.0 - 1.0 / (x1 * x2**3 * x3),
            1.0 / 397.5 - 1.0 / (x1 * x2**2 * x3**2),
            1.0 / 1.92 - x4**3 / (x2 * x3 * x6**4),
            1.0 / 1.93 - x5**3 / (x2 * x3 * x7**4),
            40.0 - x2 * x3,
            12.0 - x1 / x2,
            -5.0 + x1 / x2,
            -1.9 + x4 - 1.6 * x6,
            -1.9 + x5 - 1.1 * x7,
            1300.0 - _reducer_f2(x),
            1100.0 - math.sqrt((745.0 * x5 / (x2 * x3)) ** 2 + 1.575e8) / (0.1 * x7**3),
        ]
    )


def speed_reducer(literal_violation: bool = False) -> ProblemSpec:
    """Gearbox design: volume, shaft stress, and constraint violation."""

    def objectives(x: np.ndarray) -> np.ndarray:
        x1, x2, x3, x4, x5, x6, x7 = x
        f1 = (
            0.7854 * x1 * x2**2 * (10.0 * x3**2 / 3.0 + 14.933 * x3 - 43.0934)
            - 1.508 * x1 * (x6**2 + x7**2)
            + 7.477 * (x6**3 + x7**3)
            + 0.7854 * (x4 * x6**2 + x5 * x7**2)
        )
        return np.array(
            [f1, _reducer_f2(x), constraint_violation(_reducer_g(x), literal=literal_violation)]
        )

    return ProblemSpec(
        name="speed_reducer",
        n_vars=7,
        n_objectives=3,
        lower=np.array([2.6, 0.7, 17.0, 7.8, 7.8, 2.9, 5.0]),
        upper=np.array([3.6, 0.8, 28.0, 8.3, 8.3, 3.9, 5.5]),
        kinds=(
            Continuous(),
            Continuous(),
            Integer(17, 28),
            Continuous(),
            Continuous(),
            Continuous(),
            Continuous(),
        ),
        objectives=objectives,
        constraints=_reducer_g,
    )


def _car_v_mbp(x: np.ndarray) -> float:
    return 10.58 - 0.674 * x[0] - 0.67275 * x[1]


def _car_v_fd(x: np.ndarray) -> float:
    return 16.45 - 0.489 * x[2] * x[6] - 0.843 * x[4] * x[5]


def _car_f2(x: np.ndarray) -> float:
    return 4.72 - 0.5 * x[3] - 0.19 * x[1] * x[2]


def _car_g(x: np.ndarray) -> np.ndarray:
    x1, x2, x3, x4, x5, x6, x7 = x
    return np.array(
        [
            1.0 - 1.16 + 0.3717 * x2 * x4 + 0.0092928 * x3,
            0.32 - 0.261 + 0.0159 * x1 * x2 + 0.06486 * x1 + 0.019 * x2 * x7
            - 0.0144 * x3 * x5 - 0.0154464 * x6,
            0.32 - 0.214 - 0.00817 * x5 + 0.045195 * x1 + 0.0135168 * x1
            - 0.03099 * x2 * x6 + 0.018 * x2 * x7 - 0.007176 * x3 - 0.023232 * x3
            + 0.00364 * x5 * x6 + 0.018 * x2**2,
            0.32 - 0.74 + 0.61 * x2 + 0.031296 * x3 + 0.031872 * x7 - 0.227 * x2**2,
            32.0 - 28.98 - 3.818 * x3 + 4.2 * x1 * x2 - 1.27296 * x6 + 2.68065 * x7,
            32.0 - 33.86 - 2.95 * x3 + 5.057 * x1 * x2 + 3.795 * x2 + 3.4431 * x7 - 1.45728,
            32.0 - 46.36 + 9.9 * x2 + 4.4505 * x1,
            4.0 - _car_f2(x),
            9.9 - _car_v_mbp(x),
            15.7 - _car_v_fd(x),
        ]
    )


def car_side_impact(literal_violation: bool = False) -> ProblemSpec:
    """Car side-impact structure: mass, pubic force, pillar velocity, and
    constraint violation (four objectives)."""

    def objectives(x: np.ndarray) -> np.ndarray:
        f1 = (
            1.98 + 4.9 * x[0] + 6.67 * x[1] + 6.98 * x[2] + 4.01 * x[3]
            + 1.78 * x[4] + 1e-5 * x[5] + 2.73 * x[6]
        )
        f3 = 0.5 * (_car_v_mbp(x) + _car_v_fd(x))
        return np.array(
            [f1, _car_f2(x), f3, constraint_violation(_car_g(x), literal=literal_violation)]
        )

    return ProblemSpec(
        name="car_side_impact",
        n_vars=7,
        n_objectives=4,
        lower=np.array([0.5, 0.45, 0.5, 0.5, 0.875, 0.4, 0.4]),
        upper=np.array([1.5, 1.35, 1.5, 1.5, 2.625, 1.2, 1.2]),
        kinds=tuple(Continuous() for _ in range(7)),
        objectives=objectives,
        constraints=_car_g,
    )


# --------------------------------------------------------------------------
# Reference fronts
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ReferenceFront:
    """A mutually non-dominated set of objective vectors used for scoring."""

    points: np.ndarray
    source: str  # analytic | file | merged-runs

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        object.__setattr__(self, "points", pts)
        if pts.ndim != 2 or pts.shape[0] == 0:
            raise InvalidInputError("a reference front must be a non-empty 2-D point set")


def _zdt6_f1_min() -> float:
    # Peak of exp(-4x) * sin^6(6 pi x) on [0, 1]: dense grid, then a local
    # ternary-search refinement around the best cell.
    def h(x: float) -> float:
        return math.exp(-4.0 * x) * math.sin(6.0 * math.pi * x) ** 6

    grid = np.linspace(0.0, 1.0, 100001)
    values = np.exp(-4.0 * grid) * np.sin(6.0 * math.pi * grid) ** 6
    best = int(np.argmax(values))
    lo = grid[max(best - 1, 0)]
    hi = grid[min(best + 1, len(grid) - 1)]
    for _ in range(200):
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        if h(m1) < h(m2):
            lo = m1
        else:
            hi = m2
    return 1.0 - h(0.5 * (lo + hi))


def analytic_reference_front(name: str, n_points: int = 1000) -> ReferenceFront:
    """Sample the true Pareto front of a ZDT problem.

    ZDT1/ZDT4: f2 = 1 - sqrt(f1); ZDT2: f2 = 1 - f1^2 (f1 uniform on
    [0, 1]). ZDT3 samples the non-dominated segments of its discontinuous
    curve, and ZDT6 spans its attainable f1 range with f2 = 1 - f1^2.
    """
    key = name.lower()
    if key not in ZDT_NAMES:
        raise UnsupportedProblemError(f"no analytic front for {name!r}")
    if n_points < 2:
        raise InvalidInputError("n_points must be >= 2")
    if key in ("zdt1", "zdt4"):
        f1 = np.linspace(0.0, 1.0, n_points)
        f2 = 1.0 - np.sqrt(f1)
    elif key == "zdt2":
        f1 = np.linspace(0.0, 1.0, n_points)
        f2 = 1.0 - f1**2
    elif key == "zdt6":
        f1 = np.linspace(_zdt6_f1_min(), 1.0, n_points)
        f2 = 1.0 - f1**2
    else:  # zdt3: keep the strictly-decreasing prefix minimum of the curve
        grid = np.linspace(0.0, 1.0, max(50 * n_points, 50001))
        curve = 1.0 - np.sqrt(grid) - grid * np.sin(10.0 * math.pi * grid)
        keep = curve < np.concatenate(([np.inf], np.minimum.accumulate(curve)[:-1]))
        kept = np.flatnonzero(keep)
        pick = kept[np.unique(np.linspace(0, len(kept) - 1, n_points).round().astype(int))]
        f1, f2 = grid[pick], curve[pick]
    return ReferenceFront(points=np.column_stack([f1, f2]), source="analytic")


def merged_reference_front(fronts: Sequence[np.ndarray]) -> ReferenceFront:
    """Non-dominated subset of the union of several fronts (exact duplicate
    rows collapse to one). Used in place of a curated reference when none
    is supplied for an engineering problem."""
    if len(fronts) == 0:
        raise InvalidInputError("merged_reference_front needs at least one front")
    arrays = [np.asarray(f, dtype=float) for f in fronts]
    width = arrays[0].shape[1]
    for f in arrays:
        if f.ndim != 2 or f.shape[1] != width:
            raise InvalidInputError("all fronts must share one objective dimensionality")
    union = np.unique(np.vstack(arrays), axis=0)
    dominated = domination_matrix(union).any(axis=0)
    return ReferenceFront(points=union[~dominated], source="merged-runs")


def load_reference_csv(path) -> ReferenceFront:
    """Load a reference front from CSV, dropping dominated rows.

    Dominated rows are rejected with a warning that lists the offending
    file line numbers (the header is line 1).
    """
    F = read_front_csv(path)
    dominated = domination_matrix(F).any(axis=0)
    if dominated.any():
        lines = [int(i) + 2 for i in np.flatnonzero(dominated)]
        warnings.warn(
            f"{path}: dropped dominated reference rows at lines {lines}", stacklevel=2
        )
        F = F[~dominated]
    return ReferenceFront(points=F, source="file")


# --------------------------------------------------------------------------
# Registry
# --------------------------------------------------------------------------

_FACTORIES: dict[str, Callable[[], ProblemSpec]] = {
    "zdt1": lambda: zdt("zdt1"),
    "zdt2": lambda: zdt("zdt2"),
    "zdt3": lambda: zdt("zdt3"),
    "zdt4": lambda: zdt("zdt4"),
    "zdt6": lambda: zdt("zdt6"),
    "four_bar_truss": four_bar_truss,
    "pressure_vessel": pressure_vessel,
    "coil_spring": coil_spring,
    "speed_reducer": speed_reducer,
    "car_side_impact": car_side_impact,
}


def problem_names() -> list[str]:
    return sorted(_FACTORIES)


def get_problem(name: str) -> ProblemSpec:
    key = name.lower()
    if key not in _FACTORIES:
        raise InvalidInputError(
            f"unknown problem {name!r}; available: {', '.join(problem_names())}"
        )
    return _FACTORIES[key]()


def is_zdt(name: str) -> bool:
    return name.lower() in ZDT_NAMES

"""Point-emitter configurations and their structure factor on a q-index grid.

The structure factor of N point emitters at positions R_i is the complex sum

    S(q) = sum_i exp(-i q . R_i),

evaluated here on integer index vectors u with physical momentum
q(u) = step * u, step = 2*pi/period.  Tables are Hermitian by construction:
the value at -u is stored as the exact complex conjugate of the value at u,
so S(-u) == conj(S(u)) holds bit-for-bit.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .angles import wrap_phase
from .errors import DimensionMismatchError, IndexRangeError, UndefinedPhaseError

Index = tuple  # integer index vector, one entry per grid dimension


def as_index(u, dim: int) -> Index:
    """Normalize an index argument (scalar or sequence) to an int tuple."""
    if isinstance(u, (int, np.integer)):
        idx = (int(u),)
    else:
        idx = tuple(int(c) for c in u)
    if len(idx) != dim:
        raise DimensionMismatchError(
            f"index {idx} has dimension {len(idx)}, grid has dimension {dim}"
        )
    return idx


def index_add(a: Index, b: Index) -> Index:
    return tuple(x + y for x, y in zip(a, b))


def index_sub(a: Index, b: Index) -> Index:
    return tuple(x - y for x, y in zip(a, b))


def index_neg(a: Index) -> Index:
    return tuple(-x for x in a)


@dataclass(frozen=True)
class EmitterConfig:
    """Positions of N point emitters on a d-dimensional lattice (d in {1,2}).

    Positions are stored as an (N, d) float array in lattice units.  They
    need not be distinct for structure-factor evaluation.
    """

    positions: np.ndarray

    def __init__(self, positions: Iterable):
        pos = np.atleast_2d(np.asarray(list(positions), dtype=float))
        if pos.ndim != 2 or pos.shape[0] < 1:
            raise ValueError("need at least one emitter position")
        if pos.shape[1] not in (1, 2):
            raise ValueError(f"dimension must be 1 or 2, got {pos.shape[1]}")
        if not np.all(np.isfinite(pos)):
            raise ValueError("emitter positions must be finite")
        pos.setflags(write=False)
        object.__setattr__(self, "positions", pos)

    @property
    def count(self) -> int:
        return self.positions.shape[0]

    @property
    def dimension(self) -> int:
        return self.positions.shape[1]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, EmitterConfig)
            and self.positions.shape == other.positions.shape
            and bool(np.all(self.positions == other.positions))
        )


def shift_config(config: EmitterConfig, delta) -> EmitterConfig:
    """Translate every position by -delta (moves the origin by +delta).

    The shifted structure factor keeps every magnitude and picks up the
    linear phase ramp q(u) . delta.
    """
    d = np.asarray(delta, dtype=float).reshape(-1)
    if d.size != config.dimension:
        raise DimensionMismatchError(
            f"shift vector has dimension {d.size}, config has {config.dimension}"
        )
    return EmitterConfig(config.positions - d[None, :])


def reflect_config(config: EmitterConfig) -> EmitterConfig:
    """Point-reflect the configuration through the origin.

    Magnitudes are unchanged; every phase is negated.
    """
    return EmitterConfig(-config.positions)


@dataclass(frozen=True)
class QGrid:
    """Detector q-index grid: `pixels` per axis, momentum step 2*pi/period.

    Physical momentum of index u is q(u) = step * u componentwise.  With the
    default period == pixels, emitters on integer sites 0..period-1 make the
    table periodic in the index.
    """

    dim: int = 1
    pixels: int = 9
    period: int = field(default=0)

    def __post_init__(self):
        if self.dim not in (1, 2):
            raise ValueError("grid dimension must be 1 or 2")
        if self.pixels < 2:
            raise ValueError("need at least 2 pixels per axis")
        if self.period == 0:
            object.__setattr__(self, "period", self.pixels)
        if self.period <= 0:
            raise ValueError("period must be positive")

    @property
    def step(self) -> float:
        return 2.0 * math.pi / self.period

    def momentum(self, u) -> np.ndarray:
        """Physical momentum vector q(u) = step * u."""
        return self.step * np.asarray(as_index(u, self.dim), dtype=float)


def _is_canonical(u: Index) -> bool:
    # canonical half: first nonzero component positive (zero vector included)
    for c in u:
        if c > 0:
            return True
        if c < 0:
            return False
    return True


class StructureFactorTable:
    """Complex structure-factor values on integer indices |u_c| <= radius.

    Construct via :func:`structure_factor`.  Lookups outside the allocated
    radius raise :class:`IndexRangeError`; phases below the magnitude floor
    `eps_mag` raise :class:`UndefinedPhaseError`.
    """

    def __init__(self, grid: QGrid, n_emitters: int, radius: int,
                 values: dict, eps_mag: float):
        self.grid = grid
        self.n_emitters = n_emitters
        self.radius = radius
        self.eps_mag = eps_mag
        self._values = values

    def indices(self):
        """All stored index vectors, lexicographic order."""
        rng = range(-self.radius, self.radius + 1)
        return itertools.product(rng, repeat=self.grid.dim)

    def value(self, u) -> complex:
        idx = as_index(u, self.grid.dim)
        try:
            return self._values[idx]
        except KeyError:
            raise IndexRangeError(
                f"index {idx} outside table radius {self.radius}"
            ) from None

    def magnitude(self, u) -> float:
        return abs(self.value(u))

    def defined(self, u) -> bool:
        """True when the phase at u is meaningful (|S| above the floor)."""
        return self.magnitude(u) >= self.eps_mag

    def phase(self, u) -> float:
        v = self.value(u)
        if abs(v) < self.eps_mag:
            raise UndefinedPhaseError(
                f"|S| = {abs(v):.3e} < {self.eps_mag:.3e} at index {as_index(u, self.grid.dim)}"
            )
        return wrap_phase(math.atan2(v.imag, v.real))

    def phase_or_zero(self, u) -> float:
        """Phase at u, with 0.0 where undefined (its cosine terms vanish)."""
        v = self.value(u)
        if abs(v) < self.eps_mag:
            return 0.0
        return wrap_phase(math.atan2(v.imag, v.real))


def structure_factor(config: EmitterConfig, grid: QGrid,
                     radius: int | None = None,
                     eps_mag: float | None = None) -> StructureFactorTable:
    """Evaluate S(q(u)) = sum_i exp(-i q(u) . R_i) over the index grid.

    The default radius 4*(pixels-1) covers every composite index reachable
    from correlation orders up to 4 (the deepest is u1 + 2*u2 + u3).
    Summation is naive and in input-position order, and only the canonical
    half-space is summed; the mirror index gets the exact conjugate.
    """
    if config.dimension != grid.dim:
        raise DimensionMismatchError(
            f"config dimension {config.dimension} != grid dimension {grid.dim}"
        )
    if radius is None:
        radius = 4 * (grid.pixels - 1)
    if eps_mag is None:
        eps_mag = 1e-12 * config.count

    step = grid.step
    pos = config.positions
    values: dict = {}
    rng = range(-radius, radius + 1)
    for u in itertools.product(rng, repeat=grid.dim):
        if not _is_canonical(u):
            continue
        acc = 0j
        for r in pos:
            theta = 0.0
            for c, x in zip(u, r):
                theta += step * c * x
            acc += complex(math.cos(theta), -math.sin(theta))
        values[u] = acc
        values[index_neg(u)] = acc.conjugate()
    return StructureFactorTable(grid, config.count, radius, values, eps_mag)


def phase_of(table: StructureFactorTable, u) -> float:
    """arg S(q(u)) wrapped to (-pi, pi]; raises where the magnitude is ~0."""
    return table.phase(u)

"""Brute-force evaluation of photon-correlation expectation values.

Ground truth for the closed-form correlation functions: enumerate ordered
tuples of pairwise-distinct emitter indices and all pairings of raising and
lowering operators (one symmetric-group permutation per pairing), then sum
the resulting phase factors directly.  Nothing here shares code with the
closed forms it checks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .emitters import EmitterConfig
from .errors import ImaginaryResidueError, OracleSizeError

#: refuse brute-force 4-fold sums above this emitter count
MAX_EMITTERS_ORDER4 = 12

IMAG_TOL = 1e-10

CYCLE_TYPE_NAMES = {
    (1,): "identity",
    (1, 1): "identity",
    (2,): "transposition",
    (1, 1, 1): "identity",
    (2, 1): "transposition",
    (3,): "three_cycle",
    (1, 1, 1, 1): "identity",
    (2, 1, 1): "transposition",
    (2, 2): "double_transposition",
    (3, 1): "three_cycle",
    (4,): "four_cycle",
}


@dataclass(frozen=True)
class Permutation:
    """A permutation of {0..k-1} given by its image tuple."""

    image: tuple

    def __post_init__(self):
        k = len(self.image)
        if sorted(self.image) != list(range(k)):
            raise ValueError(f"image {self.image} is not a bijection on 0..{k-1}")

    @property
    def order(self) -> int:
        return len(self.image)

    @property
    def cycle_type(self) -> tuple:
        """Cycle lengths sorted descending (a partition of the order)."""
        seen = [False] * self.order
        lengths = []
        for start in range(self.order):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = self.image[j]
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    @property
    def type_name(self) -> str:
        return CYCLE_TYPE_NAMES[self.cycle_type]


def enumerate_permutations(k: int) -> list[Permutation]:
    """All k! permutations of {0..k-1}, lexicographic in image, k in 2..4."""
    if k not in (2, 3, 4):
        raise ValueError(f"order must be 2, 3 or 4, got {k}")
    return [Permutation(img) for img in itertools.permutations(range(k))]


def _dot_matrix(config: EmitterConfig, vectors) -> np.ndarray:
    kv = np.atleast_2d(np.asarray(vectors, dtype=float))
    if kv.shape[1] != config.dimension:
        kv = kv.reshape(-1, config.dimension)
    return kv @ config.positions.T  # (k, N)


def expectation_bruteforce(k: int, config: EmitterConfig,
                           detector_vectors: Sequence) -> float:
    """Normalized k-fold coincidence expectation by direct pairing sums.

    Sums, over ordered tuples (i_1..i_k) of pairwise-distinct emitter
    indices and over all permutations sigma of the detection slots,

        exp(i sum_a k_a.R_{i_a}) * exp(-i sum_a k_a.R_{i_sigma(a)}),

    divided by N^k.  Returns the real part; a non-vanishing imaginary
    residue raises, since conjugate pairings must cancel it exactly.
    Tuples with fewer emitters than k contribute nothing, so N < k
    yields 0 naturally.
    """
    if k not in (2, 3, 4):
        raise ValueError(f"order must be 2, 3 or 4, got {k}")
    n = config.count
    if k == 4 and n > MAX_EMITTERS_ORDER4:
        raise OracleSizeError(
            f"refusing 4-fold brute force for N={n} > {MAX_EMITTERS_ORDER4}"
        )
    if n < k:
        return 0.0

    dots = _dot_matrix(config, detector_vectors)
    if dots.shape[0] != k:
        raise ValueError(f"need {k} detector vectors, got {dots.shape[0]}")
    tuples = np.array(list(itertools.permutations(range(n), k)))
    forward = sum(dots[a, tuples[:, a]] for a in range(k))

    total = 0j
    for sigma in itertools.permutations(range(k)):
        backward = sum(dots[a, tuples[:, sigma[a]]] for a in range(k))
        total += complex(np.exp(1j * (forward - backward)).sum())

    value = total / n**k
    if abs(value.imag) > IMAG_TOL:
        raise ImaginaryResidueError(
            f"imaginary residue {value.imag:.3e} exceeds {IMAG_TOL:.0e}"
        )
    return value.real


def restricted_pairing_sum(cycle_type: str, config: EmitterConfig,
                           q_vectors: Sequence = ()) -> complex:
    """4-fold pairing sum restricted to one representative permutation type.

    Sums the representative phase factor of the requested cycle type over
    all ordered 4-tuples of pairwise-distinct emitter indices (the
    `del(i,j,k,l)` constraint).  Argument counts per type: identity 0,
    transposition 1, double_transposition 2, three_cycle 3, four_cycle 4
    physical momentum vectors.
    """
    n = config.count
    if n > MAX_EMITTERS_ORDER4:
        raise OracleSizeError(
            f"refusing 4-fold brute force for N={n} > {MAX_EMITTERS_ORDER4}"
        )
    expected_args = {
        "identity": 0,
        "transposition": 1,
        "double_transposition": 2,
        "three_cycle": 3,
        "four_cycle": 4,
    }
    if cycle_type not in expected_args:
        raise ValueError(f"unknown cycle type {cycle_type!r}")
    qv = [np.asarray(q, dtype=float).reshape(-1) for q in q_vectors]
    if len(qv) != expected_args[cycle_type]:
        raise ValueError(
            f"{cycle_type} takes {expected_args[cycle_type]} vectors, got {len(qv)}"
        )
    if n < 4:
        return 0j

    pos = config.positions
    dot = [pos @ q for q in qv]  # each (N,)
    total = 0j
    for i, j, k, l in itertools.permutations(range(n), 4):
        if cycle_type == "identity":
            theta = 0.0
        elif cycle_type == "transposition":
            theta = -dot[0][k] + dot[0][l]
        elif cycle_type == "double_transposition":
            theta = -dot[0][i] + dot[0][j] - dot[1][k] + dot[1][l]
        elif cycle_type == "three_cycle":
            theta = -dot[2][j] + dot[0][k] + dot[1][l]
        else:  # four_cycle
            theta = -dot[3][i] + dot[0][j] + dot[1][k] + dot[2][l]
        total += complex(np.cos(theta), np.sin(theta))
    return total


def distinctness_product(i: int, j: int, k: int, l: int) -> int:
    """1 iff the four indices are pairwise distinct, via the delta product."""
    d = lambda a, b: 1 if a == b else 0  # noqa: E731
    return ((1 - d(i, j)) * (1 - d(i, k)) * (1 - d(i, l))
            * (1 - d(j, k)) * (1 - d(j, l)) * (1 - d(k, l)))


def distinctness_expansion(i: int, j: int, k: int, l: int) -> int:
    """The expanded delta-monomial form of the pairwise-distinct indicator.

    Expansion of the six-factor product using delta idempotency: one
    constant, six negative triple products, three positive pair-pair
    products, eight positive double products, six negative singles.
    """
    d = lambda a, b: 1 if a == b else 0  # noqa: E731
    dij, dik, dil = d(i, j), d(i, k), d(i, l)
    djk, djl, dkl = d(j, k), d(j, l), d(k, l)
    return (1
            - dij * dik * dil - dij * dil * djk - dij * dik * djl
            - dij * djk * djl - dij * dik * dkl - dij * djk * dkl
            + dij * dkl + dil * djk + dik * djl
            + dij * dik + dij * djk + dij * dil + dij * djl
            + dik * dil + dik * dkl + djk * djl + djk * dkl
            - dij - dik - dil - djk - djl - dkl)

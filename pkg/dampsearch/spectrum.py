"""
Open Ising chain spectrum

Builds the diagonal of H = -epsilon * sum_{b=0}^{n-2} s_b s_{b+1}, groups it
into eigenvalues with their degeneracies and produces oracle masks.

Energies are kept as exact integers in units of epsilon; epsilon only scales
values at presentation time.

Index convention: bit b of a basis index is spin b+1, bit value 0 is spin up
(+1) and 1 is spin down (-1). Index 0 is the all-up chain and 2^n - 1 the
all-down chain.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import reduce
from typing import Any

import numpy as np

from .constants import DEFAULT_MAX_SPINS, MIN_SPINS
from .core import SearchInstance
from .exceptions import ChainSizeError, InvalidArgumentError, NotAnEigenvalueError

logger = logging.getLogger(__name__)

# Diagonals of the two-site bond operator S = s (x) s and the identity
_BOND_DIAGONAL = np.array([1, -1, -1, 1], dtype=np.int64)
_IDENTITY_DIAGONAL = np.array([1, 1], dtype=np.int64)


def _readonly(values: np.ndarray) -> np.ndarray:
    values.flags.writeable = False
    return values


@dataclass(frozen=True)
class IsingChain:
    """Open chain of n spins with interaction energy epsilon"""

    n: int
    epsilon: float = 1.0
    max_spins: int = DEFAULT_MAX_SPINS

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise InvalidArgumentError(f"Spin count must be an integer, got {self.n!r}")
        if not MIN_SPINS <= self.n <= self.max_spins:
            raise ChainSizeError(self.n, self.max_spins)
        if not self.epsilon > 0 or not math.isfinite(self.epsilon):
            raise InvalidArgumentError(
                f"epsilon must be positive and finite, got {self.epsilon}"
            )

    @property
    def dimension(self) -> int:
        """Number of basis states, 2^n"""
        return 1 << self.n

    @property
    def bonds(self) -> int:
        return self.n - 1


@dataclass(frozen=True)
class EnergyDiagonal:
    """Diagonal of the chain Hamiltonian, in integer units of epsilon"""

    chain: IsingChain
    units: np.ndarray

    @property
    def n(self) -> int:
        return self.chain.n

    @property
    def values(self) -> np.ndarray:
        """Energies scaled by epsilon"""
        return self.units * self.chain.epsilon

    def __len__(self) -> int:
        return int(self.units.size)


@dataclass(frozen=True)
class SpectrumEntry:
    """One eigenvalue with its degeneracy and the basis states carrying it"""

    lambda_units: int
    degeneracy: int
    marked_indices: np.ndarray

    def to_dict(self) -> dict[str, Any]:
        return {"lambda": self.lambda_units, "m": self.degeneracy}


@dataclass(frozen=True)
class EnergySpectrum:
    """Eigenvalues of the chain in ascending order"""

    chain: IsingChain
    entries: tuple[SpectrumEntry, ...]

    @property
    def n(self) -> int:
        return self.chain.n

    def eigenvalues(self) -> list[int]:
        """Eigenvalues in integer units of epsilon, ascending"""
        return [entry.lambda_units for entry in self.entries]

    def entry(self, lambda_units: int) -> SpectrumEntry:
        for candidate in self.entries:
            if candidate.lambda_units == lambda_units:
                return candidate
        raise NotAnEigenvalueError(lambda_units, self.eigenvalues())

    def degeneracy(self, lambda_units: int) -> int:
        """M(lambda); 0 when lambda is not in the spectrum"""
        for candidate in self.entries:
            if candidate.lambda_units == lambda_units:
                return candidate.degeneracy
        return 0

    def ground_energy(self) -> int:
        return self.entries[0].lambda_units

    def total_states(self) -> int:
        return sum(entry.degeneracy for entry in self.entries)

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.chain.n,
            "epsilon": self.chain.epsilon,
            "entries": [entry.to_dict() for entry in self.entries],
        }


@dataclass(frozen=True)
class OracleMask:
    """Basis states an oracle marks for eigenvalue lambda"""

    n: int
    lambda_units: int
    marked: np.ndarray

    @property
    def dimension(self) -> int:
        return 1 << self.n

    @property
    def count(self) -> int:
        return int(self.marked.size)

    def is_searchable(self) -> bool:
        """1 <= |marked| < 2^n"""
        return 1 <= self.count < self.dimension

    def as_boolean(self) -> np.ndarray:
        """Dense boolean marker over all basis states"""
        flags = np.zeros(self.dimension, dtype=bool)
        flags[self.marked] = True
        return flags


def spin_column(indices: np.ndarray, b: int) -> np.ndarray:
    """Spin s_{b+1} (+1 up / -1 down) of every basis index"""
    return 1 - 2 * ((indices >> b) & 1)


def build_diagonal(chain: IsingChain) -> EnergyDiagonal:
    """
    Diagonal of H by looping over the bonds of every spin configuration.

    values[i] = -sum_{b=0}^{n-2} s_b s_{b+1} (units of epsilon).
    """
    indices = np.arange(chain.dimension, dtype=np.int64)
    units = np.zeros(chain.dimension, dtype=np.int64)
    left = spin_column(indices, 0)
    for b in range(chain.bonds):
        right = spin_column(indices, b + 1)
        units -= left * right
        left = right
    logger.debug("built diagonal for n=%d (%d entries)", chain.n, units.size)
    return EnergyDiagonal(chain=chain, units=_readonly(units))


def build_diagonal_tensor(chain: IsingChain) -> EnergyDiagonal:
    """
    Diagonal of H from its Kronecker-product form.

    Each bond contributes I^{(n-2-b)} (x) S (x) I^{b}; the leftmost factor is
    the most significant bit, so bond b acts on bits b and b+1 as in
    build_diagonal.
    """
    n = chain.n
    total = np.zeros(1 << n, dtype=np.int64)
    for b in range(n - 1):
        factors = [_IDENTITY_DIAGONAL] * (n - 2 - b) + [_BOND_DIAGONAL]
        factors += [_IDENTITY_DIAGONAL] * b
        total += reduce(np.kron, factors)
    return EnergyDiagonal(chain=chain, units=_readonly(-total))


def spectrum(diagonal: EnergyDiagonal) -> EnergySpectrum:
    """Group the diagonal by eigenvalue; degeneracies sum to 2^n"""
    values, counts = np.unique(diagonal.units, return_counts=True)
    entries = []
    for value, count in zip(values, counts, strict=True):
        marked = np.flatnonzero(diagonal.units == value).astype(np.int64)
        entries.append(
            SpectrumEntry(
                lambda_units=int(value),
                degeneracy=int(count),
                marked_indices=_readonly(marked),
            )
        )
    logger.debug("n=%d spectrum has %d levels", diagonal.n, len(entries))
    return EnergySpectrum(chain=diagonal.chain, entries=tuple(entries))


def oracle_mask(diagonal: EnergyDiagonal, lambda_units: int) -> OracleMask:
    """Indices i with H_ii = lambda; lambda in integer units of epsilon"""
    if isinstance(lambda_units, bool) or not isinstance(
        lambda_units, int | np.integer
    ):
        raise InvalidArgumentError(
            f"lambda must be an integer multiple of epsilon, got {lambda_units!r}"
        )
    marked = np.flatnonzero(diagonal.units == lambda_units).astype(np.int64)
    if marked.size == 0:
        available = sorted({int(v) for v in np.unique(diagonal.units)})
        raise NotAnEigenvalueError(int(lambda_units), available)
    return OracleMask(
        n=diagonal.n, lambda_units=int(lambda_units), marked=_readonly(marked)
    )


def binomial_degeneracy(n: int, lambda_units: int) -> int:
    """
    Closed-form degeneracy 2*C(n-1, k) of lambda = -(n-1-2k).

    k counts anti-aligned bonds; returns 0 for unreachable energies.
    """
    bonds = n - 1
    offset = bonds + lambda_units
    if offset % 2 or not 0 <= offset // 2 <= bonds:
        return 0
    return 2 * math.comb(bonds, offset // 2)


def search_instance(mask: OracleMask) -> SearchInstance:
    """(N, M) = (2^n, |marked|)"""
    return SearchInstance(mask.dimension, mask.count)

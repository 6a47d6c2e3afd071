"""Occupation patterns of n fermions over m modes and their canonical order.

Mode indices are 1-based throughout the public API.  The canonical order of
the C(m, n) patterns is lexicographic on the sorted tuple of occupied mode
indices (the order produced by ``itertools.combinations``); every module
that indexes outcomes, including file writers, uses this order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb


@dataclass(frozen=True, order=True)
class Configuration:
    """An occupation pattern: which of the ``m`` modes hold a fermion."""

    m: int
    occupied: tuple[int, ...]

    def __post_init__(self):
        occ = tuple(int(i) for i in self.occupied)
        object.__setattr__(self, "occupied", occ)
        object.__setattr__(self, "m", int(self.m))
        if self.m < 1:
            raise ValueError("mode count must be positive")
        if any(not 1 <= i <= self.m for i in occ):
            raise ValueError(f"occupied modes must lie in [1, {self.m}], got {occ}")
        if any(a >= b for a, b in zip(occ, occ[1:])):
            raise ValueError(f"occupied modes must be strictly increasing, got {occ}")

    @property
    def n(self) -> int:
        """Number of occupied modes (popcount)."""
        return len(self.occupied)

    def bitstring(self) -> str:
        """Pattern as a string of '0'/'1', mode 1 leftmost, e.g. '1100'."""
        bits = ["0"] * self.m
        for i in self.occupied:
            bits[i - 1] = "1"
        return "".join(bits)

    @classmethod
    def from_bitstring(cls, bits: str) -> "Configuration":
        if not bits or set(bits) - {"0", "1"}:
            raise ValueError(f"not a nonempty bitstring: {bits!r}")
        return cls(len(bits), tuple(i + 1 for i, b in enumerate(bits) if b == "1"))

    def row_indices(self) -> list[int]:
        """0-based index list for numpy submatrix selection."""
        return [i - 1 for i in self.occupied]


def enumerate_configurations(m: int, n: int) -> list[Configuration]:
    """All C(m, n) patterns in canonical order."""
    if not 0 <= n <= m:
        raise ValueError(f"need 0 <= n <= m, got n={n}, m={m}")
    return [Configuration(m, occ) for occ in combinations(range(1, m + 1), n)]


def configuration_count(m: int, n: int) -> int:
    if not 0 <= n <= m:
        raise ValueError(f"need 0 <= n <= m, got n={n}, m={m}")
    return comb(m, n)


def configuration_index(cfg: Configuration) -> int:
    """Rank of ``cfg`` within the canonical enumeration of its (m, n) family.

    Combinatorial ranking: counts how many patterns precede ``cfg`` without
    materializing the enumeration.
    """
    m, occ = cfg.m, cfg.occupied
    n = len(occ)
    rank = 0
    prev = 0
    for k, mode in enumerate(occ):
        for v in range(prev + 1, mode):
            rank += comb(m - v, n - k - 1)
        prev = mode
    return rank

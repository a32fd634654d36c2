"""Subtraction-set generators and game descriptions.

A subtraction game on one heap is described by its legal removal amounts
(the subtraction set S) and, optionally, a set of designated hotspot
positions used by the hot/cold solvers.  Sets are materialized as packed
indicators up to the position bound: moves at or above the largest
position can never be played, so truncation loses nothing.
"""

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .bitkernel import BitVec

__all__ = [
    "GameSpec",
    "squares_game",
    "moser_de_bruijn_game",
    "explicit_game",
    "primes_game",
    "moser_nim_formula",
]


@dataclass(frozen=True)
class GameSpec:
    """One-heap subtraction game over positions [0, limit).

    ``moves`` marks the legal removal amounts below ``limit``; bit 0 is
    always clear since a move must remove at least one token.
    ``hotspots`` optionally marks positions declared hot regardless of
    their moves.
    """

    name: str
    moves: BitVec
    hotspots: BitVec | None
    limit: int

    def __post_init__(self):
        if self.limit < 1:
            raise ValueError("limit must be at least 1")
        if self.moves.offset != 0 or len(self.moves) != self.limit:
            raise ValueError("moves must cover exactly [0, limit)")
        if self.moves[0]:
            raise ValueError("0 is not a legal removal amount")
        if self.hotspots is not None:
            if self.hotspots.offset != 0 or len(self.hotspots) != self.limit:
                raise ValueError("hotspots must cover exactly [0, limit)")

    @property
    def has_hotspots(self) -> bool:
        return self.hotspots is not None and self.hotspots.popcount() > 0

    def move_values(self) -> np.ndarray:
        """Legal removal amounts, ascending."""
        return self.moves.indices()

    def with_hotspots(self, indices) -> "GameSpec":
        """Same game with the given positions as hotspots.

        Indices outside [0, limit) are ignored: a hotspot beyond the
        evaluated range cannot affect any position in it.
        """
        arr = np.zeros(self.limit, dtype=bool)
        idx = np.asarray(list(indices), dtype=np.int64)
        if idx.size:
            idx = idx[(idx >= 0) & (idx < self.limit)]
            arr[idx] = True
        return GameSpec(self.name, self.moves, BitVec._wrap(arr), self.limit)


def _spec(name: str, move_bits: np.ndarray, limit: int) -> GameSpec:
    return GameSpec(name, BitVec._wrap(move_bits), None, limit)


def _check_limit(limit: int) -> None:
    if limit < 1:
        raise ValueError("limit must be at least 1")


def squares_game(limit: int) -> GameSpec:
    """Subtract-a-square: any positive perfect square may be removed."""
    _check_limit(limit)
    bits = np.zeros(limit, dtype=bool)
    roots = np.arange(1, isqrt(limit - 1) + 1 if limit > 1 else 1, dtype=np.int64)
    bits[roots * roots] = True
    return _spec("squares", bits, limit)


def _spread_base4(k: np.ndarray) -> np.ndarray:
    # binary digits of k become base-4 digits: bit b contributes 4**b
    out = np.zeros_like(k)
    kk = k.copy()
    shift = 0
    while kk.any():
        out |= (kk & 1) << (2 * shift)
        kk >>= 1
        shift += 1
    return out


def moser_de_bruijn_game(limit: int) -> GameSpec:
    """Moser-de Bruijn game: removals are sums of distinct powers of four.

    The sequence itself starts at 0, but 0 cannot be a removal amount and
    is excluded from the move set.
    """
    _check_limit(limit)
    # spread(k) has at most bitlen(k) base-4 digits, so k below
    # 2**(ceil(bitlen(limit)/2) + 1) covers every value below limit
    k = np.arange(1 << ((limit.bit_length() + 1) // 2 + 1), dtype=np.int64)
    vals = _spread_base4(k)
    vals = vals[(vals >= 1) & (vals < limit)]
    bits = np.zeros(limit, dtype=bool)
    bits[vals] = True
    return _spec("moser", bits, limit)


def explicit_game(values, limit: int) -> GameSpec:
    """Game with a literal removal set; values at or above limit are dropped."""
    _check_limit(limit)
    vals = sorted(set(int(v) for v in values))
    if vals and vals[0] < 1:
        raise ValueError("removal amounts must be at least 1")
    bits = np.zeros(limit, dtype=bool)
    kept = [v for v in vals if v < limit]
    if kept:
        bits[kept] = True
    name = "explicit:" + ",".join(str(v) for v in vals)
    return _spec(name, bits, limit)


def primes_game(limit: int) -> GameSpec:
    """Subtract-a-prime.  Not an interesting game, but a handy test subject."""
    _check_limit(limit)
    sieve = np.ones(limit, dtype=bool)
    sieve[: min(2, limit)] = False
    for p in range(2, isqrt(limit - 1) + 1 if limit > 1 else 2):
        if sieve[p]:
            sieve[p * p :: p] = False
    return _spec("primes", sieve, limit)


def moser_nim_formula(n: int) -> int:
    """Closed-form nim-value of heap ``n`` in the Moser-de Bruijn game.

    Write n in base 4, take each digit modulo 2, and read the resulting
    0/1 string as a binary number.
    """
    if n < 0:
        raise ValueError("heap size must be non-negative")
    v = 0
    bit = 0
    while n:
        v |= (n & 1) << bit  # base-4 digit mod 2 is the digit's low bit
        n >>= 2
        bit += 1
    return v

"""Packed bit vectors and exact integer convolution.

The solvers reduce game evaluation to convolutions of 0/1 indicator
vectors: a position is hot when its pair count is nonzero, so counts must
be bit-exact.  The fast path therefore runs a number-theoretic transform
over a single word-sized prime instead of a floating-point FFT, which
could round at large transform sizes.
"""

import numpy as np

__all__ = [
    "BitVec",
    "CountVec",
    "convolve_naive",
    "convolve_exact",
    "convolve_boolean",
    "convolve_boolean_window",
    "DEFAULT_CEILING",
    "DEFAULT_CROSSOVER",
    "NTT_MODULUS",
]

# 15 * 2**27 + 1, prime.  The 2-adic order of p - 1 is 27, so transforms up
# to length 2**27 exist, and pair counts (bounded by the shorter input's
# popcount, hence < 2**27) never wrap: a single modulus gives exact counts.
NTT_MODULUS = 2013265921
_NTT_ROOT = 31  # primitive root of NTT_MODULUS
_MAX_TRANSFORM = 1 << 27

DEFAULT_CEILING = 1 << 27
DEFAULT_CROSSOVER = 64


class BitVec:
    """Immutable packed indicator of a set of integers over a half-open range.

    Bit ``i`` (0-based, relative) stands for the absolute value
    ``offset + i``.  Offsets travel with vectors through convolutions, so
    range-relative work needs no index bookkeeping at call sites.
    """

    __slots__ = ("_offset", "_bits")

    def __init__(self, bits, offset: int = 0):
        arr = np.array(bits, dtype=bool)  # copy: the vector owns its storage
        if arr.ndim != 1:
            raise ValueError("bits must be one-dimensional")
        if offset < 0:
            raise ValueError("offset must be non-negative")
        arr.setflags(write=False)
        self._bits = arr
        self._offset = int(offset)

    @classmethod
    def _wrap(cls, arr: np.ndarray, offset: int = 0) -> "BitVec":
        # No-copy constructor; the caller hands over ownership of arr.
        bv = object.__new__(cls)
        arr = np.asarray(arr, dtype=bool)
        arr.setflags(write=False)
        bv._bits = arr
        bv._offset = int(offset)
        return bv

    @classmethod
    def zeros(cls, length: int, offset: int = 0) -> "BitVec":
        if length < 0:
            raise ValueError("length must be non-negative")
        return cls._wrap(np.zeros(length, dtype=bool), offset)

    @classmethod
    def from_indices(cls, indices, length: int, offset: int = 0) -> "BitVec":
        """Build a vector of the given length with the absolute ``indices`` set."""
        arr = np.zeros(length, dtype=bool)
        idx = np.asarray(list(indices), dtype=np.int64)
        if idx.size:
            rel = idx - offset
            if rel.min() < 0 or rel.max() >= length:
                raise ValueError("index outside the vector's range")
            arr[rel] = True
        return cls._wrap(arr, offset)

    @property
    def offset(self) -> int:
        return self._offset

    @property
    def bits(self) -> np.ndarray:
        """Read-only boolean array of length ``len(self)``."""
        return self._bits

    def __len__(self) -> int:
        return self._bits.shape[0]

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self._bits.shape[0]:
            raise IndexError(f"bit {i} outside [0, {self._bits.shape[0]})")
        return int(self._bits[i])

    def popcount(self) -> int:
        return int(np.count_nonzero(self._bits))

    def indices(self) -> np.ndarray:
        """Absolute values of the set bits, ascending."""
        return np.flatnonzero(self._bits) + self._offset

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitVec):
            return NotImplemented
        return (
            self._offset == other._offset
            and self._bits.shape == other._bits.shape
            and bool(np.array_equal(self._bits, other._bits))
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"BitVec(offset={self._offset}, len={len(self)}, popcount={self.popcount()})"


class CountVec:
    """Immutable array of non-negative pair counts with an absolute offset."""

    __slots__ = ("_offset", "_counts")

    def __init__(self, counts, offset: int = 0):
        arr = np.array(counts, dtype=np.int64)
        if arr.ndim != 1:
            raise ValueError("counts must be one-dimensional")
        if arr.size and arr.min() < 0:
            raise ValueError("counts must be non-negative")
        if offset < 0:
            raise ValueError("offset must be non-negative")
        arr.setflags(write=False)
        self._counts = arr
        self._offset = int(offset)

    @classmethod
    def _wrap(cls, arr: np.ndarray, offset: int = 0) -> "CountVec":
        cv = object.__new__(cls)
        arr = np.asarray(arr, dtype=np.int64)
        arr.setflags(write=False)
        cv._counts = arr
        cv._offset = int(offset)
        return cv

    @property
    def offset(self) -> int:
        return self._offset

    @property
    def counts(self) -> np.ndarray:
        return self._counts

    def __len__(self) -> int:
        return self._counts.shape[0]

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self._counts.shape[0]:
            raise IndexError(f"count {i} outside [0, {self._counts.shape[0]})")
        return int(self._counts[i])

    def __eq__(self, other) -> bool:
        if not isinstance(other, CountVec):
            return NotImplemented
        return (
            self._offset == other._offset
            and self._counts.shape == other._counts.shape
            and bool(np.array_equal(self._counts, other._counts))
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"CountVec(offset={self._offset}, len={len(self)})"


def _next_pow2(n: int) -> int:
    return 1 if n <= 1 else 1 << (n - 1).bit_length()


# Twiddle tables for small transforms are cached; larger ones are rebuilt
# per call (the build is O(log n) vectorized steps, negligible next to the
# butterflies).
_POW_CACHE: dict = {}
_POW_CACHE_LIMIT = 1 << 18


def _root_powers(order: int, inverse: bool) -> np.ndarray:
    """First ``order // 2`` powers of the order-``order`` root of unity."""
    key = (order, inverse)
    cached = _POW_CACHE.get(key)
    if cached is not None:
        return cached
    w = pow(_NTT_ROOT, (NTT_MODULUS - 1) // order, NTT_MODULUS)
    if inverse:
        w = pow(w, NTT_MODULUS - 2, NTT_MODULUS)
    half = order >> 1
    out = np.empty(half, dtype=np.int64)
    out[0] = 1
    filled = 1
    wk = w
    while filled < half:
        step = min(filled, half - filled)
        out[filled : filled + step] = out[:step] * wk % NTT_MODULUS
        filled += step
        wk = wk * wk % NTT_MODULUS
    if order <= _POW_CACHE_LIMIT:
        out.setflags(write=False)
        _POW_CACHE[key] = out
    return out


def _ntt_forward(a: np.ndarray) -> None:
    """In-place transform, natural order in, bit-reversed order out."""
    n = a.shape[0]
    h = n
    while h > 1:
        half = h >> 1
        ws = _root_powers(h, inverse=False)
        blk = a.reshape(-1, h)
        u = blk[:, :half]
        v = blk[:, half:]
        s = (u + v) % NTT_MODULUS
        d = (u - v) % NTT_MODULUS * ws % NTT_MODULUS
        blk[:, :half] = s
        blk[:, half:] = d
        h = half


def _ntt_inverse(a: np.ndarray) -> None:
    """In-place inverse transform, bit-reversed order in, natural order out."""
    n = a.shape[0]
    h = 2
    while h <= n:
        half = h >> 1
        ws = _root_powers(h, inverse=True)
        blk = a.reshape(-1, h)
        u = blk[:, :half]
        t = blk[:, half:] * ws % NTT_MODULUS
        s = (u + t) % NTT_MODULUS
        d = (u - t) % NTT_MODULUS
        blk[:, :half] = s
        blk[:, half:] = d
        h <<= 1
    if n > 1:
        a *= pow(n, NTT_MODULUS - 2, NTT_MODULUS)
        a %= NTT_MODULUS


def _cyclic_counts(abits: np.ndarray, bbits: np.ndarray, size: int) -> np.ndarray:
    """Cyclic convolution counts of two 0/1 vectors, transform length ``size``."""
    fa = np.zeros(size, dtype=np.int64)
    fa[: abits.shape[0]] = abits
    fb = np.zeros(size, dtype=np.int64)
    fb[: bbits.shape[0]] = bbits
    _ntt_forward(fa)
    _ntt_forward(fb)
    fa *= fb
    fa %= NTT_MODULUS
    _ntt_inverse(fa)
    return fa


def _check_inputs(a: BitVec, b: BitVec) -> None:
    if len(a) == 0 or len(b) == 0:
        raise ValueError("cannot convolve an empty vector")


def convolve_naive(a: BitVec, b: BitVec) -> CountVec:
    """Brute-force pair counting, the oracle for the fast path.

    ``counts[i]`` is the number of pairs ``(j, k)`` with ``j + k = i``,
    ``a[j] = 1`` and ``b[k] = 1`` (indices relative).  Quadratic time.
    """
    _check_inputs(a, b)
    la, lb = len(a), len(b)
    counts = np.zeros(la + lb - 1, dtype=np.int64)
    bb = b.bits.view(np.uint8).astype(np.int64)
    for j in np.flatnonzero(a.bits):
        counts[j : j + lb] += bb
    return CountVec._wrap(counts, a.offset + b.offset)


def convolve_exact(
    a: BitVec,
    b: BitVec,
    *,
    ceiling: int = DEFAULT_CEILING,
    crossover: int = DEFAULT_CROSSOVER,
) -> CountVec:
    """Exact pair counts in O(n log n), bit-identical to :func:`convolve_naive`.

    Inputs are zero-padded to a power of two internally; the padding is
    invisible in the output.  Below ``crossover`` the naive path is used
    (same output, better constant).
    """
    _check_inputs(a, b)
    la, lb = len(a), len(b)
    out_len = la + lb - 1
    if out_len > ceiling or out_len > _MAX_TRANSFORM:
        raise ValueError(f"result length {out_len} exceeds the ceiling {min(ceiling, _MAX_TRANSFORM)}")
    if min(la, lb) < crossover:
        return convolve_naive(a, b)
    counts = _cyclic_counts(a.bits, b.bits, _next_pow2(out_len))[:out_len]
    return CountVec._wrap(np.ascontiguousarray(counts), a.offset + b.offset)


def convolve_boolean(
    a: BitVec,
    b: BitVec,
    *,
    ceiling: int = DEFAULT_CEILING,
    crossover: int = DEFAULT_CROSSOVER,
) -> BitVec:
    """Boolean convolution: bit ``i`` set iff some pair ``j + k = i`` has both bits set."""
    cv = convolve_exact(a, b, ceiling=ceiling, crossover=crossover)
    return BitVec._wrap(cv.counts > 0, cv.offset)


def convolve_boolean_window(
    a: BitVec,
    b: BitVec,
    lo: int,
    hi: int,
    *,
    ceiling: int = DEFAULT_CEILING,
    crossover: int = DEFAULT_CROSSOVER,
) -> BitVec:
    """Window ``[lo, hi)`` (absolute) of ``convolve_boolean(a, b)``.

    Computed with a cyclic transform just large enough that wrapped
    indices land strictly below the window, so the window itself is
    alias-free.  This keeps the divide-and-conquer solver's per-level
    transforms at the size of the range being split instead of twice that.
    """
    _check_inputs(a, b)
    la, lb = len(a), len(b)
    out_len = la + lb - 1
    if out_len > ceiling or out_len > _MAX_TRANSFORM:
        raise ValueError(f"result length {out_len} exceeds the ceiling {min(ceiling, _MAX_TRANSFORM)}")
    off = a.offset + b.offset
    rlo, rhi = lo - off, hi - off
    if not 0 <= rlo < rhi <= out_len:
        raise ValueError(f"window [{lo}, {hi}) outside the result range [{off}, {off + out_len})")
    if min(la, lb) < crossover:
        counts = convolve_naive(a, b).counts[rlo:rhi]
        return BitVec._wrap(counts > 0, lo)
    # Wrapped mass sits at i - size <= out_len - 1 - size; size > out_len - 1 - rlo
    # pushes all of it below rlo.
    size = _next_pow2(max(la, lb, rhi, out_len - rlo))
    counts = _cyclic_counts(a.bits, b.bits, size)
    return BitVec._wrap(counts[rlo:rhi] > 0, lo)

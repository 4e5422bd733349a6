"""Exact base-2 radical inverse and shift-rotated sequences.

Everything here is B-bit fixed point: a value in [0, 1) is an integer
mantissa in [0, 2^B) standing for mantissa / 2^B.  No floating point is
used anywhere, so comparisons, complements and modular sums are exact
and bit-reproducible for any word size 1 <= B <= 64.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

MAX_BITS = 64


def check_bits(bits: int) -> None:
    """Reject word sizes outside 1..64."""
    if not isinstance(bits, int) or not 1 <= bits <= MAX_BITS:
        raise ValueError(f"word size must be an integer in [1, {MAX_BITS}], got {bits!r}")


def check_index(i: int, bits: int) -> None:
    if not 0 <= i < (1 << bits):
        raise ValueError(f"index {i} out of range for {bits}-bit words")


def check_mantissa(m: int, bits: int) -> None:
    if not 0 <= m < (1 << bits):
        raise ValueError(f"mantissa {m} out of range for {bits}-bit words")


# 16-bit reversal table via the doubling recurrence rev(i) = rev(i >> 1) >> 1
# with the dropped bit re-entering at the top.  Built independently of the
# vectorized mask-shuffle path below so the two can cross-check each other.
_REV16 = [0] * 65536
for _i in range(1, 65536):
    _REV16[_i] = (_REV16[_i >> 1] >> 1) | ((_i & 1) << 15)
del _i


def bit_reverse(i: int, bits: int) -> int:
    """Reverse the low `bits` bits of `i` (bit 0 becomes bit bits-1)."""
    r16 = _REV16
    full = (
        (r16[i & 0xFFFF] << 48)
        | (r16[(i >> 16) & 0xFFFF] << 32)
        | (r16[(i >> 32) & 0xFFFF] << 16)
        | r16[i >> 48]
    )
    return full >> (64 - bits)


@dataclass(frozen=True, slots=True)
class UnitFixed:
    """An exact fraction mantissa / 2^bits in [0, 1).

    Ordering compares mantissas and is only defined between values of the
    same word size; mixing word sizes raises rather than silently rescaling.
    """

    mantissa: int
    bits: int

    def __post_init__(self) -> None:
        check_bits(self.bits)
        check_mantissa(self.mantissa, self.bits)

    @classmethod
    def from_float(cls, x: float, bits: int, *, rounding: str = "trunc") -> "UnitFixed":
        """Quantize a float in [0, 1) to `bits` bits.

        Truncates toward zero by default ("trunc"); pass rounding="nearest"
        to round instead.  Quantization is the only lossy step in the
        library, and it happens here, never inside queries.
        """
        check_bits(bits)
        if not 0.0 <= x < 1.0:
            raise ValueError(f"value {x} outside [0, 1)")
        scaled = x * (1 << bits)
        m = round(scaled) if rounding == "nearest" else int(scaled)
        return cls(min(m, (1 << bits) - 1), bits)

    def _check_compatible(self, other: "UnitFixed") -> None:
        if self.bits != other.bits:
            raise ValueError(f"cannot compare {self.bits}-bit and {other.bits}-bit values")

    def __lt__(self, other: "UnitFixed") -> bool:
        self._check_compatible(other)
        return self.mantissa < other.mantissa

    def __le__(self, other: "UnitFixed") -> bool:
        self._check_compatible(other)
        return self.mantissa <= other.mantissa

    def __float__(self) -> float:
        return self.mantissa / (1 << self.bits)

    def as_fraction(self):
        from fractions import Fraction

        return Fraction(self.mantissa, 1 << self.bits)

    def __str__(self) -> str:
        return f"{self.mantissa}/{1 << self.bits}"


def radical_inverse(i: int, bits: int) -> UnitFixed:
    """Map index i to [0, 1) by mirroring its binary digits across the point.

    The mantissa is exactly the `bits`-bit reversal of i, so the map is a
    bijection on [0, 2^bits) and its own inverse up to another reversal.
    """
    check_bits(bits)
    check_index(i, bits)
    return UnitFixed(bit_reverse(i, bits), bits)


def radical_inverse_inv(v: UnitFixed) -> int:
    """Index whose radical inverse is v.  Reversal is an involution."""
    return bit_reverse(v.mantissa, v.bits)


@dataclass(frozen=True, slots=True)
class ShiftedSequence:
    """A van der Corput sequence rotated by a constant shift modulo 1.

    `shift` is the rotation's mantissa.  `critical` caches the one index
    whose rotated value is exactly 0, or None for the zero shift (the
    complement of 0 is 1, which has no mantissa in [0, 1); index 0 then
    already attains the unshifted minimum).
    """

    bits: int
    shift: int
    critical: int | None = None

    def __post_init__(self) -> None:
        check_bits(self.bits)
        check_mantissa(self.shift, self.bits)
        k = None
        if self.shift:
            k = bit_reverse((1 << self.bits) - self.shift, self.bits)
        object.__setattr__(self, "critical", k)

    @property
    def shift_value(self) -> UnitFixed:
        return UnitFixed(self.shift, self.bits)

    def value_mantissa(self, i: int) -> int:
        """Mantissa of the rotated value at index i (raw-int fast path)."""
        check_index(i, self.bits)
        return (bit_reverse(i, self.bits) + self.shift) & ((1 << self.bits) - 1)

    def value(self, i: int) -> UnitFixed:
        return UnitFixed(self.value_mantissa(i), self.bits)

    def critical_index(self) -> int | None:
        """Index with rotated value 0, or None when the shift is 0."""
        return self.critical

    def values_array(self, start: int = 0, stop: int | None = None) -> np.ndarray:
        """Rotated value mantissas for indices [start, stop) as uint64.

        Vectorized independently of the scalar path (mask-and-shuffle
        reversal rather than a per-bit loop), which is what makes it a
        usable cross-check as well as a bulk evaluator.
        """
        if stop is None:
            stop = 1 << self.bits
        check_index(start, self.bits)
        if not start < stop <= (1 << self.bits):
            raise ValueError(f"bad index range [{start}, {stop}) for {self.bits}-bit words")
        idx = np.arange(start, stop, dtype=np.uint64)
        rev = bit_reverse_array(idx, self.bits)
        mask = np.uint64(((1 << self.bits) - 1) & 0xFFFFFFFFFFFFFFFF)
        return (rev + np.uint64(self.shift)) & mask


# Byte-swapped reversal constants for the vectorized path.
_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)


def bit_reverse_array(idx: np.ndarray, bits: int) -> np.ndarray:
    """Reverse the low `bits` bits of every element of a uint64 array."""
    check_bits(bits)
    x = np.array(idx, dtype=np.uint64, copy=True)
    for shift, mask in ((np.uint64(1), _M1), (np.uint64(2), _M2), (np.uint64(4), _M4)):
        t = x & mask
        x >>= shift
        x &= mask
        t <<= shift
        x |= t
    x = x.byteswap(True)
    if bits < 64:
        x >>= np.uint64(64 - bits)
    return x


def golden_ratio_mantissa(bits: int) -> int:
    """frac((sqrt(5)-1)/2) rounded to `bits` bits, computed exactly.

    Uses isqrt so the rounding is correct even at 64 bits, where a float
    sqrt would be short by ~11 bits of precision.
    """
    check_bits(bits)
    # round((sqrt(5)*2^B - 2^B)/2); the tail of sqrt never straddles an
    # integer because 5*4^B is not a perfect square.
    s = math.isqrt(5 << (2 * bits))
    return (s - (1 << bits) + 1) // 2

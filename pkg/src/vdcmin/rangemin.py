"""Range-argmin over shifted van der Corput sequences in O(B) bit operations.

The problem: given a rotation r and a half-open index interval [a, b),
find the index whose rotated value (bit-reversal of the index, plus r,
modulo 1) is smallest.  Because reversal makes an index's low bits the
value's high bits, the unshifted minimum is the index with the most
trailing zeros, and a rotated minimum decomposes into three cases:

  1. the one index whose value is exactly 0 (the rotation's critical
     index) lies in the interval;
  2. some index's unshifted value exceeds the rotation's complement, so
     the wrap makes it small: take the least such value;
  3. otherwise nothing wraps and the unshifted minimum wins.

Case 2 is resolved by bit sweeps over the critical index's pattern: a
left-to-right pass flips the highest zero bit that still lands in range,
then a run-jumping refinement walks toward the least value sharing that
flipped prefix; a right-to-left pass covers candidates whose lowest set
bit sits below the critical index's.  All arithmetic is on plain ints,
so every word size up to 64 shares one code path.

`brute_force_argmin` is the ground truth the sweeps are tested against:
a vectorized linear scan that shares no logic with them.
"""

from __future__ import annotations

import numpy as np

from .sequence import ShiftedSequence, UnitFixed

#: widest interval brute_force_argmin will scan
DEFAULT_ORACLE_CAP = 1 << 24


def _check_range(a: int, b: int, bits: int) -> None:
    if not 0 <= a < b <= (1 << bits):
        raise ValueError(f"bad index range [{a}, {b}) for {bits}-bit words")


def _unshifted_argmin(a: int, b: int) -> int:
    # Most trailing zeros in [a, b): walk the lowest set bit upward,
    # keeping the last rounded-up value that stays in range.
    if a == 0 or a == b - 1:
        return a
    k = m = a
    i = (a & -a).bit_length() - 1
    top = b.bit_length() - 1
    while i < top:
        m &= ~(1 << i)
        m |= 2 << i
        if a <= m < b:
            k = m
        i += 1
    return k


def _refine(m: int, i: int, a: int, b: int, bits: int) -> int:
    # Repeatedly add 2^(head of the lowest one-run at/above i), which is
    # the smallest increment clearing that run; keep the jump only when
    # it stays inside [a, b).  Bits below i are never touched, and every
    # kept jump trades low set bits for one higher bit, so the reversed
    # value strictly decreases.  Successive jump targets strictly grow
    # (m never shrinks, the jump bit climbs), so the first target at or
    # past b ends the walk.
    t = m >> i
    if not t:
        return m
    i += (t & -t).bit_length() - 1
    limit = bits - 1
    while i < limit:
        k = m + (1 << i)
        if k >= b:
            break
        if k >= a:
            m = k
        i += 1
        t = m >> i
        if not t:
            break
        i += (t & -t).bit_length() - 1
    return m


def _shifted_argmin(kr: int, a: int, b: int, bits: int) -> int:
    # Caller guarantees kr != 0, kr not in [a, b), b - a >= 2.
    top = b.bit_length() - 1
    kp = (kr & -kr).bit_length() - 1

    # Left-to-right sweep over kr's bits, truncated under b's top bit.
    # Flipping a zero bit of kr (with kr's bits kept below it) yields a
    # value just past the wrap threshold; the highest flip that can be
    # steered into [a, b) wins.  Bits of a are merged in on the way down
    # so candidates do not fall below the interval.
    m = kr & ((2 << top) - 1)
    i = top
    while i >= kp:
        bit = 1 << i
        if m & bit:
            m ^= bit
        else:
            mi = m | bit
            if mi < a:
                mi |= bit << 1
            if mi < b:  # refinement only moves the candidate upward
                mi = _refine(mi, i + 1, a, b, bits)
                if a <= mi < b:
                    return mi
        if a & bit:
            m |= bit
        i -= 1

    # Right-to-left phase: candidates whose lowest set bit lies below
    # kr's.  Such an index always wraps, and a higher lowest-bit wraps
    # to a smaller value, so the last hit is the best one.
    m = a
    k = -1
    for i in range(kp):
        if i:
            m &= ~(1 << (i - 1))
        m |= 1 << i
        if m < a:
            m |= 2 << i
        if m < b:
            mi = _refine(m, i + 1, a, b, bits)
            if a <= mi < b:
                k = mi
    if k >= 0:
        return k

    # Nothing wraps: the plain minimum is the answer.
    return _unshifted_argmin(a, b)


def min_trailing_zeros_index(a: int, b: int, bits: int) -> int:
    """Index in [a, b) minimizing the unshifted value.

    Equivalently the index with the most trailing zeros (ties are
    impossible: reversal is injective).
    """
    _check_range(a, b, bits)
    return _unshifted_argmin(a, b)


def refine(m: int, i: int, a: int, b: int, bits: int) -> int:
    """Walk m toward the least in-range value keeping its low i bits.

    Returns m unchanged when no jump fits.  The result is >= m and
    congruent to m modulo 2^i.
    """
    _check_range(a, b, bits)
    if not 0 <= i <= bits:
        raise ValueError(f"bit position {i} out of range for {bits}-bit words")
    if m >= (1 << bits):
        raise ValueError(f"candidate {m} out of range for {bits}-bit words")
    return _refine(m, i, a, b, bits)


def range_argmin(seq: ShiftedSequence, a: int, b: int) -> int:
    """Index of the smallest rotated value on [a, b), in O(bits) bit ops."""
    bits = seq.bits
    _check_range(a, b, bits)
    kr = seq.critical
    if kr is None:
        return _unshifted_argmin(a, b)
    if a <= kr < b:
        return kr
    if b - a == 1:
        return a
    return _shifted_argmin(kr, a, b, bits)


def range_min(seq: ShiftedSequence, a: int, b: int) -> UnitFixed:
    """Smallest rotated value on [a, b)."""
    return seq.value(range_argmin(seq, a, b))


def _unshifted_argmin_ops(a: int, b: int) -> tuple[int, int]:
    # Instrumented twin of _unshifted_argmin; same control flow, plus a
    # count of executed bit primitives.
    ops = 2
    if a == 0 or a == b - 1:
        return a, ops
    k = m = a
    i = (a & -a).bit_length() - 1
    top = b.bit_length() - 1
    ops += 2  # ffs(a), fls(b)
    while i < top:
        m &= ~(1 << i)
        m |= 2 << i
        ops += 4  # clear, set, membership
        if a <= m < b:
            k = m
        i += 1
    return k, ops


def _refine_ops(m: int, i: int, a: int, b: int, bits: int) -> tuple[int, int]:
    ops = 2  # prefix clear + ffs probe
    t = m >> i
    if not t:
        return m, ops
    i += (t & -t).bit_length() - 1
    limit = bits - 1
    while i < limit:
        k = m + (1 << i)
        ops += 2  # add, upper-bound test
        if k >= b:
            break
        ops += 1  # lower-bound test
        if k >= a:
            m = k
        i += 1
        t = m >> i
        ops += 2  # prefix clear + ffs probe
        if not t:
            break
        i += (t & -t).bit_length() - 1
    return m, ops


def _shifted_argmin_ops(kr: int, a: int, b: int, bits: int) -> tuple[int, int]:
    top = b.bit_length() - 1
    kp = (kr & -kr).bit_length() - 1
    m = kr & ((2 << top) - 1)
    ops = 3  # fls(b), ffs(kr), leading-bit mask
    i = top
    while i >= kp:
        bit = 1 << i
        ops += 1  # bit test on m
        if m & bit:
            m ^= bit
            ops += 1
        else:
            mi = m | bit
            ops += 2  # set, bound test
            if mi < a:
                mi |= bit << 1
                ops += 1
            ops += 1  # bound test
            if mi < b:
                mi, r_ops = _refine_ops(mi, i + 1, a, b, bits)
                ops += r_ops + 2  # membership
                if a <= mi < b:
                    return mi, ops
        ops += 1  # bit test on a
        if a & bit:
            m |= bit
            ops += 1
        i -= 1
    m = a
    k = -1
    for i in range(kp):
        if i:
            m &= ~(1 << (i - 1))
            ops += 1
        m |= 1 << i
        ops += 2  # set, bound test
        if m < a:
            m |= 2 << i
            ops += 1
        ops += 1  # bound test
        if m < b:
            mi, r_ops = _refine_ops(m, i + 1, a, b, bits)
            ops += r_ops + 2  # membership
            if a <= mi < b:
                k = mi
    if k >= 0:
        return k, ops
    k, sub = _unshifted_argmin_ops(a, b)
    return k, ops + sub


def range_argmin_ops(seq: ShiftedSequence, a: int, b: int) -> tuple[int, int]:
    """range_argmin plus a count of the bit primitives it executed.

    Counted primitives: find-first/last-set, single-bit set/clear/test,
    word-level add/or/and/mask/shift, and each comparison against an
    interval bound.  The count is returned, never accumulated in shared
    state, so concurrent callers stay independent.  This is the evidence
    for the O(bits) claim: the suite asserts count <= 16 * bits.
    """
    bits = seq.bits
    _check_range(a, b, bits)
    kr = seq.critical
    if kr is None:
        return _unshifted_argmin_ops(a, b)
    ops = 2  # critical-index membership
    if a <= kr < b:
        return kr, ops
    ops += 1  # width test
    if b - a == 1:
        return a, ops
    k, sub = _shifted_argmin_ops(kr, a, b, bits)
    return k, ops + sub


def brute_force_argmin(
    seq: ShiftedSequence, a: int, b: int, cap: int = DEFAULT_ORACLE_CAP
) -> int:
    """Ground-truth argmin by linear scan (vectorized, no shared logic).

    Refuses intervals wider than `cap` so an accidental full-word query
    cannot wedge a test run.
    """
    _check_range(a, b, seq.bits)
    if b - a > cap:
        raise ValueError(f"interval width {b - a} exceeds oracle cap {cap}")
    values = seq.values_array(a, b)
    return a + int(np.argmin(values))


def brute_force_min(seq: ShiftedSequence, a: int, b: int, cap: int = DEFAULT_ORACLE_CAP) -> UnitFixed:
    """Value counterpart of brute_force_argmin."""
    return seq.value(brute_force_argmin(seq, a, b, cap))

"""Low-level GF(2) bit machinery.

Bit vectors are plain Python ints (bit i = entry i); numpy is used only for
bulk index shuffles when building lookup tables.  Everything is exact, no
floating point anywhere.
"""

from __future__ import annotations

import functools

import numpy as np


def parity_binomial(k: int, i: int) -> int:
    """C(k, i) mod 2 via the bitwise subset test (Lucas' theorem for p = 2)."""
    if k < 0 or i < 0:
        raise ValueError("binomial arguments must be nonnegative")
    if i > k:
        return 0
    return 1 if (i & k) == i else 0


@functools.lru_cache(maxsize=None)
def _butterfly_masks(log_size: int) -> tuple[int, ...]:
    """For each index-bit b, the mask of positions whose index has bit b clear."""
    size = 1 << log_size
    masks = []
    for b in range(log_size):
        period = 1 << (b + 1)
        block = (1 << (1 << b)) - 1
        repunit = ((1 << size) - 1) // ((1 << period) - 1)
        masks.append(block * repunit)
    return tuple(masks)


def subset_xor_transform(bits: int, log_size: int) -> int:
    """Self-inverse zeta/Moebius transform mod 2 over the subset lattice.

    out[k] = XOR of in[i] over all i with i a bit-submask of k, for indices
    0 <= k < 2**log_size.  Applying it twice gives the identity.
    """
    for b, mask in enumerate(_butterfly_masks(log_size)):
        bits ^= (bits & mask) << (1 << b)
    return bits


def int_to_bit_array(bits: int, length: int) -> np.ndarray:
    """Unpack an int bit vector into a uint8 array of 0/1 entries."""
    nbytes = (length + 7) // 8
    raw = np.frombuffer(bits.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:length]


def bit_array_to_int(arr: np.ndarray) -> int:
    """Pack a 0/1 array into an int bit vector (entry i -> bit i)."""
    packed = np.packbits(np.asarray(arr, dtype=np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def iter_bits(bits: int):
    """Yield the positions of set bits in ascending order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


class BitBasis:
    """Incremental echelon basis of int bit vectors over GF(2).

    The pivot of a stored vector is its highest set bit; pivots are pairwise
    distinct, so any nonzero combination of stored vectors has the highest
    involved pivot as its own leading bit.  ``insert`` fully reduces a vector
    against the basis and either adopts it (returning its pivot) or reports
    linear dependence with pivot ``None``.

    With ``track=True`` each stored vector also carries the combination of
    inserted vectors that produced it, as a bit mask over insertion indices;
    on a dependent insert the returned combination reproduces the zero vector.
    """

    __slots__ = ("_rows", "_combs", "_track", "count")

    def __init__(self, track: bool = False):
        self._rows: dict[int, int] = {}
        self._combs: dict[int, int] = {}
        self._track = track
        self.count = 0

    def insert(self, vec: int) -> tuple[int | None, int, int]:
        """Reduce ``vec`` and adopt it if independent.

        Returns (pivot, reduced_vector, combination); pivot is None and the
        reduced vector 0 when ``vec`` depends on earlier insertions.
        """
        comb = 1 << self.count if self._track else 0
        self.count += 1
        rows = self._rows
        combs = self._combs
        while vec:
            p = vec.bit_length() - 1
            row = rows.get(p)
            if row is None:
                rows[p] = vec
                if self._track:
                    combs[p] = comb
                return p, vec, comb
            vec ^= row
            if self._track:
                comb ^= combs[p]
        return None, 0, comb

    @property
    def rank(self) -> int:
        return len(self._rows)

    def pivots(self):
        return self._rows.keys()

    def copy(self) -> "BitBasis":
        dup = BitBasis.__new__(BitBasis)
        dup._rows = dict(self._rows)
        dup._combs = dict(self._combs)
        dup._track = self._track
        dup.count = self.count
        return dup


def gf2_rank(vectors) -> int:
    """Rank over GF(2) of an iterable of int bit vectors."""
    basis = BitBasis()
    for v in vectors:
        basis.insert(v)
    return basis.rank

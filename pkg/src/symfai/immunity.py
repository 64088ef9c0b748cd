"""Exact algebraic immunity and fast algebraic immunity of symmetric functions.

AI(f) is the least degree of a nonzero g annihilating f or f+1.  FAI(f) is
min over nonconstant g with deg(g) < AI(f) of deg(g) + deg(g*f), capped
above by 2*AI(f); when AI(f) <= 1 the quantifier range is empty and the cap
is the value.  Both quantify over ALL Boolean g, not just symmetric ones.

The fast paths here exploit that a symmetric f is constant on each weight
class:

* Annihilators of f are exactly the functions supported inside the zero set
  of f, which is a union of weight classes.  The ANF span of each class's
  point indicators is echelonized once per (n, class) and merged per
  function; with coordinates in graded order the minimum reachable degree
  is the smallest pivot degree.
* For FAI, the map g -> g*f is scanned monomial by monomial in graded
  order; each new echelon pivot at coordinate degree dd, reached while
  inserting a degree-e monomial, witnesses a pair value e + dd, and the
  minimum over all of them is the searched inner minimum for every e at
  once.

The dense oracle performs the same computations from raw truth tables and
is used in the test suite to cross-check every result.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from . import dense
from .errors import CapabilityError, InvariantViolation
from .gf2 import BitBasis, bit_array_to_int, iter_bits, subset_xor_transform
from .sanfv import Sanfv, WeightValueVector, to_values

MAX_EXACT_N = dense.MAX_DENSE_N


def _check_exact_n(n: int) -> None:
    if n > MAX_EXACT_N:
        raise CapabilityError(f"exact immunity supports n <= {MAX_EXACT_N}, got {n}")


def monomial_indices(mask: int) -> list[int]:
    """Variable indices of a monomial mask, sorted ascending."""
    return list(iter_bits(mask))


def anf_bits_to_monomials(bits: int) -> tuple[int, ...]:
    """Monomial masks of an ANF, in graded order."""
    return tuple(sorted(iter_bits(bits), key=lambda c: (c.bit_count(), c)))


def _monomials_to_json(masks: tuple[int, ...]) -> list[list[int]]:
    return [monomial_indices(m) for m in masks]


@dataclass(frozen=True)
class ImmunityProfile:
    """Per-function record: degree, AI with annihilator, FAI with multiplier pair."""

    f: Sanfv
    deg: int | None
    ai: int
    ai_witness: tuple[int, ...]
    fai: int
    fai_witness: tuple[tuple[int, ...], tuple[int, ...]] | None
    capped: bool

    def __post_init__(self):
        n = self.f.n
        if self.ai > (n + 1) // 2:
            raise InvariantViolation(f"AI {self.ai} exceeds ceil(n/2) for {self.f!r}")
        if self.fai > 2 * self.ai:
            raise InvariantViolation(f"FAI {self.fai} exceeds the 2*AI cap for {self.f!r}")

    def to_json_dict(self) -> dict:
        witness = None
        if self.fai_witness is not None:
            g_masks, h_masks = self.fai_witness
            witness = {"g": _monomials_to_json(g_masks), "h": _monomials_to_json(h_masks)}
        return {
            "f": self.f.to_string(),
            "n": self.f.n,
            "deg": self.deg,
            "ai": self.ai,
            "ai_witness": _monomials_to_json(self.ai_witness),
            "fai": self.fai,
            "fai_witness": witness,
            "capped": self.capped,
        }


# ---------------------------------------------------------------------------
# annihilator side: minimum degree over a union of weight classes
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _class_truth_table(n: int, k: int) -> int:
    pc = dense._popcounts(n)
    return bit_array_to_int(pc == k)


@functools.lru_cache(maxsize=None)
def _class_delta_echelon(n: int, k: int) -> tuple[int, ...]:
    """Echelonized ANF span of the weight-k point indicators, graded coordinates.

    The ANF of a point indicator delta_x has coefficient 1 exactly on the
    monomial masks containing x, which is the same bit pattern as the truth
    table of the monomial x.
    """
    tables = dense._monomial_tables(n)
    basis = BitBasis()
    vectors = []
    for x in range(1 << n):
        if x.bit_count() == k:
            pivot, reduced, _ = basis.insert(dense.permuted_anf_int(n, tables.truth_table(x)))
            if pivot is not None:
                vectors.append(reduced)
    return tuple(vectors)


@functools.lru_cache(maxsize=1 << 16)
def _zero_span_min_degree(n: int, class_mask: int) -> tuple[int | None, int | None]:
    """Minimum degree of a nonzero function supported on the given weight classes.

    Returns (degree, anf_bits) of a witness, or (None, None) when the class
    set is empty.  Merges the per-class echelons; the reachable degrees are
    exactly the pivot degrees, so the best witness is the vector with the
    smallest pivot.
    """
    deg_by_rank = dense.rank_degrees(n)
    basis = BitBasis()
    best: tuple[int, int] | None = None
    for k in iter_bits(class_mask):
        for vec in _class_delta_echelon(n, k):
            pivot, reduced, _ = basis.insert(vec)
            if pivot is not None:
                d = int(deg_by_rank[pivot])
                if best is None or d < best[0]:
                    best = (d, reduced)
    if best is None:
        return None, None
    return best[0], dense.permuted_rank_to_anf_bits(n, best[1])


def all_zero_set_degrees(n: int) -> dict[int, tuple[int | None, int | None]]:
    """Minimum supported-function degree for every union of weight classes.

    One shared depth-first sweep over the n+1 classes reuses the elimination
    state across the 2^(n+1) subsets; processing big classes first keeps the
    expensive insertions near the root.  Used by the exhaustive search
    harness; keys are class bit masks, values as in _zero_span_min_degree.
    """
    _check_exact_n(n)
    deg_by_rank = dense.rank_degrees(n)
    order = sorted(range(n + 1), key=lambda k: (-_class_size(n, k), k))
    results: dict[int, tuple[int | None, int | None]] = {}

    def visit(idx: int, basis: BitBasis, best: tuple[int, int] | None, mask: int) -> None:
        if idx == len(order):
            if best is None:
                results[mask] = (None, None)
            else:
                results[mask] = (best[0], dense.permuted_rank_to_anf_bits(n, best[1]))
            return
        k = order[idx]
        visit(idx + 1, basis, best, mask)
        grown = basis.copy()
        new_best = best
        for vec in _class_delta_echelon(n, k):
            pivot, reduced, _ = grown.insert(vec)
            if pivot is not None:
                d = int(deg_by_rank[pivot])
                if new_best is None or d < new_best[0]:
                    new_best = (d, reduced)
        visit(idx + 1, grown, new_best, mask | (1 << k))

    visit(0, BitBasis(), None, 0)
    return results


def _class_size(n: int, k: int) -> int:
    size = 1
    for i in range(k):
        size = size * (n - i) // (i + 1)
    return size


def _full_mask(n: int) -> int:
    return (1 << (n + 1)) - 1


def ai_symmetric(f: Sanfv) -> tuple[int, tuple[int, ...]]:
    """Exact AI with an annihilator witness (monomial masks, graded order).

    The witness annihilates whichever of f, f+1 attains the minimum (f is
    preferred on ties).
    """
    _check_exact_n(f.n)
    v = to_values(f).bits
    value, witness_bits = _ai_from_values(f.n, v)
    _verify_annihilator(f.n, v, witness_bits)
    return value, anf_bits_to_monomials(witness_bits)


def _ai_from_values(n: int, value_bits: int) -> tuple[int, int]:
    zeros_of_f = _full_mask(n) ^ value_bits
    d_f, w_f = _zero_span_min_degree(n, zeros_of_f)
    d_fc, w_fc = _zero_span_min_degree(n, value_bits)
    if d_f is None and d_fc is None:
        raise InvariantViolation("no annihilator on either side")
    if d_fc is None or (d_f is not None and d_f <= d_fc):
        return d_f, w_f
    return d_fc, w_fc


def _verify_annihilator(n: int, value_bits: int, anf_bits: int) -> None:
    if anf_bits == 0:
        raise InvariantViolation("AI witness is the zero function")
    tt = subset_xor_transform(anf_bits, n)
    f_tt = dense.dense_from_values(WeightValueVector(n, value_bits)).bits
    kills_f = tt & f_tt == 0
    kills_complement = tt & ~f_tt & ((1 << (1 << n)) - 1) == 0
    if not (kills_f or kills_complement):
        raise InvariantViolation("AI witness annihilates neither side")


# ---------------------------------------------------------------------------
# multiplier side: the FAI inner minimum
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _class_product_pieces(n: int) -> tuple[tuple[int, ...], ...]:
    """Graded-coordinate ANF of (monomial * class indicator), per monomial and class.

    Indexed [monomial rank][class k] for monomials of degree up to
    ceil(n/2) - 1, the largest cap FAI can ever ask for.  Since a symmetric
    f is the disjoint union of its support classes, the product column for
    (monomial, f) is the XOR of these pieces over the support classes.
    """
    tables = dense._monomial_tables(n)
    max_level = (n + 1) // 2 - 1
    count = dense.monomial_count_through_degree(n, max_level)
    pieces = []
    for mask in dense.monomials_graded(n)[:count]:
        tt = tables.truth_table(mask)
        row = tuple(
            dense.permuted_anf_int(n, subset_xor_transform(tt & _class_truth_table(n, k), n))
            for k in range(n + 1)
        )
        pieces.append(row)
    return tuple(pieces)


def _product_columns(n: int, value_bits: int, count: int):
    pieces = _class_product_pieces(n)
    classes = tuple(iter_bits(value_bits))
    for rank in range(count):
        row = pieces[rank]
        vec = 0
        for k in classes:
            vec ^= row[k]
        yield vec


def _multiplier_scan(n: int, value_bits: int, max_level: int):
    """Insert product columns in graded order, yielding one pivot per column.

    Yields (level, pivot_degree, comb, vec) for every monomial past the
    constant one.  A dependent column below the AI cap would mean a
    low-degree annihilator slipped through, so it raises.
    """
    deg_by_rank = dense.rank_degrees(n)
    monomials = dense.monomials_graded(n)
    count = dense.monomial_count_through_degree(n, max_level)
    basis = BitBasis(track=True)
    for rank, vec in enumerate(_product_columns(n, value_bits, count)):
        pivot, reduced, comb = basis.insert(vec)
        if pivot is None:
            raise InvariantViolation(
                f"unexpected annihilator below the AI cap (rank {rank}, n={n})"
            )
        if rank == 0:
            continue  # the constant column: its solution g = 1 is excluded
        yield monomials[rank].bit_count(), int(deg_by_rank[pivot]), comb, reduced


def min_product_degree(f: Sanfv, e: int) -> int:
    """Least d such that some nonconstant g with deg(g) <= e has deg(g*f) <= d.

    Only defined for 1 <= e < AI(f); in that range g*f cannot vanish, so the
    minimum is the smallest pivot degree among the product columns of
    degree <= e.
    """
    _check_exact_n(f.n)
    ai_value, _ = ai_symmetric(f)
    if not 1 <= e < ai_value:
        raise ValueError(f"degree cap must satisfy 1 <= e < AI(f) = {ai_value}, got {e}")
    best = None
    for _, pivot_deg, _, _ in _multiplier_scan(f.n, to_values(f).bits, e):
        if best is None or pivot_deg < best:
            best = pivot_deg
    return best


def fai_given_ai(n: int, value_bits: int, ai_value: int):
    """FAI from a known AI; returns (fai, witness_pair_or_None, capped).

    witness is a pair (g monomial masks, h monomial masks) with h = g*f
    attaining the minimum; None when only the 2*AI cap term attains it.
    """
    if ai_value <= 1:
        return 2 * ai_value, None, True
    cap = 2 * ai_value
    best = cap
    best_pair = None
    for level, pivot_deg, comb, vec in _multiplier_scan(n, value_bits, ai_value - 1):
        value = level + pivot_deg
        if value < best:
            best = value
            best_pair = (comb, vec)
        if best <= level + 1:
            break  # every later pair is worth at least level + 1
    if best_pair is None:
        return best, None, True
    g_bits = _comb_to_anf_bits(n, best_pair[0])
    h_bits = dense.permuted_rank_to_anf_bits(n, best_pair[1])
    _verify_pair(n, value_bits, g_bits, h_bits, best)
    witness = (anf_bits_to_monomials(g_bits), anf_bits_to_monomials(h_bits))
    return best, witness, best == cap


def _comb_to_anf_bits(n: int, comb: int) -> int:
    monomials = dense.monomials_graded(n)
    bits = 0
    for idx in iter_bits(comb):
        bits |= 1 << monomials[idx]
    return bits


def _verify_pair(n: int, value_bits: int, g_bits: int, h_bits: int, value: int) -> None:
    g_tt = subset_xor_transform(g_bits, n)
    f_tt = dense.dense_from_values(WeightValueVector(n, value_bits)).bits
    if subset_xor_transform(h_bits, n) != (g_tt & f_tt):
        raise InvariantViolation("FAI witness pair fails h = g*f")
    g_deg = dense.DenseAnf(n, g_bits).degree()
    h_deg = dense.DenseAnf(n, h_bits).degree()
    if g_bits in (0, 1) or g_deg + h_deg > value:
        raise InvariantViolation("FAI witness pair does not attain the reported value")


def fai(f: Sanfv) -> tuple[int, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """Fast algebraic immunity with a witness pair where one exists."""
    _check_exact_n(f.n)
    ai_value, _ = ai_symmetric(f)
    value, witness, _ = fai_given_ai(f.n, to_values(f).bits, ai_value)
    return value, witness


def profile(f: Sanfv) -> ImmunityProfile:
    """Full immunity profile of a symmetric function."""
    _check_exact_n(f.n)
    ai_value, ai_witness = ai_symmetric(f)
    value, witness, capped = fai_given_ai(f.n, to_values(f).bits, ai_value)
    return ImmunityProfile(
        f=f,
        deg=f.degree(),
        ai=ai_value,
        ai_witness=ai_witness,
        fai=value,
        fai_witness=witness,
        capped=capped,
    )


def is_aar(f: Sanfv) -> bool:
    """True iff f has maximum AI and its FAI reaches the n ceiling."""
    p = profile(f)
    return p.ai == (f.n + 1) // 2 and p.fai >= f.n

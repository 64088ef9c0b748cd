"""Brute-force oracle on dense truth tables for small variable counts.

This module is the ground truth the symmetric fast paths are checked
against: truth tables, the ANF transform, products, minimum-degree
annihilators and minimum-degree low-degree multiples, all computed by plain
GF(2) linear algebra over every point of the cube.  Truth tables and ANF
coefficient vectors are ints (bit x = value at point x; the bits of x are
the variable values, variable i = bit i).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .errors import CapabilityError, InvariantViolation
from .gf2 import BitBasis, bit_array_to_int, gf2_rank, int_to_bit_array, iter_bits, subset_xor_transform
from .sanfv import Sanfv, WeightValueVector, to_values

MAX_DENSE_N = 14


def _check_dense_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"variable count must be a positive integer, got {n!r}")
    if n > MAX_DENSE_N:
        raise CapabilityError(f"dense oracle supports n <= {MAX_DENSE_N}, got {n}")


@dataclass(frozen=True)
class DenseBooleanFunction:
    """Truth table of an arbitrary (not necessarily symmetric) function."""

    n: int
    bits: int

    def __post_init__(self):
        _check_dense_n(self.n)
        if not 0 <= self.bits < (1 << (1 << self.n)):
            raise ValueError(f"truth table needs exactly {1 << self.n} bits")

    def evaluate(self, x: int) -> int:
        return (self.bits >> x) & 1

    def support_size(self) -> int:
        return self.bits.bit_count()

    def complement(self) -> "DenseBooleanFunction":
        return DenseBooleanFunction(self.n, self.bits ^ ((1 << (1 << self.n)) - 1))

    def __mul__(self, other: "DenseBooleanFunction") -> "DenseBooleanFunction":
        return dense_mul(self, other)

    def __add__(self, other: "DenseBooleanFunction") -> "DenseBooleanFunction":
        return dense_add(self, other)


@dataclass(frozen=True)
class DenseAnf:
    """ANF coefficients: bit c is the coefficient of the monomial with variable set c."""

    n: int
    bits: int

    def __post_init__(self):
        _check_dense_n(self.n)
        if not 0 <= self.bits < (1 << (1 << self.n)):
            raise ValueError(f"ANF needs exactly {1 << self.n} coefficient bits")

    def degree(self) -> int | None:
        """Max weight of a monomial with nonzero coefficient; None if zero."""
        if self.bits == 0:
            return None
        return max(c.bit_count() for c in iter_bits(self.bits))

    def monomials(self) -> tuple[int, ...]:
        """Monomial masks in graded order (degree, then mask value)."""
        return tuple(sorted(iter_bits(self.bits), key=lambda c: (c.bit_count(), c)))

    def is_zero(self) -> bool:
        return self.bits == 0


def moebius(f: DenseBooleanFunction) -> DenseAnf:
    """ANF of a truth table; the transform is an involution."""
    return DenseAnf(f.n, subset_xor_transform(f.bits, f.n))


def anf_to_table(a: DenseAnf) -> DenseBooleanFunction:
    return DenseBooleanFunction(a.n, subset_xor_transform(a.bits, a.n))


def dense_mul(f: DenseBooleanFunction, g: DenseBooleanFunction) -> DenseBooleanFunction:
    if f.n != g.n:
        raise ValueError(f"variable counts differ: {f.n} vs {g.n}")
    return DenseBooleanFunction(f.n, f.bits & g.bits)


def dense_add(f: DenseBooleanFunction, g: DenseBooleanFunction) -> DenseBooleanFunction:
    if f.n != g.n:
        raise ValueError(f"variable counts differ: {f.n} vs {g.n}")
    return DenseBooleanFunction(f.n, f.bits ^ g.bits)


def dense_degree(f: DenseBooleanFunction) -> int | None:
    return moebius(f).degree()


# ---------------------------------------------------------------------------
# bridges from the symmetric representation
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _popcounts(n: int) -> np.ndarray:
    xs = np.arange(1 << n, dtype=np.uint32)
    pc = np.zeros(1 << n, dtype=np.uint8)
    for b in range(n):
        pc += ((xs >> b) & 1).astype(np.uint8)
    return pc


def dense_from_values(v: WeightValueVector) -> DenseBooleanFunction:
    """Truth table of the symmetric function with the given value vector."""
    _check_dense_n(v.n)
    varr = int_to_bit_array(v.bits, v.n + 1)
    return DenseBooleanFunction(v.n, bit_array_to_int(varr[_popcounts(v.n)]))


def dense_from_sanfv(f: Sanfv) -> DenseBooleanFunction:
    return dense_from_values(to_values(f))


# ---------------------------------------------------------------------------
# graded monomial tables
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _rank_tables(n: int):
    """Graded-lex order of all monomial masks plus degree bookkeeping.

    Returns (masks_by_rank, monomials_tuple, deg_by_rank, prefix) where
    prefix[d] counts the monomials of degree <= d; coordinates permuted by
    this order put high degrees at high bit positions.
    """
    _check_dense_n(n)
    masks = np.arange(1 << n, dtype=np.int64)
    pc = _popcounts(n)
    order = np.lexsort((masks, pc))
    masks_by_rank = masks[order]
    deg_by_rank = pc[order].astype(np.int64)
    prefix = np.cumsum(np.bincount(pc, minlength=n + 1))
    return masks_by_rank, tuple(int(m) for m in masks_by_rank), deg_by_rank, prefix


def monomials_graded(n: int) -> tuple[int, ...]:
    """All monomial masks on n variables sorted by (degree, mask)."""
    return _rank_tables(n)[1]


def monomial_count_through_degree(n: int, d: int) -> int:
    prefix = _rank_tables(n)[3]
    return int(prefix[min(d, n)]) if d >= 0 else 0


def rank_degrees(n: int) -> np.ndarray:
    return _rank_tables(n)[2]


def permuted_anf_int(n: int, anf_bits: int) -> int:
    """Repack ANF coefficients into graded coordinate order (rank r = bit r)."""
    arr = int_to_bit_array(anf_bits, 1 << n)
    return bit_array_to_int(arr[_rank_tables(n)[0]])


def permuted_rank_to_anf_bits(n: int, ranked: int) -> int:
    masks = _rank_tables(n)[1]
    bits = 0
    for r in iter_bits(ranked):
        bits |= 1 << masks[r]
    return bits


class _MonomialTables:
    """Per-n cache of monomial truth tables, built lazily."""

    def __init__(self, n: int):
        self.n = n
        self._xs = np.arange(1 << n, dtype=np.int64)
        self._tt: dict[int, int] = {}

    def truth_table(self, mask: int) -> int:
        tt = self._tt.get(mask)
        if tt is None:
            tt = bit_array_to_int((self._xs & mask) == mask)
            self._tt[mask] = tt
        return tt


@functools.lru_cache(maxsize=None)
def _monomial_tables(n: int) -> _MonomialTables:
    return _MonomialTables(n)


# ---------------------------------------------------------------------------
# annihilators
# ---------------------------------------------------------------------------


def min_annihilator_degree(f: DenseBooleanFunction) -> tuple[int | None, DenseAnf | None]:
    """Least degree of a nonzero g with g*f = 0, with a witness.

    Works column by column: monomials in graded order are restricted to the
    support of f and inserted into an echelon basis; the first dependent
    column yields the witness as its recorded combination.  For f = 0 this
    returns (0, 1).  The all-ones function has no annihilator at all, which
    is reported as (None, None).
    """
    n = f.n
    tables = _monomial_tables(n)
    basis = BitBasis(track=True)
    monomials = monomials_graded(n)
    for rank, mask in enumerate(monomials):
        pivot, _, comb = basis.insert(tables.truth_table(mask) & f.bits)
        if pivot is None:
            anf_bits = 0
            for idx in iter_bits(comb):
                anf_bits |= 1 << monomials[idx]
            witness = DenseAnf(n, anf_bits)
            d = mask.bit_count()
            _check_annihilator(f, witness, d)
            return d, witness
    return None, None


def _check_annihilator(f: DenseBooleanFunction, g: DenseAnf, d: int) -> None:
    if g.is_zero():
        raise InvariantViolation(f"zero annihilator witness for tt={f.bits:#x}")
    if anf_to_table(g).bits & f.bits:
        raise InvariantViolation(f"claimed annihilator does not vanish on supp(f), tt={f.bits:#x}")
    if g.degree() != d:
        raise InvariantViolation(f"annihilator witness degree {g.degree()} != reported {d}")


def ai(f: DenseBooleanFunction) -> int:
    """Algebraic immunity: least degree annihilating f or its complement.

    Both sides are grown degree level by degree level, so the search stops
    at the first dependency on either side.
    """
    n = f.n
    full = (1 << (1 << n)) - 1
    if f.bits == 0 or f.bits == full:
        return 0
    tables = _monomial_tables(n)
    side_f = BitBasis()
    side_fc = BitBasis()
    comp = f.bits ^ full
    monomials = monomials_graded(n)
    idx = 0
    for d in range(n + 1):
        upper = monomial_count_through_degree(n, d)
        level = monomials[idx:upper]
        idx = upper
        for mask in level:
            tt = tables.truth_table(mask)
            if side_f.insert(tt & f.bits)[0] is None:
                return d
            if side_fc.insert(tt & comp)[0] is None:
                return d
    raise InvariantViolation(f"no annihilator found on either side for tt={f.bits:#x}")


# ---------------------------------------------------------------------------
# low-degree multiples
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MultiplierSearch:
    """Result of the minimum-degree multiple search for one degree cap e.

    ``d`` is the least degree of a nonzero product g*f over nonconstant g
    with deg(g) <= e, with witnesses g and h = g*f.  When some nonconstant
    g of degree <= e annihilates f outright, one such g is reported in
    ``annihilator`` (a vanishing product satisfies any degree bound, so the
    combined minimum is then 0).  ``d`` is None only when no nonconstant g
    yields a nonzero product at all, which happens just for f = 0.
    """

    e: int
    d: int | None
    g: DenseAnf
    h: DenseAnf
    annihilator: DenseAnf | None

    @property
    def combined_minimum(self) -> int:
        return 0 if self.annihilator is not None else self.d


def _ranked_product_columns(f: DenseBooleanFunction, e: int) -> list[int]:
    """For each monomial m of degree <= e, the ANF of m*f in graded coordinates."""
    n = f.n
    tables = _monomial_tables(n)
    count = monomial_count_through_degree(n, e)
    cols = []
    for mask in monomials_graded(n)[:count]:
        anf_bits = subset_xor_transform(tables.truth_table(mask) & f.bits, n)
        cols.append(permuted_anf_int(n, anf_bits))
    return cols


def min_multiplier_degree(f: DenseBooleanFunction, e: int) -> MultiplierSearch:
    """Minimum product degree over nonconstant g with deg(g) <= e.

    The kernel of the map (coefficients of g) -> (coefficients of g*f above
    degree d) is probed with d binary-searched downward; feasibility of a
    given d accounts for the solutions that are constant or annihilate f.
    The returned witnesses are re-verified before returning.
    """
    n = f.n
    if not 1 <= e < n:
        raise ValueError(f"multiplier degree cap must satisfy 1 <= e < {n}, got {e}")

    if f.bits == 0:
        x0 = DenseAnf(n, 1 << 1)  # coefficient mask 1, the monomial x_0
        return MultiplierSearch(e, None, x0, DenseAnf(n, 0), x0)

    cols = _ranked_product_columns(f, e)
    n_cols = len(cols)
    deg_f = dense_degree(f)
    rank_full = gf2_rank(cols)
    dim_ann = n_cols - rank_full

    def feasible(d: int) -> bool:
        cut = monomial_count_through_degree(n, d)
        dim_kernel = n_cols - gf2_rank(c >> cut for c in cols)
        if dim_kernel == dim_ann:
            return False
        if dim_ann == 0 and dim_kernel == 1 and deg_f <= d:
            return False  # the only solution is g = 1
        return True

    if not feasible(n):
        raise InvariantViolation(f"no nonvanishing multiple exists for tt={f.bits:#x}")
    lo, hi = 0, n
    while lo < hi:
        mid = (lo + hi) // 2
        if feasible(mid):
            hi = mid
        else:
            lo = mid + 1
    d = lo
    if d > 0 and feasible(d - 1):
        raise InvariantViolation("feasibility is not monotone in d")

    g, h = _extract_multiplier_witness(f, cols, d)
    annihilator = _first_nonconstant_annihilator(f, cols) if dim_ann else None
    combined = 0 if annihilator is not None else d
    if combined > n - e:
        raise InvariantViolation(
            f"existence bound violated: min degree {combined} > n - e = {n - e} for tt={f.bits:#x}"
        )
    return MultiplierSearch(e, d, g, h, annihilator)


def _kernel_combinations(cols: list[int], shift: int):
    basis = BitBasis(track=True)
    for col in cols:
        pivot, _, comb = basis.insert(col >> shift)
        if pivot is None:
            yield comb


def _comb_to_anf(n: int, comb: int) -> DenseAnf:
    monomials = monomials_graded(n)
    bits = 0
    for idx in iter_bits(comb):
        bits |= 1 << monomials[idx]
    return DenseAnf(n, bits)


def _first_nonconstant_annihilator(f: DenseBooleanFunction, cols: list[int]) -> DenseAnf:
    for comb in _kernel_combinations(cols, 0):
        g = _comb_to_anf(f.n, comb)
        if g.bits != 1:
            if anf_to_table(g).bits & f.bits:
                raise InvariantViolation("kernel element is not an annihilator")
            return g
    raise InvariantViolation("annihilator space nontrivial but no nonconstant element found")


def _extract_multiplier_witness(
    f: DenseBooleanFunction, cols: list[int], d: int
) -> tuple[DenseAnf, DenseAnf]:
    n = f.n
    cut = monomial_count_through_degree(n, d)
    constant_solution = False
    annihilator: DenseAnf | None = None
    for comb in _kernel_combinations(cols, cut):
        g = _comb_to_anf(n, comb)
        h_tt = anf_to_table(g).bits & f.bits
        if h_tt == 0:
            annihilator = annihilator or g
            continue
        if g.bits == 1:
            constant_solution = True
            continue
        h = moebius(DenseBooleanFunction(n, h_tt))
        _check_multiple(f, g, h, d)
        return g, h
    if constant_solution and annihilator is not None:
        g = DenseAnf(n, annihilator.bits ^ 1)
        h = moebius(f)
        _check_multiple(f, g, h, d)
        return g, h
    raise InvariantViolation(f"witness extraction failed at d={d} for tt={f.bits:#x}")


def _check_multiple(f: DenseBooleanFunction, g: DenseAnf, h: DenseAnf, d: int) -> None:
    if g.bits in (0, 1):
        raise InvariantViolation("multiplier witness must be nonconstant")
    if anf_to_table(g).bits & f.bits != anf_to_table(h).bits:
        raise InvariantViolation("witness pair does not satisfy h = g*f")
    hd = h.degree()
    if hd is not None and hd > d:
        raise InvariantViolation(f"product degree {hd} exceeds claimed bound {d}")

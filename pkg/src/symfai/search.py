"""Exhaustive enumeration of SB_n: profiles, extremal FAI, MAI census, tables.

profile_all(n) walks every symmetric function on n variables in SANFV
integer order, profiles it, and checks the full inequality suite; any
violation is a library defect and lands in the report.  Results are cached
per n, so repeated calls (and the test suite) pay for one run only.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

from . import immunity
from .attacks import bound_suite
from .errors import CapabilityError
from .immunity import ImmunityProfile, anf_bits_to_monomials, fai_given_ai
from .sanfv import Sanfv, to_values

MAX_SEARCH_N = 10


@dataclass(frozen=True)
class SearchReport:
    """Aggregate of one exhaustive run over SB_n."""

    n: int
    count: int
    max_fai: int
    max_fai_witnesses: tuple[str, ...]
    mai_list: tuple[str, ...]
    violations: tuple[str, ...]
    wall_time_s: float
    profiles: tuple[ImmunityProfile, ...]

    def to_json_dict(self) -> dict:
        """Deterministic summary; timing and the bulky profile list stay out."""
        return {
            "n": self.n,
            "count": self.count,
            "max_fai": self.max_fai,
            "max_fai_witnesses": list(self.max_fai_witnesses),
            "mai_list": list(self.mai_list),
            "violations": list(self.violations),
        }


_reports: dict[int, SearchReport] = {}


def profile_all(n: int, budget_seconds: float | None = None) -> SearchReport:
    """Profile every f in SB_n and aggregate; deterministic and cached per n."""
    if n > MAX_SEARCH_N:
        raise CapabilityError(f"exhaustive search supports n <= {MAX_SEARCH_N}, got {n}")
    cached = _reports.get(n)
    if cached is not None:
        return cached

    start = time.monotonic()
    degree_map = immunity.all_zero_set_degrees(n)
    full = (1 << (n + 1)) - 1
    profiles = []
    violations = []
    max_fai = -1
    max_fai_witnesses: list[str] = []
    mai_list = []
    mai_target = (n + 1) // 2

    for lam in range(1 << (n + 1)):
        if budget_seconds is not None and lam % 64 == 0:
            if time.monotonic() - start > budget_seconds:
                raise CapabilityError(f"search budget of {budget_seconds}s exceeded at n={n}")
        f = Sanfv(n, lam)
        v = to_values(f).bits
        d_f, w_f = degree_map[full ^ v]
        d_fc, w_fc = degree_map[v]
        if d_fc is None or (d_f is not None and d_f <= d_fc):
            ai_value, witness_bits = d_f, w_f
        else:
            ai_value, witness_bits = d_fc, w_fc
        fai_value, fai_witness, capped = fai_given_ai(n, v, ai_value)
        p = ImmunityProfile(
            f=f,
            deg=f.degree(),
            ai=ai_value,
            ai_witness=anf_bits_to_monomials(witness_bits),
            fai=fai_value,
            fai_witness=fai_witness,
            capped=capped,
        )
        profiles.append(p)
        report = bound_suite(p)
        for failure in report.failures():
            violations.append(f"{f.to_string()}: {failure.name}: {failure.detail}")
        if fai_value > max_fai:
            max_fai = fai_value
            max_fai_witnesses = [f.to_string()]
        elif fai_value == max_fai:
            max_fai_witnesses.append(f.to_string())
        if ai_value == mai_target:
            mai_list.append(f.to_string())

    result = SearchReport(
        n=n,
        count=len(profiles),
        max_fai=max_fai,
        max_fai_witnesses=tuple(max_fai_witnesses),
        mai_list=tuple(mai_list),
        violations=tuple(violations),
        wall_time_s=time.monotonic() - start,
        profiles=tuple(profiles),
    )
    _reports[n] = result
    return result


def find_symmetric_mai(n: int) -> list[Sanfv]:
    """All f in SB_n with maximum algebraic immunity, in SANFV integer order."""
    report = profile_all(n)
    return [p.f for p in report.profiles if p.ai == (n + 1) // 2]


def write_profiles_jsonl(report: SearchReport, path: str) -> None:
    """Dump one profile per line (stable field order) so reruns can be diffed."""
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(json.dumps(report.to_json_dict(), sort_keys=True) + "\n")
        for p in report.profiles:
            handle.write(json.dumps(p.to_json_dict(), sort_keys=True) + "\n")


# ---------------------------------------------------------------------------
# the two bound tables
# ---------------------------------------------------------------------------


def _band_label(lo: int, hi: int) -> str:
    return str(lo) if lo == hi else f"{lo}-{hi}"


def upper_ai_table() -> list[tuple[str, int]]:
    """Upper AI of symmetric functions per degree band: [2^k, 2^(k+1)-1] -> 2^k."""
    return [(_band_label(1 << k, (1 << (k + 1)) - 1), 1 << k) for k in range(8)]


def lower_degree_table() -> list[tuple[str, int]]:
    """Lower degree of symmetric functions per AI band: (2^(k-1), 2^k] -> 2^k."""
    rows = []
    for k in range(8):
        lo = (1 << (k - 1)) + 1 if k else 1
        rows.append((_band_label(lo, 1 << k), 1 << k))
    return rows


def emit_tables() -> tuple[list[tuple[str, int]], list[tuple[str, int]]]:
    return upper_ai_table(), lower_degree_table()


def tables_csv() -> str:
    lines = ["degree_band,upper_ai"]
    lines += [f"{band},{value}" for band, value in upper_ai_table()]
    lines.append("")
    lines.append("ai_band,lower_degree")
    lines += [f"{band},{value}" for band, value in lower_degree_table()]
    return "\n".join(lines) + "\n"

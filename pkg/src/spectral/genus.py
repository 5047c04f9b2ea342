"""Genus of the compactified spectral curve from its branching data."""

from __future__ import annotations

import math
from typing import Optional, Sequence

from src.common.types import CaseKind

from .branching import BranchPoint, permutation_cycles


def ramification(perm: Optional[Sequence[int]]) -> Optional[int]:
    """n - number of cycles, or None for an unknown permutation."""
    if perm is None:
        return None
    return len(perm) - len(permutation_cycles(list(perm)))


def genus_estimate(
    case: CaseKind,
    branch: Sequence[BranchPoint],
    end_permutations: Optional[dict[str, Optional[Sequence[int]]]] = None,
) -> tuple[int, int, Optional[str]]:
    """(low, high, note) for the genus of the compactified curve.

    Case II: the 2-sheeted curve branches over 0 and infinity, so
    genus = (B + 2)/2 - 1 with B the ramification over C*.
    Case I: Riemann-Hurwitz for 4 sheets, g = (B + e_0 + e_inf)/2 - 3. The
    end ramifications are only trusted when both ends are 4-cycles; otherwise
    the result is the interval between the measured and the maximal ends.
    Candidates with an unresolved loop count between 0 and their winding.
    """
    case = CaseKind(case)
    total = sum(p.ramification for p in branch)
    upper = sum(p.max_ramification for p in branch)
    ends = end_permutations or {}
    if case == CaseKind.II:
        if upper > total:
            return total // 2, (upper + 1) // 2, "branching order of some candidates not resolved"
        if total % 2:
            return total // 2, total // 2 + 1, "odd branch count over C*"
        note = None
        if any(ramification(ends.get(k)) not in (None, 1) for k in ("0", "inf")):
            note = "end loops do not exchange the two sheets"
        return total // 2, total // 2, note
    if case != CaseKind.I:
        raise ValueError(f"genus is defined for Case I and II only, got {case.value}")
    e0, einf = ramification(ends.get("0")), ramification(ends.get("inf"))
    maximal = (upper + 6) // 2 - 3
    if e0 == 3 and einf == 3 and upper == total:
        return maximal, maximal, None
    measured = math.ceil((total + (e0 or 0) + (einf or 0)) / 2) - 3
    low = max(0, measured)
    if e0 == 3 and einf == 3:
        return low, max(low, maximal), "branching order of some candidates not resolved"
    return low, max(low, maximal), "branching over 0 and infinity not resolved"

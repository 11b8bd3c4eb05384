"""
Counting Theorems
=================
Exhaustive check that, for every J in [n-1], permutations with only odd
cycles and ascent set J are as many as permutations with only even cycles
(plus at most one fixed point) and descent set J, together with the subset
version and the closed-form totals.

S_n is enumerated once; counts are bucketed by ascent/descent bitmask and
the subset tables are obtained by zeta/Möbius transforms on the subset
lattice of [n-1].
"""

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Tuple

import numpy as np
import pandas as pd
from sympy import factorial2
from tqdm import tqdm

from ..config import get_config
from ..errors import BudgetExceededError, PreconditionError
from ..perms.permutation import Permutation, classify_parity


logger = logging.getLogger(__name__)


# ═══════════════════════════════════════════════════════════════════════════
#                        SUBSET LATTICE TRANSFORMS
# ═══════════════════════════════════════════════════════════════════════════

def subset_zeta(values: np.ndarray, bits: int) -> np.ndarray:
    """g[S] = sum of f[J] over J inside S (bitmask indices)."""
    f = np.array(values, dtype=np.int64).copy()
    for i in range(bits):
        f = f.reshape(-1, 2, 1 << i)
        f[:, 1, :] += f[:, 0, :]
        f = f.reshape(-1)
    return f


def subset_mobius(values: np.ndarray, bits: int) -> np.ndarray:
    """Inclusion-exclusion inverse of subset_zeta."""
    f = np.array(values, dtype=np.int64).copy()
    for i in range(bits):
        f = f.reshape(-1, 2, 1 << i)
        f[:, 1, :] -= f[:, 0, :]
        f = f.reshape(-1)
    return f


def mask_to_set(mask: int, bits: int) -> str:
    return "{" + ",".join(str(i + 1) for i in range(bits) if mask >> i & 1) + "}"


def closed_form_total(n: int) -> int:
    """|S^o_n| = |S^e_n|: (n-1)!!^2 for even n and n (n-2)!!^2 for odd n."""
    if n % 2 == 0:
        return int(factorial2(n - 1)) ** 2
    return n * int(factorial2(n - 2)) ** 2


# ═══════════════════════════════════════════════════════════════════════════
#                              ENUMERATION
# ═══════════════════════════════════════════════════════════════════════════

def _masks(values: Tuple[int, ...]) -> Tuple[int, int]:
    ascents = descents = 0
    for i in range(len(values) - 1):
        if values[i] < values[i + 1]:
            ascents |= 1 << i
        else:
            descents |= 1 << i
    return ascents, descents


def _count_chunk(args: Tuple[int, int]) -> Tuple[List[int], List[int]]:
    """Buckets for all permutations of [n] starting with ``first``."""
    n, first = args
    size = 1 << (n - 1)
    odd = [0] * size
    even = [0] * size
    rest = [v for v in range(1, n + 1) if v != first]
    for tail in itertools.permutations(rest):
        values = (first,) + tail
        parity = classify_parity(Permutation(values))
        ascents, descents = _masks(values)
        if parity.is_odd:
            odd[ascents] += 1
        if parity.is_even:
            even[descents] += 1
    return odd, even


def _bucket_counts(n: int, workers: int, show_progress: bool) -> Tuple[np.ndarray, np.ndarray]:
    size = 1 << (n - 1)
    odd = np.zeros(size, dtype=np.int64)
    even = np.zeros(size, dtype=np.int64)
    chunks = [(n, first) for first in range(1, n + 1)]

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results: Iterable = pool.map(_count_chunk, chunks)
            results = tqdm(results, total=len(chunks), desc=f"S_{n}", disable=not show_progress)
            for chunk_odd, chunk_even in results:
                odd += np.array(chunk_odd, dtype=np.int64)
                even += np.array(chunk_even, dtype=np.int64)
    else:
        for chunk in tqdm(chunks, desc=f"S_{n}", disable=not show_progress):
            chunk_odd, chunk_even = _count_chunk(chunk)
            odd += np.array(chunk_odd, dtype=np.int64)
            even += np.array(chunk_even, dtype=np.int64)
    return odd, even


# ═══════════════════════════════════════════════════════════════════════════
#                                REPORT
# ═══════════════════════════════════════════════════════════════════════════

@dataclass
class CountReport:
    """Exact-set and subset tables for one n."""
    n: int
    exact: pd.DataFrame
    subsets: pd.DataFrame
    odd_total: int
    even_total: int
    closed_form: int
    inclusion_exclusion_ok: bool
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            bool(self.exact["pass"].all())
            and bool(self.subsets["pass"].all())
            and self.inclusion_exclusion_ok
            and self.odd_total == self.even_total == self.closed_form
        )

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status}  n={self.n}  |S^o_n|={self.odd_total}  |S^e_n|={self.even_total}  "
            f"closed form={self.closed_form}  rows={len(self.exact)}  "
            f"inclusion-exclusion={'ok' if self.inclusion_exclusion_ok else 'mismatch'}"
        )

    def render(self) -> str:
        return "\n".join([
            self.summary(),
            "",
            "Exact sets (Asc = J for odd cycles, Des = J for even cycles):",
            self.exact.to_string(index=False),
            "",
            "Subsets (Asc inside S, Des inside S):",
            self.subsets.to_string(index=False),
        ])

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "passed": self.passed,
            "odd_total": self.odd_total,
            "even_total": self.even_total,
            "closed_form": self.closed_form,
            "inclusion_exclusion_ok": self.inclusion_exclusion_ok,
            "exact": self.exact.to_dict(orient="records"),
            "subsets": self.subsets.to_dict(orient="records"),
            "failures": self.failures,
        }


def verify_theorem_counts(
    n: int,
    workers: Optional[int] = None,
    show_progress: Optional[bool] = None,
) -> CountReport:
    """
    Enumerate S_n once and check every exact-set and subset identity.

    Args:
        n: Permutation size (1 <= n <= max_perm_n)
        workers: Process count; defaults to config
        show_progress: tqdm progress bar; defaults to config

    Returns:
        CountReport
    """
    settings = get_config().verification
    if n < 1:
        raise PreconditionError(f"n must be positive, got {n}")
    if n > settings.max_perm_n:
        logger.error(f"Refusing to enumerate S_{n} (max_perm_n={settings.max_perm_n})")
        raise BudgetExceededError(
            f"n={n} exceeds max_perm_n={settings.max_perm_n}",
            invariant="perm-budget",
        )
    workers = settings.workers if workers is None else workers
    show_progress = settings.show_progress if show_progress is None else show_progress

    bits = n - 1
    odd_exact, even_exact = _bucket_counts(n, workers, show_progress)
    odd_subset = subset_zeta(odd_exact, bits)
    even_subset = subset_zeta(even_exact, bits)
    inclusion_exclusion_ok = bool(
        np.array_equal(subset_mobius(odd_subset, bits), odd_exact)
        and np.array_equal(subset_mobius(even_subset, bits), even_exact)
    )

    labels = [mask_to_set(mask, bits) for mask in range(1 << bits)]
    exact = pd.DataFrame({
        "J": labels,
        "odd_asc": odd_exact,
        "even_des": even_exact,
    })
    exact["pass"] = exact["odd_asc"] == exact["even_des"]
    subsets = pd.DataFrame({
        "S": labels,
        "odd_asc_in_S": odd_subset,
        "even_des_in_S": even_subset,
    })
    subsets["pass"] = subsets["odd_asc_in_S"] == subsets["even_des_in_S"]

    failures = [f"J={j}" for j in exact.loc[~exact["pass"], "J"]]
    failures += [f"S={s}" for s in subsets.loc[~subsets["pass"], "S"]]
    for failure in failures:
        logger.warning(f"n={n}: counts differ at {failure}")

    report = CountReport(
        n=n,
        exact=exact,
        subsets=subsets,
        odd_total=int(odd_exact.sum()),
        even_total=int(even_exact.sum()),
        closed_form=closed_form_total(n),
        inclusion_exclusion_ok=inclusion_exclusion_ok,
        failures=failures,
    )
    logger.info(report.summary())
    return report

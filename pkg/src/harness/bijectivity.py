"""
Bijectivity Sweeps
==================
Exhaustive checks that the permutation-level maps are bijections between
the sets they claim to connect:

- f_S and its inverse for every S inside [n-1]
- Phi_S / Phi_S^{-1} and Xi_S / Xi_S^{-1} roundtrips with surjectivity
- necklace multiset counts of each weight x^{alpha(S)}
- Bóna's map and the hat-transform conjugate of Psi

Each sweep returns a SweepReport with one pandas row per subset (or per n).
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

import pandas as pd
from tqdm import tqdm

from ..bijection.parity import classify_word
from ..bijection.permutation_map import f_s, f_s_inverse, hat_conjugate_psi
from ..config import get_config
from ..errors import BudgetExceededError, CombinatoricsError, PreconditionError
from ..necklaces.maps import (
    SubsetS,
    all_subsets,
    multisets_of_weight,
    phi,
    phi_inv,
    xi,
    xi_inv,
)
from ..perms.maps import bona_map
from ..perms.permutation import ParityClass, Permutation, all_permutations, classify_parity


logger = logging.getLogger(__name__)


@dataclass
class SweepReport:
    """Per-row results of one exhaustive sweep."""
    name: str
    n: int
    rows: pd.DataFrame
    failures: List[str] = field(default_factory=list)
    notes: Dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures and bool(self.rows["pass"].all())

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status}  {self.name}  n={self.n}  rows={len(self.rows)}  failures={len(self.failures)}"
        for key, value in self.notes.items():
            line += f"  {key}={value}"
        return line

    def render(self) -> str:
        parts = [self.summary(), "", self.rows.to_string(index=False)]
        if self.failures:
            parts += ["", "Failures:"] + [f"  {f}" for f in self.failures[:20]]
        return "\n".join(parts)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "passed": self.passed,
            "rows": self.rows.to_dict(orient="records"),
            "failures": self.failures,
            "notes": self.notes,
        }


# ═══════════════════════════════════════════════════════════════════════════
#                               HELPERS
# ═══════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class _Entry:
    pi: Permutation
    parity: ParityClass
    ascent_mask: int
    descent_mask: int


def _index(n: int) -> List[_Entry]:
    entries = []
    for pi in all_permutations(n):
        sets = pi.boundary_sets()
        entries.append(_Entry(pi, classify_parity(pi), sets.ascent_mask, sets.descent_mask))
    return entries


def _inside(mask: int, subset: SubsetS) -> bool:
    return mask & ~subset.mask == 0


def _check_fs_budget(n: int, subsets: Optional[Iterable[SubsetS]]):
    if n < 1:
        raise PreconditionError(f"n must be positive, got {n}")
    limit = get_config().verification.max_fs_n
    if subsets is None and n > limit:
        logger.error(f"Refusing an all-subset sweep at n={n} (max_fs_n={limit})")
        raise BudgetExceededError(
            f"n={n} exceeds max_fs_n={limit}; pass explicit subsets to go further",
            invariant="fs-budget",
        )


def _check_perm_budget(n: int, purpose: str):
    if n < 1:
        raise PreconditionError(f"n must be positive, got {n}")
    limit = get_config().verification.max_perm_n
    if n > limit:
        logger.error(f"Refusing {purpose} at n={n} (max_perm_n={limit})")
        raise BudgetExceededError(f"n={n} exceeds max_perm_n={limit}", invariant="perm-budget")


def _progress(items, desc: str, show_progress: Optional[bool]):
    if show_progress is None:
        show_progress = get_config().verification.show_progress
    return tqdm(items, desc=desc, disable=not show_progress)


def _finish(report: SweepReport) -> SweepReport:
    for failure in report.failures[:20]:
        logger.warning(f"{report.name} n={report.n}: {failure}")
    logger.info(report.summary())
    return report


# ═══════════════════════════════════════════════════════════════════════════
#                                 f_S
# ═══════════════════════════════════════════════════════════════════════════

def verify_fs_bijectivity(
    n: int,
    subsets: Optional[Iterable[SubsetS]] = None,
    show_progress: Optional[bool] = None,
) -> SweepReport:
    """
    For each S, f_S must map {pi in S^o_n : Asc(pi) in S} one-to-one onto
    {sigma in S^e_n : Des(sigma) in S}, and f_S^{-1} must undo it pointwise.

    Args:
        n: Permutation size
        subsets: Restrict the sweep to these S; all of [n-1]'s subsets if None

    Returns:
        SweepReport with columns S, domain, image, target, injective, onto,
        roundtrip, pass
    """
    _check_fs_budget(n, subsets)
    subsets = list(all_subsets(n) if subsets is None else subsets)
    entries = _index(n)
    rows = []
    failures: List[str] = []

    for subset in _progress(subsets, f"f_S n={n}", show_progress):
        domain = [e.pi for e in entries if e.parity.is_odd and _inside(e.ascent_mask, subset)]
        target = {e.pi for e in entries if e.parity.is_even and _inside(e.descent_mask, subset)}
        images = []
        roundtrip_ok = 0
        for pi in domain:
            try:
                image = f_s(subset, pi)
                back = f_s_inverse(subset, image)
            except CombinatoricsError as e:
                failures.append(f"S={subset} pi={pi}: {e.message}")
                continue
            images.append(image)
            if back == pi:
                roundtrip_ok += 1
            else:
                failures.append(f"S={subset}: f_S^-1(f_S({pi})) = {back}")
        image_set = set(images)
        injective = len(image_set) == len(domain)
        onto = image_set == target
        roundtrip = roundtrip_ok == len(domain)
        rows.append({
            "S": str(subset),
            "domain": len(domain),
            "image": len(image_set),
            "target": len(target),
            "injective": injective,
            "onto": onto,
            "roundtrip": roundtrip,
            "pass": injective and onto and roundtrip,
        })

    return _finish(SweepReport("fs-bijectivity", n, pd.DataFrame(rows), failures))


# ═══════════════════════════════════════════════════════════════════════════
#                           NECKLACE MAPS
# ═══════════════════════════════════════════════════════════════════════════

def verify_necklace_roundtrips(n: int, show_progress: Optional[bool] = None) -> SweepReport:
    """
    Phi_S^{-1} o Phi_S = id on {Des in S}, Xi_S^{-1} o Xi_S = id on
    {pi in S^o_n : Asc in S}; both preserve cycle structure, Phi_S hits every
    multiset of weight x^{alpha(S)} and Xi_S every odd distinct one.
    """
    _check_fs_budget(n, None)
    entries = _index(n)
    rows = []
    failures: List[str] = []

    for subset in _progress(list(all_subsets(n)), f"necklaces n={n}", show_progress):
        multisets = list(multisets_of_weight(subset.composition))
        odd_multisets = {m for m in multisets if m.is_odd_distinct()}

        phi_images = set()
        phi_domain = [e.pi for e in entries if _inside(e.descent_mask, subset)]
        for pi in phi_domain:
            image = phi(subset, pi)
            phi_images.add(image)
            if image.lengths != list(pi.cycle_type()):
                failures.append(f"S={subset}: Phi_S({pi}) = {image} changes cycle type")
            back = phi_inv(subset, image)
            if back != pi:
                failures.append(f"S={subset}: Phi_S^-1(Phi_S({pi})) = {back}")

        xi_images = set()
        xi_domain = [e.pi for e in entries if e.parity.is_odd and _inside(e.ascent_mask, subset)]
        for pi in xi_domain:
            image = xi(subset, pi)
            xi_images.add(image)
            if image.lengths != list(pi.cycle_type()):
                failures.append(f"S={subset}: Xi_S({pi}) = {image} changes cycle type")
            back = xi_inv(subset, image)
            if back != pi:
                failures.append(f"S={subset}: Xi_S^-1(Xi_S({pi})) = {back}")

        phi_onto = phi_images == set(multisets) and len(phi_domain) == len(multisets)
        xi_onto = xi_images == odd_multisets and len(xi_domain) == len(odd_multisets)
        rows.append({
            "S": str(subset),
            "phi_domain": len(phi_domain),
            "multisets": len(multisets),
            "xi_domain": len(xi_domain),
            "odd_multisets": len(odd_multisets),
            "phi_onto": phi_onto,
            "xi_onto": xi_onto,
            "pass": phi_onto and xi_onto,
        })

    return _finish(SweepReport("necklace-roundtrips", n, pd.DataFrame(rows), failures))


def verify_necklace_counts(n: int, show_progress: Optional[bool] = None) -> SweepReport:
    """
    For each S, multisets of weight x^{alpha(S)} made of distinct odd
    necklaces are as many as those made of even necklaces plus at most one
    singleton.
    """
    _check_perm_budget(n, "necklace enumeration")

    rows = []
    for subset in _progress(list(all_subsets(n)), f"necklace counts n={n}", show_progress):
        odd = even = 0
        for multiset in multisets_of_weight(subset.composition):
            word_class = classify_word(multiset.to_word())
            odd += word_class.is_odd
            even += word_class.is_even
        rows.append({
            "S": str(subset),
            "composition": ",".join(map(str, subset.composition)),
            "odd": odd,
            "even": even,
            "pass": odd == even,
        })
    frame = pd.DataFrame(rows)
    failures = [f"S={s}: counts differ" for s in frame.loc[~frame["pass"], "S"]]
    return _finish(SweepReport("necklace-counts", n, frame, failures))


# ═══════════════════════════════════════════════════════════════════════════
#                          COMPARISON MAPS
# ═══════════════════════════════════════════════════════════════════════════

def verify_bona_bijection(n: int) -> SweepReport:
    """
    Bóna's map sends S^o_n one-to-one onto S^e_n (n even) and differs from
    f_{[n-1]} somewhere once n >= 4.
    """
    _check_perm_budget(n, "the Bóna sweep")
    if n % 2 == 1:
        raise PreconditionError(f"Bóna's bijection needs even n, got n={n}", invariant="even-n")
    entries = _index(n)
    full = SubsetS.full(n)
    domain = [e.pi for e in entries if e.parity.is_odd]
    target = {e.pi for e in entries if e.parity.is_even}

    images = set()
    differing: List[Tuple[Permutation, Permutation, Permutation]] = []
    for pi in domain:
        image = bona_map(pi)
        images.add(image)
        other = f_s(full, pi)
        if other != image:
            differing.append((pi, image, other))

    injective = len(images) == len(domain)
    onto = images == target
    rows = pd.DataFrame([{
        "n": n,
        "domain": len(domain),
        "image": len(images),
        "target": len(target),
        "injective": injective,
        "onto": onto,
        "differs_from_f": len(differing),
        "pass": injective and onto,
    }])
    notes: Dict[str, object] = {}
    if differing:
        pi, image, other = differing[0]
        notes["example"] = f"{pi}: bona={image} f={other}"
    return _finish(SweepReport("bona-bijection", n, rows, notes=notes))


def verify_hat_conjugation(n: int) -> SweepReport:
    """f_{[n-1]} agrees with Psi conjugated by the hat transform on all of S^o_n."""
    _check_perm_budget(n, "the hat conjugation sweep")
    full = SubsetS.full(n)
    failures: List[str] = []
    checked = 0
    for pi in all_permutations(n):
        if not classify_parity(pi).is_odd:
            continue
        checked += 1
        via_necklaces = f_s(full, pi)
        via_hat = hat_conjugate_psi(pi)
        if via_necklaces != via_hat:
            failures.append(f"{pi}: f={via_necklaces} hat={via_hat}")
    rows = pd.DataFrame([{"n": n, "checked": checked, "mismatches": len(failures), "pass": not failures}])
    return _finish(SweepReport("hat-conjugation", n, rows, failures))

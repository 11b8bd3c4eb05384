"""
Permutation Bijection
=====================
f_S = Phi_S^{-1} o Psi o Xi_S from permutations with only odd cycles and
Asc(pi) in S to permutations with only even cycles (plus at most one fixed
point) and Des in S, together with its inverse Xi_S^{-1} o Omega o Phi_S.
"""

import logging
from dataclasses import dataclass

from ..errors import PreconditionError
from ..necklaces.maps import NecklaceMultiset, SubsetS, phi, phi_inv, xi, xi_inv
from ..perms.maps import foata_hat, foata_hat_inverse
from ..perms.permutation import Permutation, classify_parity
from ..words.core import Word, format_word
from .parity import BijectionTrace, omega_trace, psi_trace


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FsComputation:
    """Every intermediate object of f_S (or of its inverse)."""
    subset: SubsetS
    source: Permutation
    source_necklaces: NecklaceMultiset
    source_word: Word
    trace: BijectionTrace
    target_word: Word
    target_necklaces: NecklaceMultiset
    image: Permutation

    def to_dict(self) -> dict:
        return {
            "S": list(self.subset.elements),
            "n": self.subset.n,
            "source": self.source.to_dict(),
            "source_necklaces": str(self.source_necklaces),
            "source_word": format_word(self.source_word),
            "rules": [r.value for r in self.trace.rules],
            "target_word": format_word(self.target_word),
            "target_necklaces": str(self.target_necklaces),
            "image": self.image.to_dict(),
        }


def _check_size(subset: SubsetS, pi: Permutation):
    if pi.n != subset.n:
        raise PreconditionError(
            f"S lives in [{subset.n - 1}] but the permutation has n={pi.n}",
            invariant="size",
        )


def f_s_trace(subset: SubsetS, pi: Permutation) -> FsComputation:
    """
    Compute f_S(pi) keeping the necklaces, words and Psi trace.

    Raises:
        PreconditionError: pi has an even cycle or Asc(pi) is not inside S
    """
    _check_size(subset, pi)
    necklaces = xi(subset, pi)
    word = necklaces.to_word()
    trace = psi_trace(word)
    target = NecklaceMultiset.from_word(trace.result)
    image = phi_inv(subset, target)
    logger.debug(f"f_S S={subset}: {pi} -> {image} via {format_word(word)}")
    return FsComputation(subset, pi, necklaces, word, trace, trace.result, target, image)


def f_s(subset: SubsetS, pi: Permutation) -> Permutation:
    return f_s_trace(subset, pi).image


def f_s_inverse_trace(subset: SubsetS, sigma: Permutation) -> FsComputation:
    """
    Compute f_S^{-1}(sigma) keeping the necklaces, words and Omega trace.

    Raises:
        PreconditionError: sigma outside S^e_n or Des(sigma) not inside S
    """
    _check_size(subset, sigma)
    if not classify_parity(sigma).is_even:
        raise PreconditionError(
            f"{sigma} is not in S^e_{sigma.n}",
            invariant="even-cycles",
        )
    necklaces = phi(subset, sigma)
    word = necklaces.to_word()
    trace = omega_trace(word)
    target = NecklaceMultiset.from_word(trace.result)
    image = xi_inv(subset, target)
    logger.debug(f"f_S^-1 S={subset}: {sigma} -> {image} via {format_word(word)}")
    return FsComputation(subset, sigma, necklaces, word, trace, trace.result, target, image)


def f_s_inverse(subset: SubsetS, sigma: Permutation) -> Permutation:
    return f_s_inverse_trace(subset, sigma).image


def hat_conjugate_psi(pi: Permutation) -> Permutation:
    """
    Psi conjugated by the hat transform: values become letters 1 < ... < n.

    For S = [n-1] this coincides with f_S.
    """
    if not classify_parity(pi).is_odd:
        raise PreconditionError(f"{pi} has an even cycle", invariant="odd-cycles")
    word = tuple(v - 1 for v in foata_hat(pi))
    image = psi_trace(word).result
    return foata_hat_inverse(tuple(letter + 1 for letter in image))

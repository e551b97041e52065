"""Modification rules: the images of s_<lam> and s_[lam] in R(Sp_2n) and R(O_N).

Each image is zero or plus/minus one irreducible character.  The rules work on
the sequence alpha_j = lam'_j - (j - 1), j = 1..lam_1, reflect the entries that
are too large, and read the answer off the sorted result.  ``formal_nl_product``
combines them with Newell-Littlewood coefficients to multiply irreducible
characters without touching any character polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .characters import GroupId, LabelError, RepRingElement
from .partitions import Partition, conjugate, format_partition, in_par_o
from .symfun import nl_product

__all__ = [
    "SignedIrrep",
    "ZERO",
    "sp_modify",
    "o_modify",
    "modify",
    "formal_nl_product",
]


@dataclass(frozen=True)
class SignedIrrep:
    """Either zero (``label is None``) or ``sign * S[label]``."""

    sign: int = 0
    label: Optional[Partition] = None

    @property
    def is_zero(self) -> bool:
        return self.label is None

    def to_json(self) -> dict:
        if self.is_zero:
            return {"sign": 0, "label": None}
        return {"sign": self.sign, "label": format_partition(self.label)}

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return f"{'+' if self.sign > 0 else '-'}{format_partition(self.label)}"


ZERO = SignedIrrep()


def _alpha(lam: Partition) -> list:
    cols = conjugate(lam)
    return [cols[j] - j for j in range(len(cols))]


def _sorted_sign(beta: list) -> tuple:
    """Sort decreasingly; return (gamma, sign of the sorting permutation), or None on repeats."""
    if len(set(beta)) != len(beta):
        return None
    inversions = sum(1 for i in range(len(beta)) for j in range(i + 1, len(beta))
                     if beta[i] < beta[j])
    return sorted(beta, reverse=True), (-1) ** inversions


def _from_gamma(gamma: list) -> Optional[Partition]:
    cols = [g + j for j, g in enumerate(gamma)]
    if any(c < 0 for c in cols) or any(cols[j] < cols[j + 1] for j in range(len(cols) - 1)):
        return None
    return conjugate([c for c in cols if c > 0])


@lru_cache(maxsize=None)
def _sp_modify(lam: Partition, n: int) -> SignedIrrep:
    if len(lam) <= n:
        return SignedIrrep(1, lam)
    r = lam[0]
    alpha = _alpha(lam)
    if any(a >= 2 * n + r + 2 for a in alpha):
        return ZERO
    values = set(alpha)
    # i = j is allowed: an entry n + 1 reflects onto itself
    if any(2 * n + 2 - a in values for a in alpha):
        return ZERO
    p = sum(1 for a in alpha if a >= n + 2)
    beta = [2 * n + 2 - a for a in alpha[:p]] + alpha[p:]
    sorted_ = _sorted_sign(beta)
    if sorted_ is None:
        return ZERO
    gamma, sign = sorted_
    mu = _from_gamma(gamma)
    if mu is None:
        return ZERO
    return SignedIrrep((-1) ** p * sign, mu)


def sp_modify(lam: Sequence[int], n: int) -> SignedIrrep:
    """Image of s_<lam> under h_r -> H_r for Sp_2n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return _sp_modify(Partition(lam), n)


@lru_cache(maxsize=None)
def _o_modify(lam: Partition, N: int) -> SignedIrrep:
    if in_par_o(lam, N):
        return SignedIrrep(1, lam)
    r = lam[0]
    alpha = _alpha(lam)
    if any(a >= N + r for a in alpha):
        return ZERO
    # distinct entries only: an entry N/2 is its own reflection and does not vanish
    for i in range(r):
        for j in range(i + 1, r):
            if alpha[i] + alpha[j] == N:
                return ZERO
    p = sum(1 for a in alpha if 2 * a > N)
    if p % 2 == 0:
        q = p
    else:
        nxt = alpha[p] if p < r else -r
        q = p + 1 if alpha[p - 1] + nxt >= N + 1 else p - 1
    beta = [N - a for a in alpha[:q]] + alpha[q:]
    sorted_ = _sorted_sign(beta)
    if sorted_ is None:
        return ZERO
    gamma, sign = sorted_
    mu = _from_gamma(gamma)
    if mu is None:
        return ZERO
    return SignedIrrep(sign, mu)


def o_modify(lam: Sequence[int], N: int) -> SignedIrrep:
    """Image of s_[lam] under h_r -> H_r for O_N."""
    if N < 1:
        raise ValueError("N must be at least 1")
    return _o_modify(Partition(lam), N)


def modify(g: GroupId, lam: Sequence[int]) -> SignedIrrep:
    if g.family == "Sp":
        return sp_modify(lam, g.rank)
    if g.family == "O":
        return o_modify(lam, g.rank)
    raise ValueError(f"modification rules exist for Sp and O, not {g}")


def formal_nl_product(g: GroupId, mu: Sequence[int], nu: Sequence[int],
                      size_cap: Optional[int] = None) -> RepRingElement:
    """S[mu] * S[nu] in R(g) via Newell-Littlewood coefficients and modification.

    ``g`` must be an Sp or O group.  ``size_cap`` is only a guard on |mu| + |nu|.
    """
    if g.family not in ("Sp", "O"):
        raise ValueError(f"formal products are defined for Sp and O, not {g}")
    mu, nu = g.check(mu), g.check(nu)
    if size_cap is not None and sum(mu) + sum(nu) > size_cap:
        raise ValueError(f"|mu| + |nu| exceeds the size cap {size_cap}")
    acc: dict = {}
    for lam, c in nl_product(mu, nu).items():
        img = modify(g, lam)
        if not img.is_zero:
            acc[img.label] = acc.get(img.label, 0) + img.sign * c
    try:
        return RepRingElement(g, acc)
    except LabelError as exc:  # pragma: no cover - the rules always land in range
        raise AssertionError(f"modification left the label set: {exc}") from exc

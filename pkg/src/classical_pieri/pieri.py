"""Pieri and dual Pieri rules for Sp_2n, O_N, SO_2n+1 and SO_2n.

Every multiplicity is a count of intermediate partitions xi.  For the Pieri
rules xi lies below both mu and lam (horizontal strips removed); for the dual
rules xi lies above both (vertical strips added, at most n rows).
``tensor_decomposition`` drives these counts over every lam in the support.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

from .characters import GroupId, LabelError, RepRingElement
from .modification import formal_nl_product
from .partitions import (
    Partition,
    add_cell_neighbors,
    add_horizontal_strip,
    add_vertical_strip,
    column,
    format_partition,
    in_par_o,
    is_horizontal_strip,
    is_vertical_strip,
    odd_column_count,
    odd_row_count,
    remove_cell_neighbors,
    remove_horizontal_strip,
    remove_vertical_strip,
)

__all__ = [
    "PieriWitnessSet",
    "pieri_set",
    "o_condition_iii",
    "sp_pieri_mult",
    "o_pieri_mult",
    "o_sym_power_mult",
    "so_odd_pieri_mult",
    "so_even_pieri_coeff",
    "so_multiplicity_factor",
    "dual_pieri_set",
    "dual_condition_iv",
    "sp_dual_pieri_mult",
    "so_odd_dual_pieri_mult",
    "so_even_dual_pieri_coeff",
    "standard_pieri",
    "rest_mult",
    "tensor_decomposition",
    "TENSOR_KINDS",
]


@dataclass(frozen=True)
class PieriWitnessSet:
    """The intermediate partitions xi counted by a Pieri-type rule."""

    witnesses: tuple
    context: dict = field(default_factory=dict, compare=False)

    def __len__(self) -> int:
        return len(self.witnesses)

    def __iter__(self):
        return iter(self.witnesses)

    def __contains__(self, xi) -> bool:
        return Partition(xi) in self.witnesses

    def to_json(self) -> list:
        return [format_partition(xi) for xi in self.witnesses]


def _col(lam: Sequence[int], j: int) -> int:
    """lam'_j, 1-based, zero past the end."""
    return sum(1 for p in lam if p >= j)


def _need(pred: bool, lam, what: str):
    if not pred:
        raise LabelError(f"{format_partition(lam)} is not a label for {what}")


def _check_len(n: int, *lams):
    for lam in lams:
        _need(len(lam) <= n, lam, f"a group of rank {n} (length <= {n})")


def _check_o(N: int, *lams):
    for lam in lams:
        _need(in_par_o(lam, N), lam, f"O_{N}")


def _check_r(r: int):
    if r < 0:
        raise ValueError("r must be nonnegative")


# ---------------------------------------------------------------- Pieri rules

@lru_cache(maxsize=None)
def _pieri_set(mu: Partition, lam: Partition, r: int) -> tuple:
    if (sum(mu) + sum(lam) - r) % 2:
        return ()
    size = (sum(mu) + sum(lam) - r) // 2
    if size < 0:
        return ()
    return tuple(xi for xi in remove_horizontal_strip(mu, sum(mu) - size)
                 if is_horizontal_strip(xi, lam))


def pieri_set(mu: Sequence[int], lam: Sequence[int], r: int) -> PieriWitnessSet:
    """xi with mu/xi and lam/xi horizontal strips and |mu/xi| + |lam/xi| = r."""
    _check_r(r)
    mu, lam = Partition(mu), Partition(lam)
    return PieriWitnessSet(_pieri_set(mu, lam, r), {"mu": mu, "lam": lam, "r": r})


def o_condition_iii(mu: Sequence[int], xi: Sequence[int], lam: Sequence[int], N: int) -> bool:
    """Side condition for O_N, active only when mu'_1 + mu'_2 = N and lam matches mu there."""
    m1, m2 = _col(mu, 1), _col(mu, 2)
    if not (m1 + m2 == N and _col(lam, 1) == m1 and _col(lam, 2) == m2):
        return True
    l = len(mu)
    if len(xi) == l and xi[l - 1] in (mu[l - 1], lam[l - 1] if len(lam) >= l else 0):
        return True
    return len(xi) < l and _col(xi, 2) < m2


def sp_pieri_mult(mu: Sequence[int], lam: Sequence[int], r: int, n: int) -> int:
    """Multiplicity of lam in mu (x) S^r(V) for Sp_2n."""
    _check_len(n, mu, lam)
    return len(pieri_set(mu, lam, r))


def o_pieri_mult(mu: Sequence[int], lam: Sequence[int], r: int, N: int) -> int:
    """Multiplicity of lam in mu (x) V_[(r)] for O_N."""
    _check_o(N, mu, lam)
    return sum(1 for xi in pieri_set(mu, lam, r) if o_condition_iii(mu, xi, lam, N))


def o_sym_power_mult(mu: Sequence[int], lam: Sequence[int], r: int, N: int) -> int:
    """Multiplicity of lam in mu (x) S^r(V) for O_N."""
    return sum(o_pieri_mult(mu, lam, r - 2 * s, N) for s in range(r // 2 + 1))


def so_odd_pieri_mult(mu: Sequence[int], lam: Sequence[int], r: int, n: int) -> int:
    """Multiplicity of lam in mu (x) V_[(r)] for SO_2n+1."""
    _check_len(n, mu, lam)
    count = len(pieri_set(mu, lam, r))
    if r >= 1 and len(mu) == n:
        count += sum(1 for xi in pieri_set(mu, lam, r - 1) if len(xi) == n)
    return count


def so_multiplicity_factor(lam: Sequence[int], mu: Sequence[int], n: int) -> int:
    """m(lam, mu, n): 2 if l(mu) = n and l(lam) < n, else 1."""
    return 2 if len(mu) == n and len(lam) < n else 1


def so_even_pieri_coeff(mu: Sequence[int], lam: Sequence[int], r: int, n: int) -> int:
    """Coefficient of S_[lam] in S_[mu] * S_[(r)] for SO_2n."""
    _check_len(n, mu, lam)
    count = sum(1 for xi in pieri_set(mu, lam, r) if o_condition_iii(mu, xi, lam, 2 * n))
    return so_multiplicity_factor(lam, mu, n) * count


# ----------------------------------------------------------- dual Pieri rules

@lru_cache(maxsize=None)
def _dual_set(mu: Partition, lam: Partition, r: int, n: int) -> tuple:
    if len(mu) > n or len(lam) > n or (sum(mu) + sum(lam) + r) % 2:
        return ()
    size = (sum(mu) + sum(lam) + r) // 2
    if size < max(sum(mu), sum(lam)):
        return ()
    return tuple(xi for xi in add_vertical_strip(mu, size - sum(mu), n)
                 if is_vertical_strip(lam, xi))


def dual_pieri_set(mu: Sequence[int], lam: Sequence[int], r: int, n: int) -> PieriWitnessSet:
    """xi with l(xi) <= n, xi/mu and xi/lam vertical strips and |xi/mu| + |xi/lam| = r."""
    _check_r(r)
    mu, lam = Partition(mu), Partition(lam)
    _check_len(n, mu, lam)
    return PieriWitnessSet(_dual_set(mu, lam, r, n), {"mu": mu, "lam": lam, "r": r, "n": n})


def sp_dual_pieri_mult(mu: Sequence[int], lam: Sequence[int], r: int, n: int) -> int:
    """Multiplicity of lam in mu (x) wedge^r(V) for Sp_2n."""
    return len(dual_pieri_set(mu, lam, r, n))


def dual_condition_iv(mu: Sequence[int], xi: Sequence[int], lam: Sequence[int],
                      n: int, exact: bool) -> bool:
    """The SO_2n+1 side condition; ``exact`` says whether the total size is r (else r - 1)."""
    if len(mu) == n:
        return True
    if exact:
        return len(mu) == len(xi) > len(lam) or len(xi) == len(lam)
    return len(xi) == n


def so_odd_dual_pieri_mult(mu: Sequence[int], lam: Sequence[int], r: int, n: int) -> int:
    """Multiplicity of lam in mu (x) wedge^r(V) for SO_2n+1."""
    count = sum(1 for xi in dual_pieri_set(mu, lam, r, n)
                if dual_condition_iv(mu, xi, lam, n, True))
    if r >= 1:
        count += sum(1 for xi in dual_pieri_set(mu, lam, r - 1, n)
                     if dual_condition_iv(mu, xi, lam, n, False))
    return count


def so_even_dual_pieri_coeff(mu: Sequence[int], lam: Sequence[int], r: int, n: int) -> int:
    """Coefficient of S_[lam] in S_[mu] * E_r for SO_2n."""
    lengths = {n, len(mu), len(lam)}
    count = sum(1 for xi in dual_pieri_set(mu, lam, r, n) if len(xi) in lengths)
    return so_multiplicity_factor(lam, mu, n) * count


# ------------------------------------------------------------------- drivers

def _pieri_support(mu: Partition, sizes, max_length: Optional[int]) -> set:
    out = set()
    for s in sizes:
        for xi in remove_horizontal_strip(mu):
            gone = sum(mu) - sum(xi)
            if gone > s:
                continue
            out.update(add_horizontal_strip(xi, s - gone, max_length))
    return out


def _dual_support(mu: Partition, sizes, n: int) -> set:
    out = set()
    for s in sizes:
        for up in range(s + 1):
            for xi in add_vertical_strip(mu, up, n):
                out.update(remove_vertical_strip(xi, s - up))
    return out


def _gl_pieri(mu: Partition, r: int, N: int, vertical: bool) -> dict:
    adder = add_vertical_strip if vertical else add_horizontal_strip
    return {lam: 1 for lam in adder(mu, r, N)}


TENSOR_KINDS = ("sym", "row", "ext")


@lru_cache(maxsize=None)
def _tensor(g: GroupId, mu: Partition, kind: str, r: int) -> tuple:
    fam, n = g.family, g.rank
    if fam == "GL":
        if kind == "row":
            kind = "sym"
        return tuple(_gl_pieri(mu, r, n, kind == "ext").items())
    if fam == "O":
        if kind == "ext":
            if r > n:
                return ()
            return tuple(formal_nl_product(g, mu, column(r)).coeffs.items())
        sizes = range(r, -1, -2) if kind == "sym" else (r,)
        support = {lam for lam in _pieri_support(mu, sizes, None) if in_par_o(lam, n)}
        rule = o_sym_power_mult if kind == "sym" else o_pieri_mult
        acc = {lam: rule(mu, lam, r, n) for lam in support}
        return tuple((lam, c) for lam, c in acc.items() if c)
    if kind == "ext":
        if fam == "SOodd" and r > 2 * n + 1:
            return ()
        sizes = (r, r - 1) if fam == "SOodd" and r else (r,)
        support = _dual_support(mu, sizes, n)
        rule = {"Sp": sp_dual_pieri_mult, "SOodd": so_odd_dual_pieri_mult,
                "SOeven": so_even_dual_pieri_coeff}[fam]
        acc = {lam: rule(mu, lam, r, n) for lam in support}
        return tuple((lam, c) for lam, c in acc.items() if c)
    # Sp and SO with S^r(V) or the one-row irreducible
    rule = {"Sp": sp_pieri_mult, "SOodd": so_odd_pieri_mult, "SOeven": so_even_pieri_coeff}[fam]
    if fam == "Sp":
        rows = (r,)  # S^r(V) is irreducible for Sp_2n
    else:
        rows = range(r, -1, -2) if kind == "sym" else (r,)
    acc: dict = {}
    for row in rows:
        sizes = (row, row - 1) if fam == "SOodd" and row else (row,)
        for lam in _pieri_support(mu, sizes, n):
            c = rule(mu, lam, row, n)
            if c:
                acc[lam] = acc.get(lam, 0) + c
    return tuple(acc.items())


def tensor_decomposition(g: GroupId, mu: Sequence[int], kind: str, r: int) -> RepRingElement:
    """Decompose S[mu] times a power of the defining representation.

    ``kind`` is ``"sym"`` for S^r(V), ``"ext"`` for wedge^r(V) and ``"row"`` for
    the one-row irreducible V[(r)] (equal to S^r(V) for GL and Sp).  For O_N
    the exterior power goes through the formal Newell-Littlewood product, as
    no closed Pieri-type rule is used for it.
    """
    if kind not in TENSOR_KINDS:
        raise ValueError(f"kind must be one of {TENSOR_KINDS}, not {kind!r}")
    _check_r(r)
    mu = g.check(mu)
    return RepRingElement(g, dict(_tensor(g, mu, kind, r)), check=False)


def standard_pieri(g: GroupId, mu: Sequence[int]) -> RepRingElement:
    """S[mu] times the defining representation, by adding or removing one cell."""
    mu = g.check(mu)
    fam, n = g.family, g.rank
    acc: dict = {}
    if fam == "GL":
        for lam in add_cell_neighbors(mu):
            if len(lam) <= n:
                acc[lam] = 1
        return RepRingElement(g, acc, check=False)
    for lam in add_cell_neighbors(mu) + remove_cell_neighbors(mu):
        if not g.admits(lam):
            continue
        acc[lam] = so_multiplicity_factor(lam, mu, n) if fam == "SOeven" else 1
    if fam == "SOodd" and len(mu) == n:
        acc[mu] = 1
    return RepRingElement(g, acc, check=False)


def rest_mult(family: str, lam: Sequence[int], m: int, rank: int) -> int:
    """Multiplicity of V<(m)> (Sp_2n, rank n) or V[(1^m)] (O_N, rank N) in the
    restriction of the GL irreducible V_lam."""
    lam = Partition(lam)
    if family == "Sp":
        if len(lam) > 2 * rank:
            raise LabelError(f"{format_partition(lam)} has more than {2 * rank} rows")
        return int(odd_column_count(lam) == m)
    if family == "O":
        if len(lam) > rank:
            raise LabelError(f"{format_partition(lam)} has more than {rank} rows")
        return int(odd_row_count(lam) == m)
    raise ValueError(f"family must be 'Sp' or 'O', not {family!r}")

"""Tableaux as partition chains, and both sides of the equinumeration identities.

Column-strict and row-strict tableaux are chains of horizontal or vertical
strips starting at the empty partition.  Down-up and up-down tableaux pass
through an intermediate partition at every step; oscillating tableaux add or
remove one cell at a time.  Counting is done by dynamic programming over the
current shape; the ``enumerate_*`` functions list the chains themselves.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Iterable, Iterator, Optional, Sequence

from .characters import GroupId
from .partitions import (
    EMPTY,
    Partition,
    add_cell_neighbors,
    add_horizontal_strip,
    add_vertical_strip,
    column,
    format_partition,
    in_par_o,
    odd_column_count,
    odd_row_count,
    remove_cell_neighbors,
    remove_horizontal_strip,
    remove_vertical_strip,
)
from .pieri import dual_condition_iv, o_condition_iii, tensor_decomposition

__all__ = [
    "PartitionChain",
    "strict_tableaux_by_shape",
    "count_strict_tableaux",
    "enumerate_strict_tableaux",
    "enumerate_alternating",
    "count_alternating",
    "enumerate_oscillating",
    "count_oscillating",
    "statistic_d",
    "main2_count",
    "burrill_count",
    "iterated_pieri_multiplicity",
    "MAIN2_VARIANTS",
    "BURRILL_VARIANTS",
]

CHAIN_KINDS = ("increasing", "down-up", "up-down", "oscillating")
STRIPS = ("horizontal", "vertical", "single-cell")


@dataclass(frozen=True)
class PartitionChain:
    steps: tuple
    kind: str
    strip: str

    def __post_init__(self):
        if self.kind not in CHAIN_KINDS:
            raise ValueError(f"unknown chain kind {self.kind!r}")
        if self.strip not in STRIPS:
            raise ValueError(f"unknown strip type {self.strip!r}")

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def shape(self) -> Partition:
        return self.steps[-1]

    def to_json(self) -> list:
        return [list(p) for p in self.steps]

    def __str__(self) -> str:
        return "(" + ", ".join(format_partition(p) for p in self.steps) + ")"


# ------------------------------------------------------------ strict tableaux

def _check_kind(kind: str) -> str:
    if kind not in ("column", "row"):
        raise ValueError(f"kind must be 'column' or 'row', not {kind!r}")
    return kind


def _check_alpha(alpha: Sequence[int]) -> tuple:
    alpha = tuple(int(a) for a in alpha)
    if any(a < 0 for a in alpha):
        raise ValueError("weights must be nonnegative")
    return alpha


@lru_cache(maxsize=None)
def _strict_counts(kind: str, alpha: tuple, max_length: Optional[int]) -> tuple:
    adder = add_horizontal_strip if kind == "column" else add_vertical_strip
    states = {EMPTY: 1}
    for a in alpha:
        nxt: dict = {}
        for lam, c in states.items():
            for new in adder(lam, a, max_length):
                nxt[new] = nxt.get(new, 0) + c
        states = nxt
    return tuple(states.items())


def strict_tableaux_by_shape(kind: str, alpha: Sequence[int],
                             max_length: Optional[int] = None) -> Dict[Partition, int]:
    """Number of column-strict (or row-strict) tableaux of weight alpha, by shape."""
    return dict(_strict_counts(_check_kind(kind), _check_alpha(alpha), max_length))


def count_strict_tableaux(kind: str, alpha: Sequence[int],
                          shape_filter: Optional[Callable[[Partition], bool]] = None,
                          max_length: Optional[int] = None) -> int:
    counts = strict_tableaux_by_shape(kind, alpha, max_length)
    return sum(c for lam, c in counts.items() if shape_filter is None or shape_filter(lam))


def enumerate_strict_tableaux(kind: str, alpha: Sequence[int],
                              shape_filter: Optional[Callable[[Partition], bool]] = None,
                              max_length: Optional[int] = None) -> Iterator[PartitionChain]:
    kind = _check_kind(kind)
    alpha = _check_alpha(alpha)
    adder = add_horizontal_strip if kind == "column" else add_vertical_strip
    strip = "horizontal" if kind == "column" else "vertical"

    def rec(i, chain):
        if i == len(alpha):
            if shape_filter is None or shape_filter(chain[-1]):
                yield PartitionChain(tuple(chain), "increasing", strip)
            return
        for new in adder(chain[-1], alpha[i], max_length):
            chain.append(new)
            yield from rec(i + 1, chain)
            chain.pop()

    yield from rec(0, [EMPTY])


# ------------------------------------------------------- down-up and up-down

@lru_cache(maxsize=None)
def _moves(mu: Partition, kind: str, strip: str, total: int) -> tuple:
    """Pairs (xi, lam) for one alternating step of the given total size."""
    out = []
    if kind == "down-up":
        remove = remove_horizontal_strip if strip == "horizontal" else remove_vertical_strip
        add = add_horizontal_strip if strip == "horizontal" else add_vertical_strip
        for down in range(min(total, sum(mu)) + 1):
            for xi in remove(mu, down):
                for lam in add(xi, total - down):
                    out.append((xi, lam))
    else:
        add = add_horizontal_strip if strip == "horizontal" else add_vertical_strip
        remove = remove_horizontal_strip if strip == "horizontal" else remove_vertical_strip
        for up in range(total + 1):
            for xi in add(mu, up):
                for lam in remove(xi, total - up):
                    out.append((xi, lam))
    return tuple(out)


def _check_alternating(kind: str, strip: str):
    if kind not in ("down-up", "up-down"):
        raise ValueError(f"kind must be 'down-up' or 'up-down', not {kind!r}")
    if strip not in ("horizontal", "vertical"):
        raise ValueError(f"strip must be 'horizontal' or 'vertical', not {strip!r}")


def _alternating_steps(mu, kind, strip, sizes, chain_filter, triple_filter, i):
    for total in sorted(set(sizes)):
        if total < 0:
            continue
        for xi, lam in _moves(mu, kind, strip, total):
            if chain_filter is not None and not (chain_filter(xi) and chain_filter(lam)):
                continue
            if triple_filter is not None and not triple_filter(i, mu, xi, lam, total):
                continue
            yield xi, lam


def enumerate_alternating(kind: str, k: int, final_shape: Sequence[int], strip: str,
                          step_sizes: Sequence[Iterable[int]],
                          chain_filter: Optional[Callable[[Partition], bool]] = None,
                          triple_filter: Optional[Callable] = None) -> Iterator[PartitionChain]:
    """Down-up or up-down tableaux of length 2k from the empty partition.

    ``step_sizes[i]`` lists the admissible values of the two skew sizes summed
    at step i + 1.  ``triple_filter(i, mu, xi, lam, total)`` is an optional
    extra condition on each step, with i counted from 1.
    """
    _check_alternating(kind, strip)
    if len(step_sizes) != k:
        raise ValueError("need one set of step sizes per step")
    final = Partition(final_shape)
    sizes = [tuple(s) for s in step_sizes]

    def rec(i, chain):
        if i == k:
            if chain[-1] == final:
                yield PartitionChain(tuple(chain), kind, strip)
            return
        for xi, lam in _alternating_steps(chain[-1], kind, strip, sizes[i],
                                          chain_filter, triple_filter, i + 1):
            chain.extend((xi, lam))
            yield from rec(i + 1, chain)
            del chain[-2:]

    if chain_filter is not None and not chain_filter(EMPTY):
        return
    yield from rec(0, [EMPTY])


def count_alternating(kind: str, k: int, final_shape: Sequence[int], strip: str,
                      step_sizes: Sequence[Iterable[int]],
                      chain_filter: Optional[Callable[[Partition], bool]] = None,
                      triple_filter: Optional[Callable] = None,
                      weight: Optional[Callable[[Partition, Partition], int]] = None) -> int:
    """Weighted count of the chains listed by :func:`enumerate_alternating`.

    ``weight(mu, lam)`` multiplies in a factor per step (default 1).
    """
    _check_alternating(kind, strip)
    if len(step_sizes) != k:
        raise ValueError("need one set of step sizes per step")
    if chain_filter is not None and not chain_filter(EMPTY):
        return 0
    states = {EMPTY: 1}
    for i in range(k):
        nxt: dict = {}
        for mu, c in states.items():
            for _, lam in _alternating_steps(mu, kind, strip, tuple(step_sizes[i]),
                                             chain_filter, triple_filter, i + 1):
                w = c if weight is None else c * weight(mu, lam)
                if w:
                    nxt[lam] = nxt.get(lam, 0) + w
        states = nxt
    return states.get(Partition(final_shape), 0)


# ---------------------------------------------------------------- oscillating

def _osc_moves(lam: Partition, allow_stay: bool) -> list:
    moves = add_cell_neighbors(lam) + remove_cell_neighbors(lam)
    if allow_stay:
        moves.append(lam)
    return moves


def enumerate_oscillating(k: int, final_shape: Sequence[int],
                          membership_filter: Optional[Callable[[Partition], bool]] = None,
                          stay_filter: Optional[Callable[[Partition], bool]] = None
                          ) -> Iterator[PartitionChain]:
    """Chains of k one-cell steps from the empty partition to ``final_shape``.

    With ``stay_filter``, a step may also keep the shape unchanged when the
    filter accepts it.
    """
    final = Partition(final_shape)
    ok = membership_filter or (lambda lam: True)
    if not ok(EMPTY):
        return

    def rec(i, chain):
        cur = chain[-1]
        # parity and distance pruning
        if stay_filter is None and (k - i < abs(sum(final) - sum(cur))):
            return
        if i == k:
            if cur == final:
                yield PartitionChain(tuple(chain), "oscillating", "single-cell")
            return
        stay = stay_filter is not None and stay_filter(cur)
        for nxt in _osc_moves(cur, stay):
            if ok(nxt):
                chain.append(nxt)
                yield from rec(i + 1, chain)
                chain.pop()

    yield from rec(0, [EMPTY])


def count_oscillating(k: int, final_shape: Sequence[int],
                      membership_filter: Optional[Callable[[Partition], bool]] = None,
                      stay_filter: Optional[Callable[[Partition], bool]] = None,
                      weight: Optional[Callable[[Partition, Partition], int]] = None) -> int:
    ok = membership_filter or (lambda lam: True)
    if not ok(EMPTY):
        return 0
    states = {EMPTY: 1}
    for _ in range(k):
        nxt: dict = {}
        for cur, c in states.items():
            stay = stay_filter is not None and stay_filter(cur)
            for new in _osc_moves(cur, stay):
                if ok(new):
                    w = c if weight is None else c * weight(cur, new)
                    if w:
                        nxt[new] = nxt.get(new, 0) + w
        states = nxt
    return states.get(Partition(final_shape), 0)


def statistic_d(chain: PartitionChain, n: int) -> int:
    """Steps where the length drops from n to below n.

    Up-down tableaux compare lambda^(2i-2) with lambda^(2i); oscillating
    tableaux compare consecutive shapes.
    """
    steps = chain.steps
    if chain.kind == "up-down":
        pairs = zip(steps[0:-2:2], steps[2::2])
    elif chain.kind == "oscillating":
        pairs = zip(steps, steps[1:])
    else:
        raise ValueError(f"d is defined for up-down and oscillating chains, not {chain.kind}")
    return sum(1 for a, b in pairs if len(a) == n and len(b) < n)


# ----------------------------------------------------- equinumeration sides

MAIN2_VARIANTS = (1, 2, 3, 4, 5)
BURRILL_VARIANTS = (1, 2, 3, 4)


def _drop_weight(n: int):
    return lambda a, b: 2 if len(a) == n and len(b) < n else 1


def _length_at_most(n: int):
    return lambda lam: len(lam) <= n


def _check_params(variant: int, variants, rank: int, m: int, side: str):
    if variant not in variants:
        raise ValueError(f"variant must be one of {variants}, not {variant!r}")
    if side not in ("a", "b"):
        raise ValueError(f"side must be 'a' or 'b', not {side!r}")
    if rank < 0 or m < 0:
        raise ValueError("rank parameter and m must be nonnegative")


def _side_b_filter(variant: int, rank: int, m: int):
    """(tableau kind, length bound, shape filter) for the strict-tableau side."""
    if variant == 1:
        return "column", 2 * rank, lambda lam: odd_column_count(lam) == m
    if variant == 2:
        return "row", 2 * rank, lambda lam: odd_column_count(lam) == m
    if variant == 3:
        return "column", rank, lambda lam: odd_row_count(lam) == m
    if variant == 4:
        return "row", 2 * rank + 1, lambda lam: odd_row_count(lam) in (m, 2 * rank + 1 - m)
    return "row", 2 * rank, lambda lam: odd_row_count(lam) in (m, 2 * rank - m)


def _main2_a(variant: int, alpha: tuple, rank: int, m: int) -> int:
    k = len(alpha)
    n = rank
    if variant == 1:
        return count_alternating("down-up", k, (m,), "horizontal",
                                 [(a,) for a in alpha], _length_at_most(n))
    if variant == 2:
        return count_alternating("up-down", k, (m,), "vertical",
                                 [(a,) for a in alpha], _length_at_most(n))
    if variant == 3:
        N = rank

        def cond(i, mu, xi, lam, total):
            return o_condition_iii(mu, xi, lam, N)

        return count_alternating("down-up", k, column(m), "horizontal",
                                 [range(a, -1, -2) for a in alpha],
                                 lambda lam: in_par_o(lam, N), cond)
    if variant == 4:
        def cond(i, mu, xi, lam, total):
            return dual_condition_iv(mu, xi, lam, n, total == alpha[i - 1])

        return count_alternating("up-down", k, column(m), "vertical",
                                 [(a, a - 1) for a in alpha], _length_at_most(n), cond)

    def cond5(i, mu, xi, lam, total):
        return len(xi) in (n, len(mu), len(lam))

    return count_alternating("up-down", k, column(m), "vertical", [(a,) for a in alpha],
                             _length_at_most(n), cond5, weight=_drop_weight(n))


def main2_count(variant: int, side: str, alpha: Sequence[int], rank: int, m: int) -> int:
    """One side of the down-up/up-down versus strict tableau equinumeration.

    ``rank`` is n for variants 1, 2, 4, 5 and N for variant 3.  Variants 4 and 5
    need m <= n, since the target shape (1^m) must have at most n rows.
    """
    _check_params(variant, MAIN2_VARIANTS, rank, m, side)
    alpha = _check_alpha(alpha)
    if variant in (4, 5) and m > rank:
        raise ValueError(f"variant {variant} needs m <= n (got m={m}, n={rank})")
    if side == "a":
        return _main2_a(variant, alpha, rank, m)
    kind, bound, shape_ok = _side_b_filter(variant, rank, m)
    return count_strict_tableaux(kind, alpha, shape_ok, max_length=bound)


def burrill_count(variant: int, side: str, k: int, rank: int, m: int) -> int:
    """One side of the oscillating versus standard tableau equinumeration.

    ``rank`` is n for variants 1, 3, 4 and N for variant 2.
    """
    _check_params(variant, BURRILL_VARIANTS, rank, m, side)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if variant in (3, 4) and m > rank:
        raise ValueError(f"variant {variant} needs m <= n (got m={m}, n={rank})")
    n = rank
    if side == "b":
        main_variant = {1: 1, 2: 3, 3: 4, 4: 5}[variant]
        kind, bound, shape_ok = _side_b_filter(main_variant, rank, m)
        # standard tableaux: either strictness gives the same chains
        return count_strict_tableaux(kind, (1,) * k, shape_ok, max_length=bound)
    if variant == 1:
        return count_oscillating(k, (m,), _length_at_most(n))
    if variant == 2:
        return count_oscillating(k, column(m), lambda lam: in_par_o(lam, n))
    if variant == 3:
        return count_oscillating(k, column(m), _length_at_most(n),
                                 stay_filter=lambda lam: len(lam) == n)
    return count_oscillating(k, column(m), _length_at_most(n), weight=_drop_weight(n))


# ---------------------------------------------------------- iterated Pieri

_PIERI_SETUP = {
    # variant: (family, kind, target is a column)
    1: ("Sp", "sym", False),
    2: ("Sp", "ext", False),
    3: ("O", "sym", True),
    4: ("SOodd", "ext", True),
    5: ("SOeven", "ext", True),
}


def iterated_pieri_multiplicity(variant: int, alpha: Sequence[int], rank: int, m: int) -> int:
    """Coefficient of the target label after tensoring the trivial representation
    with each power of V in turn, using the Pieri-rule drivers."""
    if variant not in _PIERI_SETUP:
        raise ValueError(f"variant must be one of {tuple(_PIERI_SETUP)}")
    family, kind, col = _PIERI_SETUP[variant]
    g = GroupId(family, rank)
    target = column(m) if col else Partition((m,) if m else ())
    if not g.admits(target):
        return 0
    states = {EMPTY: 1}
    for a in _check_alpha(alpha):
        nxt: dict = {}
        for mu, c in states.items():
            for lam, d in tensor_decomposition(g, mu, kind, a).coeffs.items():
                nxt[lam] = nxt.get(lam, 0) + c * d
        states = {lam: c for lam, c in nxt.items() if c}
    return states.get(target, 0)

"""Irreducible characters of GL_N, Sp_2n, SO_2n+1 and SO_2n as Laurent polynomials.

Characters come from determinant ratios (bialternant for GL_N, the f^B/f^C/f^D
matrices for the other families).  Type B works in the doubled variable
x = y^2 so that every intermediate stays integral; exponents are halved at
the end.

For SO_2n the basis used is S_[lambda], the restriction of the O_2n character.
When l(lambda) = n this is the sum of two irreducible characters; it is kept
as one basis element and not split.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping, Optional, Sequence

from .kernels import laurent_add_scaled
from .laurent import (
    InexactDivisionError,
    LaurentPolynomial,
    dominant_key,
    lp_determinant,
    lp_dominant_monomial,
    lp_exact_divide,
    lp_substitute,
)
from .partitions import Partition, format_partition, in_par_o

__all__ = [
    "GroupId",
    "RepRingElement",
    "DecompositionError",
    "LabelError",
    "f_poly",
    "irreducible_character",
    "power_character",
    "decompose_character",
    "restrict_gl_character",
    "dimension",
    "eigenvalues",
    "character_of",
]

FAMILIES = ("GL", "Sp", "SOodd", "SOeven", "O")


class LabelError(ValueError):
    """A partition does not index a representation of the given group."""


class DecompositionError(ValueError):
    """A Laurent polynomial is not an integer combination of basis characters."""


@dataclass(frozen=True, order=True)
class GroupId:
    """A classical group.

    ``rank`` is N for GL_N and O_N, and n for Sp_2n, SO_2n+1 and SO_2n.
    """

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown group family {self.family!r}")
        if self.rank < 1:
            raise ValueError("rank parameter must be at least 1")

    @classmethod
    def gl(cls, N): return cls("GL", N)

    @classmethod
    def sp(cls, n): return cls("Sp", n)

    @classmethod
    def so_odd(cls, n): return cls("SOodd", n)

    @classmethod
    def so_even(cls, n): return cls("SOeven", n)

    @classmethod
    def o(cls, N): return cls("O", N)

    @property
    def connected(self) -> bool:
        return self.family != "O"

    @property
    def nvars(self) -> int:
        if self.family == "O":
            raise ValueError("O_N has no eigenvalue model here")
        return self.rank

    @property
    def dim_defining(self) -> int:
        f, r = self.family, self.rank
        return {"GL": r, "O": r, "Sp": 2 * r, "SOodd": 2 * r + 1, "SOeven": 2 * r}[f]

    def admits(self, lam: Sequence[int]) -> bool:
        if self.family == "O":
            return in_par_o(lam, self.rank)
        return len(lam) <= self.rank

    def check(self, lam: Sequence[int]) -> Partition:
        lam = Partition(lam)
        if not self.admits(lam):
            raise LabelError(f"{format_partition(lam)} is not a label for {self}")
        return lam

    def __str__(self) -> str:
        f, r = self.family, self.rank
        return {"GL": f"GL_{r}", "O": f"O_{r}", "Sp": f"Sp_{2 * r}",
                "SOodd": f"SO_{2 * r + 1}", "SOeven": f"SO_{2 * r}"}[f]


class RepRingElement:
    """Finite integer combination of basis labels of one group."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group: GroupId, coeffs: Optional[Mapping] = None, *, check=True):
        self.group = group
        clean: dict = {}
        for lam, c in (coeffs or {}).items():
            lam = group.check(lam) if check else Partition(lam)
            if c:
                clean[lam] = clean.get(lam, 0) + c
                if not clean[lam]:
                    del clean[lam]
        self.coeffs = clean

    def __getitem__(self, lam) -> int:
        return self.coeffs.get(Partition(lam), 0)

    def get(self, lam, default=0) -> int:
        return self.coeffs.get(Partition(lam), default)

    def items(self) -> list:
        """Terms ordered by size, then reverse-lexicographically."""
        return sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), tuple(-p for p in kv[0])))

    def __iter__(self) -> Iterator:
        return iter(lam for lam, _ in self.items())

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepRingElement):
            return NotImplemented
        return self.group == other.group and self.coeffs == other.coeffs

    def __add__(self, other: "RepRingElement") -> "RepRingElement":
        if self.group != other.group:
            raise ValueError("cannot add elements of different representation rings")
        acc = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            acc[lam] = acc.get(lam, 0) + c
        return RepRingElement(self.group, acc, check=False)

    def scale(self, k: int) -> "RepRingElement":
        return RepRingElement(self.group, {lam: k * c for lam, c in self.coeffs.items()},
                              check=False)

    def to_json(self) -> dict:
        return {format_partition(lam): c for lam, c in self.items()}

    def __repr__(self) -> str:
        body = ", ".join(f"{format_partition(lam)}: {c}" for lam, c in self.items())
        return f"RepRingElement({self.group}, {{{body}}})"


def f_poly(kind: str, r: int) -> LaurentPolynomial:
    """One-variable f^B, f^C or f^D; type B uses the doubled variable."""
    if kind == "C":
        return (LaurentPolynomial.monomial((r + 1,)) - LaurentPolynomial.monomial((-r - 1,))
                if r >= 0 else LaurentPolynomial.zero(1))
    if kind == "B":
        return (LaurentPolynomial.monomial((2 * r + 1,)) - LaurentPolynomial.monomial((-2 * r - 1,))
                if r >= 0 else LaurentPolynomial.zero(1))
    if kind == "D":
        if r > 0:
            return LaurentPolynomial.monomial((r,)) + LaurentPolynomial.monomial((-r,))
        return LaurentPolynomial.one(1) if r == 0 else LaurentPolynomial.zero(1)
    raise ValueError(f"unknown type {kind!r}")


def _embed(p: LaurentPolynomial, i: int, n: int) -> LaurentPolynomial:
    """A one-variable polynomial placed in variable i of n."""
    terms = {}
    for (k,), c in p.terms.items():
        e = [0] * n
        e[i] = k
        terms[tuple(e)] = c
    return LaurentPolynomial(n, terms, _trusted=True)


_TYPE = {"Sp": "C", "SOodd": "B", "SOeven": "D"}


def _weyl_matrix(kind: str, shifted: Sequence[int], n: int):
    return [[_embed(f_poly(kind, s), i, n) for s in shifted] for i in range(n)]


@lru_cache(maxsize=None)
def _denominator(family: str, n: int) -> LaurentPolynomial:
    if family == "GL":
        return lp_determinant([[LaurentPolynomial.variable(i, n, n - 1 - j) for j in range(n)]
                               for i in range(n)])
    return lp_determinant(_weyl_matrix(_TYPE[family], [n - 1 - j for j in range(n)], n))


@lru_cache(maxsize=None)
def _character(g: GroupId, lam: Partition) -> LaurentPolynomial:
    n = g.rank
    parts = list(lam) + [0] * (n - len(lam))
    shifted = [parts[j] + n - 1 - j for j in range(n)]
    if g.family == "GL":
        num = lp_determinant([[LaurentPolynomial.variable(i, n, s) for s in shifted]
                              for i in range(n)])
    else:
        num = lp_determinant(_weyl_matrix(_TYPE[g.family], shifted, n))
    try:
        q = lp_exact_divide(num, _denominator(g.family, n))
    except InexactDivisionError as exc:
        raise ArithmeticError(f"character ratio for {lam} on {g} is not exact") from exc
    if g.family == "SOodd":
        for e in q.terms:
            if any(k % 2 for k in e):
                raise ArithmeticError("odd exponent left after halving a type B character")
        q = q.map_exponents(lambda e: tuple(k // 2 for k in e))
    return q


def irreducible_character(g: GroupId, lam: Sequence[int]) -> LaurentPolynomial:
    """Character of the label ``lam``; for SO_2n this is S_[lam]."""
    if not g.connected:
        raise ValueError("O_N characters are handled through the modification rules")
    lam = g.check(lam)
    return _character(g, lam)


def eigenvalues(g: GroupId) -> list:
    """Eigenvalues of a torus element, as monomials in the torus variables."""
    n = g.nvars
    if g.family == "GL":
        return [LaurentPolynomial.variable(i, n) for i in range(n)]
    vals = [LaurentPolynomial.variable(i, n) for i in range(n)]
    vals += [LaurentPolynomial.variable(i, n, -1) for i in range(n)]
    if g.family == "SOodd":
        vals.append(LaurentPolynomial.one(n))
    return vals


@lru_cache(maxsize=None)
def _power_table(g: GroupId, kind: str, r: int) -> tuple:
    """(P_0, ..., P_r) for the eigenvalue multiset, P = complete or elementary."""
    n = g.nvars
    vals = eigenvalues(g)
    table = [LaurentPolynomial.one(n)] + [LaurentPolynomial.zero(n)] * r
    for v in vals:
        if kind == "sym":
            # h_s(new) = sum_j h_{s-j}(old) v^j, done in place by increasing s
            for s in range(1, r + 1):
                table[s] = table[s] + v * table[s - 1]
        else:
            for s in range(r, 0, -1):
                table[s] = table[s] + v * table[s - 1]
    return tuple(table)


def power_character(g: GroupId, kind: str, r: int) -> LaurentPolynomial:
    """H_r (``kind='sym'``) or E_r (``kind='ext'``) of the defining representation."""
    if kind not in ("sym", "ext"):
        raise ValueError(f"kind must be 'sym' or 'ext', not {kind!r}")
    if r < 0:
        return LaurentPolynomial.zero(g.nvars)
    return _power_table(g, kind, r)[r]


def _count_labels(n: int, max_size: int) -> int:
    """Number of partitions with at most n parts and size <= max_size."""
    # ways[s] over partitions with parts <= n (conjugate count)
    ways = [1] + [0] * max_size
    for part in range(1, n + 1):
        for s in range(part, max_size + 1):
            ways[s] += ways[s - part]
    return sum(ways)


def decompose_character(g: GroupId, p: LaurentPolynomial) -> RepRingElement:
    """Write ``p`` as an integer combination of basis characters of ``g``.

    Repeatedly takes the dominant monomial (graded lex on sorted exponents),
    reads off its label and coefficient, and subtracts that multiple of the
    basis character.
    """
    if not g.connected:
        raise ValueError("decomposition is only defined for connected groups")
    if p.nvars != g.nvars:
        raise ValueError(f"{g} characters live in {g.nvars} variables, got {p.nvars}")
    type_d = g.family == "SOeven"
    residual = dict(p.terms)
    coeffs: dict = {}
    top = lp_dominant_monomial(p, type_d)
    if top is None:
        return RepRingElement(g, {}, check=False)
    cap = _count_labels(g.rank, max(0, sum(dominant_key(top[0], type_d)))) + 1
    steps = 0
    while residual:
        steps += 1
        if steps > cap:
            raise DecompositionError(f"no termination within {cap} steps; not a character")
        current = LaurentPolynomial(p.nvars, residual, _trusted=True)
        exp, coef = lp_dominant_monomial(current, type_d)
        key = dominant_key(exp, type_d)
        if key and key[-1] < 0:
            raise DecompositionError(
                f"residual has no dominant representative (top exponent {exp})")
        lam = Partition(key)
        # the coefficient is read at the dominant exponent itself
        coef = residual.get(key, 0)
        if coef == 0:
            raise DecompositionError(f"residual is not Weyl-symmetric at {exp}")
        coeffs[lam] = coeffs.get(lam, 0) + coef
        laurent_add_scaled(residual, _character(g, lam).terms, -coef)
    return RepRingElement(g, coeffs, check=False)


def character_of(g: GroupId, elem: RepRingElement | Mapping) -> LaurentPolynomial:
    """Laurent polynomial of a combination of basis characters."""
    items = elem.coeffs.items() if isinstance(elem, RepRingElement) else elem.items()
    acc: dict = {}
    for lam, c in items:
        laurent_add_scaled(acc, irreducible_character(g, lam).terms, c)
    return LaurentPolynomial(g.nvars, acc, _trusted=True)


@lru_cache(maxsize=None)
def _restricted(lam: Partition, g: GroupId) -> LaurentPolynomial:
    vals = eigenvalues(g)
    M = len(vals)
    gl_char = _character(GroupId.gl(M), lam)
    return lp_substitute(gl_char, vals)


def restrict_gl_character(lam: Sequence[int], g: GroupId) -> LaurentPolynomial:
    """Schur polynomial s_lam evaluated on the eigenvalues of ``g``."""
    lam = Partition(lam)
    M = len(eigenvalues(g))
    if len(lam) > M:
        raise LabelError(f"{format_partition(lam)} has more than {M} rows")
    return _restricted(lam, g)


def dimension(g: GroupId, elem: RepRingElement | Mapping) -> int:
    items = elem.coeffs.items() if isinstance(elem, RepRingElement) else elem.items()
    return sum(c * irreducible_character(g, lam).evaluate_at_ones() for lam, c in items)

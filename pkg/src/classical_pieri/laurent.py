"""Exact integer Laurent polynomials in finitely many variables.

Terms are kept in a dict mapping exponent tuples (possibly negative entries)
to nonzero Python ints.  Values are treated as immutable.
"""

from __future__ import annotations

import heapq
from typing import Callable, Iterable, Optional, Sequence

from . import kernels

__all__ = [
    "LaurentPolynomial",
    "InexactDivisionError",
    "lp_arith",
    "lp_determinant",
    "lp_exact_divide",
    "lp_substitute",
    "lp_dominant_monomial",
    "dominant_key",
    "subset_determinant",
]


class InexactDivisionError(ArithmeticError):
    """Raised when a Laurent division leaves a nonzero remainder."""


class LaurentPolynomial:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Optional[dict] = None, *, _trusted: bool = False):
        self.nvars = nvars
        if terms is None:
            self.terms = {}
        elif _trusted:
            self.terms = terms
        else:
            clean = {}
            for e, c in terms.items():
                e = tuple(int(x) for x in e)
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} does not have {nvars} entries")
                if c:
                    clean[e] = clean.get(e, 0) + int(c)
                    if not clean[e]:
                        del clean[e]
            self.terms = clean
        self._hash = None

    # constructors

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPolynomial":
        return cls(nvars, {}, _trusted=True)

    @classmethod
    def constant(cls, value: int, nvars: int) -> "LaurentPolynomial":
        return cls(nvars, {(0,) * nvars: value} if value else {}, _trusted=True)

    @classmethod
    def one(cls, nvars: int) -> "LaurentPolynomial":
        return cls.constant(1, nvars)

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff: int = 1) -> "LaurentPolynomial":
        e = tuple(exponents)
        return cls(len(e), {e: coeff} if coeff else {}, _trusted=True)

    @classmethod
    def variable(cls, index: int, nvars: int, power: int = 1) -> "LaurentPolynomial":
        e = [0] * nvars
        e[index] = power
        return cls.monomial(e)

    # basic protocol

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self.nvars)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            if other.nvars != self.nvars:
                raise ValueError(
                    f"variable-count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other, self.nvars)
        raise TypeError(f"cannot combine LaurentPolynomial with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self.terms)
        kernels.laurent_add_scaled(acc, other.terms, 1)
        return LaurentPolynomial(self.nvars, acc, _trusted=True)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        acc = dict(self.terms)
        kernels.laurent_add_scaled(acc, other.terms, -1)
        return LaurentPolynomial(self.nvars, acc, _trusted=True)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return LaurentPolynomial(self.nvars, {e: -c for e, c in self.terms.items()},
                                 _trusted=True)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPolynomial.zero(self.nvars)
            return LaurentPolynomial(self.nvars, {e: c * other for e, c in self.terms.items()},
                                     _trusted=True)
        other = self._coerce(other)
        return LaurentPolynomial(self.nvars, kernels.laurent_mul(self.terms, other.terms),
                                 _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined for monomials; use shift")
        result = LaurentPolynomial.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exponents: Sequence[int]) -> "LaurentPolynomial":
        """Multiply by the monomial x**exponents."""
        acc: dict = {}
        kernels.laurent_add_scaled(acc, self.terms, 1, tuple(exponents))
        return LaurentPolynomial(self.nvars, acc, _trusted=True)

    def coefficient(self, exponents: Sequence[int]) -> int:
        return self.terms.get(tuple(exponents), 0)

    def evaluate_at_ones(self) -> int:
        return sum(self.terms.values())

    def map_exponents(self, fn: Callable[[tuple], tuple], nvars: Optional[int] = None
                      ) -> "LaurentPolynomial":
        """Apply ``fn`` to every exponent vector, collecting equal images."""
        nv = self.nvars if nvars is None else nvars
        acc: dict = {}
        for e, c in self.terms.items():
            e2 = tuple(fn(e))
            v = acc.get(e2, 0) + c
            if v:
                acc[e2] = v
            else:
                acc.pop(e2, None)
        return LaurentPolynomial(nv, acc, _trusted=True)

    def min_exponents(self) -> tuple:
        if not self.terms:
            return (0,) * self.nvars
        return tuple(min(col) for col in zip(*self.terms))

    def leading_term(self) -> tuple:
        """Lex-largest exponent and its coefficient."""
        e = max(self.terms)
        return e, self.terms[e]

    def render(self) -> str:
        """Deterministic debug string such as ``3*x1^2*x2^-1 - 1``."""
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            factors = []
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(f"x{i + 1}")
                elif k:
                    factors.append(f"x{i + 1}^{k}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.nvars}, {self.render()})"


def lp_arith(a: LaurentPolynomial, b: LaurentPolynomial, op: str) -> LaurentPolynomial:
    if a.nvars != b.nvars:
        raise ValueError(f"variable-count mismatch: {a.nvars} vs {b.nvars}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def subset_determinant(matrix: Sequence[Sequence], zero, one):
    """Determinant by Laplace expansion memoized over column subsets.

    Works over any commutative ring whose elements support ``+``, ``-`` and
    ``*``; entries that compare equal to ``zero`` are skipped.  Cost is
    O(2^n n) ring multiplications, fine for the n <= 8 used here.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return one
    layer = {0: one}
    for k in range(n):
        row = matrix[k]
        nxt: dict = {}
        for mask, val in layer.items():
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    continue
                entry = row[j]
                if _is_zero(entry, zero):
                    continue
                higher = bin(mask >> (j + 1)).count("1")
                term = val * entry
                if higher % 2:
                    term = -term
                key = mask | bit
                prev = nxt.get(key)
                nxt[key] = term if prev is None else prev + term
        layer = nxt
        if not layer:
            return zero
    return layer.get((1 << n) - 1, zero)


def _is_zero(entry, zero) -> bool:
    if isinstance(entry, int):
        return entry == 0
    try:
        return entry.is_zero()
    except AttributeError:
        return entry == zero


def lp_determinant(matrix: Sequence[Sequence[LaurentPolynomial]]) -> LaurentPolynomial:
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        raise ValueError("empty matrix has no variable count; handle n = 0 at the call site")
    nvars = matrix[0][0].nvars
    for row in matrix:
        for entry in row:
            if entry.nvars != nvars:
                raise ValueError("matrix entries have inconsistent variable counts")
    return subset_determinant(matrix, LaurentPolynomial.zero(nvars),
                              LaurentPolynomial.one(nvars))


def lp_exact_divide(num: LaurentPolynomial, den: LaurentPolynomial) -> LaurentPolynomial:
    """Quotient of an exact Laurent division.

    Both operands are shifted so every variable has minimum exponent zero;
    the shifted quotient is then an ordinary polynomial, found by lex-order
    leading-term division.  Any leftover raises :class:`InexactDivisionError`.
    """
    if num.nvars != den.nvars:
        raise ValueError(f"variable-count mismatch: {num.nvars} vs {den.nvars}")
    if den.is_zero():
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    nv = num.nvars
    if num.is_zero():
        return LaurentPolynomial.zero(nv)
    nshift = num.min_exponents()
    dshift = den.min_exponents()
    rem = dict(num.shift([-s for s in nshift]).terms)
    d = den.shift([-s for s in dshift]).terms
    dlead = max(d)
    dcoef = d[dlead]
    neg_d = {e: -c for e, c in d.items()}
    quotient: dict = {}
    heap = [tuple(-x for x in e) for e in rem]
    heapq.heapify(heap)
    while rem:
        while True:
            lead = tuple(-x for x in heapq.heappop(heap))
            if lead in rem:
                break
        c = rem[lead]
        q_exp = tuple(a - b for a, b in zip(lead, dlead))
        if min(q_exp) < 0 or c % dcoef:
            raise InexactDivisionError(
                f"{num.render()} is not divisible by {den.render()}")
        q_coef = c // dcoef
        quotient[q_exp] = q_coef
        kernels.laurent_add_scaled(rem, neg_d, q_coef, q_exp)
        # stale or duplicate heap entries are skipped by the membership test above
        for e in d:
            e2 = tuple(a + b for a, b in zip(e, q_exp))
            if e2 in rem:
                heapq.heappush(heap, tuple(-x for x in e2))
    shift = [a - b for a, b in zip(nshift, dshift)]
    return LaurentPolynomial(nv, quotient, _trusted=True).shift(shift)


def lp_substitute(p: LaurentPolynomial, args: Sequence[LaurentPolynomial]) -> LaurentPolynomial:
    """Compose ``p(y_1..y_M)`` with ``y_i = args[i]``; exponents of p must be >= 0."""
    if len(args) != p.nvars:
        raise ValueError(f"arity mismatch: {p.nvars} variables, {len(args)} values")
    if not args:
        return p
    nv = args[0].nvars
    if any(a.nvars != nv for a in args):
        raise ValueError("substituted values have inconsistent variable counts")
    for e in p.terms:
        if min(e, default=0) < 0:
            raise ValueError("substitution needs nonnegative exponents")
    if all(len(a.terms) == 1 for a in args):
        images = [next(iter(a.terms.items())) for a in args]
        acc: dict = {}
        for e, c in p.terms.items():
            exp = [0] * nv
            coef = c
            for (img_e, img_c), k in zip(images, e):
                if k:
                    coef *= img_c ** k
                    for t in range(nv):
                        exp[t] += img_e[t] * k
            key = tuple(exp)
            v = acc.get(key, 0) + coef
            if v:
                acc[key] = v
            else:
                acc.pop(key, None)
        return LaurentPolynomial(nv, acc, _trusted=True)
    powers: dict = {}

    def power(i, k):
        key = (i, k)
        if key not in powers:
            powers[key] = args[i] ** k
        return powers[key]

    total = LaurentPolynomial.zero(nv)
    for e, c in p.terms.items():
        term = LaurentPolynomial.constant(c, nv)
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        total = total + term
    return total


def dominant_key(exponents: Iterable[int], type_d: bool = False) -> tuple:
    """Exponents sorted decreasingly; in type-D mode the last entry is made nonnegative."""
    key = sorted(exponents, reverse=True)
    if type_d and key:
        key[-1] = abs(key[-1])
    return tuple(key)


def _graded(key: tuple) -> tuple:
    return (sum(key), key)


def lp_dominant_monomial(p: LaurentPolynomial, type_d: bool = False):
    """Term whose sorted exponent is maximal in graded lex; None for zero.

    Ties between exponents with the same sorted form go to the lex-largest
    original exponent.
    """
    if p.is_zero():
        return None
    best = max(p.terms, key=lambda e: (_graded(dominant_key(e, type_d)), e))
    return best, p.terms[best]

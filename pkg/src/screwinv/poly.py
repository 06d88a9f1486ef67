"""Exact sparse multivariate polynomials over the rationals.

A polynomial is a dict mapping exponent tuples (one entry per variable of
an immutable :class:`VariableSet`) to nonzero ``Fraction`` coefficients.
The zero polynomial has an empty term map.  Everything here is exact: no
floats, no tolerances, and all values are immutable after construction, so
they are safe to share across threads.

Term orders are pure lexicographic with an explicit variable priority; a
prefix of the priority list acts as an elimination block.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from ._kernel import monom_mul, terms_add, terms_mul, terms_scale, terms_sub

Exponents = tuple  # exponent tuple, one small int per variable

_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*\Z")

Scalar = (int, Fraction)


class VariableSet:
    """Ordered, immutable collection of distinct variable names."""

    __slots__ = ("names", "_index", "_default_order")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if not names:
            raise ValueError("a VariableSet needs at least one variable")
        seen = set()
        for name in names:
            if not _IDENT_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate variable name {name!r}")
            seen.add(name)
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}
        self._default_order = None

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __eq__(self, other) -> bool:
        return isinstance(other, VariableSet) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"VariableSet({list(self.names)!r})"

    def unit(self) -> Exponents:
        """The all-zero exponent tuple (the unit monomial)."""
        return (0,) * len(self.names)

    def default_order(self) -> "TermOrder":
        """Lex order with priority equal to the creation order (cached)."""
        if self._default_order is None:
            self._default_order = TermOrder(self)
        return self._default_order


class TermOrder:
    """Pure lexicographic term order with an explicit variable priority.

    Monomial ``a`` exceeds ``b`` iff at the first priority variable where
    they differ, ``a`` has the larger exponent.  The order is total,
    multiplicative, and has the unit monomial as minimum, hence it is a
    well-order on monomials.  Any prefix of the priority list forms an
    elimination block: a monomial touching the block beats every monomial
    that avoids it.
    """

    __slots__ = ("varset", "priority", "_perm")

    kind = "lex"

    def __init__(self, varset: VariableSet, priority: Sequence[str] | None = None):
        if priority is None:
            priority = varset.names
        priority = tuple(priority)
        if sorted(priority) != sorted(varset.names):
            raise ValueError("priority must be a permutation of the variable set")
        self.varset = varset
        self.priority = priority
        self._perm = tuple(varset.index(name) for name in priority)

    def key(self, exponents: Exponents) -> Exponents:
        """Sort key: exponents permuted into priority order."""
        return tuple(exponents[i] for i in self._perm)

    def greater(self, a: Exponents, b: Exponents) -> bool:
        return self.key(a) > self.key(b)

    def sorted_terms(self, terms: Mapping, reverse: bool = True):
        """Terms as (exponents, coefficient) pairs, decreasing by default."""
        return sorted(terms.items(), key=lambda item: self.key(item[0]), reverse=reverse)

    def eliminates(self, block: Sequence[str]) -> bool:
        """True iff `block` is exactly a prefix of the priority list."""
        block = tuple(block)
        return self.priority[: len(block)] == block

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TermOrder)
            and self.varset == other.varset
            and self.priority == other.priority
        )

    def __hash__(self) -> int:
        return hash((self.varset, self.priority))

    def __repr__(self) -> str:
        return f"TermOrder(lex {' '.join(self.priority)})"


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("varset", "terms")

    def __init__(self, varset: VariableSet, terms: Mapping | None = None):
        n = len(varset)
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != n or any(e < 0 or not isinstance(e, int) for e in exps):
                    raise ValueError(f"bad exponent tuple {exps!r} for {varset!r}")
                coeff = _coerce(coeff)
                if coeff:
                    clean[exps] = clean.get(exps, Fraction(0)) + coeff
                    if not clean[exps]:
                        del clean[exps]
        self.varset = varset
        self.terms = clean

    @classmethod
    def _raw(cls, varset: VariableSet, terms: dict) -> "Polynomial":
        """Internal fast path: terms already canonical (no zeros, right arity)."""
        self = object.__new__(cls)
        self.varset = varset
        self.terms = terms
        return self

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, varset: VariableSet) -> "Polynomial":
        return cls._raw(varset, {})

    @classmethod
    def constant(cls, varset: VariableSet, value) -> "Polynomial":
        value = _coerce(value)
        if not value:
            return cls._raw(varset, {})
        return cls._raw(varset, {varset.unit(): value})

    @classmethod
    def variable(cls, varset: VariableSet, name: str) -> "Polynomial":
        exps = [0] * len(varset)
        exps[varset.index(name)] = 1
        return cls._raw(varset, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, varset: VariableSet, exps: Exponents, coeff=1) -> "Polynomial":
        return cls(varset, {tuple(exps): coeff})

    # ------------------------------------------------------------------
    # basic queries

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def total_degree(self) -> int:
        """Maximum total degree of a term; 0 for the zero polynomial."""
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def coefficient(self, exps: Exponents) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def used_variables(self) -> list[str]:
        """Names appearing with a positive exponent in some term."""
        used = [False] * len(self.varset)
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used[i] = True
        return [name for name, flag in zip(self.varset.names, used) if flag]

    # ------------------------------------------------------------------
    # ring operations

    def _check_same(self, other: "Polynomial") -> None:
        if self.varset != other.varset:
            raise ValueError("mismatched variable sets")

    def __add__(self, other):
        if isinstance(other, Scalar):
            other = Polynomial.constant(self.varset, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_same(other)
        return Polynomial._raw(self.varset, terms_add(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Scalar):
            other = Polynomial.constant(self.varset, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_same(other)
        return Polynomial._raw(self.varset, terms_sub(self.terms, other.terms))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Polynomial._raw(self.varset, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_same(other)
        return Polynomial._raw(self.varset, terms_mul(self.terms, other.terms))

    def __rmul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Scalar):
            c = _coerce(other)
            if not c:
                raise ZeroDivisionError("division of a polynomial by zero")
            return self.scale(Fraction(1) / c)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial power requires a non-negative integer")
        result = Polynomial.constant(self.varset, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "Polynomial":
        c = _coerce(c)
        if not c:
            return Polynomial.zero(self.varset)
        return Polynomial._raw(self.varset, terms_scale(self.terms, c))

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            other = Polynomial.constant(self.varset, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.varset == other.varset and self.terms == other.terms

    __hash__ = None  # mutable-dict payload; equality is structural

    # ------------------------------------------------------------------
    # term-order-dependent operations

    def leading_term(self, order: TermOrder | None = None) -> tuple[Exponents, Fraction]:
        """Largest (monomial, coefficient) pair under `order`.

        Raises ValueError on the zero polynomial, which has no leading term.
        """
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        if order is None:
            order = self.varset.default_order()
        exps = max(self.terms, key=order.key)
        return exps, self.terms[exps]

    def leading_monomial(self, order: TermOrder | None = None) -> Exponents:
        return self.leading_term(order)[0]

    def monic(self, order: TermOrder | None = None) -> "Polynomial":
        """Scaled so the leading coefficient is 1."""
        _, lc = self.leading_term(order)
        if lc == 1:
            return self
        return self.scale(Fraction(1) / lc)

    # ------------------------------------------------------------------
    # substitution and evaluation

    def substitute(self, images: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Ring homomorphism sending each variable to its image polynomial.

        Every variable actually used in `self` must have an image; the
        images must share a single target variable set.
        """
        used = self.used_variables()
        if not used:
            # constant: nothing to substitute
            target = next(iter(images.values())).varset if images else self.varset
            return Polynomial.constant(target, self.terms.get(self.varset.unit(), Fraction(0)))
        target = None
        for name in used:
            if name not in images:
                raise ValueError(f"no image given for variable {name!r}")
            img = images[name]
            if target is None:
                target = img.varset
            elif img.varset != target:
                raise ValueError("substitution images use mismatched variable sets")
        unit = {target.unit(): Fraction(1)}
        # cache of image powers, keyed by (variable index, exponent)
        powers: dict[int, list[dict]] = {}
        for name in used:
            powers[self.varset.index(name)] = [unit, dict(images[name].terms)]
        result: dict = {}
        for exps, coeff in self.terms.items():
            acc = {target.unit(): coeff}
            for i, e in enumerate(exps):
                if not e:
                    continue
                plist = powers[i]
                while len(plist) <= e:
                    plist.append(terms_mul(plist[-1], plist[1]))
                acc = terms_mul(acc, plist[e])
            result = terms_add(result, acc)
        return Polynomial._raw(target, result)

    def evaluate(self, point: Mapping[str, Fraction | int]) -> Fraction:
        """Exact value at a point; every used variable must be assigned."""
        for name in point:
            if name not in self.varset:
                raise ValueError(f"unknown variable {name!r}")
        values = {}
        for name, val in point.items():
            values[self.varset.index(name)] = _coerce(val)
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for i, e in enumerate(exps):
                if not e:
                    continue
                if i not in values:
                    raise ValueError(f"missing assignment for variable {self.varset.names[i]!r}")
                term *= values[i] ** e
            total += term
        return total

    def rename(self, target: VariableSet, mapping: Mapping[str, str] | None = None) -> "Polynomial":
        """Re-index into `target`, optionally renaming variables.

        Cheap exponent shuffling: every used variable must map (via
        `mapping`, default identity) to a name present in `target`.
        """
        take = {}
        for name in self.used_variables():
            new = mapping.get(name, name) if mapping else name
            take[self.varset.index(name)] = target.index(new)
        if len(set(take.values())) != len(take):
            raise ValueError("rename mapping must be injective on used variables")
        n = len(target)
        out = {}
        for exps, coeff in self.terms.items():
            new_exps = [0] * n
            for i, e in enumerate(exps):
                if e:
                    new_exps[take[i]] = e
            out[tuple(new_exps)] = coeff
        return Polynomial._raw(target, out)

    def degree_components(self) -> dict[int, "Polynomial"]:
        """Split into homogeneous components keyed by total degree."""
        buckets: dict[int, dict] = {}
        for exps, coeff in self.terms.items():
            buckets.setdefault(sum(exps), {})[exps] = coeff
        return {d: Polynomial._raw(self.varset, t) for d, t in buckets.items()}

    # ------------------------------------------------------------------

    def __repr__(self) -> str:
        from .parsing import format_poly

        return format_poly(self)

    __str__ = __repr__


def monomial_degree(exps: Exponents) -> int:
    return sum(exps)


def monomial_product(e1: Exponents, e2: Exponents) -> Exponents:
    return monom_mul(e1, e2)

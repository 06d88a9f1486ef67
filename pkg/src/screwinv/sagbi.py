"""Subduction and degree-bounded SAGBI-basis construction.

A SAGBI basis of a subalgebra is a generating set whose leading monomials
multiplicatively generate every leading monomial of the subalgebra.
Subduction is the subalgebra analogue of the division algorithm: while the
leading monomial of the input factors as a product of generator leading
monomials, the matching scaled product of generators is subtracted.  The
analogue of an S-polynomial is a tete-a-tete: two generator power products
whose leading monomials agree; their difference either subducts to zero or
delivers a new generator.

Because the completion procedure need not terminate, construction here is
explicitly bounded (tete-a-tete degree bound plus a pass limit) and the
result carries a `complete` flag instead of promising a basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable, Sequence

from .poly import Exponents, Polynomial, TermOrder, VariableSet


class GeneratorSet:
    """Monic generators with pairwise distinct leading monomials.

    Generators are normalized monic on insertion.  If a candidate's leading
    monomial collides with an existing generator's, the existing one is
    subtracted (which preserves the generated algebra) and the reduced
    candidate is re-inserted; an exact duplicate melts away to zero and is
    dropped.
    """

    __slots__ = ("gens", "order", "_lms")

    def __init__(self, gens: Iterable[Polynomial], order: TermOrder):
        self.order = order
        self.gens: tuple[Polynomial, ...] = ()
        self._lms: tuple[Exponents, ...] = ()
        store: list[Polynomial] = []
        lms: list[Exponents] = []
        for g in gens:
            self._insert(g, store, lms)
        self.gens = tuple(store)
        self._lms = tuple(lms)

    def _insert(self, g: Polynomial, store: list[Polynomial], lms: list[Exponents]) -> None:
        if g.varset != self.order.varset:
            raise ValueError("generator over the wrong variable set")
        first = True
        while True:
            if g.is_zero():
                return
            lm, _ = g.leading_term(self.order)
            if sum(lm) == 0:
                if first:
                    raise ValueError("constant generators are not allowed")
                return  # merge residue in the ground field; adds nothing
            g = g.monic(self.order)
            if lm not in lms:
                store.append(g)
                lms.append(lm)
                return
            g = g - store[lms.index(lm)]
            first = False

    def leading_monomials(self) -> tuple[Exponents, ...]:
        return self._lms

    def with_added(self, *new_gens: Polynomial) -> "GeneratorSet":
        return GeneratorSet(list(self.gens) + list(new_gens), self.order)

    def power_product(self, exps: Sequence[int]) -> Polynomial:
        """The product of generator powers with the given exponent vector."""
        result = Polynomial.constant(self.order.varset, 1)
        for g, e in zip(self.gens, exps):
            if e:
                result = result * g ** e
        return result

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __repr__(self) -> str:
        return f"GeneratorSet({len(self.gens)} generators, {self.order!r})"


@dataclass(frozen=True)
class Certificate:
    """Subducted part written as a sum of scaled generator power products.

    `terms` maps a generator exponent vector to its scalar coefficient;
    evaluating against the basis reconstructs input - remainder exactly.
    """

    terms: dict
    basis: GeneratorSet

    def evaluate(self) -> Polynomial:
        total = Polynomial.zero(self.basis.order.varset)
        for exps, coeff in self.terms.items():
            total = total + self.basis.power_product(exps).scale(coeff)
        return total

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class SubductionResult:
    remainder: Polynomial
    certificate: Certificate


def _factor_monomial(target: Exponents, lms: Sequence[Exponents], order_idx: Sequence[int]):
    """Write `target` as a product of generator leading monomials.

    Returns an exponent vector over the generators, or None when no exact
    factorization exists.  Complete bounded depth-first search; generators
    are tried largest-leading-monomial first, so the answer is
    deterministic.
    """
    n = len(lms)
    result = [0] * n

    def rec(pos: int, remaining: list[int]) -> bool:
        if not any(remaining):
            return True
        if pos == n:
            return False
        i = order_idx[pos]
        lm = lms[i]
        emax = None
        for r, l in zip(remaining, lm):
            if l:
                q = r // l
                if emax is None or q < emax:
                    emax = q
                if q == 0:
                    break
        if emax is None:
            emax = 0  # unreachable for non-constant generators
        for e in range(emax, -1, -1):
            if e:
                rest = [r - e * l for r, l in zip(remaining, lm)]
            else:
                rest = remaining
            result[i] = e
            if rec(pos + 1, rest):
                return True
        result[i] = 0
        return False

    if rec(0, list(target)):
        return tuple(result)
    return None


def subduct(f: Polynomial, basis: GeneratorSet) -> SubductionResult:
    """Subduct `f` against `basis`.

    Repeatedly cancels the leading term by a scaled product of generator
    powers while it factors over the generator leading monomials.  The
    leading monomial strictly decreases at every step, so the loop
    terminates; the remainder's leading monomial (if any) admits no such
    factorization.  Exactness contract: f == remainder + certificate.
    """
    order = basis.order
    if f.varset != order.varset:
        raise ValueError("polynomial over the wrong variable set")
    lms = basis.leading_monomials()
    order_idx = sorted(range(len(lms)), key=lambda i: order.key(lms[i]), reverse=True)
    cert_terms: dict = {}
    g = f
    prev_key = None
    while not g.is_zero():
        lt_exps, lt_coeff = g.leading_term(order)
        key = order.key(lt_exps)
        assert prev_key is None or key < prev_key, "subduction must strictly descend"
        prev_key = key
        exps = _factor_monomial(lt_exps, lms, order_idx)
        if exps is None:
            break
        cert_terms[exps] = cert_terms.get(exps, Fraction(0)) + lt_coeff
        if not cert_terms[exps]:
            del cert_terms[exps]
        g = g - basis.power_product(exps).scale(lt_coeff)
    return SubductionResult(g, Certificate(cert_terms, basis))


@dataclass(frozen=True)
class TeteATete:
    """Two disjoint generator power products with equal leading monomials."""

    a: tuple
    b: tuple


def tete_a_tetes(basis: GeneratorSet, degree_bound: int) -> list[TeteATete]:
    """All minimal tete-a-tetes with product degree at most `degree_bound`.

    Enumerates every generator power product whose leading-monomial product
    has total degree within the bound, buckets by that product monomial,
    and pairs up vectors with disjoint support.  A relation is kept only if
    it is not the componentwise sum of two other found relations.
    """
    if degree_bound < 1:
        raise ValueError("degree bound must be at least 1")
    lms = [list(lm) for lm in basis.leading_monomials()]
    degs = [sum(lm) for lm in lms]
    nvars = len(basis.order.varset)
    ngens = len(lms)
    buckets: dict[tuple, list[tuple]] = {}
    current = [0] * nvars
    vec = [0] * ngens

    def rec(i: int, remaining: int) -> None:
        if i == ngens:
            if any(vec):
                buckets.setdefault(tuple(current), []).append(tuple(vec))
            return
        d = degs[i]
        emax = remaining // d
        lm = lms[i]
        for e in range(emax + 1):
            if e:
                vec[i] = e
                for j, x in enumerate(lm):
                    current[j] += x
            rec(i + 1, remaining - e * d)
        if emax:
            for j, x in enumerate(lm):
                current[j] -= emax * x
            vec[i] = 0

    rec(0, degree_bound)

    found = set()
    for vecs in buckets.values():
        if len(vecs) < 2:
            continue
        for i in range(len(vecs)):
            for j in range(i + 1, len(vecs)):
                a, b = vecs[i], vecs[j]
                if any(x and y for x, y in zip(a, b)):
                    continue  # common factor; the reduced pair has its own bucket
                if b < a:
                    a, b = b, a
                found.add((a, b))

    def diff(u: tuple, v: tuple):
        out = []
        for x, y in zip(u, v):
            if x < y:
                return None
            out.append(x - y)
        return tuple(out)

    def orient(a: tuple, b: tuple):
        return (a, b) if a <= b else (b, a)

    minimal = []
    for a, b in found:
        decomposable = False
        for a1, b1 in found:
            if (a1, b1) == (a, b):
                continue
            for a2, b2 in ((diff(a, a1), diff(b, b1)), (diff(a, b1), diff(b, a1))):
                if a2 is None or b2 is None:
                    continue
                if not (any(a2) or any(b2)):
                    continue
                if orient(a2, b2) in found and orient(a2, b2) != (a, b):
                    decomposable = True
                    break
            if decomposable:
                break
        if not decomposable:
            minimal.append((a, b))

    def product_key(rel):
        a, _ = rel
        mono = [0] * nvars
        for i, e in enumerate(a):
            if e:
                for j, x in enumerate(lms[i]):
                    mono[j] += e * x
        return (basis.order.key(tuple(mono)), rel)

    minimal.sort(key=product_key)
    return [TeteATete(a, b) for a, b in minimal]


@dataclass(frozen=True)
class SagbiResult:
    """Outcome of a bounded construction run.

    `complete` is True only when the final pass found every tete-a-tete
    within the degree bound subducting to zero; otherwise the basis is a
    partial answer and membership tests against it are one-sided.
    """

    basis: GeneratorSet
    complete: bool
    degree_bound: int
    iterations: int


DEFAULT_DEGREE_BOUND = 4
DEFAULT_MAX_ITERATIONS = 16


def sagbi_construct(
    seed: GeneratorSet,
    degree_bound: int = DEFAULT_DEGREE_BOUND,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
) -> SagbiResult:
    """Buchberger-style completion: subduct tete-a-tetes, insert remainders.

    Each pass enumerates the tete-a-tetes of the current basis within
    `degree_bound`, subducts every difference against a fixed snapshot, and
    inserts the monic nonzero remainders in increasing leading-monomial
    order (re-subducting each against the partially extended basis, so ties
    resolve deterministically).  Stops when a pass adds nothing (complete)
    or when a bound is exhausted (incomplete, never an error).
    """
    if len(seed) == 0:
        raise ValueError("seed generator set is empty")
    if degree_bound < 1 or max_iterations < 1:
        raise ValueError("bounds must be at least 1")
    basis = seed
    complete = False
    iterations = 0
    for _ in range(max_iterations):
        iterations += 1
        remainders = []
        for pair in tete_a_tetes(basis, degree_bound):
            diff = basis.power_product(pair.a) - basis.power_product(pair.b)
            r = subduct(diff, basis).remainder
            if not r.is_zero():
                remainders.append(r.monic(basis.order))
        if not remainders:
            complete = True
            break
        remainders.sort(key=lambda p: basis.order.key(p.leading_monomial(basis.order)))
        added_any = False
        current = basis
        for r in remainders:
            rr = subduct(r, current).remainder
            if not rr.is_zero():
                current = current.with_added(rr.monic(basis.order))
                added_any = True
        basis = current
        if not added_any:
            complete = True
            break
    return SagbiResult(basis, complete, degree_bound, iterations)


def eliminate(result: SagbiResult, block: Sequence[str]) -> SagbiResult:
    """Intersect a constructed basis with the subring avoiding `block`.

    `block` must be a leading prefix of the order's priority list (so the
    order is an elimination order for it).  Keeps exactly the generators
    free of block variables, re-indexed over the remaining variables with
    the induced lex order; on a complete run this is a basis of the
    intersection subalgebra.
    """
    order = result.basis.order
    if not order.eliminates(block):
        raise ValueError("block is not a leading prefix of the term order priority")
    remaining = order.priority[len(block):]
    if not remaining:
        raise ValueError("elimination would remove every variable")
    new_vs = VariableSet(remaining)
    new_order = TermOrder(new_vs, remaining)
    blocked = set(block)
    kept = [
        g.rename(new_vs)
        for g in result.basis
        if not any(name in blocked for name in g.used_variables())
    ]
    return SagbiResult(
        basis=GeneratorSet(kept, new_order),
        complete=result.complete,
        degree_bound=result.degree_bound,
        iterations=result.iterations,
    )


@dataclass(frozen=True)
class MembershipResult:
    """Subduction-based membership answer.

    `member` is True iff the remainder vanished (with `certificate` as the
    witness).  A False answer is `definitive` only when the basis was
    constructed to completion; below an exhausted bound it merely means
    "not provably a member".
    """

    member: bool
    certificate: Certificate | None
    definitive: bool

    def __bool__(self) -> bool:
        return self.member


def is_member(f: Polynomial, result: SagbiResult) -> MembershipResult:
    """Test membership of `f` in the subalgebra spanned by `result.basis`."""
    res = subduct(f, result.basis)
    member = res.remainder.is_zero()
    return MembershipResult(
        member=member,
        certificate=res.certificate if member else None,
        definitive=member or result.complete,
    )


def verify_sagbi(basis: GeneratorSet, witnesses: Iterable[Polynomial]) -> bool:
    """Falsifiable partial check: every witness must subduct to zero."""
    return all(subduct(w, basis).remainder.is_zero() for w in witnesses)


# ----------------------------------------------------------------------
# basis file format: `order: lex v1 v2 ...` header, one polynomial per line

def write_basis_file(
    stream: IO[str],
    basis: GeneratorSet,
    complete: bool | None = None,
    degree_bound: int | None = None,
    iterations: int | None = None,
    names: Sequence[str] | None = None,
) -> None:
    stream.write(f"order: lex {' '.join(basis.order.priority)}\n")
    if complete is not None:
        stream.write(f"complete: {'true' if complete else 'false'}\n")
    if degree_bound is not None:
        stream.write(f"degree_bound: {degree_bound}\n")
    if iterations is not None:
        stream.write(f"iterations: {iterations}\n")
    from .parsing import format_poly

    for i, g in enumerate(basis.gens):
        line = format_poly(g, basis.order)
        if names is not None and i < len(names):
            line += f"  # {names[i]}"
        stream.write(line + "\n")


def read_basis_file(stream: IO[str]) -> tuple[GeneratorSet, dict]:
    """Parse a basis file; returns the generator set and header metadata."""
    from .parsing import parse

    order = None
    meta: dict = {}
    gens: list[Polynomial] = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if order is None:
            if not line.startswith("order:"):
                raise ValueError(f"line {lineno}: expected an `order: lex ...` header first")
            fields = line[len("order:"):].split()
            if not fields or fields[0] != "lex":
                raise ValueError(f"line {lineno}: only `lex` orders are supported")
            names = fields[1:]
            varset = VariableSet(names)
            order = TermOrder(varset, names)
            continue
        if line.startswith("complete:"):
            value = line.split(":", 1)[1].strip().lower()
            if value not in ("true", "false"):
                raise ValueError(f"line {lineno}: complete must be true or false")
            meta["complete"] = value == "true"
            continue
        if line.startswith("degree_bound:"):
            meta["degree_bound"] = int(line.split(":", 1)[1].strip())
            continue
        if line.startswith("iterations:"):
            meta["iterations"] = int(line.split(":", 1)[1].strip())
            continue
        try:
            gens.append(parse(line, order.varset))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
    if order is None:
        raise ValueError("basis file has no `order:` header")
    return GeneratorSet(gens, order), meta

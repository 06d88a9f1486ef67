"""Twists in Pluecker coordinates, pitch, invariant catalogs, DH pairs.

A twist is a pair of exact rational 3-vectors (omega, v); a multi-screw is
an ordered tuple of twists acted on diagonally by the adjoint action of the
rigid-motion group.  This module holds the polynomial catalogs attached to
those actions -- rotation vector invariants and their Gram-minor syzygies,
the generator sets for one, two and three screws, the translation bases --
plus the exact Denavit-Hartenberg pair quantities.

Variable naming is fixed for file and CLI interchange: screw coordinates
are ``w{i}{n}``/``v{i}{n}`` (screw i, component n), abstract rotation
vectors are ``x{i}{n}``, group parameters are ``t1..t3`` and ``q0..q3``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .poly import Polynomial, VariableSet

Vec3 = tuple


def vec3(values) -> Vec3:
    """Coerce to a 3-tuple of Fractions."""
    vals = tuple(Fraction(v) for v in values)
    if len(vals) != 3:
        raise ValueError("expected exactly three components")
    return vals


def dot(u: Vec3, v: Vec3) -> Fraction:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u: Vec3, v: Vec3) -> Vec3:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


@dataclass(frozen=True)
class Twist:
    """Pluecker coordinates (omega, v) of an infinitesimal rigid motion."""

    omega: Vec3
    vee: Vec3

    def __post_init__(self):
        object.__setattr__(self, "omega", vec3(self.omega))
        object.__setattr__(self, "vee", vec3(self.vee))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.omega) and all(c == 0 for c in self.vee)


@dataclass(frozen=True)
class MultiScrew:
    """Ordered tuple of twists; the order is significant."""

    twists: tuple

    def __post_init__(self):
        twists = tuple(self.twists)
        if not twists or not all(isinstance(t, Twist) for t in twists):
            raise ValueError("a MultiScrew holds at least one Twist")
        object.__setattr__(self, "twists", twists)

    def __len__(self) -> int:
        return len(self.twists)

    def __getitem__(self, i: int) -> Twist:
        return self.twists[i]

    def __iter__(self):
        return iter(self.twists)

    def coordinates(self) -> dict[str, Fraction]:
        """Assignment of w/v variable names to this multi-screw's values."""
        point = {}
        for i, t in enumerate(self.twists, start=1):
            for n in range(3):
                point[f"w{i}{n + 1}"] = t.omega[n]
                point[f"v{i}{n + 1}"] = t.vee[n]
        return point


# ----------------------------------------------------------------------
# pitch and joint classification

@dataclass(frozen=True)
class Pitch:
    """Finite(value), Infinite, or UndefinedZeroTwist."""

    kind: str  # "finite" | "infinite" | "undefined"
    value: Fraction | None = None

    @classmethod
    def finite(cls, value) -> "Pitch":
        return cls("finite", Fraction(value))

    @classmethod
    def infinite(cls) -> "Pitch":
        return cls("infinite")

    @classmethod
    def undefined_zero_twist(cls) -> "Pitch":
        return cls("undefined")

    def __repr__(self) -> str:
        if self.kind == "finite":
            return f"Pitch.finite({self.value})"
        return f"Pitch.{'infinite' if self.kind == 'infinite' else 'undefined_zero_twist'}()"


class JointType(Enum):
    R = "R"  # revolute: pitch 0
    P = "P"  # prismatic: pitch infinite
    H = "H"  # helical: finite nonzero pitch


def pitch(t: Twist) -> Pitch:
    """Klein form over Killing form; infinite for pure translations.

    Total: the zero twist maps to the undefined case rather than raising.
    """
    ww = dot(t.omega, t.omega)
    if ww:
        return Pitch.finite(dot(t.omega, t.vee) / ww)
    if any(c != 0 for c in t.vee):
        return Pitch.infinite()
    return Pitch.undefined_zero_twist()


def joint_type(t: Twist) -> JointType:
    """R for pitch 0, P for infinite pitch, H for finite nonzero pitch."""
    p = pitch(t)
    if p.kind == "undefined":
        raise ValueError("the zero twist has no joint type")
    if p.kind == "infinite":
        return JointType.P
    return JointType.R if p.value == 0 else JointType.H


def pitch_invariance_check(g, t: Twist) -> bool:
    """Pitch is unchanged by the adjoint action of `g` (exact comparison)."""
    from .group import transform_twist

    return pitch(transform_twist(g, t)) == pitch(t)


# ----------------------------------------------------------------------
# variable sets and polynomial building blocks

def screw_varset(m: int) -> VariableSet:
    """w11..wm3 then v11..vm3; the default lex order is the screw order."""
    if m < 1:
        raise ValueError("need at least one screw")
    names = [f"w{i}{n}" for i in range(1, m + 1) for n in (1, 2, 3)]
    names += [f"v{i}{n}" for i in range(1, m + 1) for n in (1, 2, 3)]
    return VariableSet(names)


def vector_varset(m: int) -> VariableSet:
    """x11..xm3 for m abstract 3-vectors, lex x11 > x12 > ... > xm3."""
    if m < 1:
        raise ValueError("need at least one vector")
    return VariableSet([f"x{i}{n}" for i in range(1, m + 1) for n in (1, 2, 3)])


def _v(vs: VariableSet, name: str) -> Polynomial:
    return Polynomial.variable(vs, name)


def _dot_poly(vs: VariableSet, u_names: Sequence[str], v_names: Sequence[str]) -> Polynomial:
    total = Polynomial.zero(vs)
    for a, b in zip(u_names, v_names):
        total = total + _v(vs, a) * _v(vs, b)
    return total


def _omega(i: int) -> list[str]:
    return [f"w{i}{n}" for n in (1, 2, 3)]


def _vee(i: int) -> list[str]:
    return [f"v{i}{n}" for n in (1, 2, 3)]


def det3(rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Determinant of a 3x3 matrix of polynomials, fully expanded."""
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def column_bracket(vs: VariableSet, columns: Sequence[Sequence[str]]) -> Polynomial:
    """Bracket [u1, u2, u3]: determinant with the named vectors as columns."""
    rows = [[_v(vs, columns[j][n]) for j in range(3)] for n in range(3)]
    return det3(rows)


def killing_dot(vs: VariableSet, i: int, j: int) -> Polynomial:
    """omega_i . omega_j"""
    return _dot_poly(vs, _omega(i), _omega(j))


def klein_form(vs: VariableSet, i: int) -> Polynomial:
    """omega_i . v_i"""
    return _dot_poly(vs, _omega(i), _vee(i))


def mixed_form(vs: VariableSet, i: int, j: int) -> Polynomial:
    """omega_i . v_j + omega_j . v_i"""
    return _dot_poly(vs, _omega(i), _vee(j)) + _dot_poly(vs, _omega(j), _vee(i))


# ----------------------------------------------------------------------
# rotation vector invariants and Gram minors

def so3_vector_invariants(m: int) -> list[Polynomial]:
    """Generators of the rotation vector invariants on m 3-vectors.

    All pairwise dot products x_i . x_j (i <= j) plus, from m >= 3 on, the
    bracket determinants [x_i, x_j, x_k].
    """
    vs = vector_varset(m)
    out = []
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            out.append(_dot_poly(vs, [f"x{i}{n}" for n in (1, 2, 3)], [f"x{j}{n}" for n in (1, 2, 3)]))
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            for k in range(j + 1, m + 1):
                out.append(column_bracket(vs, [[f"x{t}{n}" for n in (1, 2, 3)] for t in (i, j, k)]))
    return out


def _det(matrix: list[list[Polynomial]]) -> Polynomial:
    """Cofactor expansion along the first row (k is small here)."""
    k = len(matrix)
    if k == 1:
        return matrix[0][0]
    vs = matrix[0][0].varset
    total = Polynomial.zero(vs)
    for j in range(k):
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = matrix[0][j] * _det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def gram_minor(i_list: Sequence[int], j_list: Sequence[int], m: int | None = None) -> Polynomial:
    """k x k minor of the Gram matrix of m abstract 3-vectors, expanded.

    Entry (a, b) is the dot product x_{i_a} . x_{j_b}; the determinant is
    returned with the dot products substituted, i.e. as a polynomial in the
    3m coordinates.  Every 4x4 minor vanishes identically (vectors live in
    3-space), which is exactly the syzygy family this feeds.
    """
    if len(i_list) != len(j_list):
        raise ValueError("row and column index lists must have equal length")
    if m is None:
        m = max(max(i_list), max(j_list))
    for idx in list(i_list) + list(j_list):
        if not 1 <= idx <= m:
            raise ValueError(f"index {idx} outside 1..{m}")
    vs = vector_varset(m)
    matrix = [
        [
            _dot_poly(vs, [f"x{i}{n}" for n in (1, 2, 3)], [f"x{j}{n}" for n in (1, 2, 3)])
            for j in j_list
        ]
        for i in i_list
    ]
    return _det(matrix)


# ----------------------------------------------------------------------
# catalogs

@dataclass(frozen=True)
class Catalog:
    """Named polynomial list with provenance flags.

    `complete` is three-valued: True when the list is a certified basis,
    False when known partial, None when completeness is unknown.
    """

    entries: tuple
    conjectural: bool = False
    complete: bool | None = True
    notes: tuple = ()

    def polynomials(self) -> list[Polynomial]:
        return [p for _, p in self.entries]

    def names(self) -> list[str]:
        return [name for name, _ in self.entries]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def so3_sagbi_catalog(m: int) -> Catalog:
    """SAGBI basis of the rotation vector invariants on m 3-vectors.

    All 1x1 and 2x2 Gram minors plus the 3-vector brackets, under lex
    x11 > x12 > ... > xm3.
    """
    entries = []
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            entries.append((f"minor_{i}_{j}", gram_minor([i], [j], m)))
    pairs = [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]
    for a, rows in enumerate(pairs):
        for cols in pairs[a:]:
            entries.append(
                (
                    f"minor_{rows[0]}{rows[1]}_{cols[0]}{cols[1]}",
                    gram_minor(rows, cols, m),
                )
            )
    vs = vector_varset(m)
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            for k in range(j + 1, m + 1):
                entries.append(
                    (
                        f"bracket_{i}{j}{k}",
                        column_bracket(vs, [[f"x{t}{n}" for n in (1, 2, 3)] for t in (i, j, k)]),
                    )
                )
    return Catalog(tuple(entries))


def se3_generator_catalog(m: int) -> Catalog:
    """Generators of the full adjoint invariants on m screws (m = 1, 2, 3).

    The three-screw list is conjectural: every element is exactly
    invariant, but generation of the whole invariant ring is not certified.
    """
    if m not in (1, 2, 3):
        raise ValueError("supported screw counts are 1, 2 and 3")
    vs = screw_varset(m)
    entries = []
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            entries.append((f"dot_{i}{j}", killing_dot(vs, i, j)))
    for i in range(1, m + 1):
        entries.append((f"klein_{i}", klein_form(vs, i)))
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            entries.append((f"mixed_{i}{j}", mixed_form(vs, i, j)))
    if m == 3:
        entries.append(("bracket_www", column_bracket(vs, [_omega(1), _omega(2), _omega(3)])))
        bracket_sum = (
            column_bracket(vs, [_vee(1), _omega(2), _omega(3)])
            + column_bracket(vs, [_omega(1), _vee(2), _omega(3)])
            + column_bracket(vs, [_omega(1), _omega(2), _vee(3)])
        )
        entries.append(("bracket_sum", bracket_sum))
    if m == 3:
        return Catalog(
            tuple(entries),
            conjectural=True,
            complete=None,
            notes=("generation of the three-screw invariant ring by this list is conjectural",),
        )
    return Catalog(tuple(entries))


def z_poly(i: int, j: int, k: int) -> Polynomial:
    """Determinant z_{ijk} over three screws.

    Rows are the i-th components of (omega_1, omega_2, omega_3), then the
    j-th components, then the k-th components of (v_1, v_2, v_3); columns
    are indexed by screw number.  Repeated omega rows (i == j) give zero.
    """
    if not all(1 <= idx <= 3 for idx in (i, j, k)):
        raise ValueError("z indices must lie in 1..3")
    vs = screw_varset(3)
    rows = [
        [_v(vs, f"w{s}{i}") for s in (1, 2, 3)],
        [_v(vs, f"w{s}{j}") for s in (1, 2, 3)],
        [_v(vs, f"v{s}{k}") for s in (1, 2, 3)],
    ]
    return det3(rows)


TWO_SCREW_CUBIC_REJECTED_VARIANT = (
    "w11*w22*v22 + w11*w23*v23 - w12*w21*v22 - w21^2*v23"
    " - w21^2*v11 - w21*w22*v12 - w21*w23*v13"
)


def two_screw_tete_a_tete_input() -> Polynomial:
    """w11*(omega_2 . v_2) - w21*(omega_1 . v_2 + omega_2 . v_1)."""
    vs = screw_varset(2)
    return _v(vs, "w11") * klein_form(vs, 2) - _v(vs, "w21") * mixed_form(vs, 1, 2)


def translation_sagbi_catalog(m: int) -> Catalog:
    """Basis of the translation sub-action invariants on m screws.

    m = 1 and m = 2 are certified complete.  The two-screw cubic is
    recomputed here by subducting its tete-a-tete against the other nine
    elements; an alternative transcription of that cubic with w21*v23 in
    place of w13*v23 fails the translation-invariance check and is
    rejected (see the catalog note).  The three-screw list carries
    ``complete=None``: the bounded construction is not certified to have
    terminated.
    """
    if m not in (1, 2, 3):
        raise ValueError("supported screw counts are 1, 2 and 3")
    vs = screw_varset(m)
    entries = [(f"w{i}{n}", _v(vs, f"w{i}{n}")) for i in range(1, m + 1) for n in (1, 2, 3)]
    for i in range(1, m + 1):
        entries.append((f"klein_{i}", klein_form(vs, i)))
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            entries.append((f"mixed_{i}{j}", mixed_form(vs, i, j)))
    if m == 1:
        return Catalog(tuple(entries))
    if m == 2:
        from .sagbi import GeneratorSet, subduct

        basis = GeneratorSet([p for _, p in entries], vs.default_order())
        remainder = subduct(two_screw_tete_a_tete_input(), basis).remainder
        cubic = remainder.monic(vs.default_order())
        entries.append(("cubic_12", cubic))
        note = (
            "cubic_12 is the subduction remainder of"
            " w11*(w21*v21 + w22*v22 + w23*v23) - w21*(w11*v21 + ... + w23*v13)"
            " against the other nine elements; the transcription"
            f" `{TWO_SCREW_CUBIC_REJECTED_VARIANT}` (w21^2*v23 in place of"
            " w13*w21*v23) is not translation-invariant and is rejected"
        )
        return Catalog(tuple(entries), notes=(note,))
    # m == 3
    for trip in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        entries.append((f"z_{trip[0]}{trip[1]}{trip[2]}", z_poly(*trip)))
    for a, b in (((1, 2, 1), (3, 2, 3)), ((2, 3, 2), (1, 3, 1)), ((3, 1, 3), (2, 1, 2))):
        name = f"zdiff_{a[0]}{a[1]}{a[2]}_{b[0]}{b[1]}{b[2]}"
        entries.append((name, z_poly(*a) - z_poly(*b)))
    note = (
        "three-screw list: the bounded construction is not certified to"
        " have terminated, so completeness is reported as unknown"
    )
    return Catalog(tuple(entries), complete=None, notes=(note,))


# ----------------------------------------------------------------------
# Denavit-Hartenberg pair invariants

class ExactRadical:
    """The exact value num / sqrt(radicand) with radicand > 0.

    Keeps square roots unevaluated so every comparison stays rational:
    equality cross-multiplies squares and compares signs.
    """

    __slots__ = ("num", "radicand")

    def __init__(self, num, radicand):
        num = Fraction(num)
        radicand = Fraction(radicand)
        if radicand <= 0:
            raise ValueError("radicand must be positive")
        self.num = num
        self.radicand = radicand

    def __float__(self) -> float:
        return float(self.num) / math.sqrt(float(self.radicand))

    def as_fraction(self) -> Fraction | None:
        """Exact rational value when the radicand is a perfect square."""
        p, q = self.radicand.numerator, self.radicand.denominator
        rp, rq = math.isqrt(p), math.isqrt(q)
        if rp * rp == p and rq * rq == q:
            return self.num / Fraction(rp, rq)
        return None

    def squared(self) -> Fraction:
        return self.num * self.num / self.radicand

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ExactRadical(other, 1)
        if not isinstance(other, ExactRadical):
            return NotImplemented
        if (self.num > 0) != (other.num > 0) or (self.num < 0) != (other.num < 0):
            return False
        return self.num ** 2 * other.radicand == other.num ** 2 * self.radicand

    __hash__ = None

    def __repr__(self) -> str:
        exact = self.as_fraction()
        if exact is not None:
            return f"ExactRadical({exact})"
        return f"ExactRadical({self.num}/sqrt({self.radicand}))"


@dataclass(frozen=True)
class DhPairReport:
    """Exact twist angle and displacement data for a screw pair.

    cos_alpha and d_sin_alpha are the two invariant quotients over
    sqrt((w1.w1)(w2.w2)); `displacement` is the exact d when the axes are
    not parallel, and the float views are 15-significant-digit
    conveniences only.
    """

    dots: tuple  # (w1.w1, w1.w2, w2.w2)
    klein_cross: Fraction  # w1.v2 + w2.v1
    cos_alpha: ExactRadical
    d_sin_alpha: ExactRadical
    displacement: ExactRadical | None
    parallel_axes: bool
    alpha_float: float
    d_float: float | None


def dh_invariants(pair: MultiScrew) -> DhPairReport:
    """Twist-angle and displacement invariants of a screw pair.

    cos(alpha) = (w1.w2) / sqrt((w1.w1)(w2.w2)) and d sin(alpha) =
    (w1.v2 + w2.v1) / sqrt(same); both are ratios of two-screw adjoint
    invariants, so the report is a fixed point of the adjoint action.
    Requires nonzero angular parts; when the axes are parallel
    (sin(alpha) = 0) the displacement is reported undefined.
    """
    if len(pair) != 2:
        raise ValueError("DH pair invariants need exactly two screws")
    t1, t2 = pair[0], pair[1]
    w11 = dot(t1.omega, t1.omega)
    w22 = dot(t2.omega, t2.omega)
    if not w11 or not w22:
        raise ValueError("both screws need a nonzero angular part")
    w12 = dot(t1.omega, t2.omega)
    kc = dot(t1.omega, t2.vee) + dot(t2.omega, t1.vee)
    rho = w11 * w22
    cos_alpha = ExactRadical(w12, rho)
    d_sin_alpha = ExactRadical(kc, rho)
    assert cos_alpha.squared() <= 1  # Cauchy-Schwarz on exact values
    parallel = w12 * w12 == rho
    displacement = None if parallel else ExactRadical(kc, rho - w12 * w12)
    cos_f = max(-1.0, min(1.0, float(cos_alpha)))
    alpha_float = math.acos(cos_f)
    d_float = None if parallel else float(displacement)
    return DhPairReport(
        dots=(w11, w12, w22),
        klein_cross=kc,
        cos_alpha=cos_alpha,
        d_sin_alpha=d_sin_alpha,
        displacement=displacement,
        parallel_axes=parallel,
        alpha_float=alpha_float,
        d_float=d_float,
    )


# ----------------------------------------------------------------------
# multi-screw text format: m lines of six rationals `w1 w2 w3 v1 v2 v3`

def format_multiscrew(s: MultiScrew) -> str:
    lines = []
    for t in s:
        parts = [str(c) for c in t.omega] + [str(c) for c in t.vee]
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def parse_multiscrew(text: str) -> MultiScrew:
    twists = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 6:
            raise ValueError(f"line {lineno}: expected six rationals, got {len(fields)}")
        try:
            vals = [Fraction(f) for f in fields]
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
        twists.append(Twist(vals[:3], vals[3:]))
    if not twists:
        raise ValueError("no screws found in input")
    return MultiScrew(tuple(twists))

"""Ternary genus theory: adjoint, Brandt and Smith invariants, reciprocals,
character data, Smith genus equivalence, odd-prime local splittings, and
binary-by-ternary representation search."""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from sympy import jacobi_symbol

from .forms import (
    QuadForm, SearchExhausted, mat_adjugate, mat_scale, short_vectors,
)
from .binary import (
    CHI_8, CHI_M4, Character, char_of_form, chi_ell, odd_prime_divisors,
)

IMPROPER = "improperly-primitive"
PROPER = "properly-primitive"


def adjoint(f: QuadForm) -> QuadForm:
    """A(adj f) = -2 adj(A(f)); negative definite when f is positive."""
    if f.arity != 3:
        raise ValueError("ternary form expected")
    g = mat_scale(mat_adjugate(f.gram), -2)
    return QuadForm(tuple(tuple(r) for r in g))


def brandt_invariants(f: QuadForm) -> Tuple[int, int]:
    """(I1, I2) of a primitive positive ternary form.  I1 takes the negative
    sign so the reciprocal adj(f)/I1 comes out positive definite."""
    if f.content() != 1:
        raise ValueError("primitive form expected")
    if not f.is_positive_definite():
        raise ValueError("positive form expected")
    a = adjoint(f)
    i1 = -a.content()
    i2 = 16 * f.disc // (i1 * i1)
    assert i1 * i1 * i2 == 16 * f.disc
    return i1, i2


def brandt_reciprocal(f: QuadForm) -> QuadForm:
    i1, _ = brandt_invariants(f)
    out = adjoint(f).divide(i1)
    assert out.is_positive_definite() and out.content() == 1
    return out


@dataclass(frozen=True)
class GenusProfile:
    omega: int
    delta: int
    i1: int
    i2: int
    f_class: str
    reciprocal_class: str
    chars_f: tuple        # ((Character, value), ...)
    chars_reciprocal: tuple
    reciprocal: QuadForm

    def to_json(self):
        return {
            "omega": self.omega,
            "delta": self.delta,
            "i1": self.i1,
            "i2": self.i2,
            "f_class": self.f_class,
            "reciprocal_class": self.reciprocal_class,
            "chars_f": {c.label(): v for c, v in self.chars_f},
            "chars_reciprocal": {c.label(): v for c, v in self.chars_reciprocal},
            "reciprocal": self.reciprocal.to_json(),
        }


def _primitivity_label(f):
    kind, content = f.primitivity()
    if kind in (PROPER, IMPROPER):
        return kind
    return "imprimitive(%d)" % content


def smith_data(f: QuadForm) -> GenusProfile:
    """Order and character data of an improperly primitive positive ternary
    form: Omega = -I1(f/2), Delta = -I2(f/2)/8, reciprocal F = adj(f/2)/I1,
    with the supplementary characters of F keyed on Delta mod 4."""
    if f.arity != 3 or not f.is_positive_definite():
        raise ValueError("positive ternary form expected")
    if f.primitivity().kind != IMPROPER:
        raise ValueError("improperly primitive form expected")
    half = f.half()
    i1, i2 = brandt_invariants(half)
    omega = -i1
    assert i2 % 8 == 0
    delta = -i2 // 8
    assert omega > 0 and omega % 2 == 1 and i2 % 16 == 0
    assert 16 * half.disc == i1 * i1 * i2
    recip = brandt_reciprocal(half)
    assert recip.primitivity().kind == PROPER

    chars_f = tuple((chi_ell(p), char_of_form(chi_ell(p), f)) for p in odd_prime_divisors(omega))
    rchars = [chi_ell(p) for p in odd_prime_divisors(delta)]
    rchars.append(CHI_M4)
    if delta % 4 == 0:
        rchars.append(CHI_8)
    chars_recip = tuple((c, char_of_form(c, recip)) for c in rchars)
    chi_m4_omega = CHI_M4.value(omega)
    chi_m4_recip = dict(chars_recip)[CHI_M4]
    assert chi_m4_recip == -chi_m4_omega
    return GenusProfile(omega, delta, i1, i2, _primitivity_label(f),
                        _primitivity_label(recip), chars_f, chars_recip, recip)


def genus_equal_smith(f1: QuadForm, f2: QuadForm) -> bool:
    """Smith genus equivalence of improperly primitive positive ternary
    forms: same order and all assigned characters of the forms and their
    reciprocals agree."""
    g1, g2 = smith_data(f1), smith_data(f2)
    if (g1.omega, g1.delta) != (g2.omega, g2.delta):
        return False
    if g1.reciprocal_class != g2.reciprocal_class:
        return False
    return g1.chars_f == g2.chars_f and g1.chars_reciprocal == g2.chars_reciprocal


def genus_equal_brandt(f1: QuadForm, f2: QuadForm) -> bool:
    """Brandt-style genus test for primitive f_i whose doubles are
    improperly primitive: equal (I1, I2) and matching character data of the
    forms and of the Brandt reciprocals."""
    for f in (f1, f2):
        if f.content() != 1 or f.scale(2).primitivity().kind != IMPROPER:
            raise ValueError("need primitive f with 2f improperly primitive")
    if brandt_invariants(f1) != brandt_invariants(f2):
        return False
    i1, _ = brandt_invariants(f1)
    omega = -i1
    for p in odd_prime_divisors(omega):
        if char_of_form(chi_ell(p), f1) != char_of_form(chi_ell(p), f2):
            return False
    r1, r2 = brandt_reciprocal(f1), brandt_reciprocal(f2)
    g1, g2 = smith_data(f1.scale(2)), smith_data(f2.scale(2))
    return g1.chars_reciprocal == g2.chars_reciprocal and r1.disc == r2.disc


# ---------------------------------------------------------------------------
# odd-prime local equivalence

@dataclass(frozen=True)
class LocalSplitting:
    prime: int
    components: tuple   # ((valuation, unit class), ...) sorted

    def to_json(self):
        return {"prime": self.prime,
                "components": [list(c) for c in self.components]}


def _vp(n, p):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def jordan_odd(f: QuadForm, p: int) -> LocalSplitting:
    """Diagonalization over the p-adic integers for odd p.  Symmetric
    Gaussian elimination on the rational gram works since 2 is a unit; each
    diagonal entry contributes (v_p, Legendre symbol of its unit part)."""
    if p == 2 or p < 2:
        raise ValueError("odd prime expected")
    n = f.arity
    g = [[Fraction(x, 2) for x in row] for row in f.gram]
    diag = []
    rows = list(range(n))
    while rows:
        # pick a pivot entry with minimal p-valuation, preferring the diagonal
        best = None
        for i in rows:
            if g[i][i] != 0:
                v = _vp(g[i][i].numerator, p)[0] - _vp(g[i][i].denominator, p)[0]
                if best is None or v < best[0]:
                    best = (v, i, i)
        for i in rows:
            for j in rows:
                if i < j and g[i][j] != 0:
                    v = _vp(g[i][j].numerator, p)[0] - _vp(g[i][j].denominator, p)[0]
                    if best is None or v < best[0]:
                        best = (v, i, j)
        if best is None:
            raise ValueError("degenerate form")
        _, i, j = best
        if i != j:
            # fold the off-diagonal pivot onto the diagonal; for odd p one
            # of row_i +- row_j keeps the minimal valuation (their values
            # differ by 4*g_ij)
            sgn = 1
            if g[i][i] + 2 * g[i][j] + g[j][j] == 0:
                sgn = -1
            elif g[i][i] - 2 * g[i][j] + g[j][j] != 0:
                vplus = _vp((g[i][i] + 2 * g[i][j] + g[j][j]).numerator, p)[0]
                vminus = _vp((g[i][i] - 2 * g[i][j] + g[j][j]).numerator, p)[0]
                if vminus < vplus:
                    sgn = -1
            for k in range(n):
                g[i][k] += sgn * g[j][k]
            for k in range(n):
                g[k][i] += sgn * g[k][j]
        piv = g[i][i]
        rows.remove(i)
        for r in rows:
            if g[r][i] != 0:
                c = g[r][i] / piv
                for k in range(n):
                    g[r][k] -= c * g[i][k]
                for k in range(n):
                    g[k][r] -= c * g[k][i]
        diag.append(piv)
    # within a fixed scale p^v the complete invariant is the dimension and
    # the square class of the block determinant, so units are normalized to
    # all +1 except possibly the last slot of each scale
    blocks = {}
    for d in diag:
        vn, un = _vp(d.numerator, p)
        vd, ud = _vp(d.denominator, p)
        v = vn - vd
        assert v >= 0, "non-integral local splitting"
        unit = un * pow(ud, -1, p) % p
        dim, cls = blocks.get(v, (0, 1))
        blocks[v] = (dim + 1, cls * int(jacobi_symbol(unit, p)))
    comps = []
    for v in sorted(blocks):
        dim, cls = blocks[v]
        comps.extend([(v, 1)] * (dim - 1))
        comps.append((v, cls))
    return LocalSplitting(p, tuple(sorted(comps)))


def locally_equivalent(f1: QuadForm, f2: QuadForm, p: int) -> bool:
    return jordan_odd(f1, p) == jordan_odd(f2, p)


def vp_check(f1: QuadForm, f2: QuadForm, p: int) -> bool:
    """For p-adically equivalent primitive forms, v_p of I1 must agree."""
    if jordan_odd(f1, p) != jordan_odd(f2, p):
        raise ValueError("forms are not equivalent over Z_%d" % p)
    v1 = _vp(abs(brandt_invariants(f1)[0]), p)[0]
    v2 = _vp(abs(brandt_invariants(f2)[0]), p)[0]
    return v1 == v2


# ---------------------------------------------------------------------------
# binary forms represented by ternary forms

def _pair_minor_gcd(u, v):
    m1 = u[0] * v[1] - u[1] * v[0]
    m2 = u[0] * v[2] - u[2] * v[0]
    m3 = u[1] * v[2] - u[2] * v[1]
    return math.gcd(m1, math.gcd(m2, m3))


def find_binary_rep(f: QuadForm, target_disc: int, content_filter=None,
                    bound=None) -> Optional[Tuple[QuadForm, tuple]]:
    """A binary form of the requested discriminant properly represented by
    f: vectors u, v with coprime 2x2 minors whose restricted gram has disc
    target_disc.  Bounded search; absent only means not found below bound."""
    if f.arity != 3 or not f.is_positive_definite():
        raise ValueError("positive ternary form expected")
    if target_disc >= 0:
        return None
    if bound is None:
        bound = 16 * abs(f.disc)
    need = -target_disc
    stage = 64
    while True:
        stage = min(stage, bound)
        vecs = short_vectors(f, stage)
        vals = [v for v, _ in vecs]
        for i, (fu, u) in enumerate(vecs):
            # the pair gram needs 4*f(u)*f(v) = b^2 + |target|, so f(v) has
            # a hard floor for each f(u)
            lo = bisect.bisect_left(vals, -(-need // (4 * fu)), i + 1)
            for j in range(lo, len(vecs)):
                fv, v = vecs[j]
                b = f.bilinear(u, v)
                if b * b - 4 * fu * fv != target_disc:
                    continue
                if _pair_minor_gcd(u, v) != 1:
                    continue
                if b < 0:
                    b, v = -b, tuple(-x for x in v)
                q = QuadForm.binary(fu, b, fv)
                if content_filter is not None:
                    allowed = (content_filter,) if isinstance(content_filter, int) \
                        else tuple(content_filter)
                    if q.content() not in allowed:
                        continue
                if not q.is_positive_definite():
                    continue
                assert q.disc == target_disc
                return q, (u, v)
        if stage >= bound:
            return None
        stage *= 4

"""Rank-4 lattice model of a product surface with a binary degree form:
intersection pairing, polarizations, the ternary invariant attached to an
even polarization, and genus census over enumerated polarizations."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .forms import (
    QuadForm, UnimodularMap, mat_det, mat_identity, mat_mul, reduce_form,
)
from .ternary import genus_equal_smith, smith_data


@dataclass(frozen=True)
class SurfaceModel:
    degree_form: QuadForm

    def __post_init__(self):
        q = self.degree_form
        if q.arity != 2 or not q.is_positive_definite():
            raise ValueError("positive binary degree form expected")


@dataclass(frozen=True)
class NSElement:
    a: int
    b: int
    h: Tuple[int, int]

    def vector(self):
        return (self.a, self.b, self.h[0], self.h[1])

    def to_json(self):
        return {"a": self.a, "b": self.b, "h": list(self.h)}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["a"], obj["b"], (obj["h"][0], obj["h"][1]))


def pairing(d1: NSElement, d2: NSElement, surface: SurfaceModel) -> int:
    """a1*b2 + a2*b1 - beta_q(h1, h2) with beta_q the polar form of the
    degree form; (D.D) is always even."""
    q = surface.degree_form
    beta = q.bilinear(d1.h, d2.h)
    return d1.a * d2.b + d2.a * d1.b - beta


def is_polarization(d: NSElement, surface: SurfaceModel):
    """(member of P(A), member of P(A)^ev)."""
    q = surface.degree_form
    ok = d.a > 0 and d.a * d.b - q(d.h) == 1
    even = ok and d.a % 2 == 0 and d.b % 2 == 0 and q.disc % 4 == 0
    return ok, even


def _residue_box_has_3_mod_4(q):
    # q(x, y) mod 4 has period 4 in each variable
    return any(q((x, y)) % 4 == 3 for x in range(4) for y in range(4))


def make_even_polarization(surface: SurfaceModel) -> Optional[NSElement]:
    """The canonical even polarization (2, (q(h)+1)/2, h) from a primitive h
    with q(h) = 3 mod 4, if the degree form admits one; None means none
    exists (exact, decided on the mod-4 residue box)."""
    q = surface.degree_form
    if q.disc % 4 != 0:
        return None
    if not _residue_box_has_3_mod_4(q):
        return None
    # a primitive witness exists whenever any witness does: dividing out the
    # (odd) gcd keeps the value 3 mod 4 since odd squares are 1 mod 8
    bound = 4
    while True:
        for value, h in _short_pairs(q, bound):
            if value % 4 == 3 and math.gcd(*h) == 1:
                theta = NSElement(2, (value + 1) // 2, h)
                assert is_polarization(theta, surface) == (True, True)
                return theta
        bound *= 4


def _short_pairs(q, bound):
    from .forms import short_vectors
    return short_vectors(q, bound)


def complete_primitive(v) -> UnimodularMap:
    """A GL_n(Z) matrix whose first column is the primitive vector v."""
    n = len(v)
    if math.gcd(*v) != 1:
        raise ValueError("vector is not primitive")
    u = [list(row) for row in mat_identity(n)]   # tracks ops, u @ v = w
    w = list(v)
    for i in range(1, n):
        if w[i] == 0:
            continue
        g, s, t = _xgcd(w[0], w[i])
        a0, ai = w[0] // g, w[i] // g
        row0 = [s * u[0][k] + t * u[i][k] for k in range(n)]
        rowi = [-ai * u[0][k] + a0 * u[i][k] for k in range(n)]
        u[0], u[i] = row0, rowi
        w[0], w[i] = g, 0
    if w[0] == -1:
        u[0] = [-x for x in u[0]]
        w[0] = 1
    um = UnimodularMap(tuple(tuple(r) for r in u))
    m = um.inverse
    assert tuple(row[0] for row in m) == tuple(v)
    return UnimodularMap(m)


def _xgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_s, s = s, old_s - qt * s
        old_t, t = t, old_t - qt * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _ns_from_vector(vec):
    return NSElement(vec[0], vec[1], (vec[2], vec[3]))


def refined_humbert(surface: SurfaceModel, theta: NSElement) -> QuadForm:
    """The ternary form (D.theta)^2 - 2(D.D) on the quotient of the rank-4
    lattice by Z*theta, on a unimodular completion of theta."""
    ok, _ = is_polarization(theta, surface)
    if not ok:
        raise ValueError("theta is not a polarization")
    vec = theta.vector()
    assert math.gcd(*vec) == 1  # forced by a*b - q(h) = 1
    m = complete_primitive(vec).matrix
    basis = [_ns_from_vector(tuple(row[j] for row in m)) for j in range(1, 4)]

    def bq(d1, d2):
        return (2 * pairing(d1, theta, surface) * pairing(d2, theta, surface)
                - 4 * pairing(d1, d2, surface))

    # diagonal entries are 2*Q(u_i), off-diagonal the polar form of Q
    gram = tuple(
        tuple(2 * (pairing(basis[i], theta, surface) ** 2
                   - 2 * pairing(basis[i], basis[i], surface)) if i == j
              else bq(basis[i], basis[j])
              for j in range(3))
        for i in range(3)
    )
    out = QuadForm(gram)
    assert out.is_positive_definite()
    assert out.det == 32 * surface.degree_form.det
    return out


def f_q(surface: SurfaceModel) -> QuadForm:
    """x^2 + 4*q(y, z); the invariant of the principal product polarization."""
    a, b, c = surface.degree_form.coeffs()
    return QuadForm.ternary(1, 4 * a, 4 * c, 4 * b, 0, 0)


def enumerate_even_polarizations(surface: SurfaceModel, height: int) -> List[NSElement]:
    if height < 1:
        raise ValueError("height must be positive")
    q = surface.degree_form
    out = []
    # b is forced by a*b = q(h) + 1, so only a and h are scanned
    for a in range(2, height + 1, 2):
        for h1 in range(-height, height + 1):
            for h2 in range(-height, height + 1):
                val = q((h1, h2)) + 1
                if val % a:
                    continue
                b = val // a
                if b < 1 or b > height or b % 2:
                    continue
                d = NSElement(a, b, (h1, h2))
                ok, even = is_polarization(d, surface)
                if ok and even:
                    out.append(d)
    out.sort(key=lambda d: (d.a, d.b, d.h))
    return out


def genus_census(surface: SurfaceModel, height: int):
    """Partition the invariants of enumerated even polarizations into genus
    classes of their halves; [(representative, count, profile)] in a
    deterministic order."""
    thetas = enumerate_even_polarizations(surface, height)
    if not thetas:
        raise ValueError("no even polarizations up to height %d" % height)
    classes = []  # (representative form, half for genus tests, count, profile)
    for theta in thetas:
        form = refined_humbert(surface, theta)
        half = form.half()
        for i, (rep, rep_half, count, prof) in enumerate(classes):
            if genus_equal_smith(rep_half, half):
                classes[i] = (rep, rep_half, count + 1, prof)
                break
        else:
            red, _ = reduce_form(form)
            classes.append((red, half, 1, smith_data(half)))
    classes.sort(key=lambda c: c[0].coeffs())
    return [(rep, count, prof) for rep, _, count, prof in classes]

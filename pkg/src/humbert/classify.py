"""Classification of imprimitive positive ternary forms as invariants of
even polarizations: condition checks, constructive witness building, and
closure verification over fixed-discriminant pools."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from sympy import isprime, jacobi_symbol

from .forms import (
    QuadForm, SearchExhausted, UnimodularMap, is_equivalent, reduce_form,
    represent, represented_values,
)
from .binary import prime_represented
from .ternary import IMPROPER, brandt_reciprocal, find_binary_rep, genus_equal_smith, smith_data
from .surface import (
    NSElement, SurfaceModel, enumerate_even_polarizations, is_polarization,
    refined_humbert,
)

REFINED_HUMBERT = "RefinedHumbert"
NOT_REFINED_HUMBERT = "NotRefinedHumbert"
UNRESOLVED = "Unresolved"


@dataclass(frozen=True)
class Certificate:
    form: QuadForm
    verdict: str
    reason: Optional[str] = None
    bound: Optional[int] = None
    condition1: Optional[bool] = None
    condition2_witness: Optional[tuple] = None   # (coords, n)
    witness_surface: Optional[SurfaceModel] = None
    witness_theta: Optional[NSElement] = None
    equivalence: Optional[UnimodularMap] = None

    def to_json(self):
        out = {"form": self.form.to_json(), "verdict": self.verdict}
        if self.reason is not None:
            out["reason"] = self.reason
        if self.bound is not None:
            out["bound"] = self.bound
        if self.condition1 is not None:
            out["condition1"] = self.condition1
        if self.condition2_witness is not None:
            coords, n = self.condition2_witness
            out["condition2_witness"] = {"coords": list(coords), "n": n}
        if self.witness_surface is not None:
            out["degree_form"] = self.witness_surface.degree_form.to_json()
        if self.witness_theta is not None:
            out["theta"] = self.witness_theta.to_json()
        if self.equivalence is not None:
            out["equivalence"] = [list(r) for r in self.equivalence.matrix]
        return out

    def verify(self) -> bool:
        """Recheck the stored evidence using only core form arithmetic."""
        if self.verdict != REFINED_HUMBERT:
            return True
        coords, n = self.condition2_witness
        if self.form(coords) != 4 * n * n or math.gcd(n, self.form.disc) != 1:
            return False
        built = refined_humbert(self.witness_surface, self.witness_theta)
        return built.transform(self.equivalence).gram == self.form.gram


def check_condition1(f: QuadForm) -> bool:
    """Half of f exists and is improperly primitive."""
    if f.arity != 3 or not f.is_positive_definite():
        raise ValueError("positive ternary form expected")
    if any(c % 2 for c in f.coeffs()):
        return False
    return f.half().primitivity().kind == IMPROPER


def check_condition2(f: QuadForm, bound: int = 50) -> Optional[Tuple[tuple, int]]:
    """A vector with f(vec) = (2n)^2, gcd(n, disc(f)) = 1, n <= bound."""
    if f.arity != 3 or not f.is_positive_definite():
        raise ValueError("positive ternary form expected")
    d = f.disc
    for n in range(1, bound + 1):
        if math.gcd(n, d) != 1:
            continue
        rv = represent(f, 4 * n * n)
        if rv is not None:
            return rv.coords, n
    return None


def _least_even_sqrt(target, modulus):
    # least even b >= 0 with b^2 = target (mod modulus)
    for b in range(0, 2 * modulus + 1, 2):
        if (b * b - target) % modulus == 0:
            return b
    raise SearchExhausted("no even square root of %d mod %d" % (target, modulus),
                          2 * modulus)


def _witness_prime(phi, omega, delta, n, value_cap):
    """A prime p with (-2*delta/p) = 1, omega*p = 3 mod 4, sourced from the
    values of phi (content 1: p itself; content 4: p from phi/4)."""
    cont = phi.content()
    source = phi if cont == 1 else phi.divide(4)
    avoid = abs(8 * delta * n * n)
    bound = max(16, 2 * abs(source.disc))
    while bound <= value_cap:
        for rv in represented_values(source, bound):
            v = rv.value
            if not isprime(v) or avoid % v == 0:
                continue
            if (omega * v) % 4 != 3:
                continue
            if jacobi_symbol(-2 * delta, v) != 1:
                continue
            return v
        bound *= 4
    raise SearchExhausted("no usable prime below %d" % value_cap, value_cap)


def construct_witness(f: QuadForm, rep_bound=None, prime_cap=10 ** 6):
    """A surface and even polarization whose invariant is genus-equivalent
    to f, built from the order data of f/2 and a well-chosen prime."""
    if not check_condition1(f):
        raise ValueError("condition 1 fails")
    wit = check_condition2(f)
    if wit is None:
        raise ValueError("condition 2 witness not found")
    coords, n = wit
    g = math.gcd(coords[0], math.gcd(coords[1], coords[2]))
    n //= g   # n^2 now primitively represented by f/4

    prof = smith_data(f.half())
    omega, delta = prof.omega, prof.delta
    recip = prof.reciprocal   # F_{f/2}

    target = -8 * delta * n * n
    found = find_binary_rep(recip, target, content_filter=(1, 4), bound=rep_bound)
    if found is None:
        raise SearchExhausted("no represented binary form of disc %d" % target,
                              rep_bound or 16 * abs(recip.disc))
    phi = found[0]

    p = _witness_prime(phi, omega, delta, n, prime_cap)
    b = _least_even_sqrt(-2 * delta, 4 * p)
    c = (b * b + 2 * delta) // (4 * p)
    qprime = QuadForm.binary(p, b, c)
    assert qprime.disc == -2 * delta and qprime.content() == 1
    q = qprime.scale(omega)
    assert q((1, 0)) == omega * p and (omega * p) % 4 == 3
    # work with the reduced degree form; it represents omega*p at the image
    # of (1, 0) under the reduction map
    qred, m = reduce_form(q)
    h = tuple(row[0] for row in m.inverse)
    assert qred(h) == omega * p and math.gcd(*h) == 1
    surface = SurfaceModel(qred)
    theta = NSElement(2, (omega * p + 1) // 2, h)
    assert is_polarization(theta, surface) == (True, True)
    built = refined_humbert(surface, theta)
    assert genus_equal_smith(built.half(), f.half())
    return surface, theta, built


def classify(f: QuadForm, cond2_bound=50, height_cap=64, rep_bound=None,
             prime_cap=10 ** 6) -> Certificate:
    """Tri-state verdict: f is the invariant of an even polarization, it is
    not, or the search bounds ran out."""
    if f.arity != 3 or not f.is_positive_definite():
        raise ValueError("positive ternary form expected")
    if f.content() <= 1:
        return Certificate(f, NOT_REFINED_HUMBERT, reason="form is primitive")
    cond1 = check_condition1(f)
    if not cond1:
        return Certificate(f, NOT_REFINED_HUMBERT, reason="condition1",
                           condition1=False)
    wit = check_condition2(f, cond2_bound)
    if wit is None:
        return Certificate(f, NOT_REFINED_HUMBERT, reason="condition2",
                           condition1=True, bound=cond2_bound)
    try:
        surface, _, _ = construct_witness(f, rep_bound, prime_cap)
    except SearchExhausted as exc:
        return Certificate(f, UNRESOLVED, reason=str(exc), condition1=True,
                           condition2_witness=wit, bound=exc.bound)
    height = 4
    tried = set()
    while height <= height_cap:
        for theta in enumerate_even_polarizations(surface, height):
            built = refined_humbert(surface, theta)
            if built.gram in tried:
                continue
            tried.add(built.gram)
            m = is_equivalent(built, f)
            if m is not None:
                cert = Certificate(f, REFINED_HUMBERT, condition1=True,
                                   condition2_witness=wit,
                                   witness_surface=surface,
                                   witness_theta=theta, equivalence=m)
                assert cert.verify()
                return cert
        height *= 2
    return Certificate(f, UNRESOLVED, reason="no equivalent polarization found",
                       condition1=True, condition2_witness=wit, bound=height_cap)


# ---------------------------------------------------------------------------
# fixed-discriminant enumeration

def enumerate_forms_with_disc(disc: int) -> List[QuadForm]:
    """All reduced positive ternary forms of the given (negative)
    discriminant, via a bounded coefficient scan with canonical dedup."""
    if disc >= 0:
        raise ValueError("negative discriminant expected")
    target_det = -2 * disc
    seen = {}
    limit = abs(disc)
    a = 1
    while a * a * a <= limit:
        b = a
        while a * b * b <= limit:
            for t in range(-a, a + 1):          # xy
                den = 8 * a * b - 2 * t * t     # positive: t^2 <= a^2 <= ab
                for s in range(-a, a + 1):      # xz
                    for r in range(-b, b + 1):  # yz
                        # det is linear in c, so c is solved, not scanned
                        num = target_det + 2 * a * r * r + 2 * b * s * s - 2 * r * s * t
                        if num <= 0 or num % den:
                            continue
                        c = num // den
                        if c < b or a * b * c > limit:
                            continue
                        q = QuadForm.ternary(a, b, c, r, s, t)
                        if not q.is_positive_definite():
                            continue
                        red, _ = reduce_form(q)
                        seen.setdefault(red.coeffs(), red)
            b += 1
        a += 1
    return [seen[k] for k in sorted(seen)]


def verify_theorem1(surface: SurfaceModel, theta: NSElement,
                    height_cap=16):
    """Check that every imprimitive form of the same discriminant and genus
    as the invariant of theta is realized by some enumerated polarization.
    Returns [(form, realizing theta or None)]."""
    ok, even = is_polarization(theta, surface)
    if not (ok and even):
        raise ValueError("even polarization expected")
    base = refined_humbert(surface, theta)
    pool = enumerate_forms_with_disc(base.disc)
    members = []
    for g in pool:
        if g.content() != base.content():
            continue
        if not check_condition1(g):
            continue
        if genus_equal_smith(g.half(), base.half()):
            members.append(g)
    report = []
    for g in members:
        found = None
        height = 4
        while found is None and height <= height_cap:
            for cand in enumerate_even_polarizations(surface, height):
                if is_equivalent(refined_humbert(surface, cand), g) is not None:
                    found = cand
                    break
            height *= 2
        report.append((g, found))
    return report

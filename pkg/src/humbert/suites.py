"""Named verification suites for the CLI: quick reruns of the key
identities on small deterministic pools."""

from __future__ import annotations

import random

from .forms import QuadForm, is_equivalent
from .binary import CHI_8, CHI_M4
from .ternary import genus_equal_smith, smith_data
from .surface import (
    NSElement, SurfaceModel, enumerate_even_polarizations, refined_humbert,
)
from .classify import check_condition1, check_condition2


def _surface_pool(count, rng, disc_cap=200):
    out = []
    while len(out) < count:
        a = rng.randint(1, 6)
        b = rng.randint(0, a)
        c = rng.randint(a, 8)
        if b * b - 4 * a * c >= 0:
            continue
        q = QuadForm.binary(a, b, c)
        if abs(q.disc) <= disc_cap:
            out.append(SurfaceModel(q))
    return out


def suite_invariants():
    """Order invariants of constructed forms match the degree form data."""
    failures = []
    rng = random.Random(2024)
    checked = 0
    for surface in _surface_pool(40, rng):
        q = surface.degree_form
        if q.disc % 4 != 0:
            continue
        for theta in enumerate_even_polarizations(surface, 4):
            form = refined_humbert(surface, theta)
            if form.det != 32 * q.det:
                failures.append("det mismatch at q=%s theta=%s" % (q.coeffs(), theta))
                continue
            if form.content() != 4:
                failures.append("content != 4 at q=%s theta=%s" % (q.coeffs(), theta))
                continue
            t = q.content()
            dprime = -q.disc // (t * t)
            prof = smith_data(form.half())
            if prof.omega != t or prof.delta != dprime // 2:
                failures.append("order mismatch at q=%s theta=%s" % (q.coeffs(), theta))
            if not check_condition1(form) or check_condition2(form) is None:
                failures.append("conditions fail at q=%s theta=%s" % (q.coeffs(), theta))
            checked += 1
            if checked >= 60:
                return failures
    return failures


def suite_census():
    """Single genus for x^2+3y^2, two genera split by chi_8 for 3x^2+4y^2."""
    from .surface import genus_census
    failures = []
    c1 = genus_census(SurfaceModel(QuadForm.binary(1, 0, 3)), 8)
    if len(c1) != 1:
        failures.append("x^2+3y^2 census: expected 1 genus, got %d" % len(c1))
    c2 = genus_census(SurfaceModel(QuadForm.binary(3, 0, 4)), 8)
    if len(c2) != 2:
        failures.append("3x^2+4y^2 census: expected 2 genera, got %d" % len(c2))
    else:
        v1 = dict(c2[0][2].chars_reciprocal).get(CHI_8)
        v2 = dict(c2[1][2].chars_reciprocal).get(CHI_8)
        if v1 is None or v2 is None or v1 == v2:
            failures.append("3x^2+4y^2 census: genera not split by chi_8")
    return failures


def suite_characters():
    """chi_m4 of the reciprocal is opposite to chi_m4 of Omega."""
    failures = []
    rng = random.Random(11)
    count = 0
    for surface in _surface_pool(60, rng):
        q = surface.degree_form
        if q.disc % 4 != 0:
            continue
        for theta in enumerate_even_polarizations(surface, 3):
            prof = smith_data(refined_humbert(surface, theta).half())
            recip_m4 = dict(prof.chars_reciprocal).get(CHI_M4)
            if recip_m4 != -CHI_M4.value(prof.omega):
                failures.append("chi_m4 identity fails for q=%s" % (q.coeffs(),))
            count += 1
            if count >= 40:
                return failures
    return failures


SUITES = {
    "invariants": suite_invariants,
    "census": suite_census,
    "characters": suite_characters,
}

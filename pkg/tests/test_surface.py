import pytest

from humbert.forms import QuadForm, is_equivalent, reduce_form
from humbert.ternary import jordan_odd, smith_data
from humbert.surface import (
    NSElement, SurfaceModel, complete_primitive, enumerate_even_polarizations,
    f_q, genus_census, is_polarization, make_even_polarization, pairing,
    refined_humbert,
)

from conftest import random_pos_binary, seeded

Q13 = SurfaceModel(QuadForm.binary(1, 0, 3))


def test_pairing_examples():
    theta = NSElement(2, 2, (0, 1))
    assert pairing(theta, theta, Q13) == 2
    assert pairing(NSElement(1, 0, (0, 0)), NSElement(0, 1, (0, 0)), Q13) == 1
    h = NSElement(0, 0, (1, 1))
    assert pairing(h, h, Q13) == -2 * Q13.degree_form((1, 1))


def test_pairing_symmetric_even():
    rng = seeded("pairing")
    for _ in range(50):
        S = SurfaceModel(random_pos_binary(rng))
        d1 = NSElement(rng.randint(-4, 4), rng.randint(-4, 4),
                       (rng.randint(-4, 4), rng.randint(-4, 4)))
        d2 = NSElement(rng.randint(-4, 4), rng.randint(-4, 4),
                       (rng.randint(-4, 4), rng.randint(-4, 4)))
        assert pairing(d1, d2, S) == pairing(d2, d1, S)
        assert pairing(d1, d1, S) % 2 == 0


def test_is_polarization():
    assert is_polarization(NSElement(2, 2, (0, 1)), Q13) == (True, True)
    assert is_polarization(NSElement(1, 1, (0, 0)), Q13) == (True, False)
    assert is_polarization(NSElement(2, 2, (1, 0)), Q13)[0] is False
    # even needs 4 | disc of the degree form
    S = SurfaceModel(QuadForm.binary(1, 1, 1))
    assert is_polarization(NSElement(2, 1, (1, 0)), S) == (True, False)


def test_make_even_polarization():
    theta = make_even_polarization(Q13)
    assert (theta.a, theta.b) == (2, 2) and theta.h in ((0, 1), (0, -1))
    assert make_even_polarization(SurfaceModel(QuadForm.binary(1, 0, 1))) is None
    assert make_even_polarization(SurfaceModel(QuadForm.binary(1, 1, 1))) is None


def test_complete_primitive():
    rng = seeded("complete")
    import math
    for n in (2, 3, 4):
        for _ in range(30):
            v = tuple(rng.randint(-9, 9) for _ in range(n))
            if math.gcd(*v) != 1:
                continue
            m = complete_primitive(v)
            assert tuple(row[0] for row in m.matrix) == v
    with pytest.raises(ValueError):
        complete_primitive((2, 4, 6))


def test_refined_humbert_worked_example():
    form = refined_humbert(Q13, NSElement(2, 2, (0, 1)))
    assert form.det == 384 == 32 * Q13.degree_form.det
    red, _ = reduce_form(form)
    target, _ = reduce_form(QuadForm.ternary(4, 4, 4, 0, 0, 4))
    assert red == target
    with pytest.raises(ValueError):
        refined_humbert(Q13, NSElement(2, 2, (1, 0)))


def test_refined_humbert_quotient_well_defined():
    # Q(D + m*theta) = Q(D) in the rank-4 model
    rng = seeded("quotient")
    for _ in range(60):
        S = SurfaceModel(random_pos_binary(rng))
        ths = enumerate_even_polarizations(S, 4)
        if not ths:
            continue
        theta = rng.choice(ths)

        def q_of(d):
            return pairing(d, theta, S) ** 2 - 2 * pairing(d, d, S)

        d = NSElement(rng.randint(-4, 4), rng.randint(-4, 4),
                      (rng.randint(-4, 4), rng.randint(-4, 4)))
        m = rng.randint(-3, 3)
        shifted = NSElement(d.a + m * theta.a, d.b + m * theta.b,
                            (d.h[0] + m * theta.h[0], d.h[1] + m * theta.h[1]))
        assert q_of(shifted) == q_of(d)


def test_f_q():
    assert f_q(Q13).coeffs() == (1, 4, 12, 0, 0, 0)
    rng = seeded("fq")
    for _ in range(50):
        S = SurfaceModel(random_pos_binary(rng, diag=5))
        built = refined_humbert(S, NSElement(1, 1, (0, 0)))
        assert is_equivalent(built, f_q(S)) is not None


def test_f_q_local_equivalence():
    rng = seeded("fqlocal")
    for _ in range(20):
        S = SurfaceModel(random_pos_binary(rng, diag=5))
        ths = enumerate_even_polarizations(S, 4)
        base = f_q(S)
        for theta in ths[:3]:
            form = refined_humbert(S, theta)
            for p in (3, 5, 7):
                assert jordan_odd(form, p) == jordan_odd(base, p)


def test_enumerate_even_polarizations():
    ths = enumerate_even_polarizations(Q13, 4)
    got = {(t.a, t.b, t.h) for t in ths}
    assert (2, 2, (0, 1)) in got and (2, 2, (0, -1)) in got
    for t in ths:
        assert is_polarization(t, Q13) == (True, True)
    # exhaustive against a direct box scan
    brute = set()
    for a in range(1, 5):
        for b in range(1, 5):
            for h1 in range(-4, 5):
                for h2 in range(-4, 5):
                    t = NSElement(a, b, (h1, h2))
                    ok, even = is_polarization(t, Q13)
                    if ok and even:
                        brute.add((a, b, (h1, h2)))
    assert got == brute
    assert enumerate_even_polarizations(SurfaceModel(QuadForm.binary(1, 0, 1)), 8) == []
    with pytest.raises(ValueError):
        enumerate_even_polarizations(Q13, 0)


def test_genus_census():
    rows = genus_census(Q13, 8)
    assert len(rows) == 1
    rep, count, prof = rows[0]
    assert rep.coeffs() == (4, 4, 4, 0, 0, -4) and count == 22
    assert (prof.omega, prof.delta) == (1, 6)

    rows = genus_census(SurfaceModel(QuadForm.binary(3, 0, 4)), 8)
    assert len(rows) == 2
    assert [(r.coeffs(), n) for r, n, _ in rows] == \
        [((4, 4, 16, 0, 0, -4), 2), ((4, 8, 8, 0, -4, -4), 20)]
    from humbert.binary import CHI_8
    v1 = dict(rows[0][2].chars_reciprocal)[CHI_8]
    v2 = dict(rows[1][2].chars_reciprocal)[CHI_8]
    assert {v1, v2} == {1, -1}

    with pytest.raises(ValueError):
        genus_census(SurfaceModel(QuadForm.binary(1, 0, 1)), 8)


def test_ns_element_json():
    t = NSElement(2, 4, (1, -1))
    assert NSElement.from_json(t.to_json()) == t

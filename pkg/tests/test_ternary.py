import pytest

from humbert.forms import QuadForm, is_equivalent, reduce_form
from humbert.binary import CHI_8, CHI_M4, char_of_form, chi_ell
from humbert.ternary import (
    adjoint, brandt_invariants, brandt_reciprocal, find_binary_rep,
    genus_equal_brandt, genus_equal_smith, jordan_odd, locally_equivalent,
    smith_data, vp_check,
)

from conftest import rand_unimodular, random_improper, random_pos_ternary, seeded


def test_adjoint_examples():
    adj = adjoint(QuadForm.ternary(1, 1, 1, 0, 0, 1))
    assert adj.coeffs() == (-4, -4, -3, 0, 0, 4)
    assert adjoint(QuadForm.ternary(1, 1, 1, 0, 0, 0)).coeffs() == (-4, -4, -4, 0, 0, 0)


def test_adjoint_transform_equivariance():
    rng = seeded("adjtrans")
    for _ in range(30):
        f = random_pos_ternary(rng)
        g = f.transform(rand_unimodular(3, rng))
        # adjoints of positive forms are negative definite; compare negated
        assert is_equivalent(adjoint(f).scale(-1), adjoint(g).scale(-1)) is not None


def test_brandt_invariants():
    assert brandt_invariants(QuadForm.ternary(1, 1, 1, 0, 0, 1)) == (-1, -48)
    assert brandt_invariants(QuadForm.ternary(1, 1, 1, 0, 0, 0)) == (-4, -4)
    with pytest.raises(ValueError):
        brandt_invariants(QuadForm.ternary(2, 2, 2, 0, 0, 2))


def test_i2_integrality():
    rng = seeded("i2int")
    count = 0
    while count < 500:
        f = random_pos_ternary(rng)
        if f.content() != 1:
            continue
        i1, i2 = brandt_invariants(f)
        assert i1 * i1 * i2 == 16 * f.disc
        count += 1


def test_brandt_reciprocal():
    assert brandt_reciprocal(QuadForm.ternary(1, 1, 1, 0, 0, 1)).coeffs() == (4, 4, 3, 0, 0, -4)
    assert brandt_reciprocal(QuadForm.ternary(1, 1, 1, 0, 0, 0)).coeffs() == (1, 1, 1, 0, 0, 0)
    assert brandt_reciprocal(QuadForm.ternary(1, 1, 1, 0, 0, 1))((0, 0, 1)) == 3


def test_smith_data_example():
    f = QuadForm.ternary(2, 2, 2, 0, 0, 2)
    prof = smith_data(f)
    assert (prof.omega, prof.delta) == (1, 6)
    assert prof.reciprocal.coeffs() == (4, 4, 3, 0, 0, -4)
    labels = {c.label() for c, _ in prof.chars_reciprocal}
    assert {"chi_3", "chi_m4"} <= labels
    assert prof.reciprocal_class == "properly-primitive"
    with pytest.raises(ValueError):
        smith_data(QuadForm.ternary(1, 1, 1, 0, 0, 0))


def test_smith_order_identities():
    # I1(f/2) = -Omega, I2(f/2) = -8*Delta, disc(f/2) = I1^2*I2/16
    rng = seeded("order")
    for _ in range(60):
        f = random_improper(rng)
        prof = smith_data(f)
        half = f.half()
        assert brandt_invariants(half) == (prof.i1, prof.i2)
        assert prof.i1 == -prof.omega and prof.i2 == -8 * prof.delta
        assert prof.omega % 2 == 1 and prof.i1 < 0 and prof.i2 % 16 == 0
        assert 16 * half.disc == prof.i1 ** 2 * prof.i2


def test_chi_m4_reciprocal_identity():
    rng = seeded("chim4")
    for _ in range(50):
        prof = smith_data(random_improper(rng))
        assert dict(prof.chars_reciprocal)[CHI_M4] == -CHI_M4.value(prof.omega)


def test_genus_equal_smith():
    rng = seeded("smitheq")
    for _ in range(25):
        f = random_improper(rng)
        g = f.transform(rand_unimodular(3, rng))
        assert genus_equal_smith(f, g)
    # different Delta means different order
    f1 = QuadForm.ternary(2, 2, 2, 0, 0, 2)
    f2 = QuadForm.ternary(2, 2, 6, 0, 0, 2)
    assert smith_data(f1).delta != smith_data(f2).delta
    assert not genus_equal_smith(f1, f2)


def test_genus_equal_brandt_matches_smith():
    rng = seeded("brandteq")
    checked = 0
    while checked < 100:
        f1 = random_improper(rng).half()
        f2 = random_improper(rng).half()
        assert genus_equal_brandt(f1, f2) == genus_equal_smith(f1.scale(2), f2.scale(2))
        checked += 1
    f = QuadForm.ternary(1, 1, 3, 1, 1, 1)
    assert genus_equal_brandt(f, f)
    with pytest.raises(ValueError):
        genus_equal_brandt(QuadForm.ternary(1, 1, 1, 0, 0, 0), f)


def test_jordan_odd_examples():
    assert jordan_odd(QuadForm.ternary(1, 1, 1, 0, 0, 0), 3).components == \
        ((0, 1), (0, 1), (0, 1))
    assert jordan_odd(QuadForm.binary(1, 0, 3), 3).components == ((0, 1), (1, 1))
    f = QuadForm.ternary(1, 2, 3, 1, 0, 1)
    assert jordan_odd(f, 3) == jordan_odd(f.scale(4), 3)
    with pytest.raises(ValueError):
        jordan_odd(f, 2)


def test_jordan_odd_invariance():
    rng = seeded("jordan")
    for _ in range(12):
        f = random_pos_ternary(rng)
        for p in (3, 5, 7):
            base = jordan_odd(f, p)
            for _ in range(10):
                g = f.transform(rand_unimodular(3, rng))
                assert jordan_odd(g, p) == base
                assert locally_equivalent(f, g, p)


def test_vp_check():
    rng = seeded("vp")
    for _ in range(15):
        f = random_pos_ternary(rng)
        if f.content() != 1:
            continue
        g = f.transform(rand_unimodular(3, rng))
        for p in (3, 5):
            assert vp_check(f, g, p)
    with pytest.raises(ValueError):
        vp_check(QuadForm.ternary(1, 1, 1, 0, 0, 0),
                 QuadForm.ternary(1, 1, 3, 0, 0, 0), 3)


def test_find_binary_rep():
    f = QuadForm.ternary(2, 2, 2, 0, 0, 2)
    found = find_binary_rep(f, -28, content_filter=2)
    assert found is not None
    phi, (u, v) = found
    assert phi.disc == -28 and phi.content() == 2
    # the restricted gram really is the binary form of the pair
    assert phi.coeffs() == (f(u), f.bilinear(u, v), f(v))
    assert find_binary_rep(f, 28) is None
    assert find_binary_rep(f, -3, bound=64) is None   # f is even-valued

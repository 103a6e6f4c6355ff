import random

from humbert.forms import QuadForm, UnimodularMap, mat_identity, mat_mul


def rand_unimodular(n, rng, steps=12, shear=2):
    """Random product of elementary shears and swaps; always det +-1."""
    m = mat_identity(n)
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        k = rng.randint(-shear, shear)
        e = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
        e[i][j] = k
        m = mat_mul(m, tuple(map(tuple, e)))
    return UnimodularMap(m)


def random_pos_ternary(rng, diag=6, cross=2):
    while True:
        try:
            f = QuadForm.ternary(rng.randint(1, diag), rng.randint(1, diag),
                                 rng.randint(1, diag), rng.randint(-cross, cross),
                                 rng.randint(-cross, cross), rng.randint(-cross, cross))
        except ValueError:
            continue
        if f.is_positive_definite():
            return f


def random_pos_binary(rng, diag=8, cross=None):
    while True:
        a = rng.randint(1, diag)
        c = rng.randint(1, diag)
        b = rng.randint(-(cross or diag), cross or diag)
        if b * b - 4 * a * c >= 0:
            continue
        return QuadForm.binary(a, b, c)


def random_improper(rng, diag=6, cross=3):
    """2g with g primitive carrying an odd cross coefficient."""
    while True:
        g = random_pos_ternary(rng, diag, cross)
        if g.primitivity() == ("properly-primitive", 1) or g.content() != 1:
            continue
        f = g.scale(2)
        if f.primitivity().kind == "improperly-primitive":
            return f


def seeded(tag):
    return random.Random(tag)

"""Integral quadratic forms in 2 or 3 variables, exact arithmetic throughout.

A form is stored by its coefficient matrix A: the unique integral symmetric
matrix with even diagonal such that f(x) = x A x^t / 2.  The binary form
a x^2 + b xy + c y^2 therefore has matrix [[2a, b], [b, 2c]].

Everything here is pure and immutable; all searches are exhaustive for their
stated bound so that a negative answer is a certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional


class SearchExhausted(Exception):
    """A bounded search ran out of budget without deciding the question."""

    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


# ---------------------------------------------------------------------------
# small integer matrix helpers (tuples of tuples, row major)

def mat_identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a, b):
    n, m, k = len(a), len(b[0]), len(b)
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m))
        for i in range(n)
    )


def mat_transpose(a):
    return tuple(zip(*a))


def mat_vec(a, v):
    return tuple(sum(a[i][j] * v[j] for j in range(len(v))) for i in range(len(a)))


def mat_det(a):
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    if n == 3:
        return (
            a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
        )
    # Laplace expansion is fine at size 4 (used once per witness search)
    det = 0
    for j in range(n):
        minor = tuple(row[:j] + row[j + 1:] for row in a[1:])
        det += (-1) ** j * a[0][j] * mat_det(minor)
    return det


def mat_adjugate(a):
    n = len(a)
    if n == 2:
        return ((a[1][1], -a[0][1]), (-a[1][0], a[0][0]))
    cof = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = tuple(
                tuple(a[r][c] for c in range(n) if c != j)
                for r in range(n) if r != i
            )
            cof[i][j] = (-1) ** (i + j) * mat_det(minor)
    return mat_transpose(tuple(map(tuple, cof)))


def mat_scale(a, k):
    return tuple(tuple(k * x for x in row) for row in a)


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UnimodularMap:
    """A GL_n(Z) change of basis, acting on forms by A -> M^t A M."""

    matrix: tuple

    def __post_init__(self):
        d = mat_det(self.matrix)
        if d not in (1, -1):
            raise ValueError("matrix is not unimodular (det %s)" % d)

    @property
    def arity(self):
        return len(self.matrix)

    @property
    def inverse(self):
        d = mat_det(self.matrix)
        return mat_scale(mat_adjugate(self.matrix), d)  # d = 1/d for d = +-1

    def inv(self) -> "UnimodularMap":
        return UnimodularMap(self.inverse)

    def compose(self, other: "UnimodularMap") -> "UnimodularMap":
        return UnimodularMap(mat_mul(self.matrix, other.matrix))

    @classmethod
    def identity(cls, n) -> "UnimodularMap":
        return cls(mat_identity(n))


class Primitivity(NamedTuple):
    """Classical taxonomy.  kind is 'properly-primitive' (content 1, even
    cross coefficients), 'improperly-primitive' (f/2 primitive with an odd
    half-cross coefficient), or 'imprimitive' for everything else."""

    kind: str
    content: int


class RepVector(NamedTuple):
    coords: tuple
    value: int
    primitive: bool


@dataclass(frozen=True)
class QuadForm:
    gram: tuple

    def __post_init__(self):
        n = len(self.gram)
        if n not in (2, 3):
            raise ValueError("only binary and ternary forms are supported")
        for i in range(n):
            if len(self.gram[i]) != n:
                raise ValueError("gram matrix is not square")
            if self.gram[i][i] % 2 != 0:
                raise ValueError("gram diagonal must be even")
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("gram matrix is not symmetric")
        if mat_det(self.gram) == 0:
            raise ValueError("degenerate form")

    # -- constructors ------------------------------------------------------

    @classmethod
    def binary(cls, a, b, c) -> "QuadForm":
        return cls(((2 * a, b), (b, 2 * c)))

    @classmethod
    def ternary(cls, a11, a22, a33, a23, a13, a12) -> "QuadForm":
        return cls(
            (
                (2 * a11, a12, a13),
                (a12, 2 * a22, a23),
                (a13, a23, 2 * a33),
            )
        )

    @classmethod
    def from_coeffs(cls, coeffs) -> "QuadForm":
        """Binary triple [a, b, c] or ternary sextuple
        [a11, a22, a33, a23, a13, a12]."""
        coeffs = list(coeffs)
        if len(coeffs) == 3:
            return cls.binary(*coeffs)
        if len(coeffs) == 6:
            return cls.ternary(*coeffs)
        raise ValueError("expected 3 or 6 coefficients, got %d" % len(coeffs))

    # -- basic data --------------------------------------------------------

    @property
    def arity(self):
        return len(self.gram)

    def coeffs(self):
        """Inverse of from_coeffs."""
        g = self.gram
        if self.arity == 2:
            return (g[0][0] // 2, g[0][1], g[1][1] // 2)
        return (
            g[0][0] // 2, g[1][1] // 2, g[2][2] // 2,
            g[1][2], g[0][2], g[0][1],
        )

    def __call__(self, x):
        if len(x) != self.arity:
            raise ValueError("dimension mismatch")
        total = 0
        for i, row in enumerate(self.gram):
            for j, a in enumerate(row):
                total += a * x[i] * x[j]
        return total // 2

    def bilinear(self, x, y):
        """The associated bilinear form f(x+y) - f(x) - f(y) = x A y^t."""
        return sum(
            self.gram[i][j] * x[i] * y[j]
            for i in range(self.arity) for j in range(self.arity)
        )

    @property
    def det(self):
        return mat_det(self.gram)

    @property
    def disc(self):
        d = self.det
        if self.arity == 2:
            return -d
        return -d // 2

    def disc_det(self):
        return (self.disc, self.det)

    def dickson_det(self):
        """t^2 - ab for a binary form a x^2 + 2t xy + b y^2."""
        if self.arity != 2:
            raise ValueError("Dickson determinant is for binary forms")
        a, b, c = self.coeffs()
        if b % 2 != 0:
            raise ValueError("middle coefficient must be even")
        return (b // 2) ** 2 - a * c

    def content(self):
        return math.gcd(*self.coeffs())

    def primitivity(self) -> Primitivity:
        c = self.content()
        cross = [self.gram[i][j] for i in range(self.arity) for j in range(i)]
        if c == 1 and all(x % 2 == 0 for x in cross):
            return Primitivity("properly-primitive", 1)
        if c == 2 and any((x // 2) % 2 != 0 for x in cross):
            return Primitivity("improperly-primitive", 2)
        return Primitivity("imprimitive", c)

    def is_positive_definite(self):
        g = self.gram
        if g[0][0] <= 0:
            return False
        m2 = g[0][0] * g[1][1] - g[0][1] * g[1][0]
        if m2 <= 0:
            return False
        return self.arity == 2 or mat_det(g) > 0

    # -- arithmetic --------------------------------------------------------

    def scale(self, k) -> "QuadForm":
        if k == 0:
            raise ValueError("cannot scale by zero")
        return QuadForm(mat_scale(self.gram, k))

    def divide(self, k) -> "QuadForm":
        """f/k, defined when every polynomial coefficient is divisible by k."""
        if any(c % k for c in self.coeffs()):
            raise ValueError("form is not divisible by %d" % k)
        return QuadForm(tuple(tuple(x // k for x in row) for row in self.gram))

    def half(self) -> "QuadForm":
        return self.divide(2)

    def transform(self, m: UnimodularMap) -> "QuadForm":
        if m.arity != self.arity:
            raise ValueError("dimension mismatch")
        return QuadForm(mat_mul(mat_transpose(m.matrix), mat_mul(self.gram, m.matrix)))

    # -- serialization -----------------------------------------------------

    def to_json(self):
        return {"arity": self.arity, "coeffs": list(self.coeffs())}

    @classmethod
    def from_json(cls, obj) -> "QuadForm":
        form = cls.from_coeffs(obj["coeffs"])
        if form.arity != obj["arity"]:
            raise ValueError("arity does not match coefficient count")
        return form

    def __str__(self):
        names = "xyz"
        terms = []
        cs = self.coeffs()
        if self.arity == 2:
            monos = ["x^2", "xy", "y^2"]
            order = [cs[0], cs[1], cs[2]]
        else:
            monos = ["x^2", "y^2", "z^2", "yz", "xz", "xy"]
            order = list(cs)
        for c, mono in zip(order, monos):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            part = mono if mag == 1 else "%d%s" % (mag, mono)
            terms.append((sign, part))
        if not terms:
            return "0"
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(" %s %s" % t for t in terms[1:])


# ---------------------------------------------------------------------------
# exhaustive vector enumeration below a value bound

def _isqrt_floor(num, den):
    """floor(sqrt(num/den)) for num >= 0, den > 0."""
    return math.isqrt(num // den)


def _x_range(a, b, c_minus_m):
    """Integer x with a x^2 + b x + c_minus_m <= 0 (a > 0), with slack."""
    disc = b * b - 4 * a * c_minus_m
    if disc < 0:
        return range(0, 0)
    s = math.isqrt(disc)
    lo = -(b + s + 2 * a) // (2 * a)   # generous by one on each side
    hi = (-b + s + 2 * a) // (2 * a)
    return range(lo, hi + 1)


def short_vectors(f: QuadForm, bound):
    """All nonzero x with f(x) <= bound, up to sign (last nonzero coordinate
    positive), sorted by (value, coords).  Exhaustive."""
    if bound < 1:
        return []
    if not f.is_positive_definite():
        raise ValueError("enumeration requires a positive definite form")
    out = []
    if f.arity == 2:
        a, b, c = f.coeffs()
        ymax = _isqrt_floor(4 * a * bound, 4 * a * c - b * b) + 1
        for y in range(0, ymax + 1):
            for x in _x_range(a, b * y, c * y * y - bound):
                if y == 0 and x <= 0:
                    continue
                v = f((x, y))
                if 0 < v <= bound:
                    out.append((v, (x, y)))
    else:
        a, b, c, r, s, t = f.coeffs()
        det2 = 4 * a * b - t * t
        zmax = _isqrt_floor(2 * bound * det2, f.det) + 1
        for z in range(0, zmax + 1):
            # y-range where min over x of f(x, y, z) can still be <= bound
            qa = 4 * a * b - t * t
            qb = 4 * a * r * z - 2 * t * s * z
            qc = (4 * a * c - s * s) * z * z - 4 * a * bound
            ydisc = qb * qb - 4 * qa * qc
            if ydisc < 0:
                continue
            sy = math.isqrt(ydisc)
            ylo = -(qb + sy + 2 * qa) // (2 * qa)
            yhi = (-qb + sy + 2 * qa) // (2 * qa)
            for y in range(ylo, yhi + 1):
                for x in _x_range(a, t * y + s * z, b * y * y + r * y * z + c * z * z - bound):
                    if z == 0 and (y < 0 or (y == 0 and x <= 0)):
                        continue
                    v = f((x, y, z))
                    if 0 < v <= bound:
                        out.append((v, (x, y, z)))
    out.sort()
    return out


def _is_primitive_vector(x):
    return math.gcd(*x) == 1


def represent(f: QuadForm, m, primitive_only=False) -> Optional[RepVector]:
    """A vector with f(x) = m, or None (certified: the search is exhaustive)."""
    if m <= 0:
        raise ValueError("target must be positive")
    best = None
    for v, x in short_vectors(f, m):
        if v != m:
            continue
        prim = _is_primitive_vector(x)
        if primitive_only and not prim:
            continue
        if best is None:
            best = RepVector(x, v, prim)
            break
    return best


def represented_values(f: QuadForm, bound, residue=None):
    """All values of f up to bound (optionally filtered by value = a mod m),
    each with its first witness, ascending."""
    if bound < 1:
        raise ValueError("bound must be positive")
    seen = {}
    for v, x in short_vectors(f, bound):
        if residue is not None:
            a, m = residue
            if v % m != a % m:
                continue
        if v not in seen:
            seen[v] = RepVector(x, v, _is_primitive_vector(x))
        elif not seen[v].primitive and _is_primitive_vector(x):
            seen[v] = RepVector(x, v, True)
    return [seen[v] for v in sorted(seen)]


# ---------------------------------------------------------------------------
# reduction and equivalence

def _pair_primitive(u, v):
    """True if (u, v) extends to a basis of Z^n: the 2x2 minors are coprime."""
    n = len(u)
    g = 0
    for i in range(n):
        for j in range(i + 1, n):
            g = math.gcd(g, u[i] * v[j] - u[j] * v[i])
    return g == 1


def _greedy_gram(f: QuadForm):
    """Cheap size reduction; only used to bound the canonical search."""
    n = f.arity
    g = [list(row) for row in f.gram]
    improved = True
    while improved:
        improved = False
        for i in range(n):
            for j in range(n):
                if i == j or g[j][j] == 0:
                    continue
                k = -round(g[i][j] / g[j][j])
                if k == 0:
                    continue
                new_diag = g[i][i] + 2 * k * g[i][j] + k * k * g[j][j]
                if new_diag >= g[i][i]:
                    continue
                # column op b_i += k b_j on the gram
                for l in range(n):
                    g[i][l] += k * g[j][l]
                for l in range(n):
                    g[l][i] += k * g[l][j]
                improved = True
    return g


def _reduce_binary(f: QuadForm):
    a, b, c = f.coeffs()
    m = mat_identity(2)
    while True:
        k = (a - b) // (2 * a)  # brings b into (-a, a]
        if k:
            m = mat_mul(m, ((1, k), (0, 1)))
            a, b, c = a, b + 2 * k * a, a * k * k + b * k + c
        if a > c:
            m = mat_mul(m, ((0, 1), (1, 0)))
            a, c = c, a
            continue
        break
    if b < 0:
        m = mat_mul(m, ((1, 0), (0, -1)))
        b = -b
    return QuadForm.binary(a, b, c), UnimodularMap(m)


def _reduce_ternary_key(gram):
    return tuple(tuple(row) for row in gram)


@lru_cache(maxsize=None)
def _reduce_ternary_cached(gram):
    f = QuadForm(gram)
    greedy = _greedy_gram(f)
    bound = max(greedy[i][i] for i in range(3)) // 2
    vecs = short_vectors(f, bound)
    signed = []
    for val, x in vecs:
        signed.append((val, x))
        signed.append((val, tuple(-c for c in x)))
    values = sorted({v for v, _ in vecs})
    by_value = {v: [x for w, x in signed if w == v] for v in values}

    m1 = values[0]
    # negating the first basis vector gives the same gram as negating the
    # other two, so u only needs one sign
    s1 = [x for val, x in vecs if val == m1]

    # second staged minimum over primitive pairs
    m2 = None
    for v in values:
        if any(_pair_primitive(u, w) for u in s1 for w in by_value[v]):
            m2 = v
            break
    s2 = by_value[m2]

    def gvec(x):
        return mat_vec(gram, x)

    def dot(x, y):
        return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]

    # third staged minimum over unimodular triples, lexicographically least
    # gram (diagonal first, then upper triangle)
    best = None
    for v in values:
        if v < m2:
            continue
        xs = [(x, gvec(x)) for x in by_value[v]]
        for u in s1:
            gu = gvec(u)
            ugu = dot(u, gu)
            for w in s2:
                gw = gvec(w)
                ugw = dot(u, gw)
                wgw = dot(w, gw)
                c0 = u[1] * w[2] - u[2] * w[1]
                c1 = u[2] * w[0] - u[0] * w[2]
                c2 = u[0] * w[1] - u[1] * w[0]
                for x, gx in xs:
                    d = c0 * x[0] + c1 * x[1] + c2 * x[2]
                    if d != 1 and d != -1:
                        continue
                    key = (ugu, wgw, dot(x, gx), ugw, dot(u, gx), dot(w, gx))
                    if best is None or key < best[0]:
                        best = (key, (u, w, x))
        if best is not None:
            break
    assert best is not None, "canonical search must succeed for a basis bound"
    key, (u, w, x) = best
    mat = mat_transpose((u, w, x))  # columns u, w, x
    gcan = ((key[0], key[3], key[4]), (key[3], key[1], key[5]),
            (key[4], key[5], key[2]))
    assert mat_mul(mat_transpose(mat), mat_mul(gram, mat)) == gcan
    return QuadForm(gcan), UnimodularMap(mat)


def reduce_form(f: QuadForm):
    """Canonical reduced representative and the map achieving it:
    transform(f, M) is the reduced form.  Idempotent on its own output."""
    if not f.is_positive_definite():
        raise ValueError("reduction requires a positive definite form")
    if f.arity == 2:
        return _reduce_binary(f)
    return _reduce_ternary_cached(_reduce_ternary_key(f.gram))


def is_equivalent(f1: QuadForm, f2: QuadForm) -> Optional[UnimodularMap]:
    """A map M with M^t A(f1) M = A(f2), or None if the forms are not
    GL_n(Z)-equivalent."""
    if f1.arity != f2.arity:
        raise ValueError("dimension mismatch")
    if f1.disc != f2.disc:
        return None
    r1, u1 = reduce_form(f1)
    r2, u2 = reduce_form(f2)
    if r1.gram != r2.gram:
        return None
    return UnimodularMap(mat_mul(u1.matrix, u2.inverse))

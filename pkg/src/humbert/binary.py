"""Genus theory for binary forms: assigned characters, the principal genus,
the content-4 family q_s parametrized by seed triples, and the constructive
residue lemmas used by the ternary classification."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from sympy import isprime, jacobi_symbol

from .forms import (
    QuadForm, RepVector, SearchExhausted, UnimodularMap,
    is_equivalent, mat_det, mat_mul, mat_transpose, mat_vec,
    represent, represented_values,
)

ODD_PRIME = "odd_prime"
MINUS_FOUR = "minus_four"
EIGHT = "eight"
MINUS_FOUR_EIGHT = "minus_four_eight"

_LABELS = {MINUS_FOUR: "chi_m4", EIGHT: "chi_8", MINUS_FOUR_EIGHT: "chi_m4_8"}


@dataclass(frozen=True, order=True)
class Character:
    kind: str
    prime: int = 0

    def __post_init__(self):
        if self.kind == ODD_PRIME:
            if self.prime < 3 or self.prime % 2 == 0 or not isprime(self.prime):
                raise ValueError("character needs an odd prime, got %s" % self.prime)
        elif self.kind not in (MINUS_FOUR, EIGHT, MINUS_FOUR_EIGHT):
            raise ValueError("unknown character kind %r" % self.kind)

    @property
    def modulus(self):
        return self.prime if self.kind == ODD_PRIME else 2

    def label(self):
        if self.kind == ODD_PRIME:
            return "chi_%d" % self.prime
        return _LABELS[self.kind]

    def value(self, m):
        if m % self.modulus == 0:
            raise ValueError("%s undefined at %d" % (self.label(), m))
        if self.kind == ODD_PRIME:
            return int(jacobi_symbol(m, self.prime))
        v = 1
        if self.kind in (MINUS_FOUR, MINUS_FOUR_EIGHT):
            v *= -1 if ((m - 1) // 2) % 2 else 1
        if self.kind in (EIGHT, MINUS_FOUR_EIGHT):
            v *= -1 if ((m * m - 1) // 8) % 2 else 1
        return v


def chi_ell(p):
    return Character(ODD_PRIME, p)


CHI_M4 = Character(MINUS_FOUR)
CHI_8 = Character(EIGHT)
CHI_M4_8 = Character(MINUS_FOUR_EIGHT)


def odd_prime_divisors(n):
    n = abs(n)
    out = []
    p = 3
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 2
    while n % 2 == 0:
        n //= 2
    if n > 1:
        out.append(n)
    return sorted(set(out))


def binary_characters(q: QuadForm):
    """Assigned characters of a primitive binary form, keyed on its
    discriminant (Cox's table; supplementary part by -disc/4 mod 8)."""
    if q.arity != 2:
        raise ValueError("binary form expected")
    if q.content() != 1:
        raise ValueError("assigned characters need a primitive form")
    d = -q.disc
    chars = [chi_ell(p) for p in odd_prime_divisors(d)]
    if d % 4 == 0:
        n = d // 4
        if n % 4 == 1:
            chars.append(CHI_M4)
        elif n % 4 == 3:
            pass
        elif n % 8 == 0:
            chars.extend([CHI_M4, CHI_8])
        elif n % 8 == 2:
            chars.append(CHI_M4_8)
        elif n % 8 == 4:
            chars.append(CHI_M4)
        else:  # n = 6 mod 8
            chars.append(CHI_8)
    return chars


def char_of_form(chi: Character, q: QuadForm, start_bound=None):
    """chi evaluated at the smallest represented value coprime to its
    modulus; well defined exactly when chi is assigned to q."""
    bound = start_bound or 16
    cap = max(64 * chi.modulus, 4 * abs(q.disc))
    while bound <= cap:
        for rv in represented_values(q, bound):
            if math.gcd(rv.value, chi.modulus) == 1:
                return chi.value(rv.value)
        bound *= 4
    raise SearchExhausted(
        "no represented value coprime to %d below %d" % (chi.modulus, cap), cap)


def principal_genus_test(q: QuadForm):
    """True iff every assigned character of q is +1."""
    return all(char_of_form(chi, q) == 1 for chi in binary_characters(q))


def genus_equal_binary(q1: QuadForm, q2: QuadForm):
    if q1.disc != q2.disc:
        raise ValueError("discriminant mismatch")
    chars = binary_characters(q1)
    if chars != binary_characters(q2):
        return False
    return all(char_of_form(c, q1) == char_of_form(c, q2) for c in chars)


# ---------------------------------------------------------------------------
# the q_s family

@dataclass(frozen=True)
class SeedTriple:
    n1: int
    n2: int
    k: int
    delta: int

    def __post_init__(self):
        if self.n1 <= 0 or self.n2 <= 0 or self.delta <= 0:
            raise ValueError("seed triple needs n1, n2, delta > 0")
        if self.n1 * self.n2 - self.k * self.k * self.delta != 1:
            raise ValueError("seed triple must satisfy n1*n2 - k^2*delta = 1")

    @property
    def even(self):
        return math.gcd(self.n1, self.n2) % 2 == 0

    def to_json(self):
        return {"n1": self.n1, "n2": self.n2, "k": self.k, "delta": self.delta}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["n1"], obj["n2"], obj["k"], obj["delta"])


def build_qs(s: SeedTriple) -> QuadForm:
    """The binary form attached to a seed triple; disc is always -16*delta."""
    n1, n2, k, delta = s.n1, s.n2, s.k, s.delta
    m = n1 * n2
    q = QuadForm.binary(n1 * n1, 2 * k * delta * (m + 2), n2 * n2 * delta * (m + 3))
    assert q.disc == -16 * delta
    return q


def enumerate_P(delta, bound, even_only=False):
    """All seed triples with n1, n2 in [1, bound] and |k| <= bound."""
    if bound < 1:
        raise ValueError("bound must be positive")
    out = []
    for n1 in range(1, bound + 1):
        for k in range(-bound, bound + 1):
            # n1*n2 = 1 + k^2*delta pins n2
            m = 1 + k * k * delta
            if m % n1:
                continue
            n2 = m // n1
            if n2 > bound:
                continue
            s = SeedTriple(n1, n2, k, delta)
            if not even_only or s.even:
                out.append(s)
    out.sort(key=lambda s: (s.n1, s.n2, s.k))
    return out


def recognize_qs(q: QuadForm, delta, bound=64, growth_steps=4) -> Optional[SeedTriple]:
    """Decide whether q is equivalent to some q_s with an even seed triple of
    the given delta, and produce the triple.  The criterion (content 4,
    q/4 primitive of discriminant -delta = 1 mod 4 in the principal genus)
    is exact; the triple search is capped and reports exhaustion distinctly."""
    if q.arity != 2 or not q.is_positive_definite():
        raise ValueError("positive binary form expected")
    if q.content() != 4:
        return None
    q4 = q.divide(4)
    if q4.disc != -delta or (-q4.disc) % 4 != 3:
        return None
    if not principal_genus_test(q4):
        return None
    b = bound
    for _ in range(growth_steps):
        for s in enumerate_P(delta, b, even_only=True):
            if is_equivalent(build_qs(s), q) is not None:
                return s
        b *= 2
    raise SearchExhausted("criterion holds but no seed triple below bound", b)


# ---------------------------------------------------------------------------
# constructive residue lemmas

def _complete_vector_2d(v):
    """A GL_2(Z) matrix whose first column is the primitive vector v."""
    x, y = v
    g, a, b = _xgcd(x, y)
    assert g == 1
    m = ((x, -b), (y, a))
    assert mat_det(m) in (1, -1)
    return m


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


def _leading_rep_form(q, rv):
    """Transform q so the witness becomes (1, 0); returns (form, basis)."""
    m = _complete_vector_2d(rv.coords)
    return q.transform(UnimodularMap(m)), m


def _primitive_value_scan(q, residue, bound):
    for rv in represented_values(q, bound, residue):
        if rv.primitive:
            return rv
    return None


def two_residues(q: QuadForm):
    """Primitively represented r1 = 3 (mod 8) and r2 = 7 (mod 8) for a
    positive binary q with disc = 16 (mod 32) representing some value
    = 3 (mod 4).  Constructive probes first, bounded scan as fallback."""
    if q.arity != 2 or not q.is_positive_definite():
        raise ValueError("positive binary form expected")
    if q.disc % 32 != 16:
        raise ValueError("disc must be 16 mod 32, got %d" % q.disc)
    scan_cap = 8 * abs(q.disc)
    a0 = _primitive_value_scan(q, (3, 4), scan_cap)
    if a0 is None:
        raise ValueError("form does not represent any value 3 mod 4 below %d" % scan_cap)
    found = {}

    def record(rv):
        cls = rv.value % 8
        if cls in (3, 7) and rv.primitive and cls not in found:
            found[cls] = rv

    record(a0)
    q2, basis = _leading_rep_form(q, a0)
    for probe in ((1, 1), (0, 1)):
        val = q2(probe)
        coords = mat_vec(basis, probe)
        record(RepVector(tuple(coords), val, math.gcd(*coords) == 1))
    if len(found) < 2:
        for rv in represented_values(q, scan_cap):
            record(rv)
            if len(found) == 2:
                break
    if len(found) < 2:
        raise SearchExhausted("residues 3 and 7 mod 8 not both found", scan_cap)
    return found[3], found[7]


def coprime_residue(q: QuadForm, a: RepVector) -> RepVector:
    """From a primitively represented odd value a, a primitively represented
    a' = a (mod 4) with gcd(a', disc) = 1, built from the prime-divisor
    partition of the discriminant."""
    if q.arity != 2 or q.content() != 1:
        raise ValueError("primitive binary form expected")
    if q.disc % 2 != 0:
        raise ValueError("even discriminant expected")
    if a.value % 2 == 0 or not a.primitive or q(a.coords) != a.value:
        raise ValueError("need a primitively represented odd value")
    d = abs(q.disc)
    q2, basis = _leading_rep_form(q, a)
    ac, bc, cc = q2.coeffs()
    assert ac == a.value
    x2 = x3 = x4 = 1
    for p in ([2] + odd_prime_divisors(d)):
        if d % p:
            continue
        if ac % p == 0 and cc % p == 0:
            continue  # P1 is impossible for a primitive form
        if ac % p == 0:
            x2 *= p
        elif cc % p == 0:
            x3 *= p
        else:
            x4 *= p
    probe = (x2, x3 * x4)
    val = q2(probe)
    coords = tuple(mat_vec(basis, probe))
    out = RepVector(coords, val, math.gcd(*coords) == 1)
    assert out.primitive and math.gcd(val, d) == 1 and val % 4 == a.value % 4
    return out


def prime_represented(q: QuadForm, avoid=1, value_cap=10 ** 6):
    """The smallest prime represented by q not dividing avoid."""
    if q.content() != 1:
        raise ValueError("primitive form expected")
    bound = max(16, 2 * abs(q.disc))
    while bound <= value_cap:
        for rv in represented_values(q, bound):
            if isprime(rv.value) and (avoid == 0 or avoid % rv.value != 0):
                return rv.value, rv
        bound *= 4
    raise SearchExhausted("no usable prime represented below %d" % value_cap, value_cap)

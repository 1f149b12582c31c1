"""Exact arithmetic for F_q and univariate polynomials over F_q.

Elements of F_q (q = p**k) are plain integers in range(q): the integer
c0 + c1*p + ... + c_{k-1}*p**(k-1) encodes the coordinate vector of
c0 + c1*g + ... + c_{k-1}*g**(k-1), where g is the class of the variable
modulo the defining polynomial.  A Field instance carries the operation
tables; all bulk enumeration works directly on these integer codes.

Polynomials are tuples of element codes, lowest degree first, with no
trailing zeros.  The zero polynomial is the empty tuple and has degree -1.
"""

from __future__ import annotations

import itertools
import re
from functools import lru_cache

Poly = tuple  # tuple of element codes, lowest degree first

ZERO_DEGREE = -1  # degree sentinel for the zero polynomial


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _fp_poly_mulmod(p: int, modulus: tuple, a: tuple, b: tuple) -> tuple:
    """Product of two coordinate vectors modulo a monic polynomial over F_p."""
    k = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            for j in range(k):
                prod[d - k + j] = (prod[d - k + j] - c * modulus[j]) % p
    return tuple(prod[:k]) + (0,) * (k - len(prod))


class Field:
    """The finite field F_q, q = p**k, with precomputed operation tables.

    For k > 1 the defining modulus must be a monic irreducible of degree k
    over F_p; ``field_build`` chooses one canonically.  Desk scale only:
    tables are q-by-q.
    """

    def __init__(self, p: int, k: int = 1, modulus: Poly | None = None):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if k < 1:
            raise ValueError(f"k = {k} must be positive")
        self.p = p
        self.k = k
        self.q = p**k
        if k == 1:
            self.modulus = None
        else:
            if modulus is None:
                modulus = _smallest_irreducible(p, k)
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree k")
            if not is_irreducible(Field(p), modulus):
                raise ValueError("modulus is not irreducible over F_p")
            self.modulus = modulus
        self._build_tables()

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        coords = [self.coords(a) for a in range(q)]
        self._add = [
            tuple(
                self.from_coords(tuple((x + y) % p for x, y in zip(coords[a], coords[b])))
                for b in range(q)
            )
            for a in range(q)
        ]
        if k == 1:
            self._mul = [tuple((a * b) % p for b in range(q)) for a in range(q)]
        else:
            self._mul = [
                tuple(
                    self.from_coords(_fp_poly_mulmod(p, self.modulus, coords[a], coords[b]))
                    for b in range(q)
                )
                for a in range(q)
            ]
        self._neg = tuple(self.from_coords(tuple((-x) % p for x in coords[a])) for a in range(q))
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    inv[a] = b
                    break
        self._inv = tuple(inv)
        # Tr(x) = x + x^p + ... + x^(p^(k-1)) lies in the prime subfield.
        trace = []
        for a in range(q):
            t, x = 0, a
            for _ in range(k):
                t = self._add[t][x]
                x = self.pow(x, p)
            trace.append(t)
        self._trace = tuple(trace)

    # -- element codes <-> coordinate vectors ------------------------------

    def coords(self, a: int) -> tuple:
        cs = []
        for _ in range(self.k):
            cs.append(a % self.p)
            a //= self.p
        return tuple(cs)

    def from_coords(self, cs) -> int:
        a = 0
        for c in reversed(tuple(cs)):
            a = a * self.p + (c % self.p)
        return a

    # -- field operations ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero field element")
        return self._inv[a]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self._mul[r][a]
            a = self._mul[a][a]
            e >>= 1
        return r

    def trace(self, a: int) -> int:
        """Trace to the prime subfield, returned as a residue in [0, p)."""
        return self._trace[a]

    def elements(self):
        return range(self.q)

    def units(self):
        return range(1, self.q)

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        if self.k == 1:
            return f"Field({self.p})"
        return f"Field({self.p}, {self.k})"


def field_build(p: int, k: int = 1) -> Field:
    """F_{p**k} with the canonical modulus: the lexicographically smallest
    monic irreducible of degree k over F_p (coefficient tuples compared
    low degree first)."""
    return Field(p, k)


def _smallest_irreducible(p: int, k: int) -> tuple:
    fp = Field(p)
    for low in itertools.product(range(p), repeat=k):
        f = low + (1,)
        if is_irreducible(fp, f):
            return f
    raise AssertionError("no irreducible of the requested degree")  # unreachable


# -- polynomial arithmetic ---------------------------------------------------


def poly_trim(cs) -> Poly:
    cs = tuple(cs)
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return cs[:n]


def poly_deg(f: Poly) -> int:
    return len(f) - 1 if f else ZERO_DEGREE


def is_monic(f: Poly) -> bool:
    return bool(f) and f[-1] == 1


def poly_add(K: Field, f: Poly, g: Poly) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = K.add(out[i], c)
    return poly_trim(out)


def poly_neg(K: Field, f: Poly) -> Poly:
    return tuple(K.neg(c) for c in f)


def poly_sub(K: Field, f: Poly, g: Poly) -> Poly:
    return poly_add(K, f, poly_neg(K, g))


def poly_mul(K: Field, f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = K.add(out[i + j], K.mul(a, b))
    return poly_trim(out)


def poly_divrem(K: Field, f: Poly, g: Poly) -> tuple:
    """Quotient and remainder with deg(remainder) < deg(g)."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(f)
    dg = poly_deg(g)
    lead_inv = K.inv(g[-1])
    quot = [0] * max(len(f) - dg, 0)
    for d in range(len(rem) - 1, dg - 1, -1):
        c = rem[d]
        if c:
            q = K.mul(c, lead_inv)
            quot[d - dg] = q
            for j, b in enumerate(g):
                rem[d - dg + j] = K.sub(rem[d - dg + j], K.mul(q, b))
    return poly_trim(quot), poly_trim(rem)


def poly_eval(K: Field, f: Poly, x: int) -> int:
    r = 0
    for c in reversed(f):
        r = K.add(K.mul(r, x), c)
    return r


def poly_pow(K: Field, f: Poly, e: int) -> Poly:
    r: Poly = (1,)
    for _ in range(e):
        r = poly_mul(K, r, f)
    return r


def poly_scale(K: Field, c: int, f: Poly) -> Poly:
    return poly_trim(K.mul(c, a) for a in f)


def poly_key(f: Poly) -> tuple:
    """Canonical sort key: by degree, then coefficient tuples compared from
    the highest degree down (pins the order of the irreducible sequence)."""
    return (len(f), tuple(reversed(f)))


# -- enumeration of monic polynomials and irreducibles -----------------------


def enumerate_monic(K: Field, n: int):
    """All monic polynomials of degree exactly n, in canonical order."""
    if n == 0:
        yield (1,)
        return
    for high_first in itertools.product(range(K.q), repeat=n):
        yield tuple(reversed(high_first)) + (1,)


def enumerate_monic_units(K: Field, n: int) -> list:
    """All monic degree-n polynomials with nonzero constant term.

    There are (q-1)*q**(n-1) of them for n >= 1, and just the constant 1
    for n = 0.
    """
    return [f for f in enumerate_monic(K, n) if f[0] != 0]


@lru_cache(maxsize=None)
def _irreducibles_through(K: Field, max_degree: int) -> tuple:
    """All monic irreducibles of degree 1..max_degree, including X itself."""
    out = []
    for d in range(1, max_degree + 1):
        lower = [g for g in out if poly_deg(g) <= d // 2]
        for f in enumerate_monic(K, d):
            if d == 1 or all(poly_divrem(K, f, g)[1] for g in lower):
                out.append(f)
    return tuple(out)


def enumerate_irreducibles(K: Field, max_degree: int) -> list:
    """The canonical label sequence: monic irreducibles f with
    1 <= deg(f) <= max_degree and f(0) != 0, sorted by (degree, coefficients
    from the top).  Exactly X is excluded by the constant-term condition."""
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    return [f for f in _irreducibles_through(K, max_degree) if f[0] != 0]


def is_irreducible(K: Field, f: Poly) -> bool:
    d = poly_deg(f)
    if d < 1:
        return False
    for g in _irreducibles_through(K, d // 2):
        if not poly_divrem(K, f, g)[1]:
            return False
    return True


def factorize(K: Field, f: Poly) -> tuple:
    """Complete factorization f = unit * prod(g**m) into monic irreducibles.

    Returns (unit, factors) with factors a tuple of (g, multiplicity) pairs
    in canonical order.  Trial division against the enumerated irreducibles;
    fine for desk-scale degrees.
    """
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    unit = f[-1]
    if unit != 1:
        f = poly_scale(K, K.inv(unit), f)
    factors = []
    for g in _irreducibles_through(K, poly_deg(f)):
        if poly_deg(f) < 1:
            break
        m = 0
        while True:
            quot, rem = poly_divrem(K, f, g)
            if rem:
                break
            f, m = quot, m + 1
        if m:
            factors.append((g, m))
    assert f == (1,), "trial division left a nontrivial cofactor"
    return unit, tuple(factors)


# -- text format --------------------------------------------------------------
#
# Terms "c*X^d" joined by "+", lowest degree first; the coefficient is a
# plain integer for prime fields and a bracketed coordinate vector
# "[c0,c1,...]" for extension fields.  X^3 + X + 1 over F_2 prints as
# "1+1*X^1+1*X^3".  Parsing accepts omitted "*" and "^1".

_TERM_RE = re.compile(
    r"^\s*(?P<coeff>\[[^\]]*\]|\d+)?\s*\*?\s*(?P<var>X(\^(?P<deg>\d+))?)?\s*$"
)


def format_coeff(K: Field, a: int) -> str:
    if K.k == 1:
        return str(a)
    return "[" + ",".join(str(c) for c in K.coords(a)) + "]"


def parse_coeff(K: Field, s: str) -> int:
    s = s.strip()
    if s.startswith("["):
        cs = [int(t) for t in s[1:-1].split(",")] if s[1:-1].strip() else []
        if len(cs) > K.k:
            raise ValueError(f"coordinate vector longer than k = {K.k}: {s!r}")
        return K.from_coords(tuple(cs) + (0,) * (K.k - len(cs)))
    v = int(s)
    if not 0 <= v < K.q:
        raise ValueError(f"coefficient {v} out of range for q = {K.q}")
    return v


def format_poly(K: Field, f: Poly) -> str:
    terms = []
    for d, c in enumerate(f):
        if c == 0:
            continue
        if d == 0:
            terms.append(format_coeff(K, c))
        else:
            terms.append(f"{format_coeff(K, c)}*X^{d}")
    return "+".join(terms) if terms else "0"


def parse_poly(K: Field, s: str) -> Poly:
    s = s.strip()
    if s == "0":
        return ()
    coeffs: dict = {}
    for term in s.split("+"):
        m = _TERM_RE.match(term)
        if not m or (m.group("coeff") is None and m.group("var") is None):
            raise ValueError(f"cannot parse polynomial term {term!r}")
        c = 1 if m.group("coeff") is None else parse_coeff(K, m.group("coeff"))
        if m.group("var") is None:
            d = 0
        else:
            d = 1 if m.group("deg") is None else int(m.group("deg"))
        coeffs[d] = K.add(coeffs.get(d, 0), c)
    out = [0] * (max(coeffs) + 1)
    for d, c in coeffs.items():
        out[d] = c
    return poly_trim(out)

"""Exact arithmetic helpers: rationals, rational matrices, integer polynomials.

Fractions carry every coordinate in the exact pipeline (box corners, lattice
bases, coset residues).  Floats are confined to the numeric frontier and never
feed back into an exact verdict.  The integer-polynomial utilities back the two
roots-of-unity decisions in the toolkit: which unit-circle roots of a
trigonometric polynomial are rational phases, and whether an exponential sum
over coset representatives vanishes exactly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

Rational = Fraction

Vec = tuple[Fraction, ...]
Mat = tuple[tuple[Fraction, ...], ...]


def as_fraction(x) -> Fraction:
    """Coerce ints/Fractions/strings like "3/4" to Fraction; reject floats."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"expected an exact rational, got {type(x).__name__}: {x!r}")


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rational_gcd(a: Fraction, b: Fraction) -> Fraction:
    """gcd on Q: largest rational dividing both, gcd(p/q, r/s) = gcd(ps, rq)/(qs)."""
    a, b = abs(Fraction(a)), abs(Fraction(b))
    if a == 0:
        return b
    if b == 0:
        return a
    q = a.denominator * b.denominator
    return Fraction(gcd(a.numerator * b.denominator, b.numerator * a.denominator), q)


def rational_lcm(a: Fraction, b: Fraction) -> Fraction:
    a, b = abs(Fraction(a)), abs(Fraction(b))
    if a == 0 or b == 0:
        return Fraction(0)
    return a * b / rational_gcd(a, b)


def lcm_int(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


def vec(entries: Sequence) -> Vec:
    return tuple(as_fraction(e) for e in entries)


def mat(rows: Sequence[Sequence]) -> Mat:
    return tuple(tuple(as_fraction(e) for e in row) for row in rows)


def mat_identity(d: int) -> Mat:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(d)) for i in range(d)
    )


def mat_vec(m: Mat, v: Sequence[Fraction]) -> Vec:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def mat_transpose(m: Mat) -> Mat:
    d = len(m)
    return tuple(tuple(m[i][j] for i in range(d)) for j in range(len(m[0])))


def mat_det(m: Mat) -> Fraction:
    """Determinant by fraction-free-ish Gaussian elimination (exact)."""
    d = len(m)
    a = [list(row) for row in m]
    det = Fraction(1)
    for col in range(d):
        piv = next((r for r in range(col, d) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, d):
            f = a[r][col] * inv
            if f:
                for c in range(col, d):
                    a[r][c] -= f * a[col][c]
    return det


def mat_inv(m: Mat) -> Mat:
    """Exact inverse via Gauss-Jordan; raises ZeroDivisionError if singular."""
    d = len(m)
    a = [list(row) + [Fraction(1) if i == j else Fraction(0) for j in range(d)]
         for i, row in enumerate(m)]
    for col in range(d):
        piv = next((r for r in range(col, d) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(d):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[d:]) for row in a)


def floor_frac(x: Fraction) -> int:
    return x.numerator // x.denominator


def ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def count_integers_strictly_between(lo: Fraction, hi: Fraction) -> int:
    """#(Z ∩ (lo, hi)) for the open interval."""
    if hi <= lo:
        return 0
    first = floor_frac(lo) + 1
    last = ceil_frac(hi) - 1
    return max(0, last - first + 1)


# ---------------------------------------------------------------------------
# Integer polynomials, ascending coefficient lists.


def poly_trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


def poly_divmod(p: Sequence[int], q: Sequence[int]) -> tuple[list[int], list[int]]:
    """Euclidean division over Z for divisors with leading coefficient ±1."""
    r = list(p)
    poly_trim(r)
    q = poly_trim(list(q))
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    if abs(q[-1]) != 1:
        raise ValueError("divisor must have unit leading coefficient")
    dq = len(q) - 1
    quot = [0] * max(0, len(r) - dq)
    while len(r) - 1 >= dq and r:
        shift = len(r) - 1 - dq
        coef = r[-1] * q[-1]  # q[-1] in {1,-1} so this is exact
        quot[shift] = coef
        for i, b in enumerate(q):
            r[shift + i] -= coef * b
        poly_trim(r)
    return poly_trim(quot), r


def poly_divides(q: Sequence[int], p: Sequence[int]) -> bool:
    _, rem = poly_divmod(p, q)
    return not rem


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> tuple[int, ...]:
    """n-th cyclotomic polynomial, ascending integer coefficients."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return (-1, 1)
    p = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            p, rem = poly_divmod(p, list(cyclotomic(d)))
            assert not rem
    return tuple(p)


def sum_of_roots_of_unity_is_zero(exponents: Sequence[int], q: int) -> bool:
    """Decide Σ ζ^e = 0 exactly for ζ a primitive q-th root of unity.

    The sum vanishes iff the integer polynomial Σ x^(e mod q) is divisible by
    the q-th cyclotomic polynomial.
    """
    coeffs = [0] * q
    for e in exponents:
        coeffs[e % q] += 1
    p = poly_trim(coeffs)
    if not p:
        return True
    return poly_divides(list(cyclotomic(q)), p)


def totient(n: int) -> int:
    out, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            out *= (p - 1) * p ** (k - 1)
        p += 1
    if m > 1:
        out *= m - 1
    return out

"""Integer polynomials, characteristic polynomials and Sturm root isolation.

Coefficient lists are lowest degree first.  Rational work happens on lists
of ``Fraction``; the public type ``IntPolynomial`` keeps integer coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .lattice import Isometry, identity, matmul


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_roots(cls, *roots: int) -> IntPolynomial:
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        return IntPolynomial(_mul(self.coeffs, other.coeffs))

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + IntPolynomial(tuple(-c for c in other.coeffs))

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            mag = abs(c)
            body = f"{mag}{mono}" if (mag != 1 or not mono) else mono
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


# -- rational coefficient-list arithmetic ---------------------------------------


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def _divmod(a, b):
    a = [Fraction(x) for x in _trim(a)]
    b = [Fraction(x) for x in _trim(b)]
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        f = a[-1] / b[-1]
        k = len(a) - len(b)
        q[k] = f
        for i, y in enumerate(b):
            a[i + k] -= f * y
        a = _trim(a)
    return _trim(q), a


def _derivative(p):
    return [i * c for i, c in enumerate(p)][1:]


def _gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        _, r = _divmod(a, b)
        a, b = b, r
    if not a:
        return a
    lead = Fraction(a[-1])
    return [Fraction(x) / lead for x in a]


def _eval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _to_int(p) -> IntPolynomial:
    """Scale a rational polynomial to a primitive integer one with positive leading term."""
    p = [Fraction(x) for x in p]
    den = 1
    for x in p:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in p]
    g = 0
    for x in ints:
        g = gcd(g, x)
    g = g or 1
    if ints and ints[-1] < 0:
        g = -g
    return IntPolynomial(tuple(x // g for x in ints))


def divide_exact(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial | None:
    """Quotient ``p / q`` if ``q`` divides ``p`` over Z, else None."""
    quo, rem = _divmod(p.coeffs, q.coeffs)
    if rem or any(x.denominator != 1 for x in quo):
        return None
    return IntPolynomial(tuple(int(x) for x in quo))


def square_free(p: IntPolynomial) -> IntPolynomial:
    g = _gcd(p.coeffs, _derivative(p.coeffs))
    if len(g) <= 1:
        return p
    q, _ = _divmod(p.coeffs, g)
    return _to_int(q)


# -- characteristic polynomial -------------------------------------------------


def char_poly_matrix(m) -> IntPolynomial:
    """``det(t I - m)`` via Faddeev-LeVerrier; every division is exact over Z."""
    n = len(m)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = tuple(tuple(0 for _ in range(n)) for _ in range(n))
    ident = identity(n)
    for k in range(1, n + 1):
        c_prev = coeffs[n - k + 1]
        mk = tuple(
            tuple(x + c_prev * ident[i][j] for j, x in enumerate(row))
            for i, row in enumerate(matmul(m, mk))
        )
        am = matmul(m, mk)
        tr = sum(am[i][i] for i in range(n))
        if tr % k:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs[n - k] = -tr // k
    return IntPolynomial(tuple(coeffs))


def char_poly(a: Isometry) -> IntPolynomial:
    return char_poly_matrix(a.matrix)


# -- Sturm sequences ---------------------------------------------------------------


def sturm_sequence(p: IntPolynomial) -> list[list[Fraction]]:
    seq = [[Fraction(c) for c in p.coeffs], [Fraction(c) for c in _derivative(p.coeffs)]]
    while seq[-1]:
        _, r = _divmod(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-x for x in r])
    return [s for s in seq if s]


def _variations(values) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _signs_at(seq, x):
    if x == "+inf":
        return [s[-1] for s in seq]
    if x == "-inf":
        return [s[-1] * (-1) ** (len(s) - 1) for s in seq]
    return [_eval(s, x) for s in seq]


def count_roots(p: IntPolynomial, lo, hi) -> int:
    """Number of distinct real roots in ``(lo, hi]``; ``lo``/``hi`` may be ``"-inf"``/``"+inf"``."""
    seq = sturm_sequence(p)
    return _variations(_signs_at(seq, lo)) - _variations(_signs_at(seq, hi))


def root_bound(p: IntPolynomial) -> int:
    """Cauchy bound: every root satisfies ``|x| < bound``."""
    lead = abs(p.leading)
    return 2 + max(-(-abs(c) // lead) for c in p.coeffs[:-1]) if p.degree > 0 else 1


def isolate_roots(p: IntPolynomial, lo: Fraction, hi: Fraction, width=Fraction(1, 10**6)):
    """Disjoint intervals ``(a, b]`` each holding exactly one root of ``p`` in ``(lo, hi]``.

    Works on the square-free part.  Every interval is refined to ``b - a <= width``;
    an exactly hit rational root comes back as the degenerate interval ``(r, r)``.
    """
    q = square_free(p)
    seq = sturm_sequence(q)

    def count(a, b):
        return _variations(_signs_at(seq, a)) - _variations(_signs_at(seq, b))

    lo, hi = Fraction(lo), Fraction(hi)
    out = []
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        n = count(a, b)
        if n == 0:
            continue
        if n == 1:
            out.append(_refine(q, a, b, width))
            continue
        mid = (a + b) / 2
        stack.append((mid, b))
        stack.append((a, mid))
    return sorted(out)


def _refine(q, a, b, width):
    if q(b) == 0:
        return (b, b)
    while b - a > width:
        mid = (a + b) / 2
        v = q(mid)
        if v == 0:
            return (mid, mid)
        # exactly one root in (a, b]; q(b) != 0 so the sign change locates it
        if (v > 0) != (q(b) > 0):
            a = mid
        else:
            b = mid
    return (a, b)


def real_roots_outside_unit_interval(p: IntPolynomial, width=Fraction(1, 10**6)):
    """Isolating intervals for the real roots with ``|x| > 1``."""
    q = square_free(p)
    bound = root_bound(q)
    above = isolate_roots(q, Fraction(1), Fraction(bound), width)
    below = isolate_roots(q, Fraction(-bound), Fraction(-1), width)
    # (-B, -1] may contain -1 itself
    below = [iv for iv in below if iv[1] < -1 or (iv[0] < -1 and q(Fraction(-1)) != 0)]
    return below + above


# -- cyclotomic screen ---------------------------------------------------------------


def totient(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def cyclotomic(n: int) -> IntPolynomial:
    p = IntPolynomial((-1,) + (0,) * (n - 1) + (1,))
    for d in range(1, n):
        if n % d == 0:
            p = divide_exact(p, cyclotomic(d))
    return p


def cyclotomic_factors(p: IntPolynomial) -> list[int] | None:
    """Indices ``n`` with ``p = prod Phi_n`` (with repetition), or None if ``p`` is not such a product."""
    if p.leading != 1:
        return None
    deg = p.degree
    found = []
    rest = p
    for n in range(1, 2 * deg * deg + 3):
        if totient(n) > deg:
            continue
        phi = cyclotomic(n)
        while rest.degree >= phi.degree:
            q = divide_exact(rest, phi)
            if q is None:
                break
            found.append(n)
            rest = q
        if rest.degree == 0:
            break
    if rest.coeffs != (1,):
        return None
    return found


# -- factorization and order certificates ------------------------------------------


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, int(n**0.5) + 2) if d * d <= n and n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def factor(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Split off every rational linear factor; the cofactor is kept whole.

    For degree <= 3 inputs this is the full factorization over Z.
    """
    factors: dict[IntPolynomial, int] = {}
    rest = p
    while rest.degree >= 1:
        hit = None
        if rest.coeffs[0] == 0:
            hit = IntPolynomial((0, 1))
        else:
            for num in _divisors(rest.coeffs[0]):
                for den in _divisors(rest.leading):
                    for s in (1, -1):
                        r = Fraction(s * num, den)
                        if rest(r) == 0:
                            hit = IntPolynomial((-r.numerator, r.denominator))
                            break
                    if hit:
                        break
                if hit:
                    break
        if hit is None:
            break
        factors[hit] = factors.get(hit, 0) + 1
        rest = divide_exact(rest, hit)
    out = sorted(factors.items(), key=lambda kv: kv[0].coeffs)
    if rest.degree >= 1:
        out.append((rest, 1))
    elif rest.coeffs != (1,):
        out.insert(0, (rest, 1))
    return out


@dataclass(frozen=True)
class OrderCertificate:
    finite: bool
    order: int | None = None
    interval: tuple[Fraction, Fraction] | None = None
    reason: str = ""

    def as_dict(self) -> dict:
        d = {"finite": self.finite, "order": self.order, "reason": self.reason}
        d["interval"] = None if self.interval is None else [str(x) for x in self.interval]
        return d


def order_certificate(a: Isometry, width=Fraction(1, 10**6)) -> OrderCertificate:
    """Certify whether ``a`` has finite order.

    Infinite: a real eigenvalue off the closed unit disk, isolated by Sturm
    sequences (the interval of the largest one is returned).  Otherwise, if the
    characteristic polynomial is a product of cyclotomic polynomials, powers
    are tested up to the lcm of their indices; a power that stays non-identity
    there is a nontrivial unipotent, hence infinite order.
    """
    p = char_poly(a)
    roots = real_roots_outside_unit_interval(p, width)
    if roots:
        best = max(roots, key=lambda iv: abs(iv[0] + iv[1]))
        return OrderCertificate(False, interval=best, reason="real eigenvalue outside [-1, 1]")
    cyc = cyclotomic_factors(p)
    if cyc is None:
        return OrderCertificate(False, reason="characteristic polynomial is not cyclotomic")
    bound = lcm(*cyc) if cyc else 1
    power = a.lattice.identity()
    for k in range(1, bound + 1):
        power = power @ a
        if power.is_identity():
            return OrderCertificate(True, order=k, reason=f"cyclotomic factors {sorted(set(cyc))}")
    return OrderCertificate(False, reason=f"a^{bound} is a nontrivial unipotent")

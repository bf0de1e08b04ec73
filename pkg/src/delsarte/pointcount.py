"""Brute-force point counting over small finite fields.

This module is the independent oracle for the character-sum machinery: it
counts points on weighted-projective hypersurfaces by enumerating the
affine cone, checks the toric general-position condition over bounded
extensions, and verifies the monomial cover map fiber by fiber.

Fields F_{p^k} are represented by discrete-log tables over a fixed
multiplicative generator; elements are integer codes whose base-p digits
are the coefficients of the residue polynomial.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field

from .deformation import DeformationData

DEFAULT_MAX_Q = 2**20


def _max_q() -> int:
    return int(os.environ.get("DELSARTE_MAX_Q", DEFAULT_MAX_Q))


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


def _poly_mulmod(a, b, mod_poly, p):
    """Product of coefficient lists modulo (mod_poly, p); mod_poly monic."""
    k = len(mod_poly) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    for i in range(len(out) - 1, k - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(k):
                out[i - k + j] = (out[i - k + j] - c * mod_poly[j]) % p
    return out[:k]


def _poly_powmod(a, e, mod_poly, p):
    result = [1] + [0] * (len(mod_poly) - 2)
    base = list(a)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod_poly, p)
        base = _poly_mulmod(base, base, mod_poly, p)
        e >>= 1
    return result


def _is_irreducible(poly, p):
    """Rabin test: x^(p^k) == x mod poly, gcd trivial at maximal subfields."""
    k = len(poly) - 1
    x = [0, 1] + [0] * (k - 2)

    def frob_power(j):
        return _poly_powmod(x, p**j, poly, p)

    if frob_power(k) != x:
        return False
    for ell in _prime_factors(k):
        diff = [(a - b) % p for a, b in zip(frob_power(k // ell), x)]
        if not any(diff):
            return False
        if _poly_gcd_is_nontrivial(diff, poly, p):
            return False
    return True


def _poly_gcd_is_nontrivial(a, b, p):
    def deg(c):
        d = -1
        for i, coeff in enumerate(c):
            if coeff % p:
                d = i
        return d

    a = [x % p for x in a]
    b = [x % p for x in b]
    while deg(b) >= 0:
        db = deg(b)
        inv = pow(b[db], -1, p)
        while deg(a) >= db:
            da = deg(a)
            factor = (a[da] * inv) % p
            for i in range(db + 1):
                a[da - db + i] = (a[da - db + i] - factor * b[i]) % p
        a, b = b, a
    return deg(a) > 0


def _find_irreducible(p: int, k: int) -> list[int]:
    """Deterministic search for a monic irreducible of degree k over F_p."""
    if k == 1:
        return [0, 1]
    for tail in itertools.count(0):
        digits = []
        t = tail
        for _ in range(k):
            digits.append(t % p)
            t //= p
        poly = digits + [1]
        if _is_irreducible(poly, p):
            return poly
    raise AssertionError("unreachable")


@dataclass
class FiniteField:
    """F_q, q = p^k, with exp/log tables over a fixed generator.

    Element codes are integers in [0, q): the base-p digits of a code are
    the coefficients of the residue polynomial.  The prime subfield embeds
    as the codes 0..p-1.
    """

    p: int
    k: int = 1
    q: int = field(init=False)
    generator: int = field(init=False)
    exp: list[int] = field(init=False, repr=False)
    log: list[int] = field(init=False, repr=False)
    modulus: list[int] = field(init=False, repr=False)

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.k < 1:
            raise ValueError("extension degree must be positive")
        self.q = self.p**self.k
        if self.q > _max_q():
            raise ValueError(f"field size {self.q} exceeds the configured bound")
        self.modulus = _find_irreducible(self.p, self.k)
        self._build_tables()

    # -- construction helpers -------------------------------------------------

    def _encode(self, coeffs) -> int:
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + (c % self.p)
        return code

    def _decode(self, code: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(code % self.p)
            code //= self.p
        return out

    def _raw_mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        prod = _poly_mulmod(self._decode(a), self._decode(b), self.modulus, self.p)
        return self._encode(prod)

    def _element_order_is_maximal(self, g: int) -> bool:
        n = self.q - 1
        for ell in _prime_factors(n):
            if self._raw_pow(g, n // ell) == 1:
                return False
        return True

    def _raw_pow(self, a: int, e: int) -> int:
        result = 1
        base = a
        while e:
            if e & 1:
                result = self._raw_mul(result, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return result

    def _build_tables(self):
        for g in range(2, self.q):
            if self._element_order_is_maximal(g):
                self.generator = g
                break
        else:
            if self.q == 2:
                self.generator = 1
            else:
                raise AssertionError("no multiplicative generator found")
        self.exp = [0] * (self.q - 1)
        self.log = [-1] * self.q
        acc = 1
        for j in range(self.q - 1):
            self.exp[j] = acc
            self.log[acc] = j
            acc = self._raw_mul(acc, self.generator)
        assert acc == 1, "generator order is not q - 1"

    # -- arithmetic ------------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        da, db = self._decode(a), self._decode(b)
        return self._encode([x + y for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return self._encode([-x for x in self._decode(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0 if e else 1
        return self.exp[(self.log[a] * e) % (self.q - 1)]

    def from_int(self, c: int) -> int:
        """Embed a prime-field integer representative."""
        return c % self.p

    def elements(self):
        return range(self.q)

    def units(self):
        return self.exp


@dataclass(frozen=True)
class HypersurfaceSpec:
    """A hypersurface in weighted projective space, given term by term.

    Coefficients are prime-field integer representatives.  `lambda_term`
    is the deformation monomial with its coefficient, kept separate so a
    single spec can be re-specialized at several parameter values.
    """

    weights: tuple[int, ...]
    terms: tuple[tuple[tuple[int, ...], int], ...]
    lambda_term: tuple[tuple[int, ...], int] | None = None

    def __post_init__(self):
        degrees = set()
        for exps, _ in self.all_terms():
            if len(exps) != len(self.weights):
                raise ValueError("term length does not match the weight vector")
            degrees.add(sum(w * e for w, e in zip(self.weights, exps)))
        if len(degrees) > 1:
            raise ValueError(f"terms have different weighted degrees: {sorted(degrees)}")

    def all_terms(self) -> tuple[tuple[tuple[int, ...], int], ...]:
        if self.lambda_term is None:
            return self.terms
        return self.terms + (self.lambda_term,)


def family_hypersurface(data: DeformationData, lam: int | None = None) -> HypersurfaceSpec:
    """The deformed family member X_lambda in P(w)."""
    if lam is None:
        lam = data.lam if data.lam is not None else 0
    return HypersurfaceSpec(
        weights=data.weights,
        terms=tuple((tuple(row), 1) for row in data.matrix.rows),
        lambda_term=(data.deformation, lam),
    )


def fermat_hypersurface(d: int, n: int, lam: int = 0, b=None) -> HypersurfaceSpec:
    """The (deformed) degree-d Fermat hypersurface in plain P^n."""
    weights = (1,) * (n + 1)
    terms = tuple(
        (tuple(d if j == i else 0 for j in range(n + 1)), 1) for i in range(n + 1)
    )
    lambda_term = None
    if b is not None:
        b = tuple(b)
        if sum(b) != d:
            raise ValueError("cover exponents must sum to d")
        lambda_term = (b, lam)
    return HypersurfaceSpec(weights=weights, terms=terms, lambda_term=lambda_term)


def count_points(spec: HypersurfaceSpec, field: FiniteField) -> int:
    """Point count of the coarse space: (#affine cone - 1) / (q - 1).

    The division is asserted exact so that any discrepancy between the
    cone count and a genuine projective count fails loudly instead of
    returning a silently wrong value.
    """
    n_cone = count_cone(spec, field)
    q = field.q
    if (n_cone - 1) % (q - 1) != 0:
        raise AssertionError(
            f"cone count {n_cone} is not 1 mod q-1; this hypersurface has no "
            "well-defined projective count over this field"
        )
    return (n_cone - 1) // (q - 1)


def count_cone(spec: HypersurfaceSpec, field: FiniteField) -> int:
    """Number of solutions in the full affine cone (including the origin)."""
    q = field.q
    n1 = len(spec.weights)
    terms = [(exps, field.from_int(c)) for exps, c in spec.all_terms()]
    terms = [(exps, c) for exps, c in terms if c != 0]
    if not terms:
        return q**n1
    n_terms = len(terms)
    # pw[t][i][v] = v^e(t,i) as a field code
    pw = [
        [[field.pow(v, exps[i]) for v in range(q)] for i in range(n1)]
        for exps, _ in terms
    ]
    add = field.add
    mul = field.mul
    count = 0
    start = tuple(c for _, c in terms)

    def descend(depth: int, partials) -> None:
        nonlocal count
        if depth == n1 - 1:
            tables = [pw[t][depth] for t in range(n_terms)]
            live = [(partials[t], tables[t]) for t in range(n_terms) if partials[t]]
            if not live:
                count += q
                return
            for v in range(q):
                s = 0
                for pv, table in live:
                    w = table[v]
                    if w:
                        s = add(s, mul(pv, w))
                if s == 0:
                    count += 1
            return
        for v in range(q):
            descend(
                depth + 1,
                tuple(mul(partials[t], pw[t][depth][v]) for t in range(n_terms)),
            )

    descend(0, start)
    return count


def _projective_points(field: FiniteField, n1: int):
    """Representatives of P^(n1-1)(F_q): first nonzero coordinate = 1."""
    q = field.q
    for lead in range(n1):
        prefix = (0,) * lead + (1,)
        for tail in itertools.product(range(q), repeat=n1 - lead - 1):
            yield prefix + tail


def is_general_position(spec: HypersurfaceSpec, field: FiniteField, max_ext: int = 1) -> bool:
    """Extension-bounded toric smoothness check.

    True iff the system {x_i * df/dx_i = 0 for all i} together with f = 0
    has no projective solution over F_{q^j} for every j <= max_ext.  This
    checks the stated extensions only, not the algebraic closure.
    """
    base_terms = [t for t in spec.all_terms() if t[1] % field.p != 0]
    n1 = len(spec.weights)
    for j in range(1, max_ext + 1):
        ext = field if j == 1 else FiniteField(field.p, field.k * j)
        q = ext.q
        terms = [(exps, ext.from_int(c)) for exps, c in base_terms]
        pw = [
            [[ext.pow(v, exps[i]) for v in range(q)] for i in range(n1)]
            for exps, _ in terms
        ]
        # x_i * df/dx_i has the same monomials as f, coefficients scaled by e_i.
        scaled = [
            [ext.mul(c, ext.from_int(exps[i])) for exps, c in terms]
            for i in range(n1)
        ]
        plain = [c for _, c in terms]
        add, mul = ext.add, ext.mul
        for point in _projective_points(ext, n1):
            values = []
            for t, (exps, _) in enumerate(terms):
                v = 1
                for i in range(n1):
                    v = mul(v, pw[t][i][point[i]])
                    if v == 0:
                        break
                values.append(v)
            singular = True
            for coeffs in scaled:
                s = 0
                for c, v in zip(coeffs, values):
                    if c and v:
                        s = add(s, mul(c, v))
                if s != 0:
                    singular = False
                    break
            if singular:
                s = 0
                for c, v in zip(plain, values):
                    if c and v:
                        s = add(s, mul(c, v))
                if s == 0:
                    return False
    return True


@dataclass(frozen=True)
class CoverReport:
    """Empirical verification of the monomial map from the cover."""

    containment: bool
    fiber_histogram: dict[int, int]
    points_on_cover: int


def verify_cover_map(data: DeformationData, lam: int, field: FiniteField) -> CoverReport:
    """Push every all-nonzero rational point of Y_lambda through the map.

    The map sends y to the monomials given by the rows of B (negative
    exponents via inversion, which is free in log space).  Containment
    means every image satisfies the family's equation; the histogram
    counts cover points per distinct image point of P(w).
    """
    q = field.q
    d = data.degree
    n1 = data.n + 1
    if d % field.p == 0:
        raise ValueError("gcd(q, d) = 1 is required")
    lam_code = field.from_int(lam)
    add, mul = field.add, field.mul
    exp, log = field.exp, field.log
    qm1 = q - 1
    b_rows = data.map_matrix.rows
    a_rows = data.matrix.rows
    a_vec = data.deformation
    weights = data.weights

    def x_equation(x) -> int:
        s = 0
        for row in a_rows:
            v = 1
            for i in range(n1):
                if row[i]:
                    v = mul(v, field.pow(x[i], row[i]))
            s = add(s, v)
        if lam_code:
            v = lam_code
            for i in range(n1):
                if a_vec[i]:
                    v = mul(v, field.pow(x[i], a_vec[i]))
            s = add(s, v)
        return s

    def canonical_image(x) -> tuple[int, ...]:
        best = None
        for t in field.units():
            scaled = tuple(mul(field.pow(t, weights[i]), x[i]) for i in range(n1))
            if best is None or scaled < best:
                best = scaled
        return best

    containment = True
    fibers: dict[tuple[int, ...], int] = {}
    points = 0
    for tail in itertools.product(field.units(), repeat=n1 - 1):
        y = (1,) + tail
        s = 0
        for i in range(n1):
            s = add(s, field.pow(y[i], d))
        if lam_code:
            v = lam_code
            for i in range(n1):
                if data.cover_exponents[i]:
                    v = mul(v, field.pow(y[i], data.cover_exponents[i]))
            s = add(s, v)
        if s != 0:
            continue
        points += 1
        logs = [log[yi] for yi in y]
        x = tuple(
            exp[sum(b_rows[j][i] * logs[i] for i in range(n1)) % qm1]
            for j in range(n1)
        )
        if x_equation(x) != 0:
            containment = False
            continue
        key = canonical_image(x)
        fibers[key] = fibers.get(key, 0) + 1
    histogram: dict[int, int] = {}
    for size in fibers.values():
        histogram[size] = histogram.get(size, 0) + 1
    return CoverReport(containment, histogram, points)

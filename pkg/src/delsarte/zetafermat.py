"""Frobenius eigenvalues on monomial eigenlines at lambda = 0.

For d | q - 1 the middle cohomology of the degree-d Fermat hypersurface
splits into eigenlines indexed by interior monomial types, and the
Frobenius eigenvalue on the line of k is a Jacobi-type character sum.
The sign and normalization conventions used here are not assumed: they
are certified by requiring that the resulting closed-form point count
agrees with brute-force enumeration (see `fermat_point_count_via_sums`
and the point-count oracle in `pointcount`).

Everything is exact: character sums live in the group ring Z[x]/(x^d-1),
rationality is decided modulo the d-th cyclotomic polynomial, and the
characteristic-polynomial divisibility checks run in Z[T].
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from .cyclotomic import CyclotomicElement
from .deformation import DeformationData, common_cover
from .monomials import g_invariant_types
from .pointcount import FiniteField


class RationalityError(ArithmeticError):
    """A quantity that must be a rational integer failed the exact test."""


@dataclass(frozen=True)
class CharPoly:
    """Integer polynomial in T with constant coefficient 1, ascending order.

    Normalized as a product of (1 - alpha*T) over Frobenius eigenvalues.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("constant coefficient must be 1")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: CharPoly) -> CharPoly:
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return CharPoly(tuple(out))

    def divides(self, other: CharPoly) -> bool:
        """Exact divisibility in Z[T] (division from the constant side)."""
        if self.degree > other.degree:
            return False
        rem = list(other.coeffs)
        quot_len = other.degree - self.degree + 1
        for i in range(quot_len):
            c = rem[i]
            if c == 0:
                continue
            for j, pj in enumerate(self.coeffs):
                rem[i + j] -= c * pj
        return not any(rem)

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"


@dataclass(frozen=True)
class CharacterTable:
    """A multiplicative character of exact order d on F_q*.

    chi(g^j) = zeta_d^j for the chosen generator g; chi_log[code] is the
    zeta-exponent of the nonzero field element with that code.
    """

    field: FiniteField
    order: int
    generator: int
    chi_log: tuple[int, ...]

    def chi_power_at(self, power: int, code: int) -> int:
        """zeta-exponent of chi^power at a nonzero element."""
        return (power * self.chi_log[code]) % self.order


def multiplicative_character(field: FiniteField, d: int, generator: int | None = None) -> CharacterTable:
    """Character table of a character of exact order d (requires d | q - 1)."""
    q = field.q
    if d < 1 or (q - 1) % d != 0:
        raise ValueError(f"no character of order {d}: {d} does not divide q - 1 = {q - 1}")
    if generator is None:
        generator = field.generator
        log = field.log
    else:
        j = field.log[generator]
        if j < 0 or gcd(j, q - 1) != 1:
            raise ValueError("supplied element does not generate the unit group")
        log = [-1] * q
        acc = 1
        for e in range(q - 1):
            log[acc] = e
            acc = field.mul(acc, generator)
    chi_log = [0] * q
    for code in range(1, q):
        e = log[code]
        if e < 0:
            raise AssertionError("log table incomplete")
        chi_log[code] = e % d
    return CharacterTable(field, d, generator, tuple(chi_log))


def _jacobi_sum(table: CharacterTable, powers) -> CyclotomicElement:
    """J(chi^p1, ..., chi^pm) = sum over v_1 + ... + v_m = 1, v_i nonzero."""
    field = table.field
    d = table.order
    q = field.q
    p = field.p
    m = len(powers)
    if m < 1:
        raise ValueError("need at least one character")
    chi_log = table.chi_log
    coeffs = [0] * d
    if m == 1:
        # single character: J = chi(1) = 1 when the character is nontrivial
        coeffs[0] = 1
        return CyclotomicElement(d, coeffs)

    def accumulate(prefix_exp: int, remaining: int, total_code: int) -> None:
        if remaining == 1:
            last = field.sub(field.from_int(1), total_code)
            if last == 0:
                return
            e = (prefix_exp + powers[-1] * chi_log[last]) % d
            coeffs[e] += 1
            return
        idx = m - remaining
        for v in range(1, q):
            accumulate(
                (prefix_exp + powers[idx] * chi_log[v]) % d,
                remaining - 1,
                field.add(total_code, v),
            )

    accumulate(0, m, 0)
    return CyclotomicElement(d, coeffs)


def _count_term(k, table: CharacterTable) -> CyclotomicElement:
    """(1/q) * prod_i g(chi^(k_i)) for an interior type, Gauss-sum free.

    Folding the last Gauss sum against its conjugate turns the product
    into chi^(k_n)(-1) * J(chi^(k_0), ..., chi^(k_{n-1})), which stays in
    Z[zeta_d] and needs no additive characters.
    """
    d = table.order
    field = table.field
    k = tuple(e % d for e in k)
    if sum(k) % d != 0:
        raise ValueError("type entries must sum to 0 mod d")
    if any(e == 0 for e in k):
        raise ValueError("type must be interior (no zero entries)")
    minus_one = field.sub(0, field.from_int(1))
    sign_exp = table.chi_power_at(k[-1], minus_one)
    j = _jacobi_sum(table, k[:-1])
    return CyclotomicElement.zeta(d, sign_exp) * j


def jacobi_eigenvalue(k, table: CharacterTable) -> CyclotomicElement:
    """Frobenius eigenvalue on the eigenline of the interior type k.

    Equals (-1)^(n-1) times the count term, so that the closed-form point
    count below reproduces brute force; its complex absolute value is
    q^((n-1)/2) in every embedding.
    """
    n = len(tuple(k)) - 1
    term = _count_term(k, table)
    return term if (n - 1) % 2 == 0 else -term


def fermat_point_count_via_sums(d: int, n: int, field: FiniteField) -> int:
    """#X(F_q) for the degree-d Fermat hypersurface in P^n via character sums.

    Main term (q^n - 1)/(q - 1) plus the signed sum of eigenline terms
    over all interior monomial types.  Exact; certifies the eigenvalue
    conventions against `pointcount.count_points`.
    """
    table = multiplicative_character(field, d)
    q = field.q
    main = (q**n - 1) // (q - 1)
    total = CyclotomicElement.constant(d, 0)
    # interior types: first n entries free in (0, d), last forced
    for head in itertools.product(range(1, d), repeat=n):
        last = (-sum(head)) % d
        if last == 0:
            continue
        total = total + _count_term(head + (last,), table)
    value = total.rational_value()
    if not isinstance(value, int):
        raise RationalityError("character-sum total is not a rational integer")
    return main + value


def char_poly_invariant(types, d: int, field: FiniteField, generator: int | None = None) -> CharPoly:
    """prod (1 - j(k) T) over a Galois-stable set of interior types, in Z[T].

    The product is expanded over Z[zeta_d]; every coefficient must pass
    the exact rationality test (reduction modulo the d-th cyclotomic
    polynomial), which succeeds precisely because the set is stable under
    k -> u*k for units u.
    """
    types = sorted(tuple(e % d for e in k) for k in types)
    type_set = set(types)
    for u in range(2, d):
        if gcd(u, d) != 1:
            continue
        for k in types:
            if tuple((u * e) % d for e in k) not in type_set:
                raise ValueError("coefficients not rational: type set is not Galois stable")
    table = multiplicative_character(field, d, generator)
    coeffs = [CyclotomicElement.constant(d, 1)]
    for k in types:
        ev = jacobi_eigenvalue(k, table)
        new = coeffs + [CyclotomicElement.constant(d, 0)]
        for i in range(len(coeffs)):
            new[i + 1] = new[i + 1] - ev * coeffs[i]
        coeffs = new
    out = []
    for c in coeffs:
        try:
            value = c.rational_value()
        except Exception as exc:
            raise RationalityError(f"coefficient not rational: {c!r}") from exc
        if not isinstance(value, int):
            raise RationalityError(f"coefficient not a rational integer: {value}")
        out.append(value)
    return CharPoly(tuple(out))


def lift_types(types, d_from: int, d_to: int) -> list[tuple[int, ...]]:
    """Rescale types along a cover-degree change d_from | d_to."""
    if d_to % d_from != 0:
        raise ValueError("d_from must divide d_to")
    scale = d_to // d_from
    return sorted(tuple(scale * e for e in k) for k in types)


@dataclass(frozen=True)
class CommonFactorReport:
    """Outcome of the common-factor divisibility check at lambda = 0."""

    joint_degree: int
    common_types: tuple[tuple[int, ...], ...]
    common_poly: CharPoly
    family_polys: tuple[CharPoly, ...]
    divides: tuple[bool, ...]

    @property
    def common_degree(self) -> int:
        return self.common_poly.degree

    @property
    def all_divide(self) -> bool:
        return all(self.divides)


def verify_common_factor(data_list, field: FiniteField) -> CommonFactorReport:
    """Check that the joint-invariant factor divides each family's factor.

    Lifts every family's invariant type set to the least common cover
    degree d, intersects them (invariance under the group generated by
    all the quotient groups), builds the characteristic polynomial of the
    intersection, and tests exact divisibility into each family's
    invariant characteristic polynomial, all at lambda = 0.
    """
    data_list = list(data_list)
    if not data_list:
        raise ValueError("need at least one family")
    cover = common_cover([(item.matrix, item.deformation) for item in data_list])
    if cover is None:
        raise ValueError("no common cover")
    d_joint, _ = cover
    if (field.q - 1) % d_joint != 0:
        raise ValueError(f"joint degree {d_joint} does not divide q - 1 = {field.q - 1}")
    lifted = [
        set(lift_types(g_invariant_types(item), item.degree, d_joint))
        for item in data_list
    ]
    common = set.intersection(*lifted)
    common_poly = char_poly_invariant(common, d_joint, field)
    family_polys = tuple(char_poly_invariant(s, d_joint, field) for s in lifted)
    divides = tuple(common_poly.divides(fp) for fp in family_polys)
    return CommonFactorReport(
        joint_degree=d_joint,
        common_types=tuple(sorted(common)),
        common_poly=common_poly,
        family_polys=family_polys,
        divides=divides,
    )

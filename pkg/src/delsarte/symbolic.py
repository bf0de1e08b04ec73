"""Exact multivariate polynomials and the bitangent-elimination pipeline.

Coefficients are rationals or elements of Q(zeta_8) (enough for I and
sqrt(2)); terms live in a sparse dict keyed by exponent vectors.  On top
of the arithmetic this module provides quadratic discriminants,
fraction-free Sylvester resultants, and the full derivation of the
bitangents to the five special plane quartics attached to the families
1, 2, 3, 6, 7: the degree-20/24 eliminants in the slope parameter, the
vertical-line bitangents, the quotient identities, and the isomorphisms
between the three del Pezzo quotient surfaces of each family.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .cyclotomic import CyclotomicElement

# Canonical variable order; every polynomial's variable tuple is a
# subsequence of this.
VAR_ORDER = ("lam", "u", "v", "x0", "x1", "x2", "x3", "a", "a2", "a3", "b", "c", "s")

CYCLOTOMIC_ORDER = 8


class InexactDivisionError(ArithmeticError):
    """Polynomial division left a remainder where none was allowed."""


def zeta8(power: int = 1) -> CyclotomicElement:
    return CyclotomicElement.zeta(CYCLOTOMIC_ORDER, power)


def root_i() -> CyclotomicElement:
    """I with I^2 = -1, realized as zeta_8^2."""
    return zeta8(2)


# -- coefficient arithmetic (int | Fraction | CyclotomicElement) --------------


def _c_norm(c):
    """Canonical coefficient: rational values never hide in a larger ring."""
    if isinstance(c, CyclotomicElement) and c.is_rational():
        c = c.rational_value()
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _c_promote(a, b):
    a_cyc = isinstance(a, CyclotomicElement)
    b_cyc = isinstance(b, CyclotomicElement)
    if a_cyc and b_cyc:
        if a.order == b.order:
            return a, b
        order = lcm(a.order, b.order)
        return a.promote(order), b.promote(order)
    if a_cyc:
        return a, CyclotomicElement.constant(a.order, b)
    if b_cyc:
        return CyclotomicElement.constant(b.order, a), b
    return a, b


def _c_add(a, b):
    a, b = _c_promote(a, b)
    return _c_norm(a + b)


def _c_mul(a, b):
    a, b = _c_promote(a, b)
    return _c_norm(a * b)


def _c_neg(a):
    return -a


def _c_is_zero(a) -> bool:
    if isinstance(a, CyclotomicElement):
        return a.is_zero()
    return a == 0


def _c_div(a, b):
    if isinstance(a, CyclotomicElement) or isinstance(b, CyclotomicElement):
        raise InexactDivisionError("division of cyclotomic coefficients is not supported")
    if b == 0:
        raise ZeroDivisionError
    return _c_norm(Fraction(a) / Fraction(b))


class MultiPoly:
    """Sparse exact polynomial in named variables.

    `vars` is the ordered tuple of variable names actually present;
    `terms` maps exponent tuples to nonzero coefficients.  Instances are
    immutable by convention.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, ...] = (), terms: dict | None = None):
        for name in vars:
            if name not in VAR_ORDER:
                raise ValueError(f"unknown variable {name!r}")
        self.vars = tuple(vars)
        clean = {}
        if terms:
            for exps, c in terms.items():
                c = _c_norm(c)
                if not _c_is_zero(c):
                    clean[tuple(exps)] = c
        self.terms = clean
        self._prune()

    def _prune(self):
        """Drop variables that occur in no term (canonical representation)."""
        if not self.vars:
            return
        used = [False] * len(self.vars)
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used[i] = True
        if all(used):
            return
        keep = [i for i, flag in enumerate(used) if flag]
        new_vars = tuple(self.vars[i] for i in keep)
        new_terms = {}
        for exps, c in self.terms.items():
            new_terms[tuple(exps[i] for i in keep)] = c
        self.vars = new_vars
        self.terms = new_terms

    # -- constructors ---------------------------------------------------------

    @classmethod
    def constant(cls, c) -> MultiPoly:
        return cls((), {(): c} if not _c_is_zero(_c_norm(c)) else {})

    @classmethod
    def variable(cls, name: str) -> MultiPoly:
        return cls((name,), {(1,): 1})

    @classmethod
    def zero(cls) -> MultiPoly:
        return cls((), {})

    # -- representation helpers ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def _embedded(self, target_vars: tuple[str, ...]) -> dict:
        idx = {name: i for i, name in enumerate(target_vars)}
        out = {}
        for exps, c in self.terms.items():
            new = [0] * len(target_vars)
            for name, e in zip(self.vars, exps):
                new[idx[name]] = e
            out[tuple(new)] = c
        return out

    @staticmethod
    def _merge_vars(a: tuple[str, ...], b: tuple[str, ...]) -> tuple[str, ...]:
        names = set(a) | set(b)
        return tuple(v for v in VAR_ORDER if v in names)

    def _unify(self, other: MultiPoly):
        target = self._merge_vars(self.vars, other.vars)
        return target, self._embedded(target), other._embedded(target)

    @staticmethod
    def _coerce(value) -> MultiPoly:
        if isinstance(value, MultiPoly):
            return value
        return MultiPoly.constant(value)

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other) -> MultiPoly:
        other = self._coerce(other)
        target, ta, tb = self._unify(other)
        for exps, c in tb.items():
            if exps in ta:
                ta[exps] = _c_add(ta[exps], c)
            else:
                ta[exps] = c
        return MultiPoly(target, ta)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.vars, {e: _c_neg(c) for e, c in self.terms.items()})

    def __sub__(self, other) -> MultiPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> MultiPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> MultiPoly:
        other = self._coerce(other)
        target, ta, tb = self._unify(other)
        out: dict = {}
        for ea, ca in ta.items():
            for eb, cb in tb.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                prod = _c_mul(ca, cb)
                if key in out:
                    out[key] = _c_add(out[key], prod)
                else:
                    out[key] = prod
        return MultiPoly(target, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> MultiPoly:
        if e < 0:
            raise ValueError("negative exponent")
        result = MultiPoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- structure --------------------------------------------------------------

    def degree_in(self, name: str) -> int:
        if name not in self.vars:
            return 0
        i = self.vars.index(name)
        return max((exps[i] for exps in self.terms), default=0)

    def coeff_in(self, name: str, power: int) -> MultiPoly:
        """Coefficient of name^power, as a polynomial in the other variables."""
        if name not in self.vars:
            return self if power == 0 else MultiPoly.zero()
        i = self.vars.index(name)
        out = {}
        for exps, c in self.terms.items():
            if exps[i] == power:
                out[exps[:i] + (0,) + exps[i + 1 :]] = c
        return MultiPoly(self.vars, out)

    def as_univariate(self, name: str) -> list[MultiPoly]:
        """Coefficients [c_0, ..., c_deg] with self = sum c_k * name^k."""
        return [self.coeff_in(name, k) for k in range(self.degree_in(name) + 1)]

    def substitute(self, mapping: dict) -> MultiPoly:
        """Simultaneous substitution; values may be polynomials or scalars."""
        images = {name: self._coerce(value) for name, value in mapping.items()}
        result = MultiPoly.zero()
        power_cache: dict[tuple[str, int], MultiPoly] = {}

        def power_of(name: str, e: int) -> MultiPoly:
            key = (name, e)
            if key not in power_cache:
                base = images.get(name, MultiPoly.variable(name))
                power_cache[key] = base**e
            return power_cache[key]

        for exps, c in self.terms.items():
            term = MultiPoly.constant(c)
            for name, e in zip(self.vars, exps):
                if e:
                    term = term * power_of(name, e)
            result = result + term
        return result

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def _sorted_keys(self, target_vars=None):
        terms = self.terms if target_vars is None else self._embedded(target_vars)
        return sorted(terms, key=lambda e: (sum(e), e), reverse=True)

    def leading(self) -> tuple[tuple[int, ...], object]:
        """Graded-lex leading (exponents, coefficient)."""
        if self.is_zero():
            raise ValueError("zero polynomial has no leading term")
        key = self._sorted_keys()[0]
        return key, self.terms[key]

    # -- rational normalization ---------------------------------------------------

    def content_and_primitive(self) -> tuple[Fraction, MultiPoly]:
        """Write self = content * primitive with integer primitive part.

        The primitive part has coprime integer coefficients and positive
        graded-lex leading coefficient.  Rational coefficients only.
        """
        if self.is_zero():
            return Fraction(0), self
        poly = self.rationalized()
        denom = 1
        for c in poly.terms.values():
            denom = lcm(denom, Fraction(c).denominator)
        numer = 0
        for c in poly.terms.values():
            numer = gcd(numer, (Fraction(c) * denom).numerator)
        content = Fraction(numer, denom)
        lead_key = poly._sorted_keys()[0]
        if Fraction(poly.terms[lead_key]) < 0:
            content = -content
        prim = MultiPoly(poly.vars, {e: _c_norm(Fraction(c) / content) for e, c in poly.terms.items()})
        return content, prim

    def primitive_part(self) -> MultiPoly:
        return self.content_and_primitive()[1]

    def rationalized(self) -> MultiPoly:
        """Convert cyclotomic coefficients with rational values to rationals.

        Raises InexactDivisionError if some coefficient is genuinely
        irrational.
        """
        if not any(isinstance(c, CyclotomicElement) for c in self.terms.values()):
            return self
        out = {}
        for e, c in self.terms.items():
            if isinstance(c, CyclotomicElement):
                if not c.is_rational():
                    raise InexactDivisionError("coefficient is not rational")
                c = c.rational_value()
            out[e] = c
        return MultiPoly(self.vars, out)

    def equal_up_to_scalar(self, other: MultiPoly) -> bool:
        """True iff self = s * other for a nonzero scalar s (cross-multiplied)."""
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        target, ta, tb = self._unify(other)
        keys_a = sorted(ta, key=lambda e: (sum(e), e), reverse=True)
        keys_b = sorted(tb, key=lambda e: (sum(e), e), reverse=True)
        if keys_a != keys_b:
            return False
        ca = ta[keys_a[0]]
        cb = tb[keys_b[0]]
        return (self * cb) == (other * ca)

    # -- printing ----------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for exps in self._sorted_keys():
            c = self.terms[exps]
            monomial = "*".join(
                f"{name}^{e}" if e > 1 else name
                for name, e in zip(self.vars, exps)
                if e
            )
            if isinstance(c, CyclotomicElement):
                coeff_str = f"({c})"
            else:
                coeff_str = str(c)
            if monomial:
                if coeff_str == "1":
                    parts.append(monomial)
                elif coeff_str == "-1":
                    parts.append(f"-{monomial}")
                else:
                    parts.append(f"{coeff_str}*{monomial}")
            else:
                parts.append(coeff_str)
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


def exact_div(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Exact polynomial quotient p / q; raises InexactDivisionError otherwise."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    target = MultiPoly._merge_vars(p.vars, q.vars)
    rem = dict(p._embedded(target))
    qt = q._embedded(target)
    q_keys = sorted(qt, key=lambda e: (sum(e), e), reverse=True)
    q_lead = q_keys[0]
    q_lead_c = qt[q_lead]
    out: dict = {}
    while rem:
        lead = max(rem, key=lambda e: (sum(e), e))
        diff = tuple(a - b for a, b in zip(lead, q_lead))
        if any(x < 0 for x in diff):
            raise InexactDivisionError("leading term not divisible")
        c = _c_div(rem[lead], q_lead_c)
        out[diff] = _c_add(out.get(diff, 0), c)
        for eb, cb in qt.items():
            key = tuple(a + b for a, b in zip(diff, eb))
            val = _c_add(rem.get(key, 0), _c_neg(_c_mul(c, cb)))
            if _c_is_zero(val):
                rem.pop(key, None)
            else:
                rem[key] = val
    return MultiPoly(target, out)


def divides(q: MultiPoly, p: MultiPoly) -> bool:
    try:
        exact_div(p, q)
        return True
    except InexactDivisionError:
        return False


def discriminant_in(p: MultiPoly, name: str) -> MultiPoly:
    """Discriminant B^2 - 4AC of a polynomial of degree exactly 2 in `name`."""
    if p.degree_in(name) != 2:
        raise ValueError(f"polynomial does not have degree 2 in {name}")
    a = p.coeff_in(name, 2)
    b = p.coeff_in(name, 1)
    c = p.coeff_in(name, 0)
    return b * b - 4 * a * c


def resultant(p: MultiPoly, q: MultiPoly, name: str) -> MultiPoly:
    """Sylvester resultant of p and q with respect to `name`.

    Computed as the fraction-free (Bareiss) determinant of the Sylvester
    matrix: every division is exact in the polynomial ring, so no
    rational functions ever appear.
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of the zero polynomial is undefined")
    cp = p.as_univariate(name)
    cq = q.as_univariate(name)
    m = len(cp) - 1
    n = len(cq) - 1
    if m == 0 and n == 0:
        return MultiPoly.constant(1)
    size = m + n
    matrix = [[MultiPoly.zero() for _ in range(size)] for _ in range(size)]
    for row in range(n):
        for j, coeff in enumerate(reversed(cp)):
            matrix[row][row + j] = coeff
    for row in range(m):
        for j, coeff in enumerate(reversed(cq)):
            matrix[n + row][row + j] = coeff
    return _bareiss_determinant(matrix)


def _bareiss_determinant(matrix: list[list[MultiPoly]]) -> MultiPoly:
    n = len(matrix)
    a = [row[:] for row in matrix]
    sign = 1
    prev = MultiPoly.constant(1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero()
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * pivot - a[i][k] * a[k][j]
                a[i][j] = exact_div(num, prev) if not num.is_zero() else MultiPoly.zero()
            a[i][k] = MultiPoly.zero()
        prev = pivot
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


# -- named polynomials ---------------------------------------------------------


def _v(name: str) -> MultiPoly:
    return MultiPoly.variable(name)


def _build_registry() -> dict[str, MultiPoly]:
    lam = _v("lam")
    u, v = _v("u"), _v("v")
    x0, x1, x2, x3 = _v("x0"), _v("x1"), _v("x2"), _v("x3")
    i_unit = MultiPoly.constant(root_i())
    reg: dict[str, MultiPoly] = {}
    reg["f1"] = x0**4 + x1**4 + lam * x0 * x1 * x2 * x3
    reg["f2"] = x0**3 * x1 + x0 * x1**3 + lam * x0 * x1 * x2 * x3
    reg["g1"] = x2**4 + x3**4
    reg["g2"] = x2**3 * x3 + x2 * x3**3
    reg["g3"] = x2**3 * x3 + x3**4
    reg["h1"] = u**4 - 4 * u**2 * v + 2 * v**2 + lam * v * x2 * x3
    reg["h2"] = u**2 * v - 2 * v**2 + lam * v * x2 * x3
    reg["h3"] = u**4 + 4 * u**2 * v + 2 * v**2 + lam * v * x2 * x3
    reg["h4"] = u**2 * v + 2 * v**2 + lam * v * x2 * x3
    reg["h5"] = u**4 - 4 * i_unit * u**2 * v - 2 * v**2 + lam * v * x2 * x3
    # Discriminants of the sigma-quotient surfaces in v; reference
    # transcriptions (q3 printed with a stray factor "t", q6/q7 printed
    # with the pure-quartic tail on x2 instead of x3 -- all three are
    # reproduced below by recomputation, which is the ground truth).
    reg["q1"] = (
        8 * u**4
        - 8 * lam * u**2 * x2 * x3
        + lam**2 * x2**2 * x3**2
        - 8 * x2**4
        - 8 * x3**4
    )
    reg["q2"] = (
        8 * u**4
        - 8 * lam * u**2 * x2 * x3
        + lam**2 * x2**2 * x3**2
        - 8 * x2**3 * x3
        - 8 * x2 * x3**3
    )
    reg["q3"] = (
        u**4
        + 2 * lam * u**2 * x2 * x3
        + lam**2 * x2**2 * x3**2
        + 8 * x2**3 * x3
        + 8 * x2 * x3**3
    )
    reg["q6"] = (
        8 * u**4
        - 8 * lam * u**2 * x2 * x3
        + lam**2 * x2**2 * x3**2
        - 8 * x2**3 * x3
        - 8 * x3**4
    )
    reg["q7"] = (
        u**4
        + 2 * lam * u**2 * x2 * x3
        + lam**2 * x2**2 * x3**2
        + 8 * x2**3 * x3
        + 8 * x3**4
    )
    return reg


_REGISTRY = _build_registry()

FAMILY_INDICES = (1, 2, 3, 6, 7)

# Which f/g pair defines each of the five families with the extra
# involution, and hence which h+g pairs cut out the quotient surfaces.
_FG_PAIR = {1: ("f1", "g1"), 2: ("f1", "g2"), 3: ("f2", "g2"), 6: ("f1", "g3"), 7: ("f2", "g3")}
_SIGMA_H = {"f1": "h1", "f2": "h2"}  # quotient by (x0, x1) -> (x1, x0)
_TAU_H = {"f1": "h3", "f2": "h4"}  # quotient by (x0, x1) -> (-x1, -x0)


def builtin(name: str) -> MultiPoly:
    """Named reference polynomial (f1, f2, g1..g3, h1..h5, q1, q2, q3, q6, q7)."""
    if name not in _REGISTRY:
        raise KeyError(f"unknown polynomial {name!r}")
    return _REGISTRY[name]


def family_quartic(i: int) -> MultiPoly:
    """Defining polynomial f + g of family i, for i in {1, 2, 3, 6, 7}."""
    f_name, g_name = _fg(i)
    return builtin(f_name) + builtin(g_name)


def _fg(i: int) -> tuple[str, str]:
    if i not in _FG_PAIR:
        raise ValueError(f"family index must be one of {FAMILY_INDICES}")
    return _FG_PAIR[i]


def quotient_surface(i: int, sheet: int) -> MultiPoly:
    """Defining polynomial of the degree-2 del Pezzo quotient surface.

    sheet 1: quotient by the plain swap of x0, x1 (coordinates u = x0+x1,
    v = x0*x1); sheet 2: quotient by the signed swap (u = x0-x1); sheet 3
    (families 1, 2, 6 only): quotient by the order-4 signed swap.
    """
    f_name, g_name = _fg(i)
    if sheet == 1:
        return builtin(_SIGMA_H[f_name]) + builtin(g_name)
    if sheet == 2:
        return builtin(_TAU_H[f_name]) + builtin(g_name)
    if sheet == 3:
        if i not in (1, 2, 6):
            raise ValueError("sheet 3 exists for families 1, 2, 6 only")
        return builtin("h5") + builtin(g_name)
    raise ValueError("sheet must be 1, 2 or 3")


def branch_quartic(i: int) -> MultiPoly:
    """Discriminant (in v) of the sheet-1 quotient surface: a plane quartic."""
    return discriminant_in(quotient_surface(i, 1), "v")


def verify_quotient_identity(j: int) -> bool:
    """Check h_j(x0+x1, x0*x1, x2, x3) == f_j(x0, x1, x2, x3) exactly."""
    if j not in (1, 2):
        raise ValueError("j must be 1 or 2")
    h = builtin(f"h{j}")
    f = builtin(f"f{j}")
    image = h.substitute({"u": _v("x0") + _v("x1"), "v": _v("x0") * _v("x1")})
    return (image - f).is_zero()


def verify_isomorphism(substitution: dict, source: MultiPoly, target: MultiPoly) -> bool:
    """True iff source composed with the substitution equals target up to scalar.

    The substitution maps variable names to polynomials (or scalars);
    mapping `lam` is allowed, for the isomorphisms that act on the
    deformation parameter as well.
    """
    image = source.substitute(substitution)
    return image.equal_up_to_scalar(target)


def _a2_isomorphism_registry():
    """Verified coordinate maps between the quotient surfaces.

    Each entry is (name, substitution, source, target) with
    source o substitution == target up to a nonzero scalar.  Every map
    here has been recomputed from the surface equations; the test suite
    re-verifies each one by exact expansion.
    """
    i_unit = MultiPoly.constant(root_i())
    u, v, x2, x3, lam = _v("u"), _v("v"), _v("x2"), _v("x3"), _v("lam")
    entries = []
    for i in (1, 2, 6):
        entries.append(
            (
                f"family{i}: sheet2 -> sheet1",
                {"u": i_unit * u},
                quotient_surface(i, 2),
                quotient_surface(i, 1),
            )
        )
    entries.append(
        (
            "family3: sheet2 -> sheet1",
            {"u": i_unit * u, "x3": -x3},
            quotient_surface(3, 1),
            quotient_surface(3, 2),
        )
    )
    entries.append(
        (
            "family7: sheet2 -> sheet1 (acts on lam)",
            {"u": MultiPoly.constant(zeta8(3)) * u, "v": i_unit * v, "lam": -i_unit * lam},
            quotient_surface(7, 1),
            quotient_surface(7, 2),
        )
    )
    entries.append(
        (
            "family1: sheet3 -> sheet2",
            {"v": i_unit * v, "x3": -i_unit * x3},
            quotient_surface(1, 3),
            quotient_surface(1, 2),
        )
    )
    entries.append(
        (
            "family2: sheet3 -> sheet2",
            {"v": i_unit * v, "x2": MultiPoly.constant(zeta8(1)) * x2, "x3": MultiPoly.constant(zeta8(5)) * x3},
            quotient_surface(2, 3),
            quotient_surface(2, 2),
        )
    )
    entries.append(
        (
            "family6: sheet3 -> sheet2 (acts on lam)",
            {"v": i_unit * v, "lam": -i_unit * lam},
            quotient_surface(6, 3),
            quotient_surface(6, 2),
        )
    )
    return entries


def isomorphism_checks() -> list[tuple[str, bool]]:
    return [
        (name, verify_isomorphism(sub, source, target))
        for name, sub, source, target in _a2_isomorphism_registry()
    ]


# -- bitangents ----------------------------------------------------------------


def _strip_factors(poly: MultiPoly, factors) -> MultiPoly:
    out = poly
    for f in factors:
        while True:
            try:
                candidate = exact_div(out, f)
            except InexactDivisionError:
                break
            out = candidate
    return out


def bitangent_restriction(i: int) -> list[MultiPoly]:
    """Coefficients r_0..r_4 (in x2^(4-j) x3^j) of the quartic on u = a2 x2 + a3 x3."""
    q = branch_quartic(i)
    a2, a3, x2, x3 = _v("a2"), _v("a3"), _v("x2"), _v("x3")
    r = q.substitute({"u": a2 * x2 + a3 * x3})
    return [r.coeff_in("x2", 4 - j).coeff_in("x3", j) for j in range(5)]


def bitangent_leading_factor(i: int) -> MultiPoly:
    """The x2^4 coefficient of the restricted quartic (a polynomial in a2)."""
    return bitangent_restriction(i)[0]


def bitangent_eliminant(i: int) -> MultiPoly:
    """Eliminant in (lam, a2) whose roots give the slant bitangents.

    A line u = a2*x2 + a3*x3 is bitangent to the branch quartic iff the
    restriction equals C*(x2^2 + b*x2*x3 + c*x3^2)^2 for some b, c, with
    C the x2^4 coefficient of the restriction.  Solving the two linear
    conditions for b and c and clearing denominators leaves two
    polynomial conditions; eliminating a3 by a Sylvester resultant and
    stripping the spurious content (powers of a2 and of a2^4 - 1 coming
    from the cleared denominators) yields a primitive polynomial of
    degree 20 (family 1) or 24 (families 2, 3, 6, 7) in a2.
    """
    r0, r1, r2, r3, r4 = bitangent_restriction(i)
    c_lead = r0
    e1 = 8 * c_lead**2 * r3 - 4 * c_lead * r1 * r2 + r1**3
    e2 = 64 * c_lead**3 * r4 - (4 * c_lead * r2 - r1**2) ** 2
    res = resultant(e1, e2, "a3")
    a2 = _v("a2")
    spurious = [a2, a2**4 - 1]
    return _strip_factors(res.primitive_part(), spurious).primitive_part()


def vertical_bitangents(i: int) -> MultiPoly:
    """Condition on a for the line x2 = a*x3 to be bitangent, up to scalar.

    Restricting the branch quartic to the line leaves A*u^4 + B*u^2*x3^2
    + C*x3^4 (no odd powers of u occur); the restriction is a scaled
    perfect square iff B^2 - 4AC = 0.
    """
    q = branch_quartic(i)
    a = _v("a")
    r = q.substitute({"x2": a * _v("x3")})
    for odd in (1, 3):
        if not r.coeff_in("u", odd).is_zero():
            raise AssertionError("unexpected odd powers of u in the restriction")
    a4 = r.coeff_in("u", 4).coeff_in("x3", 0)
    b2 = r.coeff_in("u", 2).coeff_in("x3", 2)
    c0 = r.coeff_in("u", 0).coeff_in("x3", 4)
    return (b2 * b2 - 4 * a4 * c0).primitive_part()


# -- golden data and the verification checklist ---------------------------------
#
# The reference polynomials below are verified transcriptions: each one is
# reproduced by the derivation pipeline in this module, which is the ground
# truth for every entry (the test suite re-derives all of them).


def expected_leading_factor(i: int) -> MultiPoly:
    a2 = _v("a2")
    if i == 1:
        return 8 * a2**4 - 8
    if i in (2, 6):
        return 8 * a2**4
    if i in (3, 7):
        return a2**4
    raise ValueError(f"family index must be one of {FAMILY_INDICES}")


def expected_vertical_bitangents(i: int) -> MultiPoly:
    lam, a = _v("lam"), _v("a")
    if i == 1:
        return 8 * a**4 + lam**2 * a**2 + 8
    if i == 2:
        return a * (8 * a**2 + lam**2 * a + 8)
    if i == 3:
        return a * (a**2 + 1)
    if i == 6:
        return 8 * a**3 + lam**2 * a**2 + 8
    if i == 7:
        return (a + 1) * (a**2 - a + 1)
    raise ValueError(f"family index must be one of {FAMILY_INDICES}")


def expected_eliminant_factors(i: int) -> list[MultiPoly]:
    """Factors whose product equals the eliminant up to a rational scalar."""
    lam, a2 = _v("lam"), _v("a2")
    i_unit = MultiPoly.constant(root_i())
    if i == 1:
        conj_pair = (
            ((lam**2 - 16) * a2**4 - 16 * i_unit * lam * a2**2 + lam**2 - 16)
            * ((lam**2 - 16) * a2**4 + 16 * i_unit * lam * a2**2 + lam**2 - 16)
        ).rationalized()
        return [
            (lam**2 + 16) * a2**4 - 16 * lam * a2**2 + lam**2 + 16,
            (lam**2 + 16) * a2**4 + 16 * lam * a2**2 + lam**2 + 16,
            conj_pair,
            256 * a2**4 - lam**4,
        ]
    if i == 2:
        return [
            (lam**2 + 16) * a2**4 + 4 * lam * a2**2 + 2,
            (lam**2 - 16) * a2**4 + 4 * lam * a2**2 + 2,
            1024 * a2**16
            + 128 * lam**3 * a2**14
            + (2 * lam**6 + 960 * lam**2) * a2**12
            + (20 * lam**5 + 2560 * lam) * a2**10
            + (73 * lam**4 + 2176) * a2**8
            + 120 * lam**3 * a2**6
            + 92 * lam**2 * a2**4
            + 32 * lam * a2**2
            + 4,
        ]
    if i == 3:
        return [
            2 * a2**4 + lam * a2**2 + 2,
            2 * a2**4 - lam * a2**2 - 2,
            a2**8 + 4 * a2**6 + (lam**2 - 4 * lam + 8) * a2**4 + (4 * lam - 8) * a2**2 + 4,
            a2**8 - 4 * a2**6 + (lam**2 + 4 * lam + 8) * a2**4 + (4 * lam + 8) * a2**2 + 4,
        ]
    if i == 6:
        return [
            (-512 * lam**6 - 1769472) * a2**24
            - 9216 * lam**5 * a2**22
            + (2 * lam**10 - 62976 * lam**4) * a2**20
            + (36 * lam**9 - 286720 * lam**3) * a2**18
            + (273 * lam**8 - 663552 * lam**2) * a2**16
            + (1136 * lam**7 - 700416 * lam) * a2**14
            + (2840 * lam**6 - 276480) * a2**12
            + 4416 * lam**5 * a2**10
            + 4312 * lam**4 * a2**8
            + 2624 * lam**3 * a2**6
            + 960 * lam**2 * a2**4
            + 192 * lam * a2**2
            + 16
        ]
    if i == 7:
        return [
            -3 * a2**8 + 2 * lam * a2**6 + (lam**2 + 12) * a2**4 + 4 * lam * a2**2 + 4,
            9 * a2**16
            + 6 * lam * a2**14
            + (7 * lam**2 + 36) * a2**12
            + (60 * lam - 2 * lam**3) * a2**10
            + (lam**4 - 20 * lam**2 + 156) * a2**8
            + (8 * lam**3 - 56 * lam) * a2**6
            + (24 * lam**2 - 48) * a2**4
            + 32 * lam * a2**2
            + 16,
        ]
    raise ValueError(f"family index must be one of {FAMILY_INDICES}")


def _product(polys) -> MultiPoly:
    out = MultiPoly.constant(1)
    for p in polys:
        out = out * p
    return out


def _random_spot_checks(seed: int) -> list[tuple[str, bool]]:
    import random

    rng = random.Random(seed)
    checks = []
    v, x2, x3, lam = _v("v"), _v("x2"), _v("x3"), _v("lam")

    ok = True
    for _ in range(5):
        # disc of A*(v - r)^2 vanishes identically for any A, r free of v;
        # A is kept positive at the specialization so the degree in v
        # cannot collapse there
        amp = MultiPoly.constant(rng.randint(1, 9)) + rng.randint(0, 4) * x2
        root = rng.randint(-5, 5) * x3 + rng.randint(-5, 5) * x2 + MultiPoly.constant(rng.randint(-3, 3))
        square = amp * (v - root) ** 2
        ok = ok and discriminant_in(square, "v").is_zero()
        # disc commutes with specializing the other variables
        general = amp * v**2 + (x2 + 3) * v + root
        spec = {"x2": Fraction(rng.randint(1, 9), rng.randint(1, 5)), "x3": rng.randint(-9, 9)}
        lhs = discriminant_in(general, "v").substitute(spec)
        rhs = discriminant_in(general.substitute(spec), "v")
        ok = ok and (lhs - rhs).is_zero()
    checks.append(("discriminant-double-root-spot-check", ok))

    ok = True
    for _ in range(5):
        shared = v - rng.randint(-5, 5) * x2
        p = shared * (v + rng.randint(1, 7))
        q = shared * (v**2 + rng.randint(1, 7) * lam)
        ok = ok and resultant(p, q, "v").is_zero()
        p2 = v - rng.randint(1, 5) * x2
        q2 = v - rng.randint(6, 9) * x3
        ok = ok and not resultant(p2, q2, "v").is_zero()
    checks.append(("resultant-shared-root-spot-check", ok))
    return checks


def appendix_checks(seed: int = 0, only=None) -> list[tuple[str, bool]]:
    """Run every symbolic golden verification; returns (name, passed) pairs.

    Everything is recomputed from the defining data: quotient identities,
    branch-quartic discriminants, surface isomorphisms, vertical
    bitangents, the leading factors, and the eliminants with their
    factored forms, plus seeded property spot checks.
    """
    checks: list[tuple[str, bool]] = []
    checks.append(("quotient-identity-h1", verify_quotient_identity(1)))
    checks.append(("quotient-identity-h2", verify_quotient_identity(2)))
    for i in FAMILY_INDICES:
        checks.append((f"discriminant-q{i}", (branch_quartic(i) - builtin(f"q{i}")).is_zero()))
    for name, ok in isomorphism_checks():
        checks.append((f"isomorphism {name}", ok))
    for i in FAMILY_INDICES:
        checks.append(
            (f"leading-factor-{i}", (bitangent_leading_factor(i) - expected_leading_factor(i)).is_zero())
        )
        checks.append(
            (
                f"vertical-bitangents-{i}",
                vertical_bitangents(i).equal_up_to_scalar(expected_vertical_bitangents(i)),
            )
        )
    for i in FAMILY_INDICES:
        eliminant = bitangent_eliminant(i)
        want_degree = 20 if i == 1 else 24
        checks.append((f"eliminant-degree-{i}", eliminant.degree_in("a2") == want_degree))
        if i != 1:
            even = all(
                eliminant.coeff_in("a2", k).is_zero()
                for k in range(1, eliminant.degree_in("a2") + 1, 2)
            )
            checks.append((f"eliminant-even-{i}", even))
        checks.append(
            (
                f"eliminant-factors-{i}",
                _product(expected_eliminant_factors(i)).equal_up_to_scalar(eliminant),
            )
        )
    checks.extend(_random_spot_checks(seed))
    if only is not None:
        wanted = set(only)
        checks = [c for c in checks if any(w in c[0] for w in wanted)]
    return checks

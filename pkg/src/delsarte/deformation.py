"""Deformation data for Delsarte hypersurfaces and their Fermat covers.

A family is encoded by a coefficient matrix A (rows = exponent vectors of
the monomials) and a deformation vector a.  From these we derive the cover
degree d, the map matrix B = d*A^-1, the weight vector w = B*(1,...,1)^T
and the cover deformation vector b = a*B, so the family X_lambda in P(w)
is dominated by the deformed Fermat hypersurface of degree d with extra
monomial prod y_i^(b_i).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .exactalg import IntMatrix, determinant, minimal_map_matrix


class DeformationError(ValueError):
    """Input does not satisfy the deformation-data conditions."""


@dataclass(frozen=True)
class DeformationData:
    """The tuple (A, a, d, B, w, b) describing one family and its cover.

    `lam` holds the deformation parameter: an integer representative in
    the working prime field, or None when the parameter stays symbolic.
    """

    matrix: IntMatrix
    deformation: tuple[int, ...]
    degree: int
    map_matrix: IntMatrix
    weights: tuple[int, ...]
    cover_exponents: tuple[int, ...]
    lam: int | None = None

    @property
    def n(self) -> int:
        """Ambient projective dimension (matrix size minus one)."""
        return self.matrix.n - 1

    def with_lambda(self, lam: int | None) -> DeformationData:
        return DeformationData(
            self.matrix,
            self.deformation,
            self.degree,
            self.map_matrix,
            self.weights,
            self.cover_exponents,
            lam,
        )


def validate_coefficient_matrix(a: IntMatrix) -> list[str]:
    """Check the defining conditions; returns the violated ones (possibly none).

    Violations are reported as data rather than raised, so callers can show
    a complete diagnostic for bad input.
    """
    problems = []
    if any(x < 0 for row in a.rows for x in row):
        problems.append("matrix has a negative entry")
    det = determinant(a)
    if det == 0:
        problems.append("matrix is singular")
    for j in range(a.n):
        if all(a.rows[i][j] != 0 for i in range(a.n)):
            problems.append(f"column {j} has no zero entry")
    if det != 0:
        d, b = minimal_map_matrix(a)
        weights = b.times_col((1,) * a.n)
        if any(w <= 0 for w in weights):
            problems.append("inverse weight vector has a nonpositive entry")
    return problems


def build(a_matrix: IntMatrix, deformation, lam: int | None = None) -> DeformationData:
    """Assemble full deformation data from (A, a), checking every invariant."""
    problems = validate_coefficient_matrix(a_matrix)
    if problems:
        raise DeformationError("; ".join(problems))
    a_vec = tuple(int(x) for x in deformation)
    if len(a_vec) != a_matrix.n:
        raise DeformationError("deformation vector has wrong length")
    if any(x < 0 for x in a_vec):
        raise DeformationError("deformation vector has a negative entry")
    d, b_matrix = minimal_map_matrix(a_matrix)
    weights = b_matrix.times_col((1,) * a_matrix.n)
    if sum(ai * wi for ai, wi in zip(a_vec, weights)) != d:
        raise DeformationError("not a deformation vector: weighted degree differs from d")
    b_vec = b_matrix.row_times(a_vec)
    if any(x < 0 for x in b_vec):
        raise DeformationError("negative cover exponent")
    assert sum(b_vec) == d
    return DeformationData(a_matrix, a_vec, d, b_matrix, weights, b_vec, lam)


def common_cover(pairs, multiple: int = 1):
    """Least cover degree and shared exponent vector for several families.

    `pairs` is a sequence of (A, a).  Returns (d, b) when all the vectors
    a*A^-1 are pairwise proportional (so the families share one deformed
    Fermat cover), otherwise None.  `multiple` scales the least degree for
    callers that want a non-minimal common cover.
    """
    if multiple < 1:
        raise ValueError("multiple must be positive")
    data = [build(IntMatrix(m) if not isinstance(m, IntMatrix) else m, a) for m, a in pairs]
    if not data:
        return None
    d_joint = 1
    for item in data:
        d_joint = lcm(d_joint, item.degree)
    d_joint *= multiple
    vectors = []
    for item in data:
        scale = d_joint // item.degree
        vectors.append(tuple(scale * x for x in item.cover_exponents))
    first = vectors[0]
    if any(v != first for v in vectors[1:]):
        return None
    return d_joint, first


# The ten built-in families of invertible quartic polynomials, keyed
# "family1" ... "family10".  Rows of each matrix are the exponent vectors
# of the four monomials of the undeformed polynomial; the deformation
# vector is (1,1,1,1) throughout.
FAMILIES: dict[str, tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]] = {
    # x0^4 + x1^4 + x2^4 + x3^4
    "family1": (((4, 0, 0, 0), (0, 4, 0, 0), (0, 0, 4, 0), (0, 0, 0, 4)), (1, 1, 1, 1)),
    # x0^4 + x1^4 + x2^3 x3 + x2 x3^3
    "family2": (((4, 0, 0, 0), (0, 4, 0, 0), (0, 0, 3, 1), (0, 0, 1, 3)), (1, 1, 1, 1)),
    # x0^3 x1 + x0 x1^3 + x2^3 x3 + x2 x3^3
    "family3": (((3, 1, 0, 0), (1, 3, 0, 0), (0, 0, 3, 1), (0, 0, 1, 3)), (1, 1, 1, 1)),
    # x0^4 + x1 x2^3 + x2 x3^3 + x1^3 x3
    "family4": (((4, 0, 0, 0), (0, 1, 3, 0), (0, 0, 1, 3), (0, 3, 0, 1)), (1, 1, 1, 1)),
    # x0 x1^3 + x1 x2^3 + x2 x3^3 + x0^3 x3
    "family5": (((1, 3, 0, 0), (0, 1, 3, 0), (0, 0, 1, 3), (3, 0, 0, 1)), (1, 1, 1, 1)),
    # x0^4 + x1^4 + x2^3 x3 + x3^4
    "family6": (((4, 0, 0, 0), (0, 4, 0, 0), (0, 0, 3, 1), (0, 0, 0, 4)), (1, 1, 1, 1)),
    # x0^3 x1 + x0 x1^3 + x2^3 x3 + x3^4
    "family7": (((3, 1, 0, 0), (1, 3, 0, 0), (0, 0, 3, 1), (0, 0, 0, 4)), (1, 1, 1, 1)),
    # x0^3 x1 + x1^4 + x2^3 x3 + x3^4
    "family8": (((3, 1, 0, 0), (0, 4, 0, 0), (0, 0, 3, 1), (0, 0, 0, 4)), (1, 1, 1, 1)),
    # x0^4 + x1^3 x2 + x2^3 x3 + x3^4
    "family9": (((4, 0, 0, 0), (0, 3, 1, 0), (0, 0, 3, 1), (0, 0, 0, 4)), (1, 1, 1, 1)),
    # x0^3 x1 + x1^3 x2 + x2^3 x3 + x3^4
    "family10": (((3, 1, 0, 0), (0, 3, 1, 0), (0, 0, 3, 1), (0, 0, 0, 4)), (1, 1, 1, 1)),
}


def family_keys() -> list[str]:
    return [f"family{i}" for i in range(1, 11)]


def family(key: str, lam: int | None = None) -> DeformationData:
    """Deformation data for one of the built-in families."""
    if key not in FAMILIES:
        raise KeyError(f"unknown family {key!r}; expected family1..family10")
    rows, a_vec = FAMILIES[key]
    return build(IntMatrix(rows), a_vec, lam)


def data_from_json(obj: dict, lam: int | None = None) -> DeformationData:
    """Build deformation data from {"matrix": [[int,...],...], "deformation": [int,...]}."""
    if not isinstance(obj, dict) or "matrix" not in obj or "deformation" not in obj:
        raise DeformationError('expected an object with "matrix" and "deformation" keys')
    return build(IntMatrix(obj["matrix"]), obj["deformation"], lam)


def equation_string(data: DeformationData) -> str:
    """Human-readable defining polynomial, e.g. x0^4+x1^4+x2^3*x3+x2*x3^3."""

    def monomial(exps) -> str:
        parts = []
        for i, e in enumerate(exps):
            if e == 0:
                continue
            parts.append(f"x{i}" if e == 1 else f"x{i}^{e}")
        return "*".join(parts) if parts else "1"

    terms = [monomial(row) for row in data.matrix.rows]
    lam_term = monomial(data.deformation)
    return "+".join(terms) + f"+lam*{lam_term}"

"""Ground-truth Hochschild dimensions by exact linear algebra.

The degree-n cochain space has one basis element per parallel pair of a
degree-n zero path with a basis path of the algebra.  The differential of
a basis cochain multiplies its value by the outer arrows of the zero path,
reducing products inside the algebra (a product containing a relation is
zero, anything else is again a basis path):

    (D_n f)(a_1...a_n) = a_1 * f(a_2...a_n) + (-1)^n * f(a_1...a_{n-1}) * a_n

with the degree-1 case reading f on trivial paths on both sides.  Written
this way the composite of consecutive differentials vanishes identically
over the integers, which the builder verifies.
"""

from dataclasses import dataclass

from .linalg import check_characteristic, nullity, rank
from .pairs import HHTable, ap_paths
from .quiver import GentlePresentation, Path


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: exact rationals (characteristic 0) or the prime
    field GF(p).  No floating point is involved anywhere."""

    characteristic: int

    def __post_init__(self):
        check_characteristic(self.characteristic)


@dataclass
class CochainComplex:
    """Bases and differential matrices D_1..D_N.

    ``bases[n]`` lists the degree-n parallel pairs; ``differentials[n]``
    (1-indexed) is the integer matrix of D_n with rows over bases[n] and
    columns over bases[n-1].
    """

    field: FieldSpec
    bases: list
    differentials: list

    @property
    def top_degree(self) -> int:
        return len(self.bases) - 1


def _reduce_left(presentation, arrow: int, gamma: Path):
    """Multiply an arrow onto the left of a basis path inside the algebra;
    None encodes zero."""
    if gamma.arrows and (arrow, gamma.arrows[0]) in presentation.relations:
        return None
    return Path(presentation.quiver.arrows[arrow].source, (arrow,) + gamma.arrows)


def _reduce_right(presentation, gamma: Path, arrow: int):
    if gamma.arrows and (gamma.arrows[-1], arrow) in presentation.relations:
        return None
    return Path(gamma.source, gamma.arrows + (arrow,))


def build_complex(presentation: GentlePresentation, field: FieldSpec,
                  nmax: int) -> CochainComplex:
    """Assemble bases and differentials up to degree nmax + 1.

    Propagates :class:`InfiniteDimensionalError` from basis enumeration.
    The complex property D_{n+1} D_n = 0 is asserted over the integers.
    """
    if nmax < 1:
        raise ValueError("nmax must be at least 1")
    basis = presentation.basis  # may raise InfiniteDimensionalError
    top = nmax + 1

    aps = {n: ap_paths(presentation, n) for n in range(top + 1)}
    bases = []
    for n in range(top + 1):
        pairs = [(rho, gamma)
                 for rho in aps[n] for gamma in basis
                 if rho.source == gamma.source
                 and presentation.path_target(rho) == presentation.path_target(gamma)]
        bases.append(pairs)

    differentials = [None]
    for n in range(1, top + 1):
        rows = {pair: i for i, pair in enumerate(bases[n])}
        matrix = [[0] * len(bases[n - 1]) for _ in range(len(bases[n]))]
        sign = -1 if n % 2 else 1
        for col, (rho_prev, gamma) in enumerate(bases[n - 1]):
            for rho in aps[n]:
                first, last = rho.arrows[0], rho.arrows[-1]
                tail = Path(presentation.quiver.arrows[first].target, rho.arrows[1:])
                head = Path(rho.source, rho.arrows[:-1])
                if tail == rho_prev:
                    product = _reduce_left(presentation, first, gamma)
                    if product is not None:
                        matrix[rows[(rho, product)]][col] += 1
                if head == rho_prev:
                    product = _reduce_right(presentation, gamma, last)
                    if product is not None:
                        matrix[rows[(rho, product)]][col] += sign
        differentials.append(matrix)

    complex_ = CochainComplex(field=field, bases=bases, differentials=differentials)
    verify_complex_property(complex_)
    return complex_


def verify_complex_property(complex_: CochainComplex):
    """Check D_{n+1} . D_n = 0 over the integers for every degree."""
    for n in range(1, complex_.top_degree):
        d_n = complex_.differentials[n]
        d_next = complex_.differentials[n + 1]
        for col in range(len(complex_.bases[n - 1])):
            for row in range(len(complex_.bases[n + 1])):
                total = sum(d_next[row][k] * d_n[k][col]
                            for k in range(len(complex_.bases[n])))
                if total != 0:
                    raise AssertionError(
                        "D_%d . D_%d is nonzero at (%d, %d)" % (n + 1, n, row, col))


def hh_dims_oracle(complex_: CochainComplex) -> HHTable:
    """Cohomology dimensions of an assembled complex.

    HH^0 is the kernel dimension of D_1 and HH^n the kernel of D_{n+1}
    minus the rank of D_n; all ranks by exact elimination over the field.
    """
    char = complex_.field.characteristic
    nmax = complex_.top_degree - 1
    ranks = [0] + [rank(complex_.differentials[n], char)
                   for n in range(1, complex_.top_degree + 1)]
    dims = [nullity(complex_.differentials[1], len(complex_.bases[0]), char)]
    for n in range(1, nmax + 1):
        kernel = len(complex_.bases[n]) - ranks[n + 1]
        dims.append(kernel - ranks[n])
    return HHTable(characteristic=char, dims=tuple(dims), method="oracle",
                   tail_note="exact kernel/rank computation")

"""The derived-equivalence invariant of surface algebras and the
dimension formula written in terms of it.

The invariant is a finitely supported multiset of pairs: (0,3) carries the
internal-triangle count, and each boundary component contributes the pair
(marked points incident to an arc, segments with both endpoints incident).
Matching invariants never proves derived equivalence; a mismatch disproves
it.
"""

from dataclasses import dataclass

from .linalg import check_characteristic
from .pairs import HHTable
from .surface import TriangulatedSurface, classify_boundaries, internal_triangles


@dataclass(frozen=True)
class AGInvariant:
    """Support pairs (n, m) with their multiplicities, sorted."""

    support: tuple[tuple[tuple[int, int], int], ...]

    @staticmethod
    def from_counts(counts: dict) -> "AGInvariant":
        cleaned = {pair: mult for pair, mult in counts.items() if mult > 0}
        return AGInvariant(tuple(sorted(cleaned.items())))

    def multiplicity(self, n: int, m: int) -> int:
        for pair, mult in self.support:
            if pair == (n, m):
                return mult
        return 0

    def as_dict(self) -> dict:
        return dict(self.support)

    def lines(self) -> list[str]:
        return ["(%d, %d): %d" % (pair[0], pair[1], mult)
                for pair, mult in self.support]


@dataclass(frozen=True)
class AGComparison:
    equal: bool
    witness: tuple[tuple[int, int], int, int] | None
    verdict: str


def ag_invariant(surface: TriangulatedSurface) -> AGInvariant:
    """Compute the invariant geometrically from triangle and boundary data."""
    counts: dict = {}
    int_count = len(internal_triangles(surface))
    if int_count:
        counts[(0, 3)] = int_count
    for profile in classify_boundaries(surface):
        # every boundary component of a valid surface touches an arc
        assert profile.n_incident >= 1
        pair = (profile.n_incident, profile.m_segments)
        counts[pair] = counts.get(pair, 0) + 1
    return AGInvariant.from_counts(counts)


def psi(invariant: AGInvariant, n: int) -> int:
    """Sum of the (0, d) multiplicities over the divisors d of n."""
    if n < 1:
        raise ValueError("psi is defined for n >= 1")
    return sum(invariant.multiplicity(0, d)
               for d in range(1, n + 1) if n % d == 0)


def hh_dims_ladkani(invariant: AGInvariant, q0: int, q1: int,
                    characteristic: int, nmax: int) -> HHTable:
    """Hochschild dimensions from the invariant and the vertex/arrow counts.

    HH^0 = 1 + phi(1,0); HH^1 = 1 + |Q1| - |Q0| + phi(1,1), plus phi(0,1)
    in characteristic 2; for n >= 2 the dimension is phi(1,n) plus the
    parity-weighted combination of psi(n) and psi(n-1).
    """
    check_characteristic(characteristic)
    if nmax < 1:
        raise ValueError("nmax must be at least 1")
    dims = [1 + invariant.multiplicity(1, 0)]
    hh1 = 1 + q1 - q0 + invariant.multiplicity(1, 1)
    if characteristic == 2:
        hh1 += invariant.multiplicity(0, 1)
    dims.append(hh1)
    for n in range(2, nmax + 1):
        if characteristic == 2:
            a, b = 1, 1
        elif n % 2 == 0:
            a, b = 1, 0
        else:
            a, b = 0, 1
        dims.append(invariant.multiplicity(1, n)
                    + a * psi(invariant, n) + b * psi(invariant, n - 1))
    return HHTable(characteristic=characteristic, dims=tuple(dims),
                   method="ladkani", tail_note="from the derived invariant")


def compare_ag(first: AGInvariant, second: AGInvariant) -> AGComparison:
    """Exact comparison of two invariants.

    A difference is a proof of non-equivalence; equality only means no
    obstruction was found.
    """
    da, db = first.as_dict(), second.as_dict()
    if da == db:
        return AGComparison(equal=True, witness=None,
                            verdict="no obstruction found")
    # report the most significant difference: largest multiplicity gap,
    # smallest pair on ties
    differing = [(pair, da.get(pair, 0), db.get(pair, 0))
                 for pair in sorted(set(da) | set(db))
                 if da.get(pair, 0) != db.get(pair, 0)]
    pair, ma, mb = max(differing, key=lambda item: (abs(item[1] - item[2]),
                                                    [-x for x in item[0]]))
    return AGComparison(equal=False, witness=(pair, ma, mb),
                        verdict="not derived equivalent")

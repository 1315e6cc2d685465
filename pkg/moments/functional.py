from fractions import Fraction
from types import MappingProxyType

from moments.choices import MomentProvenanceChoices
from polycore.exceptions import MomentCapExceeded
from polycore.matrix import PolyMatrix
from polycore.polynomial import BiPoly, as_rational, monomials_up_to


class MomentFunctional:
    """
    A moment functional known through its moments `μ_{h,k} = <u, x^h y^k>` for `h + k <= cap`.

    Attributes:
    - `cap` (int): Highest total degree with known moments.
    - `provenance` (str): A `MomentProvenanceChoices` value.

    Methods:
    - `moment(h, k)`: One moment; raises `MomentCapExceeded` beyond the cap.
    - `pair_poly(p)`: `<u, p>`.
    - `pair(A)`: Entrywise `<u, A>` as a rational matrix.
    - `pair_transposed(A, B)`: `<A u, B> = <u, A^t B>`.

    Usage:
        ```
        u = MomentFunctional({(0, 0): 1, (1, 0): 0, (0, 1): 0}, cap=1)
        u.pair_poly(3 * X + 2)    # Fraction(2)
        ```
    """

    __slots__ = ("_moments", "cap", "provenance")

    def __init__(self, moments, cap, provenance=MomentProvenanceChoices.PEARSON_RECURRENCE):
        table = {(int(h), int(k)): as_rational(value) for (h, k), value in dict(moments).items()}
        missing = [monomial for monomial in monomials_up_to(cap) if monomial not in table]
        if missing:
            raise ValueError(
                f"Moment table is incomplete up to degree {cap}: missing {missing[:5]}."
            )
        self._moments = MappingProxyType(
            {monomial: table[monomial] for monomial in monomials_up_to(cap)}
        )
        self.cap = cap
        self.provenance = provenance

    def __reduce__(self):
        return (MomentFunctional, (dict(self._moments), self.cap, str(self.provenance)))

    @property
    def moments(self):
        return self._moments

    def moment(self, h, k):
        if h + k > self.cap:
            raise MomentCapExceeded(
                f"Moment ({h}, {k}) lies beyond the cap {self.cap}.",
                details={"h": h, "k": k, "cap": self.cap},
            )
        return self._moments[(h, k)]

    def pair_poly(self, poly):
        poly = BiPoly.coerce(poly)
        if poly.total_degree > self.cap:
            raise MomentCapExceeded(
                f"A polynomial of degree {poly.total_degree} exceeds the moment cap {self.cap}.",
                details={"degree": poly.total_degree, "cap": self.cap},
            )
        return sum(
            (value * self._moments[monomial] for monomial, value in poly.terms.items()),
            Fraction(0),
        )

    def pair(self, matrix):
        if not isinstance(matrix, PolyMatrix):
            return self.pair_poly(matrix)
        return [[self.pair_poly(value) for value in row] for row in matrix.entries()]

    def pair_transposed(self, left, right):
        return self.pair(left.transpose() @ right)

    def truncated(self, cap):
        if cap > self.cap:
            raise MomentCapExceeded(f"Cannot extend a table of cap {self.cap} to {cap}.")
        return MomentFunctional(
            {m: v for m, v in self._moments.items() if sum(m) <= cap}, cap, self.provenance
        )

    def table(self):
        """`[(h, k, value), ...]` in the graded basis order."""
        return [(h, k, self._moments[(h, k)]) for h, k in monomials_up_to(self.cap)]

    def __eq__(self, other):
        if not isinstance(other, MomentFunctional):
            return NotImplemented
        return self.cap == other.cap and dict(self._moments) == dict(other._moments)

    def __hash__(self):
        return hash((self.cap, frozenset(self._moments.items())))

    def __repr__(self):
        return f"MomentFunctional(cap={self.cap}, provenance={self.provenance!s})"


def pair(functional, matrix):
    """`<u, A>` entrywise; see `MomentFunctional.pair`."""
    return functional.pair(matrix)

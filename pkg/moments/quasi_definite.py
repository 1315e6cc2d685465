from dataclasses import dataclass, field

from polycore.exceptions import MomentCapExceeded
from polycore.linalg import determinant
from polycore.polynomial import monomials_up_to

CRITERION = "moment-matrix nonsingularity"


def full_moment_matrix(functional, n):
    """
    `M_n = <u, X_n X_n^t>` where `X_n` stacks every monomial of degree `<= n` in graded order.

    Raises:
    - `MomentCapExceeded`: If `2n` exceeds the cap.
    """
    if 2 * n > functional.cap:
        raise MomentCapExceeded(
            f"M_{n} needs moments up to degree {2 * n}; the cap is {functional.cap}.",
            details={"degree": n, "cap": functional.cap},
        )
    basis = monomials_up_to(n)
    return [
        [functional.moment(h1 + h2, k1 + k2) for h2, k2 in basis] for h1, k1 in basis
    ]


@dataclass
class QuasiDefiniteReport:
    """
    Nonsingularity of `M_0..M_N`.

    All determinants nonzero is reported as consistent with quasi-definiteness under the
    moment-matrix criterion named in `criterion`; it is not the orthogonal-complement
    dimension definition itself.
    """

    determinants: list = field(default_factory=list)
    criterion: str = CRITERION

    @property
    def nonsingular(self):
        return [value != 0 for value in self.determinants]

    @property
    def consistent(self):
        return all(self.nonsingular)


def quasi_definite_check(functional, degree):
    """
    Args:
    - `functional`: A `MomentFunctional` with `cap >= 2 * degree`.
    - `degree`: Highest `n` to test.

    Returns:
    - `QuasiDefiniteReport`.
    """
    return QuasiDefiniteReport(
        determinants=[determinant(full_moment_matrix(functional, n)) for n in range(degree + 1)]
    )

"""Parameter sets shared by the tests that sweep the built-in catalog."""

from itertools import product

CATALOG_CASES = [
    ("diagonal-disk", {"mu": "1/2"}),
    ("tensor-hermite-hermite", {}),
    ("tensor-laguerre-jacobi", {"alpha": "0", "beta": "0", "gamma": "0"}),
    ("tensor-hermite-laguerre", {"alpha": "1"}),
    ("tensor-bessel-hermite", {"alpha": "1"}),
    ("ball", {"mu": "1"}),
    ("simplex", {"alpha": "0", "beta": "0", "gamma": "0"}),
    ("krall-sheffer-intriguing", {}),
]

SIMPLEX_GRID = [
    {"alpha": str(alpha), "beta": str(beta), "gamma": str(gamma)}
    for alpha, beta, gamma in product((0, 1), repeat=3)
]

BALL_PARAMETERS = [{"mu": "1/2"}, {"mu": "3/2"}]

DESK_FAMILIES = (
    [("krall-sheffer-intriguing", {})]
    + [("ball", params) for params in BALL_PARAMETERS]
    + [("simplex", params) for params in SIMPLEX_GRID]
    + [
        ("tensor-hermite-hermite", {}),
        ("tensor-laguerre-jacobi", {"alpha": "0", "beta": "0", "gamma": "0"}),
    ]
)

from fractions import Fraction
from functools import total_ordering
from numbers import Rational

from polycore.choices import AxisChoices
from polycore.exceptions import NotDivisible


@total_ordering
class _MinusInfinity:
    """
    Degree of the zero polynomial.

    Compares below every integer and absorbs integer addition, so `deg(p*q) = deg p + deg q`
    stays true when a factor vanishes.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __reduce__(self):
        return (_MinusInfinity, ())

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("-inf-degree")

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "-inf"


DEGREE_OF_ZERO = _MinusInfinity()


def as_rational(value):
    """
    Coerces an exact number to `Fraction`.

    Raises:
    - `TypeError`: For floats and anything that is not an exact rational.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("Booleans are not polynomial coefficients.")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(
        f"Coefficients must be exact rationals; got {type(value).__name__} ({value!r})."
    )


def grlex_key(monomial):
    """Sort key for graded-lex order with x before y: bigger keys are bigger monomials."""
    h, k = monomial
    return (h + k, h)


def monomials_of_degree(m):
    """The monomials `x^(m-i) y^i`, `i = 0..m`, in the layout of the monomial vector."""
    return [(m - i, i) for i in range(m + 1)]


def monomials_up_to(n):
    """Graded basis of P_n: ascending degree, then `x^(m-i) y^i` for `i = 0..m`."""
    basis = []
    for m in range(n + 1):
        basis.extend(monomials_of_degree(m))
    return basis


def basis_size(n):
    return (n + 1) * (n + 2) // 2


def monomial_index(h, k):
    """Position of `x^h y^k` in `monomials_up_to(n)` for any `n >= h + k`."""
    m = h + k
    return m * (m + 1) // 2 + k


class BiPoly:
    """
    Sparse bivariate polynomial with exact rational coefficients.

    The table maps exponent pairs `(h, k)` (for `x^h y^k`) to nonzero `Fraction` coefficients;
    the zero polynomial is the empty table. Values are immutable and hashable.

    Usage:
        ```
        x, y = BiPoly.x(), BiPoly.y()
        p = (x - y) * (x + y)
        p.total_degree          # 2
        exact_divide(p, x - y)  # x + y
        ```
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        cleaned = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for (h, k), coefficient in items:
                if h < 0 or k < 0:
                    raise ValueError(f"Negative exponent in monomial ({h}, {k}).")
                coefficient = as_rational(coefficient)
                key = (int(h), int(k))
                total = cleaned.get(key, 0) + coefficient
                if total:
                    cleaned[key] = total
                else:
                    cleaned.pop(key, None)
        self._terms = cleaned
        self._hash = None

    @classmethod
    def _from_clean(cls, terms):
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    def __reduce__(self):
        return (BiPoly, (dict(self._terms),))

    # constructors

    @classmethod
    def zero(cls):
        return cls._from_clean({})

    @classmethod
    def constant(cls, value):
        value = as_rational(value)
        return cls._from_clean({(0, 0): value} if value else {})

    @classmethod
    def monomial(cls, h, k, coefficient=1):
        return cls({(h, k): coefficient})

    @classmethod
    def x(cls):
        return cls._from_clean({(1, 0): Fraction(1)})

    @classmethod
    def y(cls):
        return cls._from_clean({(0, 1): Fraction(1)})

    @classmethod
    def coerce(cls, value):
        if isinstance(value, BiPoly):
            return value
        return cls.constant(value)

    # inspection

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    def coefficient(self, h, k):
        return self._terms.get((h, k), Fraction(0))

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(key == (0, 0) for key in self._terms)

    def constant_value(self):
        return self._terms.get((0, 0), Fraction(0))

    @property
    def total_degree(self):
        if not self._terms:
            return DEGREE_OF_ZERO
        return max(h + k for h, k in self._terms)

    def leading_monomial(self):
        if not self._terms:
            return None
        return max(self._terms, key=grlex_key)

    def leading_term(self):
        monomial = self.leading_monomial()
        if monomial is None:
            return None
        return monomial, self._terms[monomial]

    def depends_on(self, axis):
        index = 0 if axis == AxisChoices.X else 1
        return any(key[index] for key in self._terms)

    # arithmetic

    def __add__(self, other):
        if not isinstance(other, BiPoly):
            try:
                other = BiPoly.constant(other)
            except TypeError:
                return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        result = dict(self._terms)
        for key, value in other._terms.items():
            total = result.get(key, 0) + value
            if total:
                result[key] = total
            else:
                result.pop(key, None)
        return BiPoly._from_clean(result)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._from_clean({key: -value for key, value in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, BiPoly):
            try:
                other = BiPoly.constant(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor):
        factor = as_rational(factor)
        if not factor:
            return BiPoly.zero()
        return BiPoly._from_clean({key: value * factor for key, value in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, BiPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        if not self._terms or not other._terms:
            return BiPoly.zero()
        result = {}
        for (h1, k1), c1 in self._terms.items():
            for (h2, k2), c2 in other._terms.items():
                key = (h1 + h2, k1 + k2)
                result[key] = result.get(key, 0) + c1 * c2
        return BiPoly._from_clean({key: value for key, value in result.items() if value})

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Polynomials only take nonnegative integer powers.")
        result = BiPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def partial(self, axis, order=1):
        """
        Exact iterated partial derivative.

        Args:
        - `axis`: `AxisChoices.X` or `AxisChoices.Y`.
        - `order`: Number of times to differentiate (nonnegative).

        Returns:
        - The polynomial `d^order p / d axis^order`.
        """
        if order < 0:
            raise ValueError("Derivative order must be nonnegative.")
        if order == 0 or not self._terms:
            return self
        index = 0 if axis == AxisChoices.X else 1
        result = {}
        for key, value in self._terms.items():
            power = key[index]
            if power < order:
                continue
            falling = 1
            for step in range(order):
                falling *= power - step
            new_key = (key[0] - order, key[1]) if index == 0 else (key[0], key[1] - order)
            result[new_key] = value * falling
        return BiPoly._from_clean(result)

    def evaluate(self, x, y):
        x, y = as_rational(x), as_rational(y)
        return sum(
            (value * x**h * y**k for (h, k), value in self._terms.items()), Fraction(0)
        )

    # protocol

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        try:
            return self._terms == BiPoly.constant(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"BiPoly({to_text(self)})"

    def __str__(self):
        return to_text(self)


def exact_divide(p, d):
    """
    Exact quotient of `p` by `d` via multivariate long division (graded-lex, x before y).

    With a single divisor the leading term of an exact multiple is always divisible by the
    leading term of `d`, so the first non-divisible leading term proves there is no quotient.

    Args:
    - `p`: The dividend.
    - `d`: A nonzero divisor.

    Returns:
    - The polynomial `q` with `p = q * d`.

    Raises:
    - `ZeroDivisionError`: If `d` is the zero polynomial.
    - `NotDivisible`: If no exact polynomial quotient exists.
    """
    p, d = BiPoly.coerce(p), BiPoly.coerce(d)
    if d.is_zero():
        raise ZeroDivisionError("Division by the zero polynomial.")
    if p.is_zero():
        return BiPoly.zero()
    if d.is_constant():
        return p.scale(1 / d.constant_value())
    (dh, dk), dc = d.leading_term()
    remainder = dict(p._terms)
    quotient = {}
    divisor_terms = list(d._terms.items())
    while remainder:
        (rh, rk) = max(remainder, key=grlex_key)
        rc = remainder[(rh, rk)]
        if rh < dh or rk < dk:
            raise NotDivisible(
                f"{to_text(p)} is not divisible by {to_text(d)}.",
                details={"dividend": to_text(p), "divisor": to_text(d)},
            )
        qh, qk, qc = rh - dh, rk - dk, rc / dc
        quotient[(qh, qk)] = quotient.get((qh, qk), 0) + qc
        for (h, k), c in divisor_terms:
            key = (h + qh, k + qk)
            value = remainder.get(key, 0) - qc * c
            if value:
                remainder[key] = value
            else:
                remainder.pop(key, None)
    return BiPoly._from_clean({key: value for key, value in quotient.items() if value})


def partial(p, axis, order=1):
    return BiPoly.coerce(p).partial(axis, order)


def coefficient_vector(p, n):
    """Coefficients of `p` over `monomials_up_to(n)`; raises `ValueError` if `deg p > n`."""
    p = BiPoly.coerce(p)
    if p.total_degree > n:
        raise ValueError(f"Polynomial of degree {p.total_degree} does not fit in P_{n}.")
    vector = [Fraction(0)] * basis_size(n)
    for (h, k), value in p._terms.items():
        vector[monomial_index(h, k)] = value
    return vector


def from_coefficient_vector(vector, n):
    return BiPoly(
        {monomial: value for monomial, value in zip(monomials_up_to(n), vector) if value}
    )


def format_rational(value):
    value = as_rational(value)
    return f"{value.numerator}/{value.denominator}"


def _monomial_text(h, k, power="^", separator="*"):
    factors = []
    for name, exponent in (("x", h), ("y", k)):
        if exponent == 1:
            factors.append(name)
        elif exponent > 1:
            factors.append(f"{name}{power}{exponent}")
    return separator.join(factors)


def to_text(p):
    """Plain-text rendering, e.g. `-3*x^2*y + 18*y^2 + 6*x`."""
    if p.is_zero():
        return "0"
    pieces = []
    for index, ((h, k), value) in enumerate(p.items()):
        sign = "-" if value < 0 else "+"
        magnitude = abs(value)
        monomial = _monomial_text(h, k)
        if not monomial:
            body = str(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{magnitude}*{monomial}"
        if index == 0:
            pieces.append(f"-{body}" if sign == "-" else body)
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


def to_latex(p):
    """LaTeX rendering in descending graded-lex order, e.g. `-x^{3} + 18 x y - 12`."""
    if p.is_zero():
        return "0"
    pieces = []
    for index, ((h, k), value) in enumerate(p.items()):
        sign = "-" if value < 0 else "+"
        magnitude = abs(value)
        factors = []
        for name, exponent in (("x", h), ("y", k)):
            if exponent == 1:
                factors.append(name)
            elif exponent > 1:
                factors.append(f"{name}^{{{exponent}}}")
        monomial = " ".join(factors)
        if magnitude.denominator == 1:
            number = str(magnitude.numerator)
        else:
            number = f"\\frac{{{magnitude.numerator}}}{{{magnitude.denominator}}}"
        if not monomial:
            body = number
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{number} {monomial}"
        if index == 0:
            pieces.append(f"-{body}" if sign == "-" else body)
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


X = BiPoly.x()
Y = BiPoly.y()
ONE = BiPoly.constant(1)

from polycore.exceptions import DimensionError, ShapeError
from polycore.polynomial import DEGREE_OF_ZERO, BiPoly


class PolyMatrix:
    """
    Rectangular, immutable matrix of `BiPoly` entries stored row-major.

    Attributes:
    - `rows` (int): Number of rows (positive).
    - `cols` (int): Number of columns (positive).

    Methods:
    - `degree`: Maximum total degree over the entries, `DEGREE_OF_ZERO` for the zero matrix.
    - `@`: Matrix product; inner dimensions must agree.
    - `partial(axis, order)`: Entrywise iterated partial derivative.
    - `row_block(index, height)`: The `index`-th block of `height` consecutive rows.

    Usage:
        ```
        phi = PolyMatrix([[3 * Y, 1], [1, 0]])
        phi.degree            # 1
        (phi @ phi).entry(0, 0)
        ```
    """

    __slots__ = ("rows", "cols", "_entries", "_hash")

    def __init__(self, entries):
        rows = [tuple(BiPoly.coerce(value) for value in row) for row in entries]
        if not rows or not rows[0]:
            raise ShapeError("A polynomial matrix needs at least one row and one column.")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ShapeError("All rows of a polynomial matrix must have the same length.")
        self.rows = len(rows)
        self.cols = width
        self._entries = tuple(rows)
        self._hash = None

    def __reduce__(self):
        return (PolyMatrix, ([list(row) for row in self._entries],))

    # constructors

    @classmethod
    def identity(cls, size):
        return cls([[1 if i == j else 0 for j in range(size)] for i in range(size)])

    @classmethod
    def column(cls, values):
        return cls([[value] for value in values])

    @classmethod
    def row(cls, values):
        return cls([list(values)])

    @classmethod
    def stack(cls, blocks):
        """Vertical concatenation of equally wide blocks."""
        blocks = list(blocks)
        if not blocks:
            raise ShapeError("Cannot stack an empty list of blocks.")
        width = blocks[0].cols
        if any(block.cols != width for block in blocks):
            raise ShapeError("Stacked blocks must share their column count.")
        return cls([list(row) for block in blocks for row in block._entries])

    # inspection

    @property
    def shape(self):
        return (self.rows, self.cols)

    def entry(self, i, j):
        return self._entries[i][j]

    def __getitem__(self, index):
        i, j = index
        return self._entries[i][j]

    def row_entries(self, i):
        return self._entries[i]

    def column_entries(self, j):
        return tuple(row[j] for row in self._entries)

    def entries(self):
        return [list(row) for row in self._entries]

    def flat(self):
        return [value for row in self._entries for value in row]

    @property
    def degree(self):
        degrees = [value.total_degree for value in self.flat() if not value.is_zero()]
        return max(degrees) if degrees else DEGREE_OF_ZERO

    def is_zero(self):
        return all(value.is_zero() for value in self.flat())

    def is_square(self):
        return self.rows == self.cols

    def is_symmetric(self):
        return self.is_square() and all(
            self._entries[i][j] == self._entries[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def is_diagonal(self):
        return self.is_square() and all(
            self._entries[i][j].is_zero()
            for i in range(self.rows)
            for j in range(self.cols)
            if i != j
        )

    def is_constant(self):
        return all(value.is_constant() for value in self.flat())

    def to_rationals(self):
        if not self.is_constant():
            raise ValueError("Only constant matrices convert to rational matrices.")
        return [[value.constant_value() for value in row] for row in self._entries]

    def row_block(self, index, height):
        start = index * height
        return PolyMatrix([list(row) for row in self._entries[start : start + height]])

    def split_rows(self, count):
        """Splits into `count` blocks of equal height; raises `ShapeError` otherwise."""
        if count <= 0 or self.rows % count:
            raise ShapeError(
                f"{self.rows} rows cannot be split into {count} equal blocks.",
                details={"rows": self.rows, "blocks": count},
            )
        height = self.rows // count
        return [self.row_block(index, height) for index in range(count)]

    # arithmetic

    def map(self, function):
        return PolyMatrix([[function(value) for value in row] for row in self._entries])

    def transpose(self):
        return PolyMatrix([list(column) for column in zip(*self._entries)])

    @property
    def T(self):
        return self.transpose()

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionError(
                f"Shapes {self.shape} and {other.shape} do not match.",
                details={"left": self.shape, "right": other.shape},
            )

    def __add__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        self._check_same_shape(other)
        return PolyMatrix(
            [
                [a + b for a, b in zip(left, right)]
                for left, right in zip(self._entries, other._entries)
            ]
        )

    def __sub__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        self._check_same_shape(other)
        return PolyMatrix(
            [
                [a - b for a, b in zip(left, right)]
                for left, right in zip(self._entries, other._entries)
            ]
        )

    def __neg__(self):
        return self.map(lambda value: -value)

    def scale(self, factor):
        factor = BiPoly.coerce(factor)
        return self.map(lambda value: value * factor)

    def __mul__(self, other):
        if isinstance(other, PolyMatrix):
            return NotImplemented
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(
                f"Cannot multiply {self.shape} by {other.shape}.",
                details={"left": self.shape, "right": other.shape},
            )
        columns = [other.column_entries(j) for j in range(other.cols)]
        result = []
        for row in self._entries:
            result.append(
                [
                    sum((a * b for a, b in zip(row, column) if a and b), BiPoly.zero())
                    for column in columns
                ]
            )
        return PolyMatrix(result)

    def partial(self, axis, order=1):
        return self.map(lambda value: value.partial(axis, order))

    def evaluate(self, x, y):
        return [[value.evaluate(x, y) for value in row] for row in self._entries]

    # protocol

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._entries)
        return self._hash

    def __repr__(self):
        body = "; ".join(", ".join(str(value) for value in row) for row in self._entries)
        return f"PolyMatrix([{body}])"


def monomial_vector(m):
    """
    The column vector `X_m = (x^(m-i) y^i), i = 0..m`.

    Args:
    - `m`: Nonnegative degree.

    Returns:
    - A `(m + 1) x 1` `PolyMatrix`.
    """
    if m < 0:
        raise ValueError("The monomial vector needs a nonnegative degree.")
    return PolyMatrix.column([BiPoly.monomial(m - i, i) for i in range(m + 1)])

"""Message preprocessing, the square code matrix, and its 2x2 blocking.

A message becomes a string of alphabet symbols (spaces turn into '0', the
tail is padded with '0'), the string fills an even-sided square matrix
row-major, and the matrix splits into 2x2 blocks numbered left to right,
top to bottom.  The number of blocks b fixes the key index n.
"""

import math
from dataclasses import dataclass
from enum import Enum

from .alphabet import Alphabet, CharTable
from .errors import BadLength, EmptyMessage, UnknownSymbol

PAD_SYMBOL = "0"


class NRule(Enum):
    """How the key index n is derived from the block count b."""

    HALF = "half"  # n = b if b <= 3 else b // 2
    TAS = "tas"    # n = 3 if b <= 3 else b


@dataclass(frozen=True)
class MessageMatrix:
    """Square grid of codes with even side, stored as row tuples."""

    dim: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.dim < 2 or self.dim % 2:
            raise BadLength(f"matrix dimension must be even and >= 2, got {self.dim}")
        if len(self.cells) != self.dim or any(len(row) != self.dim for row in self.cells):
            raise BadLength(f"cell grid does not match dimension {self.dim}")

    @property
    def block_count(self) -> int:
        return (self.dim // 2) ** 2


@dataclass(frozen=True)
class Block:
    """One 2x2 submatrix, row-major b1 b2 / b3 b4, with its 1-based index."""

    index: int
    b1: int
    b2: int
    b3: int
    b4: int

    def determinant(self) -> int:
        return self.b1 * self.b4 - self.b2 * self.b3


def square_side(length: int) -> int:
    """Smallest even side whose square holds `length` symbols."""
    side = math.isqrt(length)
    if side * side < length:
        side += 1
    if side % 2:
        side += 1
    return max(side, 2)


def preprocess(text: str, alphabet: Alphabet) -> str:
    """Uppercase, turn each space into '0', pad with '0' to an even square.

    Every resulting symbol must be in the alphabet; anything else is an
    UnknownSymbol error rather than a silent skip.
    """
    if not text:
        raise EmptyMessage("message text is empty")
    substituted = text.upper().replace(" ", PAD_SYMBOL)
    side = square_side(len(substituted))
    padded = substituted + PAD_SYMBOL * (side * side - len(substituted))
    for pos, symbol in enumerate(padded):
        if symbol not in alphabet:
            raise UnknownSymbol(
                f"symbol {symbol!r} at position {pos} is not in alphabet {alphabet.id!r}"
            )
    return padded


def to_matrix(symbols: str, table: CharTable) -> MessageMatrix:
    """Fill the square grid row-major with the codes of `symbols`."""
    side = math.isqrt(len(symbols))
    if side * side != len(symbols) or side % 2 or side < 2:
        raise BadLength(f"symbol count {len(symbols)} is not an even perfect square")
    cells = tuple(
        tuple(table.code_of(s) for s in symbols[r * side : (r + 1) * side])
        for r in range(side)
    )
    return MessageMatrix(side, cells)


def to_symbols(matrix: MessageMatrix, table: CharTable) -> str:
    """Row-major symbol string of a code matrix (inverse of to_matrix)."""
    return "".join(table.symbol_of(c) for row in matrix.cells for c in row)


def to_blocks(matrix: MessageMatrix) -> list[Block]:
    """Split into 2x2 blocks, left to right within a row of blocks, rows top down."""
    m = matrix.dim // 2
    blocks = []
    for br in range(m):
        top, bottom = matrix.cells[2 * br], matrix.cells[2 * br + 1]
        for bc in range(m):
            blocks.append(
                Block(
                    index=br * m + bc + 1,
                    b1=top[2 * bc],
                    b2=top[2 * bc + 1],
                    b3=bottom[2 * bc],
                    b4=bottom[2 * bc + 1],
                )
            )
    return blocks


def reassemble(blocks: list[Block], dim: int) -> MessageMatrix:
    """Rebuild the matrix from its block sequence (inverse of to_blocks)."""
    if dim < 2 or dim % 2:
        raise BadLength(f"matrix dimension must be even and >= 2, got {dim}")
    m = dim // 2
    if len(blocks) != m * m:
        raise BadLength(f"expected {m * m} blocks for dimension {dim}, got {len(blocks)}")
    rows = [[0] * dim for _ in range(dim)]
    for pos, block in enumerate(blocks):
        br, bc = divmod(pos, m)
        rows[2 * br][2 * bc] = block.b1
        rows[2 * br][2 * bc + 1] = block.b2
        rows[2 * br + 1][2 * bc] = block.b3
        rows[2 * br + 1][2 * bc + 1] = block.b4
    return MessageMatrix(dim, tuple(tuple(r) for r in rows))


def choose_n(b: int, rule: NRule) -> int:
    """Key index for b blocks under the selected rule."""
    if b < 1:
        raise ValueError(f"block count must be >= 1, got {b}")
    if rule is NRule.HALF:
        return b if b <= 3 else b // 2
    return 3 if b <= 3 else b

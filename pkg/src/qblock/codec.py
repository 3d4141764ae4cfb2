"""The two block codecs: encode drops one element per 2x2 block, decode gets
it back from the block determinant and a Fibonacci/Lucas key matrix.

Per block B = [[b1, b2], [b3, b4]] the sender transmits the determinant
d = b1*b4 - b2*b3 plus three elements:

  LUCAS_BLOCKING   keeps (b1, b2, b4), drops b3; every block decodes
                   against r_matrix(n).
  MINESWEEPER      keeps (b1, b2, b3), drops b4; odd-indexed blocks decode
                   against q_power(n), even-indexed against r_matrix(n).

The receiver forms the helper products from the key K and the first two
kept elements,

    e1 = K11*b1 + K21*b2        e2 = K12*b1 + K22*b2

and solves the linear equation

    det(K) * d = e1*(K12*u + K22*v) - e2*(K11*u + K21*v)

where (u, v) is (x, b4) for LUCAS_BLOCKING and (b3, x) for MINESWEEPER.
The x coefficient collapses to det(K) times the pivot element (b2, resp.
b1, up to sign), so the equation has a unique solution exactly when the
pivot is nonzero; encoding refuses zero-pivot blocks up front.  Any
corruption that leaves no exact in-range solution is reported as tampering.
"""

import math
from dataclasses import dataclass
from enum import Enum

from . import numtheory
from .alphabet import CharTable, get_alphabet
from .errors import DegenerateBlock, HeaderMismatch, TamperDetected
from .layout import (
    Block,
    MessageMatrix,
    NRule,
    choose_n,
    preprocess,
    reassemble,
    to_blocks,
    to_matrix,
    to_symbols,
)
from .numtheory import KeyMatrix


class Scheme(Enum):
    LUCAS_BLOCKING = "lucas"
    MINESWEEPER = "mine"


@dataclass(frozen=True)
class FRow:
    """One transmitted row: block determinant plus the three kept codes."""

    d: int
    k1: int
    k2: int
    k3: int


@dataclass(frozen=True)
class CodedMessage:
    """The full payload: scheme/context header plus the rows in block order.

    The key index n is never carried; both sides derive it from the row
    count and the n-rule.
    """

    scheme: Scheme
    n_rule: NRule
    dim: int
    alphabet_id: str
    rows: tuple[FRow, ...]

    @property
    def n(self) -> int:
        return choose_n(len(self.rows), self.n_rule)


@dataclass(frozen=True)
class DecodeTrace:
    """Per-block decoding record: helper products, recovered code, key used."""

    index: int
    e1: int
    e2: int
    x: int
    key: KeyMatrix


def _key_for(scheme: Scheme, n: int, index: int) -> KeyMatrix:
    if scheme is Scheme.LUCAS_BLOCKING:
        return numtheory.r_matrix(n)
    return numtheory.q_power(n) if index % 2 else numtheory.r_matrix(n)


def _pivot(scheme: Scheme, block: Block) -> int:
    return block.b2 if scheme is Scheme.LUCAS_BLOCKING else block.b1


def encode(
    matrix: MessageMatrix,
    scheme: Scheme,
    n_rule: NRule = NRule.HALF,
    alphabet_id: str = "default",
) -> CodedMessage:
    """Turn a code matrix into the transmitted rows.

    Raises DegenerateBlock listing every block whose pivot is zero: for
    those the determinant carries no information about the dropped element,
    so the message cannot be encoded under this scheme.
    """
    blocks = to_blocks(matrix)
    degenerate = [b.index for b in blocks if _pivot(scheme, b) == 0]
    if degenerate:
        raise DegenerateBlock(degenerate)
    if scheme is Scheme.LUCAS_BLOCKING:
        rows = tuple(FRow(b.determinant(), b.b1, b.b2, b.b4) for b in blocks)
    else:
        rows = tuple(FRow(b.determinant(), b.b1, b.b2, b.b3) for b in blocks)
    return CodedMessage(scheme, n_rule, matrix.dim, alphabet_id, rows)


def _solve(key: KeyMatrix, row: FRow, missing_first: bool, size: int) -> tuple[int, int, int]:
    """Solve the decode equation for one row; returns (x, e1, e2).

    `missing_first` says whether the unknown sits in the first slot of the
    bracketed pairs (LUCAS_BLOCKING recovers b3) or the second (MINESWEEPER
    recovers b4).
    """
    det = numtheory.key_determinant(key.family, key.n)
    e1 = key.m11 * row.k1 + key.m21 * row.k2
    e2 = key.m12 * row.k1 + key.m22 * row.k2
    target = det * row.d
    if missing_first:
        coeff = e1 * key.m12 - e2 * key.m11
        constant = (e1 * key.m22 - e2 * key.m21) * row.k3
        assert coeff == -row.k2 * det
    else:
        coeff = e1 * key.m22 - e2 * key.m21
        constant = (e1 * key.m12 - e2 * key.m11) * row.k3
        assert coeff == row.k1 * det
    if coeff == 0:
        # pivot zero: the equation is constant in x, nothing recoverable
        raise TamperDetected(f"zero pivot, dropped element unrecoverable (d={row.d})")
    quotient, remainder = divmod(target - constant, coeff)
    if remainder != 0:
        raise TamperDetected(f"no exact solution for dropped element (d={row.d})")
    if not 0 <= quotient < size:
        raise TamperDetected(f"recovered code {quotient} outside [0, {size})")
    return quotient, e1, e2


def solve_missing_lucas(row: FRow, n: int, size: int = 30) -> int:
    """Recover b3 of a LUCAS_BLOCKING row from (d, b1, b2, b4) and the key index."""
    x, _, _ = _solve(numtheory.r_matrix(n), row, missing_first=True, size=size)
    # same answer as the direct determinant identity b3 = (b1*b4 - d) / b2
    assert x == (row.k1 * row.k3 - row.d) // row.k2
    return x


def solve_missing_mine(row: FRow, n: int, block_index: int, size: int = 30) -> int:
    """Recover b4 of a MINESWEEPER row; the block index picks the key family."""
    key = _key_for(Scheme.MINESWEEPER, n, block_index)
    x, _, _ = _solve(key, row, missing_first=False, size=size)
    assert x == (row.d + row.k2 * row.k3) // row.k1
    return x


def _resolve_table(coded: CodedMessage, table: CharTable | None) -> CharTable:
    n = coded.n
    if table is None:
        return CharTable(get_alphabet(coded.alphabet_id), n)
    if table.alphabet.id != coded.alphabet_id:
        raise HeaderMismatch(
            f"payload uses alphabet {coded.alphabet_id!r}, table has {table.alphabet.id!r}"
        )
    if table.shift != n:
        raise HeaderMismatch(f"payload derives shift {n}, table has {table.shift}")
    return table


def decode_with_trace(
    coded: CodedMessage, table: CharTable | None = None
) -> tuple[MessageMatrix, tuple[DecodeTrace, ...]]:
    """Decode and also return the per-block solving record.

    When `table` is omitted it is derived from the header: the alphabet by
    registered id, the shift from the row count and n-rule.
    """
    if coded.dim < 2 or coded.dim % 2:
        raise HeaderMismatch(f"dimension must be even and >= 2, got {coded.dim}")
    expected = (coded.dim // 2) ** 2
    if len(coded.rows) != expected:
        raise HeaderMismatch(
            f"dimension {coded.dim} implies {expected} rows, payload has {len(coded.rows)}"
        )
    table = _resolve_table(coded, table)
    size = table.alphabet.size
    n = coded.n
    missing_first = coded.scheme is Scheme.LUCAS_BLOCKING

    blocks: list[Block] = []
    traces: list[DecodeTrace] = []
    for index, row in enumerate(coded.rows, start=1):
        for kept in (row.k1, row.k2, row.k3):
            if not 0 <= kept < size:
                raise TamperDetected(
                    f"block {index}: kept code {kept} outside [0, {size})", block_index=index
                )
        key = _key_for(coded.scheme, n, index)
        try:
            x, e1, e2 = _solve(key, row, missing_first=missing_first, size=size)
        except TamperDetected as exc:
            raise TamperDetected(f"block {index}: {exc}", block_index=index) from None
        if missing_first:
            block = Block(index, row.k1, row.k2, x, row.k3)
        else:
            block = Block(index, row.k1, row.k2, row.k3, x)
        if block.determinant() != row.d:
            raise TamperDetected(
                f"block {index}: rebuilt determinant {block.determinant()} != {row.d}",
                block_index=index,
            )
        blocks.append(block)
        traces.append(DecodeTrace(index, e1, e2, x, key))
    return reassemble(blocks, coded.dim), tuple(traces)


def decode(coded: CodedMessage, table: CharTable | None = None) -> MessageMatrix:
    """Recover the full code matrix from a payload; see decode_with_trace."""
    matrix, _ = decode_with_trace(coded, table)
    return matrix


def encode_text(
    text: str,
    scheme: Scheme,
    n_rule: NRule = NRule.HALF,
    alphabet_id: str = "default",
) -> CodedMessage:
    """Full sender pipeline: preprocess, derive the table, fill, encode."""
    alphabet = get_alphabet(alphabet_id)
    symbols = preprocess(text, alphabet)
    dim = math.isqrt(len(symbols))
    n = choose_n((dim // 2) ** 2, n_rule)
    matrix = to_matrix(symbols, CharTable(alphabet, n))
    return encode(matrix, scheme, n_rule, alphabet_id)


def decode_text(coded: CodedMessage) -> str:
    """Full receiver pipeline: decode and render the symbol string."""
    table = _resolve_table(coded, None)
    return to_symbols(decode(coded, table), table)

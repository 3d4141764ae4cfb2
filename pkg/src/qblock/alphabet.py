"""Shifted character tables: symbol <-> code bijections over a small alphabet.

The default alphabet has 30 symbols, A..Z then 0 ! ? .   A table with shift n
maps the k-th symbol to (n + k) mod size, so the whole mapping slides with the
key index and changes from message to message.

Alternative alphabets can be registered under an id; both endpoints must
register the same table up front (the id travels in the wire header, the
symbols do not).
"""

from dataclasses import dataclass, field

from .errors import CodeOutOfRange, UnknownAlphabet, UnknownSymbol

DEFAULT_ALPHABET_ID = "default"

_DEFAULT_SYMBOLS = tuple("ABCDEFGHIJKLMNOPQRSTUVWXYZ0!?.")


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of distinct symbols, identified by a short id."""

    id: str
    symbols: tuple[str, ...] = _DEFAULT_SYMBOLS

    def __post_init__(self):
        if not self.id or any(c in ";\n\r\t " for c in self.id):
            raise ValueError(f"alphabet id {self.id!r} must be non-empty, no ';' or whitespace")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("alphabet symbols must be pairwise distinct")
        if len(self.symbols) < 2:
            raise ValueError("alphabet needs at least two symbols")

    @property
    def size(self) -> int:
        return len(self.symbols)

    def __contains__(self, symbol: str) -> bool:
        return symbol in self.symbols


DEFAULT_ALPHABET = Alphabet(DEFAULT_ALPHABET_ID)

_registry: dict[str, Alphabet] = {DEFAULT_ALPHABET_ID: DEFAULT_ALPHABET}


def register_alphabet(alphabet: Alphabet) -> None:
    """Make an alphabet resolvable by id.  Re-registering the identical
    alphabet is a no-op; a different one under the same id is an error."""
    existing = _registry.get(alphabet.id)
    if existing is not None and existing != alphabet:
        raise ValueError(f"alphabet id {alphabet.id!r} already registered with different symbols")
    _registry[alphabet.id] = alphabet


def get_alphabet(alphabet_id: str) -> Alphabet:
    try:
        return _registry[alphabet_id]
    except KeyError:
        raise UnknownAlphabet(f"no alphabet registered under id {alphabet_id!r}") from None


@dataclass
class CharTable:
    """An alphabet together with its shift n: symbol k codes to (n + k) mod size."""

    alphabet: Alphabet
    shift: int
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.shift < 1:
            raise ValueError(f"shift must be >= 1, got {self.shift}")
        self._index = {s: k for k, s in enumerate(self.alphabet.symbols)}

    def code_of(self, symbol: str) -> int:
        try:
            k = self._index[symbol]
        except KeyError:
            raise UnknownSymbol(f"symbol {symbol!r} is not in alphabet {self.alphabet.id!r}") from None
        return (self.shift + k) % self.alphabet.size

    def symbol_of(self, code: int) -> str:
        if not 0 <= code < self.alphabet.size:
            raise CodeOutOfRange(f"code {code} outside [0, {self.alphabet.size})")
        return self.alphabet.symbols[(code - self.shift) % self.alphabet.size]

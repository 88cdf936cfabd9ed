"""
Words over the three flag reflections.

A word is a finite sequence of the letters a, b, c standing for the
reflections that move a flag across its vertex, edge or face. Every
letter is an involution, so inverting a word just reverses it.
"""
from dataclasses import dataclass
from enum import IntEnum


class Letter(IntEnum):
    """Reflection label: a changes the vertex, b the edge, c the face."""

    A = 0
    B = 1
    C = 2

    @property
    def symbol(self):
        return 'abc'[self]

    @classmethod
    def from_symbol(cls, symbol):
        return cls('abc'.index(symbol))


@dataclass(frozen=True)
class Word:
    """Immutable word; the empty word is the identity ε."""

    letters: tuple[Letter, ...] = ()

    @classmethod
    def from_labels(cls, labels):
        return cls(tuple(Letter(label) for label in labels))

    @classmethod
    def from_symbols(cls, symbols):
        """Build a word from flat letters such as 'abcb'; use `parse` for expressions."""
        return cls(tuple(Letter.from_symbol(symbol) for symbol in symbols))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.letters[index])
        return self.letters[index]

    def __add__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def __str__(self):
        return format_word(self)

    @property
    def is_empty(self):
        return not self.letters


EMPTY = Word()


def concat(*words):
    """Concatenate words left to right."""
    return Word(tuple(letter for word in words for letter in word.letters))


def inverse(word):
    return Word(word.letters[::-1])


def conjugate(g, w):
    """g conjugated by w, written g^w: inverse(w)·g·w."""
    return concat(inverse(w), g, w)


def power(word, exponent):
    """Concatenate `exponent` copies; a negative exponent repeats the inverse."""
    if exponent < 0:
        word, exponent = inverse(word), -exponent
    return Word(word.letters * exponent)


def free_reduce(word):
    """Cancel adjacent equal letters until none remain."""
    stack = []
    for letter in word.letters:
        if stack and stack[-1] == letter:
            stack.pop()
        else:
            stack.append(letter)
    return Word(tuple(stack))


def is_reduced(word):
    return all(x != y for x, y in zip(word.letters, word.letters[1:]))


def format_word(word):
    """Flat letters; the empty word formats as the empty string."""
    return ''.join(letter.symbol for letter in word.letters)


def shortest_period(word):
    """Smallest u with word = u^k; the word itself when it is not a proper power."""
    n = len(word)
    for size in range(1, n):
        if n % size == 0 and word.letters == word.letters[:size] * (n // size):
            return word[:size]
    return word


def format_compact(word):
    """Write a proper power as (u)^k, anything else flat; ε for the empty word."""
    if word.is_empty:
        return 'ε'
    period = shortest_period(word)
    if len(period) == len(word):
        return format_word(word)
    base = format_word(period) if len(period) == 1 else f'({format_word(period)})'
    return f'{base}^{len(word) // len(period)}'


def _as_base(word):
    text = format_compact(word)
    return text if len(word) == 1 else f'({text})'


def format_conjugate(g, w):
    """Expression for g^w = inverse(w)·g·w that `parse` reads back."""
    if w.is_empty:
        return format_compact(g)
    return f'{_as_base(g)}^{_as_base(w)}'

"""
Parser for word expressions.

    word    := factor*
    factor  := base ('^' base | '^' integer)*
    base    := 'a' | 'b' | 'c' | 'ε' | '(' word ')' | '{' word '}'
    integer := '-'? digit+

`x^w` conjugates x by w (inverse(w)·x·w) and `x^n` is the n-th power;
postfix operators apply left to right. Whitespace is ignored.
"""
from apps.core.exceptions import WordSyntaxError

from .words import EMPTY, Letter, Word, concat, conjugate, power

CLOSING = {'(': ')', '{': '}'}


class WordParser:
    """Recursive-descent parser over a single expression."""

    def __init__(self, text):
        self.text = text
        self.pos = 0

    def parse(self):
        word = self._word()
        self._skip()
        if self.pos < len(self.text):
            raise self._error(f'unexpected {self.text[self.pos]!r}')
        return word

    def _error(self, message):
        return WordSyntaxError(message, self.text, self.pos)

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self):
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ''

    def _word(self):
        factors = []
        while self._peek() and self._peek() not in ')}':
            factors.append(self._factor())
        return concat(*factors) if factors else EMPTY

    def _factor(self):
        word = self._base()
        while self._peek() == '^':
            self.pos += 1
            following = self._peek()
            if following == '-' or following.isdigit():
                word = power(word, self._integer())
            else:
                word = conjugate(word, self._base())
        return word

    def _base(self):
        char = self._peek()
        if char in ('a', 'b', 'c'):
            self.pos += 1
            return Word((Letter.from_symbol(char),))
        if char == 'ε':
            self.pos += 1
            return EMPTY
        if char in CLOSING:
            self.pos += 1
            inner = self._word()
            if self._peek() != CLOSING[char]:
                raise self._error(f'expected {CLOSING[char]!r}')
            self.pos += 1
            return inner
        if not char:
            raise self._error('unexpected end of expression')
        raise self._error(f'unexpected {char!r}, expected a letter or a bracket')

    def _integer(self):
        start = self.pos
        if self.text[self.pos] == '-':
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise self._error('expected digits after sign')
        return int(self.text[start:self.pos])


def parse(text):
    """Parse a word expression; raises WordSyntaxError with the failing position."""
    return WordParser(text).parse()

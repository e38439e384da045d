"""Free-group words and the free word/conjugacy problems.

A word is a flat sequence of signed letters ``(name, exp)`` with
``exp in (+1, -1)``; generators are plain identifier strings.  Words are
immutable and hashable.  The empty word is the identity and prints as "1".

Text syntax: letters are whitespace-separated, inverses are written
``name^-1``, powers ``name^k`` (k a nonzero integer) expand to repeated
letters, and parenthesized subwords may carry powers, e.g. ``(s1 s2)^2``.
Printing compresses runs of equal letters back to powers, so
``parse(str(w)) == w`` exactly.
"""

import re

GENERATOR_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


class WordSyntaxError(ValueError):
    """Raised on malformed word or presentation text, with position info."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = "%s (line %d, column %d)" % (message, line, column)
        super().__init__(message)


def valid_generator_name(name):
    return bool(GENERATOR_NAME.fullmatch(name))


class Word:
    """An element of a free group, as a flat tuple of signed letters."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        letters = tuple(letters)
        for item in letters:
            name, exp = item
            if exp not in (1, -1):
                raise ValueError("letter exponent must be +1 or -1: %r" % (item,))
            if not valid_generator_name(name):
                raise ValueError("invalid generator name: %r" % (name,))
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def parse(cls, text):
        """Parse word text; see the module docstring for the grammar."""
        tokens = tokenize(text)
        letters, pos = _parse_word(tokens, 0)
        if pos != len(tokens) - 1:  # everything but END must be consumed
            tok = tokens[pos]
            raise WordSyntaxError("unexpected %r" % (tok.text,), tok.line, tok.column)
        return cls(letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word(self.letters[i])
        return self.letters[i]

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __mul__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def __pow__(self, n):
        if n == 0:
            return Word()
        base = self if n > 0 else self.inverse()
        return Word(base.letters * abs(n))

    def inverse(self):
        return Word((name, -exp) for name, exp in reversed(self.letters))

    def generators(self):
        """Set of generator names appearing in the word."""
        return {name for name, _ in self.letters}

    def exponent_sum(self, name):
        return sum(exp for g, exp in self.letters if g == name)

    def is_reduced(self):
        return all(
            self.letters[i][0] != self.letters[i + 1][0]
            or self.letters[i][1] != -self.letters[i + 1][1]
            for i in range(len(self.letters) - 1)
        )

    def is_cyclically_reduced(self):
        if not self.is_reduced():
            return False
        if len(self.letters) < 2:
            return True
        first, last = self.letters[0], self.letters[-1]
        return first[0] != last[0] or first[1] != -last[1]

    def __str__(self):
        if not self.letters:
            return "1"
        parts = []
        i = 0
        while i < len(self.letters):
            name, exp = self.letters[i]
            j = i
            while j < len(self.letters) and self.letters[j] == (name, exp):
                j += 1
            k = (j - i) * exp
            parts.append(name if k == 1 else "%s^%d" % (name, k))
            i = j
        return " ".join(parts)

    def __repr__(self):
        return "Word(%r)" % (str(self),)


def free_reduce(w):
    """Delete adjacent cancelling pairs until none remain (single stack pass).

    The result is independent of deletion order, so the stack pass is
    canonical.
    """
    stack = []
    for name, exp in w.letters:
        if stack and stack[-1][0] == name and stack[-1][1] == -exp:
            stack.pop()
        else:
            stack.append((name, exp))
    return Word(stack)


def free_wp(w):
    """Free-group word problem: reduce, then check for the empty word.

    Step by step: (i) stop on short words, (ii) delete a cancelling pair and
    start over, (iii) report whether the remaining word is empty.
    """
    while len(w) >= 2:
        reduced = _delete_one_pair(w)
        if reduced is None:
            break
        w = reduced
    return len(w) == 0


def _delete_one_pair(w):
    letters = w.letters
    for i in range(len(letters) - 1):
        if letters[i][0] == letters[i + 1][0] and letters[i][1] == -letters[i + 1][1]:
            return Word(letters[:i] + letters[i + 2:])
    return None


def invert(w):
    return w.inverse()


def cyclic_reduce(w):
    """Return (core, conjugator) with core cyclically reduced and
    w = conjugator * core * conjugator^-1 in the free group."""
    core = free_reduce(w)
    prefix = []
    while len(core) >= 2:
        first, last = core.letters[0], core.letters[-1]
        if first[0] == last[0] and first[1] == -last[1]:
            prefix.append(first)
            core = Word(core.letters[1:-1])
        else:
            break
    return core, Word(prefix)


def cyclic_permutations(w):
    """All rotations of a cyclically reduced word, as a set."""
    if not w.is_cyclically_reduced():
        raise ValueError("word is not cyclically reduced: %s" % (w,))
    letters = w.letters
    return {Word(letters[i:] + letters[:i]) for i in range(max(len(letters), 1))}


def conjugate_free(u, v):
    """Free-group conjugacy: cyclic reductions must be rotations of each other."""
    cu, _ = cyclic_reduce(u)
    cv, _ = cyclic_reduce(v)
    if len(cu) != len(cv):
        return False
    if len(cu) == 0:
        return True
    return cv in cyclic_permutations(cu)


# ---------------------------------------------------------------------------
# Tokenizer and word-expression parser, shared with the presentation grammar.

class Token:
    __slots__ = ("kind", "text", "line", "column")

    def __init__(self, kind, text, line, column):
        self.kind = kind
        self.text = text
        self.line = line
        self.column = column

    def __repr__(self):
        return "Token(%s, %r)" % (self.kind, self.text)


_PUNCT = {"<": "LT", ">": "GT", "|": "BAR", ",": "COMMA", "=": "EQ",
          "(": "LPAREN", ")": "RPAREN", "^": "CARET"}


def tokenize(text):
    """Tokens: NAME, INT, punctuation, END.  Comments run from '#' to end of
    line; whitespace is insignificant except inside names."""
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch in _PUNCT:
            tokens.append(Token(_PUNCT[ch], ch, line, col))
            i += 1
            col += 1
            continue
        m = GENERATOR_NAME.match(text, i)
        if m:
            tokens.append(Token("NAME", m.group(), line, col))
            col += m.end() - i
            i = m.end()
            continue
        m = re.compile(r"-?\d+").match(text, i)
        if m:
            tokens.append(Token("INT", m.group(), line, col))
            col += m.end() - i
            i = m.end()
            continue
        raise WordSyntaxError("unexpected character %r" % (ch,), line, col)
    tokens.append(Token("END", "", line, col))
    return tokens


_WORD_STARTERS = ("NAME", "LPAREN")


def _parse_word(tokens, pos):
    """word := factor*; returns (letters, next_pos).  Accepts the bare token
    1 (INT) as the identity, matching how empty words print."""
    letters = []
    while True:
        tok = tokens[pos]
        if tok.kind == "NAME":
            atom = ((tok.text, 1),)
            pos += 1
        elif tok.kind == "LPAREN":
            atom, pos = _parse_word(tokens, pos + 1)
            close = tokens[pos]
            if close.kind != "RPAREN":
                raise WordSyntaxError("expected ')'", close.line, close.column)
            atom = tuple(atom)
            pos += 1
        elif tok.kind == "INT" and tok.text == "1":
            atom = ()
            pos += 1
        else:
            break
        if tokens[pos].kind == "CARET":
            exp_tok = tokens[pos + 1]
            if exp_tok.kind != "INT":
                raise WordSyntaxError("expected integer exponent after '^'",
                                      exp_tok.line, exp_tok.column)
            k = int(exp_tok.text)
            if k == 0:
                raise WordSyntaxError("power must be a nonzero integer",
                                      exp_tok.line, exp_tok.column)
            pos += 2
            if k < 0:
                atom = tuple((name, -exp) for name, exp in reversed(atom))
                k = -k
            atom = atom * k
        letters.extend(atom)
    return letters, pos


def parse_word(text):
    return Word.parse(text)

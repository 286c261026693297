import re

from ..models.parse import Token, TokenStream
from ..utils.errors import InvalidCharacter

_TOKEN_RE = re.compile(r"[^\s.,?!]+|[.,?!]")
_FORBIDDEN_RE = re.compile(r"[<>]")


def tokenize(text: str) -> TokenStream:
    """
    Split raw text into word and punctuation tokens.

    Words are maximal runs without whitespace or ". , ? !"; each punctuation
    mark is a token of its own. Contractions ("don't") stay whole.

    Raises:
        InvalidCharacter: the text contains '<' or '>'
    """
    bad = _FORBIDDEN_RE.search(text)
    if bad:
        raise InvalidCharacter(bad.start(), bad.group())
    tokens = tuple(Token(m.group(), m.start(), m.end()) for m in _TOKEN_RE.finditer(text))
    return TokenStream(tokens, text)

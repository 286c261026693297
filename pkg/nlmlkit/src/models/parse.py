import re
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple

from ..core.nlml import serialize
from .nlml import NlmlDocument


class Mood(str, Enum):
    """Expression categories; values are the NLML spellings"""
    STATEMENT = "statement"
    QUESTION = "question"
    ORDER = "order"
    FULL_EXCLAMATION = "full exclamation"
    NP = "np"
    ADJ = "adj"
    ABOUT = "about"
    CIRCUMSTANCES = "circumstances"
    WHAT_TERSE_EXCLAMATION = "what terse exclamation"
    HOW_TERSE_EXCLAMATION = "how terse exclamation"
    SUBCIRCUM = "subcircum"

    @property
    def is_sentence(self) -> bool:
        return self in SENTENCE_MOODS


SENTENCE_MOODS = frozenset({
    Mood.STATEMENT, Mood.QUESTION, Mood.ORDER, Mood.FULL_EXCLAMATION, Mood.SUBCIRCUM,
})


class Complexity(str, Enum):
    SIMPLE = "simple"
    COMPLEX = "complex"
    COMPOUND = "compound"
    COMPOUND_COMPLEX = "compound complex"


class Voice(str, Enum):
    ACTIVE = "active"
    PASSIVE = "passive"


PUNCTUATION = (".", "?", "!", ",")


@dataclass(frozen=True)
class Token:
    """One input token with its character span"""
    text: str
    start: int
    end: int

    @property
    def folded(self) -> str:
        return self.text.casefold()

    @property
    def word(self) -> str:
        """Form emitted into NLML: case-folded, except the pronoun I"""
        return "I" if self.folded == "i" else self.folded

    @property
    def is_punctuation(self) -> bool:
        return self.text in PUNCTUATION


@dataclass(frozen=True)
class TokenStream:
    tokens: Tuple[Token, ...]
    source: str = ""

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def words(self) -> List[str]:
        return [t.text for t in self.tokens]

    def joined(self) -> str:
        """Token texts joined by single spaces"""
        return " ".join(t.text for t in self.tokens)

    def normalized(self) -> str:
        """joined() with the space before punctuation removed"""
        return re.sub(r" ([.,?!])", r"\1", self.joined())


@dataclass(frozen=True)
class ParseResult:
    """One ranked analysis"""
    document: NlmlDocument
    penalty: int = 0
    probability: float = 1.0
    rule: int = 0
    cost: int = 0

    @property
    def mood(self) -> str:
        return self.document.mood or ""

    def to_dict(self) -> Dict:
        return {
            "nlml": serialize(self.document),
            "mood": self.mood,
            "penalty": self.penalty,
            "probability": self.probability,
            "rule": self.rule,
        }

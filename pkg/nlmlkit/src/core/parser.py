"""
Plumbing shared by the grammar rules: fragments, fillers, memoization and
token access.

Every rule method takes a token index (plus hashable parameters) and returns
the list of all fragments starting there. Results are memoized per
(rule, index, parameters), packrat style, so each rule runs at most once
per position for one parse.
"""
import functools
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

from ..models.lexicon import AffixValue, Category, LexEntry
from ..models.nlml import Element, el
from ..models.parse import TokenStream
from .lexicon import Lexicon
from .nlml import TENSE_TAGS

logger = logging.getLogger(__name__)

Nodes = Tuple[Element, ...]

_IN_PROGRESS: List = []


@dataclass(frozen=True)
class Frag:
    """One way of covering the tokens from a rule's start index up to ``end``"""
    end: int
    nodes: Nodes = ()
    prob: float = 1.0
    affixes: AffixValue = field(default_factory=AffixValue)
    gap: bool = False
    open_right: bool = False
    cost: int = 0
    marks: FrozenSet[str] = frozenset()


@dataclass(frozen=True)
class Filler:
    """
    A fronted constituent waiting for its slot in the clause.

    kind is "np", "adj" or "adv". An np filler without nodes is the bare gap
    of a relative clause without relative pronoun; its slot is emitted empty.
    """
    kind: str
    nodes: Nodes = ()


@dataclass(frozen=True)
class Aux:
    """A finite auxiliary, with a merged "not" when one follows it"""
    entry: LexEntry
    word: str
    end: int
    prob: float = 1.0

    @property
    def kind(self) -> str:
        if self.entry.category == Category.MODAL:
            return "modal"
        if self.entry.category == Category.BE:
            return "be"
        return self.entry.lemma.casefold()  # "do" or "have"

    @property
    def negated(self) -> bool:
        return self.entry.negative or self.word.endswith(" not")

    @property
    def tense(self) -> str:
        if self.kind == "modal":
            return "modal"
        tenses = self.entry.affixes.tense
        return "past" if "past" in tenses and "present" not in tenses else "present"


def memo(method):
    """Cache a rule's result list per (rule, arguments); re-entry yields nothing"""
    name = method.__name__

    @functools.wraps(method)
    def wrapper(self, *args):
        key = (name,) + args
        cached = self._memo.get(key)
        if cached is _IN_PROGRESS:
            return []
        if cached is not None:
            return cached
        self._memo[key] = _IN_PROGRESS
        result = method(self, *args)
        self._memo[key] = result
        return result

    return wrapper


def affix_nodes(affixes: AffixValue, with_case: bool = True) -> Nodes:
    nodes = [el("numb", affixes.serialize("number")), el("pers", affixes.serialize("person"))]
    if with_case:
        nodes.append(el("case", affixes.serialize("case")))
    return tuple(nodes)


def circum(kind: str, *content: Element) -> Element:
    return el("circum", el("circum_type", kind), *content)


def tense_tag(tense: str) -> Element:
    return el("tense", TENSE_TAGS[tense])


class ParserBase:
    """Token access and bookkeeping for one parse"""

    def __init__(self, tokens: TokenStream, lexicon: Lexicon):
        self.tokens = tokens
        self.lexicon = lexicon
        self.words: List[str] = [t.folded for t in tokens.tokens]
        self.n = len(self.words)
        self.furthest = 0
        self._memo: Dict[tuple, List] = {}

    def touch(self, end: int) -> None:
        if end > self.furthest:
            self.furthest = end

    def word(self, i: int) -> Optional[str]:
        return self.words[i] if i < self.n else None

    def is_word(self, i: int, *options: str) -> bool:
        """Literal terminal test"""
        if i < self.n and self.words[i] in options:
            self.touch(i + 1)
            return True
        return False

    def entries(self, i: int, *categories: Category) -> List[Tuple[LexEntry, int]]:
        """Lexicon entries of the given categories starting at token i"""
        if i >= self.n:
            return []
        found = [
            (entry, span)
            for entry, span in self.lexicon.lookup_at(self.words, i)
            if not categories or entry.category in categories
        ]
        for _, span in found:
            self.touch(i + span)
        return found

    def emitted(self, i: int, span: int = 1) -> str:
        """NLML text of tokens i..i+span: case-folded, the pronoun I kept upper case"""
        return " ".join(t.word for t in self.tokens.tokens[i:i + span])

    def punctuation_end(self, i: int, marks: Tuple[str, ...]) -> bool:
        """True when the input ends at i, or at i + 1 with one of the marks"""
        if i == self.n:
            return True
        return i + 1 == self.n and self.is_word(i, *marks)

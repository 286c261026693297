from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..core.nlml import serialize_element
from .nlml import Element
from .parse import Complexity, Mood, Voice


@dataclass(frozen=True)
class NounPart:
    """One conjunct of a noun phrase: exactly one kernel with its modifiers"""
    kernel: str
    kernel_type: Optional[str] = None  # absent for the virtual subject "there"
    pre_modifiers: Tuple[Element, ...] = ()  # det and adj elements
    post_modifiers: Tuple[Element, ...] = ()  # prep_phrase and relative_clause elements
    number: Optional[str] = None
    person: Optional[str] = None
    case: Optional[str] = None

    def to_dict(self) -> Dict:
        return {
            "kernel": self.kernel,
            "kernel_type": self.kernel_type,
            "pre_modifiers": [serialize_element(e) for e in self.pre_modifiers],
            "post_modifiers": [serialize_element(e) for e in self.post_modifiers],
            "number": self.number,
            "person": self.person,
            "case": self.case,
        }


@dataclass(frozen=True)
class NounPhraseModel:
    """
    Subject noun phrase. A noun clause subject keeps its element in
    ``clause`` and has no parts.
    """
    parts: Tuple[NounPart, ...] = ()
    connectors: Tuple[str, ...] = ()
    number: Optional[str] = None
    person: Optional[str] = None
    case: Optional[str] = None
    clause: Optional[Element] = None

    @property
    def kernel(self) -> Optional[str]:
        return self.parts[0].kernel if self.parts else None

    def to_dict(self) -> Dict:
        return {
            "parts": [p.to_dict() for p in self.parts],
            "connectors": list(self.connectors),
            "number": self.number,
            "person": self.person,
            "case": self.case,
            "clause": serialize_element(self.clause) if self.clause is not None else None,
        }


@dataclass(frozen=True)
class VerbPhraseModel:
    """One verb phrase without conjunctions"""
    verb_type: str
    tense: str  # NLML spelling, e.g. "present progressive"
    words: Tuple[str, ...]
    lemma: str = ""
    voice: Voice = Voice.ACTIVE
    number: Optional[str] = None
    person: Optional[str] = None
    kernel_tense: Optional[str] = None
    mid: Optional[Element] = None
    mid_index: int = 0
    circum_slot: bool = False  # empty <circum> right after the verb words
    attachments: Tuple[Element, ...] = ()
    circumstances: Tuple[Element, ...] = ()

    @property
    def negated(self) -> bool:
        return any(w == "not" or w.endswith(" not") or w.endswith("n't") for w in self.words)

    @property
    def kernel_word(self) -> str:
        return self.words[-1].split(" ")[-1]

    def _attachment(self, tag: str) -> Optional[Element]:
        for element in self.attachments:
            if element.tag == tag:
                return element
        return None

    @property
    def direct_object(self) -> Optional[Element]:
        return self._attachment("direct_object")

    @property
    def indirect_object(self) -> Optional[Element]:
        return self._attachment("indirect_object")

    @property
    def predicate(self) -> Optional[Element]:
        return self._attachment("predicate")

    @property
    def particles(self) -> List[str]:
        return [e.text for e in self.attachments if e.tag == "particle"]

    def to_dict(self) -> Dict:
        return {
            "verb_type": self.verb_type,
            "tense": self.tense,
            "words": list(self.words),
            "lemma": self.lemma,
            "voice": self.voice.value,
            "negated": self.negated,
            "number": self.number,
            "person": self.person,
            "kernel_tense": self.kernel_tense,
            "attachments": [serialize_element(e) for e in self.attachments],
            "circumstances": [serialize_element(e) for e in self.circumstances],
        }


@dataclass(frozen=True)
class SimpleSentenceModel:
    """Subject (absent for orders) and one or more coordinated verb phrases"""
    verb_phrases: Tuple[VerbPhraseModel, ...]
    subject: Optional[NounPhraseModel] = None
    pre_circumstances: Tuple[Element, ...] = ()
    verb_connectors: Tuple[str, ...] = ()

    def to_dict(self) -> Dict:
        return {
            "subject": self.subject.to_dict() if self.subject else None,
            "verb_phrases": [vp.to_dict() for vp in self.verb_phrases],
            "verb_connectors": list(self.verb_connectors),
            "pre_circumstances": [serialize_element(e) for e in self.pre_circumstances],
        }


@dataclass(frozen=True)
class SubordinateModel:
    subordinator: str
    clause: SimpleSentenceModel
    leading: bool = True  # stands before the main clause

    def to_dict(self) -> Dict:
        return {"subordinator": self.subordinator, "clause": self.clause.to_dict(), "leading": self.leading}


@dataclass(frozen=True)
class SentenceModel:
    """
    Object graph of one sentence-mood document.

    A subcircum has no complexity; its subordinator is kept in
    ``subordinator`` and its clause is the only part.
    """
    mood: Mood
    parts: Tuple[SimpleSentenceModel, ...]
    complexity: Optional[Complexity] = None
    connectors: Tuple[str, ...] = ()
    subordinate: Optional[SubordinateModel] = None
    part_tag: Optional[str] = None  # simple_sentence or complete_sentence for compound forms
    subordinator: Optional[str] = None
    voice: Voice = field(init=False)

    def __post_init__(self):
        passive = any(vp.voice == Voice.PASSIVE for part in self.parts for vp in part.verb_phrases)
        object.__setattr__(self, "voice", Voice.PASSIVE if passive else Voice.ACTIVE)

    def to_dict(self) -> Dict:
        return {
            "mood": self.mood.value,
            "complexity": self.complexity.value if self.complexity else None,
            "voice": self.voice.value,
            "subordinate": self.subordinate.to_dict() if self.subordinate else None,
            "subordinator": self.subordinator,
            "parts": [p.to_dict() for p in self.parts],
            "connectors": list(self.connectors),
        }

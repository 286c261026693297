from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Optional


class Category(str, Enum):
    NOUN = "noun"
    PERSPRONOUN = "perspronoun"
    QUERY_PRONOUN = "query_pronoun"
    QUERY_ADVERB = "query_adverb"
    VERB = "verb"
    BE = "be"
    MODAL = "modal"
    ADJECTIVE_ATTR = "adjective_attr"
    ADJECTIVE_PRED = "adjective_pred"
    ADJECTIVE_NORMAL = "adjective_normal"
    ADVERB = "adverb"
    PREPOSITION = "preposition"
    ARTICLE = "article"
    DEMONSTRATIVE = "demonstrative"
    CONJUNCTION = "conjunction"
    SUBORDINATOR = "subordinator"
    NUMBER_WORD = "number_word"
    PARTICLE = "particle"


class Transitivity(str, Enum):
    INTR = "intr"
    TRANS = "trans"
    BITRANS = "bitrans"
    LINK = "link"


# Affix dimensions, in canonical serialization order.
NUMBERS = ("sing", "plur")
PERSONS = ("first", "second", "third")
CASES = ("nom", "dat")
TENSES = (
    "present", "past", "present_progressive", "past_progressive", "perfect",
    "modal", "infinitive", "past_participle", "present_participle",
)
GRADES = ("absolute", "comparative", "superlative", "predicative")

DIMENSIONS: Dict[str, tuple] = {
    "number": NUMBERS,
    "person": PERSONS,
    "case": CASES,
    "tense": TENSES,
    "grade": GRADES,
}

# Keys used in the lexicon file
AFFIX_KEYS = {"numb": "number", "pers": "person", "case": "case", "tense": "tense", "grade": "grade"}

# Attachment kinds a verb frame may license. The last one extends the named set.
ATTACHMENT_KINDS = (
    "intransitive",
    "transitive",
    "bitransitive",
    "particle_prep",
    "particle_object",
    "object_bare_infinitive",
    "object_past_participle",
    "link_predicate",
    "particle",
)

DEFAULT_ATTACHMENTS = {
    Transitivity.INTR: frozenset({"intransitive"}),
    Transitivity.TRANS: frozenset({"transitive"}),
    Transitivity.BITRANS: frozenset({"bitransitive", "transitive"}),
    Transitivity.LINK: frozenset({"link_predicate"}),
}


def _full(dimension: str) -> FrozenSet[str]:
    return frozenset(DIMENSIONS[dimension])


@dataclass(frozen=True)
class AffixValue:
    """Affix sets per dimension; an unresolved dimension holds its full value set"""
    number: FrozenSet[str] = field(default_factory=lambda: _full("number"))
    person: FrozenSet[str] = field(default_factory=lambda: _full("person"))
    case: FrozenSet[str] = field(default_factory=lambda: _full("case"))
    tense: FrozenSet[str] = field(default_factory=lambda: _full("tense"))
    grade: FrozenSet[str] = field(default_factory=lambda: _full("grade"))

    @classmethod
    def of(cls, **dims: Iterable[str]) -> "AffixValue":
        """Build from keyword sets, e.g. AffixValue.of(number={"sing"})"""
        return cls(**{name: frozenset(values) for name, values in dims.items()})

    def get(self, dimension: str) -> FrozenSet[str]:
        return getattr(self, dimension)

    def is_resolved(self, dimension: str) -> bool:
        return len(self.get(dimension)) == 1

    def serialize(self, dimension: str) -> str:
        """Values in canonical order joined by '|', e.g. 'sing|plur'"""
        values = self.get(dimension)
        return "|".join(v for v in DIMENSIONS[dimension] if v in values)

    def to_dict(self) -> Dict:
        return {name: self.serialize(name) for name in DIMENSIONS}


@dataclass(frozen=True)
class VerbFrame:
    """Transitivity, allowed particles/prepositions and attachment kinds of a verb"""
    transitivity: Transitivity = Transitivity.INTR
    particles: FrozenSet[str] = frozenset()
    attachments: FrozenSet[str] = frozenset()

    def licenses(self, kind: str) -> bool:
        return kind in self.attachments

    def to_dict(self) -> Dict:
        return {
            "transitivity": self.transitivity.value,
            "particles": sorted(self.particles),
            "attachments": sorted(self.attachments),
        }


@dataclass(frozen=True)
class LexEntry:
    """One lexicon line"""
    surface: str
    lemma: str
    category: Category
    affixes: AffixValue = field(default_factory=AffixValue)
    frame: Optional[VerbFrame] = None
    probability: float = 1.0
    kind: Optional[str] = None  # adverb, determiner or subordinator subtype
    line_number: int = 0

    @property
    def key(self) -> tuple:
        return (self.surface, self.category, self.affixes)

    @property
    def negative(self) -> bool:
        """Contracted negative auxiliaries ("don't", "can't")"""
        return self.surface.endswith("n't")

    @property
    def word_count(self) -> int:
        return len(self.surface.split(" "))

    def has_tense(self, tense: str) -> bool:
        return tense in self.affixes.tense

    def to_dict(self) -> Dict:
        """Convert LexEntry to dictionary for JSON serialization"""
        return {
            "surface": self.surface,
            "lemma": self.lemma,
            "category": self.category.value,
            "affixes": self.affixes.to_dict(),
            "frame": self.frame.to_dict() if self.frame else None,
            "probability": self.probability,
            "kind": self.kind,
        }

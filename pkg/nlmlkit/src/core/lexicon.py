"""
Word inventory: loading, lookup and affix unification.

Lexicon file format, one entry per line, tab separated:

    surface  lemma  category  affixes  frame  probability  kind

affixes are ``key=v1|v2;key=v3`` with keys numb, pers, case, tense, grade.
frame is ``transitivity=...;particles=a|b;attach=kind|kind``. Trailing fields
may be omitted, kind is the adverb or determiner subtype, and ``-`` stands for an empty field. '#' starts a comment line.
"""
import logging
import os
from collections import defaultdict
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..models.lexicon import (
    AFFIX_KEYS,
    ATTACHMENT_KINDS,
    DEFAULT_ATTACHMENTS,
    DIMENSIONS,
    AffixValue,
    Category,
    LexEntry,
    Transitivity,
    VerbFrame,
)
from ..utils.errors import DuplicateEntry, MalformedLine, UnificationFailure

logger = logging.getLogger(__name__)

VERBAL = (Category.VERB, Category.BE, Category.MODAL)


def unify(a: AffixValue, b: AffixValue) -> AffixValue:
    """
    Intersect two affix values dimension by dimension.

    Raises:
        UnificationFailure: naming the first dimension whose intersection is empty
    """
    merged = {}
    for dimension in DIMENSIONS:
        common = a.get(dimension) & b.get(dimension)
        if not common:
            raise UnificationFailure(dimension)
        merged[dimension] = common
    return AffixValue(**merged)


def try_unify(a: AffixValue, b: AffixValue) -> Optional[AffixValue]:
    """unify() returning None instead of raising"""
    try:
        return unify(a, b)
    except UnificationFailure:
        return None


class Lexicon:
    """Immutable-after-load index of LexEntry objects"""

    def __init__(self, entries: Iterable[LexEntry] = ()):
        self.entries: List[LexEntry] = list(entries)
        self._by_surface: Dict[str, List[LexEntry]] = defaultdict(list)
        self._by_category: Dict[Category, List[LexEntry]] = defaultdict(list)
        self._by_lemma: Dict[Tuple[str, Category], List[LexEntry]] = defaultdict(list)
        self.max_words = 1
        for entry in self.entries:
            self._by_surface[entry.surface].append(entry)
            self._by_category[entry.category].append(entry)
            self._by_lemma[(entry.lemma.casefold(), entry.category)].append(entry)
            self.max_words = max(self.max_words, entry.word_count)

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Lexicon) and self.entries == other.entries

    def lookup(self, surface: str) -> List[LexEntry]:
        """All homographs of the case-folded token; [] when unknown"""
        return list(self._by_surface.get(surface.casefold(), ()))

    def lookup_at(self, words: Sequence[str], index: int) -> List[Tuple[LexEntry, int]]:
        """
        Entries whose (possibly multi-word) surface starts at words[index].

        Returns:
            (entry, number of words covered) pairs, longest surfaces first
        """
        found: List[Tuple[LexEntry, int]] = []
        for span in range(min(self.max_words, len(words) - index), 0, -1):
            surface = " ".join(w.casefold() for w in words[index:index + span])
            for entry in self._by_surface.get(surface, ()):
                found.append((entry, span))
        return found

    def by_category(self, category: Category) -> List[LexEntry]:
        return list(self._by_category.get(category, ()))

    def forms(self, lemma: str, category: Category, tense: Optional[str] = None) -> List[LexEntry]:
        """Entries of a lemma, optionally restricted to those allowing a tense"""
        found = self._by_lemma.get((lemma.casefold(), category), ())
        return [e for e in found if tense is None or e.has_tense(tense)]

    def lemma_of(self, surface: str, categories: Sequence[Category] = VERBAL) -> str:
        """Lemma of the first entry of one of the categories, else the surface itself"""
        for entry in self.lookup(surface):
            if entry.category in categories:
                return entry.lemma
        return surface.casefold()


def _parse_affixes(text: str, line_number: int) -> AffixValue:
    if text in ("", "-"):
        return AffixValue()
    dims = {}
    for item in text.split(";"):
        if not item.strip():
            continue
        key, sep, values = item.partition("=")
        key = key.strip()
        if not sep or key not in AFFIX_KEYS:
            raise MalformedLine(line_number, f"unknown affix key {key!r}")
        dimension = AFFIX_KEYS[key]
        chosen = {v.strip() for v in values.split("|") if v.strip()}
        unknown = chosen - set(DIMENSIONS[dimension])
        if unknown or not chosen:
            raise MalformedLine(line_number, f"unknown {key} value(s) {sorted(unknown) or values!r}")
        dims[dimension] = chosen
    return AffixValue.of(**dims)


def _parse_frame(text: str, category: Category, line_number: int) -> Optional[VerbFrame]:
    if category not in VERBAL:
        if text not in ("", "-"):
            raise MalformedLine(line_number, f"frame given for non-verb category {category.value}")
        return None
    fields: Dict[str, str] = {}
    if text not in ("", "-"):
        for item in text.split(";"):
            key, sep, value = item.partition("=")
            if not sep or key.strip() not in ("transitivity", "particles", "attach"):
                raise MalformedLine(line_number, f"unknown frame key {key.strip()!r}")
            fields[key.strip()] = value.strip()
    default = Transitivity.LINK if category == Category.BE else Transitivity.INTR
    try:
        transitivity = Transitivity(fields.get("transitivity", default.value))
    except ValueError:
        raise MalformedLine(line_number, f"unknown transitivity {fields.get('transitivity')!r}")
    particles = frozenset(p for p in fields.get("particles", "").split("|") if p)
    if "attach" in fields:
        attachments = frozenset(a for a in fields["attach"].split("|") if a)
        unknown = attachments - set(ATTACHMENT_KINDS)
        if unknown:
            raise MalformedLine(line_number, f"unknown attachment kind(s) {sorted(unknown)}")
        if transitivity == Transitivity.BITRANS and not attachments & {"bitransitive", "transitive"}:
            raise MalformedLine(line_number, "bitrans frame without a transitive attachment kind")
    else:
        attachments = DEFAULT_ATTACHMENTS[transitivity]
    return VerbFrame(transitivity=transitivity, particles=particles, attachments=attachments)


def parse_line(line: str, line_number: int) -> LexEntry:
    """Parse one data line into a LexEntry"""
    fields = line.split("\t")
    if not 3 <= len(fields) <= 7:
        raise MalformedLine(line_number, f"expected 3 to 7 tab-separated fields, got {len(fields)}")
    surface = fields[0].strip().casefold()
    lemma = fields[1].strip()
    if not surface:
        raise MalformedLine(line_number, "empty surface")
    if not lemma:
        raise MalformedLine(line_number, "empty lemma")
    try:
        category = Category(fields[2].strip())
    except ValueError:
        raise MalformedLine(line_number, f"unknown category {fields[2].strip()!r}")
    affixes = _parse_affixes(fields[3].strip() if len(fields) > 3 else "", line_number)
    frame = _parse_frame(fields[4].strip() if len(fields) > 4 else "", category, line_number)
    probability = 1.0
    if len(fields) > 5 and fields[5].strip() not in ("", "-"):
        try:
            probability = float(fields[5])
        except ValueError:
            raise MalformedLine(line_number, f"probability {fields[5].strip()!r} is not a number")
        if not 0.0 < probability <= 1.0:
            raise MalformedLine(line_number, f"probability {probability} outside (0, 1]")
    kind = fields[6].strip() if len(fields) > 6 and fields[6].strip() not in ("", "-") else None
    return LexEntry(
        surface=surface,
        lemma=lemma,
        category=category,
        affixes=affixes,
        frame=frame,
        probability=probability,
        kind=kind,
        line_number=line_number,
    )


def parse_lexicon(text: str) -> Lexicon:
    """Build a Lexicon from file contents"""
    entries: List[LexEntry] = []
    seen: Dict[tuple, int] = {}
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        entry = parse_line(line, line_number)
        if entry.key in seen:
            raise DuplicateEntry(line_number, entry.surface)
        seen[entry.key] = line_number
        entries.append(entry)
    return Lexicon(entries)


def load_lexicon(path: str) -> Lexicon:
    """
    Load a lexicon file.

    Args:
        path: UTF-8 lexicon file

    Returns:
        Lexicon with one entry per data line

    Raises:
        MalformedLine, DuplicateEntry
    """
    with open(path, "r", encoding="utf-8", newline="") as f:
        text = f.read()
    lexicon = parse_lexicon(text)
    logger.info("Loaded %d lexicon entries from %s", len(lexicon), os.path.basename(path))
    return lexicon

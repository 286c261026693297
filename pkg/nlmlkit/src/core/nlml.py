"""
NLML: serialization, deserialization, canonicalization and validation of the
nested-tag markup.

Canonical NLML is a single line: ``<tag>`` + children + ``</tag>``, no
attributes, no self-closing forms, no whitespace between elements, text
trimmed with internal whitespace collapsed.
"""
import logging
import re
from typing import Dict, List, Optional, Tuple

from ..models.nlml import Element, NlmlDocument, Node, Text
from ..utils.errors import InvalidTag, StrayText, UnbalancedTag, UnknownTag

logger = logging.getLogger(__name__)

VOCABULARY = frozenset({
    "mood", "complexity", "voice", "subordinator", "sub", "complete_sentence",
    "simple_sentence", "sentence_connector", "subject", "verb_phrase",
    "verb_phrase_part", "verb_phrase_connector", "verb_type", "tense", "numb",
    "pers", "case", "verb_word", "kernel_tense", "circum", "circum_type", "noun",
    "type", "word", "adv", "adj", "grade", "predicate", "predicate_type",
    "direct_object", "indirect_object", "prep_phrase", "prep", "part",
    "part_connector", "relative_clause", "noun_clause",
    "det", "particle", "complement", "compare",
})

MOODS = (
    "statement", "question", "order", "full exclamation", "np", "adj", "about",
    "circumstances", "what terse exclamation", "how terse exclamation", "subcircum",
)
COMPLEXITIES = ("simple", "complex", "compound", "compound complex")

# Internal tense names and their NLML spelling
TENSE_TAGS: Dict[str, str] = {
    "present": "present",
    "past": "past",
    "present_progressive": "present progressive",
    "past_progressive": "past progressive",
    "perfect": "perfect",
    "modal": "modal",
    "infinitive": "infi",
    "past_participle": "past participle",
    "present_participle": "present participle",
}
TENSE_NAMES = {v: k for k, v in TENSE_TAGS.items()}

GRADES = ("absolute", "comparative", "superlative", "predicative")
PREDICATE_TYPES = ("np", "adj", "prep", "clause")
VOICES = ("active", "passive")
CIRCUM_TYPES = ("adv", "prep", "participle", "inf")
VERB_TYPES = ("verb", "be")

_SET_VALUES = {
    "numb": ("sing", "plur"),
    "pers": ("first", "second", "third"),
    "case": ("nom", "dat"),
}

_CLOSED_VALUES: Dict[str, Tuple[str, ...]] = {
    "mood": MOODS,
    "complexity": COMPLEXITIES,
    "tense": tuple(TENSE_TAGS.values()),
    "kernel_tense": tuple(TENSE_TAGS.values()),
    "grade": GRADES,
    "predicate_type": PREDICATE_TYPES,
    "voice": VOICES,
    "circum_type": CIRCUM_TYPES,
    "verb_type": VERB_TYPES,
}

_VALUE_REPAIRS = {"pers": {"secnd": "second"}}

_TAG_RE = re.compile(r"<(/?)([^<>]*)>")
_NAME_RE = re.compile(r"^[a-z_]+$")
_SPACE_RE = re.compile(r"\s+")


def normalize_text(text: str) -> str:
    """Trim and collapse internal whitespace"""
    return _SPACE_RE.sub(" ", text).strip()


def _merged_children(children: Tuple[Node, ...]) -> List[Node]:
    """Runs of adjacent text nodes become one normalized text, words joined by a space"""
    merged: List[Node] = []
    run: List[str] = []
    for child in children + (None,):
        if isinstance(child, Text):
            text = normalize_text(child.content)
            if text:
                run.append(text)
            continue
        if run:
            merged.append(Text(" ".join(run)))
            run = []
        if child is not None:
            merged.append(child)
    return merged


def _serialize_node(node: Node, out: List[str]) -> None:
    if isinstance(node, Text):
        out.append(normalize_text(node.content))
        return
    if node.tag not in VOCABULARY:
        raise InvalidTag(node.tag)
    out.append(f"<{node.tag}>")
    for child in _merged_children(node.children):
        _serialize_node(child, out)
    out.append(f"</{node.tag}>")


def serialize(doc: NlmlDocument) -> str:
    """
    Emit the canonical single-line markup string.

    Raises:
        InvalidTag: a node uses a tag outside the vocabulary
    """
    out: List[str] = []
    for element in doc.elements:
        _serialize_node(element, out)
    return "".join(out)


def serialize_element(element: Element) -> str:
    out: List[str] = []
    _serialize_node(element, out)
    return "".join(out)


def deserialize(s: str) -> NlmlDocument:
    """
    Parse a markup string into a document.

    Whitespace around and between elements is ignored; text is normalized.

    Raises:
        UnbalancedTag, UnknownTag, StrayText
    """
    stack: List[Tuple[str, List[Node], int]] = []
    roots: List[Element] = []
    pos = 0
    for match in _TAG_RE.finditer(s):
        _take_text(s, pos, match.start(), stack)
        closing, name = match.group(1) == "/", match.group(2).strip()
        if not _NAME_RE.match(name):
            raise UnknownTag(name, match.start())
        if name not in VOCABULARY:
            raise UnknownTag(name, match.start())
        if not closing:
            stack.append((name, [], match.start()))
        else:
            if not stack or stack[-1][0] != name:
                expected = stack[-1][0] if stack else None
                raise UnbalancedTag(match.start(), f"</{name}> closes <{expected}>")
            tag, children, _ = stack.pop()
            element = Element(tag, tuple(children))
            if stack:
                stack[-1][1].append(element)
            else:
                roots.append(element)
        pos = match.end()
    _take_text(s, pos, len(s), stack)
    if stack:
        raise UnbalancedTag(stack[-1][2], f"<{stack[-1][0]}> is never closed")
    return NlmlDocument(tuple(roots))


def _take_text(s: str, start: int, end: int, stack: List[Tuple[str, List[Node], int]]) -> None:
    raw = s[start:end]
    if "<" in raw or ">" in raw:
        raise UnbalancedTag(start + max(raw.find("<"), raw.find(">")))
    text = normalize_text(raw)
    if not text:
        return
    if not stack:
        raise StrayText(start + (len(raw) - len(raw.lstrip())))
    stack[-1][1].append(Text(text))


def _canonical_node(node: Element, parent_tag: Optional[str] = None) -> Element:
    children: List[Node] = []
    for child in _merged_children(node.children):
        if isinstance(child, Text):
            children.append(Text(_VALUE_REPAIRS.get(node.tag, {}).get(child.content, child.content)))
        else:
            children.append(_canonical_node(child, node.tag))
    return Element(node.tag, tuple(children))


def canonicalize(doc: NlmlDocument) -> NlmlDocument:
    """Idempotent normalization; element order is preserved"""
    return NlmlDocument(tuple(_canonical_node(e) for e in doc.elements))


def _set_value_ok(tag: str, value: str) -> bool:
    allowed = _SET_VALUES[tag]
    parts = value.split("|")
    if not parts or any(p not in allowed for p in parts) or len(set(parts)) != len(parts):
        return False
    return parts == [v for v in allowed if v in parts]


def validate(doc: NlmlDocument) -> List[str]:
    """
    Check vocabulary, mood-first rule and closed value sets.

    Returns:
        Human-readable violations; empty when the document is valid
    """
    violations: List[str] = []
    if not doc.elements or doc.elements[0].tag != "mood":
        violations.append("document does not start with <mood>")
    for element in doc.iter():
        if element.tag not in VOCABULARY:
            violations.append(f"unknown tag <{element.tag}>")
            continue
        value = element.text
        if element.tag in _CLOSED_VALUES and value not in _CLOSED_VALUES[element.tag]:
            violations.append(f"<{element.tag}> has invalid value {value!r}")
        elif element.tag in _SET_VALUES and not _set_value_ok(element.tag, value):
            violations.append(f"<{element.tag}> has invalid value {value!r}")
    for element in doc.elements[1:]:
        if element.tag == "mood":
            violations.append("more than one top-level <mood>")
    return violations


def render_tree(doc: NlmlDocument, indent: str = "  ") -> str:
    """Indented debug view, one element per line; text-only leaves as 'tag: text'"""
    lines: List[str] = []

    def walk(element: Element, depth: int) -> None:
        pad = indent * depth
        if element.children and all(isinstance(c, Text) for c in element.children):
            lines.append(f"{pad}{element.tag}: {element.text}")
            return
        lines.append(f"{pad}{element.tag}")
        for child in element.children:
            if isinstance(child, Text):
                lines.append(f"{pad}{indent}{child.content}")
            else:
                walk(child, depth + 1)

    for element in doc.elements:
        walk(element, 0)
    return "\n".join(lines)

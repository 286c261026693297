"""
Sentence object model: builds SentenceModel graphs from NLML documents,
answers grammar questions about them, transforms them (negation, statement
and yes/no question) and renders them back to text.

Models are immutable; every transformation returns a new model.
"""
import logging
from dataclasses import replace
from typing import Dict, List, Optional, Sequence, Tuple

from ..models.lexicon import AffixValue, Category, LexEntry
from ..models.nlml import Element, NlmlDocument, el
from ..models.parse import Complexity, Mood, Voice
from ..models.sentence import (
    NounPart,
    NounPhraseModel,
    SentenceModel,
    SimpleSentenceModel,
    SubordinateModel,
    VerbPhraseModel,
)
from ..utils.errors import (
    IndexOutOfRange,
    MissingTag,
    NotASentence,
    UnsupportedComplexity,
    UnsupportedMood,
)
from .lexicon import Lexicon, try_unify

logger = logging.getLogger(__name__)

SENTENCE_MOOD_VALUES = {m.value for m in (Mood.STATEMENT, Mood.QUESTION, Mood.ORDER,
                                          Mood.FULL_EXCLAMATION, Mood.SUBCIRCUM)}
QUERIES = ("subject", "verb_word", "object", "tense", "mood", "complexity", "subordinator")

_AFFIX_TAGS = ("numb", "pers", "case")
_PAIRED = {"both_and": ("both", "and"), "either_or": ("either", "or"), "neither_nor": ("neither", "nor")}
_FINAL = {
    Mood.STATEMENT.value: ".",
    Mood.QUESTION.value: "?",
    Mood.ORDER.value: ".",
    Mood.FULL_EXCLAMATION.value: "!",
    Mood.SUBCIRCUM.value: ".",
}


# Building

def _noun_part(element: Element) -> NounPart:
    kernel = None
    kernel_type = None
    pre: List[Element] = []
    post: List[Element] = []
    affixes: Dict[str, str] = {}
    for child in element.elements:
        if child.tag == "type":
            kernel_type = child.text
        elif child.tag == "word" and kernel is None:
            kernel = child.text
        elif child.tag in _AFFIX_TAGS:
            affixes[child.tag] = child.text
        elif kernel is None:
            pre.append(child)
        else:
            post.append(child)
    if kernel is None:
        raise MissingTag("word", element.tag)
    return NounPart(kernel, kernel_type, tuple(pre), tuple(post),
                    affixes.get("numb"), affixes.get("pers"), affixes.get("case"))


def build_noun_phrase(element: Element) -> NounPhraseModel:
    """Model of a <subject> element's content (a noun or a noun clause)"""
    if element.tag == "noun_clause":
        return NounPhraseModel(clause=element)
    parts = element.find_all("part")
    if not parts:
        part = _noun_part(element)
        return NounPhraseModel((part,), (), part.number, part.person, part.case)
    return NounPhraseModel(
        tuple(_noun_part(p) for p in parts),
        tuple(c.text for c in element.find_all("part_connector")),
        element.child_text("numb"), element.child_text("pers"), element.child_text("case"),
    )


def _verb_phrase(element: Element, lexicon: Optional[Lexicon]) -> VerbPhraseModel:
    children = element.elements
    verb_type = element.child_text("verb_type")
    tense = element.child_text("tense")
    if verb_type is None:
        raise MissingTag("verb_type", "verb_phrase")
    if tense is None:
        raise MissingTag("tense", "verb_phrase")
    k = 0
    while k < len(children) and children[k].tag in ("verb_type", "voice", "tense", "numb", "pers"):
        k += 1
    words: List[str] = []
    mid: Optional[Element] = None
    mid_index = 0
    while k < len(children):
        child = children[k]
        if child.tag == "verb_word":
            words.append(child.text)
        elif child.tag == "circum" and child.children and mid is None:
            mid, mid_index = child, len(words)
        else:
            break
        k += 1
    if not words:
        raise MissingTag("verb_word", "verb_phrase")
    kernel_tense = None
    if k < len(children) and children[k].tag == "kernel_tense":
        kernel_tense = children[k].text
        k += 1
    circum_slot = False
    if k < len(children) and children[k].tag == "circum" and not children[k].children:
        circum_slot = True
        k += 1
    rest = children[k:]
    kernel = words[-1].split(" ")[-1]
    return VerbPhraseModel(
        verb_type=verb_type,
        tense=tense,
        words=tuple(words),
        lemma=lexicon.lemma_of(kernel) if lexicon else kernel,
        voice=Voice.PASSIVE if element.child_text("voice") == "passive" else Voice.ACTIVE,
        number=element.child_text("numb"),
        person=element.child_text("pers"),
        kernel_tense=kernel_tense,
        mid=mid,
        mid_index=mid_index,
        circum_slot=circum_slot,
        attachments=tuple(c for c in rest if c.tag != "circum"),
        circumstances=tuple(c for c in rest if c.tag == "circum"),
    )


def _simple_sentence(children: Sequence[Element], lexicon: Optional[Lexicon], context: str) -> SimpleSentenceModel:
    pre: List[Element] = []
    subject = None
    vp_element = None
    for child in children:
        if child.tag == "subject":
            if not child.elements:
                raise MissingTag("noun", "subject")
            subject = build_noun_phrase(child.elements[0])
        elif child.tag == "verb_phrase":
            vp_element = child
        elif child.tag == "circum":
            pre.append(child)
    if vp_element is None:
        raise MissingTag("verb_phrase", context)
    parts = vp_element.find_all("verb_phrase_part")
    if not parts:
        return SimpleSentenceModel((_verb_phrase(vp_element, lexicon),), subject, tuple(pre))
    return SimpleSentenceModel(
        tuple(_verb_phrase(p, lexicon) for p in parts), subject, tuple(pre),
        tuple(c.text for c in vp_element.find_all("verb_phrase_connector")),
    )


def build_model(doc: NlmlDocument, lexicon: Optional[Lexicon] = None) -> SentenceModel:
    """
    Object graph of a sentence-mood document.

    Args:
        doc: validated NLML document
        lexicon: when given, verb lemmas are looked up; otherwise the kernel
            word stands in for the lemma

    Raises:
        NotASentence: phrase-level mood
        MissingTag: structurally incomplete document
    """
    mood_text = doc.mood
    if mood_text is None:
        raise MissingTag("mood", "document")
    if mood_text not in SENTENCE_MOOD_VALUES:
        raise NotASentence(mood_text)
    mood = Mood(mood_text)
    complexity_text = doc.child_text("complexity")
    if complexity_text is None and mood != Mood.SUBCIRCUM:
        raise MissingTag("complexity", mood_text)

    subordinator: Optional[str] = None
    leading = False
    sub: Optional[Element] = None
    loose: List[Element] = []
    wrapped: List[Element] = []
    connectors: List[str] = []
    for element in doc.elements:
        if element.tag in ("mood", "complexity"):
            continue
        if element.tag == "subordinator":
            subordinator = element.text
            leading = not loose and not wrapped
        elif element.tag == "sub":
            sub = element
        elif element.tag in ("simple_sentence", "complete_sentence"):
            wrapped.append(element)
        elif element.tag == "sentence_connector":
            connectors.append(element.text)
        else:
            loose.append(element)

    if mood == Mood.SUBCIRCUM:
        if subordinator is None:
            raise MissingTag("subordinator", mood_text)
        clause = _simple_sentence(loose, lexicon, mood_text)
        return SentenceModel(mood, (clause,), subordinator=subordinator)

    if wrapped:
        parts = tuple(_simple_sentence(w.elements, lexicon, w.tag) for w in wrapped)
        part_tag: Optional[str] = wrapped[0].tag
    else:
        parts = (_simple_sentence(loose, lexicon, mood_text),)
        part_tag = None
    subordinate = None
    if subordinator is not None:
        if sub is None:
            raise MissingTag("sub", mood_text)
        subordinate = SubordinateModel(subordinator, _simple_sentence(sub.elements, lexicon, "sub"), leading)
    return SentenceModel(
        mood=mood,
        parts=parts,
        complexity=Complexity(complexity_text) if complexity_text else None,
        connectors=tuple(connectors),
        subordinate=subordinate,
        part_tag=part_tag,
    )


# Back to NLML

def _part_element(tag: str, part: NounPart) -> Element:
    affixes = [el(t, v) for t, v in zip(_AFFIX_TAGS, (part.number, part.person, part.case)) if v is not None]
    return el(tag, el("type", part.kernel_type) if part.kernel_type else None,
              *part.pre_modifiers, el("word", part.kernel), *affixes, *part.post_modifiers)


def noun_phrase_element(np: NounPhraseModel) -> Element:
    if np.clause is not None:
        return np.clause
    if len(np.parts) == 1:
        return _part_element("noun", np.parts[0])
    affixes = [el(t, v) for t, v in zip(_AFFIX_TAGS, (np.number, np.person, np.case)) if v is not None]
    return el("noun", *(_part_element("part", p) for p in np.parts),
              *(el("part_connector", c) for c in np.connectors), *affixes)


def _verb_phrase_children(vp: VerbPhraseModel) -> Tuple[Element, ...]:
    words: List[Element] = [el("verb_word", w) for w in vp.words]
    if vp.mid is not None:
        words.insert(vp.mid_index, vp.mid)
    return (
        el("verb_type", vp.verb_type),
        el("voice", "passive") if vp.voice == Voice.PASSIVE else None,
        el("tense", vp.tense),
        el("numb", vp.number) if vp.number is not None else None,
        el("pers", vp.person) if vp.person is not None else None,
        *words,
        el("kernel_tense", vp.kernel_tense) if vp.kernel_tense else None,
        el("circum") if vp.circum_slot else None,
        *vp.attachments,
        *vp.circumstances,
    )


def _clean(nodes: Sequence[Optional[Element]]) -> Tuple[Element, ...]:
    return tuple(n for n in nodes if n is not None)


def _simple_elements(part: SimpleSentenceModel) -> Tuple[Element, ...]:
    if len(part.verb_phrases) == 1:
        vp = el("verb_phrase", *_clean(_verb_phrase_children(part.verb_phrases[0])))
    else:
        vp = el("verb_phrase",
                *(el("verb_phrase_part", *_clean(_verb_phrase_children(v))) for v in part.verb_phrases),
                *(el("verb_phrase_connector", c) for c in part.verb_connectors))
    subject = (el("subject", noun_phrase_element(part.subject)),) if part.subject else ()
    return part.pre_circumstances + subject + (vp,)


def to_document(model: SentenceModel) -> NlmlDocument:
    """Inverse of build_model"""
    head: List[Element] = [el("mood", model.mood.value)]
    if model.complexity is not None:
        head.append(el("complexity", model.complexity.value))
    if model.mood == Mood.SUBCIRCUM:
        return NlmlDocument(tuple(head) + (el("subordinator", model.subordinator),) + _simple_elements(model.parts[0]))
    if model.part_tag:
        main = tuple(el(model.part_tag, *_simple_elements(p)) for p in model.parts)
        main += tuple(el("sentence_connector", c) for c in model.connectors)
    else:
        main = _simple_elements(model.parts[0])
    if model.subordinate is None:
        return NlmlDocument(tuple(head) + main)
    sub = (el("subordinator", model.subordinate.subordinator),
           el("sub", *_simple_elements(model.subordinate.clause)))
    body = sub + main if model.subordinate.leading else main + sub
    return NlmlDocument(tuple(head) + body)


# Rendering

_META = frozenset({
    "mood", "complexity", "voice", "verb_type", "tense", "numb", "pers", "case", "type",
    "grade", "kernel_tense", "circum_type", "predicate_type", "part_connector",
    "verb_phrase_connector", "sentence_connector",
})
_WORDS = frozenset({"word", "verb_word", "prep", "particle", "subordinator"})
_FRONTING_TYPES = frozenset({"query", "exclamative", "relpronoun"})
_FRONTING_BARRIERS = frozenset({"noun_clause", "relative_clause", "compare", "sub", "complement"})


def _fronting(element: Element) -> bool:
    if element.tag == "noun":
        if element.child_text("type") in ("query", "relpronoun"):
            return True
        return any(d.child_text("type") in ("query", "exclamative") for d in element.find_all("det"))
    if element.tag in ("adj", "circum"):
        return any(a.child_text("type") in ("query", "exclamative") for a in element.find_all("adv"))
    if element.tag == "adv":
        return element.child_text("type") in ("query", "exclamative")
    return False


def fronted_element(children: Sequence[Element]) -> Optional[Element]:
    """First query, relative or exclamative phrase of a clause, outside nested clauses"""
    for child in children:
        if _fronting(child):
            return child
        if child.tag in _FRONTING_BARRIERS:
            continue
        found = fronted_element(child.elements)
        if found is not None:
            return found
    return None


def _contains(scope: Element, target: Element) -> bool:
    return any(e is target for e in scope.iter())


class _Renderer:
    """Walks NLML elements and produces surface tokens"""

    def __init__(self):
        self.skipped: List[Element] = []

    def _is_skipped(self, element: Element) -> bool:
        return any(element is s for s in self.skipped)

    def render(self, element: Element) -> List[str]:
        if self._is_skipped(element) or element.tag in _META:
            return []
        if element.tag in _WORDS:
            return [element.text] if element.text else []
        if element.tag in ("noun_clause", "relative_clause"):
            return self.clause(element.elements)
        if element.tag == "noun" and element.find("part") is not None:
            return self.coordination([self.render(p) for p in element.find_all("part")],
                                     [c.text for c in element.find_all("part_connector")])
        if element.tag == "verb_phrase" and element.find("verb_phrase_part") is not None:
            return self.coordination([self.render(p) for p in element.find_all("verb_phrase_part")],
                                     [c.text for c in element.find_all("verb_phrase_connector")])
        if element.tag == "predicate" and element.find("part") is not None:
            return self.coordination([self.render(p) for p in element.find_all("part")],
                                     [c.text for c in element.find_all("part_connector")])
        return self.sequence(element.elements)

    def sequence(self, elements: Sequence[Element]) -> List[str]:
        tokens: List[str] = []
        for element in elements:
            tokens.extend(self.render(element))
        return tokens

    @staticmethod
    def coordination(parts: List[List[str]], connectors: List[str], sentences: bool = False) -> List[str]:
        if len(connectors) == 1 and connectors[0] in _PAIRED and len(parts) == 2:
            opener, closer = _PAIRED[connectors[0]]
            return [opener] + parts[0] + [closer] + parts[1]
        tokens = list(parts[0])
        for connector, part in zip(connectors, parts[1:]):
            if connector == ",":
                tokens.append(",")
            elif sentences:
                tokens.extend([",", connector])
            else:
                tokens.append(connector)
            tokens.extend(part)
        return tokens

    def clause(self, children: Sequence[Element], invert: bool = False) -> List[str]:
        """A clause with its fronted phrase moved to the front; optionally with subject-aux inversion"""
        fronted = fronted_element(children)
        subject = next((c for c in children if c.tag == "subject"), None)
        front: List[str] = []
        if fronted is not None:
            if subject is not None and _contains(subject, fronted):
                invert = False
            front = self.render(fronted)
            self.skipped.append(fronted)
        lifted: List[str] = []
        verb_phrase = next((c for c in children if c.tag == "verb_phrase"), None)
        if invert and subject is not None and verb_phrase is not None:
            first = next((e for e in verb_phrase.iter() if e.tag == "verb_word"), None)
            if first is not None:
                lifted = first.text.split(" ")
                self.skipped.append(first)
        tokens = list(front)
        for child in children:
            if child is subject and lifted:
                tokens.append(lifted[0])
                tokens.extend(self.render(child))
                tokens.extend(lifted[1:])
            else:
                tokens.extend(self.render(child))
        return tokens

    def subordinate(self, subordinator: str, sub: Element) -> List[str]:
        if subordinator == "whether or not":
            return ["whether"] + self.clause(sub.elements) + ["or", "not"]
        return [subordinator] + self.clause(sub.elements)

    def document(self, doc: NlmlDocument) -> List[str]:
        mood = doc.mood or ""
        question = mood == Mood.QUESTION.value
        loose: List[Element] = []
        wrapped: List[Element] = []
        connectors: List[str] = []
        subordinator: Optional[str] = None
        sub: Optional[Element] = None
        leading = False
        for element in doc.elements:
            if element.tag in ("mood", "complexity"):
                continue
            if element.tag == "subordinator":
                subordinator = element.text
                leading = not loose and not wrapped
            elif element.tag == "sub":
                sub = element
            elif element.tag in ("simple_sentence", "complete_sentence"):
                wrapped.append(element)
            elif element.tag == "sentence_connector":
                connectors.append(element.text)
            else:
                loose.append(element)
        if mood == Mood.SUBCIRCUM.value:
            return self.subordinate(subordinator or "", el("sub", *loose))
        if wrapped:
            parts = []
            for index, part in enumerate(wrapped):
                after_nor = index == 1 and connectors == ["neither_nor"]
                parts.append(self.clause(part.elements, invert=question or after_nor))
            main = self.coordination(parts, connectors, sentences=True)
        else:
            main = self.clause(loose, invert=question)
        if subordinator is None or sub is None:
            return main
        clause = self.subordinate(subordinator, sub)
        return clause + [","] + main if leading else main + clause


def _capitalized(tokens: List[str]) -> List[str]:
    if tokens and tokens[0]:
        tokens[0] = tokens[0][0].upper() + tokens[0][1:]
    return tokens


def render_document(doc: NlmlDocument) -> str:
    """Surface text of a sentence-mood document: single spaces, final punctuation"""
    tokens = _capitalized(_Renderer().document(doc))
    return " ".join(tokens + [_FINAL.get(doc.mood or "", ".")])


def render_text(model: SentenceModel) -> str:
    return render_document(to_document(model))


def render_elements(elements: Sequence[Element]) -> str:
    """Surface text of a phrase, without capitalization or punctuation"""
    renderer = _Renderer()
    if any(e.tag in ("subject", "verb_phrase") for e in elements):
        return " ".join(renderer.clause(elements))
    return " ".join(renderer.sequence(elements))


# Grammar questions

def answer(model: SentenceModel, query: str, part_index: int = 0) -> Optional[str]:
    """
    Surface text of one element of the addressed simple sentence.

    Args:
        query: one of QUERIES
        part_index: index into model.parts

    Returns:
        The text, or None when the sentence has no such element

    Raises:
        IndexOutOfRange: part_index outside model.parts
    """
    if query not in QUERIES:
        raise ValueError(f"unknown query {query!r}; expected one of {', '.join(QUERIES)}")
    if not 0 <= part_index < len(model.parts):
        raise IndexOutOfRange(part_index, len(model.parts))
    part = model.parts[part_index]
    vp = part.verb_phrases[0]
    if query == "mood":
        return model.mood.value
    if query == "complexity":
        return model.complexity.value if model.complexity else None
    if query == "subordinator":
        return model.subordinate.subordinator if model.subordinate else model.subordinator
    if query == "tense":
        return vp.tense
    if query == "verb_word":
        return vp.kernel_word
    if query == "subject":
        if part.subject is None:
            return None
        return render_elements((noun_phrase_element(part.subject),))
    target = vp.direct_object or vp.indirect_object
    return render_elements(target.elements) if target is not None else None


# Transformations

def _affixes(vp: VerbPhraseModel) -> AffixValue:
    dims = {}
    if vp.number:
        dims["number"] = vp.number.split("|")
    if vp.person:
        dims["person"] = vp.person.split("|")
    return AffixValue.of(**dims)


def _inflected(lexicon: Lexicon, lemma: str, tense: str, affixes: AffixValue,
               category: Category = Category.VERB) -> Optional[LexEntry]:
    for entry in lexicon.forms(lemma, category, tense):
        if not entry.negative and try_unify(entry.affixes, affixes) is not None:
            return entry
    return None


def do_support_form(lexicon: Lexicon, tense: str, affixes: AffixValue) -> str:
    """Form of "do" agreeing with the affixes: do, does or did"""
    entry = _inflected(lexicon, "do", tense, affixes)
    if entry is None:
        logger.warning("no form of 'do' for %s %s", tense, affixes.to_dict())
        return "do"
    return entry.surface


def _reinflect(lexicon: Lexicon, vp: VerbPhraseModel) -> str:
    lemma = lexicon.lemma_of(vp.kernel_word)
    entry = _inflected(lexicon, lemma, vp.tense, _affixes(vp))
    if entry is None:
        logger.warning("no %s form of %r; keeping the base form", vp.tense, lemma)
        return lemma
    return entry.surface


def _has_do_support(vp: VerbPhraseModel, lexicon: Lexicon) -> bool:
    if vp.verb_type != "verb" or vp.kernel_tense != "infi" or len(vp.words) != 2:
        return False
    first = vp.words[0].split(" ")[0]
    return any(e.lemma == "do" for e in lexicon.lookup(first) if e.category == Category.VERB)


def _needs_do_support(vp: VerbPhraseModel) -> bool:
    return vp.verb_type == "verb" and len(vp.words) == 1 and vp.tense in ("present", "past")


def _positive_auxiliary(lexicon: Lexicon, word: str) -> str:
    """Positive form of a negated auxiliary word, e.g. can't -> can"""
    if word.endswith(" not"):
        return word[:-len(" not")]
    for entry in lexicon.lookup(word):
        if entry.negative:
            for form in lexicon.forms(entry.lemma, entry.category):
                if not form.negative and try_unify(form.affixes, entry.affixes) is not None:
                    return form.surface
    return word


def _negated(vp: VerbPhraseModel, lexicon: Lexicon) -> VerbPhraseModel:
    if vp.negated:
        if _has_do_support(vp, lexicon):
            collapsed = replace(vp, words=(vp.words[1],), kernel_tense=None)
            return replace(collapsed, words=(_reinflect(lexicon, collapsed),))
        words = list(vp.words)
        for index, word in enumerate(words):
            if word == "not":
                del words[index]
                break
            if word.endswith(" not") or word.endswith("n't"):
                words[index] = _positive_auxiliary(lexicon, word)
                break
        return replace(vp, words=tuple(words))
    if _needs_do_support(vp):
        do = do_support_form(lexicon, vp.tense, _affixes(vp))
        return replace(vp, words=(do + " not", lexicon.lemma_of(vp.words[0])), kernel_tense="infi")
    return replace(vp, words=(vp.words[0] + " not",) + vp.words[1:])


def negate(model: SentenceModel, lexicon: Lexicon) -> SentenceModel:
    """
    Toggle negation of every top-level verb phrase of every part.

    Raises:
        UnsupportedMood: the sentence is not a statement
    """
    if model.mood != Mood.STATEMENT:
        raise UnsupportedMood(model.mood.value)
    parts = tuple(
        replace(part, verb_phrases=tuple(_negated(vp, lexicon) for vp in part.verb_phrases))
        for part in model.parts
    )
    return replace(model, parts=parts)


def _is_wh_question(part: SimpleSentenceModel) -> bool:
    return fronted_element(_simple_elements(part)) is not None


def transform_mood(model: SentenceModel, target: Mood, lexicon: Lexicon) -> SentenceModel:
    """
    Statement to yes/no question and back.

    Raises:
        UnsupportedMood: mood or target outside statement/question, or a wh-question
        UnsupportedComplexity: anything but a single simple sentence
    """
    if model.mood not in (Mood.STATEMENT, Mood.QUESTION):
        raise UnsupportedMood(model.mood.value)
    if target not in (Mood.STATEMENT, Mood.QUESTION):
        raise UnsupportedMood(target.value)
    if model.complexity != Complexity.SIMPLE or len(model.parts) != 1:
        raise UnsupportedComplexity(model.complexity.value if model.complexity else "none")
    if target == model.mood:
        return model
    part = model.parts[0]
    if _is_wh_question(part):
        raise UnsupportedMood(model.mood.value)
    vp = part.verb_phrases[0]
    if target == Mood.QUESTION:
        if _needs_do_support(vp):
            do = do_support_form(lexicon, vp.tense, _affixes(vp))
            vp = replace(vp, words=(do, lexicon.lemma_of(vp.words[0])), kernel_tense="infi")
    elif _has_do_support(vp, lexicon) and not vp.negated:
        collapsed = replace(vp, words=(vp.words[1],), kernel_tense=None)
        vp = replace(collapsed, words=(_reinflect(lexicon, collapsed),))
    part = replace(part, verb_phrases=(vp,) + part.verb_phrases[1:])
    logger.debug("mood %s -> %s", model.mood.value, target.value)
    return replace(model, mood=target, parts=(part,))

"""
Phrase and clause rules: noun phrases, adjective and adverb phrases,
prepositional phrases, circumstances, predicates, relative and noun clauses.
"""
import logging
from typing import Iterator, List, Optional, Tuple

from ..models.lexicon import AffixValue, Category, LexEntry
from ..models.nlml import Element, el
from .lexicon import try_unify
from .parser import Filler, Frag, Nodes, ParserBase, affix_nodes, circum, memo

logger = logging.getLogger(__name__)

RELATIVE_PRONOUNS = ("who", "whom", "which", "that")

CASE_VALUES = {
    "nom": AffixValue.of(case={"nom"}),
    "dat": AffixValue.of(case={"dat"}),
    "any": AffixValue(),
}
THIRD = AffixValue.of(person={"third"})
SING_THIRD = AffixValue.of(number={"sing"}, person={"third"})

_PARTICIPLES = frozenset({"past_participle", "present_participle"})

_PAIRED = {"both": ("and", "both_and"), "neither": ("nor", "neither_nor"), "either": ("or", "either_or")}

# (nodes, end, probability, folded degree word)
Degree = Tuple[Nodes, int, float, Optional[str]]


def _det_type(entry: LexEntry) -> str:
    if entry.kind:
        return entry.kind
    if entry.category == Category.DEMONSTRATIVE:
        return "demonstrative"
    if entry.category == Category.NUMBER_WORD:
        return "number"
    return "article"


def combine_parts(parts: List[Frag], connector: str) -> Optional[AffixValue]:
    """
    Affixes of a coordinated noun phrase.

    "and" coordination is plural, first person if any part is first, else
    second if any is second. "or" and "nor" take number and person from the
    nearer part.
    """
    if connector in ("and", "both_and"):
        number = frozenset({"plur"})
        person = frozenset({"third"})
        for candidate in ("second", "first"):
            if any(p.affixes.person == frozenset({candidate}) for p in parts):
                person = frozenset({candidate})
    else:
        number = parts[-1].affixes.number
        person = parts[-1].affixes.person
    case = parts[0].affixes.case
    for part in parts[1:]:
        case = case & part.affixes.case
    if not case:
        return None
    return AffixValue(number=number, person=person, case=case)


class PhraseRules(ParserBase):
    """Rules below the clause level; clause and verb rules come from sibling mixins"""

    # Determiners and adjectives

    @memo
    def _determiners(self, i: int) -> List[Frag]:
        out = [Frag(i)]
        for entry, span in self.entries(i, Category.ARTICLE, Category.DEMONSTRATIVE):
            kind = _det_type(entry)
            det = el("det", el("type", kind), el("word", self.emitted(i, span)))
            marks = frozenset({"query"}) if kind == "query" else frozenset()
            first = Frag(i + span, (det,), entry.probability, entry.affixes, marks=marks)
            out.append(first)
            out.extend(self._with_number(first))
        out.extend(self._with_number(Frag(i)))
        return out

    def _with_number(self, det: Frag) -> List[Frag]:
        out = []
        for entry, span in self.entries(det.end, Category.NUMBER_WORD):
            affixes = try_unify(det.affixes, entry.affixes)
            if affixes is None:
                continue
            node = el("det", el("type", "number"), el("word", self.emitted(det.end, span)))
            out.append(Frag(det.end + span, det.nodes + (node,), det.prob * entry.probability, affixes, marks=det.marks))
        return out

    def _degree(self, i: int) -> List[Degree]:
        out: List[Degree] = [((), i, 1.0, None)]
        for entry, span in self.entries(i, Category.ADVERB):
            if entry.kind == "degree":
                node = el("adv", el("type", "degree"), el("word", self.emitted(i, span)))
                out.append(((node,), i + span, entry.probability, entry.surface))
        return out

    def _adj_kernels(self, i: int, position: str) -> Iterator[Tuple[LexEntry, int, str, str]]:
        if position == "attribute":
            allowed = {Category.ADJECTIVE_ATTR: "attr", Category.ADJECTIVE_NORMAL: "normal"}
            default_grade = "absolute"
        else:
            allowed = {Category.ADJECTIVE_PRED: "pred", Category.ADJECTIVE_NORMAL: "normal"}
            default_grade = "predicative"
        for entry, span in self.entries(i, *allowed, Category.VERB):
            if entry.category == Category.VERB:
                if position == "attribute" and entry.affixes.tense <= _PARTICIPLES:
                    yield entry, span, "participle", "absolute"
                continue
            grades = entry.affixes.grade
            grade = entry.affixes.serialize("grade") if len(grades) == 1 else default_grade
            if position == "attribute" and grade == "predicative":
                continue
            yield entry, span, allowed[entry.category], grade

    @memo
    def _adjective(self, i: int, position: str, with_compare: bool) -> List[Frag]:
        out: List[Frag] = []
        for degree in self._degree(i):
            out.extend(self._adj_after(degree, position, with_compare))
        return out

    def _adj_after(self, degree: Degree, position: str, with_compare: bool) -> List[Frag]:
        nodes, start, prob, degree_word = degree
        out = []
        for entry, span, kind, grade in self._adj_kernels(start, position):
            head = (el("type", kind), el("grade", grade)) + nodes + (el("word", self.emitted(start, span)),)
            end = start + span
            p = prob * entry.probability
            out.append(Frag(end, (el("adj", *head),), p))
            if with_compare:
                for cmp in self._compare(end, degree_word, grade == "comparative"):
                    out.append(Frag(cmp.end, (el("adj", *head, *cmp.nodes),), p * cmp.prob, open_right=True))
        return out

    @memo
    def _attr_adjs(self, i: int) -> List[Frag]:
        out = [Frag(i)]
        for adj in self._adjective(i, "attribute", False):
            for rest in self._attr_adjs(adj.end):
                out.append(Frag(rest.end, adj.nodes + rest.nodes, adj.prob * rest.prob))
        return out

    @memo
    def _pred_adjs(self, i: int) -> List[Frag]:
        """Predicate adjective phrase, possibly two parts joined by a conjunction"""
        singles = self._adjective(i, "predicate", True)
        out = list(singles)
        for a in singles:
            k = a.end + 1 if self.is_word(a.end, ",") else a.end
            if not self.is_word(k, "and", "or", "but"):
                continue
            for b in self._adjective(k + 1, "predicate", True):
                nodes = (el("part", *a.nodes), el("part", *b.nodes), el("part_connector", self.words[k]))
                out.append(Frag(b.end, nodes, a.prob * b.prob, open_right=b.open_right))
        return out

    # Adverbs and comparisons

    @memo
    def _adverb(self, i: int, with_compare: bool) -> List[Frag]:
        out: List[Frag] = []
        for degree in self._degree(i):
            out.extend(self._adv_after(degree, with_compare))
        return out

    def _adv_after(self, degree: Degree, with_compare: bool) -> List[Frag]:
        nodes, start, prob, degree_word = degree
        out = []
        for entry, span in self.entries(start, Category.ADVERB):
            if entry.kind == "degree":
                continue
            grade: Tuple[Element, ...] = ()
            if entry.affixes.is_resolved("grade"):
                grade = (el("grade", entry.affixes.serialize("grade")),)
            head = (el("type", entry.kind or "manner"),) + grade + nodes + (el("word", self.emitted(start, span)),)
            end = start + span
            p = prob * entry.probability
            out.append(Frag(end, (el("adv", *head),), p))
            if with_compare:
                comparative = degree_word == "more" or entry.affixes.grade == frozenset({"comparative"})
                for cmp in self._compare(end, degree_word, comparative):
                    out.append(Frag(cmp.end, (el("adv", *head, *cmp.nodes),), p * cmp.prob, open_right=True))
        return out

    @memo
    def _compare(self, i: int, degree_word: Optional[str], comparative: bool) -> List[Frag]:
        """Compared object or result construction following an adjective or adverb kernel"""
        out: List[Frag] = []

        def compare(kind: str, word: str, frag: Frag, lead: Nodes = ()) -> None:
            node = el("compare", el("type", kind), el("word", word), *frag.nodes)
            out.append(Frag(frag.end, lead + (node,), frag.prob))

        if comparative and self.is_word(i, "than"):
            for frag in self._np(i + 1, "any", True) + self._clause(i + 1, None):
                compare("than", "than", frag)
        if degree_word == "so" and self.is_word(i, "that"):
            for frag in self._clause(i + 1, None):
                compare("so_that", "that", frag)
        if degree_word in ("so", "as") and self.is_word(i, "as"):
            kind = "so_as" if degree_word == "so" else "as_as"
            for frag in self._np(i + 1, "any", True) + self._clause(i + 1, None):
                compare(kind, "as", frag)
        if degree_word == "too" and self.is_word(i, "to"):
            for frag in self._vp(i + 1, AffixValue(), "infinitive", None, None):
                compare("too_to", "to", frag)
        if degree_word is None and self.is_word(i, "enough") and self.is_word(i + 1, "to"):
            enough = (el("adv", el("type", "degree"), el("word", "enough")),)
            for frag in self._vp(i + 2, AffixValue(), "infinitive", None, None):
                compare("enough_to", "to", frag, enough)
        return out

    # Noun phrases

    @memo
    def _noun_part(self, i: int, case: str) -> List[Frag]:
        """One conjunct: pre-modifiers, kernel, post-modifiers; nodes are the part's children"""
        out: List[Frag] = []
        wanted = CASE_VALUES[case]
        for entry, span in self.entries(i, Category.PERSPRONOUN, Category.QUERY_PRONOUN):
            affixes = try_unify(entry.affixes, wanted)
            if affixes is None:
                continue
            query = entry.category == Category.QUERY_PRONOUN
            kind = "query" if query else "perspronoun"
            nodes = (el("type", kind), el("word", self.emitted(i, span))) + affix_nodes(affixes)
            marks = frozenset({"query"}) if query else frozenset()
            out.append(Frag(i + span, nodes, entry.probability, affixes, marks=marks))
        for entry, span in self.entries(i, Category.DEMONSTRATIVE, Category.NUMBER_WORD):
            affixes = try_unify(entry.affixes, wanted)
            affixes = affixes and try_unify(affixes, THIRD)
            if affixes is None:
                continue
            nodes = (el("type", _det_type(entry)), el("word", self.emitted(i, span))) + affix_nodes(affixes)
            out.append(Frag(i + span, nodes, entry.probability, affixes))
        for det in self._determiners(i):
            for adjs in self._attr_adjs(det.end):
                for entry, span in self.entries(adjs.end, Category.NOUN):
                    affixes = try_unify(entry.affixes, det.affixes)
                    affixes = affixes and try_unify(affixes, THIRD)
                    affixes = affixes and try_unify(affixes, wanted)
                    if affixes is None:
                        continue
                    end = adjs.end + span
                    head = (el("type", "noun"),) + det.nodes + adjs.nodes
                    head += (el("word", self.emitted(adjs.end, span)),) + affix_nodes(affixes)
                    prob = det.prob * adjs.prob * entry.probability
                    for post in self._post_modifiers(end, affixes.number):
                        out.append(Frag(
                            post.end, head + post.nodes, prob * post.prob, affixes,
                            open_right=post.open_right, marks=det.marks | post.marks,
                        ))
        return out

    @memo
    def _post_modifiers(self, i: int, number: frozenset) -> List[Frag]:
        out = [Frag(i)]
        starts = [Frag(i)]
        for pp in self._pp(i):
            found = Frag(pp.end, pp.nodes, pp.prob, open_right=pp.open_right)
            out.append(found)
            starts.append(found)
        for start in starts:
            for rel in self._relative_clause(start.end, number):
                out.append(Frag(
                    rel.end, start.nodes + rel.nodes, start.prob * rel.prob,
                    open_right=True, marks=frozenset({"relative"}),
                ))
        return out

    @memo
    def _np(self, i: int, case: str, trailing_relative: bool) -> List[Frag]:
        """
        Noun phrase of one or more parts.

        Args:
            case: "nom", "dat" or "any"
            trailing_relative: whether the last part may end in a relative clause
        """
        out = [Frag(p.end, (el("noun", *p.nodes),), p.prob, p.affixes, open_right=p.open_right, marks=p.marks)
               for p in self._noun_part(i, case)]
        word = self.word(i)
        if word in _PAIRED and self.is_word(i, word):
            second, name = _PAIRED[word]
            for a in self._noun_part(i + 1, case):
                if self.is_word(a.end, second):
                    for b in self._noun_part(a.end + 1, case):
                        out.extend(self._coordination([a, b], [name], name))
        for parts, connectors in self._part_sequence(i, case):
            j = parts[-1].end
            k = j + 1 if self.is_word(j, ",") else j
            if self.is_word(k, "and", "or"):
                for last in self._noun_part(k + 1, case):
                    out.extend(self._coordination(parts + [last], connectors + [self.words[k]], self.words[k]))
        if not trailing_relative:
            out = [f for f in out if "relative" not in f.marks]
        return out

    @memo
    def _part_sequence(self, i: int, case: str) -> List[Tuple[List[Frag], List[str]]]:
        """Comma-separated noun parts starting at i"""
        out: List[Tuple[List[Frag], List[str]]] = []
        for part in self._noun_part(i, case):
            out.append(([part], []))
            if self.is_word(part.end, ","):
                for rest, connectors in self._part_sequence(part.end + 1, case):
                    out.append(([part] + rest, [","] + connectors))
        return out

    def _coordination(self, parts: List[Frag], connectors: List[str], kind: str) -> List[Frag]:
        affixes = combine_parts(parts, kind)
        if affixes is None:
            return []
        nodes = tuple(el("part", *p.nodes) for p in parts)
        nodes += tuple(el("part_connector", c) for c in connectors) + affix_nodes(affixes)
        prob = 1.0
        marks: frozenset = frozenset()
        for p in parts:
            prob *= p.prob
            marks |= p.marks
        last = parts[-1]
        marks = (marks - {"relative"}) | (last.marks & {"relative"})
        return [Frag(last.end, (el("noun", *nodes),), prob, affixes, open_right=last.open_right, marks=marks)]

    # Prepositional phrases, predicates, circumstances

    @memo
    def _pp(self, i: int) -> List[Frag]:
        out = []
        for entry, span in self.entries(i, Category.PREPOSITION):
            prep = el("prep", self.emitted(i, span))
            j = i + span
            for obj in self._np(j, "dat", True) + self._noun_clause(j, "prep"):
                out.append(Frag(
                    obj.end, (el("prep_phrase", prep, *obj.nodes),), entry.probability * obj.prob,
                    open_right=obj.open_right, marks=obj.marks - {"relative"},
                ))
        return out

    @memo
    def _predicate(self, i: int, filler: Optional[Filler]) -> List[Frag]:
        def predicate(kind: str, frag: Frag, gap: bool = False) -> Frag:
            node = el("predicate", el("predicate_type", kind), *frag.nodes)
            return Frag(frag.end, (node,), frag.prob, gap=gap, open_right=frag.open_right, marks=frag.marks)

        if filler is not None and filler.kind in ("np", "adj"):
            return [predicate(filler.kind, Frag(i, filler.nodes), gap=True)]
        out = [predicate("np", f) for f in self._np(i, "nom", True)]
        out += [predicate("adj", f) for f in self._pred_adjs(i)]
        out += [predicate("prep", f) for f in self._pp(i)]
        out += [predicate("clause", f) for f in self._noun_clause(i, "object")]
        return out

    @memo
    def _mid_adverb(self, i: int) -> List[Frag]:
        return [Frag(a.end, (circum("adv", *a.nodes),), a.prob) for a in self._adverb(i, False)]

    @memo
    def _circum(self, i: int, position: str) -> List[Frag]:
        """
        One circumstance in "pre", "mid" or "post" position.

        Post circumstances admit comparisons, result constructions and
        purpose infinitives; pre circumstances admit participle phrases.
        """
        post = position == "post"
        out = [Frag(a.end, (circum("adv", *a.nodes),), a.prob, open_right=a.open_right)
               for a in self._adverb(i, post)]
        out += [Frag(p.end, (circum("prep", *p.nodes),), p.prob, open_right=p.open_right) for p in self._pp(i)]
        if position == "pre":
            out += self._participle_circum(i)
        if post and self.is_word(i, "to"):
            for vp in self._vp(i + 1, AffixValue(), "infinitive", None, None):
                out.append(Frag(vp.end, (circum("inf", el("word", "to"), *vp.nodes),), vp.prob, open_right=True))
        return out

    @memo
    def _participle_circum(self, i: int) -> List[Frag]:
        out = []
        for form in ("present_participle", "past_participle"):
            for vp in self._vp(i, AffixValue(), form, None, None):
                out.append(Frag(vp.end, (circum("participle", *vp.nodes),), vp.prob, open_right=True))
        return out

    # Clauses

    @memo
    def _relative_clause(self, i: int, number: frozenset) -> List[Frag]:
        out: List[Frag] = []

        def relative(kind: str, frag: Frag) -> None:
            out.append(Frag(frag.end, (el("relative_clause", el("type", kind), *frag.nodes),), frag.prob))

        numb = "|".join(v for v in ("sing", "plur") if v in number)
        word = self.word(i)
        if word in RELATIVE_PRONOUNS and self.is_word(i, word):
            def pronoun(case: str) -> Element:
                return el("noun", el("type", "relpronoun"), el("word", word), el("numb", numb),
                          el("pers", "third"), el("case", case))

            subject_affixes = AffixValue(number=number, person=frozenset({"third"}), case=frozenset({"nom"}))
            for vp in self._vp(i + 1, subject_affixes, "finite", None, None):
                relative("full", Frag(vp.end, (el("subject", pronoun("nom")),) + vp.nodes, vp.prob))
            if word != "who":
                for clause in self._clause(i + 1, Filler("np", (pronoun("dat"),))):
                    if "query" not in clause.marks:
                        relative("full", clause)
        for clause in self._clause(i, Filler("np")):
            if "query" not in clause.marks:
                relative("full", clause)
        for form, kind in (("present_participle", "present participle"), ("past_participle", "past participle")):
            for vp in self._vp(i, AffixValue(), form, None, None):
                relative(kind, vp)
        if self.is_word(i, "to"):
            for filler in (Filler("np"), None):
                for vp in self._vp(i + 1, AffixValue(), "infinitive", filler, None):
                    if vp.gap == (filler is not None):
                        relative("infinitive", Frag(vp.end, (el("word", "to"),) + vp.nodes, vp.prob))
        return out

    @memo
    def _noun_clause(self, i: int, scope: str) -> List[Frag]:
        """
        Noun clauses usable in the given scope.

        scope "prep" admits gerund and query-infinitive clauses only; "subject"
        excludes the complementizer-less clause; "object" admits everything.
        """
        out: List[Frag] = []

        def clause(kind: str, words: Tuple[str, ...], frag: Frag, lead: Nodes = ()) -> None:
            node = el("noun_clause", el("type", kind), *(el("word", w) for w in words), *lead, *frag.nodes)
            out.append(Frag(frag.end, (node,), frag.prob, SING_THIRD, open_right=True))

        gerunds = self._vp(i, AffixValue(), "present_participle", None, None)
        for vp in gerunds:
            clause("gerund", (), vp)
        if self.is_word(i, "not"):
            for vp in self._vp(i + 1, AffixValue(), "present_participle", None, None):
                clause("negative gerund", ("not",), vp)
        for entry, span in self.entries(i, Category.ARTICLE):
            if entry.kind == "possessive":
                det = el("det", el("type", "possessive"), el("word", self.emitted(i, span)))
                for vp in self._vp(i + span, AffixValue(), "present_participle", None, None):
                    clause("possessive gerund", (), vp, (det,))
        for filler, j in self._query_fillers(i):
            if self.is_word(j, "to"):
                for vp in self._vp(j + 1, AffixValue(), "infinitive", filler, None):
                    if vp.gap:
                        clause("query infinitive", (), Frag(vp.end, (el("word", "to"),) + vp.nodes, vp.prob))
        if scope == "prep":
            return out

        if self.is_word(i, "to"):
            for vp in self._vp(i + 1, AffixValue(), "infinitive", None, None):
                clause("infinitive", ("to",), vp)
        if self.is_word(i, "not") and self.is_word(i + 1, "to"):
            for vp in self._vp(i + 2, AffixValue(), "infinitive", None, None):
                clause("negative infinitive", ("not", "to"), vp)
        for word in ("that", "whether", "if"):
            if self.is_word(i, word):
                for frag in self._clause(i + 1, None):
                    if "query" not in frag.marks:
                        clause("that" if word == "that" else word, (word,), frag)
        for frag in self._clause(i, None):
            if "query" in frag.marks:
                clause("query", (), frag)
            elif scope == "object":
                clause("that", (), frag)
        for filler, j in self._query_fillers(i):
            for frag in self._clause(j, filler):
                clause("query", (), frag)
        return out

    @memo
    def _query_fillers(self, i: int) -> List[Tuple[Filler, int]]:
        """Fronted query phrases: a query noun phrase or a query adverb"""
        out: List[Tuple[Filler, int]] = []
        for np in self._np(i, "any", False):
            if "query" in np.marks:
                out.append((Filler("np", np.nodes), np.end))
        for entry, span in self.entries(i, Category.QUERY_ADVERB):
            adv = el("adv", el("type", "query"), el("word", self.emitted(i, span)))
            out.append((Filler("adv", (circum("adv", adv),)), i + span))
        return out

"""
Clause and sentence rules: simple statements, questions and orders, the
there-be form, subordinate clauses, compound forms and full exclamations.

Questions and inverted clauses are returned in declarative order; the
mood tells the renderer to invert them again.
"""
import logging
from typing import List, Optional, Tuple

from ..models.lexicon import AffixValue, Category
from ..models.nlml import Element, el
from .lexicon import try_unify
from .parser import Aux, Filler, Frag, ParserBase, circum, memo, tense_tag

logger = logging.getLogger(__name__)

NOUN_CLAUSE_SUBJECT_COST = 10

_TWO_CLAUSE_CONNECTORS = ("but", "so", "for", "yet")


def _has_post_modifier(noun: Element) -> bool:
    scopes = [noun] + noun.find_all("part")
    return any(child.tag in ("prep_phrase", "relative_clause") for scope in scopes for child in scope.elements)


def exclaimed(noun: Element) -> Optional[Element]:
    """The noun with an exclamative "what" determiner in front of its other determiners"""
    if noun.find("type") is None or noun.child_text("type") != "noun":
        return None
    det = el("det", el("type", "exclamative"), el("word", "what"))
    children = list(noun.children)
    children.insert(1, det)
    return Element("noun", tuple(children))


def _product(frags: List[Frag]) -> float:
    prob = 1.0
    for frag in frags:
        prob *= frag.prob
    return prob


class SentenceRules(ParserBase):

    # Clauses

    @memo
    def _clause(self, i: int, filler: Optional[Filler]) -> List[Frag]:
        """Subject + finite verb phrase; a filler must be used exactly once"""
        out = []
        for subject in self._np(i, "nom", True):
            for vp in self._vp(subject.end, subject.affixes, "finite", filler, None):
                if vp.gap != (filler is not None):
                    continue
                out.append(Frag(
                    vp.end, (el("subject", *subject.nodes),) + vp.nodes, subject.prob * vp.prob,
                    subject.affixes, open_right=vp.open_right, cost=vp.cost, marks=subject.marks & {"query"},
                ))
        return out

    @memo
    def _pre_circums(self, i: int) -> List[Frag]:
        out = [Frag(i)]
        for c in self._circum(i, "pre"):
            j = c.end + 1 if self.is_word(c.end, ",") else c.end
            for rest in self._pre_circums(j):
                out.append(Frag(rest.end, c.nodes + rest.nodes, c.prob * rest.prob))
        return out

    @memo
    def _there_be(self, i: int) -> List[Frag]:
        """"there" as virtual subject; the real subject becomes the np predicate"""
        out: List[Frag] = []
        if not self.is_word(i, "there"):
            return out
        subject = el("subject", el("noun", el("word", "there")))
        for aux in self._auxes(i + 1):
            if aux.kind != "be":
                continue
            for np in self._np(aux.end, "nom", False):
                if _has_post_modifier(np.nodes[0]):
                    continue
                agreement = try_unify(aux.entry.affixes, np.affixes)
                if agreement is None:
                    continue
                head = (
                    el("verb_type", "be"), tense_tag(aux.tense),
                    el("numb", agreement.serialize("number")), el("pers", agreement.serialize("person")),
                    el("verb_word", aux.word), el("predicate", el("predicate_type", "np"), *np.nodes),
                )
                for circ in self._post_circums(np.end, frozenset()):
                    vp = el("verb_phrase", *head, *(circ.nodes or (el("circum"),)))
                    out.append(Frag(circ.end, (subject, vp), aux.prob * np.prob * circ.prob, agreement,
                                    open_right=circ.open_right))
        return out

    @memo
    def _simple_statement(self, i: int) -> List[Frag]:
        """
        Pre circumstances followed by there-be, subject + verb phrase, or a
        noun clause subject + verb phrase at an extra cost.
        """
        out = []
        for pre in self._pre_circums(i):
            j = pre.end
            bodies = list(self._there_be(j))
            bodies += [f for f in self._clause(j, None) if "query" not in f.marks]
            for nc in self._noun_clause(j, "subject"):
                for vp in self._vp(nc.end, nc.affixes, "finite", None, None):
                    if not vp.gap:
                        bodies.append(Frag(vp.end, (el("subject", *nc.nodes),) + vp.nodes, nc.prob * vp.prob,
                                           open_right=vp.open_right, cost=NOUN_CLAUSE_SUBJECT_COST + vp.cost))
            for body in bodies:
                out.append(Frag(body.end, pre.nodes + body.nodes, pre.prob * body.prob, body.affixes,
                                open_right=body.open_right, cost=body.cost))
        return out

    @memo
    def _inverted(self, i: int, filler: Optional[Filler]) -> List[Frag]:
        """AUX subject ["not"] rest, emitted in declarative order"""
        out = []
        for aux in self._auxes(i):
            for subject in self._np(aux.end, "nom", True):
                if "query" in subject.marks:
                    continue
                variants: List[Tuple[Aux, int]] = [(aux, subject.end)]
                if not aux.negated and self.is_word(subject.end, "not"):
                    variants.append((Aux(aux.entry, aux.word + " not", aux.end, aux.prob), subject.end + 1))
                for variant, j in variants:
                    for vp in self._vp(j, subject.affixes, "finite", filler, variant):
                        if vp.gap != (filler is not None):
                            continue
                        out.append(Frag(vp.end, (el("subject", *subject.nodes),) + vp.nodes,
                                        subject.prob * vp.prob, open_right=vp.open_right, cost=vp.cost))
        return out

    def _question_fillers(self, i: int) -> List[Tuple[Filler, int]]:
        out = list(self._query_fillers(i))
        if self.is_word(i, "how"):
            degree = ((el("adv", el("type", "query"), el("word", "how")),), i + 1, 1.0, None)
            for adj in self._adj_after(degree, "predicate", False):
                out.append((Filler("adj", adj.nodes), adj.end))
        return out

    @memo
    def _simple_question(self, i: int) -> List[Frag]:
        out = [f for f in self._clause(i, None) if "query" in f.marks]
        out += self._inverted(i, None)
        for filler, j in self._question_fillers(i):
            out += self._inverted(j, filler)
        return out

    @memo
    def _simple_order(self, i: int) -> List[Frag]:
        j = i + 1 if self.is_word(i, "please") else i
        return list(self._vp(j, AffixValue(), "order", None, None))

    @memo
    def _unit(self, i: int, mood: str) -> List[Frag]:
        if mood == "statement":
            return self._simple_statement(i)
        if mood == "question":
            return self._simple_question(i)
        return self._simple_order(i)

    # Complex and compound forms

    @memo
    def _subordinate(self, i: int) -> List[Frag]:
        """Subordinator + simple statement; "whether ... or not" is labelled as one subordinator"""
        out = []
        for entry, span in self.entries(i, Category.SUBORDINATOR):
            word = self.emitted(i, span)
            for s in self._simple_statement(i + span):
                sub = el("sub", *s.nodes)
                prob = entry.probability * s.prob
                out.append(Frag(s.end, (el("subordinator", word), sub), prob, cost=s.cost))
                if entry.surface == "whether" and self.is_word(s.end, "or") and self.is_word(s.end + 1, "not"):
                    out.append(Frag(s.end + 2, (el("subordinator", "whether or not"), sub), prob, cost=s.cost))
        return out

    @memo
    def _complex(self, i: int, mood: str) -> List[Frag]:
        out = []
        for sub in self._subordinate(i):
            j = sub.end + 1 if self.is_word(sub.end, ",") else sub.end
            for main in self._unit(j, mood):
                out.append(Frag(main.end, sub.nodes + main.nodes, sub.prob * main.prob, cost=sub.cost + main.cost))
        for main in self._unit(i, mood):
            j = main.end + 1 if self.is_word(main.end, ",") else main.end
            for sub in self._subordinate(j):
                out.append(Frag(sub.end, main.nodes + sub.nodes, sub.prob * main.prob, cost=sub.cost + main.cost))
        return out

    @memo
    def _unit_sequence(self, i: int, mood: str) -> List[Tuple[List[Frag], List[str]]]:
        out: List[Tuple[List[Frag], List[str]]] = []
        for unit in self._unit(i, mood):
            out.append(([unit], []))
            if self.is_word(unit.end, ","):
                for rest, connectors in self._unit_sequence(unit.end + 1, mood):
                    out.append(([unit] + rest, [","] + connectors))
        return out

    def _joined(self, parts: List[Frag], connectors: List[str], tag: str) -> Frag:
        nodes = tuple(el(tag, *p.nodes) for p in parts)
        nodes += tuple(el("sentence_connector", c) for c in connectors)
        return Frag(parts[-1].end, nodes, _product(parts), cost=sum(p.cost for p in parts))

    @memo
    def _compound(self, i: int, mood: str, tag: str) -> List[Frag]:
        """
        "and or" lists of simple sentences, two sentences joined by but/so/for/yet,
        and the either...or / neither...nor pairs. Questions only take the list form.
        """
        out = []
        for parts, connectors in self._unit_sequence(i, mood):
            j = parts[-1].end
            k = j + 1 if self.is_word(j, ",") else j
            if self.is_word(k, "and", "or"):
                for last in self._unit(k + 1, mood):
                    out.append(self._joined(parts + [last], connectors + [self.words[k]], tag))
        if mood == "question":
            return out
        for first in self._unit(i, mood):
            k = first.end + 1 if self.is_word(first.end, ",") else first.end
            if self.is_word(k, *_TWO_CLAUSE_CONNECTORS):
                for second in self._unit(k + 1, mood):
                    out.append(self._joined([first, second], [self.words[k]], tag))
        for opener, closer, name in (("either", "or", "either_or"), ("neither", "nor", "neither_nor")):
            if not self.is_word(i, opener) or (name == "neither_nor" and mood != "statement"):
                continue
            for first in self._unit(i + 1, mood):
                k = first.end + 1 if self.is_word(first.end, ",") else first.end
                if not self.is_word(k, closer):
                    continue
                seconds = self._inverted(k + 1, None) if closer == "nor" else self._unit(k + 1, mood)
                for second in seconds:
                    out.append(self._joined([first, second], [name], tag))
        return out

    @memo
    def _compound_complex(self, i: int, mood: str) -> List[Frag]:
        out = []
        for sub in self._subordinate(i):
            j = sub.end + 1 if self.is_word(sub.end, ",") else sub.end
            for rest in self._compound(j, mood, "complete_sentence"):
                out.append(Frag(rest.end, sub.nodes + rest.nodes, sub.prob * rest.prob, cost=sub.cost + rest.cost))
        return out

    # Full exclamations

    @memo
    def _exclamation(self, i: int) -> List[Frag]:
        """
        "what" + noun phrase or "how" + adjective/adverb, emphasized and fronted,
        followed by the rest of the clause.
        """
        out: List[Frag] = []
        if self.is_word(i, "what"):
            for np in self._np(i + 1, "nom", True):
                noun = exclaimed(np.nodes[0])
                if noun is None:
                    continue
                for f in self._clause(np.end, Filler("np", (noun,))):
                    if "query" not in f.marks:
                        out.append(Frag(f.end, f.nodes, np.prob * f.prob, cost=f.cost))
                for vp in self._vp(np.end, np.affixes, "finite", None, None):
                    if not vp.gap:
                        out.append(Frag(vp.end, (el("subject", noun),) + vp.nodes, np.prob * vp.prob, cost=vp.cost))
        if self.is_word(i, "how"):
            degree = ((el("adv", el("type", "exclamative"), el("word", "how")),), i + 1, 1.0, None)
            fillers = [(Filler("adj", a.nodes), a) for a in self._adj_after(degree, "predicate", False)]
            fillers += [(Filler("adv", (circum("adv", *a.nodes),)), a) for a in self._adv_after(degree, False)]
            for filler, phrase in fillers:
                for f in self._clause(phrase.end, filler):
                    if "query" not in f.marks:
                        out.append(Frag(f.end, f.nodes, phrase.prob * f.prob, cost=f.cost))
        return out

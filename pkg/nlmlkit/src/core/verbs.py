"""
Verb phrase rules: verb groups (auxiliaries, tense, voice), attachments
licensed by the verb frame, post circumstances and coordinated verb phrases.
"""
import logging
from dataclasses import dataclass, replace
from typing import List, Optional, Tuple

from ..models.lexicon import AffixValue, Category, LexEntry, Transitivity, VerbFrame
from ..models.nlml import Element, el
from .lexicon import try_unify
from .parser import Aux, Filler, Frag, ParserBase, memo, tense_tag

logger = logging.getLogger(__name__)

_PARTICIPLES = frozenset({"past_participle", "present_participle"})


@dataclass(frozen=True)
class Tail:
    """Verb words following an auxiliary, up to and including the kernel"""
    words: Tuple[str, ...]
    end: int
    kernel: Optional[LexEntry]
    prob: float = 1.0
    passive: bool = False
    progressive: bool = False
    perfect: bool = False


@dataclass(frozen=True)
class VerbGroup:
    end: int
    words: Tuple[str, ...]
    tense: str
    kernel: Optional[LexEntry]
    affixes: AffixValue = AffixValue()
    passive: bool = False
    kernel_infi: bool = False
    mid: Optional[Tuple[int, Element]] = None
    prob: float = 1.0
    cost: int = 0

    @property
    def verb_type(self) -> str:
        """be + predicate groups have no lexical kernel"""
        return "be" if self.kernel is None else "verb"


def _prep_of(circum_node: Element) -> Optional[str]:
    pp = circum_node.find("prep_phrase")
    return pp.child_text("prep") if pp is not None else None


def _names_person(filler: Optional[Filler]) -> bool:
    """who/whom fillers go to the indirect object first, anything else to the direct object"""
    if filler is None:
        return False
    return any(node.child_text("word") in ("who", "whom") for node in filler.nodes)


class VerbRules(ParserBase):

    # Verb forms

    def _forms(self, i: int, tense: str, *categories: Category) -> List[Tuple[LexEntry, int]]:
        return [(e, s) for e, s in self.entries(i, *(categories or (Category.VERB,))) if e.has_tense(tense)]

    def _has_participle(self, i: int) -> bool:
        return any(e.affixes.tense & _PARTICIPLES for e, _ in self.entries(i, Category.VERB))

    @memo
    def _auxes(self, i: int) -> List[Aux]:
        """Finite auxiliaries at i: modal, be, have or do, with an optional "not" merged in"""
        out = []
        for entry, span in self.entries(i, Category.MODAL, Category.BE, Category.VERB):
            if entry.category == Category.VERB and entry.lemma.casefold() not in ("do", "have"):
                continue
            if entry.category != Category.MODAL and not entry.affixes.tense & {"present", "past"}:
                continue
            word = self.emitted(i, span)
            out.append(Aux(entry, word, i + span, entry.probability))
            if not entry.negative and self.is_word(i + span, "not"):
                out.append(Aux(entry, word + " not", i + span + 1, entry.probability))
        return out

    def _be_tail(self, i: int, prefix: Tuple[str, ...], prob: float, perfect: bool) -> List[Tail]:
        out = []
        for entry, span in self._forms(i, "present_participle"):
            out.append(Tail(prefix + (self.emitted(i, span),), i + span, entry, prob * entry.probability,
                            progressive=True, perfect=perfect))
        for entry, span in self._forms(i, "past_participle"):
            out.append(Tail(prefix + (self.emitted(i, span),), i + span, entry, prob * entry.probability,
                            passive=True, perfect=perfect))
        if not self._has_participle(i):
            # be + predicate; a participle here is always read as part of the verb
            out.append(Tail(prefix, i, None, prob, perfect=perfect))
        return out

    def _have_tail(self, i: int, prefix: Tuple[str, ...], prob: float) -> List[Tail]:
        out = []
        for entry, span in self._forms(i, "past_participle"):
            out.append(Tail(prefix + (self.emitted(i, span),), i + span, entry, prob * entry.probability, perfect=True))
        for entry, span in self._forms(i, "past_participle", Category.BE):
            words = prefix + (self.emitted(i, span),)
            out.extend(self._be_tail(i + span, words, prob * entry.probability, True))
        return out

    @memo
    def _tail(self, i: int, kind: str) -> List[Tail]:
        """What may follow an auxiliary of the given kind ("modal", "do", "have", "be", "infinitive")"""
        out: List[Tail] = []
        if kind in ("modal", "do", "infinitive"):
            for entry, span in self._forms(i, "infinitive"):
                out.append(Tail((self.emitted(i, span),), i + span, entry, entry.probability))
        if kind in ("modal", "infinitive"):
            for entry, span in self._forms(i, "infinitive", Category.BE):
                out.extend(self._be_tail(i + span, (self.emitted(i, span),), entry.probability, False))
            for entry, span in self._forms(i, "infinitive"):
                if entry.lemma.casefold() == "have":
                    out.extend(self._have_tail(i + span, (self.emitted(i, span),), entry.probability))
        if kind == "have":
            out.extend(self._have_tail(i, (), 1.0))
        if kind == "be":
            out.extend(self._be_tail(i, (), 1.0, False))
        return out

    @memo
    def _continue_aux(self, aux: Aux, i: int, inner_mid: bool) -> List[VerbGroup]:
        out = []
        starts: List[Tuple[Optional[Element], int, float]] = [(None, i, 1.0)]
        if inner_mid:
            starts += [(m.nodes[0], m.end, m.prob) for m in self._mid_adverb(i)]
        for mid, j, p in starts:
            for tail in self._tail(j, aux.kind):
                if aux.kind == "modal":
                    tense = "modal"
                elif tail.perfect or aux.kind == "have":
                    tense = "perfect"
                elif tail.progressive:
                    tense = f"{aux.tense}_progressive"
                else:
                    tense = aux.tense
                out.append(VerbGroup(
                    end=tail.end,
                    words=(aux.word,) + tail.words,
                    tense=tense,
                    kernel=tail.kernel,
                    affixes=aux.entry.affixes,
                    passive=tail.passive,
                    kernel_infi=aux.kind in ("modal", "do"),
                    mid=(1, mid) if mid is not None else None,
                    prob=aux.prob * tail.prob * p,
                ))
        return out

    @memo
    def _bare_groups(self, i: int, form: str, inner_mid: bool) -> List[VerbGroup]:
        out: List[VerbGroup] = []
        if form == "finite":
            for aux in self._auxes(i):
                out.extend(self._continue_aux(aux, aux.end, inner_mid))
            for entry, span in self.entries(i, Category.VERB):
                for tense in ("present", "past"):
                    if entry.has_tense(tense):
                        out.append(VerbGroup(i + span, (self.emitted(i, span),), tense, entry,
                                             entry.affixes, prob=entry.probability))
        elif form in ("infinitive", "order"):
            for tail in self._tail(i, "infinitive"):
                out.append(VerbGroup(tail.end, tail.words, "infinitive", tail.kernel,
                                     passive=tail.passive, prob=tail.prob))
            if form == "order":
                for aux in self._auxes(i):
                    if aux.kind == "do" and aux.negated and aux.tense == "present":
                        for tail in self._tail(aux.end, "do"):
                            out.append(VerbGroup(tail.end, (aux.word,) + tail.words, "infinitive", tail.kernel,
                                                 prob=aux.prob * tail.prob))
        elif form == "present_participle":
            for entry, span in self._forms(i, "present_participle"):
                out.append(VerbGroup(i + span, (self.emitted(i, span),), form, entry, prob=entry.probability))
            for entry, span in self._forms(i, "present_participle", Category.BE):
                for tail in self._be_tail(i + span, (self.emitted(i, span),), entry.probability, False):
                    if tail.passive:
                        out.append(VerbGroup(tail.end, tail.words, form, tail.kernel, passive=True, prob=tail.prob))
        elif form == "past_participle":
            for entry, span in self._forms(i, "past_participle"):
                out.append(VerbGroup(i + span, (self.emitted(i, span),), form, entry,
                                     passive=True, prob=entry.probability))
        return out

    @memo
    def _groups(self, i: int, form: str, aux: Optional[Aux]) -> List[VerbGroup]:
        """
        Verb groups at i, with an optional mid circumstance before the first
        verb word or after the first auxiliary.

        With aux given the auxiliary was already consumed in front of the
        subject (inverted word order) and i is the position after the subject.
        """
        if aux is not None:
            return self._continue_aux(aux, i, True)
        out = list(self._bare_groups(i, form, True))
        for mid in self._mid_adverb(i):
            for group in self._bare_groups(mid.end, form, False):
                out.append(replace(group, mid=(0, mid.nodes[0]), prob=group.prob * mid.prob, cost=group.cost + 1))
        return out

    # Attachments

    @memo
    def _object(self, i: int, filler: Optional[Filler], clauses: bool) -> List[Frag]:
        """Content of an object slot: the filler gap, a noun phrase or a noun clause"""
        out = []
        if filler is not None and filler.kind == "np":
            out.append(Frag(i, filler.nodes, gap=True))
        for np in self._np(i, "dat", True):
            if "query" not in np.marks:
                out.append(np)
        if clauses:
            out.extend(self._noun_clause(i, "object"))
        return out

    @memo
    def _passive_attachments(self, i: int, kernel: LexEntry) -> List[Frag]:
        frame = kernel.frame or VerbFrame()
        if frame.transitivity not in (Transitivity.TRANS, Transitivity.BITRANS):
            return []
        bases = [Frag(i)]
        if frame.transitivity == Transitivity.BITRANS:
            for obj in self._object(i, None, False):
                bases.append(Frag(obj.end, (el("direct_object", *obj.nodes),), obj.prob, open_right=obj.open_right))
        if frame.licenses("object_bare_infinitive") and self.is_word(i, "to"):
            for vp in self._vp(i + 1, AffixValue(), "infinitive", None, None):
                bases.append(Frag(vp.end, (el("complement", el("word", "to"), *vp.nodes),), vp.prob, open_right=True))
        out = []
        for base in bases:
            out.append(base)
            if not base.open_right and self.is_word(base.end, "by"):
                for agent in self._np(base.end + 1, "dat", True):
                    node = el("prep_phrase", el("prep", "by"), *agent.nodes)
                    out.append(Frag(agent.end, base.nodes + (node,), base.prob * agent.prob,
                                    open_right=agent.open_right))
        return out

    @memo
    def _attachments(self, i: int, kernel: LexEntry, filler: Optional[Filler]) -> List[Frag]:
        """Complements licensed by the kernel's frame, most specific kinds first"""
        frame = kernel.frame or VerbFrame()
        out: List[Frag] = []

        def add(nodes: Tuple[Element, ...], last: Frag, prob: float, gap: bool) -> None:
            out.append(Frag(last.end, nodes, prob, gap=gap, open_right=last.open_right))

        def particle_at(j: int) -> Optional[Element]:
            word = self.word(j)
            if word in frame.particles and self.is_word(j, word):
                return el("particle", word)
            return None

        particle = particle_at(i)
        if frame.licenses("particle_prep"):
            starts = [((), i)] + ([((particle,), i + 1)] if particle is not None else [])
            for lead, j in starts:
                for pp in self._pp(j):
                    if pp.nodes[0].child_text("prep") in frame.particles:
                        add(lead + pp.nodes, pp, pp.prob, False)
        if particle is not None and frame.licenses("particle_object"):
            for obj in self._object(i + 1, filler, False):
                add((particle, el("direct_object", *obj.nodes)), obj, obj.prob, obj.gap)
        if particle is not None and frame.licenses("particle"):
            add((particle,), Frag(i + 1), 1.0, False)
        for kind, form in (("object_bare_infinitive", "infinitive"), ("object_past_participle", "past_participle")):
            if not frame.licenses(kind):
                continue
            for obj in self._object(i, filler, False):
                for vp in self._vp(obj.end, AffixValue(), form, None, None):
                    nodes = (el("direct_object", *obj.nodes), el("complement", *vp.nodes))
                    add(nodes, vp, obj.prob * vp.prob, obj.gap)
        if frame.licenses("bitransitive"):
            pairs = []
            for indirect in self._object(i, filler, False):
                rest = None if indirect.gap else filler
                for direct in self._object(indirect.end, rest, True):
                    pairs.append((indirect, direct))
            if not _names_person(filler):
                pairs.sort(key=lambda pair: pair[0].gap)
            for indirect, direct in pairs:
                nodes = (el("indirect_object", *indirect.nodes), el("direct_object", *direct.nodes))
                add(nodes, direct, indirect.prob * direct.prob, indirect.gap or direct.gap)
        if frame.licenses("transitive"):
            for obj in self._object(i, filler, True):
                add((el("direct_object", *obj.nodes),), obj, obj.prob, obj.gap)
        if frame.licenses("link_predicate"):
            for pred in self._predicate(i, filler):
                add(pred.nodes, pred, pred.prob, pred.gap)
        if frame.licenses("intransitive"):
            add((), Frag(i), 1.0, False)
        return out

    @memo
    def _post_circums(self, i: int, cut: frozenset) -> List[Frag]:
        """
        Zero or more trailing circumstances, longest attachment first;
        prepositions in ``cut`` belong to the verb.
        """
        out: List[Frag] = []
        options = [c for c in self._circum(i, "post") if _prep_of(c.nodes[0]) not in cut]
        if self.is_word(i, ","):
            options += [replace(p, open_right=True) for p in self._participle_circum(i + 1)]
        for option in options:
            if option.open_right:
                out.append(option)
                continue
            for rest in self._post_circums(option.end, cut):
                out.append(Frag(rest.end, option.nodes + rest.nodes, option.prob * rest.prob,
                                open_right=rest.open_right))
        out.append(Frag(i))
        return out

    # Verb phrases

    @memo
    def _simple_vp(self, i: int, affixes: AffixValue, form: str, filler: Optional[Filler],
                   aux: Optional[Aux]) -> List[Frag]:
        """Children of one verb phrase without conjunctions"""
        out: List[Frag] = []
        finite = form == "finite"
        for group in self._groups(i, form, aux):
            agreement = try_unify(affixes, group.affixes) if finite else affixes
            if agreement is None:
                continue
            head: Tuple[Element, ...] = (el("verb_type", group.verb_type),)
            if group.passive and group.tense != "past_participle":
                head += (el("voice", "passive"),)
            head += (tense_tag(group.tense),)
            if finite:
                head += (el("numb", agreement.serialize("number")), el("pers", agreement.serialize("person")))
            words: List[Element] = [el("verb_word", w) for w in group.words]
            if group.mid is not None:
                words.insert(group.mid[0], group.mid[1])
            tail: Tuple[Element, ...] = ()
            if group.kernel_infi:
                tail += (el("kernel_tense", "infi"),)
            if group.mid is None:
                tail += (el("circum"),)
            base = head + tuple(words) + tail

            object_filler = filler if filler is not None and filler.kind == "np" else None
            if group.kernel is None:
                attachments = self._predicate(group.end, filler)
                cut: frozenset = frozenset()
            elif group.passive:
                attachments = self._passive_attachments(group.end, group.kernel)
                cut = frozenset({"by"})
            else:
                attachments = self._attachments(group.end, group.kernel, object_filler)
                frame = group.kernel.frame or VerbFrame()
                cut = frame.particles if frame.licenses("particle_prep") else frozenset()
            adverb = filler if filler is not None and filler.kind == "adv" else None
            for att in attachments:
                if att.open_right:
                    circumstances = [Frag(att.end)]
                else:
                    circumstances = self._post_circums(att.end, cut)
                for circ in circumstances:
                    nodes = base + att.nodes + (adverb.nodes if adverb else ()) + circ.nodes
                    out.append(Frag(
                        circ.end, nodes, group.prob * att.prob * circ.prob, agreement,
                        gap=att.gap or adverb is not None,
                        open_right=circ.open_right if circ.nodes else att.open_right,
                        cost=group.cost,
                    ))
        return out

    @memo
    def _vp(self, i: int, affixes: AffixValue, form: str, filler: Optional[Filler],
            aux: Optional[Aux]) -> List[Frag]:
        """
        Verb phrase: one simple part, or parts joined by commas and a final
        conjunction. The filler and a pre-consumed auxiliary belong to the first part.
        """
        out: List[Frag] = []
        firsts = self._simple_vp(i, affixes, form, filler, aux)
        for first in firsts:
            out.append(replace(first, nodes=(el("verb_phrase", *first.nodes),)))
        for first in firsts:
            for parts, connectors in self._vp_tail(first.end, first.affixes, form):
                chain = [first] + parts
                nodes = tuple(el("verb_phrase_part", *p.nodes) for p in chain)
                nodes += tuple(el("verb_phrase_connector", c) for c in connectors)
                prob = 1.0
                for p in chain:
                    prob *= p.prob
                last = chain[-1]
                out.append(Frag(last.end, (el("verb_phrase", *nodes),), prob, last.affixes, gap=first.gap,
                                open_right=last.open_right, cost=sum(p.cost for p in chain)))
        return out

    @memo
    def _vp_tail(self, i: int, affixes: AffixValue, form: str) -> List[Tuple[List[Frag], List[str]]]:
        out: List[Tuple[List[Frag], List[str]]] = []
        k = i + 1 if self.is_word(i, ",") else i
        if self.is_word(k, "and", "or", "but"):
            for part in self._simple_vp(k + 1, affixes, form, None, None):
                out.append(([part], [self.words[k]]))
        if self.is_word(i, ","):
            for part in self._simple_vp(i + 1, affixes, form, None, None):
                for parts, connectors in self._vp_tail(part.end, part.affixes, form):
                    out.append(([part] + parts, [","] + connectors))
        return out

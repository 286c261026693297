"""
English grammar: turns a token stream into ranked NLML analyses.

The expression rules are tried in order. If any full-sentence reading
(statement, question, order, full exclamation) covers the input, the
phrase-level readings are not attempted at all. Within one sentence mood
the complexities are tried from compound complex down to simple and the
first one that covers the input wins.
"""
import logging
from typing import Callable, List, Optional, Sequence, Tuple

from ..models.lexicon import AffixValue, Category
from ..models.nlml import Element, NlmlDocument, el
from ..models.parse import Complexity, Mood, ParseResult, TokenStream
from ..utils.errors import NoParse, PositionViolation, UnknownAttachment
from .lexicon import Lexicon
from .nlml import serialize
from .parser import Frag, circum, memo
from .phrases import PhraseRules
from .sentences import SentenceRules
from .tokenizer import tokenize
from .verbs import VerbRules

logger = logging.getLogger(__name__)

MAX_RESULTS = 8

PHRASE_PENALTY = 10
SUBCIRCUM_PENALTY = 12

_FINAL = {
    Mood.STATEMENT: (".",),
    Mood.QUESTION: ("?",),
    Mood.ORDER: ("!", "."),
    Mood.FULL_EXCLAMATION: ("!",),
}
_ANY_FINAL = (".", "?", "!")

# (rule number, penalty, fragment, document elements after the mood)
Candidate = Tuple[int, int, Frag, Tuple[Element, ...]]


def _best(frags: Sequence[Frag]) -> Frag:
    return sorted(frags, key=lambda f: (f.cost, -f.prob))[0]


class Grammar(PhraseRules, VerbRules, SentenceRules):
    """One parse of one token stream; create a new instance per input"""

    def finished(self, frags: Sequence[Frag], marks: Tuple[str, ...], trailing_please: bool = False) -> List[Frag]:
        """Fragments that reach the end of input, allowing final punctuation"""
        out = []
        for frag in frags:
            if self.punctuation_end(frag.end, marks):
                out.append(frag)
            elif trailing_please and self.is_word(frag.end, "please") and self.punctuation_end(frag.end + 1, marks):
                out.append(frag)
        return out

    def full_span(self, frags: Sequence[Frag]) -> List[Frag]:
        return [f for f in frags if f.end == self.n]

    def _by_complexity(self, mood: Mood, attempts: List[Tuple[Complexity, Callable[[], List[Frag]]]],
                       trailing_please: bool = False) -> List[Candidate]:
        rule = {Mood.STATEMENT: 1, Mood.QUESTION: 2, Mood.ORDER: 3}[mood]
        for complexity, produce in attempts:
            done = self.finished(produce(), _FINAL[mood], trailing_please)
            if done:
                logger.debug("%s parsed as %s (%d analyses)", mood.value, complexity.value, len(done))
                head = (el("mood", mood.value), el("complexity", complexity.value))
                return [(rule, 0, f, head + f.nodes) for f in done]
        return []

    def statements(self) -> List[Candidate]:
        return self._by_complexity(Mood.STATEMENT, [
            (Complexity.COMPOUND_COMPLEX, lambda: self._compound_complex(0, "statement")),
            (Complexity.COMPOUND, lambda: self._compound(0, "statement", "simple_sentence")),
            (Complexity.COMPLEX, lambda: self._complex(0, "statement")),
            (Complexity.SIMPLE, lambda: self._simple_statement(0)),
        ])

    def questions(self) -> List[Candidate]:
        return self._by_complexity(Mood.QUESTION, [
            (Complexity.COMPOUND, lambda: self._compound(0, "question", "simple_sentence")),
            (Complexity.COMPLEX, lambda: self._complex(0, "question")),
            (Complexity.SIMPLE, lambda: self._simple_question(0)),
        ])

    def orders(self) -> List[Candidate]:
        return self._by_complexity(Mood.ORDER, [
            (Complexity.COMPOUND_COMPLEX, lambda: self._compound_complex(0, "order")),
            (Complexity.COMPOUND, lambda: self._compound(0, "order", "simple_sentence")),
            (Complexity.COMPLEX, lambda: self._complex(0, "order")),
            (Complexity.SIMPLE, lambda: self._simple_order(0)),
        ], trailing_please=True)

    def exclamations(self) -> List[Candidate]:
        head = (el("mood", Mood.FULL_EXCLAMATION.value), el("complexity", Complexity.SIMPLE.value))
        return [(4, 0, f, head + f.nodes) for f in self.finished(self._exclamation(0), _FINAL[Mood.FULL_EXCLAMATION])]

    def phrases(self) -> List[Candidate]:
        """Rules for words and phrases that are not full sentences"""
        out: List[Candidate] = []

        def add(rule: int, penalty: int, mood: Mood, frags: Sequence[Frag]) -> None:
            for f in self.finished(frags, _ANY_FINAL):
                out.append((rule, penalty, f, (el("mood", mood.value),) + f.nodes))

        for rule, word in ((5, "how"), (6, "what")):
            if self.is_word(0, word) and self.is_word(1, "about"):
                add(rule, 0, Mood.ABOUT, self._np(2, "any", True))
        if self.is_word(0, "what"):
            add(7, 0, Mood.WHAT_TERSE_EXCLAMATION, [f for f in self._np(1, "nom", True) if "query" not in f.marks])
        if self.is_word(0, "how"):
            add(8, 0, Mood.HOW_TERSE_EXCLAMATION, self._pred_adjs(1))
        add(9, 0, Mood.NP, [f for f in self._np(0, "any", True) if "query" in f.marks])
        for entry, span in self.entries(0, Category.QUERY_ADVERB):
            adv = el("adv", el("type", "query"), el("word", self.emitted(0, span)))
            add(10, 0, Mood.CIRCUMSTANCES, [Frag(span, (circum("adv", adv),), entry.probability)])
        add(11, PHRASE_PENALTY, Mood.CIRCUMSTANCES, self._circum_list(0))
        plain = [f for f in self._np(0, "any", False) if "query" not in f.marks]
        add(12, PHRASE_PENALTY, Mood.NP, plain)
        with_relative = []
        for np in plain:
            for rel in self._relative_clause(np.end, np.affixes.number):
                with_relative.append(Frag(rel.end, np.nodes + rel.nodes, np.prob * rel.prob))
        add(13, PHRASE_PENALTY, Mood.NP, with_relative)
        add(14, PHRASE_PENALTY, Mood.ADJ, [f for f in self._attr_adjs(0) if f.nodes])
        add(15, PHRASE_PENALTY, Mood.ADJ, self._pred_adjs(0))
        subcircum = []
        for sub in self._subordinate(0):
            subordinator, clause = sub.nodes
            subcircum.append(Frag(sub.end, (subordinator,) + clause.children, sub.prob, cost=sub.cost))
        add(16, SUBCIRCUM_PENALTY, Mood.SUBCIRCUM, subcircum)
        return out

    @memo
    def _circum_list(self, i: int) -> List[Frag]:
        """One or more circumstances separated by optional commas"""
        out = []
        for c in self._circum(i, "mid"):
            out.append(c)
            j = c.end + 1 if self.is_word(c.end, ",") else c.end
            if j < self.n:
                for rest in self._circum_list(j):
                    out.append(Frag(rest.end, c.nodes + rest.nodes, c.prob * rest.prob))
        return out

    def no_parse(self) -> NoParse:
        token = self.words[self.furthest] if self.furthest < self.n else None
        return NoParse(self.furthest, token)


def _rank(candidates: List[Candidate]) -> List[ParseResult]:
    ranked = []
    seen = set()
    for rule, penalty, frag, elements in candidates:
        document = NlmlDocument(elements)
        key = serialize(document)
        if key in seen:
            continue
        seen.add(key)
        result = ParseResult(document, penalty, frag.prob, rule, frag.cost)
        ranked.append(((penalty, -frag.prob, rule, frag.cost, len(ranked)), result))
    ranked.sort(key=lambda pair: pair[0])
    return [result for _, result in ranked[:MAX_RESULTS]]


def classify_expression(tokens: TokenStream, lexicon: Lexicon) -> List[ParseResult]:
    """
    Ranked analyses of a whole expression.

    Args:
        tokens: tokenized input
        lexicon: word inventory

    Returns:
        At most MAX_RESULTS results sorted by penalty, then probability
        (descending), then rule number

    Raises:
        NoParse: no rule covers the input
    """
    grammar = Grammar(tokens, lexicon)
    if not len(tokens):
        raise grammar.no_parse()
    candidates = grammar.statements() + grammar.questions() + grammar.orders() + grammar.exclamations()
    if candidates:
        logger.debug("sentence reading found; phrase rules skipped")
    else:
        candidates = grammar.phrases()
    if not candidates:
        raise grammar.no_parse()
    return _rank(candidates)


def parse(text: str, lexicon: Lexicon) -> List[ParseResult]:
    """Tokenize and classify raw text"""
    return classify_expression(tokenize(text), lexicon)


def _sentence(tokens: TokenStream, lexicon: Lexicon, produce: Callable[[Grammar], List[Candidate]]) -> ParseResult:
    grammar = Grammar(tokens, lexicon)
    ranked = _rank(produce(grammar)) if len(tokens) else []
    if not ranked:
        raise grammar.no_parse()
    return ranked[0]


def parse_statement(tokens: TokenStream, lexicon: Lexicon) -> ParseResult:
    return _sentence(tokens, lexicon, Grammar.statements)


def parse_question(tokens: TokenStream, lexicon: Lexicon) -> ParseResult:
    return _sentence(tokens, lexicon, Grammar.questions)


def parse_order(tokens: TokenStream, lexicon: Lexicon) -> ParseResult:
    return _sentence(tokens, lexicon, Grammar.orders)


def parse_exclamation(tokens: TokenStream, lexicon: Lexicon) -> ParseResult:
    return _sentence(tokens, lexicon, Grammar.exclamations)


def parse_simple_sentence(tokens: TokenStream, lexicon: Lexicon) -> ParseResult:
    """A simple statement; a noun clause subject ranks after an ordinary subject"""
    def simple(grammar: Grammar) -> List[Candidate]:
        head = (el("mood", Mood.STATEMENT.value), el("complexity", Complexity.SIMPLE.value))
        return [(1, 0, f, head + f.nodes) for f in grammar.finished(grammar._simple_statement(0), (".",))]
    return _sentence(tokens, lexicon, simple)


# Phrase-level entry points. Each returns the elements of the best analysis
# covering every token.

def _fragment(tokens: TokenStream, lexicon: Lexicon,
              produce: Callable[[Grammar], List[Frag]]) -> Tuple[Grammar, Optional[Frag]]:
    grammar = Grammar(tokens, lexicon)
    frags = grammar.full_span(produce(grammar)) if len(tokens) else []
    return grammar, (_best(frags) if frags else None)


def _nodes(tokens: TokenStream, lexicon: Lexicon, produce: Callable[[Grammar], List[Frag]]) -> Tuple[Element, ...]:
    grammar, best = _fragment(tokens, lexicon, produce)
    if best is None:
        raise grammar.no_parse()
    return best.nodes


def parse_verb_phrase(tokens: TokenStream, lexicon: Lexicon,
                      subject_affixes: Optional[AffixValue] = None) -> Tuple[Element, ...]:
    """
    Finite verb phrase agreeing with the subject affixes.

    Raises:
        UnknownAttachment: the verb was recognized but its frame licenses
            nothing that covers the rest of the input
        NoParse: otherwise
    """
    affixes = subject_affixes or AffixValue()
    grammar, best = _fragment(tokens, lexicon, lambda g: g._vp(0, affixes, "finite", None, None))
    if best is not None:
        return best.nodes
    for group in grammar._groups(0, "finite", None):
        if group.kernel is not None and group.end < grammar.n:
            raise UnknownAttachment(group.kernel.surface)
    raise grammar.no_parse()


def parse_noun_phrase(tokens: TokenStream, lexicon: Lexicon) -> Tuple[Element, ...]:
    return _nodes(tokens, lexicon, lambda g: g._np(0, "any", True))


def parse_relative_clause(tokens: TokenStream, lexicon: Lexicon,
                          head_number: frozenset = frozenset({"sing", "plur"})) -> Tuple[Element, ...]:
    """Relative clause after a head of the given number; empty input is an absent clause"""
    if not len(tokens):
        return ()
    return _nodes(tokens, lexicon, lambda g: g._relative_clause(0, frozenset(head_number)))


def parse_noun_clause(tokens: TokenStream, lexicon: Lexicon) -> Tuple[Element, ...]:
    return _nodes(tokens, lexicon, lambda g: g._noun_clause(0, "object"))


def parse_adjective_phrase(tokens: TokenStream, lexicon: Lexicon, position: str) -> Tuple[Element, ...]:
    """
    Adjective phrase in "attribute" or "predicate" position.

    Raises:
        PositionViolation: an adjective restricted to the other position
        NoParse: otherwise
    """
    if position == "attribute":
        produce: Callable[[Grammar], List[Frag]] = lambda g: [f for f in g._attr_adjs(0) if f.nodes]
        wrong = Category.ADJECTIVE_PRED
    else:
        produce = lambda g: g._pred_adjs(0)
        wrong = Category.ADJECTIVE_ATTR
    grammar, best = _fragment(tokens, lexicon, produce)
    if best is not None:
        return best.nodes
    for token in tokens.tokens:
        entries = lexicon.lookup(token.text)
        if entries and all(e.category == wrong for e in entries):
            raise PositionViolation(token.folded, position)
    raise grammar.no_parse()


def parse_circumstance(tokens: TokenStream, lexicon: Lexicon, position: str) -> Tuple[Element, ...]:
    """One circumstance in "pre", "mid" or "post" position; empty input gives an empty circum"""
    if not len(tokens):
        return (el("circum"),)
    return _nodes(tokens, lexicon, lambda g: g._circum(0, position))


def parse_prep_phrase(tokens: TokenStream, lexicon: Lexicon) -> Tuple[Element, ...]:
    return _nodes(tokens, lexicon, lambda g: g._pp(0))


def parse_predicate(tokens: TokenStream, lexicon: Lexicon) -> Tuple[Element, ...]:
    return _nodes(tokens, lexicon, lambda g: g._predicate(0, None))

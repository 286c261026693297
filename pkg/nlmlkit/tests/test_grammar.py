"""
Tests for the English grammar: expression classification, ranking and the
phrase-level entry points
"""

import time

import pytest

from nlmlkit.src.core.grammar import (
    MAX_RESULTS,
    PHRASE_PENALTY,
    SUBCIRCUM_PENALTY,
    parse,
    parse_adjective_phrase,
    parse_circumstance,
    parse_noun_clause,
    parse_noun_phrase,
    parse_prep_phrase,
    parse_predicate,
    parse_relative_clause,
    parse_simple_sentence,
    parse_statement,
    parse_verb_phrase,
)
from nlmlkit.src.core.nlml import serialize, validate
from nlmlkit.src.core.tokenizer import tokenize
from nlmlkit.src.models.lexicon import AffixValue
from nlmlkit.src.models.nlml import el
from nlmlkit.src.models.parse import SENTENCE_MOODS
from nlmlkit.src.utils.errors import NoParse, PositionViolation, UnknownAttachment

ACTIVE = [
    ("If it rains today, you can not go out, and I can not come.", "statement", "compound complex"),
    ("What will you do if it rains today?", "question", "complex"),
    ("Please do your homework if it rains today.", "order", "complex"),
    ("What a rainy day it is!", "full exclamation", "simple"),
    ("If it rains today, you will not go, and I will not come.", "statement", "compound complex"),
    ("If it rains today, please stay at home, listen to the radio and read the book!", "order", "compound complex"),
    ("Today you come, he goes, and I wait.", "statement", "compound"),
    ("It snows, but I still go out.", "statement", "compound"),
    ("Neither you come, nor do I go.", "statement", "compound"),
    ("What should I do, what can I do, and what must I do?", "question", "compound"),
    ("Please sit down, read the book and then write your paper!", "order", "compound"),
    ("Either live or die!", "order", "compound"),
    ("If you come, I will go.", "statement", "complex"),
    ("I lived whenever she lived.", "statement", "complex"),
    ("What would he do if it rains today?", "question", "complex"),
    ("Please phone me if you have time.", "order", "complex"),
    ("Both you and he come today.", "statement", "simple"),
    ("Neither he nor I come today.", "statement", "simple"),
    ("I don't understand what he is now saying.", "statement", "simple"),
    ("I give him a book written by the famous professor.", "statement", "simple"),
    ("I know the book you gave your girl friend yesterday.", "statement", "simple"),
    ("The man coming today is my best friend.", "statement", "simple"),
    ("The horse runs so fast that others can not catch up with it.", "statement", "simple"),
    ("I see the student do his job carefully.", "statement", "simple"),
    ("He has his car repaired.", "statement", "simple"),
    ("Can you understand what he is saying?", "question", "simple"),
    ("Who is coming to fetch the book?", "question", "simple"),
    ("Whom did you give the book written by the famous professor?", "question", "simple"),
    ("Go to listen to the radio!", "order", "simple"),
    ("What a stupid man he is!", "full exclamation", "simple"),
    ("How beautiful she is!", "full exclamation", "simple"),
    ("I will buy a book tomorrow.", "statement", "simple"),
    ("Which book will you buy?", "question", "simple"),
    ("How terrible that book is!", "full exclamation", "simple"),
    ("Please tell me why you say that!", "order", "simple"),
    ("There is a book on the desk.", "statement", "simple"),
    ("The book you give me today interests me very much.", "statement", "simple"),
    ("Today I know he will come tomorrow.", "statement", "simple"),
]

PASSIVE = [
    ("If it rains today, the desk should be moved into the room, and the window should be closed.",
     "statement", "compound complex"),
    ("Today the car should be repaired, the room should be cleaned, and the clothes should be washed.",
     "statement", "compound"),
    ("The car has been repaired, but the room has not been cleaned.", "statement", "compound"),
    ("Neither the car is repaired, nor is the room cleaned.", "statement", "compound"),
    ("If you come here, the room can be cleaned completely.", "statement", "complex"),
    ("Both the car and the bicycle are repaired by him alone.", "statement", "simple"),
    ("Neither the car nor the bicycle was repaired by him.", "statement", "simple"),
    ("What he is now saying can't be understood by me.", "statement", "simple"),
    ("A book written by the famous professor is given him.", "statement", "simple"),
    ("The student was seen to do his job carefully.", "statement", "simple"),
    ("What should be done, what can be done and what must be done?", "question", "compound"),
    ("What should be done by us if it rains today?", "question", "complex"),
    ("May the car be repaired by him?", "question", "simple"),
    ("Who was seen to do his job carefully?", "question", "simple"),
    ("How can the room be cleaned so completely?", "question", "simple"),
    ("What a good book has been lost by him!", "full exclamation", "simple"),
    ("How completely the room is cleaned!", "full exclamation", "simple"),
]

PHRASES = [
    ("Why?", "circumstances", 10, 0),
    ("Because I have got some money.", "subcircum", 16, SUBCIRCUM_PENALTY),
    ("That one you have read.", "np", 13, PHRASE_PENALTY),
    ("What a pity!", "what terse exclamation", 7, 0),
    ("What about this book?", "about", 6, 0),
    ("How about this book?", "about", 5, 0),
    ("Terrible!", "adj", 14, PHRASE_PENALTY),
    ("What?", "np", 9, 0),
    ("Who?", "np", 9, 0),
    ("How terrible!", "how terse exclamation", 8, 0),
    ("in the morning, at home, certainly.", "circumstances", 11, PHRASE_PENALTY),
    ("that book on the desk.", "np", 12, PHRASE_PENALTY),
    ("ill.", "adj", 15, PHRASE_PENALTY),
]

ALL_SENTENCES = [text for text, _, _ in ACTIVE + PASSIVE]


def tokens(text):
    return tokenize(text)


def has_voice(document):
    return any(element.tag == "voice" and element.text == "passive" for element in document.iter())


class TestSentenceClassification:
    @pytest.mark.parametrize("text,mood,complexity", ACTIVE)
    def test_active_sentences(self, lexicon, text, mood, complexity):
        best = parse(text, lexicon)[0]
        assert best.mood == mood
        assert best.document.child_text("complexity") == complexity
        assert best.penalty == 0

    @pytest.mark.parametrize("text,mood,complexity", PASSIVE)
    def test_passive_sentences(self, lexicon, text, mood, complexity):
        best = parse(text, lexicon)[0]
        assert best.mood == mood
        assert best.document.child_text("complexity") == complexity
        assert has_voice(best.document)

    def test_active_voice_omits_tag(self, lexicon):
        assert not has_voice(parse("I will buy a book tomorrow.", lexicon)[0].document)

    def test_noun_clause_subject_costs_more(self, lexicon):
        best = parse("What he is now saying can't be understood by me.", lexicon)[0]
        assert best.cost == 10


class TestPhraseClassification:
    @pytest.mark.parametrize("text,mood,rule,penalty", PHRASES)
    def test_phrase_readings(self, lexicon, text, mood, rule, penalty):
        best = parse(text, lexicon)[0]
        assert best.mood == mood
        assert best.rule == rule
        assert best.penalty == penalty

    def test_subcircum_keeps_subordinator(self, lexicon):
        best = parse("Because I have got some money.", lexicon)[0]
        assert best.document.child_text("subordinator") == "because"

    def test_punctuation_is_optional(self, lexicon):
        assert parse("Why", lexicon)[0].mood == "circumstances"
        assert parse("I come", lexicon)[0].mood == "statement"


class TestGolden:
    def test_i_come(self, lexicon, golden):
        assert serialize(parse("I come.", lexicon)[0].document) == golden["i_come"]

    def test_compound_complex_listing(self, lexicon, golden):
        text = "If it rains today, you will not go, and I will not come."
        assert serialize(parse(text, lexicon)[0].document) == golden["if_it_rains"]

    def test_unresolved_number_serialized_as_set(self, lexicon):
        nlml = serialize(parse("you will not go", lexicon)[0].document)
        assert "<numb>sing|plur</numb><pers>second</pers>" in nlml


class TestProperties:
    @pytest.mark.parametrize("text", ALL_SENTENCES)
    def test_every_result_validates(self, lexicon, text):
        for result in parse(text, lexicon):
            assert validate(result.document) == []

    @pytest.mark.parametrize("text", ALL_SENTENCES)
    def test_max_matching(self, lexicon, text):
        moods = {result.mood for result in parse(text, lexicon)}
        assert moods <= {m.value for m in SENTENCE_MOODS}

    @pytest.mark.parametrize("text", ALL_SENTENCES)
    def test_decomposition(self, lexicon, text):
        document = parse(text, lexicon)[0].document
        complexity = document.child_text("complexity")
        parts = document.find_all("simple_sentence") + document.find_all("complete_sentence")
        if complexity in ("compound", "compound complex"):
            assert len(parts) >= 2
            assert document.find_all("sentence_connector")
        if complexity in ("complex", "compound complex"):
            subordinators = document.find_all("subordinator")
            assert len(subordinators) == 1
            assert subordinators[0].text in text.lower()

    def test_ranking_order(self, lexicon):
        results = parse("that book on the desk.", lexicon)
        keys = [(r.penalty, -r.probability, r.rule) for r in results]
        assert keys == sorted(keys)
        assert len(results) <= MAX_RESULTS

    def test_results_are_distinct(self, lexicon):
        results = parse("I know the book you gave your girl friend yesterday.", lexicon)
        strings = [serialize(r.document) for r in results]
        assert len(strings) == len(set(strings))

    def test_deterministic(self, lexicon):
        text = "If it rains today, please stay at home, listen to the radio and read the book!"
        first = [serialize(r.document) for r in parse(text, lexicon)]
        second = [serialize(r.document) for r in parse(text, lexicon)]
        assert first == second

    def test_progressive_is_not_a_gerund_predicate(self, lexicon):
        results = parse("I am doing the job.", lexicon)
        verb_phrase = results[0].document.find("verb_phrase")
        assert verb_phrase.child_text("tense") == "present progressive"
        assert verb_phrase.find("direct_object") is not None
        for result in results:
            assert result.document.find("verb_phrase").find("predicate") is None

    def test_long_compound(self, lexicon):
        text = ", ".join(["I come"] * 15) + " and I come."
        result = parse(text, lexicon)[0]
        assert result.document.child_text("complexity") == "compound"
        assert len(result.document.find_all("simple_sentence")) == 16

    def test_corpus_parses_quickly_and_repeatably(self, lexicon):
        corpus = ALL_SENTENCES + [text for text, _, _, _ in PHRASES]
        started = time.perf_counter()
        first = [[serialize(r.document) for r in parse(text, lexicon)] for text in corpus]
        elapsed = time.perf_counter() - started
        second = [[serialize(r.document) for r in parse(text, lexicon)] for text in corpus]
        assert elapsed < 1.0
        assert first == second


class TestLongLists:
    def test_six_coordinated_objects(self, lexicon):
        results = parse("I read the book, the book, the book, the book, the book and the book.", lexicon)
        nouns = [e for r in results for e in r.document.iter() if e.tag == "noun"]
        assert any(len(n.find_all("part")) == 6 for n in nouns)

    def test_seven_clause_compound(self, lexicon):
        result = parse(", ".join(["I come"] * 6) + ", and I come.", lexicon)[0]
        assert len(result.document.find_all("simple_sentence")) == 7
        assert [c.text for c in result.document.find_all("sentence_connector")] == [","] * 5 + ["and"]

    def test_three_leading_circumstances(self, lexicon):
        result = parse("Today, in the morning, at home, I come.", lexicon)[0]
        assert result.mood == "statement"
        assert len(result.document.find_all("circum")) == 3

    def test_four_trailing_circumstances(self, lexicon):
        results = parse("I wait today at home in the morning yesterday.", lexicon)
        counts = [
            len([e for e in r.document.iter() if e.tag == "circum" and e.find("circum_type") is not None])
            for r in results
        ]
        assert max(counts) == 4

    def test_long_verb_phrase_chain(self, lexicon):
        result = parse("I wait, wait, wait, wait, wait and wait.", lexicon)[0]
        verb_phrase = result.document.find("verb_phrase")
        assert len(verb_phrase.find_all("verb_phrase_part")) == 6
        assert [c.text for c in verb_phrase.find_all("verb_phrase_connector")] == [","] * 4 + ["and"]


class TestAgreement:
    @pytest.mark.parametrize("text", [
        "I comes.",
        "He come.",
        "Both you and he comes today.",
        "Neither you nor he come today.",
        "Either he or I comes today.",
        "Either I or he come today.",
    ])
    def test_disagreement_is_no_parse(self, lexicon, text):
        with pytest.raises(NoParse):
            parse(text, lexicon)

    @pytest.mark.parametrize("text", [
        "I come.",
        "He comes.",
        "Both you and he come today.",
        "Neither I nor he comes today.",
        "Either you or he comes today.",
        "Either he or I come today.",
        "Either I or they come today.",
    ])
    def test_agreement_parses(self, lexicon, text):
        assert parse(text, lexicon)[0].mood == "statement"

    @pytest.mark.parametrize("text, numb, pers", [
        ("Neither I nor he comes today.", "sing", "third"),
        ("Either he or you come today.", "sing|plur", "second"),
        ("Either he or I come today.", "sing", "first"),
        ("Both he and I come today.", "plur", "first"),
    ])
    def test_coordinated_subject_affixes(self, lexicon, text, numb, pers):
        noun = parse(text, lexicon)[0].document.find("subject").find("noun")
        assert noun.child_text("numb") == numb
        assert noun.child_text("pers") == pers

    def test_unknown_words(self, lexicon):
        with pytest.raises(NoParse) as info:
            parse("zzzz qqq", lexicon)
        assert info.value.furthest == 0
        assert info.value.token == "zzzz"

    def test_empty_input(self, lexicon):
        with pytest.raises(NoParse):
            parse("", lexicon)


class TestSentenceEntryPoints:
    def test_parse_statement(self, lexicon):
        result = parse_statement(tokens("It snows, but I still go out."), lexicon)
        assert result.document.child_text("complexity") == "compound"
        assert [c.text for c in result.document.find_all("sentence_connector")] == ["but"]
        assert len(result.document.find_all("simple_sentence")) == 2

    def test_parse_statement_rejects_question(self, lexicon):
        with pytest.raises(NoParse):
            parse_statement(tokens("Which book will you buy?"), lexicon)

    def test_parse_simple_sentence(self, lexicon):
        result = parse_simple_sentence(tokens("There is a book on the desk."), lexicon)
        subject = result.document.find("subject")
        assert subject.find("noun").child_text("word") == "there"
        predicate = result.document.find("verb_phrase").find("predicate")
        assert predicate.child_text("predicate_type") == "np"


class TestFragments:
    def test_verb_phrase_with_modal(self, lexicon):
        subject = AffixValue.of(number={"sing"}, person={"first"})
        nodes = parse_verb_phrase(tokens("will not come"), lexicon, subject)
        vp = nodes[0]
        assert vp.child_text("tense") == "modal"
        assert [w.text for w in vp.find_all("verb_word")] == ["will not", "come"]
        assert vp.child_text("kernel_tense") == "infi"

    def test_verb_phrase_progressive(self, lexicon):
        subject = AffixValue.of(number={"sing"}, person={"first"})
        vp = parse_verb_phrase(tokens("am doing the job"), lexicon, subject)[0]
        assert vp.child_text("tense") == "present progressive"
        assert vp.find("direct_object") is not None

    def test_verb_phrase_passive_agent(self, lexicon):
        subject = AffixValue.of(number={"sing"}, person={"third"})
        vp = parse_verb_phrase(tokens("was repaired by him"), lexicon, subject)[0]
        assert vp.child_text("voice") == "passive"
        assert vp.child_text("tense") == "past"
        assert vp.find("prep_phrase").child_text("prep") == "by"

    def test_verb_phrase_unknown_attachment(self, lexicon):
        with pytest.raises(UnknownAttachment) as info:
            parse_verb_phrase(tokens("come the book"), lexicon, AffixValue.of(person={"first"}))
        assert info.value.verb == "come"

    def test_noun_phrase(self, lexicon):
        noun = parse_noun_phrase(tokens("the famous professor"), lexicon)[0]
        assert noun.tag == "noun"

    def test_coordinated_noun_phrase(self, lexicon):
        noun = parse_noun_phrase(tokens("both you and he"), lexicon)[0]
        assert len(noun.find_all("part")) == 2
        assert noun.child_text("numb") == "plur"

    def test_relative_clause(self, lexicon):
        nodes = parse_relative_clause(tokens("you give me today"), lexicon)
        assert nodes[0].tag == "relative_clause"

    def test_absent_relative_clause(self, lexicon):
        assert parse_relative_clause(tokens(""), lexicon) == ()

    def test_noun_clause(self, lexicon):
        nodes = parse_noun_clause(tokens("why you say that"), lexicon)
        assert nodes[0].tag == "noun_clause"

    def test_predicative_adjective(self, lexicon):
        assert parse_adjective_phrase(tokens("ill"), lexicon, "predicate")

    @pytest.mark.parametrize("text,position", [("asleep", "attribute"), ("main", "predicate")])
    def test_adjective_position_violation(self, lexicon, text, position):
        with pytest.raises(PositionViolation) as info:
            parse_adjective_phrase(tokens(text), lexicon, position)
        assert info.value.word == text

    def test_adverb_circumstance(self, lexicon):
        node = parse_circumstance(tokens("today"), lexicon, "post")[0]
        assert node.child_text("circum_type") == "adv"
        assert node.find("adv").child_text("type") == "time"

    def test_empty_circumstance(self, lexicon):
        assert parse_circumstance(tokens(""), lexicon, "post") == (el("circum"),)

    def test_prep_phrase(self, lexicon):
        pp = parse_prep_phrase(tokens("on the desk"), lexicon)[0]
        assert pp.child_text("prep") == "on"
        assert pp.find("noun") is not None

    def test_predicate_types(self, lexicon):
        assert parse_predicate(tokens("ill"), lexicon)[0].child_text("predicate_type") == "adj"
        assert parse_predicate(tokens("on the desk"), lexicon)[0].child_text("predicate_type") == "prep"

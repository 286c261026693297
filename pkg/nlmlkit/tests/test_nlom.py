"""
Tests for the sentence object model: building, answering, transforming and rendering
"""

import pytest

from nlmlkit.src.core.grammar import parse
from nlmlkit.src.core.nlml import deserialize, serialize
from nlmlkit.src.core.nlom import (
    QUERIES,
    answer,
    build_model,
    do_support_form,
    negate,
    render_document,
    render_elements,
    render_text,
    to_document,
    transform_mood,
)
from nlmlkit.src.models.lexicon import AffixValue
from nlmlkit.src.models.parse import Complexity, Mood, Voice
from nlmlkit.src.utils.errors import (
    IndexOutOfRange,
    NotASentence,
    UnsupportedComplexity,
    UnsupportedMood,
)

COMPOUND_COMPLEX = "If it rains today, you will not go, and I will not come."


def model_of(text, lexicon):
    return build_model(parse(text, lexicon)[0].document, lexicon)


class TestBuildModel:
    def test_simple_statement(self, lexicon):
        model = model_of("I come.", lexicon)
        assert model.mood == Mood.STATEMENT
        assert model.complexity == Complexity.SIMPLE
        assert len(model.parts) == 1
        vp = model.parts[0].verb_phrases[0]
        assert vp.words == ("come",)
        assert vp.lemma == "come"
        assert model.parts[0].subject.kernel == "I"

    def test_compound_complex(self, lexicon):
        model = model_of(COMPOUND_COMPLEX, lexicon)
        assert model.subordinate.subordinator == "if"
        assert model.subordinate.leading
        assert model.connectors == ("and",)
        assert len(model.parts) == 2
        assert model.subordinate.clause.verb_phrases[0].lemma == "rain"

    def test_passive_voice(self, lexicon):
        model = model_of("Neither the car nor the bicycle was repaired by him.", lexicon)
        assert model.voice == Voice.PASSIVE
        assert model.parts[0].subject.connectors == ("neither_nor",)

    def test_order_has_no_subject(self, lexicon):
        model = model_of("Please read the book!", lexicon)
        assert model.mood == Mood.ORDER
        assert model.parts[0].subject is None

    def test_subcircum(self, lexicon):
        model = model_of("Because I have got some money.", lexicon)
        assert model.mood == Mood.SUBCIRCUM
        assert model.subordinator == "because"

    def test_phrase_mood_is_not_a_sentence(self, lexicon):
        with pytest.raises(NotASentence) as info:
            model_of("What a pity!", lexicon)
        assert info.value.mood == "what terse exclamation"

    @pytest.mark.parametrize("text", [
        "Which book will you buy?",
        "What a rainy day it is!",
        "How beautiful she is!",
        "Either live or die!",
        "Please sit down, read the book and then write your paper!",
        "What would he do if it rains today?",
        "There is a book on the desk.",
        "I don't understand what he is now saying.",
        "What he is now saying can't be understood by me.",
        "The car has been repaired, but the room has not been cleaned.",
    ])
    def test_total_on_sentences(self, lexicon, text):
        assert model_of(text, lexicon).parts

    def test_to_dict(self, lexicon):
        data = model_of("I will buy a book tomorrow.", lexicon).to_dict()
        assert data["mood"] == "statement"
        assert data["voice"] == "active"
        assert data["parts"][0]["verb_phrases"][0]["words"] == ["will", "buy"]


class TestToDocument:
    def test_golden_round_trip(self, lexicon, golden):
        for name, text in golden.items():
            document = deserialize(text)
            assert to_document(build_model(document, lexicon)) == document, name

    def test_without_lexicon(self, golden):
        document = deserialize(golden["if_it_rains"])
        assert serialize(to_document(build_model(document))) == golden["if_it_rains"]

    @pytest.mark.parametrize("text", ["I come.", COMPOUND_COMPLEX, "Which book will you buy?"])
    def test_render_and_reparse(self, lexicon, text):
        model = model_of(text, lexicon)
        assert model_of(render_text(model), lexicon) == model


class TestRender:
    @pytest.mark.parametrize("text,expected", [
        ("I come.", "I come ."),
        (COMPOUND_COMPLEX, "If it rains today , you will not go , and I will not come ."),
        ("Which book will you buy?", "Which book will you buy ?"),
        ("What a rainy day it is!", "What a rainy day it is !"),
    ])
    def test_render_text(self, lexicon, text, expected):
        assert render_text(model_of(text, lexicon)) == expected

    def test_render_document(self, golden):
        assert render_document(deserialize(golden["i_come"])) == "I come ."

    def test_render_elements(self, lexicon):
        document = parse("the famous professor", lexicon)[0].document
        assert render_elements(document.elements[1:]) == "the famous professor"


class TestAnswer:
    def test_subject(self, lexicon):
        assert answer(model_of("I come.", lexicon), "subject") == "I"

    def test_verb_word_by_part(self, lexicon):
        model = model_of(COMPOUND_COMPLEX, lexicon)
        assert answer(model, "verb_word", 0) == "go"
        assert answer(model, "verb_word", 1) == "come"

    def test_verb_word_of_relative_clause_sentence(self, lexicon):
        model = model_of("The book you give me today interests me very much.", lexicon)
        assert answer(model, "verb_word") == "interests"

    def test_object(self, lexicon):
        assert answer(model_of("I will buy a book tomorrow.", lexicon), "object") == "a book"

    def test_no_object(self, lexicon):
        assert answer(model_of("I come.", lexicon), "object") is None

    def test_order_subject(self, lexicon):
        assert answer(model_of("Please read the book!", lexicon), "subject") is None

    def test_sentence_level_queries(self, lexicon):
        model = model_of(COMPOUND_COMPLEX, lexicon)
        assert answer(model, "mood") == "statement"
        assert answer(model, "complexity") == "compound complex"
        assert answer(model, "subordinator") == "if"
        assert answer(model, "tense", 1) == "modal"

    def test_index_out_of_range(self, lexicon):
        with pytest.raises(IndexOutOfRange) as info:
            answer(model_of("I come.", lexicon), "subject", 3)
        assert info.value.size == 1

    def test_unknown_query(self, lexicon):
        with pytest.raises(ValueError):
            answer(model_of("I come.", lexicon), "colour")

    def test_query_names(self):
        assert "subject" in QUERIES and "verb_word" in QUERIES


class TestDoSupport:
    def test_oracle(self, lexicon, do_support_rows):
        assert len(do_support_rows) == 12
        for tense, numb, pers, form in do_support_rows:
            affixes = AffixValue.of(number={numb}, person={pers})
            assert do_support_form(lexicon, tense, affixes) == form, (tense, numb, pers)


class TestNegate:
    @pytest.mark.parametrize("text,expected", [
        ("I come.", "I do not come ."),
        ("He comes.", "He does not come ."),
        ("They come.", "They do not come ."),
        ("I came.", "I did not come ."),
        ("I will not come.", "I will come ."),
        ("I will come.", "I will not come ."),
    ])
    def test_negate(self, lexicon, text, expected):
        assert render_text(negate(model_of(text, lexicon), lexicon)) == expected

    def test_matches_parsed_negative(self, lexicon):
        negated = negate(model_of("I come.", lexicon), lexicon)
        assert serialize(to_document(negated)) == serialize(parse("I do not come", lexicon)[0].document)

    @pytest.mark.parametrize("text", [
        "I come.", "He comes.", "They come.", "I will not come.", "It snows, but I still go out.",
    ])
    def test_involution(self, lexicon, text):
        model = model_of(text, lexicon)
        assert negate(negate(model, lexicon), lexicon) == model

    def test_keeps_subject_and_tense(self, lexicon):
        model = model_of("I will come.", lexicon)
        negated = negate(model, lexicon)
        assert negated.parts[0].subject == model.parts[0].subject
        assert negated.parts[0].verb_phrases[0].tense == "modal"

    def test_question_unsupported(self, lexicon):
        with pytest.raises(UnsupportedMood):
            negate(model_of("Which book will you buy?", lexicon), lexicon)


class TestTransformMood:
    def test_to_question_uses_do_support(self, lexicon):
        question = transform_mood(model_of("I come.", lexicon), Mood.QUESTION, lexicon)
        assert question.mood == Mood.QUESTION
        assert render_text(question) == "Do I come ?"

    def test_round_trip(self, lexicon):
        model = model_of("I come.", lexicon)
        question = transform_mood(model, Mood.QUESTION, lexicon)
        assert transform_mood(question, Mood.STATEMENT, lexicon) == model

    def test_question_to_statement(self, lexicon):
        model = model_of("Can you understand what he is saying?", lexicon)
        statement = transform_mood(model, Mood.STATEMENT, lexicon)
        assert render_text(statement) == "You can understand what he is saying ."

    def test_same_mood_is_identity(self, lexicon):
        model = model_of("I come.", lexicon)
        assert transform_mood(model, Mood.STATEMENT, lexicon) is model

    def test_wh_question_unsupported(self, lexicon):
        with pytest.raises(UnsupportedMood):
            transform_mood(model_of("Which book will you buy?", lexicon), Mood.STATEMENT, lexicon)

    def test_complex_unsupported(self, lexicon):
        with pytest.raises(UnsupportedComplexity) as info:
            transform_mood(model_of("If you come, I will go.", lexicon), Mood.QUESTION, lexicon)
        assert info.value.complexity == "complex"

    def test_order_unsupported(self, lexicon):
        with pytest.raises(UnsupportedMood):
            transform_mood(model_of("Please read the book!", lexicon), Mood.QUESTION, lexicon)

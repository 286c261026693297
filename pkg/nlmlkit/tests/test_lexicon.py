"""
Tests for lexicon loading, lookup and affix unification
"""

from itertools import combinations, product

import pytest

from nlmlkit.src.core.lexicon import Lexicon, load_lexicon, parse_lexicon, unify, try_unify
from nlmlkit.src.models.lexicon import DIMENSIONS, AffixValue, Category, Transitivity
from nlmlkit.src.utils.errors import DuplicateEntry, MalformedLine, UnificationFailure


def subsets(values, largest=None):
    """Non-empty subsets of a dimension's values, optionally capped in size"""
    largest = largest or len(values)
    return [frozenset(c) for size in range(1, largest + 1) for c in combinations(values, size)]


def lattice(dimension):
    # tense: subsets of at most two values
    largest = 2 if dimension == "tense" else None
    return [AffixValue.of(**{dimension: s}) for s in subsets(DIMENSIONS[dimension], largest)]


def meet(a, b):
    if a is None or b is None:
        return None
    return try_unify(a, b)


class TestUnify:
    def test_intersects_every_dimension(self):
        you = AffixValue.of(number={"sing", "plur"}, person={"second"})
        modal = AffixValue()
        merged = unify(you, modal)
        assert merged.number == frozenset({"sing", "plur"})
        assert merged.person == frozenset({"second"})
        assert merged.case == frozenset({"nom", "dat"})

    def test_narrows_unresolved_number(self):
        you = AffixValue.of(number={"sing", "plur"}, person={"second"})
        merged = unify(you, AffixValue.of(number={"sing"}))
        assert merged.serialize("number") == "sing"

    def test_failure_names_dimension(self):
        with pytest.raises(UnificationFailure) as info:
            unify(AffixValue.of(person={"first"}), AffixValue.of(person={"third"}))
        assert info.value.dimension == "person"

    def test_try_unify_returns_none(self):
        assert try_unify(AffixValue.of(number={"sing"}), AffixValue.of(number={"plur"})) is None

    def test_serialize_uses_canonical_order(self):
        assert AffixValue.of(number={"plur", "sing"}).serialize("number") == "sing|plur"


class TestUnifyLaws:
    @pytest.mark.parametrize("dimension", sorted(DIMENSIONS))
    def test_commutative_and_idempotent(self, dimension):
        values = lattice(dimension)
        for a in values:
            assert unify(a, a) == a
            for b in values:
                assert try_unify(a, b) == try_unify(b, a)

    @pytest.mark.parametrize("dimension", sorted(DIMENSIONS))
    def test_associative(self, dimension):
        values = lattice(dimension)
        for a, b, c in product(values, repeat=3):
            assert meet(meet(a, b), c) == meet(a, meet(b, c))

    def test_laws_across_agreement_dimensions(self):
        grid = product(subsets(DIMENSIONS["number"]), subsets(DIMENSIONS["person"]), subsets(DIMENSIONS["case"]))
        values = [AffixValue.of(number=n, person=p, case=c) for n, p, c in grid]
        for a, b in product(values, repeat=2):
            assert try_unify(a, b) == try_unify(b, a)
            merged = try_unify(a, b)
            assert merged is None or try_unify(merged, merged) == merged
        for a, b, c in product(values[::7], repeat=3):
            assert meet(meet(a, b), c) == meet(a, meet(b, c))

    def test_neutral_element(self):
        comes = AffixValue.of(number={"sing"}, person={"third"}, tense={"present"})
        assert unify(comes, AffixValue()) == comes


class TestParseLexicon:
    def test_minimal_line(self):
        lexicon = parse_lexicon("desk\tdesk\tnoun\n")
        entry = lexicon.lookup("desk")[0]
        assert entry.category == Category.NOUN
        assert entry.probability == 1.0
        assert entry.frame is None

    def test_full_line(self):
        text = "comes\tcome\tverb\tnumb=sing;pers=third;tense=present\ttransitivity=intr\t0.5\t-\n"
        entry = parse_lexicon(text).lookup("comes")[0]
        assert entry.affixes.number == frozenset({"sing"})
        assert entry.affixes.tense == frozenset({"present"})
        assert entry.frame.transitivity == Transitivity.INTR
        assert entry.probability == 0.5
        assert entry.kind is None

    def test_comments_and_blank_lines_ignored(self):
        lexicon = parse_lexicon("# words\n\nbook\tbook\tnoun\n")
        assert len(lexicon) == 1

    def test_surface_is_case_folded(self):
        lexicon = parse_lexicon("Monday\tMonday\tnoun\n")
        assert lexicon.lookup("monday")
        assert lexicon.lookup("MONDAY")

    def test_bitrans_defaults_to_both_object_kinds(self):
        entry = parse_lexicon("give\tgive\tverb\t-\ttransitivity=bitrans\n").lookup("give")[0]
        assert entry.frame.licenses("bitransitive")
        assert entry.frame.licenses("transitive")

    def test_be_defaults_to_link(self):
        entry = parse_lexicon("is\tbe\tbe\ttense=present\n").lookup("is")[0]
        assert entry.frame.transitivity == Transitivity.LINK
        assert entry.frame.licenses("link_predicate")

    def test_explicit_particles_and_attachments(self):
        line = "catch\tcatch\tverb\t-\ttransitivity=trans;particles=up|with;attach=transitive|particle_prep\n"
        frame = parse_lexicon(line).lookup("catch")[0].frame
        assert frame.particles == frozenset({"up", "with"})
        assert frame.attachments == frozenset({"transitive", "particle_prep"})

    @pytest.mark.parametrize("line", [
        "book\tbook",
        "book\tbook\tgerund",
        "book\tbook\tnoun\tcolour=red",
        "book\tbook\tnoun\tnumb=dual",
        "book\tbook\tnoun\t-\ttransitivity=trans",
        "come\tcome\tverb\t-\ttransitivity=sometimes",
        "come\tcome\tverb\t-\tattach=teleport",
        "book\tbook\tnoun\t-\t-\tlikely",
        "book\tbook\tnoun\t-\t-\t1.5",
        "\tbook\tnoun",
    ])
    def test_malformed_lines(self, line):
        with pytest.raises(MalformedLine) as info:
            parse_lexicon("# header\n" + line + "\n")
        assert info.value.line_number == 2

    def test_duplicate_entry(self):
        text = "book\tbook\tnoun\tnumb=sing\nbook\tbook\tnoun\tnumb=sing\n"
        with pytest.raises(DuplicateEntry) as info:
            parse_lexicon(text)
        assert info.value.line_number == 2

    def test_homographs_are_not_duplicates(self):
        lexicon = parse_lexicon("book\tbook\tnoun\nbook\tbook\tverb\ttense=infinitive\n")
        assert [e.category for e in lexicon.lookup("book")] == [Category.NOUN, Category.VERB]


class TestDemoLexicon:
    def test_loads(self, lexicon):
        assert isinstance(lexicon, Lexicon)
        assert len(lexicon) > 200

    def test_unknown_word(self, lexicon):
        assert lexicon.lookup("zzzz") == []

    def test_lookup_is_case_insensitive(self, lexicon):
        assert lexicon.lookup("Come") == lexicon.lookup("come")

    def test_multi_word_surface_longest_first(self, lexicon):
        found = lexicon.lookup_at(["my", "girl", "friend"], 1)
        entry, span = found[0]
        assert entry.surface == "girl friend"
        assert span == 2

    def test_forms_of_do(self, lexicon):
        surfaces = {e.surface for e in lexicon.forms("do", Category.VERB, "present")}
        assert {"do", "does", "don't", "doesn't"} <= surfaces
        assert "did" not in surfaces

    def test_negative_contractions(self, lexicon):
        assert all(e.negative for e in lexicon.lookup("can't"))
        assert not any(e.negative for e in lexicon.lookup("can"))

    def test_lemma_of(self, lexicon):
        assert lexicon.lemma_of("comes") == "come"
        assert lexicon.lemma_of("did") == "do"
        assert lexicon.lemma_of("desk") == "desk"

    def test_degree_adverbs(self, lexicon):
        kinds = {e.kind for e in lexicon.lookup("very") if e.category == Category.ADVERB}
        assert kinds == {"degree"}

    def test_predicative_adjective(self, lexicon):
        entry = lexicon.lookup("asleep")[0]
        assert entry.category == Category.ADJECTIVE_PRED
        assert entry.affixes.serialize("grade") == "predicative"

    def test_entry_to_dict(self, lexicon):
        data = lexicon.lookup("comes")[0].to_dict()
        assert data["lemma"] == "come"
        assert data["affixes"]["number"] == "sing"
        assert data["frame"]["transitivity"] == "intr"

    def test_subject_agreement_from_lexicon(self, lexicon):
        i = lexicon.lookup("i")[0].affixes
        assert all(try_unify(i, e.affixes) is None for e in lexicon.lookup("comes"))
        assert any(try_unify(i, e.affixes) is not None for e in lexicon.lookup("come"))

    def test_load_is_deterministic(self, lexicon_path):
        first, second = load_lexicon(lexicon_path), load_lexicon(lexicon_path)
        assert first == second
        assert [e.key for e in first.entries] == [e.key for e in second.entries]
        with open(lexicon_path, encoding="utf-8") as handle:
            assert parse_lexicon(handle.read()) == first

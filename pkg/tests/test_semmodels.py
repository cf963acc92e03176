import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hybridsumm.exceptions import ResourceError
from hybridsumm.lexicon import NOUN, SentenceEmbeddingStore, WordVectorTable, parse_lexicon
from hybridsumm.matching import Matching
from hybridsumm.preprocess import Sentence, Token, preprocess_document
from hybridsumm.semmodels import (
    SenseAssignment,
    dice_from_matching,
    disambiguate_sentence,
    embedding_similarity_matrix,
    glove_sentence_vector,
    glove_similarity_matrix,
    lesk_disambiguate,
    pair_similarity_matrix,
    synset_path_similarity,
    wordnet_sentence_similarity,
    wordnet_similarity_matrix,
)

import oracles

BANK_LEXICON = parse_lexicon(
    'SYN bank.n.01 n lemmas=bank gloss="an institution that accepts money deposits"\n'
    'SYN bank.n.02 n lemmas=bank gloss="sloping land beside a river" ex="water rose over the bank"\n'
    'SYN river.n.01 n lemmas=river gloss="a large stream of water"\n'
    'SYN run.v.01 v lemmas=run gloss="move fast"\n'
)


def noun(lemma):
    return Token(lemma, lemma, lemma, lemma, NOUN)


def sentence(text, lexicon, doc_id="d"):
    return preprocess_document(text, doc_id, lexicon).sentences[0]


class TestLesk:
    def test_single_sense(self, toy_lexicon):
        assert lesk_disambiguate(noun("dog"), [], toy_lexicon) == "dog.n.01"

    def test_overlap_wins(self):
        assert lesk_disambiguate(noun("bank"), ["river", "water"], BANK_LEXICON) == "bank.n.02"

    def test_zero_overlap_first_sense(self):
        assert lesk_disambiguate(noun("bank"), ["zebra"], BANK_LEXICON) == "bank.n.01"

    def test_tie_first_sense(self):
        assert lesk_disambiguate(noun("bank"), ["money", "river"], BANK_LEXICON) == "bank.n.01"

    def test_oov(self, toy_lexicon):
        assert lesk_disambiguate(noun("blorp"), ["cat"], toy_lexicon) is None

    def test_sentence_context(self):
        s = sentence("The bank of the river flooded with water.", BANK_LEXICON)
        a = disambiguate_sentence(s, BANK_LEXICON)
        senses = dict(zip((t.lemma for t in a.tokens), a.senses))
        assert senses["bank"] == "bank.n.02"
        assert senses["river"] == "river.n.01"

    def test_assigned_senses_list_the_lemma(self, mini_lexicon, mini_docs):
        for doc in mini_docs[:4]:
            for s in doc.sentences:
                a = disambiguate_sentence(s, mini_lexicon)
                for tok, sid in zip(a.tokens, a.senses):
                    if sid is not None:
                        assert tok.lemma in mini_lexicon.synsets[sid].lemmas


class TestPathSimilarity:
    def test_identity(self, toy_lexicon):
        assert synset_path_similarity("cat.n.01", "cat.n.01", toy_lexicon) == 1.0

    def test_disconnected(self):
        assert synset_path_similarity("bank.n.01", "run.v.01", BANK_LEXICON) == 0.0

    def test_cat_dog(self, toy_lexicon):
        assert synset_path_similarity("cat.n.01", "dog.n.01", toy_lexicon) == pytest.approx(0.2, abs=1e-15)

    def test_parent_child(self, toy_lexicon):
        assert synset_path_similarity("cat.n.01", "feline.n.01", toy_lexicon) == 0.5

    def test_all_pairs_match_graph_oracle(self, toy_lexicon):
        ids = sorted(toy_lexicon.synsets)
        for a, b in itertools.product(ids, ids):
            got = synset_path_similarity(a, b, toy_lexicon)
            assert got == pytest.approx(oracles.path_similarity(toy_lexicon, a, b), abs=1e-15)
            assert got == synset_path_similarity(b, a, toy_lexicon)
            assert 0 <= got <= 1
            assert (got == 1.0) == (a == b)

    def test_mini_lexicon_sample_matches_oracle(self, mini_lexicon):
        ids = sorted(mini_lexicon.synsets)[::17]
        for a, b in itertools.combinations(ids, 2):
            assert synset_path_similarity(a, b, mini_lexicon) == pytest.approx(
                oracles.path_similarity(mini_lexicon, a, b), abs=1e-15
            )

    def test_unknown_synset(self, toy_lexicon):
        with pytest.raises(KeyError):
            synset_path_similarity("cat.n.01", "unicorn.n.01", toy_lexicon)


def assignment(*senses):
    return SenseAssignment(tuple(noun(s.split(".")[0] if s else "x") for s in senses), tuple(senses))


class TestPairMatrix:
    def test_identical_sequences(self, toy_lexicon):
        a = assignment("cat.n.01", "dog.n.01", "eagle.n.01")
        np.testing.assert_array_equal(np.diag(pair_similarity_matrix(a, a, toy_lexicon).values), [1, 1, 1])

    def test_unassigned(self, toy_lexicon):
        a = assignment(None, None)
        assert not pair_similarity_matrix(a, a, toy_lexicon).values.any()

    def test_two_by_three(self, toy_lexicon):
        a = assignment("cat.n.01", None)
        b = assignment("dog.n.01", "feline.n.01", "animal.n.01")
        s = pair_similarity_matrix(a, b, toy_lexicon).values
        assert s.shape == (2, 3)
        for i, si in enumerate(a.senses):
            for j, sj in enumerate(b.senses):
                expected = oracles.path_similarity(toy_lexicon, si, sj) if si else 0.0
                assert s[i, j] == pytest.approx(expected, abs=1e-15)


class TestWordNetSimilarity:
    def test_identical_sentences_half(self, toy_lexicon):
        s = sentence("Cat dog lion.", toy_lexicon)
        assert wordnet_sentence_similarity(s, s, toy_lexicon) == 0.5
        assert wordnet_sentence_similarity(s, s, toy_lexicon, dice_classic=True) == 1.0

    def test_no_qualifying_match(self, toy_lexicon):
        a = sentence("Cat lion.", toy_lexicon)
        b = sentence("Eagle sparrow.", toy_lexicon)
        assert wordnet_sentence_similarity(a, b, toy_lexicon) == 0.0

    def test_one_of_five(self, toy_lexicon):
        a = sentence("Cat dog.", toy_lexicon)
        b = sentence("Cat eagle sparrow.", toy_lexicon)
        assert wordnet_sentence_similarity(a, b, toy_lexicon) == pytest.approx(0.2, abs=1e-15)

    def test_threshold_inclusive(self, toy_lexicon):
        a = sentence("Cat.", toy_lexicon)
        b = sentence("Feline.", toy_lexicon)
        assert wordnet_sentence_similarity(a, b, toy_lexicon) == 0.5
        assert wordnet_sentence_similarity(a, b, toy_lexicon, threshold=0.6) == 0.0

    def test_empty_content(self, toy_lexicon):
        s = sentence("It is and was.", toy_lexicon)
        assert wordnet_sentence_similarity(s, s, toy_lexicon) == 0.0

    def test_dice_formula(self):
        m = Matching(((0, 0, 0.9), (1, 2, 0.4)), 1.3)
        assert dice_from_matching(m, 2, 3) == pytest.approx(0.2)
        assert dice_from_matching(m, 2, 3, dice_classic=True) == pytest.approx(0.4)
        assert dice_from_matching(m, 0, 0) == 0.0

    def test_three_sentence_matrix(self, toy_lexicon):
        doc = preprocess_document("Cat dog. Cat lion. Eagle.", "d", toy_lexicon)
        sim = wordnet_similarity_matrix(doc, toy_lexicon).values
        # (0,1): cat-cat 1.0 and dog-lion 0.2 -> one match >= 0.5 over 2 + 2
        np.testing.assert_allclose(sim, [[1, 0.25, 0], [0.25, 1, 0], [0, 0, 1]], atol=1e-15)

    def test_single_sentence(self, toy_lexicon):
        doc = preprocess_document("Cat dog.", "d", toy_lexicon)
        np.testing.assert_array_equal(wordnet_similarity_matrix(doc, toy_lexicon).values, [[1.0]])

    def test_empty_content_zero_row(self, toy_lexicon):
        doc = preprocess_document("Cat dog. It is. Cat lion.", "d", toy_lexicon)
        sim = wordnet_similarity_matrix(doc, toy_lexicon).values
        assert not sim[1].any() and not sim[:, 1].any()

    def test_symmetric_on_corpus(self, mini_lexicon, mini_docs):
        for doc in mini_docs[:3]:
            sim = wordnet_similarity_matrix(doc, mini_lexicon).values
            assert np.array_equal(sim, sim.T)


VEC = WordVectorTable(3, {"cat": np.array([1.0, 0.0, 0.0]), "dog": np.array([0.0, 1.0, 0.0]),
                          "lion": np.array([1.0, 1.0, 0.0])})


class TestGlove:
    def test_one_word(self):
        s = preprocess_document("Cat.", "d").sentences[0]
        np.testing.assert_array_equal(glove_sentence_vector(s, VEC).values, [1, 0, 0])

    def test_repeated_word(self):
        s = preprocess_document("Cat cat.", "d").sentences[0]
        np.testing.assert_array_equal(glove_sentence_vector(s, VEC).values, [1, 0, 0])

    def test_frequency_weighting(self):
        s = preprocess_document("Cat cat dog zebra.", "d").sentences[0]
        np.testing.assert_allclose(glove_sentence_vector(s, VEC).values, [2 / 3, 1 / 3, 0])

    def test_all_oov(self):
        s = preprocess_document("Zebra yak.", "d").sentences[0]
        assert not glove_sentence_vector(s, VEC).values.any()

    @given(st.permutations(["cat", "dog", "lion", "cat", "zebra"]))
    def test_order_invariant(self, words):
        s = preprocess_document(" ".join(words) + ".", "d").sentences[0]
        np.testing.assert_allclose(glove_sentence_vector(s, VEC).values, [3 / 4, 2 / 4, 0], atol=1e-15)

    def test_matrix(self):
        doc = preprocess_document("Cat. Cat. Dog lion. Zebra.", "d")
        sim = glove_similarity_matrix(doc, VEC).values
        assert sim[0, 1] == pytest.approx(1.0)
        assert sim[0, 3] == 0.0 and sim[3, 3] == 0.0
        assert sim[0, 2] == pytest.approx(oracles.cosine([1, 0, 0], [0.5, 1, 0]), abs=1e-8)

    def test_matrix_matches_oracle_on_corpus(self, full_resources, mini_docs):
        table = full_resources.vectors
        for doc in mini_docs[:3]:
            vecs = [glove_sentence_vector(s, table).values for s in doc.sentences]
            sim = glove_similarity_matrix(doc, table).values
            for i, j in itertools.combinations(range(len(vecs)), 2):
                expected = min(1.0, max(0.0, oracles.cosine(vecs[i], vecs[j])))
                assert sim[i, j] == pytest.approx(expected, abs=1e-8)


class TestEmbedding:
    def doc(self):
        return preprocess_document("One. Two. Three.", "d1")

    def test_identical_and_orthogonal(self):
        store = SentenceEmbeddingStore(2, {("d1", 0): np.array([1.0, 0.0]), ("d1", 1): np.array([2.0, 0.0]),
                                           ("d1", 2): np.array([0.0, 3.0])})
        sim = embedding_similarity_matrix(self.doc(), store).values
        assert sim[0, 1] == pytest.approx(1.0)
        assert sim[0, 2] == 0.0

    def test_missing_row_named(self):
        store = SentenceEmbeddingStore(2, {("d1", 0): np.array([1.0, 0.0])})
        with pytest.raises(ResourceError, match=r"\(d1, 1\)"):
            embedding_similarity_matrix(self.doc(), store)

    def test_negative_cosine_clamped(self):
        store = SentenceEmbeddingStore(1, {("d1", 0): np.array([1.0]), ("d1", 1): np.array([-1.0]),
                                           ("d1", 2): np.array([1.0])})
        assert embedding_similarity_matrix(self.doc(), store).values[0, 1] == 0.0

    def test_corpus_matches_oracle(self, full_resources, mini_docs):
        store = full_resources.embeddings
        doc = mini_docs[0]
        sim = embedding_similarity_matrix(doc, store).values
        for i, j in itertools.combinations(range(len(doc.sentences)), 2):
            expected = max(0.0, oracles.cosine(store.get(doc.id, i), store.get(doc.id, j)))
            assert sim[i, j] == pytest.approx(expected, abs=1e-8)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from(["cat", "dog", "lion", "tiger", "wolf", "fox", "eagle", "sparrow", "bird",
                                 "feline", "canine", "animal", "zebra"]), min_size=1, max_size=5),
       st.lists(st.sampled_from(["cat", "dog", "lion", "eagle", "canine", "zebra"]), min_size=1, max_size=5))
def test_wordnet_similarity_symmetric_and_bounded(toy_lexicon, a, b):
    sa = Sentence(0, " ".join(a), tuple(preprocess_document(" ".join(a) + ".", "x", toy_lexicon).sentences[0].tokens))
    sb = Sentence(1, " ".join(b), tuple(preprocess_document(" ".join(b) + ".", "x", toy_lexicon).sentences[0].tokens))
    ab = wordnet_sentence_similarity(sa, sb, toy_lexicon)
    assert ab == wordnet_sentence_similarity(sb, sa, toy_lexicon)
    assert 0 <= ab <= 0.5

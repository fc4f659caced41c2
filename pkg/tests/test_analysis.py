from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dgcipher import (
    ALPHABET,
    LOWERCASE,
    EmptyText,
    FrequencyTable,
    IndexMode,
    TooShort,
    atbash,
    build_reference_table,
    chi_squared_distance,
    crack_shift,
    example_keyset,
    flatness_report,
    letter_frequencies,
    rank_match_attack,
    shift_encrypt,
    to_lower_tr,
    to_upper_tr,
)

FREQ_SENTENCE = "Akif kasaba gitti ve et aldı."

lettered_texts = st.text(
    alphabet=st.sampled_from(ALPHABET + LOWERCASE + " ,.!"), max_size=200
).filter(lambda s: any(c in ALPHABET + LOWERCASE for c in s))


class TestLetterFrequencies:
    def test_counts_and_total(self):
        table = letter_frequencies(FREQ_SENTENCE)
        assert table.total_letters == 23
        assert table.counts["A"] == 5
        assert table.frequency("A") == 5 / 23

    def test_dotless_i_is_not_a(self):
        table = letter_frequencies("aldı")
        assert table.counts["I"] == 1
        assert table.counts["A"] == 1

    def test_case_folds_together(self):
        table = letter_frequencies("AaBab")
        assert table.counts["A"] == 3
        assert table.counts["B"] == 2

    def test_every_letter_has_an_entry(self):
        table = letter_frequencies("merhaba")
        assert set(table.counts) == set(ALPHABET)
        assert table.counts["J"] == 0

    def test_empty_text(self):
        with pytest.raises(EmptyText):
            letter_frequencies("")
        with pytest.raises(EmptyText):
            letter_frequencies("123 ?!")

    def test_doubling_keeps_frequencies_exactly(self):
        once = letter_frequencies(FREQ_SENTENCE)
        twice = letter_frequencies(FREQ_SENTENCE + "\n" + FREQ_SENTENCE)
        assert twice.total_letters == 2 * once.total_letters
        assert twice.frequencies == once.frequencies

    @given(lettered_texts)
    def test_frequencies_sum_to_one(self, text: str):
        table = letter_frequencies(text)
        assert sum(table.frequencies.values()) == pytest.approx(1.0, abs=1e-9)

    @given(lettered_texts)
    def test_substitution_permutes_the_count_multiset(self, text: str):
        plain = letter_frequencies(text)
        mixed = letter_frequencies(atbash(text))
        assert sorted(plain.counts.values()) == sorted(mixed.counts.values())


class TestBuildReferenceTable:
    def test_plain_string_is_one_chunk(self, corpus_text: str):
        assert build_reference_table(corpus_text) == build_reference_table([corpus_text])

    def test_chunking_is_invisible(self, corpus_text: str):
        pieces = [corpus_text[i : i + 997] for i in range(0, len(corpus_text), 997)]
        assert build_reference_table(pieces) == build_reference_table(corpus_text)

    def test_corpus_is_large_and_complete(self, reference: FrequencyTable):
        assert reference.total_letters >= 5000
        assert all(reference.counts[letter] > 0 for letter in ALPHABET)

    def test_corpus_top_letter(self, reference: FrequencyTable):
        assert reference.ranked()[0] == "A"

    def test_top_letter_is_stable_across_halves(self, corpus_text: str):
        half = len(corpus_text) // 2
        first = letter_frequencies(corpus_text[:half])
        second = letter_frequencies(corpus_text[half:])
        assert first.ranked()[0] == second.ranked()[0] == "A"


class TestRanking:
    def test_ties_break_in_alphabet_order(self):
        table = letter_frequencies("ba")
        assert table.ranked()[:2] == ["A", "B"]
        assert table.ranked()[2] == "C"

    def test_rank_match_recovers_identity_on_the_corpus(
        self, corpus_text: str, reference: FrequencyTable
    ):
        guess = rank_match_attack(corpus_text, reference)
        assert guess.apply(corpus_text) == corpus_text

    def test_rank_match_inverts_atbash_on_the_corpus(
        self, corpus_text: str, reference: FrequencyTable
    ):
        ciphertext = atbash(corpus_text)
        recovered = rank_match_attack(ciphertext, reference).apply(ciphertext)
        hits = sum(1 for got, want in zip(recovered, corpus_text) if got == want)
        assert hits / len(corpus_text) > 0.95

    def test_apply_keeps_case_and_passthrough(self, reference: FrequencyTable):
        guess = rank_match_attack("aBc!", reference)
        rewritten = guess.apply("aBc!")
        assert rewritten[3] == "!"
        assert rewritten[0] == to_lower_tr(rewritten[0])
        assert rewritten[1] == to_upper_tr(rewritten[1])


class TestChiSquared:
    def test_identical_tables_score_zero(self, reference: FrequencyTable):
        assert chi_squared_distance(reference, reference) == 0.0

    def test_asymmetric(self):
        a = letter_frequencies("AAAB")
        b = letter_frequencies("AABB")
        assert chi_squared_distance(a, b) != chi_squared_distance(b, a)

    def test_zero_expected_is_floored_not_infinite(self):
        observed = letter_frequencies("AB")
        expected = letter_frequencies("A")
        distance = chi_squared_distance(observed, expected)
        assert distance == pytest.approx(0.5**2 / 1e-6 + 0.5**2 / 1.0)


class TestCrackShift:
    def test_recovers_every_shift(self, corpus_text: str, reference: FrequencyTable):
        sample = corpus_text[:800]
        for k in (0, 1, 13, 28):
            guess = crack_shift(shift_encrypt(sample, k), reference)
            assert guess.shift == k
            assert not guess.low_confidence

    def test_distances_cover_all_shifts(self, corpus_text: str, reference: FrequencyTable):
        guess = crack_shift(corpus_text[:500], reference)
        assert len(guess.distances) == 29
        assert guess.distances[guess.shift] == min(guess.distances)

    def test_short_text_is_flagged(self, reference: FrequencyTable):
        guess = crack_shift("Kısa metin", reference, min_letters=100)
        assert guess.low_confidence

    def test_min_letters_is_tunable(self, reference: FrequencyTable):
        guess = crack_shift("Kısa metin", reference, min_letters=5)
        assert not guess.low_confidence

    def test_uniform_text_ties_to_smallest_shift(self, reference: FrequencyTable):
        guess = crack_shift(ALPHABET, reference)
        assert guess.shift == 0
        assert guess.distances == tuple([guess.distances[0]] * 29)

    def test_empty(self, reference: FrequencyTable):
        with pytest.raises(EmptyText):
            crack_shift("?!", reference)


class TestFlatnessReport:
    def test_requires_enough_letters(self, reference: FrequencyTable):
        with pytest.raises(TooShort):
            flatness_report("Az harf", example_keyset(), reference, min_letters=1000)

    def test_cascade_flattens_rank_matching(
        self, corpus_text: str, reference: FrequencyTable
    ):
        report = flatness_report(corpus_text, example_keyset(), reference)
        assert report.total_letters >= 5000
        assert report.shift_k == 3
        assert report.index_mode is IndexMode.ALL_CHARS
        assert report.cascade_accuracy < report.shift_accuracy

    def test_tables_agree_with_direct_counts(
        self, corpus_text: str, reference: FrequencyTable
    ):
        report = flatness_report(corpus_text, example_keyset(), reference)
        assert report.plain_table == letter_frequencies(corpus_text)
        assert report.shift_table == letter_frequencies(shift_encrypt(corpus_text, 3))

    def test_render_text(self, corpus_text: str, reference: FrequencyTable):
        report = flatness_report(corpus_text, example_keyset(), reference)
        text = report.render_text()
        assert "rank-match accuracy" in text
        assert text.count("\n") == 29 + 10

    def test_render_records(self, corpus_text: str, reference: FrequencyTable):
        report = flatness_report(corpus_text, example_keyset(), reference)
        lines = report.render_records().splitlines()
        assert len(lines) == 3 * 29 + 4
        for line in lines[: 3 * 29]:
            name, letter, count, freq = line.split("\t")
            assert name in {"plain", "shift", "cascade"}
            assert letter in ALPHABET
            int(count)
            float(freq)

    def test_letters_only_mode_also_flattens(
        self, corpus_text: str, reference: FrequencyTable
    ):
        report = flatness_report(
            corpus_text, example_keyset(), reference, mode=IndexMode.LETTERS_ONLY
        )
        assert report.index_mode is IndexMode.LETTERS_ONLY
        assert report.cascade_accuracy < report.shift_accuracy

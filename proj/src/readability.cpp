#include "mgtd/readability.hpp"

#include "mgtd/util.hpp"

#include <string>

namespace mgtd {

namespace {

bool is_ascii_vowel(char32_t c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

// ASCII letters only; other letters count as consonants for syllable purposes.
std::size_t syllables_from_cps(const std::u32string& letters) {
    if (letters.empty()) return 1;
    std::size_t groups = 0;
    bool in_group = false;
    for (char32_t c : letters) {
        bool vowel = is_ascii_vowel(c);
        if (vowel && !in_group) ++groups;
        in_group = vowel;
    }
    const std::size_t n = letters.size();
    if (n >= 2 && letters[n - 1] == 'e' && !is_ascii_vowel(letters[n - 2])) {
        // Trailing silent e, except the syllabic consonant+"le" ending.
        bool syllabic_le = letters[n - 2] == 'l' && n >= 3 && !is_ascii_vowel(letters[n - 3]);
        if (!syllabic_le && groups > 0) --groups;
    }
    return groups == 0 ? 1 : groups;
}

} // namespace

std::size_t count_syllables(std::string_view word) {
    std::u32string cps = utf8_decode(word);
    std::u32string letters;
    letters.reserve(cps.size());
    for (char32_t cp : cps) {
        char32_t lower = to_lower_cp(cp);
        if (is_letter_cp(lower)) letters.push_back(lower);
    }
    return syllables_from_cps(letters);
}

std::size_t count_sentences(std::string_view text) {
    std::u32string cps = utf8_decode(text);
    std::size_t sentences = 0;
    bool any_word = false;
    bool segment_has_word = false;
    for (char32_t cp : cps) {
        if (cp == '.' || cp == '!' || cp == '?') {
            if (segment_has_word) ++sentences;
            segment_has_word = false;
        } else if (is_word_cp(cp)) {
            segment_has_word = true;
            any_word = true;
        }
    }
    if (segment_has_word) ++sentences;
    if (any_word && sentences == 0) sentences = 1;
    return sentences;
}

double gunning_fog(std::size_t words, std::size_t sentences, std::size_t complex_words) {
    if (words == 0) return 0.0;
    double w = static_cast<double>(words);
    double s = static_cast<double>(sentences == 0 ? 1 : sentences);
    return 0.4 * (w / s + 100.0 * static_cast<double>(complex_words) / w);
}

double flesch_reading_ease(std::size_t words, std::size_t sentences, std::size_t syllables) {
    if (words == 0) return 0.0;
    double w = static_cast<double>(words);
    double s = static_cast<double>(sentences == 0 ? 1 : sentences);
    return 206.835 - 1.015 * (w / s) - 84.6 * (static_cast<double>(syllables) / w);
}

ReadabilityStats analyze(std::string_view text) {
    ReadabilityStats stats;
    for (const std::string& token : split_whitespace(text)) {
        std::u32string cps = utf8_decode(token);
        bool has_word_char = false;
        std::u32string letters;
        for (char32_t cp : cps) {
            char32_t lower = to_lower_cp(cp);
            if (is_word_cp(lower)) has_word_char = true;
            if (is_letter_cp(lower)) letters.push_back(lower);
        }
        if (!has_word_char) continue;
        ++stats.words;
        std::size_t syl = syllables_from_cps(letters);
        stats.syllables += syl;
        if (syl >= 3) ++stats.complex_words;
    }
    stats.sentences = count_sentences(text);
    stats.gunning_fog = gunning_fog(stats.words, stats.sentences, stats.complex_words);
    stats.flesch = flesch_reading_ease(stats.words, stats.sentences, stats.syllables);
    return stats;
}

} // namespace mgtd

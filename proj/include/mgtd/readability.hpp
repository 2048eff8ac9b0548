#pragma once

#include <cstddef>
#include <string_view>

namespace mgtd {

// Counts and indices computed on raw text, before any cleaning.
struct ReadabilityStats {
    std::size_t words = 0;
    std::size_t sentences = 0; // >= 1 whenever the text has any word
    std::size_t syllables = 0;
    std::size_t complex_words = 0; // >= 3 syllables
    double gunning_fog = 0.0;
    double flesch = 0.0;
};

// Vowel-group heuristic (a,e,i,o,u,y), trailing silent-e adjusted, floor 1.
std::size_t count_syllables(std::string_view word);

// Segments terminated by '.', '!', '?' or end of text; clamped to >= 1 when
// the text contains any word character.
std::size_t count_sentences(std::string_view text);

// 0.4 * (words/sentences + 100 * complex_words/words); 0 when words == 0.
double gunning_fog(std::size_t words, std::size_t sentences, std::size_t complex_words);

// 206.835 - 1.015*(words/sentences) - 84.6*(syllables/words), unclamped;
// 0 when words == 0.
double flesch_reading_ease(std::size_t words, std::size_t sentences, std::size_t syllables);

ReadabilityStats analyze(std::string_view text);

} // namespace mgtd

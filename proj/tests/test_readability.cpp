#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mgtd/readability.hpp"

#include <cmath>
#include <random>
#include <string>

using namespace mgtd;

TEST_CASE("count_syllables vowel-group heuristic") {
    CHECK(count_syllables("cat") == 1);
    CHECK(count_syllables("beautiful") == 3); // eau | i | u
    CHECK(count_syllables("the") == 1);       // silent-e rule floors at 1
    CHECK(count_syllables("table") == 2);     // consonant+le is syllabic
    CHECK(count_syllables("time") == 1);
    CHECK(count_syllables("happy") == 2);
    CHECK(count_syllables("a") == 1);
}

TEST_CASE("count_syllables is at least 1 for any word") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(1, 12);
    std::uniform_int_distribution<int> letter(0, 25);
    for (int i = 0; i < 500; ++i) {
        std::string w;
        int n = len(rng);
        for (int k = 0; k < n; ++k) w += static_cast<char>('a' + letter(rng));
        CHECK(count_syllables(w) >= 1);
    }
}

TEST_CASE("count_sentences") {
    CHECK(count_sentences("Hi. Bye!") == 2);
    CHECK(count_sentences("no terminator") == 1);
    CHECK(count_sentences("A. B? C!") == 3);
    CHECK(count_sentences("") == 0);
    CHECK(count_sentences("Wow!!") == 1);      // terminator runs collapse
    CHECK(count_sentences("... Hi.") == 1);    // empty segments do not count
}

TEST_CASE("gunning fog formula") {
    CHECK(gunning_fog(100, 5, 10) == doctest::Approx(12.0).epsilon(1e-9));
    CHECK(gunning_fog(4, 4, 0) == doctest::Approx(0.4).epsilon(1e-12)); // one word per sentence
    CHECK(gunning_fog(0, 1, 0) == 0.0);
}

TEST_CASE("flesch reading ease formula") {
    // words/sentences = 10, syllables/words = 1.5
    CHECK(flesch_reading_ease(10, 1, 15) == doctest::Approx(69.785).epsilon(1e-9));
    // unclamped above 100
    CHECK(flesch_reading_ease(1, 1, 1) == doctest::Approx(121.22).epsilon(1e-9));
    CHECK(flesch_reading_ease(0, 1, 0) == 0.0);
}

TEST_CASE("analyze on empty and tiny inputs") {
    ReadabilityStats empty = analyze("");
    CHECK(empty.words == 0);
    CHECK(empty.sentences == 0);
    CHECK(empty.syllables == 0);
    CHECK(empty.complex_words == 0);
    CHECK(empty.gunning_fog == 0.0);
    CHECK(empty.flesch == 0.0);

    ReadabilityStats hi = analyze("Hi. Bye!");
    CHECK(hi.words == 2);
    CHECK(hi.sentences == 2);
    CHECK(hi.complex_words == 0);
    CHECK(hi.gunning_fog == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("analyze is internally consistent with the formula operations") {
    const char* texts[] = {
        "The quick brown fox jumps over the lazy dog.",
        "Readability is estimated. From sentence length! And syllables?",
        "one",
        "Numbers like 42 and symbols #! still count words 7 times.",
    };
    for (const char* text : texts) {
        ReadabilityStats s = analyze(text);
        CHECK(s.gunning_fog == gunning_fog(s.words, s.sentences, s.complex_words));
        CHECK(s.flesch == flesch_reading_ease(s.words, s.sentences, s.syllables));
        CHECK(s.complex_words <= s.words);
        if (s.words > 0) {
            CHECK(s.syllables >= s.words);
            CHECK(s.sentences >= 1);
        }
        CHECK(s.gunning_fog >= 0.0);
    }
}

TEST_CASE("fog increases with complex words, flesch decreases with syllables") {
    for (std::size_t c = 0; c + 1 <= 50; ++c) {
        CHECK(gunning_fog(50, 5, c) < gunning_fog(50, 5, c + 1));
    }
    for (std::size_t syl = 50; syl < 100; ++syl) {
        CHECK(flesch_reading_ease(50, 5, syl) > flesch_reading_ease(50, 5, syl + 1));
    }
}

TEST_CASE("self-concatenation preserves both indices") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> len(3, 40);
    std::uniform_int_distribution<int> wlen(1, 9);
    std::uniform_int_distribution<int> letter(0, 25);
    std::uniform_int_distribution<int> punct(0, 5);
    for (int trial = 0; trial < 100; ++trial) {
        std::string text;
        int n = len(rng);
        for (int w = 0; w < n; ++w) {
            if (!text.empty()) text += ' ';
            int m = wlen(rng);
            for (int k = 0; k < m; ++k) text += static_cast<char>('a' + letter(rng));
            if (punct(rng) == 0) text += '.';
        }
        ReadabilityStats one = analyze(text);
        ReadabilityStats two = analyze(text + ". " + text);
        CHECK(two.words == 2 * one.words);
        CHECK(two.sentences == 2 * one.sentences);
        double fog_rel = std::abs(two.gunning_fog - one.gunning_fog) /
                         std::max(1.0, std::abs(one.gunning_fog));
        double flesch_rel =
            std::abs(two.flesch - one.flesch) / std::max(1.0, std::abs(one.flesch));
        CHECK(fog_rel < 1e-9);
        CHECK(flesch_rel < 1e-9);
    }
}

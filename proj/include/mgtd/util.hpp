#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mgtd {

// Shortest decimal string that parses back to the identical double.
// Locale-independent; used everywhere a double is persisted.
std::string double_to_decimal(double value);

// Inverse of double_to_decimal. Throws mgtd::error on malformed input.
double decimal_to_double(std::string_view text);

// FNV-1a 64-bit, streamed.
struct Fnv1a64 {
    std::uint64_t state = 0xcbf29ce484222325ull;

    void update(std::string_view bytes);
    void update(std::uint64_t v);
    std::string hex() const; // "fnv1a64:<16 hex digits>"
};

// --- minimal Unicode support -------------------------------------------------
// Codepoint classification covers the major alphabetic blocks plus common
// digit ranges; everything else non-space counts as symbol/punctuation.
// Lowercasing covers ASCII, Latin-1/Ext-A, Greek and Cyrillic.

// Invalid byte sequences decode to U+FFFD.
std::u32string utf8_decode(std::string_view text);
std::string utf8_encode(const std::u32string& text);
void utf8_append(std::string& out, char32_t cp);

bool is_space_cp(char32_t cp);
bool is_digit_cp(char32_t cp);
bool is_letter_cp(char32_t cp);
char32_t to_lower_cp(char32_t cp);

inline bool is_word_cp(char32_t cp) { return is_letter_cp(cp) || is_digit_cp(cp); }

// Splits on runs of Unicode whitespace; never yields empty tokens.
std::vector<std::string> split_whitespace(std::string_view text);

std::string ascii_lower(std::string_view text);

} // namespace mgtd

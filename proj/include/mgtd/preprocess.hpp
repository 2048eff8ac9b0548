#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace mgtd {

enum class Step {
    strip_urls,
    collapse_whitespace,
    strip_punctuation,
    drop_stopwords,
    drop_numbers,
    decode_emoji,
    lemmatize,
    lowercase,
};

// Cleaning pipeline configuration. The default step order is fixed; steps can
// be removed or reordered per run. Tables default to the embedded English
// data and can be replaced from files.
struct PipelineConfig {
    std::vector<Step> steps;
    std::unordered_set<std::string> stopwords;          // lowercase, punctuation-free
    std::unordered_map<std::string, std::string> lemma_exceptions;
    std::unordered_map<char32_t, std::string> emoji_names; // lowercase ascii names

    static const std::vector<Step>& default_steps();
    static PipelineConfig defaults();
};

// Embedded default tables (also shipped under data/ in the same formats).
const std::vector<std::string>& default_stopwords();
const std::vector<std::pair<std::string, std::string>>& default_lemma_exceptions();
const std::vector<std::pair<char32_t, std::string>>& default_emoji_names();

// Table loaders: stopwords are one entry per line, the other two are
// tab-separated pairs (emoji codepoint may be the literal character or U+XXXX).
std::unordered_set<std::string> load_stopwords(const std::string& path);
std::unordered_map<std::string, std::string> load_lemma_exceptions(const std::string& path);
std::unordered_map<char32_t, std::string> load_emoji_names(const std::string& path);

// Applies the configured steps in order and returns tokens joined by single
// spaces. Idempotent under any step subset: clean(clean(x)) == clean(x).
std::string clean(std::string_view text, const PipelineConfig& config);

// Whitespace tokenizer (no cleaning).
std::vector<std::string> tokenize(std::string_view text);

// Rule-based lemmatizer over lowercase tokens: exception dictionary first,
// then plural/-ies/-ing/-ed suffix rules. Unmatched tokens pass through.
// Idempotent.
std::string lemmatize_token(std::string_view token, const PipelineConfig& config);

} // namespace mgtd

#include "mgtd/preprocess.hpp"

#include "mgtd/errors.hpp"
#include "mgtd/util.hpp"

#include <algorithm>
#include <fstream>

namespace mgtd {

namespace {

bool is_vowel(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool is_ascii_alpha(const std::string& s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

std::size_t vowel_groups(const std::string& s) {
    std::size_t groups = 0;
    bool in_group = false;
    for (char c : s) {
        if (is_vowel(c)) {
            if (!in_group) ++groups;
            in_group = true;
        } else {
            in_group = false;
        }
    }
    return groups;
}

bool ends_with(const std::string& s, std::string_view suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Stem ends consonant-vowel-consonant with a single vowel group: stripping
// may have lost a silent e, so the token is left alone rather than guessed.
bool ambiguous_cvc(const std::string& stem) {
    if (stem.size() < 3) return false;
    char a = stem[stem.size() - 3];
    char b = stem[stem.size() - 2];
    char c = stem[stem.size() - 1];
    if (is_vowel(a) || !is_vowel(b) || is_vowel(c)) return false;
    if (c == 'w' || c == 'x' || c == 'y') return false;
    return vowel_groups(stem) == 1;
}

// One rule application. Returns the input unchanged when nothing fires.
std::string lemma_rules_once(const std::string& word,
                             const std::unordered_map<std::string, std::string>& exceptions) {
    auto it = exceptions.find(word);
    if (it != exceptions.end()) return it->second;
    if (!is_ascii_alpha(word)) return word;

    const std::size_t n = word.size();

    if (n >= 5 && ends_with(word, "ies")) {
        return word.substr(0, n - 3) + "y";
    }
    if (n >= 5 && ends_with(word, "eed")) {
        return word.substr(0, n - 1);
    }
    if (n >= 4 && ends_with(word, "es")) {
        std::string stem = word.substr(0, n - 2);
        if (ends_with(stem, "ss") || ends_with(stem, "x") || ends_with(stem, "z") ||
            ends_with(stem, "ch") || ends_with(stem, "sh") || ends_with(stem, "o")) {
            return stem;
        }
    }
    if (n >= 4 && word.back() == 's' && !ends_with(word, "ss") && !ends_with(word, "us") &&
        !ends_with(word, "is")) {
        return word.substr(0, n - 1);
    }
    for (std::string_view suffix : {std::string_view("ing"), std::string_view("ed")}) {
        if (!ends_with(word, suffix)) continue;
        std::string stem = word.substr(0, n - suffix.size());
        std::size_t min_len = (suffix == "ed") ? 3 : 2;
        if (stem.size() < min_len) continue;
        if (stem.size() == 2 && !is_vowel(stem.back())) continue;
        if (vowel_groups(stem) == 0) continue;
        if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
            !is_vowel(stem.back()) && stem.back() != 'l' && stem.back() != 's' &&
            stem.back() != 'z') {
            return stem.substr(0, stem.size() - 1);
        }
        if (ambiguous_cvc(stem)) return word;
        return stem;
    }
    return word;
}

std::string lowercase_utf8(std::string_view token) {
    std::u32string cps = utf8_decode(token);
    for (char32_t& cp : cps) cp = to_lower_cp(cp);
    return utf8_encode(cps);
}

bool has_step(const PipelineConfig& config, Step step) {
    return std::find(config.steps.begin(), config.steps.end(), step) != config.steps.end();
}

bool matches_url_prefix(const std::u32string& text, std::size_t pos) {
    static const char32_t* prefixes[] = {U"http://", U"https://", U"www."};
    for (const char32_t* prefix : prefixes) {
        std::size_t i = 0;
        for (; prefix[i] != 0; ++i) {
            if (pos + i >= text.size()) break;
            if (to_lower_cp(text[pos + i]) != prefix[i]) break;
        }
        if (prefix[i] == 0) return true;
    }
    return false;
}

void apply_strip_urls(std::u32string& text) {
    std::u32string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (is_space_cp(text[i])) {
            out.push_back(text[i]);
            ++i;
            continue;
        }
        std::size_t end = i;
        while (end < text.size() && !is_space_cp(text[end])) ++end;
        if (!matches_url_prefix(text, i)) {
            out.append(text, i, end - i);
        }
        i = end;
    }
    text = std::move(out);
}

void apply_collapse_whitespace(std::u32string& text) {
    std::u32string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (char32_t cp : text) {
        if (is_space_cp(cp)) {
            pending_space = !out.empty();
        } else {
            if (pending_space) out.push_back(U' ');
            pending_space = false;
            out.push_back(cp);
        }
    }
    text = std::move(out);
}

// Mapped emoji survive only when a later decode step will consume them;
// otherwise they are dropped with the rest of the symbols.
void apply_strip_punctuation(std::u32string& text, const PipelineConfig& config,
                             bool keep_emoji) {
    std::u32string out;
    out.reserve(text.size());
    for (char32_t cp : text) {
        if (is_word_cp(cp) || is_space_cp(cp) ||
            (keep_emoji && config.emoji_names.count(cp))) {
            out.push_back(cp);
        }
    }
    text = std::move(out);
}

void apply_drop_numbers(std::u32string& text) {
    std::u32string out;
    out.reserve(text.size());
    for (char32_t cp : text) {
        if (!is_digit_cp(cp)) out.push_back(cp);
    }
    text = std::move(out);
}

void apply_decode_emoji(std::u32string& text, const PipelineConfig& config) {
    std::u32string out;
    out.reserve(text.size());
    for (char32_t cp : text) {
        auto it = config.emoji_names.find(cp);
        if (it == config.emoji_names.end()) {
            out.push_back(cp);
            continue;
        }
        out.push_back(U' ');
        for (char c : it->second) out.push_back(static_cast<char32_t>(c));
        out.push_back(U' ');
    }
    text = std::move(out);
}

void apply_lowercase(std::u32string& text) {
    for (char32_t& cp : text) cp = to_lower_cp(cp);
}

template <typename Fn>
void map_tokens(std::u32string& text, Fn&& fn) {
    std::u32string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (is_space_cp(text[i])) {
            out.push_back(text[i]);
            ++i;
            continue;
        }
        std::size_t end = i;
        while (end < text.size() && !is_space_cp(text[end])) ++end;
        std::u32string replaced = fn(text.substr(i, end - i));
        out.append(replaced);
        i = end;
    }
    text = std::move(out);
}

void apply_drop_stopwords(std::u32string& text, const PipelineConfig& config) {
    map_tokens(text, [&](std::u32string token) -> std::u32string {
        std::u32string lowered = token;
        for (char32_t& cp : lowered) cp = to_lower_cp(cp);
        if (config.stopwords.count(utf8_encode(lowered))) return U"";
        return token;
    });
}

void apply_lemmatize(std::u32string& text, const PipelineConfig& config) {
    map_tokens(text, [&](std::u32string token) -> std::u32string {
        return utf8_decode(lemmatize_token(utf8_encode(token), config));
    });
}

} // namespace

const std::vector<Step>& PipelineConfig::default_steps() {
    static const std::vector<Step> steps = {
        Step::strip_urls,    Step::collapse_whitespace, Step::strip_punctuation,
        Step::drop_stopwords, Step::drop_numbers,       Step::decode_emoji,
        Step::lemmatize,      Step::lowercase,
    };
    return steps;
}

PipelineConfig PipelineConfig::defaults() {
    PipelineConfig config;
    config.steps = default_steps();
    for (const std::string& w : default_stopwords()) config.stopwords.insert(w);
    for (const auto& [form, lemma] : default_lemma_exceptions()) {
        config.lemma_exceptions.emplace(form, lemma);
    }
    for (const auto& [cp, name] : default_emoji_names()) {
        config.emoji_names.emplace(cp, name);
    }
    return config;
}

std::unordered_set<std::string> load_stopwords(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open '" + path + "'");
    std::unordered_set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        words.insert(lowercase_utf8(line));
    }
    return words;
}

std::unordered_map<std::string, std::string> load_lemma_exceptions(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open '" + path + "'");
    std::unordered_map<std::string, std::string> table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw io_error(path + ":" + std::to_string(lineno) + ": expected 'form<TAB>lemma'");
        }
        table[lowercase_utf8(line.substr(0, tab))] = lowercase_utf8(line.substr(tab + 1));
    }
    return table;
}

std::unordered_map<char32_t, std::string> load_emoji_names(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open '" + path + "'");
    std::unordered_map<char32_t, std::string> table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw io_error(path + ":" + std::to_string(lineno) + ": expected 'emoji<TAB>name'");
        }
        std::string key = line.substr(0, tab);
        char32_t cp = 0;
        if (key.size() > 2 && (key[0] == 'U' || key[0] == 'u') && key[1] == '+') {
            cp = static_cast<char32_t>(std::stoul(key.substr(2), nullptr, 16));
        } else {
            std::u32string cps = utf8_decode(key);
            if (cps.empty()) {
                throw io_error(path + ":" + std::to_string(lineno) + ": empty emoji field");
            }
            cp = cps[0];
        }
        table[cp] = lowercase_utf8(line.substr(tab + 1));
    }
    return table;
}

std::string lemmatize_token(std::string_view token, const PipelineConfig& config) {
    std::string current = lowercase_utf8(token);
    // Rules cascade until a fixed point so that one call is idempotent. Every
    // rule shortens the word and exception targets are themselves fixed
    // points, so the bound never binds.
    const std::size_t max_iters = current.size() + 3;
    for (std::size_t iter = 0; iter <= max_iters; ++iter) {
        std::string next = lemma_rules_once(current, config.lemma_exceptions);
        if (next == current) break;
        current = std::move(next);
    }
    return current;
}

std::string clean(std::string_view text, const PipelineConfig& config) {
    std::u32string cps = utf8_decode(text);
    for (std::size_t s = 0; s < config.steps.size(); ++s) {
        switch (config.steps[s]) {
            case Step::strip_urls: apply_strip_urls(cps); break;
            case Step::collapse_whitespace: apply_collapse_whitespace(cps); break;
            case Step::strip_punctuation: {
                bool decode_later =
                    std::find(config.steps.begin() + static_cast<std::ptrdiff_t>(s) + 1,
                              config.steps.end(), Step::decode_emoji) != config.steps.end();
                apply_strip_punctuation(cps, config, decode_later);
                break;
            }
            case Step::drop_stopwords: apply_drop_stopwords(cps, config); break;
            case Step::drop_numbers: apply_drop_numbers(cps); break;
            case Step::decode_emoji: apply_decode_emoji(cps, config); break;
            case Step::lemmatize: apply_lemmatize(cps, config); break;
            case Step::lowercase: apply_lowercase(cps); break;
        }
    }
    // Canonical single-space join. When stopword dropping is configured the
    // filter also applies to the final stream: later steps (digit removal,
    // emoji decoding, lemmatization) can mint stopwords, and clean must be
    // idempotent.
    const bool refilter = has_step(config, Step::drop_stopwords);
    std::string joined;
    joined.reserve(cps.size());
    std::u32string token;
    auto flush = [&]() {
        if (token.empty()) return;
        if (refilter) {
            std::u32string lowered = token;
            for (char32_t& cp : lowered) cp = to_lower_cp(cp);
            if (config.stopwords.count(utf8_encode(lowered))) {
                token.clear();
                return;
            }
        }
        if (!joined.empty()) joined.push_back(' ');
        for (char32_t cp : token) utf8_append(joined, cp);
        token.clear();
    };
    for (char32_t cp : cps) {
        if (is_space_cp(cp)) {
            flush();
        } else {
            token.push_back(cp);
        }
    }
    flush();
    return joined;
}

std::vector<std::string> tokenize(std::string_view text) {
    return split_whitespace(text);
}

} // namespace mgtd

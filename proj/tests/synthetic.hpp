#pragma once

// Synthetic two-distribution corpus for end-to-end checks: class 0 and
// class 1 draw most tokens from disjoint word sets plus a shared pool, so a
// unigram count model separates them with a wide margin.

#include "mgtd/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

struct SyntheticCorpus {
    mgtd::DatasetSplit train;
    mgtd::DatasetSplit dev;
};

inline std::vector<std::string> make_word_pool(std::mt19937_64& rng, std::size_t count,
                                               const std::string& tag) {
    static const char* consonants = "bcdfgklmnprstvz";
    static const char* vowels = "aeiou";
    std::uniform_int_distribution<int> cdist(0, 14);
    std::uniform_int_distribution<int> vdist(0, 4);
    std::uniform_int_distribution<int> syl(2, 4);
    std::vector<std::string> words;
    words.reserve(count);
    while (words.size() < count) {
        std::string w = tag;
        int n = syl(rng);
        for (int s = 0; s < n; ++s) {
            w += consonants[cdist(rng)];
            w += vowels[vdist(rng)];
        }
        if (std::find(words.begin(), words.end(), w) == words.end()) {
            words.push_back(std::move(w));
        }
    }
    return words;
}

inline SyntheticCorpus make_two_distribution_corpus(std::uint64_t seed, std::size_t n_docs = 1000,
                                                    double train_fraction = 0.7) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::string>> class_pools = {
        make_word_pool(rng, 40, "hu"),
        make_word_pool(rng, 40, "ma"),
    };
    std::vector<std::string> shared_pool = make_word_pool(rng, 40, "co");

    std::uniform_int_distribution<int> length(25, 50);
    std::uniform_int_distribution<int> sentence_len(5, 9);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> pool_pick(0, 39);
    const char* sources[] = {"wikihow", "wikipedia", "reddit", "arxiv"};

    SyntheticCorpus corpus;
    corpus.train.name = mgtd::SplitName::train;
    corpus.dev.name = mgtd::SplitName::dev;
    const std::size_t n_train = static_cast<std::size_t>(
        std::llround(static_cast<double>(n_docs) * train_fraction));

    for (std::size_t i = 0; i < n_docs; ++i) {
        int label = coin(rng) < 0.5 ? 0 : 1;
        const auto& pool = class_pools[static_cast<std::size_t>(label)];
        int n_tokens = length(rng);
        std::string text;
        int until_period = sentence_len(rng);
        for (int t = 0; t < n_tokens; ++t) {
            const std::string& w =
                coin(rng) < 0.65 ? pool[pool_pick(rng)] : shared_pool[pool_pick(rng)];
            if (!text.empty()) text += ' ';
            text += w;
            if (--until_period == 0) {
                text += '.';
                until_period = sentence_len(rng);
            }
        }
        mgtd::Document doc;
        doc.id = "doc" + std::to_string(i);
        doc.text = std::move(text);
        doc.label = label;
        if (label == 1) doc.model = "synthgen";
        doc.source = sources[i % 4];
        (i < n_train ? corpus.train : corpus.dev).documents.push_back(std::move(doc));
    }
    return corpus;
}

// Independent check model: unigram counts over lowercase whitespace tokens,
// Laplace smoothing, argmax log posterior. Kept deliberately separate from
// the library pipeline.
struct UnigramCountsOracle {
    std::map<std::string, double> counts[2];
    double totals[2] = {0.0, 0.0};
    double doc_counts[2] = {0.0, 0.0};
    double vocab_size = 0.0;

    void fit(const mgtd::DatasetSplit& split) {
        std::map<std::string, bool> vocab;
        for (const mgtd::Document& doc : split.documents) {
            int c = *doc.label;
            doc_counts[c] += 1.0;
            std::string token;
            for (char ch : doc.text + " ") {
                if (ch == ' ' || ch == '.' || ch == '\n') {
                    if (!token.empty()) {
                        counts[c][token] += 1.0;
                        totals[c] += 1.0;
                        vocab[token] = true;
                        token.clear();
                    }
                } else {
                    token += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
                }
            }
        }
        vocab_size = static_cast<double>(vocab.size());
    }

    int predict(const std::string& text) const {
        double score[2];
        double n = doc_counts[0] + doc_counts[1];
        for (int c = 0; c < 2; ++c) score[c] = std::log(doc_counts[c] / n);
        std::string token;
        for (char ch : text + " ") {
            if (ch == ' ' || ch == '.' || ch == '\n') {
                if (!token.empty()) {
                    for (int c = 0; c < 2; ++c) {
                        auto it = counts[c].find(token);
                        double cnt = it == counts[c].end() ? 0.0 : it->second;
                        score[c] += std::log((cnt + 1.0) / (totals[c] + vocab_size));
                    }
                    token.clear();
                }
            } else {
                token += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
            }
        }
        return score[1] > score[0] ? 1 : 0;
    }

    double accuracy(const mgtd::DatasetSplit& split) const {
        std::size_t correct = 0;
        for (const mgtd::Document& doc : split.documents) {
            if (predict(doc.text) == *doc.label) ++correct;
        }
        return split.documents.empty()
                   ? 0.0
                   : static_cast<double>(correct) / static_cast<double>(split.size());
    }
};

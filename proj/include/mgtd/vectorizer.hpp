#pragma once

#include "mgtd/readability.hpp"

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace mgtd {

struct VectorizerConfig {
    std::size_t max_features = 8000;
    std::size_t ngram_min = 1;
    std::size_t ngram_max = 3;
    std::size_t min_df = 10;
};

struct VocabEntry {
    std::string ngram; // space-joined tokens
    std::size_t df = 0;
    double idf = 0.0;
};

// Frozen n-gram -> (index, idf) mapping. Entries are sorted lexicographically;
// indices are their positions.
class Vocabulary {
public:
    Vocabulary() = default;
    Vocabulary(std::vector<VocabEntry> entries, std::size_t n_documents, VectorizerConfig config);

    const std::vector<VocabEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    std::size_t n_documents() const { return n_documents_; }
    const VectorizerConfig& config() const { return config_; }

    // -1 when the n-gram is out of vocabulary.
    int index_of(const std::string& ngram) const;

    // Over the canonical serialization; models record it for pairing checks.
    std::string checksum() const;

private:
    std::vector<VocabEntry> entries_;
    std::unordered_map<std::string, int> index_;
    std::size_t n_documents_ = 0;
    VectorizerConfig config_;
};

// Sparse TF-IDF coordinates plus the two readability features. The sparse
// part is L2-normalized; the dense extras are appended unnormalized.
struct FeatureVector {
    std::vector<std::pair<int, double>> sparse; // strictly increasing indices
    double dense_extra[2] = {0.0, 0.0};         // gunning fog, flesch
    std::size_t total_dim = 0;                  // |vocabulary| + 2

    double at(std::size_t j) const; // dense read across sparse + extras
};

// Document-frequency counting over 1..n grams, min-df filter, then top
// max_features by corpus-total term frequency (ties lexicographic).
// idf(t) = ln((1+N)/(1+df(t))) + 1.
Vocabulary fit_vocabulary(const std::vector<std::vector<std::string>>& docs,
                          const VectorizerConfig& config);

FeatureVector transform(const std::vector<std::string>& tokens, const Vocabulary& vocab,
                        const ReadabilityStats& stats);

// Versioned JSON, idf values as full-precision decimal strings.
void save_vocabulary(const Vocabulary& vocab, const std::string& path);
Vocabulary load_vocabulary(const std::string& path);

} // namespace mgtd

#include "mgtd/vectorizer.hpp"

#include "mgtd/errors.hpp"
#include "mgtd/util.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <unordered_set>

namespace mgtd {

using nlohmann::json;

namespace {
constexpr int kVocabularyVersion = 1;
}

Vocabulary::Vocabulary(std::vector<VocabEntry> entries, std::size_t n_documents,
                       VectorizerConfig config)
    : entries_(std::move(entries)), n_documents_(n_documents), config_(config) {
    index_.reserve(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        index_.emplace(entries_[i].ngram, static_cast<int>(i));
    }
}

int Vocabulary::index_of(const std::string& ngram) const {
    auto it = index_.find(ngram);
    return it == index_.end() ? -1 : it->second;
}

std::string Vocabulary::checksum() const {
    Fnv1a64 hash;
    hash.update("mgtd.vocabulary.v1");
    hash.update(static_cast<std::uint64_t>(config_.max_features));
    hash.update(static_cast<std::uint64_t>(config_.ngram_min));
    hash.update(static_cast<std::uint64_t>(config_.ngram_max));
    hash.update(static_cast<std::uint64_t>(config_.min_df));
    hash.update(static_cast<std::uint64_t>(n_documents_));
    for (const VocabEntry& e : entries_) {
        hash.update(e.ngram);
        hash.update(static_cast<std::uint64_t>(e.df));
        hash.update(double_to_decimal(e.idf));
    }
    return hash.hex();
}

double FeatureVector::at(std::size_t j) const {
    if (total_dim >= 2 && j + 2 >= total_dim) {
        return dense_extra[j + 2 - total_dim];
    }
    int target = static_cast<int>(j);
    auto it = std::lower_bound(sparse.begin(), sparse.end(), target,
                               [](const auto& p, int v) { return p.first < v; });
    if (it != sparse.end() && it->first == target) return it->second;
    return 0.0;
}

Vocabulary fit_vocabulary(const std::vector<std::vector<std::string>>& docs,
                          const VectorizerConfig& config) {
    if (docs.empty()) {
        throw train_error("empty vocabulary: no documents");
    }
    struct Counts {
        std::size_t df = 0;
        std::size_t tf = 0;
    };
    std::unordered_map<std::string, Counts> counts;

    std::unordered_set<std::string> seen;
    std::string ngram;
    for (const auto& tokens : docs) {
        seen.clear();
        for (std::size_t n = config.ngram_min; n <= config.ngram_max; ++n) {
            if (n == 0 || tokens.size() < n) continue;
            for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
                ngram.clear();
                for (std::size_t k = 0; k < n; ++k) {
                    if (k > 0) ngram.push_back(' ');
                    ngram += tokens[i + k];
                }
                Counts& c = counts[ngram];
                ++c.tf;
                if (seen.insert(ngram).second) ++c.df;
            }
        }
    }

    std::vector<std::pair<std::string, Counts>> survivors;
    survivors.reserve(counts.size());
    for (auto& [gram, c] : counts) {
        if (c.df >= config.min_df) survivors.emplace_back(gram, c);
    }
    if (survivors.empty()) {
        throw train_error("empty vocabulary");
    }

    if (survivors.size() > config.max_features) {
        // Keep the highest-total-frequency n-grams; ties lexicographic.
        std::nth_element(survivors.begin(), survivors.begin() + config.max_features - 1,
                         survivors.end(), [](const auto& a, const auto& b) {
                             if (a.second.tf != b.second.tf) return a.second.tf > b.second.tf;
                             return a.first < b.first;
                         });
        survivors.resize(config.max_features);
    }

    std::sort(survivors.begin(), survivors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    const double n_docs = static_cast<double>(docs.size());
    std::vector<VocabEntry> entries;
    entries.reserve(survivors.size());
    for (auto& [gram, c] : survivors) {
        VocabEntry e;
        e.ngram = gram;
        e.df = c.df;
        e.idf = std::log((1.0 + n_docs) / (1.0 + static_cast<double>(c.df))) + 1.0;
        entries.push_back(std::move(e));
    }
    return Vocabulary(std::move(entries), docs.size(), config);
}

FeatureVector transform(const std::vector<std::string>& tokens, const Vocabulary& vocab,
                        const ReadabilityStats& stats) {
    std::unordered_map<int, double> counts;
    std::string ngram;
    const VectorizerConfig& config = vocab.config();
    for (std::size_t n = config.ngram_min; n <= config.ngram_max; ++n) {
        if (n == 0 || tokens.size() < n) continue;
        for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
            ngram.clear();
            for (std::size_t k = 0; k < n; ++k) {
                if (k > 0) ngram.push_back(' ');
                ngram += tokens[i + k];
            }
            int idx = vocab.index_of(ngram);
            if (idx >= 0) counts[idx] += 1.0;
        }
    }

    FeatureVector fv;
    fv.total_dim = vocab.size() + 2;
    fv.sparse.reserve(counts.size());
    for (const auto& [idx, count] : counts) {
        fv.sparse.emplace_back(idx, count * vocab.entries()[static_cast<std::size_t>(idx)].idf);
    }
    std::sort(fv.sparse.begin(), fv.sparse.end());

    double norm_sq = 0.0;
    for (const auto& [idx, w] : fv.sparse) norm_sq += w * w;
    if (norm_sq > 0.0) {
        double inv = 1.0 / std::sqrt(norm_sq);
        for (auto& [idx, w] : fv.sparse) w *= inv;
    }

    fv.dense_extra[0] = stats.gunning_fog;
    fv.dense_extra[1] = stats.flesch;
    return fv;
}

void save_vocabulary(const Vocabulary& vocab, const std::string& path) {
    json obj;
    obj["format"] = "mgtd.vocabulary";
    obj["version"] = kVocabularyVersion;
    obj["config"] = {{"max_features", vocab.config().max_features},
                     {"ngram_min", vocab.config().ngram_min},
                     {"ngram_max", vocab.config().ngram_max},
                     {"min_df", vocab.config().min_df}};
    obj["n_documents"] = vocab.n_documents();
    json entries = json::array();
    for (const VocabEntry& e : vocab.entries()) {
        entries.push_back({e.ngram, e.df, double_to_decimal(e.idf)});
    }
    obj["entries"] = std::move(entries);
    obj["checksum"] = vocab.checksum();

    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write '" + path + "'");
    out << obj.dump(2) << '\n';
    if (!out) throw io_error("write failed for '" + path + "'");
}

Vocabulary load_vocabulary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open '" + path + "'");
    json obj;
    try {
        in >> obj;
    } catch (const json::exception& e) {
        throw io_error("cannot parse '" + path + "': " + e.what());
    }
    if (obj.value("format", "") != "mgtd.vocabulary") {
        throw artifact_error("'" + path + "' is not a vocabulary file");
    }
    if (obj.value("version", -1) != kVocabularyVersion) {
        throw artifact_error("vocabulary version mismatch in '" + path + "'");
    }
    VectorizerConfig config;
    config.max_features = obj.at("config").at("max_features").get<std::size_t>();
    config.ngram_min = obj.at("config").at("ngram_min").get<std::size_t>();
    config.ngram_max = obj.at("config").at("ngram_max").get<std::size_t>();
    config.min_df = obj.at("config").at("min_df").get<std::size_t>();

    std::vector<VocabEntry> entries;
    entries.reserve(obj.at("entries").size());
    for (const json& row : obj.at("entries")) {
        VocabEntry e;
        e.ngram = row.at(0).get<std::string>();
        e.df = row.at(1).get<std::size_t>();
        e.idf = decimal_to_double(row.at(2).get<std::string>());
        entries.push_back(std::move(e));
    }
    Vocabulary vocab(std::move(entries), obj.at("n_documents").get<std::size_t>(), config);
    if (obj.contains("checksum") && obj["checksum"].get<std::string>() != vocab.checksum()) {
        throw artifact_error("vocabulary checksum mismatch in '" + path + "'");
    }
    return vocab;
}

} // namespace mgtd

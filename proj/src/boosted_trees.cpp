#include "mgtd/classifiers.hpp"

#include "mgtd/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <thread>

namespace mgtd {

namespace {

constexpr double kFreqEps = 1e-15;

struct ColumnEntry {
    double value;
    int row;
};

struct Split {
    double gain = 0.0; // already net of gamma; accepted only when > 0
    int feature = -1;
    double threshold = 0.0;

    bool valid() const { return feature >= 0; }
};

struct NodeStats {
    double g_sum = 0.0;
    double h_sum = 0.0;
    std::size_t count = 0;
};

double sigmoid(double m) {
    if (m >= 0.0) return 1.0 / (1.0 + std::exp(-m));
    double e = std::exp(m);
    return e / (1.0 + e);
}

double leaf_weight(double g, double h, const GbdtParams& p) {
    return -p.eta * g / (h + p.lambda);
}

// Scans one feature's explicit entries for one node (already value-sorted)
// plus the aggregated implicit-zero block, and returns the best threshold.
Split scan_feature(int feature, const std::vector<ColumnEntry>& entries, const NodeStats& node,
                   const std::vector<double>& g, const std::vector<double>& h,
                   const GbdtParams& params) {
    double explicit_g = 0.0, explicit_h = 0.0;
    for (const ColumnEntry& e : entries) {
        explicit_g += g[static_cast<std::size_t>(e.row)];
        explicit_h += h[static_cast<std::size_t>(e.row)];
    }
    const std::size_t zero_count = node.count - entries.size();
    const double zero_g = node.g_sum - explicit_g;
    const double zero_h = node.h_sum - explicit_h;

    // Distinct-value runs in ascending order, implicit zeros merged in.
    struct Run {
        double value;
        double g_sum;
        double h_sum;
    };
    std::vector<Run> runs;
    runs.reserve(entries.size() + 1);
    bool zero_inserted = zero_count == 0;
    auto flush_zero_before = [&](double next_value) {
        if (!zero_inserted && 0.0 < next_value) {
            runs.push_back({0.0, zero_g, zero_h});
            zero_inserted = true;
        }
    };
    for (const ColumnEntry& e : entries) {
        flush_zero_before(e.value);
        double gv = g[static_cast<std::size_t>(e.row)];
        double hv = h[static_cast<std::size_t>(e.row)];
        if (!zero_inserted && e.value == 0.0) {
            runs.push_back({0.0, zero_g, zero_h});
            zero_inserted = true;
        }
        if (!runs.empty() && runs.back().value == e.value) {
            runs.back().g_sum += gv;
            runs.back().h_sum += hv;
        } else {
            runs.push_back({e.value, gv, hv});
        }
    }
    if (!zero_inserted) runs.push_back({0.0, zero_g, zero_h});

    Split best;
    if (runs.size() < 2) return best;

    const double parent_term =
        node.g_sum * node.g_sum / (node.h_sum + params.lambda);
    double left_g = 0.0, left_h = 0.0;
    for (std::size_t k = 0; k + 1 < runs.size(); ++k) {
        left_g += runs[k].g_sum;
        left_h += runs[k].h_sum;
        double right_g = node.g_sum - left_g;
        double right_h = node.h_sum - left_h;
        if (left_h < params.min_child_weight || right_h < params.min_child_weight) continue;
        double threshold = runs[k].value + 0.5 * (runs[k + 1].value - runs[k].value);
        if (!(threshold > runs[k].value)) continue; // adjacent representable values
        double gain = 0.5 * (left_g * left_g / (left_h + params.lambda) +
                             right_g * right_g / (right_h + params.lambda) - parent_term) -
                      params.gamma;
        if (gain > best.gain) {
            best.gain = gain;
            best.feature = feature;
            best.threshold = threshold;
        }
    }
    return best;
}

class TreeBuilder {
public:
    TreeBuilder(const std::vector<std::vector<ColumnEntry>>& columns, std::size_t n_rows,
                const GbdtParams& params, unsigned threads)
        : columns_(columns), n_rows_(n_rows), params_(params), threads_(threads) {}

    // Fits one tree to (g, h); fills leaf_of_row with each row's leaf weight.
    Tree build(const std::vector<double>& g, const std::vector<double>& h,
               std::vector<double>& leaf_of_row) {
        Tree tree;
        leaf_of_row.assign(n_rows_, 0.0);
        node_of_.assign(n_rows_, -1);

        std::vector<int> all_rows(n_rows_);
        for (std::size_t i = 0; i < n_rows_; ++i) all_rows[i] = static_cast<int>(i);

        struct Frontier {
            int tree_node;
            std::vector<int> rows;
        };
        std::vector<Frontier> level;
        tree.nodes.emplace_back();
        level.push_back({0, std::move(all_rows)});

        for (std::size_t depth = 0; depth <= params_.max_depth && !level.empty(); ++depth) {
            std::vector<NodeStats> stats(level.size());
            for (std::size_t t = 0; t < level.size(); ++t) {
                for (int row : level[t].rows) {
                    node_of_[static_cast<std::size_t>(row)] = static_cast<int>(t);
                    stats[t].g_sum += g[static_cast<std::size_t>(row)];
                    stats[t].h_sum += h[static_cast<std::size_t>(row)];
                }
                stats[t].count = level[t].rows.size();
            }

            std::vector<Split> best(level.size());
            if (depth < params_.max_depth) {
                find_splits(level.size(), stats, g, h, best);
            }

            std::vector<Frontier> next;
            std::vector<char> side(n_rows_, 0);
            for (std::size_t t = 0; t < level.size(); ++t) {
                Frontier& node = level[t];
                TreeNode& tn = tree.nodes[static_cast<std::size_t>(node.tree_node)];
                if (!best[t].valid()) {
                    tn.feature = -1;
                    tn.value = leaf_weight(stats[t].g_sum, stats[t].h_sum, params_);
                    for (int row : node.rows) {
                        leaf_of_row[static_cast<std::size_t>(row)] = tn.value;
                        node_of_[static_cast<std::size_t>(row)] = -1;
                    }
                    continue;
                }
                tn.feature = best[t].feature;
                tn.threshold = best[t].threshold;

                const char zero_left = 0.0 < best[t].threshold ? 1 : 0;
                for (int row : node.rows) side[static_cast<std::size_t>(row)] = zero_left;
                for (const ColumnEntry& e : columns_[static_cast<std::size_t>(best[t].feature)]) {
                    if (node_of_[static_cast<std::size_t>(e.row)] == static_cast<int>(t)) {
                        side[static_cast<std::size_t>(e.row)] =
                            e.value < best[t].threshold ? 1 : 0;
                    }
                }

                Frontier left{static_cast<int>(tree.nodes.size()), {}};
                Frontier right{static_cast<int>(tree.nodes.size()) + 1, {}};
                tn.left = left.tree_node;
                tn.right = right.tree_node;
                tree.nodes.emplace_back();
                tree.nodes.emplace_back();
                for (int row : node.rows) {
                    (side[static_cast<std::size_t>(row)] ? left.rows : right.rows).push_back(row);
                }
                next.push_back(std::move(left));
                next.push_back(std::move(right));
            }
            // Reset assignments; the next level rebuilds them.
            for (const Frontier& f : next) {
                for (int row : f.rows) node_of_[static_cast<std::size_t>(row)] = -1;
            }
            level = std::move(next);
        }
        return tree;
    }

private:
    void find_splits(std::size_t n_nodes, const std::vector<NodeStats>& stats,
                     const std::vector<double>& g, const std::vector<double>& h,
                     std::vector<Split>& best) {
        const std::size_t n_features = columns_.size();
        unsigned workers = threads_;
        if (workers <= 1 || n_features < 64) {
            scan_range(0, n_features, n_nodes, stats, g, h, best);
            return;
        }
        workers = std::min<unsigned>(workers, static_cast<unsigned>(n_features));
        std::vector<std::vector<Split>> partial(workers, std::vector<Split>(n_nodes));
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            std::size_t lo = n_features * w / workers;
            std::size_t hi = n_features * (w + 1) / workers;
            pool.emplace_back([&, lo, hi, w]() {
                scan_range(lo, hi, n_nodes, stats, g, h, partial[w]);
            });
        }
        for (std::thread& th : pool) th.join();
        // Workers own ascending feature ranges; merging in worker order keeps
        // the lowest-feature tie-break.
        for (std::size_t t = 0; t < n_nodes; ++t) {
            for (unsigned w = 0; w < workers; ++w) {
                if (partial[w][t].gain > best[t].gain) best[t] = partial[w][t];
            }
        }
    }

    void scan_range(std::size_t lo, std::size_t hi, std::size_t n_nodes,
                    const std::vector<NodeStats>& stats, const std::vector<double>& g,
                    const std::vector<double>& h, std::vector<Split>& best) {
        std::vector<std::vector<ColumnEntry>> scratch(n_nodes);
        for (std::size_t j = lo; j < hi; ++j) {
            for (auto& s : scratch) s.clear();
            for (const ColumnEntry& e : columns_[j]) {
                int t = node_of_[static_cast<std::size_t>(e.row)];
                if (t >= 0) scratch[static_cast<std::size_t>(t)].push_back(e);
            }
            for (std::size_t t = 0; t < n_nodes; ++t) {
                if (stats[t].count < 2) continue;
                Split s = scan_feature(static_cast<int>(j), scratch[t], stats[t], g, h, params_);
                if (s.gain > best[t].gain) best[t] = s;
            }
        }
    }

    const std::vector<std::vector<ColumnEntry>>& columns_;
    std::size_t n_rows_;
    GbdtParams params_;
    unsigned threads_;
    std::vector<int> node_of_;
};

} // namespace

double Tree::predict(const FeatureVector& x) const {
    const TreeNode* node = &nodes[0];
    while (!node->is_leaf()) {
        double v = x.at(static_cast<std::size_t>(node->feature));
        node = &nodes[static_cast<std::size_t>(v < node->threshold ? node->left : node->right)];
    }
    return node->value;
}

BoostedTreesModel train_gbdt(const std::vector<FeatureVector>& X, const std::vector<int>& y,
                             std::size_t n_classes, const GbdtParams& params, unsigned threads) {
    if (X.empty() || X.size() != y.size()) {
        throw train_error("training set is empty or labels do not match");
    }
    for (const FeatureVector& fv : X) {
        if (fv.total_dim != X[0].total_dim) {
            throw train_error("inconsistent feature dimensions in training set");
        }
    }
    std::set<int> distinct(y.begin(), y.end());
    if (distinct.size() < 2) {
        throw train_error("single-class training set");
    }

    BoostedTreesModel model;
    model.n_classes = n_classes;
    model.dim = X[0].total_dim;
    model.params = params;
    const std::size_t n = X.size();
    const std::size_t groups = model.groups();

    std::vector<double> freq(n_classes, 0.0);
    for (int label : y) freq[static_cast<std::size_t>(label)] += 1.0;
    for (double& f : freq) f = std::clamp(f / static_cast<double>(n), kFreqEps, 1.0 - kFreqEps);
    if (n_classes == 2) {
        model.base_scores = {std::log(freq[1] / (1.0 - freq[1]))};
    } else {
        model.base_scores.resize(groups);
        for (std::size_t k = 0; k < groups; ++k) model.base_scores[k] = std::log(freq[k]);
    }

    // Column-major view with pre-sorted values; zeros stay implicit.
    std::vector<std::vector<ColumnEntry>> columns(model.dim);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [idx, v] : X[i].sparse) {
            columns[static_cast<std::size_t>(idx)].push_back({v, static_cast<int>(i)});
        }
        if (model.dim >= 2) {
            columns[model.dim - 2].push_back({X[i].dense_extra[0], static_cast<int>(i)});
            columns[model.dim - 1].push_back({X[i].dense_extra[1], static_cast<int>(i)});
        }
    }
    for (auto& col : columns) {
        std::sort(col.begin(), col.end(), [](const ColumnEntry& a, const ColumnEntry& b) {
            if (a.value != b.value) return a.value < b.value;
            return a.row < b.row;
        });
    }

    std::vector<std::vector<double>> margins(groups, std::vector<double>(n));
    for (std::size_t k = 0; k < groups; ++k) {
        std::fill(margins[k].begin(), margins[k].end(), model.base_scores[k]);
    }

    TreeBuilder builder(columns, n, params, threads);
    std::vector<std::vector<double>> g(groups, std::vector<double>(n));
    std::vector<std::vector<double>> h(groups, std::vector<double>(n));
    std::vector<double> leaf_values;
    std::vector<double> probs(groups);

    for (std::size_t round = 0; round < params.rounds; ++round) {
        // Gradients for every class come from the round-start margins.
        if (n_classes == 2) {
            for (std::size_t i = 0; i < n; ++i) {
                double p = sigmoid(margins[0][i]);
                g[0][i] = p - (y[i] == 1 ? 1.0 : 0.0);
                h[0][i] = std::max(p * (1.0 - p), 1e-16);
            }
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                double max_m = margins[0][i];
                for (std::size_t c = 1; c < groups; ++c) max_m = std::max(max_m, margins[c][i]);
                double denom = 0.0;
                for (std::size_t c = 0; c < groups; ++c) {
                    probs[c] = std::exp(margins[c][i] - max_m);
                    denom += probs[c];
                }
                for (std::size_t c = 0; c < groups; ++c) {
                    double p = probs[c] / denom;
                    g[c][i] = p - (static_cast<std::size_t>(y[i]) == c ? 1.0 : 0.0);
                    h[c][i] = std::max(p * (1.0 - p), 1e-16);
                }
            }
        }
        for (std::size_t k = 0; k < groups; ++k) {
            Tree tree = builder.build(g[k], h[k], leaf_values);
            for (std::size_t i = 0; i < n; ++i) margins[k][i] += leaf_values[i];
            model.trees.push_back(std::move(tree));
        }
    }
    return model;
}

std::vector<double> BoostedTreesModel::predict_proba(const FeatureVector& x) const {
    const std::size_t g = groups();
    std::vector<double> margins(g);
    for (std::size_t k = 0; k < g; ++k) margins[k] = base_scores[k];
    for (std::size_t t = 0; t < trees.size(); ++t) {
        margins[t % g] += trees[t].predict(x);
    }
    if (n_classes == 2) {
        double p = sigmoid(margins[0]);
        return {1.0 - p, p};
    }
    double max_m = *std::max_element(margins.begin(), margins.end());
    double denom = 0.0;
    for (double& m : margins) {
        m = std::exp(m - max_m);
        denom += m;
    }
    for (double& m : margins) m /= denom;
    return margins;
}

} // namespace mgtd

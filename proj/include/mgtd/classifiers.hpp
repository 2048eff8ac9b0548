#pragma once

#include "mgtd/corpus.hpp"
#include "mgtd/vectorizer.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace mgtd {

// ---------------------------------------------------------------------------
// Logistic regression: full-batch gradient descent with backtracking on the
// L2-regularized cross-entropy. Binary models keep one weight row (sigmoid);
// multi-class models use softmax with one row per class.

struct LogRegParams {
    double learning_rate = 0.1;
    std::size_t epochs = 200;
    double l2 = 1e-4;
    double tol = 1e-6;
};

struct LogisticRegressionModel {
    std::size_t n_classes = 2;
    std::size_t dim = 0;
    std::vector<double> weights; // rows() x dim, row-major
    std::vector<double> bias;    // rows()
    double l2 = 1e-4;

    std::size_t rows() const { return n_classes == 2 ? 1 : n_classes; }
    std::vector<double> predict_proba(const FeatureVector& x) const;
};

LogisticRegressionModel train_logreg(const std::vector<FeatureVector>& X,
                                     const std::vector<int>& y, std::size_t n_classes,
                                     const LogRegParams& params = {});

// Regularized mean cross-entropy at the given parameters; exposed so the
// training loop and its tests agree on one definition.
double logreg_loss(const LogisticRegressionModel& model, const std::vector<FeatureVector>& X,
                   const std::vector<int>& y);

// Analytic gradient of logreg_loss at the model's parameters.
void logreg_gradient(const LogisticRegressionModel& model, const std::vector<FeatureVector>& X,
                     const std::vector<int>& y, std::vector<double>& grad_weights,
                     std::vector<double>& grad_bias);

// ---------------------------------------------------------------------------
// Multinomial naive Bayes. Feature values are clamped to >= 0 here (and only
// here): the readability extras can be negative.

struct NaiveBayesModel {
    std::size_t n_classes = 2;
    std::size_t dim = 0;
    std::vector<double> log_priors;      // n_classes
    std::vector<double> log_likelihoods; // n_classes x dim, row-major
    double alpha = 1.0;

    std::vector<double> predict_proba(const FeatureVector& x) const;
};

NaiveBayesModel train_nb(const std::vector<FeatureVector>& X, const std::vector<int>& y,
                         std::size_t n_classes, double alpha = 1.0);

// ---------------------------------------------------------------------------
// Gradient-boosted trees: second-order boosting on logistic/softmax loss,
// exact greedy splits over sorted unique feature values, dense semantics for
// absent sparse coordinates (value 0.0). Leaf weights carry the learning rate.

struct GbdtParams {
    std::size_t rounds = 100;
    std::size_t max_depth = 6;
    double eta = 0.3;
    double lambda = 1.0;
    double gamma = 0.0;
    double min_child_weight = 1.0;
};

struct TreeNode {
    int feature = -1; // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    double value = 0.0; // leaf weight, -eta * G / (H + lambda)

    bool is_leaf() const { return feature < 0; }
};

struct Tree {
    std::vector<TreeNode> nodes; // root at 0

    double predict(const FeatureVector& x) const;
};

struct BoostedTreesModel {
    std::size_t n_classes = 2;
    std::size_t dim = 0;
    std::vector<double> base_scores; // groups(): prior log-odds / log priors
    std::vector<Tree> trees;         // round-major, class-minor
    GbdtParams params;

    std::size_t groups() const { return n_classes == 2 ? 1 : n_classes; }
    std::vector<double> predict_proba(const FeatureVector& x) const;
};

BoostedTreesModel train_gbdt(const std::vector<FeatureVector>& X, const std::vector<int>& y,
                             std::size_t n_classes, const GbdtParams& params = {},
                             unsigned threads = 1);

// ---------------------------------------------------------------------------
// Tagged union of the three learners plus everything prediction needs.

enum class ModelKind { logistic_regression, naive_bayes, boosted_trees };

const char* model_kind_name(ModelKind kind);
ModelKind model_kind_from_name(const std::string& name); // accepts common aliases

struct TrainedModel {
    ModelKind kind = ModelKind::logistic_regression;
    LabelSpace labels;
    std::size_t feature_dim = 0;
    std::string vocab_checksum;
    std::uint64_t seed = 0;
    std::variant<LogisticRegressionModel, NaiveBayesModel, BoostedTreesModel> model;
};

// Probabilities over the label space: >= 0, sum to 1. Throws input_error on a
// feature-dimension mismatch.
std::vector<double> predict_proba(const TrainedModel& model, const FeatureVector& x);
int predict_label(const TrainedModel& model, const FeatureVector& x);

// Versioned JSON, parameters as full-precision decimal strings.
void save_model(const TrainedModel& model, const std::string& path);
TrainedModel load_model(const std::string& path);

} // namespace mgtd

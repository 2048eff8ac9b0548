#include "mgtd/classifiers.hpp"

#include "mgtd/errors.hpp"

#include <algorithm>
#include <cmath>

namespace mgtd {

NaiveBayesModel train_nb(const std::vector<FeatureVector>& X, const std::vector<int>& y,
                         std::size_t n_classes, double alpha) {
    if (alpha <= 0.0) {
        throw train_error("naive Bayes smoothing alpha must be > 0");
    }
    if (X.empty() || X.size() != y.size()) {
        throw train_error("training set is empty or labels do not match");
    }

    NaiveBayesModel model;
    model.n_classes = n_classes;
    model.dim = X[0].total_dim;
    model.alpha = alpha;
    model.log_priors.assign(n_classes, 0.0);
    model.log_likelihoods.assign(n_classes * model.dim, 0.0);

    std::vector<double> class_counts(n_classes, 0.0);
    std::vector<double> feature_totals(n_classes * model.dim, 0.0);
    for (std::size_t i = 0; i < X.size(); ++i) {
        auto c = static_cast<std::size_t>(y[i]);
        class_counts[c] += 1.0;
        double* totals = feature_totals.data() + c * model.dim;
        for (const auto& [idx, v] : X[i].sparse) totals[idx] += std::max(v, 0.0);
        if (model.dim >= 2) {
            totals[model.dim - 2] += std::max(X[i].dense_extra[0], 0.0);
            totals[model.dim - 1] += std::max(X[i].dense_extra[1], 0.0);
        }
    }

    const double n = static_cast<double>(X.size());
    const double d = static_cast<double>(model.dim);
    for (std::size_t c = 0; c < n_classes; ++c) {
        model.log_priors[c] = std::log(class_counts[c] / n); // -inf for absent classes
        double class_total = 0.0;
        const double* totals = feature_totals.data() + c * model.dim;
        for (std::size_t j = 0; j < model.dim; ++j) class_total += totals[j];
        double denom = std::log(class_total + alpha * d);
        double* ll = model.log_likelihoods.data() + c * model.dim;
        for (std::size_t j = 0; j < model.dim; ++j) {
            ll[j] = std::log(totals[j] + alpha) - denom;
        }
    }
    return model;
}

std::vector<double> NaiveBayesModel::predict_proba(const FeatureVector& x) const {
    std::vector<double> scores(n_classes);
    for (std::size_t c = 0; c < n_classes; ++c) {
        const double* ll = log_likelihoods.data() + c * dim;
        double s = log_priors[c];
        for (const auto& [idx, v] : x.sparse) s += std::max(v, 0.0) * ll[idx];
        if (dim >= 2) {
            s += std::max(x.dense_extra[0], 0.0) * ll[dim - 2];
            s += std::max(x.dense_extra[1], 0.0) * ll[dim - 1];
        }
        scores[c] = s;
    }
    double max_s = *std::max_element(scores.begin(), scores.end());
    double denom = 0.0;
    for (double& s : scores) {
        s = std::exp(s - max_s);
        denom += s;
    }
    for (double& s : scores) s /= denom;
    return scores;
}

} // namespace mgtd

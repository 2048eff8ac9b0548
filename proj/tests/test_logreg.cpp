#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mgtd/classifiers.hpp"
#include "mgtd/errors.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <vector>

using namespace mgtd;

namespace {

// Dense row -> FeatureVector; the last two values are the dense extras.
FeatureVector fv_from(const std::vector<double>& dense) {
    FeatureVector fv;
    fv.total_dim = dense.size();
    for (std::size_t j = 0; j + 2 < dense.size(); ++j) {
        if (dense[j] != 0.0) fv.sparse.emplace_back(static_cast<int>(j), dense[j]);
    }
    fv.dense_extra[0] = dense[dense.size() - 2];
    fv.dense_extra[1] = dense[dense.size() - 1];
    return fv;
}

// Independent loss recomputation: dense dot products, direct softmax/sigmoid.
double oracle_loss(const std::vector<double>& weights, const std::vector<double>& bias,
                   std::size_t rows, std::size_t dim, const std::vector<std::vector<double>>& X,
                   const std::vector<int>& y, double l2) {
    double loss = 0.0;
    for (std::size_t i = 0; i < X.size(); ++i) {
        std::vector<double> m(rows, 0.0);
        for (std::size_t k = 0; k < rows; ++k) {
            m[k] = bias[k];
            for (std::size_t j = 0; j < dim; ++j) m[k] += weights[k * dim + j] * X[i][j];
        }
        if (rows == 1) {
            double p = 1.0 / (1.0 + std::exp(-m[0]));
            loss += y[i] == 1 ? -std::log(p) : -std::log(1.0 - p);
        } else {
            double denom = 0.0;
            for (double v : m) denom += std::exp(v);
            loss += -std::log(std::exp(m[static_cast<std::size_t>(y[i])]) / denom);
        }
    }
    loss /= static_cast<double>(X.size());
    double reg = 0.0;
    for (double w : weights) reg += w * w;
    return loss + 0.5 * l2 * reg;
}

// Zero-init perceptron; returns true when it reaches zero training errors,
// i.e. the set is linearly separable.
bool perceptron_separates(const std::vector<std::vector<double>>& X, const std::vector<int>& y,
                          std::size_t max_epochs = 2000) {
    std::size_t dim = X[0].size();
    std::vector<double> w(dim, 0.0);
    double b = 0.0;
    for (std::size_t epoch = 0; epoch < max_epochs; ++epoch) {
        std::size_t errors = 0;
        for (std::size_t i = 0; i < X.size(); ++i) {
            double m = b;
            for (std::size_t j = 0; j < dim; ++j) m += w[j] * X[i][j];
            int pred = m > 0.0 ? 1 : 0;
            if (pred != y[i]) {
                double dir = y[i] == 1 ? 1.0 : -1.0;
                for (std::size_t j = 0; j < dim; ++j) w[j] += dir * X[i][j];
                b += dir;
                ++errors;
            }
        }
        if (errors == 0) return true;
    }
    return false;
}

struct Blobs {
    std::vector<std::vector<double>> dense;
    std::vector<FeatureVector> X;
    std::vector<int> y;
};

Blobs make_blobs(const std::vector<std::pair<double, double>>& centers, std::size_t per_class,
                 double sigma, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, sigma);
    Blobs blobs;
    for (std::size_t c = 0; c < centers.size(); ++c) {
        for (std::size_t i = 0; i < per_class; ++i) {
            std::vector<double> row = {centers[c].first + noise(rng),
                                       centers[c].second + noise(rng), 0.0, 0.0};
            blobs.dense.push_back(row);
            blobs.X.push_back(fv_from(row));
            blobs.y.push_back(static_cast<int>(c));
        }
    }
    return blobs;
}

} // namespace

TEST_CASE("analytic gradient matches central finite differences") {
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double h = 1e-5;

    for (std::size_t n_classes : {std::size_t(2), std::size_t(3)}) {
        const std::size_t dim = 5;
        const std::size_t rows = n_classes == 2 ? 1 : n_classes;
        const std::size_t n = 24;
        std::vector<std::vector<double>> dense;
        std::vector<FeatureVector> X;
        std::vector<int> y;
        std::uniform_int_distribution<int> label(0, static_cast<int>(n_classes) - 1);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> row(dim);
            for (double& v : row) v = gauss(rng);
            dense.push_back(row);
            X.push_back(fv_from(row));
            y.push_back(label(rng));
        }

        for (int point = 0; point < 5; ++point) {
            LogisticRegressionModel model;
            model.n_classes = n_classes;
            model.dim = dim;
            model.l2 = 1e-4;
            model.weights.resize(rows * dim);
            model.bias.resize(rows);
            for (double& w : model.weights) w = 0.5 * gauss(rng);
            for (double& b : model.bias) b = 0.5 * gauss(rng);

            std::vector<double> grad_w, grad_b;
            logreg_gradient(model, X, y, grad_w, grad_b);

            double max_rel = 0.0;
            for (std::size_t j = 0; j < grad_w.size(); ++j) {
                std::vector<double> plus = model.weights, minus = model.weights;
                plus[j] += h;
                minus[j] -= h;
                double fd = (oracle_loss(plus, model.bias, rows, dim, dense, y, model.l2) -
                             oracle_loss(minus, model.bias, rows, dim, dense, y, model.l2)) /
                            (2.0 * h);
                double rel = std::abs(grad_w[j] - fd) / std::max(1e-6, std::abs(fd));
                max_rel = std::max(max_rel, rel);
            }
            for (std::size_t k = 0; k < grad_b.size(); ++k) {
                std::vector<double> plus = model.bias, minus = model.bias;
                plus[k] += h;
                minus[k] -= h;
                double fd = (oracle_loss(model.weights, plus, rows, dim, dense, y, model.l2) -
                             oracle_loss(model.weights, minus, rows, dim, dense, y, model.l2)) /
                            (2.0 * h);
                double rel = std::abs(grad_b[k] - fd) / std::max(1e-6, std::abs(fd));
                max_rel = std::max(max_rel, rel);
            }
            CHECK(max_rel < 1e-4);
        }
    }
}

TEST_CASE("zero-initialized binary model predicts 0.5 everywhere") {
    Blobs blobs = make_blobs({{-2, -2}, {2, 2}}, 10, 0.5, 77);
    LogRegParams params;
    params.epochs = 0;
    LogisticRegressionModel model = train_logreg(blobs.X, blobs.y, 2, params);
    for (const FeatureVector& x : blobs.X) {
        std::vector<double> p = model.predict_proba(x);
        CHECK(p[0] == 0.5);
        CHECK(p[1] == 0.5);
    }
}

TEST_CASE("separable 200-point set reaches 0.99 train accuracy") {
    Blobs blobs = make_blobs({{-2, -2}, {2, 2}}, 100, 0.5, 1234);
    REQUIRE(perceptron_separates(blobs.dense, blobs.y)); // independent separability check

    LogisticRegressionModel model = train_logreg(blobs.X, blobs.y, 2);
    std::size_t correct = 0;
    for (std::size_t i = 0; i < blobs.X.size(); ++i) {
        std::vector<double> p = model.predict_proba(blobs.X[i]);
        int pred = p[1] > p[0] ? 1 : 0;
        if (pred == blobs.y[i]) ++correct;
    }
    CHECK(static_cast<double>(correct) / static_cast<double>(blobs.X.size()) >= 0.99);
}

TEST_CASE("training loss is non-increasing across epochs") {
    Blobs blobs = make_blobs({{-1, -1}, {1, 1}}, 40, 1.2, 5150);
    double prev = 1e300;
    for (std::size_t epochs = 0; epochs <= 10; ++epochs) {
        LogRegParams params;
        params.epochs = epochs;
        LogisticRegressionModel model = train_logreg(blobs.X, blobs.y, 2, params);
        double loss = logreg_loss(model, blobs.X, blobs.y);
        CHECK(loss <= prev + 1e-12);
        prev = loss;
    }
}

TEST_CASE("multiclass softmax fits 3 blobs") {
    Blobs blobs = make_blobs({{4, 0}, {0, 4}, {-4, -4}}, 50, 0.6, 31337);
    LogisticRegressionModel model = train_logreg(blobs.X, blobs.y, 3);
    std::size_t correct = 0;
    for (std::size_t i = 0; i < blobs.X.size(); ++i) {
        std::vector<double> p = model.predict_proba(blobs.X[i]);
        int pred = static_cast<int>(std::max_element(p.begin(), p.end()) - p.begin());
        if (pred == blobs.y[i]) ++correct;
        double sum = p[0] + p[1] + p[2];
        CHECK(std::abs(sum - 1.0) < 1e-9);
    }
    CHECK(static_cast<double>(correct) / static_cast<double>(blobs.X.size()) >= 0.95);
}

TEST_CASE("single-class training set is an error") {
    std::vector<FeatureVector> X = {fv_from({1, 0, 0, 0}), fv_from({0, 1, 0, 0})};
    std::vector<int> y = {1, 1};
    CHECK_THROWS_AS(train_logreg(X, y, 2), train_error);
}

TEST_CASE("non-finite features raise a divergence error") {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<FeatureVector> X = {fv_from({inf, 0, 0, 0}), fv_from({-inf, 0, 0, 0}),
                                    fv_from({inf, 1, 0, 0}), fv_from({-inf, -1, 0, 0})};
    std::vector<int> y = {1, 0, 1, 0};
    try {
        train_logreg(X, y, 2);
        FAIL("expected train_error");
    } catch (const train_error& e) {
        CHECK(std::string(e.what()).find("diverged") != std::string::npos);
    }
}

TEST_CASE("binary decision is invariant to an all-zero feature column") {
    Blobs blobs = make_blobs({{-2, -2}, {2, 2}}, 30, 0.8, 99);
    // same data with one extra always-zero sparse column
    std::vector<FeatureVector> wide;
    for (const auto& row : blobs.dense) {
        wide.push_back(fv_from({row[0], row[1], 0.0, 0.0, 0.0}));
    }
    LogisticRegressionModel narrow = train_logreg(blobs.X, blobs.y, 2);
    LogisticRegressionModel padded = train_logreg(wide, blobs.y, 2);

    CHECK(padded.weights[2] == 0.0); // dead feature stays at zero init
    for (std::size_t i = 0; i < blobs.X.size(); ++i) {
        double p_narrow = narrow.predict_proba(blobs.X[i])[1];
        double p_padded = padded.predict_proba(wide[i])[1];
        CHECK((p_narrow > 0.5) == (p_padded > 0.5));
    }
}

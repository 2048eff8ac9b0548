#include "mgtd/classifiers.hpp"

#include "mgtd/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace mgtd {

namespace {

double softplus(double m) {
    // log(1 + e^m) without overflow
    return m > 0.0 ? m + std::log1p(std::exp(-m)) : std::log1p(std::exp(m));
}

double sigmoid(double m) {
    if (m >= 0.0) {
        return 1.0 / (1.0 + std::exp(-m));
    }
    double e = std::exp(m);
    return e / (1.0 + e);
}

// w[row] . x + b[row]
double row_margin(const std::vector<double>& weights, const std::vector<double>& bias,
                  std::size_t row, std::size_t dim, const FeatureVector& x) {
    const double* w = weights.data() + row * dim;
    double m = bias[row];
    for (const auto& [idx, v] : x.sparse) m += w[idx] * v;
    if (dim >= 2) {
        m += w[dim - 2] * x.dense_extra[0];
        m += w[dim - 1] * x.dense_extra[1];
    }
    return m;
}

void check_dims(const std::vector<FeatureVector>& X, const std::vector<int>& y) {
    if (X.empty() || X.size() != y.size()) {
        throw train_error("training set is empty or labels do not match");
    }
    for (const FeatureVector& fv : X) {
        if (fv.total_dim != X[0].total_dim) {
            throw train_error("inconsistent feature dimensions in training set");
        }
    }
}

struct Workspace {
    std::vector<double> margins; // n x rows
    std::vector<double> probs;   // n x rows (multiclass only)
};

double loss_at(const std::vector<double>& weights, const std::vector<double>& bias,
               std::size_t rows, std::size_t dim, const std::vector<FeatureVector>& X,
               const std::vector<int>& y, double l2, bool binary) {
    const double n = static_cast<double>(X.size());
    double loss = 0.0;
    for (std::size_t i = 0; i < X.size(); ++i) {
        if (binary) {
            double m = row_margin(weights, bias, 0, dim, X[i]);
            loss += softplus(m) - (y[i] == 1 ? m : 0.0);
        } else {
            double max_m = -1e300;
            std::vector<double> ms(rows);
            for (std::size_t k = 0; k < rows; ++k) {
                ms[k] = row_margin(weights, bias, k, dim, X[i]);
                max_m = std::max(max_m, ms[k]);
            }
            double lse = 0.0;
            for (double m : ms) lse += std::exp(m - max_m);
            loss += max_m + std::log(lse) - ms[static_cast<std::size_t>(y[i])];
        }
    }
    loss /= n;
    double reg = 0.0;
    for (double w : weights) reg += w * w;
    return loss + 0.5 * l2 * reg;
}

void gradient_at(const std::vector<double>& weights, const std::vector<double>& bias,
                 std::size_t rows, std::size_t dim, const std::vector<FeatureVector>& X,
                 const std::vector<int>& y, double l2, bool binary,
                 std::vector<double>& grad_w, std::vector<double>& grad_b) {
    const double inv_n = 1.0 / static_cast<double>(X.size());
    std::fill(grad_w.begin(), grad_w.end(), 0.0);
    std::fill(grad_b.begin(), grad_b.end(), 0.0);
    std::vector<double> ms(rows);
    for (std::size_t i = 0; i < X.size(); ++i) {
        if (binary) {
            double m = row_margin(weights, bias, 0, dim, X[i]);
            ms[0] = sigmoid(m) - (y[i] == 1 ? 1.0 : 0.0);
        } else {
            double max_m = -1e300;
            for (std::size_t k = 0; k < rows; ++k) {
                ms[k] = row_margin(weights, bias, k, dim, X[i]);
                max_m = std::max(max_m, ms[k]);
            }
            double denom = 0.0;
            for (double& m : ms) {
                m = std::exp(m - max_m);
                denom += m;
            }
            for (std::size_t k = 0; k < rows; ++k) {
                ms[k] = ms[k] / denom - (static_cast<std::size_t>(y[i]) == k ? 1.0 : 0.0);
            }
        }
        for (std::size_t k = 0; k < rows; ++k) {
            double r = ms[k] * inv_n;
            if (r == 0.0) continue;
            double* gw = grad_w.data() + k * dim;
            for (const auto& [idx, v] : X[i].sparse) gw[idx] += r * v;
            if (dim >= 2) {
                gw[dim - 2] += r * X[i].dense_extra[0];
                gw[dim - 1] += r * X[i].dense_extra[1];
            }
            grad_b[k] += r;
        }
    }
    for (std::size_t j = 0; j < grad_w.size(); ++j) grad_w[j] += l2 * weights[j];
}

} // namespace

double logreg_loss(const LogisticRegressionModel& model, const std::vector<FeatureVector>& X,
                   const std::vector<int>& y) {
    return loss_at(model.weights, model.bias, model.rows(), model.dim, X, y, model.l2,
                   model.n_classes == 2);
}

void logreg_gradient(const LogisticRegressionModel& model, const std::vector<FeatureVector>& X,
                     const std::vector<int>& y, std::vector<double>& grad_weights,
                     std::vector<double>& grad_bias) {
    grad_weights.assign(model.weights.size(), 0.0);
    grad_bias.assign(model.bias.size(), 0.0);
    gradient_at(model.weights, model.bias, model.rows(), model.dim, X, y, model.l2,
                model.n_classes == 2, grad_weights, grad_bias);
}

LogisticRegressionModel train_logreg(const std::vector<FeatureVector>& X,
                                     const std::vector<int>& y, std::size_t n_classes,
                                     const LogRegParams& params) {
    check_dims(X, y);
    std::set<int> distinct(y.begin(), y.end());
    if (distinct.size() < 2) {
        throw train_error("single-class training set");
    }

    LogisticRegressionModel model;
    model.n_classes = n_classes;
    model.dim = X[0].total_dim;
    model.l2 = params.l2;
    const std::size_t rows = model.rows();
    model.weights.assign(rows * model.dim, 0.0);
    model.bias.assign(rows, 0.0);
    const bool binary = n_classes == 2;

    double loss = loss_at(model.weights, model.bias, rows, model.dim, X, y, params.l2, binary);
    if (!std::isfinite(loss)) {
        throw train_error("diverged: non-finite loss (reduce the learning rate)");
    }

    // Fixed diagonal preconditioner from per-feature second moments. The
    // TF-IDF block is unit-scale while the readability extras are not; a
    // plain gradient step cannot serve both within the epoch budget. The
    // objective and its minimizers are unchanged.
    std::vector<double> precond(model.dim, 1.0);
    {
        std::vector<double> mean_sq(model.dim, 0.0);
        for (const FeatureVector& fv : X) {
            for (const auto& [idx, v] : fv.sparse) mean_sq[static_cast<std::size_t>(idx)] += v * v;
            if (model.dim >= 2) {
                mean_sq[model.dim - 2] += fv.dense_extra[0] * fv.dense_extra[0];
                mean_sq[model.dim - 1] += fv.dense_extra[1] * fv.dense_extra[1];
            }
        }
        for (std::size_t j = 0; j < model.dim; ++j) {
            precond[j] = 1.0 / std::max(1e-8, mean_sq[j] / static_cast<double>(X.size()));
        }
    }

    std::vector<double> grad_w(rows * model.dim), grad_b(rows);
    std::vector<double> trial_w(rows * model.dim), trial_b(rows);
    double lr = params.learning_rate;

    for (std::size_t epoch = 0; epoch < params.epochs; ++epoch) {
        gradient_at(model.weights, model.bias, rows, model.dim, X, y, params.l2, binary, grad_w,
                    grad_b);
        // Backtrack until the step does not increase the loss.
        double trial_loss = 0.0;
        bool accepted = false;
        for (int halving = 0; halving <= 60; ++halving) {
            for (std::size_t k = 0; k < rows; ++k) {
                double* tw = trial_w.data() + k * model.dim;
                const double* w = model.weights.data() + k * model.dim;
                const double* gw = grad_w.data() + k * model.dim;
                for (std::size_t j = 0; j < model.dim; ++j) {
                    tw[j] = w[j] - lr * precond[j] * gw[j];
                }
                trial_b[k] = model.bias[k] - lr * grad_b[k];
            }
            trial_loss = loss_at(trial_w, trial_b, rows, model.dim, X, y, params.l2, binary);
            if (std::isfinite(trial_loss) && trial_loss <= loss) {
                accepted = true;
                break;
            }
            lr *= 0.5;
        }
        if (!accepted) {
            if (!std::isfinite(trial_loss)) {
                throw train_error("diverged: non-finite loss (reduce the learning rate)");
            }
            break; // no descent direction at any usable step size
        }
        model.weights.swap(trial_w);
        model.bias.swap(trial_b);
        double improvement = loss - trial_loss;
        loss = trial_loss;
        if (improvement < params.tol) break;
    }
    return model;
}

std::vector<double> LogisticRegressionModel::predict_proba(const FeatureVector& x) const {
    std::vector<double> out(n_classes, 0.0);
    if (n_classes == 2) {
        double p = sigmoid(row_margin(weights, bias, 0, dim, x));
        out[0] = 1.0 - p;
        out[1] = p;
        return out;
    }
    double max_m = -1e300;
    for (std::size_t k = 0; k < n_classes; ++k) {
        out[k] = row_margin(weights, bias, k, dim, x);
        max_m = std::max(max_m, out[k]);
    }
    double denom = 0.0;
    for (double& m : out) {
        m = std::exp(m - max_m);
        denom += m;
    }
    for (double& m : out) m /= denom;
    return out;
}

} // namespace mgtd

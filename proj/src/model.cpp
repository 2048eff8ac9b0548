#include "mgtd/classifiers.hpp"

#include "mgtd/errors.hpp"
#include "mgtd/util.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>

namespace mgtd {

using nlohmann::json;

namespace {
constexpr int kModelVersion = 1;

json doubles_to_json(const std::vector<double>& values) {
    json arr = json::array();
    for (double v : values) arr.push_back(double_to_decimal(v));
    return arr;
}

std::vector<double> doubles_from_json(const json& arr) {
    std::vector<double> out;
    out.reserve(arr.size());
    for (const json& v : arr) out.push_back(decimal_to_double(v.get<std::string>()));
    return out;
}

json labels_to_json(const LabelSpace& labels) {
    json arr = json::array();
    for (const auto& [id, name] : labels.classes) arr.push_back({id, name});
    return arr;
}

LabelSpace labels_from_json(const json& obj) {
    LabelSpace ls;
    ls.task = obj.at("task").get<std::string>() == "binary" ? Task::binary : Task::multiclass;
    for (const json& row : obj.at("classes")) {
        ls.classes.emplace_back(row.at(0).get<int>(), row.at(1).get<std::string>());
    }
    return ls;
}

} // namespace

const char* model_kind_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::logistic_regression: return "logreg";
        case ModelKind::naive_bayes: return "naive_bayes";
        case ModelKind::boosted_trees: return "gbdt";
    }
    return "unknown";
}

ModelKind model_kind_from_name(const std::string& name) {
    std::string n = ascii_lower(name);
    if (n == "logreg" || n == "lr" || n == "logistic" || n == "logistic_regression") {
        return ModelKind::logistic_regression;
    }
    if (n == "nb" || n == "naive_bayes" || n == "multinomialnb" || n == "naivebayes") {
        return ModelKind::naive_bayes;
    }
    if (n == "gbdt" || n == "xgboost" || n == "boosted_trees" || n == "gbt") {
        return ModelKind::boosted_trees;
    }
    throw input_error("unknown model kind '" + name + "' (expected logreg, nb, or gbdt)");
}

std::vector<double> predict_proba(const TrainedModel& model, const FeatureVector& x) {
    if (x.total_dim != model.feature_dim) {
        throw input_error("feature dimension mismatch: expected " +
                          std::to_string(model.feature_dim) + ", got " +
                          std::to_string(x.total_dim));
    }
    return std::visit([&](const auto& m) { return m.predict_proba(x); }, model.model);
}

int predict_label(const TrainedModel& model, const FeatureVector& x) {
    std::vector<double> probs = predict_proba(model, x);
    return static_cast<int>(std::max_element(probs.begin(), probs.end()) - probs.begin());
}

void save_model(const TrainedModel& model, const std::string& path) {
    json obj;
    obj["format"] = "mgtd.model";
    obj["version"] = kModelVersion;
    obj["kind"] = model_kind_name(model.kind);
    obj["task"] = model.labels.task == Task::binary ? "binary" : "multiclass";
    obj["classes"] = labels_to_json(model.labels);
    obj["feature_dim"] = model.feature_dim;
    obj["vocab_checksum"] = model.vocab_checksum;
    obj["seed"] = model.seed;

    if (const auto* lr = std::get_if<LogisticRegressionModel>(&model.model)) {
        json m;
        m["n_classes"] = lr->n_classes;
        m["dim"] = lr->dim;
        m["l2"] = double_to_decimal(lr->l2);
        m["weights"] = doubles_to_json(lr->weights);
        m["bias"] = doubles_to_json(lr->bias);
        obj["logreg"] = std::move(m);
    } else if (const auto* nb = std::get_if<NaiveBayesModel>(&model.model)) {
        json m;
        m["n_classes"] = nb->n_classes;
        m["dim"] = nb->dim;
        m["alpha"] = double_to_decimal(nb->alpha);
        m["log_priors"] = doubles_to_json(nb->log_priors);
        m["log_likelihoods"] = doubles_to_json(nb->log_likelihoods);
        obj["naive_bayes"] = std::move(m);
    } else if (const auto* gb = std::get_if<BoostedTreesModel>(&model.model)) {
        json m;
        m["n_classes"] = gb->n_classes;
        m["dim"] = gb->dim;
        m["params"] = {{"rounds", gb->params.rounds},
                       {"max_depth", gb->params.max_depth},
                       {"eta", double_to_decimal(gb->params.eta)},
                       {"lambda", double_to_decimal(gb->params.lambda)},
                       {"gamma", double_to_decimal(gb->params.gamma)},
                       {"min_child_weight", double_to_decimal(gb->params.min_child_weight)}};
        m["base_scores"] = doubles_to_json(gb->base_scores);
        json trees = json::array();
        for (const Tree& tree : gb->trees) {
            json nodes = json::array();
            for (const TreeNode& node : tree.nodes) {
                if (node.is_leaf()) {
                    nodes.push_back({-1, double_to_decimal(node.value)});
                } else {
                    nodes.push_back(
                        {node.feature, double_to_decimal(node.threshold), node.left, node.right});
                }
            }
            trees.push_back(std::move(nodes));
        }
        m["trees"] = std::move(trees);
        obj["gbdt"] = std::move(m);
    }

    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write '" + path + "'");
    out << obj.dump(2) << '\n';
    if (!out) throw io_error("write failed for '" + path + "'");
}

TrainedModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open '" + path + "'");
    json obj;
    try {
        in >> obj;
    } catch (const json::exception& e) {
        throw io_error("cannot parse '" + path + "': " + e.what());
    }
    if (obj.value("format", "") != "mgtd.model") {
        throw artifact_error("'" + path + "' is not a model file");
    }
    if (obj.value("version", -1) != kModelVersion) {
        throw artifact_error("model version mismatch in '" + path + "'");
    }

    TrainedModel model;
    model.kind = model_kind_from_name(obj.at("kind").get<std::string>());
    model.labels = labels_from_json(obj);
    model.feature_dim = obj.at("feature_dim").get<std::size_t>();
    model.vocab_checksum = obj.at("vocab_checksum").get<std::string>();
    model.seed = obj.at("seed").get<std::uint64_t>();

    if (model.kind == ModelKind::logistic_regression) {
        const json& m = obj.at("logreg");
        LogisticRegressionModel lr;
        lr.n_classes = m.at("n_classes").get<std::size_t>();
        lr.dim = m.at("dim").get<std::size_t>();
        lr.l2 = decimal_to_double(m.at("l2").get<std::string>());
        lr.weights = doubles_from_json(m.at("weights"));
        lr.bias = doubles_from_json(m.at("bias"));
        model.model = std::move(lr);
    } else if (model.kind == ModelKind::naive_bayes) {
        const json& m = obj.at("naive_bayes");
        NaiveBayesModel nb;
        nb.n_classes = m.at("n_classes").get<std::size_t>();
        nb.dim = m.at("dim").get<std::size_t>();
        nb.alpha = decimal_to_double(m.at("alpha").get<std::string>());
        nb.log_priors = doubles_from_json(m.at("log_priors"));
        nb.log_likelihoods = doubles_from_json(m.at("log_likelihoods"));
        model.model = std::move(nb);
    } else {
        const json& m = obj.at("gbdt");
        BoostedTreesModel gb;
        gb.n_classes = m.at("n_classes").get<std::size_t>();
        gb.dim = m.at("dim").get<std::size_t>();
        const json& p = m.at("params");
        gb.params.rounds = p.at("rounds").get<std::size_t>();
        gb.params.max_depth = p.at("max_depth").get<std::size_t>();
        gb.params.eta = decimal_to_double(p.at("eta").get<std::string>());
        gb.params.lambda = decimal_to_double(p.at("lambda").get<std::string>());
        gb.params.gamma = decimal_to_double(p.at("gamma").get<std::string>());
        gb.params.min_child_weight =
            decimal_to_double(p.at("min_child_weight").get<std::string>());
        gb.base_scores = doubles_from_json(m.at("base_scores"));
        for (const json& tnodes : m.at("trees")) {
            Tree tree;
            for (const json& row : tnodes) {
                TreeNode node;
                int feature = row.at(0).get<int>();
                if (feature < 0) {
                    node.feature = -1;
                    node.value = decimal_to_double(row.at(1).get<std::string>());
                } else {
                    node.feature = feature;
                    node.threshold = decimal_to_double(row.at(1).get<std::string>());
                    node.left = row.at(2).get<int>();
                    node.right = row.at(3).get<int>();
                }
                tree.nodes.push_back(node);
            }
            gb.trees.push_back(std::move(tree));
        }
        model.model = std::move(gb);
    }
    return model;
}

} // namespace mgtd

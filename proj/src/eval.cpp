#include "mgtd/eval.hpp"

#include "mgtd/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_set>

namespace mgtd {

using nlohmann::json;

namespace {

std::string format_ids(const std::vector<std::string>& ids) {
    std::string out;
    std::size_t shown = std::min<std::size_t>(ids.size(), 10);
    for (std::size_t i = 0; i < shown; ++i) {
        if (i > 0) out += ", ";
        out += ids[i];
    }
    if (ids.size() > shown) {
        out += ", … (" + std::to_string(ids.size() - shown) + " more)";
    }
    return out;
}

std::string fixed3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

} // namespace

EvalReport score(const std::unordered_map<std::string, int>& predictions,
                 const DatasetSplit& gold, const LabelSpace& space) {
    std::vector<std::string> missing;
    for (const Document& doc : gold.documents) {
        if (!doc.label) {
            throw input_error("gold document '" + doc.id + "' is unlabeled");
        }
        if (!predictions.count(doc.id)) missing.push_back(doc.id);
    }
    if (!missing.empty()) {
        throw input_error("predictions missing gold ids: " + format_ids(missing));
    }
    if (predictions.size() != gold.documents.size()) {
        std::unordered_set<std::string> gold_ids;
        for (const Document& doc : gold.documents) gold_ids.insert(doc.id);
        std::vector<std::string> extra;
        for (const auto& [id, label] : predictions) {
            if (!gold_ids.count(id)) extra.push_back(id);
        }
        std::sort(extra.begin(), extra.end());
        throw input_error("predictions contain ids not in gold: " + format_ids(extra));
    }

    const std::size_t k = space.size();
    EvalReport report;
    report.confusion.assign(k, std::vector<std::size_t>(k, 0));
    report.total = gold.documents.size();

    std::size_t correct = 0;
    for (const Document& doc : gold.documents) {
        int pred = predictions.at(doc.id);
        if (!space.valid(pred)) {
            throw input_error("prediction for '" + doc.id + "' has out-of-range label " +
                              std::to_string(pred));
        }
        int truth = *doc.label;
        ++report.confusion[static_cast<std::size_t>(truth)][static_cast<std::size_t>(pred)];
        if (pred == truth) ++correct;
    }
    report.accuracy =
        report.total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(report.total);

    double f1_sum = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
        ClassMetrics m;
        m.class_id = space.classes[c].first;
        m.name = space.classes[c].second;
        std::size_t tp = report.confusion[c][c];
        std::size_t gold_c = 0, pred_c = 0;
        for (std::size_t j = 0; j < k; ++j) {
            gold_c += report.confusion[c][j];
            pred_c += report.confusion[j][c];
        }
        m.support = gold_c;
        m.precision = pred_c == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(pred_c);
        m.recall = gold_c == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(gold_c);
        m.f1 = (m.precision + m.recall) == 0.0
                   ? 0.0
                   : 2.0 * m.precision * m.recall / (m.precision + m.recall);
        f1_sum += m.f1;
        report.per_class.push_back(std::move(m));
    }
    report.macro_f1 = k == 0 ? 0.0 : f1_sum / static_cast<double>(k);
    return report;
}

std::string report_text(const EvalReport& report, const LabelSpace& space) {
    std::string out;
    out += "documents: " + std::to_string(report.total) + "\n";
    out += "accuracy:  " + fixed3(report.accuracy) + "\n";
    out += "macro F1:  " + fixed3(report.macro_f1) + "\n";
    out += "\nclass          precision  recall  f1     support\n";
    for (const ClassMetrics& m : report.per_class) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "%-14s %9s %7s %6s %8zu\n", m.name.c_str(),
                      fixed3(m.precision).c_str(), fixed3(m.recall).c_str(), fixed3(m.f1).c_str(),
                      m.support);
        out += buf;
    }
    out += "\nconfusion (rows gold, cols predicted):\n";
    for (std::size_t i = 0; i < report.confusion.size(); ++i) {
        char head[64];
        std::snprintf(head, sizeof(head), "%-14s", space.classes[i].second.c_str());
        out += head;
        for (std::size_t j = 0; j < report.confusion[i].size(); ++j) {
            char cell[32];
            std::snprintf(cell, sizeof(cell), " %7zu", report.confusion[i][j]);
            out += cell;
        }
        out += "\n";
    }
    return out;
}

json report_json(const EvalReport& report, const LabelSpace& space) {
    json obj;
    obj["documents"] = report.total;
    obj["accuracy"] = report.accuracy;
    obj["macro_f1"] = report.macro_f1;
    json per_class = json::array();
    for (const ClassMetrics& m : report.per_class) {
        per_class.push_back({{"class", m.class_id},
                             {"name", m.name},
                             {"precision", m.precision},
                             {"recall", m.recall},
                             {"f1", m.f1},
                             {"support", m.support}});
    }
    obj["per_class"] = std::move(per_class);
    obj["confusion"] = report.confusion;
    obj["classes"] = json::array();
    for (const auto& [id, name] : space.classes) obj["classes"].push_back(name);
    return obj;
}

std::string comparison_text(const Comparison& comparison) {
    std::size_t width = 6;
    for (const auto& [name, report] : comparison.rows) width = std::max(width, name.size());
    std::string out;
    char head[128];
    std::snprintf(head, sizeof(head), "%-*s  %8s  %8s\n", static_cast<int>(width), "method",
                  "accuracy", "macro_f1");
    out += head;
    for (const auto& [name, report] : comparison.rows) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%-*s  %8s  %8s\n", static_cast<int>(width), name.c_str(),
                      fixed3(report.accuracy).c_str(), fixed3(report.macro_f1).c_str());
        out += buf;
    }
    return out;
}

json comparison_json(const Comparison& comparison) {
    json arr = json::array();
    for (const auto& [name, report] : comparison.rows) {
        arr.push_back({{"method", name},
                       {"accuracy", report.accuracy},
                       {"macro_f1", report.macro_f1}});
    }
    return arr;
}

} // namespace mgtd

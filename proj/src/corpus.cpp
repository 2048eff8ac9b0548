#include "mgtd/corpus.hpp"

#include "mgtd/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <unordered_set>

namespace mgtd {

using nlohmann::json;

LabelSpace LabelSpace::binary() {
    LabelSpace ls;
    ls.task = Task::binary;
    ls.classes = {{0, "human"}, {1, "machine"}};
    return ls;
}

LabelSpace LabelSpace::multiclass() {
    LabelSpace ls;
    ls.task = Task::multiclass;
    ls.classes = {{0, "human"},  {1, "chatGPT"}, {2, "cohere"},
                  {3, "davinci"}, {4, "bloomz"},  {5, "dolly"}};
    return ls;
}

namespace {

[[noreturn]] void line_error(const std::string& path, std::size_t line, const std::string& what) {
    throw io_error(path + ":" + std::to_string(line) + ": " + what);
}

std::string normalize_id(const json& j, const std::string& path, std::size_t line) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    line_error(path, line, "id must be a string or integer");
}

} // namespace

DatasetSplit load_jsonl(const std::string& path, const LabelSpace& space, bool labels_required,
                        SplitName name) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot open '" + path + "'");
    }

    DatasetSplit split;
    split.name = name;
    std::unordered_set<std::string> seen_ids;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::exception& e) {
            line_error(path, lineno, std::string("malformed JSON: ") + e.what());
        }
        if (!obj.is_object()) {
            line_error(path, lineno, "line is not a JSON object");
        }

        Document doc;
        if (!obj.contains("id")) line_error(path, lineno, "missing 'id' field");
        doc.id = normalize_id(obj["id"], path, lineno);
        if (!seen_ids.insert(doc.id).second) {
            line_error(path, lineno, "duplicate id '" + doc.id + "'");
        }

        if (!obj.contains("text")) line_error(path, lineno, "missing 'text' field");
        if (!obj["text"].is_string()) line_error(path, lineno, "'text' must be a string");
        doc.text = obj["text"].get<std::string>();
        if (doc.text.empty()) line_error(path, lineno, "empty 'text'");

        if (obj.contains("label") && !obj["label"].is_null()) {
            if (!obj["label"].is_number_integer()) {
                line_error(path, lineno, "'label' must be an integer");
            }
            int label = obj["label"].get<int>();
            if (!space.valid(label)) {
                line_error(path, lineno,
                           "label out of range: " + std::to_string(label) + " not in [0, " +
                               std::to_string(space.size()) + ")");
            }
            doc.label = label;
        } else if (labels_required) {
            line_error(path, lineno, "missing 'label' field");
        }

        if (obj.contains("model") && obj["model"].is_string()) {
            doc.model = obj["model"].get<std::string>();
        }
        if (obj.contains("source") && obj["source"].is_string()) {
            doc.source = obj["source"].get<std::string>();
        }

        split.documents.push_back(std::move(doc));
    }
    return split;
}

void save_jsonl(const DatasetSplit& split, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw io_error("cannot write '" + path + "'");
    }
    for (const Document& doc : split.documents) {
        json obj;
        obj["id"] = doc.id;
        obj["text"] = doc.text;
        if (doc.label) obj["label"] = *doc.label;
        if (doc.model) obj["model"] = *doc.model;
        if (!doc.source.empty()) obj["source"] = doc.source;
        out << obj.dump() << '\n';
    }
    if (!out) {
        throw io_error("write failed for '" + path + "'");
    }
}

std::map<int, std::size_t> class_counts(const DatasetSplit& split, const LabelSpace& space) {
    std::map<int, std::size_t> counts;
    for (const auto& [id, name] : space.classes) {
        counts[id] = 0;
    }
    for (const Document& doc : split.documents) {
        if (!doc.label) {
            throw input_error("unlabeled document '" + doc.id + "'");
        }
        ++counts[*doc.label];
    }
    return counts;
}

} // namespace mgtd

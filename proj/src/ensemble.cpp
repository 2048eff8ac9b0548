#include "mgtd/ensemble.hpp"

#include "mgtd/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>

namespace mgtd {

using nlohmann::json;

namespace {

std::string format_missing(const std::vector<std::string>& ids) {
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

} // namespace

VoteResult majority_vote(const std::vector<VoteInput>& inputs, const LabelSpace& space,
                         TiePolicy policy) {
    if (inputs.empty()) {
        throw input_error("majority vote needs at least one prediction set");
    }
    const VoteInput& first = inputs[0];
    for (std::size_t k = 1; k < inputs.size(); ++k) {
        std::vector<std::string> missing;
        for (const std::string& id : first.order) {
            if (!inputs[k].predictions.count(id)) missing.push_back(id);
        }
        if (inputs[k].predictions.size() != first.predictions.size() || !missing.empty()) {
            if (missing.empty()) {
                for (const auto& [id, label] : inputs[k].predictions) {
                    if (!first.predictions.count(id)) missing.push_back(id);
                }
                std::sort(missing.begin(), missing.end());
                throw input_error("prediction set '" + inputs[k].classifier_id +
                                  "' has ids absent from '" + first.classifier_id +
                                  "': " + format_missing(missing));
            }
            throw input_error("prediction set '" + inputs[k].classifier_id +
                              "' is missing ids: " + format_missing(missing));
        }
    }

    VoteResult result;
    result.votes.reserve(first.order.size());
    for (const std::string& id : first.order) {
        Vote vote;
        vote.id = id;
        for (const VoteInput& input : inputs) {
            int label = input.predictions.at(id);
            if (!space.valid(label)) {
                throw input_error("prediction set '" + input.classifier_id +
                                  "' has out-of-range label " + std::to_string(label));
            }
            ++vote.histogram[label];
        }
        std::size_t max_count = 0;
        for (const auto& [label, count] : vote.histogram) max_count = std::max(max_count, count);
        std::size_t at_max = 0;
        for (const auto& [label, count] : vote.histogram) {
            if (count == max_count) ++at_max;
        }
        vote.tie = at_max >= 2;

        if (!vote.tie || policy == TiePolicy::lowest_class) {
            // histogram is ordered by class id; the first maximal entry is
            // both the unique mode and the lowest-class tie-break.
            for (const auto& [label, count] : vote.histogram) {
                if (count == max_count) {
                    vote.label = label;
                    break;
                }
            }
        } else {
            // Earliest classifier whose prediction is among the tied classes.
            for (const VoteInput& input : inputs) {
                int label = input.predictions.at(id);
                if (vote.histogram.at(label) == max_count) {
                    vote.label = label;
                    break;
                }
            }
        }
        result.votes.push_back(std::move(vote));
    }
    return result;
}

VoteInput load_external_predictions(const std::string& path, const LabelSpace& space) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open '" + path + "'");

    VoteInput input;
    input.classifier_id = path;
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
            throw io_error(path + ":" + std::to_string(lineno) + ": malformed JSON: " + e.what());
        }
        if (!obj.is_object() || !obj.contains("id") || !obj.contains("label")) {
            throw io_error(path + ":" + std::to_string(lineno) + ": expected {id, label}");
        }
        std::string id;
        if (obj["id"].is_string()) {
            id = obj["id"].get<std::string>();
        } else if (obj["id"].is_number_integer()) {
            id = std::to_string(obj["id"].get<long long>());
        } else {
            throw io_error(path + ":" + std::to_string(lineno) + ": id must be string or integer");
        }
        if (!obj["label"].is_number_integer()) {
            throw io_error(path + ":" + std::to_string(lineno) + ": label must be an integer");
        }
        int label = obj["label"].get<int>();
        if (!space.valid(label)) {
            throw io_error(path + ":" + std::to_string(lineno) +
                           ": label out of range: " + std::to_string(label) + " not in [0, " +
                           std::to_string(space.size()) + ")");
        }
        if (!input.predictions.emplace(id, label).second) {
            throw io_error(path + ":" + std::to_string(lineno) + ": duplicate id '" + id + "'");
        }
        input.order.push_back(std::move(id));
    }
    return input;
}

void save_predictions(const VoteResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write '" + path + "'");
    for (const Vote& vote : result.votes) {
        json obj;
        obj["id"] = vote.id;
        obj["label"] = vote.label;
        out << obj.dump() << '\n';
    }
    if (!out) throw io_error("write failed for '" + path + "'");
}

void save_vote_report(const VoteResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write '" + path + "'");
    for (const Vote& vote : result.votes) {
        json obj;
        obj["id"] = vote.id;
        obj["label"] = vote.label;
        json votes = json::object();
        for (const auto& [label, count] : vote.histogram) {
            votes[std::to_string(label)] = count;
        }
        obj["votes"] = std::move(votes);
        obj["tie"] = vote.tie;
        out << obj.dump() << '\n';
    }
    if (!out) throw io_error("write failed for '" + path + "'");
}

} // namespace mgtd

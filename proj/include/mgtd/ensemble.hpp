#pragma once

#include "mgtd/corpus.hpp"

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace mgtd {

// One classifier's hard predictions. `order` preserves file order so voted
// output is reproducible.
struct VoteInput {
    std::string classifier_id;
    std::unordered_map<std::string, int> predictions;
    std::vector<std::string> order;
};

enum class TiePolicy { lowest_class, first_classifier };

struct Vote {
    std::string id;
    int label = 0;
    std::map<int, std::size_t> histogram;
    bool tie = false;
};

struct VoteResult {
    std::vector<Vote> votes; // in the first input's document order
};

// Modal class per document. Requires >= 1 input and identical id sets across
// inputs (error lists the first 10 missing ids). Tie flag is set whenever two
// or more classes share the max count.
VoteResult majority_vote(const std::vector<VoteInput>& inputs, const LabelSpace& space,
                         TiePolicy policy = TiePolicy::lowest_class);

// JSONL of {id, label}; rejects out-of-space labels and duplicate ids.
VoteInput load_external_predictions(const std::string& path, const LabelSpace& space);

// {id, label} lines, preserving vote order.
void save_predictions(const VoteResult& result, const std::string& path);

// {id, label, votes, tie} lines for inspection.
void save_vote_report(const VoteResult& result, const std::string& path);

} // namespace mgtd

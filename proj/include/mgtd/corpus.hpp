#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mgtd {

// One labeled or unlabeled text sample in the shared-task JSONL schema.
struct Document {
    std::string id;
    std::string text;
    std::optional<int> label;
    std::optional<std::string> model; // generator name, opaque metadata
    std::string source;               // domain/source tag, opaque metadata
};

enum class Task { binary, multiclass };

// Owns the class-id <-> name mapping for a task. Labels in files are
// integers; names exist only here.
struct LabelSpace {
    Task task = Task::binary;
    std::vector<std::pair<int, std::string>> classes;

    static LabelSpace binary();     // {0 human, 1 machine}
    static LabelSpace multiclass(); // human + the five generators

    std::size_t size() const { return classes.size(); }
    bool valid(int label) const { return label >= 0 && label < static_cast<int>(classes.size()); }
    const std::string& name(int label) const { return classes.at(static_cast<std::size_t>(label)).second; }
};

enum class SplitName { train, dev, test };

struct DatasetSplit {
    SplitName name = SplitName::train;
    std::vector<Document> documents; // file order

    std::size_t size() const { return documents.size(); }
};

// Reads one JSON object per line. `labels_required` makes a missing label an
// error; a present label must always be valid for `space`. Errors carry
// 1-based line numbers. Unknown keys are ignored.
DatasetSplit load_jsonl(const std::string& path, const LabelSpace& space, bool labels_required,
                        SplitName name = SplitName::train);

// Writes documents back out, one object per line, omitting absent fields.
// load -> save -> load round-trips exactly.
void save_jsonl(const DatasetSplit& split, const std::string& path);

// Per-class document counts; every document must be labeled.
std::map<int, std::size_t> class_counts(const DatasetSplit& split, const LabelSpace& space);

} // namespace mgtd

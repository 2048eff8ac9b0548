#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mgtd/errors.hpp"
#include "mgtd/eval.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace mgtd;

namespace {

DatasetSplit gold_from(const std::vector<int>& labels) {
    DatasetSplit split;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        Document doc;
        doc.id = "d" + std::to_string(i);
        doc.text = "x";
        doc.label = labels[i];
        split.documents.push_back(std::move(doc));
    }
    return split;
}

std::unordered_map<std::string, int> preds_from(const std::vector<int>& labels) {
    std::unordered_map<std::string, int> preds;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        preds["d" + std::to_string(i)] = labels[i];
    }
    return preds;
}

} // namespace

TEST_CASE("perfect predictions score 1.0 on both metrics") {
    LabelSpace space = LabelSpace::binary();
    std::vector<int> labels = {0, 1, 0, 1, 1};
    EvalReport report = score(preds_from(labels), gold_from(labels), space);
    CHECK(report.accuracy == 1.0);
    CHECK(report.macro_f1 == 1.0);
    CHECK(report.total == 5);
}

TEST_CASE("all-one-class predictions on a balanced binary set") {
    LabelSpace space = LabelSpace::binary();
    DatasetSplit gold = gold_from({0, 0, 1, 1});
    EvalReport report = score(preds_from({1, 1, 1, 1}), gold, space);
    CHECK(report.accuracy == doctest::Approx(0.5).epsilon(1e-12));
    // class 0: f1 = 0; class 1: precision 0.5, recall 1 -> f1 = 2/3
    CHECK(report.per_class[0].f1 == 0.0);
    CHECK(report.per_class[1].f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(report.macro_f1 == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("coverage errors") {
    LabelSpace space = LabelSpace::binary();
    DatasetSplit gold = gold_from({0, 1, 0});

    auto missing = preds_from({0, 1, 0});
    missing.erase("d2");
    try {
        score(missing, gold, space);
        FAIL("expected input_error");
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("d2") != std::string::npos);
    }

    auto extra = preds_from({0, 1, 0});
    extra["ghost"] = 1;
    CHECK_THROWS_AS(score(extra, gold, space), input_error);

    DatasetSplit unlabeled = gold;
    unlabeled.documents[1].label.reset();
    CHECK_THROWS_AS(score(preds_from({0, 1, 0}), unlabeled, space), input_error);

    CHECK_THROWS_AS(score({}, gold, space), input_error);
}

TEST_CASE("confusion matrix structure") {
    LabelSpace space = LabelSpace::multiclass();
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> label(0, 5);
    std::vector<int> truth(200), guess(200);
    for (int i = 0; i < 200; ++i) {
        truth[static_cast<std::size_t>(i)] = label(rng);
        guess[static_cast<std::size_t>(i)] = label(rng);
    }
    EvalReport report = score(preds_from(guess), gold_from(truth), space);

    std::size_t trace = 0, total = 0;
    for (std::size_t c = 0; c < 6; ++c) {
        std::size_t row_sum = 0;
        for (std::size_t j = 0; j < 6; ++j) {
            row_sum += report.confusion[c][j];
            total += report.confusion[c][j];
        }
        trace += report.confusion[c][c];
        CHECK(row_sum == report.per_class[c].support);
    }
    CHECK(total == 200);
    CHECK(report.accuracy ==
          doctest::Approx(static_cast<double>(trace) / 200.0).epsilon(1e-12));
    CHECK(report.accuracy >= 0.0);
    CHECK(report.accuracy <= 1.0);
    CHECK(report.macro_f1 >= 0.0);
    CHECK(report.macro_f1 <= 1.0);
}

TEST_CASE("accuracy invariant under document order; macro F1 under relabeling") {
    LabelSpace space = LabelSpace::multiclass();
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> label(0, 5);

    std::vector<int> truth(120), guess(120);
    for (int i = 0; i < 120; ++i) {
        truth[static_cast<std::size_t>(i)] = label(rng);
        guess[static_cast<std::size_t>(i)] = label(rng);
    }
    EvalReport base = score(preds_from(guess), gold_from(truth), space);

    // permute document order
    DatasetSplit shuffled = gold_from(truth);
    std::shuffle(shuffled.documents.begin(), shuffled.documents.end(), rng);
    EvalReport perm = score(preds_from(guess), shuffled, space);
    CHECK(perm.accuracy == base.accuracy);
    CHECK(perm.macro_f1 == doctest::Approx(base.macro_f1).epsilon(1e-12));

    // apply a class relabeling to both sides
    std::vector<int> relabel = {3, 5, 0, 1, 4, 2};
    std::vector<int> truth2(120), guess2(120);
    for (int i = 0; i < 120; ++i) {
        truth2[static_cast<std::size_t>(i)] = relabel[static_cast<std::size_t>(
            truth[static_cast<std::size_t>(i)])];
        guess2[static_cast<std::size_t>(i)] = relabel[static_cast<std::size_t>(
            guess[static_cast<std::size_t>(i)])];
    }
    EvalReport remapped = score(preds_from(guess2), gold_from(truth2), space);
    CHECK(remapped.accuracy == doctest::Approx(base.accuracy).epsilon(1e-12));
    CHECK(remapped.macro_f1 == doctest::Approx(base.macro_f1).epsilon(1e-12));
}

TEST_CASE("comparison table prints methods in insertion order at 3 decimals") {
    EvalReport a;
    a.accuracy = 0.6921;
    a.macro_f1 = 0.5404;
    EvalReport b;
    b.accuracy = 0.6921;
    b.macro_f1 = 0.251;

    Comparison comparison;
    comparison.rows.emplace_back("gbdt", a);
    comparison.rows.emplace_back("logreg", b);

    std::string text = comparison_text(comparison);
    std::size_t first = text.find("gbdt");
    std::size_t second = text.find("logreg");
    REQUIRE(first != std::string::npos);
    REQUIRE(second != std::string::npos);
    CHECK(first < second); // no ranking collapse, both rows printed
    CHECK(text.find("0.692") != std::string::npos);
    CHECK(text.find("0.540") != std::string::npos);
    CHECK(text.find("0.251") != std::string::npos);

    Comparison single;
    single.rows.emplace_back("only", a);
    std::string one = comparison_text(single);
    CHECK(one.find("only") != std::string::npos);
    CHECK(std::count(one.begin(), one.end(), '\n') == 2); // header + one row

    auto js = comparison_json(comparison);
    CHECK(js.size() == 2);
    CHECK(js[0]["method"] == "gbdt");
}

TEST_CASE("report text and json carry the full breakdown") {
    LabelSpace space = LabelSpace::binary();
    EvalReport report = score(preds_from({0, 1, 1, 1}), gold_from({0, 0, 1, 1}), space);
    std::string text = report_text(report, space);
    CHECK(text.find("accuracy") != std::string::npos);
    CHECK(text.find("human") != std::string::npos);
    CHECK(text.find("machine") != std::string::npos);

    auto js = report_json(report, space);
    CHECK(js["documents"] == 4);
    CHECK(js["per_class"].size() == 2);
    CHECK(js["confusion"].size() == 2);
}

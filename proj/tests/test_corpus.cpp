#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mgtd/corpus.hpp"
#include "mgtd/errors.hpp"

#include "temp_files.hpp"

using namespace mgtd;

TEST_CASE("label spaces are fixed") {
    LabelSpace a = LabelSpace::binary();
    REQUIRE(a.size() == 2);
    CHECK(a.name(0) == "human");
    CHECK(a.name(1) == "machine");

    LabelSpace b = LabelSpace::multiclass();
    REQUIRE(b.size() == 6);
    CHECK(b.name(0) == "human");
    CHECK(b.name(1) == "chatGPT");
    CHECK(b.name(2) == "cohere");
    CHECK(b.name(3) == "davinci");
    CHECK(b.name(4) == "bloomz");
    CHECK(b.name(5) == "dolly");
    CHECK(b.valid(5));
    CHECK_FALSE(b.valid(6));
    CHECK_FALSE(b.valid(-1));
}

TEST_CASE("load_jsonl parses the shared-task schema") {
    TempDir tmp;
    write_file(tmp.file("a.jsonl"),
               "{\"id\":\"7\",\"text\":\"hello\",\"label\":1,"
               "\"model\":\"chatGPT\",\"source\":\"wikihow\"}\n");
    DatasetSplit split = load_jsonl(tmp.file("a.jsonl"), LabelSpace::binary(), true);
    REQUIRE(split.size() == 1);
    const Document& doc = split.documents[0];
    CHECK(doc.id == "7");
    CHECK(doc.text == "hello");
    CHECK(doc.label == 1);
    CHECK(doc.model == "chatGPT");
    CHECK(doc.source == "wikihow");
}

TEST_CASE("labels outside the space are rejected with a line number") {
    TempDir tmp;
    write_file(tmp.file("b.jsonl"),
               "{\"id\":\"1\",\"text\":\"ok\",\"label\":5}\n"
               "{\"id\":\"8\",\"text\":\"hi\",\"label\":7}\n");
    try {
        load_jsonl(tmp.file("b.jsonl"), LabelSpace::multiclass(), true);
        FAIL("expected io_error");
    } catch (const io_error& e) {
        std::string what = e.what();
        CHECK(what.find(":2:") != std::string::npos);
        CHECK(what.find("label out of range") != std::string::npos);
    }
}

TEST_CASE("malformed and incomplete lines") {
    TempDir tmp;
    write_file(tmp.file("bad.jsonl"),
               "{\"id\":\"1\",\"text\":\"ok\",\"label\":0}\n"
               "{\"id\":\"2\",\"text\":\"ok\",\"label\":0}\n"
               "{oops\n");
    try {
        load_jsonl(tmp.file("bad.jsonl"), LabelSpace::binary(), true);
        FAIL("expected io_error");
    } catch (const io_error& e) {
        CHECK(std::string(e.what()).find(":3:") != std::string::npos);
    }

    write_file(tmp.file("notext.jsonl"), "{\"id\":\"1\",\"label\":0}\n");
    CHECK_THROWS_AS(load_jsonl(tmp.file("notext.jsonl"), LabelSpace::binary(), true), io_error);

    write_file(tmp.file("empty_text.jsonl"), "{\"id\":\"1\",\"text\":\"\",\"label\":0}\n");
    CHECK_THROWS_AS(load_jsonl(tmp.file("empty_text.jsonl"), LabelSpace::binary(), true),
                    io_error);

    write_file(tmp.file("nolabel.jsonl"), "{\"id\":\"1\",\"text\":\"ok\"}\n");
    CHECK_THROWS_AS(load_jsonl(tmp.file("nolabel.jsonl"), LabelSpace::binary(), true), io_error);
    // same file is fine when labels are optional
    DatasetSplit split = load_jsonl(tmp.file("nolabel.jsonl"), LabelSpace::binary(), false);
    CHECK(split.size() == 1);
    CHECK_FALSE(split.documents[0].label.has_value());

    CHECK_THROWS_AS(load_jsonl(tmp.file("missing.jsonl"), LabelSpace::binary(), true), io_error);
}

TEST_CASE("integer ids are normalized, unknown keys ignored, duplicates rejected") {
    TempDir tmp;
    write_file(tmp.file("ids.jsonl"),
               "{\"id\":12,\"text\":\"ok\",\"label\":0,\"extra\":[1,2],\"foo\":\"bar\"}\n");
    DatasetSplit split = load_jsonl(tmp.file("ids.jsonl"), LabelSpace::binary(), true);
    CHECK(split.documents[0].id == "12");

    write_file(tmp.file("dup.jsonl"),
               "{\"id\":\"x\",\"text\":\"a\",\"label\":0}\n"
               "{\"id\":\"x\",\"text\":\"b\",\"label\":1}\n");
    CHECK_THROWS_AS(load_jsonl(tmp.file("dup.jsonl"), LabelSpace::binary(), true), io_error);
}

TEST_CASE("document order equals file line order") {
    TempDir tmp;
    std::string content;
    for (int i = 0; i < 20; ++i) {
        content += "{\"id\":\"id" + std::to_string(19 - i) + "\",\"text\":\"t\",\"label\":0}\n";
    }
    write_file(tmp.file("order.jsonl"), content);
    DatasetSplit split = load_jsonl(tmp.file("order.jsonl"), LabelSpace::binary(), true);
    REQUIRE(split.size() == 20);
    for (int i = 0; i < 20; ++i) {
        CHECK(split.documents[static_cast<std::size_t>(i)].id ==
              "id" + std::to_string(19 - i));
    }
}

TEST_CASE("load -> save -> load round-trips documents exactly") {
    TempDir tmp;
    write_file(tmp.file("in.jsonl"),
               "{\"id\":\"1\",\"text\":\"first\",\"label\":1,\"model\":\"dolly\","
               "\"source\":\"arxiv\"}\n"
               "{\"id\":\"2\",\"text\":\"unicode \\u00e9\\u4e2d\",\"label\":0}\n"
               "{\"id\":\"3\",\"text\":\"no label here\"}\n");
    DatasetSplit first = load_jsonl(tmp.file("in.jsonl"), LabelSpace::binary(), false);
    save_jsonl(first, tmp.file("out.jsonl"));
    DatasetSplit second = load_jsonl(tmp.file("out.jsonl"), LabelSpace::binary(), false);

    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first.documents[i].id == second.documents[i].id);
        CHECK(first.documents[i].text == second.documents[i].text);
        CHECK(first.documents[i].label == second.documents[i].label);
        CHECK(first.documents[i].model == second.documents[i].model);
        CHECK(first.documents[i].source == second.documents[i].source);
    }
}

TEST_CASE("class_counts") {
    LabelSpace space = LabelSpace::binary();
    DatasetSplit split;
    for (int label : {0, 0, 1}) {
        Document doc;
        doc.id = "d" + std::to_string(split.size());
        doc.text = "x";
        doc.label = label;
        split.documents.push_back(std::move(doc));
    }
    auto counts = class_counts(split, space);
    CHECK(counts.at(0) == 2);
    CHECK(counts.at(1) == 1);

    DatasetSplit empty;
    auto zero = class_counts(empty, space);
    CHECK(zero.at(0) == 0);
    CHECK(zero.at(1) == 0);

    std::size_t total = 0;
    for (const auto& [label, count] : counts) total += count;
    CHECK(total == split.size());

    split.documents[1].label.reset();
    try {
        class_counts(split, space);
        FAIL("expected input_error");
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("d1") != std::string::npos);
    }
}

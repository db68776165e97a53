#include <doctest.h>

#include "convoeval/corpus.hpp"
#include "convoeval/errors.hpp"

using namespace convoeval;

namespace {

const char* kMapJson = R"({
  "question_id": "questionID", "topic": "topic",
  "question_text": "questionText", "answer_text": "answerText",
  "upvotes": "upvotes", "views": "views"
})";

corpus::ColumnMap map() { return corpus::ColumnMap::from_json_string(kMapJson); }

}  // namespace

TEST_CASE("clean_text collapses whitespace and trims") {
    CHECK(corpus::clean_text("  a\t b\n") == "a b");
    CHECK(corpus::clean_text("") == "");
    CHECK(corpus::clean_text("   ") == "");
    CHECK(corpus::clean_text("one  two\r\nthree") == "one two three");
}

TEST_CASE("clean_text composes decomposed characters") {
    std::string decomposed = "cafe\xcc\x81";      // e + combining acute
    std::string composed = "caf\xc3\xa9";         // precomposed
    CHECK(corpus::clean_text(decomposed) == composed);
    CHECK(corpus::clean_text(composed) == composed);
}

TEST_CASE("clean_text strips control characters") {
    std::string with_nul("ab\0cd", 5);
    CHECK(corpus::clean_text(with_nul) == "abcd");
    CHECK(corpus::clean_text("x\x01y") == "xy");
}

TEST_CASE("clean_text is idempotent") {
    for (std::string s : {"  a\t b\n", "cafe\xcc\x81 time", "plain", "\x02odd\x03 mix  "}) {
        CHECK(corpus::clean_text(corpus::clean_text(s)) == corpus::clean_text(s));
    }
}

TEST_CASE("parse_dataset passes well-formed rows through") {
    std::string csv =
        "questionID,topic,questionText,answerText,upvotes,views\n"
        "q1,depression,How do I cope?,Try routines.,3,100\n"
        "q2,anxiety,Why do I worry?,Practice breathing.,1,50\n"
        "q3,anxiety,Will it pass?,Usually yes.,0,10\n";
    auto result = corpus::parse_dataset(csv, map());
    CHECK(result.rows.size() == 3);
    CHECK(result.rows_read == 3);
    CHECK(result.skipped_malformed == 0);
    CHECK(result.skipped_empty == 0);
    CHECK(result.topics == std::vector<std::string>{"depression", "anxiety"});
}

TEST_CASE("row missing answer text is skipped with a tally") {
    std::string csv =
        "questionID,topic,questionText,answerText,upvotes,views\n"
        "q1,depression,How do I cope?,,3,100\n";
    auto result = corpus::parse_dataset(csv, map());
    CHECK(result.rows.empty());
    CHECK(result.skipped_empty == 1);
}

TEST_CASE("malformed rows are counted, not dropped silently") {
    std::string csv =
        "questionID,topic,questionText,answerText,upvotes,views\n"
        "q1,depression,ok,fine,notanumber,100\n"
        "q2,anxiety,short,row\n"
        "q3,anxiety,good,answer,2,5\n";
    auto result = corpus::parse_dataset(csv, map());
    CHECK(result.rows.size() == 1);
    CHECK(result.skipped_malformed == 2);
}

TEST_CASE("missing mapped column is a configuration error") {
    CHECK_THROWS_AS(corpus::parse_dataset("a,b,c\n1,2,3\n", map()), ConfigError);
}

TEST_CASE("column map requires all six fields") {
    CHECK_THROWS_AS(corpus::ColumnMap::from_json_string(R"({"question_id": "q"})"), ConfigError);
    CHECK_THROWS_AS(corpus::ColumnMap::from_json_string("not json"), ConfigError);
}

TEST_CASE("topic vocabulary size matches distinct topics") {
    std::string csv = "questionID,topic,questionText,answerText,upvotes,views\n";
    for (int i = 0; i < 31; ++i) {
        std::string t = "topic" + std::to_string(i);
        csv += "q" + std::to_string(i) + "," + t + ",question?,answer.,1,1\n";
    }
    // one repeat must not add a topic
    csv += "q99,topic0,question?,answer.,1,1\n";
    auto result = corpus::parse_dataset(csv, map());
    CHECK(result.topics.size() == 31);
}

TEST_CASE("select_gold picks max upvotes") {
    std::vector<corpus::RawRow> rows;
    for (std::uint64_t up : {0, 5, 2}) {
        rows.push_back({"q", "t", "question", "answer" + std::to_string(up), up, 0, rows.size()});
    }
    CHECK(corpus::select_gold(rows).gold_response_text == "answer5");
}

TEST_CASE("select_gold breaks upvote ties by views") {
    std::vector<corpus::RawRow> rows{{"q", "t", "question", "a", 3, 10, 0},
                                     {"q", "t", "question", "b", 3, 20, 1}};
    CHECK(corpus::select_gold(rows).gold_response_text == "b");
    CHECK(corpus::select_gold(rows).views == 20);
}

TEST_CASE("select_gold breaks full ties by source order") {
    std::vector<corpus::RawRow> rows{{"q", "t", "question", "first", 3, 10, 0},
                                     {"q", "t", "question", "second", 3, 10, 1}};
    CHECK(corpus::select_gold(rows).gold_response_text == "first");
}

TEST_CASE("select_gold contract violations") {
    CHECK_THROWS_AS(corpus::select_gold({}), std::logic_error);
    std::vector<corpus::RawRow> mixed{{"q1", "t", "x", "y", 0, 0, 0},
                                      {"q2", "t", "x", "y", 0, 0, 1}};
    CHECK_THROWS_AS(corpus::select_gold(mixed), std::logic_error);
}

TEST_CASE("select_gold single row returns that row") {
    std::vector<corpus::RawRow> rows{{"q", "t", "question", "only", 0, 0, 0}};
    CHECK(corpus::select_gold(rows).gold_response_text == "only");
}

TEST_CASE("ingest groups by question and is deterministic") {
    std::string csv =
        "questionID,topic,questionText,answerText,upvotes,views\n"
        "q1,depression,How do I cope?,Weak answer.,1,10\n"
        "q2,anxiety,Why worry?,Breathe.,2,20\n"
        "q1,depression,How do I cope?,Strong answer.,7,10\n";
    auto first = corpus::ingest(csv, map());
    REQUIRE(first.records.size() == 2);
    CHECK(first.records[0].question_id == "q1");
    CHECK(first.records[0].gold_response_text == "Strong answer.");
    CHECK(first.records[1].question_id == "q2");

    auto second = corpus::ingest(csv, map());
    CHECK(corpus::to_jsonl(first.records) == corpus::to_jsonl(second.records));
}

TEST_CASE("jsonl round trip") {
    std::vector<corpus::QARecord> records{
        {"q1", "depression", "How do I cope?", "Try this.", 3, 100},
        {"q2", "anxiety", "Why, me?", "Quote \"this\" answer.", 0, 0}};
    auto text = corpus::to_jsonl(records);
    auto back = corpus::from_jsonl(text);
    CHECK(back == records);
}

TEST_CASE("jsonl rejects duplicates and empty text") {
    std::vector<corpus::QARecord> dup{{"q1", "t", "x", "y", 0, 0}, {"q1", "t", "x", "y", 0, 0}};
    CHECK_THROWS_AS(corpus::from_jsonl(corpus::to_jsonl(dup)), IoError);
    CHECK_THROWS_AS(
        corpus::from_jsonl(R"({"question_id":"a","topic":"t","question_text":"",)"
                           R"("gold_response_text":"y","upvotes":0,"views":0})"),
        IoError);
}

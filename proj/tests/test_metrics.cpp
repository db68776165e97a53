#include <doctest.h>

#include <string>

#include "convoeval/errors.hpp"
#include "convoeval/metrics.hpp"
#include "convoeval/pipeline.hpp"

using namespace convoeval;

namespace {

metrics::FluffList default_fluff() {
    return metrics::FluffList::from_string(pipeline::default_fluff_words());
}

emotion::EmotionProfile profile(std::vector<std::pair<std::string, double>> scores) {
    return emotion::EmotionProfile::from_scores(std::move(scores));
}

// 12 sentences x 10 monosyllabic words = 120 words, 120 syllables
std::string monosyllabic_text() {
    std::string sentence = "cat dog sun run fox hen pig cow bee ant.";
    std::string out;
    for (int i = 0; i < 12; ++i) {
        if (i) out.push_back(' ');
        out += sentence;
    }
    return out;
}

}  // namespace

TEST_CASE("rbo closed-form anchors") {
    std::vector<std::string> abc{"a", "b", "c"};
    std::vector<std::string> acb{"a", "c", "b"};
    std::vector<std::string> xyz{"x", "y", "z"};
    CHECK(metrics::rbo_extrapolated(abc, abc, 0.9, 10) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(metrics::rbo_extrapolated(abc, xyz, 0.9, 10) == doctest::Approx(0.0).epsilon(1e-9));
    // 0.729 + (0.1/0.9) * (0.9 + 0.405 + 0.729)
    CHECK(metrics::rbo_extrapolated(abc, acb, 0.9, 10) == doctest::Approx(0.955).epsilon(1e-9));
}

TEST_CASE("rbo truncates at k and at the shorter list") {
    std::vector<std::string> longer{"a", "b", "c", "d", "e"};
    std::vector<std::string> shorter{"a", "b"};
    CHECK(metrics::rbo_extrapolated(longer, shorter, 0.9, 10) ==
          doctest::Approx(metrics::rbo_extrapolated(shorter, shorter, 0.9, 2)));
    // k=1 only sees the top element
    CHECK(metrics::rbo_extrapolated(longer, std::vector<std::string>{"a", "z", "q"}, 0.9, 1) ==
          doctest::Approx(1.0));
}

TEST_CASE("rbo parameter validation") {
    std::vector<std::string> a{"a"};
    CHECK_THROWS_AS(metrics::rbo_extrapolated({}, a, 0.9, 10), std::logic_error);
    CHECK_THROWS_AS(metrics::rbo_extrapolated(a, a, 1.0, 10), ConfigError);
    CHECK_THROWS_AS(metrics::rbo_extrapolated(a, a, 0.9, 0), ConfigError);
}

TEST_CASE("emotion consistency uses ranking only") {
    auto gs = profile({{"joy", 0.6}, {"fear", 0.3}, {"anger", 0.1}});
    auto same_order = profile({{"joy", 0.98}, {"fear", 0.015}, {"anger", 0.005}});
    auto identical = metrics::emotion_consistency(gs, gs);
    REQUIRE(identical.has_value());
    CHECK(*identical == doctest::Approx(1.0));
    CHECK(*metrics::emotion_consistency(gs, same_order) == doctest::Approx(1.0));

    auto empty = emotion::EmotionProfile{};
    CHECK_FALSE(metrics::emotion_consistency(gs, empty).has_value());
    CHECK_FALSE(metrics::emotion_consistency(empty, gs).has_value());
}

TEST_CASE("sentiment change anchors") {
    text::SentimentLexicon lex;
    lex.add("qa", 0.2);
    lex.add("ra", 0.4);

    CHECK(metrics::sentiment_change("qa", "qa", lex) == doctest::Approx(0.5).epsilon(1e-12));
    // (0.4 - 0.2) / (0.2 + 1e-6) ~ 1.0 -> sigmoid
    CHECK(metrics::sentiment_change("qa", "ra", lex) ==
          doctest::Approx(0.731057596).epsilon(1e-8));
    // zero question polarity saturates
    lex.add("half", 0.5);
    CHECK(metrics::sentiment_change("nothing known", "half", lex) ==
          doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("intra response sentiment anchors") {
    text::SentimentLexicon lex;
    lex.add("bad", -0.5);
    lex.add("good", 0.5);
    lex.add("tok", 0.3);

    CHECK(metrics::intra_response_sentiment("One sentence only", lex) == doctest::Approx(0.5));
    CHECK(metrics::intra_response_sentiment("", lex) == doctest::Approx(0.5));
    // polarities -0.5, 0, 0.5 -> slope 0.5 -> sigmoid(0.5)
    CHECK(metrics::intra_response_sentiment("Bad start. Plain middle. Good end.", lex) ==
          doctest::Approx(0.622459331).epsilon(1e-9));
    CHECK(metrics::intra_response_sentiment("tok here. tok there. tok again.", lex) ==
          doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("simplicity applies the 100-word gate") {
    std::string ninety_nine;
    for (int i = 0; i < 99; ++i) ninety_nine += "word ";
    CHECK_FALSE(metrics::simplicity(ninety_nine).has_value());

    auto score = metrics::simplicity(monosyllabic_text());
    REQUIRE(score.has_value());
    CHECK(score->reading_ease == doctest::Approx(112.085).epsilon(1e-9));
    CHECK(score->grade == doctest::Approx(0.11).epsilon(1e-9));
}

TEST_CASE("simplicity decreases as syllables increase") {
    std::string base = monosyllabic_text();
    std::string heavier = base;
    auto pos = heavier.find("ant.");
    heavier.replace(pos, 4, "banana.");
    auto a = metrics::simplicity(base);
    auto b = metrics::simplicity(heavier);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(b->reading_ease < a->reading_ease);
}

TEST_CASE("recycling hand counts with the default fluff list") {
    auto fluff = default_fluff();
    // R = {work, sadness, common}; only "work" reuses the question
    CHECK(metrics::recycling("I feel sad about work", "Work sadness is common", fluff) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    // all-fluff response
    CHECK(metrics::recycling("any question", "it is the and was", fluff) == 0.0);
    CHECK(metrics::recycling("anything", "", fluff) == 0.0);
    // response equal to the question's non-fluff tokens
    CHECK(metrics::recycling("I feel sad about work", "feel sad work", fluff) ==
          doctest::Approx(1.0));
}

TEST_CASE("recycling multiset vs set semantics") {
    auto fluff = default_fluff();
    std::string q = "work is hard";
    std::string r = "work work matters";
    CHECK(metrics::recycling(q, r, fluff, metrics::RecyclingMode::multiset) ==
          doctest::Approx(2.0 / 3.0));
    CHECK(metrics::recycling(q, r, fluff, metrics::RecyclingMode::set) == doctest::Approx(0.5));
}

TEST_CASE("adding a fluff word to the response changes nothing") {
    auto fluff = default_fluff();
    std::string q = "I feel sad about work";
    std::string r = "Work sadness is common";
    double before = metrics::recycling(q, r, fluff);
    CHECK(metrics::recycling(q, r + " the", fluff) == doctest::Approx(before));
    CHECK(metrics::recycling(q, r + " the", fluff, metrics::RecyclingMode::set) ==
          doctest::Approx(metrics::recycling(q, r, fluff, metrics::RecyclingMode::set)));
}

TEST_CASE("score_pair composes the per-metric contracts") {
    text::SentimentLexicon lex;
    lex.add("sad", -0.5);
    auto fluff = default_fluff();
    metrics::MetricConfig config;

    SUBCASE("empty response degenerates per metric") {
        auto values = metrics::score_pair("sad", "", std::nullopt, std::nullopt, lex, fluff,
                                          config, "profiles off");
        REQUIRE(values.size() == 6);
        CHECK(values[0].id == metrics::MetricId::consistency);
        CHECK_FALSE(values[0].applicable());
        CHECK(values[0].reason == "profiles off");
        CHECK(values[1].id == metrics::MetricId::sentiment_change);
        CHECK(*values[1].value ==
              doctest::Approx(text::sigmoid(0.5 / (0.5 + 1e-6))).epsilon(1e-12));
        CHECK(values[2].id == metrics::MetricId::intra_sentiment);
        CHECK(*values[2].value == doctest::Approx(0.5));
        CHECK(values[3].id == metrics::MetricId::simplicity);
        CHECK_FALSE(values[3].applicable());
        CHECK(values[4].id == metrics::MetricId::simplicity_grade);
        CHECK_FALSE(values[4].applicable());
        CHECK(values[5].id == metrics::MetricId::recycling);
        CHECK(*values[5].value == 0.0);
    }

    SUBCASE("identity response") {
        std::string q = "I feel sad about work";
        auto gs = profile({{"sadness", 1.0}});
        auto values =
            metrics::score_pair(q, q, gs, gs, lex, fluff, config);
        CHECK(*values[0].value == doctest::Approx(1.0));  // identical profiles
        CHECK(*values[1].value == doctest::Approx(0.5));  // equal polarity
        CHECK(*values[5].value == doctest::Approx(1.0));  // full recycling
    }
}

TEST_CASE("fluff list loading validates content") {
    CHECK_THROWS_AS(metrics::FluffList::from_string("# only comments\n"), ConfigError);
    auto list = metrics::FluffList::from_string("# c\nThe\nAND\n");
    CHECK(list.contains("the"));
    CHECK(list.contains("and"));
    CHECK(list.size() == 2);
}

TEST_CASE("the shipped fluff list matches the embedded default") {
    auto embedded = metrics::FluffList::from_string(pipeline::default_fluff_words());
    auto shipped = metrics::FluffList::from_file(
        std::string(CONVOEVAL_DATA_DIR) + "/fluff_words.txt");
    CHECK(embedded.size() == 93);
    CHECK(shipped.size() == embedded.size());
    CHECK(shipped.contains("once"));
    CHECK(shipped.contains("i"));
}

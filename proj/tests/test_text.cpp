#include <doctest.h>

#include <cmath>

#include "convoeval/errors.hpp"
#include "convoeval/text.hpp"

using namespace convoeval;

TEST_CASE("split_sentences handles terminators") {
    auto s = text::split_sentences("Hello. How are you?");
    REQUIRE(s.size() == 2);
    CHECK(s[0] == "Hello.");
    CHECK(s[1] == "How are you?");
}

TEST_CASE("protected abbreviations never end a sentence") {
    CHECK(text::split_sentences("I saw Dr. Smith today.").size() == 1);
    CHECK(text::split_sentences("Fruit, e.g. apples, is good. Eat some.").size() == 2);
    CHECK(text::split_sentences("Cats vs. dogs is an old fight.").size() == 1);
    CHECK(text::split_sentences("Mrs. Jones met Mr. Lee. They talked.").size() == 2);
}

TEST_CASE("text without terminator is one sentence") {
    auto s = text::split_sentences("no terminator here");
    REQUIRE(s.size() == 1);
    CHECK(s[0] == "no terminator here");
}

TEST_CASE("empty text yields no sentences") {
    CHECK(text::split_sentences("").empty());
    CHECK(text::split_sentences("   ").empty());
}

TEST_CASE("terminator runs end one sentence") {
    auto s = text::split_sentences("Really?! Yes.");
    REQUIRE(s.size() == 2);
    CHECK(s[0] == "Really?!");
}

TEST_CASE("decimal points do not split") {
    CHECK(text::split_sentences("I gave it 4.5 stars. Would recommend.").size() == 2);
}

TEST_CASE("split preserves non-whitespace characters") {
    std::string input = "One two.  Three!   Four?Five. ";
    auto sentences = text::split_sentences(input);
    std::string joined;
    for (const auto& s : sentences) {
        if (!joined.empty()) joined.push_back(' ');
        joined += s;
    }
    std::string expect_chars, got_chars;
    for (char c : input) {
        if (!std::isspace(static_cast<unsigned char>(c))) expect_chars.push_back(c);
    }
    for (char c : joined) {
        if (!std::isspace(static_cast<unsigned char>(c))) got_chars.push_back(c);
    }
    CHECK(expect_chars == got_chars);
}

TEST_CASE("tokenize lowercases and splits punctuation") {
    CHECK(text::tokenize("I'm FINE, thanks!") ==
          std::vector<std::string>{"i'm", "fine", "thanks"});
    CHECK(text::tokenize("well-being") == std::vector<std::string>{"well", "being"});
    CHECK(text::tokenize("").empty());
    CHECK(text::tokenize("it's 'quoted' text") ==
          std::vector<std::string>{"it's", "quoted", "text"});
    CHECK(text::tokenize("3.5 stars") == std::vector<std::string>{"3", "5", "stars"});
}

TEST_CASE("count_syllables matches hand counts") {
    CHECK(text::count_syllables("strength") == 1);
    CHECK(text::count_syllables("hello") == 2);
    CHECK(text::count_syllables("readability") == 5);
    CHECK(text::count_syllables("make") == 1);   // silent trailing e
    CHECK(text::count_syllables("table") == 2);  // consonant + le keeps it
    CHECK(text::count_syllables("the") == 1);    // floor
    CHECK(text::count_syllables("hmm") == 1);    // no vowels, floor
}

TEST_CASE("polarity averages matched tokens") {
    text::SentimentLexicon lex;
    lex.add("good", 0.8);
    lex.add("bad", -0.2);
    CHECK(text::polarity("entirely unknown words", lex) == 0.0);
    CHECK(text::polarity("good bad", lex) == doctest::Approx(0.3));
    CHECK(text::polarity("good good", lex) == doctest::Approx(0.8));
    CHECK(text::polarity("", lex) == 0.0);
}

TEST_CASE("polarity counts duplicates toward the mean") {
    text::SentimentLexicon lex;
    lex.add("good", 0.9);
    lex.add("bad", -0.3);
    // two goods shift the mean relative to one
    CHECK(text::polarity("good good bad", lex) == doctest::Approx((0.9 + 0.9 - 0.3) / 3.0));
    CHECK(text::polarity("good bad", lex) == doctest::Approx(0.3));
}

TEST_CASE("lexicon parsing") {
    auto lex = text::SentimentLexicon::from_string(
        "# comment\ngood\t0.5\nBAD\t-0.25\n\n  # another\n");
    CHECK(lex.size() == 2);
    CHECK(lex.entries().at("bad") == doctest::Approx(-0.25));
    CHECK_THROWS_AS(text::SentimentLexicon::from_string("oops\t2.0\n"), ConfigError);
    CHECK_THROWS_AS(text::SentimentLexicon::from_string("no-tab-line\n"), ConfigError);
}

TEST_CASE("sigmoid closed-form values") {
    CHECK(text::sigmoid(0.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(text::sigmoid(0.5) == doctest::Approx(0.622459331).epsilon(1e-9));
    CHECK(text::sigmoid(1e9) == doctest::Approx(1.0).epsilon(1e-12));
}

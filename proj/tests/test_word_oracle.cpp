#include "oracles.hpp"
#include "xxl/word_oracle.hpp"

#include <doctest.h>

using namespace xxl;

TEST_CASE("ball enumeration lists every word once in shortlex order") {
  const auto ball = enumerate_ball(DihedralParams::make(5), 3);
  // 1 + 4 + 4·4 + 4·16 words, reduced or not.
  CHECK(ball.words.size() == 85);
  CHECK(ball.words.front().empty());
  CHECK(ball.class_of.front() == 0);
  CHECK(ball.cap == default_rewrite_cap(ball.params, 3));
}

TEST_CASE("free reduction and the relation identify words") {
  const auto params = DihedralParams::make(5);
  const auto ball = enumerate_ball(params, 5);
  auto class_of = [&](const char* text) {
    const auto w = parse_word(text);
    for (std::size_t i = 0; i < ball.words.size(); ++i) {
      if (ball.words[i] == w) return ball.class_of[i];
    }
    FAIL("word not in ball");
    return std::size_t{0};
  };
  CHECK(class_of("a a^-1") == class_of(""));
  CHECK(class_of("a b a b a") == class_of("b a b a b"));
  CHECK(class_of("a b") != class_of("b a"));
  CHECK(class_of("a") != class_of("b"));
}

TEST_CASE("caps are validated") {
  const auto params = DihedralParams::make(5);
  CHECK_THROWS(enumerate_ball(params, max_ball_radius + 1));
  CHECK_THROWS(enumerate_ball(params, 2, max_rewrite_cap + 1));
  CHECK_THROWS(enumerate_ball(params, 4, 3));
}

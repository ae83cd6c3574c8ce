#include "xxl/presentation.hpp"

#include <doctest.h>

using namespace xxl;

TEST_CASE("graph files parse, serialise and round-trip") {
  const auto g = parse_graph("# comment\na b 5\n\nb c 6  # trailing\nvertex d\n");
  CHECK(g.vertices() == std::vector<std::string>{"a", "b", "c", "d"});
  REQUIRE(g.edges().size() == 2);
  CHECK(g.edges()[1] == Edge{1, 2, 6});
  CHECK(parse_graph(serialize_graph(g)) == g);
  CHECK(g.edge_between(2, 1)->label == 6);
  CHECK_FALSE(g.edge_between(0, 2));
  CHECK(g.edge_index(1, 2) == 1);
}

TEST_CASE("malformed graph input reports the line") {
  auto line_of = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const InputError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("a b 5\na b 6\n") == 2);  // duplicate edge
  CHECK(line_of("a a 5\n") == 1);         // loop
  CHECK(line_of("a b x\n") == 1);         // label not an integer
  CHECK(line_of("a b 1\n") == 1);         // label below 2
  CHECK(line_of("a b\n") == 1);           // missing label
}

TEST_CASE("classification follows the minimum label") {
  auto kind = [](const char* text) { return classify(parse_graph(text)).kind; };
  CHECK(kind("a b 5\nb c 5\na c 5\n") == ArtinClass::xxl);
  CHECK(kind("a b 4\nb c 5\na c 5\n") == ArtinClass::extra_large);
  CHECK(kind("a b 3\nb c 5\n") == ArtinClass::large);
  CHECK(kind("a b 2\nb c 2\n") == ArtinClass::right_angled);
  const auto edgeless = classify(parse_graph("vertex a\nvertex b\nvertex c\n"));
  CHECK(edgeless.is_xxl());
  CHECK(edgeless.edgeless);
  CHECK(edgeless.rank == 3);
}

TEST_CASE("alternating words and the Artin presentation") {
  CHECK(format_word(build_word("a", "b", 5)) == "a b a b a");
  CHECK(format_word(build_word("b", "a", 4)) == "b a b a");
  const auto p = artin_presentation(parse_graph("a b 5\nb c 6\n"));
  REQUIRE(p.relations.size() == 2);
  CHECK(format_word(p.relations[1].first) == "b c b c b c");
  CHECK(format_word(p.relations[1].second) == "c b c b c b");
}

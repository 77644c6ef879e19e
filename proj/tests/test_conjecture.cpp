#include "common.hpp"
#include "multitri/conjecture.hpp"

using namespace multitri;

TEST_CASE("control runs hold") {
  for (int n = 2; n <= 3; ++n) {
    CHECK(check_star_decomposition_k(n, 2).holds());
    CHECK(check_bijection_k(n, 2).holds());
    CHECK(check_counts_k(n, 2).holds());
    CHECK(check_translation_lemma(n, 2).holds());
  }
  const auto counts = check_counts_k(4, 2);
  CHECK(counts.holds());
  CHECK(counts.details["expected"] == nlohmann::json::array({3, 6, 14}));
  CHECK(check_star_decomposition_k(3, 2).control);
}

TEST_CASE("first order") {
  CHECK(check_star_decomposition_k(3, 1).holds());
  CHECK(check_bijection_k(3, 1).holds());
  CHECK(check_bijection_k(3, 1).details["cylinder_count"] == 6);
  CHECK(check_counts_k(2, 1).details["expected"] == nlohmann::json::array({1, 1, 3}));
}

TEST_CASE("third order runs as a report") {
  for (const auto& r : {check_star_decomposition_k(2, 3), check_bijection_k(2, 3), check_counts_k(2, 3)}) {
    CHECK_FALSE(r.control);
    CHECK(r.instances > 0);
    const auto j = r.to_json();
    CHECK(j.contains("holds"));
    CHECK(j["k"] == 3);
  }
}

TEST_CASE("translation replacement for a synthetic crossing") {
  const std::vector<Edge> crossing{{0, 6}, {3, 9}, {1, 7}};
  const auto replacement = single_translate_crossing(crossing, 2, 3);
  REQUIRE(replacement.has_value());
  const auto repeated = EdgeClass::of(Edge(0, 6), 3);
  int hits = 0;
  for (const Edge& e : *replacement) hits += repeated.contains(e) ? 1 : 0;
  CHECK(hits == 1);
  CHECK_FALSE(single_translate_crossing({{0, 4}, {1, 5}, {2, 6}}, 2, 3).has_value());
}

TEST_CASE("translation check rejects other orders") {
  CHECK(testing::code_of([] { check_translation_lemma(2, 3); }) == ErrorCode::InvalidInput);
}

TEST_CASE("witness minimization drops what is not needed") {
  std::vector<EdgeClass> classes;
  for (int b = 2; b <= 6; ++b) classes.push_back(EdgeClass::of(Edge(0, b), 3));
  const std::vector<EdgeClass> keep{classes[0]};
  auto fails = [&](const std::vector<EdgeClass>& cs) {
    return std::find(cs.begin(), cs.end(), classes[3]) != cs.end();
  };
  const auto minimal = minimize_witness(classes, keep, fails);
  CHECK(minimal == std::vector<EdgeClass>{classes[0], classes[3]});
}

TEST_CASE("budget") {
  CHECK(testing::code_of([] { check_counts_k(4, 3); }) == ErrorCode::TooLarge);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "hforest/error.hpp"
#include "hforest/qorder.hpp"
#include "test_util.hpp"

using hforest::QOrder;
using hforest::validation_error;

TEST_CASE("load: antichain, chain, transitive closure") {
  QOrder anti = QOrder::from_json_text(R"({"labels": ["a", "b"], "leq": []})");
  CHECK(anti.leq("a", "a"));
  CHECK(anti.leq("b", "b"));
  CHECK_FALSE(anti.leq("a", "b"));
  CHECK_FALSE(anti.leq("b", "a"));

  QOrder chain = QOrder::from_json_text(R"({"labels": ["a", "b"], "leq": [["a", "b"]]})");
  CHECK(chain.leq("a", "b"));
  CHECK_FALSE(chain.leq("b", "a"));

  QOrder c3 =
      QOrder::from_json_text(R"({"labels": ["a", "b", "c"], "leq": [["a", "b"], ["b", "c"]]})");
  CHECK(c3.leq("a", "c"));
  CHECK_FALSE(c3.leq("c", "a"));
}

TEST_CASE("load errors") {
  CHECK_THROWS_AS(QOrder({"a", "a"}, {}), validation_error);
  CHECK_THROWS_AS(QOrder({"a"}, {{"a", "zzz"}}), validation_error);
  CHECK_THROWS_AS(QOrder::from_json_text(R"({"labels": ["a"], "leq": [["a"]]})"),
                  validation_error);
  CHECK_THROWS_AS(QOrder::from_json_text("{"), hforest::parse_error);
  CHECK_THROWS_AS(QOrder::from_json_text(R"({"leq": []})"), validation_error);
  CHECK_THROWS_AS(testutil::antichain2().index("q"), validation_error);
}

TEST_CASE("json round trip is byte-stable") {
  QOrder q = QOrder({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  std::string text = q.to_json_text();
  QOrder back = QOrder::from_json_text(text);
  CHECK(back.to_json_text() == text);
  for (const auto& p : q.labels())
    for (const auto& r : q.labels()) CHECK(q.leq(p, r) == back.leq(p, r));
}

TEST_CASE("dominates: worked examples") {
  QOrder anti = testutil::antichain2();
  const std::vector<std::string> a{"a"}, b{"b"}, ab{"a", "b"};
  CHECK(anti.dominates(a, ab));
  CHECK_FALSE(anti.dominates(ab, a));

  QOrder chain = testutil::chain2();
  CHECK(chain.dominates(ab, b));  // every element sits below b
  CHECK_FALSE(chain.dominates(ab, a));

  CHECK_THROWS_AS(anti.dominates({}, a), validation_error);
  CHECK_THROWS_AS(anti.dominates(a, {}), validation_error);
}

// All nonempty subsets of q's labels.
static std::vector<std::vector<std::string>> subsets(const QOrder& q) {
  std::vector<std::vector<std::string>> out;
  const auto& labels = q.labels();
  for (std::size_t mask = 1; mask < (1u << labels.size()); ++mask) {
    std::vector<std::string> s;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (mask & (1u << i)) s.push_back(labels[i]);
    out.push_back(std::move(s));
  }
  return out;
}

TEST_CASE("dominates is a quasiorder on nonempty subsets (|Q| <= 4, exhaustive)") {
  std::vector<QOrder> qs;
  qs.push_back(QOrder({"a", "b", "c", "d"}, {}));
  qs.push_back(QOrder({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}}));
  qs.push_back(QOrder({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "c"}, {"b", "d"}}));
  qs.push_back(QOrder({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}}));

  for (const QOrder& q : qs) {
    auto sets = subsets(q);
    for (const auto& s : sets) CHECK(q.dominates(s, s));
    for (const auto& s : sets)
      for (const auto& r : sets)
        for (const auto& t : sets)
          if (q.dominates(s, r) && q.dominates(r, t)) CHECK(q.dominates(s, t));
  }
}

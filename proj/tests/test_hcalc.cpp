#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <thread>
#include <vector>

#include "hforest/error.hpp"
#include "hforest/explore.hpp"
#include "hforest/hcalc.hpp"
#include "hforest/oracle.hpp"
#include "test_util.hpp"

using namespace hforest;

TEST_CASE("leq_h: basic decisions over the 2-antichain") {
  QOrder q = testutil::antichain2();
  HContext ctx(q);
  CHECK(ctx.leq(parse_term("a", q), parse_term("a", q)));
  CHECK_FALSE(ctx.leq(parse_term("a", q), parse_term("b", q)));
  CHECK(ctx.leq(parse_term("a.[b]", q), parse_term("a.[b.[a]]", q)));
  CHECK_FALSE(ctx.leq(parse_term("a.[b.[a]]", q), parse_term("a.[b]", q)));
  CHECK(ctx.leq(parse_term("s{0}(a)", q), parse_term("s{1}(a)", q)));
  CHECK(ctx.leq(parse_term("s{1}(a)", q), parse_term("s{0}(a)", q)));
}

TEST_CASE("leq_h: labels ride on the Q order") {
  QOrder q = testutil::chain2();
  HContext ctx(q);
  CHECK(ctx.leq(parse_term("a", q), parse_term("b", q)));
  CHECK_FALSE(ctx.leq(parse_term("b", q), parse_term("a", q)));
  CHECK(ctx.leq(parse_term("a.[a]", q), parse_term("b.[b]", q)));
  CHECK(ctx.leq(parse_term("[a,b]", q), parse_term("b", q)));
}

TEST_CASE("leq_h: empty forest conventions") {
  QOrder q = testutil::antichain2();
  HContext ctx(q);
  Term empty = parse_term("[]", q);
  CHECK(ctx.leq(empty, empty));
  CHECK(ctx.leq(empty, parse_term("a", q)));
  CHECK(ctx.leq(empty, parse_term("[a,b]", q)));
  CHECK_FALSE(ctx.leq(parse_term("a", q), empty));
  CHECK_FALSE(ctx.leq(parse_term("[a]", q), empty));
  // a tree with an empty tail is equivalent to its head
  CHECK(ctx.equiv(parse_term("a.[]", q), parse_term("a", q)));
  CHECK(ctx.equiv(parse_term("s{1}(a).[]", q), parse_term("s{1}(a)", q)));
}

TEST_CASE("equiv_h: worked examples") {
  QOrder q = testutil::antichain2();
  HContext ctx(q);
  CHECK(ctx.equiv(parse_term("a", q), parse_term("s{3}(a)", q)));
  CHECK_FALSE(ctx.equiv(parse_term("a", q), parse_term("b", q)));
  CHECK(ctx.equiv(parse_term("s{0}(s{1}(a.[b]))", q), parse_term("s{1}(a.[b])", q)));
}

TEST_CASE("absorption laws") {
  QOrder q = testutil::antichain2();
  HContext ctx(q);
  const std::vector<Ordinal> indices = {Ordinal(), Ordinal::nat(1), Ordinal::nat(2),
                                        Ordinal::omega(), Ordinal::parse("w^2")};
  for (const std::string& name : q.labels())
    for (const Ordinal& alpha : indices)
      CHECK(ctx.equiv(make_label(name), make_sapp(alpha, make_label(name))));

  // s_b(s_g(T)) == s_g(T) for b < g
  EnumOptions opt;
  opt.level = Ordinal::parse("w^2");
  opt.max_nodes = 4;
  opt.max_branch = 2;
  opt.index_cap = Ordinal::nat(1);
  for (Term t : enumerate_terms(q, opt)) {
    if (!t.is_tree()) continue;
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t g = b + 1; g <= 3; ++g) {
        Term inner = make_sapp(g == 3 ? Ordinal::omega() : Ordinal::nat(g), t);
        CHECK(ctx.equiv(make_sapp(Ordinal::nat(b), inner), inner));
      }
  }
}

TEST_CASE("forest/forest characterization") {
  QOrder q = testutil::chain2();
  HContext ctx(q);
  EnumOptions opt;
  opt.level = Ordinal::nat(1);
  opt.max_nodes = 4;
  opt.max_branch = 2;
  auto terms = enumerate_terms(q, opt);
  for (Term l : terms) {
    if (!l.is_forest()) continue;
    for (Term r : terms) {
      if (!r.is_forest()) continue;
      bool expected = true;
      for (Term lc : l.children()) {
        bool found = false;
        for (Term rc : r.children())
          if (ctx.leq(lc, rc)) {
            found = true;
            break;
          }
        if (!found) {
          expected = false;
          break;
        }
      }
      CHECK(ctx.leq(l, r) == expected);
    }
  }
}

TEST_CASE("level-0 agreement with dominates") {
  for (const QOrder& q : {testutil::antichain3(), testutil::chain3(),
                          QOrder({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}})}) {
    HContext ctx(q);
    const auto& labels = q.labels();
    for (std::size_t ms = 1; ms < (1u << labels.size()); ++ms)
      for (std::size_t mr = 1; mr < (1u << labels.size()); ++mr) {
        std::vector<std::string> S, R;
        std::vector<Term> ts, tr;
        for (std::size_t i = 0; i < labels.size(); ++i) {
          if (ms & (1u << i)) S.push_back(labels[i]), ts.push_back(make_label(labels[i]));
          if (mr & (1u << i)) R.push_back(labels[i]), tr.push_back(make_label(labels[i]));
        }
        CHECK(ctx.leq(make_forest(ts), make_forest(tr)) == q.dominates(S, R));
      }
  }
}

TEST_CASE("is_join_irreducible: worked examples") {
  QOrder q = testutil::antichain2();
  CHECK_FALSE(is_join_irreducible(q, parse_term("[a,b]", q)));
  CHECK(is_join_irreducible(q, parse_term("[a,a]", q)));
  CHECK(is_join_irreducible(q, parse_term("a.[b]", q)));
  CHECK_FALSE(is_join_irreducible(q, parse_term("[]", q)));
  CHECK(is_join_irreducible(q, parse_term("[a]", q)));
  // over the chain, [a,b] collapses onto b
  CHECK(is_join_irreducible(testutil::chain2(), parse_term("[a,b]", testutil::chain2())));
}

TEST_CASE("quasiorder laws on enumerated terms") {
  QOrder q = testutil::antichain2();
  HContext ctx(q);
  EnumOptions opt;
  opt.level = Ordinal::omega();
  opt.max_nodes = 4;
  opt.max_branch = 2;
  opt.index_cap = Ordinal::nat(1);
  auto terms = enumerate_terms(q, opt);
  for (Term t : terms) CHECK(ctx.leq(t, t));
  for (Term a : terms)
    for (Term b : terms)
      for (Term c : terms)
        if (ctx.leq(a, b) && ctx.leq(b, c)) CHECK(ctx.leq(a, c));
}

TEST_CASE("memoized and memo-free evaluation agree") {
  QOrder q = testutil::chain2();
  HContext memo(q, true);
  HContext plain(q, false);
  EnumOptions opt;
  opt.level = Ordinal::omega();
  opt.max_nodes = 4;
  opt.max_branch = 2;
  opt.index_cap = Ordinal::nat(1);
  auto terms = enumerate_terms(q, opt);
  testutil::RandomGen gen(77);
  for (int i = 0; i < 4000; ++i) {
    Term a = terms[gen.pick(terms.size())];
    Term b = terms[gen.pick(terms.size())];
    CHECK(memo.leq(a, b) == plain.leq(a, b));
  }
}

TEST_CASE("undeclared labels are rejected") {
  QOrder q = testutil::antichain2();
  CHECK_THROWS_AS(leq_h(q, make_label("zz"), make_label("a")), validation_error);
}

TEST_CASE("canonicalize preserves h-equivalence") {
  QOrder q = testutil::chain2();
  HContext ctx(q);
  CHECK(ctx.equiv(parse_term("[a.[b],a]", q), canonicalize(parse_term("[a.[b],a]", q))));
  EnumOptions opt;
  opt.level = Ordinal::omega();
  opt.max_nodes = 5;
  opt.max_branch = 2;
  opt.index_cap = Ordinal::nat(1);
  for (Term t : enumerate_terms(q, opt)) CHECK(ctx.equiv(t, canonicalize(t)));
  testutil::RandomGen gen(31337);
  for (int i = 0; i < 500; ++i) {
    Term t = gen.term(q, 8);
    CHECK(ctx.equiv(t, canonicalize(t)));
  }
}

TEST_CASE("a shared context answers coherently under concurrent queries") {
  QOrder q = testutil::antichain2();
  EnumOptions opt;
  opt.level = Ordinal::nat(1);
  opt.max_nodes = 5;
  opt.max_branch = 2;
  auto terms = enumerate_terms(q, opt);
  HContext shared(q);
  HContext reference(q);
  std::vector<std::vector<bool>> expected(terms.size(), std::vector<bool>(terms.size()));
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = 0; j < terms.size(); ++j)
      expected[i][j] = reference.leq(terms[i], terms[j]);

  std::vector<std::thread> workers;
  std::atomic<int> disagreements{0};
  for (int w = 0; w < 4; ++w)
    workers.emplace_back([&] {
      for (std::size_t i = 0; i < terms.size(); ++i)
        for (std::size_t j = 0; j < terms.size(); ++j)
          if (shared.leq(terms[i], terms[j]) != expected[i][j]) ++disagreements;
    });
  for (auto& t : workers) t.join();
  CHECK(disagreements.load() == 0);
}

TEST_CASE("oracle agreement on level-1 terms (sampled here; exhaustive in acceptance)") {
  for (const QOrder& q : {testutil::antichain2(), testutil::chain2()}) {
    HContext ctx(q);
    EnumOptions opt;
    opt.level = Ordinal::nat(1);
    opt.max_nodes = 5;
    opt.max_branch = 2;
    auto terms = enumerate_terms(q, opt);
    std::vector<LabeledForest> forests;
    for (Term t : terms) forests.push_back(to_labeled_forest(t));
    for (std::size_t i = 0; i < terms.size(); ++i)
      for (std::size_t j = 0; j < terms.size(); ++j)
        CHECK(ctx.leq(terms[i], terms[j]) == hom_leq(q, forests[i], forests[j]));
  }
}

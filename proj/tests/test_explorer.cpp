#include "doctest.h"
#include "oracle.hpp"
#include "permbase/explorer.hpp"

using namespace permbase;

namespace {

std::vector<oracle::Raw> raw_elements(const PermutationGroup& G) {
  std::vector<oracle::Raw> gens;
  for (const auto& g : G.generators()) gens.push_back(g.images());
  return oracle::generate(G.degree(), gens);
}

}  // namespace

TEST_CASE("conjecture check on single actions") {
  auto c5 = conjecture_check(builtin_group(GroupFamily::cyclic, 5), "cyc:5");
  CHECK(c5.n == 5);
  CHECK(c5.n_prime == 2);
  REQUIRE(c5.min_base.has_value());
  CHECK(*c5.min_base == 1);  // any single pair is a base in an odd regular action
  CHECK(c5.verdict == ConjectureReport::Verdict::not_a_witness);
  CHECK(c5.transitive);

  auto a5 = conjecture_check(builtin_group(GroupFamily::alternating, 5), "alt:5");
  CHECK(a5.n_prime == 2);
  CHECK(*a5.min_base == 2);
  CHECK(a5.verdict == ConjectureReport::Verdict::not_a_witness);

  // not simple; only exercises the report shape: min_base 2 > n' = 1
  auto s3 = conjecture_check(builtin_group(GroupFamily::symmetric, 3), "sym:3");
  CHECK(s3.n_prime == 1);
  CHECK(*s3.min_base == 2);
  CHECK(s3.verdict == ConjectureReport::Verdict::witness_for_conjecture);
}

TEST_CASE("n_prime follows the parity split") {
  auto even = conjecture_check(builtin_group(GroupFamily::symmetric, 4), "sym:4");
  CHECK(even.n_prime == 2);
  auto odd = conjecture_check(builtin_group(GroupFamily::cyclic, 7), "cyc:7");
  CHECK(odd.n_prime == 3);
}

TEST_CASE("catalog runs keep going past bad rows") {
  auto rows = catalog_run({"cyc:3", "nonsense", "alt:5"});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].verdict == ConjectureReport::Verdict::not_a_witness);
  CHECK(rows[1].verdict == ConjectureReport::Verdict::error);
  CHECK_FALSE(rows[1].error.empty());
  CHECK(rows[2].verdict == ConjectureReport::Verdict::not_a_witness);

  CHECK(catalog_run({}).empty());
}

TEST_CASE("odd-order actions are never witnesses") {
  for (auto spec : {"cyc:3", "cyc:5", "cyc:7", "cyc:9"}) {
    auto rows = catalog_run({spec});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].verdict == ConjectureReport::Verdict::not_a_witness);
  }
}

TEST_CASE("reported witnesses are certified minimum bases") {
  for (auto spec : {"cyc:5", "alt:5", "sym:3"}) {
    auto parsed = parse_group_spec(spec);
    auto G = builtin_group(parsed->first, parsed->second);
    auto report = conjecture_check(G, spec);
    REQUIRE(report.min_base.has_value());
    auto action = pair_action(G);
    auto raw = raw_elements(action.group);
    CHECK(oracle::is_base(raw, report.witness.points()));
    CHECK(report.witness.count() == *report.min_base);
    // nothing smaller works
    for (unsigned mask = 0; mask < (1u << action.group.degree()); ++mask) {
      std::vector<unsigned> pts;
      for (unsigned i = 0; i < action.group.degree(); ++i)
        if ((mask >> i) & 1) pts.push_back(i);
      if (pts.size() < *report.min_base) CHECK_FALSE(oracle::is_base(raw, pts));
    }
  }
}

TEST_CASE("budget exhaustion propagates as a verdict") {
  SearchLimits tiny;
  tiny.node_budget = 1;
  auto report = conjecture_check(builtin_group(GroupFamily::alternating, 5), "alt:5", tiny);
  CHECK(report.verdict == ConjectureReport::Verdict::budget_exceeded);
  CHECK_FALSE(report.min_base.has_value());
}

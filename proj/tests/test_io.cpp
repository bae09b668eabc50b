#include "doctest.h"
#include "permbase/io.hpp"

using namespace permbase;

TEST_CASE("group file parsing") {
  auto s3 = parse_group_file("degree 3\ngen (1 2)\ngen (1 2 3)\n");
  CHECK(s3.degree() == 3);
  CHECK(s3.order() == 6);

  auto d = parse_group_file("degree 4\ngen (1 2)(3 4)\n");
  CHECK(d.order() == 2);

  auto with_noise = parse_group_file("# a comment\n\ndegree 3\n  gen (1 2)\n");
  CHECK(with_noise.order() == 2);

  CHECK(parse_group_file("degree 2\ngen ()\n").order() == 1);
}

TEST_CASE("group file parse errors carry line and column") {
  try {
    parse_group_file("degree 3\ngen (1 4)\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 8);  // the '4'
  }
  try {
    parse_group_file("degree 3\ngen (1 2)(2 3)\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_group_file("gen (1 2)\n"), ParseError);
  CHECK_THROWS_AS(parse_group_file("degree 3\n"), ParseError);
  CHECK_THROWS_AS(parse_group_file("degree 3\nfoo (1 2)\n"), ParseError);
  CHECK_THROWS_AS(parse_group_file(""), ParseError);
}

TEST_CASE("cycle notation rendering") {
  CHECK(permutation_to_cycles(Permutation::identity(4)) == "()");
  CHECK(permutation_to_cycles(Permutation::from_cycles(4, {{0, 1}, {2, 3}})) ==
        "(1 2)(3 4)");
  CHECK(permutation_to_cycles(Permutation::from_cycles(3, {{0, 2, 1}})) == "(1 3 2)");
}

TEST_CASE("group file round trip preserves degree, generators, order") {
  for (auto spec : {"sym:4", "alt:5", "dih:6", "cyc:7"}) {
    auto parsed = parse_group_spec(spec);
    auto G = builtin_group(parsed->first, parsed->second);
    auto text = emit_group_file(G);
    auto back = parse_group_file(text);
    CHECK(back.degree() == G.degree());
    CHECK(back.generators().size() == G.generators().size());
    CHECK(back.order() == G.order());
    // emission is deterministic
    CHECK(emit_group_file(back) == text);
  }
}

TEST_CASE("point list parsing and rendering") {
  CHECK(parse_point_list("1,2,5", 5) == std::vector<unsigned>{0, 1, 4});
  CHECK(parse_point_list("", 5).empty());
  CHECK_THROWS_AS(parse_point_list("0", 5), BadParameter);
  CHECK_THROWS_AS(parse_point_list("6", 5), BadParameter);
  CHECK_THROWS_AS(parse_point_list("1,x", 5), BadParameter);
  CHECK(render_points(PointSet(5, {0, 1, 4})) == "1,2,5");
  CHECK(render_points(PointSet(5)) == "-");
}

TEST_CASE("pair tokens") {
  PairIndexMap small(6);
  CHECK(parse_pair_token("12", small) == small.index_of(0, 1));
  CHECK(parse_pair_token("2-5", small) == small.index_of(1, 4));
  CHECK_THROWS_AS(parse_pair_token("11", small), BadParameter);
  CHECK_THROWS_AS(parse_pair_token("17", small), BadParameter);
  CHECK_THROWS_AS(parse_pair_token("123", small), BadParameter);
  RenderContext ctx{&small, nullptr};
  CHECK(render_point(small.index_of(0, 1), ctx) == "12");
  CHECK(render_points(PointSet(15, {small.index_of(0, 1), small.index_of(4, 5)}), ctx) ==
        "12,56");

  PairIndexMap wide(12);
  RenderContext wctx{&wide, nullptr};
  CHECK(render_point(wide.index_of(0, 11), wctx) == "1-12");
  CHECK(parse_pair_token("1-12", wide) == wide.index_of(0, 11));
}

TEST_CASE("moore family files round trip") {
  MooreFamily M(PointSet::full(4),
                {PointSet(4), PointSet(4, {0}), PointSet(4, {1}), PointSet(4, {2}),
                 PointSet(4, {1, 2, 3}), PointSet::full(4)},
                PointSet(4, {0, 1, 2}));
  auto text = emit_moore_family(M);
  CHECK(text == "ground 1 2 3 4\n"
                "generators 1 2 3\n"
                "member\n"
                "member 1\n"
                "member 2\n"
                "member 3\n"
                "member 2 3 4\n"
                "member 1 2 3 4\n");
  auto back = parse_moore_family(text);
  CHECK(back.members() == M.members());
  CHECK(back.generators() == M.generators());
  CHECK(emit_moore_family(back) == text);

  CHECK_THROWS_AS(parse_moore_family("member 1\n"), ParseError);
}

TEST_CASE("complex files round trip") {
  auto S = SimplicialComplex::from_facets(PointSet::full(3),
                                          {PointSet(3, {0, 1}), PointSet(3, {2})});
  auto text = emit_complex(S);
  auto back = parse_complex(text);
  CHECK(back.independents() == S.independents());
  CHECK(emit_complex(back) == text);
}

TEST_CASE("lattice emission for Sym(3) is five sorted member lines") {
  auto lattice = closed_set_lattice(builtin_group(GroupFamily::symmetric, 3));
  CHECK(emit_moore_family(lattice.to_moore_family()) == "ground 1 2 3\n"
                                                        "member\n"
                                                        "member 1\n"
                                                        "member 2\n"
                                                        "member 3\n"
                                                        "member 1 2 3\n");
}

TEST_CASE("base report line for the Sym(6) pair block base") {
  auto action = pair_action(builtin_group(GroupFamily::symmetric, 6));
  auto base = example_base_sym_pairs(6);
  auto witness = is_independent(action.group, base);
  REQUIRE(witness.has_value());
  BaseReport report{base, base.count(), true, witness};
  RenderContext ctx{&action.map, nullptr};
  CHECK(render_base_report(report, ctx) ==
        "base size=4 irredundant=true order=12,23,45,56");
}

TEST_CASE("witness rendering") {
  auto s3 = builtin_group(GroupFamily::symmetric, 3);
  auto w = is_irredundant_sequence(s3, {0, 1});
  REQUIRE(w.has_value());
  CHECK(render_witness(*w) == "order=1,2 stabilizer_orders=6,2,1");
}

TEST_CASE("conjecture rows render deterministically") {
  auto report = conjecture_check(builtin_group(GroupFamily::cyclic, 3), "cyc:3");
  CHECK(render_conjecture_row(report) ==
        "group=cyc:3 n=3 n_prime=1 min_base=1 witness=12 verdict=not-a-witness "
        "orbits=1 transitive=true");
  auto rows = catalog_run({"bogus"});
  CHECK(render_conjecture_row(rows[0]) ==
        "group=bogus verdict=error error=\"unknown group spec: bogus\"");
}

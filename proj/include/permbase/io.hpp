#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "permbase/actions.hpp"
#include "permbase/brsc.hpp"
#include "permbase/errors.hpp"
#include "permbase/explorer.hpp"
#include "permbase/galois.hpp"
#include "permbase/group.hpp"
#include "permbase/moore.hpp"

namespace permbase {

// Text formats. Points are 1-based everywhere outside the library. All
// emitters are deterministic: identical inputs give byte-identical output.
//
// Group file:          degree N
//                      gen (1 2)(3 4)     one line per generator, () = identity
// Moore family file:   ground 1 2 3 4     then `member 2 3 4` per member
//                      (optional `generators 1 2 3` for designated join generators)
// Complex file:        ground 1 2 3       then `indep 1 2` per independent set
// Lines starting with '#' and blank lines are ignored.

// ---------------------------------------------------------------------------
// points and pair points

// Rendering context: an optional pair map (points are pair indices rendered
// as "ab" / "a-b") and an optional relabeling back to original point labels
// (used after strip_fixed_points).
struct RenderContext {
  const PairIndexMap* pairs = nullptr;
  const std::vector<unsigned>* relabel = nullptr;

  unsigned original(unsigned p) const { return relabel ? (*relabel)[p] : p; }
};

inline std::string render_point(unsigned p, const RenderContext& ctx = {}) {
  if (ctx.pairs) {
    auto [a, b] = ctx.pairs->pair_at(p);
    a = ctx.original(a);
    b = ctx.original(b);
    if (b + 1 <= 9) return std::to_string(a + 1) + std::to_string(b + 1);
    return std::to_string(a + 1) + "-" + std::to_string(b + 1);
  }
  return std::to_string(ctx.original(p) + 1);
}

inline std::string render_points(const PointSet& s, const RenderContext& ctx = {}) {
  if (s.empty()) return "-";
  std::string out;
  for (unsigned p : s.points()) {
    if (!out.empty()) out += ',';
    out += render_point(p, ctx);
  }
  return out;
}

inline std::string render_sequence(const std::vector<unsigned>& seq,
                                   const RenderContext& ctx = {}) {
  if (seq.empty()) return "-";
  std::string out;
  for (unsigned p : seq) {
    if (!out.empty()) out += ',';
    out += render_point(p, ctx);
  }
  return out;
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string token;
  for (char c : s) {
    if (c == sep) {
      out.push_back(token);
      token.clear();
    } else {
      token += c;
    }
  }
  out.push_back(token);
  return out;
}

inline std::optional<unsigned long> to_number(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    return std::nullopt;
  return std::stoul(s);
}

}  // namespace detail

// Comma-separated 1-based points, e.g. "1,2,3". Optional relabel maps an
// original label to its current index (inverse of RenderContext::relabel).
inline std::vector<unsigned> parse_point_list(const std::string& text, unsigned degree) {
  std::vector<unsigned> out;
  if (text.empty()) return out;
  for (const auto& token : detail::split(text, ',')) {
    auto n = detail::to_number(token);
    if (!n || *n == 0) throw BadParameter("bad point '" + token + "'");
    if (*n > degree) throw BadParameter("point " + token + " exceeds degree");
    out.push_back(static_cast<unsigned>(*n - 1));
  }
  return out;
}

// Pair-point tokens: "ab" when both a, b <= 9, otherwise "a-b".
inline unsigned parse_pair_token(const std::string& token, const PairIndexMap& map) {
  unsigned long a = 0, b = 0;
  auto dash = token.find('-');
  if (dash != std::string::npos) {
    auto na = detail::to_number(token.substr(0, dash));
    auto nb = detail::to_number(token.substr(dash + 1));
    if (!na || !nb) throw BadParameter("bad pair token '" + token + "'");
    a = *na;
    b = *nb;
  } else {
    if (token.size() != 2 || !std::isdigit(static_cast<unsigned char>(token[0])) ||
        !std::isdigit(static_cast<unsigned char>(token[1])))
      throw BadParameter("bad pair token '" + token + "' (use \"ab\" or \"a-b\")");
    a = static_cast<unsigned long>(token[0] - '0');
    b = static_cast<unsigned long>(token[1] - '0');
  }
  if (a == 0 || b == 0 || a == b) throw BadParameter("bad pair token '" + token + "'");
  if (a > map.base_degree() || b > map.base_degree())
    throw BadParameter("pair token '" + token + "' exceeds base degree");
  return map.index_of(static_cast<unsigned>(a - 1), static_cast<unsigned>(b - 1));
}

inline std::vector<unsigned> parse_pair_point_list(const std::string& text,
                                                   const PairIndexMap& map) {
  std::vector<unsigned> out;
  if (text.empty()) return out;
  for (const auto& token : detail::split(text, ','))
    out.push_back(parse_pair_token(token, map));
  return out;
}

// ---------------------------------------------------------------------------
// permutations in disjoint cycle notation

inline std::string permutation_to_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> done(p.degree(), false);
  for (unsigned start = 0; start < p.degree(); ++start) {
    if (done[start] || p.fixes(start)) continue;
    out += '(';
    unsigned x = start;
    bool first = true;
    do {
      done[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = p.apply(x);
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace detail {

// Parses "(1 2)(3 4)" on the given line; column positions are 1-based.
inline Permutation parse_cycles_line(const std::string& line, std::size_t start_col,
                                     unsigned degree, std::size_t line_no) {
  std::vector<unsigned> images(degree);
  std::vector<bool> used(degree, false);
  for (unsigned i = 0; i < degree; ++i) images[i] = i;
  std::size_t i = start_col - 1;
  auto fail = [&](std::size_t col, const std::string& msg) -> ParseError {
    return ParseError(line_no, col + 1, msg);
  };
  bool any = false;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] != '(') throw fail(i, "expected '('");
    std::size_t open = i++;
    std::vector<unsigned> cycle;
    while (true) {
      while (i < line.size() && (std::isspace(static_cast<unsigned char>(line[i])) || line[i] == ','))
        ++i;
      if (i >= line.size()) throw fail(open, "unterminated cycle");
      if (line[i] == ')') {
        ++i;
        break;
      }
      std::size_t num_start = i;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
      if (i == num_start) throw fail(i, "expected point or ')'");
      unsigned long value = std::stoul(line.substr(num_start, i - num_start));
      if (value == 0) throw fail(num_start, "points are 1-based");
      if (value > degree)
        throw fail(num_start, "point " + std::to_string(value) + " exceeds degree " +
                                  std::to_string(degree));
      unsigned point = static_cast<unsigned>(value - 1);
      if (used[point])
        throw fail(num_start, "point " + std::to_string(value) + " repeated, cycles must be disjoint");
      used[point] = true;
      cycle.push_back(point);
    }
    any = true;
    for (std::size_t j = 0; j < cycle.size(); ++j)
      images[cycle[j]] = cycle[(j + 1) % cycle.size()];
  }
  if (!any) throw fail(line.size(), "expected at least one cycle, use () for the identity");
  return Permutation(std::move(images));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// group files

inline PermutationGroup parse_group_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::optional<unsigned> degree;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string keyword;
    ls >> keyword;
    if (keyword == "degree") {
      if (degree) throw ParseError(line_no, first + 1, "degree given twice");
      std::string num;
      ls >> num;
      auto n = detail::to_number(num);
      if (!n || *n == 0)
        throw ParseError(line_no, line.find(num) == std::string::npos ? first + 1 : line.find(num) + 1,
                         "degree must be a positive integer");
      degree = static_cast<unsigned>(*n);
    } else if (keyword == "gen") {
      if (!degree) throw ParseError(line_no, first + 1, "degree must come before generators");
      std::size_t after = line.find("gen", first) + 3;
      gens.push_back(detail::parse_cycles_line(line, after + 1, *degree, line_no));
    } else {
      throw ParseError(line_no, first + 1, "unknown keyword '" + keyword + "'");
    }
  }
  if (!degree) throw ParseError(line_no + 1, 1, "missing 'degree' line");
  if (gens.empty()) throw ParseError(line_no + 1, 1, "missing 'gen' lines");
  return PermutationGroup(*degree, std::move(gens));
}

inline std::string emit_group_file(const PermutationGroup& G) {
  std::string out = "degree " + std::to_string(G.degree()) + "\n";
  for (const auto& g : G.generators()) out += "gen " + permutation_to_cycles(g) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Moore family / complex files

namespace detail {

inline std::string render_member_points(const PointSet& s) {
  std::string out;
  for (unsigned p : s.points()) out += ' ' + std::to_string(p + 1);
  return out;
}

inline PointSet parse_member_points(std::istringstream& ls, unsigned width,
                                    std::size_t line_no) {
  PointSet s(width);
  std::string token;
  while (ls >> token) {
    auto n = to_number(token);
    if (!n || *n == 0 || *n > width)
      throw ParseError(line_no, 1, "bad point '" + token + "'");
    s.add(static_cast<unsigned>(*n - 1));
  }
  return s;
}

}  // namespace detail

inline std::string emit_moore_family(const MooreFamily& family) {
  std::string out = "ground" + detail::render_member_points(family.ground()) + "\n";
  if (family.has_designated_generators())
    out += "generators" + detail::render_member_points(family.generators()) + "\n";
  for (const auto& m : family.members())
    out += "member" + detail::render_member_points(m) + "\n";
  return out;
}

inline MooreFamily parse_moore_family(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::optional<PointSet> ground;
  std::optional<PointSet> generators;
  std::vector<PointSet> members;
  unsigned width = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string keyword;
    ls >> keyword;
    if (keyword == "ground") {
      std::vector<unsigned> pts;
      std::string token;
      while (ls >> token) {
        auto n = detail::to_number(token);
        if (!n || *n == 0) throw ParseError(line_no, 1, "bad ground point '" + token + "'");
        pts.push_back(static_cast<unsigned>(*n));
        width = std::max(width, pts.back());
      }
      if (pts.empty()) throw ParseError(line_no, 1, "empty ground set");
      ground = PointSet(width);
      for (unsigned p : pts) ground->add(p - 1);
    } else if (keyword == "generators") {
      if (!ground) throw ParseError(line_no, 1, "ground must come first");
      generators = detail::parse_member_points(ls, width, line_no);
    } else if (keyword == "member") {
      if (!ground) throw ParseError(line_no, 1, "ground must come first");
      members.push_back(detail::parse_member_points(ls, width, line_no));
    } else {
      throw ParseError(line_no, first + 1, "unknown keyword '" + keyword + "'");
    }
  }
  if (!ground) throw ParseError(line_no + 1, 1, "missing 'ground' line");
  return MooreFamily(*ground, std::move(members), std::move(generators));
}

inline std::string emit_complex(const SimplicialComplex& S) {
  std::string out = "ground" + detail::render_member_points(S.ground()) + "\n";
  for (const auto& s : S.independents())
    out += "indep" + detail::render_member_points(s) + "\n";
  return out;
}

inline SimplicialComplex parse_complex(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::optional<PointSet> ground;
  std::vector<PointSet> independents;
  unsigned width = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string keyword;
    ls >> keyword;
    if (keyword == "ground") {
      std::vector<unsigned> pts;
      std::string token;
      while (ls >> token) {
        auto n = detail::to_number(token);
        if (!n || *n == 0) throw ParseError(line_no, 1, "bad ground point '" + token + "'");
        pts.push_back(static_cast<unsigned>(*n));
        width = std::max(width, pts.back());
      }
      if (pts.empty()) throw ParseError(line_no, 1, "empty ground set");
      ground = PointSet(width);
      for (unsigned p : pts) ground->add(p - 1);
    } else if (keyword == "indep") {
      if (!ground) throw ParseError(line_no, 1, "ground must come first");
      independents.push_back(detail::parse_member_points(ls, width, line_no));
    } else {
      throw ParseError(line_no, first + 1, "unknown keyword '" + keyword + "'");
    }
  }
  if (!ground) throw ParseError(line_no + 1, 1, "missing 'ground' line");
  return SimplicialComplex(*ground, std::move(independents));
}

// ---------------------------------------------------------------------------
// report lines

inline std::string render_witness(const IrredundanceWitness& w,
                                  const RenderContext& ctx = {}) {
  std::string out = "order=" + render_sequence(w.order, ctx) + " stabilizer_orders=";
  for (std::size_t i = 0; i < w.stabilizer_orders.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w.stabilizer_orders[i]);
  }
  return out;
}

inline std::string render_base_report(const BaseReport& r, const RenderContext& ctx = {}) {
  std::string out = "base size=" + std::to_string(r.size) +
                    " irredundant=" + (r.irredundant ? "true" : "false");
  if (r.witness) out += " order=" + render_sequence(r.witness->order, ctx);
  return out;
}

inline std::string render_verdict(ConjectureReport::Verdict v) {
  switch (v) {
    case ConjectureReport::Verdict::witness_for_conjecture:
      return "witness-for-conjecture";
    case ConjectureReport::Verdict::not_a_witness:
      return "not-a-witness";
    case ConjectureReport::Verdict::budget_exceeded:
      return "budget-exceeded";
    case ConjectureReport::Verdict::error:
      return "error";
  }
  return "error";
}

// One line per action. min_base is checked only against the supplied action,
// never against every action of the abstract group.
inline std::string render_conjecture_row(const ConjectureReport& r) {
  if (r.verdict == ConjectureReport::Verdict::error)
    return "group=" + r.group_id + " verdict=error error=\"" + r.error + "\"";
  std::string out = "group=" + r.group_id + " n=" + std::to_string(r.n) +
                    " n_prime=" + std::to_string(r.n_prime);
  if (r.min_base) {
    PairIndexMap map(r.n);
    RenderContext ctx{&map, nullptr};
    out += " min_base=" + std::to_string(*r.min_base);
    out += " witness=" + render_points(r.witness, ctx);
  }
  out += " verdict=" + render_verdict(r.verdict);
  out += " orbits=" + std::to_string(r.orbit_count);
  out += std::string(" transitive=") + (r.transitive ? "true" : "false");
  return out;
}

}  // namespace permbase

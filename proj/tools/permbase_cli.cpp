// Command line front end: groups come from builtin specs (sym:n, alt:n,
// cyc:n, dih:n), files in the group-file format, or stdin ("-").
//
// Exit codes: 0 success, 1 negative verdict (dependent set, not-a-witness),
// 2 input error, 3 search budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "permbase/permbase.hpp"

namespace pb = permbase;
using nlohmann::json;

namespace {

struct GlobalOptions {
  std::uint64_t max_order = pb::SearchLimits{}.element_cap;
  std::uint64_t budget = pb::SearchLimits{}.node_budget;
  bool allow_fixed_points = false;
  bool emit_json = false;
  bool pair_mode = false;

  pb::SearchLimits limits() const {
    pb::SearchLimits l;
    l.element_cap = max_order;
    l.node_budget = budget;
    return l;
  }
};

std::string read_stream(std::istream& in) {
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pb::BadParameter("cannot open '" + path + "'");
  return read_stream(in);
}

pb::PermutationGroup load_base_group(const std::string& spec) {
  if (auto builtin = pb::parse_group_spec(spec))
    return pb::builtin_group(builtin->first, builtin->second);
  if (spec == "-") return pb::parse_group_file(read_stream(std::cin));
  return pb::parse_group_file(read_file(spec));
}

// The group a command operates on, after optional fixed-point stripping and
// optional pair action. All point I/O stays in original base labels.
struct LoadedGroup {
  pb::PermutationGroup group;
  std::string id;
  std::optional<pb::PairIndexMap> pairs;
  std::vector<unsigned> new_to_old;  // base-action relabeling; empty when identity
  std::vector<unsigned> stripped;    // original labels of removed fixed points
  unsigned original_degree = 0;

  pb::RenderContext ctx() const {
    return pb::RenderContext{pairs ? &*pairs : nullptr,
                             new_to_old.empty() ? nullptr : &new_to_old};
  }

  unsigned to_current(unsigned original) const {
    if (new_to_old.empty()) return original;
    for (unsigned i = 0; i < new_to_old.size(); ++i)
      if (new_to_old[i] == original) return i;
    throw pb::BadParameter("point " + std::to_string(original + 1) +
                           " was stripped as a fixed point");
  }

  // Parses a comma-separated point list in the command's current coordinates
  // (pair tokens in pair mode), given in original labels.
  std::vector<unsigned> parse_points(const std::string& text) const {
    std::vector<unsigned> out;
    if (text.empty()) return out;
    if (pairs) {
      pb::PairIndexMap originals(original_degree);
      for (unsigned idx : pb::parse_pair_point_list(text, originals)) {
        auto [a, b] = originals.pair_at(idx);
        out.push_back(pairs->index_of(to_current(a), to_current(b)));
      }
      return out;
    }
    for (unsigned p : pb::parse_point_list(text, original_degree))
      out.push_back(to_current(p));
    return out;
  }

  pb::PointSet parse_set(const std::string& text) const {
    pb::PointSet s(group.degree());
    for (unsigned p : parse_points(text)) {
      if (s.contains(p)) throw pb::DuplicateEntries("repeated point in set");
      s.add(p);
    }
    return s;
  }
};

LoadedGroup load_group(const std::string& spec, const GlobalOptions& opt) {
  LoadedGroup out{load_base_group(spec), spec, std::nullopt, {}, {}, 0};
  out.original_degree = out.group.degree();
  if (opt.allow_fixed_points) {
    pb::PointSet fixed = out.group.global_fixed_points();
    if (!fixed.empty()) {
      auto stripped = pb::strip_fixed_points(out.group);
      out.stripped = fixed.points();
      out.new_to_old = stripped.kept;
      out.group = stripped.group;
    }
  }
  if (opt.pair_mode) {
    auto action = pb::pair_action(out.group);
    out.pairs.emplace(action.map);
    out.group = action.group;
  }
  return out;
}

void print_strip_note(const GlobalOptions& opt, const LoadedGroup& g, json& doc) {
  if (g.stripped.empty()) return;
  json pts = json::array();
  std::string line;
  for (unsigned p : g.stripped) {
    if (!line.empty()) line += ',';
    line += std::to_string(p + 1);
    pts.push_back(p + 1);
  }
  doc["stripped_fixed_points"] = pts;
  if (!opt.emit_json)
    std::cout << "note: stripped globally fixed points " << line
              << "; reports use original labels\n";
}

json json_points(const pb::PointSet& s, const pb::RenderContext& ctx) {
  json arr = json::array();
  for (unsigned p : s.points()) {
    if (ctx.pairs)
      arr.push_back(pb::render_point(p, ctx));
    else
      arr.push_back(ctx.original(p) + 1);
  }
  return arr;
}

json json_sequence(const std::vector<unsigned>& seq, const pb::RenderContext& ctx) {
  json arr = json::array();
  for (unsigned p : seq) {
    if (ctx.pairs)
      arr.push_back(pb::render_point(p, ctx));
    else
      arr.push_back(ctx.original(p) + 1);
  }
  return arr;
}

json json_witness(const pb::IrredundanceWitness& w, const pb::RenderContext& ctx) {
  json doc;
  doc["order"] = json_sequence(w.order, ctx);
  doc["stabilizer_orders"] = w.stabilizer_orders;
  return doc;
}

json json_conjecture_row(const pb::ConjectureReport& r) {
  json doc;
  doc["group"] = r.group_id;
  doc["verdict"] = pb::render_verdict(r.verdict);
  if (r.verdict == pb::ConjectureReport::Verdict::error) {
    doc["error"] = r.error;
    return doc;
  }
  doc["n"] = r.n;
  doc["n_prime"] = r.n_prime;
  doc["orbits"] = r.orbit_count;
  doc["transitive"] = r.transitive;
  if (r.min_base) {
    pb::PairIndexMap map(r.n);
    pb::RenderContext ctx{&map, nullptr};
    doc["min_base"] = *r.min_base;
    doc["witness"] = json_points(r.witness, ctx);
  }
  return doc;
}

void emit(const GlobalOptions& opt, const json& doc, const std::string& text) {
  if (opt.emit_json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

// ---------------------------------------------------------------------------

int cmd_info(const GlobalOptions& opt, const LoadedGroup& g) {
  auto ctx = g.ctx();
  json doc;
  std::string text;
  print_strip_note(opt, g, doc);
  doc["command"] = "info";
  doc["group"] = g.id;
  doc["degree"] = g.group.degree();
  doc["order"] = g.group.order();
  doc["generators"] = g.group.generators().size();
  if (g.pairs) doc["pairs_of"] = g.pairs->base_degree();
  text += "degree " + std::to_string(g.group.degree()) + "\n";
  text += "order " + std::to_string(g.group.order()) + "\n";
  text += "generators " + std::to_string(g.group.generators().size()) + "\n";
  auto orbits = pb::orbit_partition(g.group);
  json jorbits = json::array();
  for (const auto& orbit : orbits) {
    jorbits.push_back(json_points(orbit, ctx));
    text += "orbit " + pb::render_points(orbit, ctx) + "\n";
  }
  doc["orbits"] = jorbits;
  doc["transitive"] = orbits.size() == 1;
  text += std::string("transitive ") + (orbits.size() == 1 ? "true" : "false") + "\n";
  emit(opt, doc, text);
  return 0;
}

int cmd_closure(const GlobalOptions& opt, const LoadedGroup& g, const std::string& set_arg) {
  auto ctx = g.ctx();
  pb::PointSet Y = g.parse_set(set_arg);
  pb::PointSet cl = pb::closure(g.group, Y, opt.limits());
  json doc;
  print_strip_note(opt, g, doc);
  doc["command"] = "closure";
  doc["group"] = g.id;
  doc["set"] = json_points(Y, ctx);
  doc["closure"] = json_points(cl, ctx);
  doc["closed"] = cl == Y;
  std::string text = "set " + pb::render_points(Y, ctx) + "\n" +
                     "closure " + pb::render_points(cl, ctx) + "\n" +
                     "closed " + (cl == Y ? "true" : "false") + "\n";
  emit(opt, doc, text);
  return 0;
}

int cmd_lattice(const GlobalOptions& opt, const LoadedGroup& g) {
  auto lattice = pb::closed_set_lattice(g.group, opt.limits());
  auto family = lattice.to_moore_family();
  json doc;
  print_strip_note(opt, g, doc);
  doc["command"] = "lattice";
  doc["group"] = g.id;
  doc["size"] = family.members().size();
  json members = json::array();
  for (const auto& m : family.members()) members.push_back(json_points(m, g.ctx()));
  doc["members"] = members;
  emit(opt, doc, pb::emit_moore_family(family));
  return 0;
}

int cmd_independent(const GlobalOptions& opt, const LoadedGroup* g,
                    const std::string& set_arg, const std::string& seq_arg,
                    const std::string& family_arg) {
  json doc;
  doc["command"] = "independent";
  if (!family_arg.empty()) {
    auto family = pb::parse_moore_family(read_file(family_arg));
    pb::PointSet Y(family.ground().width());
    for (unsigned p : pb::parse_point_list(set_arg, family.ground().width())) Y.add(p);
    auto witness = pb::is_independent_in_family(family, Y);
    doc["family"] = family_arg;
    doc["set"] = json_points(Y, {});
    doc["independent"] = witness.has_value();
    std::string text;
    if (witness) {
      text = "independent=true order=" + pb::render_sequence(witness->enumeration) + " chain=";
      json jchain = json::array();
      for (std::size_t i = 0; i < witness->chain.size(); ++i) {
        if (i) text += ';';
        text += pb::render_points(witness->chain[i]);
        jchain.push_back(json_points(witness->chain[i], {}));
      }
      doc["order"] = json_sequence(witness->enumeration, {});
      doc["chain"] = jchain;
      text += "\n";
    } else {
      text = "independent=false\n";
    }
    emit(opt, doc, text);
    return witness ? 0 : 1;
  }
  auto ctx = g->ctx();
  print_strip_note(opt, *g, doc);
  doc["group"] = g->id;
  if (!seq_arg.empty()) {
    auto seq = g->parse_points(seq_arg);
    auto witness = pb::is_irredundant_sequence(g->group, seq, opt.limits());
    doc["sequence"] = json_sequence(seq, ctx);
    doc["irredundant"] = witness.has_value();
    if (witness) doc["witness"] = json_witness(*witness, ctx);
    std::string text = witness ? "irredundant=true " + pb::render_witness(*witness, ctx) + "\n"
                               : "irredundant=false\n";
    emit(opt, doc, text);
    return witness ? 0 : 1;
  }
  pb::PointSet Y = g->parse_set(set_arg);
  auto witness = pb::is_independent(g->group, Y, opt.limits());
  doc["set"] = json_points(Y, ctx);
  doc["independent"] = witness.has_value();
  if (witness) doc["witness"] = json_witness(*witness, ctx);
  std::string text = witness ? "independent=true " + pb::render_witness(*witness, ctx) + "\n"
                             : "independent=false\n";
  emit(opt, doc, text);
  return witness ? 0 : 1;
}

int cmd_bases(const GlobalOptions& opt, const LoadedGroup& g, pb::BaseEnumMode mode) {
  auto ctx = g.ctx();
  auto result = pb::enumerate_irredundant_bases(g.group, mode, opt.limits());
  json doc;
  print_strip_note(opt, g, doc);
  doc["command"] = "bases";
  doc["group"] = g.id;
  doc["complete"] = result.complete;
  doc["count"] = result.count;
  std::string text;
  if (mode == pb::BaseEnumMode::all) {
    json rows = json::array();
    for (const auto& r : result.bases) {
      json row;
      row["base"] = json_points(r.base, ctx);
      row["size"] = r.size;
      row["irredundant"] = r.irredundant;
      if (r.witness) row["witness"] = json_witness(*r.witness, ctx);
      rows.push_back(row);
      text += pb::render_base_report(r, ctx) + "\n";
    }
    doc["bases"] = rows;
  }
  if (mode != pb::BaseEnumMode::count) {
    doc["min"] = result.min_size;
    doc["max"] = result.max_size;
  }
  switch (mode) {
    case pb::BaseEnumMode::all:
    case pb::BaseEnumMode::count:
      text += "count=" + std::to_string(result.count);
      break;
    case pb::BaseEnumMode::extremes:
      text += "extremes min=" + std::to_string(result.min_size) +
              " max=" + std::to_string(result.max_size);
      break;
  }
  text += std::string(" complete=") + (result.complete ? "true" : "false") + "\n";
  emit(opt, doc, text);
  return result.complete ? 0 : 3;
}

int cmd_minbase(const GlobalOptions& opt, const LoadedGroup& g) {
  auto ctx = g.ctx();
  auto result = pb::min_base_size(g.group, opt.limits());
  json doc;
  print_strip_note(opt, g, doc);
  doc["command"] = "minbase";
  doc["group"] = g.id;
  doc["complete"] = result.complete;
  doc["nodes"] = result.nodes;
  std::string text;
  if (result.complete) {
    doc["size"] = result.size;
    doc["witness"] = json_points(result.witness, ctx);
    text = "minbase size=" + std::to_string(result.size) +
           " witness=" + pb::render_points(result.witness, ctx) +
           " nodes=" + std::to_string(result.nodes) + " complete=true\n";
  } else {
    text = "minbase complete=false nodes=" + std::to_string(result.nodes) + "\n";
  }
  emit(opt, doc, text);
  return result.complete ? 0 : 3;
}

int cmd_pairs(const GlobalOptions& opt, const LoadedGroup& g) {
  auto action = pb::pair_action(g.group);
  json doc;
  print_strip_note(opt, g, doc);
  doc["command"] = "pairs";
  doc["group"] = g.id;
  doc["degree"] = action.group.degree();
  doc["order"] = action.group.order();
  json gens = json::array();
  for (const auto& gen : action.group.generators())
    gens.push_back(pb::permutation_to_cycles(gen));
  doc["generators"] = gens;
  json map = json::array();
  std::string text = "# pair action of " + g.id + "\n" + pb::emit_group_file(action.group);
  pb::RenderContext pair_ctx{&action.map, g.new_to_old.empty() ? nullptr : &g.new_to_old};
  for (unsigned idx = 0; idx < action.map.size(); ++idx) {
    std::string pair = pb::render_point(idx, pair_ctx);
    map.push_back(pair);
    text += "# pair " + std::to_string(idx + 1) + " = " + pair + "\n";
  }
  doc["pairs"] = map;
  emit(opt, doc, text);
  return 0;
}

int cmd_complex(const GlobalOptions& opt, const LoadedGroup& g) {
  auto ctx = g.ctx();
  auto S = pb::materialize_complex(g.group, opt.limits());
  auto L = pb::flats(S);
  auto rep = pb::is_boolean_representable(S);
  auto ep = pb::exchange_property(S);
  auto cb = pb::complex_bases(S);
  json doc;
  print_strip_note(opt, g, doc);
  doc["command"] = "complex";
  doc["group"] = g.id;
  doc["rank"] = cb.rank;
  doc["pure"] = cb.pure;
  doc["bases_count"] = cb.bases.size();
  doc["exchange_property"] = ep.holds;
  if (ep.counterexample) {
    doc["ep_counterexample"] = {{"I", json_points(ep.counterexample->first, ctx)},
                                {"J", json_points(ep.counterexample->second, ctx)}};
  }
  doc["boolean_representable"] = rep.representable;
  if (rep.certificate) {
    doc["certificate"] = json_points(*rep.certificate, ctx);
    doc["certificate_is_independent"] = rep.certificate_is_independent;
  }
  json indeps = json::array();
  for (const auto& s : S.independents()) indeps.push_back(json_points(s, ctx));
  doc["independents"] = indeps;
  json jflats = json::array();
  for (const auto& f : L.members()) jflats.push_back(json_points(f, ctx));
  doc["flats"] = jflats;

  std::string text;
  if (g.pairs) {
    pb::RenderContext pair_ctx = ctx;
    for (unsigned idx = 0; idx < g.pairs->size(); ++idx)
      text += "# pair " + std::to_string(idx + 1) + " = " + pb::render_point(idx, pair_ctx) + "\n";
  }
  text += pb::emit_complex(S);
  for (const auto& f : L.members()) {
    std::string pts;
    for (unsigned p : f.points()) pts += ' ' + std::to_string(p + 1);
    text += "flat" + pts + "\n";
  }
  text += "rank " + std::to_string(cb.rank) + "\n";
  text += std::string("pure ") + (cb.pure ? "true" : "false") + "\n";
  text += "bases_count " + std::to_string(cb.bases.size()) + "\n";
  text += std::string("exchange_property ") + (ep.holds ? "true" : "false");
  if (ep.counterexample)
    text += " I=" + pb::render_points(ep.counterexample->first, ctx) +
            " J=" + pb::render_points(ep.counterexample->second, ctx);
  text += "\n";
  text += std::string("boolean_representable ") + (rep.representable ? "true" : "false");
  if (rep.certificate)
    text += std::string(" certificate=") + pb::render_points(*rep.certificate, ctx) +
            (rep.certificate_is_independent ? " independent_but_no_transversal"
                                            : " transversal_but_dependent");
  text += "\n";
  emit(opt, doc, text);
  return 0;
}

int cmd_conjecture(const GlobalOptions& opt, const std::string& group_arg,
                   const std::string& catalog_path) {
  auto resolver = [&](const std::string& spec) { return load_base_group(spec); };
  json doc;
  doc["command"] = "conjecture";
  if (!catalog_path.empty()) {
    std::istringstream in(read_file(catalog_path));
    std::vector<std::string> specs;
    std::string line;
    while (std::getline(in, line)) {
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      auto last = line.find_last_not_of(" \t\r");
      specs.push_back(line.substr(first, last - first + 1));
    }
    auto rows = pb::catalog_run(specs, opt.limits(), resolver);
    doc["scope"] = "supplied actions only";
    json jrows = json::array();
    std::string text = "# conjecture check over supplied actions only\n";
    bool any_error = false, any_budget = false;
    for (const auto& r : rows) {
      jrows.push_back(json_conjecture_row(r));
      text += pb::render_conjecture_row(r) + "\n";
      any_error |= r.verdict == pb::ConjectureReport::Verdict::error;
      any_budget |= r.verdict == pb::ConjectureReport::Verdict::budget_exceeded;
    }
    doc["rows"] = jrows;
    emit(opt, doc, text);
    return any_error ? 2 : (any_budget ? 3 : 0);
  }
  auto report = pb::conjecture_check(load_base_group(group_arg), group_arg, opt.limits());
  doc["scope"] = "supplied action only";
  doc["report"] = json_conjecture_row(report);
  emit(opt, doc,
       "# conjecture check over supplied actions only\n" +
           pb::render_conjecture_row(report) + "\n");
  switch (report.verdict) {
    case pb::ConjectureReport::Verdict::witness_for_conjecture:
      return 0;
    case pb::ConjectureReport::Verdict::not_a_witness:
      return 1;
    case pb::ConjectureReport::Verdict::budget_exceeded:
      return 3;
    case pb::ConjectureReport::Verdict::error:
      return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOptions opt;
  CLI::App app{"closure lattices, irredundant bases and boolean representable\n"
               "complexes of finite permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--max-order", opt.max_order,
                 "materialize group elements up to this order, use a stabilizer chain above it");
  app.add_option("--budget", opt.budget, "search node budget");
  app.add_flag("--allow-fixed-points", opt.allow_fixed_points,
               "strip globally fixed points instead of rejecting the group");
  app.add_flag("--json", opt.emit_json, "emit one structured JSON document");
  app.add_flag("--pair-action", opt.pair_mode,
               "operate on the induced 2-subset action; point I/O uses pair notation");

  std::string group_arg, set_arg, seq_arg, family_arg, catalog_arg;

  auto* info = app.add_subcommand("info", "degree, order, orbits");
  info->add_option("group", group_arg)->required();

  auto* closure_cmd = app.add_subcommand("closure", "closure of a point set");
  closure_cmd->add_option("group", group_arg)->required();
  closure_cmd->add_option("--set", set_arg, "comma-separated 1-based points")->required();

  auto* lattice = app.add_subcommand("lattice", "all closed sets, as a Moore family file");
  lattice->add_option("group", group_arg)->required();

  auto* independent = app.add_subcommand("independent", "independence / irredundance check");
  independent->add_option("group", group_arg);
  independent->add_option("--set", set_arg, "test some enumeration of this set");
  independent->add_option("--sequence", seq_arg, "test this exact order");
  independent->add_option("--family", family_arg,
                          "check against a Moore family file instead of a group");

  auto* bases = app.add_subcommand("bases", "enumerate irredundant bases");
  bases->add_option("group", group_arg)->required();
  auto* ball = bases->add_flag("--all", "list every base (default)");
  auto* bcount = bases->add_flag("--count", "count only");
  auto* bext = bases->add_flag("--extremes", "minimum and maximum size only");

  auto* minbase = app.add_subcommand("minbase", "minimum base size over all subsets");
  minbase->add_option("group", group_arg)->required();

  auto* pairs = app.add_subcommand("pairs", "emit the induced pair action as a group file");
  pairs->add_option("group", group_arg)->required();

  auto* complex_cmd =
      app.add_subcommand("complex", "materialize the complex: flats, representability, purity");
  complex_cmd->add_option("group", group_arg)->required();

  auto* conjecture = app.add_subcommand(
      "conjecture", "compare minimal pair-action base size with n' = floor(n/2)");
  conjecture->add_option("group", group_arg);
  conjecture->add_option("--catalog", catalog_arg, "file with one group spec per line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(info)) return cmd_info(opt, load_group(group_arg, opt));
    if (app.got_subcommand(closure_cmd))
      return cmd_closure(opt, load_group(group_arg, opt), set_arg);
    if (app.got_subcommand(lattice)) return cmd_lattice(opt, load_group(group_arg, opt));
    if (app.got_subcommand(independent)) {
      if (!family_arg.empty()) {
        if (set_arg.empty()) throw pb::BadParameter("--family needs --set");
        return cmd_independent(opt, nullptr, set_arg, "", family_arg);
      }
      if (group_arg.empty()) throw pb::BadParameter("group or --family required");
      if (set_arg.empty() == seq_arg.empty())
        throw pb::BadParameter("exactly one of --set / --sequence required");
      LoadedGroup g = load_group(group_arg, opt);
      return cmd_independent(opt, &g, set_arg, seq_arg, "");
    }
    if (app.got_subcommand(bases)) {
      pb::BaseEnumMode mode = pb::BaseEnumMode::all;
      int chosen = (ball->count() > 0) + (bcount->count() > 0) + (bext->count() > 0);
      if (chosen > 1) throw pb::BadParameter("choose one of --all / --count / --extremes");
      if (bcount->count()) mode = pb::BaseEnumMode::count;
      if (bext->count()) mode = pb::BaseEnumMode::extremes;
      return cmd_bases(opt, load_group(group_arg, opt), mode);
    }
    if (app.got_subcommand(minbase)) return cmd_minbase(opt, load_group(group_arg, opt));
    if (app.got_subcommand(pairs)) {
      if (opt.pair_mode)
        throw pb::BadParameter("pairs already applies the pair action; drop --pair-action");
      return cmd_pairs(opt, load_group(group_arg, opt));
    }
    if (app.got_subcommand(complex_cmd))
      return cmd_complex(opt, load_group(group_arg, opt));
    if (app.got_subcommand(conjecture)) {
      if (opt.pair_mode)
        throw pb::BadParameter("conjecture already applies the pair action; drop --pair-action");
      if (group_arg.empty() == catalog_arg.empty())
        throw pb::BadParameter("give a group or --catalog");
      return cmd_conjecture(opt, group_arg, catalog_arg);
    }
  } catch (const pb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "permbase/actions.hpp"
#include "permbase/brsc.hpp"
#include "permbase/group.hpp"

namespace permbase {

// Harness comparing the minimal base size of the induced pair action with
// the bound n' = n/2 (n even) or (n-1)/2 (n odd). Only the supplied actions
// are checked; exploring every action of an abstract group would require its
// subgroup lattice and is out of scope, so every report says which action it
// is about.

struct ConjectureReport {
  enum class Verdict { witness_for_conjecture, not_a_witness, budget_exceeded, error };

  std::string group_id;
  unsigned n = 0;        // degree of the base action
  unsigned n_prime = 0;  // n/2 for even n, (n-1)/2 for odd n
  Verdict verdict = Verdict::error;
  std::optional<unsigned> min_base;
  PointSet witness;          // pair indices of a minimum base, when found
  unsigned orbit_count = 0;  // advisory: orbits of the base action
  bool transitive = false;
  std::string error;  // nonempty for per-row failures
};

inline ConjectureReport conjecture_check(const PermutationGroup& G,
                                         const std::string& group_id,
                                         const SearchLimits& limits = {}) {
  ConjectureReport report;
  report.group_id = group_id;
  report.n = G.degree();
  report.n_prime = report.n % 2 == 0 ? report.n / 2 : (report.n - 1) / 2;
  report.orbit_count = static_cast<unsigned>(orbit_partition(G).size());
  report.transitive = report.orbit_count == 1;
  PairAction action = pair_action(G);
  MinBaseResult min = min_base_size(action.group, limits);
  if (!min.complete) {
    report.verdict = ConjectureReport::Verdict::budget_exceeded;
    return report;
  }
  report.min_base = min.size;
  report.witness = min.witness;
  report.verdict = min.size > report.n_prime
                       ? ConjectureReport::Verdict::witness_for_conjecture
                       : ConjectureReport::Verdict::not_a_witness;
  return report;
}

using GroupResolver = std::function<PermutationGroup(const std::string&)>;

// Resolves builtin specs (sym:n, alt:n, cyc:n, dih:n) only.
inline PermutationGroup resolve_builtin_spec(const std::string& spec) {
  auto parsed = parse_group_spec(spec);
  if (!parsed) throw BadParameter("unknown group spec: " + spec);
  return builtin_group(parsed->first, parsed->second);
}

// One report per spec, in input order. A failing row records its error and
// the run continues.
inline std::vector<ConjectureReport> catalog_run(
    const std::vector<std::string>& specs, const SearchLimits& limits = {},
    const GroupResolver& resolver = resolve_builtin_spec) {
  std::vector<ConjectureReport> reports;
  for (const auto& spec : specs) {
    try {
      reports.push_back(conjecture_check(resolver(spec), spec, limits));
    } catch (const Error& e) {
      ConjectureReport row;
      row.group_id = spec;
      row.verdict = ConjectureReport::Verdict::error;
      row.error = e.what();
      reports.push_back(std::move(row));
    }
  }
  return reports;
}

}  // namespace permbase

#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "report.hpp"
#include "revgenus/error.hpp"
#include "revgenus/oracle.hpp"
#include "revgenus/solver.hpp"

namespace revgenus::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  bool verbose = false;
  int max_oracle_n = kDefaultMaxOracleN;
  std::string perm;
  int n = -1;
  int samples = 10000;
  std::uint64_t seed = 1;
};

int cmd_distance(const Options& o, std::ostream& out) {
  const SignedPermutation b = parse(o.perm);
  const DistanceResult d = distance(b);
  if (o.json) {
    out << json{{"permutation", b.to_string()}, {"d", d.d}, {"g", d.g}, {"h", d.h}, {"penalty", d.penalty}}.dump()
        << '\n';
  } else if (o.verbose) {
    out << "d=" << d.d << " g=" << d.g << " h=" << d.h << " penalty=" << d.penalty << '\n';
  } else {
    out << "d=" << d.d << '\n';
  }
  return kExitOk;
}

int cmd_sort(const Options& o, std::ostream& out) {
  const SignedPermutation b = parse(o.perm);
  const SortingTrace t = sort_by_reversals(b);
  std::vector<Reversal> rs;
  for (const SortStep& s : t.steps) rs.push_back(s.reversal);
  const SignedPermutation end = apply_reversals(b, rs);
  const bool ok = end.is_identity();
  if (o.json) {
    json steps = json::array();
    for (const SortStep& s : t.steps)
      steps.push_back({{"i", s.reversal.i},
                       {"j", s.reversal.j},
                       {"kind", to_string(s.kind)},
                       {"g", s.genus_after},
                       {"h", s.hurdles_after}});
    out << json{{"permutation", b.to_string()}, {"steps", steps}, {"final", end.to_string()}, {"identity", ok}}.dump()
        << '\n';
  } else {
    SignedPermutation cur = b;
    for (const SortStep& s : t.steps) {
      cur = apply_reversal(cur, s.reversal);
      out << to_string(s.reversal) << " kind=" << to_string(s.kind) << " g=" << s.genus_after
          << " h=" << s.hurdles_after;
      if (o.verbose) out << ' ' << cur.to_string();
      out << '\n';
    }
    out << "final=" << end.to_string() << " identity=" << (ok ? "yes" : "no") << " steps=" << t.steps.size()
        << '\n';
  }
  return ok ? kExitOk : kExitInvariant;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const SignedPermutation b = parse(o.perm);
  const AnalysisReport r = make_report(b);
  if (o.json) {
    json j = r;
    if (o.verbose) j["pimap"] = dump(to_pimap(b));
    out << j.dump() << '\n';
  } else {
    out << to_text(r);
    if (o.verbose) out << dump(to_pimap(b));
  }
  return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const SignedPermutation b = parse(o.perm);
  const int d = oracle_distance(b, o.max_oracle_n);
  if (o.json)
    out << json{{"permutation", b.to_string()}, {"oracle_distance", d}}.dump() << '\n';
  else
    out << "d=" << d << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const DistanceTable table = bfs_table(o.n, o.max_oracle_n);
  std::vector<std::uint64_t> ranks;
  if (o.n <= 5) {
    ranks.resize(table.size());
    for (std::uint64_t r = 0; r < table.size(); ++r) ranks[r] = r;
  } else {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, table.size() - 1);
    for (int k = 0; k < o.samples; ++k) ranks.push_back(pick(rng));
  }

  std::vector<std::string> failures;
  for (std::uint64_t r : ranks) {
    const SignedPermutation b = unrank(o.n, r);
    const int want = table.at_rank(r);
    try {
      const DistanceResult d = distance(b);
      const SortingTrace t = sort_by_reversals(b);
      std::vector<Reversal> rs;
      for (const SortStep& s : t.steps) rs.push_back(s.reversal);
      const bool sorted = apply_reversals(b, rs).is_identity();
      if (d.d != want || static_cast<int>(rs.size()) != want || !sorted)
        failures.push_back(b.to_string() + " d=" + std::to_string(d.d) + " oracle=" + std::to_string(want) +
                           " trace=" + std::to_string(rs.size()) + (sorted ? "" : " unsorted"));
    } catch (const Error& e) {
      failures.push_back(b.to_string() + " error: " + e.what());
    }
  }
  const std::size_t total = ranks.size();
  const std::size_t passed = total - failures.size();
  if (o.json) {
    out << json{{"n", o.n}, {"checked", total}, {"passed", passed}, {"failures", failures}}.dump() << '\n';
  } else {
    out << "pass " << passed << '/' << total << '\n';
    if (!failures.empty()) {
      out << "fail " << failures.size() << '/' << total << '\n';
      const std::size_t shown = o.verbose ? failures.size() : std::min<std::size_t>(failures.size(), 10);
      for (std::size_t k = 0; k < shown; ++k) out << "  " << failures[k] << '\n';
    }
  }
  return failures.empty() ? kExitOk : kExitInvariant;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reversal distance and sorting of signed permutations via pi-maps", "revgenus"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Print machine-readable JSON");
  app.add_flag("--verbose", o.verbose, "Print more detail");
  app.add_option("--max-oracle-n", o.max_oracle_n, "Largest n the BFS oracle may build (at most 8)")
      ->check(CLI::Range(0, kHardMaxOracleN));

  auto* distance_cmd = app.add_subcommand("distance", "Reversal distance from genus and hurdles");
  auto* sort_cmd = app.add_subcommand("sort", "An optimal sequence of reversals");
  auto* analyze_cmd = app.add_subcommand("analyze", "Genus, components and hurdles of the pi-map");
  auto* oracle_cmd = app.add_subcommand("oracle", "Reversal distance by breadth-first search");
  for (auto* c : {distance_cmd, sort_cmd, analyze_cmd, oracle_cmd})
    c->add_option("perm", o.perm, "Signed permutation, e.g. \"-2,-1,3\"")->required();
  auto* verify_cmd = app.add_subcommand("verify", "Compare the formula and sorter with the oracle");
  verify_cmd->add_option("--n", o.n, "Permutation size")->required()->check(CLI::Range(0, kHardMaxOracleN));
  verify_cmd->add_option("--samples", o.samples, "Random samples when n > 5")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", o.seed, "Sampling seed");

  // CLI11 wants the arguments last-first.
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitBadInput;
  }

  try {
    if (*distance_cmd) return cmd_distance(o, out);
    if (*sort_cmd) return cmd_sort(o, out);
    if (*analyze_cmd) return cmd_analyze(o, out);
    if (*oracle_cmd) return cmd_oracle(o, out);
    return cmd_verify(o, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.code() == Errc::InternalInvariant ? kExitInvariant : kExitBadInput;
  }
}

}  // namespace revgenus::cli

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bmres/ideal_io.hpp"
#include "bmres/io_json.hpp"
#include "bmres/lcm_lattice.hpp"
#include "bmres/matching.hpp"
#include "bmres/morse.hpp"
#include "bmres/search.hpp"
#include "bmres/taylor.hpp"
#include "bmres/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNonMinimal = 2;

struct CommonOpts {
  std::string inline_text;
  std::string input_path;
  std::string artinian;
  std::string strategy = "hybrid";
  std::uint64_t seed = 0;
  bool json = false;
  bool best_effort = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_search_opts) {
  auto* inl = cmd->add_option("--inline", opts.inline_text,
                              "Ideal as inline text, e.g. \"xy; yz; xz\"");
  auto* inp = cmd->add_option("--input", opts.input_path,
                              "Path to an ideal file (one monomial per line)");
  inl->excludes(inp);
  cmd->add_option("--artinian", opts.artinian,
                  "Artinian reduction exponents, e.g. \"2,2,3\"");
  cmd->add_flag("--json", opts.json, "Emit JSON instead of text");
  if (with_search_opts) {
    cmd->add_option("--strategy", opts.strategy,
                    "Ordering search strategy: proof-guided|exhaustive|hybrid")
        ->check(CLI::IsMember({"proof-guided", "exhaustive", "hybrid"}));
    cmd->add_option("--seed", opts.seed, "Random seed for the search");
    cmd->add_flag("--best-effort", opts.best_effort,
                  "Do not fail on ideals outside the guaranteed range");
  }
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(std::stoi(cell));
  return out;
}

/// Parses the ideal as given, without the Artinian reduction.
bmres::MonomialIdeal load_raw_ideal(const CommonOpts& opts) {
  if (opts.inline_text.empty() && opts.input_path.empty())
    throw std::runtime_error("one of --inline or --input is required");
  return !opts.inline_text.empty()
             ? bmres::parse_ideal_inline(opts.inline_text)
             : bmres::parse_ideal_file(opts.input_path);
}

/// Parses the ideal and applies the optional Artinian reduction.
bmres::MonomialIdeal load_ideal(const CommonOpts& opts) {
  bmres::MonomialIdeal ideal = load_raw_ideal(opts);
  if (!opts.artinian.empty())
    ideal = bmres::artinian_reduction(ideal, parse_int_list(opts.artinian));
  return ideal;
}

bmres::SearchConfig search_config(const CommonOpts& opts) {
  bmres::SearchConfig cfg;
  if (opts.strategy == "proof-guided") cfg.strategy = bmres::Strategy::ProofGuided;
  else if (opts.strategy == "exhaustive") cfg.strategy = bmres::Strategy::Exhaustive;
  else cfg.strategy = bmres::Strategy::Hybrid;
  cfg.seed = opts.seed;
  cfg.best_effort = opts.best_effort;
  return cfg;
}

void print_betti(const bmres::BettiTable& t) {
  for (const auto& [key, count] : t.entries)
    std::printf("b_{%d, %s} = %d\n", key.first, key.second.pretty().c_str(),
                count);
  std::printf("total:");
  for (int x : t.totals()) std::printf(" %d", x);
  std::printf("\n");
}

int cmd_betti(const CommonOpts& opts) {
  auto ideal = load_ideal(opts);
  bmres::LcmLattice lattice(ideal);
  auto betti = bmres::betti_oracle(ideal, lattice);
  if (opts.json)
    std::cout << bmres::betti_to_json(betti).dump(2) << "\n";
  else
    print_betti(betti);
  return kExitOk;
}

int cmd_taylor(const CommonOpts& opts) {
  auto ideal = load_ideal(opts);
  auto complex = bmres::build_taylor(ideal);
  if (opts.json) {
    std::cout << bmres::complex_to_json(complex).dump(2) << "\n";
    return kExitOk;
  }
  std::printf("Taylor complex ranks:");
  for (int r : complex.ranks()) std::printf(" %d", r);
  std::printf("\n");
  return kExitOk;
}

int cmd_matching(const CommonOpts& opts) {
  auto ideal = load_ideal(opts);
  bmres::LcmLattice lattice(ideal);
  auto outcome = bmres::search_family(ideal, lattice, search_config(opts));
  auto matching = bmres::generalized_bm(ideal, lattice, outcome.family);
  if (opts.json) {
    std::cout << bmres::matching_to_json(ideal, matching).dump(2) << "\n";
    return kExitOk;
  }
  auto set_str = [&](bmres::GenSet s) {
    std::string out = "{";
    for (int i = 0; i < ideal.num_gens(); ++i)
      if (s >> i & 1u) {
        if (out.size() > 1) out += ", ";
        out += ideal.gen(i).pretty();
      }
    return out + "}";
  };
  std::printf("matching with %zu edges (certified=%s):\n",
              matching.edges.size(), outcome.certified ? "true" : "false");
  for (const auto& e : matching.edges)
    std::printf("  %s -> %s  (lcm %s)\n", set_str(e.source).c_str(),
                set_str(e.target).c_str(),
                ideal.lcm_of(e.source).pretty().c_str());
  return kExitOk;
}

int finish_resolution(const CommonOpts& opts, const bmres::MonomialIdeal& ideal,
                      const bmres::ResolutionReport& res, bool minimal) {
  if (!res.ok) {
    for (const auto& f : res.failures) std::fprintf(stderr, "error: %s\n", f.c_str());
    return kExitError;
  }
  return minimal ? kExitOk : kExitNonMinimal;
}

int cmd_resolve(const CommonOpts& opts) {
  auto ideal = load_raw_ideal(opts);
  std::optional<std::vector<int>> n;
  if (!opts.artinian.empty()) n = parse_int_list(opts.artinian);
  auto report = bmres::main_theorem_pipeline(ideal, n, search_config(opts));
  if (opts.json) {
    std::cout << bmres::pipeline_report_to_json(report).dump(2) << "\n";
  } else {
    std::printf("certified: %s\n", report.search.certified ? "true" : "false");
    std::printf("resolution: %s\n", report.resolution.ok ? "ok" : "FAILED");
    std::printf("minimal: %s\n",
                report.certificate.minimal ? "true" : "false");
    std::printf("ranks:");
    for (int r : report.morse.complex.ranks()) std::printf(" %d", r);
    std::printf("\n");
    print_betti(report.certificate.oracle);
  }
  return finish_resolution(opts, report.ideal, report.resolution,
                           report.certificate.minimal);
}

int cmd_verify(const CommonOpts& opts, const std::string& complex_path) {
  auto ideal = load_ideal(opts);
  bmres::json doc;
  if (complex_path.empty() || complex_path == "-") {
    doc = bmres::json::parse(std::cin);
  } else {
    std::ifstream in(complex_path);
    if (!in) throw std::runtime_error("cannot open " + complex_path);
    doc = bmres::json::parse(in);
  }
  if (doc.contains("complex")) doc = doc.at("complex");
  auto complex = bmres::complex_from_json(doc);
  bmres::LcmLattice lattice(ideal);
  auto res = bmres::check_resolution(ideal, lattice, complex);
  bool minimal = bmres::is_minimal(complex);
  bool betti_ok = false;
  if (res.ok)
    betti_ok = bmres::betti_of_complex(ideal, complex) ==
               bmres::betti_oracle(ideal, lattice);
  if (opts.json) {
    bmres::json out{{"resolution_ok", res.ok},
                    {"failures", res.failures},
                    {"minimal", minimal},
                    {"betti_matches", betti_ok}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::printf("resolution: %s\n", res.ok ? "ok" : "FAILED");
    for (const auto& f : res.failures) std::printf("  %s\n", f.c_str());
    std::printf("minimal: %s\n", minimal ? "true" : "false");
    if (res.ok)
      std::printf("betti matches: %s\n", betti_ok ? "true" : "false");
  }
  return finish_resolution(opts, ideal, res, minimal);
}

int cmd_search(const CommonOpts& opts) {
  auto ideal = load_ideal(opts);
  bmres::LcmLattice lattice(ideal);
  auto outcome = bmres::search_family(ideal, lattice, search_config(opts));
  if (opts.json) {
    bmres::json points = bmres::json::array();
    for (const auto& log : outcome.per_point_log)
      points.push_back({{"point", lattice.point(log.point).csv()},
                        {"orderings_tried", log.orderings_tried},
                        {"bad_paths", log.bad_paths_last},
                        {"certified", log.certified},
                        {"ordering",
                         outcome.family.at(log.point).descending()}});
    bmres::json out{{"certified", outcome.certified}, {"points", points}};
    std::cout << out.dump(2) << "\n";
    return outcome.certified ? kExitOk : kExitNonMinimal;
  }
  std::printf("certified: %s\n", outcome.certified ? "true" : "false");
  for (const auto& log : outcome.per_point_log) {
    std::printf("point %s: tried %d, bad paths %zu, certified %s, ordering",
                lattice.point(log.point).pretty().c_str(),
                log.orderings_tried, log.bad_paths_last,
                log.certified ? "true" : "false");
    for (int m : outcome.family.at(log.point).descending())
      std::printf(" %s", ideal.gen(m).pretty().c_str());
    std::printf("\n");
  }
  return outcome.certified ? kExitOk : kExitNonMinimal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Morse resolutions of monomial ideals"};
  app.require_subcommand(1);

  CommonOpts betti_o, taylor_o, matching_o, resolve_o, verify_o, search_o;
  std::string complex_path;

  auto* betti = app.add_subcommand("betti", "Multigraded Betti numbers");
  add_common(betti, betti_o, false);
  auto* taylor = app.add_subcommand("taylor", "Taylor resolution");
  add_common(taylor, taylor_o, false);
  auto* matching = app.add_subcommand("matching", "Acyclic matching");
  add_common(matching, matching_o, true);
  auto* resolve = app.add_subcommand("resolve", "Construct a Morse resolution");
  add_common(resolve, resolve_o, true);
  auto* verify = app.add_subcommand("verify", "Verify a resolution from JSON");
  add_common(verify, verify_o, false);
  verify->add_option("--complex", complex_path,
                     "Complex JSON (or '-' for stdin; default stdin)");
  auto* search =
      app.add_subcommand("search-orderings", "Per-point ordering search");
  add_common(search, search_o, true);

  try {
    app.parse(argc, argv);
    if (betti->parsed()) return cmd_betti(betti_o);
    if (taylor->parsed()) return cmd_taylor(taylor_o);
    if (matching->parsed()) return cmd_matching(matching_o);
    if (resolve->parsed()) return cmd_resolve(resolve_o);
    if (verify->parsed()) return cmd_verify(verify_o, complex_path);
    if (search->parsed()) return cmd_search(search_o);
    return kExitError;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitError;
  }
}

// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit on
// any failure.  All checks use exact integer arithmetic; there are no
// numeric tolerances to tune.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "bmres/ideal_io.hpp"
#include "bmres/lcm_lattice.hpp"
#include "bmres/matching.hpp"
#include "bmres/morse.hpp"
#include "bmres/search.hpp"
#include "bmres/taylor.hpp"
#include "bmres/verify.hpp"
#include "common.hpp"

using namespace bmres;

namespace {

constexpr int kSuiteSize = 500;
constexpr int kLemmaSize = 200;

int failures = 0;

void report(const char* name, bool ok, const char* detail = "") {
  std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name,
              *detail ? ": " : "", detail);
  if (!ok) ++failures;
}

TotalOrdering random_ordering(int q, std::mt19937& rng) {
  std::vector<int> desc(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) desc[static_cast<std::size_t>(i)] = i;
  std::shuffle(desc.begin(), desc.end(), rng);
  return TotalOrdering::from_descending(desc);
}

struct SuiteInstance {
  bmres_test::RandomInstance inst;
  PipelineReport report;
};

// ---- Criterion 1: the constructive main-theorem pipeline ----------------
std::vector<SuiteInstance> run_main_suite() {
  std::mt19937 rng(20240817);
  std::vector<SuiteInstance> suite;
  suite.reserve(kSuiteSize);
  auto start = std::chrono::steady_clock::now();
  bool certified = true, resolution = true, minimal = true, ranks = true;
  for (int t = 0; t < kSuiteSize; ++t) {
    auto inst = bmres_test::random_instance(rng);
    auto rep = main_theorem_pipeline(inst.j, inst.artinian, {});
    certified &= rep.search.certified;
    resolution &= rep.resolution.ok;
    minimal &= rep.certificate.minimal;
    LcmLattice lat(rep.ideal);
    auto oracle = betti_oracle(rep.ideal, lat);
    // degreewise and multidegreewise rank agreement
    ranks &= betti_of_complex(rep.ideal, rep.morse.complex) == oracle;
    ranks &= rep.morse.complex.ranks() == oracle.totals();
    suite.push_back({std::move(inst), std::move(rep)});
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  char detail[128];
  std::snprintf(detail, sizeof detail, "%d instances in %lld ms", kSuiteSize,
                static_cast<long long>(elapsed));
  report("main-theorem suite certified+minimal+rank-exact",
         certified && resolution && minimal && ranks, detail);
  report("main-theorem suite under five minutes", elapsed < 5 * 60 * 1000,
         detail);
  return suite;
}

// ---- Criterion 2: Taylor baseline ---------------------------------------
void run_taylor_baseline(const std::vector<SuiteInstance>& suite) {
  bool ok = true;
  for (const auto& s : suite) {
    const auto& ideal = s.report.ideal;
    auto taylor = build_taylor(ideal);
    LcmLattice lat(ideal);
    ok &= d_squared_is_zero(taylor);
    ok &= check_resolution(ideal, lat, taylor).ok;
  }
  report("taylor baseline d^2=0 and resolution on every instance", ok);
}

// ---- Criterion 3: worked fixtures ---------------------------------------
void run_fixtures() {
  bool ok = true;
  {
    auto ideal = parse_ideal_inline("xy; yz; xz");
    auto rep = main_theorem_pipeline(ideal, std::nullopt, {});
    ok &= rep.morse.matching.edges.size() == 1;
    ok &= rep.morse.complex.ranks() == std::vector<int>{1, 3, 2};
    ok &= rep.certificate.minimal;
  }
  {
    auto j = parse_ideal_inline("xy");
    auto rep = main_theorem_pipeline(j, std::vector<int>{2, 2}, {});
    ok &= rep.morse.complex.ranks() == std::vector<int>{1, 3, 2};
    ok &= rep.certificate.minimal;
  }
  {
    auto ideal = parse_ideal_inline("x; y");
    auto rep = main_theorem_pipeline(ideal, std::nullopt, {});
    ok &= rep.morse.complex.ranks() == std::vector<int>{1, 2, 1};
    ok &= rep.certificate.minimal;
  }
  report("worked fixtures (cycle, artinian xy, koszul)", ok);
}

// ---- Criterion 4: lemma property suites ---------------------------------
void run_lemma_suites() {
  std::mt19937 rng(424242);
  bool loc_ok = true, lcm_ok = true, two_ways_ok = true, losing_ok = true;
  int losing_hits = 0;
  for (int t = 0; t < kLemmaSize; ++t) {
    auto j = bmres_test::random_ideal(rng);
    std::uniform_int_distribution<int> nd(1, 3);
    std::vector<int> n(static_cast<std::size_t>(j.num_vars()));
    for (int& x : n) x = nd(rng);
    auto ideal = artinian_reduction(j, n);
    LcmLattice lat(ideal);
    auto ord = random_ordering(ideal.num_gens(), rng);
    int least = ord.descending().back();
    for (int p = 0; p < lat.num_points(); ++p) {
      const auto& fib = lat.fiber(p);
      GenSet pure_at_p = lat.pure_divisors(p) & ideal.pure_power_mask();
      GenSet pure_meet = fib.empty() ? 0 : fib.front();
      for (GenSet s : fib) {
        // (a) no pure power is a bridge; pure powers below p are never gaps
        for (int m : bridges(ideal, s))
          if (ideal.pure_power_mask() >> m & 1u) loc_ok = false;
        for (int m : gaps(ideal, s))
          if (pure_at_p >> m & 1u) loc_ok = false;
        pure_meet &= s;
      }
      // (b) all fiber members share their pure-power part
      for (GenSet s : fib)
        if ((s & ideal.pure_power_mask()) !=
            (pure_meet & ideal.pure_power_mask()))
          lcm_ok = false;
      auto a = AcyclicMatching::from_edges(barile_macchia(ideal, fib, ord));
      for (GenSet s : fib) {
        // (c) critical-two-ways disjunction
        if (a.is_critical(s)) {
          auto cls = classify(ideal, s, ord, fib);
          bool bridgeless_neither = !cls.type1 && !cls.potentially_type2 &&
                                    bridges(ideal, s).empty();
          bool pt2_not_t2 = cls.potentially_type2 && !cls.type2;
          if (!(bridgeless_neither || pt2_not_t2)) two_ways_ok = false;
        }
        // (d) losing the end: least generator inside s, dividing the rest
        if (s >> least & 1u) {
          GenSet rest = s & ~(GenSet{1} << least);
          if (rest && ideal.gen(least).divides(ideal.lcm_of(rest))) {
            ++losing_hits;
            if (a.is_critical(s)) losing_ok = false;
          }
        }
      }
    }
  }
  report("lemma: bridge/gap localization to the j-part", loc_ok);
  report("lemma: fibers share their pure-power intersection", lcm_ok);
  report("lemma: critical-two-ways disjunction", two_ways_ok);
  report("lemma: losing-the-end implies matched",
         losing_ok && losing_hits > 0);

  // (e) |M_p| <= 3: no ordering of M_p admits a bad path of type p
  bool small_ok = true;
  int small_points = 0;
  std::mt19937 rng2(515151);
  for (int t = 0; t < kLemmaSize; ++t) {
    auto j = bmres_test::random_ideal(rng2, 4, 3);
    std::uniform_int_distribution<int> nd(1, 3);
    std::vector<int> n(static_cast<std::size_t>(j.num_vars()));
    for (int& x : n) x = nd(rng2);
    auto ideal = artinian_reduction(j, n);
    LcmLattice lat(ideal);
    for (int p = 0; p < lat.num_points(); ++p) {
      GenSet mp = lat.j_divisors(p);
      if (popcount(mp) > 3) continue;
      ++small_points;
      std::vector<int> head;
      for (int i = 0; i < ideal.num_gens(); ++i)
        if (mp >> i & 1u) head.push_back(i);
      std::sort(head.begin(), head.end());
      do {
        std::vector<int> desc = head;
        for (int i = 0; i < ideal.num_gens(); ++i)
          if (!(mp >> i & 1u)) desc.push_back(i);
        auto ord = TotalOrdering::from_descending(desc);
        auto a = AcyclicMatching::from_edges(
            barile_macchia(ideal, lat.fiber(p), ord));
        if (!find_bad_paths(ideal, a, lat.point(p)).empty()) small_ok = false;
      } while (std::next_permutation(head.begin(), head.end()));
    }
  }
  report("lemma: |M_p| <= 3 admits no bad path for any ordering",
         small_ok && small_points > 0);
}

// ---- Criterion 5: Algorithm-1 output equals the type-2 characterization -
void run_equivalence(const std::vector<SuiteInstance>& suite) {
  std::mt19937 rng(737373);
  bool ok = true;
  for (const auto& s : suite) {
    const auto& ideal = s.report.ideal;
    LcmLattice lat(ideal);
    for (int round = 0; round < 2; ++round) {
      for (int p = 0; p < lat.num_points(); ++p) {
        const auto& fib = lat.fiber(p);
        // round 0 uses the searched family, round 1 a random ordering
        TotalOrdering ord = round == 0
                                ? s.report.search.family.at(p)
                                : random_ordering(ideal.num_gens(), rng);
        auto edges = barile_macchia(ideal, fib, ord);
        std::vector<MatchEdge> expected;
        for (GenSet sigma : fib)
          if (classify(ideal, sigma, ord, fib).type2) {
            auto sb = sbridge(ideal, sigma, ord);
            if (!sb) {
              ok = false;
              continue;
            }
            expected.push_back({sigma, sigma & ~(GenSet{1} << *sb)});
          }
        auto key = [](const MatchEdge& a, const MatchEdge& b) {
          return a.source < b.source;
        };
        std::sort(edges.begin(), edges.end(), key);
        std::sort(expected.begin(), expected.end(), key);
        if (edges != expected) ok = false;
      }
    }
  }
  report("algorithm output equals type-2 characterization on every fiber",
         ok);
}

// ---- Criterion 6: existence-lemma contrapositive ------------------------
void run_contrapositive(const std::vector<SuiteInstance>& suite) {
  std::mt19937 rng(868686);
  bool ok = true;
  int nonminimal_seen = 0;
  for (const auto& s : suite) {
    const auto& ideal = s.report.ideal;
    LcmLattice lat(ideal);
    // the pipeline matching plus one random-ordering matching each
    std::vector<AcyclicMatching> matchings{s.report.morse.matching};
    OrderingFamily fam;
    fam.per_point.assign(static_cast<std::size_t>(lat.num_points()),
                         random_ordering(ideal.num_gens(), rng));
    matchings.push_back(generalized_bm(ideal, lat, fam));
    for (const auto& a : matchings) {
      bool empty = true;
      for (int p = 0; p < lat.num_points(); ++p)
        if (!find_bad_paths(ideal, a, lat.point(p)).empty()) empty = false;
      bool minimal = is_minimal(build_morse(ideal, a).complex);
      if (empty != minimal) ok = false;
      if (!minimal) ++nonminimal_seen;
    }
  }
  // frozen non-minimal instance exercises the other side of the iff
  {
    auto ideal = minimalize({Monomial({3, 1, 2, 3}), Monomial({2, 2, 3, 0}),
                             Monomial({3, 0, 3, 0}), Monomial({0, 2, 3, 3})});
    LcmLattice lat(ideal);
    OrderingFamily fam;
    fam.per_point.assign(static_cast<std::size_t>(lat.num_points()),
                         TotalOrdering::from_descending({1, 2, 3, 0}));
    auto a = generalized_bm(ideal, lat, fam);
    bool empty = true;
    for (int p = 0; p < lat.num_points(); ++p)
      if (!find_bad_paths(ideal, a, lat.point(p)).empty()) empty = false;
    bool minimal = is_minimal(build_morse(ideal, a).complex);
    if (empty != minimal) ok = false;
    if (minimal || empty) ok = false;  // must land on the non-minimal side
    if (!minimal) ++nonminimal_seen;
  }
  char detail[96];
  std::snprintf(detail, sizeof detail, "%d non-minimal matchings exercised",
                nonminimal_seen);
  report("no-bad-paths iff minimal on every instance",
         ok && nonminimal_seen > 0, detail);
}

// ---- Criterion 7: characteristic spot-check -----------------------------
void run_characteristic(const std::vector<SuiteInstance>& suite) {
  bool ok = true;
  for (const auto& s : suite) {
    const auto& ideal = s.report.ideal;
    LcmLattice lat(ideal);
    auto q = betti_oracle(ideal, lat, Field::Rationals);
    ok &= q == betti_oracle(ideal, lat, Field::F2);
    ok &= q == betti_oracle(ideal, lat, Field::F3);
  }
  report("oracle ranks agree over Q, F_2 and F_3", ok);
}

}  // namespace

int main() {
  auto suite = run_main_suite();
  run_taylor_baseline(suite);
  run_fixtures();
  run_lemma_suites();
  run_equivalence(suite);
  run_contrapositive(suite);
  run_characteristic(suite);
  std::printf("%s (%d failing criteria)\n",
              failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
              failures);
  return failures == 0 ? 0 : 1;
}

#include <doctest.h>

#include "grundy/closed.hpp"
#include "grundy/errors.hpp"
#include "grundy/oracle.hpp"
#include "support/brute.hpp"
#include "support/crowding.hpp"

using namespace grundy;

namespace {

const FootprintCertificate& certificate(const VerifyResult& r) {
  REQUIRE(std::holds_alternative<FootprintCertificate>(r));
  return std::get<FootprintCertificate>(r);
}

bool includes(const VertexSet& big, const VertexSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

GammaProfile random_profile(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(1, 5);
  std::vector<int> v;
  for (int i = 0; i < n; ++i) v.push_back(pick(rng));
  return GammaProfile(v);
}

int generic(const Graph& main, const GammaProfile& profile) {
  return xjoin_gamma_generic(main, profile, oracle_per_I(main)).gamma;
}

// Lifts the solver's skeleton with edgeless parts of the profile's sizes and
// checks the product sequence.
void check_lift(const Graph& main, const GammaProfile& profile, const XJoinSolveResult& r) {
  std::vector<Graph> parts;
  for (Vertex v = 1; v <= main.order(); ++v) parts.push_back(edgeless_graph(profile[v]));
  const auto inst = xjoin(main, parts);
  std::map<Vertex, VertexSequence> seqs;
  for (Vertex v : r.argmax_I.members()) seqs[v] = interval_sequence(1, profile[v], profile[v], false);
  const auto lifted = lift_sequence(inst, r.main_sequence, r.argmax_I.members(), seqs);
  CHECK(static_cast<int>(lifted.size()) == r.gamma);
  CHECK(is_legal_dominating(inst.product(), lifted));
}

}  // namespace

TEST_CASE("gamma_structured") {
  CHECK(gamma_structured({StructuredKind::cycle_power, 10, 2}) == 6);
  CHECK(gamma_structured({StructuredKind::path_power, 7, 2}) == 5);
  CHECK(gamma_structured({StructuredKind::co_path, 6, 1}) == 3);
  CHECK(gamma_structured({StructuredKind::co_path, 4, 1}) == 3);
  CHECK(gamma_structured({StructuredKind::co_cycle, 5, 1}) == 3);
  CHECK(gamma_structured({StructuredKind::cycle_power, 5, 2}) == 1);
  CHECK(gamma_structured({StructuredKind::path_power, 3, 2}) == 1);
  CHECK(gamma_structured({StructuredKind::edgeless, 4, 1}) == 4);
  CHECK(gamma_structured({StructuredKind::complete, 4, 1}) == 1);
  CHECK_THROWS_AS(gamma_structured({StructuredKind::co_cycle, 4, 1}), UnsupportedError);
  CHECK_THROWS_AS(gamma_structured({StructuredKind::co_path, 3, 1}), UnsupportedError);

  for (int n = 4; n <= 11; ++n) {
    CHECK(gamma_structured({StructuredKind::co_path, n, 1}) ==
          gamma_gr_exact(make_structured({StructuredKind::co_path, n, 1})).gamma);
    if (n >= 5) {
      CHECK(gamma_structured({StructuredKind::co_cycle, n, 1}) ==
            gamma_gr_exact(make_structured({StructuredKind::co_cycle, n, 1})).gamma);
    }
  }
}

TEST_CASE("interval_sequence") {
  CHECK(interval_sequence(3, 5, 10, false) == VertexSequence{3, 4, 5});
  CHECK(interval_sequence(9, 2, 10, true) == VertexSequence{9, 10, 1, 2});
  CHECK(interval_sequence(4, 4, 10, false) == VertexSequence{4});
  CHECK(interval_sequence(3, 5, 10, false).reversed() == VertexSequence{5, 4, 3});
  CHECK_THROWS_AS(interval_sequence(5, 3, 10, false), InputError);
  CHECK_THROWS_AS(interval_sequence(0, 3, 10, false), InputError);
  CHECK_THROWS_AS(interval_sequence(1, 11, 10, true), InputError);
}

TEST_CASE("build_S_C examples") {
  CHECK(build_S_C(10, 2, IndependentSetRecord({1, 4, 8})) == VertexSequence{1, 4, 5, 8});
  CHECK(build_S_C(6, 1, IndependentSetRecord({1, 3, 5})).size() == 3);
  const auto single = build_S_C(6, 2, IndependentSetRecord({1}));
  CHECK(single.size() == 2);
  CHECK(single.contains(1));
  CHECK(single.contains(4));
  CHECK_THROWS_AS(build_S_C(6, 1, IndependentSetRecord({1, 2})), InputError);
  CHECK_THROWS_AS(build_S_C(5, 2, IndependentSetRecord({1})), InputError);
}

TEST_CASE("build_S_C is legal for every independent set") {
  for (int n = 4; n <= 12; ++n) {
    for (int m = 1; 2 * (m + 1) <= n; ++m) {
      const Graph g = cycle_power(n, m);
      for (const auto& i : independent_sets(g, 1)) {
        const auto s = build_S_C(n, m, IndependentSetRecord(i));
        const auto verdict = verify_sequence(g, s);
        const auto& c = certificate(verdict);
        CHECK(includes(c.self_set, i));
        const int expected = i.size() == 1 ? n - 2 * m : n - static_cast<int>(i.size()) * m;
        CHECK(static_cast<int>(s.size()) == expected);
      }
    }
  }
}

TEST_CASE("build_S_P examples") {
  CHECK(build_S_P(7, 2, IndependentSetRecord({1, 7})) == VertexSequence{1, 2, 3, 4, 7});
  CHECK(build_S_P(7, 2, IndependentSetRecord({3, 6})) == VertexSequence{3, 6});
  CHECK(build_S_P(5, 1, IndependentSetRecord({1, 3, 5})) == VertexSequence{1, 3, 5});
  CHECK_THROWS_AS(build_S_P(7, 2, IndependentSetRecord({4, 7})), FamilyError);
  CHECK_THROWS_AS(build_S_P(7, 2, IndependentSetRecord({1, 3})), InputError);
  CHECK(in_path_family(5, 1, IndependentSetRecord({2, 4})));
  CHECK_FALSE(in_path_family(5, 1, IndependentSetRecord({3, 5})));
}

TEST_CASE("build_S_P is legal across the path family") {
  for (int n = 3; n <= 12; ++n) {
    for (int m = 1; m + 2 <= n; ++m) {
      const Graph g = path_power(n, m);
      for (const auto& i : independent_sets(g, 1)) {
        const IndependentSetRecord rec(i);
        if (!in_path_family(n, m, rec)) continue;
        const auto s = build_S_P(n, m, rec);
        const auto verdict = verify_sequence(g, s);
        const auto& c = certificate(verdict);
        CHECK(includes(c.self_set, i));
        CHECK(static_cast<int>(s.size()) ==
              rec.max_elem() - rec.min_elem() + 1 - (rec.size() - 1) * m);
      }
    }
  }
}

TEST_CASE("per-I values match the oracle") {
  CHECK(gamma_given_I_cycle_power(10, 2, IndependentSetRecord({1, 4, 8})) == 4);
  CHECK(gamma_given_I_cycle_power(6, 1, IndependentSetRecord({2})) == 4);
  CHECK(gamma_given_I_cycle_power(8, 1, IndependentSetRecord({1, 5})) == 6);
  CHECK(gamma_gr_given_I(cycle_power(8, 1), {1, 5})->gamma == 6);

  CHECK(gamma_given_I_path_power(7, 2, IndependentSetRecord({1, 7})) == 5);
  CHECK(gamma_given_I_path_power(7, 2, IndependentSetRecord({3, 6})) == 2);
  CHECK(gamma_gr_given_I(path_power(7, 2), {3, 6})->gamma == 2);
  CHECK(gamma_given_I_path_power(5, 1, IndependentSetRecord({2, 4})) == 2);
  CHECK(gamma_gr_given_I(path_power(5, 1), {2, 4})->gamma == 2);
  CHECK_THROWS_AS(gamma_given_I_path_power(5, 1, IndependentSetRecord({3, 5})), FamilyError);

  for (int n = 4; n <= 11; ++n) {
    for (int m = 1; m <= 3; ++m) {
      if (2 * (m + 1) <= n) {
        const Graph g = cycle_power(n, m);
        for (const auto& i : independent_sets(g, 1)) {
          const auto want = gamma_gr_given_I(g, i);
          REQUIRE(want.has_value());
          CHECK(gamma_given_I_cycle_power(n, m, IndependentSetRecord(i)) == want->gamma);
        }
      }
      if (m + 2 <= n) {
        const Graph g = path_power(n, m);
        for (const auto& i : independent_sets(g, 1)) {
          const IndependentSetRecord rec(i);
          const auto want = gamma_gr_given_I(g, i);
          if (in_path_family(n, m, rec)) {
            REQUIRE(want.has_value());
            CHECK(gamma_given_I_path_power(n, m, rec) == want->gamma);
          } else if (want) {
            // some member of the family does at least as well
            bool dominated = false;
            for (const auto& j : independent_sets(g, 1)) {
              const IndependentSetRecord r2(j);
              if (in_path_family(n, m, r2) && gamma_given_I_path_power(n, m, r2) >= want->gamma) dominated = true;
            }
            CHECK(dominated);
          }
        }
      }
    }
  }
}

TEST_CASE("cycle-power X-join examples") {
  auto r = solve_xjoin_cycle_power(6, 1, GammaProfile::constant(6, 3));
  CHECK(r.gamma == 9);

  r = solve_xjoin_cycle_power(8, 2, GammaProfile({5, 1, 1, 1, 5, 1, 1, 1}));
  CHECK(r.gamma == 12);
  CHECK(r.argmax_I.members() == VertexSet{1, 5});
  CHECK(r.diagnostics.weights == WeightVector{2, -2, -2, -2, 2, -2, -2, -2});
  CHECK(generic(cycle_power(8, 2), GammaProfile({5, 1, 1, 1, 5, 1, 1, 1})) == 12);

  r = solve_xjoin_cycle_power(6, 2, GammaProfile::constant(6, 1));
  CHECK(r.gamma == 2);
  CHECK(r.diagnostics.mwis_value == 0);
  CHECK(r.argmax_I.size() == 2);

  r = solve_xjoin_cycle_power(5, 2, GammaProfile({1, 4, 2, 4, 1}));
  CHECK(r.gamma == 4);
  CHECK(r.argmax_I.members() == VertexSet{2});

  CHECK_THROWS_AS(solve_xjoin_cycle_power(6, 1, GammaProfile::constant(5, 1)), InputError);
}

TEST_CASE("path-power X-join examples") {
  auto r = solve_xjoin_path_power(5, 1, GammaProfile::constant(5, 2));
  CHECK(r.gamma == 6);
  r = solve_xjoin_path_power(5, 1, GammaProfile::constant(5, 1));
  CHECK(r.gamma == 4);

  r = solve_xjoin_path_power(4, 2, GammaProfile({2, 3, 1, 2}));
  CHECK(r.gamma == 4);
  CHECK(r.diagnostics.weights == WeightVector{1, 3, 1, 3});
  CHECK(r.diagnostics.mwis_value == 4);
  CHECK(generic(path_power(4, 2), GammaProfile({2, 3, 1, 2})) == 4);

  r = solve_xjoin_path_power(3, 2, GammaProfile({1, 3, 2}));
  CHECK(r.gamma == 3);
  CHECK_THROWS_AS(solve_xjoin_path_power(4, 1, GammaProfile::constant(3, 1)), InputError);
}

TEST_CASE("X-join solvers agree with the generic evaluator") {
  std::mt19937 rng(71);
  for (int n = 3; n <= 8; ++n) {
    for (int m = 1; m <= 3; ++m) {
      const Graph c = cycle_power(n, m);
      const Graph p = path_power(n, m);
      for (int t = 0; t < 6; ++t) {
        const auto profile = random_profile(n, rng);
        const auto rc = solve_xjoin_cycle_power(n, m, profile);
        CHECK(rc.gamma == generic(c, profile));
        check_lift(c, profile, rc);
        const auto rp = solve_xjoin_path_power(n, m, profile);
        CHECK(rp.gamma == generic(p, profile));
        check_lift(p, profile, rp);
        if (m + 2 <= n && n <= 2 * m + 2) CHECK(rp.diagnostics.mwis_value == rp.gamma);
      }
    }
  }
}

TEST_CASE("lexicographic closed forms") {
  CHECK(lex_gamma(PowerKind::cycle, 6, 1, 3) == 9);
  CHECK(lex_gamma(PowerKind::path, 4, 1, 3) == 7);
  CHECK(lex_gamma(PowerKind::cycle, 10, 2, 1) == 6);
  CHECK_THROWS_AS(lex_gamma(PowerKind::cycle, 5, 2, 1), InputError);
  CHECK_THROWS_AS(lex_gamma(PowerKind::path, 3, 2, 1), InputError);
  CHECK_THROWS_AS(lex_gamma(PowerKind::path, 5, 1, 0), InputError);

  for (int n = 3; n <= 14; ++n) {
    for (int m = 1; m <= 4; ++m) {
      for (int h = 1; h <= 6; ++h) {
        if (2 * (m + 1) <= n) {
          CHECK(lex_gamma(PowerKind::cycle, n, m, h) == solve_xjoin_cycle_power(n, m, GammaProfile::constant(n, h)).gamma);
        }
        if (m + 2 <= n) {
          CHECK(lex_gamma(PowerKind::path, n, m, h) == solve_xjoin_path_power(n, m, GammaProfile::constant(n, h)).gamma);
        }
      }
      if (2 * (m + 1) <= n) CHECK(lex_gamma(PowerKind::cycle, n, m, 1) == n - 2 * m);
      if (m + 2 <= n) CHECK(lex_gamma(PowerKind::path, n, m, 1) == n - m);
    }
  }
}

TEST_CASE("legal sequences never crowd consecutive self-footprinters") {
  brute::CrowdingTally tally;
  for (int n = 3; n <= 7; ++n) {
    for (int m = 1; m <= 2; ++m) {
      for (bool circular : {false, true}) {
        const Graph g = circular ? cycle_power(n, m) : path_power(n, m);
        for (const auto& ls : brute::all_legal_sequences(g)) brute::check_crowding(n, m, circular, ls.seq, ls.self_set, tally);
      }
    }
  }
  CHECK(tally.windows > 0);
  CHECK(tally.violations == 0);
}

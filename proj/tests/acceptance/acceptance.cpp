// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "relk/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>

using namespace relk;

namespace {

using ExtList = std::vector<std::shared_ptr<const ModExtension>>;

struct Outcome {
  std::vector<CheckResult> checks;
  std::vector<std::string> problems;

  void add(CheckResult r) { checks.push_back(std::move(r)); }
  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit;
  std::function<void(Outcome&)> body;
};

constexpr std::size_t kN = 12;
constexpr std::uint64_t kSeed = 20240601;

ExtList finite() { return catalog().finite_extensions(); }

void ac1(Outcome& o) {
  o.add(check_ghost_homomorphism(kN, 200, kSeed));
  o.add(check_frobenius_verschiebung(kN, 10, kSeed + 1));
}

void ac2(Outcome& o) { o.add(check_projection_formula(kN, 100, kSeed + 2)); }

void ac3(Outcome& o) {
  for (auto& r : check_almkvist(kN, 100, kSeed + 3)) o.add(std::move(r));
}

void ac4(Outcome& o) {
  const auto exts = finite();
  o.require(exts.size() >= 6, "fewer than 6 finite catalog extensions");
  for (const auto& e : exts) o.add(check_pic_sequence(*e));
}

void ac5(Outcome& o) {
  for (const auto& e : finite())
    for (std::size_t d : {4, 5}) o.add(check_module_axioms(*e, d, 4));
}

void ac6(Outcome& o) {
  for (const auto& e : finite())
    for (std::size_t d = 1; d <= 4; ++d) o.add(check_continuity(*e, d));
}

void ac7(Outcome& o) {
  std::size_t char_p = 0;
  for (const auto& e : finite())
    if (detail::char_p_power(*e)) {
      ++char_p;
      for (std::size_t d = 1; d <= 4; ++d) o.add(check_p_group(*e, d));
    }
  o.require(char_p > 0, "no characteristic p catalog entries");
  const auto qs = catalog().rational_extensions();
  o.require(!qs.empty(), "no rational catalog entries");
  for (const auto& q : qs)
    for (std::size_t d : {3, 6}) o.add(check_rational_npic(*q, d, 20, kSeed + d));
}

void ac8(Outcome& o) {
  std::set<std::string> covered;
  for (const auto& name : catalog().doc.cover_order) {
    const Cover& c = catalog().doc.covers.at(name).cover;
    for (const auto& e : catalog().extensions_over(c)) {
      covered.insert(name);
      for (auto f : {CechFunctor::NU, CechFunctor::NPic})
        for (std::size_t d = 2; d <= 4; ++d) o.add(check_cech(*e, name, c, f, d));
    }
  }
  o.require(covered.size() >= 3, "fewer than 3 covers exercised");
  o.require(covered.count("z12-4-9") && covered.count("z6-2-3"), "Z/12 {4,9} or Z/6 {2,3} missing");
  const Cover& c = catalog().doc.covers.at("z12-4-9").cover;
  o.add(check_cech_negative_control(*catalog().finite("z12"), c, CechFunctor::NU, 2));
  o.add(check_cech_negative_control(*catalog().finite("z6-dual"), catalog().doc.covers.at("z6-2-3").cover,
                                    CechFunctor::NPic, 2));
}

void ac9(Outcome& o) {
  const auto exts = finite();
  const auto r = check_reduce_det(exts, 200, kSeed + 4);
  o.require(r.cases == 200, "reduce = det ran " + std::to_string(r.cases) + " triples");
  o.add(r);
  o.add(check_whitney(exts, 50, kSeed + 5));
  o.add(check_lambda_rank(exts, 40, kSeed + 6));
}

void ac10(Outcome& o) {
  o.require(catalog().excision.size() >= 2, "fewer than 2 excision configurations");
  for (const auto& c : catalog().excision) o.add(check_excision(c));
}

void ac11(Outcome& o) {
  o.add(check_subintegral(*catalog().finite("dual-f2"), true, 50, kSeed + 7));
  o.add(check_subintegral(*catalog().finite("dual-f3"), true, 50, kSeed + 8));
  o.add(check_subintegral(*catalog().finite("f2-f4"), false, 50, kSeed + 9));
}

void ac12(Outcome& o) {
  std::set<std::size_t> ranks;
  for (const char* n : {"dual-f2", "split-f2", "split3-f2"}) {
    o.add(check_negk(*catalog().finite(n)));
    const NegKTable t = neg_k_table(*catalog().finite(n));
    o.require(t.groups.at(-1) == AbGroup::free(t.components - 1), std::string("K_-1 rank wrong for ") + n);
    ranks.insert(t.components);
  }
  o.require(ranks == std::set<std::size_t>{1, 2, 3}, "r in {1, 2, 3} not all reached");
  o.add(check_anodal(*catalog().finite("split-f2"), false, "1_1"));
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Witt ring laws: ghost homomorphism, F_n V_n, V_n additive, F_n multiplicative (N=12)", 10, ac1},
      {2, "projection formula V_n(a) * b = V_n(a * F_n b) over Q, Z/4, F_5 (N=12)", 10, ac2},
      {3, "Almkvist: det(1 - t(M + M')) is the Witt sum, det(1 - t(M x M')) the Witt product", 20, ac3},
      {4, "units-Pic sequence exact on the finite catalog", 5, ac4},
      {5, "W(A)-module axioms on NPic at D = 4 and 5, basics with m <= 4", 60, ac5},
      {6, "continuity bound finite and stable on NPic_D, D <= 4", 60, ac6},
      {7, "NPic is a p-group in characteristic p, a Q-vector space over Q", 10, ac7},
      {8, "Cech complexes of NU and NPic exact at D = 2, 3, 4; corrupted differential detected", 30, ac8},
      {9, "reduce = det on 200 triples, Whitney sum on 50 pairs, lambda^i = 0 above rank", 30, ac9},
      {10, "excision K0(f) = K0(f mod I) on shared-ideal configurations", 5, ac10},
      {11, "K0(f) = Pic(f) for F_p in F_p[e], declined for F_2 in F_4", 5, ac11},
      {12, "K_-1(f) = Z^(r-1) for r = 1, 2, 3; anodal witness (1, 0) in F_2 x F_2", 5, ac12},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const Error& ex) {
      o.problems.push_back(std::string("error: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::size_t cases = 0;
    for (const auto& r : o.checks) {
      cases += r.cases;
      if (r.skipped) o.problems.push_back("skipped " + r.name + ": " + r.detail);
      else if (!r.pass) o.problems.push_back("failed " + r.name + ": " + r.detail);
    }
    if (secs > c.limit) o.problems.push_back("over the time limit");
    const bool pass = o.problems.empty();
    if (!pass) ++failed;
    std::printf("%s [AC%d] %s (%zu checks, %zu cases, %.2f s / %.0f s)\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                o.checks.size(), cases, secs, c.limit);
    for (const auto& p : o.problems) std::printf("       %s\n", p.c_str());
    std::fflush(stdout);
  }
  std::printf("%s: %zu/%zu criteria\n", failed ? "FAILED" : "ACCEPTED", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}

// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "grids.hpp"
#include "rscrit/rscrit.hpp"

using namespace rscrit;
using rscrit::testing::PairCase;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(const std::string& what) {
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

std::string describe(const PairCase& c) {
  std::ostringstream os;
  auto put = [&](const Weight& w) {
    for (const auto& b : w.coords) {
      os << '(';
      for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
      os << ')';
    }
  };
  os << "mu=";
  put(c.mu);
  os << " mu'=";
  put(c.mup);
  return os.str();
}

const std::vector<PairCase>& grid1() {
  static const auto g = rscrit::testing::combLemmaGrid();
  return g;
}

const std::vector<PairCase>& random200() {
  static const auto g = rscrit::testing::randomEvenEvenPairs(200, 0x5eed2024ULL);
  return g;
}

Outcome criterion1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::size_t n = 0, brute = 0, allTrue = 0;
  for (const auto& c : grid1()) {
    auto rep = combLemma(c.mu, c.mup);
    ++n;
    if (!rep.consistent)
      o.fail("cond mismatch " + std::to_string(rep.cond1) + std::to_string(rep.cond2) + std::to_string(rep.cond3) +
             " at " + describe(c));
    if (rep.cond1) ++allTrue;
    if (c.mu.n + c.mup.n <= 5) {
      ++brute;
      auto found = bruteDominantMakers(c.mu, c.mup);
      const Int half = static_cast<Int>(c.mu.n) * c.mup.n / 2;
      bool bruteBalanced = true;
      for (const auto& f : found) bruteBalanced = bruteBalanced && f.size() == 1 && permLength(f[0]) == half;
      if (bruteBalanced != rep.cond1) o.fail("cond1 disagrees with brute force at " + describe(c));
      auto rb = rscrit::bruteBalanced(c.mu, c.mup);
      if (!rb.agreed) o.fail("bruteBalanced disagreement at " + describe(c));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 60.0) o.fail("runtime " + std::to_string(secs) + " s exceeds 60 s");
  if (n == 0) o.fail("empty grid");
  std::ostringstream os;
  os << n << " pairs, " << allTrue << " with all conditions true, " << brute << " brute-checked, "
     << static_cast<int>(secs * 1000) << " ms";
  o.detail = os.str();
  return o;
}

LengthRegime bruteRegime(const std::vector<Perm>& found, Int half) {
  if (found.empty()) return LengthRegime::Collision;
  Int l = permLength(found[0]);
  if (l == half) return LengthRegime::Balanced;
  return l < half ? LengthRegime::Shorter : LengthRegime::Longer;
}

Outcome criterion2() {
  Outcome o;
  const auto grid = rscrit::testing::regimeGrid();
  std::map<std::string, std::size_t> tally;
  std::size_t checks = 0;
  for (const auto& c : grid) {
    auto q = regimeQuantities(c.mu, c.mup);
    auto predicted = predictRegimes(q);
    auto found = bruteDominantMakers(c.mu, c.mup);
    const Int half = static_cast<Int>(c.mu.n) * c.mup.n / 2;
    for (std::size_t t = 0; t < found.size(); ++t) {
      ++checks;
      if (found[t].size() > 1) o.fail("non-unique dominant-making element at " + describe(c));
      auto actual = bruteRegime(found[t], half);
      ++tally[regimeName(actual)];
      if (actual != predicted[t])
        o.fail(std::string("predicted ") + regimeName(predicted[t]) + " got " + regimeName(actual) + " at " +
               describe(c));
    }
    // 2 p~ equals the per-embedding width contribution, and min over tau is the width
    Int minP = q.pTildeDoubled[0];
    for (Int p : q.pTildeDoubled) minP = std::min(minP, p);
    if (minP != cuspidalWidth(c.mu, c.mup)) o.fail("2 p~ does not match width at " + describe(c));
    for (Int p : q.pTildeDoubled)
      if (((q.aTildeDoubled - p) % 2) != 0) o.fail("a~ - p~ not integral at " + describe(c));
  }
  if (grid.size() < 500) o.fail("grid has fewer than 500 pairs");
  std::ostringstream os;
  os << grid.size() << " pairs, " << checks << " embedding checks (";
  bool first = true;
  for (const auto& [k, v] : tally) {
    os << (first ? "" : ", ") << k << " " << v;
    first = false;
  }
  os << ")";
  o.detail = os.str();
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t total = 0;
  for (int N = 2; N <= 8; ++N)
    for (int n = 1; n < N; ++n) {
      const int nPrime = N - n;
      const Int full = static_cast<Int>(n) * nPrime;
      std::set<Perm> assocImages, dualImages;
      for (const auto& p : kostantReps(N, n)) {
        ++total;
        KostantElement w{N, {n, nPrime}, {p}};
        auto a = toAssociate(w);
        auto d = toDual(w);
        const Int l = permLength(p);
        if (l + permLength(a.perms[0]) != full) o.fail("associate length at " + permToString(p));
        if (l + permLength(d.perms[0]) != full) o.fail("dual length at " + permToString(p));
        if (!isKostant(a.perms[0], {nPrime, n})) o.fail("associate not in W^Q at " + permToString(p));
        if (!isKostant(d.perms[0], {n, nPrime})) o.fail("dual not in W^P at " + permToString(p));
        if (toAssociate(a).perms[0] != p) o.fail("associate does not invert at " + permToString(p));
        if (toDual(d).perms[0] != p) o.fail("dual is not an involution at " + permToString(p));
        assocImages.insert(a.perms[0]);
        dualImages.insert(d.perms[0]);
      }
      const auto target = kostantReps(N, nPrime);
      if (assocImages != std::set<Perm>(target.begin(), target.end()))
        o.fail("associate map is not onto W^Q for N=" + std::to_string(N) + " n=" + std::to_string(n));
      if (dualImages.size() != kostantReps(N, n).size()) o.fail("dual map is not injective");
    }
  o.detail = std::to_string(total) + " Kostant representatives over all (n,n') with N <= 8";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t cases = 0;
  for (int N = 2; N <= 8; ++N)
    for (int n = 1; n < N; ++n) {
      ++cases;
      auto reps = kostantReps(N, n);
      Int binom = 1;
      for (int i = 0; i < n; ++i) binom = binom * (N - i) / (i + 1);
      if (static_cast<Int>(reps.size()) != binom) o.fail("count at N=" + std::to_string(N));
      if (lengthGeneratingFunction(reps) != gaussianBinomial(N, n))
        o.fail("generating function at N=" + std::to_string(N) + " n=" + std::to_string(n));
      if (reps != bruteKostant(N, n)) o.fail("enumeration differs from S_N filter at N=" + std::to_string(N));
      Int maxLen = 0;
      for (const auto& p : reps) maxLen = std::max(maxLen, permLength(p));
      if (maxLen != static_cast<Int>(n) * (N - n)) o.fail("longest length at N=" + std::to_string(N));
    }
  o.detail = std::to_string(cases) + " (N, n) cases, N <= 8";
  return o;
}

template <typename F>
void overCriticalGrids(F&& f) {
  for (const auto& c : grid1()) f(c);
  for (const auto& c : random200()) f(c);
}

Outcome criterion5() {
  Outcome o;
  std::size_t n = 0;
  overCriticalGrids([&](const PairCase& c) {
    ++n;
    auto crit = criticalSetAutomorphic(c.mu, c.mup);
    if (static_cast<Int>(crit.doubledPoints.size()) != cuspidalWidth(c.mu, c.mup))
      o.fail("cardinality differs from width at " + describe(c));
    auto rep = checkCriticalAutomorphic(c.mu, c.mup);
    if (!rep.agreed) o.fail("Gamma scan disagrees at " + describe(c));
  });
  o.detail = std::to_string(n) + " pairs (" + std::to_string(grid1().size()) + " grid + " +
             std::to_string(random200().size()) + " random even x even)";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t n = 0;
  overCriticalGrids([&](const PairCase& c) {
    ++n;
    auto aut = criticalSetAutomorphic(c.mu, c.mup);
    auto h = hodgeTensor(c.mu, c.mup);
    auto mot = criticalSetMotivic(h);
    if (shiftCriticalSet(aut, sShiftDoubled(c.mu, c.mup)) != mot)
      o.fail("shifted automorphic set differs from motivic at " + describe(c));
    if (motivicGammaScan(h, -2 * (h.purityWeight + 8), 2 * (h.purityWeight + 8)) != mot.doubledPoints)
      o.fail("motivic Gamma scan disagrees at " + describe(c));
  });
  o.detail = std::to_string(n) + " pairs";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::ostringstream out, err;
  int code = cli::run({"rscrit", "hilbert", "--k", "12", "--m", "0"}, out, err);
  if (code != 0) {
    o.fail("hilbert exited with " + std::to_string(code));
  } else {
    auto j = nlohmann::json::parse(out.str());
    const auto& res = j["results"];
    if (res["cuspidalParameter"] != nlohmann::json::array({11})) o.fail("cuspidal parameter");
    if (res["hodge"]["pairs"] != nlohmann::json::parse("[[[11,0],[0,11]]]")) o.fail("Hodge set");
    std::vector<std::string> expect;
    for (int m = 1; m <= 11; ++m) expect.push_back(std::to_string(m));
    if (res["critical"]["points"] != nlohmann::json(expect)) o.fail("critical set");
  }

  // GL2 x GL1: some twist makes all three conditions hold exactly when min k >= 3.
  std::size_t cases = 0;
  for (Int kmin = 2; kmin <= 10; ++kmin)
    for (const IntVec& k : {IntVec{kmin}, IntVec{kmin, kmin + 2}, IntVec{kmin + 4, kmin}}) {
      ++cases;
      Weight mup = makeWeight(1, static_cast<int>(k.size()), std::vector<IntVec>(k.size(), IntVec{0}));
      bool any = false;
      for (Int m = -30; m <= 30; ++m) {
        Weight mu = hilbertWeight(k, m);
        auto rep = combLemma(mu, mup);
        if (!rep.consistent) o.fail("inconsistent conditions for kmin=" + std::to_string(kmin));
        any = any || rep.cond2;
      }
      if (any != (kmin >= 3)) o.fail("threshold fails at kmin=" + std::to_string(kmin));
    }
  o.detail = "hilbert --k 12 --m 0 checked; threshold k0 >= 3 over " + std::to_string(cases) + " weight vectors";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto grid = rscrit::testing::oddOddGrid();
  std::size_t sets = 0, literalAgree = 0, twoPoint = 0, collisions = 0, empties = 0;
  for (const auto& c : grid) {
    auto rep = oddOddChecks(c.mu, c.mup);
    const int N = c.mu.n + c.mup.n;
    if (rep.ellPlus > 10) continue;
    for (int e = 0; e < 2; ++e) {
      ++sets;
      auto check = checkOddOdd(c.mu, c.mup, e);
      if (!check.agreed) o.fail("display vs Gamma scan at eps0=" + std::to_string(e) + " " + describe(c));
      if (rep.displayWithEllPlus[e] == rep.criticalEps0[e]) ++literalAgree;
      if (rep.twoPointPredicted[e] != rep.twoPointActual[e])
        o.fail("two-point criterion at eps0=" + std::to_string(e) + " " + describe(c));
      if (rep.twoPointActual[e]) ++twoPoint;
    }
    if (rep.ellPlus == 0) {
      ++empties;
      if (!rep.criticalEps0[0].doubledPoints.empty() || !rep.criticalEps0[1].doubledPoints.empty())
        o.fail("ell+ = 0 but critical set non-empty at " + describe(c));
    }
    if (rep.gapDoubled == -N) {
      ++collisions;
      auto b = findBalanced(c.mu, c.mup);
      if (b.status != BalancedStatus::Collision) o.fail("no collision reported at " + describe(c));
      if (!rep.collisionPositions || rep.collisionPositions->first != 2 || rep.collisionPositions->second != 5)
        o.fail("collision not at positions 2 and 5 at " + describe(c));
      for (const auto& f : bruteDominantMakers(c.mu, c.mup))
        if (!f.empty()) o.fail("S_6 has a dominant-making element at " + describe(c));
    }
  }
  std::ostringstream os;
  os << sets << " (pair, eps0) sets match the Gamma scan; " << twoPoint << " two-point hits; " << collisions
     << " collision cases with empty S_6 search; " << empties << " pairs with ell+ = 0; literal ell+ display agrees in "
     << literalAgree << "/" << sets;
  o.detail = os.str();
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::size_t ids = 0, aql = 0, wuv = 0;
  for (int n = 1; n <= 8; ++n)
    for (int np = 1; np <= 8; ++np) {
      if ((n * np) % 2 != 0) continue;
      for (int r = 1; r <= 3; ++r) {
        ++ids;
        auto rep = degreeIdentities(n, np, r);
        if (!rep.bottomHolds || !rep.topHolds)
          o.fail("identity fails at n=" + std::to_string(n) + " n'=" + std::to_string(np) + " r=" + std::to_string(r));
      }
    }
  for (int N = 1; N <= 12; ++N)
    for (int v = 1; v <= N; ++v) {
      if (N % v != 0) continue;
      const int u = N / v;
      ++aql;
      auto a = aqlLowestDegree(u, v);
      const Int bN = degreeProfile(N, 1).b;
      if (v == 1 && a.degree != bN) o.fail("v = 1 degree differs from b_N at N=" + std::to_string(N));
      if (v > 1 && !(a.degree < bN)) o.fail("degree not below b_N at u=" + std::to_string(u) + " v=" + std::to_string(v));
      ++wuv;
      auto w = wUV(u, v);
      if (w.formulaIntegral && w.length != w.formulaLength)
        o.fail("w_uv length at u=" + std::to_string(u) + " v=" + std::to_string(v));
      if (!isKostant(w.w.perms[0], w.w.blocks)) o.fail("w_uv not Kostant at u=" + std::to_string(u));
    }
  o.detail = std::to_string(ids) + " identity cases, " + std::to_string(aql) + " divisor pairs, " +
             std::to_string(wuv) + " w_uv lengths";
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::size_t n = 0;
  overCriticalGrids([&](const PairCase& c) {
    auto crit = criticalSetAutomorphic(c.mu, c.mup);
    const int N = c.mu.n + c.mup.n;
    if (!crit.contains(-N) || !crit.contains(2 - N)) return;
    ++n;
    auto a = archimedeanRatio(c.mu, c.mup);
    auto s = gammaRatioSymbolic(c.mu, c.mup);
    if (a.value != s.value || a.exponent != s.exponent) o.fail("ratio mismatch at " + describe(c));
    if (a.exponent != static_cast<Int>(c.mu.r) * c.mu.n * c.mup.n / 2) o.fail("exponent at " + describe(c));
  });
  if (n == 0) o.fail("no critical instances");
  o.detail = std::to_string(n) + " critical instances";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"comb-lemma three-way equivalence", criterion1},
      {"length trichotomy and collisions", criterion2},
      {"length complements", criterion3},
      {"Kostant counts and generating function", criterion4},
      {"critical set cardinality and Gamma scan", criterion5},
      {"motivic and automorphic shift", criterion6},
      {"Hilbert example and k0 threshold", criterion7},
      {"odd x odd critical sets and collision", criterion8},
      {"degree numerology", criterion9},
      {"archimedean ratio", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("CRITERION %zu %s: %s -- %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
    if (!o.pass) ++failed;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}

#include "rscrit/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "rscrit/error.hpp"

namespace rscrit {

std::string permToString(const Perm& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ']';
  return os.str();
}

std::string pointsToString(const IntVec& doubled) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < doubled.size(); ++i) os << (i ? "," : "") << doubledToString(doubled[i]);
  os << '}';
  return os.str();
}

std::vector<Perm> bruteKostant(int N, int n) {
  if (N > 10) raise(ErrorCode::TooLarge, "brute force limited to N <= 10");
  if (N < 2 || n < 1 || n >= N) raise(ErrorCode::InvalidArgument, "need 1 <= n < N");
  std::vector<Perm> out;
  Perm p = identityPerm(N);
  const std::vector<int> blocks{n, N - n};
  do {
    if (isKostant(p, blocks)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

IntVec gaussianBinomial(int N, int n) {
  if (n < 0 || n > N) return {};
  // row[k] holds [m choose k]_q as a coefficient list
  std::vector<std::vector<IntVec>> rows(N + 1);
  for (int m = 0; m <= N; ++m) {
    rows[m].assign(m + 1, IntVec{});
    rows[m][0] = {1};
    rows[m][m] = {1};
    for (int k = 1; k < m; ++k) {
      // [m,k] = [m-1,k-1] + q^k [m-1,k]
      const IntVec& a = rows[m - 1][k - 1];
      const IntVec& b = rows[m - 1][k];
      IntVec c(std::max(a.size(), b.size() + k), 0);
      for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
      for (std::size_t i = 0; i < b.size(); ++i) c[i + k] += b[i];
      rows[m][k] = std::move(c);
    }
  }
  return rows[N][n];
}

std::vector<std::vector<Perm>> bruteDominantMakers(const Weight& mu, const Weight& muPrime) {
  requireSameR(mu, muPrime);
  const int N = mu.n + muPrime.n;
  if (N > 9) raise(ErrorCode::TooLarge, "brute force limited to N <= 9");
  const Weight x = tensorWeight(mu, muPrime);
  const IntVec rho = rhoDoubled(N);
  std::vector<std::vector<Perm>> out;
  for (int t = 0; t < mu.r; ++t) {
    IntVec shifted(N);
    for (int i = 0; i < N; ++i) shifted[i] = 2 * x.coords[t][i] + rho[i];
    std::vector<Perm> found;
    Perm u = identityPerm(N);  // u plays the role of w^{-1}
    do {
      IntVec y = applyPerm(u, shifted);
      bool dominant = true;
      for (int i = 0; i + 1 < N && dominant; ++i) dominant = y[i] > y[i + 1];
      if (dominant) found.push_back(permInverse(u));
    } while (std::next_permutation(u.begin(), u.end()));
    std::sort(found.begin(), found.end());
    out.push_back(std::move(found));
  }
  return out;
}

OracleReport bruteBalanced(const Weight& mu, const Weight& muPrime) {
  OracleReport rep{"bruteBalanced", true, {}};
  auto fail = [&](const std::string& k, const std::string& v) {
    rep.agreed = false;
    rep.counterexample.emplace_back(k, v);
  };
  const auto brute = bruteDominantMakers(mu, muPrime);
  std::optional<BalancedSearchResult> fb;
  try {
    fb = findBalanced(mu, muPrime);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::OddDimension) throw;
  }
  const std::vector<int> blocks{mu.n, muPrime.n};
  for (int t = 0; t < mu.r; ++t) {
    const auto& found = brute[t];
    const std::string tag = "tau=" + std::to_string(t);
    for (const auto& w : found)
      if (!isKostant(w, blocks)) fail(tag, "dominant-making element " + permToString(w) + " is not Kostant");
    if (!fb) {
      if (found.size() != 1) fail(tag, "expected a unique dominant-making element, found " + std::to_string(found.size()));
      continue;
    }
    if (fb->collisions[t]) {
      if (!found.empty()) fail(tag, "collision reported but brute force found " + std::to_string(found.size()));
      continue;
    }
    if (found.size() != 1) {
      fail(tag, "expected a unique dominant-making element, found " + std::to_string(found.size()));
      continue;
    }
    if (permLength(found[0]) != fb->lengths[t])
      fail(tag, "length " + std::to_string(permLength(found[0])) + " vs " + std::to_string(fb->lengths[t]));
    if (fb->element && fb->element->perms[t] != found[0])
      fail(tag, "element " + permToString(found[0]) + " vs " + permToString(fb->element->perms[t]));
  }
  return rep;
}

IntVec gammaPoleScan(const Weight& mu, const Weight& muPrime, Int loDoubled, Int hiDoubled,
                     std::optional<int> eps0) {
  const int parity = (mu.n + muPrime.n) % 2;
  const auto factors = gammaFactors(mu, muPrime, eps0);
  const Int gap = degreeGapDoubled(mu, muPrime);
  IntVec out;
  for (Int m = loDoubled; m <= hiDoubled; ++m) {
    if (((m % 2) + 2) % 2 != parity) continue;
    bool regular = true;
    for (const auto& f : factors) {
      if (isGammaPole(f.kind, m - gap + f.k) || isGammaPole(f.kind, 2 - m + gap + f.k)) {
        regular = false;
        break;
      }
    }
    if (regular) out.push_back(m);
  }
  return out;
}

IntVec motivicGammaScan(const HodgeSet& h, Int loDoubled, Int hiDoubled) {
  if (hasMiddleType(h)) raise(ErrorCode::MiddleHodgeType, "Hodge set has a middle type p = q");
  IntVec out;
  for (Int m = loDoubled; m <= hiDoubled; ++m) {
    if (m % 2 != 0) continue;
    bool regular = true;
    for (const auto& v : h.pairs)
      for (const auto& [p, q] : v) {
        if (p >= q) continue;
        // Gamma_C(s - p) and Gamma_C(1 - s + q)
        if (isGammaPole(GammaKind::C, m - 2 * p) || isGammaPole(GammaKind::C, 2 - m + 2 * q)) regular = false;
      }
    if (regular) out.push_back(m);
  }
  return out;
}

namespace {

// Gamma(X/2) = coeff * Gamma(1) or coeff * Gamma(1/2), X > 0.
Rational gammaCoefficient(Int X) {
  Rational q = 1;
  for (Int y = (X % 2 == 0) ? 2 : 1; y < X; y += 2) q *= Rational(y, 2);
  return q;
}

struct GammaProduct {
  Rational coeff = 1;
  Rational twoPiExponent = 0;
  Int halfBase = 0;  // power of Gamma(1/2)
};

// Gamma_C(x) = 2 (2 pi)^{-x} Gamma(x)
void multiplyGammaC(GammaProduct& g, Int argDoubled) {
  if (argDoubled <= 0) raise(ErrorCode::NotCritical, "Gamma factor evaluated at a pole");
  g.coeff *= 2 * gammaCoefficient(argDoubled);
  g.twoPiExponent -= Rational(argDoubled, 2);
  if (argDoubled % 2 != 0) ++g.halfBase;
}

Int windowRadius(const Weight& mu, const Weight& muPrime) {
  Int big = 0;
  for (const auto& b : mu.coords)
    for (Int x : b) big = std::max(big, std::abs(x));
  for (const auto& b : muPrime.coords)
    for (Int x : b) big = std::max(big, std::abs(x));
  return 4 * (big + mu.n + muPrime.n + 4);
}

}  // namespace

SymbolicRatio gammaRatioSymbolic(const Weight& mu, const Weight& muPrime) {
  const int N = mu.n + muPrime.n;
  if ((static_cast<Int>(mu.n) * muPrime.n) % 2 != 0)
    raise(ErrorCode::OddDimension, "n*n' is odd; the ratio is not a rational multiple of a power of pi");
  if (!isRegularAt(mu, muPrime, -N) || !isRegularAt(mu, muPrime, 2 - N))
    raise(ErrorCode::NotCritical, "-N/2 and 1-N/2 are not both regular points");
  GammaProduct top, bottom;
  for (const auto& a : gammaInventory(mu, muPrime, -N)) {
    if (a.side != GammaSide::Left) continue;
    if (a.kind != GammaKind::C) raise(ErrorCode::NotCritical, "unexpected Gamma_R factor");
    multiplyGammaC(top, a.argDoubled);
  }
  for (const auto& a : gammaInventory(mu, muPrime, 2 - N)) {
    if (a.side != GammaSide::Left) continue;
    multiplyGammaC(bottom, a.argDoubled);
  }
  if (top.halfBase != bottom.halfBase) raise(ErrorCode::NotCritical, "Gamma(1/2) powers do not cancel");
  SymbolicRatio res;
  res.value = top.coeff / bottom.coeff;
  res.exponent = toInt(top.twoPiExponent - bottom.twoPiExponent);
  return res;
}

OracleReport checkKostant(int N, int n) {
  OracleReport rep{"bruteKostant", true, {}};
  auto fast = kostantReps(N, n);
  auto slow = bruteKostant(N, n);
  if (fast != slow) {
    rep.agreed = false;
    rep.counterexample.emplace_back("sizes", std::to_string(fast.size()) + " vs " + std::to_string(slow.size()));
  }
  IntVec gf = lengthGeneratingFunction(fast);
  IntVec gb = gaussianBinomial(N, n);
  if (gf != gb) {
    rep.agreed = false;
    std::ostringstream a, b;
    for (Int x : gf) a << x << ' ';
    for (Int x : gb) b << x << ' ';
    rep.counterexample.emplace_back("genfun", a.str() + "vs " + b.str());
  }
  return rep;
}

OracleReport checkCriticalAutomorphic(const Weight& mu, const Weight& muPrime) {
  OracleReport rep{"gammaPoleScan", true, {}};
  const auto formula = criticalSetAutomorphic(mu, muPrime);
  const Int gap = degreeGapDoubled(mu, muPrime);
  const Int R = windowRadius(mu, muPrime);
  const auto scan = gammaPoleScan(mu, muPrime, gap - R, gap + R);
  if (scan != formula.doubledPoints) {
    rep.agreed = false;
    rep.counterexample.emplace_back("formula", pointsToString(formula.doubledPoints));
    rep.counterexample.emplace_back("scan", pointsToString(scan));
  }
  return rep;
}

OracleReport checkCriticalMotivic(const HodgeSet& h) {
  OracleReport rep{"motivicGammaScan", true, {}};
  const auto formula = criticalSetMotivic(h);
  const Int R = 2 * (std::abs(h.purityWeight) + 8);
  const auto scan = motivicGammaScan(h, -R, R);
  if (scan != formula.doubledPoints) {
    rep.agreed = false;
    rep.counterexample.emplace_back("formula", pointsToString(formula.doubledPoints));
    rep.counterexample.emplace_back("scan", pointsToString(scan));
  }
  return rep;
}

OracleReport checkOddOdd(const Weight& mu, const Weight& muPrime, int eps0) {
  OracleReport rep{"gammaPoleScan", true, {}};
  const auto formula = oddOddCriticalSet(mu, muPrime, eps0);
  const Int gap = degreeGapDoubled(mu, muPrime);
  const Int R = windowRadius(mu, muPrime);
  const auto scan = gammaPoleScan(mu, muPrime, gap - R, gap + R, eps0);
  if (scan != formula.doubledPoints) {
    rep.agreed = false;
    rep.counterexample.emplace_back("formula", pointsToString(formula.doubledPoints));
    rep.counterexample.emplace_back("scan", pointsToString(scan));
  }
  return rep;
}

OracleReport checkArchimedeanRatio(const Weight& mu, const Weight& muPrime) {
  OracleReport rep{"gammaRatioSymbolic", true, {}};
  const auto a = archimedeanRatio(mu, muPrime);
  const auto s = gammaRatioSymbolic(mu, muPrime);
  if (a.value != s.value || a.exponent != s.exponent) {
    rep.agreed = false;
    rep.counterexample.emplace_back("formula", toString(a.value) + " (2pi)^" + std::to_string(a.exponent));
    rep.counterexample.emplace_back("symbolic", toString(s.value) + " (2pi)^" + std::to_string(s.exponent));
  }
  return rep;
}

OracleReport checkRoundTrip(const Weight& w) {
  OracleReport rep{"roundTrip", true, {}};
  const Weight back = fromFundamental(toFundamental(w), w.n, w.r);
  if (!(back == w)) {
    rep.agreed = false;
    rep.counterexample.emplace_back("roundTrip", "fromFundamental(toFundamental(w)) differs from w");
  }
  return rep;
}

}  // namespace rscrit

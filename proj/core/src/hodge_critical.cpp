#include "rscrit/hodge_critical.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "rscrit/error.hpp"

namespace rscrit {

bool CriticalSet::contains(Int doubled) const {
  return std::binary_search(doubledPoints.begin(), doubledPoints.end(), doubled);
}

namespace {

void requirePair(const Weight& mu, const Weight& muPrime) {
  requireSameR(mu, muPrime);
  requirePure(mu, "mu");
  requirePure(muPrime, "mu'");
}

void sortPairs(std::vector<HodgePair>& v) {
  std::sort(v.begin(), v.end(), [](const HodgePair& a, const HodgePair& b) { return a.first > b.first; });
}

Int largestWithParity(Int k, int parity) {
  // largest integer <= k congruent to parity mod 2
  Int r = ((k % 2) + 2) % 2;
  return r == parity ? k : k - 1;
}

}  // namespace

HodgeSet hodgeEff(const Weight& mu) {
  auto c = cuspidalParams(mu);
  HodgeSet h;
  h.purityWeight = c.motivicWeight;
  for (const auto& ell : c.ell) {
    std::vector<HodgePair> v;
    for (Int l : ell) v.emplace_back((l + c.motivicWeight) / 2, (c.motivicWeight - l) / 2);
    sortPairs(v);
    h.pairs.push_back(std::move(v));
  }
  return h;
}

HodgeSet hodgeTensor(const Weight& mu, const Weight& muPrime) {
  requirePair(mu, muPrime);
  auto c = cuspidalParams(mu);
  auto cp = cuspidalParams(muPrime);
  HodgeSet h;
  h.purityWeight = c.motivicWeight + cp.motivicWeight;
  for (int t = 0; t < mu.r; ++t) {
    std::vector<HodgePair> v;
    for (Int l : c.ell[t])
      for (Int lp : cp.ell[t]) v.emplace_back((l + lp + h.purityWeight) / 2, (h.purityWeight - l - lp) / 2);
    sortPairs(v);
    h.pairs.push_back(std::move(v));
  }
  return h;
}

bool hasMiddleType(const HodgeSet& h) {
  for (const auto& v : h.pairs)
    for (const auto& [p, q] : v)
      if (p == q) return true;
  return false;
}

CriticalSet criticalSetMotivic(const HodgeSet& h) {
  if (hasMiddleType(h)) raise(ErrorCode::MiddleHodgeType, "Hodge set has a middle type p = q");
  std::optional<Int> pMax;
  for (const auto& v : h.pairs)
    for (const auto& [p, q] : v)
      if (2 * p < h.purityWeight && (!pMax || p > *pMax)) pMax = p;
  if (!pMax) raise(ErrorCode::InvalidArgument, "Hodge set has no type with p < w/2");
  const Int qMin = h.purityWeight - *pMax;
  CriticalSet c{{}, 0};
  for (Int m = *pMax + 1; m <= qMin; ++m) c.doubledPoints.push_back(2 * m);
  return c;
}

Int degreeGapDoubled(const Weight& mu, const Weight& muPrime) {
  return doubledDegree(mu) - doubledDegree(muPrime);
}

CriticalSet criticalSetAutomorphic(const Weight& mu, const Weight& muPrime) {
  requirePair(mu, muPrime);
  if ((static_cast<Int>(mu.n) * muPrime.n) % 2 != 0)
    raise(ErrorCode::OddDimension, "n*n' is odd; use the odd x odd critical set");
  const Int width = cuspidalWidth(mu, muPrime);
  if (width == 0) raise(ErrorCode::NotDisjoint, "cuspidal parameters are not disjoint");
  const Int gap = degreeGapDoubled(mu, muPrime);
  CriticalSet c{{}, (mu.n + muPrime.n) % 2};
  for (Int x = 2 - width + gap; x <= width + gap; x += 2) c.doubledPoints.push_back(x);
  return c;
}

CriticalSet shiftCriticalSet(const CriticalSet& c, Int shiftDoubled) {
  CriticalSet out{{}, static_cast<int>(((c.parityDoubled + shiftDoubled) % 2 + 2) % 2)};
  for (Int x : c.doubledPoints) out.doubledPoints.push_back(x + shiftDoubled);
  return out;
}

std::vector<GammaFactor> gammaFactors(const Weight& mu, const Weight& muPrime, std::optional<int> eps0) {
  requirePair(mu, muPrime);
  auto c = cuspidalParams(mu);
  auto cp = cuspidalParams(muPrime);
  const bool bothOdd = mu.n % 2 == 1 && muPrime.n % 2 == 1;
  if (bothOdd && !eps0) raise(ErrorCode::InvalidArgument, "eps0 is required when n and n' are odd");
  if (eps0 && *eps0 != 0 && *eps0 != 1) raise(ErrorCode::InvalidArgument, "eps0 must be 0 or 1");

  // A piece is I(k) for k >= 0, or a sign character (k = -1).
  auto pieces = [](const IntVec& ell, int n) {
    IntVec out;
    for (int i = 0; i < n / 2; ++i) out.push_back(ell[i]);
    if (n % 2 == 1) out.push_back(-1);
    return out;
  };

  std::vector<GammaFactor> out;
  for (int t = 0; t < mu.r; ++t) {
    for (Int a : pieces(c.ell[t], mu.n))
      for (Int b : pieces(cp.ell[t], muPrime.n)) {
        if (a >= 0 && b >= 0) {
          out.push_back({GammaKind::C, t, a + b});
          out.push_back({GammaKind::C, t, std::abs(a - b)});
        } else if (a >= 0) {
          out.push_back({GammaKind::C, t, a});
        } else if (b >= 0) {
          out.push_back({GammaKind::C, t, b});
        } else {
          out.push_back({GammaKind::R, t, 2 * *eps0});
        }
      }
  }
  return out;
}

std::vector<GammaArg> gammaInventory(const Weight& mu, const Weight& muPrime, Int sDoubled,
                                     std::optional<int> eps0) {
  const Int gap = degreeGapDoubled(mu, muPrime);
  std::vector<GammaArg> out;
  for (const auto& f : gammaFactors(mu, muPrime, eps0)) {
    out.push_back({f.kind, GammaSide::Left, f.tau, sDoubled - gap + f.k});
    out.push_back({f.kind, GammaSide::Reflected, f.tau, 2 - sDoubled + gap + f.k});
  }
  return out;
}

bool isGammaPole(GammaKind kind, Int argDoubled) {
  if (argDoubled > 0) return false;
  if (kind == GammaKind::C) return argDoubled % 2 == 0;
  return argDoubled % 4 == 0;
}

bool isRegularAt(const Weight& mu, const Weight& muPrime, Int mDoubled, std::optional<int> eps0) {
  for (const auto& a : gammaInventory(mu, muPrime, mDoubled, eps0))
    if (isGammaPole(a.kind, a.argDoubled)) return false;
  return true;
}

ArchimedeanRatio archimedeanRatio(const Weight& mu, const Weight& muPrime) {
  requirePair(mu, muPrime);
  const int n = mu.n, nPrime = muPrime.n, N = n + nPrime;
  if ((static_cast<Int>(n) * nPrime) % 2 != 0)
    raise(ErrorCode::OddDimension, "n*n' is odd; the ratio is not a rational multiple of a power of pi");
  if (cuspidalWidth(mu, muPrime) == 0) raise(ErrorCode::NotCritical, "cuspidal parameters are not disjoint");
  auto crit = criticalSetAutomorphic(mu, muPrime);
  if (!crit.contains(-N) || !crit.contains(2 - N))
    raise(ErrorCode::NotCritical, "-N/2 and 1-N/2 are not both critical");

  auto c = cuspidalParams(mu);
  auto cp = cuspidalParams(muPrime);
  const Int gap = degreeGapDoubled(mu, muPrime);
  ArchimedeanRatio res;
  res.swapped = n % 2 == 1;
  res.value = 1;
  const int iMax = res.swapped ? n : n / 2;
  const int jMax = res.swapped ? nPrime / 2 : nPrime;
  for (int t = 0; t < mu.r; ++t) {
    Rational denom = 1;
    for (int i = 0; i < iMax; ++i)
      for (int j = 0; j < jMax; ++j) {
        Int aDoubled = -N - gap + std::abs(c.ell[t][i] - cp.ell[t][j]);
        if (aDoubled == 0) raise(ErrorCode::NotCritical, "vanishing factor in the ratio");
        denom *= Rational(aDoubled, 2);
      }
    Rational place = Rational(1) / denom;
    res.perPlace.push_back(place);
    res.value *= place;
  }
  res.exponent = static_cast<Int>(mu.r) * n * nPrime / 2;
  return res;
}

RegimeQuantities regimeQuantities(const Weight& mu, const Weight& muPrime) {
  requirePair(mu, muPrime);
  if (cuspidalWidth(mu, muPrime) == 0) raise(ErrorCode::NotDisjoint, "cuspidal parameters are not disjoint");
  auto c = cuspidalParams(mu);
  auto cp = cuspidalParams(muPrime);
  RegimeQuantities q;
  q.betaDoubled = c.ell;
  q.betaPrimeDoubled = cp.ell;
  for (int t = 0; t < mu.r; ++t) {
    Int best = std::numeric_limits<Int>::max();
    for (Int l : c.ell[t])
      for (Int lp : cp.ell[t]) best = std::min(best, std::abs(l - lp));
    q.pTildeDoubled.push_back(best);
  }
  q.aTildeDoubled = degreeGapDoubled(mu, muPrime) + mu.n + muPrime.n;
  return q;
}

const char* regimeName(LengthRegime r) {
  switch (r) {
    case LengthRegime::Balanced: return "Balanced";
    case LengthRegime::Shorter: return "Shorter";
    case LengthRegime::Longer: return "Longer";
    case LengthRegime::Collision: return "Collision";
  }
  return "Unknown";
}

std::vector<LengthRegime> predictRegimes(const RegimeQuantities& q) {
  std::vector<LengthRegime> out;
  const Int a = q.aTildeDoubled;
  for (std::size_t t = 0; t < q.pTildeDoubled.size(); ++t) {
    bool hit = false;
    for (Int b : q.betaDoubled[t])
      for (Int bp : q.betaPrimeDoubled[t])
        if (bp - b == a) hit = true;
    const Int p = q.pTildeDoubled[t];
    if (hit) out.push_back(LengthRegime::Collision);
    else if (std::abs(a) < p) out.push_back(LengthRegime::Balanced);
    else if (a > p) out.push_back(LengthRegime::Shorter);
    else out.push_back(LengthRegime::Longer);
  }
  return out;
}

CombLemmaReport combLemma(const Weight& mu, const Weight& muPrime) {
  requirePair(mu, muPrime);
  const int N = mu.n + muPrime.n;
  CombLemmaReport rep;
  rep.width = cuspidalWidth(mu, muPrime);
  if (rep.width == 0) raise(ErrorCode::NotDisjoint, "cuspidal parameters are not disjoint");
  rep.gapDoubled = degreeGapDoubled(mu, muPrime);

  auto bal = findBalanced(mu, muPrime);
  rep.status = bal.status;
  rep.cond1 = bal.status == BalancedStatus::Balanced;
  if (rep.cond1) rep.witness = bal.element;

  rep.cond2 = -N + 2 - rep.width <= rep.gapDoubled && rep.gapDoubled <= -N - 2 + rep.width;

  auto crit = criticalSetAutomorphic(mu, muPrime);
  rep.cond3 = crit.contains(-N) && crit.contains(2 - N);

  rep.consistent = rep.cond1 == rep.cond2 && rep.cond2 == rep.cond3;
  return rep;
}

Int sShiftDoubled(const Weight& mu, const Weight& muPrime) {
  requirePair(mu, muPrime);
  return cuspidalParams(mu).motivicWeight + cuspidalParams(muPrime).motivicWeight -
         degreeGapDoubled(mu, muPrime);
}

Int m0Doubled(const Weight& mu, const Weight& muPrime) {
  return -(mu.n + muPrime.n) + sShiftDoubled(mu, muPrime);
}

namespace {

void requireOddOdd(const Weight& mu, const Weight& muPrime) {
  if (mu.n % 2 == 0 || muPrime.n % 2 == 0) raise(ErrorCode::NotOddOdd, "both ranks must be odd");
}

// Smallest |ell_i - ell'_j| over 1 <= i <= (n+1)/2, 1 <= j <= (n'+1)/2 minus the middle pair.
Int effectiveOddOddWidth(const Weight& mu, const Weight& muPrime) {
  auto c = cuspidalParams(mu);
  auto cp = cuspidalParams(muPrime);
  const int hi = (mu.n + 1) / 2, hj = (muPrime.n + 1) / 2;
  Int best = std::numeric_limits<Int>::max();
  for (int t = 0; t < mu.r; ++t)
    for (int i = 1; i <= hi; ++i)
      for (int j = 1; j <= hj; ++j) {
        if (i == hi && j == hj) continue;
        best = std::min(best, std::abs(c.ell[t][i - 1] - cp.ell[t][j - 1]));
      }
  return best;
}

CriticalSet oddOddDisplay(Int widthValue, Int gap, int eps0) {
  CriticalSet out{{}, 0};
  if (widthValue <= 0) return out;
  const Int K = widthValue / 2;
  const Int top = largestWithParity(K, eps0 == 0 ? 0 : 1);
  IntVec xs;
  if (eps0 == 0) {
    for (Int x = 1 - top; x <= -1; x += 2) xs.push_back(x);
    for (Int x = 2; x <= top; x += 2) xs.push_back(x);
  } else {
    for (Int x = 1 - top; x <= 0; x += 2) xs.push_back(x);
    for (Int x = 1; x <= top; x += 2) xs.push_back(x);
  }
  for (Int x : xs) out.doubledPoints.push_back(gap + 2 * x);
  std::sort(out.doubledPoints.begin(), out.doubledPoints.end());
  return out;
}

}  // namespace

CriticalSet oddOddCriticalSet(const Weight& mu, const Weight& muPrime, int eps0) {
  requirePair(mu, muPrime);
  requireOddOdd(mu, muPrime);
  if (eps0 != 0 && eps0 != 1) raise(ErrorCode::InvalidArgument, "eps0 must be 0 or 1");
  const Int plus = cuspidalWidthPlus(mu, muPrime);
  if (plus == 0) return CriticalSet{{}, 0};
  return oddOddDisplay(effectiveOddOddWidth(mu, muPrime), degreeGapDoubled(mu, muPrime), eps0);
}

OddOddReport oddOddChecks(const Weight& mu, const Weight& muPrime) {
  requirePair(mu, muPrime);
  requireOddOdd(mu, muPrime);
  const int n = mu.n, nPrime = muPrime.n, N = n + nPrime;
  OddOddReport rep;
  rep.ellPlus = cuspidalWidthPlus(mu, muPrime);
  rep.effectiveWidth = effectiveOddOddWidth(mu, muPrime);
  rep.gapDoubled = degreeGapDoubled(mu, muPrime);
  rep.noCriticalPoints = rep.ellPlus == 0;
  for (int e = 0; e < 2; ++e) {
    rep.criticalEps0[e] = oddOddCriticalSet(mu, muPrime, e);
    rep.displayWithEllPlus[e] = oddOddDisplay(rep.ellPlus, rep.gapDoubled, e);
    rep.twoPointPredicted[e] = rep.ellPlus > 0 && e == 1 && rep.gapDoubled == -N;
    rep.twoPointActual[e] = rep.criticalEps0[e].contains(-N) && rep.criticalEps0[e].contains(2 - N);
  }
  rep.gapIsMinusHalfN = rep.gapDoubled == -N;

  const Weight x = tensorWeight(mu, muPrime);
  const IntVec rho = rhoDoubled(N);
  const int p1 = (n + 1) / 2, p2 = n + (nPrime + 1) / 2;
  rep.collisionEverywhere = true;
  for (int t = 0; t < mu.r; ++t) {
    Int a = 2 * x.coords[t][p1 - 1] + rho[p1 - 1];
    Int b = 2 * x.coords[t][p2 - 1] + rho[p2 - 1];
    if (a != b) rep.collisionEverywhere = false;
  }
  if (rep.collisionEverywhere) rep.collisionPositions = std::make_pair(p1, p2);
  return rep;
}

}  // namespace rscrit

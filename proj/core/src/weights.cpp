#include "rscrit/weights.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "rscrit/error.hpp"

namespace rscrit {

Weight makeWeight(int n, int r, std::vector<IntVec> coords) {
  if (n < 1) raise(ErrorCode::InvalidArgument, "rank n must be positive");
  if (r < 1) raise(ErrorCode::InvalidArgument, "field degree r must be positive");
  if (coords.size() != static_cast<std::size_t>(r))
    raise(ErrorCode::ShapeMismatch, "expected " + std::to_string(r) + " coordinate vectors, got " +
                                        std::to_string(coords.size()));
  for (const auto& b : coords)
    if (b.size() != static_cast<std::size_t>(n))
      raise(ErrorCode::ShapeMismatch, "coordinate vector of length " + std::to_string(b.size()) +
                                          ", expected " + std::to_string(n));
  return Weight{n, r, std::move(coords)};
}

FundamentalCoords makeFundamental(int n, std::vector<IntVec> a, std::vector<Rational> d) {
  if (n < 1) raise(ErrorCode::InvalidArgument, "rank n must be positive");
  if (a.size() != d.size()) raise(ErrorCode::ShapeMismatch, "a and d have different embedding counts");
  FundamentalCoords f{std::move(a), std::move(d), {}};
  for (std::size_t t = 0; t < f.a.size(); ++t) {
    if (f.a[t].size() != static_cast<std::size_t>(n - 1))
      raise(ErrorCode::ShapeMismatch, "fundamental vector a must have length n-1");
    Rational s = 0;
    for (int i = 1; i <= n - 1; ++i) s += Rational(i) * Rational(f.a[t][i - 1] - 1);
    f.rLambda.push_back((Rational(n) * f.d[t] - s) / n);
  }
  return f;
}

FundamentalCoords toFundamental(const Weight& w) {
  std::vector<IntVec> a;
  std::vector<Rational> d;
  for (const auto& b : w.coords) {
    IntVec at;
    Int sum = 0;
    for (int i = 0; i < w.n; ++i) {
      sum += b[i];
      if (i + 1 < w.n) at.push_back(b[i] - b[i + 1] + 1);
    }
    a.push_back(std::move(at));
    d.emplace_back(sum, w.n);
  }
  return makeFundamental(w.n, std::move(a), std::move(d));
}

Weight fromFundamental(const FundamentalCoords& f, int n, int r) {
  if (f.a.size() != static_cast<std::size_t>(r) || f.rLambda.size() != static_cast<std::size_t>(r))
    raise(ErrorCode::ShapeMismatch, "fundamental data does not have r embeddings");
  std::vector<IntVec> coords;
  for (int t = 0; t < r; ++t) {
    if (!isInteger(f.rLambda[t]))
      raise(ErrorCode::NonIntegralResult,
            "b_n = " + toString(f.rLambda[t]) + " is not an integer at embedding " + std::to_string(t));
    IntVec b(n);
    Int acc = toInt(f.rLambda[t]);
    b[n - 1] = acc;
    for (int j = n - 2; j >= 0; --j) {
      acc += f.a[t][j] - 1;
      b[j] = acc;
    }
    coords.push_back(std::move(b));
  }
  return makeWeight(n, r, std::move(coords));
}

bool isIntegral(const FundamentalCoords& f, int /*n*/) {
  return std::all_of(f.rLambda.begin(), f.rLambda.end(), [](const Rational& q) { return isInteger(q); });
}

bool isIntegral(const Weight&) { return true; }

bool isDominant(const Weight& w) {
  for (const auto& b : w.coords)
    for (int i = 0; i + 1 < w.n; ++i)
      if (b[i] < b[i + 1]) return false;
  return true;
}

Rational meanCoord(const Weight& w, int tau) {
  Int s = 0;
  for (Int x : w.coords[tau]) s += x;
  return Rational(s, w.n);
}

bool isAlgebraic(const Weight& w) {
  Rational d0 = meanCoord(w, 0);
  for (int t = 1; t < w.r; ++t)
    if (meanCoord(w, t) != d0) return false;
  return true;
}

bool isPure(const Weight& w) {
  if (!isDominant(w) || !isAlgebraic(w)) return false;
  Int target = w.coords[0][0] + w.coords[0][w.n - 1];
  for (const auto& b : w.coords)
    for (int i = 0; i < w.n; ++i)
      if (b[i] + b[w.n - 1 - i] != target) return false;
  return true;
}

Int doubledDegree(const Weight& w) {
  if (!isAlgebraic(w)) raise(ErrorCode::NotPure, "weight is not algebraic");
  return toInt(meanCoord(w, 0) * 2);
}

void requirePure(const Weight& w, const char* what) {
  if (!isPure(w)) raise(ErrorCode::NotPure, std::string(what) + " is not a pure weight");
}

void requireSameR(const Weight& mu, const Weight& muPrime) {
  if (mu.r != muPrime.r)
    raise(ErrorCode::RankMismatch, "weights live over fields of different degree (" + std::to_string(mu.r) +
                                       " vs " + std::to_string(muPrime.r) + ")");
}

CuspidalParams cuspidalParams(const Weight& w) {
  requirePure(w, "weight");
  CuspidalParams c;
  c.motivicWeight = std::numeric_limits<Int>::min();
  for (const auto& b : w.coords) {
    IntVec ell(w.n, 0);
    if (w.n > 1) {
      Int s = 0;
      for (int i = 0; i + 1 < w.n; ++i) s += b[i] - b[i + 1] + 1;
      ell[0] = s;
      for (int j = 0; j + 1 < w.n; ++j) ell[j + 1] = ell[j] - 2 * (b[j] - b[j + 1] + 1);
    }
    c.motivicWeight = std::max(c.motivicWeight, ell[0]);
    c.ell.push_back(std::move(ell));
  }
  c.purityWeightDoubled = doubledDegree(w);
  return c;
}

Weight dualWeight(const Weight& w) {
  Weight out = w;
  for (auto& b : out.coords) {
    std::reverse(b.begin(), b.end());
    for (auto& x : b) x = -x;
  }
  return out;
}

Weight tateTwist(const Weight& w, Int m) {
  Weight out = w;
  for (auto& b : out.coords)
    for (auto& x : b) x -= m;
  return out;
}

Weight tensorWeight(const Weight& mu, const Weight& muPrime) {
  requireSameR(mu, muPrime);
  std::vector<IntVec> coords;
  for (int t = 0; t < mu.r; ++t) {
    IntVec b = mu.coords[t];
    b.insert(b.end(), muPrime.coords[t].begin(), muPrime.coords[t].end());
    coords.push_back(std::move(b));
  }
  return Weight{mu.n + muPrime.n, mu.r, std::move(coords)};
}

namespace {

Int widthOver(const Weight& mu, const Weight& muPrime, int iMax, int jMax) {
  requireSameR(mu, muPrime);
  auto c = cuspidalParams(mu);
  auto cp = cuspidalParams(muPrime);
  Int best = std::numeric_limits<Int>::max();
  for (int t = 0; t < mu.r; ++t)
    for (int i = 0; i < iMax; ++i)
      for (int j = 0; j < jMax; ++j) best = std::min(best, std::abs(c.ell[t][i] - cp.ell[t][j]));
  return best;
}

}  // namespace

Int cuspidalWidth(const Weight& mu, const Weight& muPrime) { return widthOver(mu, muPrime, mu.n, muPrime.n); }

Int cuspidalWidthPlus(const Weight& mu, const Weight& muPrime) {
  int iMax = (mu.n - 1) / 2;
  int jMax = (muPrime.n - 1) / 2;
  if (iMax < 1 || jMax < 1)
    raise(ErrorCode::DegenerateIndexRange,
          "restricted width needs both ranks at least 3 (got " + std::to_string(mu.n) + ", " +
              std::to_string(muPrime.n) + ")");
  return widthOver(mu, muPrime, iMax, jMax);
}

Weight pureWeightFromParams(int n, const std::vector<IntVec>& ellHeads, Int dDoubled) {
  if (n < 1) raise(ErrorCode::InvalidArgument, "rank n must be positive");
  if (ellHeads.empty()) raise(ErrorCode::InvalidArgument, "need at least one embedding");
  const int h = n / 2;
  std::vector<IntVec> coords;
  for (const auto& head : ellHeads) {
    if (head.size() != static_cast<std::size_t>(h))
      raise(ErrorCode::ShapeMismatch, "cuspidal head must have length floor(n/2)");
    for (int i = 0; i < h; ++i) {
      if (head[i] <= 0 || (i > 0 && head[i] >= head[i - 1]))
        raise(ErrorCode::InvalidArgument, "cuspidal head must be positive and strictly decreasing");
    }
    IntVec ell(n, 0);
    for (int i = 0; i < h; ++i) {
      ell[i] = head[i];
      ell[n - 1 - i] = -head[i];
    }
    IntVec b(n);
    for (int i = 1; i <= n; ++i) {
      Int twice = dDoubled + ell[i - 1] - (n + 1) + 2 * i;
      if (twice % 2 != 0)
        raise(ErrorCode::NonIntegralResult, "cuspidal parameters and 2d have incompatible parity");
      b[i - 1] = twice / 2;
    }
    coords.push_back(std::move(b));
  }
  return makeWeight(n, static_cast<int>(ellHeads.size()), std::move(coords));
}

Weight hilbertWeight(const IntVec& k, Int m) {
  if (k.empty()) raise(ErrorCode::InvalidArgument, "need at least one weight k");
  Int k0 = *std::max_element(k.begin(), k.end());
  std::vector<IntVec> coords;
  for (Int kt : k) {
    if (kt < 2) raise(ErrorCode::InvalidArgument, "weights k must be at least 2");
    Int b1 = kt - 2 - 2 * m - k0;
    Int b2 = -kt + 2 - 2 * m - k0;
    if (b1 % 2 != 0 || b2 % 2 != 0)
      raise(ErrorCode::NonIntegralResult, "all k must have the same parity");
    coords.push_back({b1 / 2, b2 / 2});
  }
  return makeWeight(2, static_cast<int>(k.size()), std::move(coords));
}

}  // namespace rscrit

#pragma once

#include <vector>

#include "rscrit/rational.hpp"

namespace rscrit {

// Highest weight of GL(n) over a field with r real embeddings, given in
// standard coordinates: coords[tau][i] = b^tau_{i+1}.
struct Weight {
  int n = 1;
  int r = 1;
  std::vector<IntVec> coords;

  bool operator==(const Weight&) const = default;
};

// Validates shape; throws InvalidArgument / ShapeMismatch.
Weight makeWeight(int n, int r, std::vector<IntVec> coords);

struct FundamentalCoords {
  std::vector<IntVec> a;          // a^tau_i = b_i - b_{i+1} + 1, length n-1
  std::vector<Rational> d;        // mean of b^tau
  std::vector<Rational> rLambda;  // equals b^tau_n when integral
};

struct CuspidalParams {
  std::vector<IntVec> ell;
  Int motivicWeight = 0;
  Int purityWeightDoubled = 0;  // 2d
};

// Builds coordinates from a and d, deriving rLambda.
FundamentalCoords makeFundamental(int n, std::vector<IntVec> a, std::vector<Rational> d);

FundamentalCoords toFundamental(const Weight& w);
Weight fromFundamental(const FundamentalCoords& f, int n, int r);

bool isIntegral(const FundamentalCoords& f, int n);
bool isIntegral(const Weight& w);
bool isDominant(const Weight& w);
bool isAlgebraic(const Weight& w);
bool isPure(const Weight& w);

Rational meanCoord(const Weight& w, int tau);

// 2d for an algebraic weight. Throws NotPure if the means differ across tau.
Int doubledDegree(const Weight& w);

CuspidalParams cuspidalParams(const Weight& w);

Weight dualWeight(const Weight& w);
Weight tateTwist(const Weight& w, Int m);

// Block concatenation mu (x) mu' as a weight of GL(n + n').
Weight tensorWeight(const Weight& mu, const Weight& muPrime);

Int cuspidalWidth(const Weight& mu, const Weight& muPrime);
Int cuspidalWidthPlus(const Weight& mu, const Weight& muPrime);

// Pure weight with prescribed heads ell^tau_1 > ... > ell^tau_{floor(n/2)} > 0
// and 2d. Throws NonIntegralResult on a parity mismatch.
Weight pureWeightFromParams(int n, const std::vector<IntVec>& ellHeads, Int dDoubled);

// lambda^tau = (k_tau - 2) rho_2 + (-m - k_0/2) delta_2 with k_0 = max k_tau.
Weight hilbertWeight(const IntVec& k, Int m);

void requireSameR(const Weight& mu, const Weight& muPrime);
void requirePure(const Weight& w, const char* what);

}  // namespace rscrit

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rscrit/hodge_critical.hpp"
#include "rscrit/rational.hpp"
#include "rscrit/weights.hpp"
#include "rscrit/weyl.hpp"

namespace rscrit {

struct OracleReport {
  std::string subject;
  bool agreed = true;
  std::vector<std::pair<std::string, std::string>> counterexample;  // empty when agreed
};

// Filters all of S_N by the Kostant condition. N <= 10.
std::vector<Perm> bruteKostant(int N, int n);

// Coefficients of the q-binomial [N choose n]_q.
IntVec gaussianBinomial(int N, int n);

// Per embedding, every w in S_N with w^{-1}.(mu (x) mu') dominant. N <= 9.
std::vector<std::vector<Perm>> bruteDominantMakers(const Weight& mu, const Weight& muPrime);

OracleReport bruteBalanced(const Weight& mu, const Weight& muPrime);

// Points 2m in [lo, hi] on the parity lattice of N at which every Gamma factor
// on both sides of the functional equation is finite.
IntVec gammaPoleScan(const Weight& mu, const Weight& muPrime, Int loDoubled, Int hiDoubled,
                     std::optional<int> eps0 = {});

// Integer points 2m in [lo, hi] where the Serre Gamma factors of a motive with
// Hodge set h and of its dual at 1-s are finite.
IntVec motivicGammaScan(const HodgeSet& h, Int loDoubled, Int hiDoubled);

struct SymbolicRatio {
  Rational value;
  Int exponent = 0;
};

// L_infty(-N/2) / L_infty(1-N/2) from the Gamma inventory, using Gamma(s+1) = s Gamma(s).
SymbolicRatio gammaRatioSymbolic(const Weight& mu, const Weight& muPrime);

OracleReport checkKostant(int N, int n);
OracleReport checkCriticalAutomorphic(const Weight& mu, const Weight& muPrime);
OracleReport checkCriticalMotivic(const HodgeSet& h);
OracleReport checkOddOdd(const Weight& mu, const Weight& muPrime, int eps0);
OracleReport checkArchimedeanRatio(const Weight& mu, const Weight& muPrime);
OracleReport checkRoundTrip(const Weight& w);

std::string permToString(const Perm& p);
std::string pointsToString(const IntVec& doubled);

}  // namespace rscrit

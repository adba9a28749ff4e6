#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rscrit/rational.hpp"
#include "rscrit/weights.hpp"
#include "rscrit/weyl.hpp"

namespace rscrit {

using HodgePair = std::pair<Int, Int>;

struct HodgeSet {
  std::vector<std::vector<HodgePair>> pairs;  // per embedding, sorted by descending p
  Int purityWeight = 0;
};

// Critical points m stored as 2m. parityDoubled is 0 for integers, 1 for half-integers.
struct CriticalSet {
  IntVec doubledPoints;
  int parityDoubled = 0;

  bool contains(Int doubled) const;
  bool operator==(const CriticalSet&) const = default;
};

HodgeSet hodgeEff(const Weight& mu);
HodgeSet hodgeTensor(const Weight& mu, const Weight& muPrime);
bool hasMiddleType(const HodgeSet& h);

CriticalSet criticalSetMotivic(const HodgeSet& h);

// d - d' doubled.
Int degreeGapDoubled(const Weight& mu, const Weight& muPrime);

// n*n' even, disjoint cuspidal parameters.
CriticalSet criticalSetAutomorphic(const Weight& mu, const Weight& muPrime);

CriticalSet shiftCriticalSet(const CriticalSet& c, Int shiftDoubled);

enum class GammaKind { C, R };
enum class GammaSide { Left, Reflected };

// Left factor evaluated at s: Gamma_kind(s - (d-d') + k/2).
// Reflected factor evaluated at s: Gamma_kind(1 - s + (d-d') + k/2).
// For Gamma_R, k = 2 eps0.
struct GammaFactor {
  GammaKind kind = GammaKind::C;
  int tau = 0;
  Int k = 0;
};

struct GammaArg {
  GammaKind kind = GammaKind::C;
  GammaSide side = GammaSide::Left;
  int tau = 0;
  Int argDoubled = 0;
};

// Factors of L_infty(s, sigma x sigma'^v) built from the archimedean Langlands
// parameters. eps0 is required when n and n' are both odd.
std::vector<GammaFactor> gammaFactors(const Weight& mu, const Weight& muPrime, std::optional<int> eps0 = {});

std::vector<GammaArg> gammaInventory(const Weight& mu, const Weight& muPrime, Int sDoubled,
                                     std::optional<int> eps0 = {});

bool isGammaPole(GammaKind kind, Int argDoubled);

bool isRegularAt(const Weight& mu, const Weight& muPrime, Int mDoubled, std::optional<int> eps0 = {});

struct ArchimedeanRatio {
  Rational value;     // rational factor multiplying (2 pi)^exponent
  Int exponent = 0;   // r * n * n' / 2
  bool swapped = false;  // index roles exchanged because n is odd
  std::vector<Rational> perPlace;
};

// L_infty(-N/2) / L_infty(1-N/2) over all embeddings.
ArchimedeanRatio archimedeanRatio(const Weight& mu, const Weight& muPrime);

struct RegimeQuantities {
  std::vector<IntVec> betaDoubled;       // beta_j = ell_j / 2
  std::vector<IntVec> betaPrimeDoubled;
  IntVec pTildeDoubled;                  // per embedding
  Int aTildeDoubled = 0;                 // d - d' + N/2
};

RegimeQuantities regimeQuantities(const Weight& mu, const Weight& muPrime);

enum class LengthRegime { Balanced, Shorter, Longer, Collision };
const char* regimeName(LengthRegime r);

// Per embedding, the regime predicted from p~ and a~ alone.
std::vector<LengthRegime> predictRegimes(const RegimeQuantities& q);

struct CombLemmaReport {
  bool cond1 = false;
  bool cond2 = false;
  bool cond3 = false;
  bool consistent = false;
  Int width = 0;
  Int gapDoubled = 0;
  BalancedStatus status = BalancedStatus::Collision;
  std::optional<KostantElement> witness;
};

CombLemmaReport combLemma(const Weight& mu, const Weight& muPrime);

// (w + w')/2 - (d - d'), doubled.
Int sShiftDoubled(const Weight& mu, const Weight& muPrime);
// -N/2 + sShift, doubled.
Int m0Doubled(const Weight& mu, const Weight& muPrime);

// n, n' odd and at least 3.
CriticalSet oddOddCriticalSet(const Weight& mu, const Weight& muPrime, int eps0);

struct OddOddReport {
  Int ellPlus = 0;
  Int effectiveWidth = 0;  // min over all (i,j) except the two middle indices
  Int gapDoubled = 0;
  bool noCriticalPoints = false;  // ell+ = 0
  CriticalSet criticalEps0[2];
  // The displayed sets evaluated with ell+ in place of the effective width.
  CriticalSet displayWithEllPlus[2];
  bool twoPointPredicted[2] = {false, false};
  bool twoPointActual[2] = {false, false};
  bool gapIsMinusHalfN = false;
  std::optional<std::pair<int, int>> collisionPositions;
  bool collisionEverywhere = false;
};

OddOddReport oddOddChecks(const Weight& mu, const Weight& muPrime);

}  // namespace rscrit

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rscrit/rational.hpp"
#include "rscrit/weights.hpp"

namespace rscrit {

// One-line notation, values 1..N: p[i-1] = w(i).
// w acts on vectors by moving entry j to position w(j): (w x)_i = x_{w^{-1}(i)}.
// Products compose as maps: (a b)(i) = a(b(i)).
using Perm = std::vector<int>;

Perm identityPerm(int N);
Perm permInverse(const Perm& w);
Perm permCompose(const Perm& a, const Perm& b);
Int permLength(const Perm& w);
bool isPermutation(const Perm& w);

// w^{-1} increasing on each block of consecutive positions given by `blocks`.
bool isKostant(const Perm& w, const std::vector<int>& blocks);

IntVec applyPerm(const Perm& w, const IntVec& x);

// 2 rho_N = (N-1, N-3, ..., 1-N).
IntVec rhoDoubled(int N);

// w(x + rho) - rho for an integer vector x.
IntVec dotActionVec(const Perm& w, const IntVec& x);

struct KostantElement {
  int N = 0;
  std::vector<int> blocks;  // composition of N; (n, n') for maximal parabolics
  std::vector<Perm> perms;  // one per embedding

  bool operator==(const KostantElement&) const = default;
};

IntVec lengths(const KostantElement& w);

// All of W^P for P of type (n, N-n), lexicographic in one-line notation.
std::vector<Perm> kostantReps(int N, int n);

// Length generating function: coefficient list indexed by length.
IntVec lengthGeneratingFunction(const std::vector<Perm>& perms);

Weight dotAction(const KostantElement& w, const Weight& lam);

// Left multiplier sending W^P to W^Q, Q of type (n', n): i -> n'+i on the first block.
Perm associateMultiplier(int n, int nPrime);

// Longest element of the Levi of type blocks, and of the whole group.
Perm leviLongest(const std::vector<int>& blocks);
Perm longestElement(int N);

KostantElement toAssociate(const KostantElement& w);
KostantElement toDual(const KostantElement& w);

enum class BalancedStatus { Balanced, ExistsUnbalanced, Collision };
const char* statusName(BalancedStatus s);

struct BalancedSearchResult {
  BalancedStatus status = BalancedStatus::Collision;
  std::optional<KostantElement> element;
  IntVec lengths;  // -1 for embeddings with a collision
  std::optional<Weight> dominantLambda;
  // First pair of equal entries of mu (x) mu' + rho_N (1-based positions), per embedding.
  std::vector<std::optional<std::pair<int, int>>> collisions;
};

BalancedSearchResult findBalanced(const Weight& mu, const Weight& muPrime);

struct WuvResult {
  int u = 1;
  int v = 1;
  KostantElement w;       // blocks: v blocks of size u
  KostantElement wPrime;  // w = w_P w'
  Perm wP;                // reverses the order of the v blocks
  Int length = 0;         // inversion count of w
  bool formulaIntegral = true;
  Int formulaLength = 0;  // N(u-1)(v-1)/4 when integral
};

WuvResult wUV(int u, int v);

// lam must be of rank uv with standard coordinates constant on u blocks of size v.
bool deltaCoefficientCheck(int u, int v, const Weight& lam);

}  // namespace rscrit

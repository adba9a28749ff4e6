#include "rscrit/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rscrit/error.hpp"

namespace rscrit {

Perm identityPerm(int N) {
  Perm p(N);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

bool isPermutation(const Perm& w) {
  std::vector<char> seen(w.size() + 1, 0);
  for (int x : w) {
    if (x < 1 || x > static_cast<int>(w.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

Perm permInverse(const Perm& w) {
  Perm inv(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) inv[w[i] - 1] = static_cast<int>(i) + 1;
  return inv;
}

Perm permCompose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) raise(ErrorCode::RankMismatch, "composing permutations of different degree");
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i] - 1];
  return c;
}

Int permLength(const Perm& w) {
  Int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

bool isKostant(const Perm& w, const std::vector<int>& blocks) {
  Perm inv = permInverse(w);
  std::size_t start = 0;
  for (int len : blocks) {
    for (std::size_t i = start; i + 1 < start + len; ++i)
      if (inv[i] > inv[i + 1]) return false;
    start += len;
  }
  return start == w.size();
}

IntVec applyPerm(const Perm& w, const IntVec& x) {
  if (w.size() != x.size()) raise(ErrorCode::RankMismatch, "permutation and vector differ in length");
  IntVec y(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) y[w[j] - 1] = x[j];
  return y;
}

IntVec rhoDoubled(int N) {
  IntVec rho(N);
  for (int i = 0; i < N; ++i) rho[i] = N - 1 - 2 * i;
  return rho;
}

IntVec dotActionVec(const Perm& w, const IntVec& x) {
  const int N = static_cast<int>(x.size());
  IntVec rho = rhoDoubled(N);
  IntVec shifted(N);
  for (int i = 0; i < N; ++i) shifted[i] = 2 * x[i] + rho[i];
  IntVec moved = applyPerm(w, shifted);
  IntVec out(N);
  for (int i = 0; i < N; ++i) out[i] = (moved[i] - rho[i]) / 2;
  return out;
}

IntVec lengths(const KostantElement& w) {
  IntVec out;
  for (const auto& p : w.perms) out.push_back(permLength(p));
  return out;
}

std::vector<Perm> kostantReps(int N, int n) {
  if (N < 2 || n < 1 || n >= N) raise(ErrorCode::InvalidArgument, "need 1 <= n < N");
  std::vector<Perm> out;
  // mask[v] = 1 when value v+1 is the image under w^{-1} of a first-block position
  std::vector<int> mask(N, 0);
  std::fill(mask.end() - n, mask.end(), 1);
  do {
    Perm inv;
    for (int v = 0; v < N; ++v)
      if (mask[v]) inv.push_back(v + 1);
    for (int v = 0; v < N; ++v)
      if (!mask[v]) inv.push_back(v + 1);
    out.push_back(permInverse(inv));
  } while (std::next_permutation(mask.begin(), mask.end()));
  std::sort(out.begin(), out.end());
  return out;
}

IntVec lengthGeneratingFunction(const std::vector<Perm>& perms) {
  IntVec gf;
  for (const auto& p : perms) {
    Int l = permLength(p);
    if (static_cast<Int>(gf.size()) <= l) gf.resize(l + 1, 0);
    ++gf[l];
  }
  return gf;
}

Weight dotAction(const KostantElement& w, const Weight& lam) {
  if (lam.n != w.N) raise(ErrorCode::RankMismatch, "weight rank differs from Weyl group degree");
  if (static_cast<int>(w.perms.size()) != lam.r)
    raise(ErrorCode::RankMismatch, "element and weight have different embedding counts");
  Weight out = lam;
  for (int t = 0; t < lam.r; ++t) out.coords[t] = dotActionVec(w.perms[t], lam.coords[t]);
  return out;
}

Perm associateMultiplier(int n, int nPrime) {
  Perm c(n + nPrime);
  for (int i = 1; i <= n; ++i) c[i - 1] = nPrime + i;
  for (int j = 1; j <= nPrime; ++j) c[n + j - 1] = j;
  return c;
}

Perm leviLongest(const std::vector<int>& blocks) {
  Perm p;
  int start = 0;
  for (int len : blocks) {
    for (int i = len; i >= 1; --i) p.push_back(start + i);
    start += len;
  }
  return p;
}

Perm longestElement(int N) {
  Perm p(N);
  for (int i = 0; i < N; ++i) p[i] = N - i;
  return p;
}

namespace {

void requireMaximalKostant(const KostantElement& w) {
  if (w.blocks.size() != 2 || w.blocks[0] + w.blocks[1] != w.N)
    raise(ErrorCode::NotKostant, "element is not tagged with a maximal parabolic");
  for (const auto& p : w.perms)
    if (static_cast<int>(p.size()) != w.N || !isPermutation(p) || !isKostant(p, w.blocks))
      raise(ErrorCode::NotKostant, "component is not a Kostant representative for the parabolic");
}

}  // namespace

KostantElement toAssociate(const KostantElement& w) {
  requireMaximalKostant(w);
  const int n = w.blocks[0], nPrime = w.blocks[1];
  Perm c = associateMultiplier(n, nPrime);
  KostantElement out{w.N, {nPrime, n}, {}};
  for (const auto& p : w.perms) out.perms.push_back(permCompose(c, p));
  return out;
}

KostantElement toDual(const KostantElement& w) {
  requireMaximalKostant(w);
  Perm wM = leviLongest(w.blocks);
  Perm wG = longestElement(w.N);
  KostantElement out{w.N, w.blocks, {}};
  for (const auto& p : w.perms) out.perms.push_back(permCompose(wM, permCompose(p, wG)));
  return out;
}

const char* statusName(BalancedStatus s) {
  switch (s) {
    case BalancedStatus::Balanced: return "Balanced";
    case BalancedStatus::ExistsUnbalanced: return "ExistsUnbalanced";
    case BalancedStatus::Collision: return "Collision";
  }
  return "Unknown";
}

BalancedSearchResult findBalanced(const Weight& mu, const Weight& muPrime) {
  requireSameR(mu, muPrime);
  requirePure(mu, "mu");
  requirePure(muPrime, "mu'");
  const int n = mu.n, nPrime = muPrime.n, N = n + nPrime;
  const Weight x = tensorWeight(mu, muPrime);
  const IntVec rho = rhoDoubled(N);

  BalancedSearchResult res;
  std::vector<Perm> perms;
  std::vector<IntVec> lamCoords;
  bool anyCollision = false;
  for (int t = 0; t < mu.r; ++t) {
    IntVec bt(N);
    for (int i = 0; i < N; ++i) bt[i] = 2 * x.coords[t][i] + rho[i];
    std::optional<std::pair<int, int>> hit;
    for (int i = 0; i < N && !hit; ++i)
      for (int j = i + 1; j < N && !hit; ++j)
        if (bt[i] == bt[j]) hit = std::make_pair(i + 1, j + 1);
    res.collisions.push_back(hit);

    Int len = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < nPrime; ++j)
        if (bt[i] < bt[n + j]) ++len;
    if (hit) {
      anyCollision = true;
      res.lengths.push_back(-1);
      continue;
    }
    res.lengths.push_back(len);

    Perm order(N);
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return bt[a - 1] > bt[b - 1]; });
    perms.push_back(order);  // w(k) = position of the k-th largest entry

    IntVec lam(N);
    IntVec sorted = bt;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    for (int i = 0; i < N; ++i) lam[i] = (sorted[i] - rho[i]) / 2;
    lamCoords.push_back(std::move(lam));
  }

  if (anyCollision) {
    res.status = BalancedStatus::Collision;
    return res;
  }
  if ((static_cast<Int>(n) * nPrime) % 2 != 0)
    raise(ErrorCode::OddDimension, "n*n' is odd, no balanced representative can exist");

  res.element = KostantElement{N, {n, nPrime}, std::move(perms)};
  res.dominantLambda = makeWeight(N, mu.r, std::move(lamCoords));
  const Int half = static_cast<Int>(n) * nPrime / 2;
  bool balanced = std::all_of(res.lengths.begin(), res.lengths.end(), [&](Int l) { return l == half; });
  res.status = balanced ? BalancedStatus::Balanced : BalancedStatus::ExistsUnbalanced;
  return res;
}

WuvResult wUV(int u, int v) {
  if (u < 1 || v < 1) raise(ErrorCode::InvalidArgument, "u and v must be positive");
  const int N = u * v;
  WuvResult res;
  res.u = u;
  res.v = v;
  std::vector<int> blocks(v, u);

  Perm w(N);
  for (int k = 1; k <= u; ++k)
    for (int t = 1; t <= v; ++t) w[t + (k - 1) * v - 1] = (t - 1) * u + k;

  Perm wP(N);
  for (int s = 1; s <= v; ++s)
    for (int p = 1; p <= u; ++p) wP[(s - 1) * u + p - 1] = (v - s) * u + p;

  res.wP = wP;
  res.w = KostantElement{N, blocks, {w}};
  res.wPrime = KostantElement{N, blocks, {permCompose(permInverse(wP), w)}};
  res.length = permLength(w);
  const Int num = static_cast<Int>(N) * (u - 1) * (v - 1);
  res.formulaIntegral = num % 4 == 0;
  res.formulaLength = res.formulaIntegral ? num / 4 : 0;
  return res;
}

namespace {

// Block sums (doubled) and semisimple parts (scaled by u) of y split into v blocks of size u.
void splitBlocks(const IntVec& y, int u, int v, IntVec& sums, std::vector<IntVec>& semisimple) {
  sums.assign(v, 0);
  semisimple.assign(v, IntVec(u));
  for (int t = 0; t < v; ++t)
    for (int k = 0; k < u; ++k) sums[t] += y[t * u + k];
  for (int t = 0; t < v; ++t)
    for (int k = 0; k < u; ++k) semisimple[t][k] = u * y[t * u + k] - sums[t];
}

}  // namespace

bool deltaCoefficientCheck(int u, int v, const Weight& lam) {
  if (u < 1 || v < 1) raise(ErrorCode::InvalidArgument, "u and v must be positive");
  const int N = u * v;
  if (lam.n != N) raise(ErrorCode::ShapeMismatch, "weight rank is not u*v");
  for (const auto& b : lam.coords)
    for (int k = 0; k < u; ++k)
      for (int t = 1; t < v; ++t)
        if (b[k * v + t] != b[k * v])
          raise(ErrorCode::ShapeMismatch, "standard coordinates are not constant on blocks of size v");

  const WuvResult wr = wUV(u, v);
  const IntVec rho = rhoDoubled(N);
  for (const auto& b : lam.coords) {
    IntVec shifted(N);
    for (int i = 0; i < N; ++i) shifted[i] = 2 * b[i] + rho[i];
    IntVec sums, sumsP;
    std::vector<IntVec> ss, ssP;
    splitBlocks(applyPerm(wr.w.perms[0], shifted), u, v, sums, ss);
    splitBlocks(applyPerm(wr.wPrime.perms[0], shifted), u, v, sumsP, ssP);
    for (int t = 0; t + 1 < v; ++t) {
      // mean difference 1 in doubled block sums is 2u
      if (sums[t] - sums[t + 1] != 2 * u) return false;
      if (sumsP[t] - sumsP[t + 1] != -2 * u) return false;
    }
    for (int t = 0; t < v; ++t)
      if (ss[t] != ss[0] || ssP[t] != ss[0]) return false;
  }
  return true;
}

}  // namespace rscrit

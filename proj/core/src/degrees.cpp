#include "rscrit/degrees.hpp"

#include "rscrit/error.hpp"

namespace rscrit {

DegreeProfile degreeProfile(int n, int r) {
  if (n < 1 || r < 1) raise(ErrorCode::InvalidArgument, "n and r must be positive");
  DegreeProfile p;
  p.n = n;
  p.r = r;
  const Int q = static_cast<Int>(n) * n / 4;
  p.b = r * q;
  p.t = r * (q + (n + 1) / 2 - 1);
  p.tTilde = p.t + r - 1;
  return p;
}

DegreeIdentityReport degreeIdentities(int n, int nPrime, int r) {
  if ((static_cast<Int>(n) * nPrime) % 2 != 0)
    raise(ErrorCode::OddDimension, "n*n' is odd, half the unipotent dimension is not an integer");
  DegreeIdentityReport rep;
  rep.pn = degreeProfile(n, r);
  rep.pnPrime = degreeProfile(nPrime, r);
  rep.pN = degreeProfile(n + nPrime, r);
  rep.halfDimU = static_cast<Int>(r) * n * nPrime / 2;
  rep.bottomLhs = rep.pn.b + rep.pnPrime.b + rep.halfDimU;
  rep.bottomRhs = rep.pN.b;
  rep.topLhs = rep.pn.tTilde + rep.pnPrime.tTilde + rep.halfDimU;
  rep.topRhs = rep.pN.tTilde - 1;
  rep.bottomHolds = rep.bottomLhs == rep.bottomRhs;
  rep.topHolds = rep.topLhs == rep.topRhs;
  return rep;
}

AqlDegree aqlLowestDegree(int u, int v) {
  if (u < 1 || v < 1) raise(ErrorCode::InvalidArgument, "u and v must be positive");
  AqlDegree a;
  a.u = u;
  a.v = v;
  const Int N = static_cast<Int>(u) * v;
  const Int num = N * (u - 1) * (v - 1);
  a.integral = num % 4 == 0;
  a.degree = static_cast<Int>(v) * (static_cast<Int>(u) * u / 4) + (a.integral ? num / 4 : 0);
  a.bottomDegree = N * N / 4;
  return a;
}

}  // namespace rscrit

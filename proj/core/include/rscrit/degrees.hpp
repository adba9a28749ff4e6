#pragma once

#include "rscrit/rational.hpp"

namespace rscrit {

struct DegreeProfile {
  int n = 1;
  int r = 1;
  Int b = 0;       // bottom degree
  Int t = 0;       // top degree
  Int tTilde = 0;  // t + r - 1
};

DegreeProfile degreeProfile(int n, int r);

struct DegreeIdentityReport {
  DegreeProfile pn, pnPrime, pN;
  Int halfDimU = 0;  // r * n * n' / 2
  Int bottomLhs = 0, bottomRhs = 0;
  Int topLhs = 0, topRhs = 0;
  bool bottomHolds = false;
  bool topHolds = false;
};

// b_n + b_n' + r n n'/2 = b_N and t~_n + t~_n' + r n n'/2 = t~_N - 1.
DegreeIdentityReport degreeIdentities(int n, int nPrime, int r);

struct AqlDegree {
  int u = 1;
  int v = 1;
  Int degree = 0;
  bool integral = true;
  Int bottomDegree = 0;  // b_N for r = 1
};

// v floor(u^2/4) + N(u-1)(v-1)/4 with N = uv.
AqlDegree aqlLowestDegree(int u, int v);

}  // namespace rscrit

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rscrit/rscrit.hpp"

namespace rscrit::cli {

namespace {

using json = nlohmann::ordered_json;

struct Malformed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LoadedWeight {
  int n = 1;
  int r = 1;
  FundamentalCoords fundamental;
  std::optional<Weight> weight;  // absent when the fundamental data is not integral
  json source;
};

json fractions(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(toString(q));
  return a;
}

json weightJson(const Weight& w) { return json{{"n", w.n}, {"r", w.r}, {"standard", w.coords}}; }

json permsJson(const KostantElement& k) {
  return json{{"N", k.N}, {"blocks", k.blocks}, {"perms", k.perms}, {"lengths", lengths(k)}};
}

json criticalJson(const CriticalSet& c) {
  json pts = json::array();
  for (Int x : c.doubledPoints) pts.push_back(doubledToString(x));
  return json{{"parityDoubled", c.parityDoubled}, {"doubledPoints", c.doubledPoints}, {"points", pts},
              {"cardinality", c.doubledPoints.size()}};
}

json hodgeJson(const HodgeSet& h) {
  json per = json::array();
  for (const auto& v : h.pairs) {
    json a = json::array();
    for (const auto& [p, q] : v) a.push_back(json::array({p, q}));
    per.push_back(a);
  }
  return json{{"purityWeight", h.purityWeight}, {"pairs", per}};
}

json oracleJson(const OracleReport& r) {
  json j{{"subject", r.subject}, {"agreed", r.agreed}};
  if (!r.agreed) {
    json c = json::object();
    for (const auto& [k, v] : r.counterexample) c[k] = v;
    j["counterexample"] = c;
  }
  return j;
}

Int getInt(const json& j, const char* what) {
  if (!j.is_number_integer()) throw Malformed(std::string(what) + " must be an integer");
  return j.get<Int>();
}

LoadedWeight loadWeight(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Malformed("cannot open weight file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Malformed("invalid JSON in '" + path + "': " + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("r"))
    throw Malformed("weight file '" + path + "' needs fields n and r");
  LoadedWeight lw;
  lw.source = j;
  const Int n = getInt(j["n"], "n");
  const Int r = getInt(j["r"], "r");
  if (n < 1 || r < 1 || n > 64 || r > 64) throw Malformed("n and r must lie in 1..64");
  lw.n = static_cast<int>(n);
  lw.r = static_cast<int>(r);
  auto intRows = [&](const json& rows, std::size_t len, const char* what) {
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(lw.r))
      throw Malformed(std::string(what) + " must be an array of r vectors");
    std::vector<IntVec> out;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != len)
        throw Malformed(std::string(what) + " vectors have the wrong length");
      IntVec v;
      for (const auto& x : row) v.push_back(getInt(x, what));
      out.push_back(std::move(v));
    }
    return out;
  };
  try {
    if (j.contains("standard")) {
      Weight w = makeWeight(lw.n, lw.r, intRows(j["standard"], n, "standard"));
      lw.fundamental = toFundamental(w);
      lw.weight = w;
    } else if (j.contains("fundamental")) {
      const json& f = j["fundamental"];
      if (!f.is_object() || !f.contains("a") || !f.contains("d"))
        throw Malformed("fundamental needs fields a and d");
      auto a = intRows(f["a"], n - 1, "a");
      if (!f["d"].is_array() || f["d"].size() != static_cast<std::size_t>(lw.r))
        throw Malformed("d must be an array of r fraction strings");
      std::vector<Rational> d;
      for (const auto& x : f["d"]) {
        if (x.is_number_integer()) d.emplace_back(x.get<Int>());
        else if (x.is_string()) d.push_back(parseRational(x.get<std::string>()));
        else throw Malformed("d entries must be fraction strings");
      }
      lw.fundamental = makeFundamental(lw.n, std::move(a), std::move(d));
      if (isIntegral(lw.fundamental, lw.n)) lw.weight = fromFundamental(lw.fundamental, lw.n, lw.r);
    } else {
      throw Malformed("weight file needs a standard or fundamental field");
    }
  } catch (const Error& e) {
    throw Malformed(e.what());
  }
  return lw;
}

const Weight& integralWeight(const LoadedWeight& lw, const char* name) {
  if (!lw.weight) raise(ErrorCode::NonIntegralResult, std::string(name) + " is not an integral weight");
  return *lw.weight;
}

struct Context {
  bool withOracle = false;
  json oracle = json::array();
  bool oracleFailed = false;

  void add(const OracleReport& r) {
    oracle.push_back(oracleJson(r));
    if (!r.agreed) oracleFailed = true;
  }
  void skip(const std::string& subject, const std::string& why) {
    oracle.push_back(json{{"subject", subject}, {"skipped", why}});
  }
};

json cmdAnalyzeWeight(const LoadedWeight& lw, Context& ctx) {
  json res;
  res["n"] = lw.n;
  res["r"] = lw.r;
  const auto& f = lw.fundamental;
  res["fundamental"] = json{{"a", f.a}, {"d", fractions(f.d)}, {"rLambda", fractions(f.rLambda)}};
  const bool integral = isIntegral(f, lw.n);
  res["integral"] = integral;
  if (!lw.weight) {
    bool dominant = true;
    for (const auto& a : f.a)
      for (Int x : a) dominant = dominant && x >= 1;
    bool algebraic = std::all_of(f.d.begin(), f.d.end(), [&](const Rational& q) { return q == f.d[0]; });
    res["dominant"] = dominant;
    res["algebraic"] = algebraic;
    res["pure"] = false;
    return res;
  }
  const Weight& w = *lw.weight;
  res["standard"] = w.coords;
  res["dominant"] = isDominant(w);
  res["algebraic"] = isAlgebraic(w);
  const bool pure = isPure(w);
  res["pure"] = pure;
  res["dual"] = dualWeight(w).coords;
  if (pure) {
    auto c = cuspidalParams(w);
    res["cuspidal"] = json{{"ell", c.ell}, {"motivicWeight", c.motivicWeight},
                           {"purityWeightDoubled", c.purityWeightDoubled},
                           {"d", doubledToString(c.purityWeightDoubled)}};
    res["hodgeEff"] = hodgeJson(hodgeEff(w));
  }
  if (ctx.withOracle) ctx.add(checkRoundTrip(w));
  return res;
}

json cmdKostant(int N, int n, bool list, bool genfun, Context& ctx) {
  auto reps = kostantReps(N, n);
  json res{{"N", N}, {"n", n}, {"nPrime", N - n}, {"count", reps.size()}};
  if (list) {
    json a = json::array();
    for (const auto& p : reps) a.push_back(json{{"perm", p}, {"length", permLength(p)}});
    res["elements"] = a;
  }
  if (genfun) res["genfun"] = lengthGeneratingFunction(reps);
  if (ctx.withOracle) {
    if (N <= 10) ctx.add(checkKostant(N, n));
    else ctx.skip("bruteKostant", "N > 10");
  }
  return res;
}

json balancedJson(const BalancedSearchResult& b) {
  json res{{"status", statusName(b.status)}, {"lengths", b.lengths}};
  json coll = json::array();
  for (const auto& c : b.collisions) coll.push_back(c ? json::array({c->first, c->second}) : json());
  res["collisions"] = coll;
  if (b.element) res["element"] = permsJson(*b.element);
  if (b.dominantLambda) res["dominantLambda"] = b.dominantLambda->coords;
  return res;
}

void addBruteBalanced(const Weight& mu, const Weight& mup, Context& ctx) {
  if (!ctx.withOracle) return;
  if (mu.n + mup.n <= 9) ctx.add(bruteBalanced(mu, mup));
  else ctx.skip("bruteBalanced", "N > 9");
}

json cmdBalanced(const Weight& mu, const Weight& mup, bool requireBalanced, Context& ctx, int& exitCode) {
  auto b = findBalanced(mu, mup);
  json res = balancedJson(b);
  if (cuspidalWidth(mu, mup) > 0) {
    auto q = regimeQuantities(mu, mup);
    json pt = json::array();
    for (Int p : q.pTildeDoubled) pt.push_back(doubledToString(p));
    json reg = json::array();
    for (auto r : predictRegimes(q)) reg.push_back(regimeName(r));
    res["regime"] = json{{"pTilde", pt}, {"aTilde", doubledToString(q.aTildeDoubled)}, {"predicted", reg}};
  }
  addBruteBalanced(mu, mup, ctx);
  if (requireBalanced && b.status != BalancedStatus::Balanced) exitCode = 2;
  return res;
}

json cmdCritical(const Weight& mu, const Weight& mup, bool motivic, bool automorphic, bool scan,
                 std::optional<int> eps0, Context& ctx) {
  json res;
  const Int gap = degreeGapDoubled(mu, mup);
  res["width"] = cuspidalWidth(mu, mup);
  res["dMinusDPrime"] = doubledToString(gap);
  if (automorphic) {
    auto c = criticalSetAutomorphic(mu, mup);
    const Int shift = sShiftDoubled(mu, mup);
    res["automorphic"] = criticalJson(c);
    res["sShift"] = doubledToString(shift);
    res["shifted"] = criticalJson(shiftCriticalSet(c, shift));
    if (ctx.withOracle) ctx.add(checkCriticalAutomorphic(mu, mup));
  }
  if (motivic) {
    auto h = hodgeTensor(mu, mup);
    res["hodgeTensor"] = hodgeJson(h);
    res["motivic"] = criticalJson(criticalSetMotivic(h));
    if (ctx.withOracle) ctx.add(checkCriticalMotivic(h));
  }
  if (scan) {
    Int big = 0;
    for (const auto* w : {&mu, &mup})
      for (const auto& b : w->coords)
        for (Int x : b) big = std::max(big, x < 0 ? -x : x);
    const Int R = 4 * (big + mu.n + mup.n + 4);
    auto pts = gammaPoleScan(mu, mup, gap - R, gap + R, eps0);
    json p = json::array();
    for (Int x : pts) p.push_back(doubledToString(x));
    res["gammaScan"] = json{{"windowDoubled", json::array({gap - R, gap + R})}, {"doubledPoints", pts}, {"points", p}};
  }
  return res;
}

json cmdCombLemma(const Weight& mu, const Weight& mup, Context& ctx) {
  auto rep = combLemma(mu, mup);
  json res{{"cond1", rep.cond1}, {"cond2", rep.cond2}, {"cond3", rep.cond3}, {"consistent", rep.consistent},
           {"status", statusName(rep.status)}, {"width", rep.width},
           {"dMinusDPrime", doubledToString(rep.gapDoubled)},
           {"sShift", doubledToString(sShiftDoubled(mu, mup))}, {"m0", doubledToString(m0Doubled(mu, mup))}};
  if (rep.witness) res["witness"] = permsJson(*rep.witness);
  if (rep.cond3) {
    auto a = archimedeanRatio(mu, mup);
    res["archimedeanRatio"] = json{{"value", toString(a.value)}, {"exponent", a.exponent},
                                   {"perPlace", fractions(a.perPlace)}, {"swapped", a.swapped}};
    if (ctx.withOracle) ctx.add(checkArchimedeanRatio(mu, mup));
  }
  addBruteBalanced(mu, mup, ctx);
  return res;
}

json cmdOddOdd(const Weight& mu, const Weight& mup, int eps0, Context& ctx) {
  auto rep = oddOddChecks(mu, mup);
  json res{{"eps0", eps0},
           {"ellPlus", rep.ellPlus},
           {"effectiveWidth", rep.effectiveWidth},
           {"dMinusDPrime", doubledToString(rep.gapDoubled)},
           {"noCriticalPoints", rep.noCriticalPoints},
           {"critical", criticalJson(rep.criticalEps0[eps0])},
           {"displayWithEllPlus", criticalJson(rep.displayWithEllPlus[eps0])},
           {"displayAgrees", rep.displayWithEllPlus[eps0] == rep.criticalEps0[eps0]},
           {"twoPointPredicted", rep.twoPointPredicted[eps0]},
           {"twoPointActual", rep.twoPointActual[eps0]},
           {"dMinusDPrimeIsMinusHalfN", rep.gapIsMinusHalfN}};
  if (rep.collisionPositions)
    res["collisionPositions"] = json::array({rep.collisionPositions->first, rep.collisionPositions->second});
  if (ctx.withOracle) {
    ctx.add(checkOddOdd(mu, mup, eps0));
    if (rep.gapIsMinusHalfN) {
      if (mu.n + mup.n <= 9) {
        auto found = bruteDominantMakers(mu, mup);
        OracleReport r{"bruteDominantMakers", true, {}};
        for (std::size_t t = 0; t < found.size(); ++t)
          if (!found[t].empty()) {
            r.agreed = false;
            r.counterexample.emplace_back("tau=" + std::to_string(t), permToString(found[t][0]));
          }
        ctx.add(r);
      } else {
        ctx.skip("bruteDominantMakers", "N > 9");
      }
    }
  }
  return res;
}

json profileJson(const DegreeProfile& p) {
  return json{{"n", p.n}, {"r", p.r}, {"b", p.b}, {"t", p.t}, {"tTilde", p.tTilde}};
}

json cmdDegrees(std::optional<int> n, std::optional<int> np, int r, std::optional<int> u, std::optional<int> v,
                Context& ctx) {
  json res;
  if (n) res["profile"] = profileJson(degreeProfile(*n, r));
  if (n && np) {
    res["profilePrime"] = profileJson(degreeProfile(*np, r));
    auto id = degreeIdentities(*n, *np, r);
    res["profileN"] = profileJson(id.pN);
    res["identities"] = json{{"halfDimU", id.halfDimU},
                             {"bottom", json{{"lhs", id.bottomLhs}, {"rhs", id.bottomRhs}, {"holds", id.bottomHolds}}},
                             {"top", json{{"lhs", id.topLhs}, {"rhs", id.topRhs}, {"holds", id.topHolds}}}};
  }
  if (u && v) {
    auto a = aqlLowestDegree(*u, *v);
    auto wr = wUV(*u, *v);
    res["aql"] = json{{"u", a.u}, {"v", a.v}, {"lowestDegree", a.degree}, {"integral", a.integral},
                      {"bottomDegree", a.bottomDegree}, {"belowBottom", a.degree < a.bottomDegree}};
    res["wUV"] = json{{"w", wr.w.perms[0]}, {"wPrime", wr.wPrime.perms[0]}, {"wP", wr.wP},
                      {"length", wr.length}, {"formulaLength", wr.formulaLength},
                      {"formulaIntegral", wr.formulaIntegral}};
    if (ctx.withOracle) {
      OracleReport rep{"wUVLength", true, {}};
      if (wr.formulaIntegral && wr.length != wr.formulaLength) {
        rep.agreed = false;
        rep.counterexample.emplace_back("length", std::to_string(wr.length) + " vs " + std::to_string(wr.formulaLength));
      }
      if (!isKostant(wr.w.perms[0], wr.w.blocks)) {
        rep.agreed = false;
        rep.counterexample.emplace_back("kostant", "w is not a Kostant representative");
      }
      ctx.add(rep);
    }
  }
  if (res.empty()) raise(ErrorCode::InvalidArgument, "degrees needs --n, or --u and --v");
  return res;
}

json cmdHilbert(const IntVec& k, Int m, Context& ctx) {
  Weight w = hilbertWeight(k, m);
  auto c = cuspidalParams(w);
  auto h = hodgeEff(w);
  auto crit = criticalSetMotivic(h);
  const Int k0 = *std::max_element(k.begin(), k.end());
  const Int kmin = *std::min_element(k.begin(), k.end());
  json ell1 = json::array();
  for (const auto& e : c.ell) ell1.push_back(e[0]);
  json res{{"weight", weightJson(w)},
           {"cuspidal", json{{"ell", c.ell}, {"motivicWeight", c.motivicWeight},
                             {"purityWeightDoubled", c.purityWeightDoubled}}},
           {"cuspidalParameter", ell1},
           {"hodge", hodgeJson(h)},
           {"critical", criticalJson(crit)},
           {"expectedOpenInterval", json::array({doubledToString(k0 - kmin), doubledToString(k0 + kmin)})}};
  if (ctx.withOracle) ctx.add(checkCriticalMotivic(h));
  return res;
}

void flattenText(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flattenText(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  if (j.is_array()) {
    bool nested = std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_object(); });
    if (nested) {
      for (std::size_t i = 0; i < j.size(); ++i) flattenText(j[i], prefix + "[" + std::to_string(i) + "]", out);
      return;
    }
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Highest weights, Kostant representatives and critical sets for Rankin-Selberg L-functions",
               "rscrit"};
  app.fallthrough();
  app.require_subcommand(1);

  bool withOracle = false;
  std::string format = "json";
  app.add_flag("--with-oracle", withOracle, "Cross-check results against brute-force oracles");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string wfile, mufile, mupfile;
  auto* analyze = app.add_subcommand("analyze-weight", "Bases, predicates and cuspidal data of a weight");
  analyze->add_option("--weight,weight", wfile, "Weight JSON file")->required();

  int kN = 0, kn = 0;
  bool kList = false, kCount = false, kGen = false;
  auto* kost = app.add_subcommand("kostant", "Enumerate Kostant representatives of a maximal parabolic");
  kost->add_option("--N", kN, "Degree N")->required();
  kost->add_option("--n", kn, "First block size n")->required();
  kost->add_flag("--list", kList, "List the elements");
  kost->add_flag("--count", kCount, "Report the count");
  kost->add_flag("--genfun", kGen, "Report the length generating function");

  auto addPair = [&](CLI::App* sub) {
    sub->add_option("--mu", mufile, "Weight JSON for GL(n)")->required();
    sub->add_option("--mup", mupfile, "Weight JSON for GL(n')")->required();
  };
  bool requireBalanced = false;
  auto* bal = app.add_subcommand("balanced", "Find the Kostant element making mu (x) mu' dominant");
  addPair(bal);
  bal->add_flag("--require-balanced", requireBalanced, "Exit with status 2 unless the element is balanced");

  bool cMot = false, cAut = false, cScan = false;
  std::optional<int> cEps0;
  auto* crit = app.add_subcommand("critical", "Critical sets of L(s, sigma x sigma'^v)");
  addPair(crit);
  crit->add_flag("--motivic", cMot, "Critical set from the Hodge types");
  crit->add_flag("--automorphic", cAut, "Critical set from the cuspidal width");
  crit->add_flag("--gamma-scan", cScan, "Regular points of the Gamma factors");
  crit->add_option("--eps0", cEps0, "Sign parity for odd x odd pairs")->check(CLI::IsMember({0, 1}));

  auto* comb = app.add_subcommand("comblemma", "Evaluate the three equivalent conditions");
  addPair(comb);

  int oEps0 = 0;
  auto* odd = app.add_subcommand("oddodd", "Odd x odd critical sets and collision check");
  addPair(odd);
  odd->add_option("--eps0", oEps0, "eps + eps' mod 2")->required()->check(CLI::IsMember({0, 1}));

  std::optional<int> dn, dnp, du, dv;
  int dr = 1;
  auto* deg = app.add_subcommand("degrees", "Cohomological degree bookkeeping");
  deg->add_option("--n", dn, "Rank n")->check(CLI::PositiveNumber);
  deg->add_option("--np", dnp, "Rank n'")->check(CLI::PositiveNumber);
  deg->add_option("--r", dr, "Field degree")->check(CLI::PositiveNumber);
  deg->add_option("--u", du, "Block size u of the residual element")->check(CLI::PositiveNumber);
  deg->add_option("--v", dv, "Block count v of the residual element")->check(CLI::PositiveNumber);

  IntVec hk;
  Int hm = 0;
  auto* hil = app.add_subcommand("hilbert", "Hilbert modular pipeline for weights k and twist m");
  hil->add_option("--k", hk, "Weights k_tau")->required()->delimiter(',');
  hil->add_option("--m", hm, "Twist m")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  }

  Context ctx;
  ctx.withOracle = withOracle;
  json inputs = json::object();
  json results;
  int exitCode = 0;
  std::string command;

  auto loadPair = [&]() {
    auto mu = loadWeight(mufile);
    auto mup = loadWeight(mupfile);
    inputs["mu"] = mu.source;
    inputs["mup"] = mup.source;
    return std::make_pair(mu, mup);
  };

  try {
    if (*analyze) {
      command = "analyze-weight";
      auto lw = loadWeight(wfile);
      inputs["weight"] = lw.source;
      results = cmdAnalyzeWeight(lw, ctx);
    } else if (*kost) {
      command = "kostant";
      inputs = json{{"N", kN}, {"n", kn}};
      if (kN < 2 || kn < 1 || kn >= kN) throw Malformed("need 1 <= n < N");
      if (kN > 12) throw Malformed("enumeration limited to N <= 12");
      if (!kList && !kGen) kCount = true;
      results = cmdKostant(kN, kn, kList, kGen, ctx);
    } else if (*bal) {
      command = "balanced";
      auto [mu, mup] = loadPair();
      results = cmdBalanced(integralWeight(mu, "mu"), integralWeight(mup, "mu'"), requireBalanced, ctx, exitCode);
    } else if (*crit) {
      command = "critical";
      auto [mu, mup] = loadPair();
      if (!cMot && !cAut && !cScan) cAut = true;
      if (cEps0) inputs["eps0"] = *cEps0;
      results = cmdCritical(integralWeight(mu, "mu"), integralWeight(mup, "mu'"), cMot, cAut, cScan, cEps0, ctx);
    } else if (*comb) {
      command = "comblemma";
      auto [mu, mup] = loadPair();
      results = cmdCombLemma(integralWeight(mu, "mu"), integralWeight(mup, "mu'"), ctx);
    } else if (*odd) {
      command = "oddodd";
      auto [mu, mup] = loadPair();
      inputs["eps0"] = oEps0;
      results = cmdOddOdd(integralWeight(mu, "mu"), integralWeight(mup, "mu'"), oEps0, ctx);
    } else if (*deg) {
      command = "degrees";
      if (dn) inputs["n"] = *dn;
      if (dnp) inputs["np"] = *dnp;
      inputs["r"] = dr;
      if (du) inputs["u"] = *du;
      if (dv) inputs["v"] = *dv;
      if (dnp && !dn) throw Malformed("--np needs --n");
      if (du.has_value() != dv.has_value()) throw Malformed("--u and --v go together");
      results = cmdDegrees(dn, dnp, dr, du, dv, ctx);
    } else if (*hil) {
      command = "hilbert";
      inputs = json{{"k", hk}, {"m", hm}};
      results = cmdHilbert(hk, hm, ctx);
    }
  } catch (const Malformed& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidArgument) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
    err << "error: " << e.what() << "\n";
    json report{{"command", command}, {"inputs", inputs},
                {"error", json{{"code", errorCodeName(e.code())}, {"message", e.what()}}}};
    if (format == "text") flattenText(report, "", out);
    else out << report.dump(2) << "\n";
    return 2;
  }

  json report{{"command", command}, {"inputs", inputs}, {"results", results}};
  if (withOracle) report["oracle"] = ctx.oracle;
  if (format == "text") flattenText(report, "", out);
  else out << report.dump(2) << "\n";
  if (ctx.oracleFailed) err << "warning: an oracle disagreed with the primary computation\n";
  if (exitCode == 2) err << "error: no balanced Kostant representative\n";
  return exitCode;
}

}  // namespace rscrit::cli

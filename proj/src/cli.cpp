#include "vecpic/cli.hpp"

#include "vecpic/json_io.hpp"
#include "vecpic/vecpic.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace vecpic {

namespace {

constexpr std::int64_t kDefaultGridLimit = 10000;

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::int64_t size() const { return hi - lo + 1; }
};

std::int64_t parseInteger(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw ValidationError(what + ": not an integer: " + s);
  }
  if (used != s.size()) throw ValidationError(what + ": not an integer: " + s);
  return v;
}

// "a" or "a:b", inclusive
Range parseRange(const std::string& s, const std::string& flag) {
  const auto colon = s.find(':');
  Range r;
  if (colon == std::string::npos) {
    r.lo = r.hi = parseInteger(s, flag);
  } else {
    r.lo = parseInteger(s.substr(0, colon), flag);
    r.hi = parseInteger(s.substr(colon + 1), flag);
  }
  if (r.hi < r.lo) throw ValidationError(flag + ": empty range " + s);
  if (r.size() > 1000000) throw ValidationError(flag + ": range too wide");
  return r;
}

std::int64_t gridLimit() {
  const char* env = std::getenv("VECPIC_GRID_LIMIT");
  if (!env || !*env) return kDefaultGridLimit;
  const std::int64_t v = parseInteger(env, "VECPIC_GRID_LIMIT");
  if (v < 1) throw ValidationError("VECPIC_GRID_LIMIT must be positive");
  return v;
}

Json exponentsJson(const Exponents4& e) { return Json::array({e[0], e[1], e[2], e[3]}); }

Json contextJson(const NumericalContext& c) { return {{"r", c.r}, {"d", c.d}, {"g", c.g}}; }

Json invariantsJson(const NumericalContext& c) {
  Json out = contextJson(c);
  out["n"] = c.n_rd;
  out["v"] = c.v_rdg;
  out["k"] = c.k_rdg;
  out["chi"] = c.chi();
  Json w = Json::object();
  const auto weights = resWeights(c);
  for (std::size_t i = 0; i < 4; ++i) w[kLambdaNames[i]] = weights[i];
  out["resWeights"] = w;
  out["resImageGenerator"] = resImageGenerator(c);
  const auto xt = xiThetaBasis(c);
  out["xi"] = exponentsJson(xt.xi);
  out["theta"] = exponentsJson(xt.theta);
  out["alpha"] = xt.alpha;
  out["beta"] = xt.beta;
  out["poincareExists"] = poincareBundleExists(c);
  return out;
}

Json boundaryJson(const NumericalContext& c) {
  Json out = contextJson(c);
  Json list = Json::array();
  for (const auto& b : boundaryIndices(c)) {
    Json e{{"symbol", b.symbol()}, {"i", b.i}, {"j", b.j}, {"extremal", b.extremal}};
    if (b.i == 0) {
      e["multidegree"] = nullptr;
    } else {
      const auto [d1, d2] = genericMultidegree(c, b);
      e["multidegree"] = Json::array({d1, d2});
    }
    list.push_back(e);
  }
  out["count"] = list.size();
  out["indices"] = list;
  return out;
}

Json poincareJson(const NumericalContext& c) { return {{"exists", poincareBundleExists(c)}}; }

Json picardJson(const StackId& s, bool withPresentation) {
  const auto p = picardPresentation(s);
  const auto inv = p.invariants();
  Json out{{"freeRank", inv.freeRank}, {"invariantFactors", Json::array()}};
  for (const auto& f : inv.torsion) out["invariantFactors"].push_back(bigToJson(f));
  if (withPresentation) {
    out["generators"] = p.generators;
    Json rows = Json::array();
    for (std::size_t i = 0; i < p.relations.rows(); ++i) {
      Json row = Json::array();
      for (const auto& x : p.relations.row(i)) row.push_back(bigToJson(x));
      rows.push_back(row);
    }
    out["relations"] = rows;
  }
  return out;
}

Json intersectJson(const NumericalContext& c, const IndependenceResult& res) {
  Json out = contextJson(c);
  out["verdict"] = res.verdict;
  out["size"] = res.families.size();
  out["determinant"] = res.verdict ? bigToJson(res.determinant) : Json(nullptr);
  if (!res.verdict) out["failure"] = res.failure;
  return out;
}

Json matrixJson(const IndependenceResult& res) {
  Json out{{"rows", Json::array()}, {"columns", Json::array()}, {"entries", Json::array()}};
  for (const auto& f : res.families) out["rows"].push_back(f.name());
  for (const auto& b : res.columns) out["columns"].push_back(b.symbol());
  for (const auto& row : res.entries) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e ? Json(*e) : Json(nullptr));
    out["entries"].push_back(r);
  }
  return out;
}

Json tautJson(std::int64_t r, long long m, long long n, long long l) {
  if (std::llabs(m) > 1000000 || std::llabs(n) > 1000000 || l > 1000) throw DomainError("taut parameters too large");
  const auto ctx = makeContext(r, 0, 2);
  const auto e = expressLambda(ctx, m, n, l);
  const auto sym = lambdaClosedForm(m, n, l);
  Json out{{"r", r}, {"m", m}, {"n", n}, {"l", l}};
  Json lam = Json::object(), symLam = Json::object();
  for (std::size_t k = 0; k < 4; ++k) {
    lam[kLambdaNames[k]] = rationalToJson(e.lambda[k]);
    symLam[kLambdaNames[k]] = sym.lambda[k].str({"r"});
  }
  out["lambda"] = lam;
  out["boundary"] = rationalToJson(e.boundary);
  out["symbolic"] = {{"lambda", symLam}, {"boundary", sym.boundary.str({"r"})}};
  return out;
}

Json slopeEntries(const std::vector<SlopeEntry>& v) {
  Json out = Json::array();
  for (const auto& e : v)
    out.push_back({{"m1", e.m1}, {"m2", e.m2}, {"bound", rationalToJson(e.bound)}, {"target", rationalToJson(e.target)}});
  return out;
}

Json hstabJson(TwoComponentConfig cfg, std::optional<std::int64_t> twist) {
  cfg.require();
  const auto rep = isHSemistableWitness(cfg);
  cfg.n = twist.value_or(rep.n0);
  const auto chi = chiValues(cfg);
  Json out{{"g", cfg.genus()},
           {"omega", Json::array({cfg.omega1(), cfg.omega2(), cfg.omegaC()})},
           {"multidegree", Json::array({cfg.d1(), cfg.d2()})},
           {"summandDegree", cfg.e()},
           {"verdict", rep.verdict == HVerdict::strictlySemistable ? "strictlySemistable" : "inconclusive"},
           {"n0", rep.n0},
           {"vanishingVertices", rep.vanishingVertices},
           {"allNonpositive", rep.allNonpositive},
           {"dominatedPositive", rep.dominatedPositive}};
  Json polys = Json::array();
  for (const auto& P : rep.vertexPolynomials) polys.push_back(P.str({"n", "m"}));
  out["vertexPolynomials"] = polys;
  Json f = Json::array();
  for (const auto& x : chi.F) f.push_back(rationalToJson(x));
  out["n"] = cfg.n;
  out["chi"] = {{"E", rationalToJson(chi.E)},   {"F0", rationalToJson(chi.F0)}, {"G", rationalToJson(chi.G)},
                {"EC1", rationalToJson(chi.EC1)}, {"EC2", rationalToJson(chi.EC2)}, {"F", f}};
  const auto slope = pSlopeCheck(cfg.graph(), cfg.multidegree(), cfg.n);
  out["slope"] = {{"violations", slopeEntries(slope.violations)}, {"saturations", slopeEntries(slope.saturations)}};
  return out;
}

Json readJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

BalanceMode parseMode(const std::string& s) {
  if (s == "all") return BalanceMode::all;
  if (s == "connectedBothSides") return BalanceMode::connectedBothSides;
  if (s == "oneSidedConnected") return BalanceMode::oneSidedConnected;
  throw ValidationError("unknown balance mode " + s);
}

Json balanceJson(const std::string& path, BalanceMode mode) {
  const auto doc = parseGraphDocument(readJsonFile(path));
  if (!doc.multidegree) throw ValidationError(path + ": the document has no multidegree");
  Json saturated = Json::array();
  for (const auto& z : saturatedSubcurves(doc.graph, *doc.multidegree)) {
    std::string ids;
    for (const auto& id : doc.graph.idsOf(z.mask)) ids += (ids.empty() ? "" : "+") + id;
    saturated.push_back(ids);
  }
  return {{"balanced", isBalanced(doc.graph, *doc.multidegree, mode)}, {"saturated", saturated}};
}

void writeJsonFile(const std::string& path, const Json& j) {
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot write " + path);
  f << j.dump(2) << '\n';
}

// Table form: one "path value" line per leaf, paths joined with '.' and [i].
void flatten(const Json& v, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    if (v.empty()) out.emplace_back(path, "{}");
    for (const auto& [k, x] : v.items()) flatten(x, path.empty() ? k : path + "." + k, out);
  } else if (v.is_array()) {
    if (v.empty()) out.emplace_back(path, "[]");
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", out);
  } else if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    out.emplace_back(path, s.empty() ? "\"\"" : s);
  } else {
    out.emplace_back(path, v.dump());
  }
}

void printTable(const Json& j, std::ostream& out) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
}

Json sweepJson(const std::string& kind, const Range& rs, const Range& ds, const Range& gs, const std::string& stackName) {
  const std::int64_t points = rs.size() * ds.size() * gs.size();
  const std::int64_t limit = gridLimit();
  if (points > limit)
    throw ValidationError("sweep has " + std::to_string(points) + " points, above VECPIC_GRID_LIMIT = " + std::to_string(limit));
  const StackTag tag = parseTag(stackName);
  Json records = Json::array();
  for (std::int64_t r = rs.lo; r <= rs.hi; ++r)
    for (std::int64_t d = ds.lo; d <= ds.hi; ++d)
      for (std::int64_t g = gs.lo; g <= gs.hi; ++g) {
        Json rec{{"r", r}, {"d", d}, {"g", g}};
        try {
          const auto c = makeContext(r, d, g);
          if (kind == "invariants") rec["result"] = invariantsJson(c);
          else if (kind == "boundary") rec["result"] = boundaryJson(c);
          else if (kind == "poincare") rec["result"] = poincareJson(c);
          else if (kind == "picard") rec["result"] = picardJson({tag, c}, false);
          else rec["result"] = intersectJson(c, independenceMatrix(c));
        } catch (const DomainError& e) {
          rec["error"] = e.what();
        }
        records.push_back(rec);
      }
  return {{"kind", kind}, {"points", points}, {"records", records}};
}

}  // namespace

int runCli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Picard groups of moduli stacks of vector bundles on curves", "vecpic_cli"};
  app.require_subcommand(1);
  app.fallthrough();
  bool asTable = false, asJson = false;
  auto* jsonFlag = app.add_flag("--json", asJson, "JSON output (the default)");
  app.add_flag("--table", asTable, "aligned key/value table")->excludes(jsonFlag);

  std::function<Json()> action;
  std::int64_t r = 0, d = 0, g = 0;

  auto addRdg = [&](CLI::App* sub) {
    sub->add_option("--r", r, "rank")->required();
    sub->add_option("--d", d, "degree")->required();
    sub->add_option("--g", g, "genus")->required();
  };

  auto* inv = app.add_subcommand("invariants", "numerical invariants, res weights, Xi and Theta");
  addRdg(inv);
  inv->callback([&] { action = [&] { return invariantsJson(makeContext(r, d, g)); }; });

  auto* bnd = app.add_subcommand("boundary", "boundary divisors with generic multidegrees");
  addRdg(bnd);
  bnd->callback([&] { action = [&] { return boundaryJson(makeContext(r, d, g)); }; });

  auto* poi = app.add_subcommand("poincare", "existence of a Poincare bundle");
  addRdg(poi);
  poi->callback([&] { action = [&] { return poincareJson(makeContext(r, d, g)); }; });

  std::string stackName;
  bool withPresentation = false;
  auto* pic = app.add_subcommand("picard", "Picard group presentation of a stack");
  pic->add_option("--stack", stackName, "Vec, VecBar, VecPss, VecHss, VecPs, VecHs, V, VBar, VPss, VHss, VPs, VHs")->required();
  addRdg(pic);
  pic->add_flag("--presentation", withPresentation, "include generators and relations");
  pic->callback([&] { action = [&] { return picardJson({parseTag(stackName), makeContext(r, d, g)}, withPresentation); }; });

  std::string matrixOut;
  auto* isc = app.add_subcommand("intersect", "test-curve intersection matrix and its verdict");
  addRdg(isc);
  isc->add_option("--matrix-out", matrixOut, "write the full matrix as JSON");
  isc->callback([&] {
    action = [&] {
      const auto c = makeContext(r, d, g);
      const auto res = independenceMatrix(c);
      if (!matrixOut.empty()) writeJsonFile(matrixOut, matrixJson(res));
      return intersectJson(c, res);
    };
  });

  long long tm = 0, tn = 0, tl = 0;
  auto* tau = app.add_subcommand("taut", "Lambda(m,n,l) in the tautological basis");
  tau->add_option("--r", r, "rank")->required();
  tau->add_option("--m", tm)->required();
  tau->add_option("--n", tn)->required();
  tau->add_option("--l", tl)->required();
  tau->callback([&] { action = [&] { return tautJson(r, tm, tn, tl); }; });

  TwoComponentConfig cfg;
  std::optional<std::int64_t> twist;
  auto* hst = app.add_subcommand("hstab", "weight polynomial and H-semistability witness on two components");
  hst->add_option("--g1", cfg.g1)->required();
  hst->add_option("--g2", cfg.g2)->required();
  hst->add_option("--N", cfg.N, "number of nodes")->required();
  hst->add_option("--r", cfg.r)->required();
  hst->add_option("--q", cfg.q, "rank of the stable summands")->required();
  hst->add_option("--d", cfg.d)->required();
  hst->add_option("--n", twist, "twist for the reported Euler characteristics (default n0)");
  hst->callback([&] { action = [&] { return hstabJson(cfg, twist); }; });

  std::string graphPath, modeName = "all";
  auto* bal = app.add_subcommand("balance", "balance check of a dualgraph-v1 document with a multidegree");
  bal->add_option("--graph", graphPath, "dualgraph-v1 JSON file")->required();
  bal->add_option("--mode", modeName, "all, connectedBothSides or oneSidedConnected");
  bal->callback([&] { action = [&] { return balanceJson(graphPath, parseMode(modeName)); }; });

  std::string kind, rRange, dRange, gRange, sweepStack = "VecBar";
  auto* swp = app.add_subcommand("sweep", "run one subcommand over an (r, d, g) grid");
  swp->add_option("--kind", kind, "invariants, boundary, poincare, picard or intersect")
      ->required()
      ->check(CLI::IsMember({"invariants", "boundary", "poincare", "picard", "intersect"}));
  swp->add_option("--r", rRange, "value or lo:hi")->required();
  swp->add_option("--d", dRange, "value or lo:hi")->required();
  swp->add_option("--g", gRange, "value or lo:hi")->required();
  swp->add_option("--stack", sweepStack, "stack tag for kind=picard");
  swp->callback([&] {
    action = [&] { return sweepJson(kind, parseRange(rRange, "--r"), parseRange(dRange, "--d"), parseRange(gRange, "--g"), sweepStack); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    const Json result = action();
    if (asTable) printTable(result, out);
    else out << result.dump() << '\n';
    return 0;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace vecpic

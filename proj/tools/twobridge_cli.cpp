// SPDX-License-Identifier: MIT
//
// Command-line front end: path catalogs, surface invariants, surgery
// classification and the verification sweeps.
//
// Exit status: 0 success, 1 usage error, 2 domain-constraint violation,
// 3 verification mismatch.

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "twobridge/classify.hpp"
#include "twobridge/error.hpp"
#include "twobridge/invariants.hpp"
#include "twobridge/oracle.hpp"
#include "twobridge/paths.hpp"
#include "twobridge/report.hpp"

namespace {

using nlohmann::json;
using namespace twobridge;

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitMismatch = 3;

struct LinkFlags {
  std::optional<i64> r, s;
  std::optional<int> w, u;

  void add(CLI::App* cmd) {
    cmd->add_option("--r", r, "first partial quotient, odd and >= 3");
    cmd->add_option("--s", s, "second partial quotient, odd with |s| >= 3");
    cmd->add_option("--w", w, "w with r = 2w + 1");
    cmd->add_option("--u", u, "u with s = 2u + 1");
  }

  bool given() const { return r || s || w || u; }

  // Normalizes either flag pair to validated (w, u).
  LinkParams resolve() const {
    const bool rs = r || s;
    const bool wu = w || u;
    if (rs && wu) throw CLI::ValidationError("give either --r/--s or --w/--u, not both");
    if (rs) {
      if (!r || !s) throw CLI::ValidationError("--r and --s must be given together");
      return LinkParams::from_rs(*r, *s);
    }
    if (!w || !u) throw CLI::ValidationError("a link is required: --r/--s or --w/--u");
    return LinkParams::from_ws(*w, *u);
  }
};

std::string pair_text(const json& p) {
  if (p.is_null()) return "-";
  return "(" + p[0].dump() + ", " + p[1].dump() + ")";
}

std::string value_text(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float() && v.get<double>() == static_cast<double>(static_cast<i64>(v.get<double>()))) {
    return std::to_string(static_cast<i64>(v.get<double>()));
  }
  return v.dump();
}

std::string csv_cell(const json& v) {
  std::string s = v.is_array() ? v.dump() : value_text(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Writes an array of flat objects as CSV with the given columns.
void write_csv(std::ostream& os, const std::vector<std::string>& columns, const json& rows) {
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      os << (i ? "," : "") << (row.contains(columns[i]) ? csv_cell(row[columns[i]]) : "");
    }
    os << "\n";
  }
}

void emit_json(const std::string& command, const json& input, const json& result) {
  json env = {{"schema_version", kSchemaVersion}, {"command", command}, {"input", input}, {"result", result}};
  std::cout << env.dump(2) << "\n";
}

// ------------------------------------------------------------------ commands

int run_paths(const LinkParams& lp, const std::string& format) {
  const json result = catalog_json(lp.r(), lp.s());
  const json input = {{"r", lp.r()}, {"s", lp.s()}};
  if (format == "json") {
    emit_json("paths", input, result);
    return 0;
  }
  json rows = json::array();
  for (const char* regime : {"D1", "Dinf", "Dt"}) {
    for (const auto& e : result["regimes"][regime]) rows.push_back(e);
  }
  if (format == "csv") {
    write_csv(std::cout, {"name", "regime", "minimal", "edge_count", "labels", "exclusion_reason"}, rows);
    return 0;
  }
  std::cout << "L([" << lp.r() << "," << lp.s() << "])  w=" << lp.w << " u=" << lp.u << "\n";
  for (const char* regime : {"D1", "Dinf", "Dt"}) {
    std::cout << regime << ": " << result["minimal_counts"][regime].get<int>() << " minimal\n";
    for (const auto& e : result["regimes"][regime]) {
      std::cout << "  " << std::left << std::setw(5) << e["name"].get<std::string>() << std::setw(4)
                << e["edge_count"].get<int>() << e["labels"].get<std::string>();
      if (!e["minimal"].get<bool>()) std::cout << "   [excluded: " << e["exclusion_reason"].get<std::string>() << "]";
      std::cout << "\n";
    }
  }
  return 0;
}

struct InvariantFlags {
  std::string family;
  std::optional<i64> alpha, beta;
  i64 n = 0;
  bool swap = false;
  bool closed = false;
};

int run_invariants(const LinkParams& lp, const InvariantFlags& f, const std::string& format) {
  const auto regime = family_regime(f.family);
  if (!regime) throw DomainError("path.name", "unknown path '" + f.family + "'");
  i64 beta = f.beta.value_or(0);
  i64 alpha = 0;
  if (f.alpha) {
    alpha = *f.alpha;
  } else if (*regime == Regime::D1) {
    alpha = beta;  // t = 1 forces alpha = beta
  } else {
    throw CLI::ValidationError("--alpha is required outside D1");
  }
  Weights wt = Weights::make(alpha, beta, f.n);
  SurfaceData d = f.closed ? closed_form(f.family, lp.w, lp.u, alpha, beta, f.n)
                           : assemble(path_edges(f.family, lp.w, lp.u), wt);
  if (f.swap) d = swap_components(d);
  json result = to_json(d);
  result["source"] = f.closed ? "closed_form" : "assembled";
  result["swapped"] = f.swap;
  const json input = {{"r", lp.r()}, {"s", lp.s()}, {"family", f.family}, {"alpha", alpha},
                      {"beta", beta}, {"n", f.n}, {"swap", f.swap}, {"closed_form", f.closed}};
  if (format == "json") {
    emit_json("invariants", input, result);
    return 0;
  }
  json row = result;
  row["r"] = lp.r();
  row["s"] = lp.s();
  const std::vector<std::string> cols = {"family", "r", "s", "alpha", "beta", "n", "i1", "i2",
                                         "slope1", "slope2", "reduced_slope1", "reduced_slope2",
                                         "chi", "b1", "b2", "gprime", "meridional"};
  if (format == "csv") {
    write_csv(std::cout, cols, json::array({row}));
    return 0;
  }
  std::cout << f.family << " on L([" << lp.r() << "," << lp.s() << "]) at alpha=" << alpha << " beta=" << beta
            << " n=" << f.n << (f.swap ? " (components swapped)" : "") << "\n"
            << "  i1, i2            " << d.i1 << ", " << d.i2 << "\n"
            << "  slope on L1       " << pair_text(result["slope1"]) << " = " << value_text(result["reduced_slope1"])
            << "\n"
            << "  slope on L2       " << pair_text(result["slope2"]) << " = " << value_text(result["reduced_slope2"])
            << "\n"
            << "  chi               " << d.chi << "\n"
            << "  circles b1, b2    " << d.b1 << ", " << d.b2 << "\n"
            << "  generalized genus " << value_text(result["gprime"]) << "\n";
  if (d.meridional) std::cout << "  meridional on L2 (not from a non-trivial surgery)\n";
  return 0;
}

struct ClassifyFlags {
  std::optional<std::string> gamma;
  std::optional<std::string> fraction;
  i64 alpha_max = 16;
};

// Link parameters for a fraction, when it is some L([r, s]) in range.
std::optional<LinkParams> link_of_fraction(const Rational& x) {
  for (const auto& e : expansions_as(x, ExpansionPattern::OddOdd)) {
    for (auto [r, s] : {std::pair<i64, i64>{e[0], e[1]}, std::pair<i64, i64>{-e[1], -e[0]}}) {
      if (r >= 3 && (s >= 3 || s <= -3)) return LinkParams::from_rs(r, s);
    }
  }
  return std::nullopt;
}

int run_classify(const LinkFlags& link, const ClassifyFlags& f, const std::string& format) {
  std::optional<LinkParams> lp;
  Rational x;
  if (f.fraction) {
    if (link.given()) throw CLI::ValidationError("give either a link or --fraction, not both");
    x = normalize_link_fraction(Rational::parse(*f.fraction));
    lp = link_of_fraction(x);
  } else {
    lp = link.resolve();
    x = lp->target();
  }
  json input = {{"fraction", x.str()}};
  if (lp) {
    input["r"] = lp->r();
    input["s"] = lp->s();
  }
  json result = {{"fraction", x.str()}, {"link", lp ? to_json(*lp) : json(nullptr)}};
  std::optional<Rational> gamma;
  if (f.gamma) {
    gamma = Rational::parse(*f.gamma);
    input["gamma"] = gamma->str();
  }

  if (!gamma) {
    json red = json::array();
    json gz = json::array();
    if (lp) {
      for (const auto& r : reducible_surgeries(lp->w, lp->u)) red.push_back(to_json(r));
      for (const auto& name : family_names(lp->s_positive())) {
        if (!in_catalog(*lp, name) || family_regime(name) == Regime::Dinf) continue;
        for (const auto& s : genus_zero_solutions(name, lp->w, lp->u, f.alpha_max)) {
          // One witness per family and (beta, n) keeps the listing short.
          bool seen = false;
          for (const auto& g : gz) {
            seen = seen || (g["family"] == name && g["beta"] == s.beta && g["n"] == s.n);
          }
          if (!seen) gz.push_back(to_json(s));
        }
      }
    }
    result["reducible"] = red;
    result["genus_zero"] = gz;
  } else {
    result["surgery"] = lp ? to_json(surgery_knot(lp->w, lp->u, *gamma)) : json(nullptr);
    result["satellite"] = to_json(satellite_candidates(x, *gamma));
  }
  json torus = json::array();
  if (!expansions_as(x, ExpansionPattern::OddOdd).empty()) {
    for (const auto& t : torus_knot_surgeries(x)) {
      if (!gamma || (gamma->is_integer() && gamma->num() == t.gamma)) torus.push_back(to_json(t));
    }
  }
  result["torus_knot_surgeries"] = torus;

  if (format == "json") {
    emit_json("classify", input, result);
    return 0;
  }
  if (format == "csv") {
    json rows = json::array();
    if (result.contains("reducible")) {
      for (const auto& r : result["reducible"]) {
        rows.push_back({{"kind", "Reducible"}, {"gamma1", r["gamma1"]}, {"gamma2", r["gamma2"]},
                        {"detail", r["families"].dump()}});
      }
    }
    if (result.contains("surgery") && !result["surgery"].is_null()) {
      const json& s = result["surgery"];
      rows.push_back({{"kind", s["kind"]}, {"gamma1", s["gamma"]}, {"torus_pair", s["torus_pair"]},
                      {"cable_k", s["cable_k"]}, {"cable_of_core", s["cable_of_core"]},
                      {"cable_of_dual_core", s["cable_of_dual_core"]}, {"mirror", s["mirror"]},
                      {"detail", s["note"]}});
    }
    if (result.contains("satellite")) {
      rows.push_back({{"kind", "Satellite:" + result["satellite"]["status"].get<std::string>()},
                      {"detail", result["satellite"]["note"]}});
    }
    for (const auto& t : torus) {
      rows.push_back({{"kind", "TorusKnotSurgery"}, {"gamma1", t["gamma"]}, {"torus_pair", t["torus_pair"]},
                      {"mirror", t["mirror"]}, {"detail", t["consistency"]}});
    }
    write_csv(std::cout,
              {"kind", "gamma1", "gamma2", "torus_pair", "cable_k", "cable_of_core", "cable_of_dual_core", "mirror",
               "detail"},
              rows);
    return 0;
  }
  std::cout << "L(" << x.str() << ")";
  if (lp) std::cout << " = L([" << lp->r() << "," << lp->s() << "])";
  std::cout << "\n";
  if (result.contains("reducible")) {
    std::cout << "reducible surgeries (gamma1, gamma2), up to component order:\n";
    for (const auto& r : result["reducible"]) {
      std::cout << "  (" << r["gamma1"] << ", " << r["gamma2"] << ")  from " << r["families"].dump() << "\n";
    }
    std::cout << "genus-zero surfaces (alpha <= " << f.alpha_max << "):\n";
    for (const auto& g : result["genus_zero"]) {
      const json& wd = g["witness"];
      std::cout << "  " << g["family"].get<std::string>() << " alpha=" << g["alpha"] << " beta=" << g["beta"]
                << " n=" << g["n"] << ": " << wd["b1"] << " circles of slope " << value_text(wd["reduced_slope1"])
                << " on L1, " << wd["b2"] << " of slope " << value_text(wd["reduced_slope2"]) << " on L2\n";
    }
  }
  if (result.contains("surgery") && !result["surgery"].is_null()) {
    const json& s = result["surgery"];
    std::cout << "surgery " << value_text(input["gamma"]) << " on L2: " << s["kind"].get<std::string>() << "\n";
    if (!s["lens_p"].is_null()) std::cout << "  filled manifold   (" << s["lens_p"] << ", 1) lens space\n";
    if (!s["torus_pair"].is_null()) std::cout << "  torus knot        " << pair_text(s["torus_pair"]) << "\n";
    if (!s["cable_k"].is_null()) std::cout << "  cable             (2, " << s["cable_k"] << ")\n";
    if (!s["cable_of_core"].is_null()) {
      std::cout << "  on C              " << pair_text(s["cable_of_core"]) << "\n"
                << "  on C'             " << pair_text(s["cable_of_dual_core"]) << "\n";
    }
    if (s["mirror"].get<bool>()) std::cout << "  mirror            yes\n";
    if (!s["note"].get<std::string>().empty()) std::cout << "  note              " << s["note"].get<std::string>() << "\n";
  }
  if (result.contains("satellite")) {
    std::cout << "satellite: " << result["satellite"]["status"].get<std::string>() << " ("
              << result["satellite"]["note"].get<std::string>() << ")\n";
  }
  for (const auto& t : torus) {
    std::cout << "torus knot in S^3: gamma=" << t["gamma"] << " gives " << pair_text(t["torus_pair"])
              << (t["mirror"].get<bool>() ? " [mirror]" : "") << " (" << t["consistency"].get<std::string>()
              << ")\n";
  }
  return 0;
}

struct VerifyFlags {
  std::optional<i64> alpha_max;
  std::vector<std::string> families;
  std::vector<std::string> checks = {"genus-zero", "closed-forms", "symmetries"};
};

int run_verify(const VerifyFlags& f, const std::string& format) {
  if (f.alpha_max && *f.alpha_max < 8) {
    std::cerr << "warning: --alpha-max " << *f.alpha_max << " is below the recommended minimum of 8\n";
  }
  auto want = [&](const std::string& c) {
    return std::find(f.checks.begin(), f.checks.end(), c) != f.checks.end();
  };
  json result = json::object();
  std::ostringstream text;
  bool ok = true;
  if (want("genus-zero")) {
    SweepSpec spec = SweepSpec::defaults(f.alpha_max.value_or(64));
    spec.families = f.families;
    const GenusZeroReport r = verify_genus_zero(spec);
    result["genus_zero"] = to_json(r);
    text << to_text(r);
    ok = ok && r.ok();
  }
  if (want("closed-forms")) {
    SweepSpec spec = SweepSpec::defaults(f.alpha_max.value_or(24));
    spec.families = f.families;
    const ClosedFormReport r = verify_closed_forms(spec);
    result["closed_forms"] = to_json(r);
    text << to_text(r);
    ok = ok && r.ok();
  }
  if (want("symmetries")) {
    SweepSpec spec = SweepSpec::defaults(f.alpha_max.value_or(24));
    spec.symmetry_alpha_max = std::min<i64>(spec.alpha_max, 12);
    spec.families = f.families;
    const SymmetryReport r = verify_symmetries(spec);
    result["symmetries"] = to_json(r);
    text << to_text(r);
    ok = ok && r.ok();
  }
  result["ok"] = ok;
  const json input = {{"alpha_max", f.alpha_max ? json(*f.alpha_max) : json(nullptr)},
                      {"families", f.families},
                      {"checks", f.checks}};
  if (format == "json") {
    emit_json("verify", input, result);
  } else if (format == "csv") {
    json rows = json::array();
    for (const char* key : {"genus_zero", "closed_forms", "symmetries"}) {
      if (result.contains(key)) rows.push_back({{"check", key}, {"ok", result[key]["ok"]}});
    }
    write_csv(std::cout, {"check", "ok"}, rows);
  } else {
    std::cout << text.str() << (ok ? "verification passed\n" : "verification FAILED\n");
  }
  return ok ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Essential surfaces and exceptional surgeries of two-bridge links L([r,s])"};
  app.require_subcommand(1);
  app.fallthrough();  // --format may follow the subcommand
  std::string format = "table";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();

  LinkFlags paths_link, inv_link, cls_link;
  auto* paths = app.add_subcommand("paths", "catalog of minimal edge-paths in each diagram");
  paths_link.add(paths);

  InvariantFlags inv;
  auto* invariants = app.add_subcommand("invariants", "slopes, Euler characteristic and genus of a surface");
  inv_link.add(invariants);
  invariants->add_option("--family", inv.family, "path name such as c16 or d26")->required();
  invariants->add_option("--alpha", inv.alpha, "sheets meeting L1 (defaults to beta in D1)");
  invariants->add_option("--beta", inv.beta, "sheets meeting L2 (default 0)");
  invariants->add_option("--n", inv.n, "branching number at t = 1")->capture_default_str();
  invariants->add_flag("--swap", inv.swap, "exchange the components (0 <= t < 1)");
  invariants->add_flag("--closed-form", inv.closed, "evaluate the tabulated closed form instead");

  ClassifyFlags cls;
  auto* classify = app.add_subcommand("classify", "reducible, torus, cable and satellite surgeries");
  cls_link.add(classify);
  classify->add_option("--gamma", cls.gamma, "surgery slope on L2 (integer or p/q)");
  classify->add_option("--fraction", cls.fraction, "link fraction p/q instead of --r/--s");
  classify->add_option("--alpha-max", cls.alpha_max, "bound for listing genus-zero witnesses")
      ->check(CLI::Range(2, 1000))
      ->capture_default_str();

  VerifyFlags ver;
  auto* verify = app.add_subcommand("verify", "brute-force verification sweeps");
  verify->add_option("--alpha-max", ver.alpha_max, "alpha bound (default 64 genus zero, 24 otherwise)")
      ->check(CLI::Range(2, 512));
  verify->add_option("--families", ver.families, "restrict to these families")->delimiter(',');
  verify->add_option("--checks", ver.checks, "genus-zero, closed-forms, symmetries")
      ->delimiter(',')
      ->check(CLI::IsMember({"genus-zero", "closed-forms", "symmetries"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (paths->parsed()) return run_paths(paths_link.resolve(), format);
    if (invariants->parsed()) return run_invariants(inv_link.resolve(), inv, format);
    if (classify->parsed()) return run_classify(cls_link, cls, format);
    if (verify->parsed()) return run_verify(ver, format);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

// reciproca: command-line surface over the group library. Every subcommand
// prints one deterministic record (sorted keys, %.17g floats) so runs are
// byte-comparable in CI.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "reciproca/algebra.hpp"
#include "reciproca/discrete.hpp"
#include "reciproca/dynamics.hpp"
#include "reciproca/hamilton.hpp"
#include "reciproca/kinematics.hpp"
#include "reciproca/metrics.hpp"
#include "reciproca/quaplectic.hpp"
#include "reciproca/reciprocal.hpp"
#include "reciproca/verify.hpp"

namespace {

using namespace reciproca;

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// ----- minimal deterministic JSON value -----

struct Json {
  enum class Kind { number, text, flag, array, object };
  Kind kind = Kind::object;
  double num = 0.0;
  bool b = false;
  std::string str;
  std::vector<Json> arr;
  std::map<std::string, Json> obj;

  static Json number(double v) {
    Json j;
    j.kind = Kind::number;
    j.num = v;
    return j;
  }
  static Json text(std::string s) {
    Json j;
    j.kind = Kind::text;
    j.str = std::move(s);
    return j;
  }
  static Json flag(bool v) {
    Json j;
    j.kind = Kind::flag;
    j.b = v;
    return j;
  }
  static Json array() {
    Json j;
    j.kind = Kind::array;
    return j;
  }
  Json& operator[](const std::string& key) { return obj[key]; }
  void push(Json v) { arr.push_back(std::move(v)); }
};

void escape_to(const std::string& s, std::string& out) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void write_json(const Json& j, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  const std::string pad_in(static_cast<std::size_t>(depth + 1) * 2, ' ');
  switch (j.kind) {
    case Json::Kind::number:
      out += fmt(j.num);
      return;
    case Json::Kind::text:
      escape_to(j.str, out);
      return;
    case Json::Kind::flag:
      out += j.b ? "true" : "false";
      return;
    case Json::Kind::array: {
      if (j.arr.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.arr.size(); ++i) {
        out += pad_in;
        write_json(j.arr[i], out, depth + 1);
        if (i + 1 < j.arr.size()) out += ",";
        out += "\n";
      }
      out += pad + "]";
      return;
    }
    case Json::Kind::object: {
      if (j.obj.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      std::size_t i = 0;
      for (const auto& [key, value] : j.obj) {
        out += pad_in;
        escape_to(key, out);
        out += ": ";
        write_json(value, out, depth + 1);
        if (++i < j.obj.size()) out += ",";
        out += "\n";
      }
      out += pad + "}";
      return;
    }
  }
}

void print_json(const Json& j) {
  std::string out;
  write_json(j, out, 0);
  out += "\n";
  std::fputs(out.c_str(), stdout);
}

template <int N>
Json json_matrix(const Mat<N>& m) {
  Json rows = Json::array();
  for (int i = 0; i < N; ++i) {
    Json row = Json::array();
    for (int j = 0; j < N; ++j) row.push(Json::number(m(i, j)));
    rows.push(row);
  }
  return rows;
}

Json json_frame(const FrameVector& z) {
  Json a = Json::array();
  a.push(Json::number(z.dt));
  a.push(Json::number(z.dq));
  a.push(Json::number(z.dp));
  a.push(Json::number(z.de));
  return a;
}

int emit_error_record(const std::string& command, const error& e) {
  Json rec;
  rec["command"] = Json::text(command);
  rec["status"] = Json::text("error");
  Json err;
  err["code"] = Json::text(errc_name(e.code()));
  err["message"] = Json::text(e.what());
  rec["error"] = err;
  print_json(rec);
  return 1;
}

// Parses "a,b,c" into doubles; every component must be finite.
bool parse_list(const std::string& s, std::vector<double>& out) {
  out.clear();
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::string piece =
        s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      std::size_t used = 0;
      const double v = std::stod(piece, &used);
      if (used != piece.size() || !std::isfinite(v)) return false;
      out.push_back(v);
    } catch (...) {
      return false;
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return !out.empty();
}

int usage_error(const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  return 2;
}

// ----- subcommand payload helpers -----

Json inputs_rates(const std::string& group, const RateParams& p, const Constants& k) {
  Json in;
  in["group"] = Json::text(group);
  in["v"] = Json::number(p.v);
  in["f"] = Json::number(p.f);
  in["r"] = Json::number(p.r);
  in["a"] = Json::number(p.a);
  in["c"] = Json::number(k.c);
  in["b"] = Json::number(k.b);
  return in;
}

Json json_params(const RateParams& p) {
  Json out;
  out["v"] = Json::number(p.v);
  out["f"] = Json::number(p.f);
  out["r"] = Json::number(p.r);
  out["a"] = Json::number(p.a);
  return out;
}

struct TransformArgs {
  std::string group;
  double v = 0.0, f = 0.0, r = 0.0, a = 0.0;
  double c = 1.0, b = 1.0, hbar = 1.0;
  std::string frame;
};

int run_transform(const TransformArgs& args) {
  std::vector<double> frame_vals;
  const bool with_frame = !args.frame.empty();
  if (with_frame && (!parse_list(args.frame, frame_vals) || frame_vals.size() != 4))
    return usage_error("--frame expects four comma-separated finite numbers");
  try {
    const Constants k = make_constants(args.c, args.b, args.hbar);
    const RateParams p{args.v, args.f, args.r, args.a};
    Mat<4> m;
    bool symmetric_applies = true;
    if (args.group == "lorentz") {
      if (p.f != 0.0 || p.r != 0.0 || p.a != 0.0)
        fail(errc::invalid_argument, "velocity boosts take only --v");
      m = gamma4(p.v, k);
    } else if (args.group == "hamilton") {
      m = hamilton_element(p);
      symmetric_applies = false;
    } else if (args.group == "su11") {
      if (p.a != 0.0) fail(errc::nonzero_u1_param, "su11 transforms take a = 0; use u11");
      m = xi_su11(p.v, p.f, p.r, k);
    } else if (args.group == "u11") {
      m = xi_u11(p, k);
    } else {
      if (p.a != 0.0) fail(errc::nonzero_u1_param, "upsilon transforms take a = 0");
      m = limit_b(p.v, p.f, p.r, k);
      symmetric_applies = false;
    }

    Json rec;
    rec["command"] = Json::text("transform");
    rec["inputs"] = inputs_rates(args.group, p, k);
    Json outputs;
    outputs["matrix"] = json_matrix(m);
    if (with_frame) {
      const FrameVector z{frame_vals[0], frame_vals[1], frame_vals[2], frame_vals[3]};
      rec["inputs"]["frame"] = json_frame(z);
      outputs["frame_out"] = json_frame(apply(m, z));
    }
    rec["outputs"] = outputs;

    Json residuals;
    const double symp = congruence_residual(zeta(), m);
    residuals["symplectic"] = Json::number(symp);
    double worst = symp;
    if (symmetric_applies) {
      const double symm = congruence(MetricKind::born_green, m, k);
      residuals["symmetric"] = Json::number(symm);
      worst = std::max(worst, symm);
    }
    rec["residuals"] = residuals;
    rec["status"] = Json::text(worst <= 1e-9 ? "pass" : "fail");
    print_json(rec);
    return worst <= 1e-9 ? 0 : 1;
  } catch (const error& e) {
    return emit_error_record("transform", e);
  }
}

struct ComposeArgs {
  std::string group;
  std::string first, second;
  double c = 1.0, b = 1.0;
};

RateParams params_from_list(const std::vector<double>& vals) {
  RateParams p{vals[0], vals[1], vals[2], 0.0};
  if (vals.size() == 4) p.a = vals[3];
  return p;
}

int run_compose(const ComposeArgs& args) {
  std::vector<double> first_vals, second_vals;
  if (!parse_list(args.first, first_vals) || !parse_list(args.second, second_vals))
    return usage_error("--first/--second expect comma-separated finite numbers");
  try {
    const Constants k = make_constants(args.c, args.b);
    Json rec;
    rec["command"] = Json::text("compose");
    Json in;
    in["group"] = Json::text(args.group);
    in["first"] = Json::text(args.first);
    in["second"] = Json::text(args.second);
    in["c"] = Json::number(k.c);
    in["b"] = Json::number(k.b);
    rec["inputs"] = in;
    Json outputs;
    Json residuals;
    double worst = 0.0;

    if (args.group == "lorentz") {
      if (first_vals.size() != 1 || second_vals.size() != 1)
        return usage_error("lorentz composition takes a single velocity per side");
      const double v12 = velocity_add(first_vals[0], second_vals[0], k);
      outputs["v"] = Json::number(v12);
      worst = max_abs_diff(lorentz2(second_vals[0], k) * lorentz2(first_vals[0], k),
                           lorentz2(v12, k));
      residuals["matrix"] = Json::number(worst);
    } else {
      if (first_vals.size() < 3 || first_vals.size() > 4 || second_vals.size() < 3 ||
          second_vals.size() > 4)
        return usage_error("rate composition takes v,f,r or v,f,r,a per side");
      const RateParams r1 = params_from_list(first_vals);
      const RateParams r2 = params_from_list(second_vals);
      if (args.group == "hamilton") {
        const RateParams sum = hamilton_compose(r1, r2);
        outputs["params"] = json_params(sum);
        worst = max_abs_diff(hamilton_element(r2) * hamilton_element(r1),
                             hamilton_element(sum));
        residuals["matrix"] = Json::number(worst);
      } else if (args.group == "su11") {
        const RateParams sum = rate_add(r1, r2, k);
        outputs["params"] = json_params(sum);
        outputs["w2"] = Json::number(rate_w2(sum, k));
        // The law saturates on the rate boundary where no boost matrix
        // exists, so the cross-check is reported only inside the chart.
        try {
          worst = max_abs_diff(xi_su11(r2.v, r2.f, r2.r, k) * xi_su11(r1.v, r1.f, r1.r, k),
                               xi_su11(sum.v, sum.f, sum.r, k));
          residuals["matrix"] = Json::number(worst);
        } catch (const error&) {
          outputs["note"] = Json::text("matrix residual omitted: parameters on the rate boundary");
        }
      } else if (args.group == "u11") {
        const RateParams sum = u11_extract(xi_u11(r2, k) * xi_u11(r1, k), k);
        outputs["params"] = json_params(sum);
        outputs["w2"] = Json::number(rate_w2(sum, k));
        worst = max_abs_diff(xi_u11(r2, k) * xi_u11(r1, k), xi_u11(sum, k));
        residuals["matrix"] = Json::number(worst);
      } else {
        return usage_error("unknown composition group");
      }
    }
    rec["outputs"] = outputs;
    rec["residuals"] = residuals;
    rec["status"] = Json::text(worst <= 1e-9 ? "pass" : "fail");
    print_json(rec);
    return worst <= 1e-9 ? 0 : 1;
  } catch (const error& e) {
    return emit_error_record("compose", e);
  }
}

int run_add_rates(const std::string& first, const std::string& second, double c, double b) {
  std::vector<double> first_vals, second_vals;
  if (!parse_list(first, first_vals) || first_vals.size() != 3 ||
      !parse_list(second, second_vals) || second_vals.size() != 3)
    return usage_error("--first/--second expect v,f,r");
  try {
    const Constants k = make_constants(c, b);
    const RateParams r1 = params_from_list(first_vals);
    const RateParams r2 = params_from_list(second_vals);
    const RateParams sum = rate_add(r1, r2, k);
    Json rec;
    rec["command"] = Json::text("add-rates");
    Json in;
    in["first"] = Json::text(first);
    in["second"] = Json::text(second);
    in["c"] = Json::number(k.c);
    in["b"] = Json::number(k.b);
    rec["inputs"] = in;
    Json outputs;
    outputs["params"] = json_params(sum);
    outputs["w2_first"] = Json::number(rate_w2(r1, k));
    outputs["w2_second"] = Json::number(rate_w2(r2, k));
    outputs["w2_sum"] = Json::number(rate_w2(sum, k));
    Json residuals;
    double worst = 0.0;
    try {
      worst = max_abs_diff(xi_su11(r2.v, r2.f, r2.r, k) * xi_su11(r1.v, r1.f, r1.r, k),
                           xi_su11(sum.v, sum.f, sum.r, k));
      residuals["matrix"] = Json::number(worst);
    } catch (const error&) {
      outputs["note"] = Json::text("matrix residual omitted: parameters on the rate boundary");
    }
    rec["outputs"] = outputs;
    rec["residuals"] = residuals;
    rec["status"] = Json::text(worst <= 1e-9 ? "pass" : "fail");
    print_json(rec);
    return worst <= 1e-9 ? 0 : 1;
  } catch (const error& e) {
    return emit_error_record("add-rates", e);
  }
}

StructureTable table_by_name(const std::string& which) {
  if (which == "hamilton") {
    const HamiltonGenerators g = hamilton_generators();
    return structure_table<4>({"G", "F", "R"}, {g.G, g.F, g.R});
  }
  if (which == "su11") {
    const Su11Generators g = su11_generators();
    return structure_table<4>({"K", "N", "M", "U"}, {g.K, g.N, g.M, g.U});
  }
  if (which == "contracted") {
    const ContractedGenerators g = contracted_generators();
    return structure_table<4>({"G", "F", "Mhat", "R"}, {g.G, g.F, g.Mhat, g.R});
  }
  if (which == "inhom") return inhom_algebra_table();
  if (which == "quaplectic") return quaplectic_algebra_table();
  return heisenberg_algebra_table();
}

int run_algebra(const std::string& which, const std::string& format) {
  try {
    const StructureTable t = table_by_name(which);
    const TableDiff diff = diff_against_reference(t, reference_brackets(which));
    if (format == "text") {
      std::string out = t.to_text();
      out += t.exact_integer ? "coefficients: exact integer\n" : "coefficients: floating\n";
      out += "closed: ";
      out += t.closed ? "yes" : "no";
      out += "\n";
      if (diff.identical) {
        out += "tabulated comparison: identical\n";
      } else {
        out += "tabulated comparison:\n";
        for (const auto& line : diff.lines) out += "  " + line + "\n";
      }
      std::fputs(out.c_str(), stdout);
      return t.closed ? 0 : 1;
    }
    Json rec;
    rec["command"] = Json::text("algebra");
    Json in;
    in["which"] = Json::text(which);
    rec["inputs"] = in;
    Json outputs;
    Json names = Json::array();
    for (const auto& n : t.names) names.push(Json::text(n));
    outputs["names"] = names;
    Json brackets;
    for (int i = 0; i < t.n; ++i)
      for (int j = i + 1; j < t.n; ++j)
        brackets["[" + t.names[static_cast<std::size_t>(i)] + "," +
                 t.names[static_cast<std::size_t>(j)] + "]"] = Json::text(t.entry_text(i, j));
    outputs["brackets"] = brackets;
    outputs["exact_integer"] = Json::flag(t.exact_integer);
    outputs["closed"] = Json::flag(t.closed);
    Json diff_lines = Json::array();
    for (const auto& line : diff.lines) diff_lines.push(Json::text(line));
    outputs["tabulated_diff"] = diff_lines;
    outputs["tabulated_identical"] = Json::flag(diff.identical);
    rec["outputs"] = outputs;
    Json residuals;
    residuals["reconstruction"] = Json::number(t.max_residual);
    rec["residuals"] = residuals;
    rec["status"] = Json::text(t.closed ? "pass" : "fail");
    print_json(rec);
    return t.closed ? 0 : 1;
  } catch (const error& e) {
    return emit_error_record("algebra", e);
  }
}

int run_casimir() {
  try {
    const CasimirReport rep = casimir_c2();
    Json rec;
    rec["command"] = Json::text("casimir");
    rec["inputs"] = Json();
    Json outputs;
    outputs["certified"] = Json::flag(rep.certified);
    Json co;
    co["sT"] = Json::number(rep.coeffs.sT);
    co["sQ"] = Json::number(rep.coeffs.sQ);
    co["sP"] = Json::number(rep.coeffs.sP);
    co["sE"] = Json::number(rep.coeffs.sE);
    co["mu"] = Json::number(rep.coeffs.mu);
    outputs["coefficients"] = co;
    Json all = Json::array();
    for (const auto& c : rep.all_certified) {
      Json e;
      e["sT"] = Json::number(c.sT);
      e["sQ"] = Json::number(c.sQ);
      e["sP"] = Json::number(c.sP);
      e["sE"] = Json::number(c.sE);
      e["mu"] = Json::number(c.mu);
      all.push(e);
    }
    outputs["all_certified"] = all;
    outputs["max_commutator_coeff_rejected"] =
        Json::number(static_cast<double>(rep.max_commutator_coeff));
    Json diff_lines = Json::array();
    for (const auto& line : rep.reference_diff) diff_lines.push(Json::text(line));
    outputs["tabulated_diff"] = diff_lines;
    rec["outputs"] = outputs;
    Json residuals;
    residuals["matrix_evaluation"] = Json::number(max_abs(rep.matrix_value));
    residuals["symbolic_commutators"] = Json::number(0.0);
    rec["residuals"] = residuals;
    rec["status"] = Json::text(rep.certified ? "pass" : "fail");
    print_json(rec);
    return rep.certified ? 0 : 1;
  } catch (const error& e) {
    return emit_error_record("casimir", e);
  }
}

int run_discrete(bool extended, const std::string& format) {
  try {
    const ClosureTable t = discrete_table(extended);
    const std::vector<RelationCheck> rels = discrete_relations();
    const bool healthy = t.closed && t.abelian && t.signed_permutations &&
                         t.inverses_are_transposes;
    if (format == "text") {
      std::string out;
      out += "order: " + std::to_string(t.order) + (extended ? " (extended)\n" : "\n");
      out += std::string("closed: ") + (t.closed ? "yes" : "no") + "\n";
      out += std::string("abelian: ") + (t.abelian ? "yes" : "no") + "\n";
      out += std::string("signed permutations: ") + (t.signed_permutations ? "yes" : "no") + "\n";
      out += t.cayley_text();
      out += "relations:\n";
      for (const auto& r : rels)
        out += std::string("  ") + (r.holds ? "holds " : "FAILS ") + r.text + "\n";
      std::fputs(out.c_str(), stdout);
      return healthy ? 0 : 1;
    }
    Json rec;
    rec["command"] = Json::text("discrete");
    Json in;
    in["extended"] = Json::flag(extended);
    rec["inputs"] = in;
    Json outputs;
    outputs["order"] = Json::number(t.order);
    outputs["closed"] = Json::flag(t.closed);
    outputs["abelian"] = Json::flag(t.abelian);
    outputs["signed_permutations"] = Json::flag(t.signed_permutations);
    outputs["inverses_are_transposes"] = Json::flag(t.inverses_are_transposes);
    Json labels = Json::array();
    for (const auto& l : t.labels) labels.push(Json::text(l));
    outputs["labels"] = labels;
    Json cayley = Json::array();
    for (int i = 0; i < t.order; ++i) {
      Json row = Json::array();
      for (int j = 0; j < t.order; ++j)
        row.push(Json::number(t.cayley[static_cast<std::size_t>(i) * t.order + j]));
      cayley.push(row);
    }
    outputs["cayley"] = cayley;
    Json relations = Json::array();
    for (const auto& r : rels) {
      Json rr;
      rr["relation"] = Json::text(r.text);
      rr["holds"] = Json::flag(r.holds);
      rr["residual"] = Json::number(r.residual);
      relations.push(rr);
    }
    outputs["relations"] = relations;
    rec["outputs"] = outputs;
    rec["residuals"] = Json();
    rec["status"] = Json::text(healthy ? "pass" : "fail");
    print_json(rec);
    return healthy ? 0 : 1;
  } catch (const error& e) {
    return emit_error_record("discrete", e);
  }
}

int run_trajectory(const std::string& name, double q0, double p0, double t_end, double dt,
                   const std::string& format) {
  try {
    const Hamiltonian h = hamiltonian_by_name(name);
    const Trajectory traj = integrate_hamilton(h, q0, p0, t_end, dt);
    if (format == "csv") {
      std::string out = "t,q,p,e,v,f,r\n";
      for (std::size_t i = 0; i < traj.size(); ++i) {
        out += fmt(traj.t[i]) + "," + fmt(traj.q[i]) + "," + fmt(traj.p[i]) + "," +
               fmt(traj.e[i]) + "," + fmt(traj.v[i]) + "," + fmt(traj.f[i]) + "," +
               fmt(traj.r[i]) + "\n";
      }
      std::fputs(out.c_str(), stdout);
      return 0;
    }
    Json rec;
    rec["command"] = Json::text("trajectory");
    Json in;
    in["hamiltonian"] = Json::text(name);
    in["q0"] = Json::number(q0);
    in["p0"] = Json::number(p0);
    in["t_end"] = Json::number(t_end);
    in["dt"] = Json::number(dt);
    rec["inputs"] = in;
    Json outputs;
    outputs["samples"] = Json::number(static_cast<double>(traj.size()));
    outputs["dt_step"] = Json::number(traj.dt_step);
    auto column = [](const std::vector<double>& col) {
      Json a = Json::array();
      for (double v : col) a.push(Json::number(v));
      return a;
    };
    outputs["t"] = column(traj.t);
    outputs["q"] = column(traj.q);
    outputs["p"] = column(traj.p);
    outputs["e"] = column(traj.e);
    outputs["v"] = column(traj.v);
    outputs["f"] = column(traj.f);
    outputs["r"] = column(traj.r);
    rec["outputs"] = outputs;
    rec["residuals"] = Json();
    rec["status"] = Json::text("pass");
    print_json(rec);
    return 0;
  } catch (const error& e) {
    return emit_error_record("trajectory", e);
  }
}

int run_verify(std::uint64_t seed, int cases, const std::string& format) {
  try {
    const std::vector<CheckResult> checks = verify_all(seed, cases);
    int passed = 0, failed = 0;
    for (const auto& c : checks) (c.pass ? passed : failed)++;
    if (format == "text") {
      std::string out;
      for (const auto& c : checks) {
        out += c.pass ? "PASS " : "FAIL ";
        out += c.name;
        out += "  max=" + fmt(c.residual);
        if (!c.note.empty()) out += "  (" + c.note + ")";
        out += "\n";
      }
      out += "checks: " + std::to_string(checks.size()) + ", passed: " + std::to_string(passed) +
             ", failed: " + std::to_string(failed) + ", seed: " + std::to_string(seed) +
             ", cases: " + std::to_string(cases) + "\n";
      std::fputs(out.c_str(), stdout);
      return failed == 0 ? 0 : 1;
    }
    Json rec;
    rec["command"] = Json::text("verify");
    Json in;
    in["seed"] = Json::number(static_cast<double>(seed));
    in["cases"] = Json::number(cases);
    rec["inputs"] = in;
    Json outputs;
    Json list = Json::array();
    for (const auto& c : checks) {
      Json e;
      e["name"] = Json::text(c.name);
      e["pass"] = Json::flag(c.pass);
      e["residual"] = Json::number(c.residual);
      e["note"] = Json::text(c.note);
      list.push(e);
    }
    outputs["checks"] = list;
    outputs["passed"] = Json::number(passed);
    outputs["failed"] = Json::number(failed);
    rec["outputs"] = outputs;
    rec["residuals"] = Json();
    rec["status"] = Json::text(failed == 0 ? "pass" : "fail");
    print_json(rec);
    return failed == 0 ? 0 : 1;
  } catch (const error& e) {
    return emit_error_record("verify", e);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matrix groups of two-scale (velocity and force bounded) kinematics"};
  app.require_subcommand(1);

  const CLI::Validator finite(
      [](std::string& s) {
        try {
          std::size_t used = 0;
          const double v = std::stod(s, &used);
          if (used != s.size() || !std::isfinite(v)) return std::string("must be finite");
        } catch (...) {
          return std::string("must be finite");
        }
        return std::string();
      },
      "FINITE");

  TransformArgs targs;
  CLI::App* transform = app.add_subcommand("transform", "build one group element");
  transform->add_option("--group", targs.group, "lorentz|hamilton|su11|u11|upsilon")
      ->required()
      ->check(CLI::IsMember({"lorentz", "hamilton", "su11", "u11", "upsilon"}));
  transform->add_option("--v", targs.v, "velocity rate")->check(finite);
  transform->add_option("--f", targs.f, "force rate")->check(finite);
  transform->add_option("--r", targs.r, "power rate")->check(finite);
  transform->add_option("--a", targs.a, "central rotation parameter")->check(finite);
  transform->add_option("--frame", targs.frame, "dt,dq,dp,de to transform");
  transform->add_option("--c", targs.c, "velocity scale")->check(finite);
  transform->add_option("--b", targs.b, "force scale")->check(finite);
  transform->add_option("--hbar", targs.hbar, "action scale")->check(finite);

  ComposeArgs cargs;
  CLI::App* compose = app.add_subcommand("compose", "compose two group elements");
  compose->add_option("--group", cargs.group, "lorentz|hamilton|su11|u11")
      ->required()
      ->check(CLI::IsMember({"lorentz", "hamilton", "su11", "u11"}));
  compose->add_option("--first", cargs.first, "v,f,r[,a] (applied first)")->required();
  compose->add_option("--second", cargs.second, "v,f,r[,a]")->required();
  compose->add_option("--c", cargs.c, "velocity scale")->check(finite);
  compose->add_option("--b", cargs.b, "force scale")->check(finite);

  std::string ar_first, ar_second;
  double ar_c = 1.0, ar_b = 1.0;
  CLI::App* add_rates = app.add_subcommand("add-rates", "bounded rate composition law");
  add_rates->add_option("--first", ar_first, "v,f,r")->required();
  add_rates->add_option("--second", ar_second, "v,f,r")->required();
  add_rates->add_option("--c", ar_c, "velocity scale")->check(finite);
  add_rates->add_option("--b", ar_b, "force scale")->check(finite);

  std::string alg_which = "su11";
  std::string alg_format = "json";
  CLI::App* algebra = app.add_subcommand("algebra", "recomputed structure constants");
  algebra->add_option("--which", alg_which, "hamilton|su11|contracted|inhom|quaplectic|heisenberg")
      ->check(CLI::IsMember({"hamilton", "su11", "contracted", "inhom", "quaplectic",
                             "heisenberg"}));
  algebra->add_option("--format", alg_format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* casimir = app.add_subcommand("casimir", "quadratic Casimir certification");

  bool extended = false;
  std::string disc_format = "json";
  CLI::App* discrete = app.add_subcommand("discrete", "discrete automorphism group table");
  discrete->add_flag("--extended", extended, "include the central sign flip");
  discrete->add_option("--format", disc_format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));

  std::string ham_name = "oscillator";
  double q0 = 0.0, p0 = 0.0, t_end = 1.0, dt = 1e-3;
  std::string traj_format = "csv";
  CLI::App* trajectory = app.add_subcommand("trajectory", "integrate a Hamiltonian flow");
  trajectory->add_option("--hamiltonian", ham_name, "free|oscillator|driven")
      ->check(CLI::IsMember({"free", "oscillator", "driven"}));
  trajectory->add_option("--q0", q0, "initial position")->check(finite);
  trajectory->add_option("--p0", p0, "initial momentum")->check(finite);
  trajectory->add_option("--t-end", t_end, "final time")->check(finite);
  trajectory->add_option("--dt", dt, "step ceiling")->check(finite);
  trajectory->add_option("--format", traj_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  std::uint64_t seed = 42;
  int cases = 1000;
  std::string ver_format = "text";
  CLI::App* verify = app.add_subcommand("verify", "run the full property suite");
  verify->add_option("--seed", seed, "RNG seed (RECIPROCA_SEED overrides)");
  verify->add_option("--cases", cases, "random draws per property")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", ver_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (transform->parsed()) return run_transform(targs);
  if (compose->parsed()) return run_compose(cargs);
  if (add_rates->parsed()) return run_add_rates(ar_first, ar_second, ar_c, ar_b);
  if (algebra->parsed()) return run_algebra(alg_which, alg_format);
  if (casimir->parsed()) return run_casimir();
  if (discrete->parsed()) return run_discrete(extended, disc_format);
  if (trajectory->parsed())
    return run_trajectory(ham_name, q0, p0, t_end, dt, traj_format);
  if (verify->parsed()) {
    if (const char* env = std::getenv("RECIPROCA_SEED")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end == env || *end != '\0') return usage_error("RECIPROCA_SEED must be an integer");
      seed = v;
    }
    return run_verify(seed, cases, ver_format);
  }
  return 2;
}

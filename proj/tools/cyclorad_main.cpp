// cyclorad: circumradius, roots, areas, classification, exact polynomials and
// SVG rendering for cyclic polygons given by their side lengths.
//
// Subcommands: radius, roots, area, classify, poly, regular, verify, render.
// Sides accept a repetition shorthand: "3x7" expands to seven sides of 3.
// JSON job files (--input) and JSONL batches (--batch) carry the same fields
// as the reports. Exit codes: 0 ok, 2 validation error, 3 no root.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cyclorad/cyclorad.hpp"
#include "cyclorad/report_json.hpp"

namespace {

using cyclorad::json;

struct job_spec {
  std::string command;
  std::vector<std::string> side_tokens;  // pre-expansion, exact strings
  std::vector<double> sides;
  std::optional<cyclorad::signature> sig;
  int regular_n = 0;
  double regular_l = 1.0;
  int regular_q = 1;
  bool want_poly = false;
  bool json_output = false;
  std::string out_path;
  cyclorad::tolerances tol;
};

struct job_result {
  json report;
  std::string text;
  int exit_code = 0;
};

[[noreturn]] void parse_fail(const std::string& msg) {
  cyclorad::raise(cyclorad::errc::parse_error, msg);
}

// "3x7" -> seven tokens "3"; "1,2,4" -> three tokens.
std::vector<std::string> expand_side_tokens(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& arg : raw) {
    std::stringstream ss(arg);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      if (piece.empty()) continue;
      auto x = piece.find('x');
      if (x == std::string::npos) {
        out.push_back(piece);
        continue;
      }
      std::string value = piece.substr(0, x);
      std::string count_str = piece.substr(x + 1);
      if (value.empty() || count_str.empty() ||
          count_str.find_first_not_of("0123456789") != std::string::npos)
        parse_fail("bad side token: " + piece);
      long count = std::strtol(count_str.c_str(), nullptr, 10);
      if (count < 1 || count > 100000) parse_fail("bad repeat count in: " + piece);
      for (long i = 0; i < count; ++i) out.push_back(value);
    }
  }
  return out;
}

std::vector<double> tokens_to_doubles(const std::vector<std::string>& tokens) {
  std::vector<double> out;
  for (const auto& t : tokens) {
    try {
      std::size_t used = 0;
      double v = std::stod(t, &used);
      if (used != t.size()) parse_fail("bad number: " + t);
      out.push_back(v);
    } catch (const std::invalid_argument&) {
      parse_fail("bad number: " + t);
    } catch (const std::out_of_range&) {
      parse_fail("number out of range: " + t);
    }
  }
  return out;
}

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

json criterion_json(const cyclorad::criterion_report& rep) { return cyclorad::to_json(rep); }

std::string criterion_text(const cyclorad::side_list& sides,
                           const cyclorad::criterion_report& rep) {
  std::string s;
  s += "criterion1: " + fmt6(rep.criterion1.lhs) + " vs " + fmt6(rep.criterion1.rhs) +
       " => " + (rep.criterion1.satisfied ? "PNCI" : "PCI") + "\n";
  if (rep.criterion2.lhs == 0 && rep.criterion2.rhs == 0)
    s += "criterion2: not evaluated (diverges at r = l_max/2)\n";
  else
    s += "criterion2: " + fmt6(rep.criterion2.lhs) + " vs " + fmt6(rep.criterion2.rhs) +
         (rep.criterion2.satisfied ? " (equal)" : " (not equal)") + "\n";
  s += "criterion3: ratios";
  for (double q : rep.criterion3.ratios) s += " " + fmt6(q);
  s += rep.criterion3.satisfied ? " => all < 1 (PNCI possible)" : " => not all < 1 (PCI)";
  s += "\n";
  (void)sides;
  return s;
}

job_result run_radius(const job_spec& job) {
  job_result res;
  cyclorad::side_list sides = cyclorad::validate_sides(job.sides);
  res.report["command"] = "radius";
  res.report["sides"] = job.sides;
  if (job.sig) {
    cyclorad::root_set rs = cyclorad::solve_radius_signed(sides, *job.sig, job.tol);
    if (rs.roots.empty()) {
      res.report["error"] = {{"code", "NoRoot"},
                             {"message", "signed equation has no radius"}};
      res.text = "no root: the signed equation has no solution\n";
      res.exit_code = 3;
      return res;
    }
    res.report["radius"] = rs.roots.front().r;
    res.report["classification"] = cyclorad::to_json(rs.roots.front().cls);
    res.report["residual"] = rs.roots.front().residual;
    res.report["roots"] = cyclorad::to_json(rs)["roots"];
    res.text = "r = " + fmt17(rs.roots.front().r) + "\n";
    for (const auto& sol : rs.roots)
      res.text += "root: r = " + fmt17(sol.r) + "  (E=" + std::to_string(sol.winding) +
                  ", |residual| = " + fmt6(sol.residual) + ")\n";
    return res;
  }
  cyclorad::radius_solution sol = cyclorad::solve_radius_convex(sides, job.tol);
  res.report["radius"] = sol.r;
  res.report["classification"] = cyclorad::to_json(sol.cls);
  res.report["branch"] = std::string(cyclorad::branch_name(sol.branch));
  res.report["residual"] = sol.residual;
  res.report["equation_value"] = sol.equation_value;
  res.text = "r = " + fmt17(sol.r) + "\n" +
             "classification: " + std::string(cyclorad::polygon_class_name(sol.cls.kind)) +
             "\n" + "residual: " + fmt6(sol.residual) + "\n";
  return res;
}

job_result run_roots(const job_spec& job) {
  job_result res;
  cyclorad::side_list sides = cyclorad::validate_sides(job.sides);
  cyclorad::root_set rs = job.sig ? cyclorad::solve_radius_signed(sides, *job.sig, job.tol)
                                  : cyclorad::all_positive_roots(sides, job.tol);
  res.report["command"] = "roots";
  res.report["sides"] = job.sides;
  json rsj = cyclorad::to_json(rs);
  res.report["roots"] = rsj["roots"];
  res.report["rejected"] = rsj["rejected"];
  try {
    cyclorad::convex_selection sel = cyclorad::select_convex_root(rs, sides.perimeter());
    res.report["selected"] = cyclorad::to_json(sel.root);
    res.report["selected"]["qualifying"] = sel.qualifying;
  } catch (const cyclorad::error&) {
    res.report["selected"] = nullptr;
  }
  res.text = "roots (" + std::to_string(rs.roots.size()) + "):\n";
  for (const auto& sol : rs.roots)
    res.text += "  r = " + fmt17(sol.r) + "  E=" + std::to_string(sol.winding) +
                " branch=" + std::string(cyclorad::branch_name(sol.branch)) + "\n";
  for (const auto& rej : rs.rejected)
    res.text += "  rejected r = " + fmt17(rej.r) + " (" + rej.reason + ")\n";
  if (rs.roots.empty()) res.exit_code = 3;
  return res;
}

job_result run_area(const job_spec& job) {
  job_result res;
  cyclorad::side_list sides = cyclorad::validate_sides(job.sides);
  cyclorad::radius_solution sol = cyclorad::solve_radius_convex(sides, job.tol);
  cyclorad::area_result by_sum = cyclorad::area_sum(sides, sol.r, sol.cls);
  cyclorad::area_result by_integral = cyclorad::area_integral(sides, sol.r, sol.cls);
  cyclorad::criterion_report crit =
      cyclorad::criteria_report(sides, sol.r, job.tol.criterion);
  res.report["command"] = "area";
  res.report["sides"] = job.sides;
  res.report["radius"] = sol.r;
  res.report["classification"] = cyclorad::to_json(sol.cls);
  res.report["residual"] = sol.residual;
  res.report["area_sum"] = cyclorad::to_json(by_sum);
  res.report["area_integral"] = cyclorad::to_json(by_integral);
  res.report["criteria"] = criterion_json(crit);
  res.text = "r = " + fmt17(sol.r) + "\n" +
             "classification: " + std::string(cyclorad::polygon_class_name(sol.cls.kind)) +
             "\narea (triangle sum) = " + fmt17(by_sum.total) +
             "\narea (segment integral) = " + fmt17(by_integral.total) + "\n" +
             criterion_text(sides, crit);
  return res;
}

job_result run_classify(const job_spec& job) {
  job_result res;
  cyclorad::side_list sides = cyclorad::validate_sides(job.sides);
  cyclorad::radius_solution sol = cyclorad::solve_radius_convex(sides, job.tol);
  cyclorad::criterion_report crit =
      cyclorad::criteria_report(sides, sol.r, job.tol.criterion);
  res.report["command"] = "classify";
  res.report["sides"] = job.sides;
  res.report["radius"] = sol.r;
  res.report["classification"] = cyclorad::to_json(sol.cls);
  res.report["residual"] = sol.residual;
  res.report["criteria"] = criterion_json(crit);
  res.text = "classification: " +
             std::string(cyclorad::polygon_class_name(sol.cls.kind)) + "\n" +
             "r = " + fmt17(sol.r) + "\n" + criterion_text(sides, crit);
  return res;
}

job_result run_poly(const job_spec& job) {
  job_result res;
  std::vector<cyclorad::rational> sides;
  for (const auto& t : job.side_tokens) sides.push_back(cyclorad::rational_from_string(t));
  auto [real, imag] = cyclorad::expand_product(sides);
  (void)imag;
  cyclorad::radius_polynomial poly = cyclorad::eliminate_radicals(real);
  res.report = cyclorad::to_json(poly);
  res.report["command"] = "poly";
  res.text = res.report.dump(2) + "\n";
  return res;
}

job_result run_regular(const job_spec& job) {
  job_result res;
  double r = cyclorad::radius_regular(job.regular_n, job.regular_l, job.regular_q);
  const double perimeter = job.regular_n * job.regular_l;
  const double two_pi_r = 2 * std::numbers::pi * r;
  res.report["command"] = "regular";
  res.report["n"] = job.regular_n;
  res.report["l"] = job.regular_l;
  res.report["q"] = job.regular_q;
  res.report["radius"] = r;
  res.report["perimeter"] = perimeter;
  res.report["circle_perimeter"] = two_pi_r;
  res.text = "r = " + fmt17(r) + "\n2*pi*r - perimeter = " + fmt6(two_pi_r - perimeter) +
             " (perimeter = " + fmt6(perimeter) + ")\n";
  if (job.want_poly) {
    cyclorad::regular_factorization fac =
        cyclorad::regular_polynomial(static_cast<unsigned>(job.regular_n),
                                     cyclorad::rational(job.regular_l));
    res.report["polynomial"] = cyclorad::to_json(fac);
    res.text += res.report["polynomial"].dump(2) + "\n";
  }
  return res;
}

job_result run_verify(const job_spec& job) {
  job_result res;
  cyclorad::side_list sides = cyclorad::validate_sides(job.sides);
  res.report["command"] = "verify";
  res.report["sides"] = job.sides;
  json checks = json::array();
  std::string text;
  auto add_check = [&](const cyclorad::radius_solution& sol,
                       const cyclorad::polygon_reconstruction& rec) {
    json c;
    c["radius"] = sol.r;
    c["winding"] = sol.winding;
    c["closure_error"] = rec.closure_error;
    double max_side = 0;
    for (double e : rec.side_errors) max_side = std::max(max_side, e);
    c["max_side_error"] = max_side;
    c["closed"] = rec.closure_error <= 1e-9 * sol.r;
    checks.push_back(c);
    text += "r = " + fmt17(sol.r) + ": closure_error = " + fmt6(rec.closure_error) +
            ", max_side_error = " + fmt6(max_side) + "\n";
  };
  if (job.sig) {
    cyclorad::root_set rs = cyclorad::solve_radius_signed(sides, *job.sig, job.tol);
    if (rs.roots.empty()) {
      res.report["error"] = {{"code", "NoRoot"},
                             {"message", "signed equation has no radius"}};
      res.text = "no root to verify\n";
      res.exit_code = 3;
      return res;
    }
    for (const auto& sol : rs.roots)
      add_check(sol, cyclorad::reconstruct_vertices(sides, sol.r, *job.sig));
  } else {
    cyclorad::radius_solution sol = cyclorad::solve_radius_convex(sides, job.tol);
    cyclorad::polygon_reconstruction rec =
        cyclorad::reconstruct_vertices(sides, sol.r, sol.cls);
    add_check(sol, rec);
    res.report["shoelace_area"] = cyclorad::shoelace_area(rec);
    res.report["area_sum"] = cyclorad::area_sum(sides, sol.r, sol.cls).total;
    text += "shoelace_area = " + fmt17(res.report["shoelace_area"].get<double>()) + "\n";
  }
  res.report["checks"] = checks;
  res.report["closure_error"] = checks.front()["closure_error"];
  res.text = text;
  return res;
}

job_result run_render(const job_spec& job) {
  job_result res;
  cyclorad::side_list sides = cyclorad::validate_sides(job.sides);
  cyclorad::polygon_reconstruction rec;
  double r;
  if (job.sig) {
    cyclorad::root_set rs = cyclorad::solve_radius_signed(sides, *job.sig, job.tol);
    if (rs.roots.empty()) {
      res.text = "no root to render\n";
      res.report["error"] = {{"code", "NoRoot"}, {"message", "nothing to render"}};
      res.exit_code = 3;
      return res;
    }
    r = rs.roots.front().r;
    rec = cyclorad::reconstruct_vertices(sides, r, *job.sig);
  } else {
    cyclorad::radius_solution sol = cyclorad::solve_radius_convex(sides, job.tol);
    r = sol.r;
    rec = cyclorad::reconstruct_vertices(sides, r, sol.cls);
  }
  std::string svg = cyclorad::render_svg(rec, r);
  res.report["command"] = "render";
  res.report["radius"] = r;
  res.report["svg"] = svg;
  res.text = svg;
  return res;
}

job_result run_job(const job_spec& job) {
  if (job.command == "radius") return run_radius(job);
  if (job.command == "roots") return run_roots(job);
  if (job.command == "area") return run_area(job);
  if (job.command == "classify") return run_classify(job);
  if (job.command == "poly") return run_poly(job);
  if (job.command == "regular") return run_regular(job);
  if (job.command == "verify") return run_verify(job);
  if (job.command == "render") return run_render(job);
  parse_fail("unknown command: " + job.command);
}

int exit_code_for(const cyclorad::error& e) {
  switch (e.code()) {
    case cyclorad::errc::no_root:
    case cyclorad::errc::no_qualifying_root:
      return 3;
    case cyclorad::errc::no_convergence:
      return 1;
    default:
      return 2;
  }
}

job_result run_job_guarded(const job_spec& job) {
  try {
    return run_job(job);
  } catch (const cyclorad::error& e) {
    job_result res;
    res.report["error"] = {{"code", std::string(cyclorad::errc_name(e.code()))},
                           {"message", e.what()}};
    res.text = std::string("error: ") + e.what() + "\n";
    res.exit_code = exit_code_for(e);
    return res;
  }
}

void apply_json_fields(job_spec& job, const json& j) {
  if (j.contains("command")) job.command = j["command"].get<std::string>();
  if (j.contains("sides")) {
    job.sides.clear();
    job.side_tokens.clear();
    std::vector<std::string> raw;
    for (const auto& v : j["sides"]) {
      if (v.is_string()) {
        raw.push_back(v.get<std::string>());
      } else {
        double d = v.get<double>();
        std::ostringstream os;
        os.precision(17);
        os << d;
        raw.push_back(os.str());
      }
    }
    // string entries may carry the VALUExCOUNT shorthand and exact fractions
    job.side_tokens = expand_side_tokens(raw);
    for (const auto& t : job.side_tokens)
      job.sides.push_back(cyclorad::rational_from_string(t).convert_to<double>());
  }
  if (j.contains("signs")) {
    cyclorad::signature sig;
    for (const auto& v : j["signs"]) sig.signs.push_back(v.get<int>());
    sig.winding = j.value("winding", 1);
    job.sig = sig;
  } else if (j.contains("winding")) {
    job.sig = cyclorad::signature::all_plus(job.sides.size(), j["winding"].get<int>());
  }
  if (j.contains("n")) job.regular_n = j["n"].get<int>();
  if (j.contains("l")) job.regular_l = j["l"].get<double>();
  if (j.contains("q")) job.regular_q = j["q"].get<int>();
  if (j.contains("poly")) job.want_poly = j["poly"].get<bool>();
}

int emit(const job_result& res, const job_spec& job) {
  std::string payload = job.json_output ? res.report.dump() + "\n" : res.text;
  if (!job.out_path.empty()) {
    std::ofstream out(job.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open " << job.out_path << "\n";
      return 2;
    }
    out << payload;
  } else {
    std::cout << payload;
  }
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyclic polygon circumradius toolkit"};
  app.require_subcommand(0, 1);

  job_spec job;
  if (const char* env = std::getenv("CYCLORAD_TOL")) {
    char* end = nullptr;
    double t = std::strtod(env, &end);
    if (end && *end == '\0' && t > 0) {
      job.tol.angle_residual = t;
      job.tol.criterion = t;
    }
  }

  std::string input_path, batch_path;
  app.add_flag("--json", job.json_output, "emit a JSON report instead of text");
  app.add_option("--input", input_path, "read a JSON job file");
  app.add_option("--batch", batch_path, "process a JSONL job file, one report per line");
  app.add_option("--out", job.out_path, "write output to a file instead of stdout");
  double tol_override = 0;
  auto* tol_opt =
      app.add_option("--tol", tol_override, "override the residual tolerance");

  std::vector<std::string> raw_sides;
  std::vector<int> signs;
  int winding = 0;

  auto add_sides_command = [&](const std::string& name, const std::string& desc,
                               bool with_signature) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->fallthrough();
    cmd->add_option("sides", raw_sides, "side lengths (supports VALUExCOUNT)");
    if (with_signature) {
      cmd->add_option("--signs", signs, "per-side signs, e.g. --signs=-1,1,1,1,1")
          ->delimiter(',');
      cmd->add_option("--winding", winding, "winding E of the signed equation");
    }
    return cmd;
  };

  add_sides_command("radius", "circumradius of the convex (or signed) polygon", true);
  add_sides_command("roots", "all positive roots with winding tags", true);
  add_sides_command("area", "areas by triangle-sum and segment-integral routes", false);
  add_sides_command("classify", "PCI/PNCI classification and criteria", false);
  add_sides_command("poly", "exact radius polynomial (n <= 6)", false);
  add_sides_command("verify", "reconstruct vertices and check closure", true);
  add_sides_command("render", "emit an SVG drawing", true);

  CLI::App* regular = app.add_subcommand("regular", "regular {n/q} polygon");
  regular->fallthrough();
  regular->add_option("--n", job.regular_n, "number of sides")->required();
  regular->add_option("--l", job.regular_l, "side length");
  regular->add_option("--q", job.regular_q, "star density");
  regular->add_flag("--poly", job.want_poly, "include the exact factor list");

  CLI11_PARSE(app, argc, argv);
  if (tol_opt->count()) {
    job.tol.angle_residual = tol_override;
    job.tol.criterion = tol_override;
  }

  try {
    if (!batch_path.empty()) {
      std::ifstream in(batch_path);
      if (!in) {
        std::cerr << "error: cannot open " << batch_path << "\n";
        return 2;
      }
      std::string line;
      std::ostream* out = &std::cout;
      std::ofstream file_out;
      if (!job.out_path.empty()) {
        file_out.open(job.out_path, std::ios::binary);
        out = &file_out;
      }
      while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        job_spec line_job = job;
        line_job.command = "radius";
        try {
          json j = json::parse(line);
          apply_json_fields(line_job, j);
          job_result res = run_job_guarded(line_job);
          *out << res.report.dump() << "\n";
        } catch (const json::exception& e) {
          json err;
          err["error"] = {{"code", "ParseError"}, {"message", e.what()}};
          *out << err.dump() << "\n";
        }
      }
      return 0;
    }

    for (auto* sub : app.get_subcommands()) {
      job.command = sub->get_name();
    }
    if (!input_path.empty()) {
      std::ifstream in(input_path);
      if (!in) {
        std::cerr << "error: cannot open " << input_path << "\n";
        return 2;
      }
      json j;
      try {
        in >> j;
      } catch (const json::exception& e) {
        std::cerr << "error: bad JSON in " << input_path << ": " << e.what() << "\n";
        return 2;
      }
      if (job.command.empty()) job.command = "radius";
      apply_json_fields(job, j);
    }
    if (job.command.empty()) {
      std::cerr << app.help();
      return 2;
    }

    if (!raw_sides.empty()) {
      job.side_tokens = expand_side_tokens(raw_sides);
      job.sides = tokens_to_doubles(job.side_tokens);
    }
    if (!signs.empty()) {
      cyclorad::signature sig;
      sig.signs = signs;
      sig.winding = winding > 0 ? winding : 1;
      job.sig = sig;
    } else if (winding > 0) {
      job.sig = cyclorad::signature::all_plus(job.sides.size(), winding);
    }

    job_result res = run_job_guarded(job);
    return emit(res, job);
  } catch (const cyclorad::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

// hplax: generate moment systems, build tables and recurrence fields, solve
// the boundary-value problem and write exact verification reports.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hplax/bvp.hpp"
#include "hplax/classical.hpp"
#include "hplax/errors.hpp"
#include "hplax/hptable.hpp"
#include "hplax/io.hpp"
#include "hplax/nnrr.hpp"

namespace {

using hplax::io::json;

enum Exit { kOk = 0, kFailed = 1, kParse = 2, kNotNormal = 3, kNonPerfect = 4, kTruncation = 5 };

struct Job {
  std::string command;
  std::string system = "angelesco";
  std::string in;
  std::string out;
  std::string mu1 = "interval:-2,-1";
  std::string mu2 = "interval:1,2";
  std::vector<int> window{3, 3};
  std::optional<int> order;
  bool window_given = false;
  int N() const { return window[0]; }
  int M() const { return window[1]; }
};

int default_order(const Job& job) {
  const int order = 2 * (job.N() + job.M()) + 4;
  // the qd residual over 0..N x 0..K reads S_{N+2}^{(K+2)}
  if (job.command == "qd") return std::max(order, 2 * job.N() + job.M() + 6);
  return order;
}

int minimum_order(const Job& job) {
  if (job.command == "gen" && !job.window_given) return 1;
  if (job.command == "qd") return 2 * job.N() + job.M() + 6;
  return 2 * (job.N() + job.M()) + 3;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw hplax::io::ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json read_doc(const Job& job) {
  if (job.in.empty()) throw hplax::io::ParseError("--in is required for this command");
  return hplax::io::parse_text(read_file(job.in));
}

void write_doc(const Job& job, const json& doc) {
  if (job.out.empty()) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream f(job.out);
  if (!f) throw std::runtime_error("cannot write '" + job.out + "'");
  f << doc.dump(2) << "\n";
}

hplax::MomentSystem load_system(const Job& job) {
  const int order = job.order.value_or(default_order(job));
  if (order < minimum_order(job)) {
    throw hplax::TruncationError("series order " + std::to_string(order) + " is below the minimum " +
                                 std::to_string(minimum_order(job)) + " for this window");
  }
  const auto count = static_cast<std::size_t>(order);
  hplax::MomentSystem s;
  if (job.system == "angelesco" || job.system == "nikishin") {
    if (!job.in.empty()) {
      json doc = read_doc(job);
      auto mu1 = hplax::io::parse_measure(doc.at("mu1"));
      auto mu2 = hplax::io::parse_measure(doc.at("mu2"));
      s = job.system == "angelesco" ? hplax::make_angelesco(mu1, mu2, count) : hplax::make_nikishin(mu1, mu2, count);
    } else {
      auto mu1 = hplax::io::parse_measure_spec(job.mu1);
      auto mu2 = hplax::io::parse_measure_spec(job.mu2);
      s = job.system == "angelesco" ? hplax::make_angelesco(mu1, mu2, count) : hplax::make_nikishin(mu1, mu2, count);
    }
  } else if (job.system == "moments") {
    s = hplax::io::parse_moment_system(read_doc(job));
    if (s.order() < count) {
      throw hplax::TruncationError("moment file holds " + std::to_string(s.order()) + " moments, order " +
                                   std::to_string(order) + " requested");
    }
  } else if (job.system == "jfraction") {
    json doc = read_doc(job);
    auto first = hplax::io::parse_jfraction(doc.at("first"));
    auto second = hplax::io::parse_jfraction(doc.at("second"));
    s = {hplax::jfraction_to_moments(first, count), hplax::jfraction_to_moments(second, count), "jfraction"};
  } else {
    throw hplax::io::ParseError("unknown system '" + job.system + "'");
  }
  return s;
}

json emit_index(int n, int m) { return json::array({n, m}); }

json degree_or_zero(int degree) { return degree < 0 ? json("zero") : json(degree); }

int cmd_gen(const Job& job) {
  write_doc(job, hplax::io::emit(load_system(job)));
  return kOk;
}

int cmd_table(const Job& job) {
  const hplax::HPTable table(load_system(job));
  hplax::RatGrid S(job.N() + 1, job.M() + 1);
  json P = json::array();
  for (int n = 0; n <= job.N(); ++n) {
    json row = json::array();
    for (int m = 0; m <= job.M(); ++m) {
      S.set(n, m, table.s_det(n, m));
      row.push_back(table.is_normal(n, m) ? hplax::io::emit_poly(table.poly(n, m)) : json(nullptr));
    }
    P.push_back(std::move(row));
  }
  json doc{{"kind", "hp_table"}, {"convention", hplax::io::kConvention}, {"window", emit_index(job.N(), job.M())}};
  doc["S"] = hplax::io::emit_grid(S);
  doc["P"] = std::move(P);
  write_doc(job, doc);
  return kOk;
}

int cmd_coeffs(const Job& job) {
  write_doc(job, hplax::io::emit(hplax::field_from_table(hplax::HPTable(load_system(job)), job.N(), job.M())));
  return kOk;
}

int cmd_solve_bvp(const Job& job) {
  const hplax::BoundaryData bd = hplax::io::parse_boundary(read_doc(job));
  const hplax::SweepReport report = hplax::sweep_solve(bd, job.N(), job.M());
  write_doc(job, hplax::io::emit(report));
  return report.failure ? kNonPerfect : kOk;
}

int cmd_verify(const Job& job) {
  const hplax::MomentSystem system = load_system(job);
  const hplax::CrossValidation cv = hplax::cross_validate(system, job.N(), job.M());
  const hplax::HPTable table(system);
  const hplax::RecurrenceField field = hplax::field_from_table(table, job.N(), job.M());

  hplax::Rat orth_max = 0;
  int det_solve = 0, dminusc = 0;
  for (int n = 0; n <= job.N(); ++n) {
    for (int m = 0; m <= job.M(); ++m) {
      auto [r1, r2] = hplax::orthogonality_residuals(table, n, m);
      for (const auto& r : r1) orth_max = std::max(orth_max, hplax::abs(r));
      for (const auto& r : r2) orth_max = std::max(orth_max, hplax::abs(r));
      if (table.hp_poly_det(n, m) != table.hp_poly_solve(n, m)) ++det_solve;
      if (hplax::check_dminusc(table, n, m) != -field.gap(n, m)) ++dminusc;
    }
  }
  const bool ok = cv.ok() && hplax::is_zero(orth_max) && det_solve == 0 && dminusc == 0;

  json doc{{"kind", "verify_report"}, {"convention", hplax::io::kConvention}, {"window", emit_index(job.N(), job.M())}};
  doc["system"] = system.label;
  doc["grids_equal"] = cv.grids_equal;
  if (cv.first_mismatch) {
    const auto& d = *cv.first_mismatch;
    doc["first_mismatch"] = {{"grid", d.grid},
                             {"index", emit_index(d.n, d.m)},
                             {"expected", hplax::io::emit_rat(d.expected)},
                             {"actual", hplax::io::emit_rat(d.actual)}};
  } else {
    doc["first_mismatch"] = nullptr;
  }
  if (cv.sweep_failure) {
    doc["sweep_failure"] = {{"index", emit_index(cv.sweep_failure->n, cv.sweep_failure->m)},
                            {"reason", cv.sweep_failure->reason}};
  } else {
    doc["sweep_failure"] = nullptr;
  }
  doc["zcc_max_residual_degree"] = degree_or_zero(cv.zcc_max_degree);
  doc["consistency_residuals"] = hplax::io::emit_rat(cv.consistency_max);
  doc["consistency_degenerate"] = cv.consistency_degenerate;
  doc["recurrence_max_residual_degree"] = degree_or_zero(cv.recurrence_max_degree);
  doc["orthogonality_max_residual"] = hplax::io::emit_rat(orth_max);
  doc["det_solve_mismatches"] = det_solve;
  doc["dminusc_mismatches"] = dminusc;
  doc["summation_mismatches"] = cv.summation_mismatches;
  doc["stencils_checked"] = cv.stencils_checked;
  doc["ok"] = ok;
  write_doc(job, doc);
  return ok ? kOk : kFailed;
}

int cmd_qd(const Job& job) {
  const hplax::MomentSystem system = load_system(job);
  const int N = job.N(), K = job.M();
  const hplax::QdField field = hplax::qd_field(system.s1, N + 1, K + 2);
  json residuals = json::array();
  int worst = -1;
  for (int n = 0; n <= N; ++n) {
    json row = json::array();
    for (int k = 0; k <= K; ++k) {
      const int deg = hplax::zcc2_residual(field, n, k).max_degree();
      worst = std::max(worst, deg);
      row.push_back(degree_or_zero(deg));
    }
    residuals.push_back(std::move(row));
  }
  json doc = hplax::io::emit(field);
  doc["window"] = emit_index(N, K);
  doc["zcc2_residual_degree"] = std::move(residuals);
  doc["zcc2_max_residual_degree"] = degree_or_zero(worst);
  write_doc(job, doc);
  return worst < 0 ? kOk : kFailed;
}

json error_doc(const std::string& error, const std::string& message, std::optional<std::pair<int, int>> index = {}) {
  json doc{{"kind", "error"}, {"error", error}, {"message", message}};
  doc["index"] = index ? emit_index(index->first, index->second) : json(nullptr);
  return doc;
}

int fail(int code, const json& doc) {
  std::cerr << doc.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hermite-Pade tables, recurrence fields and Lax-pair checks"};
  app.require_subcommand(1);
  Job job;

  auto add_common = [&job](CLI::App* sub) {
    sub->add_option("--window", job.window, "window N M")->expected(2)->each([&job](const std::string&) {
      job.window_given = true;
    });
    sub->add_option("--order", job.order, "series order K (default 2(N+M)+4)");
    sub->add_option("--in", job.in, "input document");
    sub->add_option("--out", job.out, "output path (default stdout)");
  };
  auto add_system = [&job](CLI::App* sub) {
    sub->add_option("--system", job.system, "angelesco | nikishin | moments | jfraction")
        ->check(CLI::IsMember({"angelesco", "nikishin", "moments", "jfraction"}));
    sub->add_option("--mu1", job.mu1, "first measure: interval:lo,hi or atoms:x@w,...");
    sub->add_option("--mu2", job.mu2, "second measure");
  };

  const std::pair<const char*, const char*> commands[] = {
      {"gen", "write a moment system"},
      {"table", "write the S and P grids"},
      {"coeffs", "write the recurrence field"},
      {"solve-bvp", "sweep a boundary document into a field"},
      {"verify", "cross-validate both routes and report residual maxima"},
      {"qd", "write V, W grids and the 2x2 residuals"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    if (std::string(name) != "solve-bvp") add_system(sub);
    sub->callback([&job, name = std::string(name)] { job.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (job.N() < 0 || job.M() < 0) throw hplax::io::ParseError("window must be non-negative");
    if (job.command == "gen") return cmd_gen(job);
    if (job.command == "table") return cmd_table(job);
    if (job.command == "coeffs") return cmd_coeffs(job);
    if (job.command == "solve-bvp") return cmd_solve_bvp(job);
    if (job.command == "verify") return cmd_verify(job);
    if (job.command == "qd") return cmd_qd(job);
  } catch (const hplax::io::ParseError& e) {
    return fail(kParse, error_doc("ParseError", e.what()));
  } catch (const json::exception& e) {
    return fail(kParse, error_doc("ParseError", e.what()));
  } catch (const std::invalid_argument& e) {
    return fail(kParse, error_doc("ParseError", e.what()));
  } catch (const hplax::NotNormal& e) {
    return fail(kNotNormal, error_doc("NotNormal", e.what(), std::pair{e.n(), e.m()}));
  } catch (const hplax::NonPerfectBoundary& e) {
    return fail(kNonPerfect, error_doc("NonPerfectBoundary", e.what(), std::pair{e.n(), e.m()}));
  } catch (const hplax::TruncationError& e) {
    return fail(kTruncation, error_doc("TruncationError", e.what()));
  } catch (const std::exception& e) {
    return fail(kFailed, error_doc("Error", e.what()));
  }
  return kFailed;
}

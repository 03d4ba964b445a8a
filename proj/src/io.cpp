#include "hplax/io.hpp"

#include <stdexcept>

namespace hplax::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

void expect_kind(const json& j, const char* kind) {
  if (j.is_object() && j.contains("kind") && j.at("kind") != kind) {
    throw ParseError(std::string("expected a '") + kind + "' document, got '" + j.at("kind").dump() + "'");
  }
}

int parse_int(const json& j) {
  if (!j.is_number_integer()) throw ParseError("expected an integer, got " + j.dump());
  return j.get<int>();
}

json header(const char* kind) { return json{{"kind", kind}, {"convention", kConvention}}; }

}  // namespace

json emit_rat(const Rat& v) { return to_string(v); }

Rat parse_rat(const json& j) {
  if (j.is_number_integer()) return Rat(std::to_string(j.get<long long>()), 10);
  if (!j.is_string()) throw ParseError("expected a rational string, got " + j.dump());
  try {
    return hplax::parse_rat(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json emit_rats(const std::vector<Rat>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(emit_rat(r));
  return out;
}

std::vector<Rat> parse_rats(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rat> out;
  for (const auto& e : j) out.push_back(parse_rat(e));
  return out;
}

json emit_poly(const Poly& p) { return emit_rats(p.coefficients()); }

Poly parse_poly(const json& j) {
  std::vector<Rat> c = parse_rats(j);
  if (!c.empty() && is_zero(c.back())) throw ParseError("polynomial with a trailing zero coefficient");
  return Poly(std::move(c));
}

json emit_grid(const RatGrid& g) {
  json rows = json::array();
  for (int n = 0; n < g.rows(); ++n) {
    json row = json::array();
    for (int m = 0; m < g.cols(); ++m) row.push_back(g.has(n, m) ? emit_rat(g.at(n, m)) : json(nullptr));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatGrid parse_grid(const json& j) {
  if (!j.is_array()) throw ParseError("grid must be an array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
  RatGrid g(rows, cols);
  for (int n = 0; n < rows; ++n) {
    const json& row = j.at(static_cast<std::size_t>(n));
    if (!row.is_array() || static_cast<int>(row.size()) != cols) throw ParseError("ragged grid");
    for (int m = 0; m < cols; ++m) {
      const json& cell = row.at(static_cast<std::size_t>(m));
      if (!cell.is_null()) g.set(n, m, parse_rat(cell));
    }
  }
  return g;
}

json emit(const MomentSystem& s) {
  json out = header("moment_system");
  out["label"] = s.label;
  out["order"] = s.order();
  out["s1"] = emit_rats(s.s1);
  out["s2"] = emit_rats(s.s2);
  return out;
}

MomentSystem parse_moment_system(const json& j) {
  expect_kind(j, "moment_system");
  MomentSystem s;
  s.s1 = parse_rats(field(j, "s1"));
  s.s2 = parse_rats(field(j, "s2"));
  if (s.s1.size() != s.s2.size()) throw ParseError("s1 and s2 must have the same length");
  if (j.contains("label")) s.label = j.at("label").get<std::string>();
  return s;
}

json emit(const JFraction& f) {
  json out = header("jfraction");
  out["c"] = emit_rats(f.c);
  out["a"] = emit_rats(f.a);
  out["s0"] = emit_rat(f.s0);
  return out;
}

JFraction parse_jfraction(const json& j) {
  expect_kind(j, "jfraction");
  JFraction f{parse_rats(field(j, "c")), parse_rats(field(j, "a")), parse_rat(field(j, "s0"))};
  if (f.a.size() + 1 != f.c.size() && f.a.size() != f.c.size()) {
    throw ParseError("J-fraction needs len a = len c - 1 or len c");
  }
  for (const auto& a : f.a) {
    if (is_zero(a)) throw ParseError("J-fraction with a zero a coefficient");
  }
  return f;
}

json emit(const RecurrenceField& f) {
  json out = header("recurrence_field");
  out["window"] = {f.N, f.M};
  out["a"] = emit_grid(f.a);
  out["b"] = emit_grid(f.b);
  out["c"] = emit_grid(f.c);
  out["d"] = emit_grid(f.d);
  return out;
}

RecurrenceField parse_field(const json& j) {
  expect_kind(j, "recurrence_field");
  const json& w = field(j, "window");
  if (!w.is_array() || w.size() != 2) throw ParseError("window must be [N, M]");
  RecurrenceField f(parse_int(w[0]), parse_int(w[1]));
  const std::pair<const char*, RatGrid RecurrenceField::*> grids[] = {
      {"a", &RecurrenceField::a}, {"b", &RecurrenceField::b}, {"c", &RecurrenceField::c}, {"d", &RecurrenceField::d}};
  for (const auto& [name, member] : grids) {
    RatGrid g = parse_grid(field(j, name));
    if (g.rows() != f.N + 1 || g.cols() != f.M + 1) throw ParseError(std::string("grid ") + name + " has wrong shape");
    f.*member = std::move(g);
  }
  return f;
}

json emit(const BoundaryData& b) {
  json out = header("boundary");
  out["c_row"] = emit_rats(b.c_row);
  out["a_row"] = emit_rats(b.a_row);
  out["d_col"] = emit_rats(b.d_col);
  out["b_col"] = emit_rats(b.b_col);
  return out;
}

BoundaryData parse_boundary(const json& j) {
  expect_kind(j, "boundary");
  return {parse_rats(field(j, "c_row")), parse_rats(field(j, "a_row")), parse_rats(field(j, "d_col")),
          parse_rats(field(j, "b_col"))};
}

json emit(const SweepReport& r) {
  json out = header("sweep_report");
  out["window"] = {r.field.N, r.field.M};
  out["field"] = emit(r.field);
  out["divisions_checked"] = r.divisions_checked;
  if (r.failure) {
    out["failure"] = {{"error", "NonPerfectBoundary"},
                      {"index", {r.failure->n, r.failure->m}},
                      {"reason", r.failure->reason}};
  } else {
    out["failure"] = nullptr;
  }
  return out;
}

SweepReport parse_sweep_report(const json& j) {
  expect_kind(j, "sweep_report");
  SweepReport r;
  r.field = parse_field(field(j, "field"));
  r.divisions_checked = field(j, "divisions_checked").get<std::size_t>();
  const json& f = field(j, "failure");
  if (!f.is_null()) {
    const json& idx = field(f, "index");
    r.failure = SweepFailure{parse_int(idx.at(0)), parse_int(idx.at(1)), field(f, "reason").get<std::string>()};
  }
  return r;
}

json emit(const QdField& q) {
  json out = header("qd_field");
  out["V"] = emit_grid(q.V);
  out["W"] = emit_grid(q.W);
  return out;
}

MeasureModel parse_measure(const json& j) {
  if (j.contains("interval")) {
    const json& iv = j.at("interval");
    if (!iv.is_array() || iv.size() != 2) throw ParseError("interval must be [lo, hi]");
    try {
      return MeasureModel::interval(parse_rat(iv[0]), parse_rat(iv[1]));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  if (j.contains("atoms")) {
    std::vector<Atom> atoms;
    for (const auto& a : j.at("atoms")) {
      if (!a.is_array() || a.size() != 2) throw ParseError("atom must be [node, weight]");
      atoms.push_back({parse_rat(a[0]), parse_rat(a[1])});
    }
    try {
      return MeasureModel::discrete(std::move(atoms));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("measure needs 'interval' or 'atoms'");
}

json emit(const MeasureModel& mu) {
  if (!mu.is_discrete()) return {{"interval", {emit_rat(mu.as_interval().lo), emit_rat(mu.as_interval().hi)}}};
  json atoms = json::array();
  for (const auto& a : mu.as_discrete().atoms) atoms.push_back({emit_rat(a.node), emit_rat(a.weight)});
  return {{"atoms", atoms}};
}

MeasureModel parse_measure_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("measure string must be 'interval:lo,hi' or 'atoms:x@w,...'");
  const std::string kind = text.substr(0, colon);
  std::vector<std::string> parts;
  std::string rest = text.substr(colon + 1);
  for (std::size_t start = 0;;) {
    const auto comma = rest.find(',', start);
    parts.push_back(rest.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  try {
    if (kind == "interval") {
      if (parts.size() != 2) throw ParseError("interval string needs two endpoints");
      return MeasureModel::interval(hplax::parse_rat(parts[0]), hplax::parse_rat(parts[1]));
    }
    if (kind == "atoms") {
      std::vector<Atom> atoms;
      for (const auto& p : parts) {
        const auto at = p.find('@');
        if (at == std::string::npos) throw ParseError("atom '" + p + "' must be node@weight");
        atoms.push_back({hplax::parse_rat(p.substr(0, at)), hplax::parse_rat(p.substr(at + 1))});
      }
      return MeasureModel::discrete(std::move(atoms));
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown measure kind '" + kind + "'");
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace hplax::io

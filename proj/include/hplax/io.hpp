#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "hplax/bvp.hpp"
#include "hplax/classical.hpp"
#include "hplax/errors.hpp"
#include "hplax/measures.hpp"
#include "hplax/nnrr.hpp"

namespace hplax::io {

using json = nlohmann::json;

/// Malformed document or inline measure string.
class ParseError : public Error {
 public:
  using Error::Error;
};

inline constexpr const char* kConvention = "cauchy";

json emit_rat(const Rat& v);
/// Accepts "p", "p/q" or a JSON integer.
Rat parse_rat(const json& j);

json emit_rats(const std::vector<Rat>& v);
std::vector<Rat> parse_rats(const json& j);

json emit_poly(const Poly& p);
Poly parse_poly(const json& j);

/// [n][m] rows, null where a cell is absent.
json emit_grid(const RatGrid& g);
RatGrid parse_grid(const json& j);

json emit(const MomentSystem& s);
MomentSystem parse_moment_system(const json& j);

json emit(const JFraction& f);
JFraction parse_jfraction(const json& j);

json emit(const RecurrenceField& f);
RecurrenceField parse_field(const json& j);

json emit(const BoundaryData& b);
BoundaryData parse_boundary(const json& j);

json emit(const SweepReport& r);
SweepReport parse_sweep_report(const json& j);

json emit(const QdField& q);

/// "interval:lo,hi" or "atoms:node@weight,node@weight,...".
MeasureModel parse_measure_spec(const std::string& text);
/// {"interval": [lo, hi]} or {"atoms": [[node, weight], ...]}.
MeasureModel parse_measure(const json& j);
json emit(const MeasureModel& mu);

/// Parses text, mapping JSON syntax errors to ParseError.
json parse_text(const std::string& text);

}  // namespace hplax::io

#include "hplax/rat.hpp"

#include <stdexcept>

namespace hplax {

namespace {

bool is_integer_text(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

BigInt parse_int(std::string_view text) {
  if (!is_integer_text(text)) {
    throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
  }
  if (text[0] == '+') text.remove_prefix(1);
  return BigInt(std::string(text), 10);
}

}  // namespace

Rat make_rat(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::invalid_argument("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (text.substr(slash + 1).front() == '-' || text.substr(slash + 1).front() == '+') {
    throw std::invalid_argument("sign in denominator of '" + std::string(text) + "'");
  }
  return make_rat(parse_int(text.substr(0, slash)), den);
}

std::string to_string(const Rat& value) { return value.get_str(10); }

}  // namespace hplax

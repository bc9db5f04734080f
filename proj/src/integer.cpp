#include "residua/integer.hpp"

#include <climits>

#include "residua/errors.hpp"

namespace residua {

Integer parse_integer(std::string_view text, std::string_view field) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  bool ok = !digits.empty();
  for (char c : digits) {
    if (c < '0' || c > '9') {
      ok = false;
      break;
    }
  }
  if (!ok) {
    throw InvalidInput(std::string(field) + ": expected a decimal integer, got '" + std::string(text) + "'");
  }
  std::string buf(text.front() == '+' ? text.substr(1) : text);
  return Integer(buf, 10);
}

std::vector<Integer> parse_integer_list(std::string_view text, std::string_view field) {
  std::vector<Integer> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_integer(piece, field));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

int to_int(const Integer& value, std::string_view field) {
  if (!value.fits_sint_p() || value > INT_MAX / 2 || value < INT_MIN / 2) {
    throw InvalidInput(std::string(field) + ": value " + value.get_str() + " is out of range");
  }
  return static_cast<int>(value.get_si());
}

std::string join(const std::vector<Integer>& values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].get_str();
  }
  return out;
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace residua

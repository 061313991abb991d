#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>
#include <system_error>

#include "ctoep/io.hpp"

namespace ctoep::io {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

class TermReader {
 public:
  explicit TermReader(std::string_view s) : s_(s) {}

  bool done() const { return pos_ >= s_.size(); }

  // [sign] [number] [i|j] [/ number]; at least the number or the unit.
  std::complex<double> term(bool first) {
    double sign = 1;
    if (!done() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      sign = s_[pos_] == '-' ? -1 : 1;
      ++pos_;
    } else if (!first) {
      fail("expected '+' or '-' between terms");
    }
    double value = 1;
    const bool has_number = number(value);
    bool imaginary = false;
    if (!done() && (s_[pos_] == 'i' || s_[pos_] == 'j')) {
      imaginary = true;
      ++pos_;
    }
    if (!has_number && !imaginary) fail("expected a number or imaginary unit");
    if (!done() && s_[pos_] == '/') {
      ++pos_;
      double den = 0;
      if (!number(den)) fail("expected a denominator after '/'");
      if (den == 0) fail("zero denominator");
      value /= den;
    }
    value *= sign;
    return imaginary ? std::complex<double>{0, value} : std::complex<double>{value, 0};
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse '" + std::string(s_) + "' at offset " + std::to_string(pos_) +
                     ": " + why);
  }

 private:
  bool number(double& out) {
    if (done()) return false;
    const char c = s_[pos_];
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '.') return false;
    const char* first = s_.data() + pos_;
    const char* last = s_.data() + s_.size();
    auto [ptr, ec] = std::from_chars(first, last, out, std::chars_format::general);
    if (ec == std::errc::result_out_of_range) fail("number out of range");
    if (ec != std::errc{}) return false;
    pos_ += static_cast<std::size_t>(ptr - first);
    return true;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

double parse_real(std::string_view text) {
  const auto z = parse_complex(text);
  if (z.imag() != 0) throw ParseError("expected a real number, got '" + std::string(text) + "'");
  return z.real();
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty complex literal");
  TermReader reader(s);
  std::complex<double> sum{0, 0};
  bool first = true;
  while (!reader.done()) {
    sum += reader.term(first);
    first = false;
  }
  return sum;
}

std::complex<double> parse_polar(std::string_view text) {
  const auto sep = text.find_first_of(":@");
  if (sep == std::string_view::npos) {
    throw ParseError("polar form needs 'r:q' or 'r@q', got '" + std::string(text) + "'");
  }
  const double r = parse_real(text.substr(0, sep));
  const double q = parse_real(text.substr(sep + 1));
  if (!(r > 0)) throw InvalidGamma("polar radius must be positive");
  return std::polar(r, 2 * std::numbers::pi * q);
}

GammaParameter<double> parse_gamma(std::string_view text) {
  if (text.find_first_of(":@") != std::string_view::npos) return make_gamma(parse_polar(text));
  return make_gamma(parse_complex(text));
}

}  // namespace ctoep::io

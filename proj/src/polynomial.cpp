#include "routh/polynomial.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

#include "routh/error.hpp"

namespace routh {

namespace {

constexpr double kPairTolerance = 1e-12;
constexpr double kImaginaryResidue = 1e-9;
constexpr long kMaxDenominator = 1000000;

class SparseParser {
 public:
  explicit SparseParser(std::string_view text) : s_(text) {}

  Polynomial parse() {
    std::map<std::size_t, Rational> terms;
    skip_ws();
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [coef, power] = term();
      terms[power] += sign > 0 ? coef : -coef;
      first = false;
      skip_ws();
    }
    if (first) fail("no terms");
    std::size_t top = terms.rbegin()->first;
    std::vector<Rational> v(top + 1, Rational(0));
    for (const auto& [k, c] : terms) v[k] = c;
    return Polynomial(std::move(v));
  }

 private:
  std::pair<Rational, std::size_t> term() {
    Rational coef(1);
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = number();
      have_number = true;
      skip_ws();
      if (peek() == '*') {
        take();
        skip_ws();
        if (peek() != 's') fail("expected 's' after '*'");
      }
    }
    if (peek() != 's') {
      if (!have_number) fail("expected a coefficient or 's'");
      return {coef, 0};
    }
    take();
    skip_ws();
    std::size_t power = 1;
    if (peek() == '^') {
      take();
      skip_ws();
      const std::string digits = read_digits();
      if (digits.empty()) fail("expected exponent");
      power = std::stoul(digits);
    }
    return {coef, power};
  }

  Rational number() {
    std::string lit = read_digits();
    skip_ws();
    if (peek() == '/') {
      take();
      skip_ws();
      const std::string den = read_digits();
      if (den.empty()) fail("expected denominator");
      lit += "/" + den;
    }
    return Rational::parse(lit);
  }

  std::string read_digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out += take();
    return out;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char take() { return s_[pos_++]; }
  void skip_ws() {
    while (std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what +
                     " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

Polynomial parse_list(std::string_view text) {
  // Commas separate when present; otherwise blanks do.
  const bool commas = text.find(',') != std::string_view::npos;
  std::vector<Rational> descending;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = commas ? text.find(',', start) : start;
    if (!commas) {
      while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
      if (start == text.size()) break;
      stop = start;
      while (stop < text.size() && !std::isspace(static_cast<unsigned char>(text[stop]))) ++stop;
    }
    if (stop == std::string_view::npos) stop = text.size();
    const std::string_view token = text.substr(start, stop - start);
    if (commas && token.find_first_not_of(" \t\r\n") == std::string_view::npos) {
      throw ParseError("empty coefficient in '" + std::string(text) + "'");
    }
    descending.push_back(Rational::parse(token));
    start = stop + 1;
  }
  if (descending.empty()) throw ParseError("no coefficients given");
  return Polynomial(std::vector<Rational>(descending.rbegin(), descending.rend()));
}

using GaussianRational = std::pair<Rational, Rational>;

}  // namespace

Polynomial parse_poly(std::string_view text) {
  const bool sparse = text.find('s') != std::string_view::npos;
  Polynomial p = sparse ? SparseParser(text).parse() : parse_list(text);
  if (p.is_zero()) throw EmptyPolynomial("polynomial is identically zero");
  return p;
}

std::string render(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational c = p[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(c);
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != Rational(1)) os << mag << '*';
    os << 's';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::vector<std::string> descending_coefficients(const Polynomial& p) {
  std::vector<std::string> out;
  for (int k = p.degree(); k >= 0; --k) out.push_back(p[static_cast<std::size_t>(k)].to_string());
  return out;
}

Complex evaluate(const Polynomial& p, Complex z) {
  return evaluate(p, z, [](const Rational& c) { return Complex(c.to_double(), 0.0); });
}

Polynomial from_roots(std::span<const Complex> roots) {
  // Pair every non-real root with an unused conjugate partner.
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!std::isfinite(roots[i].real()) || !std::isfinite(roots[i].imag())) {
      throw InvalidArgument("non-finite root");
    }
    if (used[i] || std::abs(roots[i].imag()) <= kPairTolerance) continue;
    used[i] = true;
    bool paired = false;
    for (std::size_t j = i + 1; j < roots.size() && !paired; ++j) {
      if (!used[j] && std::abs(roots[j] - std::conj(roots[i])) <= kPairTolerance) {
        used[j] = true;
        paired = true;
      }
    }
    if (!paired) {
      std::ostringstream os;
      os << "complex root " << roots[i] << " has no conjugate partner";
      throw UnpairedComplexRoot(os.str());
    }
  }

  // Floating product, ascending.
  std::vector<Complex> fc{Complex(1.0, 0.0)};
  // Exact product over Q(i) of the binary root values.
  std::vector<GaussianRational> ec{{Rational(1), Rational(0)}};
  for (const Complex& r : roots) {
    fc.insert(fc.begin(), Complex(0.0, 0.0));
    for (std::size_t k = 0; k + 1 < fc.size(); ++k) fc[k] -= r * fc[k + 1];

    const Rational rr = Rational::from_double(r.real());
    const Rational ri = Rational::from_double(r.imag());
    ec.insert(ec.begin(), {Rational(0), Rational(0)});
    for (std::size_t k = 0; k + 1 < ec.size(); ++k) {
      const auto& [nr, ni] = ec[k + 1];
      ec[k].first -= rr * nr - ri * ni;
      ec[k].second -= rr * ni + ri * nr;
    }
  }

  bool exact_usable = true;
  for (const auto& [re, im] : ec) {
    if (!im.is_zero() || re.denominator() > kMaxDenominator) {
      exact_usable = false;
      break;
    }
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(fc.size());
  for (std::size_t k = 0; k < fc.size(); ++k) {
    if (exact_usable) {
      coeffs.push_back(ec[k].first);
      continue;
    }
    if (std::abs(fc[k].imag()) >= kImaginaryResidue) {
      throw UnpairedComplexRoot("imaginary residue in expanded coefficient");
    }
    coeffs.push_back(Rational::approximate(fc[k].real(), kMaxDenominator));
  }
  return Polynomial(std::move(coeffs));
}

std::pair<int, Polynomial> strip_origin_roots(const Polynomial& p) {
  if (p.is_zero()) throw EmptyPolynomial("polynomial is identically zero");
  const int k = p.order();
  return {k, p.shifted(-k)};
}

}  // namespace routh

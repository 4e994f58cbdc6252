#include "routh/sweep.hpp"

#include <cctype>

#include "routh/error.hpp"

namespace routh {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ParametricPolynomial ParametricPolynomial::parse(std::string_view text) {
  ParametricPolynomial out;
  int parameters = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t stop = text.find(',', start);
    const std::string_view token = trim(text.substr(start, stop == std::string_view::npos ? stop : stop - start));
    if (token.empty()) throw ParseError("empty coefficient in '" + std::string(text) + "'");
    if (token == "K") {
      ++parameters;
      out.descending_.emplace_back(std::nullopt);
    } else {
      out.descending_.emplace_back(Rational::parse(token));
    }
    if (stop == std::string_view::npos) break;
    start = stop + 1;
  }
  if (parameters == 0) throw NoParameter("no coefficient is the parameter K");
  if (parameters > 1) throw MultipleParameters("K appears in more than one coefficient");
  return out;
}

Polynomial ParametricPolynomial::at(const Rational& k) const {
  std::vector<Rational> ascending;
  for (auto it = descending_.rbegin(); it != descending_.rend(); ++it) ascending.push_back(it->value_or(k));
  return Polynomial(std::move(ascending));
}

std::pair<Rational, Rational> parse_range(std::string_view text) {
  // The separator is the first ':'; both sides may carry a sign.
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("range must be lo:hi");
  Rational lo = Rational::parse(text.substr(0, colon));
  Rational hi = Rational::parse(text.substr(colon + 1));
  if (!(lo < hi)) throw InvalidArgument("range needs lo < hi");
  return {lo, hi};
}

SweepResult sweep(const ParametricPolynomial& p, const Rational& lo, const Rational& hi, int steps) {
  if (steps < 2) throw InvalidArgument("sweep needs at least 2 steps");
  if (!(lo < hi)) throw InvalidArgument("range needs lo < hi");
  SweepResult r;
  r.lo = lo;
  r.hi = hi;
  r.steps = steps;
  const Rational step = (hi - lo) / Rational(steps - 1);
  std::optional<Rational> run_start;
  Rational previous;
  for (int i = 0; i < steps; ++i) {
    const Rational k = lo + step * Rational(i);
    Verdict v = Verdict::Undetermined;
    try {
      v = classify(p.at(k), Policy::Auto).verdict;
    } catch (const Error&) {
      v = Verdict::Undetermined;
    }
    r.samples.push_back({k, v});
    if (v == Verdict::Stable) {
      if (!run_start) run_start = k;
    } else if (run_start) {
      r.intervals.emplace_back(*run_start, previous);
      run_start.reset();
    }
    previous = k;
  }
  if (run_start) r.intervals.emplace_back(*run_start, previous);
  return r;
}

}  // namespace routh

// Runs the decision procedure on two small instances: one where
// H_3 = G_3 o (y^2 - 1), and one where deg G_3 = 6 does not divide deg H_7 = 14.

#include <iostream>

#include "powerdio/powerdio.hpp"

namespace {

void report(const char* label, const powerdio::PowerSumSpec& g, const powerdio::PowerSumSpec& h) {
  using namespace powerdio;
  std::cout << label << '\n';
  std::cout << "  G(x) = " << format_poly(expand(g), g.variable()) << '\n';
  std::cout << "  H(y) = " << format_poly(expand(h), h.variable()) << '\n';
  const Decision d = decide_infinite(g, h);
  std::cout << "  verdict: " << to_string(d.verdict) << '\n';
  if (d.witness) std::cout << "  P(y) = " << format_poly(*d.witness, "y") << '\n';
  for (const auto& r : d.reasons) std::cout << "  reason: " << r << '\n';
}

}  // namespace

int main() {
  using powerdio::parse_powersum;
  const auto g3 = parse_powersum("n=3; 1*(x^2); 1*(x+1)");
  report("G_3 against H_3", g3, parse_powersum("n=3; 1*(y^4-2*y^2+1); 1*(y^2)"));
  report("G_3 against H_7", g3, parse_powersum("n=7; 1*(y^2); 1*(y+2)"));

  const auto p = powerdio::parse_poly("y^2 - 1");
  const auto g = powerdio::expand(g3);
  const auto h = powerdio::expand(parse_powersum("n=3; 1*(y^4-2*y^2+1); 1*(y^2)"));
  std::cout << "solutions (P(t), t):\n";
  for (int t = -3; t <= 3; ++t) {
    const powerdio::Rational x = p(t);
    std::cout << "  (" << x << ", " << t << ")  G = " << g(x) << ", H = " << h(powerdio::Rational(t)) << '\n';
  }
}

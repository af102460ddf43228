#include "nclandau/star.hpp"

namespace nclandau {

void StarContext::validate() const {
  if (hbar <= 0) throw std::invalid_argument("hbar must be positive, got " + rational_to_string(hbar));
}

DiffOperator<GaussianRational> phase_action_operator(const PhasePoly& p, const StarContext& ctx) {
  const GaussianRational minus_i_hbar{Rational(0), Rational(-ctx.hbar)};
  // Group terms by momentum exponents so each position coefficient is
  // star-expanded once.
  std::map<std::pair<unsigned, unsigned>, ConfigPoly> by_momentum;
  for (const auto& [e, c] : p.terms())
    by_momentum[{e[2], e[3]}].add_term(ConfigPoly::Key{e[0], e[1]}, c);

  DiffOperator<GaussianRational> out;
  for (const auto& [mom, coeff] : by_momentum) {
    auto left = star_action_operator(coeff, ctx);
    auto right = DiffOperator<GaussianRational>::derivative(mom.first, mom.second,
                                                            detail::power(minus_i_hbar, mom.first + mom.second));
    out += compose(left, right);
  }
  return out;
}

}  // namespace nclandau

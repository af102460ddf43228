#pragma once

// Physical parameter point of the noncommutative Landau problem and every
// scalar derived from it: the factor Lambda-bar, effective field B-bar, the
// commutative Seiberg-Witten field strength, reduced mass and charge, and the
// analytic Landau levels. Radical-bearing quantities are evaluated in
// HPReal; rational ones stay exact.

#include "nclandau/star.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nclandau {

/// Raised when a parameter point violates a domain requirement. `quantity`
/// names the offending expression.
class ParameterError : public std::invalid_argument {
public:
  ParameterError(std::string quantity, const std::string& what)
      : std::invalid_argument(what), quantity_(std::move(quantity)) {}
  const std::string& quantity() const { return quantity_; }

private:
  std::string quantity_;
};

struct PlaneParams {
  Rational hbar{1};
  Rational theta{0};
  Rational e{1};
  Rational B{1};
  Rational m{1};
  Rational r{0};

  /// hbar^2 - 4 r (r-1) e hbar theta B.
  Rational discriminant() const { return hbar * hbar - 4 * r * (r - 1) * e * hbar * theta * B; }
  /// r (r-1) e theta B; zero exactly when the deformation decouples.
  Rational coupling() const { return r * (r - 1) * e * theta * B; }

  PlaneParams with_r(const Rational& new_r) const {
    PlaneParams p = *this;
    p.r = new_r;
    return p;
  }
};

/// Returns p unchanged or throws ParameterError naming hbar, m, or the
/// discriminant.
const PlaneParams& validate(const PlaneParams& p);

struct DerivedScalars {
  HPReal lambda_bar;
  HPReal b_bar;
  std::optional<HPReal> frak_b;  // absent when hbar - 4r(r-1)e theta B == 0
  HPReal m_star;
  HPReal e_star;
};

HPReal lambda_bar(const PlaneParams& p);
/// 1 - r(r-1) e theta B-bar / hbar.
HPReal lambda_bar_from_bbar(const PlaneParams& p);
HPReal effective_field(const PlaneParams& p);
/// (m*, e*) = (m / Lambda^2, e / Lambda).
std::pair<HPReal, HPReal> reduced_params(const PlaneParams& p);
/// hbar B / (hbar - 4 r (r-1) e theta B); throws when the denominator vanishes.
HPReal sw_field_strength(const PlaneParams& p);
/// B-bar recovered from the commutative field strength. Returns frak itself
/// in the removable limits r in {0,1}, e theta = 0.
HPReal bbar_from_frak(const HPReal& frak, const PlaneParams& p);
DerivedScalars derived_scalars(const PlaneParams& p);

/// hbar |e B| / m (n + 1/2) for n = 0..n_max.
std::vector<HPReal> landau_levels(const PlaneParams& p, int n_max);
/// hbar |e* B-bar| / m* (n + 1/2), the form before simplification.
std::vector<HPReal> landau_levels_deformed(const PlaneParams& p, int n_max);

/// Noncommutative gauge field ((r-1) B-bar y, r B-bar x) with HP coefficients.
std::pair<HPConfigPoly, HPConfigPoly> gauge_field_nc(const PlaneParams& p);

struct NaivePrescription {
  std::pair<ConfigPoly, ConfigPoly> fields;  // ((r-1) B y, r B x)
  Rational commutator_scale;                 // 1 - e r (r-1) theta B / hbar
};
NaivePrescription naive_prescription(const PlaneParams& p);

struct IdentityResult {
  std::string name;
  HPReal lhs;
  HPReal rhs;
  HPReal rel_residual;
};

struct IdentityReport {
  std::vector<IdentityResult> identities;
  HPReal max_residual{0};
};

/// Evaluates every scalar identity at the point; symmetric-gauge closed forms
/// are evaluated at r = 1/2 with the remaining parameters unchanged when that
/// point is valid.
IdentityReport identity_suite(const PlaneParams& p);

/// Star commutators of the kinematic momenta Pi_j = p_j - e A_j (A the
/// noncommutative field) next to their closed forms. The momentum pair is
/// evaluated as differential operators, so [Pi_x, Pi_y] also certifies that
/// the commutator is central.
struct KinematicCommutators {
  HPComplex x_pi_x;
  HPComplex x_pi_x_closed;  // i hbar [1 + 2(1-r)e theta B / D]
  HPComplex y_pi_y;
  HPComplex y_pi_y_closed;  // i hbar [1 + 2r e theta B / D]
  HPComplex pi_x_pi_y;
  HPComplex pi_x_pi_y_table;      // i e hbar B
  HPComplex pi_x_pi_y_alternate;  // i hbar B, the form missing the factor e
  HPReal non_central_residual{0}; // largest coefficient of [Pi_x, Pi_y] beyond the constant
};
KinematicCommutators kinematic_commutators(const PlaneParams& p);

/// |a - b| / max(|a|, |b|), zero when both vanish.
HPReal relative_residual(const HPReal& a, const HPReal& b);
HPReal relative_residual(const HPComplex& a, const HPComplex& b);

}  // namespace nclandau

#include "nclandau/osc.hpp"

#include "nclandau/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nclandau {

namespace {

double to_double(const HPReal& v) { return v.convert_to<double>(); }
double to_double(const Rational& q) { return q.convert_to<double>(); }
cplx to_cplx(const HPComplex& z) { return z.to_complex(); }
cplx to_cplx(const GaussianRational& g) { return {to_double(g.re()), to_double(g.im())}; }

void check_hbar(const PlaneParams& p, const OscBasis& b) {
  const double h = to_double(p.hbar);
  if (std::abs(b.hbar - h) > 1e-14 * std::max(1.0, h))
    throw std::invalid_argument("basis hbar does not match the parameter point");
}

ModeMatrix power(const ModeMatrix& m, unsigned k) {
  ModeMatrix out = ModeMatrix::identity(m.size());
  for (unsigned i = 0; i < k; ++i) out = out * m;
  return out;
}

template <class S>
KronOperator from_diff(const DiffOperator<S>& d, const OscBasis& b) {
  b.validate();
  const auto mo = mode_operators(b.padded(), b.length_scale, b.hbar);
  const cplx i_over_hbar(0.0, 1.0 / b.hbar);
  KronOperator out(b.padded());
  for (const auto& [ord, coeff] : d.terms()) {
    const cplx scale = std::pow(i_over_hbar, static_cast<int>(ord.first + ord.second));
    const ModeMatrix px = power(mo.momentum, ord.first);
    const ModeMatrix py = power(mo.momentum, ord.second);
    for (const auto& [mono, c] : coeff.terms()) {
      out += KronOperator::term(to_cplx(c) * scale, power(mo.position, mono[0]) * px, power(mo.position, mono[1]) * py);
    }
  }
  return out;
}

KronOperator field_times(const HPConfigPoly& a, const HPComplex& factor, const OscBasis& b) {
  return from_diff(DiffOperator<HPComplex>::multiplication(a * factor), b);
}

OperatorMatrix hermitian_dense(const KronOperator& op, std::size_t n, double* residual = nullptr) {
  OperatorMatrix m = op.to_dense(n);
  const double res = m.hermiticity_residual();
  if (residual) *residual = res;
  m.tag_hermitian(1e-12 * std::max(1.0, m.max_abs()));
  return m;
}

}  // namespace

OscBasis OscBasis::cyclotron(const PlaneParams& p, int n_per_mode) {
  OscBasis b;
  b.n_per_mode = n_per_mode;
  b.hbar = to_double(p.hbar);
  const double eb = std::abs(to_double(Rational(p.e * p.B)));
  b.length_scale = eb > 0 ? std::sqrt(b.hbar / eb) : 1.0;
  return b;
}

void OscBasis::validate() const {
  if (n_per_mode < 4) throw std::invalid_argument("nPerMode must be at least 4");
  if (!(length_scale > 0) || !std::isfinite(length_scale)) throw std::invalid_argument("lengthScale must be positive");
  if (!(hbar > 0) || !std::isfinite(hbar)) throw std::invalid_argument("hbar must be positive");
  if (pad < 0) throw std::invalid_argument("pad must be non-negative");
}

StateVector::StateVector(std::vector<cplx> v) : v_(std::move(v)) {
  const double n = norm();
  if (n == 0) throw std::invalid_argument("state vector must be nonzero");
  for (auto& z : v_) z /= n;
}

StateVector StateVector::basis_state(const OscBasis& b, int i, int j) {
  b.validate();
  if (i < 0 || j < 0 || i >= b.n_per_mode || j >= b.n_per_mode) throw std::out_of_range("basis state index");
  std::vector<cplx> v(b.dim(), cplx(0, 0));
  v[static_cast<std::size_t>(i) * static_cast<std::size_t>(b.n_per_mode) + static_cast<std::size_t>(j)] = 1;
  return StateVector(std::move(v));
}

double StateVector::norm() const {
  return std::sqrt(kernels::active().cdotc(v_.size(), v_.data(), v_.data()).real());
}

cplx expectation(const OperatorMatrix& m, const StateVector& psi) {
  if (m.dim() != psi.dim()) throw std::invalid_argument("dimension mismatch");
  const auto mv = m.apply(psi.amplitudes());
  return kernels::active().cdotc(mv.size(), psi.amplitudes().data(), mv.data());
}

ModeMatrix ModeMatrix::identity(std::size_t n) {
  ModeMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ModeMatrix ModeMatrix::adjoint() const {
  ModeMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ModeMatrix ModeMatrix::truncated(std::size_t n) const {
  if (n > n_) throw std::invalid_argument("truncation larger than matrix");
  ModeMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = (*this)(i, j);
  return out;
}

ModeMatrix operator*(const ModeMatrix& a, const ModeMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("mode matrix size mismatch");
  const auto& k = kernels::active();
  ModeMatrix out(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t l = 0; l < a.n_; ++l) {
      const cplx v = a(i, l);
      if (v != cplx(0, 0)) k.caxpy(a.n_, v, b.row(l), out.data_.data() + i * a.n_);
    }
  return out;
}

ModeOperators mode_operators(std::size_t n, double length_scale, double hbar) {
  ModeOperators m{ModeMatrix(n), ModeMatrix(n), ModeMatrix::identity(n)};
  const double xs = length_scale / std::sqrt(2.0);
  const double ps = hbar / (length_scale * std::sqrt(2.0));
  for (std::size_t k = 1; k < n; ++k) {
    const double s = std::sqrt(static_cast<double>(k));  // a[k-1, k]
    m.position(k - 1, k) = xs * s;
    m.position(k, k - 1) = xs * s;
    m.momentum(k - 1, k) = cplx(0, -ps * s);
    m.momentum(k, k - 1) = cplx(0, ps * s);
  }
  return m;
}

KronOperator KronOperator::term(cplx c, ModeMatrix a, ModeMatrix b) {
  if (a.size() != b.size()) throw std::invalid_argument("factor size mismatch");
  KronOperator k(a.size());
  k.terms_.push_back({c, std::move(a), std::move(b)});
  return k;
}

KronOperator& KronOperator::operator+=(const KronOperator& o) {
  if (size_ == 0) size_ = o.size_;
  if (o.size_ != 0 && o.size_ != size_) throw std::invalid_argument("factor size mismatch");
  for (const auto& t : o.terms_) {
    if (t.coeff == cplx(0, 0)) continue;
    auto it = std::find_if(terms_.begin(), terms_.end(),
                           [&](const Term& s) { return s.x_factor == t.x_factor && s.y_factor == t.y_factor; });
    if (it != terms_.end())
      it->coeff += t.coeff;
    else
      terms_.push_back(t);
  }
  return *this;
}

KronOperator& KronOperator::operator-=(const KronOperator& o) { return *this += o * cplx(-1, 0); }

KronOperator& KronOperator::operator*=(cplx s) {
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

KronOperator operator*(const KronOperator& a, const KronOperator& b) {
  if (a.size_ != b.size_) throw std::invalid_argument("factor size mismatch");
  KronOperator out(a.size_);
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) out += KronOperator::term(s.coeff * t.coeff, s.x_factor * t.x_factor, s.y_factor * t.y_factor);
  return out;
}

KronOperator KronOperator::adjoint() const {
  KronOperator out(size_);
  for (const auto& t : terms_) out.terms_.push_back({std::conj(t.coeff), t.x_factor.adjoint(), t.y_factor.adjoint()});
  return out;
}

KronOperator KronOperator::truncated(std::size_t n) const {
  KronOperator out(n);
  for (const auto& t : terms_) out.terms_.push_back({t.coeff, t.x_factor.truncated(n), t.y_factor.truncated(n)});
  return out;
}

OperatorMatrix KronOperator::to_dense(std::size_t n) const {
  if (n > size_) throw std::invalid_argument("dense size larger than factor size");
  const auto& k = kernels::active();
  OperatorMatrix out(n * n);
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t kk = 0; kk < n; ++kk) {
        const cplx a = t.coeff * t.x_factor(i, kk);
        if (a == cplx(0, 0)) continue;
        for (std::size_t j = 0; j < n; ++j) k.caxpy(n, a, t.y_factor.row(j), out.row(i * n + j) + kk * n);
      }
  }
  return out;
}

BasisOperators basis_operators(const OscBasis& b) {
  b.validate();
  const auto mo = mode_operators(b.padded(), b.length_scale, b.hbar);
  const cplx one(1, 0);
  return {KronOperator::term(one, mo.position, mo.one), KronOperator::term(one, mo.one, mo.position),
          KronOperator::term(one, mo.momentum, mo.one), KronOperator::term(one, mo.one, mo.momentum),
          KronOperator::term(one, mo.one, mo.one)};
}

BasisMatrices basis_matrices(const OscBasis& b) {
  const auto ops = basis_operators(b);
  const auto n = static_cast<std::size_t>(b.n_per_mode);
  return {hermitian_dense(ops.x, n), hermitian_dense(ops.y, n), hermitian_dense(ops.px, n), hermitian_dense(ops.py, n)};
}

MinimalCouplingOperators minimal_coupling_operators(const PlaneParams& p, const OscBasis& b) {
  validate(p);
  check_hbar(p, b);
  const auto ops = basis_operators(b);
  const HPReal hbar = to_hp(p.hbar);
  const HPReal d = hbar + sqrt(to_hp(p.discriminant()));
  const double lam = to_double(lambda_bar(p));
  const double cx = to_double(2 * to_hp((1 - p.r) * p.e * p.B) * hbar / d);
  const double cy = to_double(-2 * to_hp(p.r * p.e * p.B) * hbar / d);
  const double th = to_double(Rational(p.theta / p.hbar));
  const double r = to_double(p.r);
  return {ops.x + ops.py * cplx((r - 1) * th, 0), ops.y + ops.px * cplx(r * th, 0), ops.y * cplx(cx, 0) + ops.px * cplx(lam, 0),
          ops.x * cplx(cy, 0) + ops.py * cplx(lam, 0)};
}

MinimalCouplingMatrices minimal_coupling_matrices(const PlaneParams& p, const OscBasis& b) {
  const auto ops = minimal_coupling_operators(p, b);
  const auto n = static_cast<std::size_t>(b.n_per_mode);
  return {hermitian_dense(ops.X, n), hermitian_dense(ops.Y, n), hermitian_dense(ops.Pi_x, n), hermitian_dense(ops.Pi_y, n)};
}

KronOperator operator_from_diff(const DiffOperator<GaussianRational>& d, const OscBasis& b) { return from_diff(d, b); }
KronOperator operator_from_diff(const DiffOperator<HPComplex>& d, const OscBasis& b) { return from_diff(d, b); }

std::pair<KronOperator, KronOperator> kinematic_momenta(const PlaneParams& p, const OscBasis& b, HamiltonianRoute route) {
  validate(p);
  check_hbar(p, b);
  const auto ops = basis_operators(b);
  const auto [ax, ay] = gauge_field_nc(p);
  if (route == HamiltonianRoute::star_action) {
    const StarContext ctx{p.r, p.theta, p.hbar, p.e};
    const HPComplex minus_e(-to_hp(p.e));
    return {ops.px + from_diff(star_action_operator(ax, ctx) * minus_e, b),
            ops.py + from_diff(star_action_operator(ay, ctx) * minus_e, b)};
  }
  const HPComplex minus_e_star(-reduced_params(p).second);
  return {ops.px + field_times(ax, minus_e_star, b), ops.py + field_times(ay, minus_e_star, b)};
}

KronOperator deformed_hamiltonian_operator(const PlaneParams& p, const OscBasis& b, HamiltonianRoute route) {
  const auto [pix, piy] = kinematic_momenta(p, b, route);
  const double mass = route == HamiltonianRoute::star_action ? to_double(p.m) : to_double(reduced_params(p).first);
  return (pix * pix + piy * piy) * cplx(0.5 / mass, 0);
}

OperatorMatrix deformed_hamiltonian(const PlaneParams& p, const OscBasis& b, HamiltonianRoute route) {
  return hermitian_dense(deformed_hamiltonian_operator(p, b, route), static_cast<std::size_t>(b.n_per_mode));
}

std::vector<std::size_t> interior_indices(int n_per_mode, int limit) {
  std::vector<std::size_t> idx;
  for (int i = 0; i < limit; ++i)
    for (int j = 0; j < limit; ++j) idx.push_back(static_cast<std::size_t>(i * n_per_mode + j));
  return idx;
}

double interior_difference(const OperatorMatrix& a, const OperatorMatrix& b, const std::vector<std::size_t>& idx) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  double d = 0;
  for (std::size_t r : idx)
    for (std::size_t c : idx) d = std::max(d, std::abs(a(r, c) - b(r, c)));
  return d;
}

OperatorMatrix truncated_commutator(const KronOperator& a, const KronOperator& b, std::size_t n) {
  const KronOperator at = a.truncated(n), bt = b.truncated(n);
  return (at * bt - bt * at).to_dense(n);
}

LandauSpectrumReport landau_spectrum_check(const PlaneParams& p, const OscBasis& b, int n_levels) {
  validate(p);
  b.validate();
  const auto n = static_cast<std::size_t>(b.n_per_mode);
  LandauSpectrumReport rep;

  const KronOperator h_star = deformed_hamiltonian_operator(p, b, HamiltonianRoute::star_action);
  const KronOperator h_red = deformed_hamiltonian_operator(p, b, HamiltonianRoute::reduced);
  OperatorMatrix hs = hermitian_dense(h_star, n, &rep.hermiticity_residual);
  double res_red = 0;
  OperatorMatrix hr = hermitian_dense(h_red, n, &res_red);
  rep.hermiticity_residual = std::max(rep.hermiticity_residual, res_red);
  rep.route_difference = max_abs_difference(hs, hr);

  const auto values = hermitian_eigenvalues(hr);
  rep.e0_estimate = values.front();
  rep.e0_analytic = to_double(landau_levels(p, 0).front());
  rep.rel_err = rep.e0_analytic != 0 ? (rep.e0_estimate - rep.e0_analytic) / rep.e0_analytic : rep.e0_estimate;
  for (int k = 0; k < n_levels && k < static_cast<int>(values.size()); ++k) rep.lowest.push_back(values[static_cast<std::size_t>(k)]);

  const auto [m_star, e_star] = reduced_params(p);
  const HPReal eb = e_star * effective_field(p);
  const double hbar = to_double(p.hbar);
  const double omega = to_double(abs(eb) / m_star);
  for (double v : values)
    if (std::abs(v - rep.e0_analytic) <= 0.1 * hbar * omega) ++rep.near_ground_count;

  if (eb != 0) {
    rep.ladder_defined = true;
    const auto [pix, piy] = kinematic_momenta(p, b, HamiltonianRoute::reduced);
    const double sgn = eb > 0 ? 1.0 : -1.0;
    const double norm = 1.0 / std::sqrt(2.0 * hbar * to_double(abs(eb)));
    const KronOperator lower = (pix + piy * cplx(0, sgn)) * cplx(norm, 0);
    const KronOperator raise = lower.adjoint();
    const auto ops = basis_operators(b);
    const KronOperator ladder_h = (raise * lower + ops.one * cplx(0.5, 0)) * cplx(hbar * omega, 0);
    const auto idx = interior_indices(b.n_per_mode, b.n_per_mode - 2);
    rep.ladder_residual = interior_difference(hr, ladder_h.to_dense(n), idx);
    rep.ladder_commutator = interior_difference(truncated_commutator(lower, raise, n), OperatorMatrix::identity(n * n), idx);
  }
  return rep;
}

NaiveSpectrumReport naive_spectrum_check(const PlaneParams& p, const OscBasis& b) {
  validate(p);
  check_hbar(p, b);
  const auto n = static_cast<std::size_t>(b.n_per_mode);
  const auto np = naive_prescription(p);
  const StarContext ctx{p.r, p.theta, p.hbar, p.e};
  const auto ops = basis_operators(b);
  const GaussianRational minus_e(-p.e);
  const KronOperator pix = ops.px + operator_from_diff(star_action_operator(np.fields.first, ctx) * minus_e, b);
  const KronOperator piy = ops.py + operator_from_diff(star_action_operator(np.fields.second, ctx) * minus_e, b);

  NaiveSpectrumReport rep;
  rep.scale_analytic = to_double(np.commutator_scale);
  const double unit = to_double(Rational(p.e * p.hbar * p.B));  // [Pi_x, Pi_y] = i e hbar B * scale
  const auto idx = interior_indices(b.n_per_mode, b.n_per_mode - 2);
  const OperatorMatrix comm = truncated_commutator(pix, piy, n);
  if (unit != 0) {
    double sum = 0;
    for (std::size_t k : idx) sum += (comm(k, k) / cplx(0, unit)).real();
    rep.scale_estimate = sum / static_cast<double>(idx.size());
    rep.scale_spread = interior_difference(comm, OperatorMatrix::identity(n * n) * cplx(0, unit * rep.scale_estimate), idx);
  }
  const double mass = to_double(p.m);
  rep.spacing_estimate = std::abs(unit * rep.scale_estimate) / mass;
  rep.e0_analytic = std::abs(unit * rep.scale_analytic) / (2 * mass);

  const OperatorMatrix h = hermitian_dense((pix * pix + piy * piy) * cplx(0.5 / mass, 0), n);
  rep.e0_estimate = hermitian_eigenvalues(h).front();
  return rep;
}

std::string spectrum_csv_header() { return "r,theta,N,E0_estimate,E0_analytic,rel_err,ladder_residual"; }

std::string spectrum_csv_row(const PlaneParams& p, const OscBasis& b, const LandauSpectrumReport& rep) {
  std::ostringstream os;
  os.precision(12);
  os << rational_to_string(p.r) << ',' << rational_to_string(p.theta) << ',' << b.n_per_mode << ',' << rep.e0_estimate << ','
     << rep.e0_analytic << ',' << rep.rel_err << ',' << rep.ladder_residual;
  return os.str();
}

}  // namespace nclandau

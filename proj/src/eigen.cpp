#include "nclandau/eigen.hpp"

#include "nclandau/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nclandau {

namespace {

const kernels::KernelTable& K() { return kernels::active(); }

void require_hermitian(const OperatorMatrix& m) {
  if (!m.hermitian()) throw std::invalid_argument("eigensolver input is not tagged Hermitian");
}

// Implicit QL on a real symmetric tridiagonal matrix; e[i] couples i and i+1.
void tridiagonal_ql(std::vector<double>& d, std::vector<double> e) {
  const std::size_t n = d.size();
  if (n == 0) return;
  e.resize(n, 0.0);
  e[n - 1] = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= 1e-16 * dd) break;
      }
      if (m != l) {
        if (iter++ == 200) throw std::runtime_error("tridiagonal QL failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (std::size_t i = m; i-- > l;) {
          const double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

OperatorMatrix OperatorMatrix::identity(std::size_t dim) {
  OperatorMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  m.hermitian_ = true;
  return m;
}

OperatorMatrix OperatorMatrix::diagonal(const std::vector<double>& d) {
  OperatorMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  m.hermitian_ = true;
  return m;
}

double OperatorMatrix::hermiticity_residual() const {
  double r = 0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j) r = std::max(r, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return r;
}

void OperatorMatrix::tag_hermitian(double tol) {
  const double res = hermiticity_residual();
  if (res > tol)
    throw std::domain_error("matrix is not Hermitian: residual " + std::to_string(res) + " exceeds " +
                            std::to_string(tol));
  for (std::size_t i = 0; i < dim_; ++i) {
    (*this)(i, i) = cplx((*this)(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const cplx avg = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
      (*this)(i, j) = avg;
      (*this)(j, i) = std::conj(avg);
    }
  }
  hermitian_ = true;
}

OperatorMatrix OperatorMatrix::adjoint() const {
  OperatorMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  out.hermitian_ = hermitian_;
  return out;
}

cplx OperatorMatrix::trace() const {
  cplx t = 0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double OperatorMatrix::max_abs() const {
  double m = 0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
  K().caxpy(data_.size(), cplx(1.0, 0.0), o.data_.data(), data_.data());
  hermitian_ = hermitian_ && o.hermitian_;
  return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
  K().caxpy(data_.size(), cplx(-1.0, 0.0), o.data_.data(), data_.data());
  hermitian_ = hermitian_ && o.hermitian_;
  return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(cplx s) {
  for (auto& v : data_) v *= s;
  hermitian_ = hermitian_ && s.imag() == 0.0;
  return *this;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  const std::size_t n = a.dim_;
  OperatorMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik != cplx(0.0, 0.0)) K().caxpy(n, aik, b.row(k), c.row(i));
    }
  return c;
}

std::vector<cplx> OperatorMatrix::apply(const std::vector<cplx>& v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
  std::vector<cplx> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = K().cdotu(dim_, row(i), v.data());
  return out;
}

double max_abs_difference(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  return K().max_abs_diff(2 * a.data().size(), reinterpret_cast<const double*>(a.data().data()),
                          reinterpret_cast<const double*>(b.data().data()));
}

EigenSystem jacobi_eigensystem(const OperatorMatrix& m) {
  require_hermitian(m);
  const std::size_t n = m.dim();
  OperatorMatrix a = m;
  OperatorMatrix vt = OperatorMatrix::identity(n);  // row k holds eigenvector k

  double frob = 0;
  for (const auto& v : a.data()) frob += std::norm(v);
  const double stop = 1e-30 * frob;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (off <= stop || off == 0.0) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const cplx phase = apq / mag;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(tau * tau + 1.0));
        const double cs = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * cs;
        const cplx s = -sn * std::conj(phase);

        // A <- A V on columns p, q.
        for (std::size_t i = 0; i < n; ++i) {
          const cplx xp = a(i, p), xq = a(i, q);
          a(i, p) = cs * xp + s * xq;
          a(i, q) = -std::conj(s) * xp + cs * xq;
        }
        // A <- V^H A on rows p, q.
        K().crot(n, cs, std::conj(s), a.row(p), a.row(q));
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        K().crot(n, cs, s, vt.row(p), vt.row(q));
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  EigenSystem es;
  for (std::size_t k : order) {
    es.values.push_back(a(k, k).real());
    es.vectors.emplace_back(vt.row(k), vt.row(k) + n);
  }
  return es;
}

std::vector<double> householder_eigenvalues(const OperatorMatrix& m) {
  require_hermitian(m);
  const std::size_t n = m.dim();
  if (n == 0) return {};
  if (n == 1) return {m(0, 0).real()};
  std::vector<cplx> a = m.data();
  auto at = [&](std::size_t i, std::size_t j) -> cplx& { return a[i * n + j]; };

  std::vector<double> diag(n), off(n, 0.0);
  std::vector<cplx> v(n), p(n), w(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m2 = n - k - 1;
    double alpha2 = 0;
    for (std::size_t j = 0; j < m2; ++j) alpha2 += std::norm(at(k + 1 + j, k));
    const double alpha = std::sqrt(alpha2);
    if (alpha == 0.0) {
      off[k] = 0.0;
      continue;
    }
    const cplx x0 = at(k + 1, k);
    const double ax0 = std::abs(x0);
    const cplx phase = ax0 == 0.0 ? cplx(1.0, 0.0) : x0 / ax0;
    for (std::size_t j = 0; j < m2; ++j) v[j] = at(k + 1 + j, k);
    v[0] += phase * alpha;
    const double beta = 1.0 / (alpha * (alpha + ax0));
    off[k] = alpha;  // |-phase * alpha|

    for (std::size_t i = 0; i < m2; ++i) p[i] = beta * K().cdotu(m2, &at(k + 1 + i, k + 1), v.data());
    const cplx kk = 0.5 * beta * K().cdotc(m2, v.data(), p.data());
    for (std::size_t i = 0; i < m2; ++i) w[i] = p[i] - kk * v[i];
    for (std::size_t i = 0; i < m2; ++i) K().cher2_row(m2, -v[i], w.data(), -w[i], v.data(), &at(k + 1 + i, k + 1));
  }
  for (std::size_t k = 0; k < n; ++k) diag[k] = at(k, k).real();
  off[n - 2] = std::abs(at(n - 1, n - 2));
  off[n - 1] = 0.0;

  tridiagonal_ql(diag, off);
  std::sort(diag.begin(), diag.end());
  return diag;
}

std::vector<std::vector<std::size_t>> block_components(const OperatorMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m(i, j) != cplx(0.0, 0.0) || m(j, i) != cplx(0.0, 0.0)) {
        const std::size_t a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& g : groups)
    if (!g.empty()) out.push_back(std::move(g));
  return out;
}

std::vector<double> hermitian_eigenvalues(const OperatorMatrix& m) {
  require_hermitian(m);
  std::vector<double> all;
  for (const auto& comp : block_components(m)) {
    OperatorMatrix sub(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = 0; j < comp.size(); ++j) sub(i, j) = m(comp[i], comp[j]);
    sub.tag_hermitian(0.0);
    std::vector<double> ev = comp.size() <= 48 ? jacobi_eigensystem(sub).values : householder_eigenvalues(sub);
    all.insert(all.end(), ev.begin(), ev.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

double reconstruction_residual(const OperatorMatrix& m, const EigenSystem& es) {
  double worst = 0;
  for (std::size_t k = 0; k < es.values.size(); ++k) {
    std::vector<cplx> mv = m.apply(es.vectors[k]);
    double r = 0;
    for (std::size_t i = 0; i < mv.size(); ++i) r = std::max(r, std::abs(mv[i] - es.values[k] * es.vectors[k][i]));
    worst = std::max(worst, r);
  }
  return worst;
}

}  // namespace nclandau

#include "hga/applications.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "hga/errors.hpp"

namespace hga {
namespace {

using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::LLT<Eigen::MatrixXd> cholesky(const SymmetricMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.order());
  const Eigen::MatrixXd a = Eigen::Map<const RowMajor>(m.entries().data(), n, n);
  Eigen::LLT<Eigen::MatrixXd> llt(a);
  if (llt.info() != Eigen::Success) throw DefinitenessError("matrix is not positive definite");
  return llt;
}

// Relative slack for the equality case of the lower polynomial bound.
constexpr double kRoundingSlack = 1e-12;

struct VietaSums {
  std::vector<double> value;
  // Same sums over |roots|, the scale for comparisons.
  std::vector<double> magnitude;
};

// Elementary symmetric polynomials by subset enumeration; only for tiny degrees.
VietaSums vieta_sums(std::span<const double> roots) {
  const std::size_t n = roots.size();
  VietaSums e{std::vector<double>(n + 1, 0.0), std::vector<double>(n + 1, 0.0)};
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    double prod = 1.0;
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) {
        prod *= roots[i];
        ++k;
      }
    }
    e.value[k] += prod;
    e.magnitude[k] += std::abs(prod);
  }
  return e;
}

}  // namespace

SymmetricMatrix::SymmetricMatrix(std::size_t order, std::vector<double> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order == 0) throw ValidationError("matrix order must be at least 1");
  if (entries_.size() != order * order) {
    throw ValidationError("matrix of order " + std::to_string(order) + " needs " + std::to_string(order * order) +
                          " entries, got " + std::to_string(entries_.size()));
  }
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      const double v = entries_[i * order + j];
      if (!std::isfinite(v)) throw ValidationError("matrix entries must be finite");
      if (v != entries_[j * order + i]) {
        throw ValidationError("matrix is not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
}

PolynomialCoeffs::PolynomialCoeffs(std::vector<double> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.size() < 3) throw ValidationError("polynomial degree must be at least 2");
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw ValidationError("polynomial coefficients must be finite");
  }
  if (coeffs_.front() == 0.0) throw ValidationError("leading coefficient a_0 must be nonzero");
  if (coeffs_.back() == 0.0) throw ValidationError("constant coefficient a_n must be nonzero");
}

TraceDet factor_trace_det(const SymmetricMatrix& m) {
  const auto llt = cholesky(m);
  double trace = 0.0;
  for (std::size_t i = 0; i < m.order(); ++i) trace += m(i, i);
  const Eigen::VectorXd diag = llt.matrixLLT().diagonal();
  const double log_det = 2.0 * diag.array().log().sum();
  return {trace, std::exp(log_det), log_det};
}

double trace_of_inverse(const SymmetricMatrix& m) {
  const auto llt = cholesky(m);
  const auto n = static_cast<Eigen::Index>(m.order());
  // trace(A^-1) = trace(L^-T L^-1) = ||L^-1||_F^2
  const Eigen::MatrixXd l_inv = llt.matrixL().solve(Eigen::MatrixXd::Identity(n, n));
  return l_inv.squaredNorm();
}

double trace_inverse_upper_bound_log(double trace, double log_det, std::size_t n) {
  if (!(trace > 0.0) || !std::isfinite(log_det)) throw DomainError("trace must be positive and ln det finite");
  if (n < 1) throw DomainError("order must be at least 1");
  const double nn = static_cast<double>(n);
  return std::exp(1.0 + (nn - 1.0) * std::log(trace / nn) - log_det) + nn * nn / trace;
}

double trace_inverse_upper_bound(double trace, double det, std::size_t n) {
  if (!(det > 0.0)) throw DomainError("determinant must be positive");
  return trace_inverse_upper_bound_log(trace, std::log(det), n);
}

TraceVerdict verify_trace_bound(const SymmetricMatrix& m) {
  if (m.order() < 2) throw SizeError("trace bound verification needs order >= 2");
  const TraceDet td = factor_trace_det(m);
  const double tinv = trace_of_inverse(m);
  const double bound = trace_inverse_upper_bound_log(td.trace, td.log_det, m.order());
  return {tinv, bound, bound / tinv, tinv < bound};
}

PolynomialCoeffs expand_from_roots(std::span<const double> roots) {
  if (roots.size() < 2) throw DomainError("need at least two roots");
  std::vector<double> c{1.0};
  for (double r : roots) {
    if (!std::isfinite(r)) throw DomainError("roots must be finite");
    // (c_0 x^k + ... + c_k)(x - r)
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k] += c[k];
      next[k + 1] -= r * c[k];
    }
    c = std::move(next);
  }
  if (roots.size() <= 4) {
    const VietaSums e = vieta_sums(roots);
    for (std::size_t k = 0; k < c.size(); ++k) {
      const double expected = (k % 2 == 0 ? 1.0 : -1.0) * e.value[k];
      if (std::abs(c[k] - expected) > 1e-12 * e.magnitude[k]) {
        throw std::logic_error("polynomial expansion disagrees with the Vieta sums");
      }
    }
  }
  return PolynomialCoeffs(std::move(c));
}

double fransen_lohne_lower(const PolynomialCoeffs& p) {
  const double a1 = p[1];
  if (a1 == 0.0) throw DegenerateInputError("a_1 = 0: the roots cannot all be positive");
  const double n = static_cast<double>(p.degree());
  return n * n * std::abs(p[0] * p[p.degree()] / a1);
}

double reverse_upper(const PolynomialCoeffs& p) {
  const double lower = fransen_lohne_lower(p);
  const double n = static_cast<double>(p.degree());
  const double a0 = std::abs(p[0]);
  const double mean_root = std::abs(p[1] / (n * p[0]));
  return lower + std::exp(1.0 + std::log(a0) + (n - 1.0) * std::log(mean_root));
}

PolynomialVerdict verify_polynomial_bounds(std::span<const double> roots) {
  for (double r : roots) {
    if (!(r > 0.0)) throw DomainError("all roots must be positive");
  }
  const PolynomialCoeffs p = expand_from_roots(roots);
  const double lower = fransen_lohne_lower(p);
  const double upper = reverse_upper(p);
  const double value = std::abs(p[p.degree() - 1]);
  const bool ok = lower <= value * (1.0 + kRoundingSlack) && value <= upper;
  return {lower, value, upper, ok};
}

}  // namespace hga

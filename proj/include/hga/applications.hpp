#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hga {

/// Dense symmetric matrix stored row-major.
class SymmetricMatrix {
public:
  /// Requires entries.size() == order * order and exact symmetry.
  SymmetricMatrix(std::size_t order, std::vector<double> entries);

  std::size_t order() const noexcept { return order_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
  std::span<const double> entries() const noexcept { return entries_; }

private:
  std::size_t order_;
  std::vector<double> entries_;
};

/// Coefficients a_0 .. a_n in descending degree.
class PolynomialCoeffs {
public:
  explicit PolynomialCoeffs(std::vector<double> coefficients);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  double operator[](std::size_t k) const { return coeffs_[k]; }
  std::span<const double> coefficients() const noexcept { return coeffs_; }

private:
  std::vector<double> coeffs_;
};

struct TraceDet {
  double trace;
  double det;
  /// ln det, finite even when det over- or underflows.
  double log_det;
};

/// Trace and determinant via Cholesky; throws DefinitenessError if A is not SPD.
TraceDet factor_trace_det(const SymmetricMatrix& m);

/// trace(A^-1) as the squared Frobenius norm of L^-1, from the Cholesky factor.
double trace_of_inverse(const SymmetricMatrix& m);

/// Upper bound on trace(A^-1): e (trace/n)^(n-1) / det + n^2 / trace.
double trace_inverse_upper_bound(double trace, double det, std::size_t n);
/// Same bound taking ln det, for spectra whose determinant leaves the double range.
double trace_inverse_upper_bound_log(double trace, double log_det, std::size_t n);

struct TraceVerdict {
  double trace_inverse;
  double bound;
  /// bound / trace_inverse
  double slack_ratio;
  bool passed;
};

/// Checks trace(A^-1) < bound. Requires order >= 2.
TraceVerdict verify_trace_bound(const SymmetricMatrix& m);

/// Monic polynomial prod (x - r_i), expanded by incremental convolution.
PolynomialCoeffs expand_from_roots(std::span<const double> roots);

/// n^2 |a_0 a_n / a_1|, a lower bound on |a_{n-1}| for positive roots.
double fransen_lohne_lower(const PolynomialCoeffs& p);

/// n^2 |a_0 a_n / a_1| + e |a_0| |a_1 / (n a_0)|^(n-1), an upper bound on |a_{n-1}|.
double reverse_upper(const PolynomialCoeffs& p);

struct PolynomialVerdict {
  double lower;
  double value;
  double upper;
  bool passed;
};

/// Expands the polynomial with the given positive roots and checks lower <= |a_{n-1}| <= upper.
PolynomialVerdict verify_polynomial_bounds(std::span<const double> roots);

}  // namespace hga

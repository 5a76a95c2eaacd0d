#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qhl {

/// Element of Z[q]: dense coefficient vector, index i = coefficient of q^i.
/// Canonical form has no trailing zeros; the zero element is the empty vector.
class QCoeff {
 public:
  QCoeff() = default;
  QCoeff(long value) : coeffs_(value == 0 ? 0 : 1, mpz_class(value)) {}
  explicit QCoeff(mpz_class value) {
    if (value != 0) coeffs_.push_back(std::move(value));
  }
  explicit QCoeff(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static QCoeff q_power(int k);
  static const QCoeff& one();
  static const QCoeff& q();

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree in q; -1 for the zero element.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  mpz_class coeff(int i) const;

  QCoeff operator-() const;
  QCoeff& operator+=(const QCoeff& rhs);
  QCoeff& operator-=(const QCoeff& rhs);
  QCoeff& operator*=(const QCoeff& rhs);

  friend QCoeff operator+(QCoeff lhs, const QCoeff& rhs) { return lhs += rhs; }
  friend QCoeff operator-(QCoeff lhs, const QCoeff& rhs) { return lhs -= rhs; }
  friend QCoeff operator*(const QCoeff& lhs, const QCoeff& rhs);

  bool operator==(const QCoeff& rhs) const = default;

  /// Exact quotient; throws std::domain_error unless rhs divides *this in Z[q].
  QCoeff div_exact(const QCoeff& rhs) const;

  mpz_class eval_int(const mpz_class& q_value) const;
  mpq_class eval_rational(const mpq_class& q_value) const;

  /// Rendering like "1 + 2*q + q^2" (debugging and --text reports).
  std::string to_string() const;

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

}  // namespace qhl

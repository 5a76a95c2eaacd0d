#include "qhl/qcoeff.hpp"

#include <sstream>
#include <stdexcept>

namespace qhl {

QCoeff QCoeff::q_power(int k) {
  if (k < 0) throw std::invalid_argument("QCoeff::q_power: negative exponent");
  std::vector<mpz_class> c(static_cast<size_t>(k) + 1, mpz_class(0));
  c.back() = 1;
  return QCoeff(std::move(c));
}

const QCoeff& QCoeff::one() {
  static const QCoeff v(1);
  return v;
}

const QCoeff& QCoeff::q() {
  static const QCoeff v = q_power(1);
  return v;
}

mpz_class QCoeff::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

void QCoeff::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QCoeff QCoeff::operator-() const {
  QCoeff r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QCoeff& QCoeff::operator+=(const QCoeff& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpz_class(0));
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QCoeff& QCoeff::operator-=(const QCoeff& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpz_class(0));
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QCoeff operator*(const QCoeff& lhs, const QCoeff& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return QCoeff();
  std::vector<mpz_class> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, mpz_class(0));
  for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return QCoeff(std::move(out));
}

QCoeff& QCoeff::operator*=(const QCoeff& rhs) {
  *this = *this * rhs;
  return *this;
}

QCoeff QCoeff::div_exact(const QCoeff& rhs) const {
  if (rhs.is_zero()) throw std::domain_error("QCoeff::div_exact: division by zero");
  if (is_zero()) return QCoeff();
  if (degree() < rhs.degree()) throw std::domain_error("QCoeff::div_exact: not divisible");
  // Long division from the top; every leading-coefficient division must be exact.
  std::vector<mpz_class> rem = coeffs_;
  std::vector<mpz_class> quot(coeffs_.size() - rhs.coeffs_.size() + 1, mpz_class(0));
  const mpz_class& lead = rhs.coeffs_.back();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    mpz_class& top = rem[static_cast<size_t>(k) + rhs.coeffs_.size() - 1];
    if (top == 0) continue;
    mpz_class qk, r;
    mpz_tdiv_qr(qk.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (r != 0) throw std::domain_error("QCoeff::div_exact: not divisible");
    quot[static_cast<size_t>(k)] = qk;
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
      rem[static_cast<size_t>(k) + j] -= qk * rhs.coeffs_[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw std::domain_error("QCoeff::div_exact: not divisible");
  return QCoeff(std::move(quot));
}

mpz_class QCoeff::eval_int(const mpz_class& q_value) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q_value + *it;
  return acc;
}

mpq_class QCoeff::eval_rational(const mpq_class& q_value) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * q_value + mpq_class(*it);
    acc.canonicalize();
  }
  return acc;
}

std::string QCoeff::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << "q";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace qhl

#pragma once

// Univariate polynomials over the exact rationals, coefficients stored lowest
// degree first with no trailing zeros (the zero polynomial is the empty
// coefficient list, degree -1).

#include <initializer_list>
#include <string>
#include <vector>

#include "evo/rational.hpp"

namespace evo {

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly zero() { return Poly(); }
  static Poly constant(const Rat& c);
  // The monomial x.
  static Poly x();

  const std::vector<Rat>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const;
  const Rat& coeff(int i) const;

  Rat eval(const Rat& at) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly pow(int e) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

  // Quotient/remainder by a nonzero divisor; exact over the rationals.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  bool divides(const Poly& dividend) const;

  // Human-readable rendering, e.g. "x^4 - 4*x^3 + 1".
  std::string str() const;

 private:
  void trim();
  std::vector<Rat> c_;
};

}  // namespace evo

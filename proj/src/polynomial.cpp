#include "evo/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace evo {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::x() { return Poly{0, 1}; }

void Poly::trim() {
  while (!c_.empty() && evo::is_zero(c_.back())) c_.pop_back();
}

bool Poly::is_monic() const { return !c_.empty() && c_.back() == 1; }

const Rat& Poly::coeff(int i) const {
  static const Rat kZero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

Rat Poly::eval(const Rat& at) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (c_.empty() || o.c_.empty()) return Poly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

Poly Poly::pow(int e) const {
  Poly acc = Poly::constant(Rat(1));
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  std::vector<Rat> rem = c_;
  std::vector<Rat> quot;
  const int dd = divisor.degree();
  const Rat& lead = divisor.c_.back();
  while (static_cast<int>(rem.size()) - 1 >= dd) {
    if (evo::is_zero(rem.back())) {
      rem.pop_back();
      continue;
    }
    const int shift = static_cast<int>(rem.size()) - 1 - dd;
    const Rat f = rem.back() / lead;
    if (static_cast<int>(quot.size()) < shift + 1) quot.resize(shift + 1, Rat(0));
    quot[shift] = f;
    for (int i = 0; i <= dd; ++i) rem[shift + i] -= f * divisor.c_[i];
    rem.pop_back();  // leading term cancelled exactly
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

bool Poly::divides(const Poly& dividend) const {
  if (is_zero()) return dividend.is_zero();
  return dividend.divmod(*this).second.is_zero();
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const Rat& co = c_[d];
    if (evo::is_zero(co)) continue;
    const bool neg = sgn(co) < 0;
    Rat mag = abs(co);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = (mag == 1);
    if (d == 0 || !unit) out += rat_str(mag);
    if (d > 0) {
      if (!unit) out += "*";
      out += "x";
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

}  // namespace evo

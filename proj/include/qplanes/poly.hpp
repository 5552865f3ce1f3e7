#pragma once

#include "qplanes/rational.hpp"

#include <algorithm>
#include <vector>

namespace qplanes {

// Univariate polynomial over the rationals, coefficients lowest degree first.
class Poly {
public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational> &coeffs() const { return c_; }

  Rational operator()(const Rational &x) const
  {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }

  Poly derivative() const
  {
    std::vector<Rational> out;
    for (std::size_t i = 1; i < c_.size(); ++i) {
      out.push_back(c_[i] * static_cast<long>(i));
    }
    return Poly(std::move(out));
  }

  friend Poly operator+(const Poly &a, const Poly &b)
  {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return Poly(std::move(out));
  }

  friend Poly operator-(const Poly &a, const Poly &b)
  {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
    return Poly(std::move(out));
  }

  friend Poly operator*(const Poly &a, const Poly &b)
  {
    if (a.c_.empty() || b.c_.empty()) {
      return Poly();
    }
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        out[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly &, const Poly &) = default;

private:
  void trim()
  {
    while (!c_.empty() && c_.back() == 0) {
      c_.pop_back();
    }
  }

  std::vector<Rational> c_;
};

}  // namespace qplanes

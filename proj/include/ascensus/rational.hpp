// Copyright 2026 The as-census Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ASCENSUS_RATIONAL_HPP_
#define ASCENSUS_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <utility>

#include "ascensus/errors.hpp"
#include "ascensus/poly.hpp"

namespace ascensus {

/// num/den in lowest terms with den monic. Whether deg num <= deg den is
/// not part of the invariant.
template <FiniteField F>
class RationalFn {
 public:
  /// Reduces to lowest terms. Throws DivisionByZero if den = 0.
  RationalFn(Poly<F> num, Poly<F> den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
      throw DivisionByZero("rational function with zero denominator");
    auto g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    if (!den_.is_monic()) {
      auto li = den_.field().inv(den_.leading());
      num_ = scale(num_, li);
      den_ = scale(den_, li);
    }
  }
  explicit RationalFn(Poly<F> poly)
      : num_(std::move(poly)), den_(Poly<F>::one(num_.field_handle())) {}

  static RationalFn zero(typename Poly<F>::FieldHandle field) {
    return RationalFn(Poly<F>(std::move(field)));
  }

  const Poly<F>& num() const noexcept { return num_; }
  const Poly<F>& den() const noexcept { return den_; }
  const F& field() const noexcept { return num_.field(); }
  const typename Poly<F>::FieldHandle& field_handle() const noexcept {
    return num_.field_handle();
  }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Poly<F> num_;
  Poly<F> den_;
};

template <FiniteField F>
RationalFn<F> operator+(const RationalFn<F>& a, const RationalFn<F>& b) {
  if (a.den() == b.den()) return RationalFn<F>(a.num() + b.num(), a.den());
  return RationalFn<F>(a.num() * b.den() + b.num() * a.den(),
                       a.den() * b.den());
}

template <FiniteField F>
RationalFn<F> operator-(const RationalFn<F>& a) {
  return RationalFn<F>(-a.num(), a.den());
}

template <FiniteField F>
RationalFn<F> operator-(const RationalFn<F>& a, const RationalFn<F>& b) {
  return a + (-b);
}

template <FiniteField F>
RationalFn<F> operator*(const RationalFn<F>& a, const RationalFn<F>& b) {
  return RationalFn<F>(a.num() * b.num(), a.den() * b.den());
}

template <FiniteField F>
RationalFn<F> scale(const RationalFn<F>& a, const typename F::Elem& c) {
  return RationalFn<F>(scale(a.num(), c), a.den());
}

template <FiniteField F>
RationalFn<F> pow(const RationalFn<F>& a, std::uint64_t e) {
  // Powers of coprime polynomials stay coprime.
  return RationalFn<F>(pow(a.num(), e), pow(a.den(), e));
}

/// "num/den" using the polynomial text form.
inline std::string to_string(const RationalFn<GaloisField>& f) {
  return to_string(f.num()) + "/" + to_string(f.den());
}

/// Parses "num/den" or a bare polynomial "num". Throws ParseError or
/// DivisionByZero.
inline RationalFn<GaloisField> parse_rational(const FieldPtr& field,
                                              const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos)
    return RationalFn<GaloisField>(parse_poly(field, text));
  return RationalFn<GaloisField>(parse_poly(field, text.substr(0, slash)),
                                 parse_poly(field, text.substr(slash + 1)));
}

}  // namespace ascensus

#endif  // ASCENSUS_RATIONAL_HPP_

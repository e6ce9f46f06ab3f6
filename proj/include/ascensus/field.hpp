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

// Finite fields F_q, q = p^n, in a polynomial basis over F_p.
//
// An element is stored as the integer code sum_i a_i p^i of its coordinate
// vector (a_0, ..., a_{n-1}) with respect to 1, t, ..., t^{n-1}, where t is
// a root of the field's modulus. Codes double as the deterministic
// enumeration order of the field.

#ifndef ASCENSUS_FIELD_HPP_
#define ASCENSUS_FIELD_HPP_

#include <compare>
#include <concepts>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ascensus/budget.hpp"
#include "ascensus/errors.hpp"

namespace ascensus {

/// Requirements on a finite field "context" object. Elements are plain
/// values; every operation goes through the field so that the same element
/// type can serve many fields of one family.
template <class F>
concept FiniteField = requires(const F& f, const typename F::Elem& a) {
  typename F::Elem;
  { f.zero() } -> std::same_as<typename F::Elem>;
  { f.one() } -> std::same_as<typename F::Elem>;
  { f.add(a, a) } -> std::same_as<typename F::Elem>;
  { f.sub(a, a) } -> std::same_as<typename F::Elem>;
  { f.neg(a) } -> std::same_as<typename F::Elem>;
  { f.mul(a, a) } -> std::same_as<typename F::Elem>;
  { f.inv(a) } -> std::same_as<typename F::Elem>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.pth_root(a) } -> std::same_as<typename F::Elem>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
  { f.order() } -> std::convertible_to<std::uint64_t>;
  { a == a } -> std::convertible_to<bool>;
};

bool is_prime(std::uint64_t n) noexcept;

/// F_{p^n}. Construct through make(); instances are immutable and shared.
class GaloisField {
 public:
  struct Elem {
    std::uint32_t code = 0;
    friend auto operator<=>(const Elem&, const Elem&) = default;
  };

  /// Builds F_{p^n} with the canonical modulus: the lexicographically
  /// smallest monic irreducible of degree n, comparing coefficient tuples
  /// from the constant term up. Throws InvalidPrime, InvalidDegree, or
  /// BudgetExceeded when p^n does not fit a 32-bit code.
  static std::shared_ptr<const GaloisField> make(std::uint32_t p,
                                                 std::uint32_t n);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return n_; }
  std::uint64_t order() const noexcept { return q_; }
  /// Coefficients of the modulus, constant term first, length n + 1.
  /// Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept {
    return modulus_;
  }

  Elem zero() const noexcept { return {0}; }
  Elem one() const noexcept { return {1}; }
  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const noexcept;
  /// Element with the given code; throws std::out_of_range if code >= q.
  Elem from_code(std::uint64_t code) const;
  /// Element with coordinates `digits` (low to high, each < p, length <= n).
  Elem from_digits(const std::vector<std::uint32_t>& digits) const;
  std::vector<std::uint32_t> digits(Elem a) const;

  bool is_zero(Elem a) const noexcept { return a.code == 0; }
  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  /// Throws DivisionByZero on zero.
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  /// a^(p^e).
  Elem frobenius(Elem a, std::uint32_t e = 1) const noexcept;
  /// The unique b with b^p = a, namely a^(p^(n-1)).
  Elem pth_root(Elem a) const noexcept { return frobenius(a, n_ - 1); }
  /// Whether a lies in the prime subfield F_p.
  bool in_prime_field(Elem a) const noexcept { return a.code < p_; }

  /// All q elements in code order. Throws BudgetExceeded past the cap.
  std::vector<Elem> elements(const Budget& budget = {}) const;

  std::string to_string(Elem a) const { return std::to_string(a.code); }

  friend bool operator==(const GaloisField& a, const GaloisField& b) noexcept {
    return a.p_ == b.p_ && a.n_ == b.n_;
  }

 private:
  GaloisField(std::uint32_t p, std::uint32_t n,
              std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  std::uint32_t n_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> place_;  // p^i for i < n
};

using FieldPtr = std::shared_ptr<const GaloisField>;
using Fq = GaloisField;

static_assert(FiniteField<GaloisField>);

}  // namespace ascensus

#endif  // ASCENSUS_FIELD_HPP_

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

#ifndef ASCENSUS_EXTENSION_HPP_
#define ASCENSUS_EXTENSION_HPP_

#include <cstdint>
#include <limits>
#include <memory>
#include <vector>

#include "ascensus/errors.hpp"
#include "ascensus/field.hpp"
#include "ascensus/poly.hpp"

namespace ascensus {

template <FiniteField F>
std::uint32_t absolute_degree(const F& f) {
  return f.absolute_degree();
}
inline std::uint32_t absolute_degree(const GaloisField& f) {
  return f.degree();
}

/// The residue field Base[t]/(modulus) for a monic irreducible modulus.
/// Elements are coordinate vectors over Base of length degree().
template <FiniteField Base>
class ExtensionField {
 public:
  using Elem = std::vector<typename Base::Elem>;
  using BaseElem = typename Base::Elem;

  /// Throws NotMonic or InvalidDegree. Irreducibility is the caller's
  /// responsibility (factors out of factor() are irreducible).
  static std::shared_ptr<const ExtensionField> make(Poly<Base> modulus) {
    return std::shared_ptr<const ExtensionField>(
        new ExtensionField(std::move(modulus)));
  }

  const Base& base() const noexcept { return modulus_.field(); }
  const std::shared_ptr<const Base>& base_handle() const noexcept {
    return modulus_.field_handle();
  }
  const Poly<Base>& modulus() const noexcept { return modulus_; }
  std::uint32_t degree() const noexcept { return e_; }
  std::uint32_t absolute_degree() const {
    return ascensus::absolute_degree(base()) * e_;
  }
  std::uint64_t characteristic() const {
    return base().characteristic();
  }
  /// |Base|^degree. Throws BudgetExceeded if it overflows 64 bits.
  std::uint64_t order() const {
    std::uint64_t q = base().order(), v = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
      if (v > std::numeric_limits<std::uint64_t>::max() / q)
        throw BudgetExceeded("residue field order",
                             "residue field order overflows 64 bits");
      v *= q;
    }
    return v;
  }

  Elem zero() const { return Elem(e_, base().zero()); }
  Elem one() const { return embed(base().one()); }
  Elem embed(const BaseElem& c) const {
    Elem v = zero();
    v[0] = c;
    return v;
  }
  /// The class of t, a root of the modulus.
  Elem generator() const {
    if (e_ == 1) return embed(base().neg(modulus_.coeff(0)));
    Elem v = zero();
    v[1] = base().one();
    return v;
  }

  bool is_zero(const Elem& a) const {
    for (const auto& c : a)
      if (!base().is_zero(c)) return false;
    return true;
  }
  bool in_base(const Elem& a) const {
    for (std::size_t i = 1; i < a.size(); ++i)
      if (!base().is_zero(a[i])) return false;
    return true;
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem v(e_);
    for (std::uint32_t i = 0; i < e_; ++i) v[i] = base().add(a[i], b[i]);
    return v;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem v(e_);
    for (std::uint32_t i = 0; i < e_; ++i) v[i] = base().sub(a[i], b[i]);
    return v;
  }
  Elem neg(const Elem& a) const {
    Elem v(e_);
    for (std::uint32_t i = 0; i < e_; ++i) v[i] = base().neg(a[i]);
    return v;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    const Base& k = base();
    std::vector<BaseElem> prod(2 * e_ - 1, k.zero());
    for (std::uint32_t i = 0; i < e_; ++i) {
      if (k.is_zero(a[i])) continue;
      for (std::uint32_t j = 0; j < e_; ++j)
        prod[i + j] = k.add(prod[i + j], k.mul(a[i], b[j]));
    }
    for (std::uint32_t top = 2 * e_ - 1; top-- > e_;) {
      const auto c = prod[top];
      if (k.is_zero(c)) continue;
      prod[top] = k.zero();
      for (std::uint32_t i = 0; i < e_; ++i)
        prod[top - e_ + i] =
            k.sub(prod[top - e_ + i], k.mul(c, modulus_.coeff(i)));
    }
    prod.resize(e_);
    return prod;
  }
  /// Throws DivisionByZero on zero.
  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw DivisionByZero("inverse of zero in residue field");
    auto bz = xgcd(Poly<Base>(base_handle(), a), modulus_);
    return to_elem(bz.s % modulus_);
  }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem acc = one();
    while (e) {
      if (e & 1) acc = mul(acc, a);
      e >>= 1;
      if (e) a = mul(a, a);
    }
    return acc;
  }
  /// Relative Frobenius a -> a^|Base|, generating Gal(this / Base).
  Elem frobenius(const Elem& a) const { return pow(a, base().order()); }
  /// b with b^p = a: apply x -> x^p absolute_degree - 1 times.
  Elem pth_root(const Elem& a) const {
    Elem v = a;
    const auto p = characteristic();
    for (std::uint32_t i = 1; i < absolute_degree(); ++i) v = pow(v, p);
    return v;
  }

  Elem to_elem(const Poly<Base>& r) const {
    Elem v = zero();
    for (std::size_t i = 0; i < r.coeffs().size() && i < e_; ++i)
      v[i] = r.coeffs()[i];
    return v;
  }

  friend bool operator==(const ExtensionField& a, const ExtensionField& b) {
    return a.modulus_ == b.modulus_;
  }

 private:
  explicit ExtensionField(Poly<Base> modulus) : modulus_(std::move(modulus)) {
    if (modulus_.degree() < 1)
      throw InvalidDegree("residue field modulus must have degree >= 1");
    if (!modulus_.is_monic())
      throw NotMonic("residue field modulus must be monic");
    e_ = static_cast<std::uint32_t>(modulus_.degree());
  }

  Poly<Base> modulus_;
  std::uint32_t e_ = 1;
};

/// Maps a polynomial over Base into the extension.
template <FiniteField Base>
Poly<ExtensionField<Base>> lift(
    const Poly<Base>& a,
    const std::shared_ptr<const ExtensionField<Base>>& ext) {
  std::vector<typename ExtensionField<Base>::Elem> c;
  c.reserve(a.coeffs().size());
  for (const auto& x : a.coeffs()) c.push_back(ext->embed(x));
  return Poly<ExtensionField<Base>>(ext, std::move(c));
}

/// Maps a polynomial with coefficients in Base back down. Throws
/// std::logic_error if some coefficient is outside Base.
template <FiniteField Base>
Poly<Base> descend(const Poly<ExtensionField<Base>>& a) {
  const auto& ext = a.field();
  std::vector<typename Base::Elem> c;
  c.reserve(a.coeffs().size());
  for (const auto& x : a.coeffs()) {
    if (!ext.in_base(x))
      throw std::logic_error("descend: coefficient outside the base field");
    c.push_back(x[0]);
  }
  return Poly<Base>(ext.base_handle(), std::move(c));
}

}  // namespace ascensus

#endif  // ASCENSUS_EXTENSION_HPP_

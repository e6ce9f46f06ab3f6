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

// Dense univariate polynomials over a finite field, with the characteristic-p
// algorithms the census needs: gcd, squarefree decomposition, irreducibility,
// enumeration of monic irreducibles, and factorization by trial division.

#ifndef ASCENSUS_POLY_HPP_
#define ASCENSUS_POLY_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ascensus/budget.hpp"
#include "ascensus/errors.hpp"
#include "ascensus/field.hpp"

namespace ascensus {

template <FiniteField F>
bool same_field(const std::shared_ptr<const F>& a,
                const std::shared_ptr<const F>& b) {
  return a == b || (a && b && *a == *b);
}

/// Polynomial over F, coefficients stored constant term first with no
/// trailing zeros. The zero polynomial has degree -1, below every other
/// degree.
template <FiniteField F>
class Poly {
 public:
  using Field = F;
  using Scalar = typename F::Elem;
  using FieldHandle = std::shared_ptr<const F>;

  static constexpr int kZeroDegree = -1;

  explicit Poly(FieldHandle field) : field_(std::move(field)) {}
  Poly(FieldHandle field, std::vector<Scalar> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    trim();
  }

  static Poly constant(FieldHandle field, Scalar c) {
    return Poly(std::move(field), std::vector<Scalar>{std::move(c)});
  }
  static Poly monomial(FieldHandle field, Scalar c, std::size_t k) {
    std::vector<Scalar> v(k + 1, field->zero());
    v[k] = std::move(c);
    return Poly(std::move(field), std::move(v));
  }
  static Poly x(FieldHandle field) {
    auto one = field->one();
    return monomial(std::move(field), one, 1);
  }
  static Poly one(FieldHandle field) {
    auto one = field->one();
    return constant(std::move(field), one);
  }

  const F& field() const noexcept { return *field_; }
  const FieldHandle& field_handle() const noexcept { return field_; }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_one() const {
    return coeffs_.size() == 1 && coeffs_[0] == field_->one();
  }
  bool is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == field_->one();
  }

  Scalar coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : field_->zero();
  }
  /// Leading coefficient; zero for the zero polynomial.
  Scalar leading() const {
    return coeffs_.empty() ? field_->zero() : coeffs_.back();
  }
  std::span<const Scalar> coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return same_field(a.field_, b.field_) && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && field_->is_zero(coeffs_.back()))
      coeffs_.pop_back();
  }

  FieldHandle field_;
  std::vector<Scalar> coeffs_;
};

namespace detail {

template <FiniteField F>
void check_same_field(const Poly<F>& a, const Poly<F>& b) {
  if (!same_field(a.field_handle(), b.field_handle()))
    throw FieldMismatch("polynomial operands live over different fields");
}

}  // namespace detail

template <FiniteField F>
Poly<F> operator+(const Poly<F>& a, const Poly<F>& b) {
  detail::check_same_field(a, b);
  const F& k = a.field();
  std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<typename F::Elem> out(n, k.zero());
  for (std::size_t i = 0; i < n; ++i) out[i] = k.add(a.coeff(i), b.coeff(i));
  return Poly<F>(a.field_handle(), std::move(out));
}

template <FiniteField F>
Poly<F> operator-(const Poly<F>& a) {
  const F& k = a.field();
  std::vector<typename F::Elem> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : out) c = k.neg(c);
  return Poly<F>(a.field_handle(), std::move(out));
}

template <FiniteField F>
Poly<F> operator-(const Poly<F>& a, const Poly<F>& b) {
  detail::check_same_field(a, b);
  const F& k = a.field();
  std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<typename F::Elem> out(n, k.zero());
  for (std::size_t i = 0; i < n; ++i) out[i] = k.sub(a.coeff(i), b.coeff(i));
  return Poly<F>(a.field_handle(), std::move(out));
}

template <FiniteField F>
Poly<F> operator*(const Poly<F>& a, const Poly<F>& b) {
  detail::check_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly<F>(a.field_handle());
  const F& k = a.field();
  auto ac = a.coeffs();
  auto bc = b.coeffs();
  std::vector<typename F::Elem> out(ac.size() + bc.size() - 1, k.zero());
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (k.is_zero(ac[i])) continue;
    for (std::size_t j = 0; j < bc.size(); ++j)
      out[i + j] = k.add(out[i + j], k.mul(ac[i], bc[j]));
  }
  return Poly<F>(a.field_handle(), std::move(out));
}

template <FiniteField F>
Poly<F> scale(const Poly<F>& a, const typename F::Elem& c) {
  const F& k = a.field();
  std::vector<typename F::Elem> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : out) x = k.mul(x, c);
  return Poly<F>(a.field_handle(), std::move(out));
}

/// a = q*b + r with deg r < deg b. Throws DivisionByZero when b = 0.
template <FiniteField F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  detail::check_same_field(a, b);
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const F& k = a.field();
  if (a.degree() < b.degree())
    return {Poly<F>(a.field_handle()), a};
  std::vector<typename F::Elem> rem(a.coeffs().begin(), a.coeffs().end());
  auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const auto lead_inv = k.inv(bc.back());
  std::vector<typename F::Elem> quo(rem.size() - db, k.zero());
  for (std::size_t i = rem.size(); i-- > db;) {
    if (k.is_zero(rem[i])) continue;
    auto c = k.mul(rem[i], lead_inv);
    quo[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j)
      rem[i - db + j] = k.sub(rem[i - db + j], k.mul(c, bc[j]));
  }
  rem.resize(db);
  return {Poly<F>(a.field_handle(), std::move(quo)),
          Poly<F>(a.field_handle(), std::move(rem))};
}

template <FiniteField F>
Poly<F> operator/(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).first;
}

template <FiniteField F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).second;
}

/// Scales to leading coefficient 1; zero stays zero.
template <FiniteField F>
Poly<F> monic(const Poly<F>& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return scale(a, a.field().inv(a.leading()));
}

/// Monic gcd; gcd(0, 0) = 0.
template <FiniteField F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  detail::check_same_field(a, b);
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <FiniteField F>
struct Bezout {
  Poly<F> g;  // monic gcd
  Poly<F> s;
  Poly<F> t;  // s*a + t*b == g
};

template <FiniteField F>
Bezout<F> xgcd(const Poly<F>& a, const Poly<F>& b) {
  detail::check_same_field(a, b);
  auto h = a.field_handle();
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::one(h), s1(h);
  Poly<F> t0(h), t1 = Poly<F>::one(h);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  auto li = a.field().inv(r0.leading());
  return {scale(r0, li), scale(s0, li), scale(t0, li)};
}

template <FiniteField F>
Poly<F> derivative(const Poly<F>& a) {
  const F& k = a.field();
  if (a.degree() < 1) return Poly<F>(a.field_handle());
  std::vector<typename F::Elem> out(a.coeffs().size() - 1, k.zero());
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
    auto m = k.zero();
    // i * c, by repeated addition of i mod p copies.
    std::uint64_t reps = i % k.characteristic();
    for (std::uint64_t r = 0; r < reps; ++r) m = k.add(m, a.coeffs()[i]);
    out[i - 1] = m;
  }
  return Poly<F>(a.field_handle(), std::move(out));
}

template <FiniteField F>
typename F::Elem eval(const Poly<F>& a, const typename F::Elem& x) {
  const F& k = a.field();
  auto acc = k.zero();
  for (std::size_t i = a.coeffs().size(); i-- > 0;)
    acc = k.add(k.mul(acc, x), a.coeffs()[i]);
  return acc;
}

template <FiniteField F>
Poly<F> pow(Poly<F> base, std::uint64_t e) {
  Poly<F> acc = Poly<F>::one(base.field_handle());
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

template <FiniteField F>
Poly<F> pow_mod(Poly<F> base, std::uint64_t e, const Poly<F>& m) {
  Poly<F> acc = Poly<F>::one(base.field_handle()) % m;
  base = base % m;
  while (e) {
    if (e & 1) acc = (acc * base) % m;
    e >>= 1;
    if (e) base = (base * base) % m;
  }
  return acc;
}

/// Coefficients of a(x0 + y) as a polynomial in y.
template <FiniteField F>
Poly<F> taylor_shift(const Poly<F>& a, const typename F::Elem& x0) {
  const F& k = a.field();
  std::vector<typename F::Elem> c(a.coeffs().begin(), a.coeffs().end());
  const std::size_t n = c.size();
  // Repeated synthetic division by (y - x0), i.e. Horner in place.
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;)
      c[j] = k.add(c[j], k.mul(x0, c[j + 1]));
  return Poly<F>(a.field_handle(), std::move(c));
}

/// For a with derivative 0, the polynomial b with b^p = a.
template <FiniteField F>
Poly<F> pth_root(const Poly<F>& a) {
  const F& k = a.field();
  const std::size_t p = k.characteristic();
  std::vector<typename F::Elem> out;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (i % p == 0) {
      out.push_back(k.pth_root(a.coeffs()[i]));
    } else if (!k.is_zero(a.coeffs()[i])) {
      throw std::logic_error("pth_root: polynomial is not a p-th power");
    }
  }
  return Poly<F>(a.field_handle(), std::move(out));
}

template <FiniteField F>
bool is_squarefree(const Poly<F>& a) {
  if (a.degree() < 1) return !a.is_zero();
  return gcd(a, derivative(a)).is_one();
}

/// Irreducibility over F via gcd(x^(q^i) - x, a) for i <= deg/2.
template <FiniteField F>
bool is_irreducible(const Poly<F>& a) {
  const int d = a.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const auto q = static_cast<std::uint64_t>(a.field().order());
  const auto x = Poly<F>::x(a.field_handle());
  auto h = x;
  for (int i = 1; 2 * i <= d; ++i) {
    h = pow_mod(h, q, a);
    if (!gcd(h - x, a).is_one()) return false;
  }
  return true;
}

/// parts[j] = g_j with prod_j g_j^j equal to the input. Each g_j is monic,
/// squarefree and nonconstant, and the g_j are pairwise coprime.
template <FiniteField F>
struct SquarefreeDecomp {
  std::map<int, Poly<F>> parts;
};

namespace detail {

template <FiniteField F>
void squarefree_into(const Poly<F>& g, int scale_mult,
                     std::map<int, Poly<F>>& out) {
  auto merge = [&](int mult, const Poly<F>& factor) {
    if (factor.degree() < 1) return;
    auto it = out.find(mult);
    if (it == out.end()) {
      out.emplace(mult, factor);
    } else {
      it->second = it->second * factor;
    }
  };
  if (g.degree() < 1) return;
  auto c = gcd(g, derivative(g));
  auto w = g / c;
  int i = 1;
  while (!w.is_one()) {
    auto y = gcd(w, c);
    auto z = w / y;
    merge(i * scale_mult, z);
    ++i;
    w = y;
    c = c / y;
  }
  if (!c.is_one()) {
    squarefree_into(pth_root(c),
                    scale_mult * static_cast<int>(g.field().characteristic()),
                    out);
  }
}

}  // namespace detail

/// Throws NotMonic unless g is monic (and hence nonzero).
template <FiniteField F>
SquarefreeDecomp<F> squarefree_decompose(const Poly<F>& g) {
  if (!g.is_monic()) throw NotMonic("squarefree_decompose needs a monic input");
  SquarefreeDecomp<F> out;
  detail::squarefree_into(g, 1, out.parts);
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration over fields whose elements can be indexed by code.

/// The monic polynomial of degree e whose lower coefficients are the base-q
/// digits of idx (lowest digit = constant term).
inline Poly<GaloisField> monic_from_index(const FieldPtr& field, int e,
                                          std::uint64_t idx) {
  const std::uint64_t q = field->order();
  std::vector<GaloisField::Elem> c(static_cast<std::size_t>(e) + 1);
  for (int i = 0; i < e; ++i) {
    c[i] = field->from_code(idx % q);
    idx /= q;
  }
  c[e] = field->one();
  return Poly<GaloisField>(field, std::move(c));
}

/// q^e, or throws BudgetExceeded when it exceeds `cap`.
inline std::uint64_t checked_power(std::uint64_t q, int e, std::uint64_t cap,
                                   const std::string& what) {
  std::uint64_t v = 1;
  for (int i = 0; i < e; ++i) {
    if (v > cap / q)
      throw BudgetExceeded(what, what + ": " + std::to_string(q) + "^" +
                                     std::to_string(e) +
                                     " exceeds the cap " +
                                     std::to_string(cap));
    v *= q;
  }
  return v;
}

/// All monic irreducibles of degree 1..max_degree, ordered by degree and then
/// by index. Throws BudgetExceeded if the candidate count passes the cap.
inline std::vector<Poly<GaloisField>> irreducibles_up_to(
    const FieldPtr& field, int max_degree, const Budget& budget = {}) {
  std::vector<Poly<GaloisField>> out;
  std::uint64_t total = 0;
  for (int e = 1; e <= max_degree; ++e) {
    std::uint64_t count = checked_power(field->order(), e,
                                        budget.enumeration_cap,
                                        "irreducible table degree");
    total += count;
    if (total > budget.enumeration_cap)
      throw BudgetExceeded("irreducible table degree",
                           "irreducible table up to degree " +
                               std::to_string(max_degree) +
                               " exceeds the enumeration cap " +
                               std::to_string(budget.enumeration_cap));
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      auto f = monic_from_index(field, e, idx);
      if (e == 1 || (!f.field().is_zero(f.coeff(0)) && is_irreducible(f)))
        out.push_back(std::move(f));
    }
  }
  return out;
}

template <FiniteField F>
struct Factor {
  Poly<F> prime;  // monic irreducible
  int multiplicity;
};

/// Monic irreducible factorization of a monic g by trial division: the first
/// candidate of each degree that divides what remains is irreducible since
/// every smaller-degree factor has already been stripped. Factors come back
/// sorted by (degree, index). Throws NotMonic.
inline std::vector<Factor<GaloisField>> factor(const Poly<GaloisField>& g) {
  if (!g.is_monic()) throw NotMonic("factor needs a monic input");
  const auto& field = g.field_handle();
  std::vector<Factor<GaloisField>> out;
  auto rest = g;
  for (int e = 1; 2 * e <= rest.degree(); ++e) {
    std::uint64_t count = 1;
    for (int i = 0; i < e; ++i) count *= field->order();
    for (std::uint64_t idx = 0; idx < count && 2 * e <= rest.degree(); ++idx) {
      auto cand = monic_from_index(field, e, idx);
      int m = 0;
      for (;;) {
        auto [quo, rem] = divmod(rest, cand);
        if (!rem.is_zero()) break;
        rest = std::move(quo);
        ++m;
      }
      if (m > 0) out.push_back({std::move(cand), m});
    }
  }
  // No factor of degree <= deg/2 is left, so the remainder is irreducible.
  if (rest.degree() >= 1) out.push_back({rest, 1});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.prime.degree() != b.prime.degree())
      return a.prime.degree() < b.prime.degree();
    auto ac = a.prime.coeffs();
    auto bc = b.prime.coeffs();
    return std::lexicographical_compare(ac.rbegin(), ac.rend(), bc.rbegin(),
                                        bc.rend());
  });
  return out;
}

// ---------------------------------------------------------------------------
// Text form: "[c0,c1,...]" low to high, each coefficient an element code.

inline std::string to_string(const Poly<GaloisField>& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (i) os << ',';
    os << a.coeffs()[i].code;
  }
  os << ']';
  return os.str();
}

/// Parses "[1,0,1]". Throws ParseError on malformed text or codes >= q.
Poly<GaloisField> parse_poly(const FieldPtr& field, const std::string& text);

}  // namespace ascensus

#endif  // ASCENSUS_POLY_HPP_

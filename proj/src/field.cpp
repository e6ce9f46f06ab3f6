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

#include "ascensus/field.hpp"

#include <array>
#include <cctype>
#include <limits>
#include <stdexcept>

#include "ascensus/poly.hpp"

namespace ascensus {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Largest n with 2^n < 2^32; bounds the digit buffers below.
constexpr std::size_t kMaxDigits = 32;

}  // namespace

GaloisField::GaloisField(std::uint32_t p, std::uint32_t n,
                         std::vector<std::uint32_t> modulus)
    : p_(p), n_(n), q_(1), modulus_(std::move(modulus)) {
  place_.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    place_.push_back(q_);
    q_ *= p;
  }
}

std::shared_ptr<const GaloisField> GaloisField::make(std::uint32_t p,
                                                     std::uint32_t n) {
  if (!is_prime(p)) throw InvalidPrime(std::to_string(p) + " is not prime");
  if (n < 1) throw InvalidDegree("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > std::numeric_limits<std::uint32_t>::max())
      throw BudgetExceeded("q", "field order " + std::to_string(p) + "^" +
                                    std::to_string(n) +
                                    " does not fit a 32-bit element code");
  }
  auto prime = std::shared_ptr<const GaloisField>(new GaloisField(p, 1, {}));
  if (n == 1) return prime;

  // Walk monic degree-n polynomials with (a_0, ..., a_{n-1}) in
  // lexicographic order, a_0 most significant; keep the first irreducible.
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    std::vector<GaloisField::Elem> c(n + 1);
    std::uint64_t rest = idx;
    for (std::uint32_t i = n; i-- > 0;) {
      c[i] = prime->from_code(rest % p);
      rest /= p;
    }
    c[n] = prime->one();
    if (prime->is_zero(c[0])) continue;
    Poly<GaloisField> cand(prime, c);
    if (!is_irreducible(cand)) continue;
    std::vector<std::uint32_t> mod(n + 1);
    for (std::uint32_t i = 0; i <= n; ++i) mod[i] = c[i].code;
    return std::shared_ptr<const GaloisField>(
        new GaloisField(p, n, std::move(mod)));
  }
  throw std::logic_error("no irreducible polynomial found");
}

GaloisField::Elem GaloisField::from_int(std::int64_t v) const noexcept {
  auto r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

GaloisField::Elem GaloisField::from_code(std::uint64_t code) const {
  if (code >= q_)
    throw std::out_of_range("element code " + std::to_string(code) +
                            " is not below q = " + std::to_string(q_));
  return {static_cast<std::uint32_t>(code)};
}

GaloisField::Elem GaloisField::from_digits(
    const std::vector<std::uint32_t>& digits) const {
  if (digits.size() > n_)
    throw std::out_of_range("too many coordinates for this field");
  std::uint32_t code = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= p_) throw std::out_of_range("coordinate is not below p");
    code += digits[i] * place_[i];
  }
  return {code};
}

std::vector<std::uint32_t> GaloisField::digits(Elem a) const {
  std::vector<std::uint32_t> d(n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    d[i] = a.code % p_;
    a.code /= p_;
  }
  return d;
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const noexcept {
  if (p_ == 2) return {a.code ^ b.code};
  if (n_ == 1) return {(a.code + b.code) % p_};
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    out += ((a.code % p_ + b.code % p_) % p_) * place_[i];
    a.code /= p_;
    b.code /= p_;
  }
  return {out};
}

GaloisField::Elem GaloisField::neg(Elem a) const noexcept {
  if (p_ == 2) return a;
  if (n_ == 1) return {(p_ - a.code) % p_};
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    out += ((p_ - a.code % p_) % p_) * place_[i];
    a.code /= p_;
  }
  return {out};
}

GaloisField::Elem GaloisField::sub(Elem a, Elem b) const noexcept {
  return add(a, neg(b));
}

GaloisField::Elem GaloisField::mul(Elem a, Elem b) const noexcept {
  if (n_ == 1) {
    return {static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a.code) * b.code) % p_)};
  }
  std::array<std::uint32_t, kMaxDigits> da{}, db{};
  std::array<std::uint64_t, 2 * kMaxDigits> prod{};
  for (std::uint32_t i = 0; i < n_; ++i) {
    da[i] = a.code % p_;
    a.code /= p_;
    db[i] = b.code % p_;
    b.code /= p_;
  }
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (!da[i]) continue;
    for (std::uint32_t j = 0; j < n_; ++j)
      prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
  }
  // Reduce by the monic modulus from the top down.
  for (std::uint32_t k = 2 * n_ - 1; k-- > n_;) {
    std::uint64_t c = prod[k] % p_;
    if (!c) continue;
    prod[k] = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
      // t^k = t^(k-n) * t^n and t^n = -sum_{i<n} m_i t^i.
      prod[k - n_ + i] =
          (prod[k - n_ + i] + (p_ - c) * modulus_[i]) % p_;
    }
  }
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < n_; ++i)
    out += static_cast<std::uint32_t>(prod[i] % p_) * place_[i];
  return {out};
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t e) const noexcept {
  Elem acc = one();
  while (e) {
    if (e & 1) acc = mul(acc, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return acc;
}

GaloisField::Elem GaloisField::inv(Elem a) const {
  if (is_zero(a)) throw DivisionByZero("inverse of zero in F_q");
  return pow(a, q_ - 2);
}

GaloisField::Elem GaloisField::frobenius(Elem a, std::uint32_t e) const
    noexcept {
  for (std::uint32_t i = 0; i < e % n_; ++i) a = pow(a, p_);
  return a;
}

std::vector<GaloisField::Elem> GaloisField::elements(
    const Budget& budget) const {
  if (q_ > budget.enumeration_cap)
    throw BudgetExceeded("q", "cannot enumerate " + std::to_string(q_) +
                                  " field elements; cap is " +
                                  std::to_string(budget.enumeration_cap));
  std::vector<Elem> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = {i};
  return out;
}

Poly<GaloisField> parse_poly(const FieldPtr& field, const std::string& text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("bad polynomial \"" + text + "\": " + why);
  };
  skip();
  if (i >= text.size() || text[i] != '[') throw fail("expected '['");
  ++i;
  std::vector<GaloisField::Elem> coeffs;
  skip();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    for (;;) {
      skip();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (start == i) throw fail("expected a coefficient");
      std::uint64_t code = std::stoull(text.substr(start, i - start));
      if (code >= field->order()) throw fail("coefficient code not below q");
      coeffs.push_back(field->from_code(code));
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      throw fail("expected ',' or ']'");
    }
  }
  skip();
  if (i != text.size()) throw fail("trailing characters");
  return Poly<GaloisField>(field, std::move(coeffs));
}

}  // namespace ascensus

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

#include "ascensus/partial_fractions.hpp"

#include <stdexcept>

namespace ascensus {

std::vector<ResidueField::Elem> laurent_principal_part(
    const Poly<ResidueField>& num, const Poly<ResidueField>& den,
    const ResidueField::Elem& root, int multiplicity) {
  const ResidueField& k = num.field();
  const auto m = static_cast<std::size_t>(multiplicity);
  // den(root + y) = y^m u(y) with u(0) != 0.
  auto shifted_den = taylor_shift(den, root);
  for (std::size_t i = 0; i < m; ++i)
    if (!k.is_zero(shifted_den.coeff(i)))
      throw std::logic_error("laurent_principal_part: multiplicity too high");
  if (k.is_zero(shifted_den.coeff(m)))
    throw std::logic_error("laurent_principal_part: multiplicity too low");
  auto shifted_num = taylor_shift(num, root);

  // v = 1/u mod y^m.
  std::vector<ResidueField::Elem> v(m, k.zero());
  const auto u0_inv = k.inv(shifted_den.coeff(m));
  v[0] = u0_inv;
  for (std::size_t n = 1; n < m; ++n) {
    auto acc = k.zero();
    for (std::size_t i = 1; i <= n; ++i)
      acc = k.add(acc, k.mul(shifted_den.coeff(m + i), v[n - i]));
    v[n] = k.neg(k.mul(u0_inv, acc));
  }
  // s = num(root + y) * v mod y^m; coefficient of y^-i is s_{m-i}.
  std::vector<ResidueField::Elem> s(m, k.zero());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; i + j < m; ++j)
      s[i + j] = k.add(s[i + j], k.mul(shifted_num.coeff(i), v[j]));
  std::vector<ResidueField::Elem> c(m);
  for (std::size_t i = 1; i <= m; ++i) c[i - 1] = s[m - i];
  return c;
}

PartialFractions principal_parts(
    const RationalFn<GaloisField>& f,
    std::span<const Factor<GaloisField>> den_factors) {
  PartialFractions out{divmod(f.num(), f.den()).first, {}};
  for (const auto& [pi, mult] : den_factors) {
    auto residue = ResidueField::make(pi);
    auto alpha = residue->generator();
    auto coeffs = laurent_principal_part(lift(f.num(), residue),
                                         lift(f.den(), residue), alpha, mult);
    out.parts.push_back({pi, residue, std::move(alpha), std::move(coeffs)});
  }
  return out;
}

PartialFractions principal_parts(const RationalFn<GaloisField>& f) {
  auto factors = factor(f.den());
  return principal_parts(f, factors);
}

RationalFn<GaloisField> orbit_sum(const PrincipalPart& part) {
  const auto& field = part.orbit.field_handle();
  const ResidueField& k = *part.residue_field;
  std::size_t m = part.coeffs.size();
  while (m > 0 && k.is_zero(part.coeffs[m - 1])) --m;
  if (m == 0) return RationalFn<GaloisField>::zero(field);

  const int e = part.orbit.degree();
  std::vector<ResidueField::Elem> roots{part.pole};
  std::vector<std::vector<ResidueField::Elem>> conj{
      {part.coeffs.begin(), part.coeffs.begin() + m}};
  for (int s = 1; s < e; ++s) {
    roots.push_back(k.frobenius(roots.back()));
    std::vector<ResidueField::Elem> next;
    for (const auto& c : conj.back()) next.push_back(k.frobenius(c));
    conj.push_back(std::move(next));
  }

  // (x - root)^m for each conjugate root.
  const auto& kh = part.residue_field;
  std::vector<Poly<ResidueField>> linear_pows;
  for (const auto& r : roots) {
    Poly<ResidueField> lin(kh, {k.neg(r), k.one()});
    linear_pows.push_back(pow(lin, m));
  }

  Poly<ResidueField> numerator(kh);
  for (int s = 0; s < e; ++s) {
    Poly<ResidueField> others = Poly<ResidueField>::one(kh);
    for (int l = 0; l < e; ++l)
      if (l != s) others = others * linear_pows[l];
    Poly<ResidueField> lin(kh, {k.neg(roots[s]), k.one()});
    Poly<ResidueField> local(kh);
    for (std::size_t i = 1; i <= m; ++i) {
      local = local + scale(pow(lin, m - i), conj[s][i - 1]);
    }
    numerator = numerator + local * others;
  }
  return RationalFn<GaloisField>(descend(numerator), pow(part.orbit, m));
}

RationalFn<GaloisField> recombine(const PartialFractions& pf) {
  RationalFn<GaloisField> acc(pf.polynomial_part);
  for (const auto& part : pf.parts) acc = acc + orbit_sum(part);
  return acc;
}

Admissibility is_admissible(const PartialFractions& pf) {
  if (pf.polynomial_part.degree() > 0) {
    return {false, "pole at infinity: deg num > deg den (f_inf has degree " +
                       std::to_string(pf.polynomial_part.degree()) + ")"};
  }
  for (const auto& part : pf.parts) {
    const ResidueField& k = *part.residue_field;
    const auto p = static_cast<std::size_t>(k.characteristic());
    for (std::size_t i = p; i <= part.coeffs.size(); i += p) {
      if (!k.is_zero(part.coeffs[i - 1])) {
        return {false, "coefficient c_" + std::to_string(i) +
                           " != 0 with p | " + std::to_string(i) +
                           " at the poles of " + to_string(part.orbit)};
      }
    }
  }
  return {true, {}};
}

Admissibility is_admissible(const RationalFn<GaloisField>& f) {
  if (f.num().degree() > f.den().degree()) {
    return {false, "pole at infinity: deg num " +
                       std::to_string(f.num().degree()) + " > deg den " +
                       std::to_string(f.den().degree())};
  }
  return is_admissible(principal_parts(f));
}

Normalized normalize_to_admissible(const RationalFn<GaloisField>& f) {
  const auto& field = f.field_handle();
  const GaloisField& fq = *field;
  const std::size_t p = fq.characteristic();
  auto pf = principal_parts(f);

  PartialFractions delta{Poly<GaloisField>(field), {}};

  // Polynomial part: x^(pk) -> x^k, i.e. a x^(pk) = (b x^k)^p with b^p = a.
  {
    std::vector<GaloisField::Elem> a(pf.polynomial_part.coeffs().begin(),
                                     pf.polynomial_part.coeffs().end());
    std::vector<GaloisField::Elem> d(a.size(), fq.zero());
    for (std::size_t i = a.size(); i-- > 1;) {
      if (i % p != 0 || fq.is_zero(a[i])) continue;
      auto b = fq.pth_root(a[i]);
      a[i] = fq.zero();
      a[i / p] = fq.add(a[i / p], b);
      d[i / p] = fq.add(d[i / p], b);
    }
    pf.polynomial_part = Poly<GaloisField>(field, std::move(a));
    delta.polynomial_part = Poly<GaloisField>(field, std::move(d));
  }

  for (auto& part : pf.parts) {
    const ResidueField& k = *part.residue_field;
    auto& c = part.coeffs;
    std::vector<ResidueField::Elem> d(c.size(), k.zero());
    for (std::size_t i = c.size(); i >= 1; --i) {
      if (i % p != 0 || k.is_zero(c[i - 1])) continue;
      auto b = k.pth_root(c[i - 1]);
      c[i - 1] = k.zero();
      c[i / p - 1] = k.add(c[i / p - 1], b);
      d[i / p - 1] = k.add(d[i / p - 1], b);
    }
    while (!c.empty() && k.is_zero(c.back())) c.pop_back();
    delta.parts.push_back({part.orbit, part.residue_field, part.pole, d});
  }
  std::erase_if(pf.parts, [](const PrincipalPart& part) {
    return part.coeffs.empty();
  });

  if (pf.polynomial_part.degree() > 0) {
    throw RamifiedAtInfinity(
        "after normalization " + to_string(f) +
        " keeps a pole of order " +
        std::to_string(pf.polynomial_part.degree()) + " at infinity");
  }
  auto reduced = recombine(pf);
  if (reduced.is_zero()) {
    throw IsArtinSchreierTrivial(to_string(f) +
                                 " is of the form delta^p - delta");
  }
  return {std::move(reduced), recombine(delta)};
}

}  // namespace ascensus

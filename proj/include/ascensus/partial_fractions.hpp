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

// Principal parts of rational functions over F_q, the admissible normal form
// for Artin-Schreier equations y^p - y = f, and reduction to that form by
// subtracting delta^p - delta.
//
// A pole orbit is an irreducible factor pi of the denominator. Its roots are
// conjugate, so the principal part is computed once, at alpha = t in the
// residue field F_q[t]/(pi), and the other roots carry the Frobenius images
// of the same coefficients.

#ifndef ASCENSUS_PARTIAL_FRACTIONS_HPP_
#define ASCENSUS_PARTIAL_FRACTIONS_HPP_

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ascensus/extension.hpp"
#include "ascensus/field.hpp"
#include "ascensus/poly.hpp"
#include "ascensus/rational.hpp"

namespace ascensus {

using ResidueField = ExtensionField<GaloisField>;
using ResiduePtr = std::shared_ptr<const ResidueField>;

/// f_alpha(1/(x - alpha)) = sum_i coeffs[i-1] (x - alpha)^-i at one pole of
/// a Galois orbit.
struct PrincipalPart {
  Poly<GaloisField> orbit;  // monic irreducible whose roots are the poles
  ResiduePtr residue_field;
  ResidueField::Elem pole;
  std::vector<ResidueField::Elem> coeffs;

  /// Pole order d_alpha (the top coefficient is nonzero).
  int order() const noexcept { return static_cast<int>(coeffs.size()); }
  /// Number of conjugate poles in the orbit.
  int orbit_size() const noexcept { return orbit.degree(); }
};

struct PartialFractions {
  Poly<GaloisField> polynomial_part;  // f_infinity
  std::vector<PrincipalPart> parts;   // one per irreducible factor of den
};

/// Laurent coefficients c_1..c_m of num/den at a root of den of exact
/// multiplicity m, by truncated power-series inversion.
std::vector<ResidueField::Elem> laurent_principal_part(
    const Poly<ResidueField>& num, const Poly<ResidueField>& den,
    const ResidueField::Elem& root, int multiplicity);

PartialFractions principal_parts(const RationalFn<GaloisField>& f);
/// Same, reusing a known factorization of f.den().
PartialFractions principal_parts(
    const RationalFn<GaloisField>& f,
    std::span<const Factor<GaloisField>> den_factors);

/// The F_q-rational sum of a principal part over all conjugate poles.
/// Trailing zero coefficients are allowed.
RationalFn<GaloisField> orbit_sum(const PrincipalPart& part);

/// f_infinity plus every orbit sum.
RationalFn<GaloisField> recombine(const PartialFractions& pf);

struct Admissibility {
  bool admissible = false;
  std::string reason;  // empty when admissible

  explicit operator bool() const noexcept { return admissible; }
};

Admissibility is_admissible(const PartialFractions& pf);
Admissibility is_admissible(const RationalFn<GaloisField>& f);

struct Normalized {
  RationalFn<GaloisField> function;  // admissible
  RationalFn<GaloisField> witness;   // delta, with f - function = delta^p - delta
};

/// Removes every monomial x_alpha^(p k) from the principal parts and the
/// polynomial part, highest index first. Throws RamifiedAtInfinity if a
/// nonconstant polynomial part survives and IsArtinSchreierTrivial if the
/// result is 0.
Normalized normalize_to_admissible(const RationalFn<GaloisField>& f);

}  // namespace ascensus

#endif  // ASCENSUS_PARTIAL_FRACTIONS_HPP_

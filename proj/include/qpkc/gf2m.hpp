// Copyright 2026 The qpkc Authors
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

#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace qpkc {

/// Element of GF(2^m) in polynomial basis: bit i is the coefficient of x^i.
using FieldElement = std::uint32_t;

/// Extension degree and reduction polynomial of GF(2^m).
struct FieldParams {
  unsigned m = 0;
  /// Irreducible binary polynomial of degree m, bit i = coefficient of x^i.
  std::uint32_t modulus = 0;

  /// Fixed default modulus for each supported degree (x^4+x+1 for m = 4,
  /// x^10+x^3+1 for m = 10, ...).
  static FieldParams standard(unsigned m);

  friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

/// True iff the binary polynomial `poly` (bit mask) is irreducible over GF(2).
bool binary_poly_is_irreducible(std::uint32_t poly);

/// GF(2^m) for 2 <= m <= 16.
///
/// mul_reference() is carryless shift-and-XOR followed by reduction and is the
/// definition of the product. For m <= 12, mul() answers from log/antilog
/// tables built from the reference path; above that it falls back to it.
class Field {
 public:
  static constexpr unsigned kMinDegree = 2;
  static constexpr unsigned kMaxDegree = 16;
  static constexpr unsigned kMaxTableDegree = 12;

  /// Throws InvalidArgument if m is out of range or the modulus is not an
  /// irreducible polynomial of degree m.
  explicit Field(FieldParams params);

  const FieldParams& params() const { return params_; }
  unsigned degree() const { return params_.m; }
  std::uint32_t order() const { return 1u << params_.m; }
  bool contains(FieldElement a) const { return a < order(); }

  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement mul_reference(FieldElement a, FieldElement b) const;
  FieldElement sqr(FieldElement a) const { return mul(a, a); }
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  /// Throws ArithmeticError("division by zero in GF(2^m)") for a = 0.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  /// Unique square root, a^(2^(m-1)).
  FieldElement sqrt(FieldElement a) const;

 private:
  FieldParams params_;
  std::vector<std::uint16_t> log_;
  std::vector<std::uint16_t> exp_;
};

/// Dense polynomial over GF(2^m); coefficient i multiplies z^i.
/// The stored coefficient list never ends in zero, so the zero polynomial is
/// the empty list and degree() is -1 for it.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<FieldElement> coeffs);
  Poly(std::initializer_list<FieldElement> coeffs);

  static Poly constant(FieldElement c);
  /// c * z^d
  static Poly monomial(FieldElement c, std::size_t d);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  FieldElement coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  FieldElement leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<FieldElement>& coeffs() const { return c_; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<FieldElement> c_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scale(const Field& f, const Poly& a, FieldElement c);
Poly poly_mul(const Field& f, const Poly& a, const Poly& b);
Poly poly_sqr(const Field& f, const Poly& a);
Poly poly_monic(const Field& f, const Poly& a);

FieldElement poly_eval(const Field& f, const Poly& p, FieldElement x);

/// (q, r) with a = q*b + r and deg r < deg b. Throws ArithmeticError if b = 0.
std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b);
Poly poly_mod(const Field& f, const Poly& a, const Poly& b);
Poly poly_mulmod(const Field& f, const Poly& a, const Poly& b, const Poly& g);

struct EeaResult {
  Poly u;
  Poly v;
  Poly r;  ///< u*a + v*b = r
};

/// Sentinel for poly_eea: run the remainder sequence down to the gcd.
inline constexpr int kEeaToGcd = -2;

/// Extended Euclid on (a, b). Walks the remainder sequence r_{-1} = a,
/// r_0 = b, r_{i+1} = r_{i-1} mod r_i keeping cofactors with u*a + v*b = r,
/// and returns the first iterate whose degree is <= stop_deg (the zero
/// polynomial has degree -1). With kEeaToGcd it returns the last nonzero
/// remainder. Throws InvalidArgument when both inputs are zero.
EeaResult poly_eea(const Field& f, const Poly& a, const Poly& b, int stop_deg);

Poly poly_gcd(const Field& f, const Poly& a, const Poly& b);

/// a^{-1} mod g. Throws ArithmeticError if gcd(a, g) != 1.
Poly poly_inv_mod(const Field& f, const Poly& a, const Poly& g);

/// Irreducibility over GF(2^m) with q = 2^m, t = deg p: p is irreducible iff
/// z^(q^t) = z mod p and gcd(z^(q^(t/d)) - z, p) = 1 for each prime d | t.
/// Throws InvalidArgument for constant p.
bool poly_is_irreducible(const Field& f, const Poly& p);

/// R with R^2 = u mod g, computed as u^(2^(m*t - 1)) mod g. g must be
/// irreducible of degree t and deg u < t.
Poly poly_sqrt_mod(const Field& f, const Poly& u, const Poly& g);

/// Same root as poly_sqrt_mod, using a precomputed sqrt(z) mod g:
/// sqrt(u) = sqrt(u_even)(z) + sqrt(z) * sqrt(u_odd)(z), where u_even and
/// u_odd collect the coefficients of even and odd powers.
Poly poly_sqrt_mod_split(const Field& f, const Poly& u, const Poly& g,
                         const Poly& sqrt_z);

}  // namespace qpkc

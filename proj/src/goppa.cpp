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

#include "qpkc/goppa.hpp"

#include <string>
#include <utility>

#include "qpkc/error.hpp"
#include "qpkc/rng.hpp"

namespace qpkc {

namespace {

constexpr int kPolySamplesPerAttempt = 100000;

void check_shape(const Field& field, std::size_t n, std::size_t t) {
  if (t < 1) throw InvalidArgument("Goppa polynomial degree t must be at least 1");
  if (n > field.order()) {
    throw InvalidArgument("code length n = " + std::to_string(n) + " exceeds field size 2^" +
                          std::to_string(field.degree()));
  }
  if (field.degree() * t >= n) {
    throw InvalidArgument("need m*t < n, got m*t = " + std::to_string(field.degree() * t) +
                          " and n = " + std::to_string(n));
  }
}

bool roots_on_support(const Field& field, const Poly& g, const std::vector<FieldElement>& support) {
  for (FieldElement x : support) {
    if (poly_eval(field, g, x) == 0) return true;
  }
  return false;
}

}  // namespace

GoppaCode::GoppaCode(Field field, std::vector<FieldElement> support, Poly g)
    : field_(std::move(field)), support_(std::move(support)), g_(std::move(g)) {
  const std::size_t m = field_.degree();
  const std::size_t t = this->t();
  sqrt_z_ = poly_sqrt_mod(field_, Poly::monomial(1, 1), g_);
  parity_ = BitMatrix(m * t, n());
  for (std::size_t j = 0; j < n(); ++j) {
    const Poly col = inv_linear_mod_g(support_[j]);
    for (std::size_t i = 0; i < t; ++i) {
      const FieldElement c = col.coeff(i);
      for (std::size_t b = 0; b < m; ++b) {
        if ((c >> b) & 1u) parity_.set(i * m + b, j);
      }
    }
  }
  parity_t_ = parity_.transpose();
  generator_ = nullspace_basis(parity_);
}

GoppaCode GoppaCode::build(const FieldParams& params, std::size_t n, std::size_t t, Rng& rng) {
  Field field(params);
  check_shape(field, n, t);
  Rng support_rng = rng.fork("goppa-support");
  Rng poly_rng = rng.fork("goppa-poly");

  for (int attempt = 0; attempt < kBuildAttempts; ++attempt) {
    std::vector<FieldElement> all(field.order());
    for (FieldElement x = 0; x < field.order(); ++x) all[x] = x;
    for (std::size_t i = all.size() - 1; i > 0; --i) std::swap(all[i], all[support_rng.uniform(i + 1)]);
    std::vector<FieldElement> support(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n));

    Poly g;
    for (int s = 0; s < kPolySamplesPerAttempt; ++s) {
      std::vector<FieldElement> coeffs(t + 1);
      for (std::size_t i = 0; i < t; ++i) {
        coeffs[i] = static_cast<FieldElement>(poly_rng.uniform(field.order()));
      }
      coeffs[t] = 1;
      Poly candidate(std::move(coeffs));
      if (poly_is_irreducible(field, candidate) && !roots_on_support(field, candidate, support)) {
        g = std::move(candidate);
        break;
      }
    }
    if (g.is_zero()) continue;

    GoppaCode code(field, std::move(support), std::move(g));
    if (code.generator_.rows() != n - field.degree() * t) continue;
    code.generator_inv_ = right_inverse(code.generator_);
    return code;
  }
  throw Error("Goppa code construction failed after " + std::to_string(kBuildAttempts) +
              " attempts");
}

GoppaCode GoppaCode::from_parts(const FieldParams& params, std::vector<FieldElement> support,
                                Poly goppa_poly) {
  Field field(params);
  if (goppa_poly.degree() < 1) throw InvalidArgument("Goppa polynomial must have degree >= 1");
  check_shape(field, support.size(), static_cast<std::size_t>(goppa_poly.degree()));
  std::vector<bool> seen(field.order(), false);
  for (FieldElement x : support) {
    if (!field.contains(x)) throw InvalidArgument("support element outside the field");
    if (seen[x]) throw InvalidArgument("support elements must be distinct");
    seen[x] = true;
  }
  for (FieldElement c : goppa_poly.coeffs()) {
    if (!field.contains(c)) throw InvalidArgument("Goppa polynomial coefficient outside the field");
  }
  if (!poly_is_irreducible(field, goppa_poly)) throw InvalidArgument("Goppa polynomial is reducible");
  if (roots_on_support(field, goppa_poly, support)) {
    throw InvalidArgument("Goppa polynomial vanishes on the support");
  }
  const std::size_t n = support.size();
  const std::size_t t = static_cast<std::size_t>(goppa_poly.degree());
  GoppaCode code(field, std::move(support), std::move(goppa_poly));
  if (code.generator_.rows() != n - field.degree() * t) {
    throw InvalidArgument("parity-check matrix is not of full rank m*t");
  }
  code.generator_inv_ = right_inverse(code.generator_);
  return code;
}

Poly GoppaCode::inv_linear_mod_g(FieldElement x) const {
  const FieldElement gx = poly_eval(field_, g_, x);
  if (gx == 0) throw InvalidArgument("g vanishes at support point " + std::to_string(x));
  const Poly numerator = poly_add(g_, Poly::constant(gx));
  auto [quotient, remainder] = poly_divmod(field_, numerator, Poly{x, 1});
  // (z + x) divides g(z) + g(x) exactly.
  if (!remainder.is_zero()) throw ArithmeticError("inexact division by (z + x)");
  return poly_scale(field_, quotient, field_.inv(gx));
}

BitVec GoppaCode::syndrome(const BitVec& word) const {
  if (word.size() != n()) {
    throw InvalidArgument("word length " + std::to_string(word.size()) + " does not match n = " +
                          std::to_string(n()));
  }
  return vec_mat_mul(word, parity_t_);
}

Poly GoppaCode::syndrome_poly(const BitVec& syndrome) const {
  const std::size_t m = field_.degree();
  std::vector<FieldElement> coeffs(t(), 0);
  for (std::size_t i = 0; i < t(); ++i) {
    for (std::size_t b = 0; b < m; ++b) {
      if (syndrome.get(i * m + b)) coeffs[i] |= FieldElement{1} << b;
    }
  }
  return Poly(std::move(coeffs));
}

BitVec GoppaCode::pack_syndrome(const Poly& s) const {
  const std::size_t m = field_.degree();
  BitVec out(syndrome_bits());
  for (std::size_t i = 0; i < t(); ++i) {
    for (std::size_t b = 0; b < m; ++b) {
      if ((s.coeff(i) >> b) & 1u) out.set(i * m + b);
    }
  }
  return out;
}

BitVec GoppaCode::decode(const BitVec& syndrome) const {
  if (syndrome.size() != syndrome_bits()) {
    throw InvalidArgument("syndrome length " + std::to_string(syndrome.size()) +
                          " does not match m*t = " + std::to_string(syndrome_bits()));
  }
  const Poly s = syndrome_poly(syndrome);
  if (s.is_zero()) return BitVec(n());

  const Poly z = poly_mod(field_, Poly::monomial(1, 1), g_);
  const Poly inv_s = poly_inv_mod(field_, s, g_);
  Poly locator;
  if (inv_s == z) {
    locator = Poly::monomial(1, 1);
  } else {
    const Poly root = poly_sqrt_mod_split(field_, poly_add(inv_s, z), g_, sqrt_z_);
    const EeaResult split = poly_eea(field_, g_, root, static_cast<int>(t() / 2));
    const Poly& a = split.r;
    const Poly& b = split.v;
    locator = poly_add(poly_sqr(field_, a), poly_mul(field_, Poly::monomial(1, 1), poly_sqr(field_, b)));
  }

  BitVec error(n());
  for (std::size_t j = 0; j < n(); ++j) {
    if (poly_eval(field_, locator, support_[j]) == 0) error.set(j);
  }
  const std::size_t w = error.weight();
  if (w > t() || static_cast<int>(w) != locator.degree()) {
    throw DecodeFailure("decoding failure: error locator of degree " +
                        std::to_string(locator.degree()) + " has " + std::to_string(w) +
                        " roots on the support");
  }
  if (this->syndrome(error) != syndrome) {
    throw DecodeFailure("decoding failure: recovered error does not reproduce the syndrome");
  }
  return error;
}

GoppaCode GoppaCode::with_parity_bit_flipped(std::size_t row, std::size_t col) const {
  GoppaCode copy = *this;
  copy.parity_.flip(row, col);
  copy.parity_t_.flip(col, row);
  return copy;
}

}  // namespace qpkc

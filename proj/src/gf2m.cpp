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

#include "qpkc/gf2m.hpp"

#include <array>
#include <bit>
#include <string>

#include "qpkc/error.hpp"

namespace qpkc {

namespace {

// Primitive polynomials, index = m.
constexpr std::array<std::uint32_t, 17> kStandardModuli = {
    0,      0,      0x7,    0xb,    0x13,   0x25,   0x43,   0x89,   0x11d,
    0x211,  0x409,  0x805,  0x1053, 0x201b, 0x4443, 0x8003, 0x1100b};

int binary_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t binary_mod(std::uint64_t a, std::uint64_t b) {
  const int db = binary_degree(b);
  for (int da = binary_degree(a); da >= db; da = binary_degree(a)) a ^= b << (da - db);
  return a;
}

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FieldParams FieldParams::standard(unsigned m) {
  if (m < Field::kMinDegree || m > Field::kMaxDegree) {
    throw InvalidArgument("field degree m must be in [2, 16], got " + std::to_string(m));
  }
  return FieldParams{m, kStandardModuli[m]};
}

bool binary_poly_is_irreducible(std::uint32_t poly) {
  const int d = binary_degree(poly);
  if (d < 1) return false;
  for (std::uint64_t q = 2; binary_degree(q) <= d / 2; ++q) {
    if (binary_mod(poly, q) == 0) return false;
  }
  return true;
}

Field::Field(FieldParams params) : params_(params) {
  const unsigned m = params_.m;
  if (m < kMinDegree || m > kMaxDegree) {
    throw InvalidArgument("field degree m must be in [2, 16], got " + std::to_string(m));
  }
  if (binary_degree(params_.modulus) != static_cast<int>(m) ||
      !binary_poly_is_irreducible(params_.modulus)) {
    throw InvalidArgument("field modulus must be an irreducible polynomial of degree " +
                          std::to_string(m));
  }
  if (m > kMaxTableDegree) return;

  const std::uint32_t group = order() - 1;
  // The modulus need not be primitive, so search for a generator.
  for (FieldElement gen = 2; gen < order(); ++gen) {
    std::vector<std::uint16_t> exp(2 * static_cast<std::size_t>(group));
    FieldElement x = 1;
    std::uint32_t i = 0;
    do {
      exp[i++] = static_cast<std::uint16_t>(x);
      x = mul_reference(x, gen);
    } while (x != 1 && i < group);
    if (x != 1 || i != group) continue;
    for (std::uint32_t j = 0; j < group; ++j) exp[group + j] = exp[j];
    log_.assign(order(), 0);
    for (std::uint32_t j = 0; j < group; ++j) log_[exp[j]] = static_cast<std::uint16_t>(j);
    exp_ = std::move(exp);
    return;
  }
}

FieldElement Field::mul_reference(FieldElement a, FieldElement b) const {
  std::uint64_t prod = 0;
  for (std::uint64_t x = a; b != 0; b >>= 1, x <<= 1) {
    if (b & 1) prod ^= x;
  }
  return static_cast<FieldElement>(binary_mod(prod, params_.modulus));
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  if (exp_.empty()) return mul_reference(a, b);
  if (a == 0 || b == 0) return 0;
  return exp_[static_cast<std::size_t>(log_[a]) + log_[b]];
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  FieldElement result = 1;
  for (; e != 0; e >>= 1) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
  }
  return result;
}

FieldElement Field::inv(FieldElement a) const {
  if (a == 0) throw ArithmeticError("division by zero in GF(2^m)");
  if (!exp_.empty()) return exp_[(order() - 1 - log_[a]) % (order() - 1)];
  return pow(a, order() - 2);
}

FieldElement Field::sqrt(FieldElement a) const {
  for (unsigned i = 1; i < params_.m; ++i) a = mul(a, a);
  return a;
}

// ---------------------------------------------------------------------------

Poly::Poly(std::vector<FieldElement> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<FieldElement> coeffs) : c_(coeffs) { trim(); }

Poly Poly::constant(FieldElement c) { return Poly(std::vector<FieldElement>{c}); }

Poly Poly::monomial(FieldElement c, std::size_t d) {
  std::vector<FieldElement> v(d + 1, 0);
  v[d] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly poly_add(const Poly& a, const Poly& b) {
  std::vector<FieldElement> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) ^ b.coeff(i);
  return Poly(std::move(out));
}

Poly poly_scale(const Field& f, const Poly& a, FieldElement c) {
  std::vector<FieldElement> out(a.coeffs());
  for (auto& x : out) x = f.mul(x, c);
  return Poly(std::move(out));
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<FieldElement> out(ac.size() + bc.size() - 1, 0);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] ^= f.mul(ac[i], bc[j]);
  }
  return Poly(std::move(out));
}

Poly poly_sqr(const Field& f, const Poly& a) {
  if (a.is_zero()) return {};
  std::vector<FieldElement> out(2 * a.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) out[2 * i] = f.sqr(a.coeffs()[i]);
  return Poly(std::move(out));
}

Poly poly_monic(const Field& f, const Poly& a) {
  if (a.is_zero()) return a;
  return poly_scale(f, a, f.inv(a.leading()));
}

FieldElement poly_eval(const Field& f, const Poly& p, FieldElement x) {
  FieldElement acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = f.mul(acc, x) ^ *it;
  return acc;
}

std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<FieldElement> rem(a.coeffs());
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const FieldElement lead_inv = f.inv(b.leading());
  std::vector<FieldElement> quot(rem.size() - db, 0);
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    const FieldElement q = f.mul(rem[i], lead_inv);
    quot[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] ^= f.mul(q, bc[j]);
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_mod(const Field& f, const Poly& a, const Poly& b) {
  return poly_divmod(f, a, b).second;
}

Poly poly_mulmod(const Field& f, const Poly& a, const Poly& b, const Poly& g) {
  return poly_mod(f, poly_mul(f, a, b), g);
}

EeaResult poly_eea(const Field& f, const Poly& a, const Poly& b, int stop_deg) {
  if (a.is_zero() && b.is_zero()) throw InvalidArgument("poly_eea: both inputs are zero");
  EeaResult prev{Poly::constant(1), Poly{}, a};
  EeaResult cur{Poly{}, Poly::constant(1), b};
  const bool to_gcd = stop_deg == kEeaToGcd;
  if (!to_gcd && prev.r.degree() <= stop_deg) return prev;
  while (true) {
    if (to_gcd && cur.r.is_zero()) return prev;
    if (!to_gcd && cur.r.degree() <= stop_deg) return cur;
    auto [q, r] = poly_divmod(f, prev.r, cur.r);
    EeaResult next{poly_add(prev.u, poly_mul(f, q, cur.u)),
                   poly_add(prev.v, poly_mul(f, q, cur.v)), std::move(r)};
    prev = std::move(cur);
    cur = std::move(next);
  }
}

Poly poly_gcd(const Field& f, const Poly& a, const Poly& b) {
  return poly_monic(f, poly_eea(f, a, b, kEeaToGcd).r);
}

Poly poly_inv_mod(const Field& f, const Poly& a, const Poly& g) {
  const Poly reduced = poly_mod(f, a, g);
  if (reduced.is_zero()) throw ArithmeticError("polynomial not invertible modulo g");
  const EeaResult e = poly_eea(f, g, reduced, 0);
  if (e.r.degree() != 0) throw ArithmeticError("polynomial not invertible modulo g");
  return poly_mod(f, poly_scale(f, e.v, f.inv(e.r.leading())), g);
}

bool poly_is_irreducible(const Field& f, const Poly& p) {
  if (p.degree() < 1) throw InvalidArgument("irreducibility test needs a non-constant polynomial");
  const unsigned t = static_cast<unsigned>(p.degree());
  if (t == 1) return true;
  const Poly monic = poly_monic(f, p);
  const Poly z = Poly::monomial(1, 1);

  // frob[i] = z^(q^i) mod p, raised by m squarings per step.
  std::vector<Poly> frob(t + 1);
  frob[0] = poly_mod(f, z, monic);
  for (unsigned i = 1; i <= t; ++i) {
    Poly x = frob[i - 1];
    for (unsigned s = 0; s < f.degree(); ++s) x = poly_mod(f, poly_sqr(f, x), monic);
    frob[i] = std::move(x);
  }
  if (frob[t] != frob[0]) return false;
  for (unsigned d : prime_factors(t)) {
    const Poly diff = poly_add(frob[t / d], frob[0]);
    if (diff.is_zero()) return false;
    if (poly_gcd(f, diff, monic).degree() != 0) return false;
  }
  return true;
}

Poly poly_sqrt_mod(const Field& f, const Poly& u, const Poly& g) {
  const std::size_t squarings = static_cast<std::size_t>(f.degree()) * g.degree() - 1;
  Poly r = poly_mod(f, u, g);
  for (std::size_t i = 0; i < squarings; ++i) r = poly_mod(f, poly_sqr(f, r), g);
  return r;
}

Poly poly_sqrt_mod_split(const Field& f, const Poly& u, const Poly& g, const Poly& sqrt_z) {
  const Poly reduced = poly_mod(f, u, g);
  const auto& c = reduced.coeffs();
  std::vector<FieldElement> even((c.size() + 1) / 2, 0);
  std::vector<FieldElement> odd(c.size() / 2, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    (i % 2 == 0 ? even : odd)[i / 2] = f.sqrt(c[i]);
  }
  return poly_mod(f, poly_add(Poly(std::move(even)), poly_mul(f, sqrt_z, Poly(std::move(odd)))),
                  g);
}

}  // namespace qpkc

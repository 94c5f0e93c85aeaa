// Copyright 2026 The convcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "convcode/gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace convcode {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint32_t, unsigned> prime_power_decompose(std::uint64_t n) {
  if (n < 2) return {0, 0};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {static_cast<std::uint32_t>(n), 1};
  unsigned m = 0;
  while (n % p == 0) {
    n /= p;
    ++m;
  }
  if (n != 1) return {0, 0};
  return {static_cast<std::uint32_t>(p), m};
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // low-to-high coefficients over GF(p)

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is prime and small.
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo b over GF(p); b nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
  while (a.size() > db) {
    const std::uint32_t coef = static_cast<std::uint32_t>(std::uint64_t{a.back()} * lead_inv % p);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = std::uint64_t{coef} * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly digits_of(std::uint32_t v, std::uint32_t p, unsigned m) {
  Poly d(m, 0);
  for (unsigned i = 0; i < m; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

std::uint32_t value_of(const Poly& d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

// Multiplication in GF(p)[x]/(modulus) by schoolbook product; only used while
// building the log tables.
struct SlowField {
  std::uint32_t p;
  unsigned m;
  Poly modulus;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (m == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
    const Poly da = digits_of(a, p, m), db = digits_of(b, p, m);
    Poly prod(2 * m - 1, 0);
    for (unsigned i = 0; i < m; ++i)
      for (unsigned j = 0; j < m; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p);
    Poly r = poly_mod(std::move(prod), modulus, p);
    r.resize(m, 0);
    return value_of(r, p);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
};

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= m / 2; ++d) {
    std::uint32_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint32_t c = 0; c < count; ++c) {
      Poly g = digits_of(c, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

// x generates the whole multiplicative group of GF(p)[x]/(f).
bool is_primitive_poly(const Poly& f, std::uint32_t p) {
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  if (f[0] == 0) return false;
  const SlowField slow{p, m, f};
  std::uint32_t q = 1;
  for (unsigned i = 0; i < m; ++i) q *= p;
  const std::uint32_t x = p;  // the polynomial "x"
  std::uint32_t cur = 1;
  for (std::uint32_t i = 1; i < q - 1; ++i) {
    cur = slow.mul(cur, x);
    if (cur == 1 || cur == 0) return false;
  }
  return slow.mul(cur, x) == 1;
}

std::shared_ptr<const detail::FieldTables> build_tables(std::uint32_t p, unsigned m, Poly modulus) {
  auto t = std::make_shared<detail::FieldTables>();
  t->p = p;
  t->m = m;
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) q *= p;
  t->q = static_cast<std::uint32_t>(q);
  t->modulus = std::move(modulus);
  t->digit_weight.resize(m);
  for (unsigned i = 0, w = 1; i < m; ++i, w *= p) t->digit_weight[i] = w;

  const SlowField slow{p, m, t->modulus};
  const auto qm1 = static_cast<std::uint32_t>(q - 1);
  const auto factors = prime_factors(qm1);
  Symbol g = 1;
  if (q > 2) {
    for (g = 2; g < q; ++g) {
      bool ok = true;
      for (auto f : factors)
        if (slow.pow(g, qm1 / f) == 1) {
          ok = false;
          break;
        }
      if (ok) break;
    }
  }
  t->generator = g;
  t->log.assign(q, 0);
  t->exp.assign(2 * std::size_t{qm1}, 0);
  Symbol cur = 1;
  for (std::uint32_t i = 0; i < qm1; ++i) {
    t->exp[i] = cur;
    t->exp[i + qm1] = cur;
    t->log[cur] = i;
    cur = slow.mul(cur, g);
  }
  return t;
}

void check_order(std::uint64_t q) {
  require(q >= 2 && q <= FieldSpec::kMaxOrder,
          "field order " + std::to_string(q) + " outside supported range [2, 65536]");
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  require(is_prime(p), std::to_string(p) + " is not prime");
  check_order(p);
  return FieldSpec(build_tables(p, 1, {}));
}

FieldSpec FieldSpec::extension(std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus) {
  require(is_prime(p), std::to_string(p) + " is not prime");
  require(m >= 1, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    check_order(q);
  }
  if (m == 1) return prime(p);
  require(modulus.size() == m + 1, "modulus must have m + 1 coefficients");
  require(modulus.back() == 1, "modulus must be monic");
  for (auto c : modulus) require(c < p, "modulus coefficient out of range");
  require(is_irreducible(modulus, p), "modulus is not irreducible over GF(" + std::to_string(p) + ")");
  return FieldSpec(build_tables(p, m, std::move(modulus)));
}

FieldSpec FieldSpec::extension(std::uint32_t p, unsigned m) {
  require(is_prime(p), std::to_string(p) + " is not prime");
  require(m >= 1, "extension degree must be >= 1");
  if (m == 1) return prime(p);
  std::uint64_t lower = 1;
  for (unsigned i = 0; i < m; ++i) {
    lower *= p;
    check_order(lower);
  }
  for (std::uint32_t c = 1; c < lower; ++c) {
    Poly f = digits_of(c, p, m);
    f.push_back(1);
    if (is_primitive_poly(f, p)) return FieldSpec(build_tables(p, m, std::move(f)));
  }
  throw Error("no primitive polynomial found");  // unreachable for valid p, m
}

FieldSpec FieldSpec::of_order(std::uint32_t q) {
  check_order(q);
  const auto [p, m] = prime_power_decompose(q);
  require(p != 0, std::to_string(q) + " is not a prime power");
  return extension(p, m);
}

Symbol FieldSpec::add_digits(Symbol a, Symbol b) const {
  Symbol r = 0;
  const std::uint32_t p = t_->p;
  for (unsigned i = 0; i < t_->m; ++i) {
    const std::uint32_t s = a % p + b % p;
    r += (s >= p ? s - p : s) * t_->digit_weight[i];
    a /= p;
    b /= p;
  }
  return r;
}

Symbol FieldSpec::neg_digits(Symbol a) const {
  Symbol r = 0;
  const std::uint32_t p = t_->p;
  for (unsigned i = 0; i < t_->m; ++i) {
    const std::uint32_t d = a % p;
    r += (d == 0 ? 0 : p - d) * t_->digit_weight[i];
    a /= p;
  }
  return r;
}

Symbol FieldSpec::inv(Symbol a) const {
  if (a == 0) throw PreconditionError("inverse of zero");
  const std::uint32_t qm1 = t_->q - 1;
  return t_->exp[(qm1 - t_->log[a]) % qm1];
}

Symbol FieldSpec::pow(Symbol a, long long e) const {
  if (a == 0) {
    if (e < 0) throw PreconditionError("negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const long long qm1 = t_->q - 1;
  long long r = (static_cast<long long>(t_->log[a]) * (e % qm1)) % qm1;
  if (r < 0) r += qm1;
  return t_->exp[static_cast<std::size_t>(r)];
}

Symbol FieldSpec::primitive_element() const {
  require(t_->q >= 3, "GF(2) has no primitive element beyond 1");
  return t_->generator;
}

Symbol FieldSpec::nth_root_of_unity(std::uint32_t r) const {
  require(r >= 1 && (t_->q - 1) % r == 0,
          std::to_string(r) + " does not divide q - 1 = " + std::to_string(t_->q - 1));
  if (r == 1) return 1;
  return pow(t_->generator, (t_->q - 1) / r);
}

std::uint32_t FieldSpec::multiplicative_order(Symbol a) const {
  require(a != 0 && a < t_->q, "order of zero is undefined");
  const std::uint32_t qm1 = t_->q - 1;
  return qm1 / std::gcd(qm1, t_->log[a]);
}

std::vector<std::uint32_t> FieldSpec::to_coords(Symbol a) const {
  require(contains(a), "symbol out of range");
  return digits_of(a, t_->p, t_->m);
}

Symbol FieldSpec::from_coords(std::span<const std::uint32_t> coords) const {
  require(coords.size() == t_->m, "coordinate vector length must equal m");
  Symbol v = 0;
  for (std::size_t i = coords.size(); i-- > 0;) {
    require(coords[i] < t_->p, "coordinate out of range");
    v = v * t_->p + coords[i];
  }
  return v;
}

FieldElement FieldSpec::element(Symbol a) const { return FieldElement(*this, a); }
FieldElement FieldSpec::zero() const { return FieldElement(*this, 0); }
FieldElement FieldSpec::one() const { return FieldElement(*this, 1); }

std::string FieldSpec::to_string() const {
  std::ostringstream os;
  os << "GF(" << t_->q << ")";
  if (t_->m > 1) {
    os << " mod ";
    bool first = true;
    for (std::size_t i = t_->modulus.size(); i-- > 0;) {
      const auto c = t_->modulus[i];
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (c != 1 || i == 0) os << c;
      if (i >= 1) os << "x";
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

FieldElement::FieldElement(FieldSpec spec, Symbol value) : spec_(std::move(spec)), value_(value) {
  require(spec_.contains(value_), "value " + std::to_string(value_) + " outside " + spec_.to_string());
}

namespace {
void same_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.spec() == b.spec()))
    throw PreconditionError("field mismatch: " + a.spec().to_string() + " vs " + b.spec().to_string());
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  same_field(a, b);
  return {a.spec_, a.spec_.add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  same_field(a, b);
  return {a.spec_, a.spec_.sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  same_field(a, b);
  return {a.spec_, a.spec_.mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  same_field(a, b);
  return {a.spec_, a.spec_.div(a.value_, b.value_)};
}

FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement inv(const FieldElement& a) { return a.inv(); }
FieldElement pow(const FieldElement& a, long long e) { return a.pow(e); }
FieldElement primitive_element(const FieldSpec& spec) { return spec.element(spec.primitive_element()); }
FieldElement nth_root_of_unity(const FieldSpec& spec, std::uint32_t r) {
  return spec.element(spec.nth_root_of_unity(r));
}

}  // namespace convcode

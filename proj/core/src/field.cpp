#include "ddg/field.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "ddg/error.hpp"

namespace ddg {
namespace {

bool is_prime(std::uint32_t v) {
  if (v < 2) return false;
  for (std::uint32_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

using Poly = std::vector<std::uint32_t>;  // low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + p - (lead * b[i]) % p) % p;
    }
    trim(a);
  }
  return a;
}

// Canonical moduli, all Conway polynomials. Anything not listed falls back
// to the lexicographically least monic irreducible polynomial.
const std::map<std::pair<std::uint32_t, std::uint32_t>, Poly>& modulus_table() {
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 2}, {2, 12, 1}},
  };
  return table;
}

Poly least_irreducible(std::uint32_t p, std::uint32_t n) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n; ++i) count *= p;
  for (std::uint64_t code = 1; code < count; ++code) {
    Poly f(n + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < n; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[n] = 1;
    if (is_irreducible(p, f)) return f;
  }
  throw Error(ErrorCode::kInvalidArgument, "no irreducible polynomial found");
}

}  // namespace

PrimePower prime_power(std::uint32_t q) {
  if (q < 2) {
    throw Error(ErrorCode::kNotPrimePower, std::to_string(q) + " is not a prime power");
  }
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t n = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++n;
  }
  if (rest != 1) {
    throw Error(ErrorCode::kNotPrimePower, std::to_string(q) + " is not a prime power");
  }
  return {p, n};
}

bool is_prime_power(std::uint32_t q) {
  try {
    prime_power(q);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Field Field::make(std::uint32_t q) {
  if (q > kMaxOrder) {
    throw Error(ErrorCode::kInvalidArgument,
                "field order " + std::to_string(q) + " exceeds " + std::to_string(kMaxOrder));
  }
  const PrimePower pp = prime_power(q);
  if (pp.n == 1) return Field(pp.p, {0, 1});
  const auto& table = modulus_table();
  if (auto it = table.find({pp.p, pp.n}); it != table.end()) return Field(pp.p, it->second);
  return Field(pp.p, least_irreducible(pp.p, pp.n));
}

Field::Field(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) {
    throw Error(ErrorCode::kNotPrimePower, "characteristic " + std::to_string(p_) + " is not prime");
  }
  if (modulus_.size() < 2 || modulus_.back() != 1) {
    throw Error(ErrorCode::kInvalidArgument, "modulus must be monic of degree >= 1");
  }
  for (std::uint32_t c : modulus_) {
    if (c >= p_) throw Error(ErrorCode::kInvalidArgument, "modulus coefficient out of range");
  }
  n_ = static_cast<std::uint32_t>(modulus_.size() - 1);
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n_; ++i) q *= p_;
  if (q > kMaxOrder) throw Error(ErrorCode::kInvalidArgument, "field order too large");
  q_ = static_cast<std::uint32_t>(q);
  if (n_ > 1 && !is_irreducible(p_, modulus_)) {
    throw Error(ErrorCode::kInvalidArgument, "modulus " + modulus_string() + " is reducible");
  }
  build_tables();
}

std::uint32_t Field::poly_add(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

std::uint32_t Field::poly_mul(std::uint32_t a, std::uint32_t b) const {
  Poly pa(n_), pb(n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    pa[i] = a % p_;
    a /= p_;
    pb[i] = b % p_;
    b /= p_;
  }
  Poly prod(2 * n_, 0);
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t j = 0; j < n_; ++j) {
      prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
    }
  }
  Poly r = poly_mod(std::move(prod), modulus_, p_);
  std::uint32_t out = 0;
  for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
  return out;
}

void Field::build_tables() {
  neg_.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    std::uint32_t v = a;
    for (std::uint32_t i = 0; i < n_; ++i) {
      out += ((p_ - v % p_) % p_) * place;
      v /= p_;
      place *= p_;
    }
    neg_[a] = out;
  }

  // Smallest primitive element by index.
  const std::uint32_t order = q_ - 1;
  std::uint32_t generator = 0;
  for (std::uint32_t g = 1; g < q_ && generator == 0; ++g) {
    std::uint32_t x = g;
    std::uint32_t k = 1;
    while (x != 1) {
      x = poly_mul(x, g);
      ++k;
    }
    if (k == order) generator = g;
  }

  exp_.assign(2 * static_cast<std::size_t>(order), 0);
  log_.assign(q_, kNoLog);
  std::uint32_t x = 1;
  for (std::uint32_t k = 0; k < order; ++k) {
    exp_[k] = x;
    exp_[k + order] = x;
    log_[x] = k;
    x = poly_mul(x, generator);
  }

  zech_.assign(order, kNoLog);
  for (std::uint32_t k = 0; k < order; ++k) {
    const std::uint32_t s = poly_add(1, exp_[k]);
    zech_[k] = s == 0 ? kNoLog : log_[s];
  }
}

std::string Field::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    const std::uint32_t c = modulus_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c != 1 || i == 0) os << c;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

FieldElement Field::element(std::uint32_t index) const {
  if (index >= q_) {
    throw Error(ErrorCode::kInvalidArgument,
                "element index " + std::to_string(index) + " outside GF(" + std::to_string(q_) + ")");
  }
  return {index};
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = {i};
  return out;
}

FieldElement Field::inv(FieldElement a) const {
  if (a.index == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  return {inv_raw(a.index)};
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.index == 0) return zero();
  const std::uint64_t k = (static_cast<std::uint64_t>(log_[a.index]) * (e % (q_ - 1))) % (q_ - 1);
  return {exp_[k]};
}

FieldElement Field::arith(FieldOp op, FieldElement a, FieldElement b) const {
  switch (op) {
    case FieldOp::kAdd: return add(a, b);
    case FieldOp::kSub: return sub(a, b);
    case FieldOp::kMul: return mul(a, b);
  }
  return zero();
}

}  // namespace ddg

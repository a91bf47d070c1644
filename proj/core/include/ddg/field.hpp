#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ddg {

// An element of GF(p^n), encoded by its coefficient vector read as a base-p
// integer: index 0 is zero, index 1 is one, index p is the generator x.
struct FieldElement {
  std::uint32_t index = 0;

  constexpr auto operator<=>(const FieldElement&) const = default;
};

enum class FieldOp { kAdd, kSub, kMul };

// GF(q) for q = p^n <= 16384. Construction builds antilog/log and Zech
// tables, after which every operation is a handful of lookups. Instances are
// immutable and safe to share between threads.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 16384;

  // Field of order q. The modulus comes from a fixed table of irreducible
  // polynomials (falling back to the lexicographically least irreducible
  // for unlisted (p, n)), so the same q always yields the same field.
  static Field make(std::uint32_t q);

  // Field with an explicit modulus. `modulus` holds n+1 coefficients, low
  // degree first, leading coefficient 1. Throws when p is not prime or the
  // modulus is reducible.
  Field(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::string modulus_string() const;

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement element(std::uint32_t index) const;
  std::vector<FieldElement> elements() const;

  FieldElement add(FieldElement a, FieldElement b) const { return {add_raw(a.index, b.index)}; }
  FieldElement sub(FieldElement a, FieldElement b) const { return {add_raw(a.index, neg_[b.index])}; }
  FieldElement mul(FieldElement a, FieldElement b) const { return {mul_raw(a.index, b.index)}; }
  FieldElement neg(FieldElement a) const { return {neg_[a.index]}; }
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  FieldElement arith(FieldOp op, FieldElement a, FieldElement b) const;

  // Unchecked index-level operations for inner loops (geometry enumeration).
  std::uint32_t add_raw(std::uint32_t a, std::uint32_t b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    std::uint32_t la = log_[a];
    std::uint32_t d = log_[b] + (q_ - 1) - la;
    if (d >= q_ - 1) d -= q_ - 1;
    std::uint32_t z = zech_[d];
    if (z == kNoLog) return 0;
    return exp_[la + z];
  }
  std::uint32_t sub_raw(std::uint32_t a, std::uint32_t b) const { return add_raw(a, neg_[b]); }
  std::uint32_t neg_raw(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  std::uint32_t inv_raw(std::uint32_t a) const { return exp_[q_ - 1 - log_[a]]; }

  // The primitive element whose powers index the log tables.
  FieldElement primitive() const { return {exp_[1]}; }

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  std::uint32_t poly_add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t poly_mul(std::uint32_t a, std::uint32_t b) const;
  void build_tables();

  std::uint32_t p_;
  std::uint32_t n_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;   // 2(q-1) entries so log sums need no reduction
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> zech_;  // log(1 + g^k), kNoLog when 1 + g^k = 0
  std::vector<std::uint32_t> neg_;
};

struct PrimePower {
  std::uint32_t p;
  std::uint32_t n;
};

// Decomposes q as p^n; throws NotPrimePower otherwise.
PrimePower prime_power(std::uint32_t q);
bool is_prime_power(std::uint32_t q);

// Exhaustive factor search over monic polynomials of degree <= n/2.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

}  // namespace ddg

#pragma once

// Finite field arithmetic GF(p^k) in a polynomial basis.
//
// An element is stored as its index v = c_0 + c_1 p + ... + c_{k-1} p^{k-1},
// where (c_0, ..., c_{k-1}) are its coordinates with respect to 1, x, ..., x^{k-1}.
// Index order is the enumeration order used everywhere for tie-breaking:
// zero is index 0, one is index 1, and the prime subfield occupies 0..p-1.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tnet/error.hpp"

namespace tnet {

inline constexpr std::uint64_t kDefaultFieldBound = std::uint64_t{1} << 20;

struct Elem {
  std::uint32_t v = 0;

  auto operator<=>(const Elem&) const = default;
  bool is_zero() const { return v == 0; }
};

struct FieldSpec {
  int p = 0;
  int k = 0;
  std::vector<int> modulus;  // monic, degree k, low-to-high

  bool operator==(const FieldSpec&) const = default;
};

/// (p, e) with n = p^e; nullopt when n is not a prime power.
std::optional<std::pair<int, int>> prime_power(int n);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  /// Builds GF(p^k) modulo the smallest monic irreducible of degree k, where
  /// polynomials are ordered by the index of their non-leading coefficients.
  static FieldPtr create(int p, int k, std::uint64_t bound = kDefaultFieldBound);
  /// Rebuilds a field from a serialized spec; the modulus is re-verified.
  static FieldPtr from_spec(const FieldSpec& spec, std::uint64_t bound = kDefaultFieldBound);

  const FieldSpec& spec() const { return spec_; }
  int p() const { return spec_.p; }
  int k() const { return spec_.k; }
  std::uint32_t order() const { return q_; }
  bool same_as(const Field& other) const { return spec_ == other.spec_; }

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }
  Elem from_int(long long n) const;
  Elem primitive() const { return Elem{exp_[1]}; }

  Elem add(Elem a, Elem b) const {
    return add_table_.empty() ? add_slow(a, b) : Elem{add_table_[a.v * q_ + b.v]};
  }
  Elem neg(Elem a) const { return Elem{neg_[a.v]}; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a.v == 0 || b.v == 0) return zero();
    return Elem{exp_[log_[a.v] + log_[b.v]]};
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long e) const;
  /// Multiplicative order of a nonzero element.
  std::uint32_t mult_order(Elem a) const;
  /// Discrete log with respect to primitive(); a must be nonzero.
  std::uint32_t log(Elem a) const { return log_[a.v]; }
  Elem exp(std::uint64_t e) const { return Elem{exp_[e % (q_ - 1)]}; }

  std::vector<int> coeffs(Elem a) const;
  Elem from_coeffs(std::span<const int> c) const;
  /// All q elements in enumeration order.
  std::vector<Elem> elements() const;
  std::string to_string(Elem a) const;

  /// True when a lies in the prime subfield.
  bool is_prime_subfield(Elem a) const { return a.v < static_cast<std::uint32_t>(spec_.p); }

 private:
  Field() = default;
  Elem add_slow(Elem a, Elem b) const;
  void build_tables();

  FieldSpec spec_;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> exp_;  // length 2(q-1)
  std::vector<std::uint32_t> log_;
};

bool is_prime(long long n);
/// Irreducibility over Z_p via gcd(f, x^{p^i} - x) = 1 for i <= deg/2.
bool is_irreducible_mod_p(std::span<const int> poly, int p);

/// Checked element that carries its field; arithmetic across different
/// fields throws SpecMismatch.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem e) : field_(std::move(field)), e_(e) {}
  FieldElement(FieldPtr field, std::span<const int> coeffs);

  const FieldPtr& field() const { return field_; }
  Elem raw() const { return e_; }
  std::vector<int> coeffs() const { return field_->coeffs(e_); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_->neg(e_)}; }
  bool operator==(const FieldElement& o) const;

 private:
  void check_same(const FieldElement& o) const;

  FieldPtr field_;
  Elem e_;
};

/// Injective field homomorphism GF(r) -> GF(q).
class Embedding {
 public:
  Embedding(FieldPtr sub, FieldPtr sup);

  Elem operator()(Elem a) const { return image_[a.v]; }
  const Field& sub() const { return *sub_; }
  const Field& sup() const { return *sup_; }
  const FieldPtr& sub_ptr() const { return sub_; }
  const FieldPtr& sup_ptr() const { return sup_; }
  /// Preimage of b, if b lies in the image.
  bool contains(Elem b) const { return preimage_[b.v] >= 0; }
  Elem preimage(Elem b) const;

 private:
  FieldPtr sub_;
  FieldPtr sup_;
  std::vector<Elem> image_;
  std::vector<std::int64_t> preimage_;
};

Embedding embed_subfield(const FieldPtr& sub, const FieldPtr& sup);

}  // namespace tnet

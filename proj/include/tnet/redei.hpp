#pragma once

// Redei polynomials of affine point sets and the divisibility certificate
// for nets whose third component lies on a line.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tnet/nets.hpp"

namespace tnet {

/// Univariate polynomial, coefficients low to high, no trailing zeros.
using UPoly = std::vector<Elem>;

void trim(UPoly& f);
UPoly poly_add(const Field& F, const UPoly& f, const UPoly& g);
UPoly poly_sub(const Field& F, const UPoly& f, const UPoly& g);
UPoly poly_mul(const Field& F, const UPoly& f, const UPoly& g);
UPoly poly_scale(const Field& F, const UPoly& f, Elem s);
/// Quotient and remainder; g must be nonzero.
std::pair<UPoly, UPoly> poly_divmod(const Field& F, const UPoly& f, const UPoly& g);
/// Product of (X - m) over the roots.
UPoly poly_from_roots(const Field& F, std::span<const Elem> roots);

/// Polynomial in T and X stored sparsely by (deg_T, deg_X).
class BiPoly {
 public:
  using Key = std::pair<int, int>;
  const std::map<Key, Elem>& terms() const { return terms_; }
  Elem coeff(int t, int x) const;
  void add_term(const Field& F, int t, int x, Elem c);
  int degree_t() const;
  BiPoly mul(const Field& F, const BiPoly& o) const;
  BiPoly sub(const Field& F, const BiPoly& o) const;
  bool operator==(const BiPoly&) const = default;

 private:
  std::map<Key, Elem> terms_;
};

/// (x, y) of an affine point (x : y : 1). Throws NonAffinePoint.
std::pair<Elem, Elem> affine_coords(const Field& F, const Point& P);

/// prod over the points of (T + X a1 - a2). Throws NonAffinePoint.
BiPoly redei_polynomial(const Field& F, std::span<const Point> points);

/// Coefficient of T^{n-k} as a polynomial in X. Throws OutOfRange.
UPoly sigma_k(const Field& F, const BiPoly& P, int k);

/// pi_0 .. pi_up_to from sigma_0 .. sigma_up_to by Newton's identities.
/// Throws CharTooSmall when the set size n exceeds p.
std::vector<UPoly> power_sums(const Field& F, const std::vector<UPoly>& sigma, int up_to, std::size_t n);

/// sum over the points of (X a1 - a2)^k, computed directly.
UPoly direct_power_sum(const Field& F, std::span<const Point> points, int k);

/// sum over the points of a1^i a2^j.
Elem monomial_sum(const Field& F, std::span<const Point> points, int i, int j);

struct RedeiFrame {
  Mat3 T;               // applied to every point
  DualThreeNet net;     // transformed net: C on Z = 0, (0:1:0) not in C
  std::vector<Elem> directions;
};

/// Moves the line of C to Z = 0 so that the vertical direction is not in C.
/// The line's first point outside C goes to (0:1:0), its first other point
/// to (1:0:0), and the first point off the line to (0:0:1).
RedeiFrame redei_frame(const DualThreeNet& net);

struct DivisibilityReport {
  bool ok = true;
  std::vector<bool> remainder_zero;  // index k-1 for k = 1..n
  std::optional<Elem> scalar;        // lambda with sigma_n(A) - sigma_n(B) = lambda * prod(X - m)
};

DivisibilityReport divisibility_certificate(const Field& F, std::span<const Point> A, std::span<const Point> B,
                                            std::span<const Elem> directions);

struct RedeiReport {
  DivisibilityReport divisibility;
  bool sigma_equal = false;          // sigma_k(A) = sigma_k(B) for k < n
  bool power_sums_checked = false;   // false when n > p
  bool power_sums_match_direct = false;
  bool monomial_sums_equal = false;  // i + j < n, via coefficient extraction and directly
  bool moments_equal = false;        // random polynomials of degree < n
  bool covering_ok = false;          // no degree < n polynomial vanishes on all but one point
  std::string notice;
  bool ok() const;
};

/// Full pipeline on a net with C collinear. `seed` drives the random moment checks.
RedeiReport redei_report(const DualThreeNet& net, std::uint64_t seed = 1);

}  // namespace tnet

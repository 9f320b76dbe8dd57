#include "tnet/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tnet {

std::optional<std::pair<int, int>> prime_power(int n) {
  if (n < 2) return std::nullopt;
  for (int p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (n != 1) return std::nullopt;
    return std::make_pair(p, e);
  }
  return std::nullopt;
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DivByZero: return "DivByZero";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::NotASubfield: return "NotASubfield";
    case ErrorCode::EqualPoints: return "EqualPoints";
    case ErrorCode::EqualLines: return "EqualLines";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::PonCenter: return "PonCenter";
    case ErrorCode::CenterOnScreen: return "CenterOnScreen";
    case ErrorCode::NotOnCurve: return "NotOnCurve";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::NoSuchSubgroup: return "NoSuchSubgroup";
    case ErrorCode::IndexTooSmall: return "IndexTooSmall";
    case ErrorCode::InvalidCosets: return "InvalidCosets";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::DegenerateCosets: return "DegenerateCosets";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::ExhaustedPointChoices: return "ExhaustedPointChoices";
    case ErrorCode::NonAffinePoint: return "NonAffinePoint";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::CharTooSmall: return "CharTooSmall";
    case ErrorCode::CNotOnLine: return "CNotOnLine";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::TheoremViolated: return "TheoremViolated";
    case ErrorCode::OnConic: return "OnConic";
    case ErrorCode::IsNucleus: return "IsNucleus";
    case ErrorCode::NotOrder2: return "NotOrder2";
    case ErrorCode::NotOrder4: return "NotOrder4";
    case ErrorCode::CanonicalizationFailed: return "CanonicalizationFailed";
    case ErrorCode::NoEquivalence: return "NoEquivalence";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotOnConic: return "NotOnConic";
    case ErrorCode::PointOnEll: return "PointOnEll";
  }
  return "Unknown";
}

namespace {

using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
  // p is prime and a != 0 mod p
  long long r = 1, b = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<int>(r);
}

// Remainder of a modulo monic-or-not f (f nonzero, trimmed).
Poly poly_mod(Poly a, const Poly& f, int p) {
  trim(a);
  const int df = static_cast<int>(f.size()) - 1;
  const int lead_inv = inv_mod(f.back(), p);
  while (static_cast<int>(a.size()) - 1 >= df && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - df;
    const int factor = static_cast<int>(static_cast<long long>(a.back()) * lead_inv % p);
    for (int i = 0; i <= df; ++i) {
      a[shift + i] = static_cast<int>((a[shift + i] - static_cast<long long>(factor) * f[i]) % p);
      if (a[shift + i] < 0) a[shift + i] += p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<int>((r[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, int p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
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

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible_mod_p(std::span<const int> poly, int p) {
  Poly f(poly.begin(), poly.end());
  for (auto& c : f) c = ((c % p) + p) % p;
  trim(f);
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  Poly h{0, 1};  // x
  for (int i = 1; i <= deg / 2; ++i) {
    h = poly_powmod(h, static_cast<std::uint64_t>(p), f, p);  // x^{p^i} mod f
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] - 1 + p) % p;
    trim(diff);
    const Poly g = poly_gcd(f, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

FieldPtr Field::create(int p, int k, std::uint64_t bound) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorCode::BadParameters, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > bound) {
      throw Error(ErrorCode::TooLarge, "p^k exceeds the configured bound " + std::to_string(bound));
    }
  }
  FieldSpec spec{p, k, {}};
  for (std::uint64_t v = 0; v < q; ++v) {
    Poly f(static_cast<std::size_t>(k) + 1, 0);
    std::uint64_t t = v;
    for (int i = 0; i < k; ++i) {
      f[i] = static_cast<int>(t % p);
      t /= p;
    }
    f[k] = 1;
    if (is_irreducible_mod_p(f, p)) {
      spec.modulus = std::move(f);
      break;
    }
  }
  return from_spec(spec, bound);
}

FieldPtr Field::from_spec(const FieldSpec& spec, std::uint64_t bound) {
  if (!is_prime(spec.p)) throw Error(ErrorCode::NonPrime, std::to_string(spec.p) + " is not prime");
  if (spec.k < 1 || static_cast<int>(spec.modulus.size()) != spec.k + 1 || spec.modulus.back() != 1) {
    throw Error(ErrorCode::BadParameters, "modulus must be monic of degree k");
  }
  for (int c : spec.modulus) {
    if (c < 0 || c >= spec.p) throw Error(ErrorCode::BadParameters, "modulus coefficient out of range");
  }
  if (!is_irreducible_mod_p(spec.modulus, spec.p)) {
    throw Error(ErrorCode::BadParameters, "modulus is reducible");
  }
  std::uint64_t q = 1;
  for (int i = 0; i < spec.k; ++i) {
    q *= static_cast<std::uint64_t>(spec.p);
    if (q > bound) throw Error(ErrorCode::TooLarge, "p^k exceeds the configured bound");
  }
  std::shared_ptr<Field> f(new Field());
  f->spec_ = spec;
  f->q_ = static_cast<std::uint32_t>(q);
  f->build_tables();
  return f;
}

void Field::build_tables() {
  const int p = spec_.p;
  const int k = spec_.k;
  const std::uint32_t q = q_;

  neg_.resize(q);
  for (std::uint32_t v = 0; v < q; ++v) {
    std::uint32_t t = v, r = 0, place = 1;
    for (int i = 0; i < k; ++i) {
      const std::uint32_t c = t % p;
      t /= p;
      r += ((p - c) % p) * place;
      place *= p;
    }
    neg_[v] = r;
  }

  if (q <= 1024) {
    add_table_.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) add_table_[a * q + b] = add_slow(Elem{a}, Elem{b}).v;
    }
  }

  const Poly& f = spec_.modulus;
  auto to_poly = [&](std::uint32_t v) {
    Poly a(k, 0);
    for (int i = 0; i < k; ++i) {
      a[i] = static_cast<int>(v % p);
      v /= p;
    }
    trim(a);
    return a;
  };
  auto to_index = [&](const Poly& a) {
    std::uint32_t v = 0, place = 1;
    for (int i = 0; i < k; ++i) {
      if (i < static_cast<int>(a.size())) v += static_cast<std::uint32_t>(a[i]) * place;
      place *= p;
    }
    return v;
  };

  const auto factors = prime_factors(q - 1);
  std::uint32_t gen = 1;
  for (std::uint32_t cand = 1; cand < q; ++cand) {
    const Poly g = to_poly(cand);
    bool primitive = true;
    for (auto r : factors) {
      const Poly t = poly_powmod(g, (q - 1) / r, f, p);
      if (t.size() == 1 && t[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = cand;
      break;
    }
  }

  exp_.assign(2 * static_cast<std::size_t>(q - 1) + 1, 0);
  log_.assign(q, 0);
  Poly cur{1};
  const Poly g = to_poly(gen);
  for (std::uint32_t i = 0; i < q - 1; ++i) {
    const std::uint32_t v = to_index(cur);
    exp_[i] = v;
    log_[v] = i;
    cur = poly_mulmod(cur, g, f, p);
  }
  for (std::size_t i = q - 1; i < exp_.size(); ++i) exp_[i] = exp_[i - (q - 1)];
}

Elem Field::add_slow(Elem a, Elem b) const {
  const std::uint32_t p = static_cast<std::uint32_t>(spec_.p);
  std::uint32_t x = a.v, y = b.v, r = 0, place = 1;
  for (int i = 0; i < spec_.k; ++i) {
    r += ((x % p + y % p) % p) * place;
    x /= p;
    y /= p;
    place *= p;
  }
  return Elem{r};
}

Elem Field::from_int(long long n) const {
  long long r = n % spec_.p;
  if (r < 0) r += spec_.p;
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::inv(Elem a) const {
  if (a.v == 0) throw Error(ErrorCode::DivByZero, "inverse of zero");
  const std::uint32_t l = log_[a.v];
  return Elem{exp_[(q_ - 1 - l) % (q_ - 1)]};
}

Elem Field::pow(Elem a, long long e) const {
  if (a.v == 0) {
    if (e == 0) return one();
    if (e < 0) throw Error(ErrorCode::DivByZero, "negative power of zero");
    return zero();
  }
  const long long n = q_ - 1;
  long long idx = (static_cast<long long>(log_[a.v]) * (e % n)) % n;
  if (idx < 0) idx += n;
  return Elem{exp_[idx]};
}

std::uint32_t Field::mult_order(Elem a) const {
  if (a.v == 0) throw Error(ErrorCode::DivByZero, "order of zero");
  const std::uint32_t n = q_ - 1;
  return n / std::gcd(n, log_[a.v]);
}

std::vector<int> Field::coeffs(Elem a) const {
  std::vector<int> c(spec_.k, 0);
  std::uint32_t v = a.v;
  for (int i = 0; i < spec_.k; ++i) {
    c[i] = static_cast<int>(v % spec_.p);
    v /= spec_.p;
  }
  return c;
}

Elem Field::from_coeffs(std::span<const int> c) const {
  if (static_cast<int>(c.size()) != spec_.k) {
    throw Error(ErrorCode::SpecMismatch, "coefficient vector has wrong length");
  }
  std::uint32_t v = 0, place = 1;
  for (int i = 0; i < spec_.k; ++i) {
    if (c[i] < 0 || c[i] >= spec_.p) throw Error(ErrorCode::SpecMismatch, "coefficient out of range");
    v += static_cast<std::uint32_t>(c[i]) * place;
    place *= spec_.p;
  }
  return Elem{v};
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(q_);
  for (std::uint32_t v = 0; v < q_; ++v) out[v] = Elem{v};
  return out;
}

std::string Field::to_string(Elem a) const {
  if (spec_.k == 1) return std::to_string(a.v);
  std::ostringstream os;
  const auto c = coeffs(a);
  bool first = true;
  for (int i = spec_.k - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

FieldElement::FieldElement(FieldPtr field, std::span<const int> coeffs)
    : field_(std::move(field)), e_(field_->from_coeffs(coeffs)) {}

void FieldElement::check_same(const FieldElement& o) const {
  if (!field_->same_as(*o.field_)) throw Error(ErrorCode::SpecMismatch, "operands live in different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(e_, o.e_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(e_, o.e_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(e_, o.e_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->div(e_, o.e_)};
}
bool FieldElement::operator==(const FieldElement& o) const {
  return field_->same_as(*o.field_) && e_ == o.e_;
}

Embedding::Embedding(FieldPtr sub, FieldPtr sup) : sub_(std::move(sub)), sup_(std::move(sup)) {
  const Field& S = *sub_;
  const Field& Q = *sup_;
  if (S.p() != Q.p() || Q.k() % S.k() != 0) {
    throw Error(ErrorCode::NotASubfield,
                "GF(" + std::to_string(S.order()) + ") is not a subfield of GF(" + std::to_string(Q.order()) + ")");
  }
  const std::uint32_t r = S.order();
  const Elem g = S.primitive();

  // Minimal polynomial of g over Z_p from its Frobenius conjugates.
  std::vector<Elem> conj;
  Elem c = g;
  do {
    conj.push_back(c);
    c = S.pow(c, S.p());
  } while (c != g);
  std::vector<Elem> mp{S.one()};  // low-to-high
  for (Elem root : conj) {
    std::vector<Elem> next(mp.size() + 1, S.zero());
    for (std::size_t i = 0; i < mp.size(); ++i) {
      next[i + 1] = S.add(next[i + 1], mp[i]);
      next[i] = S.sub(next[i], S.mul(mp[i], root));
    }
    mp = std::move(next);
  }
  std::vector<Elem> mp_sup;
  for (Elem e : mp) {
    if (!S.is_prime_subfield(e)) throw Error(ErrorCode::NotASubfield, "minimal polynomial not over Z_p");
    mp_sup.push_back(Q.from_int(e.v));
  }

  auto eval = [&](Elem x) {
    Elem acc = Q.zero();
    for (auto it = mp_sup.rbegin(); it != mp_sup.rend(); ++it) acc = Q.add(Q.mul(acc, x), *it);
    return acc;
  };

  Elem beta{0};
  bool found = false;
  for (std::uint32_t v = 1; v < Q.order() && !found; ++v) {
    const Elem cand{v};
    if (Q.mult_order(cand) != r - 1) continue;
    if (!eval(cand).is_zero()) continue;
    beta = cand;
    found = true;
  }
  if (!found) throw Error(ErrorCode::NotASubfield, "no root of the generator's minimal polynomial");

  image_.assign(r, Q.zero());
  Elem gp = S.one(), bp = Q.one();
  for (std::uint32_t i = 0; i + 1 < r; ++i) {
    image_[gp.v] = bp;
    gp = S.mul(gp, g);
    bp = Q.mul(bp, beta);
  }
  preimage_.assign(Q.order(), -1);
  for (std::uint32_t v = 0; v < r; ++v) preimage_[image_[v].v] = v;

  if (r <= 256) {
    for (std::uint32_t a = 0; a < r; ++a) {
      for (std::uint32_t b = 0; b < r; ++b) {
        const Elem x{a}, y{b};
        if (image_[S.add(x, y).v] != Q.add(image_[a], image_[b]) ||
            image_[S.mul(x, y).v] != Q.mul(image_[a], image_[b])) {
          throw Error(ErrorCode::NotASubfield, "embedding is not a homomorphism");
        }
      }
    }
  }
}

Elem Embedding::preimage(Elem b) const {
  if (preimage_[b.v] < 0) throw Error(ErrorCode::NotASubfield, "element not in the subfield image");
  return Elem{static_cast<std::uint32_t>(preimage_[b.v])};
}

Embedding embed_subfield(const FieldPtr& sub, const FieldPtr& sup) { return Embedding(sub, sup); }

}  // namespace tnet

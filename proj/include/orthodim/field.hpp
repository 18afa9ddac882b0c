#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orthodim {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Thrown when a search or enumeration exceeds its configured budget.
// Callers must treat this as "inconclusive", never as a decision.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

// Prime field GF(p), p <= 251. Elements are ints in [0, p).
class GF {
 public:
  using Elem = int;

  explicit GF(int p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("GF: modulus must be prime");
    if (p > 251) throw std::invalid_argument("GF: modulus must be <= 251");
  }

  int p() const { return p_; }
  int characteristic() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }

  Elem add(Elem a, Elem b) const {
    int s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const {
    int s = a - b;
    return s < 0 ? s + p_ : s;
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return int(static_cast<long long>(a) * b % p_); }

  Elem inv(Elem a) const {
    if (a == 0) throw std::invalid_argument("GF::inv: zero has no inverse");
    // extended Euclid on (a, p)
    int t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      int q = r / nr;
      int tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return t < 0 ? t + p_ : t;
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem from_int(long long v) const {
    long long r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }
  // num/den reduced mod p; rejects tokens whose denominator vanishes mod p
  Elem from_rat(const Rat& r) const {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    long long n = static_cast<long long>(num % p_);
    long long d = static_cast<long long>(den % p_);
    if (d == 0) throw std::invalid_argument("GF::from_rat: denominator divisible by field characteristic");
    return mul(from_int(n), inv(from_int(d)));
  }

 private:
  int p_ = 2;
};

// Exact rationals with the same context interface as GF, so the linear
// algebra below works over either without duplication.
struct QQ {
  using Elem = Rat;

  int characteristic() const { return 0; }

  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  bool is_zero(const Elem& a) const { return a == 0; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::invalid_argument("QQ::inv: zero has no inverse");
    return Rat(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }

  Elem from_int(long long v) const { return Rat(v); }
  Elem from_rat(const Rat& r) const { return r; }
};

// Runtime field selector: a prime field gf<p> or the rationals.
struct FieldSpec {
  enum class Kind { Prime, Rational };
  Kind kind = Kind::Prime;
  int p = 2;

  static FieldSpec gf(int p) {
    FieldSpec s;
    s.kind = Kind::Prime;
    s.p = p;
    GF check(p);  // validate
    (void)check;
    return s;
  }
  static FieldSpec rational() {
    FieldSpec s;
    s.kind = Kind::Rational;
    s.p = 0;
    return s;
  }

  bool is_finite() const { return kind == Kind::Prime; }
  int order() const {
    if (!is_finite()) throw std::logic_error("FieldSpec::order: infinite field");
    return p;
  }
  GF as_gf() const {
    if (!is_finite()) throw std::invalid_argument("operation requires a finite field");
    return GF(p);
  }

  std::string name() const {
    return is_finite() ? "gf" + std::to_string(p) : std::string("rational");
  }

  static std::optional<FieldSpec> parse(std::string_view s) {
    if (s == "rational" || s == "Q" || s == "q") return rational();
    if (s.size() > 2 && (s.substr(0, 2) == "gf" || s.substr(0, 2) == "GF")) {
      int v = 0;
      for (char c : s.substr(2)) {
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + (c - '0');
        if (v > 100000) return std::nullopt;
      }
      if (!is_prime(v) || v > 251) return std::nullopt;
      return gf(v);
    }
    return std::nullopt;
  }

  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }
};

}  // namespace orthodim

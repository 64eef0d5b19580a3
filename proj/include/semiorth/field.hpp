#pragma once

// Exact scalars: arbitrary-precision rationals (GMP) and prime fields F_p.
//
// Both scalar types satisfy the same small interface used by every generic
// algorithm in the library:
//   K(int)            integer literal (embedded through the prime subfield)
//   + - * / ==        field arithmetic
//   is_zero(x), inverse(x), to_string(x)
//
// ModP carries its modulus. An element built from a bare integer has
// modulus 0 ("literal") and adopts the modulus of the first element it is
// combined with; this lets generic code write K(0), K(1), K(-1) without a
// field handle.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace semiorth {

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline Rational inverse(const Rational& x) {
  if (is_zero(x)) throw ArithmeticError("division by zero in Q");
  Rational r = 1 / x;
  return r;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

class ModP {
 public:
  ModP() = default;
  ModP(int v) : value_(v), p_(0) {}  // NOLINT: literal embedding
  ModP(std::int64_t v, std::uint32_t p) : value_(v), p_(p) { normalize(); }

  std::uint32_t modulus() const { return p_; }
  std::int64_t value() const { return value_; }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a *= inverse(b); }
  ModP operator-() const { return ModP(0) - *this; }

  ModP& operator+=(const ModP& b) {
    ModP o = b;
    unify(o);
    value_ += o.value_;
    normalize();
    return *this;
  }
  ModP& operator-=(const ModP& b) {
    ModP o = b;
    unify(o);
    value_ -= o.value_;
    normalize();
    return *this;
  }
  ModP& operator*=(const ModP& b) {
    ModP o = b;
    unify(o);
    if (p_ == 0) {
      value_ *= o.value_;
    } else {
      value_ = static_cast<std::int64_t>(
          (static_cast<unsigned __int128>(value_) * static_cast<std::uint64_t>(o.value_)) % p_);
    }
    return *this;
  }
  ModP& operator/=(const ModP& b) { return *this *= inverse(b); }

  friend bool operator==(const ModP& a, const ModP& b) {
    ModP x = a, y = b;
    x.unify(y);
    return x.value_ == y.value_;
  }
  friend bool operator!=(const ModP& a, const ModP& b) { return !(a == b); }

  friend bool is_zero(const ModP& x) { return x.value_ == 0; }

  friend ModP inverse(const ModP& x) {
    if (x.value_ == 0) throw ArithmeticError("division by zero in F_p");
    if (x.p_ == 0) {
      if (x.value_ == 1 || x.value_ == -1) return x;
      throw ArithmeticError("cannot invert an integer literal without a modulus");
    }
    // Extended Euclid.
    std::int64_t a = x.value_, m = x.p_, u = 1, v = 0;
    while (m != 0) {
      std::int64_t q = a / m;
      a -= q * m;
      std::swap(a, m);
      u -= q * v;
      std::swap(u, v);
    }
    return ModP(u, x.p_);
  }

  friend std::string to_string(const ModP& x) { return std::to_string(x.value_); }

 private:
  void normalize() {
    if (p_ != 0) {
      value_ %= static_cast<std::int64_t>(p_);
      if (value_ < 0) value_ += p_;
    }
  }
  void unify(ModP& o) {
    if (p_ == o.p_) return;
    if (p_ == 0) {
      p_ = o.p_;
      normalize();
    } else if (o.p_ == 0) {
      o.p_ = p_;
      o.normalize();
    } else {
      throw ArithmeticError("mixing elements of different prime fields");
    }
  }

  std::int64_t value_ = 0;
  std::uint32_t p_ = 0;
};

bool is_zero(const ModP& x);
ModP inverse(const ModP& x);
std::string to_string(const ModP& x);

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Runtime description of the base field.
struct Field {
  enum class Kind { Rationals, PrimeField };
  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static Field rationals() { return {}; }
  static Field prime(std::uint32_t p) {
    if (!is_prime(p) || p >= (1u << 31)) throw std::invalid_argument("F_p needs a prime p < 2^31");
    return {Kind::PrimeField, p};
  }

  std::uint32_t characteristic() const { return kind == Kind::Rationals ? 0 : p; }
  bool is_finite() const { return kind == Kind::PrimeField; }
  std::string name() const { return kind == Kind::Rationals ? "Q" : "F_" + std::to_string(p); }

  friend bool operator==(const Field&, const Field&) = default;

  template <class K>
  K integer(std::int64_t v) const {
    if constexpr (std::is_same_v<K, ModP>) {
      return ModP(v, p);
    } else {
      return Rational(mpz_class(std::to_string(v)));
    }
  }

  /// Parses "n" or "n/d" (arbitrary-length integers).
  template <class K>
  K parse(std::string_view text) const {
    std::string s(text);
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    mpz_class n, d;
    if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
      throw std::invalid_argument("malformed scalar '" + s + "'");
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    if constexpr (std::is_same_v<K, ModP>) {
      mpz_class pm(p);
      mpz_class nr = ((n % pm) + pm) % pm;
      mpz_class dr = ((d % pm) + pm) % pm;
      if (dr == 0) throw std::invalid_argument("denominator vanishes mod p in '" + s + "'");
      return ModP(nr.get_si(), p) / ModP(dr.get_si(), p);
    } else {
      Rational r(n, d);
      r.canonicalize();
      return r;
    }
  }
};

template <class K>
inline constexpr bool is_prime_field_v = std::is_same_v<K, ModP>;

}  // namespace semiorth

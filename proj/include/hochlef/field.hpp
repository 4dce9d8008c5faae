#pragma once

// Exact coefficient fields: arbitrary-precision rationals (GMP-backed) and
// prime fields F_p with a session-wide modulus.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hochlef {

// Library-wide exception for violated preconditions and malformed input.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, lets literals flow
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw error("zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  explicit Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (sgn(den) == 0) throw error("zero denominator");
    v_.canonicalize();
  }

  // Accepts "-12", "35/6"; rejects floats, exponents, whitespace, zero
  // denominators. Result is canonical.
  static Rational from_string(const std::string& s) {
    if (s.empty()) throw error("empty number literal");
    std::size_t slash = std::string::npos;
    for (std::size_t i = 0; i < s.size(); ++i) {
      char c = s[i];
      if (c == '/') {
        if (slash != std::string::npos) throw error("malformed number literal: " + s);
        slash = i;
      } else if (c == '-') {
        if (i != 0 && i != slash + 1) throw error("malformed number literal: " + s);
      } else if (c < '0' || c > '9') {
        throw error("malformed number literal: " + s);
      }
    }
    auto digits_ok = [](const std::string& part) {
      std::string t = (!part.empty() && part[0] == '-') ? part.substr(1) : part;
      return !t.empty();
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den))
      throw error("malformed number literal: " + s);
    mpq_class q(num + "/" + den);
    if (sgn(q.get_den()) == 0) throw error("zero denominator in literal: " + s);
    q.canonicalize();
    return Rational(q);
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw error("division by zero");
    return Rational(mpq_class(v_ / o.v_));
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  Rational inv() const {
    if (is_zero()) throw error("division by zero");
    return Rational(mpq_class(1 / v_));
  }
  std::string str() const { return v_.get_str(); }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

 private:
  mpq_class v_;
};

class Fp {
 public:
  Fp() : v_(0) {}
  Fp(long n) {  // NOLINT: implicit by design
    if (p_ == 0) throw error("prime field modulus not set");
    long r = n % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    v_ = static_cast<std::uint64_t>(r);
  }

  // Sets the session modulus. p must be prime (deterministic Miller-Rabin).
  static void set_modulus(std::uint64_t p) {
    if (p >= (1ull << 62)) throw error("modulus too large");
    if (!is_prime(p)) throw error("modulus is not prime");
    p_ = p;
  }
  static std::uint64_t modulus() { return p_; }

  // Accepts "a" or "a/b" with integer a, b; division happens in F_p.
  static Fp from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Fp(parse_long(s));
    Fp num(parse_long(s.substr(0, slash)));
    Fp den(parse_long(s.substr(slash + 1)));
    return num / den;
  }

  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_); }
  Fp operator+(const Fp& o) const {
    std::uint64_t s = v_ + o.v_;  // p < 2^63, no overflow
    if (s >= p_) s -= p_;
    return raw(s);
  }
  Fp operator-(const Fp& o) const {
    return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_);
  }
  Fp operator*(const Fp& o) const {
    return raw(static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(v_) * o.v_ % p_));
  }
  Fp operator/(const Fp& o) const { return *this * o.inv(); }
  Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
  Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
  Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }
  bool operator==(const Fp& o) const { return v_ == o.v_; }
  bool operator!=(const Fp& o) const { return v_ != o.v_; }

  bool is_zero() const { return v_ == 0; }
  Fp inv() const {
    if (v_ == 0) throw error("division by zero");
    // extended Euclid on (v, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_),
                 new_r = static_cast<std::int64_t>(v_);
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t -= q * new_t; std::swap(t, new_t);
      r -= q * new_r; std::swap(r, new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return raw(static_cast<std::uint64_t>(t));
  }
  std::string str() const { return std::to_string(v_); }
  std::uint64_t value() const { return v_; }

 private:
  static Fp raw(std::uint64_t v) {
    Fp f;
    f.v_ = v;
    return f;
  }
  static long parse_long(const std::string& s) {
    if (s.empty()) throw error("malformed number literal: " + s);
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(s, &pos);
    } catch (const std::exception&) {
      throw error("malformed number literal: " + s);
    }
    if (pos != s.size()) throw error("malformed number literal: " + s);
    return v;
  }
  static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
  }
  static std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  }
  // Deterministic for all 64-bit inputs with this witness set.
  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
      if (n == p) return true;
      if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
      std::uint64_t x = powmod(a, d, n);
      if (x == 1 || x == n - 1) continue;
      bool composite = true;
      for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) { composite = false; break; }
      }
      if (composite) return false;
    }
    return true;
  }

  std::uint64_t v_;
  inline static std::uint64_t p_ = 0;
};

// Uniform string parsing entry point used by the input-file layer.
template <class F>
F field_from_string(const std::string& s);
template <>
inline Rational field_from_string<Rational>(const std::string& s) {
  return Rational::from_string(s);
}
template <>
inline Fp field_from_string<Fp>(const std::string& s) {
  return Fp::from_string(s);
}

}  // namespace hochlef

#pragma once

// Residue arithmetic with a runtime modulus. Values are canonical in
// [0, n); mixing moduli throws. The modulus is capped below 2^31 so
// products never overflow int64 — every carrier in this library stays
// far below that.

#include <cstdint>
#include <ostream>
#include <optional>
#include <stdexcept>
#include <string>

namespace ringlab {

class Mod {
 public:
  Mod(std::int64_t value, std::int64_t modulus) : n_(modulus) {
    if (modulus < 1 || modulus >= (std::int64_t{1} << 31))
      throw std::invalid_argument("Mod: modulus out of range");
    v_ = value % modulus;
    if (v_ < 0) v_ += modulus;
  }

  static Mod zero(std::int64_t modulus) { return Mod(0, modulus); }
  static Mod one(std::int64_t modulus) { return Mod(1, modulus); }

  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return n_; }

  friend Mod operator+(const Mod& a, const Mod& b) {
    a.check(b);
    return Mod(a.v_ + b.v_, a.n_);
  }
  friend Mod operator-(const Mod& a, const Mod& b) {
    a.check(b);
    return Mod(a.v_ - b.v_, a.n_);
  }
  friend Mod operator*(const Mod& a, const Mod& b) {
    a.check(b);
    return Mod(a.v_ * b.v_, a.n_);
  }
  Mod operator-() const { return Mod(-v_, n_); }

  friend bool operator==(const Mod& a, const Mod& b) {
    a.check(b);
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Mod& a, const Mod& b) { return !(a == b); }

  Mod pow(std::uint64_t e) const {
    Mod r = one(n_), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  /// Multiplicative inverse, absent when gcd(value, modulus) != 1.
  std::optional<Mod> inverse() const {
    std::int64_t t = 0, new_t = 1, r = n_, new_r = v_;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (r != 1) return std::nullopt;
    return Mod(t, n_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Mod& m) {
    return os << m.v_ << " (mod " << m.n_ << ")";
  }

 private:
  void check(const Mod& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Mod: modulus mismatch");
  }

  std::int64_t v_;
  std::int64_t n_;
};

}  // namespace ringlab

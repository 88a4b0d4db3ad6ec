#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>

namespace lieweyl {

// Enough for three blocks of eight variables (x, left d, right d).
inline constexpr int kMaxVars = 24;

struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};

  int operator[](int i) const { return e[static_cast<std::size_t>(i)]; }

  int degree() const {
    int d = 0;
    for (auto v : e) d += v;
    return d;
  }

  int degree(int lo, int hi) const {
    int d = 0;
    for (int i = lo; i < hi; ++i) d += e[static_cast<std::size_t>(i)];
    return d;
  }

  bool is_one() const {
    for (auto v : e)
      if (v) return false;
    return true;
  }

  void bump(int i, int by = 1) {
    int v = e[static_cast<std::size_t>(i)] + by;
    if (v < 0 || v > 255) throw std::overflow_error("monomial exponent out of range");
    e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
  }

  static Monomial var(int i, int power = 1) {
    Monomial m;
    m.bump(i, power);
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < a.e.size(); ++i) {
      unsigned s = unsigned(a.e[i]) + unsigned(b.e[i]);
      if (s > 255) throw std::overflow_error("monomial exponent out of range");
      m.e[i] = static_cast<std::uint8_t>(s);
    }
    return m;
  }

  // True when b divides a.
  friend bool divides(const Monomial& b, const Monomial& a) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
      if (b.e[i] > a.e[i]) return false;
    return true;
  }

  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < a.e.size(); ++i) m.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
    return m;
  }

  auto operator<=>(const Monomial&) const = default;
};

}  // namespace lieweyl

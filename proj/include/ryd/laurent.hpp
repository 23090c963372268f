#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ryd/rational.hpp"

namespace ryd {

/// Laurent polynomial in one variable v with half-integer exponents.
/// Keys count halves: key e stands for v^{e/2}, so v^{1/2} is exact.
/// No stored coefficient is zero; the zero polynomial has an empty map.
class LaurentHalf {
 public:
  LaurentHalf() = default;

  static LaurentHalf constant(Rational c) {
    LaurentHalf p;
    if (!c.is_zero()) p.terms_.emplace(0, std::move(c));
    return p;
  }

  /// c * v^{half_exp/2}
  static LaurentHalf monomial(Rational c, int half_exp) {
    LaurentHalf p;
    if (!c.is_zero()) p.terms_.emplace(half_exp, std::move(c));
    return p;
  }

  const std::map<int, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
  }

  /// If the polynomial is a single term c*v^{e/2} with c != 0, returns (c, e).
  std::optional<std::pair<Rational, int>> as_monomial() const {
    if (terms_.size() != 1) return std::nullopt;
    return std::make_pair(terms_.begin()->second, terms_.begin()->first);
  }

  LaurentHalf operator-() const {
    LaurentHalf r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend LaurentHalf operator+(const LaurentHalf& a, const LaurentHalf& b) {
    LaurentHalf r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend LaurentHalf operator-(const LaurentHalf& a, const LaurentHalf& b) {
    LaurentHalf r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }
  friend LaurentHalf operator*(const LaurentHalf& a, const LaurentHalf& b) {
    LaurentHalf r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  /// Exact inverse of a unit monomial c*v^{e/2}; throws otherwise.
  LaurentHalf unit_inverse() const {
    auto m = as_monomial();
    if (!m) throw Error("laurent value is not a unit monomial");
    return monomial(m->first.inverse(), -m->second);
  }

  /// v -> v^{-1}
  LaurentHalf mirror() const {
    LaurentHalf r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }

  friend bool operator==(const LaurentHalf& a, const LaurentHalf& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentHalf& a, const LaurentHalf& b) { return !(a == b); }

  /// Canonical printing: ascending exponent, "1*" suppressed,
  /// e.g. "-v^-4 + v^-3 + v^-1".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rational mag = c.abs();
      if (first) {
        if (c.is_negative()) out += "-";
        first = false;
      } else {
        out += c.is_negative() ? " - " : " + ";
      }
      if (e == 0) {
        out += mag.str();
        continue;
      }
      if (!mag.is_one()) out += mag.str() + "*";
      out += "v";
      if (e != 2) out += "^" + half_exp_str(e);
    }
    return out;
  }

  static std::string half_exp_str(int e) {
    if (e % 2 == 0) return std::to_string(e / 2);
    return std::to_string(e) + "/2";
  }

 private:
  void add_term(int e, const Rational& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(e, c);
      return;
    }
    Rational s = it->second + c;
    if (s.is_zero())
      terms_.erase(it);
    else
      it->second = std::move(s);
  }

  std::map<int, Rational> terms_;
};

}  // namespace ryd

#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

namespace kc {

using Rational = mpq_class;

// Exact linear combination over an ordered basis family. Zero coefficients
// are never stored, so two sums are equal iff their maps are equal.
template <class Key>
class FormalSum {
 public:
  using Map = std::map<Key, Rational>;

  FormalSum() = default;
  FormalSum(const Key& key, Rational coef) { add(key, std::move(coef)); }

  void add(const Key& key, const Rational& coef) {
    if (coef == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const FormalSum& other, const Rational& scale = 1) {
    if (scale == 0) return;
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  FormalSum& operator+=(const FormalSum& other) {
    add(other);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& other) {
    add(other, Rational(-1));
    return *this;
  }
  FormalSum& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator*(FormalSum a, const Rational& s) { return a *= s; }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // Orthonormal scalar product with respect to the basis family.
  Rational dot(const FormalSum& other) const {
    const FormalSum& small = size() <= other.size() ? *this : other;
    const FormalSum& big = size() <= other.size() ? other : *this;
    Rational r = 0;
    for (const auto& [k, c] : small.terms_) {
      auto it = big.terms_.find(k);
      if (it != big.terms_.end()) r += c * it->second;
    }
    return r;
  }

  // Sum of all coefficients, counting multiplicities.
  Rational total() const {
    Rational r = 0;
    for (const auto& [k, c] : terms_) r += c;
    return r;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  bool operator==(const FormalSum& o) const { return terms_ == o.terms_; }
  // Lexicographic on terms; lets sums serve as set keys.
  bool operator<(const FormalSum& o) const { return terms_ < o.terms_; }

 private:
  Map terms_;
};

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace kc

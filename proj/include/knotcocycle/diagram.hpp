#pragma once

// Based arrow diagrams and Gauss diagrams of long knots.
//
// A diagram is stored as its endpoint word read from the point at infinity.
// Arrow ids inside a word are arbitrary non-negative integers; the canonical
// form relabels them 0..n-1 in order of first occurrence, which realizes the
// identification of diagrams up to positive homeomorphisms of the line.
// Arrows point from the overpassing to the underpassing branch and the sign
// of an arrow is the writhe of its crossing.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "knotcocycle/formal_sum.hpp"

namespace kc {

enum class EndKind : std::uint8_t { Tail = 0, Head = 1 };

struct End {
  int arrow = 0;
  EndKind kind = EndKind::Tail;
  auto operator<=>(const End&) const = default;
};

class ArrowDiagram {
 public:
  ArrowDiagram() = default;
  // Throws std::invalid_argument unless every id occurs once as Tail and
  // once as Head.
  explicit ArrowDiagram(std::vector<End> word);

  // Parses "T1 H2 ..." (1-based ids). The result is not canonicalized.
  static ArrowDiagram parse(std::string_view tokens);

  int degree() const { return static_cast<int>(word_.size() / 2); }
  const std::vector<End>& word() const { return word_; }
  std::vector<int> arrow_ids() const;
  int max_id() const;

  int position(int arrow, EndKind kind) const;
  int tail_pos(int arrow) const { return position(arrow, EndKind::Tail); }
  int head_pos(int arrow) const { return position(arrow, EndKind::Head); }
  bool interleaved(int a, int b) const;
  // Both ends of the arrow are consecutive in the word.
  bool isolated(int arrow) const;
  // Tails consecutive and heads consecutive (a pair in R2 position).
  bool r2_pair(int a, int b) const;

  ArrowDiagram canonical() const;
  bool is_canonical() const;
  ArrowDiagram without(const std::vector<int>& ids) const;
  ArrowDiagram reversed() const;  // every arrow reversed
  // Exchanges the word entries at positions pos and pos + 1.
  ArrowDiagram switched(int pos) const;

  std::string to_string() const;

  auto operator<=>(const ArrowDiagram&) const = default;
  bool operator==(const ArrowDiagram&) const = default;

 private:
  std::vector<End> word_;
};

class GaussDiagram {
 public:
  GaussDiagram() = default;
  // signs is indexed by arrow id; entries for ids present in the word must
  // be +1 or -1.
  GaussDiagram(ArrowDiagram arrows, std::vector<int> signs);
  GaussDiagram(std::vector<End> word, std::vector<int> signs)
      : GaussDiagram(ArrowDiagram(std::move(word)), std::move(signs)) {}

  // Parses "<n>; <tokens>; <sign string>", e.g. "3; T1 H2 T3 H1 T2 H3; +++".
  static GaussDiagram parse(std::string_view text);

  int degree() const { return arrows_.degree(); }
  const ArrowDiagram& arrows() const { return arrows_; }
  const std::vector<End>& word() const { return arrows_.word(); }
  int sign(int arrow) const { return signs_.at(static_cast<std::size_t>(arrow)); }
  const std::vector<int>& signs() const { return signs_; }
  int sign_product() const;

  GaussDiagram canonical() const;
  bool is_canonical() const;
  GaussDiagram without(const std::vector<int>& ids) const;
  GaussDiagram with_sign(int arrow, int sign) const;

  std::string to_string() const;

  auto operator<=>(const GaussDiagram&) const = default;
  bool operator==(const GaussDiagram&) const = default;

 private:
  ArrowDiagram arrows_;
  std::vector<int> signs_;
};

// Relabeling map old id -> canonical id (by first occurrence).
std::vector<int> canonical_labels(const std::vector<End>& word);

FormalSum<GaussDiagram> subdiagrams(const GaussDiagram& g);
FormalSum<GaussDiagram> completions(const ArrowDiagram& a);
FormalSum<ArrowDiagram> forget_signs(const GaussDiagram& g);
FormalSum<ArrowDiagram> forget_signs(const FormalSum<GaussDiagram>& sum);

// Polyak-Viro pairing by direct enumeration of order- and direction-
// preserving embeddings of A into G, weighted by sign products.
Rational pair(const ArrowDiagram& a, const GaussDiagram& g);
// The same pairing through <completions(A), subdiagrams(G)>.
Rational pair_via_sums(const ArrowDiagram& a, const GaussDiagram& g);

Rational pair(const FormalSum<ArrowDiagram>& a, const GaussDiagram& g);
Rational pair(const FormalSum<ArrowDiagram>& a, const FormalSum<GaussDiagram>& g);

// Calls f(subset) for every k-subset of ids, subset given in increasing order.
template <class F>
void for_each_subset(const std::vector<int>& ids, std::size_t k, F&& f) {
  const std::size_t n = ids.size();
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<int> chosen(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = ids[idx[i]];
    f(chosen);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace kc

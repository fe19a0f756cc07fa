#include "knotcocycle/diagram.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kc {

namespace {

void validate_word(const std::vector<End>& word) {
  if (word.size() % 2 != 0) throw std::invalid_argument("diagram word has odd length");
  int max_id = -1;
  for (const auto& e : word) {
    if (e.arrow < 0) throw std::invalid_argument("negative arrow id");
    max_id = std::max(max_id, e.arrow);
  }
  std::vector<int> tails(static_cast<std::size_t>(max_id + 1), 0);
  std::vector<int> heads(static_cast<std::size_t>(max_id + 1), 0);
  for (const auto& e : word) {
    auto& slot = e.kind == EndKind::Tail ? tails : heads;
    ++slot[static_cast<std::size_t>(e.arrow)];
  }
  for (std::size_t i = 0; i < tails.size(); ++i) {
    if (tails[i] != heads[i] || tails[i] > 1) {
      throw std::invalid_argument("arrow " + std::to_string(i + 1) +
                                  " must occur exactly once as tail and once as head");
    }
  }
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\n') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

}  // namespace

ArrowDiagram::ArrowDiagram(std::vector<End> word) : word_(std::move(word)) { validate_word(word_); }

ArrowDiagram ArrowDiagram::parse(std::string_view tokens) {
  std::vector<End> word;
  for (auto tok : split_ws(tokens)) {
    if (tok.size() < 2 || (tok[0] != 'T' && tok[0] != 'H')) {
      throw std::invalid_argument("bad endpoint token '" + std::string(tok) + "'");
    }
    int id = 0;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      if (tok[i] < '0' || tok[i] > '9') throw std::invalid_argument("bad endpoint token '" + std::string(tok) + "'");
      id = id * 10 + (tok[i] - '0');
    }
    if (id < 1) throw std::invalid_argument("arrow ids are 1-based");
    word.push_back({id - 1, tok[0] == 'T' ? EndKind::Tail : EndKind::Head});
  }
  return ArrowDiagram(std::move(word));
}

std::vector<int> ArrowDiagram::arrow_ids() const {
  std::vector<int> ids;
  ids.reserve(word_.size() / 2);
  for (const auto& e : word_)
    if (e.kind == EndKind::Tail) ids.push_back(e.arrow);
  std::sort(ids.begin(), ids.end());
  return ids;
}

int ArrowDiagram::max_id() const {
  int m = -1;
  for (const auto& e : word_) m = std::max(m, e.arrow);
  return m;
}

int ArrowDiagram::position(int arrow, EndKind kind) const {
  for (std::size_t i = 0; i < word_.size(); ++i)
    if (word_[i].arrow == arrow && word_[i].kind == kind) return static_cast<int>(i);
  throw std::out_of_range("arrow " + std::to_string(arrow) + " not in diagram");
}

bool ArrowDiagram::interleaved(int a, int b) const {
  int a0 = tail_pos(a), a1 = head_pos(a), b0 = tail_pos(b), b1 = head_pos(b);
  if (a0 > a1) std::swap(a0, a1);
  if (b0 > b1) std::swap(b0, b1);
  return (a0 < b0 && b0 < a1 && a1 < b1) || (b0 < a0 && a0 < b1 && b1 < a1);
}

bool ArrowDiagram::isolated(int arrow) const {
  return std::abs(tail_pos(arrow) - head_pos(arrow)) == 1;
}

bool ArrowDiagram::r2_pair(int a, int b) const {
  return a != b && std::abs(tail_pos(a) - tail_pos(b)) == 1 && std::abs(head_pos(a) - head_pos(b)) == 1;
}

std::vector<int> canonical_labels(const std::vector<End>& word) {
  int max_id = -1;
  for (const auto& e : word) max_id = std::max(max_id, e.arrow);
  std::vector<int> label(static_cast<std::size_t>(max_id + 1), -1);
  int next = 0;
  for (const auto& e : word) {
    auto& l = label[static_cast<std::size_t>(e.arrow)];
    if (l < 0) l = next++;
  }
  return label;
}

ArrowDiagram ArrowDiagram::canonical() const {
  auto label = canonical_labels(word_);
  ArrowDiagram out;
  out.word_.reserve(word_.size());
  for (const auto& e : word_) out.word_.push_back({label[static_cast<std::size_t>(e.arrow)], e.kind});
  return out;
}

bool ArrowDiagram::is_canonical() const {
  int next = 0;
  for (const auto& e : word_) {
    if (e.arrow == next) {
      ++next;
    } else if (e.arrow > next) {
      return false;
    }
  }
  return true;
}

ArrowDiagram ArrowDiagram::without(const std::vector<int>& ids) const {
  ArrowDiagram out;
  out.word_.reserve(word_.size());
  for (const auto& e : word_)
    if (std::find(ids.begin(), ids.end(), e.arrow) == ids.end()) out.word_.push_back(e);
  return out;
}

ArrowDiagram ArrowDiagram::reversed() const {
  ArrowDiagram out = *this;
  for (auto& e : out.word_) e.kind = e.kind == EndKind::Tail ? EndKind::Head : EndKind::Tail;
  return out;
}

ArrowDiagram ArrowDiagram::switched(int pos) const {
  ArrowDiagram out = *this;
  std::swap(out.word_.at(static_cast<std::size_t>(pos)), out.word_.at(static_cast<std::size_t>(pos + 1)));
  return out;
}

std::string ArrowDiagram::to_string() const {
  std::string s;
  for (const auto& e : word_) {
    if (!s.empty()) s += ' ';
    s += e.kind == EndKind::Tail ? 'T' : 'H';
    s += std::to_string(e.arrow + 1);
  }
  return s;
}

GaussDiagram::GaussDiagram(ArrowDiagram arrows, std::vector<int> signs)
    : arrows_(std::move(arrows)), signs_(std::move(signs)) {
  for (int id : arrows_.arrow_ids()) {
    if (static_cast<std::size_t>(id) >= signs_.size() || (signs_[static_cast<std::size_t>(id)] != 1 && signs_[static_cast<std::size_t>(id)] != -1)) {
      throw std::invalid_argument("arrow " + std::to_string(id + 1) + " has no sign");
    }
  }
}

GaussDiagram GaussDiagram::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ';') {
      parts.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (parts.size() != 3) throw std::invalid_argument("expected '<n>; <word>; <signs>'");
  int n = 0;
  try {
    n = std::stoi(std::string(parts[0]));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad degree field");
  }
  ArrowDiagram a = ArrowDiagram::parse(parts[1]);
  if (a.degree() != n) throw std::invalid_argument("degree field does not match word");
  if (static_cast<int>(parts[2].size()) != n) throw std::invalid_argument("sign string length must equal degree");
  std::vector<int> signs(static_cast<std::size_t>(std::max(n, a.max_id() + 1)), 0);
  for (int i = 0; i < n; ++i) {
    char c = parts[2][static_cast<std::size_t>(i)];
    if (c != '+' && c != '-') throw std::invalid_argument("signs must be '+' or '-'");
    signs[static_cast<std::size_t>(i)] = c == '+' ? 1 : -1;
  }
  return GaussDiagram(std::move(a), std::move(signs));
}

int GaussDiagram::sign_product() const {
  int p = 1;
  for (int id : arrows_.arrow_ids()) p *= sign(id);
  return p;
}

GaussDiagram GaussDiagram::canonical() const {
  auto label = canonical_labels(word());
  std::vector<End> w;
  w.reserve(word().size());
  std::vector<int> s(static_cast<std::size_t>(degree()), 0);
  for (const auto& e : word()) {
    int l = label[static_cast<std::size_t>(e.arrow)];
    w.push_back({l, e.kind});
    s[static_cast<std::size_t>(l)] = sign(e.arrow);
  }
  GaussDiagram out;
  out.arrows_ = ArrowDiagram(std::move(w));
  out.signs_ = std::move(s);
  return out;
}

bool GaussDiagram::is_canonical() const {
  return arrows_.is_canonical() && signs_.size() == static_cast<std::size_t>(degree());
}

GaussDiagram GaussDiagram::without(const std::vector<int>& ids) const {
  GaussDiagram out;
  out.arrows_ = arrows_.without(ids);
  out.signs_ = signs_;
  for (int id : ids)
    if (static_cast<std::size_t>(id) < out.signs_.size()) out.signs_[static_cast<std::size_t>(id)] = 0;
  return out;
}

GaussDiagram GaussDiagram::with_sign(int arrow, int sign) const {
  GaussDiagram out = *this;
  out.signs_.at(static_cast<std::size_t>(arrow)) = sign;
  return out;
}

std::string GaussDiagram::to_string() const {
  GaussDiagram c = canonical();
  std::string s = std::to_string(c.degree()) + "; " + c.arrows_.to_string() + "; ";
  for (int x : c.signs_) s += x > 0 ? '+' : '-';
  return s;
}

FormalSum<GaussDiagram> subdiagrams(const GaussDiagram& g) {
  FormalSum<GaussDiagram> out;
  auto ids = g.arrows().arrow_ids();
  const std::size_t n = ids.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> removed;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) removed.push_back(ids[i]);
    out.add(g.without(removed).canonical(), 1);
  }
  return out;
}

FormalSum<GaussDiagram> completions(const ArrowDiagram& a) {
  FormalSum<GaussDiagram> out;
  ArrowDiagram c = a.canonical();
  const auto n = static_cast<std::size_t>(c.degree());
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> s(n);
    int prod = 1;
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = (mask >> i & 1) ? -1 : 1;
      prod *= s[i];
    }
    out.add(GaussDiagram(c, std::move(s)), prod);
  }
  return out;
}

FormalSum<ArrowDiagram> forget_signs(const GaussDiagram& g) {
  return FormalSum<ArrowDiagram>(g.arrows().canonical(), g.sign_product());
}

FormalSum<ArrowDiagram> forget_signs(const FormalSum<GaussDiagram>& sum) {
  FormalSum<ArrowDiagram> out;
  for (const auto& [g, c] : sum) out.add(forget_signs(g), c);
  return out;
}

Rational pair(const ArrowDiagram& a, const GaussDiagram& g) {
  const ArrowDiagram target = a.canonical();
  const auto k = static_cast<std::size_t>(target.degree());
  long total = 0;
  const auto& word = g.word();
  std::vector<End> sub;
  for_each_subset(g.arrows().arrow_ids(), k, [&](const std::vector<int>& chosen) {
    sub.clear();
    // Relabel on the fly; the subset is canonical iff it matches target.
    std::vector<int> label(static_cast<std::size_t>(g.arrows().max_id() + 1), -1);
    int next = 0;
    for (const auto& e : word) {
      if (!std::binary_search(chosen.begin(), chosen.end(), e.arrow)) continue;
      auto& l = label[static_cast<std::size_t>(e.arrow)];
      if (l < 0) l = next++;
      sub.push_back({l, e.kind});
    }
    if (sub == target.word()) {
      int w = 1;
      for (int id : chosen) w *= g.sign(id);
      total += w;
    }
  });
  return Rational(total);
}

Rational pair_via_sums(const ArrowDiagram& a, const GaussDiagram& g) {
  return completions(a).dot(subdiagrams(g));
}

Rational pair(const FormalSum<ArrowDiagram>& a, const GaussDiagram& g) {
  Rational r = 0;
  for (const auto& [d, c] : a) r += c * pair(d, g);
  return r;
}

Rational pair(const FormalSum<ArrowDiagram>& a, const FormalSum<GaussDiagram>& g) {
  Rational r = 0;
  for (const auto& [d, c] : g) r += c * pair(a, d);
  return r;
}

}  // namespace kc

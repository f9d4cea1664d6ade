#ifndef GSC_WORD_HPP
#define GSC_WORD_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gsc/error.hpp"

namespace gsc {

inline constexpr std::string_view kInverseSuffix = "^-1";

// A letter of S ⊔ S⁻¹, packed as 2 * generator + inverted.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(std::uint32_t generator, bool inverted)
      : code_(2 * generator + (inverted ? 1 : 0)) {}
  static constexpr Letter from_code(std::uint32_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr std::uint32_t generator() const noexcept { return code_ >> 1; }
  constexpr bool inverted() const noexcept { return code_ & 1U; }
  constexpr std::uint32_t code() const noexcept { return code_; }
  constexpr Letter inverse() const noexcept { return from_code(code_ ^ 1U); }

  friend constexpr bool operator==(Letter, Letter) = default;
  // Code order; use Alphabet::less for the configured letter order.
  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::uint32_t code_ = 0;
};

using Word = std::vector<Letter>;

// Ordered generator set with a total order on all letters. The default order
// is a < a^-1 < b < b^-1 < ... in declaration order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> generators)
      : generators_(std::move(generators)) {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      const auto& g = generators_[i];
      if (g.empty()) fail(ErrorKind::parse, "empty generator name");
      if (g.find(kInverseSuffix) != std::string::npos || g.find(' ') != std::string::npos)
        fail(ErrorKind::parse, "generator name may not contain '^-1' or spaces: " + g);
      if (!index_.emplace(g, static_cast<std::uint32_t>(i)).second)
        fail(ErrorKind::parse, "duplicate generator name: " + g);
    }
    rank_.resize(2 * generators_.size());
    for (std::uint32_t c = 0; c < rank_.size(); ++c) rank_[c] = c;
    order_.resize(rank_.size());
    for (std::uint32_t c = 0; c < rank_.size(); ++c) order_[c] = Letter::from_code(c);
  }

  // Replace the letter order; `letters` must list every letter exactly once.
  void set_order(const std::vector<std::string>& letters) {
    if (letters.size() != letter_count())
      fail(ErrorKind::parse, "letter_order must list all " +
                                 std::to_string(letter_count()) + " letters");
    std::vector<int> seen(letter_count(), 0);
    std::vector<Letter> order;
    for (const auto& name : letters) {
      auto l = parse_letter(name);
      if (seen[l.code()]++) fail(ErrorKind::parse, "letter listed twice in letter_order: " + name);
      order.push_back(l);
    }
    order_ = order;
    for (std::uint32_t r = 0; r < order_.size(); ++r) rank_[order_[r].code()] = r;
  }

  std::size_t generator_count() const noexcept { return generators_.size(); }
  std::size_t letter_count() const noexcept { return 2 * generators_.size(); }
  const std::vector<std::string>& generators() const noexcept { return generators_; }
  // Letters listed from least to greatest.
  const std::vector<Letter>& ordered_letters() const noexcept { return order_; }
  std::uint32_t rank(Letter l) const { return rank_[l.code()]; }
  bool less(Letter a, Letter b) const { return rank_[a.code()] < rank_[b.code()]; }
  bool default_order() const {
    for (std::uint32_t c = 0; c < rank_.size(); ++c)
      if (rank_[c] != c) return false;
    return true;
  }

  Letter parse_letter(std::string_view text) const {
    bool inv = false;
    if (text.size() > kInverseSuffix.size() &&
        text.substr(text.size() - kInverseSuffix.size()) == kInverseSuffix) {
      inv = true;
      text.remove_suffix(kInverseSuffix.size());
    }
    auto it = index_.find(std::string(text));
    if (it == index_.end())
      fail(ErrorKind::unknown_letter, "unknown letter '" + std::string(text) +
                                          (inv ? std::string(kInverseSuffix) : "") + "'");
    return Letter(it->second, inv);
  }

  std::string name(Letter l) const {
    auto base = generators_.at(l.generator());
    return l.inverted() ? base + std::string(kInverseSuffix) : base;
  }

  // Whitespace-separated letters; "" and "1" denote the empty word.
  Word parse_word(std::string_view text) const {
    Word w;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
      if (tok == "1" && w.empty()) continue;
      w.push_back(parse_letter(tok));
    }
    return w;
  }

  std::string format(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += ' ';
      out += name(w[i]);
    }
    return out;
  }

  // Lexicographic comparison under the letter order (prefix is smaller).
  bool lex_less(const Word& u, const Word& v) const {
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end(),
                                        [this](Letter a, Letter b) { return less(a, b); });
  }
  bool shortlex_less(const Word& u, const Word& v) const {
    if (u.size() != v.size()) return u.size() < v.size();
    return lex_less(u, v);
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.generators_ == b.generators_ && a.rank_ == b.rank_;
  }

 private:
  std::vector<std::string> generators_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<std::uint32_t> rank_;
  std::vector<Letter> order_;
};

inline Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = l.inverse();
  return out;
}

inline bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i + 1] == w[i].inverse()) return false;
  return true;
}

inline Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto l : w) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

inline Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto l : w) {
      h ^= l.code() + 1;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

}  // namespace gsc

#endif  // GSC_WORD_HPP

#pragma once

// Letters eta_k / eps_k, words over them (elements of the free monoid),
// the text format, and the degree morphism.

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace admon {

enum class letter_kind : std::uint8_t { eta, eps };

/// One letter of the alphabet: eta_index or eps_index.
///
/// `Index` is any natural-number type; the default is 64-bit, and an
/// arbitrary-precision type (e.g. boost::multiprecision::cpp_int) removes
/// the width limit entirely.
template <class Index>
struct basic_generator {
  letter_kind kind = letter_kind::eta;
  Index index{};

  friend bool operator==(const basic_generator&, const basic_generator&) = default;

  // eta letters sort before eps letters; within a kind, by index.
  friend std::strong_ordering operator<=>(const basic_generator& a, const basic_generator& b) {
    if (a.kind != b.kind) return a.kind <=> b.kind;
    if (a.index < b.index) return std::strong_ordering::less;
    if (b.index < a.index) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  [[nodiscard]] bool is_eta() const noexcept { return kind == letter_kind::eta; }
  [[nodiscard]] bool is_eps() const noexcept { return kind == letter_kind::eps; }
};

template <class Index>
basic_generator<Index> make_eta(Index k) { return {letter_kind::eta, std::move(k)}; }
template <class Index>
basic_generator<Index> make_eps(Index k) { return {letter_kind::eps, std::move(k)}; }

namespace detail {

template <class Index>
Index successor(const Index& k) {
  if constexpr (std::numeric_limits<Index>::is_specialized && std::numeric_limits<Index>::is_bounded) {
    if (k == std::numeric_limits<Index>::max()) throw std::overflow_error("letter index overflow");
  }
  return k + 1;
}

template <class Index>
Index checked_add(const Index& a, const Index& b) {
  if constexpr (std::numeric_limits<Index>::is_specialized && std::numeric_limits<Index>::is_bounded) {
    if (a > std::numeric_limits<Index>::max() - b) throw std::overflow_error("degree overflow");
  }
  return a + b;
}

template <class Index>
std::string index_to_string(const Index& k) {
  if constexpr (std::integral<Index>) {
    return std::to_string(k);
  } else {
    std::ostringstream os;
    os << k;
    return os.str();
  }
}

inline void hash_combine(std::size_t& seed, std::size_t v) noexcept {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace detail

/// A finite sequence of letters; the empty word is the identity 1.
template <class Index>
class basic_word {
 public:
  using generator_type = basic_generator<Index>;
  using index_type = Index;
  using container = std::vector<generator_type>;
  using const_iterator = typename container::const_iterator;

  basic_word() = default;
  basic_word(std::initializer_list<generator_type> letters) : letters_(letters) {}
  explicit basic_word(container letters) : letters_(std::move(letters)) {}
  template <std::input_iterator It>
  basic_word(It first, It last) : letters_(first, last) {}

  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  const generator_type& operator[](std::size_t i) const { return letters_[i]; }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }
  [[nodiscard]] const container& letters() const noexcept { return letters_; }
  container& mutable_letters() noexcept { return letters_; }

  void push_back(generator_type g) { letters_.push_back(std::move(g)); }

  basic_word& operator*=(const basic_word& rhs) {
    letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return *this;
  }
  friend basic_word operator*(basic_word lhs, const basic_word& rhs) {
    lhs *= rhs;
    return lhs;
  }

  friend bool operator==(const basic_word&, const basic_word&) = default;
  friend std::strong_ordering operator<=>(const basic_word& a, const basic_word& b) {
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end());
  }

 private:
  container letters_;
};

using generator = basic_generator<std::uint64_t>;
using word = basic_word<std::uint64_t>;

inline generator eta(std::uint64_t k) { return make_eta<std::uint64_t>(k); }
inline generator eps(std::uint64_t k) { return make_eps<std::uint64_t>(k); }

template <class Index>
basic_word<Index> concat(const basic_word<Index>& u, const basic_word<Index>& v) {
  return u * v;
}

/// Sum over letters of (index + 1). A monoid morphism into the naturals.
template <class Index>
Index degree(const basic_word<Index>& w) {
  Index total{};
  for (const auto& g : w) total = detail::checked_add(total, detail::successor(g.index));
  return total;
}

/// Shortlex-by-degree key: degree first, then length, then letters.
template <class Index>
bool degree_less(const basic_word<Index>& a, const basic_word<Index>& b) {
  const Index da = degree(a), db = degree(b);
  if (da != db) return da < db;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

class parse_error : public std::invalid_argument {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses `h<k>` / `e<k>` tokens (or UTF-8 `η<k>` / `ε<k>`), whitespace optional;
/// a lone `1` is the empty word.
template <class Index = std::uint64_t>
basic_word<Index> parse(std::string_view text) {
  constexpr std::string_view utf8_eta = "\xCE\xB7";
  constexpr std::string_view utf8_eps = "\xCE\xB5";
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; };
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };

  basic_word<Index> out;
  std::size_t pos = 0;
  std::size_t tokens = 0;
  bool saw_one = false;
  std::size_t one_offset = 0;

  while (true) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos == text.size()) break;
    const std::size_t start = pos;
    ++tokens;

    if (text[pos] == '1' && (pos + 1 == text.size() || !is_digit(text[pos + 1]))) {
      if (saw_one || tokens > 1) throw parse_error("identity `1` cannot be combined with other tokens", start);
      saw_one = true;
      one_offset = start;
      ++pos;
      continue;
    }
    if (saw_one) throw parse_error("identity `1` cannot be combined with other tokens", one_offset);

    letter_kind kind;
    if (text[pos] == 'h') {
      kind = letter_kind::eta;
      pos += 1;
    } else if (text[pos] == 'e') {
      kind = letter_kind::eps;
      pos += 1;
    } else if (text.substr(pos).starts_with(utf8_eta)) {
      kind = letter_kind::eta;
      pos += utf8_eta.size();
    } else if (text.substr(pos).starts_with(utf8_eps)) {
      kind = letter_kind::eps;
      pos += utf8_eps.size();
    } else {
      throw parse_error("unexpected character", start);
    }

    if (pos == text.size() || !is_digit(text[pos])) {
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
        throw parse_error("letter index must be a natural number", start);
      throw parse_error("missing letter index", start);
    }
    Index k{};
    while (pos < text.size() && is_digit(text[pos])) {
      const auto d = static_cast<unsigned>(text[pos] - '0');
      if constexpr (std::numeric_limits<Index>::is_specialized && std::numeric_limits<Index>::is_bounded) {
        constexpr Index max = std::numeric_limits<Index>::max();
        if (k > (max - d) / 10) throw parse_error("letter index too large", start);
      }
      k = k * 10 + d;
      ++pos;
    }
    out.push_back({kind, std::move(k)});
  }

  if (tokens == 0) throw parse_error("empty input (write `1` for the identity)", 0);
  return out;
}

/// Space-separated ASCII tokens; the empty word prints as `1`.
template <class Index>
std::string print(const basic_word<Index>& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& g : w) {
    if (!out.empty()) out += ' ';
    out += g.is_eta() ? 'h' : 'e';
    out += detail::index_to_string(g.index);
  }
  return out;
}

template <class Index>
std::string print(const basic_generator<Index>& g) {
  return (g.is_eta() ? "h" : "e") + detail::index_to_string(g.index);
}

template <class Index>
std::ostream& operator<<(std::ostream& os, const basic_word<Index>& w) {
  return os << print(w);
}

/// The 2*(max_index+1) letters with index <= max_index, in letter order.
inline std::vector<generator> alphabet(std::uint64_t max_index) {
  std::vector<generator> out;
  for (std::uint64_t k = 0; k <= max_index; ++k) out.push_back(eta(k));
  for (std::uint64_t k = 0; k <= max_index; ++k) out.push_back(eps(k));
  return out;
}

/// Every word of length <= max_len with indices <= max_index, ordered by
/// (length, lexicographic).
inline std::vector<word> all_words(std::size_t max_len, std::uint64_t max_index) {
  const auto letters = alphabet(max_index);
  std::vector<word> out{word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t n = level_begin; n < level_end; ++n) {
      for (const auto& g : letters) {
        word w = out[n];
        w.push_back(g);
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace admon

template <class Index>
struct std::hash<admon::basic_generator<Index>> {
  std::size_t operator()(const admon::basic_generator<Index>& g) const noexcept {
    std::size_t seed = std::hash<Index>{}(g.index);
    admon::detail::hash_combine(seed, static_cast<std::size_t>(g.kind));
    return seed;
  }
};

template <class Index>
struct std::hash<admon::basic_word<Index>> {
  std::size_t operator()(const admon::basic_word<Index>& w) const noexcept {
    std::size_t seed = w.size();
    std::hash<admon::basic_generator<Index>> h;
    for (const auto& g : w) admon::detail::hash_combine(seed, h(g));
    return seed;
  }
};

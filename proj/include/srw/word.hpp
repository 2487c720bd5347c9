// Words over a finite alphabet, monoid elements with an adjoined zero, and the
// shortlex reduction order.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace srw {

  using Letter   = std::uint8_t;
  using Word     = std::vector<Letter>;
  using WordView = std::span<Letter const>;

  // Letters are single characters; '0', '1', '=', '#' and whitespace are
  // reserved by the presentation grammar.
  inline constexpr std::size_t kMaxAlphabetSize = 128;

  bool is_reserved_symbol(char c) noexcept;

  struct WordHash {
    std::size_t operator()(WordView w) const noexcept;
    std::size_t operator()(Word const& w) const noexcept {
      return (*this)(WordView(w));
    }
  };

  Word concat(WordView x, WordView y);
  Word concat(WordView x, WordView y, WordView z);
  bool contains_factor(WordView w, WordView factor);

  class Alphabet {
   public:
    // Precedence defaults to declaration order.
    explicit Alphabet(std::string_view letters);
    // `precedence` lists every letter once, lowest first.
    Alphabet(std::string_view letters, std::string_view precedence);

    std::size_t size() const noexcept {
      return letters_.size();
    }
    std::string const& letters() const noexcept {
      return letters_;
    }
    char letter(Letter index) const {
      return letters_.at(index);
    }
    std::optional<Letter> index_of(char c) const noexcept;

    // Letters from lowest to highest precedence.
    std::vector<Letter> const& precedence() const noexcept {
      return precedence_;
    }
    std::string precedence_string() const;
    std::size_t rank(Letter index) const {
      return rank_.at(index);
    }

    // "1" is the empty word. Throws std::invalid_argument on unknown letters.
    Word parse_word(std::string_view text) const;
    std::string format(WordView w) const;

    bool operator==(Alphabet const&) const = default;

   private:
    std::string              letters_;
    std::vector<Letter>      precedence_;
    std::vector<std::size_t> rank_;
  };

  // Either the adjoined absorbing zero or a word.
  class Element {
   public:
    Element() = default;
    explicit Element(Word w) : word_(std::move(w)) {}

    static Element zero() {
      Element e;
      e.zero_ = true;
      return e;
    }

    bool is_zero() const noexcept {
      return zero_;
    }
    bool is_identity() const noexcept {
      return !zero_ && word_.empty();
    }
    // Precondition: !is_zero().
    Word const& word() const;

    bool operator==(Element const&) const = default;

   private:
    bool zero_ = false;
    Word word_;
  };

  std::string format(Alphabet const& alphabet, Element const& e);
  // "0" parses to zero, anything else as a word.
  Element parse_element(Alphabet const& alphabet, std::string_view text);

  // Shorter words first, then letterwise by precedence. Zero lies below every
  // word.
  class ShortlexOrder {
   public:
    explicit ShortlexOrder(Alphabet const& alphabet);

    std::strong_ordering compare(WordView u, WordView v) const;
    std::strong_ordering compare(Element const& x, Element const& y) const;

    bool less(WordView u, WordView v) const {
      return compare(u, v) < 0;
    }
    bool less(Element const& x, Element const& y) const {
      return compare(x, y) < 0;
    }

    std::vector<std::size_t> const& ranks() const noexcept {
      return rank_;
    }

   private:
    std::vector<std::size_t> rank_;
  };

  // Same letters as `a`, with the precedence induced by `order`.
  Alphabet reordered(Alphabet const& a, ShortlexOrder const& order);

}  // namespace srw

template <>
struct std::hash<srw::Element> {
  std::size_t operator()(srw::Element const& e) const noexcept {
    return e.is_zero() ? 0x9e3779b97f4a7c15ULL : srw::WordHash{}(e.word());
  }
};

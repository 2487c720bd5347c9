#include "srw/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "srw/error.hpp"

namespace srw {

  bool is_reserved_symbol(char c) noexcept {
    return c == '0' || c == '1' || c == '=' || c == '#' || c == ':'
           || std::isspace(static_cast<unsigned char>(c)) || c < 0x21
           || c > 0x7e;
  }

  std::size_t WordHash::operator()(WordView w) const noexcept {
    // FNV-1a
    std::size_t h = 1469598103934665603ULL;
    for (Letter x : w) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h ^ (w.size() * 0x9e3779b97f4a7c15ULL);
  }

  Word concat(WordView x, WordView y) {
    Word out;
    out.reserve(x.size() + y.size());
    out.insert(out.end(), x.begin(), x.end());
    out.insert(out.end(), y.begin(), y.end());
    return out;
  }

  Word concat(WordView x, WordView y, WordView z) {
    Word out;
    out.reserve(x.size() + y.size() + z.size());
    out.insert(out.end(), x.begin(), x.end());
    out.insert(out.end(), y.begin(), y.end());
    out.insert(out.end(), z.begin(), z.end());
    return out;
  }

  bool contains_factor(WordView w, WordView factor) {
    if (factor.empty()) {
      return true;
    }
    return std::search(w.begin(), w.end(), factor.begin(), factor.end())
           != w.end();
  }

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  Alphabet::Alphabet(std::string_view letters) : Alphabet(letters, letters) {}

  Alphabet::Alphabet(std::string_view letters, std::string_view precedence)
      : letters_(letters) {
    if (letters_.empty()) {
      throw std::invalid_argument("alphabet must contain at least one letter");
    }
    if (letters_.size() > kMaxAlphabetSize) {
      throw std::invalid_argument("alphabet too large");
    }
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      char c = letters_[i];
      if (is_reserved_symbol(c)) {
        throw std::invalid_argument(std::string("reserved symbol '") + c
                                    + "' cannot be a generator");
      }
      if (letters_.find(c) != i) {
        throw std::invalid_argument(std::string("duplicate generator '") + c
                                    + "'");
      }
    }
    if (precedence.size() != letters_.size()) {
      throw std::invalid_argument("precedence must list every generator once");
    }
    rank_.assign(letters_.size(), letters_.size());
    for (std::size_t r = 0; r < precedence.size(); ++r) {
      auto i = index_of(precedence[r]);
      if (!i || rank_[*i] != letters_.size()) {
        throw std::invalid_argument("precedence must list every generator once");
      }
      rank_[*i] = r;
      precedence_.push_back(*i);
    }
  }

  std::optional<Letter> Alphabet::index_of(char c) const noexcept {
    auto pos = letters_.find(c);
    if (pos == std::string::npos) {
      return std::nullopt;
    }
    return static_cast<Letter>(pos);
  }

  std::string Alphabet::precedence_string() const {
    std::string out;
    for (Letter x : precedence_) {
      out += letters_[x];
    }
    return out;
  }

  Word Alphabet::parse_word(std::string_view text) const {
    if (text == "1") {
      return {};
    }
    Word w;
    w.reserve(text.size());
    for (char c : text) {
      auto i = index_of(c);
      if (!i) {
        throw std::invalid_argument(std::string("unknown generator '") + c
                                    + "'");
      }
      w.push_back(*i);
    }
    return w;
  }

  std::string Alphabet::format(WordView w) const {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    out.reserve(w.size());
    for (Letter x : w) {
      out += letters_.at(x);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Element
  ////////////////////////////////////////////////////////////////////////

  Word const& Element::word() const {
    if (zero_) {
      throw std::logic_error("the zero element has no word");
    }
    return word_;
  }

  std::string format(Alphabet const& alphabet, Element const& e) {
    return e.is_zero() ? std::string("0") : alphabet.format(e.word());
  }

  Element parse_element(Alphabet const& alphabet, std::string_view text) {
    if (text == "0") {
      return Element::zero();
    }
    return Element(alphabet.parse_word(text));
  }

  ////////////////////////////////////////////////////////////////////////
  // ShortlexOrder
  ////////////////////////////////////////////////////////////////////////

  ShortlexOrder::ShortlexOrder(Alphabet const& alphabet) {
    rank_.resize(alphabet.size());
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      rank_[i] = alphabet.rank(static_cast<Letter>(i));
    }
  }

  std::strong_ordering ShortlexOrder::compare(WordView u, WordView v) const {
    if (u.size() != v.size()) {
      return u.size() <=> v.size();
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] != v[i]) {
        return rank_.at(u[i]) <=> rank_.at(v[i]);
      }
    }
    return std::strong_ordering::equal;
  }

  std::strong_ordering ShortlexOrder::compare(Element const& x,
                                              Element const& y) const {
    if (x.is_zero() || y.is_zero()) {
      return y.is_zero() <=> x.is_zero();
    }
    return compare(x.word(), y.word());
  }

  Alphabet reordered(Alphabet const& a, ShortlexOrder const& order) {
    std::string precedence(a.size(), ' ');
    for (std::size_t i = 0; i < a.size(); ++i) {
      precedence.at(order.ranks().at(i)) = a.letter(static_cast<Letter>(i));
    }
    return Alphabet(a.letters(), precedence);
  }

  ////////////////////////////////////////////////////////////////////////
  // Errors
  ////////////////////////////////////////////////////////////////////////

  ParseError::ParseError(std::size_t line, std::size_t column,
                         std::string const& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column "
                           + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  StepBudgetExceeded::StepBudgetExceeded(std::size_t budget)
      : std::runtime_error("normalization exceeded step budget of "
                           + std::to_string(budget)) {}

}  // namespace srw

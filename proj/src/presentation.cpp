#include "srw/presentation.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "srw/error.hpp"

namespace srw {

  namespace {
    struct Token {
      std::string_view text;
      std::size_t      column;  // 1-based
    };

    std::vector<Token> split_ws(std::string_view line, std::size_t offset) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
        }
        if (i > start) {
          out.push_back({line.substr(start, i - start), offset + start + 1});
        }
      }
      return out;
    }

    Element parse_side(Alphabet const& alphabet, Token const& tok, std::size_t line) {
      if (tok.text == "0") {
        return Element::zero();
      }
      if (tok.text == "1") {
        return Element();
      }
      Word w;
      for (std::size_t i = 0; i < tok.text.size(); ++i) {
        auto x = alphabet.index_of(tok.text[i]);
        if (!x) {
          throw ParseError(line, tok.column + i,
                           std::string("unknown generator '") + tok.text[i] + "'");
        }
        w.push_back(*x);
      }
      return Element(std::move(w));
    }
  }  // namespace

  Presentation parse_presentation(std::string_view text) {
    enum class State { generators, relations_header, relations };
    State                 state = State::generators;
    std::string           letters;
    std::optional<Alphabet> alphabet;
    std::vector<Relation> relations;

    std::size_t line_no = 0;
    std::size_t pos     = 0;
    while (pos <= text.size()) {
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string_view::npos) {
        eol = text.size();
      }
      std::string_view line = text.substr(pos, eol - pos);
      pos                   = eol + 1;
      ++line_no;
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      auto tokens = split_ws(line, 0);
      if (tokens.empty()) {
        if (eol == text.size()) {
          break;
        }
        continue;
      }

      switch (state) {
        case State::generators: {
          std::string_view kw = "generators:";
          if (tokens[0].text.substr(0, kw.size()) != kw) {
            throw ParseError(line_no, tokens[0].column, "expected 'generators:'");
          }
          // Allow "generators:a b" as well as "generators: a b".
          std::vector<Token> gens;
          if (tokens[0].text.size() > kw.size()) {
            gens.push_back({tokens[0].text.substr(kw.size()),
                            tokens[0].column + kw.size()});
          }
          gens.insert(gens.end(), tokens.begin() + 1, tokens.end());
          if (gens.empty()) {
            throw ParseError(line_no, line.size() + 1, "empty generator list");
          }
          for (auto const& g : gens) {
            if (g.text.size() != 1) {
              throw ParseError(line_no, g.column,
                               "generators must be single characters");
            }
            char c = g.text[0];
            if (is_reserved_symbol(c)) {
              throw ParseError(line_no, g.column,
                               std::string("reserved symbol '") + c
                                   + "' cannot be a generator");
            }
            if (letters.find(c) != std::string::npos) {
              throw ParseError(line_no, g.column,
                               std::string("duplicate generator '") + c + "'");
            }
            letters += c;
          }
          if (letters.size() > kMaxAlphabetSize) {
            throw ParseError(line_no, 1, "too many generators");
          }
          alphabet.emplace(letters);
          state = State::relations_header;
          break;
        }
        case State::relations_header: {
          if (tokens.size() != 1 || tokens[0].text != "relations:") {
            throw ParseError(line_no, tokens[0].column, "expected 'relations:'");
          }
          state = State::relations;
          break;
        }
        case State::relations: {
          // Accept "u=v", "u = v", "u= v", ...
          auto eq = line.find('=');
          if (eq == std::string_view::npos) {
            throw ParseError(line_no, tokens[0].column, "expected '='");
          }
          auto left  = split_ws(line.substr(0, eq), 0);
          auto right = split_ws(line.substr(eq + 1), eq + 1);
          if (left.empty()) {
            throw ParseError(line_no, eq + 1, "missing left-hand side");
          }
          if (right.empty()) {
            throw ParseError(line_no, eq + 2, "missing right-hand side");
          }
          if (left.size() > 1) {
            throw ParseError(line_no, left[1].column, "unexpected token");
          }
          if (right.size() > 1) {
            throw ParseError(line_no, right[1].column,
                             right[1].text.find('=') != std::string_view::npos
                                 ? "more than one '='"
                                 : "unexpected token");
          }
          Element l = parse_side(*alphabet, left[0], line_no);
          Element r = parse_side(*alphabet, right[0], line_no);
          if (l.is_zero() && r.is_zero()) {
            throw ParseError(line_no, left[0].column,
                             "at most one side of a relation may be 0");
          }
          if (l.is_zero()) {
            std::swap(l, r);
          }
          relations.push_back({l.word(), std::move(r)});
          break;
        }
      }
      if (eol == text.size()) {
        break;
      }
    }
    if (state == State::generators) {
      throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'generators:' line");
    }
    if (state == State::relations_header) {
      throw ParseError(line_no, 1, "missing 'relations:' line");
    }
    return Presentation{*alphabet, std::move(relations)};
  }

  std::string format_presentation(Presentation const& p) {
    std::ostringstream out;
    out << "generators:";
    for (Letter x : p.alphabet.precedence()) {
      out << ' ' << p.alphabet.letter(x);
    }
    out << "\nrelations:\n";
    for (auto const& rel : p.relations) {
      out << p.alphabet.format(rel.lhs) << " = " << format(p.alphabet, rel.rhs)
          << '\n';
    }
    return out.str();
  }

}  // namespace srw

#include "cjkit/parser.hpp"

#include <cctype>
#include <vector>

#include "cjkit/errors.hpp"

namespace cjkit {

namespace {

enum class Tok {
  ident,      // also carries true/false/Oa/Oi/O/viol before classification
  lnot,       // ~
  amp,        // &
  bar,        // |
  arrow,      // ->
  darrow,     // <->
  box,        // []
  dia,        // <>
  boxa,       // [a]
  diaa,       // <a>
  lparen,
  rparen,
  end,
};

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view s) { return text.substr(i, s.size()) == s; };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '~') { out.push_back({Tok::lnot, text.substr(i, 1), i}); ++i; continue; }
    if (c == '&') { out.push_back({Tok::amp, text.substr(i, 1), i}); ++i; continue; }
    if (c == '|') { out.push_back({Tok::bar, text.substr(i, 1), i}); ++i; continue; }
    if (c == '(') { out.push_back({Tok::lparen, text.substr(i, 1), i}); ++i; continue; }
    if (c == ')') { out.push_back({Tok::rparen, text.substr(i, 1), i}); ++i; continue; }
    if (starts("->")) { out.push_back({Tok::arrow, text.substr(i, 2), i}); i += 2; continue; }
    if (starts("<->")) { out.push_back({Tok::darrow, text.substr(i, 3), i}); i += 3; continue; }
    if (starts("<a>")) { out.push_back({Tok::diaa, text.substr(i, 3), i}); i += 3; continue; }
    if (starts("<>")) { out.push_back({Tok::dia, text.substr(i, 2), i}); i += 2; continue; }
    if (starts("[a]")) { out.push_back({Tok::boxa, text.substr(i, 3), i}); i += 3; continue; }
    if (starts("[]")) { out.push_back({Tok::box, text.substr(i, 2), i}); i += 2; continue; }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i + 1;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      out.push_back({Tok::ident, text.substr(i, j - i), i});
      i = j;
      continue;
    }
    throw UnknownToken(i);
  }
  out.push_back({Tok::end, {}, text.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Formula parse_all() {
    Formula f = parse_iff(false);
    expect(Tok::end, "end of input");
    return f;
  }

  Formula parse_leading(std::size_t& consumed) {
    Formula f = parse_iff(false);
    consumed = peek().pos;
    return f;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  Token advance() { return tokens_[at_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++at_;
    return true;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) throw SyntaxError(peek().pos, what);
  }

  // no_bar: suppress | at this nesting depth (consequent of O(.|.)).
  Formula parse_iff(bool no_bar) {
    Formula f = parse_imp(no_bar);
    while (accept(Tok::darrow)) f = Formula::iff(f, parse_imp(no_bar));
    return f;
  }

  Formula parse_imp(bool no_bar) {
    Formula f = parse_or(no_bar);
    if (accept(Tok::arrow)) f = Formula::implies(f, parse_imp(no_bar));
    return f;
  }

  Formula parse_or(bool no_bar) {
    Formula f = parse_and();
    if (!no_bar)
      while (accept(Tok::bar)) f = Formula::disj(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept(Tok::amp)) f = Formula::conj(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::lnot: ++at_; return Formula::neg(parse_unary());
      case Tok::box: ++at_; return Formula::box_strong(parse_unary());
      case Tok::dia: ++at_; return Formula::dia_strong(parse_unary());
      case Tok::boxa: ++at_; return Formula::box_actual(parse_unary());
      case Tok::diaa: ++at_; return Formula::dia_actual(parse_unary());
      case Tok::lparen: {
        ++at_;
        Formula f = parse_iff(false);
        expect(Tok::rparen, ")");
        return f;
      }
      case Tok::ident: {
        if (t.text == "Oa") { ++at_; return Formula::obl_actual(parse_unary()); }
        if (t.text == "Oi") { ++at_; return Formula::obl_ideal(parse_unary()); }
        if (t.text == "true") { ++at_; return Formula::top(); }
        if (t.text == "false") { ++at_; return Formula::bottom(); }
        if (t.text == "O") {
          ++at_;
          expect(Tok::lparen, "( after O");
          Formula consequent = parse_iff(true);
          expect(Tok::bar, "| separating the two sides of O(...)");
          Formula antecedent = parse_iff(false);
          expect(Tok::rparen, ")");
          return Formula::obl_cond(consequent, antecedent);
        }
        if (t.text == "viol") {
          ++at_;
          expect(Tok::lparen, "( after viol");
          Formula f = parse_iff(false);
          expect(Tok::rparen, ")");
          return Formula::viol(f);
        }
        ++at_;
        return Formula::atom(std::string(t.text));
      }
      default:
        throw SyntaxError(t.pos, "a formula");
    }
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse_all(); }

Formula parse_formula_prefix(std::string_view text, std::size_t& consumed) {
  return Parser(text).parse_leading(consumed);
}

}  // namespace cjkit

#include "asimkit/parser.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "asimkit/error.hpp"

namespace asimkit {
namespace {

enum class Tok {
  End,
  False,
  Tilde,
  Amp,
  Bar,
  Arrow,
  Forall,
  Exists,
  Dot,
  LParen,
  RParen,
  Equals,
  Comma,
  RelR,
  Pred,  // P<digits>
  Prop,  // p<digits>
  Box,   // []
  Ident,
};

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
  int index = 0;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::End: return "end of input";
    case Tok::False: return "'false'";
    case Tok::Tilde: return "'~'";
    case Tok::Amp: return "'&'";
    case Tok::Bar: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::Forall: return "'forall'";
    case Tok::Exists: return "'exists'";
    case Tok::Dot: return "'.'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Equals: return "'='";
    case Tok::Comma: return "','";
    case Tok::RelR: return "'R'";
    case Tok::Pred: return "predicate letter";
    case Tok::Prop: return "proposition letter";
    case Tok::Box: return "'[]'";
    case Tok::Ident: return "variable";
  }
  return "token";
}

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

int letter_index(const std::string& word, std::size_t pos) {
  int value = 0;
  const char* first = word.data() + 1;
  const char* last = word.data() + word.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) throw ParseError(pos, "letter index out of range in '" + word + "'");
  if (value < 1) throw ParseError(pos, "letter indices start at 1, got '" + word + "'");
  return value;
}

bool digits_after_head(const std::string& word) {
  if (word.size() < 2) return false;
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(word[i])) == 0) return false;
  }
  return true;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    auto single = [&](Tok kind) {
      out.push_back({kind, start, std::string(1, c)});
      ++i;
    };
    switch (c) {
      case '~': single(Tok::Tilde); continue;
      case '&': single(Tok::Amp); continue;
      case '|': single(Tok::Bar); continue;
      case '.': single(Tok::Dot); continue;
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case '=': single(Tok::Equals); continue;
      case ',': single(Tok::Comma); continue;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          out.push_back({Tok::Arrow, start, "->"});
          i += 2;
          continue;
        }
        throw ParseError(start, "expected '->'");
      case '[':
        if (i + 1 < text.size() && text[i + 1] == ']') {
          out.push_back({Tok::Box, start, "[]"});
          i += 2;
          continue;
        }
        throw ParseError(start, "expected '[]'");
      default:
        break;
    }
    if (!word_char(c)) throw ParseError(start, std::string("unexpected character '") + c + "'");
    while (i < text.size() && word_char(text[i])) ++i;
    std::string word(text.substr(start, i - start));
    if (std::isdigit(static_cast<unsigned char>(word[0])) != 0) {
      throw ParseError(start, "unexpected number '" + word + "'");
    }
    Token tok{Tok::Ident, start, word};
    if (word == "false") {
      tok.kind = Tok::False;
    } else if (word == "forall") {
      tok.kind = Tok::Forall;
    } else if (word == "exists") {
      tok.kind = Tok::Exists;
    } else if (word == "R") {
      tok.kind = Tok::RelR;
    } else if ((word[0] == 'P' || word[0] == 'p') && digits_after_head(word)) {
      tok.kind = word[0] == 'P' ? Tok::Pred : Tok::Prop;
      tok.index = letter_index(word, start);
    }
    out.push_back(std::move(tok));
  }
  out.push_back({Tok::End, text.size(), ""});
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : tokens_(tokenize(text)) {}

  const Token& peek() const { return tokens_[pos_]; }
  bool at(Tok kind) const { return peek().kind == kind; }
  Token take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  bool accept(Tok kind) {
    if (!at(kind)) return false;
    take();
    return true;
  }

  Token expect(Tok kind) {
    if (!at(kind)) unexpected(std::string("expected ") + describe(kind));
    return take();
  }

  [[noreturn]] void unexpected(const std::string& what) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.pos, what + ", found " + found);
  }

  void finish() {
    if (!at(Tok::End)) unexpected("expected end of input");
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

class IntParser {
 public:
  IntParser(std::string_view text, IntParseOptions options) : in_(text), options_(options) {}

  IntFormula run() {
    IntFormula f = implication();
    in_.finish();
    return f;
  }

 private:
  IntFormula implication() {
    IntFormula lhs = disjunction();
    if (in_.accept(Tok::Arrow)) return IntFormula::imp(lhs, implication());
    return lhs;
  }

  IntFormula disjunction() {
    IntFormula lhs = conjunction();
    while (in_.accept(Tok::Bar)) lhs = IntFormula::disj(lhs, conjunction());
    return lhs;
  }

  IntFormula conjunction() {
    IntFormula lhs = unary();
    while (in_.accept(Tok::Amp)) lhs = IntFormula::conj(lhs, unary());
    return lhs;
  }

  IntFormula unary() {
    if (in_.at(Tok::Tilde)) {
      if (!options_.sugar) {
        throw ParseError(in_.peek().pos, "negation is not primitive; write 'i -> false' or enable sugar");
      }
      in_.take();
      return IntFormula::imp(unary(), IntFormula::bottom());
    }
    if (in_.accept(Tok::False)) return IntFormula::bottom();
    if (in_.at(Tok::Prop)) return IntFormula::prop(in_.take().index);
    if (in_.accept(Tok::LParen)) {
      IntFormula inner = implication();
      in_.expect(Tok::RParen);
      return inner;
    }
    in_.unexpected("expected an intuitionistic formula");
  }

  Cursor in_;
  IntParseOptions options_;
};

class ModalParser {
 public:
  explicit ModalParser(std::string_view text) : in_(text) {}

  ModalFormula run() {
    ModalFormula f = conjunction();
    in_.finish();
    return f;
  }

 private:
  ModalFormula conjunction() {
    ModalFormula lhs = unary();
    while (in_.accept(Tok::Amp)) lhs = ModalFormula::conj(lhs, unary());
    return lhs;
  }

  ModalFormula unary() {
    if (in_.accept(Tok::Tilde)) return ModalFormula::neg(unary());
    if (in_.accept(Tok::Box)) return ModalFormula::box(unary());
    if (in_.at(Tok::Prop)) return ModalFormula::prop(in_.take().index);
    if (in_.accept(Tok::LParen)) {
      ModalFormula inner = conjunction();
      in_.expect(Tok::RParen);
      return inner;
    }
    in_.unexpected("expected a modal formula");
  }

  Cursor in_;
};

class FOParser {
 public:
  explicit FOParser(std::string_view text) : in_(text) {}

  FOFormula run() {
    FOFormula f = implication();
    in_.finish();
    return f;
  }

 private:
  FOFormula implication() {
    FOFormula lhs = disjunction();
    if (in_.accept(Tok::Arrow)) return FOFormula::imp(lhs, implication());
    return lhs;
  }

  FOFormula disjunction() {
    FOFormula lhs = conjunction();
    while (in_.accept(Tok::Bar)) lhs = FOFormula::disj(lhs, conjunction());
    return lhs;
  }

  FOFormula conjunction() {
    FOFormula lhs = unary();
    while (in_.accept(Tok::Amp)) lhs = FOFormula::conj(lhs, unary());
    return lhs;
  }

  FOFormula unary() {
    if (in_.accept(Tok::Tilde)) return FOFormula::neg(unary());
    if (in_.at(Tok::Forall) || in_.at(Tok::Exists)) {
      const bool universal = in_.take().kind == Tok::Forall;
      std::string var = variable();
      in_.expect(Tok::Dot);
      FOFormula body = implication();
      return universal ? FOFormula::forall(std::move(var), body) : FOFormula::exists(std::move(var), body);
    }
    return atom();
  }

  FOFormula atom() {
    if (in_.at(Tok::Pred)) {
      const Token letter = in_.take();
      std::vector<std::string> args = arguments();
      if (args.size() != 1) {
        throw ParseError(letter.pos, letter.text + " is unary but was applied to " + std::to_string(args.size()) +
                                         " arguments");
      }
      return FOFormula::pred(letter.index, args[0]);
    }
    if (in_.at(Tok::RelR)) {
      const Token r = in_.take();
      std::vector<std::string> args = arguments();
      if (args.size() != 2) {
        throw ParseError(r.pos, "R is binary but was applied to " + std::to_string(args.size()) + " arguments");
      }
      return FOFormula::rel(args[0], args[1]);
    }
    if (in_.at(Tok::Ident)) {
      std::string lhs = in_.take().text;
      in_.expect(Tok::Equals);
      return FOFormula::eq(std::move(lhs), variable());
    }
    if (in_.accept(Tok::LParen)) {
      FOFormula inner = implication();
      in_.expect(Tok::RParen);
      return inner;
    }
    if (in_.at(Tok::False)) in_.unexpected("'false' is not a first-order formula; use ~(x = x)");
    in_.unexpected("expected a first-order formula");
  }

  std::vector<std::string> arguments() {
    std::vector<std::string> args;
    in_.expect(Tok::LParen);
    args.push_back(variable());
    while (in_.accept(Tok::Comma)) args.push_back(variable());
    in_.expect(Tok::RParen);
    return args;
  }

  std::string variable() { return in_.expect(Tok::Ident).text; }

  Cursor in_;
};

}  // namespace

IntFormula parse_int(std::string_view text, IntParseOptions options) { return IntParser(text, options).run(); }

ModalFormula parse_modal(std::string_view text) { return ModalParser(text).run(); }

FOFormula parse_fo(std::string_view text) { return FOParser(text).run(); }

}  // namespace asimkit

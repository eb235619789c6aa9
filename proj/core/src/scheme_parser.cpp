#include "onestep/scheme_parser.hpp"

#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace onestep {

namespace {

enum class TokKind { Ident, Integer, Number, Arrow, At, Tilde, Plus, Comma, Equals, End };

struct Token {
  TokKind kind;
  std::string text;
  std::size_t column;  // 1-based
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return c >= '0' && c <= '9'; }

std::vector<Token> lex_line(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t col = i + 1;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({TokKind::Ident, std::string(line.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (digit(c) || c == '.' || (c == '-' && i + 1 < line.size() &&
                                 (digit(line[i + 1]) || line[i + 1] == '.'))) {
      std::size_t j = i;
      if (line[j] == '-') ++j;
      bool integral = true;
      while (j < line.size() && digit(line[j])) ++j;
      if (j < line.size() && line[j] == '.') {
        integral = false;
        ++j;
        while (j < line.size() && digit(line[j])) ++j;
      }
      if (j < line.size() && (line[j] == 'e' || line[j] == 'E')) {
        integral = false;
        ++j;
        if (j < line.size() && (line[j] == '+' || line[j] == '-')) ++j;
        if (j >= line.size() || !digit(line[j])) {
          throw ParseError("malformed exponent", line_no, j + 1);
        }
        while (j < line.size() && digit(line[j])) ++j;
      }
      std::string text(line.substr(i, j - i));
      if (text == "." || text == "-") throw ParseError("malformed number", line_no, col);
      const bool plain = integral && text[0] != '-';
      out.push_back({plain ? TokKind::Integer : TokKind::Number, std::move(text), col});
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({TokKind::Arrow, "->", col});
      i += 2;
      continue;
    }
    switch (c) {
      case '@':
        out.push_back({TokKind::At, "@", col});
        break;
      case '~':
        out.push_back({TokKind::Tilde, "~", col});
        break;
      case '+':
        out.push_back({TokKind::Plus, "+", col});
        break;
      case ',':
        out.push_back({TokKind::Comma, ",", col});
        break;
      case '=':
        out.push_back({TokKind::Equals, "=", col});
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line_no, col);
    }
    ++i;
  }
  out.push_back({TokKind::End, "", line.size() + 1});
  return out;
}

// Stoichiometry accumulated per species index; the species table can still
// grow while later lines are parsed, so vectors are materialized at the end.
struct PendingInteraction {
  std::map<std::size_t, int> reactants;
  std::map<std::size_t, int> products;
  Rational rate_forward;
  Rational rate_backward;
  std::size_t line;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  InteractionScheme run() {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text_.size()) {
      std::size_t end = text_.find('\n', start);
      if (end == std::string_view::npos) {
        if (start == text_.size()) break;  // no trailing newline on last line
        end = text_.size();
      }
      ++line_no;
      parse_line(text_.substr(start, end - start), line_no);
      start = end + 1;
    }
    if (pending_.empty()) throw ParseError("no interactions", line_no + 1, 1);
    return materialize();
  }

 private:
  void parse_line(std::string_view line, std::size_t line_no) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return;       // blank
    if (line[first] == '#') return;                    // comment
    tokens_ = lex_line(line, line_no);
    pos_ = 0;
    line_no_ = line_no;
    if (peek().kind == TokKind::Ident && peek().text == "species") {
      parse_species_decl();
    } else if (peek().kind == TokKind::Ident && peek().text == "param") {
      parse_param_decl();
    } else {
      parse_reaction();
    }
    expect_end();
  }

  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    throw ParseError(message, line_no_, at.column);
  }

  Token expect(TokKind kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what, peek());
    return take();
  }

  void expect_end() {
    if (peek().kind != TokKind::End) fail("unexpected trailing input", peek());
  }

  void parse_species_decl() {
    take();  // "species"
    explicit_species_ = true;
    while (true) {
      const Token name = expect(TokKind::Ident, "species identifier");
      if (species_.index_of(name.text)) fail("duplicate species '" + name.text + "'", name);
      species_.add(name.text);
      if (peek().kind != TokKind::Comma) break;
      take();
    }
  }

  void parse_param_decl() {
    take();  // "param"
    const Token name = expect(TokKind::Ident, "parameter identifier");
    expect(TokKind::Equals, "'='");
    const Token value = peek();
    if (value.kind != TokKind::Number && value.kind != TokKind::Integer) {
      fail("expected numeric parameter value", value);
    }
    take();
    if (params_.count(name.text)) fail("duplicate parameter '" + name.text + "'", name);
    params_.emplace(name.text, rational_from_decimal(value.text));
  }

  std::size_t resolve_species(const Token& name) {
    if (auto idx = species_.index_of(name.text)) return *idx;
    if (explicit_species_) fail("unknown species '" + name.text + "'", name);
    return species_.add(name.text);
  }

  std::map<std::size_t, int> parse_side() {
    std::map<std::size_t, int> stoich;
    if (peek().kind == TokKind::Integer && peek().text == "0" &&
        tokens_[pos_ + 1].kind != TokKind::Ident) {
      take();
      return stoich;  // empty state
    }
    while (true) {
      int coeff = 1;
      if (peek().kind == TokKind::Integer) {
        const Token c = take();
        coeff = std::atoi(c.text.c_str());
        if (coeff < 1) fail("stoichiometric coefficient must be at least 1", c);
        if (coeff > kMaxStoichiometry) {
          fail("stoichiometric coefficient exceeds " + std::to_string(kMaxStoichiometry), c);
        }
      } else if (peek().kind == TokKind::Number) {
        fail("stoichiometric coefficient must be an integer", peek());
      }
      const Token name = expect(TokKind::Ident, "species identifier");
      const std::size_t idx = resolve_species(name);
      stoich[idx] += coeff;
      if (stoich[idx] > kMaxStoichiometry) {
        fail("total stoichiometry of '" + name.text + "' exceeds " +
                 std::to_string(kMaxStoichiometry),
             name);
      }
      if (peek().kind != TokKind::Plus) break;
      take();
    }
    return stoich;
  }

  Rational parse_rate() {
    const Token tok = peek();
    Rational value;
    if (tok.kind == TokKind::Number || tok.kind == TokKind::Integer) {
      take();
      value = rational_from_decimal(tok.text);
    } else if (tok.kind == TokKind::Ident) {
      take();
      auto it = params_.find(tok.text);
      if (it == params_.end()) fail("unknown parameter '" + tok.text + "'", tok);
      value = it->second;
    } else {
      fail("expected rate (number or parameter name)", tok);
    }
    if (value < 0) fail("negative rate", tok);
    return value;
  }

  void parse_reaction() {
    PendingInteraction inter;
    inter.line = line_no_;
    inter.reactants = parse_side();
    expect(TokKind::Arrow, "'->'");
    inter.products = parse_side();
    const Token at = peek();
    expect(TokKind::At, "'@'");
    inter.rate_forward = parse_rate();
    if (peek().kind == TokKind::Tilde) {
      take();
      inter.rate_backward = parse_rate();
    }
    if (inter.reactants == inter.products) {
      fail("no-op reaction (state change is zero)", at);
    }
    if (inter.rate_forward == 0 && inter.rate_backward == 0) {
      fail("reaction has zero rate in both directions", at);
    }
    pending_.push_back(std::move(inter));
  }

  InteractionScheme materialize() const {
    InteractionScheme scheme;
    scheme.species = species_;
    scheme.parameters = params_;
    const std::size_t n = species_.size();
    for (const auto& p : pending_) {
      Interaction inter;
      inter.reactants.assign(n, 0);
      inter.products.assign(n, 0);
      for (const auto& [idx, c] : p.reactants) inter.reactants[idx] = c;
      for (const auto& [idx, c] : p.products) inter.products[idx] = c;
      inter.rate_forward = p.rate_forward;
      inter.rate_backward = p.rate_backward;
      scheme.interactions.push_back(std::move(inter));
    }
    validate_scheme(scheme);
    return scheme;
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
  bool explicit_species_ = false;
  SpeciesTable species_;
  std::map<std::string, Rational> params_;
  std::vector<PendingInteraction> pending_;
};

}  // namespace

InteractionScheme parse_scheme(std::string_view text) { return Parser(text).run(); }

}  // namespace onestep

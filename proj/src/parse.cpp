#include "dgolod/parse.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "dgolod/error.hpp"

namespace dgolod {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class ExprParser {
 public:
  ExprParser(std::string_view text, const PolyRing& ring, std::size_t line, std::size_t offset)
      : s_(text), ring_(ring), line_(line), offset_(offset) {}

  Polynomial parse() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, offset_ + pos_ + 1); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, line_, offset_ + at + 1);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool neg = false;
    if (eat('-')) {
      neg = true;
    } else {
      eat('+');
    }
    Polynomial acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        skip();
        const std::size_t at = pos_;
        Polynomial d = factor();
        if (!d.is_constant() || d.is_zero()) fail_at("division only by a nonzero constant", at);
        acc = d.constant_term().inverse() * acc;
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (!eat('^')) return base;
    skip();
    const std::size_t at = pos_;
    const mpz_class e = integer();
    if (e > 1000) fail_at("exponent too large", at);
    Polynomial r = ring_.one();
    for (long k = 0; k < e.get_si(); ++k) r = r * base;
    return r;
  }

  mpz_class integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    skip();
    if (pos_ == s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      const mpz_class v = integer();
      try {
        return ring_.constant(ring_.field().from_integer(v));
      } catch (const Error& e) {
        fail_at(e.what(), at);
      }
    }
    if (ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      const auto idx = ring_.index_of(name);
      if (!idx) fail_at("unknown identifier '" + name + "'", start);
      return ring_.var(*idx);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  const PolyRing& ring_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Line {
  std::size_t number;
  std::size_t offset;  // column offset of the trimmed text
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const std::size_t nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view t = trim(raw);
    if (!t.empty()) out.push_back({number, static_cast<std::size_t>(t.data() - raw.data()), t});
    if (text.empty()) break;
  }
  return out;
}

PolyRing parse_ring_line(const Line& l, std::optional<Field> override_field) {
  std::string_view s = l.text;
  auto fail = [&](const std::string& msg, std::size_t at) -> void {
    throw ParseError(msg, l.number, l.offset + at + 1);
  };
  if (s.substr(0, 4) != "ring" || s.size() == 4 || !std::isspace(static_cast<unsigned char>(s[4]))) {
    fail("expected 'ring FIELD[vars]'", 0);
  }
  std::size_t p = 4;
  while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  const std::size_t fstart = p;
  while (p < s.size() && std::isalnum(static_cast<unsigned char>(s[p]))) ++p;
  const std::string fname(s.substr(fstart, p - fstart));
  Field field;
  try {
    field = Field::parse(fname);
  } catch (const Error& e) {
    fail(std::string("bad field: ") + e.what(), fstart);
  }
  while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  if (p >= s.size() || s[p] != '[') fail("expected '['", p);
  ++p;
  std::vector<std::string> names;
  for (;;) {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    const std::size_t start = p;
    if (p >= s.size() || !ident_start(s[p])) fail("expected a variable name", p);
    while (p < s.size() && ident_char(s[p])) ++p;
    names.emplace_back(s.substr(start, p - start));
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    if (p < s.size() && s[p] == ',') {
      ++p;
      continue;
    }
    if (p < s.size() && s[p] == ']') {
      ++p;
      break;
    }
    fail("expected ',' or ']'", p);
  }
  if (p != s.size()) fail("trailing text after ']'", p);
  try {
    return PolyRing(override_field.value_or(field), std::move(names));
  } catch (const Error& e) {
    fail(e.what(), 0);
  }
  throw ParseError("unreachable", l.number, 1);
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const PolyRing& ring, std::size_t line,
                            std::size_t column_offset) {
  return ExprParser(text, ring, line, column_offset).parse();
}

IdealFile parse_ideal_file(std::string_view text, std::optional<Field> field) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty input: expected a ring line", 1, 1);
  const PolyRing ring = parse_ring_line(lines[0], field);
  std::optional<TermOrder> order;
  std::optional<Permutation> perm;
  std::vector<Polynomial> gens;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    const auto keyword = [&](std::string_view kw) {
      return gens.empty() && l.text.substr(0, kw.size()) == kw && l.text.size() > kw.size() &&
             std::isspace(static_cast<unsigned char>(l.text[kw.size()]));
    };
    if (keyword("order")) {
      const std::string_view v = trim(l.text.substr(5));
      if (v == "lex") {
        order = TermOrder::Lex;
      } else if (v == "grevlex") {
        order = TermOrder::Grevlex;
      } else {
        throw ParseError("unknown term order '" + std::string(v) + "'", l.number, l.offset + 7);
      }
      continue;
    }
    if (keyword("perm")) {
      try {
        perm = Permutation::parse(std::string(trim(l.text.substr(4))), ring.nvars());
      } catch (const Error& e) {
        throw ParseError(e.what(), l.number, l.offset + 6);
      }
      continue;
    }
    Polynomial g = parse_polynomial(l.text, ring, l.number, l.offset);
    if (g.is_zero()) throw ParseError("generator is zero", l.number, l.offset + 1);
    if (!g.constant_term().is_zero()) {
      throw ParseError("generator " + ring.format(g) +
                           " has a nonzero constant term; generators must lie in (x_1..x_n)",
                       l.number, l.offset + 1);
    }
    gens.push_back(std::move(g));
  }
  if (gens.empty()) throw ParseError("no generators", lines.back().number, 1);
  return IdealFile{ring, IdealGens(ring, std::move(gens)), order, perm};
}

std::string format_ideal_file(const IdealFile& file) {
  std::ostringstream os;
  os << file.ring.header() << '\n';
  if (file.order) os << "order " << (*file.order == TermOrder::Lex ? "lex" : "grevlex") << '\n';
  if (file.perm) os << "perm " << file.perm->to_string() << '\n';
  for (const auto& g : file.ideal.gens()) os << file.ring.format(g) << '\n';
  return os.str();
}

}  // namespace dgolod

#include "toriparam/poly_text.hpp"

#include <cctype>
#include <sstream>

#include "toriparam/error.hpp"

namespace toriparam {

namespace {

class Parser {
 public:
  Parser(std::string_view text, VarKind kind) : s_(text), kind_(kind) {}

  // Terms keyed by exponent with trailing zeros dropped, so the variable
  // count can be fixed after parsing.
  using Terms = std::map<std::vector<unsigned long>, Rational>;

  Terms parse_all() {
    Terms t = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return t;
  }

  std::size_t max_index() const { return max_index_; }

 private:
  static void add(Terms& into, std::vector<unsigned long> e, const Rational& c) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    auto [it, ins] = into.try_emplace(e, c);
    if (!ins) {
      it->second += c;
      if (it->second == 0) into.erase(it);
    }
    if (ins && c == 0) into.erase(it);
  }

  static Terms mul(const Terms& a, const Terms& b) {
    Terms out;
    for (const auto& [ea, ca] : a)
      for (const auto& [eb, cb] : b) {
        std::vector<unsigned long> e(std::max(ea.size(), eb.size()), 0);
        for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
        for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
        add(out, std::move(e), ca * cb);
      }
    return out;
  }

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Terms expr() {
    Terms acc;
    bool first = true;
    while (true) {
      Rational sign = 1;
      skip();
      if (!first) {
        if (accept('+')) {
        } else if (accept('-')) {
          sign = -1;
        } else {
          break;
        }
      }
      first = false;
      Terms t = term();
      for (const auto& [e, c] : t) add(acc, e, sign * c);
    }
    return acc;
  }

  Terms term() {
    Terms t = unary();
    while (accept('*')) t = mul(t, unary());
    return t;
  }

  Terms unary() {
    if (accept('-')) {
      Terms t = unary();
      for (auto& [e, c] : t) c = -c;
      return t;
    }
    if (accept('+')) return unary();
    return power();
  }

  Terms power() {
    Terms base = atom();
    if (accept('^')) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '-') fail("negative exponents are not allowed");
      Integer k = number();
      if (!k.fits_ulong_p()) fail("exponent too large");
      Terms result;
      result[{}] = 1;
      for (unsigned long i = 0; i < k.get_ui(); ++i) result = mul(result, base);
      return result;
    }
    return base;
  }

  Terms variable(std::size_t index) {
    if (index == 0) fail("variable indices start at 1");
    max_index_ = std::max(max_index_, index);
    std::vector<unsigned long> e(index, 0);
    e[index - 1] = 1;
    Terms t;
    t[e] = 1;
    return t;
  }

  Terms atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Terms t = expr();
      if (!accept(')')) fail("expected ')'");
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = number();
      Integer den = 1;
      if (accept('/')) {
        den = number();
        if (den == 0) fail("zero denominator");
      }
      Rational r(num, den);
      r.canonicalize();
      Terms t;
      if (r != 0) t[{}] = r;
      return t;
    }
    std::size_t start = pos_;
    if (kind_ == VarKind::Facet && c == 'x') {
      ++pos_;
      return indexed(start);
    }
    if (kind_ == VarKind::Param && c == 'y') {
      ++pos_;
      return indexed(start);
    }
    if (kind_ == VarKind::Param && (c == 'u' || c == 'v')) {
      ++pos_;
      if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
        pos_ = start;
        fail("unknown identifier");
      }
      return variable(c == 'u' ? 1 : 2);
    }
    fail(kind_ == VarKind::Facet ? "expected a number, x-variable or '('"
                                 : "expected a number, parameter or '('");
  }

  Terms indexed(std::size_t start) {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      pos_ = start;
      fail("variable needs an index");
    }
    Integer idx = number();
    if (!idx.fits_ulong_p() || idx > 100000) {
      pos_ = start;
      fail("variable index too large");
    }
    return variable(idx.get_ui());
  }

  std::string_view s_;
  VarKind kind_;
  std::size_t pos_ = 0;
  std::size_t max_index_ = 0;
};

MultiPoly build(const Parser::Terms& terms, std::size_t nvars) {
  MultiPoly p(nvars);
  for (const auto& [e, c] : terms) {
    Exponent x(nvars, 0);
    for (std::size_t i = 0; i < e.size(); ++i) x[i] = e[i];
    p.add_term(x, c);
  }
  return p;
}

std::size_t checked_count(const Parser& parser, std::optional<std::size_t> nvars,
                          std::size_t text_len) {
  if (!nvars) return std::max<std::size_t>(parser.max_index(), 1);
  if (parser.max_index() > *nvars) {
    throw SyntaxError(text_len, "variable index exceeds " + std::to_string(*nvars));
  }
  return *nvars;
}

}  // namespace

MultiPoly parse_polynomial(std::string_view text, VarKind kind,
                           std::optional<std::size_t> nvars) {
  Parser parser(text, kind);
  auto terms = parser.parse_all();
  return build(terms, checked_count(parser, nvars, text.size()));
}

std::vector<MultiPoly> parse_tuple(std::string_view text, VarKind kind,
                                   std::optional<std::size_t> nvars) {
  std::size_t begin = 0, end = text.size();
  auto is_space = [&](std::size_t i) { return std::isspace(static_cast<unsigned char>(text[i])); };
  while (begin < end && is_space(begin)) ++begin;
  while (end > begin && is_space(end - 1)) --end;
  if (begin == end) throw SyntaxError(0, "empty tuple");
  // Strip one pair of outer parentheses if they enclose everything.
  if (text[begin] == '(' && text[end - 1] == ')') {
    int depth = 0;
    bool encloses = true;
    for (std::size_t i = begin; i < end; ++i) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      if (depth == 0 && i + 1 < end) {
        encloses = false;
        break;
      }
    }
    if (encloses) {
      ++begin;
      --end;
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  int depth = 0;
  std::size_t start = begin;
  for (std::size_t i = begin; i < end; ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (depth < 0) throw SyntaxError(i, "unbalanced ')'");
    if (text[i] == ',' && depth == 0) {
      spans.emplace_back(start, i);
      start = i + 1;
    }
  }
  spans.emplace_back(start, end);
  std::vector<Parser::Terms> parsed;
  std::size_t max_index = 0;
  for (auto [a, b] : spans) {
    Parser parser(text.substr(a, b - a), kind);
    try {
      parsed.push_back(parser.parse_all());
    } catch (const SyntaxError& e) {
      throw SyntaxError(a + e.position(), "malformed tuple entry");
    }
    max_index = std::max(max_index, parser.max_index());
  }
  std::size_t n = nvars ? *nvars : std::max<std::size_t>(max_index, 1);
  if (nvars && max_index > *nvars) {
    throw SyntaxError(0, "variable index exceeds " + std::to_string(*nvars));
  }
  std::vector<MultiPoly> out;
  for (const auto& t : parsed) out.push_back(build(t, n));
  return out;
}

std::vector<std::string> variable_names(VarKind kind, std::size_t nvars) {
  std::vector<std::string> names;
  if (kind == VarKind::Param && nvars <= 2) {
    const char* uv[] = {"u", "v"};
    for (std::size_t i = 0; i < nvars; ++i) names.emplace_back(uv[i]);
    return names;
  }
  const char* prefix = kind == VarKind::Facet ? "x" : "y";
  for (std::size_t i = 0; i < nvars; ++i) names.push_back(prefix + std::to_string(i + 1));
  return names;
}

std::string render_rational(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  std::size_t j = s.size();
  while (j > i && std::isspace(static_cast<unsigned char>(s[j - 1]))) --j;
  s = s.substr(i, j - i);
  bool ok = !s.empty();
  std::size_t slash = s.find('/');
  for (std::size_t k = 0; k < s.size() && ok; ++k) {
    char c = s[k];
    if (std::isdigit(static_cast<unsigned char>(c))) continue;
    if (c == '-' && (k == 0)) continue;
    if (c == '/' && k == slash && k > 0 && k + 1 < s.size()) continue;
    ok = false;
  }
  if (!ok || s == "-") throw SyntaxError(i, "malformed rational '" + std::string(text) + "'");
  Rational r;
  if (slash == std::string::npos) {
    r = Rational(Integer(s));
  } else {
    Integer den(s.substr(slash + 1));
    if (den == 0) throw SyntaxError(i + slash + 1, "zero denominator");
    r = Rational(Integer(s.substr(0, slash)), den);
    r.canonicalize();
  }
  return r;
}

std::string render(const MultiPoly& p, const std::vector<std::string>& names) {
  if (names.size() != p.nvars()) {
    throw Error(ErrorCode::VariableCountMismatch, "wrong number of variable names");
  }
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      factors.push_back(e[i] == 1 ? names[i] : names[i] + "^" + std::to_string(e[i]));
    }
    if (factors.empty() || mag != 1) factors.insert(factors.begin(), mag.get_str());
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

std::string render(const MultiPoly& p, VarKind kind) {
  return render(p, variable_names(kind, p.nvars()));
}

std::string render_tuple(const std::vector<MultiPoly>& ps, VarKind kind) {
  std::string out = "(";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ", ";
    out += render(ps[i], kind);
  }
  return out + ")";
}

}  // namespace toriparam

#include "gbbench/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#ifndef GBBENCH_DATA_DIR
#define GBBENCH_DATA_DIR "data"
#endif

namespace gbbench {

using boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// ExactPolynomial

ExactPolynomial::ExactPolynomial(std::size_t nvars, Rational constant) : nvars_(nvars) {
  add_term(ExponentVector(nvars, 0), constant);
}

ExactPolynomial ExactPolynomial::variable(std::size_t nvars, std::size_t index) {
  ExactPolynomial p;
  p.nvars_ = nvars;
  ExponentVector e(nvars, 0);
  e.at(index) = 1;
  p.add_term(e, Rational(1));
  return p;
}

bool ExactPolynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](Exponent x) { return x == 0; }));
}

bool ExactPolynomial::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return boost::multiprecision::denominator(t.second) == 1;
  });
}

std::int64_t ExactPolynomial::total_degree() const {
  std::int64_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, gbbench::total_degree(e));
  return d;
}

void ExactPolynomial::add_term(const ExponentVector& e, const Rational& c) {
  if (e.size() != nvars_) throw DomainError("term length does not match polynomial");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (a.nvars_ != b.nvars_) throw DomainError("polynomials have different variable counts");
  ExactPolynomial r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

ExactPolynomial ExactPolynomial::operator-() const { return scaled(Rational(-1)); }

ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b) { return a + (-b); }

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (a.nvars_ != b.nvars_) throw DomainError("polynomials have different variable counts");
  ExactPolynomial r;
  r.nvars_ = a.nvars_;
  ExponentVector e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  return r;
}

ExactPolynomial ExactPolynomial::scaled(const Rational& c) const {
  ExactPolynomial r;
  r.nvars_ = nvars_;
  if (c == 0) return r;
  for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
  return r;
}

ExactPolynomial ExactPolynomial::pow(unsigned k) const {
  ExactPolynomial r(nvars_, Rational(1));
  ExactPolynomial base = *this;
  while (k) {
    if (k & 1u) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Parsing

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : DomainError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                  msg),
      line_(line),
      column_(column) {}

namespace {

struct SourcePos {
  std::size_t line;
  std::size_t column;
};

// One logical statement, possibly spread over continuation lines.
struct Statement {
  std::string text;
  std::vector<SourcePos> pos;  // pos[i] locates text[i]; one extra entry for end
};

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, equals, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class ExprParser {
public:
  ExprParser(const Statement& st, std::size_t begin, const std::map<std::string, std::size_t>& vars,
             const std::map<std::string, ExactPolynomial>& defs)
      : st_(st), vars_(vars), defs_(defs) {
    tokenize(begin);
  }

  ExactPolynomial parse_all() {
    ExactPolynomial p = expr();
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'", peek());
    return p;
  }

  // For "def: NAME = expr".
  std::string definition_name() {
    Token t = next();
    if (t.kind != Tok::ident) fail("expected a name after 'def:'", t);
    if (next().kind != Tok::equals) fail("expected '=' after definition name", tokens_[pos_ - 1]);
    return t.text;
  }

  [[noreturn]] void fail(const std::string& msg, const Token& t) const {
    const SourcePos& p = st_.pos[std::min(t.offset, st_.pos.size() - 1)];
    throw ParseError(msg, p.line, p.column);
  }

private:
  void tokenize(std::size_t i) {
    const std::string& s = st_.text;
    while (i < s.size()) {
      char c = s[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        tokens_.push_back({Tok::number, s.substr(start, i - start), start});
      } else if (ident_start(c)) {
        while (i < s.size() && ident_char(s[i])) ++i;
        tokens_.push_back({Tok::ident, s.substr(start, i - start), start});
      } else {
        Tok k;
        switch (c) {
          case '+': k = Tok::plus; break;
          case '-': k = Tok::minus; break;
          case '*': k = Tok::star; break;
          case '/': k = Tok::slash; break;
          case '^': k = Tok::caret; break;
          case '(': k = Tok::lparen; break;
          case ')': k = Tok::rparen; break;
          case '=': k = Tok::equals; break;
          default: {
            const SourcePos& p = st_.pos[i];
            throw ParseError(std::string("unexpected character '") + c + "'", p.line, p.column);
          }
        }
        ++i;
        tokens_.push_back({k, std::string(1, c), start});
      }
    }
    tokens_.push_back({Tok::end, "end of line", s.size()});
  }

  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }

  std::size_t nvars() const { return vars_.size(); }

  ExactPolynomial expr() {
    ExactPolynomial acc(nvars(), Rational(0));
    bool negate = false;
    if (peek().kind == Tok::plus || peek().kind == Tok::minus) negate = next().kind == Tok::minus;
    ExactPolynomial t = term();
    acc = negate ? acc - t : acc + t;
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      bool minus = next().kind == Tok::minus;
      ExactPolynomial u = term();
      acc = minus ? acc - u : acc + u;
    }
    return acc;
  }

  bool starts_factor(Tok k) const {
    return k == Tok::number || k == Tok::ident || k == Tok::lparen;
  }

  ExactPolynomial term() {
    ExactPolynomial acc = factor();
    while (true) {
      Tok k = peek().kind;
      if (k == Tok::star) {
        next();
        acc = acc * factor();
      } else if (k == Tok::slash) {
        Token slash = next();
        ExactPolynomial d = factor();
        if (!d.is_constant() || d.is_zero()) fail("can only divide by a nonzero constant", slash);
        acc = acc.scaled(1 / d.terms().begin()->second);
      } else if (starts_factor(k)) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  ExactPolynomial factor() {
    if (peek().kind == Tok::minus) {
      next();
      return -factor();
    }
    ExactPolynomial base = primary();
    if (peek().kind == Tok::caret) {
      next();
      Token e = next();
      if (e.kind != Tok::number) fail("exponent must be a nonnegative integer", e);
      if (e.text.size() > 6) fail("exponent too large", e);
      return base.pow(static_cast<unsigned>(std::stoul(e.text)));
    }
    return base;
  }

  ExactPolynomial primary() {
    Token t = next();
    switch (t.kind) {
      case Tok::number: return ExactPolynomial(nvars(), Rational(cpp_int(t.text)));
      case Tok::ident: {
        if (auto v = vars_.find(t.text); v != vars_.end())
          return ExactPolynomial::variable(nvars(), v->second);
        if (auto d = defs_.find(t.text); d != defs_.end()) return d->second;
        fail("undeclared variable '" + t.text + "'", t);
      }
      case Tok::lparen: {
        ExactPolynomial inner = expr();
        Token close = next();
        if (close.kind != Tok::rparen) fail("expected ')'", close);
        return inner;
      }
      default: fail("expected a number, variable or '('", t);
    }
  }

  const Statement& st_;
  const std::map<std::string, std::size_t>& vars_;
  const std::map<std::string, ExactPolynomial>& defs_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::string format_coeff(const Rational& c) { return c.str(); }

}  // namespace

SystemSpec parse_system(std::string_view text, const ParseOptions& options) {
  SystemSpec spec;
  std::map<std::string, std::size_t> vars;
  std::map<std::string, ExactPolynomial> defs;
  bool have_vars = false;

  struct Pending {
    std::string key;
    Statement st;
    std::size_t value_begin;
  };
  std::vector<Pending> statements;

  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    begin = end + 1;

    std::string trimmed = trim(line);
    if (trimmed.empty() || trimmed[0] == '#') {
      if (end == text.size()) break;
      continue;
    }
    const bool continuation = std::isspace(static_cast<unsigned char>(line[0]));
    if (continuation) {
      if (statements.empty() ||
          (statements.back().key != "poly" && statements.back().key != "def"))
        throw ParseError("continuation line without a preceding poly or def", line_no, 1);
      Statement& st = statements.back().st;
      st.text.pop_back();  // drop the end sentinel position
      st.pos.pop_back();
      st.text += ' ';
      st.pos.push_back({line_no, 1});
      for (std::size_t i = 0; i < line.size(); ++i) {
        st.text += line[i];
        st.pos.push_back({line_no, i + 1});
      }
      st.text += ' ';
      st.pos.push_back({line_no, line.size() + 1});
    } else {
      std::size_t colon = line.find(':');
      if (colon == std::string_view::npos)
        throw ParseError("expected 'key: value'", line_no, 1);
      std::string key = trim(line.substr(0, colon));
      Statement st;
      for (std::size_t i = 0; i < line.size(); ++i) {
        st.text += line[i];
        st.pos.push_back({line_no, i + 1});
      }
      st.text += ' ';
      st.pos.push_back({line_no, line.size() + 1});
      statements.push_back({key, std::move(st), colon + 1});
    }
    if (end == text.size()) break;
  }

  for (Pending& p : statements) {
    const SourcePos& at = p.st.pos.front();
    std::string value = trim(std::string_view(p.st.text).substr(p.value_begin));
    if (p.key == "name") {
      spec.name = value;
    } else if (p.key == "provenance") {
      spec.provenance = value;
    } else if (p.key == "vars") {
      if (have_vars) throw ParseError("duplicate 'vars:' line", at.line, at.column);
      std::istringstream in(value);
      std::string v;
      while (in >> v) {
        if (!ident_start(v[0]) || !std::all_of(v.begin(), v.end(), ident_char))
          throw ParseError("invalid variable name '" + v + "'", at.line, at.column);
        if (!vars.emplace(v, spec.variables.size()).second)
          throw ParseError("variable '" + v + "' declared twice", at.line, at.column);
        spec.variables.push_back(v);
      }
      if (spec.variables.empty()) throw ParseError("'vars:' declares no variables", at.line, at.column);
      have_vars = true;
    } else if (p.key == "def" || p.key == "poly") {
      if (!have_vars)
        throw ParseError("'" + p.key + ":' before 'vars:'", at.line, at.column);
      ExprParser parser(p.st, p.value_begin, vars, defs);
      if (p.key == "def") {
        std::string name = parser.definition_name();
        if (vars.count(name) || defs.count(name))
          throw ParseError("'" + name + "' is already defined", at.line, at.column);
        defs.emplace(name, parser.parse_all());
      } else {
        ExactPolynomial poly = parser.parse_all();
        if (!poly.is_integral() && !options.clear_denominators)
          throw ParseError("rational coefficient (enable denominator clearing to accept it)",
                           at.line, at.column);
        spec.polynomials.push_back(std::move(poly));
      }
    } else {
      throw ParseError("unknown key '" + p.key + "'", at.line, at.column);
    }
  }
  if (!have_vars) throw ParseError("missing 'vars:' line", line_no, 1);
  return options.clear_denominators ? clear_denominators(spec) : spec;
}

SystemSpec load_system_file(const std::filesystem::path& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open system file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_system(buf.str(), options);
  } catch (const ParseError& e) {
    throw ParseError(path.filename().string() + ": " + e.what(), e.line(), e.column());
  }
}

std::vector<SystemSpec> load_systems(const std::filesystem::path& path,
                                     const ParseOptions& options) {
  std::vector<SystemSpec> out;
  if (std::filesystem::is_directory(path)) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(path))
      if (entry.is_regular_file() && entry.path().extension() == ".sys")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) out.push_back(load_system_file(f, options));
  } else {
    out.push_back(load_system_file(path, options));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rendering and conversion

std::string render_polynomial(const ExactPolynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::vector<const std::pair<const ExponentVector, Rational>*> terms;
  for (const auto& t : p.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(), [](const auto* a, const auto* b) {
    return cmp_degrevlex(a->first, b->first) == Ordering3::greater;
  });
  std::ostringstream out;
  bool first_term = true;
  for (const auto* t : terms) {
    const ExponentVector& e = t->first;
    Rational c = t->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first_term)
      out << (neg ? "-" : "");
    else
      out << (neg ? " - " : " + ");
    first_term = false;
    bool constant = std::all_of(e.begin(), e.end(), [](Exponent x) { return x == 0; });
    bool first_factor = true;
    if (c != 1 || constant) {
      out << format_coeff(c);
      first_factor = false;
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!first_factor) out << '*';
      first_factor = false;
      out << names.at(k);
      if (e[k] != 1) out << '^' << e[k];
    }
  }
  return out.str();
}

std::string render_system(const SystemSpec& s) {
  std::ostringstream out;
  if (!s.name.empty()) out << "name: " << s.name << '\n';
  if (!s.provenance.empty()) out << "provenance: " << s.provenance << '\n';
  out << "vars:";
  for (const auto& v : s.variables) out << ' ' << v;
  out << '\n';
  for (const auto& p : s.polynomials) out << "poly: " << render_polynomial(p, s.variables) << '\n';
  return out.str();
}

SystemSpec clear_denominators(const SystemSpec& s) {
  SystemSpec out = s;
  for (ExactPolynomial& p : out.polynomials) {
    cpp_int l = 1;
    for (const auto& [e, c] : p.terms()) {
      cpp_int d = boost::multiprecision::denominator(c);
      l = l / boost::multiprecision::gcd(l, d) * d;
    }
    if (l != 1) p = p.scaled(Rational(l));
  }
  return out;
}

std::vector<Polynomial> to_polynomials(const SystemSpec& s, const RingPtr& ring) {
  if (ring->nvars() != s.variables.size())
    throw DomainError("ring has " + std::to_string(ring->nvars()) + " variables, system '" +
                      s.name + "' has " + std::to_string(s.variables.size()));
  const cpp_int p = ring->field().modulus();
  WeightMemo memo;
  std::vector<Polynomial> out;
  out.reserve(s.polynomials.size());
  for (const ExactPolynomial& f : s.polynomials) {
    std::vector<std::pair<std::int64_t, ExponentVector>> terms;
    for (const auto& [e, c] : f.terms()) {
      if (boost::multiprecision::denominator(c) != 1)
        throw DomainError("system '" + s.name + "' has a non-integral coefficient");
      cpp_int r = boost::multiprecision::numerator(c) % p;
      terms.emplace_back(static_cast<std::int64_t>(r), e);
    }
    out.push_back(Polynomial::from_terms(ring, terms, &memo));
  }
  return out;
}

std::size_t distinct_monomials(const SystemSpec& s) {
  std::set<ExponentVector> seen;
  for (const auto& f : s.polynomials)
    for (const auto& [e, c] : f.terms()) seen.insert(e);
  return seen.size();
}

std::vector<std::int64_t> total_degrees(const SystemSpec& s) {
  std::vector<std::int64_t> d;
  for (const auto& f : s.polynomials) d.push_back(f.total_degree());
  return d;
}

std::string degree_signature(const SystemSpec& s) {
  std::vector<std::int64_t> d = total_degrees(s);
  std::sort(d.rbegin(), d.rend());
  std::ostringstream out;
  for (std::size_t i = 0; i < d.size();) {
    std::size_t j = i;
    while (j < d.size() && d[j] == d[i]) ++j;
    if (i) out << '*';
    out << d[i];
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
  return out.str();
}

SystemSpec permute_variables(const SystemSpec& s, std::span<const std::size_t> perm) {
  const std::size_t n = s.variables.size();
  if (perm.size() != n) throw DomainError("permutation length does not match variable count");
  std::vector<bool> seen(n, false);
  for (std::size_t old : perm) {
    if (old >= n || seen[old]) throw DomainError("not a permutation");
    seen[old] = true;
  }
  SystemSpec out;
  out.name = s.name;
  out.provenance = s.provenance;
  for (std::size_t i = 0; i < n; ++i) out.variables.push_back(s.variables[perm[i]]);
  for (const ExactPolynomial& f : s.polynomials) {
    ExactPolynomial g(n, Rational(0));
    ExponentVector e(n);
    for (const auto& [old, c] : f.terms()) {
      for (std::size_t i = 0; i < n; ++i) e[i] = old[perm[i]];
      g.add_term(e, c);
    }
    out.polynomials.push_back(std::move(g));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generators

SystemSpec cyclic_system(int k) {
  if (k < 2) throw DomainError("cyclic system needs k >= 2");
  const std::size_t n = static_cast<std::size_t>(k);
  SystemSpec s;
  s.name = "cyclic" + std::to_string(k);
  s.provenance = "generated: standard cyclic-n roots system";
  for (std::size_t i = 0; i < n; ++i) s.variables.push_back("x" + std::to_string(i + 1));
  for (std::size_t d = 1; d < n; ++d) {
    ExactPolynomial f(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      ExponentVector e(n, 0);
      for (std::size_t j = 0; j < d; ++j) e[(i + j) % n] += 1;
      f.add_term(e, Rational(1));
    }
    s.polynomials.push_back(std::move(f));
  }
  ExactPolynomial last(n, Rational(-1));
  last.add_term(ExponentVector(n, 1), Rational(1));
  s.polynomials.push_back(std::move(last));
  return s;
}

SystemSpec katsura_system(int k) {
  if (k < 2) throw DomainError("katsura system needs k >= 2");
  const std::size_t n = static_cast<std::size_t>(k);
  const long top = k - 1;
  SystemSpec s;
  s.name = "katsura" + std::to_string(k);
  s.provenance = "generated: standard Katsura system, " + std::to_string(k) + " variables";
  for (std::size_t i = 0; i < n; ++i) s.variables.push_back("u" + std::to_string(i));
  auto var = [&](long i) { return ExactPolynomial::variable(n, static_cast<std::size_t>(i)); };

  ExactPolynomial linear = var(0) - ExactPolynomial(n, Rational(1));
  for (long i = 1; i <= top; ++i) linear = linear + var(i).scaled(Rational(2));
  s.polynomials.push_back(std::move(linear));

  for (long m = 0; m < top; ++m) {
    ExactPolynomial q = -var(m);
    for (long l = -top; l <= top; ++l) {
      long a = std::labs(l), b = std::labs(m - l);
      if (a > top || b > top) continue;
      q = q + var(a) * var(b);
    }
    s.polynomials.push_back(std::move(q));
  }
  return s;
}

std::vector<SystemSpec> resolve_systems(const std::string& arg, const ParseOptions& options) {
  auto generator = [&](std::string_view prefix) -> std::optional<int> {
    if (arg.rfind(prefix, 0) != 0) return std::nullopt;
    std::string rest = arg.substr(prefix.size());
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit))
      throw DomainError("malformed generator '" + arg + "'");
    return std::stoi(rest);
  };
  if (auto k = generator("cyclic:")) return {cyclic_system(*k)};
  if (auto k = generator("katsura:")) return {katsura_system(*k)};
  if (!std::filesystem::exists(arg)) throw DomainError("no such system file or directory: " + arg);
  return load_systems(arg, options);
}

std::filesystem::path bundled_systems_dir() {
  return std::filesystem::path(GBBENCH_DATA_DIR) / "systems";
}

}  // namespace gbbench

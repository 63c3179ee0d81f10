#include "gbbench/ordering.hpp"

#include <limits>
#include <sstream>

namespace gbbench {

using boost::multiprecision::cpp_int;

std::string_view to_string(Ordering3 o) {
  switch (o) {
    case Ordering3::less: return "<";
    case Ordering3::equal: return "=";
    case Ordering3::greater: return ">";
  }
  return "?";
}

namespace detail {

Ordering3 subtotal_wide(const Exponent* a, const Exponent* b, std::size_t n) {
  std::vector<std::int64_t> sa(n), sb(n);
  std::int64_t ta = 0, tb = 0;
  for (std::size_t k = 0; k < n; ++k) {
    ta += a[k];
    tb += b[k];
    sa[k] = ta;
    sb[k] = tb;
  }
  for (std::size_t k = n; k-- > 0;) {
    if (sa[k] > sb[k]) return Ordering3::greater;
    if (sa[k] < sb[k]) return Ordering3::less;
  }
  return Ordering3::equal;
}

}  // namespace detail

namespace {

void require_same_length(ExponentSpan a, ExponentSpan b) {
  if (a.size() != b.size())
    throw DomainError("exponent vectors have different lengths (" + std::to_string(a.size()) +
                      " vs " + std::to_string(b.size()) + ")");
  if (a.empty()) throw DomainError("exponent vectors must have at least one entry");
}

void require_dim(const WeightMatrix& w, ExponentSpan a) {
  if (w.dim() != a.size())
    throw DomainError("weight matrix has dimension " + std::to_string(w.dim()) +
                      " but exponent vector has length " + std::to_string(a.size()));
}

// Row-echelon elimination over the rationals. Returns the rank.
std::size_t eliminate(std::vector<Rational>& m, std::size_t rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[pivot * cols + j], m[r * cols + j]);
    Rational p = m[r * cols + c];
    for (std::size_t j = 0; j < cols; ++j) m[r * cols + j] /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i * cols + c] == 0) continue;
      Rational f = m[i * cols + c];
      for (std::size_t j = 0; j < cols; ++j) m[i * cols + j] -= f * m[r * cols + j];
    }
    ++r;
  }
  return r;
}

}  // namespace

Ordering3 cmp_degrevlex(ExponentSpan a, ExponentSpan b) {
  require_same_length(a, b);
  return detail::degrevlex(a.data(), b.data(), a.size());
}

Ordering3 cmp_subtotal(ExponentSpan a, ExponentSpan b) {
  require_same_length(a, b);
  return detail::subtotal(a.data(), b.data(), a.size());
}

Ordering3 cmp_lex(ExponentSpan a, ExponentSpan b) {
  require_same_length(a, b);
  return detail::lex(a.data(), b.data(), a.size());
}

WeightMatrix::WeightMatrix(std::vector<std::vector<Rational>> rows) : n_(rows.size()) {
  if (n_ == 0) throw DomainError("weight matrix must have at least one row");
  entries_.reserve(n_ * n_);
  integral_.reserve(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_)
      throw DomainError("weight matrix is not square: row " + std::to_string(i + 1) + " has " +
                        std::to_string(rows[i].size()) + " entries, expected " +
                        std::to_string(n_));
    cpp_int scale = 1;
    for (const Rational& x : rows[i]) {
      cpp_int d = boost::multiprecision::denominator(x);
      scale = scale / boost::multiprecision::gcd(scale, d) * d;
    }
    for (Rational& x : rows[i]) {
      cpp_int v = boost::multiprecision::numerator(x) * (scale / boost::multiprecision::denominator(x));
      if (v > std::numeric_limits<std::int64_t>::max() / 4 ||
          v < std::numeric_limits<std::int64_t>::min() / 4)
        throw DomainError("weight matrix entry too large for integral comparison");
      integral_.push_back(static_cast<std::int64_t>(v));
      entries_.push_back(std::move(x));
    }
  }
}

WeightMatrix WeightMatrix::from_integers(const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<std::vector<Rational>> r;
  r.reserve(rows.size());
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return WeightMatrix(std::move(r));
}

bool WeightMatrix::is_integral() const {
  for (const Rational& x : entries_)
    if (boost::multiprecision::denominator(x) != 1) return false;
  return true;
}

WeightMatrix identity_matrix(std::size_t n) {
  if (n < 1) throw DomainError("matrix dimension must be at least 1");
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return WeightMatrix(std::move(rows));
}

WeightMatrix subtotal_weight_matrix(std::size_t n) {
  if (n < 1) throw DomainError("matrix dimension must be at least 1");
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (i <= n - j + 1) rows[i - 1][j - 1] = 1;
  return WeightMatrix(std::move(rows));
}

WeightMatrix degrevlex_weight_matrix(std::size_t n) {
  if (n < 1) throw DomainError("matrix dimension must be at least 1");
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t j = 1; j <= n; ++j) rows[0][j - 1] = 1;
  for (std::size_t i = 2; i <= n; ++i) rows[i - 1][n + 2 - i - 1] = -1;
  return WeightMatrix(std::move(rows));
}

WeightMatrix multiply(const WeightMatrix& a, const WeightMatrix& b) {
  if (a.dim() != b.dim()) throw DomainError("matrix dimensions differ");
  const std::size_t n = a.dim();
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) rows[i][j] += a.at(i, k) * b.at(k, j);
    }
  return WeightMatrix(std::move(rows));
}

std::size_t rank(const WeightMatrix& w) {
  const std::size_t n = w.dim();
  std::vector<Rational> m;
  m.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.push_back(w.at(i, j));
  return eliminate(m, n, n);
}

std::optional<WeightMatrix> inverse(const WeightMatrix& w) {
  const std::size_t n = w.dim();
  const std::size_t cols = 2 * n;
  std::vector<Rational> m(n * cols, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i * cols + j] = w.at(i, j);
    m[i * cols + n + i] = 1;
  }
  if (rank(w) < n) return std::nullopt;
  eliminate(m, n, cols);
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = m[i * cols + n + j];
  return WeightMatrix(std::move(rows));
}

bool is_lower_triangular_positive_diagonal(const WeightMatrix& w) {
  for (std::size_t i = 0; i < w.dim(); ++i) {
    if (w.at(i, i) <= 0) return false;
    for (std::size_t j = i + 1; j < w.dim(); ++j)
      if (w.at(i, j) != 0) return false;
  }
  return true;
}

WeightVector weight_vector(const WeightMatrix& w, ExponentSpan a) {
  require_dim(w, a);
  WeightVector out(w.dim(), Rational(0));
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::size_t j = 0; j < w.dim(); ++j)
      if (a[j] != 0) out[i] += w.at(i, j) * a[j];
  return out;
}

Ordering3 cmp_by_matrix(const WeightMatrix& w, ExponentSpan a, ExponentSpan b) {
  require_dim(w, a);
  require_dim(w, b);
  return detail::by_integral_rows(w.integral_entries().data(), a.data(), b.data(), w.dim());
}

bool is_admissible(const WeightMatrix& w) {
  for (std::size_t j = 0; j < w.dim(); ++j) {
    std::size_t i = 0;
    while (i < w.dim() && w.at(i, j) == 0) ++i;
    if (i == w.dim() || w.at(i, j) < 0) return false;
  }
  return rank(w) == w.dim();
}

std::optional<TransformCertificate> orders_equivalent_certificate(const WeightMatrix& w1,
                                                                  const WeightMatrix& w2) {
  if (w1.dim() != w2.dim())
    throw DomainError("weight matrices have different dimensions (" + std::to_string(w1.dim()) +
                      " vs " + std::to_string(w2.dim()) + ")");
  auto w1_inv = inverse(w1);
  if (!w1_inv) throw DomainError("first weight matrix is singular");
  WeightMatrix l = multiply(w2, *w1_inv);
  if (!is_lower_triangular_positive_diagonal(l)) return std::nullopt;
  return TransformCertificate{std::move(l)};
}

std::optional<ExponentPair> orders_equivalent_oracle(const WeightMatrix& w1,
                                                     const WeightMatrix& w2, int max_degree) {
  if (w1.dim() != w2.dim())
    throw DomainError("weight matrices have different dimensions (" + std::to_string(w1.dim()) +
                      " vs " + std::to_string(w2.dim()) + ")");
  if (max_degree < 0) throw DomainError("max_degree must be nonnegative");
  const std::size_t n = w1.dim();
  std::vector<ExponentVector> all;
  ExponentVector v(n, 0);
  while (true) {
    all.push_back(v);
    std::size_t k = n;
    while (k > 0 && v[k - 1] == max_degree) v[--k] = 0;
    if (k == 0) break;
    ++v[k - 1];
  }
  for (const auto& a : all)
    for (const auto& b : all)
      if (cmp_by_matrix(w1, a, b) != cmp_by_matrix(w2, a, b)) return ExponentPair{a, b};
  return std::nullopt;
}

Rational parse_rational(std::string_view token) {
  auto parse_int = [&](std::string_view s) -> cpp_int {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    if (i == s.size()) throw DomainError("malformed rational '" + std::string(token) + "'");
    cpp_int v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw DomainError("malformed rational '" + std::string(token) + "'");
      v = v * 10 + (s[i] - '0');
    }
    return neg ? cpp_int(-v) : v;
  };
  auto slash = token.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(token));
  cpp_int num = parse_int(token.substr(0, slash));
  cpp_int den = parse_int(token.substr(slash + 1));
  if (den == 0) throw DomainError("zero denominator in '" + std::string(token) + "'");
  return Rational(num, den);
}

WeightMatrix parse_weight_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  if (!(in >> n) || n < 1) throw DomainError("weight matrix file must start with a positive dimension");
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n));
  for (auto& row : rows) {
    for (long long j = 0; j < n; ++j) {
      std::string tok;
      if (!(in >> tok)) throw DomainError("weight matrix file has fewer than n*n entries");
      row.push_back(parse_rational(tok));
    }
  }
  std::string extra;
  if (in >> extra) throw DomainError("weight matrix file has trailing content '" + extra + "'");
  return WeightMatrix(std::move(rows));
}

std::string format_weight_matrix(const WeightMatrix& w) {
  std::ostringstream out;
  out << w.dim() << '\n';
  for (std::size_t i = 0; i < w.dim(); ++i) {
    for (std::size_t j = 0; j < w.dim(); ++j) out << (j ? " " : "") << w.at(i, j);
    out << '\n';
  }
  return out.str();
}

}  // namespace gbbench

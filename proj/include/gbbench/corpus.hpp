#ifndef GBBENCH_CORPUS_HPP
#define GBBENCH_CORPUS_HPP

#include "gbbench/poly.hpp"

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gbbench {

/// Polynomial with exact rational coefficients, as read from a file.
/// Zero coefficients are never stored.
class ExactPolynomial {
public:
  ExactPolynomial() = default;
  ExactPolynomial(std::size_t nvars, Rational constant);
  static ExactPolynomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const std::map<ExponentVector, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_integral() const;
  std::int64_t total_degree() const;

  void add_term(const ExponentVector& e, const Rational& c);

  friend ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b);
  friend ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b);
  friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);
  ExactPolynomial operator-() const;
  ExactPolynomial scaled(const Rational& c) const;
  ExactPolynomial pow(unsigned k) const;

  bool operator==(const ExactPolynomial&) const = default;

private:
  std::size_t nvars_ = 0;
  std::map<ExponentVector, Rational> terms_;
};

struct SystemSpec {
  std::string name;
  std::string provenance;
  std::vector<std::string> variables;  // most main first
  std::vector<ExactPolynomial> polynomials;

  bool operator==(const SystemSpec&) const = default;
};

/// Syntax or content error, carrying the 1-based source position.
class ParseError : public DomainError {
public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

struct ParseOptions {
  // Accept non-integral coefficients and scale each polynomial by the LCM
  // of its denominators. Otherwise they are an error.
  bool clear_denominators = false;
};

/// Line-oriented format:
///
///   # comment
///   name: lichtblau1
///   provenance: free text
///   vars: t x y z
///   def: P = x^2 - 1          (named subexpression, usable afterwards)
///   poly: t^4*z + 3 x (y - 1)^2
///
/// Lines starting with whitespace continue the previous poly/def line.
/// '*' between factors is optional; '/' divides by a nonzero constant.
SystemSpec parse_system(std::string_view text, const ParseOptions& options = {});
SystemSpec load_system_file(const std::filesystem::path& path, const ParseOptions& options = {});

/// A directory yields every *.sys file in it, sorted by file name.
std::vector<SystemSpec> load_systems(const std::filesystem::path& path,
                                     const ParseOptions& options = {});

/// Canonical text form; parse_system(render_system(s)) == s.
std::string render_system(const SystemSpec& s);
std::string render_polynomial(const ExactPolynomial& p, const std::vector<std::string>& names);

SystemSpec clear_denominators(const SystemSpec& s);

/// Images in Z_p over `ring`. Throws on non-integral coefficients. With a
/// caching ring each distinct monomial is weighed once across the system.
std::vector<Polynomial> to_polynomials(const SystemSpec& s, const RingPtr& ring);

std::size_t distinct_monomials(const SystemSpec& s);

/// Total degrees as "11*10*6^2": descending, repeats as powers.
std::string degree_signature(const SystemSpec& s);
std::vector<std::int64_t> total_degrees(const SystemSpec& s);

/// perm[new_position] = old_index.
SystemSpec permute_variables(const SystemSpec& s, std::span<const std::size_t> perm);

/// Cyclic-k: sum over i of x_i x_{i+1} ... x_{i+d-1} (indices mod k) for
/// d = 1..k-1, and x_1 ... x_k - 1.
SystemSpec cyclic_system(int k);

/// Katsura-k in k variables u_0..u_{k-1} (N = k-1): the linear equation
/// u_0 + 2(u_1 + ... + u_N) - 1 and, for m = 0..N-1, the quadrics
/// sum_{l=-N..N} u_|l| u_|m-l| - u_m.
SystemSpec katsura_system(int k);

/// "cyclic:5" / "katsura:4", or a path to a file or directory.
std::vector<SystemSpec> resolve_systems(const std::string& arg, const ParseOptions& options = {});

std::filesystem::path bundled_systems_dir();

}  // namespace gbbench

#endif

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "rootclust/interval.hpp"
#include "rootclust/oracle_number.hpp"

namespace rootclust {

/// Exact complex rational.
struct RationalComplex {
  mpq_class re;
  mpq_class im;
  bool operator==(const RationalComplex&) const = default;
};

/// Where a polynomial came from, e.g. {"mignotte", {{"a",14},{"d",64}}}.
struct Provenance {
  std::string family;
  std::map<std::string, long> params;
  std::string describe() const;
};

/// Paired evaluation oracles for p and p'. The hot path evaluates at a ball
/// point with a fixed working precision; the oracle-number path escalates
/// precision until the requested output width is met.
class PolynomialOracle {
 public:
  PolynomialOracle(int degree, bool is_real, Provenance provenance)
      : degree_(degree), is_real_(is_real), provenance_(std::move(provenance)) {}
  virtual ~PolynomialOracle() = default;

  int degree() const { return degree_; }
  bool is_real() const { return is_real_; }
  const Provenance& provenance() const { return provenance_; }

  /// Encloses p(z) (and p'(z) when dp is non-null) for every z in the input
  /// rectangle, computing with `prec` bits.
  virtual void eval(ComplexInterval& p, ComplexInterval* dp, const ComplexInterval& z,
                    prec_t prec) const = 0;

  /// Upper bound of sum |a_j| x^j over the coefficients a_j of p.
  virtual Mag abs_majorant(const Mag& x) const = 0;

  /// Exact coefficients in ascending degree, if the oracle is dense.
  virtual const std::vector<RationalComplex>* coefficients() const { return nullptr; }
  /// The dense coefficients as balls at `prec` bits (cached); requires
  /// coefficients() != nullptr.
  std::shared_ptr<const std::vector<ComplexInterval>> coefficient_balls(prec_t prec) const;

  /// Enclosure of p(a) with width <= 2^-L.
  ComplexInterval eval_p(const OracleNumber& a, long L) const;
  /// Enclosure of p'(a) with width <= 2^-L.
  ComplexInterval eval_dp(const OracleNumber& a, long L) const;

 private:
  ComplexInterval eval_escalating(const OracleNumber& a, long L, bool derivative) const;

  int degree_;
  bool is_real_;
  Provenance provenance_;
  mutable std::mutex ball_mu_;
  mutable std::map<prec_t, std::shared_ptr<const std::vector<ComplexInterval>>> ball_cache_;
};

using PolyPtr = std::shared_ptr<const PolynomialOracle>;

/// Raised on malformed coefficient files; carries the 1-based line number.
class FormatError : public std::runtime_error {
 public:
  FormatError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class EmptyPolynomial : public std::runtime_error {
 public:
  EmptyPolynomial() : std::runtime_error("polynomial has no nonzero coefficient") {}
};

/// Horner oracle over exact coefficients (ascending degree). Trailing zero
/// coefficients are dropped; throws EmptyPolynomial if none remain.
PolyPtr dense_oracle(std::vector<RationalComplex> coeffs, Provenance provenance = {"dense", {}});
PolyPtr dense_oracle(const std::vector<mpq_class>& coeffs, Provenance provenance = {"dense", {}});

/// z^d - 2(2^a z - 1)^2.
PolyPtr family_mignotte(long a, long d);
/// Man_0 = 1, Man_j = z Man_{j-1}^2 + 1; degree 2^k - 1.
PolyPtr family_mandelbrot(long k);
/// sum_k C(d,k) b_{d-k} z^k with exact Bernoulli numbers.
PolyPtr family_bernoulli(long d);
/// q_0 = 1, q_1 = z, q_{j+1} = q_j^2 + z q_{j-1}^4.
PolyPtr family_runnels(long k);

/// Bernoulli numbers b_0..b_n from sum_{j<=m} C(m+1,j) b_j = 0.
std::vector<mpq_class> bernoulli_numbers(long n);
/// Degree of Run_k.
long runnels_degree(long k);

/// Reads one coefficient per line ("R" or "R,I", decimal or num/den),
/// ascending degree; '#' starts a comment line.
PolyPtr parse_poly_file(const std::string& path);
PolyPtr parse_poly_text(const std::string& text);

/// Builds a family from a name and parameters, e.g. ("mignotte", {a:14,d:64}).
/// Throws std::invalid_argument on unknown names or missing parameters.
PolyPtr make_family(const std::string& name, const std::map<std::string, long>& params);

}  // namespace rootclust

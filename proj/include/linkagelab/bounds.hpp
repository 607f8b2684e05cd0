#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <string>

namespace llab {

using BigInt = boost::multiprecision::cpp_int;

// Expression tree over +, *, ^ with arbitrary-precision integer leaves.
// Used when a bound is too large to hold exactly.
struct Expr {
  enum class Op { Leaf, Add, Mul, Pow };
  Op op = Op::Leaf;
  BigInt value;  // Leaf only
  std::shared_ptr<const Expr> lhs, rhs;

  static std::shared_ptr<const Expr> leaf(BigInt v);
  static std::shared_ptr<const Expr> add(std::shared_ptr<const Expr> a,
                                         std::shared_ptr<const Expr> b);
  static std::shared_ptr<const Expr> mul(std::shared_ptr<const Expr> a,
                                         std::shared_ptr<const Expr> b);
  static std::shared_ptr<const Expr> pow(std::shared_ptr<const Expr> base,
                                         std::shared_ptr<const Expr> exponent);

  // Exact evaluation; throws std::overflow_error if the result would exceed
  // `digit_limit` decimal digits.
  BigInt evaluate(long double digit_limit) const;
  // log10 of the value; +inf once even long double overflows.
  long double log10_estimate() const;
  std::string to_string() const;
};

// Either an exact big integer or a tower expression, plus magnitude info.
struct BoundDescriptor {
  bool exact = false;
  BigInt exact_value;                    // valid iff exact
  std::shared_ptr<const Expr> tower;     // always set (leaf for exact values)
  long double log10_estimate = 0.0L;     // +inf when beyond long double range
  long double digits_bound = 1.0L;       // ceiling on the decimal digit count

  std::string to_string() const;
};

// Exact digit threshold separating Exact from Tower form (decimal digits).
inline constexpr long double kDefaultExactDigitLimit = 1'000'000.0L;

// m(k,n) = (4n+1)k3^n + 8k
BigInt m_bound(const BigInt& k, int n);

// theta(k,0) = k; theta(k,n) = theta(k + 4m(2n+1)^{4nm}, n-1) + 2k + nk3^n
BoundDescriptor theta(const BigInt& k, int n,
                      long double exact_digit_limit = kDefaultExactDigitLimit);

// t(Sigma,k) = theta(k, 4k + 3g) for surfaces without boundary (g = 2a+b).
BoundDescriptor t_bound(int a, int b, int c, const BigInt& k,
                        long double exact_digit_limit = kDefaultExactDigitLimit);

// k * 3^n
BigInt untangle_bound(const BigInt& k, int n);

// 256 * C * (k^4 + n^4); C must be positive (the paper leaves it unspecified).
BigInt omega_bound(const BigInt& k, const BigInt& n, const BigInt& c_param);

}  // namespace llab

#include "linkagelab/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace llab {

namespace {

constexpr long double kInf = std::numeric_limits<long double>::infinity();

// log10 of a positive big integer without overflowing the conversion.
long double log10_big(const BigInt& v) {
  if (v <= 0) throw std::domain_error("log10_big: nonpositive");
  unsigned bits = boost::multiprecision::msb(v);
  if (bits <= 60) return std::log10(v.convert_to<long double>());
  BigInt top = v >> (bits - 60);
  return std::log10(top.convert_to<long double>()) +
         static_cast<long double>(bits - 60) * std::log10(2.0L);
}

long double log10_add(long double a, long double b) {
  if (a == kInf || b == kInf) return kInf;
  long double hi = std::max(a, b), lo = std::min(a, b);
  if (hi - lo > 30.0L) return hi;
  return hi + std::log10(1.0L + std::pow(10.0L, lo - hi));
}

// 10^x as long double; +inf if out of range.
long double exp10_ld(long double x) {
  if (x == kInf || x > 4900.0L) return kInf;
  return std::pow(10.0L, x);
}

}  // namespace

std::shared_ptr<const Expr> Expr::leaf(BigInt v) {
  auto e = std::make_shared<Expr>();
  e->op = Op::Leaf;
  e->value = std::move(v);
  return e;
}

std::shared_ptr<const Expr> Expr::add(std::shared_ptr<const Expr> a,
                                      std::shared_ptr<const Expr> b) {
  auto e = std::make_shared<Expr>();
  e->op = Op::Add;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

std::shared_ptr<const Expr> Expr::mul(std::shared_ptr<const Expr> a,
                                      std::shared_ptr<const Expr> b) {
  auto e = std::make_shared<Expr>();
  e->op = Op::Mul;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

std::shared_ptr<const Expr> Expr::pow(std::shared_ptr<const Expr> base,
                                      std::shared_ptr<const Expr> exponent) {
  auto e = std::make_shared<Expr>();
  e->op = Op::Pow;
  e->lhs = std::move(base);
  e->rhs = std::move(exponent);
  return e;
}

BigInt Expr::evaluate(long double digit_limit) const {
  switch (op) {
    case Op::Leaf:
      return value;
    case Op::Add:
      return lhs->evaluate(digit_limit) + rhs->evaluate(digit_limit);
    case Op::Mul:
      return lhs->evaluate(digit_limit) * rhs->evaluate(digit_limit);
    case Op::Pow: {
      BigInt base = lhs->evaluate(digit_limit);
      BigInt exponent = rhs->evaluate(digit_limit);
      if (exponent < 0) throw std::domain_error("Expr: negative exponent");
      if (exponent == 0) return BigInt(1);
      if (base == 0) return BigInt(0);
      if (base == 1) return BigInt(1);
      if (log10_big(exponent) > 15.0L)
        throw std::overflow_error("Expr: exact evaluation exceeds digit limit");
      long double digits = exponent.convert_to<long double>() * log10_big(base) + 1.0L;
      if (!(digits <= digit_limit))
        throw std::overflow_error("Expr: exact evaluation exceeds digit limit");
      return boost::multiprecision::pow(base, exponent.convert_to<unsigned>());
    }
  }
  throw std::logic_error("Expr: bad op");
}

long double Expr::log10_estimate() const {
  switch (op) {
    case Op::Leaf:
      return value == 0 ? -kInf : log10_big(value);
    case Op::Add:
      return log10_add(lhs->log10_estimate(), rhs->log10_estimate());
    case Op::Mul:
      return lhs->log10_estimate() + rhs->log10_estimate();
    case Op::Pow: {
      long double exp_value = exp10_ld(rhs->log10_estimate());
      long double base_log = lhs->log10_estimate();
      if (base_log == 0.0L) return 0.0L;  // base 1
      return exp_value * base_log;
    }
  }
  return 0.0L;
}

std::string Expr::to_string() const {
  switch (op) {
    case Op::Leaf:
      return value.str();
    case Op::Add:
      return "(" + lhs->to_string() + " + " + rhs->to_string() + ")";
    case Op::Mul:
      return "(" + lhs->to_string() + " * " + rhs->to_string() + ")";
    case Op::Pow:
      return "(" + lhs->to_string() + " ^ " + rhs->to_string() + ")";
  }
  return "?";
}

std::string BoundDescriptor::to_string() const {
  if (exact) return exact_value.str();
  std::string log;
  if (log10_estimate == kInf) {
    log = "beyond long double range";
  } else {
    log = std::to_string(static_cast<double>(log10_estimate));
  }
  return "TOWER(" + tower->to_string() + ") ~ 10^" + log;
}

namespace {

// Intermediate value that is exact while it fits and symbolic afterwards.
struct Val {
  bool exact = true;
  BigInt v;
  std::shared_ptr<const Expr> e;

  static Val of(BigInt x) { return Val{true, std::move(x), nullptr}; }
  std::shared_ptr<const Expr> expr() const { return exact ? Expr::leaf(v) : e; }
};

Val add(const Val& a, const Val& b) {
  if (a.exact && b.exact) return Val::of(a.v + b.v);
  return Val{false, BigInt(), Expr::add(a.expr(), b.expr())};
}

Val mul(const Val& a, const Val& b) {
  if (a.exact && b.exact) return Val::of(a.v * b.v);
  return Val{false, BigInt(), Expr::mul(a.expr(), b.expr())};
}

Val pow_val(const BigInt& base, const Val& exponent, long double digit_limit) {
  if (exponent.exact) {
    if (exponent.v == 0) return Val::of(BigInt(1));
    if (base == 0) return Val::of(BigInt(0));
    if (base == 1) return Val::of(BigInt(1));
    if (log10_big(exponent.v) <= 15.0L) {
      long double digits = exponent.v.convert_to<long double>() * log10_big(base) + 1.0L;
      if (digits <= digit_limit)
        return Val::of(boost::multiprecision::pow(base, exponent.v.convert_to<unsigned>()));
    }
  }
  return Val{false, BigInt(), Expr::pow(Expr::leaf(base), exponent.expr())};
}

Val theta_val(const Val& k, int n, long double digit_limit) {
  if (n == 0) return k;
  BigInt three_n = boost::multiprecision::pow(BigInt(3), n);
  // m = (4n+1)k3^n + 8k
  Val m = add(mul(Val::of(BigInt(4 * n + 1) * three_n), k), mul(Val::of(BigInt(8)), k));
  Val exponent = mul(Val::of(BigInt(4 * n)), m);
  Val power = pow_val(BigInt(2 * n + 1), exponent, digit_limit);
  Val k_next = add(k, mul(mul(Val::of(BigInt(4)), m), power));
  // tail = 2k + nk3^n
  Val tail = add(mul(Val::of(BigInt(2)), k), mul(Val::of(BigInt(n) * three_n), k));
  return add(theta_val(k_next, n - 1, digit_limit), tail);
}

BoundDescriptor descriptor_from(const Val& value) {
  BoundDescriptor d;
  d.exact = value.exact;
  d.tower = value.expr();
  if (value.exact) {
    d.exact_value = value.v;
    d.log10_estimate = value.v == 0 ? 0.0L : log10_big(value.v);
  } else {
    d.log10_estimate = d.tower->log10_estimate();
  }
  d.digits_bound = d.log10_estimate == kInf ? kInf : std::floor(d.log10_estimate) + 1.0L;
  return d;
}

}  // namespace

BigInt m_bound(const BigInt& k, int n) {
  if (k < 0 || n < 0) throw std::invalid_argument("m_bound: negative argument");
  return BigInt(4 * n + 1) * k * boost::multiprecision::pow(BigInt(3), n) + 8 * k;
}

BoundDescriptor theta(const BigInt& k, int n, long double exact_digit_limit) {
  if (k < 0 || n < 0) throw std::invalid_argument("theta: negative argument");
  return descriptor_from(theta_val(Val::of(k), n, exact_digit_limit));
}

BoundDescriptor t_bound(int a, int b, int c, const BigInt& k, long double exact_digit_limit) {
  if (c != 0) throw std::invalid_argument("t_bound: surface must have no boundary (c = 0)");
  if (a < 0 || b < 0 || k < 0) throw std::invalid_argument("t_bound: negative argument");
  if (k > 1000000) throw std::invalid_argument("t_bound: k too large for the strip count");
  int genus = 2 * a + b;
  int strips = 4 * k.convert_to<int>() + 3 * genus;
  return theta(k, strips, exact_digit_limit);
}

BigInt untangle_bound(const BigInt& k, int n) {
  if (k < 0 || n < 0) throw std::invalid_argument("untangle_bound: negative argument");
  return k * boost::multiprecision::pow(BigInt(3), n);
}

BigInt omega_bound(const BigInt& k, const BigInt& n, const BigInt& c_param) {
  if (k < 0 || n < 0) throw std::invalid_argument("omega_bound: negative argument");
  if (c_param <= 0) throw std::invalid_argument("omega_bound: c_param must be positive");
  return 256 * c_param * (k * k * k * k + n * n * n * n);
}

}  // namespace llab

#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eqfig {

namespace detail {
struct Node;
}

/// Exact constructible real number: rationals closed under +, -, *, / and
/// square roots of nonnegative values.
///
/// Values are lazy expression DAGs.  sign() is exact and always terminates:
/// the certified enclosing interval is refined (doubling the working
/// precision each round, starting at 64 fractional bits) until it excludes
/// zero, or until its width falls below a BFMSS-style separation bound for
/// the expression, in which case the value is exactly zero.
///
/// Expressions built purely from rationals with {+,-,*,/} fold eagerly to a
/// rational leaf, so rational scenes never touch the interval machinery.
/// Square roots of perfect rational squares fold the same way.
///
/// Values are observationally immutable, but sign/refinement caches are not
/// synchronized: ExactNumber is confined to a single thread.
class ExactNumber {
public:
  ExactNumber();  // zero
  ExactNumber(long value);

  /// Exact value num/den, canonical (reduced, sign on the numerator).
  /// Throws std::invalid_argument when den == 0.
  static ExactNumber from_rational(const mpz_class& num, const mpz_class& den);
  static ExactNumber from_rational(long num, long den);
  static ExactNumber from_mpq(const mpq_class& q);

  friend ExactNumber operator+(const ExactNumber&, const ExactNumber&);
  friend ExactNumber operator-(const ExactNumber&, const ExactNumber&);
  friend ExactNumber operator*(const ExactNumber&, const ExactNumber&);
  /// Throws std::domain_error when the divisor is exactly zero.
  friend ExactNumber operator/(const ExactNumber&, const ExactNumber&);
  friend ExactNumber operator-(const ExactNumber&);

  /// Exact nonnegative square root.  Throws std::domain_error when the
  /// operand is negative.
  friend ExactNumber sqrt(const ExactNumber&);

  /// Exact sign of the real value: -1, 0 or +1.  A result of 0 means the
  /// value is exactly zero, not merely small.
  int sign() const;

  bool operator==(const ExactNumber& o) const { return (*this - o).sign() == 0; }
  bool operator!=(const ExactNumber& o) const { return !(*this == o); }
  bool operator<(const ExactNumber& o) const { return (*this - o).sign() < 0; }
  bool operator>(const ExactNumber& o) const { return (*this - o).sign() > 0; }
  bool operator<=(const ExactNumber& o) const { return (*this - o).sign() <= 0; }
  bool operator>=(const ExactNumber& o) const { return (*this - o).sign() >= 0; }

  /// True when the value is held as a rational leaf (the fast path).
  bool is_rational() const;
  /// Requires is_rational().
  const mpq_class& rational_value() const;

  /// Textual form: rationals as "p/q" or "p", expressions as prefix terms,
  /// e.g. "(sqrt 2)" or "(div 1 (sqrt 2))".  Round-trips bit-exactly
  /// through parse_literal.
  std::string to_literal() const;
  /// Throws std::invalid_argument on malformed input.
  static ExactNumber parse_literal(std::string_view text);

  /// Structural equality of the expression (used by round-trip tests);
  /// distinct from value equality.
  bool same_structure(const ExactNumber& other) const;

  /// Midpoint of the certified interval refined to at least 128 bits.
  /// Display only; never feed the result back into predicates.
  double approx() const;

  const std::shared_ptr<const detail::Node>& node() const { return node_; }

private:
  explicit ExactNumber(std::shared_ptr<const detail::Node> n);
  std::shared_ptr<const detail::Node> node_;

  friend int detail_sign_by_refinement(const ExactNumber&);
  friend double detail_interval_width(const ExactNumber&);
};

namespace detail {
/// Test hook: determine the sign without the rational shortcut, through the
/// interval/separation-bound path.  Must agree with ExactNumber::sign().
int sign_by_refinement(const ExactNumber& x);
/// Test hook: upper bound on the width of the currently cached interval
/// (+inf when nothing is cached yet).  Used to check monotone refinement.
double interval_width(const ExactNumber& x);
}  // namespace detail

}  // namespace eqfig

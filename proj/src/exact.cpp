#include "eqfig/exact.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <limits>
#include <vector>

namespace eqfig {
namespace detail {

namespace {

constexpr long kLgSaturate = std::numeric_limits<long>::max() / 8;

long sat_add(long a, long b) {
  if (a > kLgSaturate - std::max(b, 0L)) return kLgSaturate;
  return a + b;
}

long sat_mul(long a, long b) {
  if (a != 0 && b > kLgSaturate / a) return kLgSaturate;
  return a * b;
}

// ceil(log2 |z|) upper bound; 0 for z == 0.
long lg_bound(const mpz_class& z) {
  if (z == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

struct Mpfr {
  mpfr_t v;
  explicit Mpfr(mpfr_prec_t p = 64) { mpfr_init2(v, p); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
};

}  // namespace

enum class Kind { Rational, Add, Sub, Mul, Div, Sqrt };

struct Node {
  Kind kind;
  mpq_class value;  // Rational only
  std::shared_ptr<const Node> lhs, rhs;

  // BFMSS degree-measure data: u and l are log2 upper bounds on the
  // conjugates of the algebraic-integer numerator/denominator pair.
  long lg_u = 0;
  long lg_l = 0;
  // Distinct sqrt nodes reachable in this DAG (sorted by address); the
  // algebraic degree is bounded by 2^radicals.size().
  std::vector<const Node*> radicals;

  // Certified enclosing interval.  Widths are monotone under refinement:
  // every recomputation intersects with the previous enclosure.
  struct Cache {
    bool has = false;
    mpfr_prec_t prec = 0;
    mpfr_t lo, hi;
  };
  mutable Cache cache;

  Node() {
    mpfr_init2(cache.lo, 64);
    mpfr_init2(cache.hi, 64);
  }
  ~Node() {
    mpfr_clear(cache.lo);
    mpfr_clear(cache.hi);
  }
  Node(const Node&) = delete;
  Node& operator=(const Node&) = delete;
};

namespace {

using NodePtr = std::shared_ptr<const Node>;

std::vector<const Node*> merge_radicals(const std::vector<const Node*>& a,
                                        const std::vector<const Node*>& b) {
  std::vector<const Node*> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

NodePtr make_rational(mpq_class q) {
  q.canonicalize();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Rational;
  n->value = std::move(q);
  n->lg_u = lg_bound(n->value.get_num());
  n->lg_l = lg_bound(n->value.get_den());
  return n;
}

NodePtr make_binary(Kind k, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  const Node& A = *n->lhs;
  const Node& B = *n->rhs;
  switch (k) {
    case Kind::Add:
    case Kind::Sub:
      n->lg_u = sat_add(std::max(sat_add(A.lg_u, B.lg_l), sat_add(B.lg_u, A.lg_l)), 1);
      n->lg_l = sat_add(A.lg_l, B.lg_l);
      break;
    case Kind::Mul:
      n->lg_u = sat_add(A.lg_u, B.lg_u);
      n->lg_l = sat_add(A.lg_l, B.lg_l);
      break;
    case Kind::Div:
      n->lg_u = sat_add(A.lg_u, B.lg_l);
      n->lg_l = sat_add(A.lg_l, B.lg_u);
      break;
    default:
      throw std::logic_error("make_binary: bad kind");
  }
  n->radicals = merge_radicals(A.radicals, B.radicals);
  return n;
}

NodePtr make_sqrt(NodePtr a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sqrt;
  n->lhs = std::move(a);
  const Node& A = *n->lhs;
  // Two valid derivations: sqrt(U/L) = sqrt(UL)/L or U/sqrt(UL); keep the
  // one with the smaller combined measure.
  long half = sat_add(A.lg_u, A.lg_l) / 2 + 1;
  long u1 = half, l1 = A.lg_l;
  long u2 = A.lg_u, l2 = half;
  if (sat_add(u1, l1) <= sat_add(u2, l2)) {
    n->lg_u = u1;
    n->lg_l = l1;
  } else {
    n->lg_u = u2;
    n->lg_l = l2;
  }
  n->radicals = A.radicals;
  const Node* self = n.get();
  auto pos = std::lower_bound(n->radicals.begin(), n->radicals.end(), self);
  n->radicals.insert(pos, self);
  return n;
}

// Negative log2 of the separation bound: if the value is nonzero, its
// magnitude is at least 2^-sep_exponent.
long sep_exponent(const Node& n) {
  long k = static_cast<long>(n.radicals.size());
  long deg_minus_1 = k >= 62 ? kLgSaturate : (1L << k) - 1;
  return sat_add(sat_mul(deg_minus_1, n.lg_u), n.lg_l);
}

void recompute_interval(const Node& n, mpfr_prec_t p, mpfr_t lo, mpfr_t hi);

// Ensure the cached interval has precision >= p, intersecting with the old
// enclosure so widths never grow.
const Node::Cache& refine(const Node& n, mpfr_prec_t p) {
  if (n.cache.has && n.cache.prec >= p) return n.cache;
  Mpfr lo(p), hi(p);
  recompute_interval(n, p, lo.v, hi.v);
  if (n.cache.has) {
    // Old endpoints are exactly representable at the higher precision.
    if (mpfr_cmp(n.cache.lo, lo.v) > 0) mpfr_set(lo.v, n.cache.lo, MPFR_RNDD);
    if (mpfr_cmp(n.cache.hi, hi.v) < 0) mpfr_set(hi.v, n.cache.hi, MPFR_RNDU);
  }
  mpfr_set_prec(n.cache.lo, p);
  mpfr_set_prec(n.cache.hi, p);
  mpfr_set(n.cache.lo, lo.v, MPFR_RNDD);
  mpfr_set(n.cache.hi, hi.v, MPFR_RNDU);
  n.cache.prec = p;
  n.cache.has = true;
  return n.cache;
}

void interval_mul(const Node::Cache& a, const Node::Cache& b, mpfr_t lo, mpfr_t hi) {
  Mpfr t(mpfr_get_prec(lo));
  mpfr_mul(lo, a.lo, b.lo, MPFR_RNDD);
  mpfr_mul(t.v, a.lo, b.hi, MPFR_RNDD);
  mpfr_min(lo, lo, t.v, MPFR_RNDD);
  mpfr_mul(t.v, a.hi, b.lo, MPFR_RNDD);
  mpfr_min(lo, lo, t.v, MPFR_RNDD);
  mpfr_mul(t.v, a.hi, b.hi, MPFR_RNDD);
  mpfr_min(lo, lo, t.v, MPFR_RNDD);

  mpfr_mul(hi, a.lo, b.lo, MPFR_RNDU);
  mpfr_mul(t.v, a.lo, b.hi, MPFR_RNDU);
  mpfr_max(hi, hi, t.v, MPFR_RNDU);
  mpfr_mul(t.v, a.hi, b.lo, MPFR_RNDU);
  mpfr_max(hi, hi, t.v, MPFR_RNDU);
  mpfr_mul(t.v, a.hi, b.hi, MPFR_RNDU);
  mpfr_max(hi, hi, t.v, MPFR_RNDU);
}

void interval_div(const Node::Cache& a, const Node::Cache& b, mpfr_t lo, mpfr_t hi) {
  // The divisor's enclosure excludes zero (enforced at construction).
  Mpfr t(mpfr_get_prec(lo));
  mpfr_div(lo, a.lo, b.lo, MPFR_RNDD);
  mpfr_div(t.v, a.lo, b.hi, MPFR_RNDD);
  mpfr_min(lo, lo, t.v, MPFR_RNDD);
  mpfr_div(t.v, a.hi, b.lo, MPFR_RNDD);
  mpfr_min(lo, lo, t.v, MPFR_RNDD);
  mpfr_div(t.v, a.hi, b.hi, MPFR_RNDD);
  mpfr_min(lo, lo, t.v, MPFR_RNDD);

  mpfr_div(hi, a.lo, b.lo, MPFR_RNDU);
  mpfr_div(t.v, a.lo, b.hi, MPFR_RNDU);
  mpfr_max(hi, hi, t.v, MPFR_RNDU);
  mpfr_div(t.v, a.hi, b.lo, MPFR_RNDU);
  mpfr_max(hi, hi, t.v, MPFR_RNDU);
  mpfr_div(t.v, a.hi, b.hi, MPFR_RNDU);
  mpfr_max(hi, hi, t.v, MPFR_RNDU);
}

void recompute_interval(const Node& n, mpfr_prec_t p, mpfr_t lo, mpfr_t hi) {
  switch (n.kind) {
    case Kind::Rational:
      mpfr_set_q(lo, n.value.get_mpq_t(), MPFR_RNDD);
      mpfr_set_q(hi, n.value.get_mpq_t(), MPFR_RNDU);
      return;
    case Kind::Add: {
      const auto& a = refine(*n.lhs, p);
      const auto& b = refine(*n.rhs, p);
      mpfr_add(lo, a.lo, b.lo, MPFR_RNDD);
      mpfr_add(hi, a.hi, b.hi, MPFR_RNDU);
      return;
    }
    case Kind::Sub: {
      const auto& a = refine(*n.lhs, p);
      const auto& b = refine(*n.rhs, p);
      mpfr_sub(lo, a.lo, b.hi, MPFR_RNDD);
      mpfr_sub(hi, a.hi, b.lo, MPFR_RNDU);
      return;
    }
    case Kind::Mul: {
      const auto& a = refine(*n.lhs, p);
      const auto& b = refine(*n.rhs, p);
      interval_mul(a, b, lo, hi);
      return;
    }
    case Kind::Div: {
      const auto& a = refine(*n.lhs, p);
      const auto& b = refine(*n.rhs, p);
      interval_div(a, b, lo, hi);
      return;
    }
    case Kind::Sqrt: {
      const auto& a = refine(*n.lhs, p);
      if (mpfr_sgn(a.lo) < 0) {
        // The operand is certified positive at construction; its cached
        // enclosure never dips below zero after intersection.
        mpfr_set_zero(lo, 1);
      } else {
        mpfr_sqrt(lo, a.lo, MPFR_RNDD);
      }
      mpfr_sqrt(hi, a.hi, MPFR_RNDU);
      return;
    }
  }
  throw std::logic_error("recompute_interval: bad kind");
}

int sign_of(const Node& n) {
  if (n.kind == Kind::Rational) return mpq_sgn(n.value.get_mpq_t());

  if (n.cache.has) {
    if (mpfr_sgn(n.cache.lo) > 0) return 1;
    if (mpfr_sgn(n.cache.hi) < 0) return -1;
  }
  const long sep = sep_exponent(n);
  const long guard = sat_add(sat_mul(sat_add(sep, sat_add(n.lg_u, 1024)), 4), 4096);
  Mpfr width(64);
  for (mpfr_prec_t p = 64;; p = sat_mul(p, 2)) {
    const auto& c = refine(n, p);
    if (mpfr_sgn(c.lo) > 0) return 1;
    if (mpfr_sgn(c.hi) < 0) return -1;
    mpfr_sub(width.v, c.hi, c.lo, MPFR_RNDU);
    if (mpfr_cmp_si_2exp(width.v, 1, -sep) < 0) return 0;
    if (p > guard) throw std::logic_error("sign(): refinement exceeded the separation bound");
  }
}

bool is_perfect_square(const mpq_class& q, mpq_class& root) {
  if (sgn(q) < 0) return false;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = mpq_class(rn) / mpq_class(rd);
  return true;
}

}  // namespace
}  // namespace detail

using detail::Kind;
using detail::Node;

ExactNumber::ExactNumber() : node_(detail::make_rational(mpq_class(0))) {}

ExactNumber::ExactNumber(long value) : node_(detail::make_rational(mpq_class(value))) {}

ExactNumber::ExactNumber(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

ExactNumber ExactNumber::from_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("from_rational: zero denominator");
  return ExactNumber(detail::make_rational(mpq_class(num) / mpq_class(den)));
}

ExactNumber ExactNumber::from_rational(long num, long den) {
  return from_rational(mpz_class(num), mpz_class(den));
}

ExactNumber ExactNumber::from_mpq(const mpq_class& q) {
  return ExactNumber(detail::make_rational(q));
}

bool ExactNumber::is_rational() const { return node_->kind == Kind::Rational; }

const mpq_class& ExactNumber::rational_value() const {
  if (!is_rational()) throw std::logic_error("rational_value on an irrational expression");
  return node_->value;
}

int ExactNumber::sign() const { return detail::sign_of(*node_); }

ExactNumber operator+(const ExactNumber& a, const ExactNumber& b) {
  if (a.is_rational() && b.is_rational())
    return ExactNumber::from_mpq(a.rational_value() + b.rational_value());
  return ExactNumber(detail::make_binary(Kind::Add, a.node_, b.node_));
}

ExactNumber operator-(const ExactNumber& a, const ExactNumber& b) {
  if (a.is_rational() && b.is_rational())
    return ExactNumber::from_mpq(a.rational_value() - b.rational_value());
  return ExactNumber(detail::make_binary(Kind::Sub, a.node_, b.node_));
}

ExactNumber operator*(const ExactNumber& a, const ExactNumber& b) {
  if (a.is_rational() && b.is_rational())
    return ExactNumber::from_mpq(a.rational_value() * b.rational_value());
  return ExactNumber(detail::make_binary(Kind::Mul, a.node_, b.node_));
}

ExactNumber operator/(const ExactNumber& a, const ExactNumber& b) {
  if (b.sign() == 0) throw std::domain_error("division by exact zero");
  if (a.is_rational() && b.is_rational())
    return ExactNumber::from_mpq(a.rational_value() / b.rational_value());
  return ExactNumber(detail::make_binary(Kind::Div, a.node_, b.node_));
}

ExactNumber operator-(const ExactNumber& a) { return ExactNumber(0L) - a; }

ExactNumber sqrt(const ExactNumber& a) {
  int s = a.sign();
  if (s < 0) throw std::domain_error("sqrt of a negative value");
  if (s == 0) return ExactNumber();
  if (a.is_rational()) {
    mpq_class root;
    if (detail::is_perfect_square(a.rational_value(), root)) return ExactNumber::from_mpq(root);
  }
  return ExactNumber(detail::make_sqrt(a.node()));
}

double ExactNumber::approx() const {
  if (is_rational()) return rational_value().get_d();
  const auto& c = detail::refine(*node_, 128);
  detail::Mpfr mid(128);
  mpfr_add(mid.v, c.lo, c.hi, MPFR_RNDN);
  mpfr_div_ui(mid.v, mid.v, 2, MPFR_RNDN);
  return mpfr_get_d(mid.v, MPFR_RNDN);
}

// --- textual form ---------------------------------------------------------

namespace {

void write_literal(const Node& n, std::string& out) {
  switch (n.kind) {
    case Kind::Rational: {
      out += n.value.get_num().get_str();
      if (n.value.get_den() != 1) {
        out += '/';
        out += n.value.get_den().get_str();
      }
      return;
    }
    case Kind::Add:
    case Kind::Sub:
    case Kind::Mul:
    case Kind::Div: {
      const char* op = n.kind == Kind::Add   ? "add"
                       : n.kind == Kind::Sub ? "sub"
                       : n.kind == Kind::Mul ? "mul"
                                             : "div";
      out += '(';
      out += op;
      out += ' ';
      write_literal(*n.lhs, out);
      out += ' ';
      write_literal(*n.rhs, out);
      out += ')';
      return;
    }
    case Kind::Sqrt:
      out += "(sqrt ";
      write_literal(*n.lhs, out);
      out += ')';
      return;
  }
}

struct Parser {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("exact literal: " + what + " at offset " + std::to_string(pos));
  }

  ExactNumber parse_term() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    if (text[pos] == '(') {
      ++pos;
      std::string op = parse_symbol();
      ExactNumber a = parse_term();
      ExactNumber r = [&] {
        if (op == "sqrt") return sqrt(a);
        ExactNumber b = parse_term();
        if (op == "add") return a + b;
        if (op == "sub") return a - b;
        if (op == "mul") return a * b;
        if (op == "div") return a / b;
        fail("unknown operator '" + op + "'");
      }();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
      return r;
    }
    return parse_rational();
  }

  std::string parse_symbol() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected operator symbol");
    return std::string(text.substr(start, pos - start));
  }

  ExactNumber parse_rational() {
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) fail("expected rational literal");
    mpz_class num(std::string(text.substr(start, pos - start)), 10);
    mpz_class den(1);
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      size_t dstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == dstart) fail("expected denominator digits");
      den = mpz_class(std::string(text.substr(dstart, pos - dstart)), 10);
    }
    if (den == 0) fail("zero denominator");
    return ExactNumber::from_rational(num, den);
  }
};

}  // namespace

std::string ExactNumber::to_literal() const {
  std::string out;
  write_literal(*node_, out);
  return out;
}

ExactNumber ExactNumber::parse_literal(std::string_view text) {
  Parser p{text};
  ExactNumber r = p.parse_term();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

namespace {

bool same_structure_rec(const Node& a, const Node& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Kind::Rational) return a.value == b.value;
  if (!same_structure_rec(*a.lhs, *b.lhs)) return false;
  if (a.kind == Kind::Sqrt) return true;
  return same_structure_rec(*a.rhs, *b.rhs);
}

}  // namespace

bool ExactNumber::same_structure(const ExactNumber& other) const {
  return same_structure_rec(*node_, *other.node_);
}

namespace detail {

int sign_by_refinement(const ExactNumber& x) {
  const Node& n = *x.node();
  if (n.kind != Kind::Rational) return sign_of(n);
  // Refine the leaf interval directly, mirroring the general loop.
  const long sep = lg_bound(n.value.get_den());
  Mpfr width(64);
  for (mpfr_prec_t p = 64;; p *= 2) {
    const auto& c = refine(n, p);
    if (mpfr_sgn(c.lo) > 0) return 1;
    if (mpfr_sgn(c.hi) < 0) return -1;
    mpfr_sub(width.v, c.hi, c.lo, MPFR_RNDU);
    if (mpfr_cmp_si_2exp(width.v, 1, -sep) < 0) return 0;
  }
}

double interval_width(const ExactNumber& x) {
  const Node& n = *x.node();
  if (!n.cache.has) return std::numeric_limits<double>::infinity();
  Mpfr width(64);
  mpfr_sub(width.v, n.cache.hi, n.cache.lo, MPFR_RNDU);
  return mpfr_get_d(width.v, MPFR_RNDU);
}

}  // namespace detail

}  // namespace eqfig

#include "polymix/rat.hpp"

#include <sstream>

#include "polymix/errors.hpp"

namespace polymix {

Rat make_rat(long num, long den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw InvalidArgument("empty rational literal");
  // mpq_set_str accepts whitespace and other bases; be stricter.
  for (char c : text) {
    if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9'))) {
      throw InvalidArgument("bad rational literal: '" + text + "'");
    }
  }
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0) {
    throw InvalidArgument("bad rational literal: '" + text + "'");
  }
  if (sgn(r.get_den()) == 0) {
    throw InvalidArgument("zero denominator in rational literal: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& v) {
  return v.get_str();
}

std::string vec_to_string(const RatVec& v) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << rat_to_string(v[i]);
  }
  out << ")";
  return out.str();
}

std::string vec_to_string(const IntVec& v) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << v[i].get_str();
  }
  out << ")";
  return out.str();
}

double to_double(const Rat& v) { return v.get_d(); }

int sign(const Rat& v) { return sgn(v); }

Rat pow_rat(const Rat& base, unsigned exp) {
  Rat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
  // base is canonical, so num^k / den^k is already reduced.
  return r;
}

Int factorial(int n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

bool lex_less(const RatVec& a, const RatVec& b) {
  size_t m = std::min(a.size(), b.size());
  for (size_t i = 0; i < m; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

bool lex_less(const IntVec& a, const IntVec& b) {
  size_t m = std::min(a.size(), b.size());
  for (size_t i = 0; i < m; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

namespace {
void check_same_size(size_t a, size_t b) {
  if (a != b) throw DimensionMismatch("vector length mismatch");
}
}  // namespace

Rat dot(const RatVec& a, const RatVec& b) {
  check_same_size(a.size(), b.size());
  Rat acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rat dot(const RatVec& a, const IntVec& b) {
  check_same_size(a.size(), b.size());
  Rat acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Int dot(const IntVec& a, const IntVec& b) {
  check_same_size(a.size(), b.size());
  Int acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

RatVec add(const RatVec& a, const RatVec& b) {
  check_same_size(a.size(), b.size());
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  check_same_size(a.size(), b.size());
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec scale(const Rat& s, const RatVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

RatVec to_ratvec(const IntVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

RatVec zero_vec(int dim) { return RatVec(static_cast<size_t>(dim), Rat(0)); }

IntVec to_primitive(const RatVec& v) {
  if (v.empty()) throw InvalidArgument("empty vector has no primitive form");
  Int den_lcm = 1;
  for (const Rat& x : v) {
    Int l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    den_lcm = l;
  }
  IntVec w(v.size());
  Int g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    w[i] = v[i].get_num() * (den_lcm / v[i].get_den());
    Int gg;
    mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
    g = gg;
  }
  if (sgn(g) == 0) throw InvalidArgument("zero vector has no primitive form");
  for (Int& x : w) x /= g;
  return w;
}

IntVec to_primitive(const IntVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return to_primitive(r);
}

bool is_primitive(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) {
    Int gg;
    mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    g = gg;
  }
  return g == 1;
}

bool is_zero(const RatVec& v) {
  for (const Rat& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

bool is_zero(const IntVec& v) {
  for (const Int& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

IntVec negate(const IntVec& v) {
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

}  // namespace polymix

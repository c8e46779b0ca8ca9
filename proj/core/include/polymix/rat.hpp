#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace polymix {

// All exact geometry runs over GMP rationals. mpq_class keeps values reduced
// with positive denominator after every arithmetic operation, which is
// exactly the Rat invariant.
using Int = mpz_class;
using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

Rat make_rat(long num, long den = 1);

/// Parses "p/q" or "p" (optional sign, base 10). Throws InvalidArgument on
/// anything else, including zero denominators.
Rat parse_rat(const std::string& text);

/// Canonical form: "p/q", or just "p" when the denominator is one.
std::string rat_to_string(const Rat& v);
std::string vec_to_string(const RatVec& v);
std::string vec_to_string(const IntVec& v);

double to_double(const Rat& v);
int sign(const Rat& v);

Rat pow_rat(const Rat& base, unsigned exp);
Int factorial(int n);

bool lex_less(const RatVec& a, const RatVec& b);
bool lex_less(const IntVec& a, const IntVec& b);

Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const RatVec& a, const IntVec& b);
Int dot(const IntVec& a, const IntVec& b);

RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& s, const RatVec& v);
RatVec to_ratvec(const IntVec& v);
RatVec zero_vec(int dim);

/// Scales a nonzero rational vector to the unique parallel integer vector
/// with coprime entries, preserving direction.
IntVec to_primitive(const RatVec& v);
IntVec to_primitive(const IntVec& v);
bool is_primitive(const IntVec& v);
bool is_zero(const RatVec& v);
bool is_zero(const IntVec& v);
IntVec negate(const IntVec& v);

}  // namespace polymix

#pragma once

#include "polymix/rat.hpp"

namespace polymix {

/// Closed halfspace {x : <x, normal> >= offset} with a primitive integer
/// normal and exact rational offset.
struct Halfspace {
  IntVec normal;
  Rat offset;
};

bool operator==(const Halfspace& a, const Halfspace& b);
bool halfspace_less(const Halfspace& a, const Halfspace& b);

}  // namespace polymix

#pragma once

#include <string>
#include <vector>

#include "stabkit/dense.hpp"

namespace stabkit {

// An element of a character or cocharacter lattice Z^r.
using LatticeVector = IntVector;

LatticeVector lattice_vector(std::initializer_list<long> entries);

// v / gcd(|entries|); throws ZeroVector on v = 0.
LatticeVector primitive_part(const LatticeVector& v);

// Positive integer multiple of a rational vector with coprime integer entries.
LatticeVector clear_denominators(const RatVector& v);

Integer pairing(const LatticeVector& a, const LatticeVector& b);
Rational pairing(const RatVector& a, const LatticeVector& b);

bool lex_less(const LatticeVector& a, const LatticeVector& b);
bool lex_less(const RatVector& a, const RatVector& b);
bool equal(const LatticeVector& a, const LatticeVector& b);
bool equal(const RatVector& a, const RatVector& b);

std::string to_string(const LatticeVector& v);
std::string to_string(const RatVector& v);

struct LexLess {
  bool operator()(const LatticeVector& a, const LatticeVector& b) const { return lex_less(a, b); }
};

}  // namespace stabkit

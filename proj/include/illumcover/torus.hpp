#pragma once

#include "illumcover/common.hpp"

#include <string>
#include <vector>

namespace illumcover {

// A point of the circle T^1 = R/Z held as the exact rational representative
// in [0,1). All arithmetic in this header is exact; open-cube membership is a
// strict inequality and must be decided bit-exactly.
struct UnitRat {
    Rat value;  // invariant: 0 <= value < 1, reduced

    UnitRat() : value(0) {}
    static UnitRat wrap(const Rat& r);

    Int num() const { return boost::multiprecision::numerator(value); }
    Int den() const { return boost::multiprecision::denominator(value); }

    bool operator==(const UnitRat& o) const { return value == o.value; }
    bool operator!=(const UnitRat& o) const { return value != o.value; }
    bool operator<(const UnitRat& o) const { return value < o.value; }
};

// Serialized as "p/q" in every file format.
std::string to_string(const UnitRat& u);
UnitRat parse_unit_rational(const std::string& s);

// Parses "p/q" or a decimal literal into an exact rational.
Rat parse_rational(const std::string& s);
std::string rational_string(const Rat& r);

struct TorusPoint {
    std::vector<UnitRat> coords;

    TorusPoint() = default;
    explicit TorusPoint(std::vector<UnitRat> c) : coords(std::move(c)) {}

    int dim() const { return static_cast<int>(coords.size()); }
    bool operator==(const TorusPoint& o) const { return coords == o.coords; }
};

std::string to_string(const TorusPoint& p);
TorusPoint parse_torus_point(const std::string& s);

// Oriented distance on T^1: the unique r in [0,1) with b = a + r (mod 1).
// d(a,b) + d(b,a) = 1 for a != b, and d(a,a) = 0.
UnitRat oriented_distance(const UnitRat& a, const UnitRat& b);

// min(d(a,b), d(b,a)); the usual metric on the circle.
Rat symmetric_distance(const UnitRat& a, const UnitRat& b);

// Cyclic order: permutation with d(a_i,a_j) telescoping over consecutive
// gaps for i < j. Equal values keep their input order.
std::vector<UnitRat> cyclic_order(const std::vector<UnitRat>& points);

// k*a mod 1. For d(a,b) < 1/k this scales oriented distance by exactly k.
UnitRat scale(const Int& k, const UnitRat& a);

UnitRat torus_add(const UnitRat& a, const Rat& shift);
TorusPoint torus_add(const TorusPoint& p, const std::vector<Rat>& shift);

}  // namespace illumcover

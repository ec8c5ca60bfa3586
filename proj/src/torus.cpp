#include "illumcover/torus.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace illumcover {

UnitRat UnitRat::wrap(const Rat& r) {
    UnitRat u;
    Int n = boost::multiprecision::numerator(r);
    Int d = boost::multiprecision::denominator(r);  // cpp_rational keeps d > 0
    Int m = n % d;
    if (m < 0) m += d;
    u.value = Rat(m, d);
    return u;
}

std::string to_string(const UnitRat& u) {
    std::ostringstream os;
    os << u.num() << "/" << u.den();
    return os.str();
}

UnitRat parse_unit_rational(const std::string& s) { return UnitRat::wrap(parse_rational(s)); }

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            Int p(s.substr(0, slash));
            Int q(s.substr(slash + 1));
            if (q == 0) throw ParseError("zero denominator in '" + s + "'");
            return Rat(p, q);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rat(Int(s));
        std::string head = s.substr(0, dot);
        std::string tail = s.substr(dot + 1);
        if (tail.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad decimal '" + s + "'");
        bool neg = !head.empty() && head[0] == '-';
        if (neg) head = head.substr(1);
        if (head.empty()) head = "0";
        Int scale = 1;
        for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
        Int num = Int(head) * scale + (tail.empty() ? Int(0) : Int(tail));
        Rat r(num, scale);
        return neg ? Rat(-r) : r;
    } catch (const std::exception& e) {
        throw ParseError(std::string("cannot parse rational '") + s + "': " + e.what());
    }
}

std::string rational_string(const Rat& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r) << "/" << boost::multiprecision::denominator(r);
    return os.str();
}

std::string to_string(const TorusPoint& p) {
    std::string out;
    for (int i = 0; i < p.dim(); ++i) {
        if (i) out += ",";
        out += to_string(p.coords[i]);
    }
    return out;
}

TorusPoint parse_torus_point(const std::string& s) {
    std::vector<UnitRat> coords;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ',')) coords.push_back(parse_unit_rational(item));
    if (coords.empty()) throw ParseError("empty torus point '" + s + "'");
    return TorusPoint(std::move(coords));
}

UnitRat oriented_distance(const UnitRat& a, const UnitRat& b) {
    return UnitRat::wrap(b.value - a.value);
}

Rat symmetric_distance(const UnitRat& a, const UnitRat& b) {
    Rat d = oriented_distance(a, b).value;
    return std::min(d, Rat(1 - d));
}

std::vector<UnitRat> cyclic_order(const std::vector<UnitRat>& points) {
    std::vector<UnitRat> out = points;
    std::stable_sort(out.begin(), out.end(),
                     [](const UnitRat& x, const UnitRat& y) { return x.value < y.value; });
    return out;
}

UnitRat scale(const Int& k, const UnitRat& a) {
    if (k <= 0) throw DomainError("scale factor must be positive");
    return UnitRat::wrap(Rat(k) * a.value);
}

UnitRat torus_add(const UnitRat& a, const Rat& shift) { return UnitRat::wrap(a.value + shift); }

TorusPoint torus_add(const TorusPoint& p, const std::vector<Rat>& shift) {
    if (p.coords.size() != shift.size()) throw DimensionMismatch("shift dimension mismatch");
    TorusPoint out = p;
    for (size_t i = 0; i < shift.size(); ++i) out.coords[i] = torus_add(out.coords[i], shift[i]);
    return out;
}

}  // namespace illumcover

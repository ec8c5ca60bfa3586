#pragma once

#include "illumcover/covering.hpp"
#include "illumcover/polydisc.hpp"
#include "illumcover/zonoid.hpp"
#include "illumcover/zonotope.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace illumcover {

// Cover file: header "n=<int> eps=<p/q> mode=exact" (float covers carry a
// decimal eps and a margin), one comma-separated base tuple per line, then
// an optional certificate comment "# verdict: ...".
std::string write_cover(const CubeCover& cover);
CubeCover read_cover(std::istream& in);
CubeCover read_cover_file(const std::string& path);

// Direction files for the polydisc: header "n=<int> kind=phases",
// one phase tuple per line.
std::string write_directions(const std::vector<ExtremalDirection>& dirs);
std::vector<ExtremalDirection> read_directions(std::istream& in);
std::vector<ExtremalDirection> read_directions_file(const std::string& path);

// Generator file: header "field=real|complex n=<int>" with an optional
// "lambda=..." token for canonical sets; one generator per line as
// comma-separated real or re+imi entries.
std::string write_generators(const Generators& g);
std::string write_canonical(const CanonicalZonotope& k);
Generators read_generators(std::istream& in);
Generators read_generators_file(const std::string& path);

// Coefficient direction file for zonotope verification: header
// "n=<int> kind=coefficients", one coefficient tuple (length n+1) per line.
std::string write_coefficient_directions(const DirectionSet& ds);
DirectionSet read_coefficient_directions(std::istream& in);
DirectionSet read_coefficient_directions_file(const std::string& path);

// Zonoid atoms file: header "n=<int> kind=atoms", lines "w,z1,...,zn".
std::string write_zonoid(const DiscreteZonoid& z);
DiscreteZonoid read_zonoid(std::istream& in);
DiscreteZonoid read_zonoid_file(const std::string& path);

// Cluster file: header "clusters=<count>", lines "rep: i1 i2 ...".
std::string write_clusters(const std::vector<Cluster>& clusters);
std::vector<Cluster> read_clusters(std::istream& in);
std::vector<Cluster> read_clusters_file(const std::string& path);

std::string format_complex(const Cx& z);
Cx parse_complex(const std::string& s);
std::string format_double(double v);

// Writes through a temp file in the same directory plus rename.
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace illumcover

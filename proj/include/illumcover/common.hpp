#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace illumcover {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
    using Error::Error;
};
struct SideMismatch : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct Infeasible : Error {
    using Error::Error;
};
struct BudgetExceeded : Error {
    using Error::Error;
};
struct SolverFailure : Error {
    using Error::Error;
};
struct IsCubeOrPolydisc : Error {
    using Error::Error;
};
struct RankDeficient : Error {
    using Error::Error;
};
struct NotCanonical : Error {
    using Error::Error;
};
struct ClusterTooWide : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};
struct DimensionUnsupported : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

// Strict predicates at a float boundary: not decidable at the configured margin.
struct FloatModeInconclusive : Error {
    explicit FloatModeInconclusive(const std::string& msg) : Error(msg) {}
};

enum class Ternary { False = 0, True = 1, Inconclusive = 2 };

inline bool is_true(Ternary t) { return t == Ternary::True; }

constexpr double kDefaultMargin = 1e-9;

// Deterministic PRNG used wherever randomized sampling appears; keeps CLI
// output and test expectations identical across platforms.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0,1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    // uniform integer in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace illumcover

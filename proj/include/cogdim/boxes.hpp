#ifndef COGDIM_BOXES_HPP
#define COGDIM_BOXES_HPP

#include <string>
#include <utility>
#include <vector>

#include "cogdim/decomposition.hpp"
#include "cogdim/graph.hpp"

namespace cogdim {

// Exact rational with int64 components, normalized with positive denominator.
// Only ordering matters here; endpoints never mix with floating point.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational make(long long p, long long q = 1);
};

bool operator==(const Rational& a, const Rational& b);
bool operator<(const Rational& a, const Rational& b);
inline bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
inline bool operator>(const Rational& a, const Rational& b) { return b < a; }
inline bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

Rational parse_rational(const std::string& text);  // "p" or "p/q"
std::string rational_to_string(const Rational& r);

// k closed intervals per vertex; boxes realize the graph when uv is an edge
// iff the boxes of u and v meet in every coordinate.
struct BoxRepresentation {
    int k = 0;
    std::vector<std::vector<std::pair<Rational, Rational>>> intervals;  // [vertex][dim]
};

// Rejects with the offending pair and a direction clause: "edge-not-realized"
// (uv in E but boxes disjoint somewhere) or "non-edge-not-separated".
// Malformed input (l > r, wrong shape) throws.
WitnessCheck validate_box_representation(const Graph& g, const BoxRepresentation& rep);

}  // namespace cogdim

#endif

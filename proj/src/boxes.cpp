#include "cogdim/boxes.hpp"

#include <numeric>

namespace cogdim {

Rational Rational::make(long long p, long long q) {
    if (q == 0) throw Error("zero-denominator", "rational with zero denominator");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    long long g = std::gcd(p < 0 ? -p : p, q);
    if (g > 1) {
        p /= g;
        q /= g;
    }
    return Rational{p, q};
}

bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
}

bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

Rational parse_rational(const std::string& text) {
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational::make(std::stoll(text));
        return Rational::make(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw Error("malformed-rational", "cannot parse rational \"" + text + "\"");
    }
}

std::string rational_to_string(const Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

WitnessCheck validate_box_representation(const Graph& g, const BoxRepresentation& rep) {
    const int n = g.vertex_count();
    if (rep.k < 1) throw Error("bad-dimension", "box representation needs k >= 1");
    if (static_cast<int>(rep.intervals.size()) != n)
        throw Error("box-count-mismatch", "box representation must assign a box to every vertex");
    for (int v = 0; v < n; ++v) {
        if (static_cast<int>(rep.intervals[v].size()) != rep.k)
            throw Error("box-dimension-mismatch", "vertex " + std::to_string(v) + " has the wrong number of intervals");
        for (const auto& [lo, hi] : rep.intervals[v])
            if (hi < lo)
                throw Error("malformed-interval", "vertex " + std::to_string(v) + " has an interval with l > r");
    }
    WitnessCheck out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool meet_everywhere = true;
            for (int j = 0; j < rep.k && meet_everywhere; ++j) {
                const auto& bu = rep.intervals[u][j];
                const auto& bv = rep.intervals[v][j];
                if (bu.second < bv.first || bv.second < bu.first) meet_everywhere = false;
            }
            if (g.has_edge(u, v) && !meet_everywhere) {
                out.clause = "edge-not-realized";
                out.pair = {u, v};
                return out;
            }
            if (!g.has_edge(u, v) && meet_everywhere) {
                out.clause = "non-edge-not-separated";
                out.pair = {u, v};
                return out;
            }
        }
    out.accepted = true;
    return out;
}

}  // namespace cogdim

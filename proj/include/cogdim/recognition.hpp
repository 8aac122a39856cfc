#ifndef COGDIM_RECOGNITION_HPP
#define COGDIM_RECOGNITION_HPP

#include <string>
#include <utility>
#include <vector>

#include "cogdim/certificate.hpp"
#include "cogdim/graph.hpp"

namespace cogdim {

enum class RepFamily { Cograph, Threshold };

std::string family_name(RepFamily family);
RepFamily family_from_name(const std::string& name);

// Claims G = intersection of the factors, all from the given family.
struct Representation {
    RepFamily family = RepFamily::Cograph;
    int n = 0;
    std::vector<Graph> factors;
};

struct RecognitionResult {
    bool member = false;
    Certificate certificate;
};

// Cograph test by recursive decomposition: a graph on >= 2 vertices is a
// cograph iff it is disconnected (union node) or its complement is
// disconnected (join node). Yes yields a cotree, no an induced P4.
RecognitionResult is_cograph(const Graph& g);

// Threshold test by repeated elimination of an isolated-or-universal vertex,
// lowest index first. Yes yields the elimination order, no an induced P4, C4
// or 2K2 found in the stuck remainder.
RecognitionResult is_threshold(const Graph& g);

// Split test. Yes yields a clique/independent-set partition, no an induced
// 2K2, C4 or C5.
RecognitionResult is_split(const Graph& g);

RecognitionResult recognize(const Graph& g, RepFamily family);

enum class VerifyClause { None, VertexCount, Supergraph, Intersection, FamilyMembership };

std::string verify_clause_name(VerifyClause clause);

struct VerifyResult {
    bool accepted = false;
    VerifyClause failed = VerifyClause::None;
    int factor_index = -1;
    std::pair<int, int> offending_pair{-1, -1};
    Certificate certificate;
};

// Accepts iff (a) every factor has g's vertex count, (b) every factor is a
// supergraph of g, (c) the intersection of the factors equals g, and (d)
// every factor passes the family recognizer. Clauses are checked in that
// order and the first failure is reported.
VerifyResult verify_representation(const Graph& g, const Representation& rep);

}  // namespace cogdim

#endif

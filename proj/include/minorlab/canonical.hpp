#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "minorlab/graph.hpp"

namespace minorlab {

// Canonical labeling works for n <= 32; exactness is required up to n = 16
// and it stays practical around n = 20.
inline constexpr int kCanonicalMaxVertices = 32;

// n plus the packed upper-triangle bit string of the canonically relabeled
// graph (column-major, the graph6 bit order). Equal iff the graphs are
// isomorphic.
struct CanonicalForm {
    int n = 0;
    std::vector<std::uint64_t> bits;

    auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalResult {
    Graph canonical_graph;
    std::vector<int> position;                   // original vertex -> canonical position
    std::vector<std::vector<int>> generators;    // automorphism generators of the input
};

CanonicalResult canonicalize(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

// Orbit partition of <gens>; entry v holds the smallest vertex in v's orbit.
std::vector<int> orbits_from_generators(int n, const std::vector<std::vector<int>>& gens);
std::vector<int> automorphism_orbits(const Graph& g);

}  // namespace minorlab

template <>
struct std::hash<minorlab::CanonicalForm> {
    std::size_t operator()(const minorlab::CanonicalForm& f) const {
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&h](std::uint64_t x) {
            h ^= x;
            h *= 1099511628211ull;
        };
        mix(static_cast<std::uint64_t>(f.n));
        for (std::uint64_t w : f.bits) mix(w);
        return static_cast<std::size_t>(h);
    }
};

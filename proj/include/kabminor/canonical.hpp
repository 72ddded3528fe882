#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kabminor/graph.hpp"

namespace kabminor {

inline constexpr std::size_t kCanonicalMaxOrder = 10;
inline constexpr std::size_t kEnumeratorMaxOrder = 8;

/// perm[v] = canonical position of v. Colour refinement plus individualisation,
/// keeping the ordering whose upper-triangle bit string is largest.
/// Throws std::invalid_argument above kCanonicalMaxOrder vertices.
std::vector<Vertex> canonical_labeling(const Graph& g);

/// graph6 of g relabelled by canonical_labeling; equal iff isomorphic.
std::string canonical_form(const Graph& g);

/// One representative per isomorphism class on n vertices, each already in
/// canonical labelling, sorted by canonical string. Results are cached per n.
/// Throws std::invalid_argument for n > kEnumeratorMaxOrder.
const std::vector<Graph>& enumerate_graphs(std::size_t n);
std::vector<Graph> enumerate_graphs(std::size_t n, bool connected_only);

}  // namespace kabminor

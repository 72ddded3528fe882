#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "kabminor/graph.hpp"

namespace kabminor {

/// (a, b, n) together with the derived decomposition n - a + 1 = k*b + t.
struct FamilyParams {
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t t = 0;

    /// Throws std::invalid_argument unless 1 <= a <= b and n >= a - 1.
    static FamilyParams make(std::size_t a, std::size_t b, std::size_t n);

    /// floor((b + 1) / (a + 1))
    std::size_t tau() const noexcept { return (b + 1) / (a + 1); }
    /// min(a, floor((b + 1) / 2))
    std::size_t omega() const noexcept { return a < (b + 1) / 2 ? a : (b + 1) / 2; }
};

std::size_t tau_of(std::size_t a, std::size_t b);
std::size_t omega_of(std::size_t a, std::size_t b);
std::size_t binom2(std::size_t m);

/// Which theorem clause produced an extremal construction.
enum class Clause {
    T13_i,
    T13_ii,
    T14_i_special,
    T14_i,
    T14_ii_special,
    T14_ii,
    OutsideTheorem,
};

std::string_view to_string(Clause c);
std::optional<Clause> clause_from_string(std::string_view s);

/// Star forest on b + 1 vertices: tau - 1 copies of K_{1,a} plus one K_{1,c},
/// c = b - (a + 1)(tau - 1) >= a. The K_{1,c} star is laid out first.
Graph star_forest(std::size_t a, std::size_t b);
Graph star_forest_complement(std::size_t a, std::size_t b);

/// K_{b-1} on vertices 0..b-2 plus the path v1 v2 v3 (vertices b-1, b, b+1), with
/// v_i joined to the i-th consecutive block of a_i clique vertices.
Graph f_graph(std::size_t a1, std::size_t a2, std::size_t a3, std::size_t b);

/// Kneser graph K(5,2): vertices are the 2-subsets of {0..4} in lexicographic
/// order, adjacent iff disjoint.
Graph petersen();
Graph petersen_complement();

/// K_b with the edge {0, 1} replaced by a path through k new vertices b..b+k-1.
Graph subdivided_clique(std::size_t b, std::size_t k);

/// K_b minus the edge {0, 1}, plus pendant vertices b ~ 0 and b+1 ~ 1.
Graph clique_with_pendants(std::size_t b);

/// Order-(b+1) graph with a vertex v* (0), the class U1 (size b-1-u2) and U2
/// (size u2, even) forming the neighbourhood of v*, U2 inducing K_{u2} minus a
/// perfect matching, and a last vertex w joined exactly to U2.
Graph dominated_matching_graph(std::size_t b, std::size_t u2);

/// Builds the construction named by `clause` for `p`.
/// Throws std::invalid_argument when the clause does not fit the parameters.
Graph extremal_family(const FamilyParams& p, Clause clause);

}  // namespace kabminor

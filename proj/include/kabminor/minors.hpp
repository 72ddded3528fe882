#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "kabminor/graph.hpp"

namespace kabminor {

inline constexpr std::uint64_t kDefaultMinorBudget = 100'000'000;

enum class MinorVerdict { Contains, Free, BudgetExhausted };
std::string_view to_string(MinorVerdict v);

/// Outcome of an H-minor search. For Contains, branch_sets[h] is the set of
/// G-vertices contracted onto H-vertex h. For Free, `expansions` records the
/// size of the exhausted search tree, which a rerun reproduces exactly.
struct MinorWitness {
    MinorVerdict verdict = MinorVerdict::Free;
    std::vector<std::vector<Vertex>> branch_sets;
    std::uint64_t expansions = 0;
    std::uint64_t budget = 0;

    bool contains() const noexcept { return verdict == MinorVerdict::Contains; }
    bool free() const noexcept { return verdict == MinorVerdict::Free; }
    bool exhausted() const noexcept { return verdict == MinorVerdict::BudgetExhausted; }
};

/// Exact H-minor test by enumerating partitions of a vertex subset of G into
/// n(H) connected branch sets, then matching the quotient against H.
/// Every recursion node counts against `budget`. Needs n(H) >= 1; each
/// component of G searched must have at most 64 vertices.
MinorWitness has_minor(const Graph& g, const Graph& h, std::uint64_t budget = kDefaultMinorBudget);

/// Independent re-check of a Contains witness: disjoint nonempty connected
/// sets with a G-edge between the sets of every H-edge.
bool validate_minor_model(const Graph& g, const Graph& h, std::span<const std::vector<Vertex>> branch_sets);

/// K_{1,b}-minor freeness: no connected vertex set has b or more outside neighbours.
bool star_minor_free(const Graph& g, std::size_t b);

struct AbPairVerdict {
    std::size_t r = 0;
    std::size_t s = 0;
    MinorWitness witness;
};

struct AbPropertyReport {
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t omega = 0;
    /// One entry per (r, s) with r + s = b + 1 and 1 <= r <= omega, r ascending.
    std::vector<AbPairVerdict> pairs;
    /// True iff every pair is Free.
    bool overall = false;
    /// Some pair ran out of budget; overall is then false but not a proof of containment.
    bool inconclusive = false;
};

AbPropertyReport ab_property(const Graph& g, std::size_t a, std::size_t b,
                             std::uint64_t budget = kDefaultMinorBudget);

/// For connected g of order b + 1: every component of the complement has at
/// least omega + 1 vertices. Throws std::invalid_argument otherwise.
bool ab_property_complement_criterion(const Graph& g, std::size_t a, std::size_t b);

/// `size` dominating vertices (degree n - 1, hence pairwise adjacent), lowest indices first.
std::optional<std::vector<Vertex>> find_clique_dominating_set(const Graph& g, std::size_t size);

/// K_{a,b}-minor freeness of g decided through the (a,b)-property of g - S,
/// where S is a clique dominating set of size a - 1.
MinorVerdict minor_free_given_apex(const Graph& g, std::span<const Vertex> clique, std::size_t a, std::size_t b,
                                   std::uint64_t budget = kDefaultMinorBudget);

}  // namespace kabminor

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ribbonspec/exact.hpp"

namespace ribbonspec::oracle {

/// Exhaustive law of rooted one-faced trivalent maps of small genus,
/// obtained by running over every pairing of the 12g - 6 half-edges around
/// the rotation (0 1 2)(3 4 5)...
struct RootedLaw {
    std::uint64_t one_face_pairings = 0;  ///< labelled maps with the fixed rotation
    std::uint64_t rooted_maps = 0;        ///< isomorphism classes of rooted maps
    std::vector<std::vector<std::uint32_t>> class_codes;  ///< classify() codes, sorted
    std::vector<std::uint64_t> rooted_per_class;          ///< rooted maps in each class
    std::vector<std::size_t> automorphisms;               ///< |Aut| per class
};

/// Genus 1 or 2 only (genus 3 would visit 29!! pairings).
RootedLaw rooted_unicellular_law(int genus);

/// Closed-form count 2 (6g-3)! / (12^g g! (3g-2)!) of rooted maps.
BigInt rooted_unicellular_count(int genus);

/// Stable graph classes of type (g, n) from a generator that fixes the
/// vertex genera and leaf placement first, then the edge multiset, and
/// deduplicates over all vertex permutations.
std::size_t stable_graph_class_count(int g, int n, bool separating_only = false);

/// Direct sum over d with |d| = n - 3 of multinomial(n-3; d) prod
/// L_i^{2 d_i} / (2^{d_i} d_i!).
Rational genus0_volume(std::span<const Rational> boundary);

/// Brute-force F(n, k) by listing all compositions.
Rational composition_factorial_sum(int n, int k);

}  // namespace ribbonspec::oracle

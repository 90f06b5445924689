#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "cablewrench/wrist.hpp"

namespace cablewrench {

struct RobotGeometry;

/// One way of routing the eight cables: cable k leaves frame exit
/// exit_of_cable[k] and lands on platform anchor anchor_of_cable[k].
/// Six of the cables are the strands of the three wrist loops, the remaining
/// two are plain suspension cables. All indices 0-based.
struct CableArrangement {
    std::array<int, 8> exit_of_cable{};
    std::array<int, 8> anchor_of_cable{};
    LoopPairing loops{};                 ///< cable-index pairs, one per wheel
    std::array<int, 2> simple_cables{};  ///< the two cables outside any loop
};

/// Which anchors may host loop strands and which may host simple cables.
/// Loop strands must land exactly on the designated anchor pairs (both
/// members of a pair used by the two strands of one loop); simple cables pick
/// from the candidate list.
struct AnchorClasses {
    std::array<std::array<int, 2>, 3> loop_anchor_pairs{};
    std::vector<int> simple_anchor_candidates;
    int simple_cable_count = 2;
};

/// The plate layout used throughout: 15 anchors in three groups of five, with
/// the middle adjacent pair of each group reserved for a loop. Anchors 0-based
/// here; printed labels are 1-based (R1..R15), so these pairs print as
/// (R3,R4), (R8,R9), (R13,R14).
AnchorClasses default_anchor_classes();

/// Same loop pairs, but simple cables restricted to the first anchor of each
/// group (R1, R6, R11). Cuts the search space by a factor of 12.
AnchorClasses restricted_anchor_classes();

/// Full structural check of an arrangement against the anchor classes:
/// index ranges, distinct exits, distinct anchors, loop strands landing on
/// designated pairs, simple cables on candidate anchors, and the loop/simple
/// partition covering all eight cables. Throws ValidationError or
/// InvalidPairingError with a message naming the offending entry.
void validate_arrangement(const CableArrangement& arr, const AnchorClasses& classes,
                          int n_anchors = 15, int n_exits = 8);

/// Ordering used for deterministic tie-breaks and sorted exports: compare the
/// (exit, anchor) pair of cable 0, then cable 1, and so on.
bool arrangement_less(const CableArrangement& a, const CableArrangement& b);

struct ArrangementCounts {
    std::uint64_t exit_choices;     ///< ways to pick which exits are used
    std::uint64_t anchor_orderings; ///< ordered anchor pickings, loops ignored
    std::uint64_t combined;         ///< exit_choices * anchor_orderings
    std::uint64_t loop_constrained; ///< combined count after the loop-pair rule
};

/// Closed-form sizes of the arrangement space for n_c cables routed through
/// n_e exits to n_a anchors, with n_sc simple cables choosing from n_asc
/// candidate anchors (the rest of the cables fill the designated loop pairs).
/// Throws ValidationError on negative arguments or n_sc > n_asc, and
/// CountOverflowError when a count exceeds 64 bits.
ArrangementCounts count_arrangements(int n_e, int n_c, int n_a, int n_sc, int n_asc);

/// Exact binomial coefficient with overflow detection.
std::uint64_t binomial(int n, int k);

/// Scaled-down arrangement universe for tests and what-if counting. Cable
/// count is 2 * loop_anchor_pairs.size() + simple_cable_count.
struct EnumerationSpace {
    int exit_count = 8;
    std::vector<std::array<int, 2>> loop_anchor_pairs;
    std::vector<int> simple_anchor_candidates;
    int simple_cable_count = 2;
};

/// Exit/anchor assignment emitted by the generic enumerator. Cable k uses
/// exits[k] (the chosen exits in ascending order) and anchors[k].
struct AnchorAssignment {
    std::vector<int> exits;
    std::vector<int> anchors;
};

/// Visits every admissible assignment exactly once, in a fixed lexicographic
/// order: ascending exit subsets, then ascending simple-anchor subsets, then
/// anchor sequences in lexicographic order. Candidate anchors are processed
/// in ascending order regardless of how the space lists them. The visitor
/// returns false to stop early. Returns the number of assignments visited.
std::uint64_t enumerate_assignments(const EnumerationSpace& space,
                                    const std::function<bool(const AnchorAssignment&)>& visit);

/// Streams all eight-cable arrangements admitted by the anchor classes over
/// the geometry's exits, in the order of enumerate_assignments. Loop pairing
/// and simple-cable labels are derived from where the designated anchors
/// land. Returns the number visited.
std::uint64_t enumerate_arrangements(const RobotGeometry& geom, const AnchorClasses& classes,
                                     const std::function<bool(const CableArrangement&)>& visit);

/// Convenience form collecting the whole stream. Fine for the restricted
/// space (120960 entries); the unrestricted one is 12x larger, prefer the
/// streaming form there.
std::vector<CableArrangement> enumerate_arrangements(const RobotGeometry& geom,
                                                     const AnchorClasses& classes);

} // namespace cablewrench

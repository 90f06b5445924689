#include "cablewrench/arrangement.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "cablewrench/cdpr.hpp"
#include "cablewrench/errors.hpp"

namespace cablewrench {

namespace {

std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw CountOverflowError("arrangement count exceeds 64 bits");
    return out;
}

std::uint64_t factorial_checked(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f = mul_checked(f, static_cast<std::uint64_t>(i));
    return f;
}

/// Advance `c` (a strictly increasing k-subset of {0..n-1}) to its
/// lexicographic successor. Returns false when c was the last subset.
bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < n - k + i) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

void check_space(const EnumerationSpace& s) {
    if (s.exit_count < 0) throw ValidationError("enumeration space: negative exit count");
    if (s.simple_cable_count < 0)
        throw ValidationError("enumeration space: negative simple cable count");
    if (s.simple_cable_count > static_cast<int>(s.simple_anchor_candidates.size()))
        throw ValidationError("enumeration space: more simple cables than candidate anchors");
    std::set<int> seen;
    for (const auto& pair : s.loop_anchor_pairs)
        for (int a : pair) {
            if (a < 0) throw ValidationError("enumeration space: negative anchor index");
            if (!seen.insert(a).second)
                throw ValidationError("enumeration space: anchor " + std::to_string(a + 1) +
                                      " listed twice among loop pairs");
        }
    for (int a : s.simple_anchor_candidates) {
        if (a < 0) throw ValidationError("enumeration space: negative anchor index");
        if (seen.count(a))
            throw ValidationError("enumeration space: anchor " + std::to_string(a + 1) +
                                  " is both a loop anchor and a simple candidate");
    }
    std::set<int> cand(s.simple_anchor_candidates.begin(), s.simple_anchor_candidates.end());
    if (cand.size() != s.simple_anchor_candidates.size())
        throw ValidationError("enumeration space: duplicate simple candidate anchor");
}

} // namespace

AnchorClasses default_anchor_classes() {
    AnchorClasses c;
    c.loop_anchor_pairs = {{{2, 3}, {7, 8}, {12, 13}}};
    c.simple_anchor_candidates = {0, 1, 4, 5, 6, 9, 10, 11, 14};
    c.simple_cable_count = 2;
    return c;
}

AnchorClasses restricted_anchor_classes() {
    AnchorClasses c = default_anchor_classes();
    c.simple_anchor_candidates = {0, 5, 10};
    return c;
}

void validate_arrangement(const CableArrangement& arr, const AnchorClasses& classes,
                          int n_anchors, int n_exits) {
    std::set<int> exits, anchors;
    for (int k = 0; k < 8; ++k) {
        const int e = arr.exit_of_cable[static_cast<std::size_t>(k)];
        const int a = arr.anchor_of_cable[static_cast<std::size_t>(k)];
        if (e < 0 || e >= n_exits)
            throw ValidationError("cable " + std::to_string(k + 1) + ": exit index out of range");
        if (a < 0 || a >= n_anchors)
            throw ValidationError("cable " + std::to_string(k + 1) + ": anchor index out of range");
        if (!exits.insert(e).second)
            throw ValidationError("exit " + std::to_string(e + 1) + " used by two cables");
        if (!anchors.insert(a).second)
            throw ValidationError("anchor " + std::to_string(a + 1) + " used by two cables");
    }

    std::set<int> in_loops;
    for (int k = 0; k < 3; ++k) {
        const auto& pair = arr.loops[static_cast<std::size_t>(k)];
        for (int c : pair) {
            if (c < 0 || c >= 8)
                throw InvalidPairingError("loop " + std::to_string(k + 1) +
                                          ": cable index out of range");
            if (!in_loops.insert(c).second)
                throw InvalidPairingError("cable " + std::to_string(c + 1) +
                                          " assigned to two loops");
        }
        // Both strands of loop k must land on the designated anchor pair,
        // in either order.
        const int a0 = arr.anchor_of_cable[static_cast<std::size_t>(pair[0])];
        const int a1 = arr.anchor_of_cable[static_cast<std::size_t>(pair[1])];
        bool matched = false;
        for (const auto& dp : classes.loop_anchor_pairs)
            if ((a0 == dp[0] && a1 == dp[1]) || (a0 == dp[1] && a1 == dp[0])) matched = true;
        if (!matched)
            throw InvalidPairingError("loop " + std::to_string(k + 1) + " anchors (" +
                                      std::to_string(a0 + 1) + "," + std::to_string(a1 + 1) +
                                      ") are not a designated loop anchor pair");
    }

    for (int c : arr.simple_cables) {
        if (c < 0 || c >= 8)
            throw InvalidPairingError("simple cable index out of range");
        if (in_loops.count(c))
            throw InvalidPairingError("cable " + std::to_string(c + 1) +
                                      " marked simple but belongs to a loop");
        in_loops.insert(c);
        const int a = arr.anchor_of_cable[static_cast<std::size_t>(c)];
        if (std::find(classes.simple_anchor_candidates.begin(),
                      classes.simple_anchor_candidates.end(),
                      a) == classes.simple_anchor_candidates.end())
            throw InvalidPairingError("simple cable " + std::to_string(c + 1) + " anchor " +
                                      std::to_string(a + 1) + " is not a candidate anchor");
    }
    if (in_loops.size() != 8)
        throw InvalidPairingError("loops and simple cables do not cover all eight cables");
}

bool arrangement_less(const CableArrangement& a, const CableArrangement& b) {
    for (int k = 0; k < 8; ++k) {
        const auto ka = static_cast<std::size_t>(k);
        if (a.exit_of_cable[ka] != b.exit_of_cable[ka])
            return a.exit_of_cable[ka] < b.exit_of_cable[ka];
        if (a.anchor_of_cable[ka] != b.anchor_of_cable[ka])
            return a.anchor_of_cable[ka] < b.anchor_of_cable[ka];
    }
    return false;
}

std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0) throw ValidationError("binomial: negative argument");
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    // c stays integral after each division: c * (n-k+i) is divisible by i
    // because c holds C(n-k+i-1, i-1) at that point.
    for (int i = 1; i <= k; ++i) {
        c = mul_checked(c, static_cast<std::uint64_t>(n - k + i));
        c /= static_cast<std::uint64_t>(i);
    }
    return c;
}

ArrangementCounts count_arrangements(int n_e, int n_c, int n_a, int n_sc, int n_asc) {
    if (n_e < 0 || n_c < 0 || n_a < 0 || n_sc < 0 || n_asc < 0)
        throw ValidationError("count_arrangements: negative argument");
    if (n_sc > n_asc)
        throw ValidationError("count_arrangements: more simple cables than candidate anchors");
    if (n_sc > n_c)
        throw ValidationError("count_arrangements: more simple cables than cables");

    ArrangementCounts out{};
    out.exit_choices = binomial(n_e, n_c);
    out.anchor_orderings = mul_checked(binomial(n_a, n_c), factorial_checked(n_c));
    out.combined = mul_checked(out.exit_choices, out.anchor_orderings);
    out.loop_constrained =
        mul_checked(mul_checked(out.exit_choices, binomial(n_asc, n_sc)), factorial_checked(n_c));
    return out;
}

std::uint64_t enumerate_assignments(const EnumerationSpace& space,
                                    const std::function<bool(const AnchorAssignment&)>& visit) {
    check_space(space);
    const int n_c =
        2 * static_cast<int>(space.loop_anchor_pairs.size()) + space.simple_cable_count;
    if (n_c > space.exit_count) return 0;
    if (n_c == 0) return 0;

    std::vector<int> candidates = space.simple_anchor_candidates;
    std::sort(candidates.begin(), candidates.end());

    std::uint64_t visited = 0;
    AnchorAssignment assignment;

    std::vector<int> exit_subset(static_cast<std::size_t>(n_c));
    for (int i = 0; i < n_c; ++i) exit_subset[static_cast<std::size_t>(i)] = i;

    bool more_exits = true;
    while (more_exits) {
        std::vector<int> cand_subset(static_cast<std::size_t>(space.simple_cable_count));
        for (int i = 0; i < space.simple_cable_count; ++i)
            cand_subset[static_cast<std::size_t>(i)] = i;

        bool more_cands = true;
        // When there are zero simple cables the candidate subset loop runs once.
        while (more_cands) {
            std::vector<int> slots;
            slots.reserve(static_cast<std::size_t>(n_c));
            for (const auto& pair : space.loop_anchor_pairs) {
                slots.push_back(pair[0]);
                slots.push_back(pair[1]);
            }
            for (int i : cand_subset) slots.push_back(candidates[static_cast<std::size_t>(i)]);
            std::sort(slots.begin(), slots.end());

            do {
                assignment.exits = exit_subset;
                assignment.anchors = slots;
                ++visited;
                if (!visit(assignment)) return visited;
            } while (std::next_permutation(slots.begin(), slots.end()));

            more_cands = !cand_subset.empty() &&
                         next_combination(cand_subset, static_cast<int>(candidates.size()));
        }
        more_exits = next_combination(exit_subset, space.exit_count);
    }
    return visited;
}

namespace {

CableArrangement to_cable_arrangement(const AnchorAssignment& assignment,
                                      const AnchorClasses& classes) {
    CableArrangement arr;
    for (int k = 0; k < 8; ++k) {
        arr.exit_of_cable[static_cast<std::size_t>(k)] =
            assignment.exits[static_cast<std::size_t>(k)];
        arr.anchor_of_cable[static_cast<std::size_t>(k)] =
            assignment.anchors[static_cast<std::size_t>(k)];
    }
    std::vector<int> simple;
    simple.reserve(2);
    for (int p = 0; p < 3; ++p) {
        const auto& pair = classes.loop_anchor_pairs[static_cast<std::size_t>(p)];
        arr.loops[static_cast<std::size_t>(p)] = {-1, -1};
        for (int k = 0; k < 8; ++k) {
            const int a = arr.anchor_of_cable[static_cast<std::size_t>(k)];
            if (a == pair[0]) arr.loops[static_cast<std::size_t>(p)][0] = k;
            if (a == pair[1]) arr.loops[static_cast<std::size_t>(p)][1] = k;
        }
    }
    for (int k = 0; k < 8; ++k) {
        bool in_loop = false;
        for (const auto& lp : arr.loops)
            if (lp[0] == k || lp[1] == k) in_loop = true;
        if (!in_loop) simple.push_back(k);
    }
    arr.simple_cables = {simple[0], simple[1]};
    return arr;
}

} // namespace

std::uint64_t enumerate_arrangements(const RobotGeometry& geom, const AnchorClasses& classes,
                                     const std::function<bool(const CableArrangement&)>& visit) {
    const int n_exits = static_cast<int>(geom.exit_points.size());
    const int n_anchors = static_cast<int>(geom.anchor_points.size());
    if (classes.simple_cable_count != 2)
        throw ValidationError("eight-cable enumeration requires exactly 2 simple cables");
    for (const auto& pair : classes.loop_anchor_pairs)
        for (int a : pair)
            if (a < 0 || a >= n_anchors)
                throw ValidationError("loop anchor index out of range for this platform");
    for (int a : classes.simple_anchor_candidates)
        if (a < 0 || a >= n_anchors)
            throw ValidationError("simple candidate anchor index out of range for this platform");

    EnumerationSpace space;
    space.exit_count = n_exits;
    space.loop_anchor_pairs.assign(classes.loop_anchor_pairs.begin(),
                                   classes.loop_anchor_pairs.end());
    space.simple_anchor_candidates = classes.simple_anchor_candidates;
    space.simple_cable_count = classes.simple_cable_count;

    return enumerate_assignments(space, [&](const AnchorAssignment& assignment) {
        return visit(to_cable_arrangement(assignment, classes));
    });
}

std::vector<CableArrangement> enumerate_arrangements(const RobotGeometry& geom,
                                                     const AnchorClasses& classes) {
    std::vector<CableArrangement> out;
    enumerate_arrangements(geom, classes, [&](const CableArrangement& arr) {
        out.push_back(arr);
        return true;
    });
    return out;
}

} // namespace cablewrench

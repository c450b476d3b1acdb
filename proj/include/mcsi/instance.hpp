// Data model: colored intervals on the line, validated instances, realizations
// and the operations shared by every solver (minimum color-spanning interval
// length, the k=2 separation test, splitting at large gaps).
#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "mcsi/errors.hpp"
#include "mcsi/rational.hpp"

namespace mcsi {

struct colored_interval {
    rational left;
    rational length;  // > 0, exactly 1 for unit instances
    int color = 0;

    rational right() const { return left + length; }
    bool contains(const rational& p) const { return left <= p && p <= right(); }
};

// A validated instance: intervals sorted by left endpoint (ties keep input
// order), translated so the leftmost endpoint is 0. `translation` restores the
// original coordinates; `input_index[i]` is the position interval i had in the
// raw input.
struct instance {
    std::vector<colored_interval> intervals;
    int k = 0;
    rational translation;
    std::vector<int> input_index;
    bool is_unit = false;
    bool is_pairwise_disjoint = false;
    bool is_semi_disjoint = false;

    int n() const { return static_cast<int>(intervals.size()); }
    const rational& left(int i) const { return intervals[i].left; }
    rational right(int i) const { return intervals[i].right(); }
    int color(int i) const { return intervals[i].color; }
};

struct realization {
    std::vector<rational> reps;  // same length and order as instance.intervals
};

enum class solve_method { disjoint, semi_disjoint, two_color };

inline const char* method_name(solve_method m) {
    switch (m) {
        case solve_method::disjoint: return "disjoint";
        case solve_method::semi_disjoint: return "semi_disjoint";
        case solve_method::two_color: return "two_color";
    }
    return "?";
}

struct solve_result {
    rational q_star;
    realization real;
    solve_method method = solve_method::disjoint;
};

inline void recompute_flags(instance& inst) {
    const int n = inst.n();
    inst.is_unit = std::all_of(inst.intervals.begin(), inst.intervals.end(),
                               [](const colored_interval& iv) { return iv.length == 1; });

    inst.is_pairwise_disjoint = true;
    rational max_right;
    for (int i = 0; i < n; ++i) {
        if (i > 0 && inst.left(i) <= max_right) {
            inst.is_pairwise_disjoint = false;
            break;
        }
        max_right = (i == 0) ? inst.right(0) : std::max(max_right, inst.right(i));
    }

    // Semi-disjoint: no two intervals of distinct colors intersect. Track the
    // two best per-color prefix max-rights so the check stays O(n).
    inst.is_semi_disjoint = true;
    std::vector<rational> best(inst.k, rational(-1));
    std::vector<bool> seen(inst.k, false);
    for (int i = 0; i < n && inst.is_semi_disjoint; ++i) {
        for (int c = 0; c < inst.k; ++c) {
            if (c == inst.color(i) || !seen[c]) continue;
            if (best[c] >= inst.left(i)) inst.is_semi_disjoint = false;
        }
        int c = inst.color(i);
        if (!seen[c] || inst.right(i) > best[c]) best[c] = inst.right(i);
        seen[c] = true;
    }
}

// Validates and normalizes raw intervals: sorts by left endpoint (stable),
// translates so the minimum left endpoint is 0, rejects malformed input and
// computes the structure flags.
inline instance validate(const std::vector<colored_interval>& raw, int k) {
    if (raw.empty()) fail(errc::empty_input, "no intervals");
    if (k <= 0) fail(errc::bad_color, "k must be positive");

    instance inst;
    inst.k = k;
    std::vector<int> order(raw.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return raw[a].left < raw[b].left; });

    std::vector<bool> color_seen(k, false);
    for (int idx : order) {
        const colored_interval& iv = raw[idx];
        if (iv.length <= 0) fail(errc::non_positive_length, "interval " + std::to_string(idx));
        if (iv.color < 0 || iv.color >= k)
            fail(errc::bad_color, "interval " + std::to_string(idx) + " has color " +
                                      std::to_string(iv.color) + " outside [0," + std::to_string(k) + ")");
        color_seen[iv.color] = true;
        inst.intervals.push_back(iv);
        inst.input_index.push_back(idx);
    }
    for (int c = 0; c < k; ++c)
        if (!color_seen[c]) fail(errc::missing_color, "color " + std::to_string(c) + " absent");

    for (int i = 0; i + 1 < inst.n(); ++i)
        if (inst.left(i) == inst.left(i + 1) && inst.color(i) == inst.color(i + 1))
            fail(errc::duplicate_same_color_position,
                 "two intervals of color " + std::to_string(inst.color(i)) + " at " + rat_str(inst.left(i)));

    inst.translation = inst.left(0);
    for (auto& iv : inst.intervals) iv.left -= inst.translation;
    recompute_flags(inst);
    return inst;
}

inline void check_realization_shape(const instance& inst, const realization& r) {
    if (static_cast<int>(r.reps.size()) != inst.n())
        fail(errc::malformed_input, "realization size mismatch");
    for (int i = 0; i < inst.n(); ++i)
        if (!inst.intervals[i].contains(r.reps[i]))
            fail(errc::malformed_input, "representative " + std::to_string(i) + " outside its interval");
}

// Length of a minimum color-spanning interval of the representative multiset,
// by a sliding window over the representatives sorted by coordinate. 0 for
// k = 1 (a single point spans the one color).
inline rational mcsi_length(const instance& inst, const realization& r) {
    check_realization_shape(inst, r);
    const int n = inst.n();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return r.reps[a] < r.reps[b]; });

    std::vector<int> count(inst.k, 0);
    int covered = 0;
    bool found = false;
    rational best;
    int lo = 0;
    for (int hi = 0; hi < n; ++hi) {
        if (count[inst.color(order[hi])]++ == 0) ++covered;
        while (covered == inst.k) {
            rational span = r.reps[order[hi]] - r.reps[order[lo]];
            if (!found || span < best) best = span, found = true;
            if (--count[inst.color(order[lo])] == 0) --covered;
            ++lo;
        }
    }
    return best;  // k colors all present in any valid instance, so found holds
}

// k = 2 only: true iff every pair of representatives of distinct colors is at
// distance >= q. The closest opposite-color pair is adjacent in sorted order.
inline bool separation_ok(const instance& inst, const realization& r, const rational& q) {
    if (inst.k != 2) fail(errc::k_not_two, "separation_ok needs k = 2");
    check_realization_shape(inst, r);
    const int n = inst.n();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return r.reps[a] < r.reps[b]; });
    for (int t = 0; t + 1 < n; ++t) {
        int a = order[t], b = order[t + 1];
        if (inst.color(a) != inst.color(b) && r.reps[b] - r.reps[a] < q) return false;
    }
    // Non-adjacent opposite pairs may still be the closest when all points in
    // between share one color; scan each representative against the nearest
    // opposite neighbour on its right.
    rational last[2];
    bool have[2] = {false, false};
    for (int t = 0; t < n; ++t) {
        int i = order[t];
        int other = 1 - inst.color(i);
        if (have[other] && r.reps[i] - last[other] < q) return false;
        last[inst.color(i)] = r.reps[i];
        have[inst.color(i)] = true;
    }
    return true;
}

// Cuts the instance between consecutive intervals whose gap is >= q. Each part
// keeps the parent's coordinates, translation and input indices, so answers
// concatenate positionally.
inline std::vector<instance> split_by_gaps(const instance& inst, const rational& q) {
    std::vector<instance> parts;
    const int n = inst.n();
    int start = 0;
    rational max_right = n > 0 ? inst.right(0) : rational(0);
    for (int i = 1; i <= n; ++i) {
        bool cut = (i == n) || (inst.left(i) - max_right >= q);
        if (cut) {
            instance part;
            part.k = inst.k;
            part.translation = inst.translation;
            part.intervals.assign(inst.intervals.begin() + start, inst.intervals.begin() + i);
            part.input_index.assign(inst.input_index.begin() + start, inst.input_index.begin() + i);
            recompute_flags(part);
            parts.push_back(std::move(part));
            start = i;
        }
        if (i < n) max_right = std::max(max_right, inst.right(i));
    }
    return parts;
}

}  // namespace mcsi

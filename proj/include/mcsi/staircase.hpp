// Dynamic 2-sided dominance queries: after inserting points, dominates(a, b)
// asks whether some inserted point (x, y) has x >= a and y >= b. Only the
// Pareto-maximal points are kept (x strictly increasing, y strictly
// decreasing), which answers the same queries as a priority search tree.
#pragma once

#include <map>
#include <optional>

#include "mcsi/rational.hpp"

namespace mcsi {

template <typename Coord = rational, typename Tag = std::int64_t>
class pareto_staircase {
  public:
    void insert(const Coord& x, const Coord& y, Tag tag) {
        auto it = points_.lower_bound(x);  // first stored x' >= x; it has the max y among them
        if (it != points_.end() && it->second.y >= y) return;  // dominated, drop
        if (it != points_.end() && it->first == x) it = points_.erase(it);  // same x, lower y
        while (it != points_.begin()) {
            auto prev = std::prev(it);
            if (prev->second.y > y) break;
            it = points_.erase(prev);  // newly dominated
        }
        points_.insert(it, {x, payload{y, tag}});
    }

    // Tag of a witness point with x >= a and y >= b, if any.
    std::optional<Tag> dominator(const Coord& a, const Coord& b) const {
        auto it = points_.lower_bound(a);
        if (it == points_.end() || it->second.y < b) return std::nullopt;
        return it->second.tag;
    }

    bool dominates(const Coord& a, const Coord& b) const { return dominator(a, b).has_value(); }

    size_t size() const { return points_.size(); }

  private:
    struct payload {
        Coord y;
        Tag tag;
    };
    std::map<Coord, payload> points_;
};

}  // namespace mcsi

// Vertical ray shooting among horizontal segments with exact rational
// coordinates and per-endpoint openness.
//
// The static index is a segment tree over the x-endpoint slots; every node
// stores the (y, tag) pairs of the segments spanning it in sorted order, so a
// query walks one root-to-leaf path and does a binary search per node:
// O(log^2 n) per query after an O(log n) rational rank lookup. Deletions are
// logical; per-node forwarding pointers skip dead entries in amortized
// constant time.
//
// The dynamic index maintains a logarithmic collection of static blocks
// (inserts rebuild the tail run, amortized O(log^2) per insert) with a purge
// rebuild once the dead segments outnumber the live ones.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "mcsi/errors.hpp"
#include "mcsi/rational.hpp"

namespace mcsi {

struct h_segment {
    rational y;
    rational x_lo, x_hi;
    bool lo_open = false;
    bool hi_open = false;
    std::int64_t tag = 0;
};

struct ray_hit {
    rational y;
    std::int64_t tag = 0;
    std::uint64_t handle = 0;  // meaningful for the dynamic index
};

class ray_shoot_index {
  public:
    ray_shoot_index() = default;

    explicit ray_shoot_index(std::vector<h_segment> segments) : segs_(std::move(segments)) {
        std::vector<rational> xs, ys;
        xs.reserve(segs_.size() * 2);
        ys.reserve(segs_.size());
        for (const auto& s : segs_) {
            if (s.x_lo > s.x_hi) fail(errc::malformed_input, "segment with x_lo > x_hi");
            xs.push_back(s.x_lo);
            xs.push_back(s.x_hi);
            ys.push_back(s.y);
        }
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        std::sort(ys.begin(), ys.end());
        ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
        xs_ = std::move(xs);
        ys_ = std::move(ys);

        size_t slots = 2 * xs_.size() + 1;
        base_ = 1;
        while (base_ < slots) base_ <<= 1;
        nodes_.assign(2 * base_, node{});

        seg_places_.resize(segs_.size());
        for (size_t id = 0; id < segs_.size(); ++id) {
            const auto& s = segs_[id];
            size_t lo = 2 * x_rank(s.x_lo) + (s.lo_open ? 2 : 1);
            size_t hi = 2 * x_rank(s.x_hi) + (s.hi_open ? 0 : 1);
            if (lo > hi) continue;  // degenerate open segment covers no point
            entry e{static_cast<int>(y_rank(s.y)), s.tag, static_cast<int>(id)};
            for (size_t l = lo + base_, r = hi + base_ + 1; l < r; l >>= 1, r >>= 1) {
                if (l & 1) nodes_[l++].entries.push_back(e);
                if (r & 1) nodes_[--r].entries.push_back(e);
            }
        }
        for (size_t node_id = 0; node_id < nodes_.size(); ++node_id) {
            auto& nd = nodes_[node_id];
            std::sort(nd.entries.begin(), nd.entries.end(), [](const entry& a, const entry& b) {
                return std::tie(a.yr, a.tag, a.id) < std::tie(b.yr, b.tag, b.id);
            });
            nd.next.resize(nd.entries.size() + 1);
            for (size_t i = 0; i < nd.next.size(); ++i) nd.next[i] = i;
            for (size_t pos = 0; pos < nd.entries.size(); ++pos)
                seg_places_[nd.entries[pos].id].push_back({node_id, pos});
        }
        alive_.assign(segs_.size(), true);
        alive_count_ = segs_.size();
    }

    size_t size() const { return segs_.size(); }
    size_t alive_count() const { return alive_count_; }
    bool alive(size_t id) const { return !segs_.empty() && alive_[id]; }
    const h_segment& segment(size_t id) const { return segs_[id]; }

    // Lowest live segment strictly above y0 whose x-range contains x; ties in
    // y break toward the smallest tag. Returns the segment id.
    std::optional<size_t> shoot_up(const rational& x, const rational& y0) const {
        if (segs_.empty() || alive_count_ == 0) return std::nullopt;
        int thr = static_cast<int>(std::upper_bound(ys_.begin(), ys_.end(), y0) - ys_.begin());
        if (thr == static_cast<int>(ys_.size())) return std::nullopt;

        size_t slot = slot_of(x);
        const entry* best = nullptr;
        for (size_t v = slot + base_;; v >>= 1) {
            const entry* e = first_alive_at_or_above(nodes_[v], thr);
            if (e && (!best || std::tie(e->yr, e->tag, e->id) < std::tie(best->yr, best->tag, best->id)))
                best = e;
            if (v == 1) break;
        }
        if (!best) return std::nullopt;
        return static_cast<size_t>(best->id);
    }

    void erase(size_t id) {
        if (id >= segs_.size() || !alive_[id]) fail(errc::unknown_handle, "segment not present");
        alive_[id] = false;
        --alive_count_;
        for (auto& [node_id, pos] : seg_places_[id]) nodes_[node_id].next[pos] = pos + 1;
    }

  private:
    struct entry {
        int yr;
        std::int64_t tag;
        int id;
    };
    struct node {
        std::vector<entry> entries;        // sorted by (yr, tag, id)
        mutable std::vector<size_t> next;  // forwarding pointers past dead entries
    };

    size_t x_rank(const rational& v) const {
        return std::lower_bound(xs_.begin(), xs_.end(), v) - xs_.begin();
    }
    size_t y_rank(const rational& v) const {
        return std::lower_bound(ys_.begin(), ys_.end(), v) - ys_.begin();
    }
    size_t slot_of(const rational& x) const {
        size_t u = x_rank(x);
        if (u < xs_.size() && xs_[u] == x) return 2 * u + 1;
        return 2 * u;
    }

    static const entry* first_alive_at_or_above(const node& nd, int thr) {
        if (nd.entries.empty()) return nullptr;
        size_t i = std::lower_bound(nd.entries.begin(), nd.entries.end(), thr,
                                    [](const entry& e, int t) { return e.yr < t; }) -
                   nd.entries.begin();
        while (nd.next[i] != i) {
            nd.next[i] = nd.next[nd.next[i]];
            i = nd.next[i];
        }
        if (i >= nd.entries.size()) return nullptr;
        return &nd.entries[i];
    }

    std::vector<h_segment> segs_;
    std::vector<rational> xs_, ys_;
    std::vector<node> nodes_;
    std::vector<std::vector<std::pair<size_t, size_t>>> seg_places_;
    std::vector<bool> alive_;
    size_t alive_count_ = 0;
    size_t base_ = 1;
};

class dyn_ray_shoot_index {
  public:
    dyn_ray_shoot_index() = default;

    explicit dyn_ray_shoot_index(const std::vector<h_segment>& initial) {
        if (initial.empty()) return;
        std::vector<std::uint64_t> handles;
        for (const auto& s : initial) {
            reg_.push_back({s, true});
            loc_.push_back({-1, 0});
            handles.push_back(next_handle_++);
        }
        alive_ = reg_.size();
        make_block(std::move(handles));
    }

    std::uint64_t insert(const h_segment& s) {
        std::uint64_t h = next_handle_++;
        reg_.push_back({s, true});
        loc_.push_back({-1, 0});
        ++alive_;
        make_block({h});
        merge_tail();
        return h;
    }

    void erase(std::uint64_t handle) {
        if (handle >= reg_.size() || !reg_[handle].alive) fail(errc::unknown_handle, "unknown handle");
        reg_[handle].alive = false;
        --alive_;
        ++dead_;
        auto [bi, id] = loc_[handle];
        blocks_[bi].index.erase(id);
        if (dead_ > alive_ + 16) purge();
    }

    std::optional<ray_hit> shoot_up(const rational& x, const rational& y0) const {
        std::optional<ray_hit> best;
        for (const auto& b : blocks_) {
            auto r = b.index.shoot_up(x, y0);
            if (!r) continue;
            const h_segment& s = b.index.segment(*r);
            ray_hit hit{s.y, s.tag, b.handles[*r]};
            if (!best || std::tie(hit.y, hit.tag) < std::tie(best->y, best->tag)) best = hit;
        }
        return best;
    }

    const h_segment& segment(std::uint64_t handle) const {
        if (handle >= reg_.size()) fail(errc::unknown_handle, "unknown handle");
        return reg_[handle].seg;
    }
    size_t size() const { return alive_; }

  private:
    struct reg_entry {
        h_segment seg;
        bool alive;
    };
    struct block {
        ray_shoot_index index;
        std::vector<std::uint64_t> handles;
    };

    void make_block(std::vector<std::uint64_t> handles) {
        std::vector<h_segment> segs;
        segs.reserve(handles.size());
        for (auto h : handles) segs.push_back(reg_[h].seg);
        block b;
        b.index = ray_shoot_index(std::move(segs));
        b.handles = std::move(handles);
        blocks_.push_back(std::move(b));
        relocate(blocks_.size() - 1);
    }

    void relocate(size_t bi) {
        for (size_t id = 0; id < blocks_[bi].handles.size(); ++id)
            loc_[blocks_[bi].handles[id]] = {static_cast<int>(bi), id};
    }

    void merge_tail() {
        while (blocks_.size() >= 2 &&
               blocks_[blocks_.size() - 2].handles.size() <= blocks_.back().handles.size()) {
            std::vector<std::uint64_t> merged;
            for (size_t t = blocks_.size() - 2; t < blocks_.size(); ++t)
                for (size_t id = 0; id < blocks_[t].handles.size(); ++id)
                    if (blocks_[t].index.alive(id)) merged.push_back(blocks_[t].handles[id]);
            blocks_.pop_back();
            blocks_.pop_back();
            if (!merged.empty()) make_block(std::move(merged));
            else break;
        }
    }

    void purge() {
        std::vector<std::uint64_t> live;
        for (const auto& b : blocks_)
            for (size_t id = 0; id < b.handles.size(); ++id)
                if (b.index.alive(id)) live.push_back(b.handles[id]);
        blocks_.clear();
        dead_ = 0;
        if (!live.empty()) make_block(std::move(live));
    }

    std::vector<reg_entry> reg_;
    std::vector<block> blocks_;
    std::vector<std::pair<int, size_t>> loc_;  // handle -> (block, id in block)
    std::uint64_t next_handle_ = 0;
    size_t alive_ = 0;
    size_t dead_ = 0;
};

}  // namespace mcsi

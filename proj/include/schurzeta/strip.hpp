#pragma once

#include "schurzeta/shape.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace schurzeta {

enum class Approach : std::uint8_t { FromLeft, FromBelow };

inline std::string approach_name(Approach a) {
    return a == Approach::FromLeft ? "left" : "below";
}

/// An edgewise-connected set of boxes with no 2x2 block and at most one box
/// per content. Stored as the path ordered by content; consecutive boxes are
/// adjacent, the successor sitting to the right or above. The starting box
/// (bottommost, leftmost) carries the minimal content, the ending box
/// (topmost, rightmost) the maximal one.
class Strip {
public:
    Strip() = default;

    explicit Strip(std::vector<Box> boxes) {
        if (boxes.empty()) throw std::invalid_argument("Strip: empty box set");
        std::sort(boxes.begin(), boxes.end(),
                  [](const Box& a, const Box& b) { return a.content() < b.content(); });
        for (std::size_t i = 0; i + 1 < boxes.size(); ++i) {
            if (boxes[i].content() == boxes[i + 1].content())
                throw std::invalid_argument("Strip: two boxes of the same content");
            const bool right = boxes[i + 1].row == boxes[i].row && boxes[i + 1].col == boxes[i].col + 1;
            const bool above = boxes[i + 1].col == boxes[i].col && boxes[i + 1].row == boxes[i].row - 1;
            if (!right && !above)
                throw std::invalid_argument("Strip: boxes do not form a connected strip");
        }
        path_ = std::move(boxes);
    }

    const std::vector<Box>& path() const { return path_; }
    std::size_t size() const { return path_.size(); }

    const Box& start() const { return path_.front(); }
    const Box& end() const { return path_.back(); }
    int start_content() const { return path_.front().content(); }
    int end_content() const { return path_.back().content(); }

    bool has_content(int c) const { return c >= start_content() && c <= end_content(); }

    const Box& box_at_content(int c) const {
        if (!has_content(c)) throw std::out_of_range("Strip: no box of content " + std::to_string(c));
        return path_[static_cast<std::size_t>(c - start_content())];
    }

    /// Direction the box of content c is reached from within the strip
    /// (undefined for the starting box).
    Approach internal_approach(int c) const {
        const Box& cur = box_at_content(c);
        const Box& prev = box_at_content(c - 1);
        return cur.row == prev.row ? Approach::FromLeft : Approach::FromBelow;
    }

    PositionedShape shape() const { return PositionedShape(path_); }

    Strip translated(int dr, int dc) const {
        std::vector<Box> out;
        out.reserve(path_.size());
        for (const Box& b : path_) out.push_back(Box{b.row + dr, b.col + dc});
        return Strip(std::move(out));
    }

    bool operator==(const Strip&) const = default;

private:
    std::vector<Box> path_;
};

/// Ordered list of disjoint strips covering a parent diagram, each starting
/// on the left or bottom perimeter and ending on the right or top perimeter.
/// Construction derives the per-content approach direction (a starting box on
/// the bottom perimeter counts as approached from below, a left-perimeter one
/// from the left) and rejects decompositions where boxes of equal content
/// disagree. Contents absent from the parent get the fixed default, recorded
/// here so splices use one choice per content.
class OutsideDecomposition {
public:
    OutsideDecomposition(PositionedShape parent, std::vector<Strip> strips,
                         Approach default_approach = Approach::FromLeft,
                         std::map<int, Approach> presets = {})
        : parent_(std::move(parent)),
          strips_(std::move(strips)),
          approach_(std::move(presets)),
          default_(default_approach) {
        std::vector<Box> all;
        for (const Strip& s : strips_)
            for (const Box& b : s.path()) all.push_back(b);
        PositionedShape covered{all};  // throws on overlap
        if (!(covered == parent_))
            throw std::invalid_argument("OutsideDecomposition: strips do not cover the parent");

        for (const Strip& s : strips_) {
            const bool bottom = parent_.on_bottom_perimeter(s.start());
            const bool left = parent_.on_left_perimeter(s.start());
            if (!bottom && !left)
                throw std::invalid_argument(
                    "OutsideDecomposition: strip does not start on the left/bottom perimeter");
            if (!parent_.on_top_perimeter(s.end()) && !parent_.on_right_perimeter(s.end()))
                throw std::invalid_argument(
                    "OutsideDecomposition: strip does not end on the right/top perimeter");
            record_approach(s.start_content(), bottom ? Approach::FromBelow : Approach::FromLeft);
            for (int c = s.start_content() + 1; c <= s.end_content(); ++c)
                record_approach(c, s.internal_approach(c));
        }
    }

    static OutsideDecomposition by_rows(const PositionedShape& parent) {
        std::vector<Strip> strips;
        for (const auto& [row, cols] : parent.by_row()) {
            std::vector<Box> boxes;
            for (int c : cols) boxes.push_back(Box{row, c});
            strips.emplace_back(std::move(boxes));
        }
        return OutsideDecomposition(parent, std::move(strips));
    }

    /// Outside decompositions are exactly the choices of one approach
    /// direction per content: each box takes its predecessor per the chosen
    /// direction, and the maximal chains are the strips.
    static OutsideDecomposition from_approaches(const PositionedShape& parent,
                                                const std::map<int, Approach>& dirs,
                                                Approach default_approach = Approach::FromLeft) {
        const auto dir_of = [&](int content) {
            const auto it = dirs.find(content);
            return it == dirs.end() ? default_approach : it->second;
        };
        const auto predecessor = [&](const Box& b) -> std::optional<Box> {
            const Box p = dir_of(b.content()) == Approach::FromLeft ? Box{b.row, b.col - 1}
                                                                    : Box{b.row + 1, b.col};
            if (parent.contains(p)) return p;
            return std::nullopt;
        };
        std::vector<Strip> strips;
        for (const Box& start : parent.boxes()) {
            if (predecessor(start)) continue;
            std::vector<Box> path{start};
            for (;;) {
                const Box& cur = path.back();
                const Box right{cur.row, cur.col + 1};
                const Box above{cur.row - 1, cur.col};
                if (parent.contains(right) && dir_of(right.content()) == Approach::FromLeft)
                    path.push_back(right);
                else if (parent.contains(above) && dir_of(above.content()) == Approach::FromBelow)
                    path.push_back(above);
                else
                    break;
            }
            strips.emplace_back(std::move(path));
        }
        return OutsideDecomposition(parent, std::move(strips), default_approach);
    }

    static OutsideDecomposition by_columns(const PositionedShape& parent) {
        std::map<int, std::vector<Box>> cols;
        for (const Box& b : parent.boxes()) cols[b.col].push_back(b);
        std::vector<Strip> strips;
        for (auto& [col, boxes] : cols) strips.emplace_back(std::move(boxes));
        return OutsideDecomposition(parent, std::move(strips));
    }

    const PositionedShape& parent() const { return parent_; }
    const std::vector<Strip>& strips() const { return strips_; }

    Approach approach(int content) const {
        const auto it = approach_.find(content);
        return it == approach_.end() ? default_ : it->second;
    }

private:
    void record_approach(int content, Approach a) {
        const auto [it, inserted] = approach_.emplace(content, a);
        if (!inserted && it->second != a)
            throw std::invalid_argument(
                "OutsideDecomposition: boxes of content " + std::to_string(content) +
                " are approached from different directions");
    }

    PositionedShape parent_;
    std::vector<Strip> strips_;
    std::map<int, Approach> approach_;
    Approach default_;
};

/// Result of the # splice: a strip-shaped diagram, the empty diagram, or
/// undefined (a first-class value so matrix builders can reject loudly).
struct SpliceResult {
    enum class Kind { Shape, Empty, Undefined } kind = Kind::Undefined;
    std::optional<Strip> strip;  // present iff kind == Shape

    bool defined() const { return kind != Kind::Undefined; }
    PositionedShape shape() const {
        switch (kind) {
            case Kind::Shape: return strip->shape();
            case Kind::Empty: return PositionedShape{};
            case Kind::Undefined: break;
        }
        throw std::logic_error("SpliceResult: shape of an undefined splice");
    }
};

namespace detail {

inline Box step_from(const Box& prev, Approach a) {
    return a == Approach::FromLeft ? Box{prev.row, prev.col + 1} : Box{prev.row - 1, prev.col};
}

inline Box step_back(const Box& next, Approach a) {
    return a == Approach::FromLeft ? Box{next.row, next.col - 1} : Box{next.row + 1, next.col};
}

}  // namespace detail

/// theta_i # theta_j: superimpose by content (sliding theta_i along the
/// diagonals; when the content sets are disjoint, bridge the gap following
/// the decomposition's approach directions) and keep every box between the
/// ending box of theta_i and the starting box of theta_j inclusive. Returns
/// Empty when the ending box is edge-connected below/left of the starting
/// box, Undefined when it is below/left but not edge-connected. Boxes keep
/// ambient contents (content == col - row throughout).
inline SpliceResult hash_strips(const Strip& si, const Strip& sj, const OutsideDecomposition& dec) {
    const int lo = sj.start_content();
    const int hi = si.end_content();
    if (lo == hi + 1) return SpliceResult{SpliceResult::Kind::Empty, std::nullopt};
    if (lo > hi + 1) return SpliceResult{SpliceResult::Kind::Undefined, std::nullopt};

    // Superimposed path anchored at theta_j's own coordinates.
    std::map<int, Box> at;
    for (const Box& b : sj.path()) at[b.content()] = b;

    if (si.end_content() >= sj.start_content() && si.start_content() <= sj.end_content()) {
        // Shared contents: slide theta_i so coincident contents land together.
        const int c0 = std::max(si.start_content(), sj.start_content());
        const Box& a = si.box_at_content(c0);
        const Box& b = sj.box_at_content(c0);
        const int dr = b.row - a.row, dc = b.col - a.col;
        for (const Box& x : si.path()) {
            const Box moved{x.row + dr, x.col + dc};
            const auto it = at.find(moved.content());
            if (it == at.end())
                at[moved.content()] = moved;
            else if (!(it->second == moved))
                throw std::invalid_argument("hash_strips: shared contents do not superimpose");
        }
    } else {
        // Disjoint contents with theta_i above: bridge upward from theta_j's
        // ending box, then append theta_i slid onto the bridge head.
        Box cur = sj.end();
        for (int c = sj.end_content() + 1; c < si.start_content(); ++c) {
            cur = detail::step_from(cur, dec.approach(c));
            at[c] = cur;
        }
        const Box head = detail::step_from(cur, dec.approach(si.start_content()));
        const int dr = head.row - si.start().row, dc = head.col - si.start().col;
        for (const Box& x : si.path()) at[x.content()] = Box{x.row + dr, x.col + dc};
    }

    std::vector<Box> kept;
    for (int c = lo; c <= hi; ++c) kept.push_back(at.at(c));
    return SpliceResult{SpliceResult::Kind::Shape, Strip(std::move(kept))};
}

/// theta # rho with rho the single box of content 0: extends the strip down
/// to the main diagonal along the decomposition's approach directions.
/// Undefined when the strip ends below content 0.
inline SpliceResult bar_strip(const Strip& s, const OutsideDecomposition& dec) {
    if (s.end_content() < -1) return SpliceResult{SpliceResult::Kind::Undefined, std::nullopt};
    if (s.end_content() == -1) return SpliceResult{SpliceResult::Kind::Empty, std::nullopt};
    if (s.start_content() <= 0) {
        std::vector<Box> kept;
        for (int c = 0; c <= s.end_content(); ++c) kept.push_back(s.box_at_content(c));
        return SpliceResult{SpliceResult::Kind::Shape, Strip(std::move(kept))};
    }
    // Walk down from the starting box to content 0, inverting the approach steps.
    std::vector<Box> boxes(s.path());
    Box cur = s.start();
    for (int c = s.start_content(); c > 0; --c) {
        cur = detail::step_back(cur, dec.approach(c));
        boxes.push_back(cur);
    }
    return SpliceResult{SpliceResult::Kind::Shape, Strip(std::move(boxes))};
}

/// (bar theta_p, bar theta_q): both bars juxtaposed with their content-0
/// boxes on adjacent diagonal positions, bar theta_p's immediately above and
/// to the left of bar theta_q's. Both strips follow the same approach map,
/// so their paths are parallel and never collide.
inline PositionedShape juxtapose(const Strip& bar_p, const Strip& bar_q) {
    if (bar_p.start_content() != 0 || bar_q.start_content() != 0)
        throw std::invalid_argument("juxtapose: bars must start at content 0");
    const Box anchor = bar_q.start();
    const int dr = anchor.row - 1 - bar_p.start().row;
    const int dc = anchor.col - 1 - bar_p.start().col;
    std::vector<Box> boxes(bar_q.path());
    for (const Box& b : bar_p.path()) boxes.push_back(Box{b.row + dr, b.col + dc});
    return PositionedShape(std::move(boxes));
}

}  // namespace schurzeta

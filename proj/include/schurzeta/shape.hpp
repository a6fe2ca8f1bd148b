#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace schurzeta {

struct Box {
    int row = 0;
    int col = 0;

    int content() const { return col - row; }
    auto operator<=>(const Box&) const = default;
};

/// A finite set of integer-coordinate boxes, kept in row-major order.
/// Rows may start anywhere (including non-positive coordinates), which is
/// what strip splices and juxtapositions produce; only relative positions
/// and contents matter to the evaluators.
class PositionedShape {
public:
    PositionedShape() = default;

    explicit PositionedShape(std::vector<Box> boxes) : boxes_(std::move(boxes)) {
        std::sort(boxes_.begin(), boxes_.end());
        if (std::adjacent_find(boxes_.begin(), boxes_.end()) != boxes_.end())
            throw std::invalid_argument("PositionedShape: duplicate box");
    }

    static PositionedShape shifted(const std::vector<int>& lambda, const std::vector<int>& mu = {});
    static PositionedShape straight(const std::vector<int>& lambda, const std::vector<int>& mu = {});

    const std::vector<Box>& boxes() const { return boxes_; }
    std::size_t size() const { return boxes_.size(); }
    bool empty() const { return boxes_.empty(); }

    bool contains(int row, int col) const {
        return std::binary_search(boxes_.begin(), boxes_.end(), Box{row, col});
    }
    bool contains(const Box& b) const { return contains(b.row, b.col); }

    /// Index into boxes() or -1.
    int index_of(int row, int col) const {
        const auto it = std::lower_bound(boxes_.begin(), boxes_.end(), Box{row, col});
        if (it == boxes_.end() || it->row != row || it->col != col) return -1;
        return static_cast<int>(it - boxes_.begin());
    }

    /// Boxes with no neighbour below nor to the right.
    std::vector<Box> corners() const {
        std::vector<Box> out;
        for (const Box& b : boxes_)
            if (!contains(b.row + 1, b.col) && !contains(b.row, b.col + 1)) out.push_back(b);
        return out;
    }

    bool on_left_perimeter(const Box& b) const { return !contains(b.row, b.col - 1); }
    bool on_right_perimeter(const Box& b) const { return !contains(b.row, b.col + 1); }
    bool on_top_perimeter(const Box& b) const { return !contains(b.row - 1, b.col); }
    bool on_bottom_perimeter(const Box& b) const { return !contains(b.row + 1, b.col); }

    PositionedShape translated(int drow, int dcol) const {
        std::vector<Box> out;
        out.reserve(boxes_.size());
        for (const Box& b : boxes_) out.push_back(Box{b.row + drow, b.col + dcol});
        return PositionedShape(std::move(out));
    }

    std::multiset<int> contents() const {
        std::multiset<int> out;
        for (const Box& b : boxes_) out.insert(b.content());
        return out;
    }

    std::map<int, std::vector<int>> by_row() const {
        std::map<int, std::vector<int>> out;
        for (const Box& b : boxes_) out[b.row].push_back(b.col);
        return out;
    }

    bool operator==(const PositionedShape&) const = default;

    std::string debug_string() const;

private:
    std::vector<Box> boxes_;  // sorted row-major
};

inline PositionedShape PositionedShape::shifted(const std::vector<int>& lambda,
                                                const std::vector<int>& mu) {
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 0) throw std::invalid_argument("shifted shape: negative part");
        if (i + 1 < lambda.size() && lambda[i] <= lambda[i + 1])
            throw std::invalid_argument("shifted shape: parts must be strictly decreasing");
    }
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] < 0) throw std::invalid_argument("shifted shape: negative inner part");
        if (i + 1 < mu.size() && mu[i] <= mu[i + 1] && !(mu[i] == 0 && mu[i + 1] == 0))
            throw std::invalid_argument("shifted shape: inner parts must be strictly decreasing");
        const int outer = i < lambda.size() ? lambda[i] : 0;
        if (mu[i] > outer) throw std::invalid_argument("shifted shape: mu not contained in lambda");
    }
    std::vector<Box> boxes;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        const int row = static_cast<int>(i) + 1;
        const int inner = i < mu.size() ? mu[i] : 0;
        // SD(lambda) row i occupies columns i..lambda_i+i-1.
        for (int j = row + inner; j <= lambda[i] + row - 1; ++j) boxes.push_back(Box{row, j});
    }
    return PositionedShape(std::move(boxes));
}

inline PositionedShape PositionedShape::straight(const std::vector<int>& lambda,
                                                 const std::vector<int>& mu) {
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 0) throw std::invalid_argument("straight shape: negative part");
        if (i + 1 < lambda.size() && lambda[i] < lambda[i + 1])
            throw std::invalid_argument("straight shape: parts must be weakly decreasing");
    }
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] < 0) throw std::invalid_argument("straight shape: negative inner part");
        if (i + 1 < mu.size() && mu[i] < mu[i + 1])
            throw std::invalid_argument("straight shape: inner parts must be weakly decreasing");
        const int outer = i < lambda.size() ? lambda[i] : 0;
        if (mu[i] > outer) throw std::invalid_argument("straight shape: mu not contained in lambda");
    }
    std::vector<Box> boxes;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        const int row = static_cast<int>(i) + 1;
        const int inner = i < mu.size() ? mu[i] : 0;
        for (int j = inner + 1; j <= lambda[i]; ++j) boxes.push_back(Box{row, j});
    }
    return PositionedShape(std::move(boxes));
}

inline std::string PositionedShape::debug_string() const {
    if (boxes_.empty()) return "(empty)";
    int rmin = boxes_.front().row, rmax = boxes_.front().row;
    int cmin = boxes_.front().col, cmax = boxes_.front().col;
    for (const Box& b : boxes_) {
        rmin = std::min(rmin, b.row);
        rmax = std::max(rmax, b.row);
        cmin = std::min(cmin, b.col);
        cmax = std::max(cmax, b.col);
    }
    std::string out;
    for (int r = rmin; r <= rmax; ++r) {
        for (int c = cmin; c <= cmax; ++c) out += contains(r, c) ? '#' : '.';
        out += '\n';
    }
    return out;
}

enum class ShapeMode { Shifted, Straight };

inline std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    if (text.empty()) return parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("parse_shape: malformed part '" + tok + "'");
        parts.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return parts;
}

/// Grammar: "l1,l2,...[/m1,m2,...]"; empty text is the empty shape.
inline PositionedShape parse_shape(const std::string& text, ShapeMode mode) {
    const auto slash = text.find('/');
    const std::vector<int> lambda = parse_parts(slash == std::string::npos ? text : text.substr(0, slash));
    const std::vector<int> mu = slash == std::string::npos ? std::vector<int>{} : parse_parts(text.substr(slash + 1));
    return mode == ShapeMode::Shifted ? PositionedShape::shifted(lambda, mu)
                                      : PositionedShape::straight(lambda, mu);
}

}  // namespace schurzeta

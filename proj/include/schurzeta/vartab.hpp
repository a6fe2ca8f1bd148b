#pragma once

#include "schurzeta/rational.hpp"
#include "schurzeta/shape.hpp"

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace schurzeta {

/// Exponent attached to one box: integer, rational or complex.
struct VarValue {
    std::variant<std::int64_t, Rational, std::complex<double>> v;

    VarValue() : v(std::int64_t{0}) {}
    VarValue(std::int64_t i) : v(i) {}
    VarValue(int i) : v(std::int64_t{i}) {}
    VarValue(Rational q) : v(std::move(q)) {}
    VarValue(std::complex<double> z) : v(z) {}

    bool is_integer() const {
        if (std::holds_alternative<std::int64_t>(v)) return true;
        if (const auto* q = std::get_if<Rational>(&v)) return denominator(*q) == 1;
        return false;
    }

    std::int64_t as_integer() const {
        if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
        if (const auto* q = std::get_if<Rational>(&v)) {
            if (denominator(*q) == 1) return static_cast<std::int64_t>(numerator(*q));
        }
        throw std::domain_error("exact mode requires integer exponents");
    }

    std::complex<double> as_complex() const {
        if (const auto* i = std::get_if<std::int64_t>(&v)) return {static_cast<double>(*i), 0.0};
        if (const auto* q = std::get_if<Rational>(&v))
            return {static_cast<double>(numerator(*q)) / static_cast<double>(denominator(*q)), 0.0};
        return std::get<std::complex<double>>(v);
    }
};

/// Assignment of exponents to the boxes of a shape. The diag-constant
/// variant keys exponents by content (the a_{j-i} tableaux), so the same
/// assignment transports to spliced and juxtaposed shapes.
class VarTableau {
public:
    VarTableau() = default;

    static VarTableau diag(std::map<int, VarValue> by_content) {
        VarTableau t;
        t.diag_constant_ = true;
        t.by_content_ = std::move(by_content);
        return t;
    }

    static VarTableau by_box(std::map<std::pair<int, int>, VarValue> by_box) {
        VarTableau t;
        t.by_box_ = std::move(by_box);
        return t;
    }

    /// Diag-constant from a contiguous list a_0, a_1, ..., a_{k-1}.
    static VarTableau diag_row(const std::vector<std::int64_t>& a, int first_content = 0) {
        std::map<int, VarValue> m;
        for (std::size_t i = 0; i < a.size(); ++i) m[first_content + static_cast<int>(i)] = VarValue(a[i]);
        return diag(std::move(m));
    }

    bool diag_constant() const { return diag_constant_; }

    const VarValue& at(const Box& b) const {
        if (diag_constant_) {
            const auto it = by_content_.find(b.content());
            if (it == by_content_.end())
                throw std::invalid_argument("VarTableau: no exponent for content " +
                                            std::to_string(b.content()));
            return it->second;
        }
        const auto it = by_box_.find({b.row, b.col});
        if (it == by_box_.end())
            throw std::invalid_argument("VarTableau: no exponent for box (" + std::to_string(b.row) +
                                        "," + std::to_string(b.col) + ")");
        return it->second;
    }

    bool covers(const PositionedShape& shape) const {
        for (const Box& b : shape.boxes()) {
            if (diag_constant_) {
                if (!by_content_.count(b.content())) return false;
            } else if (!by_box_.count({b.row, b.col})) {
                return false;
            }
        }
        return true;
    }

    std::vector<std::int64_t> integer_exponents(const PositionedShape& shape) const {
        std::vector<std::int64_t> out;
        out.reserve(shape.size());
        for (const Box& b : shape.boxes()) out.push_back(at(b).as_integer());
        return out;
    }

    std::vector<std::complex<double>> complex_exponents(const PositionedShape& shape) const {
        std::vector<std::complex<double>> out;
        out.reserve(shape.size());
        for (const Box& b : shape.boxes()) out.push_back(at(b).as_complex());
        return out;
    }

private:
    bool diag_constant_ = false;
    std::map<int, VarValue> by_content_;
    std::map<std::pair<int, int>, VarValue> by_box_;
};

}  // namespace schurzeta

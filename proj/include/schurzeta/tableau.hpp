#pragma once

#include "schurzeta/rational.hpp"
#include "schurzeta/shape.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace schurzeta {

enum class Family : std::uint8_t { PSST, QSST, SP, SO };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::PSST: return "psst";
        case Family::QSST: return "qsst";
        case Family::SP: return "sp";
        case Family::SO: return "so";
    }
    return "?";
}

inline Family parse_family(const std::string& s) {
    if (s == "psst" || s == "p") return Family::PSST;
    if (s == "qsst" || s == "q") return Family::QSST;
    if (s == "sp") return Family::SP;
    if (s == "so") return Family::SO;
    throw std::invalid_argument("unknown tableau family '" + s + "'");
}

/// Rule set plus alphabet cap. For the marked families the cap bounds the
/// entry values (truncation at N); for SP/SO it is the intrinsic alphabet
/// bound of [N-bar] resp. [N-bar] + infinity.
struct TableauKind {
    Family family = Family::QSST;
    int cap = 0;
};

enum class EntryTag : std::uint8_t { Plain, Primed, Barred, Inf };

struct Entry {
    int value = 0;  // ignored for Inf
    EntryTag tag = EntryTag::Plain;

    bool operator==(const Entry&) const = default;
};

/// Position in the total order of the kind's alphabet:
/// marked   1' < 1 < 2' < 2 < ...
/// sp / so  1 < 1b < 2 < 2b < ... ( < inf )
inline int entry_key(const TableauKind& kind, const Entry& e) {
    switch (e.tag) {
        case EntryTag::Primed: return 2 * e.value - 1;
        case EntryTag::Plain:
            return (kind.family == Family::SP || kind.family == Family::SO) ? 2 * e.value - 1
                                                                            : 2 * e.value;
        case EntryTag::Barred: return 2 * e.value;
        case EntryTag::Inf: return 2 * kind.cap + 1;
    }
    return 0;
}

/// |entry| as a rational (num, den): |i'| = |i| = i, |ibar| = 1/i, |inf| = 1.
inline std::pair<long, long> entry_weight_base(const Entry& e) {
    switch (e.tag) {
        case EntryTag::Primed:
        case EntryTag::Plain: return {e.value, 1};
        case EntryTag::Barred: return {1, e.value};
        case EntryTag::Inf: return {1, 1};
    }
    return {1, 1};
}

inline std::string entry_to_string(const Entry& e) {
    switch (e.tag) {
        case EntryTag::Plain: return std::to_string(e.value);
        case EntryTag::Primed: return std::to_string(e.value) + "'";
        case EntryTag::Barred: return std::to_string(e.value) + "~";
        case EntryTag::Inf: return "inf";
    }
    return "?";
}

inline Entry parse_entry(const std::string& s) {
    if (s == "inf") return Entry{0, EntryTag::Inf};
    if (s.empty()) throw std::invalid_argument("empty tableau entry");
    if (s.back() == '\'') return Entry{std::stoi(s.substr(0, s.size() - 1)), EntryTag::Primed};
    if (s.back() == '~') return Entry{std::stoi(s.substr(0, s.size() - 1)), EntryTag::Barred};
    return Entry{std::stoi(s), EntryTag::Plain};
}

/// Ascending alphabet of the kind.
inline std::vector<Entry> alphabet(const TableauKind& kind) {
    std::vector<Entry> out;
    const bool marked = kind.family == Family::PSST || kind.family == Family::QSST;
    for (int v = 1; v <= kind.cap; ++v) {
        if (marked) {
            out.push_back(Entry{v, EntryTag::Primed});
            out.push_back(Entry{v, EntryTag::Plain});
        } else {
            out.push_back(Entry{v, EntryTag::Plain});
            out.push_back(Entry{v, EntryTag::Barred});
        }
    }
    if (kind.family == Family::SO) out.push_back(Entry{0, EntryTag::Inf});
    return out;
}

/// A filling of shape.boxes() (row-major order).
using Tableau = std::vector<Entry>;

namespace detail {

inline bool entry_in_alphabet(const TableauKind& kind, const Entry& e) {
    switch (kind.family) {
        case Family::PSST:
        case Family::QSST:
            return (e.tag == EntryTag::Plain || e.tag == EntryTag::Primed) && e.value >= 1 &&
                   e.value <= kind.cap;
        case Family::SP:
            return (e.tag == EntryTag::Plain || e.tag == EntryTag::Barred) && e.value >= 1 &&
                   e.value <= kind.cap;
        case Family::SO:
            return e.tag == EntryTag::Inf ||
                   ((e.tag == EntryTag::Plain || e.tag == EntryTag::Barred) && e.value >= 1 &&
                    e.value <= kind.cap);
    }
    return false;
}

/// Checks the rules that mention only boxes[i] and already-filled boxes
/// (indices < i in row-major order). Sound as an incremental filter because
/// every rule is a pairwise or per-row/column condition on earlier boxes.
inline bool placement_ok(const TableauKind& kind, const PositionedShape& shape,
                         const Tableau& filling, int i) {
    const Box& b = shape.boxes()[i];
    const Entry& e = filling[i];
    const bool marked = kind.family == Family::PSST || kind.family == Family::QSST;
    const int key = entry_key(kind, e);

    // Weak increase along rows; weak (marked) or strict (sp/so) down columns,
    // against immediate filled neighbours. The infinity symbols of an
    // so-tableau form a vertical strip, so they may repeat down a column.
    if (const int li = shape.index_of(b.row, b.col - 1); li >= 0 && li < i) {
        if (entry_key(kind, filling[li]) > key) return false;
    }
    if (const int ai = shape.index_of(b.row - 1, b.col); ai >= 0 && ai < i) {
        const int above = entry_key(kind, filling[ai]);
        const bool inf_pair = filling[ai].tag == EntryTag::Inf && e.tag == EntryTag::Inf;
        if (marked ? above > key : (above >= key && !inf_pair)) return false;
    }

    if (marked) {
        // PST2: at most one i' per row; PST3: at most one unprimed i per column.
        if (e.tag == EntryTag::Primed) {
            for (int j = 0; j < i; ++j)
                if (shape.boxes()[j].row == b.row && filling[j] == e) return false;
        } else {
            for (int j = 0; j < i; ++j)
                if (shape.boxes()[j].col == b.col && filling[j] == e) return false;
        }
        // PST4: no primes on the main diagonal (content 0).
        if (kind.family == Family::PSST && e.tag == EntryTag::Primed && b.content() == 0)
            return false;
    } else {
        // SP3 / SO3: a box of content -i holds entries >= i+1 (unbarred).
        if (b.content() < 0 && e.tag != EntryTag::Inf) {
            const int min_value = -b.content() + 1;
            if (key < entry_key(kind, Entry{min_value, EntryTag::Plain})) return false;
        }
        // SO4: at most one infinity per row.
        if (e.tag == EntryTag::Inf) {
            for (int j = 0; j < i; ++j)
                if (shape.boxes()[j].row == b.row && filling[j].tag == EntryTag::Inf) return false;
        }
    }
    return true;
}

}  // namespace detail

inline bool is_valid(const TableauKind& kind, const PositionedShape& shape, const Tableau& filling) {
    if (filling.size() != shape.size())
        throw std::invalid_argument("is_valid: filling does not cover the shape");
    for (const Entry& e : filling)
        if (!detail::entry_in_alphabet(kind, e))
            throw std::invalid_argument("is_valid: entry outside the kind's alphabet");
    for (int i = 0; i < static_cast<int>(filling.size()); ++i)
        if (!detail::placement_ok(kind, shape, filling, i)) return false;
    return true;
}

/// Emits every valid tableau exactly once, in row-major lexicographic order
/// (alphabet order per box). The visitor may return void or bool; returning
/// false stops the enumeration.
template <typename Visit>
void enumerate_tableaux(const TableauKind& kind, const PositionedShape& shape, Visit&& visit) {
    const std::vector<Entry> letters = alphabet(kind);
    const int n = static_cast<int>(shape.size());
    Tableau filling(n);
    bool stop = false;

    auto emit = [&](const Tableau& t) {
        if constexpr (std::is_same_v<std::invoke_result_t<Visit&, const Tableau&>, bool>) {
            if (!visit(t)) stop = true;
        } else {
            visit(t);
        }
    };

    std::function<void(int)> rec = [&](int i) {
        if (stop) return;
        if (i == n) {
            emit(filling);
            return;
        }
        for (const Entry& e : letters) {
            filling[i] = e;
            if (detail::placement_ok(kind, shape, filling, i)) rec(i + 1);
            if (stop) return;
        }
    };
    rec(0);
}

inline BigInt count_tableaux(const TableauKind& kind, const PositionedShape& shape) {
    BigInt n = 0;
    enumerate_tableaux(kind, shape, [&](const Tableau&) { ++n; });
    return n;
}

}  // namespace schurzeta

#include "huosp/occupancy.hpp"

#include <algorithm>
#include <cmath>

#include "huosp/topk.hpp"

namespace huosp {

Thresholds Thresholds::absolute(std::uint32_t minsupAbs, double minuo) {
    Thresholds t;
    t.minsupAbs = minsupAbs;
    t.minuo = minuo;
    return t;
}

Thresholds Thresholds::relative(double minsupRel, double minuo, std::size_t dbSize) {
    if (!(minsupRel > 0.0) || minsupRel > 1.0) {
        throw InvalidThresholdsError("relative minsup must be in (0,1]");
    }
    Thresholds t;
    t.minsupRel = minsupRel;
    t.minsupAbs = static_cast<std::uint32_t>(
        std::max<double>(1.0, std::ceil(minsupRel * static_cast<double>(dbSize))));
    t.minuo = minuo;
    return t;
}

void Thresholds::validate(std::size_t dbSize) const {
    if (minsupAbs < 1) throw InvalidThresholdsError("minsup must be >= 1");
    if (dbSize > 0 && minsupAbs > dbSize) {
        throw InvalidThresholdsError("minsup " + std::to_string(minsupAbs) +
                                     " exceeds database size " + std::to_string(dbSize));
    }
    if (!(minuo > 0.0) || minuo > 1.0) {
        throw InvalidThresholdsError("minuo must be in (0,1]");
    }
}

double uo_in_sequence(const Pattern& t, const QSequence& s) {
    if (!(s.su > 0.0)) throw ZeroUtilitySequenceError();
    return pattern_utility(t, s) / s.su;
}

double uo_at_position(const Pattern& t, const QSequence& s, std::size_t p) {
    if (p < 1 || p > s.size()) throw PositionOutOfRangeError(p, s.size());
    if (!(s.su > 0.0)) throw ZeroUtilitySequenceError();
    double best = -1.0;
    for (const Occurrence& o : find_occurrences(t, s)) {
        if (o.positions.back() < p) best = std::max(best, o.utility);
    }
    if (best < 0.0) throw NoOccurrenceError();
    return best / s.su;
}

double ruo_at_position(const Pattern& t, const QSequence& s, std::size_t p) {
    if (p < 1 || p > s.size()) throw PositionOutOfRangeError(p, s.size());
    if (!(s.su > 0.0)) throw ZeroUtilitySequenceError();
    const Item& last = t.last_item();
    double tail = 0.0;
    for (const QItem& q : s.itemsets[p - 1].items) {
        if (last < q.item) tail += q.utility;
    }
    return (tail + s.suffix_utility(p - 1)) / s.su;
}

double peuo_at(const Pattern& t, const QSequence& s, std::size_t p) {
    const double ruo = ruo_at_position(t, s, p);
    if (!(ruo > 0.0)) return 0.0;
    return uo_at_position(t, s, p) + ruo;
}

double peuo_in_sequence(const Pattern& t, const QSequence& s) {
    auto occs = find_occurrences(t, s);
    if (occs.empty()) throw NoOccurrenceError();
    std::vector<std::uint32_t> endings;
    for (const Occurrence& o : occs) endings.push_back(o.positions.back());
    std::sort(endings.begin(), endings.end());
    endings.erase(std::unique(endings.begin(), endings.end()), endings.end());
    double best = 0.0;
    for (std::uint32_t end : endings) best = std::max(best, peuo_at(t, s, end + 1));
    return best;
}

namespace {

template <typename PerSeq>
void for_each_containing(const Pattern& t, const QSequenceDatabase& db, PerSeq&& fn) {
    bool any = false;
    for (const QSequence& s : db.sequences) {
        if (contains_pattern(s, t)) {
            fn(s);
            any = true;
        }
    }
    if (!any) throw NoOccurrenceError();
}

void require_generator(const Pattern& l, const Pattern& t) {
    if (!is_one_item_extension(l, t)) throw NotAGeneratorError();
}

}  // namespace

double uo_total(const Pattern& t, const QSequenceDatabase& db) {
    double sum = 0.0;
    std::uint32_t n = 0;
    for_each_containing(t, db, [&](const QSequence& s) {
        sum += uo_in_sequence(t, s);
        ++n;
    });
    return sum / n;
}

double peuo_total(const Pattern& t, const QSequenceDatabase& db, std::uint32_t minsupAbs) {
    double sum = 0.0;
    for_each_containing(t, db, [&](const QSequence& s) { sum += peuo_in_sequence(t, s); });
    return sum / minsupAbs;
}

double rsuo_total(const Pattern& t, const Pattern& l, const QSequenceDatabase& db,
                  std::uint32_t minsupAbs) {
    require_generator(l, t);
    double sum = 0.0;
    for (const QSequence& s : db.sequences) {
        if (contains_pattern(s, t)) sum += peuo_in_sequence(l, s);
    }
    return sum / minsupAbs;
}

double tpuo_total(const Pattern& t, const QSequenceDatabase& db, std::uint32_t minsupAbs) {
    BoundedTopK top(minsupAbs);
    for_each_containing(t, db, [&](const QSequence& s) { top.push(peuo_in_sequence(t, s)); });
    return top.sum() / minsupAbs;
}

double tsuo_total(const Pattern& t, const Pattern& l, const QSequenceDatabase& db,
                  std::uint32_t minsupAbs) {
    require_generator(l, t);
    BoundedTopK top(minsupAbs);
    for (const QSequence& s : db.sequences) {
        if (contains_pattern(s, t)) top.push(peuo_in_sequence(l, s));
    }
    return top.sum() / minsupAbs;
}

std::uint32_t pes_total(const Pattern& t, const QSequenceDatabase& db) {
    std::uint32_t n = 0;
    for (const QSequence& s : db.sequences) {
        if (contains_pattern(s, t) && peuo_in_sequence(t, s) > 0.0) ++n;
    }
    return n;
}

std::uint32_t rss_total(const Pattern& t, const Pattern& l, const QSequenceDatabase& db) {
    require_generator(l, t);
    std::uint32_t n = 0;
    for (const QSequence& s : db.sequences) {
        if (contains_pattern(s, t) && peuo_in_sequence(l, s) > 0.0) ++n;
    }
    return n;
}

bool is_one_item_extension(const Pattern& l, const Pattern& t) {
    if (t.item_count() != l.item_count() + 1) return false;
    const std::size_t nl = l.itemsets.size();
    if (t.itemsets.size() == nl) {
        for (std::size_t i = 0; i + 1 < nl; ++i) {
            if (t.itemsets[i] != l.itemsets[i]) return false;
        }
        const auto& lastL = l.itemsets.back();
        const auto& lastT = t.itemsets.back();
        if (lastT.size() != lastL.size() + 1) return false;
        if (!std::equal(lastL.begin(), lastL.end(), lastT.begin())) return false;
        return lastL.back() < lastT.back();
    }
    if (t.itemsets.size() == nl + 1) {
        for (std::size_t i = 0; i < nl; ++i) {
            if (t.itemsets[i] != l.itemsets[i]) return false;
        }
        return t.itemsets.back().size() == 1;
    }
    return false;
}

}  // namespace huosp

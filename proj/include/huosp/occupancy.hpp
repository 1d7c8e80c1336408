#pragma once

#include <cstdint>
#include <optional>

#include "huosp/model.hpp"

namespace huosp {

/// Tolerance used for threshold comparisons on utility occupancy, so that
/// floating-point accumulation never flips an emit/prune decision.
inline constexpr double kUoEpsilon = 1e-9;

/// Mining thresholds. minsupAbs is the absolute sequence count used
/// everywhere internally; minsupRel records the relative form when the
/// caller supplied one.
struct Thresholds {
    std::uint32_t minsupAbs = 1;
    std::optional<double> minsupRel;
    double minuo = 0.0;

    static Thresholds absolute(std::uint32_t minsupAbs, double minuo);
    /// Converts a relative support in (0,1] via ceil(rel * dbSize), minimum 1.
    static Thresholds relative(double minsupRel, double minuo, std::size_t dbSize);

    /// Throws InvalidThresholdsError unless 1 <= minsupAbs (<= dbSize when the
    /// database is non-empty) and 0 < minuo <= 1.
    void validate(std::size_t dbSize) const;
};

// ---------------------------------------------------------------------------
// Definition-level occupancy measures. These recompute everything from the
// database and exist as the semantic ground truth the incremental
// chain-based engine is tested against.
// ---------------------------------------------------------------------------

/// uo(t,s) = u(t,s) / u(s). Throws NoOccurrenceError / ZeroUtilitySequenceError.
double uo_in_sequence(const Pattern& t, const QSequence& s);

/// Best occurrence utility among occurrences ending within the first p
/// itemsets (p is a 1-based prefix length), divided by u(s).
double uo_at_position(const Pattern& t, const QSequence& s, std::size_t p);

/// Average of uo_in_sequence over the sequences containing t.
double uo_total(const Pattern& t, const QSequenceDatabase& db);

/// Remaining utility occupancy after position p for extending t: the utility
/// of items ranked after t's last item inside itemset p plus all itemsets
/// after p, divided by u(s). Extensions of t can only pick up items from this
/// region, so it bounds what any descendant can add at p.
double ruo_at_position(const Pattern& t, const QSequence& s, std::size_t p);

/// uo(t,s,p) + ruo(t,s,p) when ruo > 0, else 0.
double peuo_at(const Pattern& t, const QSequence& s, std::size_t p);

/// Max of peuo_at over the ending positions of t's occurrences in s.
double peuo_in_sequence(const Pattern& t, const QSequence& s);

/// Sum of per-sequence PEUO over containing sequences, divided by minsupAbs
/// (not by sup(t)).
double peuo_total(const Pattern& t, const QSequenceDatabase& db, std::uint32_t minsupAbs);

/// Width-pruning bound for t generated from l by one extension: the
/// generator's per-sequence PEUO summed over sequences that also contain t,
/// divided by minsupAbs. Throws NotAGeneratorError.
double rsuo_total(const Pattern& t, const Pattern& l, const QSequenceDatabase& db,
                  std::uint32_t minsupAbs);

/// Like peuo_total but summing only the minsupAbs largest per-sequence values.
double tpuo_total(const Pattern& t, const QSequenceDatabase& db, std::uint32_t minsupAbs);

/// Width-pruning analog of tpuo_total over the generator's values.
double tsuo_total(const Pattern& t, const Pattern& l, const QSequenceDatabase& db,
                  std::uint32_t minsupAbs);

/// Number of sequences where t still has positive remaining utility at some
/// matched position (an upper bound on any extension's support).
std::uint32_t pes_total(const Pattern& t, const QSequenceDatabase& db);

/// Width-pruning analog of pes_total over the generator l.
std::uint32_t rss_total(const Pattern& t, const Pattern& l, const QSequenceDatabase& db);

/// True iff t equals l extended by exactly one item (either appended to l's
/// last itemset or as a new singleton itemset).
bool is_one_item_extension(const Pattern& l, const Pattern& t);

}  // namespace huosp

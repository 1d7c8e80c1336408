#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "huosp/model.hpp"

namespace huosp {

using ItemId = std::uint32_t;

/// Pattern in encoded form. Item ids are assigned so that id comparison
/// equals the global item order.
using CPattern = std::vector<std::vector<ItemId>>;

/// One itemset of an encoded sequence. items ascending; utils aligned;
/// tail[k] = sum of utils[k..] (tail.back() == 0).
struct CItemset {
    std::vector<ItemId> items;
    std::vector<double> utils;
    std::vector<double> tail;

    /// Slot of item, or npos if absent.
    std::size_t slot_of(ItemId item) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

struct CSequence {
    double utility = 0.0;               ///< u(s)
    std::vector<CItemset> itemsets;
    std::vector<double> suffix;         ///< suffix[p] = utility of itemsets after p
};

/// Indexed view of a QSequenceDatabase used by the mining engine.
struct CDatabase {
    std::vector<std::string> tokens;    ///< id -> token, ids ascending in item order
    std::vector<CSequence> seqs;        ///< aligned with the source database order

    std::size_t item_count() const { return tokens.size(); }
    Pattern decode(const CPattern& p) const;
};

CDatabase encode(const QSequenceDatabase& db);

/// One chain element: the pattern has an occurrence whose last matched item
/// sits in itemset `tid`; `uo` is the best such occurrence's utility over
/// u(s); `ruo` is the remaining utility after that item (rest of itemset tid
/// past the pattern's last item, plus all later itemsets) over u(s).
struct UolElement {
    std::uint32_t tid = 0;
    double uo = 0.0;
    double ruo = 0.0;
};

/// Elements of one sequence, ascending by tid. `seq` indexes CDatabase::seqs.
struct UolGroup {
    std::uint32_t seq = 0;
    std::vector<UolElement> elems;
};

struct UolChain {
    std::vector<UolGroup> groups;
};

/// Per-pattern summary: the pattern, its support, its total utility
/// occupancy, and the chain the numbers were computed from.
struct UoTable {
    CPattern prefix;
    std::uint32_t sup = 0;
    double uo = 0.0;
    UolChain uoc;
};

enum class ExtKind { IExt, SExt };

/// Per-candidate aggregates collected while scanning the projected database,
/// one contribution per containing sequence.
struct CandidateAgg {
    ItemId item = 0;
    std::uint32_t rssCount = 0;          ///< sequences where the parent can reach this item
    double rsuoSum = 0.0;                ///< sum of the parent's per-sequence PEUO
    std::vector<double> topPeuo;         ///< minsup largest parent PEUO values, descending
};

struct ExtensionCandidates {
    std::vector<CandidateAgg> ie;        ///< ascending by item id
    std::vector<CandidateAgg> se;
};

/// Reusable per-thread scratch for scan_extensions (epoch-stamped dedupe).
class ScanScratch {
public:
    void reset(std::size_t itemCount);

private:
    friend ExtensionCandidates scan_extensions(const UoTable&, const CDatabase&,
                                               const std::vector<char>*, std::uint32_t, bool,
                                               ScanScratch&);
    std::vector<std::uint32_t> ieEpoch_, seEpoch_;
    std::vector<std::uint32_t> ieSlot_, seSlot_;
    std::uint32_t epoch_ = 0;
};

/// Builds the chain and table of a single-item pattern.
UoTable build_singleton_table(const CDatabase& db, ItemId item);

/// Scans the projected database of `table` and collects I-/S-extension
/// candidates with their width-pruning aggregates. `kept`, when non-null,
/// masks items allowed as candidates. Top-PEUO collections are filled only
/// when collectTop is set (they are needed only by the TSUO bound).
ExtensionCandidates scan_extensions(const UoTable& table, const CDatabase& db,
                                    const std::vector<char>* kept, std::uint32_t minsupAbs,
                                    bool collectTop, ScanScratch& scratch);

/// Builds the child table for table.prefix extended with `item`. Sequences
/// with no legal placement are dropped. Throws IllegalExtensionError when the
/// child has no occurrence at all.
UoTable extend_table(const UoTable& table, ItemId item, ExtKind kind, const CDatabase& db);

/// PEUO evaluated over the chain: per sequence the max of uo+ruo over
/// elements with ruo > 0, summed and divided by minsupAbs.
double table_peuo(const UoTable& table, std::uint32_t minsupAbs);

/// Like table_peuo but summing only the minsupAbs largest per-sequence values.
double table_tpuo(const UoTable& table, std::uint32_t minsupAbs);

/// Number of sequences whose per-sequence PEUO is positive.
std::uint32_t table_pes(const UoTable& table);

}  // namespace huosp

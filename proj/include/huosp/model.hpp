#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "huosp/errors.hpp"

namespace huosp {

/// An item token. Non-empty, no whitespace and no '[' or ']'.
///
/// Items are totally ordered: all-digit tokens compare numerically and come
/// before non-numeric tokens, which compare lexicographically. Numerically
/// equal tokens ("7" vs "007") fall back to byte comparison so the order is
/// strict.
struct Item {
    std::string id;

    bool operator==(const Item& o) const { return id == o.id; }
    bool operator!=(const Item& o) const { return id != o.id; }
    bool operator<(const Item& o) const;
};

bool item_less(std::string_view a, std::string_view b);
bool valid_item_token(std::string_view token);

/// Per-item external utility (profit per quantity unit). All entries > 0.
class ExternalUtilityTable {
public:
    void set(const std::string& item, double utility);
    bool contains(const std::string& item) const { return entries_.count(item) != 0; }
    std::optional<double> find(const std::string& item) const;
    /// Strict lookup; throws UnknownItemError when the item has no entry.
    double at(const std::string& item) const;
    std::size_t size() const { return entries_.size(); }
    const std::unordered_map<std::string, double>& entries() const { return entries_; }

private:
    std::unordered_map<std::string, double> entries_;
};

/// An item occurrence with its quantity (internal utility). The utility
/// field caches quantity * external utility and is filled at database build.
struct QItem {
    Item item;
    std::uint32_t quantity = 1;
    double utility = 0.0;
};

/// Non-empty list of QItems, strictly ascending in the item order.
struct QItemset {
    std::vector<QItem> items;

    bool contains(const Item& item) const;
    double utility() const;
};

/// An identified quantitative sequence with cached utility figures.
struct QSequence {
    std::int64_t sid = 0;
    std::vector<QItemset> itemsets;
    double su = 0.0;  ///< total utility, computed at build

    std::size_t size() const { return itemsets.size(); }
    /// Utility of itemsets strictly after 0-based position p (0 for the last one).
    double suffix_utility(std::size_t p) const { return suffix_[p]; }
    double itemset_utility(std::size_t p) const { return itemsetUtility_[p]; }

    friend class DatabaseBuilder;

private:
    std::vector<double> itemsetUtility_;
    std::vector<double> suffix_;
};

/// The input corpus: sequences plus the external utility table.
struct QSequenceDatabase {
    std::vector<QSequence> sequences;
    ExternalUtilityTable utable;
    double totalUtility = 0.0;

    std::size_t size() const { return sequences.size(); }
    bool empty() const { return sequences.empty(); }
};

/// Assembles and validates a QSequenceDatabase: sorts itemsets canonically,
/// rejects duplicates and unknown items (unless permissive), computes all
/// cached utilities.
class DatabaseBuilder {
public:
    using RawItemset = std::vector<std::pair<std::string, std::uint32_t>>;

    DatabaseBuilder& external_utility(const std::string& item, double utility);
    /// In permissive mode unknown items get external utility 1.
    DatabaseBuilder& permissive(bool on);
    DatabaseBuilder& add_sequence(std::int64_t sid, const std::vector<RawItemset>& itemsets);
    QSequenceDatabase build();

private:
    ExternalUtilityTable table_;
    bool permissive_ = false;
    std::vector<std::pair<std::int64_t, std::vector<RawItemset>>> raw_;
};

/// A sequential pattern: itemsets of items, no quantities. Items within an
/// itemset are strictly ascending.
struct Pattern {
    std::vector<std::vector<Item>> itemsets;

    std::size_t itemset_count() const { return itemsets.size(); }
    std::size_t item_count() const;
    const Item& last_item() const { return itemsets.back().back(); }
    bool operator==(const Pattern& o) const { return itemsets == o.itemsets; }

    /// Parses "a b -1 c" style token text (itemsets separated by -1).
    static Pattern parse(std::string_view text);
    /// Renders back to "a b -1 c" token form.
    std::string tokens() const;
};

/// Canonical pattern order: total item count, then element-wise by
/// (itemset index, item). Used for deterministic output.
bool pattern_canonical_less(const Pattern& a, const Pattern& b);

/// One match of a pattern in a sequence: 0-based itemset positions, strictly
/// increasing, one per pattern itemset, plus the utility of the matched items.
struct Occurrence {
    std::vector<std::uint32_t> positions;
    double utility = 0.0;
};

double item_utility(const QItem& qitem, const ExternalUtilityTable& utable);
double sequence_utility(const QSequence& s, const ExternalUtilityTable& utable);
double database_utility(const QSequenceDatabase& db);

/// Every distinct position-list occurrence of t in s, in lexicographic
/// position order. Empty when t is not contained in s.
std::vector<Occurrence> find_occurrences(const Pattern& t, const QSequence& s);

/// True iff t has at least one occurrence in s.
bool contains_pattern(const QSequence& s, const Pattern& t);

/// Maximum occurrence utility of t in s. Throws NoOccurrenceError if t is not
/// contained in s.
double pattern_utility(const Pattern& t, const QSequence& s);

/// Number of sequences containing t (each counted once).
std::uint32_t support(const Pattern& t, const QSequenceDatabase& db);

/// Per-item containing-sequence counts, once per sequence.
std::unordered_map<std::string, std::uint32_t> count_item_supports(const QSequenceDatabase& db);

}  // namespace huosp

#include "huosp/model.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace huosp {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

bool item_less(std::string_view a, std::string_view b) {
    const bool na = all_digits(a), nb = all_digits(b);
    if (na != nb) return na;  // numeric ids precede non-numeric ones
    if (na) {
        std::string_view ta = a.substr(std::min(a.find_first_not_of('0'), a.size() - 1));
        std::string_view tb = b.substr(std::min(b.find_first_not_of('0'), b.size() - 1));
        if (ta.size() != tb.size()) return ta.size() < tb.size();
        if (ta != tb) return ta < tb;
        return a < b;  // numerically equal ("07" vs "7"): break ties on bytes
    }
    return a < b;
}

bool Item::operator<(const Item& o) const { return item_less(id, o.id); }

bool valid_item_token(std::string_view token) {
    if (token.empty()) return false;
    for (char c : token) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '[' || c == ']') return false;
    }
    return true;
}

void ExternalUtilityTable::set(const std::string& item, double utility) {
    if (!(utility > 0.0)) {
        throw InvalidParamsError("external utility of '" + item + "' must be > 0");
    }
    entries_[item] = utility;
}

std::optional<double> ExternalUtilityTable::find(const std::string& item) const {
    auto it = entries_.find(item);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

double ExternalUtilityTable::at(const std::string& item) const {
    auto it = entries_.find(item);
    if (it == entries_.end()) throw UnknownItemError(item);
    return it->second;
}

bool QItemset::contains(const Item& item) const {
    auto it = std::lower_bound(items.begin(), items.end(), item,
                               [](const QItem& q, const Item& i) { return q.item < i; });
    return it != items.end() && it->item == item;
}

double QItemset::utility() const {
    double u = 0.0;
    for (const QItem& q : items) u += q.utility;
    return u;
}

DatabaseBuilder& DatabaseBuilder::external_utility(const std::string& item, double utility) {
    table_.set(item, utility);
    return *this;
}

DatabaseBuilder& DatabaseBuilder::permissive(bool on) {
    permissive_ = on;
    return *this;
}

DatabaseBuilder& DatabaseBuilder::add_sequence(std::int64_t sid,
                                               const std::vector<RawItemset>& itemsets) {
    raw_.emplace_back(sid, itemsets);
    return *this;
}

QSequenceDatabase DatabaseBuilder::build() {
    QSequenceDatabase db;
    db.utable = table_;
    std::set<std::int64_t> sids;
    for (auto& [sid, rawSets] : raw_) {
        if (sid < 0) throw InvalidParamsError("sequence id must be non-negative");
        if (!sids.insert(sid).second) {
            throw InvalidParamsError("duplicate sequence id " + std::to_string(sid));
        }
        if (rawSets.empty()) throw InvalidParamsError("sequence " + std::to_string(sid) + " is empty");
        QSequence seq;
        seq.sid = sid;
        for (const RawItemset& raw : rawSets) {
            if (raw.empty()) {
                throw InvalidParamsError("empty itemset in sequence " + std::to_string(sid));
            }
            QItemset set;
            for (const auto& [token, qty] : raw) {
                if (!valid_item_token(token)) {
                    throw InvalidParamsError("invalid item token '" + token + "'");
                }
                if (qty < 1) {
                    throw InvalidParamsError("quantity of '" + token + "' must be >= 1");
                }
                auto ext = db.utable.find(token);
                if (!ext) {
                    if (!permissive_) throw UnknownItemError(token);
                    db.utable.set(token, 1.0);
                    ext = 1.0;
                }
                set.items.push_back(QItem{Item{token}, qty, qty * *ext});
            }
            std::sort(set.items.begin(), set.items.end(),
                      [](const QItem& a, const QItem& b) { return a.item < b.item; });
            for (std::size_t i = 1; i < set.items.size(); ++i) {
                if (set.items[i - 1].item == set.items[i].item) {
                    throw InvalidParamsError("duplicate item '" + set.items[i].item.id +
                                             "' in an itemset of sequence " + std::to_string(sid));
                }
            }
            seq.itemsets.push_back(std::move(set));
        }
        const std::size_t l = seq.itemsets.size();
        seq.itemsetUtility_.resize(l);
        seq.suffix_.resize(l);
        for (std::size_t p = 0; p < l; ++p) seq.itemsetUtility_[p] = seq.itemsets[p].utility();
        double suffix = 0.0;
        for (std::size_t p = l; p-- > 0;) {
            seq.suffix_[p] = suffix;
            suffix += seq.itemsetUtility_[p];
        }
        seq.su = suffix;
        db.totalUtility += seq.su;
        db.sequences.push_back(std::move(seq));
    }
    return db;
}

std::size_t Pattern::item_count() const {
    std::size_t n = 0;
    for (const auto& s : itemsets) n += s.size();
    return n;
}

Pattern Pattern::parse(std::string_view text) {
    Pattern p;
    std::vector<Item> current;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        if (tok == "-2") break;
        if (tok == "-1") {
            if (current.empty()) throw InvalidParamsError("empty itemset in pattern text");
            p.itemsets.push_back(std::move(current));
            current.clear();
            continue;
        }
        if (!valid_item_token(tok)) throw InvalidParamsError("invalid item token '" + tok + "'");
        current.push_back(Item{tok});
    }
    if (!current.empty()) p.itemsets.push_back(std::move(current));
    if (p.itemsets.empty()) throw InvalidParamsError("empty pattern text");
    for (auto& set : p.itemsets) {
        for (std::size_t i = 1; i < set.size(); ++i) {
            if (!(set[i - 1] < set[i])) {
                throw InvalidParamsError("pattern itemset not strictly ascending");
            }
        }
    }
    return p;
}

std::string Pattern::tokens() const {
    std::string out;
    for (std::size_t i = 0; i < itemsets.size(); ++i) {
        if (i) out += " -1 ";
        for (std::size_t j = 0; j < itemsets[i].size(); ++j) {
            if (j) out += ' ';
            out += itemsets[i][j].id;
        }
    }
    return out;
}

bool pattern_canonical_less(const Pattern& a, const Pattern& b) {
    const std::size_t na = a.item_count(), nb = b.item_count();
    if (na != nb) return na < nb;
    std::size_t ia = 0, ja = 0, ib = 0, jb = 0;
    while (ia < a.itemsets.size() && ib < b.itemsets.size()) {
        if (ia != ib) return ia < ib;
        const Item& x = a.itemsets[ia][ja];
        const Item& y = b.itemsets[ib][jb];
        if (x != y) return x < y;
        if (++ja == a.itemsets[ia].size()) { ++ia; ja = 0; }
        if (++jb == b.itemsets[ib].size()) { ++ib; jb = 0; }
    }
    return ib < b.itemsets.size();
}

double item_utility(const QItem& qitem, const ExternalUtilityTable& utable) {
    return qitem.quantity * utable.at(qitem.item.id);
}

double sequence_utility(const QSequence& s, const ExternalUtilityTable& utable) {
    double u = 0.0;
    for (const QItemset& set : s.itemsets) {
        for (const QItem& q : set.items) u += item_utility(q, utable);
    }
    return u;
}

double database_utility(const QSequenceDatabase& db) {
    double u = 0.0;
    for (const QSequence& s : db.sequences) u += sequence_utility(s, db.utable);
    return u;
}

namespace {

// Utility of pattern itemset `w` matched inside sequence itemset `c`,
// or nullopt if w is not a subset of c.
std::optional<double> match_utility(const std::vector<Item>& w, const QItemset& c) {
    double u = 0.0;
    std::size_t k = 0;
    for (const Item& item : w) {
        while (k < c.items.size() && c.items[k].item < item) ++k;
        if (k == c.items.size() || !(c.items[k].item == item)) return std::nullopt;
        u += c.items[k].utility;
    }
    return u;
}

}  // namespace

std::vector<Occurrence> find_occurrences(const Pattern& t, const QSequence& s) {
    std::vector<Occurrence> out;
    std::vector<std::uint32_t> positions;
    std::function<void(std::size_t, std::size_t, double)> step =
        [&](std::size_t patIdx, std::size_t from, double acc) {
            if (patIdx == t.itemsets.size()) {
                out.push_back(Occurrence{positions, acc});
                return;
            }
            for (std::size_t p = from; p < s.itemsets.size(); ++p) {
                if (auto u = match_utility(t.itemsets[patIdx], s.itemsets[p])) {
                    positions.push_back(static_cast<std::uint32_t>(p));
                    step(patIdx + 1, p + 1, acc + *u);
                    positions.pop_back();
                }
            }
        };
    step(0, 0, 0.0);
    return out;
}

bool contains_pattern(const QSequence& s, const Pattern& t) {
    // Greedy earliest match suffices for containment.
    std::size_t from = 0;
    for (const auto& w : t.itemsets) {
        bool found = false;
        for (std::size_t p = from; p < s.itemsets.size(); ++p) {
            if (match_utility(w, s.itemsets[p])) {
                from = p + 1;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

double pattern_utility(const Pattern& t, const QSequence& s) {
    auto occs = find_occurrences(t, s);
    if (occs.empty()) throw NoOccurrenceError();
    double best = occs.front().utility;
    for (const Occurrence& o : occs) best = std::max(best, o.utility);
    return best;
}

std::uint32_t support(const Pattern& t, const QSequenceDatabase& db) {
    std::uint32_t n = 0;
    for (const QSequence& s : db.sequences) {
        if (contains_pattern(s, t)) ++n;
    }
    return n;
}

std::unordered_map<std::string, std::uint32_t> count_item_supports(const QSequenceDatabase& db) {
    std::unordered_map<std::string, std::uint32_t> counts;
    std::set<std::string> seen;
    for (const QSequence& s : db.sequences) {
        seen.clear();
        for (const QItemset& set : s.itemsets) {
            for (const QItem& q : set.items) {
                if (seen.insert(q.item.id).second) ++counts[q.item.id];
            }
        }
    }
    return counts;
}

}  // namespace huosp

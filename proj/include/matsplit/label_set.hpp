#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace matsplit {

// An immutable sorted set of positive element labels. Sets whose labels all
// fit in 1..64 carry a bitmask so that the subset/intersection tests used in
// the enumeration inner loops stay cheap.
class LabelSet {
  public:
    LabelSet() = default;
    LabelSet(std::initializer_list<int> labels);
    explicit LabelSet(std::vector<int> labels);  // sorts and deduplicates

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    bool contains(int label) const;

    LabelSet with(int label) const;
    LabelSet without(int label) const;
    LabelSet unite(const LabelSet& other) const;
    LabelSet intersect(const LabelSet& other) const;
    LabelSet difference(const LabelSet& other) const;
    bool subset_of(const LabelSet& other) const;
    bool proper_subset_of(const LabelSet& other) const;
    bool disjoint_with(const LabelSet& other) const;

    const std::vector<int>& labels() const { return labels_; }
    auto begin() const { return labels_.begin(); }
    auto end() const { return labels_.end(); }
    int front() const { return labels_.front(); }
    int back() const { return labels_.back(); }

    std::string to_string() const;  // "{1,4,5,8}"

    bool operator==(const LabelSet& other) const { return labels_ == other.labels_; }
    // Lexicographic on the sorted label vectors.
    bool operator<(const LabelSet& other) const { return labels_ < other.labels_; }

  private:
    std::vector<int> labels_;
    std::uint64_t mask_ = 0;  // valid iff masked_
    bool masked_ = false;

    void rebuild_mask();
};

// Canonical enumeration order: by size, then lexicographically.
bool size_lex_less(const LabelSet& x, const LabelSet& y);

}  // namespace matsplit

#include "matsplit/label_set.hpp"

#include <algorithm>

namespace matsplit {

LabelSet::LabelSet(std::initializer_list<int> labels)
    : LabelSet(std::vector<int>(labels)) {}

LabelSet::LabelSet(std::vector<int> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
    rebuild_mask();
}

void LabelSet::rebuild_mask() {
    masked_ = labels_.empty() || (labels_.front() >= 1 && labels_.back() <= 64);
    mask_ = 0;
    if (!masked_) return;
    for (int l : labels_) mask_ |= std::uint64_t{1} << (l - 1);
}

bool LabelSet::contains(int label) const {
    if (masked_) {
        if (label < 1 || label > 64) return false;
        return mask_ >> (label - 1) & 1;
    }
    return std::binary_search(labels_.begin(), labels_.end(), label);
}

LabelSet LabelSet::with(int label) const {
    if (contains(label)) return *this;
    std::vector<int> out = labels_;
    out.insert(std::upper_bound(out.begin(), out.end(), label), label);
    LabelSet result;
    result.labels_ = std::move(out);
    result.rebuild_mask();
    return result;
}

LabelSet LabelSet::without(int label) const {
    LabelSet result;
    result.labels_.reserve(labels_.size());
    for (int l : labels_) {
        if (l != label) result.labels_.push_back(l);
    }
    result.rebuild_mask();
    return result;
}

LabelSet LabelSet::unite(const LabelSet& other) const {
    LabelSet result;
    std::set_union(labels_.begin(), labels_.end(), other.labels_.begin(), other.labels_.end(),
                   std::back_inserter(result.labels_));
    result.rebuild_mask();
    return result;
}

LabelSet LabelSet::intersect(const LabelSet& other) const {
    LabelSet result;
    std::set_intersection(labels_.begin(), labels_.end(), other.labels_.begin(),
                          other.labels_.end(), std::back_inserter(result.labels_));
    result.rebuild_mask();
    return result;
}

LabelSet LabelSet::difference(const LabelSet& other) const {
    LabelSet result;
    std::set_difference(labels_.begin(), labels_.end(), other.labels_.begin(),
                        other.labels_.end(), std::back_inserter(result.labels_));
    result.rebuild_mask();
    return result;
}

bool LabelSet::subset_of(const LabelSet& other) const {
    if (masked_ && other.masked_) return (mask_ & ~other.mask_) == 0;
    return std::includes(other.labels_.begin(), other.labels_.end(), labels_.begin(),
                         labels_.end());
}

bool LabelSet::proper_subset_of(const LabelSet& other) const {
    return size() < other.size() && subset_of(other);
}

bool LabelSet::disjoint_with(const LabelSet& other) const {
    if (masked_ && other.masked_) return (mask_ & other.mask_) == 0;
    return intersect(other).empty();
}

std::string LabelSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(labels_[i]);
    }
    out += '}';
    return out;
}

bool size_lex_less(const LabelSet& x, const LabelSet& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
}

}  // namespace matsplit

#include "twocenter/prefix_hulls.hpp"

namespace twocenter {

PrefixHullIndex build_prefix_hulls(std::span<const Point> seq, Point anchor, double r,
                                   Winding winding) {
    HullBuilder builder(r, anchor, winding);
    PrefixHullIndex index;
    index.radius_ = r;
    index.anchor_ = anchor;
    index.n_ = seq.size();
    index.versions_.reserve(seq.size() + 1);
    index.versions_.push_back(builder.version());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (!builder.insert(seq[i])) {
            index.death_ = i + 1;
            // Remaining points still have to respect the order.
            for (std::size_t j = i + 1; j < seq.size(); ++j) builder.insert(seq[j]);
            break;
        }
        index.versions_.push_back(builder.version());
    }
    index.storage_ = builder.storage();
    return index;
}

PrefixHullIndex build_suffix_hulls(std::span<const Point> seq, Point anchor, double r,
                                   Winding winding) {
    std::vector<Point> rev(seq.rbegin(), seq.rend());
    return build_prefix_hulls(rev, anchor, r, winding == Winding::Ccw ? Winding::Cw : Winding::Ccw);
}

bool PrefixHullIndex::exists(std::size_t i) const {
    if (i > n_) throw IndexOutOfRange();
    return i < versions_.size();
}

std::optional<CircularHull> PrefixHullIndex::hull_at(std::size_t i) const {
    if (!exists(i)) return std::nullopt;
    if (i == 0) return CircularHull::everywhere(radius_);
    return CircularHull::from_cycle(radius_, storage_.to_vector(versions_[i]));
}

std::vector<Point> PrefixHullIndex::vertices_at(std::size_t i) const {
    if (!exists(i)) return {};
    return storage_.to_vector(versions_[i]);
}

std::optional<std::pair<Point, Point>> PrefixHullIndex::frontier(std::size_t i) const {
    if (!exists(i) || i == 0) return std::nullopt;
    const auto v = versions_[i];
    return std::pair{storage_.front(v), storage_.back(v)};
}

}  // namespace twocenter

#include "ordext/universe.hpp"

#include <unordered_set>

namespace ordext {

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
        throw ValidationError("universe must be nonempty");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels_) {
        if (l.empty()) {
            throw ValidationError("universe labels must be nonempty");
        }
        if (!seen.insert(l).second) {
            throw ValidationError("duplicate universe label '" + l + "'");
        }
    }
}

std::optional<int> Universe::index_of(std::string_view label) const {
    for (int i = 0; i < size(); ++i) {
        if (labels_[static_cast<std::size_t>(i)] == label) {
            return i;
        }
    }
    return std::nullopt;
}

UniversePtr make_universe(std::vector<std::string> labels) {
    return std::make_shared<const Universe>(std::move(labels));
}

UniversePtr letters(int n) {
    if (n < 1 || n > 26) {
        throw ValidationError("letters(n) requires 1 <= n <= 26");
    }
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        labels.emplace_back(1, static_cast<char>('a' + i));
    }
    return make_universe(std::move(labels));
}

}  // namespace ordext

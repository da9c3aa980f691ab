#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordext/errors.hpp"

namespace ordext {

/// Ordered sequence of distinct element labels. All relations index into a
/// Universe; labels appear only at the I/O boundary.
class Universe {
public:
    explicit Universe(std::vector<std::string> labels);

    int size() const noexcept { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<int> index_of(std::string_view label) const;

    bool operator==(const Universe& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::vector<std::string> labels);

/// Universe of the first n lower-case letters (n <= 26).
UniversePtr letters(int n);

inline bool same_universe(const UniversePtr& a, const UniversePtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace ordext

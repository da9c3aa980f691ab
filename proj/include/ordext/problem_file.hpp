#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "ordext/orders.hpp"

namespace ordext {

/// Parsed form of the line-oriented problem format:
///
///   # comment
///   universe: a b c d
///   order: a<b c<d
///   partition: {b c} {d a}
///   force: b<a
///
/// `order:` pairs are strict; the reflexive-transitive closure is applied on
/// load and the file is rejected (with the offending cycle) when the closure
/// breaks antisymmetry. `partition:` blocks must cover the universe exactly.
struct ProblemFile {
    UniversePtr universe;
    PartialOrder order;
    std::optional<Partition> partition;
    std::optional<std::pair<int, int>> forced;
};

ProblemFile parse_problem(std::istream& in);
ProblemFile parse_problem_text(const std::string& text);
ProblemFile load_problem(const std::string& path);

/// Canonical text: closed strict pairs sorted by index, canonical blocks.
/// parse(serialize(x)) reproduces x; serialize(parse(f)) is the identity on
/// canonical files.
std::string serialize_problem(const ProblemFile& pf);

}  // namespace ordext

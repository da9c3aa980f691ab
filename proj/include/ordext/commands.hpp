#pragma once

#include <iosfwd>
#include <string>

namespace ordext::cli {

enum class Format { Text, Machine };

struct Options {
    std::string file;
    int max_n = 4;
    bool show_intersection = false;
    Format format = Format::Text;
};

// Exit codes, stable for scripting:
//   0  success / extension exists
//   1  input error (parse or validation)
//   2  domain-level negative (nonexistence, precondition, formula mismatch)
//   3  capacity (universe above an enumeration cap)
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitDomainNegative = 2;
inline constexpr int kExitCapacity = 3;

int cmd_check(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_extend(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_enumerate(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_intersect(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const Options& opts, std::ostream& out, std::ostream& err);

}  // namespace ordext::cli

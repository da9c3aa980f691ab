#include "ordext/problem_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ordext {

namespace {

std::vector<std::string> split_ws(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

std::string strip(const std::string& line) {
    std::string s = line;
    if (const auto hash = s.find('#'); hash != std::string::npos) {
        s.erase(hash);
    }
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

void check_label_token(const std::string& label, int line) {
    if (label.empty()) {
        throw ParseError(line, "empty label");
    }
    if (label.find_first_of("<{}:#") != std::string::npos) {
        throw ParseError(line, "label '" + label + "' contains a reserved character");
    }
}

int resolve(const UniversePtr& u, const std::string& label, int line) {
    if (!u) {
        throw ParseError(line, "universe line must come first");
    }
    if (const auto idx = u->index_of(label)) {
        return *idx;
    }
    throw ParseError(line, "label '" + label + "' is not in the universe");
}

std::pair<std::string, std::string> split_strict_pair(const std::string& tok, int line) {
    const auto lt = tok.find('<');
    if (lt == std::string::npos || tok.find('<', lt + 1) != std::string::npos) {
        throw ParseError(line, "expected a strict pair like a<b, got '" + tok + "'");
    }
    return {tok.substr(0, lt), tok.substr(lt + 1)};
}

}  // namespace

ProblemFile parse_problem(std::istream& in) {
    UniversePtr universe;
    std::vector<std::pair<int, int>> strict_pairs;
    std::optional<Partition> partition;
    std::optional<std::pair<int, int>> forced;
    int partition_line = 0;

    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string text = strip(raw);
        if (text.empty()) {
            continue;
        }
        const auto colon = text.find(':');
        if (colon == std::string::npos) {
            throw ParseError(line, "expected 'key: value'");
        }
        const std::string key = text.substr(0, colon);
        const std::string rest = text.substr(colon + 1);
        if (key == "universe") {
            if (universe) {
                throw ParseError(line, "duplicate universe line");
            }
            std::vector<std::string> labels = split_ws(rest);
            for (const auto& l : labels) {
                check_label_token(l, line);
            }
            try {
                universe = make_universe(std::move(labels));
            } catch (const ValidationError& e) {
                throw ParseError(line, e.what());
            }
        } else if (key == "order") {
            for (const std::string& tok : split_ws(rest)) {
                const auto [la, lb] = split_strict_pair(tok, line);
                const int a = resolve(universe, la, line);
                const int b = resolve(universe, lb, line);
                if (a == b) {
                    throw ParseError(line, "strict pair '" + tok + "' relates an element to itself");
                }
                strict_pairs.emplace_back(a, b);
            }
        } else if (key == "partition") {
            if (partition) {
                throw ParseError(line, "duplicate partition line");
            }
            partition_line = line;
            std::string spaced;
            for (char c : rest) {
                if (c == '{' || c == '}') {
                    spaced += ' ';
                    spaced += c;
                    spaced += ' ';
                } else {
                    spaced += c;
                }
            }
            std::vector<std::vector<int>> blocks;
            std::optional<std::vector<int>> current;
            for (const std::string& tok : split_ws(spaced)) {
                if (tok == "{") {
                    if (current) {
                        throw ParseError(line, "nested '{' in partition");
                    }
                    current.emplace();
                } else if (tok == "}") {
                    if (!current) {
                        throw ParseError(line, "unmatched '}' in partition");
                    }
                    blocks.push_back(std::move(*current));
                    current.reset();
                } else {
                    if (!current) {
                        throw ParseError(line, "label outside a {...} block");
                    }
                    current->push_back(resolve(universe, tok, line));
                }
            }
            if (current) {
                throw ParseError(line, "unterminated '{' in partition");
            }
            try {
                partition.emplace(universe, std::move(blocks));
            } catch (const ValidationError& e) {
                throw ParseError(line, e.what());
            }
        } else if (key == "force") {
            if (forced) {
                throw ParseError(line, "duplicate force line");
            }
            const std::vector<std::string> toks = split_ws(rest);
            if (toks.size() != 1) {
                throw ParseError(line, "force expects exactly one pair like b<a");
            }
            const auto [la, lb] = split_strict_pair(toks.front(), line);
            forced = std::make_pair(resolve(universe, la, line), resolve(universe, lb, line));
        } else {
            throw ParseError(line, "unknown key '" + key + "'");
        }
    }
    if (!universe) {
        throw ParseError(line, "missing universe line");
    }

    Relation rel = union_of(Relation::identity(universe),
                            Relation::from_pairs(universe, strict_pairs));
    rel = transitive_hull(rel);
    if (!is_antisymmetric(rel)) {
        const Relation raw_strict = Relation::from_pairs(universe, strict_pairs);
        const std::vector<int> cycle = shortest_cycle(raw_strict);
        std::string text;
        for (int i : cycle) {
            text += universe->label(i) + " -> ";
        }
        text += universe->label(cycle.front());
        throw ValidationError("order pairs close into a cycle: " + text);
    }
    (void)partition_line;
    return ProblemFile{universe, PartialOrder(std::move(rel)), std::move(partition), forced};
}

ProblemFile parse_problem_text(const std::string& text) {
    std::istringstream in(text);
    return parse_problem(in);
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open file '" + path + "'");
    }
    return parse_problem(in);
}

std::string serialize_problem(const ProblemFile& pf) {
    std::ostringstream out;
    out << "universe:";
    for (const auto& l : pf.universe->labels()) {
        out << ' ' << l;
    }
    out << '\n';
    const Relation strict = asymmetric_part(pf.order.rel());
    if (strict.pair_count() > 0) {
        out << "order:";
        for (const auto& [i, j] : strict.pairs()) {
            out << ' ' << pf.universe->label(i) << '<' << pf.universe->label(j);
        }
        out << '\n';
    }
    if (pf.partition) {
        out << "partition: " << pf.partition->render() << '\n';
    }
    if (pf.forced) {
        out << "force: " << pf.universe->label(pf.forced->first) << '<'
            << pf.universe->label(pf.forced->second) << '\n';
    }
    return out.str();
}

}  // namespace ordext

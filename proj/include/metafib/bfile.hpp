#pragma once

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "metafib/sequence.hpp"

namespace metafib {

// OEIS-style interchange format: one "index value" pair per line, '#' comment
// lines, indices consecutive.
struct BFile {
    struct Entry {
        index_t index;
        term_t value;
        bool operator==(const Entry&) const = default;
    };
    std::vector<Entry> entries;

    bool operator==(const BFile&) const = default;
    index_t offset() const { return entries.empty() ? 0 : entries.front().index; }
};

class bfile_parse_error : public std::runtime_error {
public:
    enum class Kind { MalformedLine, NonContiguousIndex };

    bfile_parse_error(Kind kind, std::size_t line)
        : std::runtime_error((kind == Kind::MalformedLine ? "malformed line "
                                                          : "non-contiguous index at line ") +
                             std::to_string(line)),
          kind(kind),
          line(line) {}
    Kind kind;
    std::size_t line;
};

inline BFile parse_bfile(std::string_view text) {
    BFile out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        std::size_t i = 0;
        auto skip_ws = [&] {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        };
        skip_ws();
        if (i == line.size() || line[i] == '#') continue;

        auto read_uint = [&](std::uint64_t& v) -> bool {
            if (i == line.size() || !std::isdigit(static_cast<unsigned char>(line[i])))
                return false;
            v = 0;
            while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
                v = v * 10 + static_cast<std::uint64_t>(line[i] - '0');
                ++i;
            }
            return true;
        };

        std::uint64_t idx = 0, val = 0;
        if (!read_uint(idx)) throw bfile_parse_error(bfile_parse_error::Kind::MalformedLine, line_no);
        if (i == line.size() || (line[i] != ' ' && line[i] != '\t'))
            throw bfile_parse_error(bfile_parse_error::Kind::MalformedLine, line_no);
        skip_ws();
        if (!read_uint(val)) throw bfile_parse_error(bfile_parse_error::Kind::MalformedLine, line_no);
        skip_ws();
        if (i != line.size()) throw bfile_parse_error(bfile_parse_error::Kind::MalformedLine, line_no);
        if (idx < 1) throw bfile_parse_error(bfile_parse_error::Kind::MalformedLine, line_no);

        if (!out.entries.empty() && idx != out.entries.back().index + 1)
            throw bfile_parse_error(bfile_parse_error::Kind::NonContiguousIndex, line_no);
        out.entries.push_back({idx, val});
    }
    return out;
}

inline std::string serialize_bfile(const BFile& bf) {
    std::string out;
    for (const auto& e : bf.entries)
        out += std::to_string(e.index) + " " + std::to_string(e.value) + "\n";
    return out;
}

inline BFile to_bfile(const SequenceState& state) {
    BFile out;
    out.entries.reserve(state.len());
    for (index_t i = 1; i <= state.len(); ++i) out.entries.push_back({i, state.term(i)});
    return out;
}

// 1-indexed table (slot 0 unused) from a b-file starting at index 1.
inline std::vector<term_t> table_from_bfile(const BFile& bf) {
    if (bf.entries.empty() || bf.offset() != 1)
        throw bad_parameter("b-file must start at index 1");
    std::vector<term_t> table(1, 0);
    table.reserve(bf.entries.size() + 1);
    for (const auto& e : bf.entries) table.push_back(e.value);
    return table;
}

}  // namespace metafib

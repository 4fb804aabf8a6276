// morphism_io.hpp -- the line-oriented morphism file format.
//
//   # comment
//   alphabet: m
//   1 -> 1 1 2 3
//   2 -> 1 3 3
//   ...
//
// Letters are whitespace-separated integers, so alphabets with m > 9 need no
// escaping.  Range violations are parse errors; the structural morphism
// preconditions (prolongability, image lengths) are deliberately not checked
// here so the decision procedure can report them.
#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <akp/words.hpp>

namespace akp {

class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

  private:
    int line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline int parse_int(std::string_view tok, int line) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "bad letter '" + std::string(tok) + "'");
    return value;
}

}  // namespace detail

/// Parses the morphism file grammar.  Throws ParseError with a line number
/// on malformed input: bad header, bad letter, letter out of range, empty
/// image, duplicate or missing rule.
inline Morphism parse_morphism_file(const std::string& text) {
    Morphism mu;
    std::vector<bool> has_rule;
    bool seen_header = false;
    int line_no = 0;

    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;

        if (!seen_header) {
            const auto tokens = detail::split_ws(line);
            // Accept both "alphabet: m" and "alphabet : m".
            std::string joined;
            for (const auto& t : tokens) joined += std::string(t);
            if (joined.size() < 9 || joined.substr(0, 9) != "alphabet:")
                throw ParseError(line_no, "expected 'alphabet: m' header");
            const int m = detail::parse_int(joined.substr(9), line_no);
            if (m < 1) throw ParseError(line_no, "alphabet size must be >= 1");
            mu.m = m;
            mu.images.assign(static_cast<std::size_t>(m), Word{});
            has_rule.assign(static_cast<std::size_t>(m), false);
            seen_header = true;
            continue;
        }

        const auto arrow = line.find("->");
        if (arrow == std::string_view::npos)
            throw ParseError(line_no, "expected 'i -> j1 j2 ...' rule");
        const auto lhs = detail::split_ws(line.substr(0, arrow));
        const auto rhs = detail::split_ws(line.substr(arrow + 2));
        if (lhs.size() != 1)
            throw ParseError(line_no, "expected a single letter left of '->'");
        const int a = detail::parse_int(lhs.front(), line_no);
        if (a < 1 || a > mu.m)
            throw ParseError(line_no, "letter " + std::to_string(a) + " out of range 1.." +
                                          std::to_string(mu.m));
        if (has_rule[static_cast<std::size_t>(a - 1)])
            throw ParseError(line_no, "duplicate rule for letter " + std::to_string(a));
        if (rhs.empty())
            throw ParseError(line_no, "missing image for letter " + std::to_string(a));
        Word image;
        image.reserve(rhs.size());
        for (const auto& tok : rhs) {
            const int b = detail::parse_int(tok, line_no);
            if (b < 1 || b > mu.m)
                throw ParseError(line_no, "letter " + std::to_string(b) + " out of range 1.." +
                                              std::to_string(mu.m));
            image.push_back(b);
        }
        has_rule[static_cast<std::size_t>(a - 1)] = true;
        mu.images[static_cast<std::size_t>(a - 1)] = std::move(image);
    }

    if (!seen_header) throw ParseError(line_no, "expected 'alphabet: m' header");
    for (int a = 1; a <= mu.m; ++a)
        if (!has_rule[static_cast<std::size_t>(a - 1)])
            throw ParseError(line_no, "missing rule for letter " + std::to_string(a));
    return mu;
}

/// Reads and parses a morphism file from disk.
inline Morphism load_morphism(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open morphism file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_morphism_file(buf.str());
}

/// Emits a morphism in the same grammar; parse_morphism_file round-trips it.
inline std::string morphism_to_text(const Morphism& mu) {
    std::ostringstream out;
    out << "alphabet: " << mu.m << '\n';
    for (int a = 1; a <= mu.m; ++a) {
        out << a << " ->";
        for (Letter b : mu.image(a)) out << ' ' << b;
        out << '\n';
    }
    return out.str();
}

}  // namespace akp

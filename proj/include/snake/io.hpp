#pragma once

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "snake/census.hpp"
#include "snake/characters.hpp"
#include "snake/lweight.hpp"
#include "snake/multisegment.hpp"
#include "snake/path.hpp"
#include "snake/segment.hpp"

namespace snake {

/// Formats a doubled half-integer: even values print as integers, odd ones
/// with a ".5" decimal.
inline std::string half_to_string(int doubled) {
    if ((doubled & 1) == 0) return std::to_string(doubled / 2);
    int whole = (doubled - (doubled < 0 ? -1 : 1)) / 2;
    std::string out;
    if (doubled < 0 && whole == 0) out += "-";
    out += std::to_string(whole);
    out += ".5";
    return out;
}

inline std::string to_string(Segment s) {
    return half_to_string(s.ti()) + ".." + half_to_string(s.tj());
}

inline std::string to_string(const Multisegment& ms) {
    std::string out = "[";
    for (std::size_t k = 0; k < ms.length(); ++k) {
        if (k) out += ", ";
        out += to_string(ms[k]);
    }
    out += "]";
    return out;
}

inline std::string to_string(const LWeight& w) {
    if (w.trivial()) return "1";
    std::string out;
    for (std::size_t k = 0; k < w.terms().size(); ++k) {
        if (k) out += " * ";
        const auto& [s, e] = w.terms()[k];
        out += "w[" + to_string(s) + "]^" + std::to_string(e);
    }
    return out;
}

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")") {}
};

namespace detail {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
        return text[pos];
    }
    void expect(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }
    bool accept(char c) {
        if (!done() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    // Half-integer literal: integer with optional ".5"; returns the doubled value.
    int half() {
        skip_ws();
        std::size_t start = pos;
        bool neg = accept('-');
        if (!neg) accept('+');
        std::size_t digits = 0;
        long long whole = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            whole = whole * 10 + (text[pos] - '0');
            ++pos;
            ++digits;
        }
        if (digits == 0) throw ParseError("expected a number", start);
        long long doubled = 2 * whole;
        // a '.' not starting the ".." separator must begin a ".5" fraction
        if (pos < text.size() && text[pos] == '.' &&
            !(pos + 1 < text.size() && text[pos + 1] == '.')) {
            bool frac5 = pos + 1 < text.size() && text[pos + 1] == '5' &&
                         (pos + 2 >= text.size() ||
                          !std::isdigit(static_cast<unsigned char>(text[pos + 2])));
            if (!frac5) throw ParseError("only .5 fractions are allowed", pos);
            pos += 2;
            doubled += 1;
        }
        if (neg) doubled = -doubled;
        return static_cast<int>(doubled);
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos;
        bool neg = accept('-');
        if (!neg) accept('+');
        std::size_t digits = 0;
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
            ++digits;
        }
        if (digits == 0) throw ParseError("expected an integer", start);
        return neg ? -v : v;
    }

    Segment segment() {
        int ti = half();
        expect('.');
        expect('.');
        int tj = half();
        try {
            return Segment(ti, tj);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), pos);
        }
    }
};

} // namespace detail

/// Parses a segment literal `<num>..<num>`.
inline Segment parse_segment(std::string_view text) {
    detail::Cursor c{text};
    Segment s = c.segment();
    if (!c.done()) throw ParseError("trailing input after segment", c.pos);
    return s;
}

/// Parses a multisegment literal `[a..b, c..d, ...]`; `[]` is empty.
inline Multisegment parse_multisegment(std::string_view text) {
    detail::Cursor c{text};
    c.expect('[');
    std::vector<Segment> entries;
    if (c.peek() != ']') {
        entries.push_back(c.segment());
        while (c.accept(',')) entries.push_back(c.segment());
    }
    c.expect(']');
    if (!c.done()) throw ParseError("trailing input after multisegment", c.pos);
    return Multisegment(std::move(entries));
}

/// Parses the canonical weight form `w[a..b]^e * w[c..d]^e ...` or `1`.
inline LWeight parse_lweight(std::string_view text) {
    detail::Cursor c{text};
    if (c.peek() == '1') {
        ++c.pos;
        if (!c.done()) throw ParseError("trailing input after trivial weight", c.pos);
        return LWeight::one();
    }
    std::vector<LWeight::Entry> terms;
    while (true) {
        c.expect('w');
        c.expect('[');
        Segment s = c.segment();
        c.expect(']');
        long long e = 1;
        if (c.accept('^')) e = c.integer();
        terms.push_back({s, e});
        if (c.done()) break;
        c.expect('*');
    }
    return LWeight::from_terms(std::move(terms));
}

// ---- JSON adapters (nlohmann) -------------------------------------------

inline void to_json(nlohmann::json& j, const Segment& s) {
    j = nlohmann::json{{"ti", s.ti()}, {"tj", s.tj()}};
}

inline void from_json(const nlohmann::json& j, Segment& s) {
    s = Segment(j.at("ti").get<int>(), j.at("tj").get<int>());
}

inline void to_json(nlohmann::json& j, const Multisegment& ms) {
    j = nlohmann::json::array();
    for (const auto& s : ms) j.push_back(s);
}

inline void from_json(const nlohmann::json& j, Multisegment& ms) {
    std::vector<Segment> entries;
    for (const auto& e : j) entries.push_back(e.get<Segment>());
    ms = Multisegment(std::move(entries));
}

inline void to_json(nlohmann::json& j, const LWeight& w) {
    j = nlohmann::json::array();
    for (const auto& [s, e] : w.terms()) j.push_back({{"segment", s}, {"exponent", e}});
}

inline void from_json(const nlohmann::json& j, LWeight& w) {
    std::vector<LWeight::Entry> terms;
    for (const auto& e : j)
        terms.push_back({e.at("segment").get<Segment>(), e.at("exponent").get<long long>()});
    w = LWeight::from_terms(std::move(terms));
}

inline void to_json(nlohmann::json& j, const Path& p) { j = p.values; }

inline void from_json(const nlohmann::json& j, Path& p) {
    p.values = j.get<std::vector<int>>();
}

inline void to_json(nlohmann::json& j, const PairFlags& f) {
    j = nlohmann::json{{"almostdual", f.almostdual}, {"kr", f.kr}, {"minmax", f.minmax}};
}

inline void to_json(nlohmann::json& j, const PiChain& c) {
    j = nlohmann::json{{"s", c.s}, {"sp", c.sp}, {"p", c.p}};
    auto pis = nlohmann::json::array();
    auto varpis = nlohmann::json::array();
    auto leqs = nlohmann::json::array();
    for (const auto& w : c.pis) pis.push_back({{"weight", w}, {"text", to_string(w)}});
    for (const auto& w : c.varpis) varpis.push_back({{"weight", w}, {"text", to_string(w)}});
    for (bool b : c.leq_top) leqs.push_back(b);
    j["pis"] = std::move(pis);
    j["varpis"] = std::move(varpis);
    j["leq_top"] = std::move(leqs);
}

inline void to_json(nlohmann::json& j, const CensusRecord& r) {
    j = nlohmann::json{{"s1", r.s1},
                       {"s1p", r.s1p},
                       {"count_enumerated", r.count_enumerated},
                       {"count_formula", r.count_formula}};
    auto pairs = nlohmann::json::array();
    for (std::size_t k = 0; k < r.pairs.size(); ++k) {
        pairs.push_back({{"s2", r.pairs[k].first},
                         {"s2p", r.pairs[k].second},
                         {"flags", r.flags[k]}});
    }
    j["pairs"] = std::move(pairs);
}

inline nlohmann::json pi_chain_json(const PiChain& c) {
    nlohmann::json j;
    to_json(j, c);
    return j;
}

} // namespace snake

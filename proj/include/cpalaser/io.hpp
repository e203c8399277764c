#pragma once

#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "solver.hpp"

// Text formats. All numbers are emitted in decimal scientific notation with 12
// significant digits through std::to_chars, so output is locale-independent
// and byte-reproducible. Solution records are flat `key = value` blocks
// introduced by a `[solution]` line; the same `key = value` syntax (with `#`
// comments) is used for run configuration files.

namespace cpalaser {

inline std::string format_sci(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::scientific, 11);
    return std::string(buf, res.ptr);
}

inline std::string format_int(long long v) {
    char buf[24];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view text) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    return v;
}

inline long long parse_int(std::string_view text) {
    long long v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    return v;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

struct KeyValue {
    std::string key, value;
    int line = 0;
};

// `key = value` lines; '#' starts a comment, blank lines are skipped
inline std::vector<KeyValue> parse_key_values(std::istream& in) {
    std::vector<KeyValue> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view s{line};
        if (const auto hash = s.find('#'); hash != std::string_view::npos)
            s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected 'key = value'");
        KeyValue kv;
        kv.key = std::string(trim(s.substr(0, eq)));
        kv.value = std::string(trim(s.substr(eq + 1)));
        kv.line = lineno;
        if (kv.key.empty())
            throw std::invalid_argument("line " + std::to_string(lineno) + ": empty key");
        out.push_back(std::move(kv));
    }
    return out;
}

inline std::string emit_solution_record(const SelfDualSolution& s) {
    std::string out;
    auto put = [&](const char* key, const std::string& value) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    };
    out += "[solution]\n";
    put("eta1", format_sci(s.n1.eta));
    put("kappa1", format_sci(s.n1.kappa));
    put("eta2", format_sci(s.n2.eta));
    put("kappa2", format_sci(s.n2.kappa));
    put("K", format_sci(s.K));
    put("m_minus", format_int(s.m_minus));
    put("m_plus", format_int(s.m_plus));
    put("residual_ss", format_sci(s.residual_ss));
    put("residual_cpa", format_sci(s.residual_cpa));
    put("iterations", format_int(s.iterations));
    put("seed_eta1", format_sci(s.seed.eta1));
    put("seed_eta2", format_sci(s.seed.eta2));
    put("seed_kappa1", format_sci(s.seed.kappa1));
    put("seed_kappa2", format_sci(s.seed.kappa2));
    put("seed_residual", format_sci(s.seed.residual));
    put("seed_signs", s.seed.signs.str());
    return out;
}

inline std::string emit_solution_records(const std::vector<SelfDualSolution>& sols) {
    std::string out;
    for (size_t i = 0; i < sols.size(); ++i) {
        if (i) out += '\n';
        out += emit_solution_record(sols[i]);
    }
    return out;
}

inline std::vector<SelfDualSolution> parse_solution_records(std::istream& in) {
    std::vector<SelfDualSolution> out;
    std::string line;
    SelfDualSolution cur;
    bool open = false;
    int lineno = 0;
    auto flush = [&] {
        if (open) {
            cur.seed.K_target = cur.K;
            cur.seed.m_minus = cur.m_minus;
            cur.seed.m_plus = cur.m_plus;
            cur.seed.kappa_plus = cur.seed.kappa1 + cur.seed.kappa2;
            cur.seed.kappa_minus = cur.seed.kappa1 - cur.seed.kappa2;
            out.push_back(cur);
        }
        cur = SelfDualSolution{};
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view s = trim(line);
        if (s.empty() || s.front() == '#') continue;
        if (s == "[solution]") {
            flush();
            open = true;
            continue;
        }
        if (!open)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": record data before [solution] header");
        const auto eq = s.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected 'key = value'");
        const std::string key{trim(s.substr(0, eq))};
        const std::string value{trim(s.substr(eq + 1))};
        if (key == "eta1") cur.n1.eta = parse_double(value);
        else if (key == "kappa1") cur.n1.kappa = parse_double(value);
        else if (key == "eta2") cur.n2.eta = parse_double(value);
        else if (key == "kappa2") cur.n2.kappa = parse_double(value);
        else if (key == "K") cur.K = parse_double(value);
        else if (key == "m_minus") cur.m_minus = int(parse_int(value));
        else if (key == "m_plus") cur.m_plus = int(parse_int(value));
        else if (key == "residual_ss") cur.residual_ss = parse_double(value);
        else if (key == "residual_cpa") cur.residual_cpa = parse_double(value);
        else if (key == "iterations") cur.iterations = int(parse_int(value));
        else if (key == "seed_eta1") cur.seed.eta1 = parse_double(value);
        else if (key == "seed_eta2") cur.seed.eta2 = parse_double(value);
        else if (key == "seed_kappa1") cur.seed.kappa1 = parse_double(value);
        else if (key == "seed_kappa2") cur.seed.kappa2 = parse_double(value);
        else if (key == "seed_residual") cur.seed.residual = parse_double(value);
        else if (key == "seed_signs") {
            if (value.size() != 4)
                throw std::invalid_argument("seed_signs must be 4 characters");
            auto sgn = [](char c) { return c == '-' ? -1 : +1; };
            cur.seed.signs =
                SignBranch{sgn(value[0]), sgn(value[1]), sgn(value[2]), sgn(value[3])};
        } else {
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": unknown record key '" + key + "'");
        }
    }
    flush();
    return out;
}

inline std::string csv_join(const std::vector<std::string>& cells) {
    std::string out;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += cells[i];
    }
    out += '\n';
    return out;
}

}  // namespace cpalaser

#pragma once

#include "lapuniq/family.hpp"

#include <complex>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lapuniq {

struct FamilyParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string> split_str(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) { out.push_back(cur); cur.clear(); }
        else cur.push_back(c);
    }
    out.push_back(cur);
    return out;
}

inline std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    for (const auto& f : split_str(s, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(f, &pos));
            if (pos != f.size()) throw std::invalid_argument(f);
        } catch (...) {
            throw FamilyParseError("family parse: bad number '" + f + "'");
        }
    }
    return out;
}

/// "a+bi" / "a-bi" / "a" / "bi"; i may also be written j.
inline std::complex<double> parse_complex(const std::string& s) {
    std::string t = s;
    if (t.empty()) throw FamilyParseError("family parse: empty complex literal");
    bool has_i = t.back() == 'i' || t.back() == 'j';
    if (has_i) t.pop_back();
    // split at the last +/- not at position 0 and not after e/E
    std::size_t cut = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;) {
        if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
            cut = k;
            break;
        }
    }
    try {
        if (!has_i) {
            if (cut != std::string::npos)
                throw FamilyParseError("family parse: real literal with embedded sign");
            return {std::stod(t), 0.0};
        }
        if (cut == std::string::npos) {  // pure imaginary, e.g. "1i", "-2i", "i"
            if (t.empty() || t == "+" ) return {0.0, 1.0};
            if (t == "-") return {0.0, -1.0};
            return {0.0, std::stod(t)};
        }
        double re = std::stod(t.substr(0, cut));
        std::string im_s = t.substr(cut);
        double im = (im_s == "+") ? 1.0 : (im_s == "-") ? -1.0 : std::stod(im_s);
        return {re, im};
    } catch (const FamilyParseError&) {
        throw;
    } catch (...) {
        throw FamilyParseError("family parse: bad complex literal '" + s + "'");
    }
}

inline std::map<std::string, std::string> parse_kv(const std::string& body) {
    std::map<std::string, std::string> kv;
    for (const auto& part : split_str(body, ';')) {
        auto eq = part.find('=');
        if (eq == std::string::npos)
            throw FamilyParseError("family parse: expected key=value, got '" + part + "'");
        kv[part.substr(0, eq)] = part.substr(eq + 1);
    }
    return kv;
}

inline std::string require(const std::map<std::string, std::string>& kv, const std::string& k) {
    auto it = kv.find(k);
    if (it == kv.end()) throw FamilyParseError("family parse: missing key '" + k + "'");
    return it->second;
}

inline SequenceFamily parse_base(const std::string& spec);

/// "(specA)x(specB)x..." for product lattices.
inline std::vector<std::string> split_product(const std::string& body) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (std::size_t i = 0; i < body.size(); ++i) {
        char c = body[i];
        if (c == '(') {
            if (depth++ == 0) continue;
        } else if (c == ')') {
            if (--depth == 0) {
                parts.push_back(cur);
                cur.clear();
                continue;
            }
        } else if (depth == 0) {
            if (c == 'x') continue;
            throw FamilyParseError("family parse: bad product syntax near '" +
                                   std::string(1, c) + "'");
        }
        if (depth > 0) cur.push_back(c);
    }
    if (depth != 0) throw FamilyParseError("family parse: unbalanced parentheses");
    if (parts.empty()) throw FamilyParseError("family parse: empty product");
    return parts;
}

inline SequenceFamily parse_explicit(const std::string& body) {
    if (body == "diag-kk") return diagonal_family();
    if (body == "doetsch") return doetsch_family();
    if (!body.empty() && body[0] == '@') {
        std::ifstream in(body.substr(1));
        if (!in) throw FamilyParseError("family parse: cannot open '" + body.substr(1) + "'");
        std::vector<Point> pts;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            Point p;
            for (const auto& f : split_str(line, ',')) p.push_back(parse_complex(f));
            pts.push_back(std::move(p));
        }
        if (pts.empty()) throw FamilyParseError("family parse: empty explicit file");
        return make_explicit(std::move(pts), body);
    }
    throw FamilyParseError("family parse: unknown explicit family '" + body + "'");
}

inline SequenceFamily parse_base(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw FamilyParseError("family parse: expected 'kind:params' in '" + spec + "'");
    std::string kind = spec.substr(0, colon), body = spec.substr(colon + 1);
    if (kind == "affine") {
        auto kv = parse_kv(body);
        std::size_t n = std::stoul(require(kv, "n"));
        auto a = parse_double_list(require(kv, "a"));
        auto b = parse_double_list(require(kv, "b"));
        if (a.size() != n || b.size() != n)
            throw FamilyParseError("family parse: affine parameter lengths must equal n");
        return make_affine(std::move(a), std::move(b));
    }
    if (kind == "power") {
        auto kv = parse_kv(body);
        std::size_t n = std::stoul(require(kv, "n"));
        auto a = parse_double_list(require(kv, "a"));
        auto b = parse_double_list(require(kv, "b"));
        auto g = parse_double_list(require(kv, "gamma"));
        if (a.size() != n || b.size() != n || g.size() != n)
            throw FamilyParseError("family parse: power parameter lengths must equal n");
        return make_power(std::move(a), std::move(b), std::move(g));
    }
    if (kind == "impow") {
        auto kv = parse_kv(body);
        std::size_t n = std::stoul(require(kv, "n"));
        auto g = parse_double_list(require(kv, "gamma"));
        if (g.size() != n)
            throw FamilyParseError("family parse: impow gamma length must equal n");
        return make_impow(std::move(g));
    }
    if (kind == "sector") {
        auto kv = parse_kv(body);
        return make_sector(std::stod(require(kv, "theta")));
    }
    if (kind == "product") {
        std::vector<SequenceFamily> factors;
        for (const auto& part : split_product(body)) factors.push_back(parse_base(part));
        return make_product(std::move(factors));
    }
    if (kind == "explicit") return parse_explicit(body);
    throw FamilyParseError("family parse: unknown family kind '" + kind + "'");
}

inline Derivation parse_derivation(const std::string& spec, std::size_t dim) {
    auto eq = spec.find('=');
    std::string name = (eq == std::string::npos) ? spec : spec.substr(0, eq);
    std::string arg = (eq == std::string::npos) ? "" : spec.substr(eq + 1);
    if (name == "shift") {
        Point z;
        for (const auto& f : split_str(arg, ',')) z.push_back(parse_complex(f));
        if (z.size() != dim) throw FamilyParseError("family parse: shift length mismatch");
        return Shift{std::move(z)};
    }
    if (name == "project") {
        std::vector<std::size_t> coords;
        for (const auto& f : split_str(arg, ','))
            coords.push_back(std::stoul(f));
        return Project{IndexSubset{std::move(coords)}};
    }
    if (name == "split") {
        auto parts = split_str(arg, ',');
        if (parts.size() != 2) throw FamilyParseError("family parse: split wants m,r");
        return ResidueSplit{static_cast<unsigned>(std::stoul(parts[0])),
                            static_cast<unsigned>(std::stoul(parts[1]))};
    }
    if (name == "subordinate") {
        // "coords:g1,g2" or just "g" for all coordinates
        auto colon = arg.find(':');
        std::vector<std::size_t> coords;
        std::vector<double> gammas;
        if (colon == std::string::npos) {
            for (std::size_t j = 1; j <= dim; ++j) coords.push_back(j);
            double g = std::stod(arg);
            gammas.assign(dim, g);
        } else {
            for (const auto& f : split_str(arg.substr(0, colon), ','))
                coords.push_back(std::stoul(f));
            gammas = parse_double_list(arg.substr(colon + 1));
        }
        return Subordinate{IndexSubset{std::move(coords)}, std::move(gammas)};
    }
    if (name == "reindex") {
        unsigned block = arg.empty() ? 2u : static_cast<unsigned>(std::stoul(arg));
        return Reindex{block};
    }
    throw FamilyParseError("family parse: unknown derivation '" + name + "'");
}

}  // namespace detail

/// Parse the CLI family mini-language, e.g.
///   "affine:n=2;a=1,1;b=1,1"
///   "impow:n=1;gamma=0.6"
///   "product:(affine:n=1;a=1;b=1)x(affine:n=1;a=1;b=1)"
///   "explicit:diag-kk"   "explicit:@points.csv"
/// with derivations appended: "...|shift=0+1i|subordinate=0.5".
inline SequenceFamily parse_family(const std::string& spec) {
    auto parts = detail::split_str(spec, '|');
    SequenceFamily fam = detail::parse_base(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i)
        fam = derive_family(fam, detail::parse_derivation(parts[i], fam.dim));
    return fam;
}

}  // namespace lapuniq

#pragma once

#include "lapuniq/exp_polynomial.hpp"
#include "lapuniq/rational_transform.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lapuniq {

// Line-oriented exact text format. One term per line, semicolon-separated
// fields: coeff_re;coeff_im;powers(or orders);rate_re list;rate_im list.
// Rationals print as "p/q" (or "p" when q = 1), so round-trips are bit-exact.

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) { out.push_back(cur); cur.clear(); }
        else cur.push_back(c);
    }
    out.push_back(cur);
    return out;
}

inline std::string join_rationals(const std::vector<GaussianRational>& v, bool real_part) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += (real_part ? v[i].re : v[i].im).str();
    }
    return s;
}

inline std::string join_unsigned(const std::vector<unsigned>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

inline std::vector<unsigned> parse_unsigned_list(const std::string& s) {
    std::vector<unsigned> out;
    for (const auto& f : split(s, ','))
        out.push_back(static_cast<unsigned>(std::stoul(f)));
    return out;
}

inline void parse_rational_lists(const std::string& re_s, const std::string& im_s,
                                 std::vector<GaussianRational>& out) {
    auto re = split(re_s, ',');
    auto im = split(im_s, ',');
    if (re.size() != im.size()) throw std::runtime_error("serialize: re/im list length mismatch");
    out.resize(re.size());
    for (std::size_t i = 0; i < re.size(); ++i)
        out[i] = GaussianRational{BigRational(re[i]), BigRational(im[i])};
}

}  // namespace detail

inline void write_text(std::ostream& os, const ExpPolynomial& f) {
    os << "exppoly;" << f.dim() << ';' << f.terms().size() << '\n';
    for (const auto& m : f.terms()) {
        os << m.coeff.re.str() << ';' << m.coeff.im.str() << ';'
           << detail::join_unsigned(m.powers) << ';'
           << detail::join_rationals(m.rates, true) << ';'
           << detail::join_rationals(m.rates, false) << '\n';
    }
}

inline void write_text(std::ostream& os, const RationalTransform& F) {
    os << "rattrans;" << F.dim() << ';' << F.terms().size() << '\n';
    for (const auto& t : F.terms()) {
        os << t.coeff.re.str() << ';' << t.coeff.im.str() << ';'
           << detail::join_unsigned(t.orders) << ';'
           << detail::join_rationals(t.poles, true) << ';'
           << detail::join_rationals(t.poles, false) << '\n';
    }
}

inline std::string to_text(const ExpPolynomial& f) {
    std::ostringstream os;
    write_text(os, f);
    return os.str();
}

inline std::string to_text(const RationalTransform& F) {
    std::ostringstream os;
    write_text(os, F);
    return os.str();
}

inline ExpPolynomial read_exp_polynomial(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw std::runtime_error("serialize: missing header");
    auto h = detail::split(header, ';');
    if (h.size() != 3 || h[0] != "exppoly") throw std::runtime_error("serialize: bad exppoly header");
    std::size_t dim = std::stoul(h[1]);
    std::size_t nterms = std::stoul(h[2]);
    std::vector<ExpMonomial> terms;
    for (std::size_t i = 0; i < nterms; ++i) {
        std::string line;
        if (!std::getline(is, line)) throw std::runtime_error("serialize: truncated exppoly");
        auto f = detail::split(line, ';');
        if (f.size() != 5) throw std::runtime_error("serialize: bad exppoly term line");
        ExpMonomial m;
        m.coeff = GaussianRational{BigRational(f[0]), BigRational(f[1])};
        m.powers = detail::parse_unsigned_list(f[2]);
        detail::parse_rational_lists(f[3], f[4], m.rates);
        terms.push_back(std::move(m));
    }
    return ExpPolynomial(dim, std::move(terms));
}

inline RationalTransform read_rational_transform(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw std::runtime_error("serialize: missing header");
    auto h = detail::split(header, ';');
    if (h.size() != 3 || h[0] != "rattrans") throw std::runtime_error("serialize: bad rattrans header");
    std::size_t dim = std::stoul(h[1]);
    std::size_t nterms = std::stoul(h[2]);
    std::vector<TransformTerm> terms;
    for (std::size_t i = 0; i < nterms; ++i) {
        std::string line;
        if (!std::getline(is, line)) throw std::runtime_error("serialize: truncated rattrans");
        auto f = detail::split(line, ';');
        if (f.size() != 5) throw std::runtime_error("serialize: bad rattrans term line");
        TransformTerm t;
        t.coeff = GaussianRational{BigRational(f[0]), BigRational(f[1])};
        t.orders = detail::parse_unsigned_list(f[2]);
        detail::parse_rational_lists(f[3], f[4], t.poles);
        terms.push_back(std::move(t));
    }
    return RationalTransform(dim, std::move(terms));
}

}  // namespace lapuniq

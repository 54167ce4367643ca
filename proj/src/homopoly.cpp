#include "entrobox/homopoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace entrobox {

namespace {

// Permutation generator over k slots with sign tracking.
void det_recurse(const ExactPolyMatrix& mat, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols, std::vector<std::size_t>& perm,
                 std::vector<bool>& used, int sign, ExactPoly& acc) {
    const std::size_t k = rows.size();
    if (perm.size() == k) {
        ExactPoly term = mat.at(rows[0], cols[perm[0]]);
        for (std::size_t i = 1; i < k; ++i) term = term * mat.at(rows[i], cols[perm[i]]);
        if (sign < 0) term = term.scaled(ExactComplex(-1L));
        acc = acc + term;
        return;
    }
    for (std::size_t c = 0; c < k; ++c) {
        if (used[c]) continue;
        int inversions = 0;
        for (std::size_t prev : perm)
            if (prev > c) ++inversions;
        used[c] = true;
        perm.push_back(c);
        det_recurse(mat, rows, cols, perm, used, (inversions % 2 == 0) ? sign : -sign, acc);
        perm.pop_back();
        used[c] = false;
    }
}

} // namespace

std::vector<MultiIndex> enumerate_monomials(std::size_t nvars, std::uint32_t degree) {
    std::vector<MultiIndex> out;
    MultiIndex current = MultiIndex::zero(nvars);
    // Depth-first over exponent assignments, first variable outermost.
    auto rec = [&](auto&& self, std::size_t var, std::uint32_t remaining) -> void {
        if (var + 1 == nvars) {
            current[var] = remaining;
            out.push_back(current);
            current[var] = 0;
            return;
        }
        for (std::uint32_t e = 0; e <= remaining; ++e) {
            current[var] = e;
            self(self, var + 1, remaining - e);
        }
        current[var] = 0;
    };
    if (nvars == 0) throw std::invalid_argument("enumerate_monomials: nvars must be positive");
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), MonomialLess{});
    return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i; // exact: equals C(n-k+i, i) after each step
        if (result > UINT64_MAX) throw std::overflow_error("binomial: overflow");
    }
    return static_cast<std::uint64_t>(result);
}

ExactPoly poly_minor(const ExactPolyMatrix& mat, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size())
        throw std::invalid_argument("poly_minor: selection must be square");
    if (rows.empty()) throw std::invalid_argument("poly_minor: empty selection");
    for (std::size_t r : rows)
        if (r >= mat.rows) throw std::invalid_argument("poly_minor: row out of range");
    for (std::size_t c : cols)
        if (c >= mat.cols) throw std::invalid_argument("poly_minor: column out of range");

    const auto& first = mat.at(rows[0], cols[0]);
    ExactPoly acc(first.nvars(),
                  static_cast<std::uint32_t>(first.degree() * rows.size()));
    std::vector<std::size_t> perm;
    std::vector<bool> used(rows.size(), false);
    det_recurse(mat, rows, cols, perm, used, 1, acc);
    return acc;
}

ExactPoly euler_residual(const ExactPoly& p) {
    ExactPoly acc(p.nvars(), p.degree());
    for (std::size_t j = 0; j < p.nvars(); ++j)
        acc = acc + p.derivative(j).times_monomial(MultiIndex::unit(p.nvars(), j));
    return acc + p.scaled(ExactComplex(-static_cast<long>(p.degree())));
}

namespace {

std::string rat_to_string(const mpq_class& q) { return q.get_str(); }

std::string coeff_to_string(const ExactComplex& c) {
    if (c.im() == 0) return rat_to_string(c.re());
    if (c.re() == 0) return rat_to_string(c.im()) + "i";
    std::string s = "(" + rat_to_string(c.re());
    if (c.im() < 0)
        s += "-" + rat_to_string(mpq_class(-c.im()));
    else
        s += "+" + rat_to_string(c.im());
    return s + "i)";
}

mpq_class parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("polynomial parse: empty rational");
    for (char ch : s)
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/'))
            throw std::invalid_argument("polynomial parse: bad rational '" + s + "'");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("polynomial parse: bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

ExactComplex parse_coeff(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("polynomial parse: empty coefficient");
    if (s.front() == '(') {
        if (s.size() < 4 || s.back() != ')' || s[s.size() - 2] != 'i')
            throw std::invalid_argument("polynomial parse: bad complex coefficient '" + s + "'");
        std::string body = s.substr(1, s.size() - 3); // strip "(" and "i)"
        // Split at the sign of the imaginary part (not the leading sign).
        std::size_t split = std::string::npos;
        for (std::size_t i = 1; i < body.size(); ++i) {
            if (body[i] == '+' || (body[i] == '-' && body[i - 1] != '/')) {
                bool digit_before = std::isdigit(static_cast<unsigned char>(body[i - 1])) != 0;
                if (digit_before) split = i;
            }
        }
        if (split == std::string::npos)
            throw std::invalid_argument("polynomial parse: bad complex coefficient '" + s + "'");
        mpq_class re = parse_rat(body.substr(0, split));
        std::string ims = body.substr(split);
        if (ims.front() == '+') ims.erase(0, 1);
        return ExactComplex(re, parse_rat(ims));
    }
    if (s.back() == 'i') return ExactComplex(mpq_class(0), parse_rat(s.substr(0, s.size() - 1)));
    return ExactComplex(parse_rat(s));
}

std::vector<std::string> split_top_level_terms(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (depth == 0 && ch == '+' && i > 0 && text[i - 1] == ' ' && i + 1 < text.size() &&
            text[i + 1] == ' ') {
            parts.push_back(cur.substr(0, cur.size() - 1));
            cur.clear();
            ++i; // skip the space after '+'
            continue;
        }
        cur += ch;
    }
    parts.push_back(cur);
    return parts;
}

} // namespace

std::string to_text(const ExactPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mi, c] : p.terms()) {
        if (!first) out += " + ";
        first = false;
        out += coeff_to_string(c);
        bool any = false;
        std::string factors;
        for (std::size_t v = 0; v < mi.nvars(); ++v) {
            if (mi[v] == 0) continue;
            if (any) factors += ' ';
            any = true;
            factors += 'z' + std::to_string(v + 1) + '^' + std::to_string(mi[v]);
        }
        if (any) out += " * " + factors;
    }
    return out;
}

ExactPoly parse_poly(const std::string& text, std::size_t nvars, std::uint32_t degree) {
    std::string trimmed = text;
    while (!trimmed.empty() && trimmed.front() == ' ') trimmed.erase(0, 1);
    while (!trimmed.empty() && trimmed.back() == ' ') trimmed.pop_back();
    ExactPoly out(nvars, degree);
    if (trimmed == "0" || trimmed.empty()) return out;

    for (const std::string& term : split_top_level_terms(trimmed)) {
        std::string coeff_part = term;
        std::string factor_part;
        if (std::size_t star = term.find(" * "); star != std::string::npos) {
            coeff_part = term.substr(0, star);
            factor_part = term.substr(star + 3);
        }
        ExactComplex c = parse_coeff(coeff_part);
        MultiIndex mi = MultiIndex::zero(nvars);
        if (!factor_part.empty()) {
            std::istringstream fs(factor_part);
            std::string f;
            while (fs >> f) {
                if (f.size() < 4 || f.front() != 'z')
                    throw std::invalid_argument("polynomial parse: bad factor '" + f + "'");
                std::size_t caret = f.find('^');
                if (caret == std::string::npos)
                    throw std::invalid_argument("polynomial parse: bad factor '" + f + "'");
                std::size_t var = std::stoul(f.substr(1, caret - 1));
                std::size_t exp = std::stoul(f.substr(caret + 1));
                if (var < 1 || var > nvars)
                    throw std::invalid_argument("polynomial parse: variable out of range in '" +
                                                f + "'");
                mi[var - 1] += static_cast<std::uint32_t>(exp);
            }
        }
        if (mi.degree() != degree)
            throw std::invalid_argument("polynomial parse: term degree mismatch in '" + term +
                                        "'");
        out.add_term(std::move(mi), std::move(c));
    }
    return out;
}

} // namespace entrobox

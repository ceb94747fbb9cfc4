/*
   Copyright 2026 the itp authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace itp {

namespace {

bool valid_var_name(std::string_view name) {
    if (name.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    for (char c : name) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

std::uint64_t total_degree(const std::vector<std::uint32_t>& e) {
    std::uint64_t d = 0;
    for (std::uint32_t x : e) d += x;
    return d;
}

}  // namespace

Rat parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string num(text.substr(0, slash));
    auto check_int = [](const std::string& s) {
        if (s.empty()) throw parse_error("empty number in rational");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw parse_error("sign without digits in rational");
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw parse_error("invalid rational: " + s);
        }
    };
    check_int(num);
    Rat r;
    if (slash == std::string_view::npos) {
        r = Rat(Int(num));
    } else {
        const std::string den(text.substr(slash + 1));
        check_int(den);
        Int d(den);
        if (d == 0) throw parse_error("zero denominator in rational");
        r = Rat(Int(num), d);
    }
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rat& r) { return r.get_str(); }

bool MultiPoly::GradedLexDesc::operator()(const std::vector<std::uint32_t>& a,
                                          const std::vector<std::uint32_t>& b) const {
    const std::uint64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly MultiPoly::constant(Int value) {
    MultiPoly p;
    if (value != 0) p.terms_.emplace(std::vector<std::uint32_t>{}, std::move(value));
    return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
    if (!valid_var_name(name)) throw std::invalid_argument("invalid variable name: " + name);
    MultiPoly p;
    p.vars_ = {name};
    p.terms_.emplace(std::vector<std::uint32_t>{1}, Int(1));
    return p;
}

MultiPoly MultiPoly::monomial(const std::vector<std::string>& vars,
                              std::vector<std::uint32_t> exponents, Int coeff) {
    if (vars.size() != exponents.size())
        throw std::invalid_argument("monomial: variable/exponent size mismatch");
    if (!std::is_sorted(vars.begin(), vars.end()) ||
        std::adjacent_find(vars.begin(), vars.end()) != vars.end())
        throw std::invalid_argument("monomial: variables must be sorted and distinct");
    MultiPoly p;
    if (coeff == 0) return p;
    p.vars_ = vars;
    p.terms_.emplace(std::move(exponents), std::move(coeff));
    p.normalize();
    return p;
}

bool MultiPoly::is_one() const {
    return vars_.empty() && terms_.size() == 1 && terms_.begin()->second == 1;
}

const Int& MultiPoly::constant_value() const {
    static const Int zero(0);
    if (!is_constant()) throw std::invalid_argument("constant_value: polynomial is not constant");
    return terms_.empty() ? zero : terms_.begin()->second;
}

std::vector<MultiPoly::Term> MultiPoly::terms() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back({e, c});
    return out;
}

std::uint32_t MultiPoly::degree_in(const std::string& var) const {
    const auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return 0;
    const std::size_t i = static_cast<std::size_t>(it - vars_.begin());
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

void MultiPoly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        it = it->second == 0 ? terms_.erase(it) : std::next(it);
    }
    if (vars_.empty()) return;
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) used[i] = true;
        }
    }
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
    std::vector<std::string> new_vars;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (used[i]) {
            new_vars.push_back(vars_[i]);
            keep.push_back(i);
        }
    }
    TermMap new_terms;
    for (auto& [e, c] : terms_) {
        std::vector<std::uint32_t> ne(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i) ne[i] = e[keep[i]];
        new_terms.emplace(std::move(ne), c);
    }
    vars_ = std::move(new_vars);
    terms_ = std::move(new_terms);
}

std::vector<std::string> MultiPoly::merge_vars(const std::vector<std::string>& a,
                                               const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

MultiPoly MultiPoly::with_variables(const std::vector<std::string>& vars) const {
    if (vars == vars_) return *this;
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const auto it = std::lower_bound(vars.begin(), vars.end(), vars_[i]);
        pos[i] = static_cast<std::size_t>(it - vars.begin());
    }
    MultiPoly out;
    out.vars_ = vars;
    for (const auto& [e, c] : terms_) {
        std::vector<std::uint32_t> ne(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out = a;
    out += b;
    return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out = a;
    out -= b;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    if (other.is_zero()) return *this;
    const auto vars = merge_vars(vars_, other.vars_);
    *this = with_variables(vars);
    const MultiPoly rhs = other.with_variables(vars);
    for (const auto& [e, c] : rhs.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) it->second += c;
    }
    normalize();
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    *this += -other;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly();
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    const auto vars = MultiPoly::merge_vars(a.vars_, b.vars_);
    const MultiPoly lhs = a.with_variables(vars);
    const MultiPoly rhs = b.with_variables(vars);
    MultiPoly out;
    out.vars_ = vars;
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            std::vector<std::uint32_t> e(vars.size());
            for (std::size_t i = 0; i < vars.size(); ++i) e[i] = ea[i] + eb[i];
            auto [it, inserted] = out.terms_.emplace(std::move(e), ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    }
    out.normalize();
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
    *this = *this * other;
    return *this;
}

MultiPoly MultiPoly::pow(std::uint32_t k) const {
    MultiPoly result = one();
    MultiPoly base = *this;
    while (k > 0) {
        if (k & 1u) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& value) const {
    const auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return *this;
    const std::size_t vi = static_cast<std::size_t>(it - vars_.begin());
    std::map<std::uint32_t, MultiPoly> powers;
    MultiPoly out;
    for (const auto& [e, c] : terms_) {
        MultiPoly mono;
        mono.vars_ = vars_;
        std::vector<std::uint32_t> ne = e;
        const std::uint32_t k = ne[vi];
        ne[vi] = 0;
        mono.terms_.emplace(std::move(ne), c);
        mono.normalize();
        if (k == 0) {
            out += mono;
            continue;
        }
        auto [pit, inserted] = powers.try_emplace(k);
        if (inserted) pit->second = value.pow(k);
        out += mono * pit->second;
    }
    return out;
}

Rat MultiPoly::eval(const std::map<std::string, Rat>& point) const {
    std::vector<const Rat*> vals(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const auto it = point.find(vars_[i]);
        if (it == point.end())
            throw std::invalid_argument("eval: unassigned variable " + vars_[i]);
        vals[i] = &it->second;
    }
    Rat sum(0);
    for (const auto& [e, c] : terms_) {
        Rat term(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            Rat p;
            mpz_pow_ui(p.get_num_mpz_t(), vals[i]->get_num_mpz_t(), e[i]);
            mpz_pow_ui(p.get_den_mpz_t(), vals[i]->get_den_mpz_t(), e[i]);
            term *= p;
        }
        sum += term;
    }
    sum.canonicalize();
    return sum;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& p, const MultiPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
    if (p.is_zero()) return MultiPoly();
    if (d.is_one()) return p;
    const auto vars = merge_vars(p.vars_, d.vars_);
    MultiPoly rem = p.with_variables(vars);
    const MultiPoly div = d.with_variables(vars);
    const auto& [lde, ldc] = *div.terms_.begin();
    MultiPoly quot;
    quot.vars_ = vars;
    while (!rem.terms_.empty()) {
        // canonicalization may have dropped variables from rem; re-align
        rem = rem.with_variables(vars);
        const auto& [lre, lrc] = *rem.terms_.begin();
        std::vector<std::uint32_t> qe(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (lre[i] < lde[i]) throw exact_division_error("divide_exact: not divisible");
            qe[i] = lre[i] - lde[i];
        }
        Int qc, r;
        mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), lrc.get_mpz_t(), ldc.get_mpz_t());
        if (r != 0) throw exact_division_error("divide_exact: not divisible");
        MultiPoly qterm;
        qterm.vars_ = vars;
        qterm.terms_.emplace(std::move(qe), qc);
        qterm.normalize();
        quot += qterm;
        rem -= qterm * div;
    }
    quot.normalize();
    return quot;
}

std::map<std::uint32_t, MultiPoly> MultiPoly::coefficients_of(const std::string& var) const {
    std::map<std::uint32_t, MultiPoly> out;
    const auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) {
        if (!is_zero()) out.emplace(0, *this);
        return out;
    }
    const std::size_t vi = static_cast<std::size_t>(it - vars_.begin());
    for (const auto& [e, c] : terms_) {
        MultiPoly mono;
        mono.vars_ = vars_;
        std::vector<std::uint32_t> ne = e;
        const std::uint32_t k = ne[vi];
        ne[vi] = 0;
        mono.terms_.emplace(std::move(ne), c);
        mono.normalize();
        out[k] += mono;
    }
    for (auto i = out.begin(); i != out.end();) {
        i = i->second.is_zero() ? out.erase(i) : std::next(i);
    }
    return out;
}

std::string MultiPoly::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        Int mag = negative ? Int(-c) : c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        std::string monomial;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!monomial.empty()) monomial += "*";
            monomial += vars_[i];
            if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
        }
        if (monomial.empty()) {
            os << mag.get_str();
        } else if (mag == 1) {
            os << monomial;
        } else {
            os << mag.get_str() << "*" << monomial;
        }
    }
    return os.str();
}

std::string MultiPoly::to_json() const {
    std::ostringstream os;
    os << "{\"variables\": [";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i > 0) os << ",";
        os << "\"" << vars_[i] << "\"";
    }
    os << "], \"terms\": [";
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << ", ";
        first = false;
        os << "{\"coeff\": \"" << c.get_str() << "\", \"exp\": [";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i > 0) os << ",";
            os << e[i];
        }
        os << "]}";
    }
    os << "]}";
    return os.str();
}

namespace {

// Recursive-descent parser for the to_text() syntax.
class PolyParser {
   public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    MultiPoly parse() {
        MultiPoly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return p;
    }

   private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) {
        throw parse_error("polynomial syntax error at offset " + std::to_string(pos_) + ": " + why);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    MultiPoly parse_expr() {
        bool negative = false;
        if (eat('-'))
            negative = true;
        else
            eat('+');
        MultiPoly sum = parse_term();
        if (negative) sum = -sum;
        while (true) {
            if (eat('+')) {
                sum += parse_term();
            } else if (eat('-')) {
                sum -= parse_term();
            } else {
                break;
            }
        }
        return sum;
    }

    MultiPoly parse_term() {
        MultiPoly prod = parse_factor();
        while (eat('*')) prod *= parse_factor();
        return prod;
    }

    MultiPoly parse_factor() {
        MultiPoly base = parse_atom();
        if (eat('^')) {
            const std::uint32_t k = parse_uint();
            base = base.pow(k);
        }
        return base;
    }

    std::uint32_t parse_uint() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected exponent");
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > 100000) fail("exponent too large");
            ++pos_;
        }
        return static_cast<std::uint32_t>(v);
    }

    MultiPoly parse_atom() {
        const char c = peek();
        if (c == '(') {
            eat('(');
            MultiPoly inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                digits += text_[pos_++];
            }
            return MultiPoly::constant(Int(digits));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                name += text_[pos_++];
            }
            return MultiPoly::variable(name);
        }
        fail("expected number, variable, or '('");
    }
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace itp

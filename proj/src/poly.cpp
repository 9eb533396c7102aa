#include "toroidal/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace toroidal {

namespace {

bool term_order_desc(const Poly::Term& a, const Poly::Term& b) {
    return b.first < a.first;
}

} // namespace

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(), term_order_desc);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().second == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

Poly Poly::operator+(const Poly& o) const {
    require_same_ctx(ctx_, o.ctx_);
    Poly r(ctx_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && b->first < a->first)) {
            r.terms_.push_back(*a++);
        } else if (a == terms_.end() || a->first < b->first) {
            r.terms_.push_back(*b++);
        } else {
            Rational c = a->second + b->second;
            if (c != 0) r.terms_.emplace_back(a->first, std::move(c));
            ++a; ++b;
        }
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    require_same_ctx(ctx_, o.ctx_);
    if (is_zero() || o.is_zero()) return Poly(ctx_);
    std::unordered_map<uint64_t, Rational> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    std::unordered_map<uint64_t, Mono> monos;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Mono m = ma * mb;
            acc[m.key()] += ca * cb;
            monos.emplace(m.key(), m);
        }
    Poly r(ctx_);
    r.terms_.reserve(acc.size());
    for (auto& [k, c] : acc)
        if (c != 0) r.terms_.emplace_back(monos.at(k), std::move(c));
    std::sort(r.terms_.begin(), r.terms_.end(), term_order_desc);
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    if (c == 0) return Poly(ctx_);
    Poly r(*this);
    for (auto& [m, q] : r.terms_) q *= c;
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::constant(Rational(1), ctx_);
    Poly base = *this;
    while (e) {
        if (e & 1u) r *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

std::optional<Poly> Poly::try_divexact(const Poly& d) const {
    require_same_ctx(ctx_, d.ctx_);
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly q(ctx_), r(*this);
    const auto& [dm, dc] = d.leading();
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.leading();
        if (!dm.divides(rm)) return std::nullopt;
        Poly t = Poly::monomial(ctx_, rm.quotient(dm), rc / dc);
        q += t;
        r -= t * d;
    }
    return q;
}

Poly Poly::divexact(const Poly& d) const {
    auto q = try_divexact(d);
    if (!q) throw std::domain_error("inexact polynomial division");
    return *q;
}

Poly Poly::substitute(const std::map<std::string, Poly>& repl) const {
    std::vector<std::optional<Poly>> by_id(ctx_->size());
    for (const auto& [name, value] : repl) {
        require_same_ctx(ctx_, value.ctx());
        by_id[ctx_->id(name)] = value;
    }
    // Power cache per replaced symbol keeps repeated exponents cheap.
    std::vector<std::map<unsigned, Poly>> powers(ctx_->size());
    Poly out(ctx_);
    for (const auto& [m, c] : terms_) {
        Poly term = Poly::constant(c, ctx_);
        Mono rest = Mono::one();
        for (std::size_t id = 0; id < ctx_->size(); ++id) {
            const unsigned e = m.get(id);
            if (e == 0) continue;
            if (!by_id[id]) {
                rest.set(ctx_, id, e);
                continue;
            }
            auto it = powers[id].find(e);
            if (it == powers[id].end())
                it = powers[id].emplace(e, by_id[id]->pow(e)).first;
            term *= it->second;
        }
        out += term * Poly::monomial(ctx_, rest, Rational(1));
    }
    return out;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != ctx_->size())
        throw std::domain_error("evaluation point arity mismatch");
    Rational out(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t id = 0; id < ctx_->size(); ++id)
            for (unsigned e = 0; e < m.get(id); ++e) t *= point[id];
        out += t;
    }
    return out;
}

Rational Poly::evaluate_two(std::size_t id1, const Rational& v1, std::size_t id2,
                            const Rational& v2) const {
    std::vector<Rational> pow1{Rational(1)}, pow2{Rational(1)};
    Rational out(0);
    for (const auto& [m, c] : terms_) {
        for (std::size_t id = 0; id < ctx_->size(); ++id)
            if (id != id1 && id != id2 && m.get(id) != 0)
                throw std::domain_error("polynomial involves further symbols");
        const unsigned e1 = m.get(id1), e2 = m.get(id2);
        while (pow1.size() <= e1) pow1.push_back(pow1.back() * v1);
        while (pow2.size() <= e2) pow2.push_back(pow2.back() * v2);
        out += c * pow1[e1] * pow2[e2];
    }
    return out;
}

Poly Poly::derivative(std::size_t id) const {
    Poly r(ctx_);
    for (const auto& [m, c] : terms_) {
        const unsigned e = m.get(id);
        if (e == 0) continue;
        Mono d = m;
        d.set(ctx_, id, e - 1);
        r.terms_.emplace_back(d, c * Rational(static_cast<long>(e)));
    }
    r.normalize();
    return r;
}

Rational Poly::content() const {
    if (terms_.empty()) return Rational(0);
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational g(num_gcd, den_lcm);
    g.canonicalize();
    if (terms_.front().second < 0) g = -g;
    return g;
}

Poly Poly::primitive_part() const {
    if (terms_.empty()) return *this;
    return *this * (Rational(1) / content());
}

Poly Poly::coefficient_of(std::size_t id, unsigned k) const {
    Poly r(ctx_);
    for (const auto& [m, c] : terms_) {
        if (m.get(id) != k) continue;
        Mono rest = m;
        rest.set(ctx_, id, 0);
        r.terms_.emplace_back(rest, c);
    }
    r.normalize();
    return r;
}

bool operator<(const Poly& a, const Poly& b) {
    const auto &ta = a.terms_, &tb = b.terms_;
    for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
        if (ta[i].first != tb[i].first) return ta[i].first < tb[i].first;
        if (ta[i].second != tb[i].second) return ta[i].second < tb[i].second;
    }
    return ta.size() < tb.size();
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool printed = false;
        if (a != 1 || m.is_one()) {
            os << to_string(a);
            printed = true;
        }
        for (std::size_t id = 0; id < ctx_->size(); ++id) {
            const unsigned e = m.get(id);
            if (e == 0) continue;
            if (printed) os << "*";
            os << ctx_->name(id);
            if (e > 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

namespace {

class PolyParser {
public:
    PolyParser(const std::string& text, const Ctx& ctx) : s_(text), ctx_(ctx) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::domain_error("polynomial parse error at offset " +
                                std::to_string(pos_) + ": " + why);
    }
    void skip_ws() { while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_; }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly expr() {
        Poly acc = eat('-') ? -term() : (eat('+'), term());
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            skip_ws();
            const char c = peek();
            if (eat('*')) { acc *= factor(); continue; }
            if (eat('/')) {  // division by a nonzero rational constant
                const Poly d = factor();
                if (!d.is_constant() || d.is_zero()) fail("division is by constants only");
                acc *= Rational(1) / d.constant_value();
                continue;
            }
            // implicit multiplication: "2alpha", "alpha(n+1)"
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '(') { acc *= factor(); continue; }
            return acc;
        }
    }

    Poly factor() {
        Poly base = atom();
        if (eat('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent expected");
            base = base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
        }
        return base;
    }

    Poly atom() {
        skip_ws();
        if (eat('(')) {
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string num = s_.substr(start, pos_ - start);
            if (eat('/')) {
                skip_ws();
                start = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                if (start == pos_) fail("denominator expected");
                num += "/" + s_.substr(start, pos_ - start);
            }
            return Poly::constant(parse_rational(num), ctx_);
        }
        if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return Poly::variable(s_.substr(start, pos_ - start), ctx_);
        }
        fail("unexpected character");
    }

    const std::string& s_;
    Ctx ctx_;
    std::size_t pos_ = 0;
};

} // namespace

Poly Poly::parse(const std::string& text, const Ctx& ctx) {
    return PolyParser(text, ctx).parse();
}

std::map<uint64_t, Poly> split_by_symbols(const Poly& p, const std::vector<std::size_t>& ids) {
    std::map<uint64_t, Poly> out;
    const Ctx& ctx = p.ctx();
    for (const auto& [m, c] : p.terms()) {
        Mono sel, rest = m;
        for (std::size_t id : ids) {
            sel.set(ctx, id, m.get(id));
            rest.set(ctx, id, 0);
        }
        auto [it, inserted] = out.emplace(sel.key(), Poly(ctx));
        it->second += Poly::monomial(ctx, rest, c);
    }
    return out;
}

Poly gcd_univariate(const Poly& a, const Poly& b, std::size_t id) {
    for (std::size_t i = 0; i < a.ctx()->size(); ++i)
        if (i != id && (a.depends_on(i) || b.depends_on(i)))
            throw std::domain_error("gcd_univariate: polynomial involves other symbols");
    Poly f = a, g = b;
    while (!g.is_zero()) {
        // remainder of f by g in the single symbol
        Poly r = f;
        const unsigned dg = g.degree_in(id);
        const Poly glc = g.coefficient_of(id, dg);
        while (!r.is_zero() && r.degree_in(id) >= dg) {
            const unsigned dr = r.degree_in(id);
            const Poly rlc = r.coefficient_of(id, dr);
            Poly t = Poly::monomial(r.ctx(), Mono::var(r.ctx(), id, dr - dg),
                                    rlc.constant_value() / glc.constant_value());
            r -= t * g;
            if (!r.is_zero() && r.degree_in(id) == dr &&
                r.coefficient_of(id, dr) != Poly(r.ctx()))
                throw std::domain_error("gcd_univariate: cancellation failed");
        }
        f = g;
        g = r;
    }
    if (f.is_zero()) return f;
    return f.primitive_part();
}

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_ctx(num_.ctx(), den_.ctx());
    if (den_.is_zero()) throw std::domain_error("fraction with zero denominator");
    reduce();
}

void RatFn::reduce() {
    if (num_.is_zero()) {
        den_ = Poly::constant(Rational(1), num_.ctx());
        return;
    }
    // Denominators stay univariate in this system; cancel its gcd with the
    // univariate content of the numerator.
    std::optional<std::size_t> den_sym;
    bool den_multivariate = false;
    for (std::size_t id = 0; id < den_.ctx()->size(); ++id) {
        if (!den_.depends_on(id)) continue;
        if (den_sym) { den_multivariate = true; break; }
        den_sym = id;
    }
    if (!den_multivariate && den_sym) {
        std::vector<std::size_t> others;
        for (std::size_t id = 0; id < num_.ctx()->size(); ++id)
            if (id != *den_sym) others.push_back(id);
        Poly g = den_;
        for (const auto& [key, part] : split_by_symbols(num_, others)) {
            g = gcd_univariate(g, part, *den_sym);
            if (g.is_constant()) break;
        }
        if (!g.is_constant()) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
    }
    // Normalize: denominator primitive with positive leading coefficient.
    const Rational c = den_.content();
    num_ *= Rational(1) / c;
    den_ *= Rational(1) / c;
}

RatFn RatFn::operator+(const RatFn& o) const {
    if (den_ == o.den_) return RatFn(num_ + o.num_, den_);
    return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator*(const RatFn& o) const {
    return RatFn(num_ * o.num_, den_ * o.den_);
}

RatFn RatFn::operator/(const RatFn& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero fraction");
    return RatFn(num_ * o.den_, den_ * o.num_);
}

std::string RatFn::str() const {
    if (is_polynomial()) return as_poly().str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace toroidal

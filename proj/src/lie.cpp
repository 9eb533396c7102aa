#include "toroidal/lie.hpp"

#include <cctype>
#include <sstream>

namespace toroidal {

Poly AffineExp::to_poly(const Ctx& ctx) const {
    Poly p = Poly::constant(Rational(cst_), ctx);
    for (std::size_t id = 0; id < ctx->size(); ++id)
        if (coeff_[id] != 0)
            p += Poly::variable(ctx->name(id), ctx) * Rational(coeff_[id]);
    return p;
}

AffineExp AffineExp::substitute(const Ctx& ctx,
                                const std::map<std::string, long>& values) const {
    AffineExp r = *this;
    for (const auto& [name, value] : values) {
        const std::size_t id = ctx->id(name);
        r.cst_ += r.coeff_[id] * value;
        r.coeff_[id] = 0;
    }
    return r;
}

std::string AffineExp::str(const Ctx& ctx) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t id = 0; id < ctx->size(); ++id) {
        const long c = coeff_[id];
        if (c == 0) continue;
        if (first) {
            if (c == -1) os << "-";
            else if (c != 1) os << c << "*";
        } else {
            os << (c < 0 ? "-" : "+");
            if (c != 1 && c != -1) os << std::abs(c) << "*";
        }
        os << ctx->name(id);
        first = false;
    }
    if (first) {
        os << cst_;
    } else if (cst_ != 0) {
        os << (cst_ < 0 ? "-" : "+") << std::abs(cst_);
    }
    return os.str();
}

namespace {

class AffineParser {
public:
    AffineParser(const std::string& s, const Ctx& ctx) : s_(s), ctx_(ctx) {}

    AffineExp parse() {
        AffineExp acc;
        bool neg = eat('-');
        if (!neg) eat('+');
        acc = term(neg);
        for (;;) {
            skip_ws();
            if (eat('+')) acc = acc + term(false);
            else if (eat('-')) acc = acc + term(true);
            else break;
        }
        skip_ws();
        if (pos_ != s_.size())
            throw std::domain_error("exponent parse error: " + s_);
        return acc;
    }

private:
    void skip_ws() { while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_; }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    AffineExp term(bool negate) {
        skip_ws();
        long mult = 1;
        bool have_number = false;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mult = std::stol(s_.substr(start, pos_ - start));
            have_number = true;
            eat('*');
        }
        skip_ws();
        if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            AffineExp e = AffineExp::symbol(ctx_, s_.substr(start, pos_ - start), mult);
            return negate ? -e : e;
        }
        if (!have_number) throw std::domain_error("exponent parse error: " + s_);
        return AffineExp::constant(negate ? -mult : mult);
    }

    const std::string& s_;
    Ctx ctx_;
    std::size_t pos_ = 0;
};

} // namespace

AffineExp AffineExp::parse(const std::string& text, const Ctx& ctx) {
    return AffineParser(text, ctx).parse();
}

std::string BasisDeriv::str(const Ctx& ctx) const {
    std::ostringstream os;
    if (t0 != 0) os << "t0^" << t0 << " ";
    if (!t1.is_zero()) {
        os << "t1^";
        if (t1.is_constant()) os << t1.constant_value();
        else os << "{" << t1.str(ctx) << "}";
        os << " ";
    }
    os << "d" << dir;
    return os.str();
}

BasisDeriv BasisDeriv::parse(const std::string& text, const Ctx& ctx) {
    BasisDeriv d;
    d.t0 = 0;
    d.t1 = AffineExp::constant(0);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_exponent = [&]() -> AffineExp {
        if (pos >= text.size() || text[pos] != '^')
            throw std::domain_error("derivation parse error, expected '^': " + text);
        ++pos;
        if (pos < text.size() && text[pos] == '{') {
            const std::size_t close = text.find('}', pos);
            if (close == std::string::npos)
                throw std::domain_error("derivation parse error, unclosed brace: " + text);
            AffineExp e = AffineExp::parse(text.substr(pos + 1, close - pos - 1), ctx);
            pos = close + 1;
            return e;
        }
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw std::domain_error("derivation parse error, exponent: " + text);
        return AffineExp::constant(std::stol(text.substr(start, pos - start)));
    };
    for (;;) {
        skip_ws();
        if (text.compare(pos, 2, "t0") == 0) {
            pos += 2;
            d.t0 = read_exponent().constant_value();
        } else if (text.compare(pos, 2, "t1") == 0) {
            pos += 2;
            d.t1 = read_exponent();
        } else if (pos < text.size() && text[pos] == 'd') {
            ++pos;
            if (pos >= text.size() || (text[pos] != '0' && text[pos] != '1'))
                throw std::domain_error("derivation parse error, direction: " + text);
            d.dir = text[pos] - '0';
            ++pos;
            skip_ws();
            if (pos != text.size())
                throw std::domain_error("derivation parse error, trailing input: " + text);
            return d;
        } else {
            throw std::domain_error("derivation parse error: " + text);
        }
    }
}

LieElement LieElement::operator+(const LieElement& o) const {
    require_same_ctx(ctx_, o.ctx_);
    LieElement r = *this;
    for (const auto& [d, c] : o.terms_) r.add_term(d, c);
    return r;
}

LieElement LieElement::operator-(const LieElement& o) const { return *this + (-o); }

LieElement LieElement::operator-() const {
    LieElement r(ctx_);
    for (const auto& [d, c] : terms_) r.terms_[d] = -c;
    return r;
}

LieElement LieElement::operator*(const Poly& c) const {
    LieElement r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [d, q] : terms_) r.add_term(d, q * c);
    return r;
}

LieElement LieElement::specialize(const std::map<std::string, long>& values) const {
    LieElement r(ctx_);
    std::map<std::string, Poly> poly_values;
    for (const auto& [name, v] : values)
        poly_values.emplace(name, Poly::constant(Rational(v), ctx_));
    for (const auto& [d, c] : terms_) {
        BasisDeriv nd = d;
        nd.t1 = d.t1.substitute(ctx_, values);
        r.add_term(nd, c.substitute(poly_values));
    }
    return r;
}

std::string LieElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (c.is_constant() && c.constant_value() == 1)
            os << d.str(ctx_);
        else
            os << "(" << c.str() << ")*" << d.str(ctx_);
    }
    return os.str();
}

LieElement LieElement::parse(const std::string& text, const Ctx& ctx) {
    LieElement out(ctx);
    if (text == "0") return out;
    std::size_t pos = 0;
    // Split on top-level " + " separators.
    while (pos < text.size()) {
        std::size_t next = text.find(" + ", pos);
        std::string piece = text.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? text.size() : next + 3;
        Poly coeff = Poly::constant(Rational(1), ctx);
        std::string deriv_part = piece;
        if (!piece.empty() && piece[0] == '(') {
            int depth = 0;
            std::size_t i = 0;
            for (; i < piece.size(); ++i) {
                if (piece[i] == '(') ++depth;
                else if (piece[i] == ')' && --depth == 0) break;
            }
            if (depth != 0 || i + 1 >= piece.size() || piece[i + 1] != '*')
                throw std::domain_error("element parse error: " + piece);
            coeff = Poly::parse(piece.substr(1, i - 1), ctx);
            deriv_part = piece.substr(i + 2);
        }
        out.add_term(BasisDeriv::parse(deriv_part, ctx), coeff);
    }
    return out;
}

LieElement bracket(const Ctx& ctx, const BasisDeriv& x, const BasisDeriv& y) {
    LieElement out(ctx);
    // r_a: the a-component of the second element's exponent pair, as a scalar.
    const Poly r_a = (x.dir == 0) ? Poly::constant(Rational(y.t0), ctx) : y.t1.to_poly(ctx);
    const Poly m_b = (y.dir == 0) ? Poly::constant(Rational(x.t0), ctx) : x.t1.to_poly(ctx);
    BasisDeriv db{x.t0 + y.t0, x.t1 + y.t1, y.dir};
    BasisDeriv da{x.t0 + y.t0, x.t1 + y.t1, x.dir};
    out.add_term(db, r_a);
    out.add_term(da, -m_b);
    return out;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    require_same_ctx(x.ctx(), y.ctx());
    LieElement out(x.ctx());
    for (const auto& [dx, cx] : x.terms())
        for (const auto& [dy, cy] : y.terms()) {
            LieElement b = bracket(x.ctx(), dx, dy);
            out = out + b * (cx * cy);
        }
    return out;
}

} // namespace toroidal

#ifndef TOROIDAL_RING_HPP
#define TOROIDAL_RING_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace toroidal {

/// A fixed, ordered set of polynomial symbols. Every Poly carries a shared
/// pointer to the context it was built in; operations on operands from
/// different contexts are rejected.
///
/// The symbol order is the grading order for monomial comparison: index 0
/// is the most significant position.
class RingContext {
public:
    static constexpr std::size_t kMaxSymbols = 8;

    RingContext(std::vector<std::string> symbols, std::vector<bool> exponent_capable)
        : symbols_(std::move(symbols)), exponent_capable_(std::move(exponent_capable)) {
        if (symbols_.size() > kMaxSymbols)
            throw std::domain_error("ring context limited to 8 symbols");
        if (exponent_capable_.size() != symbols_.size())
            throw std::domain_error("exponent capability list mismatch");
        for (std::size_t i = 0; i < symbols_.size(); ++i)
            for (std::size_t j = i + 1; j < symbols_.size(); ++j)
                if (symbols_[i] == symbols_[j])
                    throw std::domain_error("duplicate symbol: " + symbols_[i]);
    }

    std::size_t size() const { return symbols_.size(); }
    const std::string& name(std::size_t id) const { return symbols_.at(id); }
    bool exponent_capable(std::size_t id) const { return exponent_capable_.at(id); }

    /// Id lookup; throws if the symbol is not in this context.
    std::size_t id(const std::string& name) const {
        for (std::size_t i = 0; i < symbols_.size(); ++i)
            if (symbols_[i] == name) return i;
        throw std::domain_error("symbol not in ring context: " + name);
    }

    bool has(const std::string& name) const {
        for (const auto& s : symbols_)
            if (s == name) return true;
        return false;
    }

private:
    std::vector<std::string> symbols_;
    std::vector<bool> exponent_capable_;
};

using Ctx = std::shared_ptr<const RingContext>;

/// The library-wide default context. Symbol order fixes the graded-lex
/// monomial order used for canonical forms: alpha < gamma < m < n < s < r < k < u.
/// The trailing six symbols may appear in formal torus exponents.
inline const Ctx& default_ctx() {
    static const Ctx ctx = std::make_shared<RingContext>(
        std::vector<std::string>{"alpha", "gamma", "m", "n", "s", "r", "k", "u"},
        std::vector<bool>{false, false, true, true, true, true, true, true});
    return ctx;
}

inline void require_same_ctx(const Ctx& a, const Ctx& b) {
    if (a.get() != b.get())
        throw std::domain_error("operands belong to different ring contexts");
}

/// Packed exponent tuple: one byte per symbol, symbol 0 in the most
/// significant byte. Total degree + integer comparison of the packed word
/// realizes graded lexicographic order directly.
class Mono {
public:
    Mono() : bits_(0) {}

    static Mono one() { return Mono(); }

    static Mono var(const Ctx& ctx, std::size_t id, unsigned power = 1) {
        Mono m;
        m.set(ctx, id, power);
        return m;
    }

    unsigned get(std::size_t id) const {
        return static_cast<unsigned>((bits_ >> shift(id)) & 0xffu);
    }

    void set(const Ctx& ctx, std::size_t id, unsigned power) {
        if (id >= ctx->size()) throw std::domain_error("symbol id out of range");
        if (power > 0xff) throw std::overflow_error("monomial exponent exceeds 255");
        bits_ = (bits_ & ~(uint64_t{0xff} << shift(id))) | (uint64_t{power} << shift(id));
    }

    unsigned degree() const {
        uint64_t b = bits_;
        unsigned d = 0;
        while (b) { d += static_cast<unsigned>(b & 0xff); b >>= 8; }
        return d;
    }

    bool is_one() const { return bits_ == 0; }

    Mono operator*(const Mono& o) const {
        Mono r;
        for (int i = 0; i < 8; ++i) {
            uint64_t sum = ((bits_ >> (8 * i)) & 0xff) + ((o.bits_ >> (8 * i)) & 0xff);
            if (sum > 0xff) throw std::overflow_error("monomial exponent exceeds 255");
            r.bits_ |= sum << (8 * i);
        }
        return r;
    }

    /// Componentwise divisibility.
    bool divides(const Mono& o) const {
        for (int i = 0; i < 8; ++i)
            if (((bits_ >> (8 * i)) & 0xff) > ((o.bits_ >> (8 * i)) & 0xff)) return false;
        return true;
    }

    Mono quotient(const Mono& o) const {  // *this / o, requires o.divides(*this)
        Mono r;
        r.bits_ = 0;
        for (int i = 0; i < 8; ++i) {
            uint64_t a = (bits_ >> (8 * i)) & 0xff, b = (o.bits_ >> (8 * i)) & 0xff;
            if (b > a) throw std::domain_error("monomial quotient is not exact");
            r.bits_ |= (a - b) << (8 * i);
        }
        return r;
    }

    uint64_t key() const { return bits_; }

    /// Graded lex: degree first, then lex with symbol 0 most significant.
    friend bool operator<(const Mono& a, const Mono& b) {
        const unsigned da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.bits_ < b.bits_;
    }
    friend bool operator==(const Mono& a, const Mono& b) { return a.bits_ == b.bits_; }
    friend bool operator!=(const Mono& a, const Mono& b) { return a.bits_ != b.bits_; }

private:
    static constexpr unsigned shift(std::size_t id) { return 8u * static_cast<unsigned>(7 - id); }
    uint64_t bits_;
};

} // namespace toroidal

#endif

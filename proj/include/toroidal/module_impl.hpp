#ifndef TOROIDAL_MODULE_IMPL_HPP
#define TOROIDAL_MODULE_IMPL_HPP

// Template bodies for module.hpp. Not a standalone header.

#include <algorithm>

namespace toroidal {

template <class S>
std::string BasicPBW<S>::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    const Ctx& ring = mod_ ? mod_->ring() : default_ctx();
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += "(" + c.str() + ")*[";
        bool ff = true;
        for (const auto& [d, mult] : key.mono.factors)
            for (unsigned i = 0; i < mult; ++i) {
                if (!ff) out += " ";
                ff = false;
                out += d.str(ring);
            }
        out += "]";
        out += key.top.str(ring);
    }
    return out;
}

template <class S>
BasicPBW<S> InducedModule::monomial_vector(const std::vector<BasisDeriv>& word,
                                           const TopVector& t) const {
    BasicPBW<S> v = top_vector<S>(t);
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = act<S>(*it, v);
    return v;
}

template <class S>
BasicPBW<S> InducedModule::top_action(const BasisDeriv& x, const TopVector& t) const {
    if (t.vacuum || top_ != TopKind::weight)
        throw std::domain_error("top action is defined on weight tops only");
    if (x.t0 != 0) throw std::domain_error("top action requires a degree-zero operator");
    BasicPBW<S> out(shared_from_this());
    Poly coeff(ring_);
    if (x.dir == 1) {
        coeff = Poly::variable("n", ring_) + t.nu.to_poly(ring_) - alpha_ * x.t1.to_poly(ring_);
    } else {
        coeff = beta_;
    }
    out.add_term(PBWKey{PBWMono{}, TopVector::weight(t.nu + x.t1)}, scalar_from_poly<S>(coeff));
    return out;
}

template <class S>
BasicPBW<S> InducedModule::act_on_term(const BasisDeriv& x, const PBWMono& mono,
                                       const TopVector& top) const {
    BasicPBW<S> out(shared_from_this());
    const Part px = classify(x, splitting_);
    if (mono.empty()) {
        if (px == Part::plus) return out;  // non-lowering part acts trivially on the top
        if (px == Part::zero) return top_action<S>(x, top);
        PBWMono m;
        m.factors.emplace_back(x, 1u);
        out.add_term(PBWKey{m, top}, scalar_from_poly<S>(Poly::constant(Rational(1), ring_)));
        return out;
    }
    const BasisDeriv y = mono.factors.front().first;
    if (px == Part::minus && !(x < y)) {
        PBWMono m = mono;
        if (m.factors.front().first == x)
            ++m.factors.front().second;
        else
            m.factors.insert(m.factors.begin(), {x, 1u});
        out.add_term(PBWKey{m, top}, scalar_from_poly<S>(Poly::constant(Rational(1), ring_)));
        return out;
    }
    // x y tail = y (x tail) + [x, y] tail
    PBWMono tail = mono;
    if (--tail.factors.front().second == 0) tail.factors.erase(tail.factors.begin());
    out = act<S>(y, act_on_term<S>(x, tail, top));
    const LieElement br = bracket(ring_, x, y);
    for (const auto& [d, c] : br.terms()) {
        BasicPBW<S> piece = act_on_term<S>(d, tail, top);
        out = out + piece * scalar_from_poly<S>(c);
    }
    return out;
}

template <class S>
BasicPBW<S> InducedModule::act(const BasisDeriv& x, const BasicPBW<S>& w) const {
    if (!algebra_member(algebra_, x))
        throw std::domain_error("operator is not a member of the module's algebra");
    BasicPBW<S> out(shared_from_this());
    for (const auto& [key, c] : w.terms()) {
        BasicPBW<S> piece = act_on_term<S>(x, key.mono, key.top);
        out = out + piece * c;
    }
    return out;
}

template <class S>
BasicPBW<S> InducedModule::act(const LieElement& x, const BasicPBW<S>& w) const {
    require_same_ctx(x.ctx(), ring_);
    BasicPBW<S> out(shared_from_this());
    for (const auto& [d, c] : x.terms()) {
        BasicPBW<S> piece = act<S>(d, w);
        out = out + piece * scalar_from_poly<S>(c);
    }
    return out;
}

template <class S>
BasicPBW<S> InducedModule::act_word(const std::vector<BasisDeriv>& word,
                                    const BasicPBW<S>& w) const {
    BasicPBW<S> v = w;
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = act<S>(*it, v);
    return v;
}

template <class S>
BasicPBW<S> shift_base(const BasicPBW<S>& w, long c) {
    if (c == 0 || w.is_zero()) return w;
    const ModCtx& mod = w.mod();
    const Ctx& ring = mod->ring();
    const Poly shifted_n =
        Poly::variable("n", ring) + Poly::constant(Rational(c), ring);
    const std::size_t n_id = ring->id("n");
    BasicPBW<S> out(mod);
    for (const auto& [key, coef] : w.terms()) {
        PBWKey nk = key;
        // Exponents and top offsets with an n-component shift along with
        // the base point; a weight top v(n + nu) gains the shift itself.
        PBWMono m;
        for (auto [d, mult] : key.mono.factors) {
            d.t1 = d.t1 + AffineExp::constant(d.t1.coeff(n_id) * c);
            m.factors.emplace_back(d, mult);
        }
        nk.mono = m;
        if (!nk.top.vacuum)
            nk.top.nu = nk.top.nu + AffineExp::constant(c * (1 + nk.top.nu.coeff(n_id)));
        out.add_term(nk, coef.substitute({{"n", shifted_n}}));
    }
    return out;
}

template <class S>
BasicPBW<S> specialize_vector(const BasicPBW<S>& w, long m0, long n0, const ModCtx& target) {
    const Ctx& ring = target->ring();
    const Poly m_val = Poly::constant(Rational(m0), ring);
    BasicPBW<S> out(target);
    for (const auto& [key, coef] : w.terms()) {
        PBWKey nk;
        nk.top = key.top;
        if (!nk.top.vacuum) nk.top.nu = nk.top.nu.substitute(ring, {{"m", m0}});
        for (auto [d, mult] : key.mono.factors) {
            d.t1 = d.t1.substitute(ring, {{"m", m0}});
            nk.mono.factors.emplace_back(d, mult);
        }
        // Factors may coincide after specialization; renormalize the word.
        std::vector<BasisDeriv> word;
        for (const auto& [d, mult] : nk.mono.factors)
            for (unsigned i = 0; i < mult; ++i) word.push_back(d);
        std::sort(word.begin(), word.end(), [](const BasisDeriv& a, const BasisDeriv& b) { return b < a; });
        PBWMono m;
        for (const auto& d : word) {
            if (!m.factors.empty() && m.factors.back().first == d)
                ++m.factors.back().second;
            else
                m.factors.emplace_back(d, 1u);
        }
        nk.mono = m;
        out.add_term(nk, coef.substitute({{"m", m_val}}));
    }
    return shift_base(out, n0);
}

template <class S>
std::vector<std::pair<std::string, std::string>> radical_residuals(
    const ModCtx& mod, const BasicPBW<S>& w, unsigned degree,
    const std::vector<std::string>& fresh_symbols) {
    std::vector<std::pair<std::string, std::string>> bad;
    for (const auto& chain : raising_chains(mod, degree, fresh_symbols)) {
        const BasicPBW<S> img = mod->act_word(chain.ops, w);
        if (img.is_zero()) continue;
        for (const auto& [key, c] : img.terms())
            bad.emplace_back(chain.str(mod->ring()), c.str());
    }
    return bad;
}

template <class S>
BasicPBW<S> detail_place_loop_head(const ModCtx& mod, const BasisDeriv& head,
                                   const std::vector<BasisDeriv>& loop_word,
                                   const TopVector& top, const LoopOracle<S>& oracle) {
    if (in_loop(head)) {
        std::vector<BasisDeriv> word = loop_word;
        word.insert(word.begin(), head);
        return mod->act_word(word, mod->template top_vector<S>(top));
    }
    if (loop_word.empty()) {
        if (top.vacuum) throw std::domain_error("loop reduction needs a weight top");
        BasicPBW<S> entry = oracle(-head.t0, head.t1.constant_value());
        return shift_base(entry, top.nu.constant_value());
    }
    const BasisDeriv u1 = loop_word.front();
    std::vector<BasisDeriv> rest(loop_word.begin() + 1, loop_word.end());
    BasicPBW<S> out = mod->act(u1, detail_place_loop_head(mod, head, rest, top, oracle));
    const long c = u1.t1.constant_value() - head.t1.constant_value();
    const BasisDeriv merged = deriv1(head.t0 + u1.t0, head.t1 + u1.t1);
    BasicPBW<S> merged_part = detail_place_loop_head(mod, merged, rest, top, oracle);
    return out + merged_part * Rational(c);
}

template <class S>
BasicPBW<S> reduce_to_loop(const BasicPBW<S>& w, const LoopOracle<S>& oracle) {
    const ModCtx& mod = w.mod();
    BasicPBW<S> out(mod);
    for (const auto& [key, coef] : w.terms()) {
        std::vector<BasisDeriv> word = key.mono.word();
        bool loop_supported = true;
        for (const auto& d : word)
            if (!in_loop(d)) { loop_supported = false; break; }
        if (loop_supported) {
            out.add_term(key, coef);
            continue;
        }
        const BasisDeriv head = word.front();
        std::vector<BasisDeriv> rest(word.begin() + 1, word.end());
        BasicPBW<S> tail(mod);
        tail.add_term(PBWKey{PBWMono{}, key.top},
                      scalar_from_poly<S>(Poly::constant(Rational(1), mod->ring())));
        for (auto it = rest.rbegin(); it != rest.rend(); ++it) tail = mod->act(*it, tail);
        tail = reduce_to_loop(tail, oracle);
        for (const auto& [tkey, tcoef] : tail.terms()) {
            BasicPBW<S> placed =
                detail_place_loop_head(mod, head, tkey.mono.word(), tkey.top, oracle);
            S c = tcoef;
            c *= coef;
            out = out + placed * c;
        }
    }
    return out;
}

} // namespace toroidal

#endif

#include "toroidal/module.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "json.hpp"

#include "toroidal/linalg.hpp"

namespace toroidal {

namespace {

template <class S>
std::string pbw_json_impl(const BasicPBW<S>& w) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    const Ctx& ring = w.mod() ? w.mod()->ring() : default_ctx();
    for (const auto& [key, c] : w.terms()) {
        nlohmann::ordered_json t;
        t["coeff"] = c.str();
        auto factors = nlohmann::ordered_json::array();
        for (const auto& d : key.mono.word()) factors.push_back(d.str(ring));
        t["factors"] = factors;
        t["top"] = key.top.str(ring);
        j.push_back(t);
    }
    return j.dump();
}

} // namespace

std::string TopVector::str(const Ctx& ctx) const {
    if (vacuum) return "vac";
    if (nu.is_zero()) return "v(n)";
    std::string off = nu.str(ctx);
    if (!off.empty() && off[0] != '-') off = "+" + off;
    return "v(n" + off + ")";
}

std::string RaisingChain::str(const Ctx& ctx) const {
    std::string out;
    for (const auto& d : ops) {
        if (!out.empty()) out += " ";
        out += "(" + d.str(ctx) + ")";
    }
    return out;
}

Poly InducedModule::critical_beta(const Poly& alpha) {
    return (alpha * alpha + alpha) * Rational(-1, 2);
}

ModCtx InducedModule::weight_module(AlgebraKind algebra, const Ctx& ring) {
    return weight_module(algebra, ring, Poly::variable("alpha", ring));
}

ModCtx InducedModule::weight_module(AlgebraKind algebra, const Ctx& ring, Poly alpha) {
    Poly beta = critical_beta(alpha);
    return weight_module(algebra, ring, std::move(alpha), std::move(beta));
}

ModCtx InducedModule::weight_module(AlgebraKind algebra, const Ctx& ring, Poly alpha, Poly beta) {
    require_same_ctx(ring, alpha.ctx());
    require_same_ctx(ring, beta.ctx());
    return ModCtx(new InducedModule(algebra, Splitting::triangular, TopKind::weight, ring,
                                    std::move(alpha), std::move(beta)));
}

ModCtx InducedModule::vacuum_module(AlgebraKind algebra, const Ctx& ring) {
    return ModCtx(new InducedModule(algebra, Splitting::vertex, TopKind::vacuum, ring, Poly(ring),
                                    Poly(ring)));
}

PBWVector InducedModule::straighten_unordered(
    const std::vector<BasisDeriv>& word, const TopVector& top,
    const std::function<std::size_t(std::size_t)>& pick) const {
    struct Item {
        Poly coeff;
        std::vector<BasisDeriv> word;
        TopVector top;
    };
    PBWVector out(shared_from_this());
    std::deque<Item> work;
    work.push_back({Poly::constant(Rational(1), ring_), word, top});
    while (!work.empty()) {
        Item it = std::move(work.front());
        work.pop_front();
        // Collect reducible positions: an adjacent inversion, or a
        // non-lowering factor at the end of the word.
        std::vector<std::size_t> sites;
        for (std::size_t i = 0; i + 1 < it.word.size(); ++i)
            if (classify(it.word[i], splitting_) != Part::minus || it.word[i] < it.word[i + 1])
                sites.push_back(i);
        const bool tail_site =
            !it.word.empty() && classify(it.word.back(), splitting_) != Part::minus;
        if (tail_site) sites.push_back(it.word.size() - 1);
        if (sites.empty()) {
            PBWMono m;
            for (const auto& d : it.word) {
                if (!m.factors.empty() && m.factors.back().first == d)
                    ++m.factors.back().second;
                else
                    m.factors.emplace_back(d, 1u);
            }
            out.add_term(PBWKey{m, it.top}, it.coeff);
            continue;
        }
        const std::size_t site = sites[pick(sites.size()) % sites.size()];
        if (site + 1 == it.word.size()) {
            // boundary: absorb the last factor into the top
            const BasisDeriv x = it.word.back();
            const Part p = classify(x, splitting_);
            std::vector<BasisDeriv> rest(it.word.begin(), it.word.end() - 1);
            if (p == Part::plus) continue;  // annihilates the top
            PBWVector acted = top_action<Poly>(x, it.top);
            for (const auto& [k, c] : acted.terms())
                work.push_back({it.coeff * c, rest, k.top});
            continue;
        }
        // swap: x y -> y x + [x, y]
        const BasisDeriv x = it.word[site], y = it.word[site + 1];
        std::vector<BasisDeriv> swapped = it.word;
        std::swap(swapped[site], swapped[site + 1]);
        work.push_back({it.coeff, std::move(swapped), it.top});
        const LieElement br = bracket(ring_, x, y);
        for (const auto& [d, c] : br.terms()) {
            std::vector<BasisDeriv> contracted;
            contracted.reserve(it.word.size() - 1);
            for (std::size_t i = 0; i < it.word.size(); ++i) {
                if (i == site) contracted.push_back(d);
                else if (i != site + 1) contracted.push_back(it.word[i]);
            }
            work.push_back({it.coeff * c, std::move(contracted), it.top});
        }
    }
    return out;
}

namespace {

// Lowering generators available to a module, restricted to a t1-window for
// the infinite-exponent algebras.
std::vector<BasisDeriv> lowering_generators(const InducedModule& mod, long t0,
                                            std::optional<std::pair<long, long>> window) {
    std::vector<BasisDeriv> out;
    const bool vertex = mod.splitting() == Splitting::vertex;
    auto push_d1 = [&](long e) { out.push_back(deriv1(t0, e)); };
    auto push_d0 = [&](long e) { out.push_back(deriv0(t0, e)); };
    switch (mod.algebra()) {
        case AlgebraKind::L:
            if (t0 <= -1)
                for (long e = -1; e <= 1; ++e) push_d1(e);
            break;
        case AlgebraKind::H:
        case AlgebraKind::Hhat: {
            if (!window) throw std::domain_error("t1-window required for this module");
            if (t0 <= -1)
                for (long e = window->first; e <= window->second; ++e) push_d1(e);
            break;
        }
        case AlgebraKind::D: {
            if (!window) throw std::domain_error("t1-window required for this module");
            const long d1_floor = -1, d0_floor = vertex ? -2 : -1;
            if (t0 <= d1_floor)
                for (long e = window->first; e <= window->second; ++e) push_d1(e);
            if (t0 <= d0_floor)
                for (long e = window->first; e <= window->second; ++e) push_d0(e);
            break;
        }
    }
    return out;
}

void enumerate_monomials(const InducedModule& mod, long remaining,
                         std::optional<BasisDeriv> bound,
                         std::optional<std::pair<long, long>> window,
                         std::vector<BasisDeriv>& current,
                         std::vector<std::vector<BasisDeriv>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (long t0 = -1; t0 >= -remaining; --t0) {
        for (const auto& g : lowering_generators(mod, t0, window)) {
            if (bound && *bound < g) continue;  // keep factors descending
            current.push_back(g);
            enumerate_monomials(mod, remaining + t0, g, window, current, out);
            current.pop_back();
        }
    }
}

} // namespace

std::vector<PBWVector> weight_basis(const ModCtx& mod, unsigned s, long weight_offset,
                                    std::optional<std::pair<long, long>> t1_window) {
    std::vector<std::vector<BasisDeriv>> words;
    std::vector<BasisDeriv> current;
    enumerate_monomials(*mod, s, std::nullopt, t1_window, current, words);
    std::sort(words.begin(), words.end());
    std::vector<PBWVector> out;
    for (const auto& word : words) {
        PBWMono m;
        AffineExp t1deg;
        for (const auto& d : word) {
            if (!m.factors.empty() && m.factors.back().first == d)
                ++m.factors.back().second;
            else
                m.factors.emplace_back(d, 1u);
            t1deg = t1deg + d.t1;
        }
        TopVector top;
        if (mod->top_kind() == TopKind::vacuum) {
            if (!(t1deg == AffineExp::constant(weight_offset))) continue;
            top = TopVector::vac();
        } else {
            top = TopVector::weight(AffineExp::constant(weight_offset) - t1deg);
        }
        PBWVector v(mod);
        v.add_term(PBWKey{m, top}, Poly::constant(Rational(1), mod->ring()));
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<unsigned long> character_dims(const ModCtx& mod, unsigned max_s) {
    std::vector<unsigned long> dims;
    for (unsigned s = 0; s <= max_s; ++s) dims.push_back(weight_basis(mod, s, 0).size());
    return dims;
}

std::vector<RaisingChain> raising_chains(const ModCtx& mod, unsigned total,
                                         const std::vector<std::string>& fresh_symbols) {
    if (mod->splitting() != Splitting::triangular)
        throw std::domain_error("raising chains target the triangular splitting");
    // compositions of `total` into parts >= 1
    std::vector<std::vector<unsigned>> compositions;
    std::vector<unsigned> cur;
    std::function<void(unsigned)> rec = [&](unsigned left) {
        if (left == 0) {
            compositions.push_back(cur);
            return;
        }
        for (unsigned part = 1; part <= left; ++part) {
            cur.push_back(part);
            rec(left - part);
            cur.pop_back();
        }
    };
    rec(total);

    std::vector<RaisingChain> chains;
    const bool loop = mod->algebra() == AlgebraKind::L;
    for (const auto& comp : compositions) {
        if (loop) {
            // all t1-exponent selections in -1..1
            std::vector<RaisingChain> partial{RaisingChain{}};
            for (unsigned part : comp) {
                std::vector<RaisingChain> next;
                for (const auto& pc : partial)
                    for (long e = -1; e <= 1; ++e) {
                        RaisingChain c = pc;
                        c.ops.push_back(deriv1(part, e));
                        next.push_back(std::move(c));
                    }
                partial = std::move(next);
            }
            for (auto& c : partial) chains.push_back(std::move(c));
        } else {
            if (comp.size() > fresh_symbols.size())
                throw std::domain_error(
                    "raising chain longer than the supply of fresh exponent symbols");
            // formal exponent per factor; the full algebra also carries
            // d0-type raising generators
            const bool with_d0 = mod->algebra() == AlgebraKind::D;
            std::vector<RaisingChain> partial{RaisingChain{}};
            for (std::size_t i = 0; i < comp.size(); ++i) {
                const AffineExp e = AffineExp::symbol(mod->ring(), fresh_symbols[i]);
                std::vector<RaisingChain> next;
                for (const auto& pc : partial) {
                    RaisingChain c1 = pc;
                    c1.ops.push_back(deriv1(comp[i], e));
                    next.push_back(std::move(c1));
                    if (with_d0) {
                        RaisingChain c0 = pc;
                        c0.ops.push_back(deriv0(comp[i], e));
                        next.push_back(std::move(c0));
                    }
                }
                partial = std::move(next);
            }
            for (auto& c : partial) chains.push_back(std::move(c));
        }
    }
    return chains;
}

RadicalKernel radical_kernel(const ModCtx& mod, const std::vector<PBWVector>& basis,
                             unsigned degree, const std::vector<std::string>& fresh_symbols,
                             const std::map<std::string, Rational>& specialize) {
    const Ctx& ring = mod->ring();
    std::vector<std::size_t> fresh_ids;
    for (const auto& s : fresh_symbols) fresh_ids.push_back(ring->id(s));
    std::map<std::string, Poly> specialize_polys;
    for (const auto& [name, value] : specialize)
        specialize_polys.emplace(name, Poly::constant(value, ring));

    RadicalKernel result;
    result.space_dim = basis.size();

    // Row key: (chain, top vector, fresh-symbol monomial); entries are the
    // residual polynomials per basis column.
    std::map<std::tuple<std::size_t, PBWKey, uint64_t>, std::vector<Poly>> rows;
    const auto chains = raising_chains(mod, degree, fresh_symbols);
    for (std::size_t col = 0; col < basis.size(); ++col) {
        std::size_t chain_idx = 0;
        for (const auto& chain : chains) {
            const PBWVector img = mod->act_word(chain.ops, basis[col]);
            for (const auto& [key, c] : img.terms()) {
                const Poly cond =
                    specialize_polys.empty() ? c : c.substitute(specialize_polys);
                for (auto& [mono_key, residual] : split_by_symbols(cond, fresh_ids)) {
                    auto [it, inserted] = rows.emplace(
                        std::make_tuple(chain_idx, key, mono_key),
                        std::vector<Poly>(basis.size(), Poly(ring)));
                    it->second[col] += residual;
                }
            }
            ++chain_idx;
        }
    }

    PolyMatrix mat;
    for (const auto& [rk, row] : rows) mat.append_row(row);
    result.condition_count = mat.rows();
    if (mat.rows() == 0) {
        // no conditions: everything is in the kernel
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::vector<Poly> v(basis.size(), Poly(ring));
            v[i] = Poly::constant(Rational(1), ring);
            result.kernel.push_back(std::move(v));
        }
        result.rank = 0;
        return result;
    }
    result.kernel = nullspace(mat);
    result.rank = basis.size() - result.kernel.size();
    return result;
}

PBWVector interpolate_reduction(
    const PBWVector& family, unsigned degree_bound, const std::vector<long>& nodes,
    const std::function<PBWVector(const PBWVector&, long)>& reduce_at, const ModCtx& target) {
    if (nodes.size() < degree_bound + 1)
        throw std::domain_error("insufficient interpolation nodes for degree bound");
    const Ctx& ring = target->ring();

    std::vector<std::pair<long, PBWVector>> reduced;
    std::vector<PBWKey> key_union;
    for (long node : nodes) {
        PBWVector r = reduce_at(family, node);
        for (const auto& [k, c] : r.terms())
            if (std::find(key_union.begin(), key_union.end(), k) == key_union.end())
                key_union.push_back(k);
        reduced.emplace_back(node, std::move(r));
    }
    std::sort(key_union.begin(), key_union.end());

    std::vector<std::pair<long, std::vector<Poly>>> samples;
    for (const auto& [node, r] : reduced) {
        std::vector<Poly> coords;
        for (const auto& k : key_union) coords.push_back(r.coefficient(k));
        samples.emplace_back(node, std::move(coords));
    }
    const std::vector<Poly> interpolated =
        lagrange_interpolate(samples, degree_bound, "m", ring);

    PBWVector out(target);
    for (std::size_t i = 0; i < key_union.size(); ++i) out.add_term(key_union[i], interpolated[i]);
    return out;
}

std::string to_json(const PBWVector& w) { return pbw_json_impl(w); }
std::string to_json(const PBWFracVector& w) { return pbw_json_impl(w); }

} // namespace toroidal

#ifndef TOROIDAL_VERTEX_IMPL_HPP
#define TOROIDAL_VERTEX_IMPL_HPP

// Template bodies for vertex.hpp. Not a standalone header.

namespace toroidal {

template <class S>
BasicPBW<S> apply_mode(const ModCtx& mod, const FieldSpec& field, long p, const BasicPBW<S>& w) {
    switch (field.kind()) {
        case FieldSpec::Kind::d1:
            return mod->act(BasisDeriv{-p - 1, field.exponent(), 1}, w);
        case FieldSpec::Kind::d0:
            return mod->act(BasisDeriv{-p - 2, field.exponent(), 0}, w);
        case FieldSpec::Kind::derivative:
            return apply_mode(mod, field.left(), p + 1, w) * Rational(p + 1);
        case FieldSpec::Kind::pair: {
            BasicPBW<S> out(mod);
            const long depth = depth_below_top(w);
            // b(z) a_-(z): the non-lowering half of a acts first
            for (long q = -field.left().weight() - depth; q <= -1; ++q) {
                BasicPBW<S> inner = apply_mode(mod, field.left(), q, w);
                if (inner.is_zero()) continue;
                out = out + apply_mode(mod, field.right(), p - q, inner);
            }
            // a_+(z) b(z): the lowering half of a acts last
            const long depth_b = depth;  // b never sees more room than w offers
            const long qmax = p + field.right().weight() + depth_b;
            for (long q = 0; q <= qmax; ++q) {
                BasicPBW<S> inner = apply_mode(mod, field.right(), p - q, w);
                if (inner.is_zero()) continue;
                out = out + apply_mode(mod, field.left(), q, inner);
            }
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

} // namespace toroidal

#endif

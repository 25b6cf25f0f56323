#include "mpsign/endoscopy.hpp"

namespace mpsign {

CentralizerShape centralizer_shape(const MpParameter& phi) {
    CentralizerShape shape;
    for (std::size_t i = 0; i < phi.summands().size(); ++i) {
        const auto& ws = phi.summands()[i];
        BlockType t;
        switch (classify(ws.summand)) {
        case SelfDualityType::Symplectic: t = BlockType::Orthogonal; break;
        case SelfDualityType::Orthogonal: t = BlockType::Symplectic; break;
        case SelfDualityType::Pair: t = BlockType::GeneralLinear; break;
        default: throw InvariantViolation("centralizer_shape: bad type");
        }
        shape.blocks.push_back({i, t, ws.multiplicity});
    }
    return shape;
}

std::vector<SElement> enumerate_s_elements(const CentralizerShape& shape) {
    std::vector<SElement> out{SElement{}};
    for (const auto& block : shape.blocks) {
        std::vector<std::pair<int, int>> choices;
        int step = (block.type == BlockType::Symplectic) ? 2 : 1;
        for (int q = 0; q <= block.multiplicity; q += step)
            choices.push_back({block.multiplicity - q, q});
        std::vector<SElement> next;
        for (const auto& partial : out)
            for (const auto& ch : choices) {
                SElement s = partial;
                s.signature.push_back(ch);
                next.push_back(std::move(s));
            }
        out = std::move(next);
    }
    return out;
}

ComponentGroupElement image_in_component_group(const CentralizerShape& shape, const SElement& s) {
    if (s.signature.size() != shape.blocks.size())
        throw InvariantViolation("image_in_component_group: signature length mismatch");
    ComponentGroupElement out;
    for (std::size_t i = 0; i < shape.blocks.size(); ++i) {
        if (shape.blocks[i].type != BlockType::Orthogonal) continue;
        out.signs.push_back(s.signature[i].second % 2 == 0 ? 1 : -1);
    }
    return out;
}

EndoscopicDatum endoscopic_datum_of(const SElement& s, const MpParameter& phi) {
    if (s.signature.size() != phi.summands().size())
        throw InvariantViolation("endoscopic_datum_of: signature length mismatch");
    int plus = 0, minus = 0;
    for (std::size_t i = 0; i < phi.summands().size(); ++i) {
        const auto& ws = phi.summands()[i];
        auto [p, q] = s.signature[i];
        if (p < 0 || q < 0 || p + q != ws.multiplicity)
            throw InvariantViolation("endoscopic_datum_of: bad signature entry");
        int scale = (ws.summand.kind() == SummandKind::OpaquePair) ? 2 : 1;
        plus += scale * ws.summand.dim() * p;
        minus += scale * ws.summand.dim() * q;
    }
    if (plus % 2 != 0 || minus % 2 != 0)
        throw InvariantViolation("endoscopic_datum_of: odd eigenspace dimension");
    EndoscopicDatum d{plus / 2, minus / 2};
    if (d.n() != phi.n())
        throw InvariantViolation("endoscopic_datum_of: eigenspace dimensions do not sum to 2n");
    return d;
}

namespace {

// Catalog orthogonal summands use the square law eps(rho)^2 = det_rho(-1);
// black boxes use their stored values.
RootOfUnity8 pair_epsilon_or_det(const SimpleSummand& s, int q) {
    if (s.is_opaque()) return pair_epsilon(s, q);
    if (classify(s) != SelfDualityType::Orthogonal)
        throw InvariantViolation("pair_epsilon_or_det: unexpected summand type");
    if (q % 2 != 0)
        throw InvariantViolation("pair_epsilon_or_det: odd count on an orthogonal block");
    return RootOfUnity8::from_sign(det_at_minus_one(s)).pow(q / 2);
}

} // namespace

int epsilon_minus_eigenspace(const MpParameter& phi, const SElement& s,
                             const AdditiveCharacter& psi) {
    if (s.signature.size() != phi.summands().size())
        throw InvariantViolation("epsilon_minus_eigenspace: signature length mismatch");
    RootOfUnity8 out = RootOfUnity8::one();
    for (std::size_t i = 0; i < phi.summands().size(); ++i) {
        const auto& ws = phi.summands()[i];
        int q = s.signature[i].second;
        if (q == 0) continue;
        switch (classify(ws.summand)) {
        case SelfDualityType::Symplectic: out = out * epsilon(ws.summand, psi).pow(q); break;
        case SelfDualityType::Orthogonal:
        case SelfDualityType::Pair: out = out * pair_epsilon_or_det(ws.summand, q); break;
        }
    }
    return out.as_sign();
}

EnhancedParameter twist_enhanced(const MpParameter& phi, const GroupCharacter& chi,
                                 const SquareClass& c, const AdditiveCharacter& psi) {
    GroupCharacter d = delta_c(phi, c, psi);
    return EnhancedParameter{twist_parameter(phi, c), character_product(chi, d),
                             psi.rescaled(c)};
}

std::pair<MpParameter, GroupCharacter> contragredient_enhanced(const MpParameter& phi,
                                                               const GroupCharacter& chi,
                                                               const AdditiveCharacter& psi) {
    SquareClass minus_one = phi.field().is_complex()
                                ? SquareClass(phi.field(), Rat(1))
                                : square_class(phi.field(), Rat(-1));
    EnhancedParameter t = twist_enhanced(phi, chi, minus_one, psi);
    return {std::move(t.phi), std::move(t.chi)};
}

std::pair<SoParameterList, SoParameterList> zeta_translate_so(
    const std::pair<SoParameterList, SoParameterList>& phi_shriek, const SquareClass& c) {
    auto twist_list = [&](const SoParameterList& lst) {
        SoParameterList out;
        for (const auto& ws : lst) out.push_back({twist(ws.summand, c), ws.multiplicity});
        return out;
    };
    return {twist_list(phi_shriek.first), twist_list(phi_shriek.second)};
}

FormalPacketDistribution make_distribution(ComponentGroup base, FourierSide side,
                                           std::vector<Cyc8> coeffs) {
    if (coeffs.size() != base.order())
        throw InvariantViolation("make_distribution: coefficient vector has wrong size");
    return FormalPacketDistribution{std::move(base), side, std::move(coeffs)};
}

FormalPacketDistribution luo_fourier(const FormalPacketDistribution& dist, FourierDirection dir) {
    FourierSide want = (dir == FourierDirection::CharactersToElements) ? FourierSide::Characters
                                                                       : FourierSide::Elements;
    if (dist.side != want)
        throw InvariantViolation("luo_fourier: distribution lives on the wrong side");
    auto vectors = dist.base.all_sign_vectors();
    std::size_t order = dist.base.order();
    std::vector<Cyc8> out(order);
    for (std::size_t a = 0; a < order; ++a) {
        Cyc8 acc;
        for (std::size_t b = 0; b < order; ++b) {
            if (dist.coeffs[b].is_zero()) continue;
            int sign = pair_eval(GroupCharacter{vectors[a]}, ComponentGroupElement{vectors[b]});
            acc = (sign == 1) ? acc + dist.coeffs[b] : acc - dist.coeffs[b];
        }
        if (dir == FourierDirection::ElementsToCharacters)
            acc = acc * Rat(1, static_cast<long>(order));
        out[a] = acc;
    }
    return FormalPacketDistribution{
        dist.base,
        (dir == FourierDirection::CharactersToElements) ? FourierSide::Elements
                                                        : FourierSide::Characters,
        std::move(out)};
}

} // namespace mpsign

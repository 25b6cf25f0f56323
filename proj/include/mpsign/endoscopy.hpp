#pragma once

// Centralizer combinatorics of a formal parameter: involutions s, their
// images in the component group, the attached elliptic endoscopic data,
// the sign eps(phi^{s=-1}), parameter-level twist and contragredient maps,
// and the finite Fourier bookkeeping between packet coefficients and
// endoscopic coefficients.

#include <cstddef>
#include <utility>
#include <vector>

#include "mpsign/conjclass.hpp"
#include "mpsign/cyclotomic8.hpp"
#include "mpsign/lparam.hpp"

namespace mpsign {

enum class BlockType { Orthogonal, Symplectic, GeneralLinear };

struct CentralizerBlock {
    std::size_t summand_index;
    BlockType type;
    int multiplicity;
};

struct CentralizerShape {
    std::vector<CentralizerBlock> blocks;
};

CentralizerShape centralizer_shape(const MpParameter& phi);

// An involution in the centralizer, up to conjugacy: an eigenvalue signature
// (p_i, q_i) with p_i + q_i = m_i on each multiplicity space; both entries
// even on symplectic blocks.
struct SElement {
    std::vector<std::pair<int, int>> signature;
    bool operator==(const SElement& o) const { return signature == o.signature; }
};

std::vector<SElement> enumerate_s_elements(const CentralizerShape& shape);

ComponentGroupElement image_in_component_group(const CentralizerShape& shape, const SElement& s);

// (n', n'') from the eigenspace dimensions of s; paired summands contribute
// to both eigenspaces symmetrically.
EndoscopicDatum endoscopic_datum_of(const SElement& s, const MpParameter& phi);

// Root number of the (-1)-eigenspace of s: sign-valued and independent of
// the psi scale.
int epsilon_minus_eigenspace(const MpParameter& phi, const SElement& s,
                             const AdditiveCharacter& psi);

struct EnhancedParameter {
    MpParameter phi;
    GroupCharacter chi;
    AdditiveCharacter psi;
};

// (phi, chi, psi) -> (phi zeta_c, chi delta_c, psi_c).
EnhancedParameter twist_enhanced(const MpParameter& phi, const GroupCharacter& chi,
                                 const SquareClass& c, const AdditiveCharacter& psi);

// The c = -1 specialization; psi is unchanged in the output.
std::pair<MpParameter, GroupCharacter> contragredient_enhanced(const MpParameter& phi,
                                                               const GroupCharacter& chi,
                                                               const AdditiveCharacter& psi);

// Parameter lists for the two odd special orthogonal factors; translation by
// zeta_c twists every summand on both sides.
using SoParameterList = std::vector<WeightedSummand>;
std::pair<SoParameterList, SoParameterList> zeta_translate_so(
    const std::pair<SoParameterList, SoParameterList>& phi_shriek, const SquareClass& c);

// ---- finite Fourier transform on the component group -----------------------

enum class FourierSide { Characters, Elements };
enum class FourierDirection { CharactersToElements, ElementsToCharacters };

// Finitely supported coefficient vector over the component group, stored
// densely in the canonical sign-vector order, with values in Q(zeta_8).
struct FormalPacketDistribution {
    ComponentGroup base;
    FourierSide side;
    std::vector<Cyc8> coeffs; // size = base.order()
};

FormalPacketDistribution make_distribution(ComponentGroup base, FourierSide side,
                                           std::vector<Cyc8> coeffs);

// T(x) = sum_chi chi(x) v(chi); the inverse direction divides by the group
// order. Exact round trip.
FormalPacketDistribution luo_fourier(const FormalPacketDistribution& dist, FourierDirection dir);

} // namespace mpsign

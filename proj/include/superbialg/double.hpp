#pragma once

#include "superbialg/bialgebra.hpp"

#include <optional>

namespace superbialg {

/// C(i,j,k) = C^k_ij with [e_i,e_j] = Σ C^k_ij e_k, and
/// D(k,i,j) = D_k^{ij} with δ(e_k) = Σ D_k^{ij} e_i ∧ e_j over i < j and odd i = j.
struct StructureConstants {
    std::map<std::array<int, 3>, Scalar> C;
    std::map<std::array<int, 3>, Scalar> D;

    friend bool operator==(const StructureConstants&, const StructureConstants&) = default;
};

/// Reads C off the bracket and solves D from δ in the ordered wedge basis
/// (e_i ∧ e_i = 2 e_i ⊗ e_i). Throws InvalidInput when a δ value is not super-skew.
StructureConstants extract_constants(const Bialgebra& b);

/// Constants of g* with its bracket and cobracket:
///   C*(i,j,k) = (−1)^{|i||j|} D_k^{ij} (i < j),   −2 D_k^{ii} (i = j)
///   D*(k,i,j) = (−1)^{|i||j|} C^k_ij   (i < j),   −C^k_ii / 2 (i = j)
/// with C* for i > j given by super antisymmetry. The exchange is an involution.
StructureConstants dual_constants(const StructureConstants& sc, const std::vector<Parity>& parities);

/// Bracket (full table over ordered pairs) from C.
Superalgebra algebra_from_constants(const GradedBasis& basis, const StructureConstants& sc);
/// Cobracket from D.
Cochain cobracket_from_constants(const GradedBasis& basis, const StructureConstants& sc);

/// g ⊕ g* on the basis (e_1..e_n, e_1*..e_n*).
struct DoubleAlgebra {
    Superalgebra underlying;
    Cochain delta;
    BilinearForm form;
    Tensor2 canonical_r;
    std::size_t half = 0;

    Bialgebra as_bialgebra() const { return {underlying, delta}; }
};

/// Throws InvalidInput when the resulting bracket is not a Lie superalgebra.
DoubleAlgebra build_double(const Bialgebra& b);

/// coboundary_0(r) = δ_d, r + T_s(r) invariant, and r + T_s(r) equal to the Casimir of the form.
VerificationReport check_canonical_r(const DoubleAlgebra& d);

/// Linear map from the double's basis: first block through `on_g`, second through `on_dual`.
LinearMap direct_sum_map(const DoubleAlgebra& d, const std::vector<Element>& on_g,
                         const std::vector<Element>& on_dual);

/// Bijectivity, bracket and cobracket homomorphism, and, when a target form is
/// given, ⟨φ(x), φ(y)⟩ = ⟨x, y⟩_d on all basis pairs.
VerificationReport identify(const DoubleAlgebra& d, const Bialgebra& target, const LinearMap& phi,
                            const std::optional<BilinearForm>& target_form = std::nullopt);

}  // namespace superbialg

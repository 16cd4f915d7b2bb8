#pragma once

#include "superbialg/cohomology.hpp"

#include <string>
#include <vector>

namespace superbialg {

/// A Lie superalgebra with an even cobracket δ: g -> g ⊗ g.
struct Bialgebra {
    Superalgebra algebra;
    Cochain delta;

    const GradedBasis& basis() const { return algebra.basis(); }
    Tensor2 cobracket(int i) const { return delta(i); }
};

/// Bracket axioms, then skewness, the cocycle condition and coJacobi for δ.
VerificationReport validate_bialgebra(const Bialgebra& b);

/// Ω = Σ (G⁻¹)_{ik} e_i ⊗ e_k for the Gram matrix G of a nondegenerate form.
/// Throws DegenerateForm.
Tensor2 casimir(const BilinearForm& form);
/// Casimir of the supertrace form of a realization.
Tensor2 casimir(const MatrixRealization& real);

/// (f ⊗ 1) Ω
Tensor2 r_of_f(const LinearEndomorphism& f, const Tensor2& omega);

/// (f−1)[f(x),f(y)] = f([(f−1)(x),(f−1)(y)]) over all ordered basis pairs.
VerificationReport check_f_equation(const Superalgebra& g, const LinearEndomorphism& f);

/// r + T_s(r) = Ω
VerificationReport check_unitarity(const Tensor2& r, const Tensor2& omega);

/// a ↦ a · r
Cochain cocommutator(const Superalgebra& g, const Tensor2& r);

/// T_s(δ(e_i)) = −δ(e_i) for every basis vector.
VerificationReport check_skew(const Cochain& delta);

/// Alt_s((δ ⊗ Id) δ(x)) = 0 for every basis vector x.
VerificationReport check_cojacobi(const Superalgebra& g, const Cochain& delta);

/// δ([a,b]) = [δ(a), b⊗1 + 1⊗b] + [a⊗1 + 1⊗a, δ(b)] over all ordered basis pairs.
VerificationReport check_compatibility(const Superalgebra& g, const Cochain& delta);

/// Bracket on g* defined by ⟨[x*,y*], z⟩ = ⟨x*⊗y*, δ(z)⟩ with
/// ⟨x*⊗y*, a⊗b⟩ = (−1)^{|y*||a|} x*(a) y*(b). Dual labels carry a "*" suffix.
Superalgebra dual_bracket(const Bialgebra& b);

/// Restriction to the subalgebra spanned by `sub`, written in the basis `sub`
/// with the given labels. Throws NotClosed when the bracket or δ leaves the span,
/// DependentVectors when `sub` is dependent, InvalidInput for inhomogeneous vectors.
Bialgebra restrict(const Bialgebra& b, const std::vector<Element>& sub, const std::vector<std::string>& labels);

/// Negated bracket, same cobracket.
Bialgebra opposite(const Bialgebra& b);

/// Bracket homomorphism plus (φ⊗φ)∘δ_source = δ_target∘φ on every basis vector.
VerificationReport check_bialgebra_homomorphism(const LinearMap& phi, const Bialgebra& source,
                                                const Bialgebra& target);

struct ManinTriple {
    Superalgebra ambient;
    BilinearForm form;
    std::vector<Element> plus;
    std::vector<Element> minus;
};

/// Direct sum, closure of both parts, isotropy, nondegeneracy, super-symmetry, invariance.
VerificationReport check_manin_triple(const ManinTriple& t);

}  // namespace superbialg

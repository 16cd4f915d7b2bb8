#pragma once

#include "superbialg/graded.hpp"
#include "superbialg/report.hpp"

#include <array>
#include <map>
#include <vector>

namespace superbialg {

/// (i, j, k) -> C^k_ij, the coefficient of e_k in [e_i, e_j].
using StructureTable = std::map<std::array<int, 3>, Scalar>;

/// Lie superalgebra presented by structure constants on a homogeneous basis.
/// The axioms are not enforced on construction; see validate().
class Superalgebra {
public:
    Superalgebra() = default;
    /// `constants` is the full table over all ordered pairs.
    Superalgebra(GradedBasis basis, const StructureTable& constants);

    /// Builds the table from pairs i <= j, deriving i > j by super antisymmetry.
    /// Entries (i, i) are accepted only for odd e_i.
    static Superalgebra from_upper(GradedBasis basis, const StructureTable& upper);
    static Superalgebra abelian(GradedBasis basis);

    const GradedBasis& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    const StructureTable& constants() const { return constants_; }
    Scalar constant(int i, int j, int k) const;

    /// [e_i, e_j]
    const Element& bracket_basis(int i, int j) const { return table_[i * dim() + j]; }
    Element bracket(const Element& x, const Element& y) const;

    friend bool operator==(const Superalgebra& a, const Superalgebra& b)
    {
        return a.basis_ == b.basis_ && a.constants_ == b.constants_;
    }

private:
    GradedBasis basis_;
    StructureTable constants_;
    std::vector<Element> table_;
};

Element bracket(const Superalgebra& g, const Element& x, const Element& y);

/// Checks grading consistency, super antisymmetry, vanishing of even self-brackets
/// and the super Jacobi identity over all basis triples.
VerificationReport validate(const Superalgebra& g);

/// a · t = [a⊗1 + 1⊗a, t] with (g·(x⊗y)) = [g,x]⊗y + (−1)^{|g||x|} x⊗[g,y].
Tensor2 adjoint_on_tensor2(const Superalgebra& g, const Element& a, const Tensor2& t);

/// Faithful (m|n) block-matrix realization of a superalgebra.
struct MatrixRealization {
    GradedBasis basis;
    std::size_t even_size = 0;  // m
    std::size_t odd_size = 0;   // n
    std::vector<Matrix> images;

    std::size_t size() const { return even_size + odd_size; }
    /// Image of an arbitrary element.
    Matrix image_of(const Element& x) const;
};

/// XY − (−1)^{px·py} YX
Matrix graded_commutator(const Matrix& x, int px, const Matrix& y, int py);
/// trace of the even block minus trace of the odd block.
Scalar supertrace(const Matrix& m, std::size_t even_size);

/// Structure constants of a realization, solved exactly in the given basis.
/// Throws InvalidInput (bad block grading), DependentVectors, NotClosed.
Superalgebra from_matrices(const MatrixRealization& real);

/// str(ρ(x) ρ(y))
Scalar supertrace_form(const MatrixRealization& real, const Element& x, const Element& y);

/// Bilinear form given by its Gram matrix on a basis.
struct BilinearForm {
    GradedBasis basis;
    Matrix gram;

    Scalar operator()(const Element& x, const Element& y) const;
    /// gram(i,j) = (−1)^{|e_i||e_j|} gram(j,i)
    bool is_supersymmetric() const;
    bool is_nondegenerate() const;
};

BilinearForm supertrace_gram(const MatrixRealization& real);

/// Whether span(vectors) is closed under the bracket. Throws DependentVectors.
bool is_subalgebra(const Superalgebra& g, const std::vector<Element>& vectors);

/// ⟨[a,b],c⟩ = ⟨a,[b,c]⟩ over all basis triples.
VerificationReport check_invariance(const Superalgebra& g, const BilinearForm& form);

/// Parity preservation and φ([a,b]) = [φ(a),φ(b)] on all basis pairs.
VerificationReport check_homomorphism(const LinearMap& phi, const Superalgebra& source,
                                      const Superalgebra& target);

/// Dimensions of g ⊇ [g,g] ⊇ ... until it stabilises or reaches 0.
std::vector<std::size_t> derived_series_dims(const Superalgebra& g, std::size_t max_steps = 16);
bool is_solvable(const Superalgebra& g, std::size_t max_steps = 16);

}  // namespace superbialg

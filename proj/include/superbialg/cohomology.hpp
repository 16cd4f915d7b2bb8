#pragma once

#include "superbialg/superalgebra.hpp"

#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace superbialg {

/// The g-module a cochain takes values in: g (adjoint) or g ⊗ g.
enum class CoefficientModule { adjoint, tensor_square };

using ModuleValue = std::variant<Element, Tensor2>;

/// Super-alternating n-linear map g^n -> M, stored on canonical argument tuples.
///
/// Canonical tuples are nondecreasing with no repeated even index. Swapping
/// adjacent arguments x_i, x_{i+1} multiplies the value by −(−1)^{|x_i||x_{i+1}|}.
class Cochain {
public:
    using Args = std::vector<int>;

    Cochain() = default;
    Cochain(GradedBasis basis, std::size_t degree, Parity parity, CoefficientModule module);

    /// Degree 0 cochain with value r (r homogeneous, zero counts as even).
    static Cochain constant(const Tensor2& r);
    /// Degree 1 g⊗g-valued cochain with values[i] = δ(e_i).
    static Cochain from_values(const GradedBasis& basis, const std::vector<Tensor2>& values,
                               Parity parity = Parity::even);

    const GradedBasis& basis() const { return basis_; }
    std::size_t degree() const { return degree_; }
    Parity parity() const { return parity_; }
    CoefficientModule module() const { return module_; }

    /// Canonical representative of args and the sign with f(args) = sign · f(canonical);
    /// nullopt when the value is forced to vanish (a repeated even argument).
    static std::optional<std::pair<Args, Scalar>> canonicalize(const GradedBasis& basis, Args args);
    /// Every canonical tuple of the given length, in lexicographic order.
    static std::vector<Args> canonical_tuples(const GradedBasis& basis, std::size_t length);

    /// Sets f(args) = value, storing the Koszul-signed value at the canonical tuple.
    void set(const Args& args, const ModuleValue& value);
    ModuleValue at(const Args& args) const;
    Tensor2 tensor_at(const Args& args) const;
    Element element_at(const Args& args) const;
    /// δ(e_i) for a degree 1 g⊗g-valued cochain.
    Tensor2 operator()(int i) const { return tensor_at({i}); }
    /// Linear extension in the single argument of a degree 1 cochain.
    Tensor2 apply(const Element& x) const;

    const std::map<Args, ModuleValue>& values() const { return values_; }
    bool is_zero() const { return values_.empty(); }
    ModuleValue zero_value() const;

    Cochain operator-() const;
    Cochain operator+(const Cochain& o) const;
    Cochain scaled(const Scalar& s) const;

    friend bool operator==(const Cochain& a, const Cochain& b);

private:
    GradedBasis basis_;
    std::size_t degree_ = 0;
    Parity parity_ = Parity::even;
    CoefficientModule module_ = CoefficientModule::tensor_square;
    std::map<Args, ModuleValue> values_;
};

// ModuleValue helpers.
bool is_zero(const ModuleValue& v);
ModuleValue scale(const ModuleValue& v, const Scalar& s);
ModuleValue add(const ModuleValue& a, const ModuleValue& b);
/// x · v for a basis vector x: bracket on g, Leibniz action on g⊗g.
ModuleValue act(const Superalgebra& g, int x, const ModuleValue& v);
std::string to_string(const ModuleValue& v);

/// df for an n-cochain, with
///   σ₁(i) = (−1)^{i+1} (−1)^{|x_i|(|f| + |x_1| + … + |x_{i−1}|)}
///   σ₂(i,j) = (−1)^{i+j} (−1)^{|x_i||x_j|} (−1)^{|x_i|(|x_1|+…+|x_{i−1}|)} (−1)^{|x_j|(|x_1|+…+|x_{j−1}|)}.
Cochain coboundary(const Superalgebra& g, const Cochain& f);

/// dr(a) = a · r for r ∈ g ⊗ g.
Cochain coboundary_0(const Superalgebra& g, const Tensor2& r);

/// f([a,b]) = (−1)^{|a||f|} a·f(b) − (−1)^{|b||f(a)|} b·f(a) over all basis pairs,
/// cross-checked against coboundary(f) = 0.
VerificationReport is_cocycle_1(const Superalgebra& g, const Cochain& delta);

}  // namespace superbialg

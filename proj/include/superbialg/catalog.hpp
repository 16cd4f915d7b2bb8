#pragma once

// Concrete objects on sl(2,1) and the two four-dimensional solvable algebras s and t.
//
// sl(2,1) basis order: (E11+E33), (E22+E33), E12, E21, E13, E31, E23, E32.
// s and t basis order: h, x, y1, y2; dual bases carry a "*" suffix.

#include "superbialg/double.hpp"

#include <string>
#include <vector>

namespace superbialg::catalog {

MatrixRealization sl21_realization();
Superalgebra sl21();
const GradedBasis& sl21_basis();
/// Parses a combination of sl(2,1) labels, e.g. "E13+E31" or "-(E22+E33)".
Element sl21_el(const std::string& text);
BilinearForm supertrace();

LinearEndomorphism f_map();
Tensor2 omega();
Tensor2 r_f();
Tensor2 r_s();
/// The endomorphism with (f⊗1)Ω = r, for a nondegenerate form with Casimir Ω.
LinearEndomorphism f_from_r(const Tensor2& r, const BilinearForm& form);
/// f_from_r(r_s, supertrace)
LinearEndomorphism f_standard();

Cochain delta_f();
Cochain delta_s();
Bialgebra sl21_f();
Bialgebra sl21_s();

// Spanning vectors as displayed; they are also the bases used by restrict().
std::vector<Element> S1();
std::vector<Element> S2();
std::vector<Element> T1();
std::vector<Element> T2();

Superalgebra s_algebra();
Superalgebra t_algebra();
const GradedBasis& st_basis();
const GradedBasis& st_dual_basis();
Element st_el(const std::string& text);
Element st_dual_el(const std::string& text);

// Embeddings of s and t (images of h, x, y1, y2).
LinearMap s_to_S1();
LinearMap i1();  // onto S2
LinearMap t_to_T1();
LinearMap i_s1();  // onto T2
// Embeddings of the duals (images of h*, x*, y1*, y2*).
LinearMap i2();  // onto S1
LinearMap i_s2();  // onto T1

// Isomorphisms from the dual brackets back to s and t.
LinearMap dual_iso_s1();
LinearMap dual_iso_s2();
LinearMap dual_iso_t1();
LinearMap dual_iso_t2();
/// −id on s (and t): an isomorphism from (s, δ₂) onto the opposite of (s, δ₁).
LinearMap negation();

/// Restrictions of δ_f and δ_s transported to s and t through the embeddings above.
Bialgebra s_delta1();
Bialgebra s_delta2();
Bialgebra t_delta1();
Bialgebra t_delta2();

/// Restrictions to the displayed subalgebras, in the displayed bases.
Bialgebra S1_f();
Bialgebra S2_f();
Bialgebra T1_s();
Bialgebra T2_s();

LinearMap inclusion(const std::vector<Element>& sub, const std::vector<std::string>& labels);
std::vector<std::string> S1_labels();
std::vector<std::string> S2_labels();
std::vector<std::string> T1_labels();
std::vector<std::string> T2_labels();

ManinTriple manin_S();
ManinTriple manin_T();

/// Expected values transcribed from the displayed formulas.
namespace expected {
Tensor2 omega();
Tensor2 r_f();
std::vector<Tensor2> delta_f();
std::vector<Tensor2> delta_s();
std::vector<Tensor2> delta_f_S1();
std::vector<Tensor2> delta_f_S2();
std::vector<Tensor2> delta_s_T1();
std::vector<Tensor2> delta_s_T2();
std::vector<Tensor2> delta1();
std::vector<Tensor2> delta2();
std::vector<Tensor2> delta_s1();
std::vector<Tensor2> delta_s2();
Superalgebra dual1();
Superalgebra dual2();
Superalgebra dual_s1();
std::vector<Element> f_images();
}  // namespace expected

}  // namespace superbialg::catalog

#pragma once

// Randomized property checks with fixed seeds. Each returns a report whose
// failing entries carry the offending input.

#include "oracles.hpp"

#include "superbialg/format.hpp"
#include "superbialg/serialize.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace props {

using namespace superbialg;
namespace cat = superbialg::catalog;

inline constexpr unsigned seed = 20261015;

// r = t − T_s(t) for a random even t, so T_s(r) = −r.
inline Tensor2 random_super_skew(std::mt19937& rng, const GradedBasis& B, int terms = 6)
{
    std::uniform_int_distribution<int> pick(0, static_cast<int>(B.size()) - 1);
    Tensor2 t(B);
    while (static_cast<int>(t.nnz()) < terms) {
        const int i = pick(rng), j = pick(rng);
        if (B.p(i) == B.p(j))
            t.add({i, j}, oracle::random_scalar(rng));
    }
    return t - super_swap(t);
}

/// Cocommutators of random super-skew tensors are super-skew cocycles.
inline VerificationReport skew_cocommutators(int count = 100)
{
    std::mt19937 rng(seed);
    const auto g = cat::sl21();
    VerificationReport r;
    int bad_skew = 0, bad_cocycle = 0, bad_oracle = 0;
    std::string example;
    for (int n = 0; n < count; ++n) {
        const Tensor2 t = random_super_skew(rng, g.basis());
        if (!(super_swap(t) == -t)) {
            r.fail("generator produces super-skew tensors", to_string(t));
            return r;
        }
        const Cochain d = cocommutator(g, t);
        if (!check_skew(d).ok()) {
            ++bad_skew;
            example = to_string(t);
        }
        if (!is_cocycle_1(g, d).ok()) {
            ++bad_cocycle;
            example = to_string(t);
        }
        const int a = n % 8;
        if (!(d(a) == oracle::sparse(g.basis(), oracle::act(a, oracle::dense(t))))) {
            ++bad_oracle;
            example = to_string(t);
        }
    }
    r.add(std::to_string(count) + " cocommutators are super-skew", bad_skew == 0, "r = " + example);
    r.add(std::to_string(count) + " cocommutators are 1-cocycles", bad_cocycle == 0, "r = " + example);
    r.add("cocommutator agrees with the matrix oracle", bad_oracle == 0, "r = " + example);
    return r;
}

// Brute-force super Jacobi on a dense copy of the constants.
inline bool oracle_jacobi(const Superalgebra& g)
{
    const int n = static_cast<int>(g.dim());
    std::vector<Scalar> C(static_cast<std::size_t>(n * n * n), Scalar(0));
    auto at = [&](int i, int j, int k) -> Scalar& { return C[static_cast<std::size_t>((i * n + j) * n + k)]; };
    for (const auto& [ijk, c] : g.constants())
        at(ijk[0], ijk[1], ijk[2]) = c;
    const auto& B = g.basis();
    // (−1)^{|a||c|}[a,[b,c]] + (−1)^{|b||a|}[b,[c,a]] + (−1)^{|c||b|}[c,[a,b]]
    auto nested = [&](int a, int b, int c, int m) {
        Scalar s(0);
        for (int k = 0; k < n; ++k)
            s += at(b, c, k) * at(a, k, m);
        return s;
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int m = 0; m < n; ++m) {
                    const Scalar total = sign_of(B.p(a) * B.p(c)) * nested(a, b, c, m) +
                                         sign_of(B.p(b) * B.p(a)) * nested(b, c, a, m) +
                                         sign_of(B.p(c) * B.p(b)) * nested(c, a, b, m);
                    if (!total.is_zero())
                        return false;
                }
    return true;
}

/// validate() rejects perturbed structure constants, and its verdict agrees with the oracle.
inline VerificationReport perturbations(int count = 60)
{
    std::mt19937 rng(seed + 1);
    VerificationReport r;
    int one_sided_missed = 0, disagreements = 0, rejected = 0, missing_counterexample = 0;
    std::string example;
    for (int n = 0; n < count; ++n) {
        const Superalgebra base = (n % 2 == 0) ? cat::sl21() : cat::s_algebra();
        const auto& B = base.basis();
        const int dim = static_cast<int>(B.size());
        std::uniform_int_distribution<int> pick(0, dim - 1);
        int i, j, k;
        do {
            i = pick(rng);
            j = pick(rng);
            k = pick(rng);
        } while (B.p(k) != (B.p(i) ^ B.p(j)) || i > j || (i == j && B.p(i) == 0));
        Scalar c;
        do
            c = oracle::random_scalar(rng);
        while (c.is_zero());
        const std::string where =
            "[" + B.label(i) + ", " + B.label(j) + "] += " + c.str() + "*" + B.label(k) + " in dim " +
            std::to_string(dim);

        // One-sided change: super antisymmetry breaks, so validate must reject.
        StructureTable one_sided = base.constants();
        one_sided[{i, j, k}] += c;
        if (i != j) {
            const auto v = validate(Superalgebra(B, one_sided));
            if (v.ok()) {
                ++one_sided_missed;
                example = where;
            } else if (!v.first_failure()->counterexample) {
                ++missing_counterexample;
            }
        }

        // Consistent change: the verdict has to match the brute-force oracle.
        StructureTable both = one_sided;
        if (i != j)
            both[{j, i, k}] += -(sign_of(B.p(i) * B.p(j)) * c);
        const Superalgebra perturbed(B, both);
        const auto v = validate(perturbed);
        if (v.ok() != oracle_jacobi(perturbed)) {
            ++disagreements;
            example = where;
        }
        if (!v.ok()) {
            ++rejected;
            if (!v.first_failure()->counterexample)
                ++missing_counterexample;
        }
    }
    r.add("one-sided perturbations are rejected", one_sided_missed == 0, example);
    r.add("validate agrees with brute-force Jacobi on consistent perturbations", disagreements == 0, example);
    r.add("consistent perturbations are rejected (" + std::to_string(rejected) + "/" + std::to_string(count) + ")",
          rejected * 10 >= count * 9, "only " + std::to_string(rejected) + " rejected");
    r.add("every rejection names a counterexample", missing_counterexample == 0,
          std::to_string(missing_counterexample) + " without one");
    return r;
}

/// wedge, super_swap and alt_s sign laws on random homogeneous elements.
inline VerificationReport sign_laws(int count = 100)
{
    std::mt19937 rng(seed + 2);
    const auto& B = cat::sl21_basis();
    std::bernoulli_distribution coin;
    VerificationReport r;
    int wedge_bad = 0, swap_bad = 0, involution_bad = 0, wedge_swap_bad = 0, alt_bad = 0;
    std::string example;
    for (int n = 0; n < count; ++n) {
        const int pa = coin(rng), pb = coin(rng), pc = coin(rng);
        const Element a = oracle::random_homogeneous(rng, B, pa);
        const Element b = oracle::random_homogeneous(rng, B, pb);
        const Element c = oracle::random_homogeneous(rng, B, pc);
        const Scalar koszul = sign_of(pa * pb);
        const auto note = [&] { example = "a = " + to_string(a) + ", b = " + to_string(b); };
        if (!(wedge(a, b) == -(koszul * wedge(b, a)))) {
            ++wedge_bad;
            note();
        }
        if (!(super_swap(tensor(a, b)) == koszul * tensor(b, a))) {
            ++swap_bad;
            note();
        }
        const Tensor2 t = tensor(a, b) + tensor(b, c) + wedge(a, c);
        if (!(super_swap(super_swap(t)) == t)) {
            ++involution_bad;
            note();
        }
        if (!(super_swap(wedge(a, b)) == -wedge(a, b))) {
            ++wedge_swap_bad;
            note();
        }
        const Tensor3 abc = tensor(tensor(a, b), c);
        if (!(signed_cycle(alt_s(abc)) == alt_s(abc))) {
            ++alt_bad;
            note();
        }
    }
    r.add("a∧b = −(−1)^{|a||b|} b∧a", wedge_bad == 0, example);
    r.add("T_s(a⊗b) = (−1)^{|a||b|} b⊗a", swap_bad == 0, example);
    r.add("T_s∘T_s = id", involution_bad == 0, example);
    r.add("T_s(a∧b) = −a∧b", wedge_swap_bad == 0, example);
    r.add("alt_s output is fixed by the signed cyclic shift", alt_bad == 0, example);
    return r;
}

inline Cochain random_one_cochain(std::mt19937& rng, const GradedBasis& B, CoefficientModule module, Parity parity)
{
    Cochain c(B, 1, parity, module);
    std::bernoulli_distribution coin;
    for (int i = 0; i < static_cast<int>(B.size()); ++i) {
        const int want = B.p(i) ^ bit(parity);
        if (module == CoefficientModule::adjoint) {
            c.set({i}, oracle::random_homogeneous(rng, B, want));
        } else {
            const int pa = coin(rng);
            c.set({i}, tensor(oracle::random_homogeneous(rng, B, pa), oracle::random_homogeneous(rng, B, pa ^ want)));
        }
    }
    return c;
}

/// d∘d = 0 on random 0- and 1-cochains over sl(2,1) and 𝔰.
inline VerificationReport differential_squares(int count = 8)
{
    std::mt19937 rng(seed + 3);
    VerificationReport r;
    int zero_bad = 0, one_bad = 0, cocycle_routes = 0;
    std::string example;
    for (int n = 0; n < count; ++n) {
        for (const Superalgebra& g : {cat::sl21(), cat::s_algebra()}) {
            const auto& B = g.basis();
            const Tensor2 t = random_super_skew(rng, B, 4) + tensor(oracle::random_homogeneous(rng, B, 1),
                                                                    oracle::random_homogeneous(rng, B, 1));
            const Cochain d0 = coboundary_0(g, t);
            if (!coboundary(g, d0).is_zero()) {
                ++zero_bad;
                example = to_string(t);
            }
            if (!is_cocycle_1(g, d0).ok())
                ++cocycle_routes;
            const auto module = n % 2 ? CoefficientModule::adjoint : CoefficientModule::tensor_square;
            const Cochain c = random_one_cochain(rng, B, module, n % 4 < 2 ? Parity::even : Parity::odd);
            if (!coboundary(g, coboundary(g, c)).is_zero()) {
                ++one_bad;
                example = "1-cochain on " + std::to_string(B.size()) + "-dim algebra";
            }
            if (module == CoefficientModule::tensor_square && c.parity() == Parity::even &&
                is_cocycle_1(g, c).ok() != coboundary(g, c).is_zero())
                ++cocycle_routes;
        }
    }
    r.add("d∘d = 0 on random 0-cochains", zero_bad == 0, example);
    r.add("d∘d = 0 on random 1-cochains", one_bad == 0, example);
    r.add("cocycle condition and d = 0 agree; coboundaries are cocycles", cocycle_routes == 0,
          std::to_string(cocycle_routes) + " disagreements");
    return r;
}

/// Storing at a permuted tuple and reading back, and JSON round trips.
inline VerificationReport storage_round_trips(int count = 100)
{
    std::mt19937 rng(seed + 4);
    const auto& B = cat::sl21_basis();
    std::uniform_int_distribution<int> pick(0, 7);
    VerificationReport r;
    int sign_bad = 0, json_bad = 0;
    std::string example;
    for (int n = 0; n < count; ++n) {
        const int i = pick(rng), j = pick(rng);
        if (i == j)
            continue;
        const Element v = oracle::random_homogeneous(rng, B, B.p(i) ^ B.p(j));
        Cochain c(B, 2, Parity::even, CoefficientModule::adjoint);
        c.set({i, j}, v);
        const Element back = c.element_at({j, i});
        if (!(back == -(sign_of(B.p(i) * B.p(j)) * v))) {
            ++sign_bad;
            example = "(" + B.label(i) + ", " + B.label(j) + ")";
        }
        if (!(c.element_at({i, j}) == v)) {
            ++sign_bad;
            example = "(" + B.label(i) + ", " + B.label(j) + ")";
        }
        const Tensor2 t = random_super_skew(rng, B, 3);
        const Cochain d = cocommutator(cat::sl21(), t);
        if (!(cochain_from_json(parse_json(to_json(d).dump())) == d) ||
            !(tensor2_from_json(parse_json(to_json(t).dump())) == t) ||
            !(cochain_from_json(parse_json(to_json(c).dump())) == c)) {
            ++json_bad;
            example = to_string(t);
        }
    }
    r.add("swapped arguments read back with −(−1)^{|x||y|}", sign_bad == 0, example);
    r.add("random tensors and cochains survive a JSON round trip", json_bad == 0, example);
    return r;
}

/// dual_constants applied twice returns the input on random constant sets.
inline VerificationReport constant_exchange(int count = 40)
{
    std::mt19937 rng(seed + 5);
    const auto& B = cat::st_basis();
    std::uniform_int_distribution<int> pick(0, 3);
    VerificationReport r;
    int bad = 0;
    for (int n = 0; n < count; ++n) {
        StructureTable upper;
        StructureConstants sc;
        for (int m = 0; m < 4; ++m) {
            const int i = pick(rng), j = pick(rng), k = pick(rng);
            if (i > j || B.p(k) != (B.p(i) ^ B.p(j)) || (i == j && B.p(i) == 0))
                continue;
            upper[{i, j, k}] += oracle::random_scalar(rng);
            const int a = pick(rng), b = pick(rng), z = pick(rng);
            if (a > b || B.p(z) != (B.p(a) ^ B.p(b)) || (a == b && B.p(a) == 0))
                continue;
            const Scalar d = oracle::random_scalar(rng);
            if (!d.is_zero())
                sc.D[{z, a, b}] += d;
        }
        std::erase_if(sc.D, [](const auto& e) { return e.second.is_zero(); });
        sc.C = Superalgebra::from_upper(B, upper).constants();
        if (!(dual_constants(dual_constants(sc, B.parities()), B.parities()) == sc))
            ++bad;
    }
    r.add("dual_constants is an involution on random constants", bad == 0, std::to_string(bad) + " failures");
    return r;
}

}  // namespace props

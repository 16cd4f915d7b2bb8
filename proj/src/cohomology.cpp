#include "superbialg/cohomology.hpp"

#include "superbialg/format.hpp"

#include <algorithm>

namespace superbialg {

bool is_zero(const ModuleValue& v)
{
    return std::visit([](const auto& x) { return x.is_zero(); }, v);
}

ModuleValue scale(const ModuleValue& v, const Scalar& s)
{
    return std::visit([&](const auto& x) -> ModuleValue { return s * x; }, v);
}

ModuleValue add(const ModuleValue& a, const ModuleValue& b)
{
    if (a.index() != b.index())
        throw InvalidInput("cochain values from different modules");
    if (const auto* e = std::get_if<Element>(&a))
        return *e + std::get<Element>(b);
    return std::get<Tensor2>(a) + std::get<Tensor2>(b);
}

ModuleValue act(const Superalgebra& g, int x, const ModuleValue& v)
{
    const Element ex = basis_vector(g.basis(), x);
    if (const auto* e = std::get_if<Element>(&v))
        return g.bracket(ex, *e);
    return adjoint_on_tensor2(g, ex, std::get<Tensor2>(v));
}

std::string to_string(const ModuleValue& v)
{
    return std::visit([](const auto& x) { return to_string(x); }, v);
}

Cochain::Cochain(GradedBasis basis, std::size_t degree, Parity parity, CoefficientModule module)
    : basis_(std::move(basis)), degree_(degree), parity_(parity), module_(module)
{
}

Cochain Cochain::constant(const Tensor2& r)
{
    if (!r.is_homogeneous())
        throw InvalidInput("0-cochain value must be homogeneous");
    Cochain c(r.basis(), 0, r.parity().value_or(Parity::even), CoefficientModule::tensor_square);
    c.set({}, r);
    return c;
}

Cochain Cochain::from_values(const GradedBasis& basis, const std::vector<Tensor2>& values, Parity parity)
{
    if (values.size() != basis.size())
        throw InvalidInput("one value per basis vector required");
    Cochain c(basis, 1, parity, CoefficientModule::tensor_square);
    for (std::size_t i = 0; i < values.size(); ++i)
        c.set({static_cast<int>(i)}, values[i]);
    return c;
}

std::optional<std::pair<Cochain::Args, Scalar>> Cochain::canonicalize(const GradedBasis& basis, Args args)
{
    Scalar sign = 1;
    for (std::size_t pass = 0; pass < args.size(); ++pass)
        for (std::size_t i = 0; i + 1 < args.size(); ++i)
            if (args[i] > args[i + 1]) {
                sign *= -sign_of(basis.p(args[i]) * basis.p(args[i + 1]));
                std::swap(args[i], args[i + 1]);
            }
    for (std::size_t i = 0; i + 1 < args.size(); ++i)
        if (args[i] == args[i + 1] && basis.parity(args[i]) == Parity::even)
            return std::nullopt;
    return std::make_pair(std::move(args), sign);
}

std::vector<Cochain::Args> Cochain::canonical_tuples(const GradedBasis& basis, std::size_t length)
{
    std::vector<Args> out;
    Args current;
    const int n = static_cast<int>(basis.size());
    auto rec = [&](auto&& self, int start) -> void {
        if (current.size() == length) {
            out.push_back(current);
            return;
        }
        for (int i = start; i < n; ++i) {
            current.push_back(i);
            self(self, basis.parity(i) == Parity::even ? i + 1 : i);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

ModuleValue Cochain::zero_value() const
{
    if (module_ == CoefficientModule::adjoint)
        return Element(basis_);
    return Tensor2(basis_);
}

void Cochain::set(const Args& args, const ModuleValue& value)
{
    if (args.size() != degree_)
        throw InvalidInput("cochain: wrong number of arguments");
    if ((module_ == CoefficientModule::adjoint) != std::holds_alternative<Element>(value))
        throw InvalidInput("cochain: value does not belong to the coefficient module");
    std::visit([&](const auto& v) { require_same_basis(v.basis(), basis_, "cochain value"); }, value);
    for (int a : args)
        if (a < 0 || static_cast<std::size_t>(a) >= basis_.size())
            throw InvalidInput("cochain: argument index out of range");
    auto canon = canonicalize(basis_, args);
    if (!canon) {
        if (!superbialg::is_zero(value))
            throw InvalidInput("cochain: nonzero value on a repeated even argument");
        return;
    }
    // f(args) = s · f(canonical) and s = ±1.
    ModuleValue stored = scale(value, canon->second);
    if (superbialg::is_zero(stored))
        values_.erase(canon->first);
    else
        values_[canon->first] = std::move(stored);
}

ModuleValue Cochain::at(const Args& args) const
{
    if (args.size() != degree_)
        throw InvalidInput("cochain: wrong number of arguments");
    auto canon = canonicalize(basis_, args);
    if (!canon)
        return zero_value();
    auto it = values_.find(canon->first);
    if (it == values_.end())
        return zero_value();
    return scale(it->second, canon->second);
}

Tensor2 Cochain::tensor_at(const Args& args) const
{
    if (module_ != CoefficientModule::tensor_square)
        throw InvalidInput("cochain does not take values in g⊗g");
    return std::get<Tensor2>(at(args));
}

Element Cochain::element_at(const Args& args) const
{
    if (module_ != CoefficientModule::adjoint)
        throw InvalidInput("cochain does not take values in g");
    return std::get<Element>(at(args));
}

Tensor2 Cochain::apply(const Element& x) const
{
    if (degree_ != 1)
        throw InvalidInput("apply needs a degree 1 cochain");
    require_same_basis(x.basis(), basis_, "cochain apply");
    Tensor2 out(basis_);
    for (const auto& [i, c] : x.entries())
        out += c * tensor_at({i[0]});
    return out;
}

Cochain Cochain::scaled(const Scalar& s) const
{
    Cochain c(basis_, degree_, parity_, module_);
    if (s.is_zero())
        return c;
    for (const auto& [args, v] : values_)
        c.values_[args] = scale(v, s);
    return c;
}

Cochain Cochain::operator-() const
{
    return scaled(Scalar(-1));
}

Cochain Cochain::operator+(const Cochain& o) const
{
    require_same_basis(basis_, o.basis_, "cochain sum");
    if (degree_ != o.degree_ || module_ != o.module_)
        throw InvalidInput("cochain sum: incompatible cochains");
    Cochain c = *this;
    for (const auto& [args, v] : o.values_) {
        auto it = c.values_.find(args);
        if (it == c.values_.end()) {
            c.values_[args] = v;
            continue;
        }
        it->second = add(it->second, v);
        if (superbialg::is_zero(it->second))
            c.values_.erase(it);
    }
    return c;
}

bool operator==(const Cochain& a, const Cochain& b)
{
    if (!(a.basis_ == b.basis_) || a.degree_ != b.degree_ || a.module_ != b.module_)
        return false;
    if (a.values_.size() != b.values_.size())
        return false;
    for (const auto& [args, v] : a.values_) {
        auto it = b.values_.find(args);
        if (it == b.values_.end())
            return false;
        if (!is_zero(add(v, scale(it->second, Scalar(-1)))))
            return false;
    }
    return true;
}

Cochain coboundary(const Superalgebra& g, const Cochain& f)
{
    require_same_basis(g.basis(), f.basis(), "coboundary");
    const auto& B = g.basis();
    const int pf = bit(f.parity());
    const std::size_t m = f.degree() + 1;
    Cochain df(B, m, f.parity(), f.module());

    for (const auto& xs : Cochain::canonical_tuples(B, m)) {
        ModuleValue total = f.zero_value();

        // prefix[i] = |x_1| + ... + |x_{i-1}| in 1-based terms (0-based: sum over xs[0..i)).
        std::vector<int> prefix(m + 1, 0);
        for (std::size_t i = 0; i < m; ++i)
            prefix[i + 1] = prefix[i] + B.p(xs[i]);

        for (std::size_t i = 0; i < m; ++i) {
            // 1-based position i+1: (−1)^{(i+1)+1} = (−1)^i.
            const Scalar s1 = sign_of(static_cast<int>(i)) * sign_of(B.p(xs[i]) * (pf + prefix[i]));
            Cochain::Args rest;
            for (std::size_t l = 0; l < m; ++l)
                if (l != i)
                    rest.push_back(xs[l]);
            total = add(total, scale(act(g, xs[i], f.at(rest)), s1));
        }

        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                const int pi = B.p(xs[i]), pj = B.p(xs[j]);
                // (−1)^{(i+1)+(j+1)} = (−1)^{i+j}
                const Scalar s2 = sign_of(static_cast<int>(i + j)) * sign_of(pi * pj) *
                                  sign_of(pi * prefix[i]) * sign_of(pj * prefix[j]);
                const Element& br = g.bracket_basis(xs[i], xs[j]);
                if (br.is_zero())
                    continue;
                Cochain::Args args{0};
                for (std::size_t l = 0; l < m; ++l)
                    if (l != i && l != j)
                        args.push_back(xs[l]);
                for (const auto& [k, c] : br.entries()) {
                    args[0] = k[0];
                    total = add(total, scale(f.at(args), s2 * c));
                }
            }

        if (!is_zero(total))
            df.set(xs, total);
    }
    return df;
}

Cochain coboundary_0(const Superalgebra& g, const Tensor2& r)
{
    require_same_basis(g.basis(), r.basis(), "coboundary_0");
    return coboundary(g, Cochain::constant(r));
}

VerificationReport is_cocycle_1(const Superalgebra& g, const Cochain& delta)
{
    require_same_basis(g.basis(), delta.basis(), "is_cocycle_1");
    if (delta.degree() != 1)
        throw InvalidInput("is_cocycle_1 needs a degree 1 cochain");
    const auto& B = g.basis();
    const int pf = bit(delta.parity());
    const int n = static_cast<int>(g.dim());

    std::optional<std::string> bad;
    for (int a = 0; a < n && !bad; ++a)
        for (int b = 0; b < n && !bad; ++b) {
            ModuleValue lhs = delta.zero_value();
            for (const auto& [k, c] : g.bracket_basis(a, b).entries())
                lhs = add(lhs, scale(delta.at({k[0]}), c));
            const int pfa = (B.p(a) + pf) & 1;  // |f(a)|
            const ModuleValue rhs = add(scale(act(g, a, delta.at({b})), sign_of(B.p(a) * pf)),
                                        scale(act(g, b, delta.at({a})), -sign_of(B.p(b) * pfa)));
            if (!is_zero(add(lhs, scale(rhs, Scalar(-1)))))
                bad = "pair (" + B.label(a) + ", " + B.label(b) + "): f([a,b]) = " + to_string(lhs) +
                      ", rhs = " + to_string(rhs);
        }

    const Cochain d = coboundary(g, delta);
    std::optional<std::string> bad_d;
    if (!d.is_zero()) {
        const auto& [args, v] = *d.values().begin();
        bad_d = "df(" + B.label(args[0]) + ", " + B.label(args[1]) + ") = " + to_string(v);
    }

    VerificationReport report;
    report.add("super cocycle condition", !bad, bad);
    report.add("coboundary vanishes", !bad_d, bad_d);
    report.add("cocycle routes agree", bad.has_value() == bad_d.has_value(),
               bad.has_value() == bad_d.has_value() ? std::nullopt
                                                     : std::optional<std::string>("direct and differential checks disagree"));
    return report;
}

}  // namespace superbialg

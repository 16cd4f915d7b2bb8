#include "superbialg/serialize.hpp"

#include <fstream>
#include <sstream>

namespace superbialg {

namespace {

// nlohmann reports JSON type errors with its own exception types; surface them as ParseError.
template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

Scalar scalar_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Scalar(j.get<long>());
    if (j.is_string())
        return Scalar::parse(j.get<std::string>());
    throw ParseError("scalar must be an integer or a \"p/q\" string");
}

// A coefficient given either as "c" or as "num" and optional "den".
Scalar coefficient(const Json& term)
{
    if (term.contains("c"))
        return scalar_from_json(term.at("c"));
    if (!term.contains("num"))
        throw ParseError("missing field \"c\"");
    const Scalar num = scalar_from_json(term.at("num"));
    if (!term.contains("den"))
        return num;
    const Scalar den = scalar_from_json(term.at("den"));
    if (den.is_zero())
        throw ParseError("zero denominator");
    return num / den;
}

int index_from_json(const Json& j, const GradedBasis& basis)
{
    if (j.is_number_integer()) {
        const auto i = j.get<long>();
        if (i < 0 || static_cast<std::size_t>(i) >= basis.size())
            throw ParseError("basis index " + std::to_string(i) + " out of range");
        return static_cast<int>(i);
    }
    if (j.is_string()) {
        if (auto i = basis.index_of(j.get<std::string>()))
            return static_cast<int>(*i);
        throw ParseError("unknown basis label \"" + j.get<std::string>() + "\"");
    }
    throw ParseError("basis reference must be an index or a label");
}

template <std::size_t Rank>
Json tensor_json(const Tensor<Rank>& t, bool with_basis)
{
    Json j = Json::object();
    if (with_basis)
        j["basis"] = to_json(t.basis());
    j["rank"] = Rank;
    Json entries = Json::array();
    for (const auto& [idx, c] : t.entries())
        entries.push_back({{"idx", Json(std::vector<int>(idx.begin(), idx.end()))}, {"c", c.str()}});
    j["entries"] = entries;
    return j;
}

template <std::size_t Rank>
Tensor<Rank> tensor_from(const Json& j, const GradedBasis& fallback)
{
    return guarded("tensor", [&] {
        const GradedBasis basis = j.contains("basis") ? basis_from_json(j.at("basis")) : fallback;
        if (!basis.valid())
            throw ParseError("tensor without a basis");
        if (j.contains("rank") && j.at("rank").get<std::size_t>() != Rank)
            throw ParseError("tensor has rank " + j.at("rank").dump() + ", expected " + std::to_string(Rank));
        Tensor<Rank> t(basis);
        for (const auto& e : field(j, "entries")) {
            const Json& idx = field(e, "idx");
            if (!idx.is_array() || idx.size() != Rank)
                throw ParseError("tensor entry index has the wrong length");
            typename Tensor<Rank>::Index key{};
            for (std::size_t r = 0; r < Rank; ++r)
                key[r] = index_from_json(idx[r], basis);
            t.add(key, coefficient(e));
        }
        return t;
    });
}

Json values_json(const Cochain& c)
{
    Json values = Json::array();
    for (const auto& [args, v] : c.values()) {
        Json value = std::visit([](const auto& x) { return tensor_json(x, false); }, v);
        values.push_back({{"args", args}, {"value", value}});
    }
    return values;
}

}  // namespace

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // Translate the byte offset into line and column.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                         e.what());
    }
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_json(ss.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Json to_json(const GradedBasis& basis)
{
    Json parities = Json::array();
    for (auto p : basis.parities())
        parities.push_back(bit(p));
    return {{"labels", basis.labels()}, {"parities", parities}};
}

GradedBasis basis_from_json(const Json& j)
{
    return guarded("basis", [&] {
        const auto labels = field(j, "labels").get<std::vector<std::string>>();
        const auto bits = field(j, "parities").get<std::vector<int>>();
        if (labels.size() != bits.size())
            throw ParseError("basis: labels and parities differ in length");
        std::vector<Parity> parities;
        for (int b : bits) {
            if (b != 0 && b != 1)
                throw ParseError("basis: parity must be 0 or 1");
            parities.push_back(parity_from_bit(b));
        }
        return GradedBasis(labels, parities);
    });
}

Json to_json(const Element& x) { return tensor_json(x, true); }
Json to_json(const Tensor2& t) { return tensor_json(t, true); }

Element element_from_json(const Json& j, const GradedBasis& fallback) { return tensor_from<1>(j, fallback); }
Tensor2 tensor2_from_json(const Json& j, const GradedBasis& fallback) { return tensor_from<2>(j, fallback); }

Json to_json(const Matrix& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const Json& j)
{
    return guarded("matrix", [&] {
        if (!j.is_array())
            throw ParseError("matrix must be an array of rows");
        const std::size_t rows = j.size();
        const std::size_t cols = rows ? j[0].size() : 0;
        Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            if (!j[r].is_array() || j[r].size() != cols)
                throw ParseError("matrix rows must have equal length");
            for (std::size_t c = 0; c < cols; ++c)
                m(r, c) = scalar_from_json(j[r][c]);
        }
        return m;
    });
}

Json to_json(const Superalgebra& g)
{
    Json brackets = Json::array();
    const int n = static_cast<int>(g.dim());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Element& b = g.bracket_basis(i, j);
            if (b.is_zero())
                continue;
            Json terms = Json::array();
            for (const auto& [k, c] : b.entries())
                terms.push_back({{"k", k[0]}, {"c", c.str()}});
            brackets.push_back({{"i", i}, {"j", j}, {"terms", terms}});
        }
    return {{"basis", to_json(g.basis())}, {"brackets", brackets}};
}

Superalgebra superalgebra_from_json(const Json& j)
{
    return guarded("algebra", [&] {
        // Also accepted: "basis" as a bare label list with a sibling "parities".
        const GradedBasis basis = field(j, "basis").is_array()
                                      ? basis_from_json({{"labels", j.at("basis")}, {"parities", field(j, "parities")}})
                                      : basis_from_json(j.at("basis"));
        StructureTable table;
        bool lower = false;
        for (const auto& b : field(j, "brackets")) {
            const int i = index_from_json(field(b, "i"), basis);
            const int jj = index_from_json(field(b, "j"), basis);
            for (const auto& t : field(b, "terms")) {
                const int k = index_from_json(field(t, "k"), basis);
                const Scalar c = coefficient(t);
                if (!c.is_zero())
                    table[{i, jj, k}] += c;
            }
            lower = lower || i > jj || (i == jj && basis.parity(i) == Parity::even);
        }
        // Without pairs i > j (or even self-brackets) the listing is read as
        // upper triangular and completed by super antisymmetry.
        const std::string form = j.value("form", std::string(lower ? "full" : "upper"));
        if (form == "upper")
            return Superalgebra::from_upper(basis, table);
        return Superalgebra(basis, table);
    });
}

Json to_json(const Cochain& c)
{
    return {{"basis", to_json(c.basis())},
            {"degree", c.degree()},
            {"parity", bit(c.parity())},
            {"module", c.module() == CoefficientModule::adjoint ? "adjoint" : "tensor_square"},
            {"values", values_json(c)}};
}

Cochain cochain_from_json(const Json& j, const GradedBasis& fallback)
{
    return guarded("cochain", [&] {
        const GradedBasis basis = j.contains("basis") ? basis_from_json(j.at("basis")) : fallback;
        if (!basis.valid())
            throw ParseError("cochain without a basis");
        const auto module_name = j.value("module", std::string("tensor_square"));
        CoefficientModule module;
        if (module_name == "tensor_square")
            module = CoefficientModule::tensor_square;
        else if (module_name == "adjoint")
            module = CoefficientModule::adjoint;
        else
            throw ParseError("unsupported coefficient module \"" + module_name + "\"");
        const int p = j.value("parity", 0);
        Cochain c(basis, field(j, "degree").get<std::size_t>(), parity_from_bit(p), module);
        for (const auto& v : field(j, "values")) {
            std::vector<int> args;
            for (const auto& a : field(v, "args"))
                args.push_back(index_from_json(a, basis));
            if (module == CoefficientModule::adjoint)
                c.set(args, element_from_json(field(v, "value"), basis));
            else
                c.set(args, tensor2_from_json(field(v, "value"), basis));
        }
        return c;
    });
}

Json to_json(const Bialgebra& b)
{
    return {{"type", "bialgebra"}, {"algebra", to_json(b.algebra)}, {"delta", to_json(b.delta)}};
}

Bialgebra bialgebra_from_json(const Json& j)
{
    return guarded("bialgebra", [&] {
        Superalgebra g = superalgebra_from_json(field(j, "algebra"));
        Cochain delta = cochain_from_json(field(j, "delta"), g.basis());
        if (!(delta.basis() == g.basis()))
            throw ParseError("bialgebra: cobracket basis differs from the algebra basis");
        return Bialgebra{std::move(g), std::move(delta)};
    });
}

Json to_json(const LinearMap& m)
{
    Json images = Json::array();
    for (std::size_t j = 0; j < m.source().size(); ++j)
        images.push_back(tensor_json(m.image(j), false));
    return {{"source", to_json(m.source())}, {"target", to_json(m.target())}, {"images", images}};
}

LinearMap linear_map_from_json(const Json& j)
{
    return guarded("linear map", [&] {
        const GradedBasis source = basis_from_json(field(j, "source"));
        const GradedBasis target = basis_from_json(field(j, "target"));
        std::vector<Element> images;
        for (const auto& im : field(j, "images"))
            images.push_back(element_from_json(im, target));
        if (images.size() != source.size())
            throw ParseError("linear map: one image per source basis vector required");
        return LinearMap::from_images(source, target, images);
    });
}

Json to_json(const ManinTriple& t)
{
    Json plus = Json::array(), minus = Json::array();
    for (const auto& v : t.plus)
        plus.push_back(tensor_json(v, false));
    for (const auto& v : t.minus)
        minus.push_back(tensor_json(v, false));
    return {{"type", "manin_triple"},
            {"ambient", to_json(t.ambient)},
            {"gram", to_json(t.form.gram)},
            {"plus", plus},
            {"minus", minus}};
}

ManinTriple manin_triple_from_json(const Json& j)
{
    return guarded("manin triple", [&] {
        ManinTriple t;
        t.ambient = superalgebra_from_json(field(j, "ambient"));
        const auto& B = t.ambient.basis();
        t.form = {B, matrix_from_json(field(j, "gram"))};
        if (t.form.gram.rows() != B.size() || t.form.gram.cols() != B.size())
            throw ParseError("manin triple: Gram matrix size differs from the dimension");
        for (const auto& v : field(j, "plus"))
            t.plus.push_back(element_from_json(v, B));
        for (const auto& v : field(j, "minus"))
            t.minus.push_back(element_from_json(v, B));
        return t;
    });
}

Json to_json(const DoubleAlgebra& d)
{
    return {{"type", "double"},
            {"half", d.half},
            {"algebra", to_json(d.underlying)},
            {"delta", to_json(d.delta)},
            {"gram", to_json(d.form.gram)},
            {"canonical_r", to_json(d.canonical_r)}};
}

DoubleAlgebra double_from_json(const Json& j)
{
    return guarded("double", [&] {
        if (j.value("type", std::string()) != "double")
            throw ParseError("expected an object of type \"double\"");
        DoubleAlgebra d;
        d.half = field(j, "half").get<std::size_t>();
        d.underlying = superalgebra_from_json(field(j, "algebra"));
        const auto& B = d.underlying.basis();
        d.delta = cochain_from_json(field(j, "delta"), B);
        d.form = {B, matrix_from_json(field(j, "gram"))};
        d.canonical_r = tensor2_from_json(field(j, "canonical_r"), B);
        return d;
    });
}

Json to_json(const VerificationReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks()) {
        Json e = {{"name", c.name}, {"passed", c.passed}};
        if (c.counterexample)
            e["counterexample"] = *c.counterexample;
        checks.push_back(e);
    }
    return {{"ok", r.ok()}, {"checks", checks}};
}

}  // namespace superbialg

// superbialg command-line front end.
// Exit codes: 0 success/pass, 1 verification failure, 2 input or usage error.

#include "superbialg/catalog.hpp"
#include "superbialg/format.hpp"
#include "superbialg/reproduce.hpp"

#include <CLI11.hpp>

#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace superbialg;

namespace {

enum Exit { ok = 0, failed = 1, bad_input = 2 };

struct Options {
    std::string format = "text";
    std::string out;
};

bool use_color()
{
    const char* env = std::getenv("SUPERBIALG_COLOR");
    if (env && std::string(env) == "0")
        return false;
    return isatty(STDOUT_FILENO) != 0;
}

std::string status_word(bool passed)
{
    if (!use_color())
        return passed ? "PASS" : "FAIL";
    return passed ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

void write_output(const Options& opt, const std::string& text)
{
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out);
    if (!f)
        throw InvalidInput("cannot write " + opt.out);
    f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::size_t passed_count(const VerificationReport& r)
{
    return static_cast<std::size_t>(
        std::count_if(r.checks().begin(), r.checks().end(), [](const Check& c) { return c.passed; }));
}

std::string render(const VerificationReport& r)
{
    std::ostringstream os;
    for (const auto& c : r.checks()) {
        os << c.name << ": " << status_word(c.passed) << '\n';
        if (!c.passed && c.counterexample)
            os << "    counterexample: " << *c.counterexample << '\n';
    }
    os << passed_count(r) << "/" << r.checks().size() << " checks passed\n";
    return os.str();
}

int report_result(const Options& opt, const std::string& command, const VerificationReport& r,
                  std::chrono::steady_clock::time_point start)
{
    if (opt.format == "json") {
        Json j;
        j["command"] = command;
        j["status"] = r.ok() ? "pass" : "fail";
        j["elapsed_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        j["report"] = to_json(r);
        write_output(opt, dump(j));
    } else {
        write_output(opt, render(r));
    }
    return r.ok() ? ok : failed;
}

std::string delta_table(const Cochain& delta, const std::string& name = "δ")
{
    std::ostringstream os;
    const auto& B = delta.basis();
    for (std::size_t i = 0; i < B.size(); ++i)
        os << name << "(" << B.label(i) << ") = " << to_string(delta(static_cast<int>(i))) << '\n';
    return os.str();
}

std::string bracket_table(const Superalgebra& g)
{
    std::ostringstream os;
    const auto& B = g.basis();
    bool any = false;
    for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = i; j < B.size(); ++j)
            if (const Element& v = g.bracket_basis(static_cast<int>(i), static_cast<int>(j)); !v.is_zero()) {
                os << "[" << B.label(i) << ", " << B.label(j) << "] = " << to_string(v) << '\n';
                any = true;
            }
    if (!any)
        os << "all brackets vanish\n";
    return os.str();
}

std::string type_of(const Json& j)
{
    if (j.is_object() && j.contains("type"))
        return j.at("type").get<std::string>();
    return "algebra";
}

int cmd_validate(const Options& opt, const std::string& path)
{
    const auto start = std::chrono::steady_clock::now();
    const Json j = read_json_file(path);
    const std::string type = type_of(j);
    VerificationReport r;
    if (type == "algebra")
        r = validate(superalgebra_from_json(j));
    else if (type == "bialgebra")
        r = validate_bialgebra(bialgebra_from_json(j));
    else if (type == "manin_triple")
        r = check_manin_triple(manin_triple_from_json(j));
    else if (type == "double") {
        const DoubleAlgebra d = double_from_json(j);
        r = validate_bialgebra(d.as_bialgebra());
        r.merge(check_canonical_r(d), "canonical r: ");
    } else
        throw InvalidInput("unknown object type \"" + type + "\"");
    return report_result(opt, "validate", r, start);
}

int cmd_cocommutator(const Options& opt, const std::string& algebra_path, const std::string& r_path)
{
    const Superalgebra g = superalgebra_from_json(read_json_file(algebra_path));
    const Tensor2 r = tensor2_from_json(read_json_file(r_path), g.basis());
    require_same_basis(g.basis(), r.basis(), "cocommutator");
    const Cochain delta = cocommutator(g, r);
    write_output(opt, opt.format == "json" ? dump(to_json(delta)) : delta_table(delta));
    return ok;
}

int cmd_double(const Options& opt, const std::string& path)
{
    const auto start = std::chrono::steady_clock::now();
    const Bialgebra b = bialgebra_from_json(read_json_file(path));
    VerificationReport input = validate_bialgebra(b);
    if (!input.ok()) {
        VerificationReport r;
        r.merge(input, "input: ");
        Options to_stdout = opt;
        to_stdout.out.clear();
        return report_result(to_stdout, "double", r, start);
    }
    const DoubleAlgebra d = build_double(b);
    VerificationReport r = validate_bialgebra(d.as_bialgebra());
    r.merge(check_invariance(d.underlying, d.form), "form: ");
    r.merge(check_canonical_r(d), "canonical r: ");

    if (!opt.out.empty()) {
        std::ofstream f(opt.out);
        if (!f)
            throw InvalidInput("cannot write " + opt.out);
        f << dump(to_json(d));
    }
    if (opt.format == "json") {
        if (opt.out.empty())
            std::cout << dump(to_json(d));
    } else {
        std::cout << "double of dimension " << d.underlying.dim() << " (" << d.half << " + " << d.half << ")\n"
                  << render(r);
    }
    return r.ok() ? ok : failed;
}

int cmd_dual(const Options& opt, const std::string& path)
{
    const auto start = std::chrono::steady_clock::now();
    const Bialgebra b = bialgebra_from_json(read_json_file(path));
    if (VerificationReport input = validate_bialgebra(b); !input.ok())
        return report_result(opt, "dual", input, start);
    const Superalgebra d = dual_bracket(b);
    write_output(opt, opt.format == "json" ? dump(to_json(d)) : bracket_table(d));
    return ok;
}

int cmd_restrict(const Options& opt, const std::string& path, const std::vector<std::string>& vectors,
                 std::vector<std::string> labels)
{
    const Bialgebra b = bialgebra_from_json(read_json_file(path));
    std::vector<Element> sub;
    for (const auto& v : vectors)
        sub.push_back(parse_element(b.basis(), v));
    if (labels.empty())
        for (std::size_t i = 0; i < sub.size(); ++i)
            labels.push_back("v" + std::to_string(i + 1));
    if (labels.size() != sub.size())
        throw InvalidInput("restrict: " + std::to_string(labels.size()) + " labels for " +
                           std::to_string(sub.size()) + " vectors");
    try {
        const Bialgebra r = restrict(b, sub, labels);
        write_output(opt, opt.format == "json" ? dump(to_json(r)) : bracket_table(r.algebra) + delta_table(r.delta));
        return ok;
    } catch (const NotClosed& e) {
        std::cerr << e.what() << '\n';
        return failed;
    }
}

int cmd_manin(const Options& opt, const std::string& path)
{
    const auto start = std::chrono::steady_clock::now();
    return report_result(opt, "manin", check_manin_triple(manin_triple_from_json(read_json_file(path))), start);
}

int cmd_verify_paper(const Options& opt, const std::string& selector)
{
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::string> sections;
    if (selector == "all")
        sections = reproduction_sections();
    else
        sections = {selector};

    VerificationReport all;
    std::ostringstream text;
    Json per_section = Json::object();
    for (const auto& s : sections) {
        const VerificationReport r = reproduce(s);
        all.merge(r);
        text << "== " << s << " ==\n" << render(r);
        per_section[s] = to_json(r);
    }
    if (opt.format == "json") {
        Json j;
        j["command"] = "verify paper";
        j["status"] = all.ok() ? "pass" : "fail";
        j["elapsed_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        j["sections"] = per_section;
        write_output(opt, dump(j));
    } else {
        if (sections.size() > 1)
            text << "total: " << passed_count(all) << "/" << all.checks().size() << " checks passed\n";
        write_output(opt, text.str());
    }
    return all.ok() ? ok : failed;
}

int cmd_export(const Options& opt, const std::string& name, bool list)
{
    if (list) {
        std::ostringstream os;
        for (const auto& f : fixtures())
            os << f.name << "  (" << f.kind << ")\n";
        write_output(opt, os.str());
        return ok;
    }
    if (name == "all") {
        const std::filesystem::path dir = opt.out.empty() ? "." : opt.out;
        std::filesystem::create_directories(dir);
        for (const auto& f : fixtures()) {
            std::ofstream out(dir / (f.name + ".json"));
            out << dump(f.expected);
        }
        return ok;
    }
    const auto f = find_fixture(name);
    if (!f)
        throw InvalidInput("unknown fixture \"" + name + "\"");
    write_output(opt, dump(f->expected));
    return ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations with super Lie bialgebras"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", opt.out, "Write output to this path");

    std::string path, r_path, section = "all", fixture;
    std::vector<std::string> vectors, labels;
    bool list = false;

    auto* validate_cmd = app.add_subcommand("validate", "Check the axioms of an algebra, bialgebra, Manin triple or double");
    validate_cmd->add_option("file", path)->required();

    auto* cocomm = app.add_subcommand("cocommutator", "Coboundary δ(x) = x·r of a tensor r");
    cocomm->add_option("algebra", path)->required();
    cocomm->add_option("--r", r_path, "Tensor in g⊗g")->required();

    auto* dbl = app.add_subcommand("double", "Drinfeld double of a bialgebra");
    dbl->add_option("bialgebra", path)->required();

    auto* dual = app.add_subcommand("dual", "Bracket on the dual induced by the cobracket");
    dual->add_option("bialgebra", path)->required();

    auto* restr = app.add_subcommand("restrict", "Restrict a bialgebra to the span of vectors");
    restr->add_option("bialgebra", path)->required();
    restr->add_option("--vector", vectors, "Spanning vector, e.g. \"E21\" or \"E13+E31\"")->required();
    restr->add_option("--label", labels, "Label of the matching new basis vector");

    auto* manin = app.add_subcommand("manin", "Check a Manin triple");
    manin->add_option("triple", path)->required();

    auto* verify = app.add_subcommand("verify", "Recompute catalogued results");
    auto* paper = verify->add_subcommand("paper", "Reproduce the sl(2,1) computations");
    verify->require_subcommand(1);
    paper->add_option("--section", section, "2, 3.1, 3.2, 3.3, 3.4 or all")
        ->check(CLI::IsMember({"2", "3.1", "3.2", "3.3", "3.4", "all"}));

    auto* exp = app.add_subcommand("export", "Write catalogued objects as JSON");
    exp->add_option("fixture", fixture, "Fixture name or \"all\" (into the --out directory)");
    exp->add_flag("--list", list, "List fixture names");

    for (auto* sub : {validate_cmd, cocomm, dbl, dual, restr, manin, exp}) {
        sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", opt.out, "Write output to this path");
    }
    paper->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    paper->add_option("--out", opt.out, "Write output to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return bad_input;
    }

    try {
        if (*validate_cmd)
            return cmd_validate(opt, path);
        if (*cocomm)
            return cmd_cocommutator(opt, path, r_path);
        if (*dbl)
            return cmd_double(opt, path);
        if (*dual)
            return cmd_dual(opt, path);
        if (*restr)
            return cmd_restrict(opt, path, vectors, labels);
        if (*manin)
            return cmd_manin(opt, path);
        if (*paper)
            return cmd_verify_paper(opt, section);
        if (*exp) {
            if (!list && fixture.empty())
                throw InvalidInput("export: give a fixture name, \"all\" or --list");
            return cmd_export(opt, fixture, list);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_input;
    }
    return bad_input;
}

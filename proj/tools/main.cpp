// Command-line front end: loads algebra instances and cochains from JSON,
// runs the exact computations and the verification suites.
//
// Exit codes: 0 = all checks pass, 1 = a mathematical check failed,
// 2 = input or usage error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "defc/engine.hpp"
#include "defc/json_io.hpp"
#include "defc/suites.hpp"

using namespace defc;

namespace {

json load_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void emit(const json& j, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw std::invalid_argument("cannot write " + out_path);
    out << j.dump(2) << "\n";
}

int run_validate(const std::string& algebra_path)
{
    AlgebraInstance a = algebra_from_json(load_json(algebra_path));
    ValidationReport rep = validate_algebra(a);
    for (const auto& ax : rep.axioms)
        std::cout << (ax.holds ? "ok   " : "FAIL ") << ax.axiom << "\n";
    return rep.ok ? 0 : 1;
}

int run_lk(const std::string& algebra_path, const std::vector<std::string>& cochain_paths,
           int k, const std::string& out_path)
{
    AlgebraInstance a = algebra_from_json(load_json(algebra_path));
    if (static_cast<int>(cochain_paths.size()) != k)
        throw std::invalid_argument("lk: expected " + std::to_string(k) + " cochain files, got " +
                                    std::to_string(cochain_paths.size()));
    std::vector<Cochain> inputs;
    for (const auto& p : cochain_paths) {
        Cochain c = cochain_from_json(load_json(p), a.spaces);
        if (c.model != a.model)
            throw std::invalid_argument("cochain in " + p + " is for model " +
                                        model_name(c.model));
        inputs.push_back(std::move(c));
    }
    Cochain out = l_k(inputs, a);
    emit(cochain_to_json(out), out_path);
    return 0;
}

int run_differential(const std::string& model, const std::string& generator)
{
    const ModelTable& tbl = model_table(parse_model(model));
    GeneratorId g = parse_gen(generator);
    if (!tbl.valid(g))
        throw std::invalid_argument("generator " + generator + " not valid for " + model);
    std::cout << sum_to_sexpr(tbl.differential(g));
    return 0;
}

int run_qme(const std::string& algebra_path, const std::string& cochain_path, int k_max,
            const std::string& out_path)
{
    AlgebraInstance a = algebra_from_json(load_json(algebra_path));
    Cochain kappa = cochain_from_json(load_json(cochain_path), a.spaces);
    Cochain res = qme_residual(kappa, a, k_max);
    emit(cochain_to_json(res), out_path);
    return res.is_zero() ? 0 : 1;
}

int run_verify(const std::string& suite, const std::string& model_s, uint64_t seed, int trials,
               int max_degree)
{
    ModelId model = parse_model(model_s);
    SuiteResult r;
    if (suite == "delta2")
        r = suite_delta2(model, seed, trials, max_degree);
    else if (suite == "linfty")
        r = suite_linfty(model, seed, trials);
    else if (suite == "oracle")
        r = suite_oracle(model, seed, trials);
    else if (suite == "qme")
        r = suite_qme(model, seed, trials);
    else if (suite == "d2symbolic")
        r = suite_d2_symbolic(model, max_degree);
    else if (suite == "vanishing")
        r = suite_vanishing(model, seed, trials);
    else if (suite == "transport") {
        if (model == ModelId::Iso)
            throw std::invalid_argument("transport suite: morphism models only");
        r = suite_transport(model, seed, trials);
    }
    else if (suite == "iso-identities")
        r = suite_iso_identities(seed, trials);
    else
        throw std::invalid_argument("unknown suite: " + suite);
    for (const auto& line : r.lines)
        std::cout << line << "\n";
    return r.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact deformation-complex calculator for algebra morphism diagrams"};
    app.require_subcommand(1);

    std::string algebra_path, out_path, model = "assoc_morphism", generator, suite;
    std::vector<std::string> cochain_paths;
    int k = 1, k_max = 3, trials = 25, max_degree = 3;
    uint64_t seed = 1;

    auto* validate = app.add_subcommand("validate", "check the algebra axioms exactly");
    validate->add_option("algebra", algebra_path, "algebra instance JSON")->required();

    auto* lk = app.add_subcommand("lk", "evaluate the bracket l_k on cochains");
    lk->add_option("--k", k, "number of inputs")->required();
    lk->add_option("algebra", algebra_path, "algebra instance JSON")->required();
    lk->add_option("cochains", cochain_paths, "cochain JSON files");
    lk->add_option("--out", out_path, "write the result here instead of stdout");

    auto* dl = app.add_subcommand("delta", "apply the differential to a cochain");
    dl->add_option("algebra", algebra_path, "algebra instance JSON")->required();
    dl->add_option("cochain", generator, "cochain JSON")->required();
    dl->add_option("--out", out_path, "write the result here instead of stdout");

    auto* diff = app.add_subcommand("differential",
                                    "print the differential of a generator as s-expressions");
    diff->add_option("--model", model, "assoc_morphism | lie_morphism | iso")->required();
    diff->add_option("--generator", generator, "e.g. mu_3, f_2, g_0")->required();

    auto* qme = app.add_subcommand("qme", "quantum master equation residual of a cochain");
    qme->add_option("algebra", algebra_path, "algebra instance JSON")->required();
    qme->add_option("cochain", cochain_paths, "degree-1 cochain JSON")->expected(1);
    qme->add_option("--k-max", k_max, "highest bracket, at least the vanishing bound");
    qme->add_option("--out", out_path, "write the residual here instead of stdout");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite,
                       "delta2 | linfty | oracle | qme | d2symbolic | vanishing | "
                       "transport | iso-identities")
        ->required();
    verify->add_option("--model", model, "assoc_morphism | lie_morphism | iso");
    verify->add_option("--seed", seed, "PRNG seed; identical seeds give identical runs");
    verify->add_option("--trials", trials, "sample count");
    verify->add_option("--max-degree", max_degree, "largest cochain or internal degree");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed())
            return run_validate(algebra_path);
        if (lk->parsed())
            return run_lk(algebra_path, cochain_paths, k, out_path);
        if (dl->parsed())
            return run_lk(algebra_path, {generator}, 1, out_path);
        if (diff->parsed())
            return run_differential(model, generator);
        if (qme->parsed())
            return run_qme(algebra_path, cochain_paths.at(0), k_max, out_path);
        if (verify->parsed())
            return run_verify(suite, model, seed, trials, max_degree);
    }
    catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

#include "bottbord/cli.hpp"

#include <ostream>
#include <set>

#include "CLI11.hpp"

#include "bottbord/io.hpp"

namespace bottbord {

namespace {

void emit(std::ostream& out, const json& j)
{
    out << j.dump(2) << "\n";
}

int cmd_validate(const std::string& file, std::ostream& out)
{
    auto A = parse_input_file(file);
    emit(out, validation_json(validate_characteristic(A)));
    return 0;
}

int cmd_classify(const std::string& file, std::ostream& out)
{
    auto A = parse_input_file(file);
    json j;
    if (A.mode() == CoeffMode::Mod2) {
        auto R = build_ring<Gf2>(A, 1);
        j["orientable"] = first_sw(R).is_zero_poly();
    } else {
        j["orientable"] = true; // torus manifolds over even-dim'l orbit spaces
    }
    j["triangularizable"] = try_triangularize(A).has_value();
    j["principal_minors_all_one"] = principal_minors_all_one(A);
    emit(out, j);
    return 0;
}

int cmd_numbers(const std::string& file, bool sw_only, bool pont_only, std::ostream& out)
{
    auto A = parse_input_file(file);
    auto V = verdict(A);
    json j;
    if (!pont_only)
        j["sw"] = report_json(V.sw);
    if (!sw_only) {
        if (V.pontryagin)
            j["pontryagin"] = report_json(*V.pontryagin);
        else if (pont_only)
            throw Error(Errc::ModeMismatch, "Pontryagin numbers need integer coefficients");
    }
    emit(out, j);
    return 0;
}

int cmd_cobordism(const std::string& file, std::ostream& out)
{
    auto A = parse_input_file(file);
    emit(out, verdict_json(verdict(A)));
    return 0;
}

int cmd_ring(const std::string& file, std::ostream& out)
{
    auto A = parse_input_file(file);
    json j;
    std::vector<int> ranks;
    long long total = 0;
    auto collect = [&](auto& R) {
        for (int t = 0; t <= R.n(); ++t) {
            ranks.push_back(R.degree_rank(t));
            total += ranks.back();
        }
        j["engine"] = R.triangular_engine() ? "triangular" : "generic";
    };
    if (A.mode() == CoeffMode::Mod2) {
        auto R = build_ring<Gf2>(A, 1);
        collect(R);
    } else {
        auto R = build_ring<Rational>(A, 2);
        collect(R);
    }
    j["ranks"] = ranks;
    j["total"] = total;
    emit(out, j);
    return 0;
}

int cmd_verify(const std::string& theorem, const VerifyParams& params, std::ostream& out,
               std::ostream& err)
{
    auto R = verify(theorem, params);
    emit(out, verification_json(R));
    err << "elapsed_ms " << R.elapsed_ms << "\n";
    return R.pass() ? 0 : 1;
}

int cmd_enumerate(const std::string& spec_file, const std::string& out_path,
                  const std::vector<std::string>& tasks, int threads, std::ostream& out)
{
    auto spec = parse_family_spec_file(spec_file);
    auto summary =
        batch_run(spec, std::set<std::string>(tasks.begin(), tasks.end()), out_path, threads);
    json j;
    j["total"] = summary.total;
    j["sw_nonzero"] = summary.sw_nonzero;
    j["pontryagin_nonzero"] = summary.pontryagin_nonzero;
    j["skipped"] = summary.skipped;
    j["out"] = out_path;
    emit(out, j);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact cobordism obstruction calculator for small covers and quasitoric "
                 "manifolds over products of simplices"};
    app.name("bottbord");
    app.require_subcommand(1);

    std::string file, theorem, spec_file, out_path;
    bool sw_only = false, pont_only = false, poincare = false;
    VerifyParams params;
    std::vector<std::string> tasks;
    int threads = 0;

    auto* validate = app.add_subcommand("validate", "check the vertex condition");
    validate->add_option("file", file)->required();

    auto* classify = app.add_subcommand("classify", "orientability / triangular shape / minors");
    classify->add_option("file", file)->required();

    auto* numbers = app.add_subcommand("numbers", "characteristic numbers");
    numbers->add_option("file", file)->required();
    auto* swopt = numbers->add_flag("--sw", sw_only, "Stiefel-Whitney numbers only");
    numbers->add_flag("--pontryagin", pont_only, "Pontryagin numbers only")->excludes(swopt);

    auto* cobordism = app.add_subcommand("cobordism", "null-cobordism verdict");
    cobordism->add_option("file", file)->required();

    auto* ring = app.add_subcommand("ring", "cohomology ring facts");
    ring->add_option("file", file)->required();
    ring->add_flag("--poincare", poincare, "per-degree ranks");

    auto* verify_cmd = app.add_subcommand("verify", "run a built-in checker");
    verify_cmd->add_option("theorem", theorem)->required();
    verify_cmd->add_option("--dims", params.dims);
    verify_cmd->add_option("--n", params.n);
    verify_cmd->add_option("--k", params.k);
    verify_cmd->add_option("--bound", params.bound);
    verify_cmd->add_option("--samples", params.samples);
    verify_cmd->add_option("--seed", params.seed);
    verify_cmd->add_option("--b", params.b);

    auto* enumerate = app.add_subcommand("enumerate", "sweep a matrix family to JSONL");
    enumerate->add_option("--spec", spec_file)->required();
    enumerate->add_option("--out", out_path)->required();
    enumerate->add_option("--task", tasks, "sw and/or pontryagin");
    enumerate->add_option("--threads", threads);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (validate->parsed())
            return cmd_validate(file, out);
        if (classify->parsed())
            return cmd_classify(file, out);
        if (numbers->parsed())
            return cmd_numbers(file, sw_only, pont_only, out);
        if (cobordism->parsed())
            return cmd_cobordism(file, out);
        if (ring->parsed()) {
            (void)poincare; // ranks are the only ring report
            return cmd_ring(file, out);
        }
        if (verify_cmd->parsed())
            return cmd_verify(theorem, params, out, err);
        if (enumerate->parsed())
            return cmd_enumerate(spec_file, out_path, tasks, threads, out);
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

} // namespace bottbord

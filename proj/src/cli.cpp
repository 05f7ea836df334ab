#include "wep4/cli.hpp"

#include "wep4/errors.hpp"
#include "wep4/fidelity.hpp"
#include "wep4/geometry.hpp"
#include "wep4/henneberg.hpp"
#include "wep4/mesh.hpp"
#include "wep4/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <regex>

namespace wep4 {

namespace {

using Json = nlohmann::ordered_json;

struct CliConfig {
    int m = 1;
    int n = 1;
    std::string lambda = "0";
    double rmin = 0.5;
    double rmax = 2.0;
    int nr = 100;
    int ntheta = 200;
    bool open_theta = false;
    std::string project = "xyz";
    std::string format = "obj";
    std::string out;
    std::string point;
    std::size_t samples = 1000;
    std::uint64_t seed = 42;
    std::string config;
};

// Options registered on one subcommand, by config-file key.
using OptionTable = std::map<std::string, CLI::Option*>;

void add_family(CLI::App* app, CliConfig& c, OptionTable& t)
{
    t["m"] = app->add_option("--m", c.m, "first odd exponent");
    t["n"] = app->add_option("--n", c.n, "second odd exponent");
    t["lambda"] = app->add_option("--lambda", c.lambda, "complex parameter, e.g. 1+1i, -2i, 0.5");
    app->add_option("--config", c.config, "JSON file with defaults; flags override it");
}

void add_grid(CLI::App* app, CliConfig& c, OptionTable& t)
{
    t["rmin"] = app->add_option("--rmin", c.rmin);
    t["rmax"] = app->add_option("--rmax", c.rmax);
    t["nr"] = app->add_option("--nr", c.nr);
    t["ntheta"] = app->add_option("--ntheta", c.ntheta);
    t["open_theta"] = app->add_flag("--open-theta", c.open_theta, "do not wrap faces across theta = 2 pi");
}

void add_sampling(CLI::App* app, CliConfig& c, OptionTable& t)
{
    t["samples"] = app->add_option("--samples", c.samples);
    t["seed"] = app->add_option("--seed", c.seed);
}

void apply_config(CliConfig& c, const OptionTable& t)
{
    if (c.config.empty()) {
        return;
    }
    std::ifstream in(c.config);
    if (!in) {
        throw UsageError("cannot read config file " + c.config);
    }
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception& e) {
        throw UsageError("bad config file: " + std::string(e.what()));
    }
    if (!j.is_object()) {
        throw UsageError("config file must hold a JSON object");
    }

    const std::map<std::string, std::function<void(const Json&)>> setters = {
        {"m", [&](const Json& v) { c.m = v.get<int>(); }},
        {"n", [&](const Json& v) { c.n = v.get<int>(); }},
        {"lambda", [&](const Json& v) { c.lambda = v.is_string() ? v.get<std::string>() : format_real(v.get<double>()); }},
        {"rmin", [&](const Json& v) { c.rmin = v.get<double>(); }},
        {"rmax", [&](const Json& v) { c.rmax = v.get<double>(); }},
        {"nr", [&](const Json& v) { c.nr = v.get<int>(); }},
        {"ntheta", [&](const Json& v) { c.ntheta = v.get<int>(); }},
        {"open_theta", [&](const Json& v) { c.open_theta = v.get<bool>(); }},
        {"project", [&](const Json& v) { c.project = v.get<std::string>(); }},
        {"format", [&](const Json& v) { c.format = v.get<std::string>(); }},
        {"out", [&](const Json& v) { c.out = v.get<std::string>(); }},
        {"point", [&](const Json& v) { c.point = v.get<std::string>(); }},
        {"samples", [&](const Json& v) { c.samples = v.get<std::size_t>(); }},
        {"seed", [&](const Json& v) { c.seed = v.get<std::uint64_t>(); }},
    };
    for (const auto& [key, value] : j.items()) {
        const auto setter = setters.find(key);
        if (setter == setters.end()) {
            throw UsageError("unknown config key: " + key);
        }
        const auto opt = t.find(key);
        if (opt == t.end() || opt->second->count() > 0) {
            continue;
        }
        try {
            setter->second(value);
        } catch (const Json::exception&) {
            throw UsageError("config key " + key + " has the wrong type");
        }
    }
}

FamilyParams family(const CliConfig& c)
{
    try {
        return FamilyParams(c.m, c.n, parse_lambda(c.lambda));
    } catch (const ParameterError& e) {
        throw UsageError(e.what());
    }
}

PolarGrid grid(const CliConfig& c)
{
    PolarGrid g{c.rmin, c.rmax, c.nr, c.ntheta, !c.open_theta};
    try {
        g.validate();
    } catch (const ParameterError& e) {
        throw UsageError(e.what());
    }
    return g;
}

Complex parse_point(const std::string& text)
{
    const auto comma = text.find(',');
    if (text.empty() || comma == std::string::npos) {
        throw UsageError("--point expects u,v");
    }
    const auto number = [&](std::string_view s) {
        double x = 0.0;
        const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
        if (ec != std::errc{} || end != s.data() + s.size() || s.empty()) {
            throw UsageError("--point expects u,v, got " + text);
        }
        return x;
    };
    const std::string_view sv(text);
    return {number(sv.substr(0, comma)), number(sv.substr(comma + 1))};
}

void require_out(const CliConfig& c)
{
    if (c.out.empty()) {
        throw UsageError("missing output path (--out)");
    }
}

Json coefficients(const LaurentPoly& p)
{
    Json j = Json::object();
    for (const auto& [k, c] : p.terms()) {
        j[std::to_string(k)] = {c.real(), c.imag()};
    }
    return j;
}

int cmd_eval(const CliConfig& c, std::ostream& out)
{
    const FamilyParams p = family(c);
    const Complex w = parse_point(c.point);
    const Vec4 x = immersion_point(family_curve(p), w);
    out << format_real(x[0]) << ' ' << format_real(x[1]) << ' ' << format_real(x[2]) << ' ' << format_real(x[3])
        << '\n';
    return 0;
}

int cmd_mesh(const CliConfig& c, std::ostream& out)
{
    const FamilyParams p = family(c);
    const PolarGrid g = grid(c);
    require_out(c);
    const MeshFormat format = parse_mesh_format(c.format);
    const Projection proj = Projection::parse(c.project);
    const QuadMesh4D mesh = sample_grid(p, g);
    if (format == MeshFormat::csv) {
        export_mesh(mesh, format, c.out);
    } else {
        export_mesh(project(mesh, proj), format, c.out);
    }
    out << "wrote " << c.out << ": " << mesh.vertices.size() << " vertices, " << mesh.quads.size() << " quads\n";
    return 0;
}

int cmd_verify(const CliConfig& c, std::ostream& out)
{
    const FamilyParams p = family(c);
    const auto results = run_verification(p, VerifyOptions{c.samples, c.seed});
    bool ok = true;
    out << "H(" << p.m() << "," << p.n() << ") lambda=" << c.lambda << " samples=" << c.samples << " seed=" << c.seed
        << '\n';
    for (const auto& r : results) {
        out << r.name << ": ";
        if (r.skipped) {
            out << "skipped (" << r.detail << ")\n";
            continue;
        }
        out << r.passed << '/' << r.total << (r.ok() ? " pass" : " FAIL");
        if (!r.ok()) {
            out << " - " << r.detail;
        }
        out << '\n';
        ok = ok && r.ok();
    }
    out << (ok ? "all suites pass\n" : "verification failed\n");
    return ok ? 0 : 1;
}

int cmd_report(const CliConfig& c, std::ostream& out)
{
    const FamilyParams p = family(c);
    const auto samples = sample_annulus(c.samples, c.seed);
    out << fidelity_report(p, samples).format();
    return 0;
}

int cmd_curvature(const CliConfig& c, std::ostream& out)
{
    const FamilyParams p = family(c);
    const PolarGrid g = grid(c);
    require_out(c);
    const QuadMesh4D mesh = sample_grid(p, g);
    export_mesh(mesh, MeshFormat::csv, c.out);
    std::size_t with_k = 0;
    for (const auto& v : mesh.vertices) {
        with_k += v.K.has_value();
    }
    out << "wrote " << c.out << ": " << mesh.vertices.size() << " vertices, " << with_k << " with K\n";
    return 0;
}

int cmd_info(const CliConfig& c, std::ostream& out)
{
    const FamilyParams p = family(c);
    const WeierstrassTriple t = family_triple(p);
    const PhiForm phi = phi_from_triple(t);
    const MinimalCurve curve = integrate(phi);

    Json j;
    j["m"] = p.m();
    j["n"] = p.n();
    j["lambda"] = {p.lambda().real(), p.lambda().imag()};
    j["f"] = coefficients(t.f);
    j["g"] = coefficients(t.g);
    j["h"] = coefficients(t.h);
    j["phi"] = Json::array();
    j["X"] = Json::array();
    for (std::size_t k = 0; k < 4; ++k) {
        j["phi"].push_back(coefficients(phi.components[k]));
        j["X"].push_back(coefficients(curve.X[k]));
    }
    out << j.dump(2) << '\n';
    return 0;
}

} // namespace

Complex parse_lambda(std::string_view text)
{
    static const std::string number = R"((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";
    static const std::regex grammar("^(?:([+-]?" + number + ")([+-](?:" + number + ")?i)?|([+-]?(?:" + number +
                                    ")?i))$");
    const std::string s(text);
    std::smatch match;
    if (!std::regex_match(s, match, grammar)) {
        throw UsageError("bad lambda syntax: '" + s + "' (expected a, bi or a+bi)");
    }
    const auto imaginary = [](std::string part) {
        part.pop_back();
        if (part.empty() || part == "+") {
            return 1.0;
        }
        if (part == "-") {
            return -1.0;
        }
        return std::stod(part);
    };
    if (match[3].matched) {
        return {0.0, imaginary(match[3].str())};
    }
    const double re = std::stod(match[1].str());
    const double im = match[2].matched ? imaginary(match[2].str()) : 0.0;
    return {re, im};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Higher-order Henneberg minimal surfaces in R^4", "wep4"};
    app.require_subcommand(1);
    CliConfig c;

    OptionTable eval_t, mesh_t, verify_t, report_t, curvature_t, info_t;

    auto* eval = app.add_subcommand("eval", "evaluate the immersion at one point");
    add_family(eval, c, eval_t);
    eval_t["point"] = eval->add_option("--point", c.point, "u,v");

    auto* mesh = app.add_subcommand("mesh", "sample, project and export a mesh");
    add_family(mesh, c, mesh_t);
    add_grid(mesh, c, mesh_t);
    mesh_t["project"] = mesh->add_option("--project", c.project, "three of x, y, z, w");
    mesh_t["format"] = mesh->add_option("--format", c.format, "obj, ply or csv");
    mesh_t["out"] = mesh->add_option("--out", c.out, "output file");

    auto* verify = app.add_subcommand("verify", "run the invariant suites");
    add_family(verify, c, verify_t);
    add_sampling(verify, c, verify_t);

    auto* report = app.add_subcommand("report", "audit the displayed parametrizations");
    add_family(report, c, report_t);
    add_sampling(report, c, report_t);

    auto* curvature = app.add_subcommand("curvature", "Gauss curvature over a polar grid, as csv");
    add_family(curvature, c, curvature_t);
    add_grid(curvature, c, curvature_t);
    curvature_t["out"] = curvature->add_option("--out", c.out, "output csv file");

    auto* info = app.add_subcommand("info", "closed-form coefficients as JSON");
    add_family(info, c, info_t);

    const std::vector<std::pair<CLI::App*, OptionTable*>> tables = {
        {eval, &eval_t},     {mesh, &mesh_t},           {verify, &verify_t},
        {report, &report_t}, {curvature, &curvature_t}, {info, &info_t},
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "wep4: " << e.what() << '\n';
        return 2;
    }

    try {
        for (const auto& [sub, table] : tables) {
            if (sub->parsed()) {
                apply_config(c, *table);
            }
        }
        if (eval->parsed()) {
            return cmd_eval(c, out);
        }
        if (mesh->parsed()) {
            return cmd_mesh(c, out);
        }
        if (verify->parsed()) {
            return cmd_verify(c, out);
        }
        if (report->parsed()) {
            return cmd_report(c, out);
        }
        if (curvature->parsed()) {
            return cmd_curvature(c, out);
        }
        return cmd_info(c, out);
    } catch (const UsageError& e) {
        err << "wep4: " << e.what() << '\n';
        return 2;
    } catch (const ParameterError& e) {
        err << "wep4: " << e.what() << '\n';
        return 2;
    } catch (const PunctureError& e) {
        err << "wep4: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "wep4: " << e.what() << '\n';
        return 1;
    }
}

} // namespace wep4

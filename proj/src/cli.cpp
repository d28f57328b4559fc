#include "motivic/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "motivic/a1_class.hpp"
#include "motivic/convolution.hpp"
#include "motivic/errors.hpp"
#include "motivic/json_io.hpp"
#include "motivic/pretty.hpp"
#include "motivic/realizations.hpp"
#include "motivic/vanishing.hpp"

namespace motivic::cli {

namespace {

using json::Json;

class IoError : public Error {
public:
    explicit IoError(const std::string& detail) : Error("io", detail) {}
};

Json load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return json::parse_text(buffer.str());
}

// A class file, the output of `vanishing` (its phi is used) or an A1 class
// (pushed forward to the point).
MuClass load_class_like(const std::string& path)
{
    const Json j = load(path);
    if (j.is_object() && j.contains("phi"))
        return json::parse_class(j["phi"]);
    if (j.is_object() && j.contains("support"))
        return epsilon_push(json::parse_a1(j));
    return json::parse_class(j);
}

// A generator file; a bare SNC datum is read as a resolved generator with a
// single critical value at 0.
Generator load_generator(const std::string& path)
{
    const Json j = load(path);
    if (j.is_object() && j.contains("components"))
        return Resolved{{Critical{BasePoint(0), json::parse_datum(j)}}};
    return json::parse_generator(j);
}

Json error_object(const std::string& kind, const std::string& detail)
{
    return Json{{"error", kind}, {"detail", detail}};
}

struct Options {
    std::vector<std::string> inputs;
    std::string out_path;
    bool pretty = false;
    bool chi_c = false;
    bool e_poly = false;
    std::vector<std::int64_t> fer;
    std::uint64_t q = 0;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out)
{
    CLI::App app{"Equivariant Grothendieck-ring calculator: convolution products, motivic vanishing cycles and "
                 "their realizations",
                 "motivic"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--out", opt.out_path, "write the result to this file instead of standard output");
    app.add_flag("--pretty", opt.pretty, "print classes in infix notation instead of JSON");

    auto* normalize_cmd = app.add_subcommand("normalize", "normal form of a class");
    normalize_cmd->add_option("class", opt.inputs, "class JSON")->required()->expected(1);
    auto* convolve_cmd = app.add_subcommand("convolve", "convolution product a * b");
    convolve_cmd->add_option("classes", opt.inputs, "two class JSON files")->required()->expected(2);
    auto* star_a1_cmd = app.add_subcommand("star-a1", "convolution over the affine line");
    star_a1_cmd->add_option("classes", opt.inputs, "two A1 class JSON files")->required()->expected(2);
    auto* assoc_cmd = app.add_subcommand("assoc-check", "compare (a * b) * c with a * (b * c)");
    assoc_cmd->add_option("classes", opt.inputs, "three class JSON files")->required()->expected(3);
    auto* vanishing_cmd = app.add_subcommand("vanishing", "vanishing cycles of an SNC datum");
    vanishing_cmd->add_option("datum", opt.inputs, "SNC datum JSON")->required()->expected(1);
    auto* measure_cmd = app.add_subcommand("measure", "vanishing cycles measure of a presentation");
    measure_cmd->add_option("presentation", opt.inputs, "presentation JSON")->required()->expected(1);
    auto* ts_cmd = app.add_subcommand("ts-check", "Thom-Sebastiani check phi(V) * phi(W) = phi(direct)");
    ts_cmd->add_option("generators", opt.inputs, "three generator JSON files")->required()->expected(3);
    auto* realize_cmd = app.add_subcommand("realize", "Euler characteristic or E-polynomial of a class");
    realize_cmd->add_option("class", opt.inputs, "class JSON")->required()->expected(1);
    auto* chi_flag = realize_cmd->add_flag("--chi-c", opt.chi_c, "compactly supported Euler characteristic");
    auto* epoly_flag = realize_cmd->add_flag("--e-poly", opt.e_poly, "Hodge-Deligne polynomial of the class");
    chi_flag->excludes(epoly_flag);
    auto* oracle_cmd = app.add_subcommand("oracle", "count points of fer(n, r) over F_q");
    oracle_cmd->add_option("--fer", opt.fer, "degree n and arity r")->required()->expected(2);
    oracle_cmd->add_option("--q", opt.q, "field size (prime power)")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        out << error_object("usage", e.what()).dump() << '\n';
        return kExitParse;
    }
    if (realize_cmd->parsed() && !opt.chi_c && !opt.e_poly) {
        out << error_object("usage", "realize needs --chi-c or --e-poly").dump() << '\n';
        return kExitParse;
    }

    std::string result;
    try {
        const auto& in = opt.inputs;
        auto render_class = [&](const MuClass& c) { return opt.pretty ? pretty(c) : json::to_json(c).dump(); };
        auto render_a1 = [&](const A1Class& f) { return opt.pretty ? pretty(f) : json::to_json(f).dump(); };

        if (normalize_cmd->parsed()) {
            result = render_class(json::parse_class(load(in[0])));
        } else if (convolve_cmd->parsed()) {
            result = render_class(star(json::parse_class(load(in[0])), json::parse_class(load(in[1]))));
        } else if (star_a1_cmd->parsed()) {
            result = render_a1(a1_star(json::parse_a1(load(in[0])), json::parse_a1(load(in[1]))));
        } else if (assoc_cmd->parsed()) {
            const auto report = assoc_check(json::parse_class(load(in[0])), json::parse_class(load(in[1])),
                                            json::parse_class(load(in[2])));
            result = json::to_json(report).dump();
        } else if (vanishing_cmd->parsed()) {
            const auto v = vanishing_cycles(json::parse_datum(load(in[0])));
            result = opt.pretty ? "phi = " + pretty(v.phi) + "\nphi_regular = " + pretty(v.phi_regular)
                                : json::to_json(v).dump();
        } else if (measure_cmd->parsed()) {
            result = render_a1(phi_measure(json::parse_presentation(load(in[0]))));
        } else if (ts_cmd->parsed()) {
            const auto report = ts_check(load_generator(in[0]), load_generator(in[1]), load_generator(in[2]));
            result = json::to_json(report).dump();
        } else if (realize_cmd->parsed()) {
            const MuClass c = load_class_like(in[0]);
            if (opt.chi_c)
                result = json::to_json(chi_c(c)).dump();
            else
                result = opt.pretty ? pretty(e_polynomial(forget_action(c)))
                                    : Json{{"epoly", json::to_json(e_polynomial(forget_action(c)))}}.dump();
        } else if (oracle_cmd->parsed()) {
            result = std::to_string(point_count_oracle(opt.fer[0], opt.fer[1], opt.q, oracle_budget_from_env()));
        }
    } catch (const ParseError& e) {
        out << error_object(e.kind(), e.what()).dump() << '\n';
        return kExitParse;
    } catch (const IoError& e) {
        out << error_object(e.kind(), e.what()).dump() << '\n';
        return kExitParse;
    } catch (const Error& e) {
        out << error_object(e.kind(), e.what()).dump() << '\n';
        return kExitFailure;
    }

    if (opt.out_path.empty()) {
        out << result << '\n';
    } else {
        std::ofstream file(opt.out_path);
        if (!file) {
            out << error_object("io", "cannot write '" + opt.out_path + "'").dump() << '\n';
            return kExitParse;
        }
        file << result << '\n';
    }
    return kExitOk;
}

} // namespace motivic::cli

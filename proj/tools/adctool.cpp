#include "adc/cells.hpp"
#include "adc/colimits.hpp"
#include "adc/constructors.hpp"
#include "adc/debug.hpp"
#include "adc/diagram.hpp"
#include "adc/error.hpp"
#include "adc/gray.hpp"
#include "adc/io.hpp"
#include "adc/verify.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace adc;

namespace {

enum Exit { kPass = 0, kFailed = 1, kInvalid = 2, kResource = 3 };

std::string read_text(const std::string& path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::ParseError, fmt::format("cannot read '{}'", path));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Complex from_spec(const std::string& spec);

// A file path, "-" for stdin, or a constructor: empty, point, globe:N,
// cube:N, theta:EXPR, suspend:SPEC.
Complex load(const std::string& spec)
{
    if (spec == "-" || std::ifstream(spec).good())
        return decode_adc(read_text(spec));
    return from_spec(spec);
}

int to_int(const std::string& text, const std::string& what)
{
    try {
        std::size_t used = 0;
        int v = std::stoi(text, &used);
        if (used == text.size())
            return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::ParseError, fmt::format("{}: '{}' is not an integer", what, text));
}

Complex from_spec(const std::string& spec)
{
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "empty")
        return empty_complex();
    if (head == "point")
        return point();
    if (head == "globe")
        return globe(to_int(arg, spec));
    if (head == "cube")
        return cube(to_int(arg, spec));
    if (head == "theta")
        return theta_from_expr(ThetaExpr::parse(arg));
    if (head == "suspend")
        return suspension(load(arg));
    throw Error(ErrorKind::ParseError, fmt::format("'{}' is neither a readable file nor a constructor", spec));
}

Complex from_json_spec(const Json& j)
{
    if (j.is_string())
        return load(j.get<std::string>());
    return adc_from_json(j);
}

Cell load_cell(const std::string& arg, const Complex& k)
{
    if (!arg.empty() && arg[0] == '@')
        return decode_cell(read_text(arg.substr(1)), k);
    return decode_cell(arg, k);
}

std::set<Id> split_ids(const std::string& list)
{
    std::set<Id> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.insert(item);
    return out;
}

void print_adc(const Complex& k, bool pretty)
{
    std::cout << encode_adc(k, pretty ? 2 : -1) << "\n";
}

int report_exit(const CheckReport& r)
{
    switch (r.status) {
    case Status::Pass: return kPass;
    case Status::Skipped: return kResource;
    case Status::Fail: return kFailed;
    case Status::Error: return kFailed;
    }
    return kFailed;
}

SuiteConfig load_config(const std::string& path)
{
    const Json j = parse_json(read_text(path));
    if (!j.is_object())
        throw Error(ErrorKind::SchemaError, "suite config: expected an object");
    SuiteConfig c;
    if (auto it = j.find("corpus"); it != j.end()) {
        if (!it->is_array())
            throw Error(ErrorKind::SchemaError, "corpus: expected an array");
        for (const auto& e : *it)
            c.corpus.push_back(from_json_spec(e));
    }
    if (auto it = j.find("thetas"); it != j.end()) {
        if (!it->is_array())
            throw Error(ErrorKind::SchemaError, "thetas: expected an array");
        for (const auto& e : *it) {
            if (!e.is_string())
                throw Error(ErrorKind::SchemaError, "thetas: expected strings");
            c.thetas.push_back(ThetaExpr::parse(e.get<std::string>()));
        }
    }
    if (auto it = j.find("max_m"); it != j.end()) {
        if (!it->is_number_integer())
            throw Error(ErrorKind::SchemaError, "max_m: expected an integer");
        c.max_m = it->get<int>();
    }
    if (auto it = j.find("properties"); it != j.end()) {
        if (!it->is_boolean())
            throw Error(ErrorKind::SchemaError, "properties: expected a boolean");
        c.properties = it->get<bool>();
    }
    return c;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Augmented directed complexes: constructions, cells, colimits and checks"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string mutate;
    std::uint64_t search_budget = 0, enum_limit = 0;
    bool pretty = false;
    app.add_option("--mutate", mutate, "Debug mutation: flip-sign or corrupt-parts")
        ->check(CLI::IsMember({"flip-sign", "corrupt-parts"}));
    app.add_option("--search-budget", search_budget, "Isomorphism/retraction search nodes (ADC_SEARCH_BUDGET)");
    app.add_option("--enum-limit", enum_limit, "Cell enumeration limit (ADC_ENUM_LIMIT)");
    app.add_flag("--pretty", pretty, "Indent JSON output");

    std::function<int()> run;

    // make
    auto* make = app.add_subcommand("make", "Build a complex and print it as JSON");
    make->require_subcommand(1);
    int n = 0;
    bool want_boundary = false;
    std::string expr, file_a, file_b;
    {
        auto* c = make->add_subcommand("globe", "The n-globe");
        c->add_option("N", n)->required()->check(CLI::Range(0, 64));
        c->add_flag("--boundary", want_boundary);
        c->callback([&] { run = [&] { print_adc(globe(n, want_boundary), pretty); return kPass; }; });
    }
    {
        auto* c = make->add_subcommand("cube", "The Gray cube");
        c->add_option("N", n)->required()->check(CLI::Range(0, 64));
        c->add_flag("--boundary", want_boundary);
        c->callback([&] { run = [&] { print_adc(cube(n, want_boundary), pretty); return kPass; }; });
    }
    {
        auto* c = make->add_subcommand("theta", "Θ-object from a tree expression such as (0,(0))");
        c->add_option("EXPR", expr)->required();
        c->callback([&] { run = [&] { print_adc(theta_from_expr(ThetaExpr::parse(expr)), pretty); return kPass; }; });
    }
    {
        auto* c = make->add_subcommand("suspend", "Suspension");
        c->add_option("FILE", file_a)->required();
        c->callback([&] { run = [&] { print_adc(suspension(load(file_a)), pretty); return kPass; }; });
    }
    {
        auto* c = make->add_subcommand("wedge", "Wedge of two bipointed complexes");
        c->add_option("A", file_a)->required();
        c->add_option("B", file_b)->required();
        c->callback([&] { run = [&] { print_adc(wedge(load(file_a), load(file_b)), pretty); return kPass; }; });
    }
    {
        auto* c = make->add_subcommand("boundary", "Drop the top-degree elements");
        c->add_option("FILE", file_a)->required();
        c->callback([&] { run = [&] { print_adc(boundary(load(file_a)), pretty); return kPass; }; });
    }
    {
        auto* c = make->add_subcommand("point", "The point");
        c->callback([&] { run = [&] { print_adc(point(), pretty); return kPass; }; });
    }
    {
        auto* c = make->add_subcommand("empty", "The empty complex");
        c->callback([&] { run = [&] { print_adc(empty_complex(), pretty); return kPass; }; });
    }

    // tensor
    {
        auto* c = app.add_subcommand("tensor", "Gray tensor product A⊗B");
        c->add_option("A", file_a)->required();
        c->add_option("B", file_b)->required();
        c->callback([&] { run = [&] { print_adc(gray_tensor(load(file_a), load(file_b)), pretty); return kPass; }; });
    }

    // cells
    int max_dim = 1, bound = 3;
    bool counts_only = false;
    {
        auto* c = app.add_subcommand("cells", "Enumerate cells");
        c->add_option("FILE", file_a)->required();
        c->add_option("--max-dim", max_dim)->check(CLI::Range(0, 64));
        c->add_option("--bound", bound)->check(CLI::Range(0, 64));
        c->add_flag("--counts-only", counts_only);
        c->callback([&] {
            run = [&] {
                const Complex k = load(file_a);
                EnumOptions opts{enum_limit};
                const auto cells = enumerate_cells(k, max_dim, bound, opts);
                Json out{{"counts", cell_counts(cells)}};
                if (!counts_only) {
                    Json list = Json::array();
                    for (const auto& cell : cells)
                        list.push_back(cell_to_json(cell));
                    out["cells"] = std::move(list);
                }
                std::cout << out.dump(pretty ? 2 : -1) << "\n";
                return kPass;
            };
        });
    }

    // attach
    std::string src_cell, tgt_cell, new_id;
    int dim = 0;
    {
        auto* c = app.add_subcommand("attach", "Attach a cell along a parallel pair");
        c->add_option("BASE", file_a)->required();
        c->add_option("--src", src_cell, "Cell JSON or @file");
        c->add_option("--tgt", tgt_cell, "Cell JSON or @file");
        c->add_option("--dim", dim)->required()->check(CLI::Range(0, 64));
        c->add_option("--id", new_id)->required();
        c->callback([&] {
            run = [&] {
                const Complex base = load(file_a);
                AttachStep step{dim, {}, {}, new_id};
                if (dim > 0) {
                    step.source = load_cell(src_cell, base);
                    step.target = load_cell(tgt_cell, base);
                }
                AttachResult r = attach_cell(base, step);
                print_adc(r.result, pretty);
                std::cerr << "site member: " << (r.site_member ? "yes" : "no") << "\n";
                return kPass;
            };
        });
    }

    // collapse
    std::string members;
    {
        auto* c = app.add_subcommand("collapse", "Collapse each component of a subcomplex to a point");
        c->add_option("FILE", file_a)->required();
        c->add_option("--members", members, "Comma-separated ids")->required();
        c->callback([&] {
            run = [&] {
                print_adc(collapse_components(load(file_a), Subcomplex{split_ids(members)}).result, pretty);
                return kPass;
            };
        });
    }

    // filtration
    {
        auto* c = app.add_subcommand("filtration", "Attachment steps rebuilding a complex, one JSON line each");
        c->add_option("FILE", file_a)->required();
        c->add_option("--from", members, "Comma-separated ids of the starting subcomplex");
        c->callback([&] {
            run = [&] {
                const Complex k = load(file_a);
                for (const auto& step : attachment_sequence(k, Subcomplex{split_ids(members)}))
                    std::cout << step_to_json(step).dump() << "\n";
                return kPass;
            };
        });
    }

    // js-gen
    std::vector<std::string> seeds;
    JsOptions js;
    {
        auto* c = app.add_subcommand("js-gen", "Stream J_S generators as JSON lines");
        c->add_option("--seeds", seeds, "Seed files or constructors")->required();
        c->add_option("--max-gen", js.max_generators)->required();
        c->add_option("--max-dim", js.max_dim)->required()->check(CLI::Range(0, 64));
        c->add_option("--bound", js.coeff_bound)->check(CLI::Range(0, 64));
        c->add_flag("--dedupe", js.dedupe);
        c->add_flag("--include-non-members", js.include_non_members);
        c->callback([&] {
            run = [&] {
                std::vector<Complex> loaded;
                for (const auto& s : seeds)
                    loaded.push_back(load(s));
                js.enum_options.limit = enum_limit;
                enumerate_js(loaded, js, [](const JsGenerator& g) { std::cout << js_generator_to_json(g).dump() << "\n"; });
                return kPass;
            };
        });
    }

    // check
    bool json_out = false;
    std::string config_path, json_path;
    bool no_properties = false;
    auto* check = app.add_subcommand("check", "Run a checker");
    check->require_subcommand(1);
    check->add_flag("--json", json_out, "Print the JSON report instead of text");
    auto print_report = [&](const CheckReport& r) {
        if (json_out)
            std::cout << check_report_to_json(r).dump(pretty ? 2 : -1) << "\n";
        else
            std::cout << r.str();
        return report_exit(r);
    };
    {
        auto* c = check->add_subcommand("susp-tensor", "□¹⊗C collapsed along ∂□¹⊗C is ΣC");
        c->add_option("FILE", file_a)->required();
        c->callback([&] { run = [&] { return print_report(check_susp_tensor(load(file_a))); }; });
    }
    {
        auto* c = check->add_subcommand("decomp", "□¹⊗ΣC as a funny square with Σ(□¹⊗C) attached");
        c->add_option("FILE", file_a)->required();
        c->callback([&] { run = [&] { return print_report(check_decomp(load(file_a))); }; });
    }
    BigCellOptions big;
    {
        auto* c = check->add_subcommand("big-cell", "Uniqueness of the big cell of □¹⊗θ");
        c->add_option("EXPR", expr)->required();
        c->add_option("--bound", big.coeff_bound)->check(CLI::Range(0, 64));
        c->add_option("--stabilization-bound", big.stabilization_bound)->check(CLI::Range(0, 64));
        c->callback([&] {
            run = [&] {
                big.enum_options.limit = enum_limit;
                return print_report(check_big_cell_unique(ThetaExpr::parse(expr), big));
            };
        });
    }
    {
        auto* c = check->add_subcommand("cube-globe", "□^m and 𝔾_m as pushouts of each other");
        c->add_option("M", n)->required()->check(CLI::Range(1, 64));
        c->callback([&] {
            run = [&] { return print_report(check_cube_globe(n, CubeGlobeOptions{search_budget})); };
        });
    }
    {
        auto* c = check->add_subcommand("suite", "Run every checker over a corpus");
        c->add_option("--config", config_path, "JSON: corpus, thetas, max_m, properties");
        c->add_option("--report", json_path, "Also write the JSON report here");
        c->add_flag("--no-properties", no_properties);
        c->callback([&] {
            run = [&] {
                SuiteConfig config = config_path.empty() ? SuiteConfig::defaults() : load_config(config_path);
                if (no_properties)
                    config.properties = false;
                const SuiteReport r = run_suite(config);
                if (json_out)
                    std::cout << suite_report_to_json(r).dump(pretty ? 2 : -1) << "\n";
                else
                    std::cout << r.table();
                if (!json_path.empty()) {
                    std::ofstream out(json_path);
                    out << suite_report_to_json(r).dump(2) << "\n";
                }
                if (!r.passed())
                    return r.resource_limited() && std::none_of(r.reports.begin(), r.reports.end(), [](const TimedReport& t) {
                               return t.report.status == Status::Fail || t.report.status == Status::Error;
                           })
                               ? kResource
                               : kFailed;
                return kPass;
            };
        });
    }

    // emit
    {
        auto* c = app.add_subcommand("emit", "Diagram text");
        c->require_subcommand(1);
        auto* dot = c->add_subcommand("dot", "Graphviz");
        dot->add_option("FILE", file_a)->required();
        dot->callback([&] { run = [&] { std::cout << emit_dot(load(file_a)); return kPass; }; });
        auto* tikz = c->add_subcommand("tikz", "TikZ");
        tikz->add_option("FILE", file_a)->required();
        tikz->callback([&] { run = [&] { std::cout << emit_tikz(load(file_a)); return kPass; }; });
    }

    // validate
    bool require_site = false;
    {
        auto* c = app.add_subcommand("validate", "Check the complex laws (and optionally site membership)");
        c->add_option("FILE", file_a)->required();
        c->add_flag("--site", require_site, "Also require unital and strongly loop-free");
        c->callback([&] {
            run = [&] {
                const Complex k = load(file_a);
                const auto report = validate_adc(k);
                std::cout << (report.ok() ? "valid ADC\n" : report.str());
                if (!report.ok())
                    return kFailed;
                const auto unital = is_unital(k);
                const auto loops = is_strongly_loop_free(k);
                std::cout << "unital: " << (unital.ok ? "yes" : "no, at " + *unital.counterexample) << "\n";
                std::cout << "strongly loop-free: "
                          << (loops.ok ? "yes" : fmt::format("no, cycle {}", fmt::join(loops.cycle, " → "))) << "\n";
                return require_site && !(unital.ok && loops.ok) ? kFailed : kPass;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    if (search_budget)
        setenv("ADC_SEARCH_BUDGET", std::to_string(search_budget).c_str(), 1);
    if (enum_limit)
        setenv("ADC_ENUM_LIMIT", std::to_string(enum_limit).c_str(), 1);
    debug::set_flip_leibniz_sign(mutate == "flip-sign");
    debug::set_corrupt_pos_neg_parts(mutate == "corrupt-parts");

    try {
        return run ? run() : kInvalid;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_resource_limit() ? kResource : kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
}

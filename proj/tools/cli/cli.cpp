#include "cli.hpp"

#include "format.hpp"
#include "verify.hpp"

#include "dtroots/enumeration.hpp"
#include "dtroots/error.hpp"
#include "dtroots/homology.hpp"
#include "dtroots/max_degree.hpp"
#include "dtroots/primary.hpp"
#include "dtroots/serialization.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>

namespace dtroots::cli {

namespace {

struct Options {
    std::string type = "A";
    std::optional<Int> genus;
    std::optional<Int> surface_genus;
    std::optional<Int> degree;
    bool classes = false;
    std::string method = "closed";
    std::string table;
    Int limit = 500;
    bool construct = false;
    Int g0 = 1;
    Int m = 0;
    std::string op;
    std::string target;
    std::string suite = "all";
    Format format = Format::plain;
    unsigned jobs = 1;
};

class UsageError : public Error {
public:
    using Error::Error;
};

TwistType twist_type(const Options& o)
{
    return o.type == "A" ? TwistType::A : TwistType::B;
}

// Genus parameter g (type A) or g' (type B) from --genus or --surface-genus.
Int genus_param(const Options& o)
{
    if (o.genus && o.surface_genus)
        throw UsageError("--genus and --surface-genus are mutually exclusive");
    if (o.genus)
        return *o.genus;
    if (!o.surface_genus)
        throw UsageError("--genus or --surface-genus is required");
    const Int s = *o.surface_genus;
    if (twist_type(o) == TwistType::A)
        return s - 2;
    if (s % 2 != 0)
        throw UsageError("--surface-genus must be even for type B");
    return (s - 2) / 2;
}

void print_json(std::ostream& out, const Json& j)
{
    out << j.dump(2) << '\n';
}

std::vector<std::string> dataset_cells(const DataSet& ds)
{
    std::string cones;
    for (const auto& cone : ds.cones()) {
        if (!cones.empty())
            cones += ' ';
        cones += '(' + std::to_string(cone.c) + ',' + std::to_string(cone.order) + ')';
    }
    return {std::string(1, to_char(ds.type())), std::to_string(ds.degree()), std::to_string(ds.base_genus()),
            std::to_string(ds.a()),           std::to_string(ds.b()),      cones};
}

int cmd_enumerate(const Options& o, std::ostream& out)
{
    GenusQuery query{twist_type(o), genus_param(o), o.degree};
    auto sets = o.classes ? enumerate_classes(query) : enumerate_datasets(query);
    switch (o.format) {
    case Format::json: {
        Json j = Json::array();
        for (const auto& ds : sets)
            j.push_back(to_json(ds));
        print_json(out, j);
        break;
    }
    case Format::plain:
        for (const auto& ds : sets)
            out << to_string(ds) << '\n';
        break;
    default: {
        TextTable t{{"type", "n", "g0", "a", "b", "cones"}, {}};
        for (const auto& ds : sets)
            t.rows.push_back(dataset_cells(ds));
        t.render(out, o.format);
    }
    }
    return kExitOk;
}

int cmd_exists(const Options& o, std::ostream& out)
{
    const auto type = twist_type(o);
    const Int g = genus_param(o);
    if (g < 0)
        throw UsageError("--genus must be >= 0");
    const bool exists = type == TwistType::A ? (g >= 1 && root_exists(type, g)) : root_exists(type, g);
    const std::string clause = type == TwistType::A ? "g = 3 or g >= 5" : "g' >= 2";
    if (o.format == Format::json) {
        print_json(out, {{"type", std::string(1, to_char(type))}, {"genus", g}, {"exists", exists}, {"clause", clause}});
        return kExitOk;
    }
    if (o.format == Format::plain) {
        out << (exists ? "true" : "false") << " (" << clause << ")\n";
        return kExitOk;
    }
    TextTable t{{"type", "genus", "exists", "clause"}, {{std::string(1, to_char(type)), std::to_string(g),
                                                          exists ? "true" : "false", clause}}};
    t.render(out, o.format);
    return kExitOk;
}

int cmd_maxdeg(const Options& o, std::ostream& out)
{
    const auto type = twist_type(o);
    const Int g = genus_param(o);
    if (g < 0)
        throw UsageError("--genus must be >= 0");
    std::vector<std::pair<std::string, MaxDegreeResult>> results;
    if (o.method == "closed" || o.method == "both")
        results.emplace_back("closed", max_degree_closed_form(type, g));
    if (o.method == "brute" || o.method == "both")
        results.emplace_back("brute", max_degree_bruteforce(type, g));

    std::optional<bool> agree;
    if (results.size() == 2) {
        agree = consistent(results[0].second, results[1].second);
        results[0].second = resolve_with_oracle(results[0].second, results[1].second);
    }

    if (o.format == Format::json) {
        Json j = {{"type", std::string(1, to_char(type))}, {"genus", g}};
        for (const auto& [method, r] : results)
            j[method] = to_json(r);
        if (agree)
            j["agree"] = *agree;
        print_json(out, j);
    } else if (o.format == Format::plain) {
        for (const auto& [method, r] : results) {
            out << method << ": " << describe(r) << " case " << r.case_id;
            if (r.witness)
                out << " witness " << to_tuple_string(*r.witness);
            out << '\n';
        }
        if (agree)
            out << (*agree ? "agree" : "disagree") << '\n';
    } else {
        TextTable t{{"method", "result", "case_id", "witness"}, {}};
        for (const auto& [method, r] : results)
            t.rows.push_back({method, describe(r), r.case_id, r.witness ? to_tuple_string(*r.witness) : ""});
        t.render(out, o.format);
        if (agree)
            out << (*agree ? "agree" : "disagree") << '\n';
    }
    return agree.value_or(true) ? kExitOk : kExitVerificationFailed;
}

void render_rows(const std::vector<DegreeRow>& rows, Format format, std::ostream& out)
{
    if (format == Format::csv) {
        out << to_csv(rows);
        return;
    }
    TextTable t{{"g", "N", "case_id", "witness"}, {}};
    for (const auto& row : rows)
        t.rows.push_back({std::to_string(row.genus), std::to_string(row.degree), row.case_id,
                          row.witness ? to_tuple_string(*row.witness) : ""});
    t.render(out, format);
}

int cmd_table(const Options& o, std::ostream& out)
{
    if (o.table == "exceptional") {
        auto rows = exceptional_table(o.limit, o.jobs);
        if (o.format == Format::json)
            print_json(out, to_json(rows));
        else
            render_rows(rows, o.format, out);
        return kExitOk;
    }

    auto census = caseB_census(o.limit, o.jobs);
    if (o.format == Format::json) {
        print_json(out, to_json(census));
        return kExitOk;
    }
    if (o.format == Format::csv) {
        auto rows = census.case11;
        rows.insert(rows.end(), census.case12.begin(), census.case12.end());
        std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.genus < y.genus; });
        render_rows(rows, o.format, out);
        return kExitOk;
    }
    std::string plus_one;
    for (Int g : census.case12_degree_equals_genus_plus_one)
        plus_one += (plus_one.empty() ? "" : ",") + std::to_string(g);
    TextTable summary{{"quantity", "value"},
                      {{"limit", std::to_string(census.limit)},
                       {"case B11 genera", std::to_string(census.case11_count)},
                       {"case B11 with N = g'", std::to_string(census.case11_degree_equals_genus)},
                       {"case B12 genera", std::to_string(census.case12_count)},
                       {"case B12 with N = g'+1", "{" + plus_one + "}"},
                       {"case B12 attained by the two-power data set",
                        std::to_string(census.case12_two_power_maximal)}}};
    summary.render(out, o.format);
    out << '\n';
    render_rows(census.case11, o.format, out);
    out << '\n';
    render_rows(census.case12, o.format, out);
    return kExitOk;
}

int cmd_primary(const Options& o, std::ostream& out)
{
    const auto type = twist_type(o);
    if (!o.degree)
        throw UsageError("--degree is required");
    if (o.construct) {
        const auto ds = construction_dataset(type, *o.degree, o.g0, o.m);
        if (o.format == Format::json)
            print_json(out, {{"dataset", to_json(ds)}, {"genus", genus(ds)}, {"primary", is_primary(ds)}});
        else if (o.format == Format::plain)
            out << to_string(ds) << " genus " << genus(ds) << '\n';
        else
            TextTable{{"type", "n", "g0", "a", "b", "cones"}, {dataset_cells(ds)}}.render(out, o.format);
        return kExitOk;
    }
    const Int g = genus_param(o);
    PrimaryQuery q{type, *o.degree, g};
    const bool closed = primary_exists_closed_form(q);
    const bool brute = primary_exists_bruteforce(q);
    if (o.format == Format::json) {
        print_json(out, {{"type", std::string(1, to_char(type))},
                         {"degree", *o.degree},
                         {"genus", g},
                         {"closed_form", closed},
                         {"search", brute}});
    } else if (o.format == Format::plain) {
        out << (brute ? "true" : "false");
        if (closed != brute)
            out << " (closed form says " << (closed ? "true" : "false") << ")";
        out << '\n';
    } else {
        TextTable{{"type", "degree", "genus", "closed_form", "search"},
                  {{std::string(1, to_char(type)), std::to_string(*o.degree), std::to_string(g),
                    closed ? "true" : "false", brute ? "true" : "false"}}}
            .render(out, o.format);
    }
    return closed == brute ? kExitOk : kExitVerificationFailed;
}

void print_matrix(const F2Matrix& m, Format format, std::ostream& out)
{
    if (format == Format::json)
        print_json(out, to_json(m));
    else
        out << to_plain(m);
}

int cmd_homology(const Options& o, std::ostream& out)
{
    if (!o.genus)
        throw UsageError("--genus is required");
    if (*o.genus < 1 || *o.genus > F2Matrix::kMaxDim)
        throw UsageError("--genus must be in [1, 64] for homology");
    const int g = static_cast<int>(*o.genus);
    if (o.op == "psi-a1") {
        print_matrix(psi_twist_a1(g), o.format, out);
        return kExitOk;
    }
    if (o.op == "psi-b") {
        print_matrix(psi_twist_b(g), o.format, out);
        return kExitOk;
    }

    std::string target_name = o.target;
    if (target_name.empty())
        target_name = g % 2 == 0 ? "psi-b" : "psi-a1";
    const auto target = target_name == "psi-b" ? psi_twist_b(g) : psi_twist_a1(g);
    const auto root = find_square_root(target);
    if (o.format == Format::json) {
        print_json(out, {{"target", target_name},
                         {"genus", g},
                         {"square_root", root ? to_json(*root) : Json(nullptr)},
                         {"exhaustive", true}});
    } else if (root) {
        out << "square root of " << target_name << " found:\n" << to_plain(*root);
    } else {
        out << "no square root found (exhaustive)\n";
    }
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const auto results = run_suite(o.suite, o.limit, o.jobs);
    const bool all_passed = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    if (o.format == Format::json) {
        Json j = Json::array();
        for (const auto& r : results)
            j.push_back({{"suite", r.suite}, {"claim", r.claim}, {"passed", r.passed}, {"detail", r.detail}});
        print_json(out, {{"limit", o.limit}, {"passed", all_passed}, {"claims", j}});
    } else if (o.format == Format::plain) {
        for (const auto& r : results)
        {
            out << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.claim;
            if (!r.detail.empty())
                out << " (" << r.detail << ")";
            out << '\n';
        }
    } else {
        TextTable t{{"suite", "claim", "result", "detail"}, {}};
        for (const auto& r : results)
            t.rows.push_back({r.suite, r.claim, r.passed ? "pass" : "fail", r.detail});
        t.render(out, o.format);
    }
    return all_passed ? kExitOk : kExitVerificationFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Data-set search for Dehn twist roots", "dtroots"};
    app.require_subcommand(1);
    app.fallthrough();

    const std::map<std::string, Format> formats{
        {"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}, {"markdown", Format::markdown}};
    app.add_option("--format", o.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->capture_default_str();
    app.add_option("--jobs", o.jobs, "Worker threads for sweeps")->check(CLI::Range(1u, 256u));

    auto add_type = [&](CLI::App* cmd) {
        cmd->add_option("--type", o.type, "Twist type")->required()->check(CLI::IsMember({"A", "B"}));
    };
    auto add_genus = [&](CLI::App* cmd) {
        cmd->add_option("--genus", o.genus, "g for type A, g' for type B");
        cmd->add_option("--surface-genus", o.surface_genus, "Genus of the surface: g+2 (A) or 2g'+2 (B)");
    };

    auto* enumerate = app.add_subcommand("enumerate", "List data sets of a genus");
    add_type(enumerate);
    add_genus(enumerate);
    enumerate->add_option("--degree", o.degree, "Restrict to one degree");
    enumerate->add_flag("--classes", o.classes, "One representative per equivalence class");

    auto* exists = app.add_subcommand("exists", "Whether a nontrivial root exists");
    add_type(exists);
    add_genus(exists);

    auto* maxdeg = app.add_subcommand("maxdeg", "Maximal root degree");
    add_type(maxdeg);
    add_genus(maxdeg);
    maxdeg->add_option("--method", o.method, "brute, closed or both")
        ->check(CLI::IsMember({"brute", "closed", "both"}))
        ->capture_default_str();

    auto* table = app.add_subcommand("table", "Reproduce a table");
    table->add_option("kind", o.table, "exceptional or census-b")
        ->required()
        ->check(CLI::IsMember({"exceptional", "census-b"}));
    table->add_option("--limit", o.limit, "Largest genus")->capture_default_str();

    auto* primary = app.add_subcommand("primary", "Primary roots");
    add_type(primary);
    add_genus(primary);
    primary->add_option("--degree", o.degree, "Odd degree n >= 3")->required();
    auto* construct = primary->add_flag("--construct", o.construct, "Print the explicit data set");
    primary->add_option("--g0", o.g0, "Base genus for --construct")->needs(construct);
    primary->add_option("--m", o.m, "Cone count for --construct")->needs(construct);

    auto* homology = app.add_subcommand("homology", "GF(2) homology matrices");
    homology->add_option("--op", o.op, "psi-a1, psi-b or sqrt")
        ->required()
        ->check(CLI::IsMember({"psi-a1", "psi-b", "sqrt"}));
    homology->add_option("--genus", o.genus, "Matrix dimension")->required();
    homology->add_option("--target", o.target, "Matrix to take the root of (sqrt)")
        ->check(CLI::IsMember({"psi-a1", "psi-b"}));

    auto* verify = app.add_subcommand("verify", "Check closed forms against brute force");
    verify->add_option("--suite", o.suite, "Suite name")
        ->check(CLI::IsMember({"all", "thm32", "thm41", "thm45", "thm51", "thm52", "cor53", "prop21"}))
        ->capture_default_str();
    verify->add_option("--limit", o.limit, "Largest genus")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (enumerate->parsed())
            return cmd_enumerate(o, out);
        if (exists->parsed())
            return cmd_exists(o, out);
        if (maxdeg->parsed())
            return cmd_maxdeg(o, out);
        if (table->parsed())
            return cmd_table(o, out);
        if (primary->parsed())
            return cmd_primary(o, out);
        if (homology->parsed())
            return cmd_homology(o, out);
        return cmd_verify(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace dtroots::cli

#include "cli.hpp"

#include "indec/bounds.hpp"
#include "indec/codifferent.hpp"
#include "indec/indecomposable.hpp"
#include "indec/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>

namespace indec::cli {

namespace {

using nlohmann::ordered_json;

struct UsageFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::ordered_json integer_json(const Integer& z)
{
    if (fits_int64(z)) return z.get_si();
    return z.get_str();
}

struct Row {
    OrderParams params;
    std::string descriptor;
    Coords coords;
    Integer norm;
    std::int64_t min_trace;
    bool is_unit;
};

const char* const row_keys[] = {"family", "a", "b", "descriptor", "coords", "norm", "min_trace", "is_unit"};

ordered_json row_json(const Row& r)
{
    ordered_json j;
    j["family"] = to_string(r.params.family());
    j["a"] = r.params.a();
    if (r.params.family() == Family::Thomas) j["b"] = r.params.b();
    j["descriptor"] = r.descriptor;
    j["coords"] = ordered_json::array({integer_json(r.coords[0]), integer_json(r.coords[1]), integer_json(r.coords[2])});
    j["norm"] = integer_json(r.norm);
    j["min_trace"] = r.min_trace;
    j["is_unit"] = r.is_unit;
    return j;
}

std::string coords_text(const Coords& c)
{
    return c[0].get_str() + " " + c[1].get_str() + " " + c[2].get_str();
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

void print_rows(const std::vector<Row>& rows, const std::string& format, std::ostream& out)
{
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) arr.push_back(row_json(r));
        out << arr.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        for (std::size_t i = 0; i < std::size(row_keys); ++i) out << (i ? "," : "") << row_keys[i];
        out << "\n";
        for (const auto& r : rows) {
            out << to_string(r.params.family()) << "," << r.params.a() << ",";
            if (r.params.family() == Family::Thomas) out << r.params.b();
            out << "," << csv_field(r.descriptor) << "," << coords_text(r.coords) << "," << r.norm << ","
                << r.min_trace << "," << (r.is_unit ? "true" : "false") << "\n";
        }
        return;
    }
    for (const auto& r : rows) {
        out << r.params.describe() << "  " << r.descriptor << "  (" << r.coords[0] << ", " << r.coords[1] << ", "
            << r.coords[2] << ")  norm=" << r.norm << "  min_trace=" << r.min_trace << (r.is_unit ? "  unit" : "")
            << "\n";
    }
}

Row make_row(const IndecDescriptor& d, const OrderElement& x)
{
    return {d.params, d.label(), x.coords(), norm(x), min_trace(x, min_trace_upper(d)), is_unit(x)};
}

std::vector<Row> enumerate_order(const OrderParams& p, const std::string& method)
{
    const auto descriptors = closed_form_indecomposables(p);
    std::vector<Row> rows;
    if (method == "closed-form") {
        for (const auto& d : descriptors) rows.push_back(make_row(d, descriptor_to_element(d)));
        return rows;
    }
    std::vector<std::pair<std::optional<IndecDescriptor>, OrderElement>> found;
    for (const auto& x : indecomposable_classes(p)) {
        std::optional<IndecDescriptor> match;
        for (const auto& d : descriptors) {
            if (same_unit_class(x, descriptor_to_element(d))) {
                match = d;
                break;
            }
        }
        found.emplace_back(match, x);
    }
    std::stable_sort(found.begin(), found.end(), [](const auto& l, const auto& r) {
        if (l.first.has_value() != r.first.has_value()) return l.first.has_value();
        if (l.first && !(*l.first == *r.first)) return *l.first < *r.first;
        return lex_less(l.second, r.second);
    });
    for (const auto& [d, x] : found) {
        if (d) {
            rows.push_back(make_row(*d, x));
        } else {
            rows.push_back({p, "unmatched", x.coords(), norm(x), min_trace(x, 64), is_unit(x)});
        }
    }
    return rows;
}

struct GridArgs {
    std::string family;
    std::optional<std::int64_t> a, b, a_min, a_max, b_min, b_max;
};

Family family_of(const std::string& name)
{
    auto f = parse_family(name);
    if (!f) throw UsageFailure("unknown family '" + name + "'");
    return *f;
}

std::vector<OrderParams> grid_orders(const GridArgs& g)
{
    const Family f = family_of(g.family);
    const std::int64_t family_min = f == Family::SimplestCubic ? -1 : f == Family::Ennola ? 3 : 2;
    const std::int64_t a_lo = g.a ? *g.a : g.a_min.value_or(family_min);
    const std::int64_t a_hi = g.a ? *g.a : g.a_max.value_or(a_lo);
    if (!g.a && !g.a_min && !g.a_max) throw UsageFailure("give --a or an --a-min/--a-max range");
    std::vector<OrderParams> out;
    if (a_hi < a_lo) return out;
    for (std::int64_t a = a_lo; a <= a_hi; ++a) {
        if (f != Family::Thomas) {
            out.push_back(OrderParams::make(f, a));
            continue;
        }
        if (!g.b && !g.b_min && !g.b_max) throw UsageFailure("thomas needs --b or a --b-min/--b-max range");
        const std::int64_t b_lo = g.b ? *g.b : g.b_min.value_or(a + 2);
        const std::int64_t b_hi = g.b ? *g.b : g.b_max.value_or(b_lo);
        for (std::int64_t b = b_lo; b <= b_hi; ++b) {
            if (g.a && g.b) {
                out.push_back(OrderParams::thomas(a, b));
            } else if (a >= 2 && a <= b - 2) {
                out.push_back(OrderParams::thomas(a, b));
            }
        }
    }
    return out;
}

void print_checks(const std::vector<CheckResult>& results, const std::string& format, std::ostream& out)
{
    const auto failed = std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.passed; });
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : results) arr.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        out << ordered_json{{"checks", arr}, {"passed", failed == 0}}.dump(2) << "\n";
        return;
    }
    for (const auto& r : results) out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    out << (failed == 0 ? "PASS" : "FAIL") << " " << results.size() - failed << "/" << results.size()
        << " checks passed\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Indecomposable totally positive integers in cubic orders"};
    app.require_subcommand(1);

    std::string format = "text";
    const auto formats = CLI::IsMember({"json", "csv", "text"});

    GridArgs grid;
    std::string method = "closed-form";
    auto* enumerate = app.add_subcommand("enumerate", "List indecomposable classes of one order or a grid");
    enumerate->add_option("--family", grid.family, "simplest, ennola or thomas")->required();
    enumerate->add_option("--a", grid.a, "Parameter a");
    enumerate->add_option("--b", grid.b, "Parameter b (thomas)");
    enumerate->add_option("--a-min", grid.a_min, "Grid lower bound for a")->excludes("--a");
    enumerate->add_option("--a-max", grid.a_max, "Grid upper bound for a")->excludes("--a");
    enumerate->add_option("--b-min", grid.b_min, "Grid lower bound for b")->excludes("--b");
    enumerate->add_option("--b-max", grid.b_max, "Grid upper bound for b")->excludes("--b");
    enumerate->add_option("--format", format, "json, csv or text")->check(formats);
    enumerate->add_option("--method", method, "closed-form or search")
        ->check(CLI::IsMember({"closed-form", "search"}));

    std::string suite = "all";
    std::string verify_family;
    SuiteOptions options;
    auto* verify = app.add_subcommand("verify", "Run verification suites; exit 1 on any failure");
    verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suite_names()));
    verify->add_option("--family", verify_family, "Restrict to one family");
    verify->add_option("--a", options.a, "Restrict to parameter a");
    verify->add_option("--b", options.b, "Restrict to parameter b (thomas)");
    verify->add_option("--a-max", options.a_max, "Upper end of the a grid");
    verify->add_option("--window", options.window, "Lemma search window")->check(CLI::PositiveNumber);
    verify->add_option("--samples", options.samples, "Random samples per family (positivity)");
    verify->add_option("--seed", options.seed, "Random seed (positivity)");
    verify->add_flag("--mutate", options.mutate, "Corrupt the norm formulas to exercise the failure path");
    verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    std::int64_t n = 0;
    bool confirm = false;
    auto* witness = app.add_subcommand("witness", "Order whose minimal trace exceeds n");
    witness->add_option("n", n, "n >= 1")->required()->check(CLI::PositiveNumber);
    witness->add_flag("--confirm", confirm, "Confirm the minimal trace exhaustively");
    witness->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Success : UsageError;
    }

    try {
        if (*enumerate) {
            const auto orders = grid_orders(grid);
            if (orders.empty()) {
                err << "empty grid\n";
                return UsageError;
            }
            std::vector<Row> rows;
            for (const auto& p : orders) {
                auto more = enumerate_order(p, method);
                rows.insert(rows.end(), more.begin(), more.end());
            }
            print_rows(rows, format, out);
            return Success;
        }
        if (*verify) {
            if (!verify_family.empty()) options.family = family_of(verify_family);
            const auto results = run_suite(suite, options);
            print_checks(results, format, out);
            return all_passed(results) ? Success : VerificationFailed;
        }
        const auto w = witness_large_min_trace(n, confirm);
        const bool exceeds = w.achieved() > n;
        if (format == "json") {
            ordered_json j;
            j["n"] = n;
            j["family"] = to_string(w.params.family());
            j["a"] = w.params.a();
            j["b"] = w.params.b();
            j["descriptor"] = {{"v", w.descriptor.v}, {"w", w.descriptor.w}};
            j["formula_min_trace"] = w.formula_value;
            j["achieved"] = w.achieved();
            j["confirmed"] = w.confirmed.has_value();
            j["exceeds_n"] = exceeds;
            out << j.dump(2) << "\n";
        } else {
            out << "(" << w.params.a() << ", " << w.params.b() << ", (" << w.descriptor.v << "," << w.descriptor.w
                << "), " << w.achieved() << ")  achieved " << w.achieved() << (exceeds ? " > " : " <= ") << n
                << (w.confirmed ? "  [confirmed]" : "  [formula]") << "\n";
        }
        return exceeds ? Success : VerificationFailed;
    } catch (const UsageFailure& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    }
}

} // namespace indec::cli

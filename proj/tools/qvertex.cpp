// qvertex: vertex operator states, q-zonal functions and identity checks.

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qvertex/identities.hpp"
#include "qvertex/vops.hpp"

using namespace qvertex;

namespace {

constexpr int kDefaultOrder = 8;
constexpr const char *kDefaultFormat = "json";

struct Config {
    int order = kDefaultOrder;
    std::string format = kDefaultFormat;
    std::string q;
    std::optional<int> n, r, s, max_weight;
    std::string kind;
    std::string partition;
    bool q1 = false;
    std::vector<std::string> identities;
};

// Thrown for bad user input; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json header(const Config &c, const std::string &command)
{
    json h{{"command", command},
           {"order", c.order},
           {"format", c.format},
           {"defaults", {{"order", kDefaultOrder}, {"format", kDefaultFormat}, {"order_env", "QVERTEX_ORDER"}}}};
    if (!c.q.empty()) h["q"] = c.q;
    return h;
}

int need(const std::optional<int> &v, const char *flag)
{
    if (!v) throw UsageError(std::string("missing ") + flag);
    return *v;
}

std::optional<mpq_class> q_value(const Config &c)
{
    if (c.q.empty()) return std::nullopt;
    try {
        return parse_rational(c.q);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
}

template <class State>
void emit_state(const Config &c, const std::string &label, const State &st)
{
    const auto q = q_value(c);
    if (c.format == "csv") {
        std::cout << to_csv(st.sym());
        return;
    }
    if (c.format == "pretty") {
        std::cout << label << " = " << st.to_string() << "\n";
        if (q) std::cout << "at q = " << c.q << ": " << evaluated_json(st.sym(), *q).dump() << "\n";
        return;
    }
    json out{{"header", header(c, "vos")}, {"object", label}, {"state", to_json(st)}};
    if (q) out["evaluated"] = evaluated_json(st.sym(), *q);
    std::cout << out.dump(2) << "\n";
}

int cmd_vos(const Config &c)
{
    if (c.kind == "one-row") {
        const int n = need(c.n, "--n");
        if (n < 0) throw UsageError("--n must be >= 0");
        const FockState st = one_row_vos_extracted(n);
        if (st != one_row_vos(n)) throw std::logic_error("one-row state differs from q^{4n} Z_n");
        emit_state(c, "phi^{0,-}_{-" + std::to_string(n) + "}.1", st);
    } else if (c.kind == "two-row") {
        const int r = need(c.r, "--r"), s = need(c.s, "--s");
        if (r < 1 || s < 1) throw UsageError("two-row needs --r >= 1 and --s >= 1");
        emit_state(c, "phi^{1,-}_{-" + std::to_string(r) + "} phi^{0,-}_{-" + std::to_string(s) + "}.1",
                   two_row_vos(r, s));
    } else if (c.kind == "dual-one-row") {
        const int n = need(c.n, "--n");
        if (n < 0) throw UsageError("--n must be >= 0");
        const DualFockState st = coefficient_at(phi_plus_on_dual_vacuum(n), {-2 * n, 0});
        if (st != dual_one_row_vos(n)) throw std::logic_error("dual one-row state differs from e^{-a/2} Z*_n");
        emit_state(c, "1.phi^{1,+}_" + std::to_string(n), st);
    } else if (c.kind == "dual-two-row") {
        const int r = need(c.r, "--r"), s = need(c.s, "--s");
        if (r < 0 || s < 1) throw UsageError("dual-two-row needs --r >= 0 and --s >= 1");
        emit_state(c, "1.phi^{1,+}_" + std::to_string(r) + " phi^{0,+}_" + std::to_string(s), dual_two_row_vos(r, s));
    } else {
        throw UsageError("unknown vos kind: " + c.kind);
    }
    return 0;
}

int cmd_verify(const Config &c)
{
    std::vector<std::string> names;
    for (const auto &id : c.identities) {
        if (id == "all") {
            names = identity_names();
            break;
        }
        if (std::find(identity_names().begin(), identity_names().end(), id) == identity_names().end())
            throw UsageError("unknown identity: " + id);
        names.push_back(id);
    }
    if (names.empty()) throw UsageError("no identity selected");
    if (c.max_weight && *c.max_weight < 0) throw UsageError("--max-weight must be >= 0");

    std::vector<IdentityReport> reports;
    bool ok = true;
    for (const auto &id : names) {
        reports.push_back(run_identity(id, c.order, c.max_weight));
        ok = ok && reports.back().ok;
    }
    if (c.format == "csv") {
        std::cout << "identity,order,status,first_discrepancy\n";
        for (const auto &r : reports)
            std::cout << r.identity << "," << r.order << "," << (r.ok ? "ok" : "fail") << ",\"" << r.first_discrepancy
                      << "\"\n";
    } else if (c.format == "pretty") {
        for (const auto &r : reports)
            std::cout << (r.ok ? "ok   " : "FAIL ") << r.identity << " (order " << r.order << ")"
                      << (r.ok ? "" : ": " + r.first_discrepancy) << "\n";
    } else {
        json h = header(c, "verify");
        h["max_weight"] = c.max_weight.value_or(c.order);
        json out{{"header", h}, {"reports", json::array()}};
        for (const auto &r : reports) out["reports"].push_back(to_json(r));
        out["status"] = ok ? "ok" : "fail";
        std::cout << out.dump(2) << "\n";
    }
    return ok ? 0 : 1;
}

Partition parse_partition(const std::string &s)
{
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int p = std::stoi(item, &used);
            if (used != item.size() || p <= 0) throw std::invalid_argument(item);
            parts.push_back(p);
        } catch (const std::exception &) {
            throw UsageError("bad --partition entry: '" + item + "'");
        }
    }
    if (parts.empty()) throw UsageError("empty --partition");
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1]) throw UsageError("--partition must be weakly decreasing");
    return Partition(parts);
}

int cmd_macdonald(const Config &c)
{
    const Partition la = parse_partition(c.partition);
    if (la.weight() > 10) throw UsageError("partition weight above 10");
    const SymFunc p = macdonald_P(la, RationalFunctionQ::q_power(4), RationalFunctionQ::q_power(2));
    const auto q = q_value(c);
    std::optional<SymFunc> p1;
    std::optional<bool> jack;
    if (c.q1) {
        p1 = specialize_q1(p);
        jack = collinear_ratio(*p1, jack_P(la, 2)).has_value();
    }
    if (c.format == "csv") {
        std::cout << to_csv(p1 ? *p1 : p);
    } else if (c.format == "pretty") {
        std::cout << "P" << la.to_string() << "(q^4, q^2) = " << p.to_string() << "\n";
        if (p1) std::cout << "at q = 1: " << p1->to_string() << "\ncollinear with Jack P at alpha = 2: " << (*jack ? "yes" : "no") << "\n";
        if (q) std::cout << "at q = " << c.q << ": " << evaluated_json(p, *q).dump() << "\n";
    } else {
        json out{{"header", header(c, "macdonald")}, {"partition", to_json(la)}, {"P", to_json(p)}};
        if (p1) {
            out["q1"] = to_json(*p1);
            out["jack_alpha2_collinear"] = *jack;
        }
        if (q) out["evaluated"] = evaluated_json(p, *q);
        std::cout << out.dump(2) << "\n";
    }
    return jack && !*jack ? 1 : 0;
}

int cmd_matrix_element(const Config &c)
{
    const auto q = q_value(c);
    json out{{"header", header(c, "matrix-element")}};
    std::string pretty;
    if (c.n || c.r || c.s) {
        const int m = c.r ? *c.r : need(c.n, "--n or --r/--s");
        const int n = c.s ? *c.s : need(c.n, "--n or --r/--s");
        if (m < 0 || n < 0) throw UsageError("mode indices must be >= 0");
        const RationalFunctionQ v = matrix_element(m, n);
        out["m"] = m;
        out["n"] = n;
        out["value"] = to_json(v);
        pretty = "1.phi^{1,+}_" + std::to_string(m) + " phi^{0,-}_{-" + std::to_string(n) + "}.1 = " + v.to_string();
        if (q) {
            auto e = v.evaluate(*q);
            if (!e) throw UsageError("q is a pole");
            out["evaluated"] = rational_string(*e);
        }
    } else {
        const PowerSeriesX s = matrix_element_series(c.order);
        out["series"] = to_json(s);
        pretty = s.to_string();
    }
    if (c.format == "pretty") {
        std::cout << pretty << "\n";
    } else if (c.format == "csv") {
        std::cout << "m,n,coefficient-numerator,coefficient-denominator\n";
        if (out.contains("value")) {
            const RationalFunctionQ v = rational_from_json(out["value"]);
            std::cout << out["m"] << "," << out["n"] << ",\"" << v.num().to_string() << "\",\"" << v.den().to_string() << "\"\n";
        } else {
            const PowerSeriesX s = matrix_element_series(c.order);
            for (int n = 0; n <= s.order(); ++n)
                std::cout << n << "," << n << ",\"" << s[n].num().to_string() << "\",\"" << s[n].den().to_string() << "\"\n";
        }
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Vertex operator states and q-zonal functions"};
    app.require_subcommand(1);
    Config c;

    auto common = [&c](CLI::App *sub) {
        sub->add_option("--order", c.order, "truncation order")->envname("QVERTEX_ORDER")->check(CLI::NonNegativeNumber);
        sub->add_option("--q", c.q, "evaluate at rational q, as p/r");
        sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
    };

    auto *vos = app.add_subcommand("vos", "vertex operator states");
    common(vos);
    vos->add_option("kind", c.kind, "one-row | two-row | dual-one-row | dual-two-row")
        ->required()
        ->check(CLI::IsMember({"one-row", "two-row", "dual-one-row", "dual-two-row"}));
    vos->add_option("--n", c.n);
    vos->add_option("--r", c.r);
    vos->add_option("--s", c.s);

    auto *verify = app.add_subcommand("verify", "run identity checks");
    common(verify);
    verify->add_option("identities", c.identities, "identity names or all")->required();
    verify->add_option("--max-weight", c.max_weight, "partition weight bound for Macdonald checks");

    auto *mac = app.add_subcommand("macdonald", "Macdonald P(q^4, q^2) by Gram-Schmidt");
    common(mac);
    mac->add_option("--partition", c.partition, "comma separated parts")->required();
    mac->add_flag("--q1", c.q1, "also specialize q = 1 and compare with Jack P at alpha = 2");

    auto *me = app.add_subcommand("matrix-element", "1.phi^{1,+}_m phi^{0,-}_{-n}.1");
    common(me);
    me->add_option("--n", c.n, "diagonal element (n, n)");
    me->add_option("--r", c.r, "dual mode m");
    me->add_option("--s", c.s, "ket mode n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*vos) return cmd_vos(c);
        if (*verify) return cmd_verify(c);
        if (*mac) return cmd_macdonald(c);
        if (*me) return cmd_matrix_element(c);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error &e) {
        // only raised for a user supplied q that hits a pole
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "internal failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

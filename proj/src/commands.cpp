/* Command dispatch: parses CLI arguments, runs the engines, renders text or
 * JSON.  Exit codes: 0 ok, 1 parse error, 2 semantic error, 3 unsupported. */

#include "immcalc/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>

#include "immcalc/classify4.hpp"
#include "immcalc/expr.hpp"
#include "immcalc/obstruction.hpp"

namespace immcalc {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
    bool json = false;
    std::string expr;
    std::string kind = "tri";
    std::string coeff = "z2";
    int dim = 0;
    int target = 0;
};

QueryKind parse_kind(const std::string& s) {
    return s == "tri" ? QueryKind::TotallyReal : QueryKind::Independent;
}

ordered_json envelope(const std::string& query, const ManifoldDescriptor& m) {
    return ordered_json{{"query", query},
                        {"manifold", m.canonical_name()},
                        {"dimension", m.dimension()},
                        {"orientable", m.orientable()},
                        {"closed", m.closed()}};
}

ordered_json range_json(const std::optional<NRange>& r, const std::string& reason) {
    if (!r)
        return nullptr;
    ordered_json j{{"from", r->lo}};
    j["to"] = r->hi ? ordered_json(*r->hi) : ordered_json(nullptr);
    if (!reason.empty())
        j["reason"] = reason;
    return j;
}

std::string range_text(const std::optional<NRange>& r) {
    if (!r)
        return "none";
    if (!r->hi)
        return "N >= " + std::to_string(r->lo);
    if (r->lo == *r->hi)
        return "N = " + std::to_string(r->lo);
    if (r->lo == 1)
        return "N <= " + std::to_string(*r->hi);
    return std::to_string(r->lo) + " <= N <= " + std::to_string(*r->hi);
}

std::string manifold_headline(const ManifoldDescriptor& m) {
    return m.canonical_name() + " (dimension " + std::to_string(m.dimension()) + ", " +
           (m.closed() ? "closed" : "open") + ", " +
           (m.orientable() ? "orientable" : "non-orientable") + ")";
}

void print_trace(std::ostream& out, const std::vector<std::string>& trace) {
    if (trace.empty())
        return;
    out << "trace:\n";
    for (const auto& line : trace)
        out << "  - " << line << "\n";
}

ordered_json generators_json(const RingPresentation& ring, bool with_torsion) {
    ordered_json arr = ordered_json::array();
    for (const auto& g : ring.generators()) {
        ordered_json j{{"name", g.name}, {"degree", g.degree}, {"nilpotence", g.nilpotence}};
        if (with_torsion)
            j["torsion"] = g.torsion;
        arr.push_back(j);
    }
    return arr;
}

int cmd_classes(const Options& opt, std::ostream& out) {
    ManifoldDescriptor m = elaborate(*parse_manifold_expr(opt.expr));
    std::vector<std::string> trace;
    ordered_json result;
    if (opt.coeff == "z") {
        const GradedElement& c = m.chern_complexified();  // may raise unsupported_query
        GradedElement c_dual = invert_unit(c);
        trace.push_back("truncation degree " + std::to_string(m.dimension()));
        result["coefficients"] = "Z";
        result["generators"] = generators_json(*m.integral_ring(), true);
        result["c"] = render(c);
        result["c_dual"] = render(c_dual);
        if (!opt.json) {
            out << "classes of " << manifold_headline(m) << ", integer coefficients\n";
            for (const auto& g : m.integral_ring()->generators())
                out << "  generator " << g.name << ": degree " << g.degree << ", " << g.name
                    << "^" << g.nilpotence << " = 0"
                    << (g.torsion == 2 ? ", 2*" + g.name + " = 0" : "") << "\n";
            out << "  c      = " << result["c"].get<std::string>() << "\n";
            out << "  c_dual = " << result["c_dual"].get<std::string>() << "\n";
            return 0;
        }
    } else {
        const GradedElement& w = m.sw_total();  // may raise unsupported_query
        GradedElement w_dual = m.dual_sw_total();
        trace.push_back("truncation degree " + std::to_string(m.dimension()));
        result["coefficients"] = "Z2";
        result["generators"] = generators_json(*m.mod2_ring(), false);
        result["w"] = render(w);
        result["w_dual"] = render(w_dual);
        result["fundamental"] =
            m.closed() ? ordered_json(render(m.fundamental_mod2(), *m.mod2_ring()))
                       : ordered_json(nullptr);
        if (!opt.json) {
            out << "classes of " << manifold_headline(m) << ", mod-2 coefficients\n";
            for (const auto& g : m.mod2_ring()->generators())
                out << "  generator " << g.name << ": degree " << g.degree << ", " << g.name
                    << "^" << g.nilpotence << " = 0\n";
            out << "  w      = " << result["w"].get<std::string>() << "\n";
            out << "  w_dual = " << result["w_dual"].get<std::string>() << "\n";
            if (m.closed())
                out << "  fundamental monomial: " << result["fundamental"].get<std::string>()
                    << "\n";
            return 0;
        }
    }
    ordered_json j = envelope("classes", m);
    j["result"] = result;
    j["trace"] = trace;
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_obstruct(const Options& opt, std::ostream& out) {
    ManifoldDescriptor m = elaborate(*parse_manifold_expr(opt.expr));
    QueryKind kind = parse_kind(opt.kind);
    ObstructionReport rep = obstruction_report(m, kind);
    if (opt.json) {
        ordered_json j = envelope("obstruct", m);
        ordered_json result;
        result["kind"] = query_kind_name(kind);
        result["impossible"] = range_json(rep.impossible, rep.impossible_reason);
        result["exists"] = range_json(rep.exists, rep.exists_reason);
        result["unknown"] = range_json(rep.unknown, "");
        result[kind == QueryKind::TotallyReal ? "min_complement_rank" : "min_kernel_rank"] =
            rep.min_rank ? ordered_json(*rep.min_rank) : ordered_json(nullptr);
        if (rep.witness_class)
            result["witness"] = ordered_json{{"class", *rep.witness_class},
                                             {"top_degree", *rep.witness_top_degree}};
        else
            result["witness"] = nullptr;
        j["result"] = result;
        j["trace"] = rep.trace;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "obstruction report: "
        << (kind == QueryKind::TotallyReal ? "totally real immersions" : "independent maps")
        << " of " << manifold_headline(m) << " into C^N\n";
    out << "  impossible : " << range_text(rep.impossible);
    if (rep.impossible)
        out << "   [" << rep.impossible_reason << "]";
    out << "\n";
    out << "  exists     : " << range_text(rep.exists);
    if (rep.exists)
        out << "   [" << rep.exists_reason << "]";
    out << "\n";
    out << "  unknown    : " << range_text(rep.unknown) << "\n";
    if (rep.witness_class)
        out << "  witness    : " << (kind == QueryKind::TotallyReal ? "c(Q) = " : "c(B) = ")
            << *rep.witness_class << "  (top nonzero degree "
            << std::to_string(*rep.witness_top_degree) << ")\n";
    print_trace(out, rep.trace);
    return 0;
}

int cmd_classify4(const Options& opt, std::ostream& out) {
    ManifoldDescriptor m = elaborate(*parse_manifold_expr(opt.expr));
    Classify4Report rep = classify4(m);
    if (opt.json) {
        ordered_json j = envelope("classify4", m);
        ordered_json conds = ordered_json::array();
        for (std::size_t i = 0; i < rep.conditions.size(); ++i)
            conds.push_back(ordered_json{{"index", i + 1},
                                         {"name", kCondition4Names[i]},
                                         {"value", tri_name(rep.conditions[i].value)},
                                         {"reason", rep.conditions[i].reason}});
        j["result"] = ordered_json{{"conditions", conds}};
        j["trace"] = rep.trace;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "classification of " << manifold_headline(m) << "\n";
    for (std::size_t i = 0; i < rep.conditions.size(); ++i) {
        std::string name = "(" + std::to_string(i + 1) + ") " + kCondition4Names[i];
        name.resize(34, ' ');
        std::string value = tri_name(rep.conditions[i].value);
        value.resize(9, ' ');
        out << "  " << name << value << rep.conditions[i].reason << "\n";
    }
    return 0;
}

int cmd_threshold(const Options& opt, std::ostream& out) {
    QueryKind kind = parse_kind(opt.kind);
    int t = existence_threshold(opt.dim, kind);
    std::string rule = kind == QueryKind::TotallyReal ? "N >= floor(3n/2)" : "N <= floor((n+1)/2)";
    if (opt.json) {
        ordered_json j{{"query", "threshold"},
                       {"result",
                        {{"kind", query_kind_name(kind)},
                         {"dim", opt.dim},
                         {"threshold", t},
                         {"direction", kind == QueryKind::TotallyReal ? "at_least" : "at_most"}}},
                       {"trace", {rule}}};
        out << j.dump(2) << "\n";
        return 0;
    }
    if (kind == QueryKind::TotallyReal)
        out << "totally real embeddings of any " << opt.dim
            << "-manifold exist into C^N for all N >= " << t << "   [" << rule << "]\n";
    else
        out << "independent maps of any " << opt.dim
            << "-manifold exist into C^N for all 1 <= N <= " << t << "   [" << rule << "]\n";
    return 0;
}

int cmd_check_transversality(const Options& opt, std::ostream& out) {
    QueryKind kind = parse_kind(opt.kind);
    TransversalityCheck c = transversality_check(opt.dim, opt.target, kind);
    std::string stratum =
        kind == QueryKind::TotallyReal
            ? "complex " + std::to_string(opt.target) + "x" + std::to_string(opt.dim) +
                  " jet matrices of rank < " + std::to_string(opt.dim) +
                  "; real codimension 2(N - n + 1)"
            : "complex " + std::to_string(opt.target) + "x" + std::to_string(opt.dim) +
                  " jet matrices of rank < " + std::to_string(opt.target) +
                  "; real codimension 2(n - N + 1)";
    if (opt.json) {
        ordered_json j{{"query", "check_transversality"},
                       {"result",
                        {{"kind", query_kind_name(kind)},
                         {"dim", c.dim_m},
                         {"target", opt.target},
                         {"codim_sigma", c.codim_sigma},
                         {"applies", c.applies}}},
                       {"trace", {stratum}}};
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "degenerate jet locus for " << query_kind_name(kind) << " maps M^" << opt.dim
        << " -> C^" << opt.target << ": codim Sigma = " << c.codim_sigma << ", dim M = "
        << c.dim_m << "\n";
    out << (c.applies ? "generic maps avoid the locus (dim M < codim Sigma)"
                      : "the locus cannot be avoided by dimension count alone")
        << "\n";
    return 0;
}

void print_parse_error(std::ostream& err, const std::string& input, const parse_error& e) {
    err << "error: parse error at offset " << e.offset() << ": " << e.what() << "\n";
    err << "  " << input << "\n";
    err << "  " << std::string(e.offset(), ' ') << "^\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact characteristic-class calculator for totally real immersions and "
                 "independent maps into C^N"};
    app.require_subcommand(1);
    Options opt;

    auto add_json = [&opt](CLI::App* cmd) {
        cmd->add_flag("--json", opt.json, "emit JSON instead of text");
    };
    add_json(&app);

    CLI::App* classes = app.add_subcommand("classes", "characteristic classes of a manifold");
    classes->add_option("expr", opt.expr, "manifold expression, e.g. \"CP2*RP2\"")->required();
    classes->add_option("--coeff", opt.coeff, "coefficient ring: z2 (default) or z")
        ->check(CLI::IsMember({"z", "z2"}));
    add_json(classes);

    CLI::App* obstruct =
        app.add_subcommand("obstruct", "existence / non-existence ranges for target dimension N");
    obstruct->add_option("kind", opt.kind, "query kind: tri or indep")
        ->required()
        ->check(CLI::IsMember({"tri", "indep"}));
    obstruct->add_option("expr", opt.expr, "manifold expression")->required();
    add_json(obstruct);

    CLI::App* classify = app.add_subcommand("classify4", "seven-condition 4-manifold report");
    classify->add_option("expr", opt.expr, "manifold expression")->required();
    add_json(classify);

    CLI::App* threshold = app.add_subcommand("threshold", "generic existence threshold");
    threshold->add_option("--kind", opt.kind, "tri or indep")
        ->required()
        ->check(CLI::IsMember({"tri", "indep"}));
    threshold->add_option("--dim", opt.dim, "manifold dimension n")->required();
    add_json(threshold);

    CLI::App* trans =
        app.add_subcommand("check-transversality", "codimension count behind the thresholds");
    trans->add_option("--dim", opt.dim, "manifold dimension n")->required();
    trans->add_option("--target", opt.target, "complex target dimension N")->required();
    trans->add_option("--kind", opt.kind, "tri or indep")
        ->required()
        ->check(CLI::IsMember({"tri", "indep"}));
    add_json(trans);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classes->parsed())
            return cmd_classes(opt, out);
        if (obstruct->parsed())
            return cmd_obstruct(opt, out);
        if (classify->parsed())
            return cmd_classify4(opt, out);
        if (threshold->parsed())
            return cmd_threshold(opt, out);
        if (trans->parsed())
            return cmd_check_transversality(opt, out);
    } catch (const parse_error& e) {
        print_parse_error(err, opt.expr, e);
        return 1;
    } catch (const semantic_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const unsupported_query& e) {
        err << "error: unsupported query: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace immcalc

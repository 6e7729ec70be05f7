// Command line interface for the local metric dimension toolkit.
//
// Exit codes: 0 success, 1 usage or input error, 2 rule not applicable,
// 3 verification mismatch.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lmd/corona_formulas.hpp"
#include "lmd/edge_io.hpp"
#include "lmd/families.hpp"
#include "lmd/verify.hpp"

namespace {

lmd::Graph load_source(const std::string& src) {
    if (src.rfind("family:", 0) == 0) return lmd::build_family(src.substr(7));
    if (src.rfind("file:", 0) == 0) return lmd::read_edge_list_file(src.substr(5));
    return lmd::read_edge_list_file(src);
}

std::string family_text(const std::string& src) {
    return src.rfind("family:", 0) == 0 ? src.substr(7) : src;
}

int run_dim(const std::string& src, bool all_bases, int cap) {
    lmd::SolveOptions opt;
    opt.cap = cap;
    opt.enumerate_all = all_bases;
    auto result = lmd::local_metric_dimension(load_source(src), opt);
    std::cout << "dim_l = " << result.value << ", basis = " << result.witness.to_string() << "\n";
    if (result.all_bases) {
        std::cout << "bases (" << result.all_bases->size() << "):";
        for (const auto& b : *result.all_bases) std::cout << " " << b.to_string();
        std::cout << "\n";
    }
    return 0;
}

int run_corona(const std::string& gsrc, const std::string& hsrc, bool predict, bool exact, int cap) {
    lmd::SolveOptions opt;
    opt.cap = cap;
    lmd::Graph g = load_source(gsrc);
    lmd::Graph h = load_source(hsrc);
    std::optional<int> predicted, oracle;
    std::string rule;
    if (predict) {
        auto p = lmd::theorem3_corona_dimension(g, h, opt);
        predicted = *p.value;
        rule = p.rule;
    }
    if (exact) oracle = lmd::local_metric_dimension(lmd::corona(g, h), opt).value;
    if (predicted && oracle) {
        bool match = *predicted == *oracle;
        std::cout << "predicted " << *predicted << ", oracle " << *oracle << ", "
                  << (match ? "MATCH" : "MISMATCH") << "\n";
        return match ? 0 : 3;
    }
    if (predicted) std::cout << "predicted " << *predicted << " (rule " << rule << ")\n";
    if (oracle) std::cout << "oracle " << *oracle << "\n";
    return 0;
}

int run_family(const std::string& spec_text, int n) {
    auto spec = lmd::FamilySpec::parse(family_text(spec_text));
    auto p = lmd::family_closed_form(n, spec);
    std::cout << "closed form = " << *p.value << " (rule " << p.rule << ", n = " << n << ")\n";
    return 0;
}

int run_delta_prime(const std::string& src) {
    lmd::Graph h = load_source(src);
    auto inv = lmd::structural_invariants(h);
    if (!inv.connected) throw std::invalid_argument("delta' requires a connected graph");
    int best = -1;
    for (int x : inv.center.members) {
        int b = lmd::beta(h, x);
        std::cout << "beta(" << x << ") = " << b << "\n";
        if (best == -1 || b < best) best = b;
    }
    std::cout << "delta' = " << best << "\n";
    return 0;
}

int run_tree(const std::string& src, int n) {
    lmd::Graph t = load_source(src);
    auto profile = lmd::tree_profile(t);
    if (!profile) {
        auto inv = lmd::structural_invariants(t);
        std::cout << "center = " << inv.center.to_string() << " (bicentral)\n";
    } else {
        std::cout << "center = " << profile->center.to_string() << "\n";
        std::cout << "radius = " << profile->radius << "\n";
        for (const auto& [w, hw] : profile->heights) std::cout << "h(" << w << ") = " << hw << "\n";
        std::cout << "sigma = " << profile->sigma_set.to_string()
                  << ", varsigma = " << profile->varsigma << "\n";
        for (const auto& [w, ph] : profile->phi) std::cout << "phi(" << w << ") = " << ph << "\n";
    }
    auto p = lmd::tree_corona_dimension(t, n);
    std::cout << "predicted dim_l = " << *p.value << " (rule " << p.rule << ", n = " << n << ")\n";
    return 0;
}

int run_verify(const std::string& scope_name, const std::optional<std::string>& claims_arg,
               const std::string& json_path, unsigned seed, int cap, bool no_timestamp) {
    auto scope = lmd::verify::parse_scope(scope_name);
    std::optional<std::vector<std::string>> filter;
    if (claims_arg) {
        filter.emplace();
        std::stringstream ss(*claims_arg);
        std::string part;
        while (std::getline(ss, part, ','))
            if (!part.empty()) filter->push_back(part);
    }
    auto report = lmd::verify::run_sweep(scope, filter, seed, cap);
    std::cout << lmd::verify::report_text(report, !no_timestamp);
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw std::runtime_error("cannot write file: " + json_path);
        out << lmd::verify::report_json(report, !no_timestamp).dump(2) << "\n";
    }
    return report.mismatches() > 0 ? 3 : 0;
}

int run_build(const std::string& spec_text, const std::string& out_path) {
    lmd::Graph g = lmd::build_family(family_text(spec_text));
    lmd::write_edge_list_file(out_path, g);
    std::cout << "wrote " << out_path << " (" << g.order() << " vertices, " << g.edge_count()
              << " edges)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact local metric dimension of graphs and corona products"};
    app.require_subcommand(1);
    app.fallthrough();  // global --cap may appear after the subcommand
    int cap = 32;
    app.add_option("--cap", cap, "exhaustive search order cap (search is exponential)")
        ->capture_default_str();

    std::string dim_src;
    bool all_bases = false;
    auto* dim = app.add_subcommand("dim", "exact local metric dimension of a graph");
    dim->add_option("source", dim_src, "family:SPEC or an edge-list file")->required();
    dim->add_flag("--all-bases", all_bases, "enumerate every minimum basis");

    std::string cg, ch;
    bool predict = false, exact = false, both = false;
    auto* cor = app.add_subcommand("corona", "dimension of a corona product");
    cor->set_help_flag("--help", "print help");  // frees -h / --h for the attached graph
    cor->add_option("--g", cg, "connected base graph")->required();
    cor->add_option("--h", ch, "attached graph")->required();
    cor->add_flag("--predict", predict, "formula prediction only");
    cor->add_flag("--exact", exact, "exhaustive search only");
    cor->add_flag("--both", both, "prediction, search, and agreement");

    std::string fam_spec;
    int fam_n = 2;
    auto* fam = app.add_subcommand("family", "closed-form corona dimension for a family");
    fam->add_option("family", fam_spec, "family spec (complete, completeBipartite, path, cycle)")
        ->required();
    fam->add_option("--n", fam_n, "order of the connected base graph")->required();

    std::string dp_src;
    auto* dp = app.add_subcommand("delta-prime", "beta per center vertex and delta'");
    dp->add_option("source", dp_src, "family:SPEC or an edge-list file")->required();

    std::string tree_src;
    int tree_n = 2;
    auto* tr = app.add_subcommand("tree", "tree profile and corona dimension");
    tr->add_option("source", tree_src, "radius-3 tree")->required();
    tr->add_option("--n", tree_n, "order of the connected base graph")->required();

    std::string scope = "standard", json_path;
    std::optional<std::string> claims;
    unsigned seed = lmd::verify::kDefaultSeed;
    bool no_timestamp = false;
    auto* ver = app.add_subcommand("verify", "run the formula-vs-oracle sweep");
    ver->add_option("--scope", scope, "small | standard | extended")->capture_default_str();
    ver->add_option("--claims", claims, "comma-separated claim filter (empty selects nothing)");
    ver->add_option("--json", json_path, "also write the JSON report here");
    ver->add_option("--seed", seed, "catalog seed")->capture_default_str();
    ver->add_flag("--no-timestamp", no_timestamp, "omit the timestamp line for byte-stable output");

    std::string build_spec, build_out;
    auto* bld = app.add_subcommand("build", "write a family graph as an edge-list file");
    bld->add_option("family", build_spec, "family spec")->required();
    bld->add_option("--out", build_out, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*dim) return run_dim(dim_src, all_bases, cap);
        if (*cor) {
            if (both || (!predict && !exact)) predict = exact = true;
            return run_corona(cg, ch, predict, exact, cap);
        }
        if (*fam) return run_family(fam_spec, fam_n);
        if (*dp) return run_delta_prime(dp_src);
        if (*tr) return run_tree(tree_src, tree_n);
        if (*ver) return run_verify(scope, claims, json_path, seed, cap, no_timestamp);
        if (*bld) return run_build(build_spec, build_out);
    } catch (const lmd::RuleNotApplicable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

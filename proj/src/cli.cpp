#include <kgeo/catalog.hpp>
#include <kgeo/canon.hpp>
#include <kgeo/cli.hpp>
#include <kgeo/core.hpp>
#include <kgeo/lemmas.hpp>
#include <kgeo/search.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

namespace kgeo {

namespace {

    // Searches at or above this order need --long-run.
    constexpr std::uint64_t long_run_order = 16;

    auto join(const auto & values, const char * sep = " ") -> std::string
    {
        std::ostringstream s;
        bool first = true;
        for (auto & v : values) {
            if (! first)
                s << sep;
            s << v;
            first = false;
        }
        return s.str();
    }

    auto ok(bool b) -> const char * { return b ? "ok" : "fail"; }

    void write_file(const std::string & path, const std::string & content)
    {
        std::ofstream f(path);
        if (! f)
            throw Error("cannot write '" + path + "'");
        f << content;
    }

    void print_report(std::ostream & out, const VerificationReport & r)
    {
        out << "order " << r.order << " expected "
            << (r.expected_order ? std::to_string(*r.expected_order) : std::string("overflow")) << " "
            << ok(r.order_ok) << "\n";
        out << "outdegree min " << r.min_out_degree << " required " << r.d << " " << ok(r.outdegree_ok) << "\n";
        out << "diregular " << ok(r.diregular_ok) << (r.diregular_required ? "" : " (not required)") << "\n";
        out << "geodetic k " << r.k << " " << ok(r.geodetic_ok);
        if (r.witness)
            out << " witness " << r.witness->from << " " << r.witness->to << " walk " << join(r.witness->first_walk, ",")
                << " walk " << join(r.witness->second_walk, ",");
        out << "\n";
        out << "outlier_set_sizes " << join(r.outlier_set_sizes) << "\n";
        out << "outlier_counts " << join(r.outlier_counts) << "\n";
        out << "verdict " << (r.passed() ? "pass" : "fail") << "\n";
    }

    struct Flags {
        unsigned d = 2, k = 2, excess = 0;
        bool diregular = false;
        std::optional<std::size_t> limit;
        std::optional<std::uint64_t> budget;
        unsigned jobs = 1;
        bool long_run = false;
        std::string emit;
        std::string checkpoint;
        std::optional<unsigned> split_depth;
        std::vector<std::string> files;
        std::string id;
        std::uint64_t moore_d = 0, moore_k = 0;
    };

    auto params_from(const Flags & f) -> SearchParams
    {
        SearchParams p;
        p.d = f.d;
        p.k = f.k;
        p.epsilon = f.excess;
        p.diregular = f.diregular;
        p.max_results = f.limit;
        p.max_nodes = f.budget;
        p.validate();
        return p;
    }

    auto cmd_verify(const Flags & f, std::ostream & out) -> int
    {
        auto g = read_digraph_file(f.files.at(0));
        auto report = verify(g, params_from(f));
        print_report(out, report);
        return report.passed() ? exit_ok : exit_false;
    }

    auto cmd_catalog(const Flags & f, std::ostream & out) -> int
    {
        auto text = write_digraph(catalog_entry(f.id).digraph);
        out << text;
        if (! f.emit.empty())
            write_file(f.emit, text);
        return exit_ok;
    }

    auto cmd_census(const Flags & f, std::ostream & out) -> int
    {
        auto g = read_digraph_file(f.files.at(0));
        auto census = triangle_census(g);
        out << "triangles " << census.triangles.size() << "\n";
        for (auto & t : census.triangles)
            out << "triangle " << join(t) << "\n";
        out << "vertex_triangles " << join(census.per_vertex) << "\n";
        out << "on_two_triangles " << join(census.vertices_on(2)) << "\n";

        const bool classifiable = excess_two_depth(g) == 2u;
        nlohmann::json pairs = nlohmann::json::array();
        for (auto & p : common_out_pairs(g, 1)) {
            auto c = classifiable ? classify_pair(g, p.u, p.v, 2) : p;
            const char * status = c.bad ? (*c.bad ? "bad" : "good") : "unclassified";
            out << "pair " << c.u << " " << c.v << " common 1 " << status << "\n";
            pairs.push_back({{"u", c.u}, {"v", c.v}, {"common_out", 1}, {"status", status}});
        }
        auto identical = identical_out_pairs(g);
        for (auto [u, v] : identical)
            out << "identical " << u << " " << v << "\n";
        auto mult = outlier_multiplicity(g, f.k);
        out << "outlier_multiplicity k " << f.k << " " << join(mult) << "\n";

        if (! f.emit.empty()) {
            nlohmann::json j;
            j["order"] = g.order();
            j["triangles"] = census.triangles;
            j["per_vertex"] = census.per_vertex;
            j["single_common_out_pairs"] = pairs;
            j["identical_out_pairs"] = identical;
            j["outlier_multiplicity"] = {{"k", f.k}, {"counts", mult}};
            write_file(f.emit, j.dump(2) + "\n");
        }
        return exit_ok;
    }

    auto cmd_search(const Flags & f, std::ostream & out, std::ostream & err) -> int
    {
        auto params = params_from(f);
        auto n = params.order();
        if (n >= long_run_order && ! f.long_run) {
            err << "search of order " << n << " can take hours; pass --long-run to start it\n";
            return exit_usage;
        }
        if (n > max_search_order) {
            err << "search order " << n << " exceeds the supported maximum " << max_search_order << "\n";
            return exit_usage;
        }

        SearchOptions options;
        options.jobs = f.jobs;
        if (f.split_depth)
            options.split_depth = *f.split_depth;
        else if (f.long_run)
            options.split_depth = 6;
        if (! f.checkpoint.empty())
            options.checkpoint_path = f.checkpoint;
        if (f.long_run) {
            auto last = std::make_shared<std::chrono::steady_clock::time_point>(std::chrono::steady_clock::now());
            options.progress = [&err, last] (const SearchProgress & p) {
                auto now = std::chrono::steady_clock::now();
                if (now - *last < std::chrono::seconds(10) && p.tasks_done != p.tasks_total)
                    return;
                *last = now;
                err << "progress nodes=" << p.nodes << " tasks=" << p.tasks_done << "/" << p.tasks_total
                    << " results=" << p.results << std::endl;
            };
        }

        auto outcome = search(params, options);
        std::string text;
        for (std::size_t i = 0; i < outcome.results.size(); ++i) {
            if (i)
                text += "\n";
            text += write_digraph(outcome.results[i].representative);
        }
        if (! outcome.results.empty())
            text += "\n";
        text += "results=" + std::to_string(outcome.results.size()) + " nodes=" + std::to_string(outcome.nodes_explored)
            + " complete=" + (outcome.complete ? "true" : "false") + "\n";
        out << text;
        if (! f.emit.empty())
            write_file(f.emit, text);
        return exit_ok;
    }

    auto perm_text(const Permutation & p) -> std::string
    {
        std::string s;
        for (auto x : p)
            s += static_cast<char>('0' + x);
        return s;
    }

    auto cmd_cayley(const Flags & f, std::ostream & out) -> int
    {
        auto witnesses = search_cayley_a4(f.k, f.excess);
        for (auto & w : witnesses)
            out << "witness " << w.a << " " << w.b << " a=" << perm_text(w.a_perm) << " b=" << perm_text(w.b_perm)
                << "\n";
        out << "witnesses=" << witnesses.size() << "\n";
        return witnesses.empty() ? exit_false : exit_ok;
    }

    void add_params(CLI::App & app, Flags & f, bool defaults_required)
    {
        auto * d = app.add_option("--d", f.d, "out-degree d")->check(CLI::PositiveNumber);
        auto * k = app.add_option("--k", f.k, "geodecity depth k")->check(CLI::PositiveNumber);
        auto * e = app.add_option("--excess", f.excess, "excess epsilon");
        if (defaults_required) {
            d->required();
            k->required();
            e->required();
        }
        app.add_flag("--diregular", f.diregular, "require in-degree = out-degree = d");
    }

} // namespace

auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"k-geodetic digraphs near the Moore bound", "kgeo"};
    app.require_subcommand(1);
    Flags f;

    auto * moore = app.add_subcommand("moore", "print M(d,k) = 1 + d + ... + d^k");
    moore->add_option("d", f.moore_d, "degree")->required()->check(CLI::PositiveNumber);
    moore->add_option("k", f.moore_k, "depth")->required();

    auto * verify_cmd = app.add_subcommand("verify", "check a digraph file against (d,k,+excess)");
    verify_cmd->add_option("file", f.files, "digraph file")->required()->expected(1);
    add_params(*verify_cmd, f, true);

    auto * catalog = app.add_subcommand("catalog", "emit catalog digraph A or B");
    catalog->add_option("id", f.id, "A or B")->required()->check(CLI::IsMember({"A", "B", "a", "b"}));
    catalog->add_option("--emit", f.emit, "also write the digraph to this path");

    auto * canon = app.add_subcommand("canon", "print the canonical form as lowercase hex");
    canon->add_option("file", f.files, "digraph file")->required()->expected(1);

    auto * iso = app.add_subcommand("iso", "test two digraph files for isomorphism");
    iso->add_option("files", f.files, "two digraph files")->required()->expected(2);

    auto * census = app.add_subcommand("census", "3-cycles, pair classes and outlier multiplicities");
    census->add_option("file", f.files, "digraph file")->required()->expected(1);
    census->add_option("--k", f.k, "depth for outlier sets")->check(CLI::PositiveNumber);
    census->add_option("--emit", f.emit, "write a JSON dump to this path");

    auto * search_cmd = app.add_subcommand("search", "exhaustive isomorph-free (d,k,+excess) search");
    add_params(*search_cmd, f, true);
    search_cmd->add_option("--limit", f.limit, "stop after this many results");
    search_cmd->add_option("--budget", f.budget, "stop after this many search nodes");
    search_cmd->add_option("--jobs", f.jobs, "worker threads")->check(CLI::PositiveNumber);
    search_cmd->add_flag("--long-run", f.long_run, "allow searches of order >= 16");
    search_cmd->add_option("--emit", f.emit, "also write the results to this path");
    search_cmd->add_option("--checkpoint", f.checkpoint, "save and resume progress in this file");
    search_cmd->add_option("--split-depth", f.split_depth, "arcs placed before splitting into tasks");

    auto * cayley = app.add_subcommand("cayley-a4", "2-generator Cayley digraphs of A4 that are (2,k,+excess)");
    f.excess = 5;
    cayley->add_option("--k", f.k, "geodecity depth")->check(CLI::PositiveNumber);
    cayley->add_option("--excess", f.excess, "excess");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    }
    catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << "\n" << app.help();
        return exit_usage;
    }

    try {
        if (moore->parsed()) {
            out << moore_bound(f.moore_d, f.moore_k) << "\n";
            return exit_ok;
        }
        if (verify_cmd->parsed())
            return cmd_verify(f, out);
        if (catalog->parsed())
            return cmd_catalog(f, out);
        if (canon->parsed()) {
            auto g = read_digraph_file(f.files.at(0));
            out << canonical_form(g).hex() << "\n";
            return exit_ok;
        }
        if (iso->parsed()) {
            auto g = read_digraph_file(f.files.at(0));
            auto h = read_digraph_file(f.files.at(1));
            bool same = are_isomorphic(g, h);
            out << (same ? "isomorphic" : "non-isomorphic") << "\n";
            return same ? exit_ok : exit_false;
        }
        if (census->parsed())
            return cmd_census(f, out);
        if (search_cmd->parsed())
            return cmd_search(f, out, err);
        if (cayley->parsed())
            return cmd_cayley(f, out);
    }
    catch (const Error & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    err << app.help();
    return exit_usage;
}

} // namespace kgeo

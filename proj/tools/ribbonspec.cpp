// Command-line driver: sampling, reports, theory tables, volumes, stable
// graphs and the acceptance suite.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ribbonspec/acceptance.hpp"
#include "ribbonspec/batch.hpp"
#include "ribbonspec/error.hpp"
#include "ribbonspec/poisson.hpp"
#include "ribbonspec/report.hpp"
#include "ribbonspec/stable_graph.hpp"
#include "ribbonspec/volumes.hpp"

using namespace ribbonspec;

namespace {

struct SampleArgs {
    int genus = 0;
    std::uint64_t trials = 1000;
    double boundary = 0.0;
    std::uint64_t seed = 0;
    double b_max = 4.0;
    int d_max = 12;
    int workers = 1;
    std::string output = "-";
    std::string method = "pairing";
    bool no_meta = false;
};

struct ReportArgs {
    std::string input;
    std::vector<std::string> intervals;
    std::vector<std::string> moments;
    double hist_lo = 0.0;
    double bin_width = 0.08;
    std::size_t bins = 50;
    std::string json_out = "-";
    std::string csv_out;
};

struct TheoryArgs {
    double mu = 1.0;
    std::string grid = "0:4:0.01";
    std::string output = "-";
};

struct VolumeArgs {
    std::string family = "g1";
    int gmin = 1;
    int gmax = 128;
    std::string output = "-";
};

struct StableArgs {
    int genus = 0;
    int leaves = 0;
    bool separating = false;
    bool check_kk = false;
    double sum_bound = 0.0;
    std::string output = "-";
};

struct VerifyArgs {
    int workers = 1;
    std::vector<int> only;
    bool quiet = false;
};

/// Writes to stdout for "-", otherwise to the named file.
class Sink {
public:
    explicit Sink(const std::string& path)
    {
        if (path != "-") {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) throw Error(ErrorKind::Io, "cannot open " + path + " for writing");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    void close()
    {
        stream().flush();
        if (!stream()) throw Error(ErrorKind::Io, "write failed");
    }

private:
    std::unique_ptr<std::ofstream> file_;
};

std::vector<double> split_numbers(const std::string& text, char sep)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw Error(ErrorKind::InvalidArgument, "bad number '" + item + "' in " + text);
        out.push_back(v);
    }
    return out;
}

int cmd_sample(const SampleArgs& a)
{
    BatchConfig cfg = BatchConfig::for_genus(a.genus, a.seed, a.trials);
    if (a.boundary > 0.0) cfg.boundary_total = a.boundary;
    cfg.b_max = a.b_max;
    cfg.d_max = a.d_max;
    cfg.method = a.method == "remy" ? SamplerMethod::Remy : SamplerMethod::Pairing;
    const int workers = resolve_workers(a.workers);
    const auto records = workers == 1 ? run_trials_serial(cfg) : run_trials_parallel(cfg, workers);
    std::uint64_t rejections = 0;
    for (const auto& rec : records) {
        rejections += rec.rejections;
        if (rec.substream > 0) {
            std::cerr << "trial " << rec.trial << ": rejection budget exhausted on " << rec.substream
                      << " sub-stream(s), resampled\n";
        }
    }
    std::cerr << "sampled " << records.size() << " maps of genus " << cfg.genus << ", mean rejections per trial "
              << static_cast<double>(rejections) / static_cast<double>(records.size()) << "\n";
    Sink sink(a.output);
    write_jsonl(sink.stream(), records, a.no_meta ? nullptr : &cfg);
    sink.close();
    return 0;
}

int cmd_report(const ReportArgs& a)
{
    std::ifstream in(a.input, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + a.input);
    const auto records = read_jsonl(in);
    ReportRequest req;
    req.hist_lo = a.hist_lo;
    req.hist_width = a.bin_width;
    req.hist_bins = a.bins;
    if (a.intervals.empty()) {
        for (int k = 0; k < 4; ++k) req.intervals.push_back({double(k), double(k + 1), 1});
    } else {
        for (const auto& text : a.intervals) req.intervals.push_back(parse_interval_spec(text));
    }
    for (const auto& text : a.moments) {
        std::vector<IntervalSpec> group;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) group.push_back(parse_interval_spec(item));
        req.joint.push_back(std::move(group));
    }
    const auto rep = build_report(records, req);
    Sink json_sink(a.json_out);
    json_sink.stream() << report_json(rep) << '\n';
    json_sink.close();
    if (!a.csv_out.empty()) {
        Sink csv(a.csv_out);
        csv.stream() << histogram_csv(rep.histogram);
        csv.close();
    }
    return 0;
}

int cmd_theory(const TheoryArgs& a)
{
    const auto grid = split_numbers(a.grid, ':');
    if (grid.size() != 3 || !(grid[2] > 0.0) || grid[1] < grid[0] || grid[0] < 0.0) {
        throw Error(ErrorKind::InvalidArgument, "grid must be lo:hi:step with 0 <= lo <= hi, step > 0");
    }
    if (!(a.mu > 0.0)) throw Error(ErrorKind::InvalidArgument, "mu must be positive");
    const IntensityParams p{a.mu};
    const auto rows = static_cast<long>(std::floor((grid[1] - grid[0]) / grid[2] + 1e-9)) + 1;
    Sink sink(a.output);
    auto& out = sink.stream();
    out << "ell,lambda,girth_cdf\n";
    for (long i = 0; i < rows; ++i) {
        const double ell = grid[0] + static_cast<double>(i) * grid[2];
        out << format17(ell) << ',' << format17(intensity(ell, p)) << ',' << format17(girth_cdf(ell, p)) << '\n';
    }
    sink.close();
    return 0;
}

int cmd_volumes(const VolumeArgs& a)
{
    if (a.gmin < 1 || a.gmax < a.gmin) throw Error(ErrorKind::InvalidArgument, "need 1 <= gmin <= gmax");
    Sink sink(a.output);
    auto& out = sink.stream();
    if (a.family == "g1") {
        out << "g,exact,asymptotic,ratio\n";
        for (int g = a.gmin; g <= a.gmax; ++g) {
            const std::vector<double> L{12.0 * g};
            const auto exact = exact_volume_g1(g, L[0]);
            const auto asym = asymptotic_volume(g, 1, L);
            out << g << ',' << exact.to_string() << ',' << asym.to_string() << ',' << format17(ratio(exact, asym)) << '\n';
        }
    } else {
        out << "g,coeff,saddle,ratio\n";
        for (int g = a.gmin; g <= a.gmax; ++g) {
            const std::vector<double> L{12.0 * g};
            const auto coeff = sinh_product_coeff(L, {}, 6 * g - 3);
            const auto saddle = saddle_point_estimate(g, 1, L, {});
            out << g << ',' << coeff.to_string() << ',' << saddle.to_string() << ',' << format17(ratio(coeff, saddle))
                << '\n';
        }
    }
    sink.close();
    return 0;
}

int cmd_stablegraphs(const StableArgs& a)
{
    const auto graphs = enumerate_stable_graphs(a.genus, a.leaves);
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    ScaledReal total;
    for (const auto& eg : graphs) {
        const bool sep = is_separating(eg.graph);
        if (a.separating && !sep) continue;
        nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
        for (int v = 0; v < eg.graph.vertex_count(); ++v) {
            std::vector<int> labels;
            for (int i = 0; i < eg.graph.leaf_count(); ++i) {
                if (eg.graph.leaf_vertex[static_cast<std::size_t>(i)] == v) labels.push_back(i + 1);
            }
            vertices.push_back({{"genus", eg.graph.vertex_genus[static_cast<std::size_t>(v)]}, {"leaves", labels}});
        }
        nlohmann::ordered_json item;
        item["vertices"] = std::move(vertices);
        item["edges"] = eg.graph.edges;
        item["aut"] = eg.aut;
        item["separating"] = sep;
        if (a.check_kk && sep) {
            const auto kk = lemma_KK_check(eg.graph);
            item["kk"] = {{"lhs", kk.lhs.to_string()}, {"rhs", kk.rhs.to_string()}, {"holds", kk.holds}};
        }
        if (a.sum_bound > 0.0 && sep) {
            const auto bound = emleq_bound(eg.graph, eg.aut, a.sum_bound);
            item["emleq"] = bound.to_string();
            total += bound;
        }
        list.push_back(std::move(item));
    }
    Sink sink(a.output);
    sink.stream() << list.dump(2) << '\n';
    sink.close();
    if (a.sum_bound > 0.0) std::cerr << "sum of separating bounds: " << total.to_string() << "\n";
    return 0;
}

int cmd_verify(const VerifyArgs& a)
{
    acceptance::Suite suite(resolve_workers(a.workers));
    std::vector<int> ids = a.only;
    if (ids.empty()) {
        for (int id = 1; id <= acceptance::Suite::kCount; ++id) ids.push_back(id);
    }
    int unexpected = 0;
    for (int id : ids) {
        const auto res = suite.run(id);
        if (!a.quiet) {
            for (const auto& line : res.details) std::cout << "    " << line << '\n';
        }
        const bool known = !res.pass && acceptance::known_unattainable(id);
        std::cout << (res.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << res.name
                  << (known ? " (known unattainable)" : "") << std::endl;
        if (!res.pass && !known) ++unexpected;
    }
    return unexpected == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Random unicellular maps: sampling, length spectra and volume checks"};
    app.require_subcommand(1);

    SampleArgs sample;
    auto* s = app.add_subcommand("sample", "sample metric maps and write JSONL spectrum records");
    s->add_option("--genus,-g", sample.genus, "genus")->required()->check(CLI::Range(1, 100000));
    s->add_option("--trials,-t", sample.trials, "number of trials")->check(CLI::PositiveNumber);
    s->add_option("--boundary,-L", sample.boundary, "total boundary length (default 12 * genus)");
    s->add_option("--seed", sample.seed, "seed");
    s->add_option("--b-max", sample.b_max, "cycle length cutoff")->check(CLI::PositiveNumber);
    s->add_option("--d-max", sample.d_max, "maximum edges per cycle")->check(CLI::PositiveNumber);
    s->add_option("--workers,-j", sample.workers, "worker threads (RIBBONSPEC_THREADS overrides)")
        ->check(CLI::PositiveNumber);
    s->add_option("--output,-o", sample.output, "output file, - for stdout");
    s->add_option("--method", sample.method, "pairing or remy")->check(CLI::IsMember({"pairing", "remy"}));
    s->add_flag("--no-meta", sample.no_meta, "omit the metadata header line");

    ReportArgs report;
    auto* r = app.add_subcommand("report", "aggregate JSONL records into a JSON report and a CSV histogram");
    r->add_option("--input,-i", report.input, "JSONL records")->required();
    r->add_option("--interval", report.intervals, "a:b[:r], repeatable");
    r->add_option("--moment", report.moments, "joint spec a:b:r,a:b:r,..., repeatable");
    r->add_option("--hist-lo", report.hist_lo, "histogram start");
    r->add_option("--bin-width", report.bin_width, "histogram bin width")->check(CLI::PositiveNumber);
    r->add_option("--bins", report.bins, "histogram bins")->check(CLI::PositiveNumber);
    r->add_option("--json", report.json_out, "report output, - for stdout");
    r->add_option("--csv", report.csv_out, "histogram CSV output");

    TheoryArgs theory;
    auto* t = app.add_subcommand("theory", "tabulate the limiting intensity and girth law");
    t->add_option("--mu", theory.mu, "boundary scaling constant");
    t->add_option("--grid", theory.grid, "lo:hi:step");
    t->add_option("--output,-o", theory.output, "output file, - for stdout");

    VolumeArgs volumes;
    auto* v = app.add_subcommand("volumes", "exact vs asymptotic volume tables");
    v->add_option("--family", volumes.family, "g1 or saddle")->check(CLI::IsMember({"g1", "saddle"}));
    v->add_option("--gmin", volumes.gmin, "first genus");
    v->add_option("--gmax", volumes.gmax, "last genus");
    v->add_option("--output,-o", volumes.output, "output file, - for stdout");

    StableArgs stable;
    auto* sg = app.add_subcommand("stablegraphs", "enumerate stable graphs as JSON");
    sg->add_option("--genus", stable.genus, "genus")->required();
    sg->add_option("--leaves", stable.leaves, "number of leaves")->required();
    sg->add_flag("--separating", stable.separating, "only graphs with at least two vertices");
    sg->add_flag("--check-kk", stable.check_kk, "evaluate both sides of the separating product bound");
    sg->add_option("--sum-bound", stable.sum_bound, "constant C for the per-graph bound")->check(CLI::PositiveNumber);
    sg->add_option("--output,-o", stable.output, "output file, - for stdout");

    VerifyArgs verify;
    auto* vf = app.add_subcommand("verify", "run the acceptance suite");
    vf->add_option("--workers,-j", verify.workers, "worker threads (RIBBONSPEC_THREADS overrides)")
        ->check(CLI::PositiveNumber);
    vf->add_option("--only", verify.only, "criterion ids")->check(CLI::Range(1, acceptance::Suite::kCount));
    vf->add_flag("--quiet,-q", verify.quiet, "only the pass/fail lines");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*s) return cmd_sample(sample);
        if (*r) return cmd_report(report);
        if (*t) return cmd_theory(theory);
        if (*v) return cmd_volumes(volumes);
        if (*sg) return cmd_stablegraphs(stable);
        if (*vf) return cmd_verify(verify);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

#include "ribbonspec/batch.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "ribbonspec/error.hpp"

namespace ribbonspec {

using json = nlohmann::ordered_json;

BatchConfig BatchConfig::for_genus(int genus, std::uint64_t seed, std::uint64_t trials)
{
    BatchConfig cfg;
    cfg.genus = genus;
    cfg.boundary_total = 12.0 * genus;
    cfg.seed = seed;
    cfg.trials = trials;
    return cfg;
}

void BatchConfig::validate() const
{
    if (genus < 1) throw Error(ErrorKind::InvalidArgument, "genus must be >= 1");
    if (!(boundary_total > 0.0)) throw Error(ErrorKind::InvalidArgument, "boundary length must be positive");
    if (trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be >= 1");
    if (!(b_max > 0.0)) throw Error(ErrorKind::InvalidArgument, "b_max must be positive");
    if (d_max < 1) throw Error(ErrorKind::InvalidArgument, "d_max must be >= 1");
    if (max_substreams < 1) throw Error(ErrorKind::InvalidArgument, "need at least one sub-stream");
}

TrialRecord run_trial(const BatchConfig& cfg, std::uint64_t trial)
{
    SamplerConfig sc;
    sc.genus = cfg.genus;
    sc.boundary_total = cfg.boundary_total;
    sc.seed = cfg.seed;
    sc.trial_index = trial;
    sc.method = cfg.method;
    sc.rejection_budget = cfg.rejection_budget;
    for (std::uint32_t sub = 0;; ++sub) {
        try {
            SampledMap sampled = sample_map(sc, sub);
            const HalfEdgeStructure& graph = sampled.map.graph();
            if (!graph.is_trivalent() || graph.face_count() != 1 || graph.genus() != cfg.genus) {
                throw std::logic_error("sampler produced a map of the wrong type");
            }
            TrialRecord rec;
            rec.trial = trial;
            rec.seed = cfg.seed;
            rec.genus = cfg.genus;
            rec.boundary_total = cfg.boundary_total;
            rec.sigma = graph.sigma();
            rec.alpha = graph.alpha();
            rec.lengths = sampled.map.lengths();
            rec.rejections = sampled.rejections;
            rec.substream = sub;
            rec.spectrum = make_spectrum(sampled.map, cfg.b_max, cfg.d_max);
            return rec;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::RejectionBudgetExceeded || sub + 1 >= cfg.max_substreams) throw;
        }
    }
}

std::vector<TrialRecord> run_trials_serial(const BatchConfig& cfg)
{
    cfg.validate();
    std::vector<TrialRecord> out;
    out.reserve(cfg.trials);
    for (std::uint64_t t = 0; t < cfg.trials; ++t) out.push_back(run_trial(cfg, t));
    return out;
}

std::vector<TrialRecord> run_trials_parallel(const BatchConfig& cfg, int workers)
{
    cfg.validate();
    if (workers < 1) throw Error(ErrorKind::InvalidArgument, "workers must be >= 1");
    std::vector<TrialRecord> out(cfg.trials);
    std::exception_ptr failure;
    const auto n = static_cast<std::int64_t>(cfg.trials);
#pragma omp parallel for schedule(dynamic, 4) num_threads(workers)
    for (std::int64_t t = 0; t < n; ++t) {
        try {
            out[static_cast<std::size_t>(t)] = run_trial(cfg, static_cast<std::uint64_t>(t));
        } catch (...) {
#pragma omp critical(ribbonspec_batch_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

int resolve_workers(int requested)
{
    if (const char* env = std::getenv("RIBBONSPEC_THREADS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 1 || v > 4096) {
            throw Error(ErrorKind::InvalidArgument, std::string("bad RIBBONSPEC_THREADS value: ") + env);
        }
        return static_cast<int>(v);
    }
    if (requested < 1) throw Error(ErrorKind::InvalidArgument, "workers must be >= 1");
    return requested;
}

std::string to_json_line(const TrialRecord& rec)
{
    json cycles = json::array();
    for (const auto& c : rec.spectrum.cycles) cycles.push_back({{"len", c.length}, {"edges", c.edges}});
    json j;
    j["trial"] = rec.trial;
    j["seed"] = rec.seed;
    j["genus"] = rec.genus;
    j["L"] = rec.boundary_total;
    j["sigma"] = rec.sigma;
    j["alpha"] = rec.alpha;
    j["lengths"] = rec.lengths;
    j["rejections"] = rec.rejections;
    j["substream"] = rec.substream;
    j["b_max"] = rec.spectrum.b_max;
    j["d_max"] = rec.spectrum.d_max;
    j["cycles"] = std::move(cycles);
    j["girth"] = rec.spectrum.girth;
    return j.dump();
}

TrialRecord from_json_line(const std::string& line)
{
    try {
        const json j = json::parse(line);
        TrialRecord rec;
        rec.trial = j.at("trial").get<std::uint64_t>();
        rec.seed = j.at("seed").get<std::uint64_t>();
        rec.genus = j.at("genus").get<int>();
        rec.boundary_total = j.at("L").get<double>();
        rec.sigma = j.at("sigma").get<Permutation>();
        rec.alpha = j.at("alpha").get<Permutation>();
        rec.lengths = j.at("lengths").get<std::vector<double>>();
        rec.rejections = j.at("rejections").get<std::uint64_t>();
        rec.substream = j.value("substream", std::uint32_t{0});
        rec.spectrum.b_max = j.at("b_max").get<double>();
        rec.spectrum.d_max = j.at("d_max").get<int>();
        for (const auto& c : j.at("cycles")) {
            rec.spectrum.cycles.push_back({c.at("len").get<double>(), c.at("edges").get<int>()});
        }
        rec.spectrum.girth = j.at("girth").get<double>();
        return rec;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Io, std::string("malformed record: ") + e.what());
    }
}

void write_jsonl(std::ostream& out, std::span<const TrialRecord> records, const BatchConfig* meta)
{
    if (meta != nullptr) {
        json m;
        m["genus"] = meta->genus;
        m["L"] = meta->boundary_total;
        m["seed"] = meta->seed;
        m["trials"] = meta->trials;
        m["b_max"] = meta->b_max;
        m["d_max"] = meta->d_max;
        m["method"] = meta->method == SamplerMethod::Pairing ? "pairing" : "remy";
        out << json{{"meta", m}}.dump() << '\n';
    }
    for (const auto& rec : records) out << to_json_line(rec) << '\n';
    if (!out) throw Error(ErrorKind::Io, "write failed");
}

std::vector<TrialRecord> read_jsonl(std::istream& in)
{
    std::vector<TrialRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("{\"meta\"", 0) == 0) continue;
        out.push_back(from_json_line(line));
    }
    if (in.bad()) throw Error(ErrorKind::Io, "read failed");
    return out;
}

HistogramAccumulator cycle_histogram(std::span<const TrialRecord> records, double lo, double width,
                                     std::size_t bins)
{
    HistogramAccumulator h(lo, width, bins);
    for (const auto& rec : records) {
        for (const auto& c : rec.spectrum.cycles) h.add(c.length);
    }
    h.add_trials(static_cast<std::int64_t>(records.size()));
    return h;
}

HistogramAccumulator cycle_histogram_parallel(std::span<const TrialRecord> records, double lo, double width,
                                              std::size_t bins, int workers)
{
    if (workers < 1) throw Error(ErrorKind::InvalidArgument, "workers must be >= 1");
    std::vector<HistogramAccumulator> partial(static_cast<std::size_t>(workers), HistogramAccumulator(lo, width, bins));
    const std::size_t n = records.size();
#pragma omp parallel num_threads(workers)
    {
        const auto id = static_cast<std::size_t>(omp_get_thread_num());
        const auto threads = static_cast<std::size_t>(omp_get_num_threads());
        const std::size_t begin = n * id / threads;
        const std::size_t end = n * (id + 1) / threads;
        partial[id] = cycle_histogram(records.subspan(begin, end - begin), lo, width, bins);
    }
    HistogramAccumulator total(lo, width, bins);
    for (const auto& p : partial) total.merge(p);
    return total;
}

std::vector<std::vector<std::int64_t>> interval_counts(std::span<const TrialRecord> records,
                                                       std::span<const IntervalSpec> specs)
{
    std::vector<Interval> intervals;
    intervals.reserve(specs.size());
    for (const auto& s : specs) intervals.push_back(s.interval());
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(records.size());
    for (const auto& rec : records) out.push_back(spectrum_counts(rec.spectrum, intervals));
    return out;
}

std::vector<double> sorted_girths(std::span<const TrialRecord> records)
{
    std::vector<double> out;
    out.reserve(records.size());
    for (const auto& rec : records) out.push_back(rec.spectrum.girth);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ribbonspec

#include "ribbonspec/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "ribbonspec/error.hpp"

namespace ribbonspec {

namespace {

nlohmann::ordered_json moment_json(const MomentReport& m)
{
    nlohmann::ordered_json j;
    if (m.specs.size() == 1) {
        j["a"] = m.specs[0].a;
        j["b"] = m.specs[0].b;
        j["r"] = m.specs[0].r;
    } else {
        auto specs = nlohmann::ordered_json::array();
        for (const auto& s : m.specs) specs.push_back({{"a", s.a}, {"b", s.b}, {"r", s.r}});
        j["specs"] = std::move(specs);
    }
    j["empirical"] = m.empirical;
    j["se"] = m.se;
    j["predicted"] = m.predicted;
    j["z"] = m.z;
    return j;
}

}  // namespace

std::string format17(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

SpectrumReport build_report(std::span<const TrialRecord> records, const ReportRequest& request)
{
    if (records.size() < 10) throw Error(ErrorKind::InsufficientSamples, "report needs at least 10 records");
    const int genus = records.front().genus;
    const double boundary = records.front().boundary_total;
    for (const auto& rec : records) {
        if (rec.genus != genus || rec.boundary_total != boundary) {
            throw Error(ErrorKind::InvalidArgument, "records mix genus or boundary length");
        }
    }
    check_disjoint(std::span<const IntervalSpec>(request.intervals));
    SpectrumReport rep;
    rep.genus = genus;
    rep.trials = records.size();
    rep.params = IntensityParams::from_boundary(boundary, genus);
    for (const auto& spec : request.intervals) {
        const std::vector<IntervalSpec> one{spec};
        const auto counts = interval_counts(records, one);
        rep.intervals.push_back(empirical_factorial_moment(counts, one, rep.params));
    }
    for (const auto& group : request.joint) {
        const auto counts = interval_counts(records, group);
        rep.moments.push_back(empirical_factorial_moment(counts, group, rep.params));
    }
    const auto girths = sorted_girths(records);
    const IntensityParams p = rep.params;
    rep.girth_ks = ks_test(girths, [p](double t) { return girth_cdf(t, p); });
    rep.histogram = cycle_histogram(records, request.hist_lo, request.hist_width, request.hist_bins);
    return rep;
}

std::string report_json(const SpectrumReport& report)
{
    nlohmann::ordered_json j;
    j["g"] = report.genus;
    j["trials"] = report.trials;
    j["mu"] = report.params.mu;
    auto intervals = nlohmann::ordered_json::array();
    for (const auto& m : report.intervals) intervals.push_back(moment_json(m));
    j["intervals"] = std::move(intervals);
    if (!report.moments.empty()) {
        auto moments = nlohmann::ordered_json::array();
        for (const auto& m : report.moments) moments.push_back(moment_json(m));
        j["moments"] = std::move(moments);
    }
    j["girth_ks"] = {{"stat", report.girth_ks.statistic}, {"p", report.girth_ks.p_value}};
    return j.dump(2);
}

std::string histogram_csv(const HistogramAccumulator& h)
{
    std::ostringstream out;
    out << "bin_left,bin_right,count,count_per_trial_per_unit\n";
    const double trials = static_cast<double>(h.trials());
    for (std::size_t i = 0; i < h.bins(); ++i) {
        const double density = trials > 0 ? static_cast<double>(h.count(i)) / (trials * h.width()) : 0.0;
        out << format17(h.bin_left(i)) << ',' << format17(h.bin_right(i)) << ',' << h.count(i) << ','
            << format17(density) << '\n';
    }
    return out.str();
}

}  // namespace ribbonspec
